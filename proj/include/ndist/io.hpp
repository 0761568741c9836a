#pragma once

#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ndist/errors.hpp"
#include "ndist/geometry.hpp"

namespace ndist {

/// Contents of a point file: the points and, optionally, a replacement point z.
struct PointFile {
  std::vector<Point> points;
  std::optional<Point> z;
};

/// Shortest-independent fixed form: 17 significant digits, re-parses exactly.
inline std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline std::optional<double> parse_real(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

}  // namespace detail

/// CSV point file: one point per row, one column per coordinate, optional
/// header row. A header whose first column is `role` switches to tagged rows
/// where the first field is `x` (a point) or `z` (the replacement point).
/// Blank lines and lines starting with '#' are ignored.
inline PointFile parse_points_csv(std::string_view text) {
  PointFile f;
  bool first = true, tagged = false;
  std::size_t width = 0, line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const std::string_view raw = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const std::string_view line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto fields = detail::split_csv(line);
    const std::string where = "line " + std::to_string(line_no);

    if (first) {
      first = false;
      tagged = fields.front() == "role";
      bool numeric = true;
      for (auto fld : fields) numeric = numeric && detail::parse_real(fld).has_value();
      if (!numeric || tagged) {
        width = fields.size();
        continue;  // header
      }
    }
    if (width == 0) width = fields.size();
    if (fields.size() != width) {
      throw UsageError(where + ": expected " + std::to_string(width) + " fields, got " +
                       std::to_string(fields.size()));
    }
    std::string_view role = "x";
    if (tagged) {
      role = fields.front();
      fields.erase(fields.begin());
      if (role != "x" && role != "z") throw UsageError(where + ": role must be x or z");
    }
    std::vector<double> coords;
    for (auto fld : fields) {
      const auto v = detail::parse_real(fld);
      if (!v) throw UsageError(where + ": not a number: '" + std::string(fld) + "'");
      coords.push_back(*v);
    }
    Point p(std::move(coords));
    if (role == "z") {
      if (f.z) throw UsageError(where + ": more than one z row");
      f.z = std::move(p);
    } else {
      f.points.push_back(std::move(p));
    }
  }
  return f;
}

/// JSON point file: {"q": int, "points": [[...], ...], "z": [...]} with z optional.
inline PointFile parse_points_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }
  auto to_point = [](const nlohmann::json& a) {
    if (!a.is_array()) throw UsageError("a point must be a JSON array of numbers");
    std::vector<double> c;
    for (const auto& v : a) {
      if (!v.is_number()) throw UsageError("a point must be a JSON array of numbers");
      c.push_back(v.get<double>());
    }
    return Point(std::move(c));
  };
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array()) {
    throw UsageError("JSON point file needs a \"points\" array");
  }
  PointFile f;
  for (const auto& p : j["points"]) f.points.push_back(to_point(p));
  if (j.contains("z") && !j["z"].is_null()) f.z = to_point(j["z"]);
  if (j.contains("q")) {
    if (!j["q"].is_number_integer()) throw UsageError("\"q\" must be an integer");
    const auto q = j["q"].get<long long>();
    for (const auto& p : f.points) {
      if (static_cast<long long>(p.dim()) != q) throw UsageError("point dimension differs from q");
    }
    if (f.z && static_cast<long long>(f.z->dim()) != q) throw UsageError("z dimension differs from q");
  }
  return f;
}

inline PointFile parse_points(std::string_view text) {
  const auto t = detail::trim(text);
  if (!t.empty() && t.front() == '{') return parse_points_json(text);
  return parse_points_csv(text);
}

inline PointFile read_points_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_points(ss.str());
}

inline std::string write_points_csv(const PointFile& f) {
  std::string out;
  const std::size_t q = f.points.empty() ? 0 : f.points.front().dim();
  const bool tagged = f.z.has_value();
  if (tagged) out += "role";
  for (std::size_t k = 0; k < q; ++k) {
    if (tagged || k > 0) out += ',';
    out += "x" + std::to_string(k);
  }
  out += '\n';
  auto row = [&](const Point& p, const char* role) {
    if (tagged) out += role;
    for (std::size_t k = 0; k < p.dim(); ++k) {
      if (tagged || k > 0) out += ',';
      out += format_real(p[k]);
    }
    out += '\n';
  };
  for (const auto& p : f.points) row(p, "x");
  if (f.z) row(*f.z, "z");
  return out;
}

inline nlohmann::json to_json(const Point& p) {
  return nlohmann::json(std::vector<double>(p.coords().begin(), p.coords().end()));
}

inline nlohmann::json to_json(const PointFile& f) {
  nlohmann::json j;
  j["q"] = f.points.empty() ? 0 : f.points.front().dim();
  j["points"] = nlohmann::json::array();
  for (const auto& p : f.points) j["points"].push_back(to_json(p));
  if (f.z) j["z"] = to_json(*f.z);
  return j;
}

}  // namespace ndist
