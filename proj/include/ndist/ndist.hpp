#pragma once

#include "ndist/errors.hpp"
#include "ndist/geometry.hpp"
#include "ndist/numeric.hpp"
#include "ndist/inner_balls.hpp"
#include "ndist/trees.hpp"
#include "ndist/steiner.hpp"
#include "ndist/classic.hpp"
#include "ndist/enclosing_ball.hpp"
#include "ndist/lambda.hpp"
#include "ndist/kinds.hpp"
#include "ndist/random.hpp"
#include "ndist/parallel.hpp"
#include "ndist/simplex.hpp"
#include "ndist/constructions.hpp"
#include "ndist/search.hpp"
#include "ndist/io.hpp"
#include "ndist/reproduce.hpp"
