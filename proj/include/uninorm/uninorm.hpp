#pragma once

#include "uninorm/errors.hpp"
#include "uninorm/lattice.hpp"
#include "uninorm/unary_op.hpp"
#include "uninorm/binary_op.hpp"
#include "uninorm/construct.hpp"
#include "uninorm/search.hpp"
#include "uninorm/io.hpp"
#include "uninorm/fixtures.hpp"
