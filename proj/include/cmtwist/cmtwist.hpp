#pragma once

// Umbrella header.
#include "cmtwist/error.hpp"
#include "cmtwist/scalars/rational.hpp"
#include "cmtwist/scalars/prime_field.hpp"
#include "cmtwist/scalars/rational_function.hpp"
#include "cmtwist/scalars/dual.hpp"
#include "cmtwist/poly/polynomial.hpp"
#include "cmtwist/poly/ring_map.hpp"
#include "cmtwist/linalg.hpp"
#include "cmtwist/groebner.hpp"
#include "cmtwist/ideal.hpp"
#include "cmtwist/hilbert.hpp"
#include "cmtwist/cmpoints.hpp"
#include "cmtwist/families.hpp"
#include "cmtwist/deform.hpp"
#include "cmtwist/parser.hpp"
#include "cmtwist/report.hpp"
