#pragma once

// Umbrella header for the tritmap library: exact arithmetic on eventually
// periodic ternary expansions, digit-substitution transducers, and the
// analysis toolkit built on them.

#include "tritmap/analysis.hpp"
#include "tritmap/digit_map.hpp"
#include "tritmap/random_rep.hpp"
#include "tritmap/rational.hpp"
#include "tritmap/ternary_rep.hpp"
#include "tritmap/trit.hpp"
