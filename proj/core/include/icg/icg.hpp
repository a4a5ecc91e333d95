#pragma once

#include "icg/arith.hpp"
#include "icg/balancing.hpp"
#include "icg/combinatorics.hpp"
#include "icg/core_math.hpp"
#include "icg/search.hpp"
#include "icg/spectral.hpp"
