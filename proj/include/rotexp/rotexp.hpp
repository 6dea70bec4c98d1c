#pragma once

// Closed-form exponential and logarithm maps for rotations in dimensions 3, 4 and 5.

#include "smallmat.hpp"
#include "scalar.hpp"
#include "wedge.hpp"
#include "so3.hpp"
#include "decomp.hpp"
#include "expmap.hpp"
#include "logmap.hpp"
#include "oracle.hpp"
