#pragma once

// (a,b)-parking functions: membership, enumeration, exact counting and the
// decomposition by positions of the 1s.

#include "core.hpp"
#include "counting.hpp"
#include "enumeration.hpp"
#include "types.hpp"
