#include "doctest.h"

#include "swnh/hyperbolic.hpp"
