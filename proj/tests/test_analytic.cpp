#include "doctest.h"

#include "swnh/analytic.hpp"
