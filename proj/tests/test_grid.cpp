#include "doctest.h"

#include "swnh/grid.hpp"
