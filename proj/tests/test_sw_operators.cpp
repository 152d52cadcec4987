#include "doctest.h"

#include "swnh/sw_operators.hpp"
