#include "doctest.h"

#include "swnh/projection.hpp"
