#include "doctest.h"

#include "swnh/config.hpp"
