#include "doctest.h"

#include "swnh/simulation.hpp"
