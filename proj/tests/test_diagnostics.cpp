#include "doctest.h"

#include "swnh/diagnostics.hpp"
