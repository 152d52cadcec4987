#include "doctest.h"

#include "swnh/kinetic_flux.hpp"
