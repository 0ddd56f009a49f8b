#pragma once

// Everything: scalars, data, U^-, modules, crystals, global bases, checks, I/O.

#include "checks.hpp"
#include "crystal.hpp"
#include "crystal_checks.hpp"
#include "global.hpp"
#include "io.hpp"
#include "t1.hpp"
