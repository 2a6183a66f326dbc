#pragma once

#include "lightsout/engine.hpp"
#include "lightsout/errors.hpp"
#include "lightsout/fib.hpp"
#include "lightsout/modular.hpp"
#include "lightsout/recurrence.hpp"
#include "lightsout/solvability.hpp"
