#pragma once

#include "hodgeopt/complex_extension.hpp"
#include "hodgeopt/direction_solver.hpp"
#include "hodgeopt/errors.hpp"
#include "hodgeopt/kform.hpp"
#include "hodgeopt/multi_index.hpp"
#include "hodgeopt/problem.hpp"
#include "hodgeopt/projection_oracle.hpp"
