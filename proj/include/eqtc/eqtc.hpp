#pragma once

#include "eqtc/error.hpp"
#include "eqtc/linalg.hpp"
#include "eqtc/rng.hpp"
#include "eqtc/action.hpp"
#include "eqtc/path.hpp"
#include "eqtc/vfield.hpp"
#include "eqtc/planner.hpp"
#include "eqtc/euler.hpp"
#include "eqtc/tc_oracle.hpp"
#include "eqtc/verify.hpp"
#include "eqtc/json_io.hpp"
