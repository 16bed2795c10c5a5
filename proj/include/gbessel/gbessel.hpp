#pragma once

#include "gbessel/analytic.hpp"
#include "gbessel/disk_checks.hpp"
#include "gbessel/errors.hpp"
#include "gbessel/figure.hpp"
#include "gbessel/golden_section.hpp"
#include "gbessel/json_io.hpp"
#include "gbessel/power_series.hpp"
#include "gbessel/special_fn.hpp"
#include "gbessel/theorems.hpp"
#include "gbessel/winding.hpp"
