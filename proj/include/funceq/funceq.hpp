#pragma once

#include "funceq/coefficients.hpp"
#include "funceq/error.hpp"
#include "funceq/expsums.hpp"
#include "funceq/extension.hpp"
#include "funceq/periodicity.hpp"
#include "funceq/piecewise_linear.hpp"
