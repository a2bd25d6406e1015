#pragma once

#include "antiflex/algebra.hpp"
#include "antiflex/bialgebra.hpp"
#include "antiflex/bimodule.hpp"
#include "antiflex/check_report.hpp"
#include "antiflex/matched.hpp"
#include "antiflex/multilinear.hpp"
#include "antiflex/operators.hpp"
#include "antiflex/rational.hpp"
#include "antiflex/yangbaxter.hpp"
