#pragma once

#include "gr/analytics.hpp"
#include "gr/bmo.hpp"
#include "gr/errors.hpp"
#include "gr/oracle.hpp"
#include "gr/quadrature.hpp"
#include "gr/roots.hpp"
#include "gr/solvers.hpp"
