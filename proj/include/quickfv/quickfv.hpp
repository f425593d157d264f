/// @file quickfv.hpp
/// @brief Umbrella header.
#pragma once

#include "quickfv/core.hpp"
#include "quickfv/experiment.hpp"
#include "quickfv/metrics.hpp"
#include "quickfv/numerical_flux.hpp"
#include "quickfv/problems.hpp"
#include "quickfv/reconstruction.hpp"
#include "quickfv/residual.hpp"
#include "quickfv/steady_solver.hpp"
#include "quickfv/time_march.hpp"
#include "quickfv/tridiagonal.hpp"
