#pragma once

#include "ltwd/config.hpp"
#include "ltwd/trajectory.hpp"

namespace ltwd {

// Dispatches on config.model.
TrajectoryRecord simulate(const SimulationConfig& config);

}  // namespace ltwd
