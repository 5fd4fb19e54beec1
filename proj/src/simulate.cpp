#include "ltwd/simulate.hpp"

#include "ltwd/baselines.hpp"
#include "ltwd/dynamics.hpp"

namespace ltwd {

TrajectoryRecord simulate(const SimulationConfig& config) {
    switch (config.model) {
        case Model::ThreeWay: return run(config);
        case Model::DeGrootUniform:
        case Model::DeGrootDistance: return degroot_run(config);
        case Model::HkHomogeneous:
        case Model::HkHeterogeneous: return hk_run(config);
    }
    throw ConfigError("model", "unsupported model");
}

}  // namespace ltwd
