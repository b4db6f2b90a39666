#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "tve/materials.hpp"
#include "tve/mesh.hpp"

namespace tve {

struct ThermalState {
    std::vector<double> temperatures; // per node [degC]
    double time = 0;                  // [s]
};

/// A regional heat source over an element set with an on/off window.
struct SourceRegion {
    std::vector<int> elements;
    double q_r = 0;     // [W/m^3]
    double t_start = 0; // [s]
    double t_end = std::numeric_limits<double>::infinity();

    bool active_at(double t) const { return t >= t_start && t < t_end; }
};

struct HeatSourceSet {
    std::vector<SourceRegion> regional;
};

struct ThermalBCs {
    std::vector<std::pair<int, double>> fixed; // (node, temperature)
    double initial_temperature = 37.0;
};

/// Element conduction load on the deformed configuration (one-point kernel):
///   f_e = geom det(F) B^T D B T_e,   B = F^-T G
/// with G the reference shape gradients (3 x NN) and geom = 0V (T4) or
/// 8 det(J0) (H8). Contributions sum to zero over the element's nodes.
template <int NN>
Eigen::Matrix<double, NN, 1>
element_thermal_load(const Eigen::Matrix3d& F,
                     const Eigen::Matrix<double, 3, NN>& grad,
                     const Eigen::Matrix3d& conductivity,
                     const Eigen::Matrix<double, NN, 1>& element_temperatures,
                     double geometry_factor);

/// Explicit nodal temperature update. `assembled_loads` is the per-node sum of
/// element conduction loads (subtracted here, so heat flows hot -> cold):
///   T+ = T + dt/C_diag (-f - w_b c_b V (T - T_a) + Q_m V + Q_r)
/// C_diag = rho c(T_eval) V with T_eval the node's current temperature when
/// `temperature_dependent`, otherwise `fixed_property_temperature`.
/// Fixed-temperature nodes are overwritten after the update.
void step_temperature(ThermalState& state,
                      std::span<const double> assembled_loads,
                      std::span<const double> nodal_source_power, // Q_r lumped to nodes [W]
                      const ThermalProps& props,
                      std::span<const double> node_volume,
                      const ThermalBCs& bcs,
                      double dt,
                      bool temperature_dependent,
                      double fixed_property_temperature);

/// Lump the active regional sources to nodes by element volume shares [W].
void accumulate_nodal_sources(std::vector<double>& nodal_power,
                              const HeatSourceSet& sources,
                              const PrecomputedMesh& pre,
                              double time);

extern template Eigen::Matrix<double, 4, 1>
element_thermal_load<4>(const Eigen::Matrix3d&, const Eigen::Matrix<double, 3, 4>&,
                        const Eigen::Matrix3d&, const Eigen::Matrix<double, 4, 1>&, double);
extern template Eigen::Matrix<double, 8, 1>
element_thermal_load<8>(const Eigen::Matrix3d&, const Eigen::Matrix<double, 3, 8>&,
                        const Eigen::Matrix3d&, const Eigen::Matrix<double, 8, 1>&, double);

} // namespace tve
