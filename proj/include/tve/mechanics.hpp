#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "tve/materials.hpp"
#include "tve/mesh.hpp"

namespace tve {

/// Mechanical state: displacements at t and t - dt plus the per-element
/// viscoelastic history (one symmetric tensor per Prony term per element).
struct MechState {
    std::vector<double> disp;      // 3 per node [m]
    std::vector<double> disp_prev; // 3 per node [m]
    std::vector<Eigen::Matrix3d> viscous; // num_elements * prony_terms, zero at t = 0

    static MechState zero(int num_nodes, int num_elements, int prony_terms);
};

struct PrescribedDisplacement {
    std::vector<int> nodes;
    int component = 0;   // 0,1,2
    double target = 0;   // [m]
    double ramp_time = 0; // [s]; value ramps linearly over [0, ramp_time]

    double value_at(double t) const {
        if (ramp_time <= 0) return target;
        return target * std::min(t / ramp_time, 1.0);
    }
};

struct MechBCs {
    std::vector<int> fixed_nodes;                      // zero displacement, all components
    std::vector<PrescribedDisplacement> prescribed;
    std::vector<double> external_force;                // 3 per node [N]; may be empty
    Eigen::Vector3d body_force = Eigen::Vector3d::Zero(); // [N/m^3]

    // Optional per-node displacement trajectory (used by the verification
    // oracles for rigid motions that a component ramp cannot express).
    // Returning a value pins the node to it at time t.
    std::function<std::optional<Eigen::Vector3d>(int node, double t)> motion_override;
};

/// Deformation gradient from element nodal displacements:
///   F = I + U G^T, U the 3 x NN matrix of nodal displacement columns.
template <int NN>
Eigen::Matrix3d deformation_gradient(const Eigen::Matrix<double, 3, NN>& u_e,
                                     const Eigen::Matrix<double, 3, NN>& grad);

/// Thermo-visco-elastic internal nodal forces of one element:
///   S = total_pk2_stress(F, F_ther); S_tilde from the Prony recurrence
///   (history updated in place); f = geom F S_tilde G.
/// Column a of the result is the force contribution on local node a [N].
template <int NN>
Eigen::Matrix<double, 3, NN>
element_internal_force(const Eigen::Matrix3d& F,
                       const Eigen::Matrix<double, 3, NN>& grad,
                       const HyperelasticParams& params,
                       const Eigen::Vector3d* fiber,
                       const Eigen::Matrix3d& F_ther,
                       std::span<Eigen::Matrix3d> viscous_history,
                       double dt,
                       const PronySeries& prony,
                       double geometry_factor);

/// Hourglass stabilization for one-point H8: projection onto the four
/// reference hourglass base vectors with stiffness kappa_hg * mu * 0V^(1/3).
/// `gamma` holds the 4 normalized base vectors (rows) for this element; the
/// force vanishes for any displacement field linear in the reference coords.
Eigen::Matrix<double, 3, 8>
hourglass_force(const Eigen::Matrix<double, 3, 8>& u_e,
                const Eigen::Matrix<double, 4, 8>& gamma,
                double stiffness);

/// Build the normalized hourglass base vectors for one H8 element from its
/// reference coordinates and centroid shape gradients.
Eigen::Matrix<double, 4, 8>
hourglass_basis_for_element(const Eigen::Matrix<double, 3, 8>& coords,
                            const Eigen::Matrix<double, 3, 8>& grad);

/// Central-difference displacement update with mass-proportional damping
/// D = gamma M:
///   u+ = [R - f + (2M/dt^2) u + (D/(2dt) - M/dt^2) u-] / (D/(2dt) + M/dt^2)
/// Fixed and prescribed DOFs are overwritten afterwards (evaluated at t+dt),
/// then disp_prev <- disp <- u+.
void step_displacement(MechState& state,
                       std::span<const double> assembled_forces,
                       const MechBCs& bcs,
                       std::span<const double> lumped_mass,
                       double damping_gamma,
                       double dt,
                       double next_time);

extern template Eigen::Matrix3d deformation_gradient<4>(const Eigen::Matrix<double, 3, 4>&,
                                                        const Eigen::Matrix<double, 3, 4>&);
extern template Eigen::Matrix3d deformation_gradient<8>(const Eigen::Matrix<double, 3, 8>&,
                                                        const Eigen::Matrix<double, 3, 8>&);
extern template Eigen::Matrix<double, 3, 4>
element_internal_force<4>(const Eigen::Matrix3d&, const Eigen::Matrix<double, 3, 4>&,
                          const HyperelasticParams&, const Eigen::Vector3d*, const Eigen::Matrix3d&,
                          std::span<Eigen::Matrix3d>, double, const PronySeries&, double);
extern template Eigen::Matrix<double, 3, 8>
element_internal_force<8>(const Eigen::Matrix3d&, const Eigen::Matrix<double, 3, 8>&,
                          const HyperelasticParams&, const Eigen::Vector3d*, const Eigen::Matrix3d&,
                          std::span<Eigen::Matrix3d>, double, const PronySeries&, double);

} // namespace tve
