#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tve/bioheat.hpp"
#include "tve/materials.hpp"
#include "tve/mechanics.hpp"
#include "tve/mesh.hpp"

namespace tve {

enum class CouplingMode { Coupled, ThermalOnly, MechanicalOnly };

std::string to_string(CouplingMode mode);

struct OutputSpec {
    double snapshot_interval = 0;     // [s]; <= 0 disables periodic snapshots
    std::vector<int> probe_nodes;     // 0-based
    bool write_det_f = false;
    bool write_stress = false;
    double ablation_threshold = 60.0; // [degC]; <= 0 disables the report
};

struct SimulationConfig {
    double dt = 0;          // [s]
    double duration = 0;    // [s]
    CouplingMode mode = CouplingMode::Coupled;
    bool expansion_enabled = false;
    bool temperature_dependent = false;
    double damping_gamma = 0;          // [1/s]
    double hourglass_stiffness = 0.1;  // dimensionless
    bool allow_unstable_dt = false;
    int workers = 0;                   // 0 = all available
    OutputSpec output;
};

struct SimulationState {
    ThermalState thermal;
    MechState mech;
    long step = 0;
};

/// Field snapshot handed to output sinks; arrays are copies, safe to retain.
struct Snapshot {
    double time = 0;
    long step = 0;
    std::vector<double> temperatures;       // per node
    std::vector<double> displacements;      // 3 per node
    std::vector<double> det_f;              // per element, optional
    std::vector<double> max_principal_stress; // per element (PK2), optional
};

struct RunSummary {
    long steps = 0;
    double final_time = 0;
    double max_temperature = 0;           // over nodes at the final step
    Eigen::Vector3d min_displacement = Eigen::Vector3d::Zero();
    Eigen::Vector3d max_displacement = Eigen::Vector3d::Zero();
    double ablation_volume = 0;           // [m^3] at the final step (0 if disabled)
    double median_step_seconds = 0;
    double iqr_step_seconds = 0;
};

using SnapshotSink = std::function<void(const Snapshot&)>;

/// Coupled explicit time-stepping engine. Per step, in fixed staggered order:
///   1. F per element from the current displacements
///   2. element thermal loads (current F, T) and nodal temperature update
///   3. F_ther per element from the new element-mean temperature (if enabled)
///   4. element internal forces (current F, new F_ther, viscous update,
///      hourglass for H8)
///   5. nodal displacement update
/// ThermalOnly runs 1-2 with displacements frozen; MechanicalOnly runs 1,4,5
/// with F_ther = I.
///
/// Element-phase work writes only element-owned arrays and node-phase work
/// only node-owned arrays; nodal gathers follow the precomputed adjacency
/// order, so results are bit-deterministic at any worker count.
class Engine {
public:
    Engine(const Mesh& mesh, const PrecomputedMesh& pre, const MaterialModel& material,
           const MechBCs& mech_bcs, const ThermalBCs& thermal_bcs,
           const HeatSourceSet& sources, const SimulationConfig& config);

    /// Advance one step. Throws InstabilityError on non-finite values.
    void step();

    /// Run duration/dt steps, invoking the sink on the output schedule.
    RunSummary run(const SnapshotSink& sink = nullptr);

    SimulationState& state() { return state_; }
    const SimulationState& state() const { return state_; }
    double time() const { return state_.thermal.time; }

    Snapshot make_snapshot() const;

    /// Internal nodal force vector assembled in the last mechanics phase (3 per
    /// node); used by the verification oracles.
    const std::vector<double>& last_internal_forces() const { return assembled_force_; }
    const std::vector<Eigen::Matrix3d>& element_stresses() const { return stress_cache_; }
    const std::vector<Eigen::Matrix3d>& deformation_gradients() const { return f_cache_; }

    /// Kinetic plus hyperelastic strain energy of the current state [J].
    double total_energy() const;

    void save_checkpoint(std::ostream& out) const;
    void load_checkpoint(std::istream& in);

private:
    template <int NN> void step_impl();
    template <int NN> void thermal_element_phase(bool compute_f);
    void thermal_node_phase();
    template <int NN> void mechanics_element_phase(bool compute_f);
    void mechanics_node_phase();
    void refresh_nodal_sources();
    void check_finite(std::span<const double> values, const char* field) const;

    const Mesh& mesh_;
    const PrecomputedMesh& pre_;
    const MaterialModel& material_;
    MechBCs mech_bcs_;
    ThermalBCs thermal_bcs_;
    HeatSourceSet sources_;
    SimulationConfig config_;

    SimulationState state_;
    std::vector<Eigen::Matrix3d> f_cache_;       // per element
    std::vector<Eigen::Matrix3d> f_ther_cache_;  // per element
    std::vector<Eigen::Matrix3d> stress_cache_;  // per element, S_tilde
    std::vector<double> element_thermal_loads_;  // nn per element
    std::vector<double> element_forces_;         // 3*nn per element
    std::vector<double> assembled_load_;         // per node [W]
    std::vector<double> assembled_force_;        // 3 per node [N]
    std::vector<double> nodal_source_;           // per node [W]
    std::vector<double> external_force_total_;   // external + body force, 3 per node
    std::vector<char> source_active_;            // activity mask per region
    double fixed_property_temperature_ = 37.0;
    int workers_ = 1;
};

struct BenchResult {
    int elements = 0;
    int nodes = 0;
    ElementKind kind = ElementKind::T4;
    // Median / IQR of per-step wall time [s] per simulation mode.
    double ther_mech_ti = 0, ther_mech_ti_iqr = 0;
    double ther_mech_expan_ti = 0, ther_mech_expan_ti_iqr = 0;
    double ther_mech_expan_td = 0, ther_mech_expan_td_iqr = 0;
};

/// Measure per-step wall time on generated structured cube meshes for the
/// three coupled modes (temperature-independent, + expansion, + temperature-
/// dependent properties). `cells_ladder` lists cube subdivisions per side.
std::vector<BenchResult> run_bench(const std::vector<int>& cells_ladder, ElementKind kind,
                                   int steps_per_measurement, int workers);

/// Least-squares slope of log(median step time) vs log(element count).
double bench_scaling_slope(const std::vector<BenchResult>& results);

} // namespace tve
