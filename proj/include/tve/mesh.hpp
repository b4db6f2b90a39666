#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "tve/errors.hpp"

namespace tve {

enum class ElementKind { T4, H8 };

inline int nodes_per_element(ElementKind kind) { return kind == ElementKind::T4 ? 4 : 8; }
std::string to_string(ElementKind kind);

/// Unstructured mesh in the reference configuration. A mesh holds a single
/// element kind; node/element indices are 0-based internally (1-based in files).
struct Mesh {
    std::vector<Eigen::Vector3d> nodes;                    // reference coordinates [m]
    ElementKind kind = ElementKind::T4;
    std::vector<std::array<int, 8>> elements;              // first nodes_per_element() entries used
    std::map<std::string, std::vector<int>> node_sets;
    std::map<std::string, std::vector<int>> element_sets;
    std::vector<Eigen::Vector3d> fiber_dirs;               // empty, or one unit vector per element
    std::vector<std::array<Eigen::Vector3d, 2>> expansion_axes; // empty, or {m, n} per element

    int node_count() const { return static_cast<int>(nodes.size()); }
    int element_count() const { return static_cast<int>(elements.size()); }
    int nodes_per_elem() const { return nodes_per_element(kind); }

    const std::vector<int>& node_set(const std::string& name) const;
    const std::vector<int>& element_set(const std::string& name) const;
};

/// Reference-configuration quantities computed once and shared by all kernels.
///
/// shape_gradients stores, per element, the 3 x nn matrix of shape-function
/// spatial derivatives at the reference configuration (column a = grad of
/// shape function a). For H8 the gradients are evaluated at the element
/// centroid (one-point quadrature), and ref_volume equals 8*det(J0).
struct PrecomputedMesh {
    ElementKind kind = ElementKind::T4;
    int num_nodes = 0;
    int num_elements = 0;

    std::vector<double> shape_gradients;   // 3*nn per element, column-major [1/m]
    std::vector<double> ref_volume;        // per element [m^3]
    std::vector<double> det_jacobian;      // per element, H8 only [m^3]
    std::vector<double> lumped_mass;       // per node [kg]
    std::vector<double> lumped_heat_capacity_ref; // per node, at reference specific heat [J/degC]
    std::vector<double> node_volume;       // per node [m^3], equal-split lumping
    std::vector<double> hourglass_basis;   // H8 only: 4 normalized gamma vectors of 8 per element

    // Node -> (element, local node) adjacency in CSR form; accumulation in this
    // fixed order makes nodal gathers deterministic at any worker count.
    std::vector<int> adjacency_offsets;    // size num_nodes + 1
    std::vector<std::pair<int, int>> adjacency;

    int nodes_per_elem() const { return nodes_per_element(kind); }

    Eigen::Map<const Eigen::Matrix<double, 3, Eigen::Dynamic>> gradients(int e) const {
        const int nn = nodes_per_elem();
        return {shape_gradients.data() + static_cast<size_t>(e) * 3 * nn, 3, nn};
    }
    /// Element volume factor in the kernel integrals: 0V for T4, 8*det(J0) for H8.
    double geometry_factor(int e) const { return ref_volume[e]; }
};

/// Parse and validate a mesh file (see README for the format). Throws
/// ParseError with a line number on malformed input, ValidationError on
/// inverted elements, out-of-range indices or non-unit direction vectors.
Mesh load_mesh(std::string_view text);

/// Convenience wrapper reading from disk.
Mesh load_mesh_file(const std::string& path);

/// Precompute all reference-configuration arrays. Throws ValidationError on
/// degenerate (zero or negative volume) elements.
PrecomputedMesh precompute(const Mesh& mesh, double density, double ref_specific_heat);

struct MaterialModel; // materials.hpp

struct CriticalTimestep {
    double thermal = 0;    // [s]
    double mechanical = 0; // [s]
};

/// Conservative stable-step estimates with a 0.9 safety factor:
///   mechanical: min_e(L_e / c_d), c_d = sqrt((kappa + 4 mu/3)/rho)
///   thermal:    min_e(rho c L_e^2 / (2 k_max d)), d = 3
/// with L_e the minimum element edge length, c the smallest tabulated specific
/// heat and k_max the largest conductivity eigenvalue over the table.
CriticalTimestep critical_timestep(const Mesh& mesh, const MaterialModel& material);

/// Minimum edge length of element e.
double min_edge_length(const Mesh& mesh, int e);

} // namespace tve
