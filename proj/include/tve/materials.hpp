#pragma once

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "tve/errors.hpp"

namespace tve {

/// Neo-Hookean parameters, optionally transversely isotropic:
///   Psi = mu/2 (I1bar - 3) + eta_a/2 (I4bar - 1)^2 + kappa/2 (J - 1)^2
struct HyperelasticParams {
    double mu = 0;     // shear modulus [Pa]
    double kappa = 0;  // bulk modulus [Pa]
    double eta_a = 0;  // anisotropy coefficient [Pa], 0 for isotropic
};

struct PronyTerm {
    double phi = 0; // dimensionless weight
    double tau = 0; // relaxation time [s]
};

/// Generalized Maxwell relaxation, normalized so phi_inf + sum(phi_i) = 1.
struct PronySeries {
    std::vector<PronyTerm> terms;
    double phi_inf = 1.0;

    bool empty() const { return terms.empty(); }

    /// Derive phi_inf from the terms (phi_inf = 1 - sum phi_i). Throws
    /// ValidationError if the weights are not all positive or sum to >= 1.
    static PronySeries from_terms(std::vector<PronyTerm> terms);
};

/// Piecewise-linear property table over temperature, clamped outside the range.
struct ScalarTable {
    std::vector<std::pair<double, double>> entries; // (T degC, value), sorted by T

    ScalarTable() = default;
    explicit ScalarTable(double constant) : entries{{0.0, constant}} {}
    ScalarTable(std::initializer_list<std::pair<double, double>> init) : entries(init) {}

    double at(double temperature) const;
    double min_value() const;
    double max_value() const;
};

/// Conductivity table; each entry is a symmetric positive-definite 3x3 tensor
/// expressed in the reference material frame (scalar k stored as k*I).
struct ConductivityTable {
    struct Entry {
        double temperature = 0;
        Eigen::Matrix3d tensor = Eigen::Matrix3d::Zero();
    };
    std::vector<Entry> entries;

    ConductivityTable() = default;
    explicit ConductivityTable(double k) { entries.push_back({0.0, k * Eigen::Matrix3d::Identity()}); }

    Eigen::Matrix3d at(double temperature) const;
    double max_eigenvalue() const;
};

struct ThermalProps {
    double density = 0;            // [kg/m^3]
    ScalarTable specific_heat;     // [J/(kg degC)]
    ConductivityTable conductivity;// [W/(m degC)]
    double perfusion_rate = 0;     // w_b [kg/(m^3 s)]
    double blood_specific_heat = 0;// c_b [J/(kg K)]
    double arterial_temperature = 37.0; // T_a [degC]
    double metabolic_rate = 0;     // Q_m [W/m^3]
};

enum class ExpansionKind { Isotropic, TransverselyIsotropic, Orthotropic };

/// Thermal-expansion specification. Stretch per direction: lambda = 1 + alpha (T - T_ref).
struct ExpansionSpec {
    ExpansionKind kind = ExpansionKind::Isotropic;
    double alpha_i = 0;  // [1/degC]; the only coefficient for isotropic expansion
    double alpha_m = 0;  // along axis m (transversely isotropic, orthotropic)
    double alpha_n = 0;  // along axis n (orthotropic)
    double reference_temperature = 37.0; // [degC]
};

/// Aggregate material definition as parsed from a config file.
struct MaterialModel {
    HyperelasticParams hyperelastic;
    PronySeries prony;                    // empty terms => purely hyperelastic
    ThermalProps thermal;
    std::optional<ExpansionSpec> expansion;
    std::optional<Eigen::Vector3d> fiber; // global default fiber (mesh fibers override)
    Eigen::Vector3d axis_m = Eigen::Vector3d::UnitX();
    Eigen::Vector3d axis_n = Eigen::Vector3d::UnitY();
};

/// Strain energy density Psi(C) [Pa]. `fiber` is required iff eta_a > 0.
/// Throws ValidationError for non-SPD C.
double strain_energy(const Eigen::Matrix3d& C, const HyperelasticParams& params,
                     const Eigen::Vector3d* fiber = nullptr);

/// Second Piola-Kirchhoff stress S = 2 dPsi/dC [Pa]; symmetric, zero at C = I.
Eigen::Matrix3d pk2_stress(const Eigen::Matrix3d& C, const HyperelasticParams& params,
                           const Eigen::Vector3d* fiber = nullptr);

/// Thermal deformation gradient:
///   isotropic              lambda_i I
///   transversely isotropic lambda_i I + (lambda_m - lambda_i) m (x) m
///   orthotropic            ... + (lambda_n - lambda_i) n (x) n
/// Throws ValidationError when the required axes are not orthonormal (1e-6).
Eigen::Matrix3d thermal_deformation_gradient(double temperature, const ExpansionSpec& spec,
                                             const Eigen::Vector3d& m, const Eigen::Vector3d& n);

/// Total stress pulled back to the reference configuration:
///   F_elas = F F_ther^-1,  S_total = det(F_ther) F_ther^-1 S(C_elas) F_ther^-T
Eigen::Matrix3d total_pk2_stress(const Eigen::Matrix3d& F_total, const Eigen::Matrix3d& F_ther,
                                 const HyperelasticParams& params,
                                 const Eigen::Vector3d* fiber = nullptr);

/// One step of the viscoelastic stress recurrence:
///   theta_i <- dt phi_i/(dt + tau_i) S + tau_i/(dt + tau_i) theta_i
///   returns S_tilde = S - sum theta_i
/// `history` holds one tensor per Prony term and is updated in place.
Eigen::Matrix3d prony_update(const Eigen::Matrix3d& S, std::span<Eigen::Matrix3d> history,
                             double dt, const PronySeries& prony);

/// Relaxation function phi(t) = phi_inf + sum phi_i exp(-t/tau_i); phi(0) = 1.
double relaxation_function(double t, const PronySeries& prony);

/// Linear interpolation in a sorted table, clamped to the end values.
double interp_property(const ScalarTable& table, double temperature);

} // namespace tve
