#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "symdec/family.hpp"
#include "symdec/hermitian.hpp"

namespace symdec {

/// Closed-form bounds on the symmetry parameter a of a decomposition of T
/// into N parts. Fields that do not apply to the given inputs stay empty:
/// the projection bound needs T^2 = T, the PSD bound and phi need T positive
/// definite, the condition-number bound needs a family of strictly positive
/// members.
struct BoundsReport {
    double a_lower = 0.0;           // t2/N^2
    double a_upper_positive = 0.0;  // t2/N
    std::optional<double> a_upper_projection;  // t2^2/N^2
    std::optional<double> a_upper_condition;   // M * t2/N^2
    std::optional<double> a_upper_psd;         // t2/N^2 + x_upper_psd^2
    std::optional<double> x_upper_psd;         // ||T||_inf / (N phi)
    std::optional<double> phi;
    double t2 = 0.0;
    int N = 0;
};

BoundsReport a_bounds(const HermitianMatrix& T, int N, const SymmetricFamily* family = nullptr,
                      double tol = 1e-8);

/// phi(b) = [(beta/b_d - 1)^2 + d - 1]^{-1/2} with beta = sum b_i and b_d the
/// smallest entry; requires every b_i > 0.
double phi_closed_form(const std::vector<double>& b);
double phi_closed_form(const Spectrum& s);

struct PhiOracleResult {
    double value = 0.0;        // lambda_max of the witness, computed numerically
    HermitianMatrix witness;   // unit-HS-norm, self-adjoint, orthogonal to diag(b)
    int mc_violations = 0;     // samples with lambda_max < value - 1e-9
    double mc_min_lambda_max = 0.0;
};

/// Independent estimate of the optimum min lambda_max(A) over unit-norm
/// self-adjoint A orthogonal to diag(b). Builds the two-valued boundary
/// spectrum (s,...,s,-r), rotates it along a Givens path until the trace
/// against diag(b) crosses zero, and confirms optimality on `trials` random
/// feasible samples.
PhiOracleResult phi_oracle(const std::vector<double>& b, int trials = 1000,
                           std::uint64_t seed = 20240229u);

}  // namespace symdec
