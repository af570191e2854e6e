#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "symdec/family.hpp"
#include "symdec/hermitian.hpp"

namespace symdec {

/// The data realizing one symmetric decomposition family: the target T, an
/// orthonormal basis {F_i} of an (N-1)-dimensional operator subspace
/// orthogonal to T, and the derived frame {R_i} with sum R_i = 0,
/// ||R_i|| = 1, <R_i,R_j> = -1/(N-1) and <R_i,T> = 0.
struct ConstructionBasis {
    HermitianMatrix T;
    std::vector<HermitianMatrix> F;  // N-1 operators
    std::vector<HermitianMatrix> R;  // N operators
    std::vector<double> mu;          // -lambda_min(R_i)
    std::vector<double> rho;         // lambda_max(R_i)

    int N() const { return static_cast<int>(R.size()); }
};

/// Canonical Hermitian basis of the d x d self-adjoint operators: real
/// diagonal units first, then symmetric pair matrices (j<k), then the
/// i-weighted antisymmetric pair matrices.
std::vector<HermitianMatrix> canonical_hermitian_basis(int d);

HermitianMatrix random_hermitian(int d, std::mt19937_64& rng);

/// F from the canonical basis (seed empty, deterministic) or from seeded
/// random Hermitian matrices, orthonormalized against T; R, mu, rho derived.
ConstructionBasis build_basis(const HermitianMatrix& T, int N,
                              std::optional<std::uint64_t> seed = std::nullopt);

/// Builds the basis from an explicitly given orthonormal F list (validated).
ConstructionBasis basis_from_F(const HermitianMatrix& T, std::vector<HermitianMatrix> F);

/// E_i = T/N + x R_i; the family is a symmetric decomposition of T with
/// a = t2/N^2 + x^2 and b = t2/N^2 - x^2/(N-1).
SymmetricFamily build_family(const ConstructionBasis& basis, double x);

/// The explicit N x (N-1) coefficient matrix with E_i = T/N + x sum_j V_ij F_j;
/// satisfies V^T V = N/(N-1) I_{N-1}.
std::vector<std::vector<double>> v_matrix(int N);

/// PSD feasibility window for x: x_sufficient = tau/(N max_i mu_i) always
/// guarantees positivity; x_exact is the bisection boundary of
/// g(x) = min_i lambda_min(T/N + x R_i) >= 0.
struct PsdWindow {
    double x_sufficient = 0.0;
    double x_exact = 0.0;
    double t2 = 0.0;
    int N = 0;

    double a_at(double x) const;
};

PsdWindow psd_window(const ConstructionBasis& basis);

double a_from_x(double x, double t2, int N);
double x_from_a(double a, double t2, int N);

}  // namespace symdec
