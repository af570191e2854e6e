#pragma once

#include <optional>

#include "symdec/family.hpp"
#include "symdec/hermitian.hpp"

namespace symdec {

/// Symmetry parameters of the dual and normalized-dual families derived from
/// (a, b, N) and, for the hatted values, t2 = Tr[T^2]. x_hat is present only
/// when a > t2/N^2, i.e. when the family has a construction parameter x > 0.
struct DualParameters {
    double a_tilde = 0.0;
    double b_tilde = 0.0;
    double a_hat = 0.0;
    double b_hat = 0.0;
    std::optional<double> x_hat;
};

DualParameters dual_parameters(double a, double b, int N, double t2);

/// Biorthogonal family E~ with <E_i, E~_j> = delta_ij, computed from the
/// fitted (a_fit, b_fit) through the closed-form Gram inverse. Requires a
/// non-degenerate symmetric input: a - b > tol and a + b(N-1) > tol.
SymmetricFamily dual_family(const SymmetricFamily& family, double tol = 1e-8);

/// Same dual computed through the decomposition form in terms of T; requires
/// |a N^2 - t2| > 1e-10 * t2.
SymmetricFamily dual_of_decomposition(const SymmetricFamily& family, const HermitianMatrix& T,
                                      double tol = 1e-8);

/// (t2/N) times the dual family; again a symmetric decomposition of T.
SymmetricFamily normalized_dual(const SymmetricFamily& family, const HermitianMatrix& T,
                                double tol = 1e-8);

}  // namespace symdec
