#pragma once

#include <optional>
#include <vector>

#include "symdec/hermitian.hpp"

namespace symdec {

/// Ordered operator family with fitted symmetry parameters: a_fit is the
/// mean diagonal Gram value Tr[E_i^2], b_fit the mean off-diagonal value
/// Tr[E_i E_j], max_dev the worst deviation of any Gram entry from its
/// fitted value. Singleton families have no off-diagonal data: b_fit is
/// stored as 0 with b_defined = false.
struct SymmetricFamily {
    std::vector<HermitianMatrix> members;
    double a_fit = 0.0;
    double b_fit = 0.0;
    double max_dev = 0.0;
    bool b_defined = true;

    int size() const { return static_cast<int>(members.size()); }
    int dim() const { return members.empty() ? 0 : members.front().dim(); }
    bool is_symmetric(double tol) const { return max_dev <= tol; }
};

SymmetricFamily fit_parameters(std::vector<HermitianMatrix> members);

struct DecompositionReport {
    double residual = 0.0;            // ||sum E_i - T||_HS
    double b_identity_dev = 0.0;      // |b_fit - (t2 - N a_fit)/(N(N-1))|
    double trace_identity_dev = 0.0;  // max_i |Tr[E_i T] - t2/N|
    bool degenerate = false;
    std::optional<std::vector<double>> degenerate_weights;
};

/// Checks the decomposition identities. Degeneracy is detected through the
/// projection coefficients t_i = <E_i,T>/t2: the family is degenerate when
/// every ||E_i - t_i T|| <= tol*||T||_HS and |sum t_i - 1| <= tol.
DecompositionReport verify_decomposition(const SymmetricFamily& family,
                                         const HermitianMatrix& T, double tol = 1e-8);

struct RankOneReport {
    bool ok = false;
    std::vector<double> weights;
};

/// For rank-1 positive T, recovers the forced weights of a positive
/// decomposition (every member must be a multiple of T). Returns ok = false
/// if some member is not proportional to T, which falsifies the input
/// assumptions rather than the statement being checked.
RankOneReport check_rank_one_T(const SymmetricFamily& family, const HermitianMatrix& T,
                               double tol = 1e-8);

struct ProjectionReport {
    bool is_projection = false;
    double absorb_dev = 0.0;  // max_i ||T E_i - E_i|| + ||E_i T - E_i||
};

ProjectionReport check_projection_characterization(const SymmetricFamily& family,
                                                   const HermitianMatrix& T, double tol = 1e-8);

struct LocalityReport {
    cplx beta{0.0, 0.0};        // common fitted alpha value
    double alpha_spread = 0.0;  // max pairwise |alpha(x) - alpha(y)|
    double residual_max = 0.0;  // worst least-squares fit residual
};

/// Fits alpha(x) = <Tx, sum E_i x>/<Tx,Tx> for each sample vector; exact when
/// sum E_i x = alpha(x) T x holds, least-squares optimal otherwise.
LocalityReport check_local_decomposition(const std::vector<HermitianMatrix>& members,
                                         const HermitianMatrix& T,
                                         const std::vector<std::vector<cplx>>& samples,
                                         double tol = 1e-8);

/// Rank of the N x N Gram matrix at tolerance 1e-9*||G||.
int linear_independence_rank(const SymmetricFamily& family);

}  // namespace symdec
