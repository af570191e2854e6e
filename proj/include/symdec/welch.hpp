#pragma once

#include <optional>
#include <vector>

#include "symdec/hermitian.hpp"

namespace symdec {

/// Positive weight vector with its flatness coefficient
/// [v] = (sum v_i)^2 / sum v_i^2, which lies in [1, N].
struct WeightVector {
    std::vector<double> v;

    explicit WeightVector(std::vector<double> weights);
    static WeightVector ones(int n);

    int size() const { return static_cast<int>(v.size()); }
    double coefficient() const;
};

struct WelchReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // lhs - rhs
    bool equality = false;
    double equiangular_dev = 0.0;  // max |<E_i,E_j> - mean off-diagonal|
    double tightness_dev = 0.0;    // || sum v_i E_i - (d^-1 sum v_i Tr E_i) I ||
    std::optional<double> rhs_weighted;  // min_angle_bound only
    int clamped = 0;  // off-diagonal inner products rounded up to 0 (holder)
};

/// Simplex bound for arbitrary self-adjoint members:
/// max_{i != j} <E_i,E_j> >= [d^-1 (sum Tr E_j)^2 - sum <E_j,E_j>]/(N(N-1)),
/// equality iff the family is equiangular and sums to a multiple of I.
WelchReport simplex_bound(const std::vector<HermitianMatrix>& members);

/// Weighted Welch bound for positive members with Tr[E_i^2] = 1:
/// sum_{i != j} v_i v_j <E_i,E_j> >= d^-1 (sum v_i)^2 - sum v_i^2,
/// equality iff the members are rank-one projections and
/// sum v_i E_i = (d^-1 sum v_i) I.
WelchReport weighted_welch(const std::vector<HermitianMatrix>& members, const WeightVector& w,
                           bool auto_normalize = false);

/// Holder generalization for p > 1 and weight coefficient [v] >= d.
WelchReport holder_welch(const std::vector<HermitianMatrix>& members, const WeightVector& w,
                         double p, bool auto_normalize = false);

/// Minimal-angle corollary: lhs = max_{i != j} <E_i,E_j>, rhs = (N-d)/(d(N-1));
/// also evaluates the weighted right-hand side, which never exceeds the flat
/// one.
WelchReport min_angle_bound(const std::vector<HermitianMatrix>& members, const WeightVector& w,
                            bool auto_normalize = false);

}  // namespace symdec
