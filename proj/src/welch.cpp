#include "symdec/welch.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace symdec {

namespace {

constexpr double kEqualityTol = 1e-8;

void require_family(const std::vector<HermitianMatrix>& members, const char* who) {
    if (members.size() < 2) throw std::invalid_argument(std::string(who) + ": need at least two members");
    const int d = members.front().dim();
    for (const auto& m : members)
        if (m.dim() != d) throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

std::vector<std::vector<double>> gram_of(const std::vector<HermitianMatrix>& members) {
    const int n = static_cast<int>(members.size());
    std::vector<std::vector<double>> g(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            g[i][j] = hs_inner(members[i], members[j]);
            g[j][i] = g[i][j];
        }
    return g;
}

double equiangular_dev_of(const std::vector<std::vector<double>>& g) {
    const int n = static_cast<int>(g.size());
    double mean = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) mean += g[i][j];
    mean /= static_cast<double>(n) * (n - 1);
    double dev = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) dev = std::max(dev, std::abs(g[i][j] - mean));
    return dev;
}

// || sum w_i E_i - (target_trace/d) I ||_HS
double tightness_dev_of(const std::vector<HermitianMatrix>& members,
                        const std::vector<double>& w, double target_trace) {
    const int d = members.front().dim();
    HermitianMatrix sum(d);
    for (std::size_t i = 0; i < members.size(); ++i) sum += w[i] * members[i];
    return hs_norm(sum - (target_trace / d) * HermitianMatrix::identity(d));
}

bool slack_small(const WelchReport& rep) {
    return std::abs(rep.slack) <= kEqualityTol * (1.0 + std::abs(rep.rhs));
}

// Checks positivity and Tr[E_i^2] = 1, optionally rescaling to unit HS norm.
std::vector<HermitianMatrix> prepare_normalized(const std::vector<HermitianMatrix>& members,
                                                bool auto_normalize, const char* who) {
    std::vector<HermitianMatrix> out;
    out.reserve(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (!is_psd(members[i], 1e-8))
            throw std::invalid_argument(std::string(who) + ": member " + std::to_string(i + 1) +
                                        " is not positive semidefinite");
        const double norm = hs_norm(members[i]);
        if (auto_normalize) {
            if (norm == 0.0)
                throw std::invalid_argument(std::string(who) + ": cannot normalize a zero member");
            out.push_back((1.0 / norm) * members[i]);
        } else {
            if (std::abs(norm * norm - 1.0) > 1e-8)
                throw std::invalid_argument(std::string(who) + ": member " + std::to_string(i + 1) +
                                            " violates Tr[E^2] = 1 (pass auto_normalize to rescale)");
            out.push_back(members[i]);
        }
    }
    return out;
}

void require_weights(const WeightVector& w, int n, const char* who) {
    if (w.size() != n)
        throw std::invalid_argument(std::string(who) + ": weight count does not match family size");
}

}  // namespace

WeightVector::WeightVector(std::vector<double> weights) : v(std::move(weights)) {
    if (v.empty()) throw std::invalid_argument("WeightVector: empty weights");
    for (double w : v)
        if (!(w > 0.0)) throw std::invalid_argument("WeightVector: weights must be positive");
}

WeightVector WeightVector::ones(int n) { return WeightVector(std::vector<double>(n, 1.0)); }

double WeightVector::coefficient() const {
    double s = 0.0, s2 = 0.0;
    for (double w : v) {
        s += w;
        s2 += w * w;
    }
    return s * s / s2;
}

WelchReport simplex_bound(const std::vector<HermitianMatrix>& members) {
    require_family(members, "simplex_bound");
    const int n = static_cast<int>(members.size());
    const int d = members.front().dim();
    const auto g = gram_of(members);

    WelchReport rep;
    rep.lhs = -std::numeric_limits<double>::infinity();
    double trace_sum = 0.0, self_sum = 0.0;
    for (int i = 0; i < n; ++i) {
        trace_sum += members[i].trace();
        self_sum += g[i][i];
        for (int j = 0; j < n; ++j)
            if (i != j) rep.lhs = std::max(rep.lhs, g[i][j]);
    }
    rep.rhs = (trace_sum * trace_sum / d - self_sum) / (static_cast<double>(n) * (n - 1));
    rep.slack = rep.lhs - rep.rhs;
    rep.equiangular_dev = equiangular_dev_of(g);
    rep.tightness_dev = tightness_dev_of(members, std::vector<double>(n, 1.0), trace_sum);
    rep.equality = rep.equiangular_dev <= kEqualityTol && rep.tightness_dev <= kEqualityTol &&
                   slack_small(rep);
    return rep;
}

WelchReport weighted_welch(const std::vector<HermitianMatrix>& members, const WeightVector& w,
                           bool auto_normalize) {
    require_family(members, "weighted_welch");
    const int n = static_cast<int>(members.size());
    require_weights(w, n, "weighted_welch");
    const auto e = prepare_normalized(members, auto_normalize, "weighted_welch");
    const int d = e.front().dim();
    const auto g = gram_of(e);

    double v_sum = 0.0, v2_sum = 0.0;
    for (double x : w.v) {
        v_sum += x;
        v2_sum += x * x;
    }

    WelchReport rep;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) rep.lhs += w.v[i] * w.v[j] * g[i][j];
    rep.rhs = v_sum * v_sum / d - v2_sum;
    rep.slack = rep.lhs - rep.rhs;
    rep.equiangular_dev = equiangular_dev_of(g);
    // The target trace sum v_i (not sum v_i Tr E_i) folds the rank-one
    // requirement into the tightness certificate: Tr E_i >= 1 always.
    rep.tightness_dev = tightness_dev_of(e, w.v, v_sum);
    rep.equality = rep.tightness_dev <= kEqualityTol && slack_small(rep);
    return rep;
}

WelchReport holder_welch(const std::vector<HermitianMatrix>& members, const WeightVector& w,
                         double p, bool auto_normalize) {
    require_family(members, "holder_welch");
    const int n = static_cast<int>(members.size());
    require_weights(w, n, "holder_welch");
    if (!(p > 1.0)) throw std::invalid_argument("holder_welch: p must be > 1");
    const auto e = prepare_normalized(members, auto_normalize, "holder_welch");
    const int d = e.front().dim();
    if (w.coefficient() < d - 1e-12)
        throw std::invalid_argument("holder_welch: weight coefficient [v] must be >= d");
    const auto g = gram_of(e);

    double v_sum = 0.0, v2_sum = 0.0;
    for (double x : w.v) {
        v_sum += x;
        v2_sum += x * x;
    }
    const double pair_sum = v_sum * v_sum - v2_sum;  // sum_{i != j} v_i v_j

    WelchReport rep;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            double gij = g[i][j];
            if (gij < 0.0) {
                if (gij < -1e-8)
                    throw std::invalid_argument(
                        "holder_welch: negative inner product, members are not positive");
                gij = 0.0;
                ++rep.clamped;
            }
            rep.lhs += w.v[i] * w.v[j] * std::pow(gij, p);
        }
    const double base = std::max(0.0, v_sum * v_sum / d - v2_sum);
    rep.rhs = std::pow(base, p) / std::pow(pair_sum, p - 1.0);
    rep.slack = rep.lhs - rep.rhs;
    rep.equiangular_dev = equiangular_dev_of(g);
    rep.tightness_dev = tightness_dev_of(e, w.v, v_sum);
    rep.equality = rep.equiangular_dev <= kEqualityTol && rep.tightness_dev <= kEqualityTol &&
                   slack_small(rep);
    return rep;
}

WelchReport min_angle_bound(const std::vector<HermitianMatrix>& members, const WeightVector& w,
                            bool auto_normalize) {
    require_family(members, "min_angle_bound");
    const int n = static_cast<int>(members.size());
    require_weights(w, n, "min_angle_bound");
    const auto e = prepare_normalized(members, auto_normalize, "min_angle_bound");
    const int d = e.front().dim();
    if (w.coefficient() < d - 1e-12)
        throw std::invalid_argument("min_angle_bound: weight coefficient [v] must be >= d");
    const auto g = gram_of(e);

    double v_sum = 0.0, v2_sum = 0.0;
    for (double x : w.v) {
        v_sum += x;
        v2_sum += x * x;
    }

    WelchReport rep;
    rep.lhs = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) rep.lhs = std::max(rep.lhs, g[i][j]);
    rep.rhs = static_cast<double>(n - d) / (static_cast<double>(d) * (n - 1));
    rep.rhs_weighted = (v_sum * v_sum / d - v2_sum) / (v_sum * v_sum - v2_sum);
    if (*rep.rhs_weighted > rep.rhs + 1e-9 * (1.0 + std::abs(rep.rhs)))
        throw std::logic_error("min_angle_bound: weighted bound exceeded the flat bound");
    rep.slack = rep.lhs - rep.rhs;
    rep.equiangular_dev = equiangular_dev_of(g);
    rep.tightness_dev = tightness_dev_of(e, w.v, v_sum);
    rep.equality = rep.equiangular_dev <= kEqualityTol && rep.tightness_dev <= kEqualityTol &&
                   slack_small(rep);
    return rep;
}

}  // namespace symdec
