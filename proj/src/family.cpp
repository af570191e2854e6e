#include "symdec/family.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace symdec {

namespace {

std::vector<std::vector<double>> gram_matrix(const std::vector<HermitianMatrix>& members) {
    const int n = static_cast<int>(members.size());
    std::vector<std::vector<double>> g(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            g[i][j] = hs_inner(members[i], members[j]);
            g[j][i] = g[i][j];
        }
    return g;
}

HermitianMatrix sum_members(const std::vector<HermitianMatrix>& members) {
    HermitianMatrix s(members.front().dim());
    for (const auto& m : members) s += m;
    return s;
}

void require_common_dim(const std::vector<HermitianMatrix>& members, const char* who) {
    if (members.empty()) throw std::invalid_argument(std::string(who) + ": empty family");
    const int d = members.front().dim();
    for (const auto& m : members)
        if (m.dim() != d) throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

}  // namespace

SymmetricFamily fit_parameters(std::vector<HermitianMatrix> members) {
    require_common_dim(members, "fit_parameters");
    const int n = static_cast<int>(members.size());
    const auto g = gram_matrix(members);

    SymmetricFamily fam;
    double diag_sum = 0.0;
    for (int i = 0; i < n; ++i) diag_sum += g[i][i];
    fam.a_fit = diag_sum / n;

    if (n > 1) {
        double off_sum = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) off_sum += g[i][j];
        fam.b_fit = off_sum / (static_cast<double>(n) * (n - 1));
        fam.b_defined = true;
    } else {
        fam.b_fit = 0.0;
        fam.b_defined = false;
    }

    double dev = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                dev = std::max(dev, std::abs(g[i][j] - fam.a_fit));
            else
                dev = std::max(dev, std::abs(g[i][j] - fam.b_fit));
        }
    fam.max_dev = dev;
    fam.members = std::move(members);
    return fam;
}

DecompositionReport verify_decomposition(const SymmetricFamily& family,
                                         const HermitianMatrix& T, double tol) {
    require_common_dim(family.members, "verify_decomposition");
    if (family.dim() != T.dim())
        throw std::invalid_argument("verify_decomposition: dimension mismatch with T");

    const int n = family.size();
    const double t2 = hs_inner(T, T);
    const double t_norm = std::sqrt(std::max(0.0, t2));

    DecompositionReport rep;
    rep.residual = hs_norm(sum_members(family.members) - T);

    if (n > 1)
        rep.b_identity_dev = std::abs(family.b_fit - (t2 - n * family.a_fit) /
                                                         (static_cast<double>(n) * (n - 1)));

    for (const auto& m : family.members)
        rep.trace_identity_dev =
            std::max(rep.trace_identity_dev, std::abs(hs_inner(m, T) - t2 / n));

    if (t2 > 0.0) {
        std::vector<double> weights(n);
        double weight_sum = 0.0;
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            weights[i] = hs_inner(family.members[i], T) / t2;
            weight_sum += weights[i];
            worst = std::max(worst, hs_norm(family.members[i] - weights[i] * T));
        }
        if (worst <= tol * t_norm && std::abs(weight_sum - 1.0) <= tol) {
            rep.degenerate = true;
            rep.degenerate_weights = std::move(weights);
        }
    } else {
        // T = 0: the only degenerate decomposition is the all-zero family.
        bool all_zero = true;
        for (const auto& m : family.members) all_zero = all_zero && hs_norm(m) <= tol;
        rep.degenerate = all_zero;
    }
    return rep;
}

RankOneReport check_rank_one_T(const SymmetricFamily& family, const HermitianMatrix& T,
                               double tol) {
    require_common_dim(family.members, "check_rank_one_T");
    if (family.dim() != T.dim())
        throw std::invalid_argument("check_rank_one_T: dimension mismatch with T");

    const Spectrum st = eig_sa(T);
    const double top = st.eigenvalues.front();
    if (top <= tol) throw std::invalid_argument("check_rank_one_T: T is not positive of rank one");
    if (st.eigenvalues.back() < -tol * (1.0 + top))
        throw std::invalid_argument("check_rank_one_T: T is not positive");
    if (st.eigenvalues.size() > 1 && st.eigenvalues[1] > tol * std::max(1.0, top))
        throw std::invalid_argument("check_rank_one_T: T is not rank one within tolerance");
    for (const auto& m : family.members)
        if (!is_psd(m, tol)) throw std::invalid_argument("check_rank_one_T: family is not positive");

    const double t2 = hs_inner(T, T);
    const double t_norm = std::sqrt(t2);
    if (hs_norm(sum_members(family.members) - T) > tol * (1.0 + t_norm))
        throw std::invalid_argument("check_rank_one_T: family does not sum to T");

    RankOneReport rep;
    rep.weights.resize(family.size());
    double weight_sum = 0.0;
    rep.ok = true;
    for (int i = 0; i < family.size(); ++i) {
        rep.weights[i] = hs_inner(family.members[i], T) / t2;
        weight_sum += rep.weights[i];
        if (hs_norm(family.members[i] - rep.weights[i] * T) > tol * (1.0 + t_norm)) rep.ok = false;
        if (rep.weights[i] < -tol || rep.weights[i] > 1.0 + tol) rep.ok = false;
    }
    if (std::abs(weight_sum - 1.0) > tol) rep.ok = false;
    return rep;
}

ProjectionReport check_projection_characterization(const SymmetricFamily& family,
                                                   const HermitianMatrix& T, double tol) {
    require_common_dim(family.members, "check_projection_characterization");
    if (family.dim() != T.dim())
        throw std::invalid_argument("check_projection_characterization: dimension mismatch with T");

    const double t_norm = hs_norm(T);
    if (hs_norm(sum_members(family.members) - T) > tol * (1.0 + t_norm))
        throw std::invalid_argument("check_projection_characterization: family does not decompose T");
    for (const auto& m : family.members)
        if (!is_psd(m, tol))
            throw std::invalid_argument("check_projection_characterization: family is not positive");

    ProjectionReport rep;
    auto t_sq = multiply(T, T);
    const auto& t_raw = T.data();
    std::vector<cplx> diff(t_sq.size());
    for (std::size_t k = 0; k < t_sq.size(); ++k) diff[k] = t_sq[k] - t_raw[k];
    rep.is_projection = frob_norm(diff) <= tol;

    for (const auto& m : family.members) {
        auto te = multiply(T, m);
        auto et = multiply(m, T);
        const auto& e_raw = m.data();
        std::vector<cplx> dl(te.size()), dr(te.size());
        for (std::size_t k = 0; k < te.size(); ++k) {
            dl[k] = te[k] - e_raw[k];
            dr[k] = et[k] - e_raw[k];
        }
        rep.absorb_dev = std::max(rep.absorb_dev, frob_norm(dl) + frob_norm(dr));
    }
    return rep;
}

LocalityReport check_local_decomposition(const std::vector<HermitianMatrix>& members,
                                         const HermitianMatrix& T,
                                         const std::vector<std::vector<cplx>>& samples,
                                         double tol) {
    require_common_dim(members, "check_local_decomposition");
    if (members.front().dim() != T.dim())
        throw std::invalid_argument("check_local_decomposition: dimension mismatch with T");
    if (samples.empty()) throw std::invalid_argument("check_local_decomposition: no sample vectors");

    const Spectrum st = eig_sa(T);
    double min_abs = std::abs(st.eigenvalues.front());
    for (double v : st.eigenvalues) min_abs = std::min(min_abs, std::abs(v));
    if (min_abs <= tol) throw std::invalid_argument("check_local_decomposition: T is singular");

    const HermitianMatrix sum = sum_members(members);
    std::vector<cplx> alphas;
    LocalityReport rep;
    for (const auto& x : samples) {
        double x_norm2 = 0.0;
        for (const cplx& v : x) x_norm2 += std::norm(v);
        if (x_norm2 == 0.0)
            throw std::invalid_argument("check_local_decomposition: zero sample vector");

        const auto z = apply(T, x);
        const auto y = apply(sum, x);
        cplx zy(0.0, 0.0);
        double zz = 0.0;
        for (std::size_t k = 0; k < z.size(); ++k) {
            zy += std::conj(z[k]) * y[k];
            zz += std::norm(z[k]);
        }
        const cplx alpha = zy / zz;
        double resid2 = 0.0;
        for (std::size_t k = 0; k < z.size(); ++k) resid2 += std::norm(y[k] - alpha * z[k]);
        rep.residual_max = std::max(rep.residual_max, std::sqrt(resid2));
        alphas.push_back(alpha);
    }

    cplx mean(0.0, 0.0);
    for (const cplx& a : alphas) mean += a;
    rep.beta = mean / static_cast<double>(alphas.size());
    for (std::size_t i = 0; i < alphas.size(); ++i)
        for (std::size_t j = i + 1; j < alphas.size(); ++j)
            rep.alpha_spread = std::max(rep.alpha_spread, std::abs(alphas[i] - alphas[j]));
    return rep;
}

int linear_independence_rank(const SymmetricFamily& family) {
    if (family.members.empty()) return 0;
    const int n = family.size();
    const auto g = gram_matrix(family.members);
    HermitianMatrix gm(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) gm.set_sym(i, j, g[i][j]);

    const Spectrum sg = eig_sa(gm);
    double top = 0.0;
    for (double v : sg.eigenvalues) top = std::max(top, std::abs(v));
    if (top == 0.0) return 0;
    int rank = 0;
    for (double v : sg.eigenvalues)
        if (v > 1e-9 * top) ++rank;
    return rank;
}

}  // namespace symdec
