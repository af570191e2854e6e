#include "symdec/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace symdec {

namespace {

double phi_from_sorted(const std::vector<double>& desc) {
    const int d = static_cast<int>(desc.size());
    if (d < 2) throw std::invalid_argument("phi_closed_form: spectrum needs dimension >= 2");
    if (desc.back() <= 0.0)
        throw std::invalid_argument("phi_closed_form: spectrum must be strictly positive");
    double beta = 0.0;
    for (double v : desc) beta += v;
    const double ratio = beta / desc.back() - 1.0;
    return std::sqrt(1.0 / (ratio * ratio + (d - 1)));
}

HermitianMatrix project_out(const HermitianMatrix& g, const HermitianMatrix& b_mat, double b_norm2) {
    return g - (hs_inner(g, b_mat) / b_norm2) * b_mat;
}

}  // namespace

double phi_closed_form(const std::vector<double>& b) {
    if (b.empty()) throw std::invalid_argument("phi_closed_form: empty spectrum");
    std::vector<double> desc = b;
    std::sort(desc.begin(), desc.end(), std::greater<double>());
    return phi_from_sorted(desc);
}

double phi_closed_form(const Spectrum& s) { return phi_from_sorted(s.eigenvalues); }

BoundsReport a_bounds(const HermitianMatrix& T, int N, const SymmetricFamily* family, double tol) {
    if (N < 1) throw std::invalid_argument("a_bounds: N must be >= 1");
    const Spectrum st = eig_sa(T);
    const double top = st.eigenvalues.front();
    const double tau = st.eigenvalues.back();
    if (tau < -tol * (1.0 + std::abs(top)))
        throw std::invalid_argument("a_bounds: T is not positive semidefinite");

    BoundsReport rep;
    rep.N = N;
    rep.t2 = hs_inner(T, T);
    const double n2 = static_cast<double>(N) * N;
    rep.a_lower = rep.t2 / n2;
    rep.a_upper_positive = rep.t2 / N;

    {
        auto t_sq = multiply(T, T);
        const auto& raw = T.data();
        std::vector<cplx> diff(t_sq.size());
        for (std::size_t k = 0; k < t_sq.size(); ++k) diff[k] = t_sq[k] - raw[k];
        if (frob_norm(diff) <= tol) rep.a_upper_projection = rep.t2 * rep.t2 / n2;
    }

    if (tau > tol * (1.0 + std::abs(top)) && T.dim() >= 2) {
        rep.phi = phi_from_sorted(st.eigenvalues);
        rep.x_upper_psd = top / (N * *rep.phi);
        rep.a_upper_psd = rep.t2 / n2 + *rep.x_upper_psd * *rep.x_upper_psd;

        if (family != nullptr && !family->members.empty()) {
            if (family->dim() != T.dim())
                throw std::invalid_argument("a_bounds: family dimension does not match T");
            const double kappa_t = top / tau;
            bool all_invertible = true;
            double m_best = std::numeric_limits<double>::infinity();
            for (const auto& e : family->members) {
                const Spectrum se = eig_sa(e);
                const double e_top = se.eigenvalues.front();
                const double e_min = se.eigenvalues.back();
                if (e_min <= 1e-10 * e_top || e_top <= 0.0) {
                    all_invertible = false;
                    break;
                }
                const double root = std::sqrt(kappa_t * (e_top / e_min));
                const double term = root + 1.0 / root;
                m_best = std::min(m_best, 0.25 * term * term);
            }
            if (all_invertible) rep.a_upper_condition = m_best * rep.t2 / n2;
        }
    }
    return rep;
}

PhiOracleResult phi_oracle(const std::vector<double>& b, int trials, std::uint64_t seed) {
    if (b.empty()) throw std::invalid_argument("phi_oracle: empty spectrum");
    std::vector<double> desc = b;
    std::sort(desc.begin(), desc.end(), std::greater<double>());
    const int d = static_cast<int>(desc.size());
    if (d < 2) throw std::invalid_argument("phi_oracle: spectrum needs dimension >= 2");
    if (desc.back() <= 0.0)
        throw std::invalid_argument("phi_oracle: spectrum must be strictly positive");

    double beta = 0.0;
    for (double v : desc) beta += v;
    const double b_min = desc.back();

    // Boundary two-valued spectrum (s,...,s,-r) with <a, b desc> = 0.
    const double s_val = b_min / std::sqrt((beta - b_min) * (beta - b_min) + (d - 1) * b_min * b_min);
    const double r_val = std::sqrt(std::max(0.0, 1.0 - (d - 1) * s_val * s_val));
    std::vector<double> a_spec(d, s_val);
    a_spec.back() = -r_val;

    const HermitianMatrix b_mat = HermitianMatrix::diagonal(desc);

    // Conjugate diag(a) along a one-parameter product of Givens rotations that
    // interpolates between the identity alignment (trace <a,b desc>) and the
    // reversal alignment (trace <a desc, b asc>); bisect the parameter to a
    // trace zero.
    auto conjugated = [&](double t) {
        HermitianMatrix a_mat = HermitianMatrix::diagonal(a_spec);
        const double theta = t * M_PI / 2.0;
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        std::vector<cplx> raw = a_mat.data();
        // planes (k, d-1-k) are disjoint, so the rotations commute
        for (int k = 0; k < d / 2; ++k) {
            const int j = d - 1 - k;
            const double ak = a_spec[k];
            const double aj = a_spec[j];
            raw[static_cast<std::size_t>(k) * d + k] = c * c * ak + s * s * aj;
            raw[static_cast<std::size_t>(j) * d + j] = s * s * ak + c * c * aj;
            raw[static_cast<std::size_t>(k) * d + j] = c * s * (ak - aj);
            raw[static_cast<std::size_t>(j) * d + k] = c * s * (ak - aj);
        }
        return HermitianMatrix::from_entries(d, raw);
    };
    auto trace_against_b = [&](double t) { return hs_inner(conjugated(t), b_mat); };

    const double h0 = trace_against_b(0.0);
    const double h1 = trace_against_b(1.0);
    double t_star;
    if (std::abs(h0) <= 1e-12) {
        t_star = 0.0;
    } else if (std::abs(h1) <= 1e-12) {
        t_star = 1.0;
    } else if (h0 > 0.0 && h1 < 0.0) {
        double lo = 0.0, hi = 1.0;
        double mid = 0.5;
        for (int it = 0; it < 200; ++it) {
            mid = 0.5 * (lo + hi);
            const double hm = trace_against_b(mid);
            if (std::abs(hm) <= 1e-12) break;
            if (hm > 0.0)
                lo = mid;
            else
                hi = mid;
        }
        t_star = mid;
        if (std::abs(trace_against_b(t_star)) > 1e-12)
            throw std::runtime_error("phi_oracle: path bisection failed to reach a trace zero");
    } else {
        throw std::runtime_error("phi_oracle: path endpoints do not bracket a trace zero");
    }

    PhiOracleResult out;
    out.witness = conjugated(t_star);
    out.value = lambda_max(out.witness);

    const double b_norm2 = hs_inner(b_mat, b_mat);
    std::mt19937_64 rng(seed);
    out.mc_min_lambda_max = std::numeric_limits<double>::infinity();
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int trial = 0; trial < trials; ++trial) {
        HermitianMatrix g(d);
        double norm = 0.0;
        do {
            for (int r = 0; r < d; ++r) {
                g.set_sym(r, r, gauss(rng));
                for (int c = r + 1; c < d; ++c)
                    g.set_sym(r, c, cplx(gauss(rng) * inv_sqrt2, gauss(rng) * inv_sqrt2));
            }
            g = project_out(g, b_mat, b_norm2);
            norm = hs_norm(g);
        } while (norm < 1e-12);
        g *= 1.0 / norm;
        const double lam = lambda_max(g);
        out.mc_min_lambda_max = std::min(out.mc_min_lambda_max, lam);
        if (lam < out.value - 1e-9) ++out.mc_violations;
    }
    if (trials == 0) out.mc_min_lambda_max = out.value;
    return out;
}

}  // namespace symdec
