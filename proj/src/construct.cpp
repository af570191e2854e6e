#include "symdec/construct.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "symdec/bounds.hpp"

namespace symdec {

std::vector<HermitianMatrix> canonical_hermitian_basis(int d) {
    if (d < 1) throw std::invalid_argument("canonical_hermitian_basis: d must be >= 1");
    std::vector<HermitianMatrix> out;
    out.reserve(static_cast<std::size_t>(d) * d);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int k = 0; k < d; ++k) {
        HermitianMatrix m(d);
        m.set_sym(k, k, 1.0);
        out.push_back(std::move(m));
    }
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            HermitianMatrix m(d);
            m.set_sym(j, k, inv_sqrt2);
            out.push_back(std::move(m));
        }
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            HermitianMatrix m(d);
            m.set_sym(j, k, cplx(0.0, inv_sqrt2));
            out.push_back(std::move(m));
        }
    return out;
}

HermitianMatrix random_hermitian(int d, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    HermitianMatrix m(d);
    for (int r = 0; r < d; ++r) {
        m.set_sym(r, r, gauss(rng));
        for (int c = r + 1; c < d; ++c)
            m.set_sym(r, c, cplx(gauss(rng) * inv_sqrt2, gauss(rng) * inv_sqrt2));
    }
    return m;
}

ConstructionBasis basis_from_F(const HermitianMatrix& T, std::vector<HermitianMatrix> F) {
    const int d = T.dim();
    const int n_minus_1 = static_cast<int>(F.size());
    if (n_minus_1 < 1) throw std::invalid_argument("basis_from_F: need at least one F operator");

    const double t_norm = hs_norm(T);
    const double tol = 1e-8 * (1.0 + t_norm);
    for (int i = 0; i < n_minus_1; ++i) {
        if (F[i].dim() != d) throw std::invalid_argument("basis_from_F: dimension mismatch");
        if (std::abs(hs_norm(F[i]) - 1.0) > tol)
            throw std::invalid_argument("basis_from_F: F_" + std::to_string(i + 1) + " is not unit norm");
        if (std::abs(hs_inner(F[i], T)) > tol)
            throw std::invalid_argument("basis_from_F: F_" + std::to_string(i + 1) + " is not orthogonal to T");
        for (int j = i + 1; j < n_minus_1; ++j)
            if (std::abs(hs_inner(F[i], F[j])) > tol)
                throw std::invalid_argument("basis_from_F: F list is not orthogonal");
    }

    const int n = n_minus_1 + 1;
    HermitianMatrix f_sum(d);
    for (const auto& f : F) f_sum += f;

    const double sq_n = std::sqrt(static_cast<double>(n));
    const double sq_nm1 = std::sqrt(static_cast<double>(n_minus_1));

    ConstructionBasis basis;
    basis.T = T;
    basis.R.reserve(n);
    for (int i = 0; i < n_minus_1; ++i)
        basis.R.push_back((1.0 / (sq_nm1 * (sq_n + 1.0))) * f_sum - (sq_n / sq_nm1) * F[i]);
    basis.R.push_back((1.0 / sq_nm1) * f_sum);
    basis.F = std::move(F);

    basis.mu.reserve(n);
    basis.rho.reserve(n);
    for (const auto& r : basis.R) {
        const Spectrum s = eig_sa(r);
        basis.rho.push_back(s.eigenvalues.front());
        basis.mu.push_back(-s.eigenvalues.back());
    }
    return basis;
}

ConstructionBasis build_basis(const HermitianMatrix& T, int N, std::optional<std::uint64_t> seed) {
    const int d = T.dim();
    if (hs_norm(T) == 0.0) throw std::invalid_argument("build_basis: T must be nonzero");
    if (N < 2) throw std::invalid_argument("build_basis: N must be at least 2");
    if (N - 1 > d * d - 1)
        throw std::invalid_argument("build_basis: N-1 exceeds the dimension of the orthocomplement of T");

    std::vector<HermitianMatrix> f;
    if (!seed) {
        auto full = gram_schmidt_operators(canonical_hermitian_basis(d), {T});
        if (static_cast<int>(full.size()) < N - 1)
            throw std::runtime_error("build_basis: canonical basis degenerated unexpectedly");
        f.assign(full.begin(), full.begin() + (N - 1));
    } else {
        std::mt19937_64 rng(*seed);
        std::vector<HermitianMatrix> constraints = {T};
        int attempts = 0;
        while (static_cast<int>(f.size()) < N - 1) {
            if (++attempts > 16 * (N + d * d))
                throw std::runtime_error("build_basis: random seeding failed to span the subspace");
            auto got = gram_schmidt_operators({random_hermitian(d, rng)}, constraints);
            for (auto& m : got) {
                constraints.push_back(m);
                f.push_back(std::move(m));
            }
        }
    }
    return basis_from_F(T, std::move(f));
}

SymmetricFamily build_family(const ConstructionBasis& basis, double x) {
    if (x < 0.0) throw std::invalid_argument("build_family: x must be non-negative");
    const int n = basis.N();
    std::vector<HermitianMatrix> members;
    members.reserve(n);
    for (const auto& r : basis.R) members.push_back((1.0 / n) * basis.T + x * r);
    return fit_parameters(std::move(members));
}

std::vector<std::vector<double>> v_matrix(int N) {
    if (N < 2) throw std::invalid_argument("v_matrix: N must be at least 2");
    const double sq_n = std::sqrt(static_cast<double>(N));
    const double scale = 1.0 / (std::sqrt(static_cast<double>(N - 1)) * (sq_n + 1.0));
    std::vector<std::vector<double>> v(N, std::vector<double>(N - 1, scale));
    for (int i = 0; i < N - 1; ++i) v[i][i] = scale * (1.0 - sq_n - N);
    for (int j = 0; j < N - 1; ++j) v[N - 1][j] = scale * (sq_n + 1.0);
    return v;
}

double PsdWindow::a_at(double x) const { return a_from_x(x, t2, N); }

PsdWindow psd_window(const ConstructionBasis& basis) {
    const int n = basis.N();
    const double tau = lambda_min(basis.T);
    if (tau <= 0.0) throw std::invalid_argument("psd_window: T must be positive definite");

    double mu_max = 0.0;
    for (double m : basis.mu) mu_max = std::max(mu_max, m);
    if (mu_max <= 0.0) throw std::runtime_error("psd_window: all R_i have non-negative spectra");

    PsdWindow win;
    win.N = n;
    win.t2 = hs_inner(basis.T, basis.T);
    win.x_sufficient = tau / (n * mu_max);

    auto g = [&](double x) {
        double worst = std::numeric_limits<double>::infinity();
        for (const auto& r : basis.R)
            worst = std::min(worst, lambda_min((1.0 / n) * basis.T + x * r));
        return worst;
    };

    // Each lambda_min(T/N + x R_i) is concave in x and positive at x = 0, so
    // the feasible set {g >= 0} is an interval and bisection applies.
    double lo = win.x_sufficient;
    double hi = lambda_max(basis.T) / (n * phi_closed_form(eig_sa(basis.T)));
    hi = std::max(hi, lo);
    if (g(hi) >= 0.0) {
        const double hi2 = 2.0 * hi;
        if (g(hi2) >= 0.0)
            throw std::runtime_error("psd_window: bisection bracket failure beyond the PSD upper bound");
        lo = hi;
        hi = hi2;
    }
    while (hi - lo > 1e-10 * std::max(hi, 1e-300)) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) >= 0.0)
            lo = mid;
        else
            hi = mid;
    }
    win.x_exact = lo;
    return win;
}

double a_from_x(double x, double t2, int N) {
    return t2 / (static_cast<double>(N) * N) + x * x;
}

double x_from_a(double a, double t2, int N) {
    const double floor = t2 / (static_cast<double>(N) * N);
    if (a < floor - 1e-12 * (1.0 + std::abs(floor)))
        throw std::invalid_argument("x_from_a: a is below t2/N^2");
    return std::sqrt(std::max(0.0, a - floor));
}

}  // namespace symdec
