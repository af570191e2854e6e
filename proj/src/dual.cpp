#include "symdec/dual.hpp"

#include <cmath>
#include <stdexcept>

namespace symdec {

namespace {

void require_symmetric(const SymmetricFamily& family, double tol, const char* who) {
    if (family.members.empty()) throw std::invalid_argument(std::string(who) + ": empty family");
    if (family.max_dev > tol * (1.0 + std::abs(family.a_fit)))
        throw std::invalid_argument(std::string(who) + ": family is not symmetric at tolerance");
}

}  // namespace

DualParameters dual_parameters(double a, double b, int N, double t2) {
    DualParameters p;
    const double denom = (a - b) * (a + b * (N - 1));
    p.a_tilde = (a + b * (N - 2)) / denom;
    p.b_tilde = -b / denom;
    const double scale = (t2 / N) * (t2 / N);
    p.a_hat = scale * p.a_tilde;
    p.b_hat = scale * p.b_tilde;
    const double disc = a - t2 / (static_cast<double>(N) * N);
    if (disc > 0.0) p.x_hat = (N - 1) * t2 / (static_cast<double>(N) * N * std::sqrt(disc));
    return p;
}

SymmetricFamily dual_family(const SymmetricFamily& family, double tol) {
    require_symmetric(family, tol, "dual_family");
    const int n = family.size();
    const double a = family.a_fit;
    const double b = family.b_fit;
    if (a - b <= tol || a + b * (n - 1) <= tol)
        throw std::invalid_argument("dual_family: degenerate family, Gram matrix is singular");

    HermitianMatrix sum(family.dim());
    for (const auto& m : family.members) sum += m;

    const double shrink = b / (a + b * (n - 1));
    std::vector<HermitianMatrix> duals;
    duals.reserve(n);
    for (const auto& m : family.members)
        duals.push_back((1.0 / (a - b)) * (m - shrink * sum));
    return fit_parameters(std::move(duals));
}

SymmetricFamily dual_of_decomposition(const SymmetricFamily& family, const HermitianMatrix& T,
                                      double tol) {
    require_symmetric(family, tol, "dual_of_decomposition");
    if (family.dim() != T.dim())
        throw std::invalid_argument("dual_of_decomposition: dimension mismatch with T");

    const int n = family.size();
    const double a = family.a_fit;
    const double t2 = hs_inner(T, T);
    const double n2 = static_cast<double>(n) * n;
    if (std::abs(a * n2 - t2) <= 1e-10 * t2)
        throw std::invalid_argument("dual_of_decomposition: degenerate decomposition (a N^2 = t2)");

    HermitianMatrix check(T.dim());
    for (const auto& m : family.members) check += m;
    if (hs_norm(check - T) > tol * (1.0 + std::sqrt(std::max(0.0, t2))))
        throw std::invalid_argument("dual_of_decomposition: family does not decompose T");

    const double front = n * (n - 1.0) / (a * n2 - t2);
    const double t_coeff = (t2 - a * n) / ((n - 1.0) * t2);
    std::vector<HermitianMatrix> duals;
    duals.reserve(n);
    for (const auto& m : family.members) duals.push_back(front * (m - t_coeff * T));
    return fit_parameters(std::move(duals));
}

SymmetricFamily normalized_dual(const SymmetricFamily& family, const HermitianMatrix& T,
                                double tol) {
    SymmetricFamily dual = dual_of_decomposition(family, T, tol);
    const double t2 = hs_inner(T, T);
    std::vector<HermitianMatrix> scaled;
    scaled.reserve(dual.members.size());
    for (const auto& m : dual.members) scaled.push_back((t2 / family.size()) * m);
    return fit_parameters(std::move(scaled));
}

}  // namespace symdec
