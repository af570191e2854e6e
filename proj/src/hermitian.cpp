#include "symdec/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace symdec {

HermitianMatrix::HermitianMatrix(int dim) : d_(dim) {
    if (dim < 1) throw std::invalid_argument("HermitianMatrix: dim must be >= 1");
    e_.assign(static_cast<std::size_t>(dim) * dim, cplx(0.0, 0.0));
}

HermitianMatrix HermitianMatrix::from_entries(int dim, const std::vector<cplx>& row_major) {
    if (dim < 1) throw std::invalid_argument("HermitianMatrix: dim must be >= 1");
    if (row_major.size() != static_cast<std::size_t>(dim) * dim)
        throw std::invalid_argument("HermitianMatrix: entry count does not match dim");

    double max_entry = 0.0;
    for (const cplx& v : row_major) max_entry = std::max(max_entry, std::abs(v));
    double max_asym = 0.0;
    for (int r = 0; r < dim; ++r)
        for (int c = r; c < dim; ++c) {
            const cplx a = row_major[static_cast<std::size_t>(r) * dim + c];
            const cplx b = row_major[static_cast<std::size_t>(c) * dim + r];
            max_asym = std::max(max_asym, std::abs(a - std::conj(b)));
        }
    if (max_asym > 1e-9 * (1.0 + max_entry))
        throw std::invalid_argument("HermitianMatrix: input not Hermitian within tolerance (asymmetry " +
                                    std::to_string(max_asym) + ")");

    HermitianMatrix m(dim);
    for (int r = 0; r < dim; ++r)
        for (int c = r; c < dim; ++c) {
            const cplx a = row_major[static_cast<std::size_t>(r) * dim + c];
            const cplx b = row_major[static_cast<std::size_t>(c) * dim + r];
            m.set_sym(r, c, 0.5 * (a + std::conj(b)));
        }
    return m;
}

HermitianMatrix HermitianMatrix::identity(int dim) {
    HermitianMatrix m(dim);
    for (int k = 0; k < dim; ++k) m.set_sym(k, k, 1.0);
    return m;
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& diag) {
    HermitianMatrix m(static_cast<int>(diag.size()));
    for (int k = 0; k < m.dim(); ++k) m.set_sym(k, k, diag[k]);
    return m;
}

void HermitianMatrix::set_sym(int r, int c, cplx v) {
    if (r == c) {
        e_[static_cast<std::size_t>(r) * d_ + c] = cplx(v.real(), 0.0);
    } else {
        e_[static_cast<std::size_t>(r) * d_ + c] = v;
        e_[static_cast<std::size_t>(c) * d_ + r] = std::conj(v);
    }
}

double HermitianMatrix::trace() const {
    double t = 0.0;
    for (int k = 0; k < d_; ++k) t += e_[static_cast<std::size_t>(k) * d_ + k].real();
    return t;
}

namespace {

void require_same_dim(int a, int b, const char* who) {
    if (a != b) throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

}  // namespace

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& o) {
    require_same_dim(d_, o.d_, "HermitianMatrix::operator+=");
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
}

HermitianMatrix& HermitianMatrix::operator-=(const HermitianMatrix& o) {
    require_same_dim(d_, o.d_, "HermitianMatrix::operator-=");
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(double s) {
    for (cplx& v : e_) v *= s;
    return *this;
}

HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b) { return a += b; }
HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b) { return a -= b; }
HermitianMatrix operator*(double s, HermitianMatrix a) { return a *= s; }

double hs_inner(const HermitianMatrix& a, const HermitianMatrix& b) {
    require_same_dim(a.dim(), b.dim(), "hs_inner");
    // Tr[AB] = sum_{rc} A_rc B_cr = sum_{rc} A_rc conj(B_rc) for self-adjoint B.
    double s = 0.0;
    const auto& ae = a.data();
    const auto& be = b.data();
    for (std::size_t k = 0; k < ae.size(); ++k)
        s += ae[k].real() * be[k].real() + ae[k].imag() * be[k].imag();
    return s;
}

double hs_norm(const HermitianMatrix& a) { return std::sqrt(std::max(0.0, hs_inner(a, a))); }

Spectrum eig_sa(const HermitianMatrix& a) {
    const int d = a.dim();
    if (d < 1) throw std::invalid_argument("eig_sa: empty matrix");
    const std::size_t n = static_cast<std::size_t>(d);

    std::vector<cplx> m = a.data();
    std::vector<cplx> vec(n * n, cplx(0.0, 0.0));
    for (std::size_t k = 0; k < n; ++k) vec[k * n + k] = 1.0;

    const double stop = 1e-13 * hs_norm(a);
    auto off_mass = [&]() {
        double s = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) s += std::norm(m[p * n + q]);
        return std::sqrt(2.0 * s);
    };

    bool converged = (d == 1) || off_mass() <= stop;
    for (int sweep = 0; !converged && sweep < 100; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = m[p * n + q];
                const double mag = std::abs(apq);
                if (mag == 0.0) continue;
                const double app = m[p * n + p].real();
                const double aqq = m[q * n + q].real();

                // 2x2 unitary zeroing the (p,q) entry: tan(2*theta) = 2|apq|/(aqq-app),
                // phase carries arg(apq).
                const cplx phase = apq / mag;
                const double zeta = (aqq - app) / (2.0 * mag);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx sp = s * phase;

                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const cplx akp = m[k * n + p];
                    const cplx akq = m[k * n + q];
                    const cplx nkp = c * akp - std::conj(sp) * akq;
                    const cplx nkq = sp * akp + c * akq;
                    m[k * n + p] = nkp;
                    m[p * n + k] = std::conj(nkp);
                    m[k * n + q] = nkq;
                    m[q * n + k] = std::conj(nkq);
                }
                const double cross = 2.0 * s * c * mag;
                m[p * n + p] = app * c * c - cross + aqq * s * s;
                m[q * n + q] = app * s * s + cross + aqq * c * c;
                m[p * n + q] = 0.0;
                m[q * n + p] = 0.0;

                for (std::size_t k = 0; k < n; ++k) {
                    const cplx vkp = vec[k * n + p];
                    const cplx vkq = vec[k * n + q];
                    vec[k * n + p] = c * vkp - std::conj(sp) * vkq;
                    vec[k * n + q] = sp * vkp + c * vkq;
                }
            }
        }
        converged = off_mass() <= stop;
    }
    if (!converged) throw std::runtime_error("eig_sa: Jacobi sweep cap reached before convergence");

    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<double> vals(n);
    for (std::size_t k = 0; k < n; ++k) vals[k] = m[k * n + k].real();
    std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) { return vals[i] > vals[j]; });

    Spectrum out;
    out.eigenvalues.resize(n);
    out.eigenvectors.assign(n, std::vector<cplx>(n));
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = vals[idx[k]];
        for (std::size_t r = 0; r < n; ++r)
            out.eigenvectors[k][r] = vec[r * n + static_cast<std::size_t>(idx[k])];
    }
    return out;
}

double lambda_min(const HermitianMatrix& a) { return eig_sa(a).eigenvalues.back(); }
double lambda_max(const HermitianMatrix& a) { return eig_sa(a).eigenvalues.front(); }

bool is_psd(const HermitianMatrix& a, double tol) {
    const Spectrum s = eig_sa(a);
    const double inf_norm = std::max(std::abs(s.eigenvalues.front()), std::abs(s.eigenvalues.back()));
    return s.eigenvalues.back() >= -tol * (1.0 + inf_norm);
}

std::vector<HermitianMatrix> gram_schmidt_operators(
    const std::vector<HermitianMatrix>& seeds,
    const std::vector<HermitianMatrix>& orthogonal_to) {
    int d = 0;
    for (const auto& m : seeds) {
        if (d == 0) d = m.dim();
        require_same_dim(d, m.dim(), "gram_schmidt_operators");
    }
    for (const auto& m : orthogonal_to) {
        if (d == 0) d = m.dim();
        require_same_dim(d, m.dim(), "gram_schmidt_operators");
    }

    // Orthonormalize the constraint span internally; those are not returned.
    std::vector<HermitianMatrix> base;
    auto absorb = [](HermitianMatrix r, const std::vector<HermitianMatrix>& fam_a,
                     const std::vector<HermitianMatrix>& fam_b) {
        // two passes of modified Gram-Schmidt
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& m : fam_a) r -= hs_inner(r, m) * m;
            for (const auto& m : fam_b) r -= hs_inner(r, m) * m;
        }
        return r;
    };
    const std::vector<HermitianMatrix> none;
    for (const auto& s : orthogonal_to) {
        const double pre = hs_norm(s);
        HermitianMatrix r = absorb(s, base, none);
        const double post = hs_norm(r);
        if (post < 1e-8 * (pre + 1.0)) continue;
        base.push_back((1.0 / post) * r);
    }

    std::vector<HermitianMatrix> out;
    for (const auto& s : seeds) {
        const double pre = hs_norm(s);
        HermitianMatrix r = absorb(s, base, out);
        const double post = hs_norm(r);
        if (post < 1e-8 * (pre + 1.0)) continue;
        out.push_back((1.0 / post) * r);
    }
    return out;
}

std::vector<cplx> multiply(const HermitianMatrix& a, const HermitianMatrix& b) {
    require_same_dim(a.dim(), b.dim(), "multiply");
    const int d = a.dim();
    std::vector<cplx> out(static_cast<std::size_t>(d) * d, cplx(0.0, 0.0));
    for (int r = 0; r < d; ++r)
        for (int k = 0; k < d; ++k) {
            const cplx ark = a(r, k);
            if (ark == cplx(0.0, 0.0)) continue;
            for (int c = 0; c < d; ++c)
                out[static_cast<std::size_t>(r) * d + c] += ark * b(k, c);
        }
    return out;
}

double frob_norm(const std::vector<cplx>& raw) {
    double s = 0.0;
    for (const cplx& v : raw) s += std::norm(v);
    return std::sqrt(s);
}

std::vector<cplx> apply(const HermitianMatrix& a, const std::vector<cplx>& x) {
    const int d = a.dim();
    if (x.size() != static_cast<std::size_t>(d)) throw std::invalid_argument("apply: vector length mismatch");
    std::vector<cplx> y(d, cplx(0.0, 0.0));
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) y[r] += a(r, c) * x[c];
    return y;
}

HermitianMatrix reconstruct(const Spectrum& s) {
    const int d = static_cast<int>(s.eigenvalues.size());
    std::vector<cplx> raw(static_cast<std::size_t>(d) * d, cplx(0.0, 0.0));
    for (int k = 0; k < d; ++k)
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                raw[static_cast<std::size_t>(r) * d + c] +=
                    s.eigenvalues[k] * s.eigenvectors[k][r] * std::conj(s.eigenvectors[k][c]);
    return HermitianMatrix::from_entries(d, raw);
}

}  // namespace symdec
