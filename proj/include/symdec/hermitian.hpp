#pragma once

#include <complex>
#include <vector>

namespace symdec {

using cplx = std::complex<double>;

/// Dense complex self-adjoint matrix, the carrier for every operator in the
/// library. Entries stay exactly Hermitian: mutation goes through set_sym
/// and the arithmetic operators, external data through from_entries.
class HermitianMatrix {
public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(int dim);  // zero matrix

    /// Validates hermiticity (max pair asymmetry <= 1e-9*(1+max|entry|)),
    /// then stores the symmetrized (A + A*)/2. Throws std::invalid_argument
    /// on dimension or hermiticity violations.
    static HermitianMatrix from_entries(int dim, const std::vector<cplx>& row_major);
    static HermitianMatrix identity(int dim);
    static HermitianMatrix diagonal(const std::vector<double>& diag);

    int dim() const { return d_; }
    cplx operator()(int r, int c) const { return e_[static_cast<std::size_t>(r) * d_ + c]; }

    /// Sets (r,c) = v and (c,r) = conj(v); on the diagonal the imaginary
    /// part is dropped.
    void set_sym(int r, int c, cplx v);

    double trace() const;
    const std::vector<cplx>& data() const { return e_; }

    HermitianMatrix& operator+=(const HermitianMatrix& o);
    HermitianMatrix& operator-=(const HermitianMatrix& o);
    HermitianMatrix& operator*=(double s);

private:
    int d_ = 0;
    std::vector<cplx> e_;
};

HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b);
HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b);
HermitianMatrix operator*(double s, HermitianMatrix a);

/// Eigendecomposition of a self-adjoint matrix. Eigenvalues descending,
/// eigenvectors[k] is the unit eigenvector paired with eigenvalues[k].
struct Spectrum {
    std::vector<double> eigenvalues;
    std::vector<std::vector<cplx>> eigenvectors;
};

/// Hilbert-Schmidt scalar product Tr[AB]; real for self-adjoint arguments.
double hs_inner(const HermitianMatrix& a, const HermitianMatrix& b);
double hs_norm(const HermitianMatrix& a);

/// Cyclic complex Jacobi diagonalization. Stops when the off-diagonal
/// Frobenius mass falls below 1e-13*||A||_HS; throws std::runtime_error if
/// 100 sweeps do not get there. Ties in the descending sort keep the Jacobi
/// output order.
Spectrum eig_sa(const HermitianMatrix& a);

double lambda_min(const HermitianMatrix& a);
double lambda_max(const HermitianMatrix& a);

/// True iff lambda_min(a) >= -tol*(1 + ||a||_inf).
bool is_psd(const HermitianMatrix& a, double tol = 1e-8);

/// Maximal HS-orthonormal family spanning the projection of span(seeds)
/// onto the orthocomplement of span(orthogonal_to). A candidate whose
/// post-projection norm is below 1e-8*(pre-projection norm + 1) is dropped.
std::vector<HermitianMatrix> gram_schmidt_operators(
    const std::vector<HermitianMatrix>& seeds,
    const std::vector<HermitianMatrix>& orthogonal_to);

// Raw dense helpers for products that leave the self-adjoint cone.
std::vector<cplx> multiply(const HermitianMatrix& a, const HermitianMatrix& b);
double frob_norm(const std::vector<cplx>& raw);
std::vector<cplx> apply(const HermitianMatrix& a, const std::vector<cplx>& x);

/// sum_k lambda_k v_k v_k* from a Spectrum.
HermitianMatrix reconstruct(const Spectrum& s);

}  // namespace symdec
