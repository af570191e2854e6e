#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "symdec/construct.hpp"

namespace symdec {

/// Worked d = 2, N = 4 family for T = diag(1, u), u >= 1, with the fixed
/// basis F_1 = sigma_x/sqrt(2), F_2 = [[0,i],[-i,0]]/sqrt(2),
/// F_3 = diag(u,-1)/sqrt(u^2+1).
ConstructionBasis example_basis(double u);

// Closed-form spectra of the derived R operators, {larger, smaller}.
std::array<double, 2> r12_eigenvalues(double u);  // R_1 and R_2 (isospectral)
std::array<double, 2> r3_eigenvalues(double u);
std::array<double, 2> r4_eigenvalues(double u);

/// a value guaranteed feasible by the sufficient PSD window for this basis.
double a_lb(double u);
/// a value no positive symmetric decomposition of diag(1,u) can exceed.
double a_ub(double u);
/// Closed form of the largest feasible a for this construction.
double a_opt_closed(double u);
/// Largest feasible a found by bisection on the PSD window.
double a_opt_search(double u, double tol = 1e-10);

struct SweepRow {
    double u = 0.0;
    double a_lb = 0.0;
    double a_ub = 0.0;
    double a_opt_closed = 0.0;
    double a_opt_search = 0.0;
    double x_suf = 0.0;
    double x_exact = 0.0;
    double gap = 0.0;  // a_opt_search - a_lb
};

/// Uniform grid over [u_min, u_max]; rows are independent and evaluated on
/// up to SYMDEC_THREADS worker threads.
std::vector<SweepRow> sweep(double u_min, double u_max, int steps);

/// CSV with header u,a_lb,a_ub,a_opt_closed,a_opt_search,x_suf,x_exact,gap
/// in full-precision decimal.
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace symdec
