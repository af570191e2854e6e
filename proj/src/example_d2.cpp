#include "symdec/example_d2.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

#include "symdec/json_io.hpp"

namespace symdec {

namespace {

void require_u(double u) {
    if (!(u >= 1.0)) throw std::invalid_argument("example_d2: u must be >= 1");
}

std::array<double, 2> pair_from(double linear, double root, double denom) {
    return {(linear + root) / denom, (linear - root) / denom};
}

int thread_cap() {
    int cap = static_cast<int>(std::thread::hardware_concurrency());
    if (cap < 1) cap = 1;
    if (const char* env = std::getenv("SYMDEC_THREADS")) {
        const int requested = std::atoi(env);
        if (requested >= 1) cap = std::min(cap, requested);
    }
    return cap;
}

}  // namespace

ConstructionBasis example_basis(double u) {
    require_u(u);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const double inv_hyp = 1.0 / std::sqrt(u * u + 1.0);

    HermitianMatrix t(2);
    t.set_sym(0, 0, 1.0);
    t.set_sym(1, 1, u);

    HermitianMatrix f1(2), f2(2), f3(2);
    f1.set_sym(0, 1, inv_sqrt2);
    f2.set_sym(0, 1, cplx(0.0, inv_sqrt2));
    f3.set_sym(0, 0, u * inv_hyp);
    f3.set_sym(1, 1, -inv_hyp);

    return basis_from_F(t, {f1, f2, f3});
}

std::array<double, 2> r12_eigenvalues(double u) {
    require_u(u);
    const double denom = 6.0 * std::sqrt(3.0) * std::sqrt(u * u + 1.0);
    const double um1 = u - 1.0;
    return pair_from(um1, std::sqrt(um1 * um1 + 4.0 * (13.0 * u * u + u + 13.0)), denom);
}

std::array<double, 2> r3_eigenvalues(double u) {
    require_u(u);
    const double denom = 6.0 * std::sqrt(3.0) * std::sqrt(u * u + 1.0);
    const double um1 = u - 1.0;
    return pair_from(5.0 * (1.0 - u), std::sqrt(25.0 * um1 * um1 + 4.0 * (u * u + 25.0 * u + 1.0)),
                     denom);
}

std::array<double, 2> r4_eigenvalues(double u) {
    require_u(u);
    const double denom = 6.0 * std::sqrt(3.0) * std::sqrt(u * u + 1.0);
    const double um1 = u - 1.0;
    return pair_from(3.0 * um1, 3.0 * std::sqrt(um1 * um1 + 4.0 * (u * u + u + 1.0)), denom);
}

double a_lb(double u) {
    require_u(u);
    const double hyp = u * u + 1.0;
    const double denom = 5.0 * u + std::sqrt(u * (29.0 * u + 50.0) + 29.0) - 5.0;
    return hyp / 16.0 + 27.0 * hyp / (4.0 * denom * denom);
}

double a_ub(double u) {
    require_u(u);
    const double hyp = 1.0 + u * u;
    return hyp * hyp / 16.0;
}

double a_opt_closed(double u) {
    require_u(u);
    const double hyp = u * u + 1.0;
    const double root_hyp = std::sqrt(hyp);
    const double inner =
        -5.0 * root_hyp * u * u + 5.0 * root_hyp + hyp * std::sqrt(u * (25.0 * u + 4.0) + 25.0);
    const double denom = u * (u + 25.0) + 1.0;
    return (1.0 + u * u + 27.0 * inner * inner / (4.0 * denom * denom)) / 16.0;
}

double a_opt_search(double u, double) {
    require_u(u);
    const PsdWindow win = psd_window(example_basis(u));
    return win.a_at(win.x_exact);
}

namespace {

SweepRow row_at(double u) {
    SweepRow row;
    row.u = u;
    row.a_lb = a_lb(u);
    row.a_ub = a_ub(u);
    row.a_opt_closed = a_opt_closed(u);
    const PsdWindow win = psd_window(example_basis(u));
    row.x_suf = win.x_sufficient;
    row.x_exact = win.x_exact;
    row.a_opt_search = win.a_at(win.x_exact);
    row.gap = row.a_opt_search - row.a_lb;
    return row;
}

}  // namespace

std::vector<SweepRow> sweep(double u_min, double u_max, int steps) {
    if (!(u_min >= 1.0) || !(u_min < u_max))
        throw std::invalid_argument("sweep: need 1 <= u_min < u_max");
    if (steps < 2) throw std::invalid_argument("sweep: need at least 2 steps");

    std::vector<SweepRow> rows(steps);
    const double du = (u_max - u_min) / (steps - 1);
    const int workers = std::min(thread_cap(), steps);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w]() {
            for (int k = w; k < steps; k += workers) rows[k] = row_at(u_min + k * du);
        });
    for (auto& th : pool) th.join();
    return rows;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "u,a_lb,a_ub,a_opt_closed,a_opt_search,x_suf,x_exact,gap\n";
    for (const auto& r : rows)
        out << dtos(r.u) << ',' << dtos(r.a_lb) << ',' << dtos(r.a_ub) << ','
            << dtos(r.a_opt_closed) << ',' << dtos(r.a_opt_search) << ',' << dtos(r.x_suf) << ','
            << dtos(r.x_exact) << ',' << dtos(r.gap) << '\n';
}

}  // namespace symdec
