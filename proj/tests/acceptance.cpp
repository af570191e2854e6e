// Acceptance suite: one line per criterion, nonzero exit when any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "symdec/bounds.hpp"
#include "symdec/cli.hpp"
#include "symdec/construct.hpp"
#include "symdec/dual.hpp"
#include "symdec/example_d2.hpp"
#include "symdec/family.hpp"
#include "symdec/json_io.hpp"
#include "symdec/welch.hpp"

using namespace symdec;
using nlohmann::json;

namespace {

struct Criterion {
    int failures = 0;
    std::string first_failure;

    void check(bool ok, const std::string& what) {
        if (ok) return;
        ++failures;
        if (first_failure.empty()) first_failure = what;
    }
    void close(double value, double expected, double tol, const std::string& what) {
        std::ostringstream msg;
        msg << what << ": " << value << " vs " << expected << " (tol " << tol << ")";
        check(std::abs(value - expected) <= tol, msg.str());
    }
};

HermitianMatrix random_hermitian_local(int d, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    HermitianMatrix m(d);
    for (int r = 0; r < d; ++r) {
        m.set_sym(r, r, gauss(rng));
        for (int c = r + 1; c < d; ++c)
            m.set_sym(r, c, cplx(gauss(rng), gauss(rng)) / std::sqrt(2.0));
    }
    return m;
}

HermitianMatrix random_pd(int d, std::mt19937_64& rng) {
    const HermitianMatrix h = random_hermitian_local(d, rng);
    Spectrum s = eig_sa(h);
    for (double& v : s.eigenvalues) v = v * v + 0.1;
    return reconstruct(s);
}

HermitianMatrix random_unit_psd_local(int d, std::mt19937_64& rng) {
    const HermitianMatrix h = random_hermitian_local(d, rng);
    Spectrum s = eig_sa(h);
    for (double& v : s.eigenvalues) v = v * v;
    HermitianMatrix p = reconstruct(s);
    return (1.0 / hs_norm(p)) * p;
}

// --- criterion 1: SIC reproduction through the CLI surface --------------

void criterion_1(Criterion& c) {
    std::ostringstream out, err;
    const int code = run({"construct", "--T", "identity:2", "--N", "4", "--x-mode", "exact"},
                         out, err);
    c.check(code == 0, "construct exit code " + std::to_string(code) + " " + err.str());
    if (code != 0) return;

    const json j = json::parse(out.str());
    c.close(j.at("window").at("x_exact").get<double>(), std::sqrt(2.0) / 4.0, 1e-9, "x_exact");
    c.close(j.at("a").get<double>(), 0.25, 1e-9, "a");

    const FamilyFile file = family_from_json(j.at("family"));
    c.check(file.members.size() == 4, "family size");
    for (const auto& m : file.members) {
        const Spectrum s = eig_sa(m);
        c.check(s.eigenvalues.back() >= -1e-9, "member PSD");
        c.check(std::abs(s.eigenvalues[1]) <= 1e-9, "member rank one");
        c.close(m.trace(), 0.5, 1e-9, "member trace");
    }
}

// --- criterion 2: bound chain for T = I_d, N = d^2 ----------------------

void criterion_2(Criterion& c) {
    for (int d = 2; d <= 6; ++d) {
        const auto rep = a_bounds(HermitianMatrix::identity(d), d * d);
        const double dd = d;
        c.close(rep.a_lower, 1.0 / (dd * dd * dd), 1e-12, "a_lower d=" + std::to_string(d));
        c.check(rep.a_upper_psd.has_value(), "a_upper_psd missing");
        if (rep.a_upper_psd)
            c.close(*rep.a_upper_psd, 1.0 / (dd * dd), 1e-12, "a_upper_psd d=" + std::to_string(d));
    }
}

// --- criterion 3: example sweep over u in [1,3] --------------------------

void criterion_3(Criterion& c) {
    const auto rows = sweep(1.0, 3.0, 201);
    c.check(rows.size() == 201, "row count");
    const double gap_cap = 0.00491403 + 1e-6;
    double max_gap = 0.0;
    for (const auto& r : rows) {
        c.close(r.a_lb, a_lb(r.u), 1e-12, "a_lb column u=" + std::to_string(r.u));
        c.close(r.a_ub, a_ub(r.u), 1e-12, "a_ub column u=" + std::to_string(r.u));
        c.close(r.a_opt_search, r.a_opt_closed, 1e-7, "a_opt u=" + std::to_string(r.u));
        if (r.u >= 1.01)
            c.check(r.a_ub - r.a_lb > 1e-6, "bounds not separated at u=" + std::to_string(r.u));
        max_gap = std::max(max_gap, r.gap);
        c.check(r.gap >= -1e-9, "negative gap at u=" + std::to_string(r.u));
    }
    c.check(std::abs(rows.front().a_lb - rows.front().a_ub) <= 1e-12, "equality at u=1");
    c.check(max_gap <= gap_cap, "max gap " + std::to_string(max_gap));
}

// --- criterion 4: closed-form eigenvalues of the example R operators ----

void criterion_4(Criterion& c) {
    for (int k = 0; k < 100; ++k) {
        const double u = 1.0 + 9.0 * k / 99.0;
        const auto basis = example_basis(u);
        const auto l12 = r12_eigenvalues(u);
        const auto l3 = r3_eigenvalues(u);
        const auto l4 = r4_eigenvalues(u);
        for (int i : {0, 1}) {
            c.close(basis.rho[i], l12[0], 1e-9, "rho R12");
            c.close(-basis.mu[i], l12[1], 1e-9, "mu R12");
        }
        c.close(basis.rho[2], l3[0], 1e-9, "rho R3");
        c.close(-basis.mu[2], l3[1], 1e-9, "mu R3");
        c.close(basis.rho[3], l4[0], 1e-9, "rho R4");
        c.close(-basis.mu[3], l4[1], 1e-9, "mu R4");
    }
}

// --- criterion 5: phi oracle ---------------------------------------------

void criterion_5(Criterion& c) {
    std::mt19937_64 rng(20240515u);
    std::uniform_real_distribution<double> unif(0.2, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        const int d = 2 + trial % 5;  // up to 6
        std::vector<double> b(d);
        for (double& v : b) v = unif(rng);
        const double closed = phi_closed_form(b);
        const auto res = phi_oracle(b, 1000, 1000 + trial);
        c.close(res.value, closed, 1e-7, "oracle value trial " + std::to_string(trial));
        c.check(res.mc_violations == 0,
                "MC beat the closed form on trial " + std::to_string(trial));
        c.check(res.mc_min_lambda_max >= closed - 1e-9, "MC minimum below closed form");
    }
}

// --- criterion 6: duality suite ------------------------------------------

void criterion_6(Criterion& c) {
    std::mt19937_64 rng(606u);
    std::uniform_real_distribution<double> unif(0.05, 0.5);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = 2 + trial % 3;
        const auto t = random_pd(d, rng);
        const int n = 2 + trial % (d * d - 1);
        const auto fam = build_family(build_basis(t, n, trial), unif(rng));

        const auto dual = dual_family(fam);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                c.check(std::abs(hs_inner(fam.members[i], dual.members[j]) -
                                 (i == j ? 1.0 : 0.0)) <= 1e-9,
                        "biorthogonality trial " + std::to_string(trial));

        const auto hat = normalized_dual(fam, t);
        c.check(verify_decomposition(hat, t).residual <= 1e-8 * (1.0 + hs_norm(t)),
                "normalized dual decomposition");
        const auto back = normalized_dual(hat, t);
        for (int i = 0; i < n; ++i)
            c.check(hs_norm(back.members[i] - fam.members[i]) <= 1e-8 * (1.0 + fam.a_fit),
                    "double dual roundtrip");
    }

    const auto sic =
        build_family(build_basis(HermitianMatrix::identity(2), 4), std::sqrt(2.0) / 4.0);
    const auto dual = dual_family(sic);
    c.close(dual.a_fit, 5.0, 1e-9, "SIC a_tilde");
    c.close(dual.b_fit, -1.0, 1e-9, "SIC b_tilde");
    const auto hat = normalized_dual(sic, HermitianMatrix::identity(2));
    c.close(hat.a_fit, 1.25, 1e-9, "SIC a_hat");
}

// --- criterion 7: Welch property suite ------------------------------------

void criterion_7(Criterion& c) {
    std::mt19937_64 rng(707u);
    std::uniform_real_distribution<double> unif(0.6, 1.4);
    for (int trial = 0; trial < 500; ++trial) {
        const int d = 2 + trial % 3;  // up to 4
        const int n = std::max(d, 2) + trial % (10 - d + 1);
        std::vector<HermitianMatrix> members;
        for (int k = 0; k < n; ++k) members.push_back(random_unit_psd_local(d, rng));

        std::vector<double> v(n);
        for (double& x : v) x = unif(rng);
        WeightVector w(v);
        while (w.coefficient() < d) {  // flatten until the Holder precondition holds
            for (double& x : v) x = 1.0 + 0.5 * (x - 1.0);
            w = WeightVector(v);
        }

        c.check(simplex_bound(members).slack >= -1e-9, "simplex slack trial " + std::to_string(trial));
        c.check(weighted_welch(members, w).slack >= -1e-9,
                "weighted slack trial " + std::to_string(trial));
        c.check(holder_welch(members, w, 2.0).slack >= -1e-9,
                "holder slack trial " + std::to_string(trial));
    }

    const auto sic =
        build_family(build_basis(HermitianMatrix::identity(2), 4), std::sqrt(2.0) / 4.0);
    std::vector<HermitianMatrix> rescaled;
    for (const auto& m : sic.members) rescaled.push_back(2.0 * m);
    const auto w4 = WeightVector::ones(4);

    c.check(simplex_bound(rescaled).equality, "SIC simplex equality");
    c.check(weighted_welch(rescaled, w4).equality, "SIC weighted equality");
    const auto holder = holder_welch(rescaled, w4, 2.0);
    c.check(holder.equality, "SIC holder equality");
    c.close(holder.rhs, 4.0 / 3.0, 1e-12, "SIC holder bound value");
    c.check(min_angle_bound(rescaled, w4).equality, "SIC min-angle equality");
}

// --- criterion 8: construction invariants ---------------------------------

void criterion_8(Criterion& c) {
    std::mt19937_64 rng(808u);
    std::uniform_real_distribution<double> unif(0.05, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const int d = 2 + trial % 5;
        const HermitianMatrix t =
            trial % 4 == 0 ? random_hermitian_local(d, rng) : random_pd(d, rng);
        const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(d * d - 1));
        const auto basis = build_basis(t, n, trial % 2 ? std::optional<std::uint64_t>(trial)
                                                       : std::nullopt);
        const double scale = 1.0 + hs_norm(t);

        HermitianMatrix r_sum(d);
        for (const auto& r : basis.R) r_sum += r;
        c.check(hs_norm(r_sum) <= 1e-9 * scale, "sum R_i != 0 trial " + std::to_string(trial));

        for (int i = 0; i < n; ++i) {
            c.check(std::abs(hs_norm(basis.R[i]) - 1.0) <= 1e-9, "||R_i|| != 1");
            c.check(std::abs(hs_inner(basis.R[i], t)) <= 1e-9 * scale, "<R_i,T> != 0");
            for (int j = i + 1; j < n; ++j)
                c.check(std::abs(hs_inner(basis.R[i], basis.R[j]) + 1.0 / (n - 1)) <= 1e-9,
                        "<R_i,R_j> != -1/(N-1)");
        }

        const auto v = v_matrix(n);
        for (int i = 0; i < n - 1; ++i)
            for (int j = 0; j < n - 1; ++j) {
                double dot = 0.0;
                for (int r = 0; r < n; ++r) dot += v[r][i] * v[r][j];
                const double expected = i == j ? n / (n - 1.0) : 0.0;
                c.check(std::abs(dot - expected) <= 1e-9, "V^T V identity");
            }

        const double x = unif(rng);
        const auto fam = build_family(basis, x);
        for (const auto& m : fam.members)
            c.check(std::abs(hs_norm(m - (1.0 / n) * t) - x) <= 1e-9, "x roundtrip");
    }
}

// --- criterion 9: structural checks from the general-decomposition laws ---

void criterion_9(Criterion& c) {
    std::mt19937_64 rng(909u);

    // projection characterization, both directions
    const auto sic =
        build_family(build_basis(HermitianMatrix::identity(2), 4), std::sqrt(2.0) / 4.0);
    const auto pos = check_projection_characterization(sic, HermitianMatrix::identity(2));
    c.check(pos.is_projection && pos.absorb_dev <= 1e-8, "projection forward direction");

    const auto p3 = HermitianMatrix::diagonal({1.0, 1.0, 0.0});
    const auto split = check_projection_characterization(fit_parameters({0.5 * p3, 0.5 * p3}), p3);
    c.check(split.is_projection && split.absorb_dev <= 1e-8, "rank-2 projection split");

    const auto t12 = HermitianMatrix::diagonal({1.0, 2.0});
    const auto basis12 = build_basis(t12, 4);
    const auto fam12 = build_family(basis12, psd_window(basis12).x_sufficient);
    const auto neg = check_projection_characterization(fam12, t12);
    c.check(!neg.is_projection && neg.absorb_dev > 1e-8, "projection reverse direction");

    // rank-one targets force degenerate decompositions
    std::uniform_real_distribution<double> unif(0.1, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = 2 + trial % 3;
        std::vector<cplx> vec(d);
        for (auto& x : vec) x = cplx(gauss(rng), gauss(rng));
        HermitianMatrix rank1(d);
        for (int r = 0; r < d; ++r)
            for (int col = r; col < d; ++col) rank1.set_sym(r, col, vec[r] * std::conj(vec[col]));

        std::vector<double> w = {unif(rng), unif(rng), unif(rng)};
        const double w_sum = w[0] + w[1] + w[2];
        std::vector<HermitianMatrix> members;
        for (double wi : w) members.push_back((wi / w_sum) * rank1);

        const auto fam = fit_parameters(members);
        const auto rep = verify_decomposition(fam, rank1);
        c.check(rep.degenerate, "rank-one decomposition not flagged degenerate");
        if (rep.degenerate_weights) {
            double total = 0.0;
            for (double wi : *rep.degenerate_weights) total += wi;
            c.close(total, 1.0, 1e-10, "degenerate weights sum");
        }
        const auto forced = check_rank_one_T(fam, rank1);
        c.check(forced.ok, "rank-one weights not recovered");
    }

    // local decomposition checker on exact decompositions
    for (int trial = 0; trial < 20; ++trial) {
        const int d = 2 + trial % 3;
        const auto t = random_pd(d, rng);
        const int n = 2 + trial % (d * d - 1);
        const auto fam = build_family(build_basis(t, n, trial), 0.1);
        std::vector<std::vector<cplx>> samples;
        for (int k = 0; k < d + 2; ++k) {
            std::vector<cplx> x(d);
            for (auto& v : x) v = cplx(gauss(rng), gauss(rng));
            samples.push_back(std::move(x));
        }
        const auto rep = check_local_decomposition(fam.members, t, samples);
        c.check(std::abs(rep.beta - cplx(1.0, 0.0)) <= 1e-8,
                "beta != 1 on an exact decomposition");
    }
}

struct Entry {
    int number;
    const char* label;
    double budget_seconds;
    std::function<void(Criterion&)> body;
};

}  // namespace

int main() {
    const std::vector<Entry> entries = {
        {1, "SIC reproduction through the CLI", 1.0, criterion_1},
        {2, "bound chain a in [d^-3, d^-2] for T = I_d, N = d^2", 1.0, criterion_2},
        {3, "example sweep over u in [1,3], 201 points", 30.0, criterion_3},
        {4, "closed-form R spectra on 100 grid points", 5.0, criterion_4},
        {5, "phi oracle vs closed form, 50 spectra x 1000 samples", 60.0, criterion_5},
        {6, "duality suite", 5.0, criterion_6},
        {7, "Welch property suite, 500 families", 60.0, criterion_7},
        {8, "construction invariants, 200 instances", 30.0, criterion_8},
        {9, "structural checks (projection, rank-one, locality)", 5.0, criterion_9},
    };

    int failed = 0;
    for (const auto& entry : entries) {
        Criterion c;
        const auto start = std::chrono::steady_clock::now();
        try {
            entry.body(c);
        } catch (const std::exception& e) {
            c.check(false, std::string("exception: ") + e.what());
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        c.check(elapsed < entry.budget_seconds,
                "runtime " + std::to_string(elapsed) + " s exceeded budget");

        if (c.failures == 0) {
            std::printf("PASS  criterion %d  (%.2f s)  %s\n", entry.number, elapsed, entry.label);
        } else {
            ++failed;
            std::printf("FAIL  criterion %d  (%.2f s)  %s  [%d checks failed; first: %s]\n",
                        entry.number, elapsed, entry.label, c.failures,
                        c.first_failure.c_str());
        }
    }
    if (failed > 0) std::printf("%d criterion(s) failed\n", failed);
    return failed == 0 ? 0 : 1;
}
