#pragma once
/**
 * @file verify.hpp
 * @brief Invariant suites behind `horiesz verify`: one Report per named
 * identity, each a max residual over the configured index range.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "horiesz/core.hpp"
#include "horiesz/ops.hpp"
#include "horiesz/polys.hpp"
#include "horiesz/report.hpp"
#include "horiesz/riesz.hpp"
#include "horiesz/sequence.hpp"
#include "horiesz/transform.hpp"

namespace horiesz {

struct VerifyConfig {
    double k = 1.0;
    int nmax = 20;
    int window = 128;
    int grid_nodes = 8192;
    double t = 0.5;
    std::uint64_t seed = 42;
};

namespace detail {

/// Gaussian complex entries on [lo, hi]; the stream depends only on (seed, tag).
inline Sequence seeded_sequence(std::uint64_t seed, std::uint32_t tag, int lo, int hi) {
    std::seed_seq ss{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), tag};
    std::mt19937_64 rng(ss);
    std::normal_distribution<double> d;
    Sequence f = Sequence::zeros(lo, hi);
    for (int n = lo; n <= hi; ++n) {
        const double re = d(rng);
        f.at(n) = cplx(re, d(rng));
    }
    return f;
}

inline double sup_abs(const Sequence& s) {
    double m = 0.0;
    for (const auto& x : s.values()) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace detail

/// Orthonormality, oracle agreement, eigen-relations, ladder identities and norms.
inline std::vector<Report> verify_polys(double k, int nmax) {
    std::vector<Report> out;
    const Basis b(k, nmax + 1);
    const cplx I(0.0, 1.0);

    double gram = 0.0;
    for (int n = -nmax; n <= nmax; ++n) {
        const TrigPoly en = b.orthonormal(n).cast<cplx>();
        for (int m = -nmax; m <= nmax; ++m) {
            const cplx g = inner_product_exact(en, b.orthonormal(m).cast<cplx>(), k);
            gram = std::max(gram, std::abs(g - (n == m ? 1.0 : 0.0)));
        }
    }
    out.push_back(make_report("orthonormality", "(E_n, E_m)_k = delta_nm", k, nmax, gram, 1e-10));

    const int ng = std::min(nmax, 64);
    const auto gs = gram_schmidt_oracle(ng, k);
    double gs_err = 0.0, min_coeff = 0.0;
    for (int n = -ng; n <= ng; ++n) {
        const auto& g = gs[static_cast<std::size_t>(n + ng)];
        gs_err = std::max(gs_err, max_coeff_diff(g, b.monic(n).cast<cplx>()));
        for (const auto& c : g.coeffs()) min_coeff = std::min(min_coeff, c.real());
    }
    for (int n = -nmax; n <= nmax; ++n) {
        const RealTrigPoly e = b.monic(n);
        for (double c : e.coeffs()) min_coeff = std::min(min_coeff, c);
    }
    out.push_back(make_report("gram_schmidt_agreement", "defining orthogonality conditions", k, ng, gs_err, 1e-9));
    out.push_back(make_report("coefficient_nonnegativity", "c_{n,j} >= 0", k, nmax, std::max(0.0, -min_coeff), 1e-12));

    double cher = 0.0;
    for (int n = -nmax; n <= nmax; ++n) {
        const TrigPoly e = b.orthonormal(n).cast<cplx>();
        cher = std::max(cher, max_coeff_diff(cherednik_apply(e, k), I * (tilde(n, k) + k) * e));
    }
    out.push_back(make_report("cherednik_eigenvalue", "T E_n = i(n~ + k) E_n", k, nmax, cher, 1e-12));

    // Absolute residual; the finite-difference error grows like n^6 P_n(x), so x stays small.
    double lk = 0.0;
    const int nl = std::min(nmax, 10);
    for (int n = 0; n <= nl; ++n)
        for (double x : {0.1, 0.25, 0.4}) lk = std::max(lk, lk_eigen_check(n, k, x));
    out.push_back(make_report("lk_eigen_residual", "L_k P_n = (n+k)^2 P_n", k, nl, lk, 1e-5));

    double shift = 0.0, refl = 0.0, inv = 0.0, ladder = 0.0, norm_cf = 0.0, norm_ip = 0.0;
    for (int n = 1; n <= nmax; ++n) {
        const RealTrigPoly en = b.monic(n), emn = b.monic(-n);
        shift = std::max(shift, max_coeff_diff(b.monic(n + 1), emn.reflected().shifted(1)));
        const double c = k / (n + k);
        refl = std::max(refl, max_coeff_diff(emn, en.reflected() + c * en));
        inv = std::max(inv, max_coeff_diff((1.0 - c * c) * en, emn.reflected() - c * emn));
    }
    for (int n = -nmax; n <= nmax; ++n) {
        const auto lc = ladder_coeffs(n, k);
        ladder = std::max(ladder, max_coeff_diff(b.orthonormal(n + 1).shifted(-1),
                                                 lc.alpha * b.orthonormal(n) + lc.beta * b.orthonormal(-n)));
        const double cf = norm_sq_closed_form(n >= 1 ? n - 1 : -n, k);
        norm_cf = std::max(norm_cf, std::abs(norm_sq(n, k) / cf - 1.0));
        const TrigPoly e = b.monic(n).cast<cplx>();
        norm_ip = std::max(norm_ip, std::abs(inner_product_exact(e, e, k).real() - norm_sq(n, k)));
    }
    out.push_back(make_report("shift_reflection_identity", "E_{n+1}(x) = e^x E_{-n}(-x)", k, nmax, shift, 1e-12));
    out.push_back(make_report("reflection_identity", "E_{-n}(x) = E_n(-x) + k/(n+k) E_n(x)", k, nmax, refl, 1e-12));
    out.push_back(make_report("inverse_reflection_identity",
                              "(1 - k^2/(n+k)^2) E_n(x) = E_{-n}(-x) - k/(n+k) E_{-n}(x)", k, nmax, inv, 1e-12));
    out.push_back(make_report("ladder_identity", "e^{-ix} E_{n+1} = alpha_n E_n + beta_n E_{-n}", k, nmax, ladder, 1e-12));
    out.push_back(make_report("norm_closed_form", "||E_n||^2 gamma-ratio formula", k, nmax, norm_cf, 1e-12));
    out.push_back(make_report("norm_vs_inner_product", "||E_n||^2 = (E_n, E_n)_k", k, nmax, norm_ip, 1e-10));

    if (k > 0.0) {
        double v0 = 0.0, hyp = 0.0, jac = 0.0;
        for (int n = -nmax; n <= nmax; ++n) {
            if (n == 0) continue;
            v0 = std::max(v0, std::abs(b.monic(n).eval(0.0).real() / value_at_zero(n, k) - 1.0));
            for (double x : {-1.0, -0.3, 0.2, 0.9}) {
                const double scale = std::max(1.0, std::abs(b.monic(n).eval_hyperbolic(x)));
                jac = std::max(jac, jacobi_decomposition_check(n, k, x) / scale);
            }
        }
        for (int n = 0; n <= nl; ++n)
            for (double x = -2.0; x <= 2.0; x += 0.5)
                hyp = std::max(hyp, std::abs(eval_P_hypergeometric(n, k, x) / eval_P(n, k, x) - 1.0));
        out.push_back(make_report("value_at_zero", "E_n(0) gamma-ratio formula", k, nmax, v0, 1e-12));
        out.push_back(make_report("hypergeometric_P", "P_n = P_n(0) 2F1(n+2k, -n; k+1/2; -sinh^2(x/2))", k, nl, hyp, 1e-12));
        out.push_back(make_report("jacobi_decomposition", "E_n via P_{|n|}^k and P_{|n|-1}^{k+1}", k, nmax, jac, 1e-12));
    }
    return out;
}

/// Quadrature cross-check, round trip and Plancherel on seeded random data.
inline std::vector<Report> verify_transform(double k, int nmax, int grid_nodes, std::uint64_t seed) {
    std::vector<Report> out;
    const Basis b(k, nmax);

    double quad = 0.0;
    const int qn = std::min(nmax, 5);
    for (int n : {-qn, 0, 1, qn})
        for (int m : {-1, 0, qn}) {
            const TrigPoly en = b.orthonormal(n).cast<cplx>(), em = b.orthonormal(m).cast<cplx>();
            const cplx q = inner_product_quadrature([&](double x) { return en.eval(x); }, [&](double x) { return em.eval(x); },
                                                    k, static_cast<std::size_t>(grid_nodes));
            quad = std::max(quad, std::abs(q - inner_product_exact(en, em, k)));
        }
    out.push_back(make_report("quadrature_agreement", "(f, g)_k weighted inner product", k, qn, quad, 1e-9));

    double rt = 0.0, pl = 0.0;
    for (std::uint32_t trial = 0; trial < 100; ++trial) {
        const int r = 1 + static_cast<int>(trial % static_cast<std::uint32_t>(std::max(nmax, 1)));
        const Sequence f = detail::seeded_sequence(seed, trial, -r, r - static_cast<int>(trial % 2));
        const TrigPoly g = forward(f, b);
        rt = std::max(rt, max_abs_diff(inverse(g, -r, r, b), f));
        pl = std::max(pl, std::abs(inner_product_exact(g, g, k).real() - f.norm2_sq()) / f.norm2_sq());
    }
    out.push_back(make_report("round_trip", "F_k^{-1} F_k = id", k, nmax, rt, 1e-9));
    out.push_back(make_report("plancherel", "||F_k f||_k = ||f||_2", k, nmax, pl, 1e-9));
    return out;
}

/// Difference operators and the heat semigroup.
inline std::vector<Report> verify_ops(double k, int nmax, double t, std::uint64_t seed) {
    std::vector<Report> out;
    const int r = std::max(nmax, 1);
    const Basis b(k, r + 2);
    const TrigPoly lam(-1, {1.0, -1.0}), lam_star(0, {-1.0, 1.0}), lap(-1, {1.0, -2.0, 1.0});

    double comp = 0.0, adj = 0.0, ml = 0.0, mls = 0.0, mlap = 0.0;
    for (std::uint32_t trial = 0; trial < 10; ++trial) {
        const Sequence f = detail::seeded_sequence(seed, 1000 + trial, -r, r);
        const Sequence g = detail::seeded_sequence(seed, 2000 + trial, -r, r);
        Sequence d = laplacian_apply(f, k);
        d += lambda_star_apply(lambda_apply(f, k), k);
        comp = std::max(comp, detail::sup_abs(d));
        adj = std::max(adj, std::abs(l2_inner(lambda_apply(f, k), g) - l2_inner(f, lambda_star_apply(g, k))));
        const TrigPoly ff = forward(f, b);
        ml = std::max(ml, max_coeff_diff(forward(lambda_apply(f, k), b), lam * ff));
        mls = std::max(mls, max_coeff_diff(forward(lambda_star_apply(f, k), b), lam_star * ff));
        mlap = std::max(mlap, max_coeff_diff(forward(laplacian_apply(f, k), b), lap * ff));
    }
    out.push_back(make_report("laplacian_composition", "Delta = -Lambda* Lambda", k, r, comp, 1e-12));
    out.push_back(make_report("lambda_adjointness", "<Lambda f, g> = <f, Lambda* g>", k, r, adj, 1e-12));
    out.push_back(make_report("lambda_multiplier", "F_k(Lambda f) = (e^{-ix} - 1) F_k f", k, r, ml, 1e-10));
    out.push_back(make_report("lambda_star_multiplier", "F_k(Lambda* f) = (e^{ix} - 1) F_k f", k, r, mls, 1e-10));
    out.push_back(make_report("laplacian_multiplier", "F_k(Delta f) = -4 sin^2(x/2) F_k f", k, r, mlap, 1e-10));

    const KernelMatrix h0 = heat_kernel_matrix(0.0, k, 8);
    double id = 0.0;
    for (int n = -8; n <= 8; ++n)
        for (int m = -8; m <= 8; ++m) id = std::max(id, std::abs(h0(n, m) - (n == m ? 1.0 : 0.0)));
    out.push_back(make_report("heat_identity_at_zero", "e^{t Delta} at t = 0", k, 8, id, 1e-10));

    double contraction = 0.0;
    const Sequence f = detail::seeded_sequence(seed, 3000, -6, 6);
    for (double s : {0.1, 1.0, 10.0, t}) {
        const Sequence u = heat_apply(f, s, k, -60, 60);
        contraction = std::max(contraction, u.norm2() / f.norm2() - 1.0);
    }
    out.push_back(make_report("heat_contraction", "||e^{t Delta} f||_2 <= ||f||_2", k, 60, contraction, 1e-12));

    const int L = 4 * static_cast<int>(std::ceil(4.0 * std::sqrt(2.0 * t))) + 20;
    const KernelMatrix ht = heat_kernel_matrix(t, k, L);
    const KernelMatrix h2t = heat_kernel_matrix(2.0 * t, k, 6);
    double semi = 0.0, herm = 0.0;
    for (int n = -6; n <= 6; ++n)
        for (int m = -6; m <= 6; ++m) {
            cplx acc = 0.0;
            for (int l = -L; l <= L; ++l) acc += ht(n, l) * ht(l, m);
            semi = std::max(semi, std::abs(acc - h2t(n, m)));
            herm = std::max(herm, std::abs(ht(n, m) - std::conj(ht(m, n))));
        }
    out.push_back(make_report("heat_semigroup", "e^{t Delta} e^{t Delta} = e^{2t Delta}", k, L, semi, 1e-6));
    out.push_back(make_report("heat_hermitian", "H_t(n,m) = conj H_t(m,n)", k, 6, herm, 1e-10));

    if (k == 0.0) {
        const double tb = std::min(t, 2.0);
        const KernelMatrix hb = heat_kernel_matrix(tb, 0.0, 10);
        double bes = 0.0;
        for (int n = -10; n <= 10; ++n)
            for (int m = -10; m <= 10; ++m) {
                const double oracle = std::exp(-2.0 * tb) * std::cyl_bessel_i(static_cast<double>(std::abs(n - m)), 2.0 * tb);
                bes = std::max(bes, std::abs(hb(n, m) - oracle));
            }
        out.push_back(make_report("heat_bessel_classical", "H_t(n,m) = e^{-2t} I_{|n-m|}(2t)", k, 10, bes, 1e-8));
    }
    return out;
}

/// Riesz kernels, the kernel identity, splits and Hardy operators.
inline std::vector<Report> verify_riesz(double k, int nmax, int window, std::uint64_t seed) {
    std::vector<Report> out;
    const int r = std::clamp(nmax, 1, 30);
    const int w = std::max(window, r);

    const KernelMatrix pair = riesz_kernel_matrix_pairing(k, r);
    const KernelMatrix pair_star = riesz_kernel_matrix_pairing(k, r, true);
    const KernelMatrix rec = riesz_kernel_matrix(k, r);
    double star = 0.0, recur = 0.0;
    for (int n = -r; n <= r; ++n)
        for (int m = -r; m <= r; ++m) {
            star = std::max(star, std::abs(pair_star(n, m) - std::conj(pair(m, n))));
            recur = std::max(recur, std::abs(rec(n, m) - pair(n, m)));
        }
    out.push_back(make_report("riesz_star_adjoint", "R*(n,m) = conj R(m,n)", k, r, star, 1e-10));
    out.push_back(make_report("riesz_recurrence_vs_pairing", "R(n,m) = (R e_m)(n)", k, r, recur, 1e-10));

    double sq = 0.0;
    for (int n : {-3, 0, 2})
        for (int m : {-2, 1, 4}) {
            const cplx q = riesz_kernel_signed_quadrature(n, m, k);
            sq = std::max(sq, std::abs(q - riesz_kernel(n, m, k)));
        }
    out.push_back(make_report("riesz_signed_integral", "(1/2pi i) int sign(x) e^{-ix/2} E_m conj(E_n) delta_k", k, 4, sq, 1e-10));

    const int fr = std::min(r, 10);
    const Sequence f = detail::seeded_sequence(seed, 4000, -fr, fr);
    const Sequence rf = riesz_apply(f, k, -w, w);
    const KernelBlock blk = riesz_kernel_block(k, w, fr);
    double mk = 0.0;
    for (int n = -w; n <= w; ++n) {
        cplx s = 0.0;
        for (int m = -fr; m <= fr; ++m) s += blk(n, m) * f[m];
        mk = std::max(mk, std::abs(s - rf[n]));
    }
    out.push_back(make_report("riesz_multiplier_vs_kernel", "Rf(n) = sum_m R(n,m) f(m)", k, w, mk, 1e-8));

    double iso = 0.0;
    for (std::uint32_t trial = 0; trial < 3; ++trial) {
        const NormRatio nr = riesz_norm_ratio(detail::seeded_sequence(seed, 5000 + trial, -fr, fr), k);
        iso = std::max(iso, nr.converged ? std::abs(nr.ratio - 1.0) : std::numeric_limits<double>::infinity());
    }
    out.push_back(make_report("riesz_isometry", "||Rf||_2 = ||f||_2", k, fr, iso, 1e-9));

    if (k == 0.0) {
        const KernelBlock cb = riesz_kernel_block(0.0, 100, 100);
        double cl = 0.0;
        for (int n = -100; n <= 100; ++n)
            for (int m = -100; m <= 100; ++m) cl = std::max(cl, std::abs(cb(n, m) - riesz_kernel_classical(n, m)));
        out.push_back(make_report("riesz_classical_closed_form", "R(n,m) = 1/(pi(m-n-1/2))", k, 100, cl, 1e-10));
    } else {
        const LemmaChecker lc(k, r);
        double lem = 0.0;
        for (int n = -r; n <= r; ++n)
            for (int m = -r; m <= r; ++m) lem = std::max(lem, lc.residual(n, m));
        out.push_back(make_report("kernel_identity", "(m~ - n~ - 1/2) R(n,m) = (2k/pi) sum c c J", k, r, lem, lemma_tolerance(k)));

        double cross = 0.0;
        for (int n : {-2, 0, 3})
            for (int m : {-1, 2}) {
                const cplx c = cross_identity_constant(n, m, k);
                cross = std::max(cross, std::abs(c - cplx(0.0, -2.0 * std::numbers::pi)));
            }
        out.push_back(make_report("cross_identity_constant", "int h E_m E_n delta_k = -2 pi i conj R(n, 1-m)", k, 3, cross, 1e-8));
    }

    const auto lg = local_global_split(f, k, -w, w);
    double split = 0.0;
    for (int n = -w; n <= w; ++n) split = std::max(split, std::abs(lg.local[n] + lg.global[n] - rf[n]));
    out.push_back(make_report("local_global_split", "T = T_loc + T_glob", k, w, split, 1e-9));

    std::seed_seq ss{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), 6000u};
    std::mt19937_64 rng(ss);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> a(10000);
    for (auto& x : a) x = u(rng);
    const auto h = hardy_h0(a);
    double na = 0.0, nh = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        na += a[i] * a[i];
        nh += h[i] * h[i];
    }
    out.push_back(make_report("hardy_h0_l2_ratio", "||H_0 a||_2 <= 2 ||a||_2", k, 10000, std::sqrt(nh / na), 2.01));
    return out;
}

inline std::vector<Report> run_verify(const VerifyConfig& cfg) {
    std::vector<Report> out = verify_polys(cfg.k, cfg.nmax);
    for (auto&& part : {verify_transform(cfg.k, cfg.nmax, cfg.grid_nodes, cfg.seed), verify_ops(cfg.k, cfg.nmax, cfg.t, cfg.seed),
                        verify_riesz(cfg.k, cfg.nmax, cfg.window, cfg.seed)})
        out.insert(out.end(), part.begin(), part.end());
    return out;
}

inline bool all_pass(const std::vector<Report>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.pass; });
}

}  // namespace horiesz
