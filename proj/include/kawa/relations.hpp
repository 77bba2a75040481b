#pragma once

#include <random>

#include "kawa/kawashima.hpp"

namespace kawa {

// One verified identity instance: exact checks carry rational sides and a
// zero bound; numeric checks carry decimal sides and the pass bound
// max(tolerance, 4 x combined error estimates).
struct CheckReport {
    std::string name;
    std::string params;
    bool exact = false;
    std::string lhs, rhs, residual;
    Real residual_abs{};
    Real bound{};
    bool pass = false;

    nlohmann::json to_json() const {
        return {{"check", name},     {"params", params},
                {"kind", exact ? "exact" : "numeric"},
                {"lhs", lhs},        {"rhs", rhs},
                {"residual", residual}, {"bound", real_str(bound)},
                {"verdict", pass ? "pass" : "fail"}};
    }

    std::string line() const {
        std::string out = pass ? "pass  " : "FAIL  ";
        out += name;
        if (!params.empty()) out += " [" + params + "]";
        out += "  residual=" + residual;
        if (!exact) out += "  bound=" + real_str(bound);
        return out;
    }
};

namespace detail {

inline CheckReport exact_report(std::string name, std::string params, const Rational& lhs,
                                const Rational& rhs) {
    CheckReport r;
    r.name = std::move(name);
    r.params = std::move(params);
    r.exact = true;
    r.lhs = rational_str(lhs);
    r.rhs = rational_str(rhs);
    Rational res = lhs - rhs;
    r.residual = rational_str(res);
    r.residual_abs = abs(to_real(res));
    r.bound = 0;
    r.pass = (res == 0);
    return r;
}

inline CheckReport numeric_report(std::string name, std::string params, const Real& lhs,
                                  const Real& rhs, const Real& combined_error,
                                  const EvalConfig& cfg) {
    CheckReport r;
    r.name = std::move(name);
    r.params = std::move(params);
    r.exact = false;
    r.lhs = real_str(lhs);
    r.rhs = real_str(rhs);
    Real res = lhs - rhs;
    r.residual = real_str(res);
    r.residual_abs = abs(res);
    r.bound = std::max(cfg.tolerance, 4 * combined_error);
    r.pass = r.residual_abs < r.bound;
    return r;
}

}  // namespace detail

// All nonempty indices of the given weight (one per subset of split points).
inline std::vector<Index> indices_of_weight(int w) {
    if (w < 1) return {};
    std::vector<Index> out;
    IndexWord word;
    word.weight = w;
    for (unsigned mask = 0; mask < (1u << (w - 1)); ++mask) {
        word.deltas.assign(static_cast<size_t>(w - 1), false);
        for (int j = 0; j < w - 1; ++j)
            if (mask & (1u << j)) word.deltas[static_cast<size_t>(j)] = true;
        out.push_back(from_word(word));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Index> indices_up_to_weight(int max_w) {
    std::vector<Index> out;
    for (int w = 1; w <= max_w; ++w) {
        auto part = indices_of_weight(w);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

// F(v, z) extended linearly over an IndexVector, using the default
// (G-series) evaluator.
inline EvalResult f_linear(const IndexVector& v, const Real& z, const EvalConfig& cfg) {
    EvalResult out{Real(0), Real(0), "g", 0};
    for (const auto& [k, c] : v.terms()) {
        auto r = KawashimaEvaluator(k).eval_g_series(z, cfg);
        Real coef = to_real(c);
        out.value += coef * r.value;
        out.error_estimate += abs(coef) * r.error_estimate;
        out.terms_used = std::max(out.terms_used, r.terms_used);
    }
    return out;
}

// --- Exact suites -----------------------------------------------------------

// Hoffman duality: both
//   s*(k,N)  = sum_n (-1)^{n-1} s*(k^v,n) C(N-1,n-1)
//   S*(k,N)  = sum_n (-1)^{n-1} s*(k^v,n) C(N,n)
// as exact rational identities.
inline std::vector<CheckReport> check_hoffman_duality(int max_weight, long max_N) {
    if (max_weight < 1 || max_N < 1) throw std::domain_error("bounds must be >= 1");
    std::vector<CheckReport> out;
    for (const Index& k : indices_up_to_weight(max_weight)) {
        const Index dual = hoffman_dual(k);
        auto col = detail::small_sum_column<Rational>(k, max_N, /*weak=*/true);
        auto dual_col = detail::small_sum_column<Rational>(dual, max_N, /*weak=*/true);
        Rational S_lhs = 0;
        for (long N = 1; N <= max_N; ++N) {
            S_lhs += col[static_cast<size_t>(N)];
            Rational rhs_s = 0, rhs_S = 0;
            int sign = 1;
            for (long n = 1; n <= N; ++n) {
                rhs_s += sign * dual_col[static_cast<size_t>(n)] * Rational(binomial(N - 1, n - 1));
                rhs_S += sign * dual_col[static_cast<size_t>(n)] * Rational(binomial(N, n));
                sign = -sign;
            }
            std::string params = "k=(" + k.str() + "),N=" + std::to_string(N);
            out.push_back(detail::exact_report("hoffman_duality_s", params, col[static_cast<size_t>(N)], rhs_s));
            out.push_back(detail::exact_report("hoffman_duality_S", params, S_lhs, rhs_S));
        }
    }
    return out;
}

// Interpolation: the finite Newton sum equals S*(k,N) exactly.
inline std::vector<CheckReport> check_interpolation(int max_weight, long max_N) {
    if (max_weight < 1 || max_N < 0) throw std::domain_error("bad bounds");
    std::vector<CheckReport> out;
    for (const Index& k : indices_up_to_weight(max_weight)) {
        const Index dual = hoffman_dual(k);
        auto col = detail::small_sum_column<Rational>(k, max_N, /*weak=*/true);
        auto dual_col = detail::small_sum_column<Rational>(dual, max_N, /*weak=*/true);
        Rational S_star_N = 0;
        for (long N = 0; N <= max_N; ++N) {
            if (N > 0) S_star_N += col[static_cast<size_t>(N)];
            Rational newton = 0;
            int sign = 1;
            for (long n = 1; n <= N; ++n) {
                newton += sign * dual_col[static_cast<size_t>(n)] * Rational(binomial(N, n));
                sign = -sign;
            }
            out.push_back(detail::exact_report(
                "interpolation", "k=(" + k.str() + "),N=" + std::to_string(N), newton, S_star_N));
        }
    }
    return out;
}

// Random IndexVector for the product-rule suite: 1-2 terms, small rational
// coefficients, nonempty indices of weight <= max_weight.
inline IndexVector random_index_vector(std::mt19937& rng, int max_weight) {
    std::uniform_int_distribution<int> term_count(1, 2);
    std::uniform_int_distribution<int> coef_num(-3, 3);
    std::uniform_int_distribution<int> coef_den(1, 2);
    IndexVector v;
    int terms = term_count(rng);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> parts;
        int budget = std::uniform_int_distribution<int>(1, max_weight)(rng);
        while (budget > 0) {
            int p = std::uniform_int_distribution<int>(1, budget)(rng);
            parts.push_back(p);
            budget -= p;
        }
        int num = coef_num(rng);
        if (num == 0) num = 1;
        v.add_term(Index(std::move(parts)), Rational(num, coef_den(rng)));
    }
    if (v.is_zero()) v.add_term(Index{1}, 1);
    return v;
}

// Product rules, exact:
//   s(v,N)s(w,N) = s(v (*) w, N),
//   S(v,N)S(w,N) = S(v * w, N),
//   S*(v,N)S*(w,N) = S*(v *bar w, N).
inline std::vector<CheckReport> check_product_rules(int pairs, int max_weight, long N,
                                                    unsigned seed = 20160901) {
    std::mt19937 rng(seed);
    std::vector<CheckReport> out;
    for (int i = 0; i < pairs; ++i) {
        IndexVector v = random_index_vector(rng, max_weight);
        IndexVector w = random_index_vector(rng, max_weight);
        std::string params = "v=" + v.str() + ",w=" + w.str() + ",N=" + std::to_string(N);
        out.push_back(detail::exact_report("product_rule_s", params, s_linear(v, N) * s_linear(w, N),
                                           s_linear(circled_star_product(v, w), N)));
        out.push_back(detail::exact_report("product_rule_S", params, S_linear(v, N) * S_linear(w, N),
                                           S_linear(harmonic_product(v, w), N)));
        out.push_back(detail::exact_report("product_rule_S_star", params,
                                           S_star_linear(v, N) * S_star_linear(w, N),
                                           S_star_linear(harmonic_bar_product(v, w), N)));
    }
    return out;
}

// Dual involution and the closed form for rho.
inline std::vector<CheckReport> check_involution_and_rho(int max_weight) {
    std::vector<CheckReport> out;
    for (const Index& k : indices_up_to_weight(max_weight)) {
        const Index dd = hoffman_dual(hoffman_dual(k));
        CheckReport inv;
        inv.name = "dual_involution";
        inv.params = "k=(" + k.str() + ")";
        inv.exact = true;
        inv.lhs = "(" + dd.str() + ")";
        inv.rhs = "(" + k.str() + ")";
        inv.pass = (dd == k);
        inv.residual = inv.pass ? "0/1" : "1/1";
        inv.residual_abs = inv.pass ? 0 : 1;
        out.push_back(std::move(inv));
        out.push_back(detail::exact_report("abscissa_rho", "k=(" + k.str() + ")",
                                           Rational(abscissa_rho(k)),
                                           Rational(abscissa_rho_closed_form(k))));
    }
    return out;
}

// --- Numeric checks ---------------------------------------------------------

// Harmonic relation F_k(z) F_l(z) = F_{k *bar l}(z).
inline CheckReport check_harmonic_relation(const Index& k, const Index& l, const Real& z,
                                           const EvalConfig& cfg) {
    auto fk = KawashimaEvaluator(k).eval_g_series(z, cfg);
    auto fl = KawashimaEvaluator(l).eval_g_series(z, cfg);
    auto rhs = f_linear(harmonic_bar_product(IndexVector(k), IndexVector(l)), z, cfg);
    Real lhs = fk.value * fl.value;
    Real combined = abs(fk.value) * fl.error_estimate + abs(fl.value) * fk.error_estimate +
                    rhs.error_estimate;
    return detail::numeric_report("harmonic_relation",
                                  "k=(" + k.str() + "),l=(" + l.str() + "),z=" + real_str(z), lhs,
                                  rhs.value, combined, cfg);
}

// Exact version of the harmonic relation at integer z = N:
//   S*(k,N) S*(l,N) = S*(k *bar l, N).
inline CheckReport check_harmonic_relation_exact(const Index& k, const Index& l, long N) {
    Rational lhs = S_star(k, N) * S_star(l, N);
    Rational rhs = S_star_linear(harmonic_bar_product(IndexVector(k), IndexVector(l)), N);
    return detail::exact_report("harmonic_relation_exact",
                                "k=(" + k.str() + "),l=(" + l.str() + "),N=" + std::to_string(N),
                                lhs, rhs);
}

// Kawashima's relation at order m:
//   sum_{p+q=m} zeta(1^p (*) (k^v)^star) zeta(1^q (*) (l^v)^star)
//     = -zeta(1^m (*) ((k *bar l)^v)^star).
inline CheckReport check_kawashima_relation(const Index& k, const Index& l, int m,
                                            MzvEngine& engine) {
    if (k.empty() || l.empty()) throw std::domain_error("k and l must be nonempty");
    if (m < 1) throw std::domain_error("m must be >= 1");
    const EvalConfig& cfg = engine.config();
    const IndexVector k_star = star_expand(IndexVector(hoffman_dual(k)));
    const IndexVector l_star = star_expand(IndexVector(hoffman_dual(l)));
    Real lhs = 0, lhs_err = 0;
    for (int p = 1; p <= m - 1; ++p) {
        int q = m - p;
        auto a = engine.mzv(circled_star_product(IndexVector(ones(p)), k_star));
        auto b = engine.mzv(circled_star_product(IndexVector(ones(q)), l_star));
        lhs += a.value * b.value;
        lhs_err += abs(a.value) * b.error_estimate + abs(b.value) * a.error_estimate;
    }
    IndexVector bar = harmonic_bar_product(IndexVector(k), IndexVector(l));
    IndexVector rhs_arg = circled_star_product(IndexVector(ones(m)), star_expand(hoffman_dual(bar)));
    auto rhs_val = engine.mzv(rhs_arg);
    return detail::numeric_report(
        "kawashima_relation",
        "k=(" + k.str() + "),l=(" + l.str() + "),m=" + std::to_string(m), lhs, -rhs_val.value,
        lhs_err + rhs_val.error_estimate, cfg);
}

// Taylor coefficient identity, zeta route vs C_m route, at order m.
inline CheckReport check_taylor_identity(const Index& k, int m, MzvEngine& engine) {
    KawashimaEvaluator ev(k);
    auto m1 = ev.taylor_method1(m, engine);
    auto m3 = ev.taylor_method3(m, engine);
    const auto& a = m1.back().second;
    const auto& b = m3.back();
    return detail::numeric_report("taylor_identity", "k=(" + k.str() + "),m=" + std::to_string(m),
                                  a.value, b.value, a.error_estimate + b.error_estimate,
                                  engine.config());
}

// Difference equation F_k(z) - F_k(z-1) = F_{k_-}(z)/z^{k_r}, numeric.
inline CheckReport check_difference_equation(const Index& k, const Real& z, const EvalConfig& cfg) {
    if (k.empty()) throw std::domain_error("k must be nonempty");
    if (z == 0) throw std::domain_error("z=0 is a pole of the right side");
    KawashimaEvaluator ev(k);
    auto fz = ev.eval_g_series(z, cfg);
    auto fzm1 = ev.eval_g_series(z - 1, cfg);
    auto tail = KawashimaEvaluator(k.dropped_last()).eval_g_series(z, cfg);
    Real zr = pow(z, k.last());
    Real lhs = fz.value - fzm1.value;
    Real rhs = tail.value / zr;
    Real combined = fz.error_estimate + fzm1.error_estimate + tail.error_estimate / abs(zr);
    return detail::numeric_report("difference_equation", "k=(" + k.str() + "),z=" + real_str(z),
                                  lhs, rhs, combined, cfg);
}

// Exact difference equation at integer z = N:
//   S*(k,N) - S*(k,N-1) = S*(k_-,N)/N^{k_r}.
inline CheckReport check_difference_equation_exact(const Index& k, long N) {
    if (k.empty()) throw std::domain_error("k must be nonempty");
    if (N < 1) throw std::domain_error("N must be >= 1");
    Rational lhs = S_star(k, N) - S_star(k, N - 1);
    Rational rhs = S_star(k.dropped_last(), N) / detail::int_power<Rational>(N, k.last());
    return detail::exact_report("difference_equation_exact",
                                "k=(" + k.str() + "),N=" + std::to_string(N), lhs, rhs);
}

// Polygamma bridge F_{m+1}(z) = ((-1)^m/m!) psi^(m)(z+1) + zeta(m+1), with
// gamma standing in for zeta(1) when m = 0.
inline CheckReport check_polygamma(int m, const Real& z, const EvalConfig& cfg) {
    if (m < 0) throw std::domain_error("m must be >= 0");
    KawashimaEvaluator ev(Index{m + 1});
    auto f = ev.eval_g_series(z, cfg);
    auto psi = polygamma_reference(m, z + 1, cfg);
    Real mfact = 1;
    for (int i = 2; i <= m; ++i) mfact *= i;
    Real sign = (m % 2 == 0) ? Real(1) : Real(-1);
    Real zeta_term;
    Real zeta_err = 0;
    if (m == 0) {
        zeta_term = euler_gamma();
    } else {
        MzvEngine engine(cfg);
        auto zr = engine.mzv(Index{m + 1});
        zeta_term = zr.value;
        zeta_err = zr.error_estimate;
    }
    Real rhs = sign / mfact * psi.value + zeta_term;
    Real combined = f.error_estimate + psi.error_estimate / mfact + zeta_err;
    return detail::numeric_report("polygamma_bridge", "m=" + std::to_string(m) + ",z=" + real_str(z),
                                  f.value, rhs, combined, cfg);
}

inline bool all_pass(const std::vector<CheckReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.pass; });
}

}  // namespace kawa
