#pragma once

#include <array>

#include "kawa/mzv.hpp"

namespace kawa {

// Evaluator for the Kawashima function F_k(z):
//  - Newton series with coefficients (-1)^{n-1} s*(k^v, n),
//  - constrained fraction series G_{rev(k^v)}(z) (the default evaluator),
//  - inductive fraction series driven by the difference equation,
//  - exact rational values at nonnegative integers (F_k(N) = S*(k,N)),
//  - Taylor coefficients at z = 0 by the zeta route and by the C_m route.
//
// The empty index is accepted and evaluates to the constant 1.
class KawashimaEvaluator {
public:
    explicit KawashimaEvaluator(Index k) : k_(std::move(k)) {
        if (!k_.empty()) {
            dual_ = hoffman_dual(k_);
            g_subscript_ = reversed(dual_);
            rho_ = dual_.last();
        }
    }

    const Index& index() const { return k_; }
    const Index& dual() const { require_nonempty(); return dual_; }
    const Index& g_subscript() const { require_nonempty(); return g_subscript_; }
    int rho() const { require_nonempty(); return rho_; }

    // F_k(N) = S*(k,N), computed both directly and as the (finite) Newton
    // sum with exact rational binomials; the two must agree.
    Rational eval_at_integer(long N) const {
        if (N < 0) throw std::domain_error("N must be nonnegative");
        if (k_.empty()) return 1;
        if (N == 0) return 0;
        Rational direct = S_star(k_, N);
        auto dual_col = detail::small_sum_column<Rational>(dual_, N, /*weak=*/true);
        Rational newton = 0;
        int sign = 1;
        for (long n = 1; n <= N; ++n) {
            newton += sign * dual_col[static_cast<size_t>(n)] * Rational(binomial(N, n));
            sign = -sign;
        }
        if (newton != direct)
            throw std::logic_error("interpolation mismatch for (" + k_.str() + ") at N=" + std::to_string(N));
        return direct;
    }

    // Newton series, valid on Re(z) > -rho (+ margin).
    template <typename S>
    BasicEvalResult<S> eval_newton(S z, const EvalConfig& cfg) const {
        if (k_.empty()) return constant_one<S>("newton");
        check_half_plane(z, cfg, -rho_);
        cfg.check_guardrails(k_.weight(), cfg.terms);
        const long N = cfg.terms;
        auto coeffs = detail::numeric_sum_column(dual_, N, /*weak=*/true);
        // b_n = (-1)^{n-1} C(z,n), via b_n = b_{n-1} (n-1-z)/n.
        S b(0);
        const double alpha = static_cast<double>(scalar_real(z)) + rho_;
        return detail::sum_series<S>(
            N,
            [&](long n) {
                b = (n == 1) ? z : S(b * (S(n - 1) - z) / S(n));
                return S(b * coeffs[static_cast<size_t>(n)]);
            },
            cfg, alpha, dual_.depth() - 1, "newton");
    }

    // G-series: F_k(z) = G_{rev(k^v)}(z), the nested constrained sum with
    // one 1/(n+z) factor closing each block and the fused factor
    // z/(n(n+z)) at the outermost variable.
    template <typename S>
    BasicEvalResult<S> eval_g_series(S z, const EvalConfig& cfg) const {
        if (k_.empty()) return constant_one<S>("g");
        check_half_plane(z, cfg, -rho_);
        cfg.check_guardrails(k_.weight(), cfg.terms);
        const long N = cfg.terms;
        const int K = g_subscript_.weight();
        const std::set<int> block_ends = K > 1 ? a_set(g_subscript_) : std::set<int>{};
        std::vector<bool> weak(static_cast<size_t>(K - 1), false);
        for (int j : block_ends) weak[static_cast<size_t>(j - 1)] = true;
        auto col = chain_dp<S>(K, weak, N, [&](int j, long n) -> S {
            if (j == K) return z / (S(n) * (S(n) + z));  // fused 1/n - 1/(n+z)
            if (block_ends.count(j)) return S(1) / (S(n) + z);
            return S(1) / S(n);
        });
        return detail::sum_series<S>(
            N, [&](long n) { return col[static_cast<size_t>(n)]; }, cfg,
            /*alpha=*/1.0, /*degree=*/K - 1, "g");
    }

    // Inductive fraction series
    //   F_k(z) = sum_n ( s*(k,n) - F_{k_-}(n+z)/(n+z)^{k_r} ),
    // evaluated bottom-up over the prefixes of k: each level's series gives
    // F_prefix(z), and the difference equation propagates F_prefix(j+z)
    // along integer shifts so the next level has its inner values.
    // Valid on Re(z) > -1.
    template <typename S>
    BasicEvalResult<S> eval_fraction_inductive(S z, const EvalConfig& cfg) const {
        if (k_.empty()) return constant_one<S>("inductive");
        check_half_plane(z, cfg, -1);
        cfg.check_guardrails(k_.weight(), cfg.terms);
        const long N = cfg.terms;
        const int r = k_.depth();
        std::vector<S> shifted(static_cast<size_t>(N) + 1, S(1));  // F_prefix(j+z), prefix = empty
        Real carried_error = 0;
        BasicEvalResult<S> level_result;
        for (int i = 1; i <= r; ++i) {
            const Index prefix(std::vector<int>(k_.parts().begin(), k_.parts().begin() + i));
            const int exp = k_.parts()[static_cast<size_t>(i - 1)];
            auto s_col = detail::numeric_sum_column(prefix, N, /*weak=*/true);
            std::vector<S> ratio(static_cast<size_t>(N) + 1, S(0));
            Real ratio_mass = 0;
            for (long n = 1; n <= N; ++n) {
                S denom(1);
                S base = S(n) + z;
                for (int e = 0; e < exp; ++e) denom *= base;
                ratio[n] = shifted[n] / denom;
                ratio_mass += Real(1) / scalar_abs(denom);
            }
            level_result = detail::sum_series<S>(
                N, [&](long n) { return S(s_col[static_cast<size_t>(n)] - ratio[static_cast<size_t>(n)]); },
                cfg, /*alpha=*/exp, /*degree=*/i - 1, "inductive");
            carried_error = level_result.error_estimate + carried_error * (1 + ratio_mass);
            if (i < r) {
                // Difference equation: F_p(j+z) = F_p(j-1+z) + F_{p_-}(j+z)/(j+z)^{exp}.
                std::vector<S> next(static_cast<size_t>(N) + 1);
                next[0] = level_result.value;
                for (long j = 1; j <= N; ++j) next[j] = next[j - 1] + ratio[static_cast<size_t>(j)];
                shifted = std::move(next);
            }
        }
        level_result.error_estimate = carried_error;
        return level_result;
    }

    // Taylor coefficients at z = 0 via the zeta route: the coefficient of
    // z^m is (-1)^{m-1} zeta( (1,...,1)_m (*) (k^v)^star ).  Returns the
    // exact symbolic argument alongside its numeric value.
    std::vector<std::pair<IndexVector, EvalResult>> taylor_method1(int m_max, MzvEngine& engine) const {
        require_nonempty();
        if (m_max < 1) throw std::domain_error("m_max must be >= 1");
        const IndexVector dual_star = star_expand(IndexVector(dual_));
        std::vector<std::pair<IndexVector, EvalResult>> out;
        out.reserve(static_cast<size_t>(m_max));
        for (int m = 1; m <= m_max; ++m) {
            IndexVector arg = circled_star_product(IndexVector(ones(m)), dual_star);
            EvalResult value = engine.mzv(arg);
            out.emplace_back(std::move(arg), std::move(value));
        }
        return out;
    }

    // Taylor coefficients via the fraction-series route: coefficient
    // magnitude of z^m is C_m(rev(k^v)).
    std::vector<EvalResult> taylor_method3(int m_max, MzvEngine& engine) const {
        require_nonempty();
        if (m_max < 1) throw std::domain_error("m_max must be >= 1");
        std::vector<EvalResult> out;
        out.reserve(static_cast<size_t>(m_max));
        for (int m = 1; m <= m_max; ++m) out.push_back(engine.c_m(g_subscript_, m));
        return out;
    }

private:
    template <typename S>
    static BasicEvalResult<S> constant_one(const char* method) {
        return {S(1), Real(0), method, 0};
    }

    void require_nonempty() const {
        if (k_.empty()) throw std::domain_error("operation undefined for the empty index");
    }

    template <typename S>
    void check_half_plane(const S& z, const EvalConfig& cfg, double boundary) const {
        if (scalar_real(z) <= Real(boundary + cfg.domain_margin))
            throw std::domain_error("Re(z) must exceed " + std::to_string(boundary) +
                                    " (+margin) for (" + k_.str() + "), rho=" + std::to_string(rho_));
    }

    Index k_;
    Index dual_;
    Index g_subscript_;
    int rho_ = 0;
};

namespace detail {

// Bernoulli numbers B_2, B_4, ..., B_30.
inline const std::array<Rational, 15>& bernoulli_even() {
    static const std::array<Rational, 15> b = {
        Rational(1, 6),
        Rational(-1, 30),
        Rational(1, 42),
        Rational(-1, 30),
        Rational(5, 66),
        Rational(-691, 2730),
        Rational(7, 6),
        Rational(-3617, 510),
        Rational(BigInt(43867), BigInt(798)),
        Rational(BigInt(-174611), BigInt(330)),
        Rational(BigInt(854513), BigInt(138)),
        Rational(BigInt(-236364091), BigInt(2730)),
        Rational(BigInt(8553103), BigInt(6)),
        Rational(BigInt("-23749461029"), BigInt(870)),
        Rational(BigInt("8615841276005"), BigInt(14322)),
    };
    return b;
}

}  // namespace detail

// Reference polygamma psi^(m)(x) for real x > 0: upward recurrence to a
// large argument, then the asymptotic series with Bernoulli coefficients.
inline EvalResult polygamma_reference(int m, const Real& x, const EvalConfig& cfg = {}) {
    if (m < 0) throw std::domain_error("polygamma order must be nonnegative");
    if (!(x > 0)) throw std::domain_error("polygamma argument must be positive");
    (void)cfg;
    const int target = 40;
    long K = 0;
    if (x < target) K = static_cast<long>(static_cast<double>(Real(target) - x)) + 1;
    const Real w = x + K;

    Real mfact = 1;
    for (int i = 2; i <= m; ++i) mfact *= i;

    Real series;
    Real last_term = 0;
    if (m == 0) {
        series = log(w) - 1 / (2 * w);
        Real w2 = w * w;
        Real wpow = w2;
        for (size_t n = 1; n <= detail::bernoulli_even().size(); ++n) {
            Real term = to_real(detail::bernoulli_even()[n - 1]) / (Real(2 * n) * wpow);
            series -= term;
            last_term = abs(term);
            wpow *= w2;
        }
    } else {
        Real wm = pow(w, m);
        Real mm1fact = mfact / m;  // (m-1)!
        series = mm1fact / wm + mfact / (2 * wm * w);
        Real wpow = wm * w * w;
        for (size_t n = 1; n <= detail::bernoulli_even().size(); ++n) {
            // (2n+m-1)!/(2n)!
            Real num = 1;
            for (long i = 2 * static_cast<long>(n) + 1; i <= 2 * static_cast<long>(n) + m - 1; ++i) num *= i;
            Real term = to_real(detail::bernoulli_even()[n - 1]) * num / wpow;
            series += term;
            last_term = abs(term);
            wpow *= w * w;
        }
        if (m % 2 == 0) series = -series;  // overall sign (-1)^{m-1}
    }

    // Downward recurrence: psi^(m)(x) = psi^(m)(w) - sum_{j=0}^{K-1} (-1)^m m! / (x+j)^{m+1}.
    Real correction = 0;
    for (long j = 0; j < K; ++j) correction += 1 / pow(x + j, m + 1);
    Real sign = (m % 2 == 0) ? Real(1) : Real(-1);
    Real value = series - sign * mfact * correction;
    return {value, 4 * last_term + abs(value) * Real("1e-45"), "polygamma", K};
}

inline Real euler_gamma() {
    static const Real g = -polygamma_reference(0, Real(1)).value;
    return g;
}

}  // namespace kawa
