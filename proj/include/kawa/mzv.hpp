#pragma once

#include <map>

#include "kawa/chain_dp.hpp"
#include "kawa/eval.hpp"
#include "kawa/harmonic_sums.hpp"
#include "kawa/index_vector.hpp"

namespace kawa {

namespace detail {

// Numeric analogue of small_sum_column (values as Real).
inline std::vector<Real> numeric_sum_column(const Index& k, long N, bool weak) {
    return small_sum_column<Real>(k, N, weak);
}

}  // namespace detail

// Truncation + extrapolation evaluation of multiple zeta values, the
// constrained sums zeta_k(l), and the Taylor coefficient sums C_m(k).
// Per-index results are cached, so repeated symbolic reductions that touch
// the same indices stay cheap.
class MzvEngine {
public:
    explicit MzvEngine(EvalConfig cfg = {}) : cfg_(std::move(cfg)) { cfg_.validate(); }

    const EvalConfig& config() const { return cfg_; }

    // zeta(k) for a single admissible index; zeta(empty) = 1 exactly.
    EvalResult mzv(const Index& k) {
        if (k.empty()) return exact_one("mzv");
        if (!is_admissible(k))
            throw std::domain_error("divergent term: index (" + k.str() + ") is not admissible");
        if (auto it = cache_.find(k); it != cache_.end()) return it->second;
        cfg_.check_guardrails(k.weight(), cfg_.terms);
        const auto& parts = k.parts();
        std::vector<bool> strict(static_cast<size_t>(k.depth() - 1), false);
        // s(k,n) column, then the series S(k,N) -> zeta(k).
        auto col = chain_dp<Real>(k.depth(), strict, cfg_.terms, [&](int j, long n) {
            return Real(1) / detail::int_power<Real>(n, parts[j - 1]);
        });
        auto result = detail::sum_series<Real>(
            cfg_.terms, [&](long n) { return col[static_cast<size_t>(n)]; }, cfg_,
            /*alpha=*/k.last() - 1, /*degree=*/k.depth() - 1, "mzv");
        cache_.emplace(k, result);
        return result;
    }

    EvalResult mzv(const IndexVector& v) { return combine(v, "mzv", [&](const Index& k) { return mzv(k); }); }

    // zeta*(v) = zeta(star_expand(v)); admissibility is required of v itself.
    EvalResult mzsv(const IndexVector& v) {
        for (const auto& [k, c] : v.terms())
            if (!is_admissible(k))
                throw std::domain_error("divergent term: index (" + k.str() + ") is not admissible");
        IndexVector expandable, out_const;
        Rational const_part = 0;
        for (const auto& [k, c] : v.terms()) {
            if (k.empty())
                const_part += c;
            else
                expandable.add_term(k, c);
        }
        EvalResult r = expandable.is_zero()
                           ? exact_one("mzsv")
                           : mzv(star_expand(expandable));
        if (expandable.is_zero()) r.value = 0, r.error_estimate = 0;
        r.value += to_real(const_part);
        r.method = "mzsv";
        return r;
    }

    // zeta_k(l): the sum of 1/(n_1^{l_1}...n_K^{l_K}) over chains constrained
    // by A(k), where K = wt(k) and depth(l) = K.
    EvalResult zeta_k_constrained(const Index& k, const Index& l) {
        if (k.empty()) throw std::domain_error("zeta_k requires a nonempty constraint index");
        if (l.depth() != k.weight())
            throw std::domain_error("exponent index must have depth equal to wt(k)");
        if (l.last() < 2) throw std::domain_error("divergent: last exponent must be >= 2");
        if (auto it = zk_cache_.find({k, l}); it != zk_cache_.end()) return it->second;
        cfg_.check_guardrails(l.weight(), cfg_.terms);
        const int K = k.weight();
        std::vector<bool> weak(static_cast<size_t>(K - 1), false);
        for (int j : a_set(k))
            if (j < K) weak[static_cast<size_t>(j - 1)] = true;
        const auto& exps = l.parts();
        auto col = chain_dp<Real>(K, weak, cfg_.terms, [&](int j, long n) {
            return Real(1) / detail::int_power<Real>(n, exps[j - 1]);
        });
        auto result = detail::sum_series<Real>(
            cfg_.terms, [&](long n) { return col[static_cast<size_t>(n)]; }, cfg_,
            /*alpha=*/l.last() - 1, /*degree=*/K - 1, "zeta_k");
        zk_cache_.emplace(std::make_pair(k, l), result);
        return result;
    }

    // C_m(k): sum of zeta_k over all compositions (l_1,...,l_r) of m with
    // l_i >= 0 and l_r >= 1, with exponent pattern
    // (1,...,1 [k_i - 1 times], l_i + 1) per block.
    EvalResult c_m(const Index& k, int m) {
        if (k.empty()) throw std::domain_error("C_m requires a nonempty index");
        if (m < 1) throw std::domain_error("C_m requires m >= 1");
        EvalResult out{Real(0), Real(0), "c_m", 0};
        const int r = k.depth();
        std::vector<int> comp(static_cast<size_t>(r), 0);
        enumerate_compositions(comp, 0, m, [&](const std::vector<int>& l) {
            std::vector<int> exps;
            for (int i = 0; i < r; ++i) {
                exps.insert(exps.end(), static_cast<size_t>(k.parts()[i] - 1), 1);
                exps.push_back(l[static_cast<size_t>(i)] + 1);
            }
            EvalResult term = zeta_k_constrained(k, Index(std::move(exps)));
            out.value += term.value;
            out.error_estimate += term.error_estimate;
            out.terms_used = std::max(out.terms_used, term.terms_used);
        });
        return out;
    }

private:
    static EvalResult exact_one(const char* method) { return {Real(1), Real(0), method, 0}; }

    template <typename Fn>
    EvalResult combine(const IndexVector& v, const char* method, Fn&& per_index) {
        EvalResult out{Real(0), Real(0), method, 0};
        for (const auto& [k, c] : v.terms()) {
            EvalResult r = per_index(k);
            Real coef = to_real(c);
            out.value += coef * r.value;
            out.error_estimate += abs(coef) * r.error_estimate;
            out.terms_used = std::max(out.terms_used, r.terms_used);
        }
        return out;
    }

    // Calls fn for each filling of comp with nonnegative parts summing to
    // remaining, last part >= 1.
    template <typename Fn>
    static void enumerate_compositions(std::vector<int>& comp, size_t pos, int remaining, Fn&& fn) {
        if (pos + 1 == comp.size()) {
            if (remaining >= 1) {
                comp[pos] = remaining;
                fn(comp);
            }
            return;
        }
        for (int v = 0; v <= remaining - 1; ++v) {
            comp[pos] = v;
            enumerate_compositions(comp, pos + 1, remaining - v, fn);
        }
    }

    EvalConfig cfg_;
    std::map<Index, EvalResult> cache_;
    std::map<std::pair<Index, Index>, EvalResult> zk_cache_;
};

// Free-function forms for one-shot use.
inline EvalResult mzv(const IndexVector& v, const EvalConfig& cfg = {}) {
    MzvEngine engine(cfg);
    return engine.mzv(v);
}

inline EvalResult mzsv(const IndexVector& v, const EvalConfig& cfg = {}) {
    MzvEngine engine(cfg);
    return engine.mzsv(v);
}

inline EvalResult zeta_k_constrained(const Index& k, const Index& l, const EvalConfig& cfg = {}) {
    MzvEngine engine(cfg);
    return engine.zeta_k_constrained(k, l);
}

inline EvalResult c_m(const Index& k, int m, const EvalConfig& cfg = {}) {
    MzvEngine engine(cfg);
    return engine.c_m(k, m);
}

}  // namespace kawa
