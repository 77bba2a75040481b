#pragma once

#include <ostream>

#include "kawa/chain_dp.hpp"
#include "kawa/index_vector.hpp"
#include "kawa/numeric.hpp"

namespace kawa {

namespace detail {

template <typename T>
T int_power(long n, int e) {
    T base(n);
    T out(1);
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

// One column of s(k,n) (or s*(k,n) when weak) for n = 1..N, exact or numeric
// depending on T.
template <typename T>
std::vector<T> small_sum_column(const Index& k, long N, bool weak) {
    if (k.empty()) throw std::domain_error("harmonic sum of the empty index");
    std::vector<bool> steps(static_cast<size_t>(k.depth() - 1), weak);
    const auto& parts = k.parts();
    return chain_dp<T>(k.depth(), steps, N,
                       [&](int j, long n) { return T(1) / int_power<T>(n, parts[j - 1]); });
}

}  // namespace detail

// Exact values of the four finite multiple harmonic sums for one index, for
// every n <= N.  Columns are immutable after construction.
class SumTable {
public:
    SumTable(Index k, long N) : k_(std::move(k)), N_(N) {
        if (N < 0) throw std::domain_error("negative bound N");
        s_ = detail::small_sum_column<Rational>(k_, N, /*weak=*/false);
        s_star_ = detail::small_sum_column<Rational>(k_, N, /*weak=*/true);
        S_ = prefix(s_);
        S_star_ = prefix(s_star_);
    }

    const Index& index() const { return k_; }
    long bound() const { return N_; }

    const Rational& s(long n) const { return at(s_, n); }
    const Rational& s_star(long n) const { return at(s_star_, n); }
    const Rational& S(long n) const { return at(S_, n); }
    const Rational& S_star(long n) const { return at(S_star_, n); }

    // CSV with exact p/q entries; columns n, s, s_star, S, S_star.
    void write_csv(std::ostream& os) const {
        os << "n,s,s_star,S,S_star\n";
        for (long n = 1; n <= N_; ++n)
            os << n << ',' << rational_str(s_[n]) << ',' << rational_str(s_star_[n]) << ','
               << rational_str(S_[n]) << ',' << rational_str(S_star_[n]) << '\n';
    }

private:
    static std::vector<Rational> prefix(const std::vector<Rational>& col) {
        std::vector<Rational> out(col.size());
        Rational acc = 0;
        for (size_t n = 1; n < col.size(); ++n) {
            acc += col[n];
            out[n] = acc;
        }
        return out;
    }

    const Rational& at(const std::vector<Rational>& col, long n) const {
        if (n < 0 || n > N_) throw std::domain_error("n out of table range");
        static const Rational zero = 0;
        return n == 0 ? zero : col[static_cast<size_t>(n)];
    }

    Index k_;
    long N_;
    std::vector<Rational> s_, s_star_, S_, S_star_;
};

// Point evaluations.  s and s_star require a nonempty index; S and S_star of
// the empty index are 1 by convention (empty product over an empty chain).
inline Rational s(const Index& k, long N) {
    if (N < 0) throw std::domain_error("negative N");
    if (k.empty()) throw std::domain_error("s(k,N) requires a nonempty index");
    if (N == 0 || N < k.depth()) return 0;
    return detail::small_sum_column<Rational>(k, N, false)[static_cast<size_t>(N)];
}

inline Rational s_star(const Index& k, long N) {
    if (N < 0) throw std::domain_error("negative N");
    if (k.empty()) throw std::domain_error("s*(k,N) requires a nonempty index");
    if (N == 0) return 0;
    return detail::small_sum_column<Rational>(k, N, true)[static_cast<size_t>(N)];
}

inline Rational S(const Index& k, long N) {
    if (N < 0) throw std::domain_error("negative N");
    if (k.empty()) return 1;
    Rational acc = 0;
    auto col = detail::small_sum_column<Rational>(k, N, false);
    for (long n = 1; n <= N; ++n) acc += col[n];
    return acc;
}

inline Rational S_star(const Index& k, long N) {
    if (N < 0) throw std::domain_error("negative N");
    if (k.empty()) return 1;
    Rational acc = 0;
    auto col = detail::small_sum_column<Rational>(k, N, true);
    for (long n = 1; n <= N; ++n) acc += col[n];
    return acc;
}

// Linear extensions: coefficient-weighted sums of per-index values.
namespace detail {

template <typename Fn>
Rational linear_over(const IndexVector& v, Fn&& per_index) {
    Rational acc = 0;
    for (const auto& [k, c] : v.terms()) acc += c * per_index(k);
    return acc;
}

}  // namespace detail

inline Rational s_linear(const IndexVector& v, long N) {
    return detail::linear_over(v, [N](const Index& k) { return s(k, N); });
}
inline Rational s_star_linear(const IndexVector& v, long N) {
    return detail::linear_over(v, [N](const Index& k) { return s_star(k, N); });
}
inline Rational S_linear(const IndexVector& v, long N) {
    return detail::linear_over(v, [N](const Index& k) { return S(k, N); });
}
inline Rational S_star_linear(const IndexVector& v, long N) {
    return detail::linear_over(v, [N](const Index& k) { return S_star(k, N); });
}

}  // namespace kawa
