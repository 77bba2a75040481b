#pragma once

#include <map>
#include <utility>

#include <nlohmann/json.hpp>

#include "kawa/index.hpp"
#include "kawa/numeric.hpp"

namespace kawa {

// A finite formal Q-linear combination of indices.  Terms are kept in
// canonical order (lexicographic by parts) and zero coefficients are never
// stored.
class IndexVector {
public:
    using Terms = std::map<Index, Rational>;

    IndexVector() = default;
    IndexVector(const Index& k) { terms_[k] = 1; }  // NOLINT: implicit on purpose
    IndexVector(const Index& k, Rational coef) {
        if (coef != 0) terms_[k] = std::move(coef);
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add_term(const Index& k, const Rational& coef) {
        if (coef == 0) return;
        auto [it, inserted] = terms_.try_emplace(k, coef);
        if (!inserted) {
            it->second += coef;
            if (it->second == 0) terms_.erase(it);
        }
    }

    IndexVector& operator+=(const IndexVector& other) {
        for (const auto& [k, c] : other.terms_) add_term(k, c);
        return *this;
    }
    IndexVector& operator-=(const IndexVector& other) {
        for (const auto& [k, c] : other.terms_) add_term(k, -c);
        return *this;
    }
    IndexVector& operator*=(const Rational& scalar) {
        if (scalar == 0) {
            terms_.clear();
        } else {
            for (auto& [k, c] : terms_) c *= scalar;
        }
        return *this;
    }

    friend IndexVector operator+(IndexVector a, const IndexVector& b) { return a += b; }
    friend IndexVector operator-(IndexVector a, const IndexVector& b) { return a -= b; }
    friend IndexVector operator*(const Rational& s, IndexVector v) { return v *= s; }

    bool operator==(const IndexVector&) const = default;

    // Plain-text rendering, e.g. "2(1,1)-1(2)"; "0" for the zero vector.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first && c > 0) out += '+';
            first = false;
            if (denominator(c) == 1) {
                if (c == -1)
                    out += '-';
                else if (c != 1)
                    out += numerator(c).str();
            } else {
                out += rational_str(c);
                out += ' ';
            }
            out += '(' + k.str() + ')';
        }
        return out;
    }

    nlohmann::json to_json() const {
        auto arr = nlohmann::json::array();
        for (const auto& [k, c] : terms_) {
            arr.push_back({{"coef", rational_str(c)}, {"index", k.parts()}});
        }
        return arr;
    }

    static IndexVector from_json(const nlohmann::json& arr) {
        IndexVector v;
        for (const auto& term : arr) {
            std::vector<int> parts = term.at("index").get<std::vector<int>>();
            v.add_term(Index(std::move(parts)), parse_rational(term.at("coef").get<std::string>()));
        }
        return v;
    }

private:
    Terms terms_;
};

namespace detail {

inline void require_nonempty_support(const IndexVector& v, const char* op) {
    for (const auto& [k, c] : v.terms())
        if (k.empty())
            throw std::domain_error(std::string(op) + " requires nonempty indices in the support");
}

}  // namespace detail

// The star operator: (k_1,...,k_r)^* is the sum over all groupings of
// adjacent parts, each grouping summed into a shorter index (2^{r-1} terms
// for a depth-r index).  Extended linearly.
inline IndexVector star_expand(const IndexVector& v) {
    detail::require_nonempty_support(v, "star operator");
    IndexVector out;
    for (const auto& [k, c] : v.terms()) {
        const auto& parts = k.parts();
        const int r = k.depth();
        // Bit i of mask set <=> a split between parts i and i+1.
        for (unsigned mask = 0; mask < (1u << (r - 1)); ++mask) {
            std::vector<int> grouped;
            int run = parts[0];
            for (int i = 1; i < r; ++i) {
                if (mask & (1u << (i - 1))) {
                    grouped.push_back(run);
                    run = parts[i];
                } else {
                    run += parts[i];
                }
            }
            grouped.push_back(run);
            out.add_term(Index(std::move(grouped)), c);
        }
    }
    return out;
}

namespace detail {

// Quasi-shuffle recursion shared by * (fused_sign = +1) and *-bar
// (fused_sign = -1):
//   k * l = (k_- * l, k_r) + (k * l_-, l_s) + sign (k_- * l_-, k_r + l_s),
// with the empty index as the unit.  Memoized per top-level call; the
// recursion revisits sub-products exponentially often otherwise.
class HarmonicProduct {
public:
    explicit HarmonicProduct(int fused_sign) : sign_(fused_sign) {}

    IndexVector product(const Index& a, const Index& b) {
        if (a.empty()) return IndexVector(b);
        if (b.empty()) return IndexVector(a);
        auto key = std::make_pair(std::min(a, b), std::max(a, b));
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const Index am = a.dropped_last();
        const Index bm = b.dropped_last();
        IndexVector out = appended(product(am, b), a.last());
        out += appended(product(a, bm), b.last());
        IndexVector fused = appended(product(am, bm), a.last() + b.last());
        if (sign_ > 0)
            out += fused;
        else
            out -= fused;
        return memo_[key] = out;
    }

    static IndexVector appended(const IndexVector& v, int part) {
        IndexVector out;
        for (const auto& [k, c] : v.terms()) out.add_term(k.appended(part), c);
        return out;
    }

private:
    int sign_;
    std::map<std::pair<Index, Index>, IndexVector> memo_;
};

template <typename PairProduct>
IndexVector bilinear(const IndexVector& v, const IndexVector& w, PairProduct&& prod) {
    IndexVector out;
    for (const auto& [a, ca] : v.terms())
        for (const auto& [b, cb] : w.terms()) {
            IndexVector p = prod(a, b);
            p *= ca * cb;
            out += p;
        }
    return out;
}

}  // namespace detail

// The harmonic product *.
inline IndexVector harmonic_product(const IndexVector& v, const IndexVector& w) {
    detail::HarmonicProduct hp(+1);
    return detail::bilinear(v, w, [&](const Index& a, const Index& b) { return hp.product(a, b); });
}

// The harmonic product *-bar (fused term negated).
inline IndexVector harmonic_bar_product(const IndexVector& v, const IndexVector& w) {
    detail::HarmonicProduct hp(-1);
    return detail::bilinear(v, w, [&](const Index& a, const Index& b) { return hp.product(a, b); });
}

// The circled-star product: k (*) l = (k_- * l_-, k_r + l_s).  Defined only
// on combinations of nonempty indices.
inline IndexVector circled_star_product(const IndexVector& v, const IndexVector& w) {
    detail::require_nonempty_support(v, "circled-star product");
    detail::require_nonempty_support(w, "circled-star product");
    detail::HarmonicProduct hp(+1);
    return detail::bilinear(v, w, [&](const Index& a, const Index& b) {
        IndexVector rem = hp.product(a.dropped_last(), b.dropped_last());
        return detail::HarmonicProduct::appended(rem, a.last() + b.last());
    });
}

// Hoffman dual extended linearly.
inline IndexVector hoffman_dual(const IndexVector& v) {
    IndexVector out;
    for (const auto& [k, c] : v.terms()) out.add_term(hoffman_dual(k), c);
    return out;
}

// The index (1,...,1) of depth m.
inline Index ones(int m) {
    return Index(std::vector<int>(static_cast<size_t>(m), 1));
}

}  // namespace kawa
