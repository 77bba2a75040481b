#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kawa {

// A finite sequence of positive integers (k_1,...,k_r).  The empty sequence
// is the empty index.  Immutable after construction.
class Index {
public:
    Index() = default;

    explicit Index(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1) throw std::domain_error("index parts must be positive");
    }

    Index(std::initializer_list<int> parts) : Index(std::vector<int>(parts)) {}

    // Parses a comma-separated list of positive integers; the empty string
    // (or all-whitespace) denotes the empty index.  Whitespace around commas
    // is tolerated.
    static Index parse(std::string_view text) {
        std::vector<int> parts;
        size_t pos = 0, field = 0;
        auto trim = [](std::string_view v) {
            while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
            while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
            return v;
        };
        if (trim(text).empty()) return Index{};
        while (true) {
            ++field;
            size_t comma = text.find(',', pos);
            std::string_view tok = trim(text.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
            int value = 0;
            if (tok.empty()) throw std::invalid_argument("empty part at position " + std::to_string(field));
            for (char c : tok) {
                if (c < '0' || c > '9')
                    throw std::invalid_argument("non-integer part at position " + std::to_string(field));
                value = value * 10 + (c - '0');
                if (value > 1'000'000) throw std::invalid_argument("part too large at position " + std::to_string(field));
            }
            if (value == 0) throw std::invalid_argument("zero part at position " + std::to_string(field));
            parts.push_back(value);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        return Index(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int depth() const { return static_cast<int>(parts_.size()); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    int last() const {
        require_nonempty("last part");
        return parts_.back();
    }

    // k_- : the index with the last part removed.
    Index dropped_last() const {
        require_nonempty("k_-");
        return Index(std::vector<int>(parts_.begin(), parts_.end() - 1));
    }

    Index appended(int part) const {
        std::vector<int> p = parts_;
        p.push_back(part);
        return Index(std::move(p));
    }

    std::string str() const {
        std::string out;
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    auto operator<=>(const Index&) const = default;

private:
    void require_nonempty(const char* what) const {
        if (parts_.empty()) throw std::domain_error(std::string(what) + " undefined for the empty index");
    }

    std::vector<int> parts_;
};

// A(k) = {k_1, k_1+k_2, ..., k_1+...+k_{r-1}}, the proper partial sums.
inline std::set<int> a_set(const Index& k) {
    if (k.empty()) throw std::domain_error("A(k) undefined for the empty index");
    std::set<int> out;
    int acc = 0;
    for (size_t i = 0; i + 1 < k.parts().size(); ++i) {
        acc += k.parts()[i];
        out.insert(acc);
    }
    return out;
}

// Word encoding of an index: total weight plus the bits delta(1..k-1),
// where delta(j) = 1 exactly when j lies in A(k).
struct IndexWord {
    int weight = 0;
    std::vector<bool> deltas;  // positions 1..weight-1
};

inline IndexWord to_word(const Index& k) {
    if (k.empty()) throw std::domain_error("word encoding undefined for the empty index");
    IndexWord w;
    w.weight = k.weight();
    w.deltas.assign(std::max(w.weight - 1, 0), false);
    for (int j : a_set(k)) w.deltas[j - 1] = true;
    return w;
}

inline Index from_word(const IndexWord& w) {
    if (w.weight < 1) throw std::domain_error("word weight must be positive");
    std::vector<int> parts;
    int run = 1;
    for (int j = 1; j < w.weight; ++j) {
        if (w.deltas[j - 1]) {
            parts.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    parts.push_back(run);
    return Index(std::move(parts));
}

// Hoffman dual: the unique index of the same weight whose A-set is the
// complement of A(k) in {1,...,wt(k)-1}.
inline Index hoffman_dual(const Index& k) {
    IndexWord w = to_word(k);
    w.deltas.flip();
    return from_word(w);
}

inline Index reversed(const Index& k) {
    std::vector<int> p(k.parts().rbegin(), k.parts().rend());
    return Index(std::move(p));
}

// Admissible: empty, or last part > 1.  Exactly the indices whose MZV
// converges.
inline bool is_admissible(const Index& k) {
    return k.empty() || k.last() > 1;
}

// rho(k): the last component of the Hoffman dual; the Newton series for F_k
// converges on Re(z) > -rho.
inline int abscissa_rho(const Index& k) {
    return hoffman_dual(k).last();
}

// Closed form for rho: write k = (k_1,...,k_q,1,...,1) with l trailing ones
// and k_q > 1 (or q = 0); then rho = l+1 if q >= 1, and rho = l if q = 0.
inline int abscissa_rho_closed_form(const Index& k) {
    if (k.empty()) throw std::domain_error("rho undefined for the empty index");
    int l = 0;
    for (auto it = k.parts().rbegin(); it != k.parts().rend() && *it == 1; ++it) ++l;
    int q = k.depth() - l;
    return q >= 1 ? l + 1 : l;
}

}  // namespace kawa
