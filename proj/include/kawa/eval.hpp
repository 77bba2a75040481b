#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kawa/numeric.hpp"

namespace kawa {

// Settings for truncated-series evaluation.  `points`/`log_degree` of 0/-1
// mean "let the operation choose" (each operation knows the tail shape of
// its own series).
struct Extrapolation {
    bool enabled = true;
    int points = 0;
    int log_degree = -1;
};

struct EvalConfig {
    long terms = 100000;
    Extrapolation extrapolation{};
    int precision_bits = 128;
    Real tolerance = Real("1e-10");
    double domain_margin = 0.05;
    bool override_guardrails = false;

    void validate() const {
        if (terms < 2) throw std::domain_error("terms must be >= 2");
        if (extrapolation.enabled && extrapolation.points == 1)
            throw std::domain_error("extrapolation needs at least 2 points");
        if (precision_bits < 64) throw std::domain_error("precision must be >= 64 bits");
        if (!(tolerance >= 0)) throw std::domain_error("tolerance must be nonnegative");
    }

    // Desk-scale cost control; oversize requests need override_guardrails.
    void check_guardrails(int weight, long requested_terms) const {
        if (override_guardrails) return;
        if (weight > 12)
            throw std::domain_error("weight " + std::to_string(weight) +
                                    " exceeds the desk-scale guardrail (12); pass the override flag to proceed");
        if (requested_terms > 10'000'000)
            throw std::domain_error("terms > 1e7 exceeds the desk-scale guardrail; pass the override flag to proceed");
    }
};

template <typename S>
struct BasicEvalResult {
    S value{};
    Real error_estimate{};
    std::string method;
    long terms_used = 0;
};

using EvalResult = BasicEvalResult<Real>;
using ComplexEvalResult = BasicEvalResult<Complex>;

inline nlohmann::json to_json(const EvalResult& r) {
    return {{"value", real_str(r.value)},
            {"error_estimate", real_str(r.error_estimate)},
            {"method", r.method},
            {"terms_used", r.terms_used}};
}

inline nlohmann::json to_json(const ComplexEvalResult& r) {
    return {{"value", complex_str(r.value)},
            {"error_estimate", real_str(r.error_estimate)},
            {"method", r.method},
            {"terms_used", r.terms_used}};
}

inline EvalResult to_real_result(const ComplexEvalResult& r) {
    return {r.value.real(), r.error_estimate, r.method, r.terms_used};
}

namespace detail {

// Geometric checkpoint positions N, N/2, N/4, ... (ascending, distinct,
// all >= 4).
inline std::vector<long> checkpoints(long N, int count) {
    std::vector<long> out;
    long n = N;
    for (int i = 0; i < count && n >= 4; ++i) {
        out.push_back(n);
        n /= 2;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Least squares via normal equations; A is row-major p x m, p >= m, m small.
inline std::vector<Real> solve_least_squares(const std::vector<std::vector<Real>>& A,
                                             const std::vector<Real>& y) {
    const size_t p = A.size(), m = A[0].size();
    std::vector<std::vector<Real>> M(m, std::vector<Real>(m + 1, Real(0)));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j)
            for (size_t r = 0; r < p; ++r) M[i][j] += A[r][i] * A[r][j];
        for (size_t r = 0; r < p; ++r) M[i][m] += A[r][i] * y[r];
    }
    // Gaussian elimination with partial pivoting.
    for (size_t col = 0; col < m; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < m; ++r)
            if (abs(M[r][col]) > abs(M[piv][col])) piv = r;
        std::swap(M[col], M[piv]);
        if (M[col][col] == 0) throw std::runtime_error("singular extrapolation system");
        for (size_t r = 0; r < m; ++r) {
            if (r == col) continue;
            Real f = M[r][col] / M[col][col];
            for (size_t j = col; j <= m; ++j) M[r][j] -= f * M[col][j];
        }
    }
    std::vector<Real> x(m);
    for (size_t i = 0; i < m; ++i) x[i] = M[i][m] / M[i][i];
    return x;
}

// Fits partial sums to  S(N) = V - N^{-alpha} (a_0 + a_1 log N + ... +
// a_d log^d N)  and returns V.  Real and imaginary parts are fitted
// separately (the design matrix is real).
inline Real fit_limit_1d(const std::vector<std::pair<long, Real>>& samples, double alpha, int degree) {
    const size_t p = samples.size();
    const size_t m = static_cast<size_t>(degree) + 2;
    std::vector<std::vector<Real>> A(p, std::vector<Real>(m));
    std::vector<Real> y(p);
    for (size_t r = 0; r < p; ++r) {
        const Real n(samples[r].first);
        const Real decay = -pow(n, Real(-alpha));
        const Real L = log(n);
        A[r][0] = 1;
        Real basis = decay;
        for (int t = 0; t <= degree; ++t) {
            A[r][static_cast<size_t>(t) + 1] = basis;
            basis *= L;
        }
        y[r] = samples[r].second;
    }
    return solve_least_squares(A, y)[0];
}

inline Real fit_limit(const std::vector<std::pair<long, Real>>& s, double alpha, int degree) {
    return fit_limit_1d(s, alpha, degree);
}

inline Complex fit_limit(const std::vector<std::pair<long, Complex>>& s, double alpha, int degree) {
    std::vector<std::pair<long, Real>> re, im;
    re.reserve(s.size());
    im.reserve(s.size());
    for (const auto& [n, v] : s) {
        re.emplace_back(n, v.real());
        im.emplace_back(n, v.imag());
    }
    return {fit_limit_1d(re, alpha, degree), fit_limit_1d(im, alpha, degree)};
}

// Extrapolates the limit of a series from partial sums at geometric
// checkpoints, assuming tail ~ N^{-alpha} * (polynomial in log N of the given
// degree).  error = 4 x the change when the least-accurate sample is dropped
// (the "last correction"), floored at the rounding noise of the samples.
template <typename S>
BasicEvalResult<S> extrapolate_tail(const std::vector<std::pair<long, S>>& samples, double alpha,
                                    int degree, const char* method) {
    BasicEvalResult<S> out;
    out.method = method;
    out.terms_used = samples.empty() ? 0 : samples.back().first;
    if (samples.empty()) throw std::domain_error("no partial sums to extrapolate");
    const S last_sum = samples.back().second;
    const Real noise_floor = scalar_abs(last_sum) * Real("1e-45") + Real("1e-60");
    if (samples.size() < 2) {
        out.value = last_sum;
        out.error_estimate = scalar_abs(last_sum) + noise_floor;
        return out;
    }
    int d = std::min<int>(degree, static_cast<int>(samples.size()) - 2);
    d = std::max(d, 0);
    S full = fit_limit(samples, alpha, d);
    // Reduced fit: drop the smallest-N sample (and a log power if needed).
    std::vector<std::pair<long, S>> reduced(samples.begin() + 1, samples.end());
    S reduced_fit;
    if (reduced.size() >= 2) {
        int dr = std::min<int>(d, static_cast<int>(reduced.size()) - 2);
        reduced_fit = fit_limit(reduced, alpha, std::max(dr, 0));
    } else {
        reduced_fit = reduced.back().second;
    }
    out.value = full;
    out.error_estimate = 4 * scalar_abs(full - reduced_fit) + noise_floor;
    return out;
}

// No extrapolation: report the last partial sum, with the drift across the
// last two checkpoints as the error heuristic.
template <typename S>
BasicEvalResult<S> truncate_only(const std::vector<std::pair<long, S>>& samples, const char* method) {
    BasicEvalResult<S> out;
    out.method = method;
    if (samples.empty()) throw std::domain_error("no partial sums");
    out.terms_used = samples.back().first;
    out.value = samples.back().second;
    out.error_estimate = samples.size() >= 2
                             ? scalar_abs(samples.back().second - samples[samples.size() - 2].second)
                             : scalar_abs(out.value);
    return out;
}

// Shared driver: collects checkpointed partial sums of term(n) for n=1..N
// and finishes per the config.  alpha/degree are the operation's defaults
// for the tail model; explicit config values win.
template <typename S, typename TermFn>
BasicEvalResult<S> sum_series(long N, TermFn&& term, const EvalConfig& cfg, double alpha,
                              int default_degree, const char* method) {
    int degree = cfg.extrapolation.log_degree >= 0 ? cfg.extrapolation.log_degree : default_degree;
    int points = cfg.extrapolation.points >= 2 ? cfg.extrapolation.points : degree + 3;
    auto marks = checkpoints(N, points);
    if (marks.empty()) marks.push_back(N);
    std::vector<std::pair<long, S>> samples;
    samples.reserve(marks.size());
    S acc(0);
    size_t next = 0;
    for (long n = 1; n <= N; ++n) {
        acc += term(n);
        if (next < marks.size() && n == marks[next]) {
            samples.emplace_back(n, acc);
            ++next;
        }
    }
    if (next < marks.size()) samples.emplace_back(N, acc);
    if (cfg.extrapolation.enabled) return extrapolate_tail(samples, alpha, degree, method);
    return truncate_only(samples, method);
}

}  // namespace detail

}  // namespace kawa
