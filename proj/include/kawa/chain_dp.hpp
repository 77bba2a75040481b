#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace kawa {

// Prefix-sum dynamic programming over constrained chains.
//
// Computes, for every n in 1..N,
//   f(n) = sum over chains (n_1,...,n_K) with n_K = n of
//          prod_j weight(j, n_j),
// where consecutive variables satisfy n_j < n_{j+1} when step j is strict
// and n_j <= n_{j+1} when it is weak.  This single routine carries the
// summation constraint shared by the multiple harmonic sums, the constrained
// zeta sums and the G-series; keying the strict/weak switch off one place
// prevents drift between them.
//
// weak_step[j-1] tells whether the step between positions j and j+1 is weak
// (size K-1).  Cost O(N*K) values of T.
template <typename T, typename WeightFn>
std::vector<T> chain_dp(int positions, const std::vector<bool>& weak_step, long N, WeightFn&& weight) {
    if (positions < 1) throw std::domain_error("chain_dp needs at least one position");
    if (static_cast<int>(weak_step.size()) != positions - 1)
        throw std::domain_error("weak_step size must be positions-1");
    if (N < 0) throw std::domain_error("negative bound");

    std::vector<T> cur(static_cast<size_t>(N) + 1, T(0));
    for (long n = 1; n <= N; ++n) cur[n] = weight(1, n);
    for (int j = 2; j <= positions; ++j) {
        const bool weak = weak_step[j - 2];
        // In-place: running holds sum_{m<=n or m<n} cur[m] as n advances.
        T running(0);
        for (long n = 1; n <= N; ++n) {
            if (weak) {
                running += cur[n];
                cur[n] = weight(j, n) * running;
            } else {
                T prev = cur[n];
                cur[n] = weight(j, n) * running;
                running += prev;
            }
        }
    }
    return cur;
}

}  // namespace kawa
