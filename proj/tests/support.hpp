#pragma once

// Helpers shared by the unit and acceptance tests.

#include <algorithm>
#include <random>
#include <vector>

#include "ptpc/bitops.hpp"
#include "ptpc/code_model.hpp"

namespace ptpc::testing {

/// Row i of G_N as a dense bit list: g_i[x] = 1 iff x ⊆ i.
inline std::vector<int> naive_row(std::uint32_t i, int n) {
    std::vector<int> row(std::size_t{1} << n);
    for (std::uint32_t x = 0; x < row.size(); ++x) row[x] = (x & ~i) == 0;
    return row;
}

/// Upward closure of `seeds` under the generator steps of the partial order.
inline CodeSpec decreasing_closure(int n, std::vector<std::uint32_t> seeds) {
    std::vector<std::uint8_t> in(std::size_t{1} << n, 0);
    std::vector<std::uint32_t> stack = seeds;
    while (!stack.empty()) {
        const auto i = stack.back();
        stack.pop_back();
        if (in[i]) continue;
        in[i] = 1;
        for (auto s : order_successors(i, n)) stack.push_back(s);
    }
    std::vector<std::uint32_t> info;
    for (std::uint32_t i = 0; i < in.size(); ++i)
        if (in[i]) info.push_back(i);
    return CodeSpec(n, info);
}

inline CodeSpec random_decreasing_profile(int n, std::mt19937_64& rng) {
    const std::size_t N = std::size_t{1} << n;
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(N - 1));
    std::uniform_int_distribution<int> count(1, 3);
    std::vector<std::uint32_t> seeds;
    for (int s = count(rng); s > 0; --s) seeds.push_back(pick(rng));
    return decreasing_closure(n, seeds);
}

/// Any nonempty subset of Z_N, each index kept with probability `p`.
inline CodeSpec random_profile(int n, std::mt19937_64& rng, double p = 0.5) {
    const std::size_t N = std::size_t{1} << n;
    std::bernoulli_distribution keep(p);
    std::vector<std::uint32_t> info;
    for (std::uint32_t i = 0; i < N; ++i)
        if (keep(rng)) info.push_back(i);
    if (info.empty()) info.push_back(static_cast<std::uint32_t>(N - 1));
    return CodeSpec(n, info);
}

/// Random polynomial with p_0 = p_q = 1 and degree q in [0, min(max_degree, N-1)].
inline PacPolynomial random_polynomial(int n, int max_degree, std::mt19937_64& rng) {
    const int cap = std::min(max_degree, (1 << n) - 1);
    const int q = std::uniform_int_distribution<int>(0, cap)(rng);
    if (q == 0) return PacPolynomial(1);
    std::uint64_t packed = (std::uint64_t{1} << q) | 1u;
    for (int d = 1; d < q; ++d)
        if (rng() & 1u) packed |= std::uint64_t{1} << d;
    return PacPolynomial(packed);
}

}  // namespace ptpc::testing
