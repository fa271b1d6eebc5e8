#include <doctest.h>

#include <algorithm>
#include <set>

#include "ptpc/bitops.hpp"
#include "support.hpp"

using namespace ptpc;

namespace {

std::uint64_t naive_weight(const std::vector<int>& row) {
    return static_cast<std::uint64_t>(std::count(row.begin(), row.end(), 1));
}

std::vector<int> naive_sum(std::vector<int> a, const std::vector<int>& b) {
    for (std::size_t x = 0; x < a.size(); ++x) a[x] ^= b[x];
    return a;
}

// Reflexive-transitive closure of the generator steps by breadth-first search
// without any pruning.
bool naive_leq(std::uint32_t i, std::uint32_t j, int n) {
    std::set<std::uint32_t> seen{i};
    std::vector<std::uint32_t> frontier{i};
    while (!frontier.empty()) {
        std::vector<std::uint32_t> next;
        for (auto x : frontier) {
            if (x == j) return true;
            for (std::uint32_t y = 0; y < (1u << n); ++y) {
                if (seen.count(y)) continue;
                const bool raise = std::popcount(y ^ x) == 1 && (y & x) == x;
                bool swap = false;
                for (int l = 0; l + 1 < n; ++l)
                    if (((x >> l) & 1u) && !((x >> (l + 1)) & 1u) && y == (x ^ (3u << l))) swap = true;
                if (raise || swap) {
                    seen.insert(y);
                    next.push_back(y);
                }
            }
        }
        frontier = std::move(next);
    }
    return false;
}

}  // namespace

TEST_CASE("BitIndex validates its range") {
    CHECK_NOTHROW(BitIndex(15, 4));
    CHECK_THROWS_AS(BitIndex(16, 4), std::invalid_argument);
    CHECK_THROWS_AS(BitIndex(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(BitIndex(0, -1), std::invalid_argument);
    CHECK_THROWS_AS(BitIndex(0, kMaxLog2Length + 1), std::invalid_argument);
    const BitIndex i(10, 4);
    CHECK(i.weight() == 2);
    CHECK(i.complement() == 5u);
    CHECK(i.support() == std::vector<int>{1, 3});
    CHECK(i.complement_support() == std::vector<int>{0, 2});
}

TEST_CASE("row weights match explicit rows of G_N") {
    for (int n = 1; n <= 5; ++n)
        for (std::uint32_t i = 0; i < (1u << n); ++i)
            CHECK(row_weight(BitIndex(i, n)) == naive_weight(testing::naive_row(i, n)));
    CHECK(row_weight(BitIndex(10, 4)) == 4);
    CHECK(row_weight(BitIndex(15, 4)) == 16);
    CHECK(row_weight(BitIndex(0, 4)) == 1);
}

TEST_CASE("merged row weight matches explicit XOR of rows") {
    for (int n = 1; n <= 5; ++n)
        for (std::uint32_t i = 0; i < (1u << n); ++i)
            for (std::uint32_t j = 0; j < (1u << n); ++j) {
                if (i == j) {
                    CHECK_THROWS_AS(merged_row_weight(BitIndex(i, n), BitIndex(j, n)), std::invalid_argument);
                    continue;
                }
                const auto expected =
                    naive_weight(naive_sum(testing::naive_row(i, n), testing::naive_row(j, n)));
                CHECK(merged_row_weight(BitIndex(i, n), BitIndex(j, n)) == expected);
            }
    CHECK(merged_row_weight(BitIndex(10, 4), BitIndex(11, 4)) == 4);
    CHECK(merged_row_weight(BitIndex(10, 4), BitIndex(14, 4)) == 4);
}

TEST_CASE("core rows are exactly the rows that keep the leader weight") {
    for (int n = 1; n <= 5; ++n)
        for (std::uint32_t i = 0; i < (1u << n); ++i)
            for (std::uint32_t j = i + 1; j < (1u << n); ++j) {
                const bool keeps = merged_row_weight(BitIndex(i, n), BitIndex(j, n)) == row_weight(BitIndex(i, n));
                CHECK(is_core(BitIndex(i, n), BitIndex(j, n)) == keeps);
            }
    CHECK(is_core(BitIndex(10, 4), BitIndex(11, 4)));
    CHECK(is_core(BitIndex(10, 4), BitIndex(12, 4)));
    CHECK(is_core(BitIndex(10, 4), BitIndex(14, 4)));
    CHECK_FALSE(is_core(BitIndex(10, 4), BitIndex(15, 4)));
    CHECK_THROWS_AS(is_core(BitIndex(10, 4), BitIndex(9, 4)), std::invalid_argument);
}

TEST_CASE("balancing row restores the leader weight") {
    // g_i + g_j + g_k + g_mu has weight 2^{w(i)} for core j, k of i.
    for (int n = 2; n <= 5; ++n)
        for (std::uint32_t i = 0; i < (1u << n); ++i) {
            const BitIndex bi(i, n);
            for (std::uint32_t j = i + 1; j < (1u << n); ++j)
                for (std::uint32_t k = j + 1; k < (1u << n); ++k) {
                    if (!is_core(bi, BitIndex(j, n)) || !is_core(bi, BitIndex(k, n))) continue;
                    if ((bi.complement() & j & k) != 0) continue;
                    const auto m = mu(bi, BitIndex(j, n), BitIndex(k, n)).value();
                    auto c = naive_sum(testing::naive_row(i, n), testing::naive_row(j, n));
                    c = naive_sum(c, testing::naive_row(k, n));
                    c = naive_sum(c, testing::naive_row(m, n));
                    CHECK(naive_weight(c) == row_weight(bi));
                }
        }
    CHECK(mu(BitIndex(10, 4), BitIndex(11, 4), BitIndex(14, 4)).value() == 15u);
    CHECK_THROWS_AS(mu(BitIndex(10, 4), BitIndex(9, 4), BitIndex(11, 4)), std::invalid_argument);
}

TEST_CASE("partial order matches the naive transitive closure") {
    for (int n = 1; n <= 4; ++n)
        for (std::uint32_t i = 0; i < (1u << n); ++i)
            for (std::uint32_t j = 0; j < (1u << n); ++j)
                CHECK(partial_order_leq(BitIndex(i, n), BitIndex(j, n)) == naive_leq(i, j, n));
    CHECK(partial_order_leq(BitIndex(3, 3), BitIndex(5, 3)));
    CHECK(partial_order_leq(BitIndex(1, 3), BitIndex(2, 3)));
    CHECK_FALSE(partial_order_leq(BitIndex(4, 3), BitIndex(3, 3)));
}

TEST_CASE("order successors") {
    CHECK(order_successors(1, 3) == std::vector<std::uint32_t>{2, 3, 5});
    CHECK(order_successors(7, 3).empty());
}
