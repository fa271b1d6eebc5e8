#pragma once

// Index arithmetic over rows of the polar transform G_N, N = 2^n.
//
// Row i of G_N is the evaluation of the monomial associated with the bit
// pattern of i, so most row properties reduce to word operations on i itself:
// the weight of a row, the weight of a sum of two rows, which rows can be
// added to a coset leader without raising its weight, and the partial order
// that ranks synthetic channels by reliability.

#include <bit>
#include <cstdint>
#include <vector>

namespace ptpc {

/// Largest supported log2 block length.
inline constexpr int kMaxLog2Length = 24;

/// A row/column index i in Z_{2^n} together with its bit width n.
class BitIndex {
public:
    BitIndex(std::uint32_t value, int n);

    std::uint32_t value() const { return value_; }
    int bits() const { return n_; }
    std::uint32_t mask() const { return (n_ == 32) ? ~0u : ((1u << n_) - 1u); }

    int weight() const { return std::popcount(value_); }
    /// Complement within the n-bit word.
    std::uint32_t complement() const { return ~value_ & mask(); }
    /// Bit positions l with i_(l) = 1, ascending.
    std::vector<int> support() const;
    /// Bit positions l with i_(l) = 0, ascending.
    std::vector<int> complement_support() const;

    friend bool operator==(const BitIndex&, const BitIndex&) = default;
    friend auto operator<=>(const BitIndex&, const BitIndex&) = default;

private:
    std::uint32_t value_;
    int n_;
};

namespace bits {

// Unchecked kernels used on the enumeration hot path.

inline int weight(std::uint32_t x) { return std::popcount(x); }

/// w(g_i) = 2^{w(i)}
inline std::uint64_t row_weight(std::uint32_t i) { return std::uint64_t{1} << weight(i); }

/// j is a core row of leader i (for j > i) iff exactly one bit of j lies outside i.
inline bool is_core(std::uint32_t not_i, std::uint32_t j) { return weight(not_i & j) == 1; }

/// Balancing row for core row j and already-present row k of leader i.
inline std::uint32_t mu(std::uint32_t not_i, std::uint32_t j, std::uint32_t k) {
    return (not_i & (j | k)) | (j & k);
}

}  // namespace bits

/// Hamming weight of row i of G_N.
std::uint64_t row_weight(BitIndex i);

/// Hamming weight of g_i XOR g_j. Throws std::invalid_argument if i == j.
std::uint64_t merged_row_weight(BitIndex i, BitIndex j);

/// True iff adding g_j to g_i keeps weight 2^{w(i)}. Requires j > i.
bool is_core(BitIndex i, BitIndex j);

/// Index of the balancing row forced when core row j meets row k in coset i.
/// Requires i < min(j, k) and (NOT i) AND j AND k == 0.
BitIndex mu(BitIndex i, BitIndex j, BitIndex k);

/// Indices reachable from i by one generator step of the partial order:
/// a single left swap (a one-bit moves to the next more significant position
/// holding a zero) or a single bit raise.
std::vector<std::uint32_t> order_successors(std::uint32_t i, int n);

/// i ≼ j in the reliability partial order (reflexive-transitive closure of
/// left swaps and binary domination), decided by reachability over
/// generator steps.
bool partial_order_leq(BitIndex i, BitIndex j);

}  // namespace ptpc
