#include "ptpc/bitops.hpp"

#include <stdexcept>
#include <string>

namespace ptpc {

BitIndex::BitIndex(std::uint32_t value, int n) : value_(value), n_(n) {
    if (n < 0 || n > kMaxLog2Length)
        throw std::invalid_argument("bit width n=" + std::to_string(n) + " out of range");
    if (value >= (std::uint64_t{1} << n))
        throw std::invalid_argument("index " + std::to_string(value) + " does not fit in " +
                                    std::to_string(n) + " bits");
}

std::vector<int> BitIndex::support() const {
    std::vector<int> out;
    for (int l = 0; l < n_; ++l)
        if ((value_ >> l) & 1u) out.push_back(l);
    return out;
}

std::vector<int> BitIndex::complement_support() const {
    std::vector<int> out;
    for (int l = 0; l < n_; ++l)
        if (!((value_ >> l) & 1u)) out.push_back(l);
    return out;
}

namespace {

void require_same_width(BitIndex a, BitIndex b) {
    if (a.bits() != b.bits()) throw std::invalid_argument("indices have different bit widths");
}

}  // namespace

std::uint64_t row_weight(BitIndex i) { return bits::row_weight(i.value()); }

std::uint64_t merged_row_weight(BitIndex i, BitIndex j) {
    require_same_width(i, j);
    if (i == j) throw std::invalid_argument("merged_row_weight: i and j must differ");
    const auto both = i.value() & j.value();
    return bits::row_weight(i.value()) + bits::row_weight(j.value()) -
           (std::uint64_t{2} << bits::weight(both));
}

bool is_core(BitIndex i, BitIndex j) {
    require_same_width(i, j);
    if (j.value() <= i.value()) throw std::invalid_argument("is_core: requires j > i");
    return bits::is_core(i.complement(), j.value());
}

BitIndex mu(BitIndex i, BitIndex j, BitIndex k) {
    require_same_width(i, j);
    require_same_width(i, k);
    if (!(i.value() < j.value() && i.value() < k.value()))
        throw std::invalid_argument("mu: requires i < min(j, k)");
    if ((i.complement() & j.value() & k.value()) != 0)
        throw std::invalid_argument("mu: requires (NOT i) AND j AND k == 0");
    return BitIndex(bits::mu(i.complement(), j.value(), k.value()), i.bits());
}

std::vector<std::uint32_t> order_successors(std::uint32_t i, int n) {
    std::vector<std::uint32_t> out;
    for (int l = 0; l + 1 < n; ++l) {
        if (((i >> l) & 1u) && !((i >> (l + 1)) & 1u)) out.push_back(i ^ (3u << l));
    }
    for (int l = 0; l < n; ++l)
        if (!((i >> l) & 1u)) out.push_back(i | (1u << l));
    return out;
}

bool partial_order_leq(BitIndex i, BitIndex j) {
    require_same_width(i, j);
    if (i == j) return true;
    const auto target = j.value();
    const int target_weight = j.weight();
    // Both generator steps strictly increase the index and never lower the
    // weight, so states above j or heavier than j can be discarded.
    if (i.value() > target || i.weight() > target_weight) return false;

    const std::uint32_t base = i.value();
    std::vector<bool> seen(target - base + 1, false);
    std::vector<std::uint32_t> frontier{base};
    seen[0] = true;
    while (!frontier.empty()) {
        const auto cur = frontier.back();
        frontier.pop_back();
        for (auto next : order_successors(cur, i.bits())) {
            if (next == target) return true;
            if (next > target || bits::weight(next) > target_weight) continue;
            if (seen[next - base]) continue;
            seen[next - base] = true;
            frontier.push_back(next);
        }
    }
    return false;
}

}  // namespace ptpc
