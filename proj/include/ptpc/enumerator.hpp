#pragma once

// Exact count of the minimum-weight codewords of a pre-transformed polar code.
//
// The code splits into cosets C_i, i in I, holding the codewords whose message
// starts at position i. Every codeword of C_i weighs at least 2^{w(i)}, so only
// cosets with 2^{w(i)} = wmin can hold weight-wmin codewords. Within such a
// coset the weight-wmin messages form a binary tree whose branching levels are
// the core rows K_i (rows j > i with w(NOT i AND j) = 1), and the messages the
// code admits form a tree whose branching levels are I. The enumerator walks
// the intersection of the two trees depth first: a branch wherever a core row
// is also an information row, a forced core row where a frozen constraint
// demands it, and a dead leaf where a frozen constraint can not be met. Past the
// last frozen non-core position f* every remaining core information row is
// free, contributing a factor 2^{|I ∩ K_i, k > f*|}.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ptpc/bitops.hpp"
#include "ptpc/bitvector.hpp"
#include "ptpc/code_model.hpp"

namespace ptpc {

/// Work counters of one enumeration. The counts follow the literal
/// traversal: every entry into a sub-tree, every message update, and every
/// frozen position inspected between the current level and f*.
struct EnumerationStats {
    std::uint64_t visited_subtrees = 0;
    std::uint64_t message_updates = 0;
    std::uint64_t pretransform_checks = 0;

    EnumerationStats& operator+=(const EnumerationStats& o) {
        visited_subtrees += o.visited_subtrees;
        message_updates += o.message_updates;
        pretransform_checks += o.pretransform_checks;
        return *this;
    }
    friend bool operator==(const EnumerationStats&, const EnumerationStats&) = default;
};

/// Per-coset structure for leader i.
struct CosetContext {
    std::uint32_t leader = 0;
    /// K_i, ascending.
    std::vector<std::uint32_t> core;
    /// f* = max({i} ∪ (K_i^c ∩ F)).
    std::uint32_t f_star = 0;
    /// {k in K_i : k > f*}, ascending.
    std::vector<std::uint32_t> core_tail;
    /// |I ∩ core_tail|
    std::size_t free_count = 0;
    /// |I ∩ K_i|
    std::size_t info_core_count = 0;
    /// F ∩ K_i^c is empty: no pre-transform can change this coset's count.
    bool pretransformable = false;
};

struct EnumerationOptions {
    /// Count cosets no frozen constraint can reach (non-pretransformable ones,
    /// and see coset_constraint_free) as 2^{|I ∩ K_i|} without traversal.
    /// Switch off to reproduce the counters of the literal traversal.
    bool short_circuit = true;
    /// Worker threads for coset-level parallelism; 0 picks the hardware count.
    unsigned threads = 0;
    /// Stop early once the running total strictly exceeds this value
    /// (the result is then flagged `aborted` and its count is a partial sum).
    std::optional<BigCount> abort_above;
};

struct EnumerationResult {
    std::uint64_t wmin = 0;
    BigCount count = 0;
    /// Count per coset leader i in I_wmin (only cosets that were evaluated).
    std::map<std::uint32_t, BigCount> per_coset;
    EnumerationStats stats;
    /// No weight-wmin codeword survives, so the true minimum distance exceeds wmin.
    bool dmin_exceeds_wmin = false;
    bool aborted = false;
};

/// wmin = min_{i in I} 2^{w(i)} and I_wmin = { i in I : 2^{w(i)} = wmin }.
std::pair<std::uint64_t, std::vector<std::uint32_t>> wmin_and_coset_indices(const CodeSpec& spec);

/// Core rows, f* and the free tail for leader i in I.
CosetContext compute_coset_context(const CodeSpec& spec, std::uint32_t i);

/// |I ∩ K_i| from the bit pattern alone: the zeros of i, plus for every one
/// of i the zeros above it. Exact when I is decreasing and i in I_wmin.
std::size_t core_info_count_closed_form(BitIndex i);

/// Adds core row j to the weight-wmin message u of coset i: every set bit
/// k in (i, j) with (NOT i) AND j AND k = 0 toggles the balancing row
/// mu_i(j, k), then u_j is set. Requires j > i, j in K_i and u_i = 1.
BitVector update_message(BitIndex i, BitIndex j, BitVector u, EnumerationStats* stats = nullptr);

/// Frozen-position data of a systematized pre-transform in the layout the
/// traversal reads: for every information row h, row h of T_sys restricted
/// to frozen columns.
class FrozenConstraints {
public:
    FrozenConstraints(const CodeSpec& spec, const PreTransform& t_sys);

    const CodeSpec& spec() const { return *spec_; }
    /// Frozen-column part of row h (h in I); empty for identity-like rows.
    const PackedRow& frozen_part(std::uint32_t h) const { return frozen_rows_[h]; }
    /// Frozen positions as a bitmap over Z_N.
    std::span<const std::uint64_t> frozen_mask() const { return frozen_mask_; }
    /// Number of frozen positions in [0, x).
    std::uint32_t frozen_before(std::uint32_t x) const { return frozen_prefix_[x]; }

private:
    const CodeSpec* spec_;
    std::vector<PackedRow> frozen_rows_;
    std::vector<std::uint64_t> frozen_mask_;
    std::vector<std::uint32_t> frozen_prefix_;
};

/// True if no message the traversal of coset ctx.leader can build sets a
/// frozen position up to f* or an information row whose frozen part reaches
/// up to f*. Every path then survives and the coset holds 2^{|I ∩ K_i|}
/// weight-wmin codewords. Holds for plain codes on decreasing profiles.
bool coset_constraint_free(const FrozenConstraints& constraints, const CosetContext& ctx);

/// |Q_{i,wmin}(I, T)|: number of weight-wmin codewords in coset i.
/// `t_sys` must be systematized and ctx.leader in I_wmin.
BigCount enumerate_coset(const CodeSpec& spec, const PreTransform& t_sys, const CosetContext& ctx,
                         EnumerationStats* stats = nullptr);
BigCount enumerate_coset(const FrozenConstraints& constraints, const CosetContext& ctx,
                         EnumerationStats* stats = nullptr);

/// A_wmin of the code generated by (spec, t). Systematizes t first.
EnumerationResult count_min_weight(const CodeSpec& spec, const PreTransform& t,
                                   const EnumerationOptions& options = {});

/// Calls `visit` with one full message u per surviving traversal path of
/// coset ctx.leader, stopping after `limit` paths. The free information bits
/// past f* are all zero when `tail_seed` is 0, otherwise drawn from
/// std::mt19937_64(tail_seed). Every emitted u encodes to a weight-wmin
/// codeword.
void for_each_surviving_path(const FrozenConstraints& constraints, const CosetContext& ctx,
                             std::size_t limit, const std::function<void(const BitVector&)>& visit,
                             std::uint64_t tail_seed = 0);

}  // namespace ptpc
