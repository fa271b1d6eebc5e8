#include "ptpc/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

namespace ptpc {

std::pair<std::uint64_t, std::vector<std::uint32_t>> wmin_and_coset_indices(const CodeSpec& spec) {
    std::uint64_t wmin = std::numeric_limits<std::uint64_t>::max();
    for (auto i : spec.info_set()) wmin = std::min(wmin, bits::row_weight(i));
    std::vector<std::uint32_t> leaders;
    for (auto i : spec.info_set())
        if (bits::row_weight(i) == wmin) leaders.push_back(i);
    return {wmin, std::move(leaders)};
}

CosetContext compute_coset_context(const CodeSpec& spec, std::uint32_t i) {
    if (i >= spec.length() || !spec.is_info(i))
        throw std::invalid_argument("coset leader " + std::to_string(i) + " is not an information index");
    CosetContext ctx;
    ctx.leader = i;
    const int n = spec.n();
    const std::uint32_t not_i = ~i & static_cast<std::uint32_t>(spec.length() - 1);

    // j in K_i: one zero b of i raised, any ones of i below b dropped.
    for (int b = 0; b < n; ++b) {
        if ((i >> b) & 1u) continue;
        const std::uint32_t below = i & ((1u << b) - 1u);
        std::uint32_t drop = below;
        while (true) {
            ctx.core.push_back((i & ~drop) | (1u << b));
            if (drop == 0) break;
            drop = (drop - 1) & below;
        }
    }
    std::sort(ctx.core.begin(), ctx.core.end());

    ctx.f_star = i;
    for (auto f = static_cast<std::uint32_t>(spec.length() - 1); f > i; --f) {
        if (spec.is_frozen(f) && !bits::is_core(not_i, f)) {
            ctx.f_star = f;
            break;
        }
    }
    ctx.pretransformable = ctx.f_star != i;
    for (auto k : ctx.core) {
        const bool info = spec.is_info(k);
        if (info) ++ctx.info_core_count;
        if (k > ctx.f_star) {
            ctx.core_tail.push_back(k);
            if (info) ++ctx.free_count;
        }
    }
    return ctx;
}

std::size_t core_info_count_closed_form(BitIndex i) {
    std::size_t count = 0;
    const auto zeros = i.complement_support();
    count += zeros.size();
    for (int l : i.support())
        count += static_cast<std::size_t>(std::count_if(zeros.begin(), zeros.end(), [l](int b) { return b > l; }));
    return count;
}

BitVector update_message(BitIndex i, BitIndex j, BitVector u, EnumerationStats* stats) {
    if (i.bits() != j.bits()) throw std::invalid_argument("update_message: width mismatch");
    if (u.size() != (std::size_t{1} << i.bits())) throw std::invalid_argument("update_message: message length");
    if (j.value() <= i.value()) throw std::invalid_argument("update_message: requires j > i");
    if (!bits::is_core(i.complement(), j.value())) throw std::invalid_argument("update_message: j is not a core row");
    if (!u.test(i.value())) throw std::invalid_argument("update_message: requires u_i = 1");
    const auto not_i = i.complement();
    BitVector out = u;
    for (auto k : u.support()) {
        if (k <= i.value()) continue;
        if (k >= j.value()) break;
        const auto kk = static_cast<std::uint32_t>(k);
        if ((not_i & j.value() & kk) == 0) out.flip(bits::mu(not_i, j.value(), kk));
    }
    out.set(j.value());
    if (stats) ++stats->message_updates;
    return out;
}

FrozenConstraints::FrozenConstraints(const CodeSpec& spec, const PreTransform& t_sys) : spec_(&spec) {
    if (!t_sys.systematized()) throw std::invalid_argument("FrozenConstraints: transform not systematized");
    if (t_sys.length() != spec.length()) throw std::invalid_argument("FrozenConstraints: length mismatch");
    const auto N = spec.length();
    frozen_mask_.assign((N + 63) / 64, 0);
    frozen_prefix_.assign(N + 1, 0);
    for (std::uint32_t f = 0; f < N; ++f) {
        const bool frozen = spec.is_frozen(f);
        if (frozen) frozen_mask_[f >> 6] |= std::uint64_t{1} << (f & 63);
        frozen_prefix_[f + 1] = frozen_prefix_[f] + (frozen ? 1u : 0u);
    }
    frozen_rows_.resize(N);
    for (auto h : spec.info_set()) {
        const auto& row = t_sys.row(h);
        PackedRow part;
        const auto w = row.words();
        for (std::size_t k = 0; k < w.size(); ++k) {
            auto word = w[k] & frozen_mask_[row.first_word() + k];
            while (word) {
                part.set((row.first_word() + k) * 64 + static_cast<std::size_t>(std::countr_zero(word)));
                word &= word - 1;
            }
        }
        frozen_rows_[h] = std::move(part);
    }
}

bool coset_constraint_free(const FrozenConstraints& constraints, const CosetContext& ctx) {
    const auto& spec = constraints.spec();
    const std::uint32_t i = ctx.leader;
    const std::uint32_t end = ctx.f_star;
    const std::uint32_t not_i = ~i & static_cast<std::uint32_t>(spec.length() - 1);
    std::vector<std::uint32_t> branches;
    for (auto k : ctx.core)
        if (k <= end && spec.is_info(k)) branches.push_back(k);

    // Every position a message of this coset can set below f*.
    std::vector<std::uint8_t> seen(end + 1, 0);
    std::vector<std::uint32_t> reach{i};
    seen[i] = 1;
    for (bool grew = true; grew;) {
        grew = false;
        for (auto j : branches) {
            auto add = [&](std::uint32_t x) {
                if (x > end || seen[x]) return;
                seen[x] = 1;
                reach.push_back(x);
                grew = true;
            };
            add(j);
            for (std::size_t r = 0; r < reach.size(); ++r) {
                const auto k = reach[r];
                if (k > i && k < j && (not_i & j & k) == 0) add(bits::mu(not_i, j, k));
            }
        }
    }
    for (auto h : reach) {
        if (spec.is_frozen(h)) return false;
        const auto& part = constraints.frozen_part(h);
        if (!part.empty() && part.first_word() * 64 <= end) {
            for (auto f : part.support())
                if (f <= end) return false;
        }
    }
    return true;
}

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

struct Workspace {
    std::vector<std::uint64_t> u;
    std::vector<std::uint64_t> d;
};

// Depth-first walk of the intersection tree of one coset.
//
// Each recursion level owns a copy of two bitmaps over the window
// [leader, storage_end]: the message u and the violation map d, where d_f for
// frozen f is u_f XOR (parity u_f must take). d is kept current by XOR-ing the
// frozen part of T_sys row h into it whenever u_h flips for an information
// row h, so the next frozen constraint that fails is the next set bit of d.
// Frozen positions between events are accounted for in the check counter as
// if visited one by one.
class CosetWalker {
public:
    CosetWalker(const FrozenConstraints& constraints, const CosetContext& ctx, std::uint32_t storage_end,
                Workspace& ws, EnumerationStats& stats)
        : c_(constraints),
          frozen_(constraints.frozen_mask()),
          ctx_(ctx),
          not_i_(~ctx.leader & static_cast<std::uint32_t>(constraints.spec().length() - 1)),
          end_(storage_end),
          base_(ctx.leader >> 6),
          nwords_((storage_end >> 6) - base_ + 1),
          ws_(ws),
          stats_(stats) {
        const auto& spec = constraints.spec();
        for (auto k : ctx.core) {
            if (k > ctx.f_star) break;
            if (spec.is_info(k)) branches_.push_back(k);
        }
        // Depth is at most one level per branch plus the root; one extra
        // level serves as scratch for completing emitted paths.
        const auto levels = branches_.size() + 2;
        if (ws_.u.size() < levels * nwords_) {
            ws_.u.resize(levels * nwords_);
            ws_.d.resize(levels * nwords_);
        }
        std::fill_n(ws_.u.begin(), nwords_, 0);
        std::fill_n(ws_.d.begin(), nwords_, 0);
    }

    std::uint64_t run() { return walk(0, ctx_.leader, 0); }

    void emit_paths(std::size_t limit, const std::function<void(const BitVector&)>& visit, std::uint64_t seed) {
        emit_ = &visit;
        limit_ = limit;
        if (seed != 0) rng_.emplace(seed);
        if (limit_ > 0) walk(0, ctx_.leader, 0);
    }

private:
    std::uint64_t* U(std::size_t level) { return ws_.u.data() + level * nwords_; }
    std::uint64_t* D(std::size_t level) { return ws_.d.data() + level * nwords_; }

    bool is_frozen(std::uint32_t p) const { return (frozen_[p >> 6] >> (p & 63)) & 1u; }
    bool test(const std::uint64_t* words, std::uint32_t p) const {
        return (words[(p >> 6) - base_] >> (p & 63)) & 1u;
    }
    std::uint64_t frozen_in(std::uint32_t lo, std::uint32_t hi) const {
        return c_.frozen_before(hi) - c_.frozen_before(lo);
    }

    // Words of d below `from_word` are never read again on this level or
    // below it, so they are left stale.
    void toggle(std::size_t level, std::uint32_t p, std::size_t from_word) {
        if (p > end_) return;
        U(level)[(p >> 6) - base_] ^= std::uint64_t{1} << (p & 63);
        auto* d = D(level);
        if (is_frozen(p)) {
            d[(p >> 6) - base_] ^= std::uint64_t{1} << (p & 63);
            return;
        }
        const auto& row = c_.frozen_part(p);
        const auto rw = row.words();
        const auto lo = std::max(row.first_word(), from_word);
        const auto hi = std::min(row.first_word() + rw.size(), base_ + nwords_);
        for (auto w = lo; w < hi; ++w) d[w - base_] ^= rw[w - row.first_word()];
    }

    void update(std::size_t level, std::uint32_t j) {
        ++stats_.message_updates;
        const auto* u = U(level);
        const std::uint32_t lo = ctx_.leader + 1;
        if (lo < j) {
            const std::uint32_t first = lo >> 6, last = (j - 1) >> 6;
            for (auto w = first; w <= last; ++w) {
                auto word = u[w - base_];
                if (w == first) word &= ~std::uint64_t{0} << (lo & 63);
                if (w == last && ((j & 63) != 0)) word &= ~(~std::uint64_t{0} << (j & 63));
                while (word) {
                    const auto k = static_cast<std::uint32_t>(w * 64 + static_cast<std::uint32_t>(std::countr_zero(word)));
                    word &= word - 1;
                    if ((not_i_ & j & k) == 0) toggle(level, bits::mu(not_i_, j, k), j >> 6);
                }
            }
        }
        if (!test(U(level), j)) toggle(level, j, j >> 6);
    }

    /// First set bit of d in [lo, hi], or kNone.
    std::uint32_t first_violation(std::size_t level, std::uint32_t lo, std::uint32_t hi) const {
        if (lo > hi) return kNone;
        const auto* d = ws_.d.data() + level * nwords_;
        const std::uint32_t first = lo >> 6, last = hi >> 6;
        for (auto w = first; w <= last; ++w) {
            auto word = d[w - base_];
            if (w == first) word &= ~std::uint64_t{0} << (lo & 63);
            if (w == last && (hi & 63) != 63) word &= ~(~std::uint64_t{0} << ((hi & 63) + 1));
            if (word) return w * 64 + static_cast<std::uint32_t>(std::countr_zero(word));
        }
        return kNone;
    }

    std::uint64_t walk(std::size_t level, std::uint32_t j, std::size_t next_branch) {
        ++stats_.visited_subtrees;
        update(level, j);
        std::uint64_t found = 0;
        std::uint32_t pos = j + 1;
        const auto f_star = ctx_.f_star;
        while (true) {
            if (stopped_) return found;
            const auto branch = next_branch < branches_.size() ? branches_[next_branch] : kNone;
            const auto violation = first_violation(level, pos, branch == kNone ? f_star : branch - 1);
            if (violation == kNone) {
                if (branch == kNone) {
                    stats_.pretransform_checks += frozen_in(pos, f_star + 1);
                    if (emit_) emit_survivor(level);
                    return add(found, 1);
                }
                stats_.pretransform_checks += frozen_in(pos, branch);
                std::copy_n(U(level), nwords_, U(level + 1));
                const auto from = (branch >> 6) - base_;
                std::copy_n(D(level) + from, nwords_ - from, D(level + 1) + from);
                found = add(found, walk(level + 1, branch, next_branch + 1));
                pos = branch + 1;
                ++next_branch;
                continue;
            }
            stats_.pretransform_checks += frozen_in(pos, violation + 1);
            if (!bits::is_core(not_i_, violation)) return found;
            update(level, violation);
            pos = violation + 1;
        }
    }

    static std::uint64_t add(std::uint64_t a, std::uint64_t b) {
        std::uint64_t s;
        if (__builtin_add_overflow(a, b, &s)) throw std::overflow_error("coset path count exceeds 64 bits");
        return s;
    }

    // Completes the path past f*: frozen positions there are core rows, so a
    // failing constraint is always repaired by adding that row.
    void emit_survivor(std::size_t level) {
        const auto scratch = branches_.size() + 1;
        std::copy_n(U(level), nwords_, U(scratch));
        std::copy_n(D(level), nwords_, D(scratch));
        // Tail completion is not part of the counted traversal.
        const auto updates_before = stats_.message_updates;
        const auto& spec = c_.spec();
        const auto N = static_cast<std::uint32_t>(spec.length());
        auto tail = ctx_.core_tail.begin();
        std::uint32_t pos = ctx_.f_star + 1;
        while (pos < N) {
            while (tail != ctx_.core_tail.end() && (*tail < pos || !spec.is_info(*tail))) ++tail;
            const auto branch = tail != ctx_.core_tail.end() ? *tail : kNone;
            const auto violation = first_violation(scratch, pos, branch == kNone ? N - 1 : branch - 1);
            if (violation != kNone) {
                if (!bits::is_core(not_i_, violation)) throw std::logic_error("non-core frozen conflict past f*");
                update(scratch, violation);
                pos = violation + 1;
                continue;
            }
            if (branch == kNone) break;
            if (rng_ && ((*rng_)() & 1u)) update(scratch, branch);
            pos = branch + 1;
        }
        BitVector u(spec.length());
        auto uw = u.words();
        for (std::size_t w = 0; w < nwords_; ++w) uw[base_ + w] = U(scratch)[w];
        stats_.message_updates = updates_before;
        (*emit_)(u);
        if (++emitted_ >= limit_) stopped_ = true;
    }

    const FrozenConstraints& c_;
    std::span<const std::uint64_t> frozen_;
    const CosetContext& ctx_;
    std::uint32_t not_i_;
    std::uint32_t end_;
    std::size_t base_;
    std::size_t nwords_;
    Workspace& ws_;
    EnumerationStats& stats_;
    std::vector<std::uint32_t> branches_;

    const std::function<void(const BitVector&)>* emit_ = nullptr;
    std::size_t limit_ = 0;
    std::size_t emitted_ = 0;
    bool stopped_ = false;
    std::optional<std::mt19937_64> rng_;
};

BigCount walk_coset(const FrozenConstraints& constraints, const CosetContext& ctx, Workspace& ws,
                    EnumerationStats& stats) {
    CosetWalker walker(constraints, ctx, ctx.f_star, ws, stats);
    BigCount paths = walker.run();
    return paths << static_cast<unsigned>(ctx.free_count);
}

}  // namespace

BigCount enumerate_coset(const FrozenConstraints& constraints, const CosetContext& ctx, EnumerationStats* stats) {
    Workspace ws;
    EnumerationStats local;
    auto count = walk_coset(constraints, ctx, ws, local);
    if (stats) *stats += local;
    return count;
}

BigCount enumerate_coset(const CodeSpec& spec, const PreTransform& t_sys, const CosetContext& ctx,
                         EnumerationStats* stats) {
    FrozenConstraints constraints(spec, t_sys);
    return enumerate_coset(constraints, ctx, stats);
}

void for_each_surviving_path(const FrozenConstraints& constraints, const CosetContext& ctx, std::size_t limit,
                             const std::function<void(const BitVector&)>& visit, std::uint64_t tail_seed) {
    Workspace ws;
    EnumerationStats stats;
    CosetWalker walker(constraints, ctx, static_cast<std::uint32_t>(constraints.spec().length() - 1), ws, stats);
    walker.emit_paths(limit, visit, tail_seed);
}

EnumerationResult count_min_weight(const CodeSpec& spec, const PreTransform& t, const EnumerationOptions& options) {
    t.validate_for(spec);
    const PreTransform t_sys = t.systematized() ? t : systematize(t, spec);
    const FrozenConstraints constraints(spec, t_sys);

    EnumerationResult result;
    auto [wmin, leaders] = wmin_and_coset_indices(spec);
    result.wmin = wmin;

    std::vector<std::optional<BigCount>> counts(leaders.size());
    std::vector<EnumerationStats> stats(leaders.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> abort{false};
    std::mutex sum_mutex;
    BigCount running = 0;
    std::exception_ptr failure;

    auto worker = [&] {
        Workspace ws;
        try {
            while (!abort.load(std::memory_order_relaxed)) {
                const auto idx = next.fetch_add(1);
                if (idx >= leaders.size()) break;
                const auto ctx = compute_coset_context(spec, leaders[idx]);
                BigCount c;
                if (options.short_circuit && (!ctx.pretransformable || coset_constraint_free(constraints, ctx)))
                    c = pow2(ctx.info_core_count);
                else
                    c = walk_coset(constraints, ctx, ws, stats[idx]);
                if (options.abort_above) {
                    std::lock_guard lock(sum_mutex);
                    running += c;
                    if (running > *options.abort_above) abort = true;
                }
                counts[idx] = std::move(c);
            }
        } catch (...) {
            std::lock_guard lock(sum_mutex);
            if (!failure) failure = std::current_exception();
            abort = true;
        }
    };

    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, leaders.size())));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    for (std::size_t idx = 0; idx < leaders.size(); ++idx) {
        result.stats += stats[idx];
        if (!counts[idx]) continue;
        result.count += *counts[idx];
        result.per_coset.emplace(leaders[idx], std::move(*counts[idx]));
    }
    result.aborted = abort.load();
    result.dmin_exceeds_wmin = !result.aborted && result.count == 0;
    return result;
}

}  // namespace ptpc
