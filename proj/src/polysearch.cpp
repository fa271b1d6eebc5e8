#include "ptpc/polysearch.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "ptpc/enumerator.hpp"

namespace ptpc {

bool better_candidate(const RankedPolynomial& a, const RankedPolynomial& b) {
    if (a.count != b.count) return a.count < b.count;
    const auto& p = a.polynomial;
    const auto& q = b.polynomial;
    if (p.degree() != q.degree()) return p.degree() < q.degree();
    if (p.nonzero_count() != q.nonzero_count()) return p.nonzero_count() < q.nonzero_count();
    return p.packed() < q.packed();
}

namespace {

std::vector<std::uint64_t> candidate_polynomials(int max_degree) {
    std::vector<std::uint64_t> out{1};
    for (int q = 1; q <= max_degree; ++q) {
        const std::uint64_t top = std::uint64_t{1} << q;
        const std::uint64_t middles = std::uint64_t{1} << (q - 1);
        for (std::uint64_t mid = 0; mid < middles; ++mid) out.push_back(top | (mid << 1) | 1u);
    }
    return out;
}

}  // namespace

SearchReport search_optimal_polynomial(const CodeSpec& spec, int max_degree, const SearchOptions& options) {
    if (max_degree < 0) throw std::invalid_argument("search: max_degree must be >= 0");
    const int cap = static_cast<int>(std::min<std::size_t>(spec.length() - 1, 62));
    const int top_degree = std::min(max_degree, cap);
    const std::size_t keep = std::max<std::size_t>(1, options.keep);

    const auto candidates = candidate_polynomials(top_degree);
    std::vector<std::optional<BigCount>> exact(candidates.size());

    std::mutex m;
    std::vector<RankedPolynomial> ranking;
    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> aborted{0};
    std::uint64_t wmin = 0;
    std::exception_ptr failure;

    auto worker = [&] {
        try {
            while (true) {
                const auto idx = next.fetch_add(1);
                if (idx >= candidates.size()) break;
                const PacPolynomial p(candidates[idx]);
                EnumerationOptions eo;
                eo.threads = 1;
                if (options.early_abort) {
                    std::lock_guard lock(m);
                    if (ranking.size() >= keep) eo.abort_above = ranking.back().count;
                }
                auto result = count_min_weight(spec, pac_transform(spec, p), eo);
                if (result.aborted) {
                    ++aborted;
                    continue;
                }
                std::lock_guard lock(m);
                wmin = result.wmin;
                exact[idx] = result.count;
                RankedPolynomial entry{p, result.count};
                auto pos = std::lower_bound(ranking.begin(), ranking.end(), entry, better_candidate);
                ranking.insert(pos, std::move(entry));
                if (ranking.size() > keep) ranking.pop_back();
            }
        } catch (...) {
            std::lock_guard lock(m);
            if (!failure) failure = std::current_exception();
            next = candidates.size();
        }
    };

    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, candidates.size()));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    SearchReport report;
    report.min_degree = 0;
    report.max_degree = top_degree;
    report.candidates = candidates.size();
    report.aborted = aborted.load();
    report.wmin = wmin;
    report.best = ranking.front().polynomial;
    report.best_count = ranking.front().count;
    for (const auto& c : exact)
        if (c && *c == report.best_count) ++report.ties_considered;
    --report.ties_considered;
    report.ranking = std::move(ranking);
    return report;
}

}  // namespace ptpc
