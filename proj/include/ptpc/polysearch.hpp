#pragma once

#include <cstdint>
#include <vector>

#include "ptpc/bitvector.hpp"
#include "ptpc/code_model.hpp"

namespace ptpc {

struct RankedPolynomial {
    PacPolynomial polynomial{1};
    BigCount count = 0;
};

struct SearchReport {
    PacPolynomial best{1};
    BigCount best_count = 0;
    std::uint64_t wmin = 0;
    int min_degree = 0;
    int max_degree = 0;
    std::uint64_t candidates = 0;
    /// Candidates whose count tied the incumbent and lost on degree,
    /// coefficient count or value.
    std::uint64_t ties_considered = 0;
    /// Candidates stopped once their partial count exceeded the cut-off.
    std::uint64_t aborted = 0;
    /// Best candidates in tie-break order (at most `keep` of them).
    std::vector<RankedPolynomial> ranking;
};

struct SearchOptions {
    /// Length of the reported ranking.
    std::size_t keep = 10;
    /// Abort a candidate once its partial count exceeds the current cut-off.
    bool early_abort = true;
    /// Worker threads across candidates; 0 picks the hardware count.
    unsigned threads = 0;
};

/// Strict weak order used to pick the optimum: smaller count, then lower
/// degree, then fewer nonzero coefficients, then smaller packed value.
bool better_candidate(const RankedPolynomial& a, const RankedPolynomial& b);

/// Exhaustive search over p(x) with p_0 = p_q = 1 and degree
/// q in [0, max_degree] (capped at N - 1) for the minimum A_wmin.
SearchReport search_optimal_polynomial(const CodeSpec& spec, int max_degree, const SearchOptions& options = {});

}  // namespace ptpc
