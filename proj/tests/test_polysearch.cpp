#include <doctest.h>

#include "ptpc/enumerator.hpp"
#include "ptpc/polysearch.hpp"

using namespace ptpc;

TEST_CASE("tie-break order") {
    const RankedPolynomial a{PacPolynomial(0b1011), 10};
    const RankedPolynomial b{PacPolynomial(0b1101), 10};
    const RankedPolynomial c{PacPolynomial(0b11), 10};
    const RankedPolynomial d{PacPolynomial(0b1111), 9};
    const RankedPolynomial e{PacPolynomial(0b1001), 10};
    CHECK(better_candidate(d, c));
    CHECK(better_candidate(c, a));
    CHECK(better_candidate(e, a));
    CHECK(better_candidate(a, b));
    CHECK_FALSE(better_candidate(a, a));
}

TEST_CASE("degree zero search gives the plain code") {
    const auto r = search_optimal_polynomial(rm_profile(2, 5), 0);
    CHECK(r.best.packed() == 1);
    CHECK(r.best_count == 620);
    CHECK(r.candidates == 1);
}

TEST_CASE("search over degree nine reaches 236") {
    const auto spec = rm_profile(2, 5);
    SearchOptions o;
    o.threads = 1;
    const auto r = search_optimal_polynomial(spec, 9, o);
    CHECK(r.best_count == 236);
    CHECK(r.best.degree() == 9);
    CHECK(r.candidates == 512);
    CHECK(r.ranking.size() == 10);
    CHECK(count_min_weight(spec, pac_transform(spec, r.best)).count == r.best_count);
    for (std::size_t k = 1; k < r.ranking.size(); ++k) CHECK(better_candidate(r.ranking[k - 1], r.ranking[k]));

    o.threads = 3;
    const auto p = search_optimal_polynomial(spec, 9, o);
    CHECK(p.best == r.best);
    CHECK(p.ties_considered == r.ties_considered);
    REQUIRE(p.ranking.size() == r.ranking.size());
    for (std::size_t k = 0; k < r.ranking.size(); ++k) {
        CHECK(p.ranking[k].polynomial == r.ranking[k].polynomial);
        CHECK(p.ranking[k].count == r.ranking[k].count);
    }

    o.early_abort = false;
    o.threads = 1;
    const auto full = search_optimal_polynomial(spec, 9, o);
    CHECK(full.best == r.best);
    CHECK(full.aborted == 0);
}

TEST_CASE("larger search spaces never do worse") {
    const auto spec = rm_profile(2, 5);
    BigCount previous = search_optimal_polynomial(spec, 0).best_count;
    for (int q = 1; q <= 7; ++q) {
        const auto r = search_optimal_polynomial(spec, q);
        CHECK(r.best_count <= previous);
        CHECK(r.best_count >= 1);
        previous = r.best_count;
    }
}

TEST_CASE("search space is capped at N - 1") {
    const auto r = search_optimal_polynomial(rm_profile(1, 3), 20);
    CHECK(r.max_degree == 7);
    CHECK(r.candidates == 128);
    CHECK_THROWS_AS(search_optimal_polynomial(rm_profile(1, 3), -1), std::invalid_argument);
}
