#include <doctest.h>

#include <random>

#include "ptpc/bounds.hpp"
#include "ptpc/enumerator.hpp"
#include "support.hpp"

using namespace ptpc;

TEST_CASE("Gaussian tail") {
    CHECK(q_function(0.0) == doctest::Approx(0.5));
    CHECK(q_function(1.0) == doctest::Approx(0.15865525393145705).epsilon(1e-12));
    CHECK(q_function(3.0) == doctest::Approx(0.0013498980316300946).epsilon(1e-12));
}

TEST_CASE("union bound on a one-term spectrum") {
    const WeightSpectrum s({{8, BigCount(620)}});
    // Reference from a 40-digit evaluation of 620 Q(sqrt(2 * 8 * 0.5 * 10^0.4)).
    CHECK(union_bound_fer(s, 0.5, 4.0) == doctest::Approx(0.0022842519480618933).epsilon(1e-10));
    CHECK(union_bound_fer(s, 0.5, 6.0) < union_bound_fer(s, 0.5, 4.0));
    CHECK_THROWS_AS(union_bound_fer(s, 0.0, 4.0), std::invalid_argument);
    CHECK_THROWS_AS(union_bound_fer(WeightSpectrum{}, 0.5, 4.0), std::invalid_argument);
}

TEST_CASE("weight spectrum validation") {
    CHECK_THROWS_AS(WeightSpectrum({{8, BigCount(1)}, {8, BigCount(2)}}), std::invalid_argument);
    CHECK_THROWS_AS(WeightSpectrum({{8, BigCount(0)}}), std::invalid_argument);
    const WeightSpectrum s({{4, BigCount(14)}, {8, BigCount(1)}});
    CHECK(s.count_at(4) == 14);
    CHECK(s.count_at(6) == 0);
    CHECK(s.total() == 15);
}

TEST_CASE("lower bound from non-pretransformable cosets") {
    CHECK(lb_non_pretransformable(rm_profile(2, 5)) == 140);
    CHECK(lb_non_pretransformable(rm_profile(3, 9)) >= 1240);
    CHECK(lb_rm_closed_form(0) == 1);
    CHECK(lb_rm_closed_form(1) == 14);
    CHECK(lb_rm_closed_form(3) == 1240);
    CHECK_THROWS_AS(lb_rm_closed_form(-1), std::invalid_argument);

    // Universal profile: nothing is frozen, every coset is non-pretransformable.
    for (int n = 2; n <= 6; ++n) {
        std::vector<std::uint32_t> all(std::size_t{1} << n);
        for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
        const CodeSpec universal(n, all);
        CHECK(classify_cosets(universal).pretransformable.empty());
        CHECK(lb_non_pretransformable(universal) == count_min_weight(universal, PreTransform::identity(n)).count);
    }
}

TEST_CASE("guaranteed non-pretransformable RM cosets") {
    for (int n = 2; n <= 9; ++n)
        for (int r = 0; r <= n - 2; ++r) {
            const auto spec = rm_profile(r, n);
            const auto classes = classify_cosets(spec);
            BigCount sum = 0;
            for (auto i : rm_guaranteed_non_pretransformable(r, n)) {
                const auto ctx = compute_coset_context(spec, i);
                CHECK_FALSE(ctx.pretransformable);
                sum += pow2(ctx.info_core_count);
            }
            CHECK(sum == lb_rm_closed_form(r));
            CHECK(lb_rm_closed_form(r) <= lb_non_pretransformable(spec));
        }
    CHECK_THROWS_AS(rm_guaranteed_non_pretransformable(3, 4), std::invalid_argument);
}

TEST_CASE("bounds sandwich A_wmin under random pre-transforms") {
    std::mt19937_64 rng(12);
    for (int n = 3; n <= 8; ++n)
        for (int r = 0; r <= n - 2; ++r) {
            const auto spec = rm_profile(r, n);
            const auto lb = lb_non_pretransformable(spec);
            for (int trial = 0; trial < 3; ++trial) {
                const auto a = count_min_weight(spec, random_transform(spec, rng())).count;
                CHECK(lb_rm_closed_form(r) <= lb);
                CHECK(lb <= a);
            }
        }
}

TEST_CASE("minimum distance statement") {
    const auto d = dmin_statement(rm_profile(2, 5));
    CHECK(d.wmin == 8);
    CHECK(d.guaranteed_exact);
    CHECK_FALSE(dmin_statement(CodeSpec(4, {10, 11, 14, 15})).guaranteed_exact);
}
