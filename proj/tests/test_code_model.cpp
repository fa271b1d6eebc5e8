#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "ptpc/code_model.hpp"
#include "ptpc/transform_io.hpp"
#include "support.hpp"

using namespace ptpc;

namespace {

// All codewords of the code as packed words; n <= 6 keeps one word per codeword.
std::set<std::uint64_t> codebook(const CodeSpec& spec, const PreTransform& t) {
    std::set<std::uint64_t> out;
    const auto K = spec.dimension();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << K); ++m) {
        BitVector msg(K);
        for (std::size_t b = 0; b < K; ++b) msg.set(b, (m >> b) & 1u);
        out.insert(encode(spec, t, msg).words()[0]);
    }
    return out;
}

}  // namespace

TEST_CASE("CodeSpec validates and sorts") {
    const CodeSpec s(4, {15, 10, 14, 11});
    CHECK(s.length() == 16);
    CHECK(s.dimension() == 4);
    CHECK(s.rate() == doctest::Approx(0.25));
    CHECK(std::vector<std::uint32_t>(s.info_set().begin(), s.info_set().end()) ==
          std::vector<std::uint32_t>{10, 11, 14, 15});
    CHECK(s.frozen_set().size() == 12);
    CHECK(s.is_info(10));
    CHECK(s.is_frozen(12));
    CHECK_THROWS_AS(CodeSpec(4, {}), std::invalid_argument);
    CHECK_THROWS_AS(CodeSpec(4, {3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(CodeSpec(4, {16}), std::invalid_argument);
    CHECK_THROWS_AS(CodeSpec(0, {0}), std::invalid_argument);
}

TEST_CASE("Reed-Muller profiles") {
    const auto rm13 = rm_profile(1, 3);
    CHECK(std::vector<std::uint32_t>(rm13.info_set().begin(), rm13.info_set().end()) ==
          std::vector<std::uint32_t>{3, 5, 6, 7});
    CHECK(rm_profile(2, 5).dimension() == 16);
    CHECK(rm_profile(3, 7).dimension() == 64);
    CHECK(rm_profile(0, 3).dimension() == 1);
    CHECK(rm_profile(3, 3).dimension() == 8);
    CHECK_THROWS_AS(rm_profile(4, 3), std::invalid_argument);
}

TEST_CASE("decreasing profiles") {
    for (int n = 1; n <= 7; ++n)
        for (int r = 0; r <= n; ++r) CHECK(is_decreasing_profile(rm_profile(r, n)));
    CHECK_FALSE(is_decreasing_profile(CodeSpec(4, {10, 11, 14, 15})));
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + trial % 5;
        CHECK(is_decreasing_profile(testing::random_decreasing_profile(n, rng)));
    }
}

TEST_CASE("PAC polynomial parsing") {
    const auto p = PacPolynomial::from_octal("155");
    CHECK(p.packed() == 0155u);
    CHECK(p.degree() == 6);
    CHECK(p.nonzero_count() == 5);
    CHECK(p.coefficient(0));
    CHECK_FALSE(p.coefficient(1));
    CHECK(p.octal() == "155");
    CHECK(PacPolynomial::from_octal("5767471_8").octal() == "5767471");
    CHECK(PacPolynomial::from_octal("1").degree() == 0);
    CHECK_THROWS_AS(PacPolynomial::from_octal("18"), std::invalid_argument);
    CHECK_THROWS_AS(PacPolynomial::from_octal(""), std::invalid_argument);
    CHECK_THROWS_AS(PacPolynomial(2), std::invalid_argument);
}

TEST_CASE("PAC transform is Toeplitz") {
    const CodeSpec s = rm_profile(1, 3);
    const auto t = pac_transform(s, PacPolynomial::from_octal("155"));
    for (std::size_t h = 0; h < 8; ++h)
        for (std::size_t j = 0; j < 8; ++j) {
            const bool expected = j >= h && ((0155u >> (j - h)) & 1u);
            CHECK(t.entry(h, j) == expected);
        }
    CHECK(t.is_upper_triangular());
    const auto plain = pac_transform(s, PacPolynomial(1));
    for (std::size_t h = 0; h < 8; ++h)
        for (std::size_t j = 0; j < 8; ++j) CHECK(plain.entry(h, j) == (h == j));
    CHECK_THROWS_AS(pac_transform(s, PacPolynomial::from_octal("777")), std::invalid_argument);
}

TEST_CASE("random transforms are reproducible and well formed") {
    const auto s = rm_profile(3, 7);
    const auto a = random_transform(s, 42);
    const auto b = random_transform(s, 42);
    const auto c = random_transform(s, 43);
    bool same = true, differ = false;
    for (std::size_t h = 0; h < s.length(); ++h) {
        same = same && a.row(h) == b.row(h);
        differ = differ || !(a.row(h) == c.row(h));
    }
    CHECK(same);
    CHECK(differ);
    CHECK(a.is_upper_triangular());
    CHECK_NOTHROW(a.validate_for(s));
    for (auto f : s.frozen_set()) CHECK(a.row(f).empty());
    std::size_t ones = 0, slots = 0;
    for (auto i : s.info_set()) {
        ones += a.row(i).support().size() - 1;
        slots += s.length() - 1 - i;
    }
    CHECK(static_cast<double>(ones) / static_cast<double>(slots) == doctest::Approx(0.5).epsilon(0.05));
}

TEST_CASE("validate_for rejects bad matrices") {
    const CodeSpec s(3, {3, 5, 6, 7});
    auto t = PreTransform::identity(3);
    CHECK_NOTHROW(t.validate_for(s));
    t.set_entry(5, 5, false);
    CHECK_THROWS_AS(t.validate_for(s), std::invalid_argument);
    auto lower = PreTransform::identity(3);
    lower.set_entry(6, 2, true);
    CHECK_FALSE(lower.is_upper_triangular());
    CHECK_THROWS_AS(lower.validate_for(s), std::invalid_argument);
    CHECK_THROWS_AS(PreTransform::identity(4).validate_for(s), std::invalid_argument);
}

TEST_CASE("polar transform matches the explicit generator matrix") {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 9; ++n) {
        const std::size_t N = std::size_t{1} << n;
        for (int trial = 0; trial < 5; ++trial) {
            BitVector u(N);
            for (std::size_t i = 0; i < N; ++i) u.set(i, rng() & 1u);
            BitVector expected(N);
            for (auto i : u.support()) {
                const auto row = testing::naive_row(static_cast<std::uint32_t>(i), n);
                for (std::size_t x = 0; x < N; ++x)
                    if (row[x]) expected.flip(x);
            }
            auto c = u;
            polar_transform(c);
            CHECK(c == expected);
        }
    }
}

TEST_CASE("systematization keeps the code and decouples information rows") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + trial % 5;
        const auto spec = testing::random_profile(n, rng, 0.4);
        if (spec.dimension() > 14) continue;
        const auto t = random_transform(spec, rng());
        const auto sys = systematize(t, spec);
        CHECK(sys.systematized());
        CHECK(sys.is_upper_triangular());
        for (auto i : spec.info_set())
            for (auto j : spec.info_set()) CHECK(sys.entry(i, j) == (i == j));
        for (auto f : spec.frozen_set()) CHECK(sys.row(f).empty());
        CHECK(codebook(spec, t) == codebook(spec, sys));
    }
}

TEST_CASE("dynamic frozen values") {
    const CodeSpec s(3, {3, 5, 6, 7});
    const auto t = systematize(pac_transform(s, PacPolynomial::from_octal("13")), s);
    BitVector u(8);
    u.set(3);
    // 13_8 = x^3 + x + 1: row 3 reaches columns 3, 4 and 6.
    CHECK(dynamic_frozen_value(s, t, u, 3, 4));
    const auto id = systematize(PreTransform::identity(3), s);
    CHECK_FALSE(dynamic_frozen_value(s, id, u, 3, 4));
}

TEST_CASE("encoding a unit message gives the leader row") {
    const auto s = rm_profile(2, 4);
    const auto t = PreTransform::identity(4);
    for (std::size_t k = 0; k < s.dimension(); ++k) {
        BitVector m(s.dimension());
        m.set(k);
        const auto c = encode(s, t, m);
        const auto row = testing::naive_row(s.info_set()[k], 4);
        for (std::size_t x = 0; x < 16; ++x) CHECK(c.test(x) == (row[x] == 1));
    }
}

TEST_CASE("profile files") {
    std::istringstream in("# example\nn=4\n10\n11  # core\n\n14\n15\n");
    const auto s = parse_profile(in);
    CHECK(s == CodeSpec(4, {10, 11, 14, 15}));
    std::ostringstream out;
    write_profile(out, s);
    std::istringstream back(out.str());
    CHECK(parse_profile(back) == s);

    auto bad = [](const std::string& text) {
        std::istringstream is(text);
        return parse_profile(is);
    };
    CHECK_THROWS_AS(bad("10\n"), FormatError);
    CHECK_THROWS_AS(bad("n=4\n16\n"), FormatError);
    CHECK_THROWS_AS(bad("n=4\n11\n10\n"), FormatError);
    CHECK_THROWS_AS(bad("n=4\nx\n"), FormatError);
    CHECK_THROWS_AS(bad("n=4\n"), FormatError);
    try {
        bad("n=4\n3\nabc\n");
    } catch (const FormatError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("transform files") {
    const auto s = rm_profile(1, 3);
    const auto t = random_transform(s, 9);
    std::ostringstream out;
    write_transform(out, t);
    std::istringstream back(out.str());
    const auto u = parse_transform(back);
    for (std::size_t h = 0; h < 8; ++h) CHECK(u.row(h) == t.row(h));

    auto bad = [](const std::string& text) {
        std::istringstream is(text);
        return parse_transform(is);
    };
    CHECK_THROWS_AS(bad("n=3\n2: 1\n"), FormatError);
    CHECK_THROWS_AS(bad("n=3\n2: 9\n"), FormatError);
    CHECK_THROWS_AS(bad("n=3\n2 3\n"), FormatError);
    CHECK_THROWS_AS(bad("0: 0\n"), FormatError);
    CHECK_THROWS_AS(load_transform("/nonexistent/t.txt"), FormatError);
}
