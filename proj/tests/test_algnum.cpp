#include "spinbasic/algnum.hpp"

#include <doctest.h>

#include <random>

using spinbasic::AlgNum;

namespace {

AlgNum random_algnum(std::mt19937& rng) {
    static const std::uint64_t radicals[] = {1, 2, 3, 5, 6, 7, 10};
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3), pick(0, 6), terms(0, 3), coin(0, 1);
    AlgNum a;
    const int t = terms(rng);
    for (int k = 0; k < t; ++k) {
        mpq_class c(num(rng), den(rng));
        c.canonicalize();
        a += AlgNum::radical(c, radicals[pick(rng)], coin(rng) == 1);
    }
    return a;
}

} // namespace

TEST_CASE("radical arithmetic") {
    CHECK(AlgNum::sqrt(2) * AlgNum::sqrt(2) == AlgNum(2));
    CHECK(AlgNum::i() * AlgNum::i() == AlgNum(-1));
    CHECK(AlgNum::sqrt(2) * AlgNum::sqrt(3) == AlgNum::sqrt(6));
    CHECK(AlgNum::sqrt(12) == AlgNum::sqrt(3) * mpq_class(2));
    CHECK(AlgNum::sqrt(6) * AlgNum::sqrt(10) == AlgNum::sqrt(15) * mpq_class(2));
    CHECK(AlgNum::sqrt(0).is_zero());
    CHECK(AlgNum::sqrt(1) == AlgNum(1));
}

TEST_CASE("powers of i") {
    CHECK(AlgNum::i_pow(0) == AlgNum(1));
    CHECK(AlgNum::i_pow(1) == AlgNum::i());
    CHECK(AlgNum::i_pow(2) == AlgNum(-1));
    CHECK(AlgNum::i_pow(3) == -AlgNum::i());
    CHECK(AlgNum::i_pow(-1) == -AlgNum::i());
    CHECK(AlgNum::i_pow(8) == AlgNum(1));
}

TEST_CASE("conjugation and rational views") {
    const AlgNum z = AlgNum(3) + AlgNum::i() * AlgNum::sqrt(2);
    CHECK(z.conj() == AlgNum(3) - AlgNum::i() * AlgNum::sqrt(2));
    CHECK((z * z.conj()).as_rational() == mpq_class(11));
    CHECK_FALSE(z.as_rational().has_value());
    CHECK((AlgNum(1) - AlgNum(1)).is_zero());
    CHECK((AlgNum::sqrt(2) / mpq_class(2)) * AlgNum::sqrt(2) == AlgNum(1));
}

TEST_CASE("coordinates over the radical basis") {
    const AlgNum z = AlgNum(mpq_class(1, 2)) + AlgNum::radical(-3, 5, true);
    const auto c = z.coordinates();
    REQUIRE(c.size() == 2);
    CHECK(c[0].first == std::make_pair<std::uint64_t, bool>(1, false));
    CHECK(c[0].second == mpq_class(1, 2));
    CHECK(c[1].first == std::make_pair<std::uint64_t, bool>(5, true));
    CHECK(c[1].second == -3);
}

TEST_CASE("squarefree split") {
    CHECK(spinbasic::squarefree_split(72) == std::make_pair<std::uint64_t, std::uint64_t>(6, 2));
    CHECK(spinbasic::squarefree_split(1) == std::make_pair<std::uint64_t, std::uint64_t>(1, 1));
    CHECK(spinbasic::squarefree_split(30) == std::make_pair<std::uint64_t, std::uint64_t>(1, 30));
}

TEST_CASE("ring laws on 10^4 random triples") {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 10000; ++trial) {
        const AlgNum a = random_algnum(rng), b = random_algnum(rng), c = random_algnum(rng);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE((a * b).conj() == a.conj() * b.conj());
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a + b == b + a);
        REQUIRE(a - a == AlgNum());
    }
}

TEST_CASE("text form") {
    CHECK(AlgNum().to_string() == "0");
    CHECK_FALSE(AlgNum::i().to_string().empty());
    CHECK(AlgNum::sqrt(2).approx_re() == doctest::Approx(1.41421356).epsilon(1e-8));
    CHECK(AlgNum::i().approx_im() == doctest::Approx(1.0));
}
