#include "oracles.hpp"

#include "spinbasic/barcomb.hpp"
#include "spinbasic/errors.hpp"

#include <doctest.h>

#include <set>

using namespace spinbasic;

namespace {

std::vector<BarQuotient> quotients_of_weight(int w, int p) {
    std::vector<BarQuotient> out;
    for (int a = 0; a <= w; ++a)
        for (const auto& l0 : enumerate_bar_partitions(a))
            for (const auto& comps : enumerate_multipartitions(w - a, (p - 1) / 2))
                out.push_back(BarQuotient{p, l0, comps});
    return out;
}

} // namespace

TEST_CASE("bar partitions: small enumerations") {
    const auto e0 = enumerate_bar_partitions(0);
    REQUIRE(e0.size() == 1);
    CHECK(e0[0].empty());

    const auto e6 = enumerate_bar_partitions(6);
    const std::vector<BarPartition> want6 = {{6}, {5, 1}, {4, 2}, {3, 2, 1}};
    CHECK(e6 == want6);
    CHECK(enumerate_bar_partitions(7).size() == 5);
}

TEST_CASE("bar partitions: enumeration agrees with subset oracle, n <= 20") {
    for (int n = 0; n <= 20; ++n) {
        const auto got = enumerate_bar_partitions(n);
        const auto want = oracle::strict_partitions(n);
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i)
            CHECK(got[i].parts() == want[i]);
    }
}

TEST_CASE("constructors reject malformed parts") {
    CHECK_THROWS_AS(BarPartition({3, 3}), InvalidArgument);
    CHECK_THROWS_AS(BarPartition({1, 2}), InvalidArgument);
    CHECK_THROWS_AS(BarPartition({2, 0}), InvalidArgument);
    CHECK_THROWS_AS(Partition({1, 2}), InvalidArgument);
    CHECK_NOTHROW(Partition({2, 2, 1}));
}

TEST_CASE("sigma") {
    CHECK(sigma(BarPartition{}) == Sign::plus());
    CHECK(sigma(BarPartition{3, 2, 1}) == Sign::minus());
    CHECK(sigma(BarPartition{7}) == Sign::plus());
}

TEST_CASE("odd prime checks") {
    CHECK(is_odd_prime(3));
    CHECK(is_odd_prime(11));
    CHECK_FALSE(is_odd_prime(2));
    CHECK_FALSE(is_odd_prime(9));
    CHECK_FALSE(is_odd_prime(1));
    CHECK_THROWS_AS(bar_core_quotient(BarPartition{4}, 4), InvalidParameter);
    CHECK_THROWS_AS(bar_core_quotient(BarPartition{4}, 9), InvalidParameter);
    CHECK_THROWS_AS(bar_core_quotient(BarPartition{4}, 2), InvalidParameter);
}

TEST_CASE("bar core and quotient: fixtures") {
    const auto a = bar_core_quotient(BarPartition{4, 3, 1}, 3);
    CHECK(a.core == BarPartition{4, 1});
    CHECK(a.weight() == 1);
    CHECK(a.quotient.lambda0 == BarPartition{1});
    REQUIRE(a.quotient.components.size() == 1);
    CHECK(a.quotient.components[0].empty());

    const auto b = bar_core_quotient(BarPartition{5, 4}, 3);
    CHECK(b.core.empty());
    CHECK(b.weight() == 3);

    const auto c = bar_core_quotient(BarPartition{5, 2}, 3);
    CHECK(c.core == BarPartition{5, 2});
    CHECK(c.weight() == 0);
    CHECK(is_bar_core(BarPartition{5, 2}, 3));
}

TEST_CASE("bar core agrees with removal oracle, n <= 18") {
    for (int p : {3, 5, 7})
        for (int n = 0; n <= 18; ++n)
            for (const auto& l : enumerate_bar_partitions(n)) {
                const auto cq = bar_core_quotient(l, p);
                const auto [core, w] = oracle::bar_core_by_removal(l.parts(), p);
                CHECK(cq.core.parts() == core);
                CHECK(cq.weight() == w);
                CHECK(cq.core.size() + p * cq.weight() == l.size());
                CHECK(oracle::bar_steps(cq.core.parts(), p).empty());
            }
}

TEST_CASE("sign identity sigma(l) = sigma(core) (-1)^(w - l(l0)), n <= 30") {
    for (int p : {3, 5, 7, 11})
        for (int n = 0; n <= 30; ++n)
            for (const auto& l : enumerate_bar_partitions(n)) {
                const auto cq = bar_core_quotient(l, p);
                CHECK(sigma(l) == sigma(cq.core) * cq.quotient.sigma());
                CHECK(cq.quotient.sigma() == Sign::parity(cq.weight() - cq.quotient.lambda0.length()));
            }
}

TEST_CASE("core/quotient map is injective and roundtrips") {
    for (int p : {3, 5, 7}) {
        for (int n = 0; n <= 22; ++n) {
            std::set<std::pair<std::vector<int>, std::string>> seen;
            for (const auto& l : enumerate_bar_partitions(n)) {
                const auto cq = bar_core_quotient(l, p);
                CHECK(from_core_quotient(cq.core, cq.quotient, p) == l);
                CHECK(seen.insert({cq.core.parts(), to_string(cq.quotient)}).second);
            }
        }
    }
}

TEST_CASE("from_core_quotient: converse roundtrip over small cores and weights") {
    for (int p : {3, 5}) {
        for (int m = 0; m <= 10; ++m)
            for (const auto& core : enumerate_bar_partitions(m)) {
                if (!is_bar_core(core, p))
                    continue;
                for (int w = 0; w <= 3; ++w)
                    for (const auto& q : quotients_of_weight(w, p)) {
                        const auto l = from_core_quotient(core, q, p);
                        CHECK(l.size() == core.size() + p * w);
                        const auto back = bar_core_quotient(l, p);
                        CHECK(back.core == core);
                        CHECK(back.quotient == q);
                    }
            }
    }
}

TEST_CASE("from_core_quotient: fixtures and errors") {
    const BarQuotient empty{3, {}, {Partition{}}};
    CHECK(from_core_quotient(BarPartition{5, 2}, empty, 3) == BarPartition{5, 2});
    CHECK(from_core_quotient(BarPartition{1}, BarQuotient{3, BarPartition{1}, {Partition{}}}, 3) ==
          BarPartition{3, 1});
    const BarQuotient q111{3, {}, {Partition{1, 1, 1}}};
    const auto l = from_core_quotient(BarPartition{}, q111, 3);
    CHECK(bar_core_quotient(l, 3).quotient == q111);
    CHECK(bar_core_quotient(l, 3).core.empty());

    CHECK_THROWS_AS(from_core_quotient(BarPartition{4}, empty, 3), InvalidCore);
    CHECK_THROWS_AS(from_core_quotient(BarPartition{2, 1}, empty, 3), InvalidCore);
    CHECK_THROWS_AS(from_core_quotient(BarPartition{3}, empty, 3), InvalidCore);
    CHECK_THROWS_AS(from_core_quotient(BarPartition{}, BarQuotient{5, {}, {Partition{}}}, 5),
                    InvalidArgument);
}

TEST_CASE("relative sign is independent of the removal order, n <= 14") {
    for (int p : {3, 5, 7})
        for (int n = 0; n <= 14; ++n)
            for (const auto& l : enumerate_bar_partitions(n)) {
                const auto all = oracle::delta_over_all_orders(l.parts(), p);
                REQUIRE(all.size() == 1);
                CHECK(delta_bar(l, p).value() == *all.begin());
            }
    CHECK(delta_bar(BarPartition{5, 2}, 3) == Sign::plus());
    CHECK(delta_bar(BarPartition{4, 1}, 3) == Sign::plus());
}

TEST_CASE("removable bars agree with the oracle's steps") {
    for (int p : {3, 5})
        for (int n = 0; n <= 12; ++n)
            for (const auto& l : enumerate_bar_partitions(n)) {
                const auto lib = removable_bars(l, p);
                const auto ref = oracle::bar_steps(l.parts(), p);
                REQUIRE(lib.size() == ref.size());
                std::multiset<std::pair<std::vector<int>, int>> a, b;
                for (const auto& r : lib)
                    a.insert({r.result.parts(), r.leg % 2});
                for (const auto& r : ref)
                    b.insert({r.result, r.leg % 2});
                CHECK(a == b);
            }
}

TEST_CASE("doubling") {
    CHECK(doubling(BarPartition{}).empty());
    CHECK(doubling(BarPartition{1}) == Partition{2});
    CHECK(doubling(BarPartition{2, 1}) == Partition{3, 3});
    for (int n = 0; n <= 15; ++n)
        for (const auto& l : enumerate_bar_partitions(n))
            CHECK(doubling(l).size() == 2 * n);
}

TEST_CASE("doubling: empty lambda0 iff middle quotient component empty, n <= 20") {
    for (int p : {3, 5, 7})
        for (int n = 0; n <= 20; ++n)
            for (const auto& l : enumerate_bar_partitions(n)) {
                const bool l0_empty = bar_core_quotient(l, p).quotient.lambda0.empty();
                const auto pq = partition_core_quotient(doubling(l), p);
                CHECK(l0_empty == pq.quotient[(p + 1) / 2 - 1].empty());
            }
}

TEST_CASE("ordinary core and quotient") {
    const auto a = partition_core_quotient(Partition{3, 3}, 3);
    CHECK(a.core.empty());
    CHECK(a.weight() == 2);
    const auto b = partition_core_quotient(Partition{2}, 3);
    CHECK(b.core == Partition{2});
    CHECK(b.weight() == 0);

    for (int p : {2, 3, 5})
        for (int m = 0; m <= 12; ++m)
            for (const auto& mu : enumerate_partitions(m)) {
                const auto cq = partition_core_quotient(mu, p);
                const auto [core, w] = oracle::partition_core_by_rim_hooks(mu.parts(), p);
                CHECK(cq.core.parts() == core);
                CHECK(cq.weight() == w);
                CHECK(cq.quotient.size() == static_cast<std::size_t>(p));
                CHECK(partition_from_core_quotient(cq.core, cq.quotient, p) == mu);
            }
}

TEST_CASE("multipartitions") {
    CHECK(enumerate_multipartitions(2, 1).size() == 2);
    CHECK(enumerate_multipartitions(3, 2).size() == 10);
    CHECK(enumerate_multipartitions(0, 3).size() == 1);
}

TEST_CASE("parsing and printing") {
    CHECK(parse_bar_partition("5,2") == BarPartition{5, 2});
    CHECK(parse_bar_partition("(5, 2)") == BarPartition{5, 2});
    CHECK(parse_bar_partition("").empty());
    CHECK_THROWS_AS(parse_bar_partition("2,5"), InvalidArgument);
    CHECK_THROWS_AS(parse_bar_partition("a"), InvalidArgument);
    CHECK(to_string(BarPartition{4, 3, 1}) == "(4,3,1)");
    CHECK(to_string(bar_core_quotient(BarPartition{4, 3, 1}, 3).quotient) == "((1);())");
}
