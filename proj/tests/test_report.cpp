#include "spinbasic/report.hpp"

#include <doctest.h>

using namespace spinbasic;
using report::json;

TEST_CASE("partitions serialize as descending arrays") {
    CHECK(report::to_json(BarPartition{5, 2}).dump() == "[5,2]");
    CHECK(report::to_json(BarPartition{}).dump() == "[]");
    CHECK(report::to_json(Partition{2, 2, 1}).dump() == "[2,2,1]");
}

TEST_CASE("quotients") {
    const BarQuotient q{3, {1}, {Partition{2, 1}}};
    CHECK(report::to_json(q).dump() == R"({"lambda0":[1],"components":[[2,1]]})");
}

TEST_CASE("algebraic numbers as (num, den, d) triples") {
    const AlgNum v = AlgNum(mpq_class(1, 2)) + AlgNum::radical(-3, 2, true);
    CHECK(report::to_json(v).dump() == R"({"re":[[1,2,1]],"im":[[-3,1,2]]})");
    CHECK(report::to_json(AlgNum()).dump() == R"({"re":[],"im":[]})");
}

TEST_CASE("big integers fall back to strings") {
    mpz_class big = 1;
    big <<= 80;
    CHECK(report::integer(big).is_string());
    CHECK(report::integer(mpz_class(-5)) == json(-5));
}

TEST_CASE("verification report") {
    const auto r = verify_basic_set({Cover::Sym, 3, {}, 1, AssocTag::Self});
    const auto j = report::to_json(r);
    CHECK(j["pass"] == true);
    CHECK(j["basic_set"].size() == 2);
    CHECK(j["relations"][0]["coefficients"].dump() == "[[1,1],[1,1]]");
    CHECK(j["block"]["core"].dump() == "[]");
}
