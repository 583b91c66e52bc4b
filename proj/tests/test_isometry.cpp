#include "oracles.hpp"

#include "spinbasic/errors.hpp"
#include "spinbasic/isometry.hpp"
#include "spinbasic/zverify.hpp"

#include <doctest.h>

using namespace spinbasic;

namespace {

SpinLabel xi(BarPartition l, AssocTag t = AssocTag::Self) { return {Cover::Sym, std::move(l), t}; }

SplitClass t_of(const Partition& pi, int z = 0) {
    return SplitClass{Cover::Sym, pi, ClassHalf::None, z, 2 * z_of(pi)};
}

const BlockId kB3{Cover::Sym, 3, {}, 1, AssocTag::Self};
const BlockId kB4{Cover::Sym, 3, {1}, 1, AssocTag::Self};

std::vector<BarPartition> pairs_in(const Block& b) {
    std::vector<BarPartition> out;
    if (b.id.defect_zero())
        return out;
    for (const auto& x : b.members)
        if (x.tag == AssocTag::Plus)
            out.push_back(x.lambda);
    return out;
}

bool kernels_equal(const Kernel& a, const Kernel& b) {
    return a.row_classes == b.row_classes && a.col_classes == b.col_classes && a.values == b.values;
}

} // namespace

TEST_CASE("swap isometry on the n = 3 block") {
    const auto j = swap_J(kB3, {2, 1});
    REQUIRE(j.size() == 3);
    CHECK(j.images[j.index_of(xi({3}))] == AnyLabel(xi({3})));
    CHECK(j.images[j.index_of(xi({2, 1}, AssocTag::Plus))] == AnyLabel(xi({2, 1}, AssocTag::Minus)));
    CHECK(j.images[j.index_of(xi({2, 1}, AssocTag::Minus))] == AnyLabel(xi({2, 1}, AssocTag::Plus)));
    for (const auto& s : j.signs)
        CHECK(s == Sign::plus());
    CHECK(compose(j, j) == identity_isometry(kB3));
}

TEST_CASE("swap isometry on the n = 4 block") {
    const auto j = swap_J(kB4, {4});
    CHECK(j.images[j.index_of(xi({4}, AssocTag::Plus))] == AnyLabel(xi({4}, AssocTag::Minus)));
    CHECK(j.images[j.index_of(xi({3, 1}))] == AnyLabel(xi({3, 1})));
}

TEST_CASE("swap isometry errors") {
    CHECK_THROWS_AS(swap_J(kB3, {3}), InvalidArgument);                // self-associate
    CHECK_THROWS_AS(swap_J(kB4, {2, 1}), InvalidArgument);             // not in the block
    CHECK_THROWS_AS(swap_J({Cover::Sym, 3, {5, 2}, 0, AssocTag::Plus}, {5, 2}), InvalidArgument);
    CHECK_THROWS_AS(swap_J({Cover::Alt, 3, {}, 1, AssocTag::Self}, {2, 1}), InvalidArgument);
}

TEST_CASE("block isometry fixtures") {
    const auto i3 = iso_I(kB3);
    const auto& ip = std::get<LocalLabel>(i3.images[i3.index_of(xi({2, 1}, AssocTag::Plus))]);
    const auto& im = std::get<LocalLabel>(i3.images[i3.index_of(xi({2, 1}, AssocTag::Minus))]);
    CHECK(ip.side == LocalSide::G);
    CHECK(ip.q == BarQuotient{3, {}, {Partition{1}}});
    CHECK(ip.tag == AssocTag::Plus);
    CHECK(im.tag == AssocTag::Minus);
    const int d21 = *oracle::delta_over_all_orders({2, 1}, 3).begin();
    CHECK(i3.signs[i3.index_of(xi({2, 1}, AssocTag::Plus))].value() == d21);

    const auto& i_3 = std::get<LocalLabel>(i3.images[i3.index_of(xi({3}))]);
    CHECK(i_3.q == BarQuotient{3, {1}, {Partition{}}});
    CHECK(i_3.tag == AssocTag::Self);
    const int d3 = *oracle::delta_over_all_orders({3}, 3).begin();
    CHECK(i3.signs[i3.index_of(xi({3}))].value() == -d3);

    CHECK_THROWS_AS(iso_I({Cover::Sym, 3, {5, 2}, 0, AssocTag::Plus}), InvalidArgument);
    CHECK_THROWS_AS(iso_I({Cover::Alt, 3, {}, 1, AssocTag::Self}), InvalidArgument);
}

TEST_CASE("block isometry on sign -1 blocks lands on H") {
    // core (2) for p = 3 has sigma = -1
    const BlockId b{Cover::Sym, 3, {2}, 1, AssocTag::Self};
    const auto i = iso_I(b);
    for (const auto& img : i.images)
        CHECK(std::get<LocalLabel>(img).side == LocalSide::H);
}

TEST_CASE("block isometry: transport, twist compatibility and inverse, n <= 12") {
    for (int p : {3, 5, 7})
        for (int n = 1; n <= 12; ++n)
            for (const auto& b : block_partition(Cover::Sym, n, p)) {
                if (b.id.defect_zero())
                    continue;
                const auto spec = iso_I(b.id);
                CHECK(transports_basic_set(spec, b.id));
                for (std::size_t k = 0; k < spec.size(); ++k) {
                    const auto& x = std::get<SpinLabel>(spec.source[k]);
                    const std::size_t t = spec.index_of(epsilon_twist(x));
                    auto l = std::get<LocalLabel>(spec.images[k]);
                    if (l.tag != AssocTag::Self)
                        l.tag = l.tag == AssocTag::Plus ? AssocTag::Minus : AssocTag::Plus;
                    CHECK(spec.images[t] == AnyLabel(l));
                    CHECK(spec.signs[t] == spec.signs[k]);
                }
                CHECK(inverse(inverse(spec)) == spec);
                const auto round = compose(inverse(spec), spec);
                CHECK(round == identity_isometry(b.id));
            }
}

TEST_CASE("spec validation") {
    IsometrySpec bad = identity_isometry(kB3);
    bad.images[1] = bad.images[0];
    CHECK_THROWS_AS(validate(bad), InvalidArgument);
    IsometrySpec short_spec = identity_isometry(kB3);
    short_spec.signs.pop_back();
    CHECK_THROWS_AS(validate(short_spec), InvalidArgument);
    CHECK_THROWS_AS(identity_isometry(kB3).index_of(xi({4}, AssocTag::Plus)), InvalidArgument);
}

TEST_CASE("kernels on the n = 3 block") {
    const CharacterTable t(Cover::Sym, 3);
    const auto id = kernel_of(identity_isometry(kB3), t, t);
    const auto r = *id.row_of(t_of({1, 1, 1}));
    CHECK(id.at(r, r) == AlgNum(6));

    const auto jk = kernel_of(swap_J(kB3, {2, 1}), t, t);
    const auto diff = kernel_difference(jk, id);
    const auto s = *diff.row_of(t_of({2, 1}));
    CHECK(diff.at(s, s) == AlgNum(-4)); // -2 z_(2,1)
    CHECK(diff.at(r, r).is_zero());
    CHECK(kernels_equal(compose_kernel(jk, jk), id));
}

TEST_CASE("kernels on the n = 4 block, lambda = (4)") {
    const CharacterTable t(Cover::Sym, 4);
    const auto id = kernel_of(identity_isometry(kB4), t, t);
    const auto jk = kernel_of(swap_J(kB4, {4}), t, t);
    const auto diff = kernel_difference(jk, id);
    const auto r0 = *diff.row_of(t_of({4}));
    const auto r1 = *diff.row_of(t_of({4}, 1));
    CHECK(t_of({4}).centralizer_order == 8);
    CHECK(diff.at(r0, r0) == AlgNum(-8));
    CHECK(diff.at(r0, r1) == AlgNum(8));
    // away from t_(4), z t_(4) the kernels agree
    for (std::size_t x = 0; x < diff.row_classes.size(); ++x) {
        if (diff.row_classes[x].pi == Partition{4})
            continue;
        for (std::size_t y = 0; y < diff.col_classes.size(); ++y)
            if (diff.col_classes[y].pi == Partition{4})
                CHECK(diff.at(x, y).is_zero());
    }
    CHECK(p_integrality(diff.at(r0, r0), 3, 8));
    CHECK(broue_check(jk, 3).pass());
}

TEST_CASE("composing with the identity kernel, n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        const CharacterTable t(Cover::Sym, n);
        for (int p : {3, 5})
            for (const auto& b : block_partition(Cover::Sym, n, p)) {
                const auto id = kernel_of(identity_isometry(b.id), t, t);
                std::vector<Kernel> ks = {id};
                for (const auto& l : pairs_in(b))
                    ks.push_back(kernel_of(swap_J(b.id, l), t, t));
                for (const auto& k : ks) {
                    CHECK(kernels_equal(compose_kernel(id, k), k));
                    CHECK(kernels_equal(compose_kernel(k, id), k));
                }
            }
    }
}

TEST_CASE("all-zero kernels compose to zero") {
    const CharacterTable t(Cover::Sym, 4);
    auto z = kernel_of(identity_isometry(kB4), t, t);
    for (auto& row : z.values)
        for (auto& v : row)
            v = AlgNum();
    const auto c = compose_kernel(z, z);
    for (const auto& row : c.values)
        for (const auto& v : row)
            CHECK(v.is_zero());
}

TEST_CASE("kernel composition matches the composed spec, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        const CharacterTable t(Cover::Sym, n);
        for (int p : {3, 5})
            for (const auto& b : block_partition(Cover::Sym, n, p)) {
                std::vector<IsometrySpec> specs = {identity_isometry(b.id)};
                for (const auto& l : pairs_in(b))
                    specs.push_back(swap_J(b.id, l));
                for (const auto& a : specs)
                    for (const auto& c : specs)
                        CHECK(kernels_equal(compose_kernel(kernel_of(a, t, t), kernel_of(c, t, t)),
                                            kernel_of(compose(c, a), t, t)));
            }
    }
}

TEST_CASE("kernel composition checks the middle group") {
    const CharacterTable t3(Cover::Sym, 3), t4(Cover::Sym, 4);
    const auto a = kernel_of(identity_isometry(kB3), t3, t3);
    const auto b = kernel_of(identity_isometry(kB4), t4, t4);
    CHECK_THROWS_AS(compose_kernel(a, b), InvalidArgument);
}

TEST_CASE("Broue conditions for swap kernels, n <= 9") {
    for (int n = 2; n <= 9; ++n) {
        const CharacterTable t(Cover::Sym, n);
        for (int p : {3, 5})
            for (const auto& b : block_partition(Cover::Sym, n, p)) {
                CHECK(broue_check(kernel_of(identity_isometry(b.id), t, t), p).pass());
                for (const auto& l : pairs_in(b))
                    CHECK(broue_check(kernel_of(swap_J(b.id, l), t, t), p).pass());
            }
    }
}

TEST_CASE("Broue check catches a corrupted entry") {
    const CharacterTable t(Cover::Sym, 3);
    auto k = kernel_of(swap_J(kB3, {2, 1}), t, t);
    // (3) is 3-singular, (2,1) is 3-regular
    const auto x = *k.row_of(t_of({3}));
    const auto y = *k.col_of(t_of({2, 1}));
    k.values[x][y] = AlgNum(1);
    const auto rep = broue_check(k, 3);
    CHECK_FALSE(rep.condition_ii);
    CHECK_FALSE(rep.pass());
    CHECK_FALSE(rep.violations.empty());
}

TEST_CASE("perfectness of self-isometries") {
    for (int n = 1; n <= 7; ++n) {
        const CharacterTable t(Cover::Sym, n);
        for (int p : {3, 5})
            for (const auto& b : block_partition(Cover::Sym, n, p)) {
                CHECK(perfect_check(identity_isometry(b.id), t, p));
                for (const auto& l : pairs_in(b))
                    CHECK(perfect_check(swap_J(b.id, l), t, p));
            }
    }
    const CharacterTable t3(Cover::Sym, 3);
    CHECK_THROWS_AS(perfect_check(iso_I(kB3), t3, 3), UnsupportedTarget);
    CHECK_THROWS_AS(kernel_of(iso_I(kB3), t3, t3), UnsupportedTarget);

    // exchanging a self-associate character with half of a pair is not perfect
    IsometrySpec wrong = identity_isometry(kB3);
    std::swap(wrong.images[0], wrong.images[1]);
    CHECK_FALSE(perfect_check(wrong, t3, 3));
}
