#pragma once

#include "spinbasic/algnum.hpp"
#include "spinbasic/barcomb.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace spinbasic {

enum class Cover { Sym, Alt };
enum class AssocTag { Self, Plus, Minus };

std::string to_string(Cover c);
std::string to_string(AssocTag t);
Cover parse_cover(const std::string& s);

/// A spin character of the double cover of S_n (xi) or A_n (zeta).
struct SpinLabel {
    Cover cover = Cover::Sym;
    BarPartition lambda;
    AssocTag tag = AssocTag::Self;

    /// Validates that `tag` is compatible with sigma(lambda) on `cover`:
    /// on the S_n cover self-associate iff sigma = +1, on the A_n cover
    /// a single character iff sigma = -1.
    static SpinLabel make(Cover cover, BarPartition lambda, AssocTag tag);

    auto operator<=>(const SpinLabel&) const = default;
    bool operator==(const SpinLabel&) const = default;
};

std::string to_string(const SpinLabel& x);

/// Whether lambda labels a single (tag Self) character on the given cover.
bool labels_single_character(Cover cover, const BarPartition& lambda);

/// All spin labels of the cover for n; lambda descending, then self, plus, minus.
std::vector<SpinLabel> labels(Cover cover, int n);

/// Twist by the sign character.  On the A_n cover the two constituents of a
/// restricted self-associate character are conjugate under S_n, so the same
/// plus/minus swap is used there.
SpinLabel epsilon_twist(const SpinLabel& x);

/// For A_n-classes that split in A_n (distinct odd parts), which half.
enum class ClassHalf { None, Plus, Minus };

/// A conjugacy class of the cover on which spin characters can be nonzero.
///   S_n cover: pi in O_n or pi in D_n^-.
///   A_n cover: pi in O_n (two halves when the parts are distinct), or pi
///              in D_n^+ with an even part.
/// zflag selects t_pi (0) or z t_pi (1).
struct SplitClass {
    Cover cover = Cover::Sym;
    Partition pi;
    ClassHalf half = ClassHalf::None;
    int zflag = 0;
    std::uint64_t centralizer_order = 1;

    bool p_regular(int p) const;
    SplitClass with_z(int z) const;
    auto operator<=>(const SplitClass&) const = default;
    bool operator==(const SplitClass&) const = default;
};

std::string to_string(const SplitClass& c);

std::uint64_t z_of(const Partition& pi); // prod i^{m_i} m_i!
mpz_class group_order(Cover cover, int n);

/// Split classes of the cover with both z-parities (zflag 0 then 1 for each
/// label).  With p given, only classes whose parts are all prime to p.
std::vector<SplitClass> split_classes(Cover cover, int n, std::optional<int> regular_only_for = {});
/// Same, zflag = 0 representatives only.
std::vector<SplitClass> split_class_reps(Cover cover, int n,
                                         std::optional<int> regular_only_for = {});

/// The integers X^lambda_pi defined by
///   Q_lambda = sum_{pi in O_n} 2^{l(pi)} z_pi^{-1} X^lambda_pi p_pi,
/// computed by peeling parts r of pi: the adjoint of multiplication by p_r
/// acts on Q_lambda by lowering one part by r, and the resulting sequences
/// are straightened back to strict partitions.
///
/// Holds a memo table, so an instance must not be shared across threads.
class BarStripRecursion {
public:
    mpz_class operator()(const BarPartition& lambda, const Partition& odd_pi);

    /// The straightened terms of lowering one part of lambda by odd r:
    /// pairs (coefficient in {+-1, +-2}, resulting bar partition).
    static std::vector<std::pair<int, BarPartition>> lower_by(const BarPartition& lambda, int r);

private:
    std::map<std::pair<std::vector<int>, std::vector<int>>, mpz_class> memo_;
};

/// Exact value of a spin character on a split class.
AlgNum char_value(const SpinLabel& x, const SplitClass& c);
/// Same, reusing a caller-owned recursion memo.
AlgNum char_value(const SpinLabel& x, const SplitClass& c, BarStripRecursion& rec);

/// Degree from the bar-length formula
///   2^{floor((n - l)/2)} n! / prod l_i! * prod_{i<j} (l_i - l_j)/(l_i + l_j),
/// halved for the two constituents of a split restriction to the A_n cover.
mpz_class degree(const SpinLabel& x);

/// Hermitian inner product (1/|G|) sum |class| f conj(g) over a class list
/// that includes both z-parities.  The result must be rational.
mpq_class inner_product(std::span<const SplitClass> classes, std::span<const AlgNum> f,
                        std::span<const AlgNum> g, const mpz_class& group_order);

/// All spin values of one cover for one n, on zflag-0 representatives.
class CharacterTable {
public:
    CharacterTable(Cover cover, int n);

    Cover cover() const { return cover_; }
    int n() const { return n_; }
    const std::vector<SpinLabel>& labels() const { return labels_; }
    const std::vector<SplitClass>& classes() const { return classes_; }
    const AlgNum& value(std::size_t label, std::size_t cls) const { return values_[label][cls]; }
    const std::vector<AlgNum>& row(std::size_t label) const { return values_[label]; }
    std::size_t index_of(const SpinLabel& x) const;
    std::optional<std::size_t> class_index(const SplitClass& c) const;

    /// Classes with both z-parities, in the order of split_classes().
    std::vector<SplitClass> all_classes() const;
    /// Row over all_classes(): zflag-1 values are the negated zflag-0 ones.
    std::vector<AlgNum> full_row(std::size_t label) const;
    /// Value at any split class of this cover (either z-parity).
    AlgNum value_at(std::size_t label, const SplitClass& c) const;
    mpz_class group_order() const { return spinbasic::group_order(cover_, n_); }

private:
    Cover cover_;
    int n_;
    std::vector<SpinLabel> labels_;
    std::vector<SplitClass> classes_;
    std::vector<std::vector<AlgNum>> values_;
    std::map<SpinLabel, std::size_t> label_index_;
};

} // namespace spinbasic
