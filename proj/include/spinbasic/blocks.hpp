#pragma once

#include "spinbasic/barcomb.hpp"
#include "spinbasic/spinchar.hpp"

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace spinbasic {

/// A spin p-block, identified by its p-bar core and weight.  A block of
/// weight 0 holds exactly one character, so for a core carrying an
/// associate pair the tag picks out which one; otherwise tag is Self.
struct BlockId {
    Cover cover = Cover::Sym;
    int p = 3;
    BarPartition core;
    int weight = 0;
    AssocTag tag = AssocTag::Self;

    int n() const { return core.size() + p * weight; }
    Sign sign() const { return sigma(core); }
    bool defect_zero() const { return weight == 0; }
    bool operator==(const BlockId&) const = default;
};

std::string to_string(const BlockId& b);

/// Which local group the isometry lands in: G for sign +1 blocks, H for -1.
enum class LocalSide { G, H };
std::string to_string(LocalSide s);

struct LocalLabel {
    LocalSide side = LocalSide::G;
    BarQuotient q;
    AssocTag tag = AssocTag::Self;
    bool operator==(const LocalLabel&) const = default;
};

std::string to_string(const LocalLabel& x);

/// Whether a quotient labels one character (true) or a pair on the given
/// side: on G a pair iff sigma(q) = -1, on H a pair iff sigma(q) = +1.
bool local_single_character(LocalSide side, const BarQuotient& q);

BlockId block_of(const SpinLabel& x, int p);

struct Block {
    BlockId id;
    std::vector<SpinLabel> members; // canonical label order
};

/// The spin p-blocks of the cover for n, ordered by first member.
std::vector<Block> block_partition(Cover cover, int n, int p);

/// Labels of B, in canonical order.
std::vector<SpinLabel> block_members(const BlockId& b);

/// Members of B whose p-bar quotient has an empty lambda0.
std::vector<SpinLabel> basic_set(const BlockId& b);

/// Local labels (empty, q^1, ..., q^{(p-1)/2}) of weight w, each quotient
/// expanded into one or two labels by the association rule of `side`.
std::vector<LocalLabel> local_basic_labels(int w, int p, LocalSide side);

/// Number of irreducible Brauer characters of B from the counting formula.
mpz_class brauer_count(const BlockId& b);

} // namespace spinbasic
