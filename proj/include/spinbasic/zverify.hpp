#pragma once

#include "spinbasic/algnum.hpp"
#include "spinbasic/blocks.hpp"
#include "spinbasic/intmatrix.hpp"
#include "spinbasic/spinchar.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace spinbasic {

/// Spin character values restricted to the p-regular split classes
/// (zflag 0 representatives).
struct ValueMatrix {
    std::vector<SpinLabel> rows;
    std::vector<SplitClass> cols;
    std::vector<std::vector<AlgNum>> entries;

    /// Sub-matrix on the given labels (which must all be rows here).
    ValueMatrix select(const std::vector<SpinLabel>& labels) const;
    std::size_t row_index(const SpinLabel& x) const;
};

/// Q-basis element sqrt(d) (imag = false) or i*sqrt(d).
using BasisKey = std::pair<std::uint64_t, bool>;

/// Rows of `m` expanded over the radicals that occur in it, scaled by one
/// common denominator so that every coordinate is an integer.
struct ExpandedRows {
    std::vector<BasisKey> basis;
    mpz_class scale;
    IntMatrix rows;
};

ExpandedRows expand_over_integral_basis(const std::vector<std::vector<AlgNum>>& rows);

struct RowCoordinates {
    SpinLabel label;
    std::optional<std::vector<mpq_class>> coefficients; // over the candidate rows
    bool integral = false;
};

struct VerificationReport {
    std::optional<BlockId> block;
    std::vector<SpinLabel> candidates;
    std::vector<RowCoordinates> others;
    std::size_t rank_full = 0;
    std::size_t rank_candidates = 0;
    bool candidates_independent = false;
    bool hnf_equal = false;
    bool pass = false;
};

/// Restricted matrix of a block: its members against the p-regular split
/// classes.  Values at z t_pi are the negatives of those at t_pi, so any
/// integral relation on the zflag-0 columns holds on the zflag-1 columns
/// as well; only zflag 0 is kept.
ValueMatrix restricted_matrix(const BlockId& b);
ValueMatrix restricted_matrix(const BlockId& b, const CharacterTable& table);

/// Decides whether the candidate rows form a Z-basis of the Z-span of all
/// rows of `full`.  The answer is computed twice: by comparing Hermite
/// normal forms, and by solving for each remaining row's coordinates.
VerificationReport z_span_equal(const ValueMatrix& candidate, const ValueMatrix& full);

/// Integer-matrix form of z_span_equal (candidate rows are the first
/// `candidate_count` rows of `rows`).
struct IntSpanResult {
    bool pass = false;
    bool candidates_independent = false;
    bool hnf_equal = false;
    std::size_t rank_full = 0;
    std::size_t rank_candidates = 0;
    std::vector<std::optional<RatRow>> coordinates; // for rows after the candidates
};
IntSpanResult int_span_equal(const IntMatrix& rows, std::size_t candidate_count);

VerificationReport verify_basic_set(const BlockId& b);
VerificationReport verify_basic_set(const BlockId& b, const CharacterTable& table);

/// Whether v / denominator lies in the localization at p of the algebraic
/// integers.  Decided on the coordinates over {sqrt(d), i sqrt(d)}: for odd
/// p the ring they generate is p-locally maximal, so this is exact.
bool p_integrality(const AlgNum& v, int p, const mpz_class& denominator);

} // namespace spinbasic
