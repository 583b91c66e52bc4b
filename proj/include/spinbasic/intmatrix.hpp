#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace spinbasic {

using IntRow = std::vector<mpz_class>;
using IntMatrix = std::vector<IntRow>;
using RatRow = std::vector<mpq_class>;

/// Row-style Hermite normal form of the Z-module spanned by the rows.
/// Zero rows are dropped; pivots are positive and strictly move right;
/// entries above a pivot lie in [0, pivot).  Two matrices span the same
/// lattice iff their forms are equal.
IntMatrix hermite_normal_form(IntMatrix rows);

/// Rank over Q (= rank of the generated lattice).
std::size_t lattice_rank(const IntMatrix& rows);

/// The unique rational coefficients c with sum c_i basis_i = target when
/// basis rows are linearly independent; nullopt if target is outside the
/// rational span.  Throws InvalidArgument on dependent basis rows.
std::optional<RatRow> solve_coordinates(const IntMatrix& basis, const IntRow& target);

} // namespace spinbasic
