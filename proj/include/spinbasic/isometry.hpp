#pragma once

#include "spinbasic/algnum.hpp"
#include "spinbasic/blocks.hpp"
#include "spinbasic/spinchar.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace spinbasic {

using AnyLabel = std::variant<SpinLabel, LocalLabel>;
std::string to_string(const AnyLabel& x);

/// A signed bijection: source[k] maps to signs[k] * images[k].
struct IsometrySpec {
    std::vector<AnyLabel> source;
    std::vector<AnyLabel> images;
    std::vector<Sign> signs;

    std::size_t size() const { return source.size(); }
    /// Index of a source label; throws InvalidArgument if absent.
    std::size_t index_of(const AnyLabel& x) const;
    bool operator==(const IsometrySpec&) const = default;
};

/// Checks totality and injectivity; throws InvalidArgument otherwise.
void validate(const IsometrySpec& spec);
IsometrySpec inverse(const IsometrySpec& spec);
/// outer o inner.  The images of inner must be exactly the sources of outer.
IsometrySpec compose(const IsometrySpec& outer, const IsometrySpec& inner);

IsometrySpec identity_isometry(const BlockId& b);

/// Swaps xi_lambda^+ and xi_lambda^- and fixes every other member of B.
IsometrySpec swap_J(const BlockId& b, const BarPartition& lambda);

/// xi_lambda(^+-) -> delta(lambda) (-1)^{|lambda0|} times the local label of
/// its p-bar quotient: psi on G when sigma(B) = +1, phi on H when -1, with
/// the association tag carried over.  Requires the S_n cover and w >= 1.
IsometrySpec iso_I(const BlockId& b);

/// Whether `spec` (an iso_I) sends basic_set(b) bijectively onto
/// local_basic_labels(w, p, side).
bool transports_basic_set(const IsometrySpec& spec, const BlockId& b);

/// Two-variable class function over split classes of both sides (both
/// z-parities).  Entries off split x split are zero and not stored.
struct Kernel {
    std::vector<SplitClass> row_classes;
    std::vector<SplitClass> col_classes;
    std::vector<std::vector<AlgNum>> values;

    const AlgNum& at(std::size_t r, std::size_t c) const { return values[r][c]; }
    std::optional<std::size_t> row_of(const SplitClass& c) const;
    std::optional<std::size_t> col_of(const SplitClass& c) const;
};

/// K(x, y) = sum_chi sign(chi) conj(chi(x)) I(chi)(y).
Kernel kernel_of(const IsometrySpec& spec, const CharacterTable& source,
                 const CharacterTable& target);

/// (A o B)(x, z) = sum over middle classes y of A(x, y) B(y, z) / |C(y)|,
/// i.e. (1/|G'|) sum over the elements of G'.
Kernel compose_kernel(const Kernel& a, const Kernel& b);

Kernel kernel_difference(const Kernel& a, const Kernel& b);

struct BroueViolation {
    SplitClass x;
    SplitClass y;
    AlgNum value;
    int condition; // 1 or 2
};

struct BroueReport {
    bool condition_i = true;
    bool condition_ii = true;
    std::vector<BroueViolation> violations;
    bool pass() const { return condition_i && condition_ii; }
};

/// (i) K(x, y) / |C(x)| and K(x, y) / |C(y)| are p-integral;
/// (ii) K(x, y) = 0 whenever exactly one of x, y is p-regular.
BroueReport broue_check(const Kernel& k, int p);

/// I o res = res o I on the split classes, where res zeroes the p-singular
/// classes.  Needs values on both sides, so local targets are rejected
/// with UnsupportedTarget.
bool perfect_check(const IsometrySpec& spec, const CharacterTable& table, int p);

} // namespace spinbasic
