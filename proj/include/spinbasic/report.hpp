#pragma once

#include "spinbasic/algnum.hpp"
#include "spinbasic/barcomb.hpp"
#include "spinbasic/blocks.hpp"
#include "spinbasic/isometry.hpp"
#include "spinbasic/spinchar.hpp"
#include "spinbasic/zverify.hpp"

#include <json.hpp>

namespace spinbasic::report {

using json = nlohmann::ordered_json;

/// Integers that fit in a long are numbers, larger ones decimal strings.
json integer(const mpz_class& v);
json rational(const mpq_class& v); // [num, den]

json to_json(const Partition& mu);
json to_json(const BarPartition& lambda);
json to_json(const BarQuotient& q);
/// {"re": [[num, den, d], ...], "im": [...]}, meaning sum (num/den) sqrt(d).
json to_json(const AlgNum& v);
json to_json(const SpinLabel& x);
json to_json(const LocalLabel& x);
json to_json(const AnyLabel& x);
json to_json(const SplitClass& c);
json to_json(const BlockId& b);
json to_json(const VerificationReport& r);
json to_json(const IsometrySpec& s);
json to_json(const BroueReport& r);

} // namespace spinbasic::report
