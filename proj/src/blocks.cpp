#include "spinbasic/blocks.hpp"

#include "spinbasic/errors.hpp"

#include <algorithm>

namespace spinbasic {

std::string to_string(const BlockId& b) {
    std::string s = to_string(b.cover) + " p=" + std::to_string(b.p) + " core=" +
                    to_string(b.core) + " w=" + std::to_string(b.weight);
    if (b.tag != AssocTag::Self)
        s += " " + to_string(b.tag);
    return s;
}

std::string to_string(LocalSide s) { return s == LocalSide::G ? "G" : "H"; }

std::string to_string(const LocalLabel& x) {
    std::string s = (x.side == LocalSide::G ? "psi" : "phi") + to_string(x.q);
    if (x.tag == AssocTag::Plus)
        s += "+";
    else if (x.tag == AssocTag::Minus)
        s += "-";
    return s;
}

bool local_single_character(LocalSide side, const BarQuotient& q) {
    const bool plus = q.sigma().is_plus();
    return side == LocalSide::G ? plus : !plus;
}

BlockId block_of(const SpinLabel& x, int p) {
    auto cq = bar_core_quotient(x.lambda, p);
    BlockId b{x.cover, p, cq.core, cq.weight(), AssocTag::Self};
    if (b.weight == 0)
        b.tag = x.tag;
    return b;
}

std::vector<Block> block_partition(Cover cover, int n, int p) {
    require_odd_prime(p);
    std::vector<Block> out;
    for (const auto& x : labels(cover, n)) {
        const BlockId id = block_of(x, p);
        auto it = std::find_if(out.begin(), out.end(), [&](const Block& b) { return b.id == id; });
        if (it == out.end())
            out.push_back({id, {x}});
        else
            it->members.push_back(x);
    }
    return out;
}

std::vector<SpinLabel> block_members(const BlockId& b) {
    require_odd_prime(b.p);
    std::vector<SpinLabel> out;
    for (const auto& x : labels(b.cover, b.n()))
        if (block_of(x, b.p) == b)
            out.push_back(x);
    return out;
}

std::vector<SpinLabel> basic_set(const BlockId& b) {
    std::vector<SpinLabel> out;
    for (auto& x : block_members(b))
        if (bar_core_quotient(x.lambda, b.p).quotient.lambda0.empty())
            out.push_back(std::move(x));
    return out;
}

std::vector<LocalLabel> local_basic_labels(int w, int p, LocalSide side) {
    require_odd_prime(p);
    if (w < 0)
        throw InvalidArgument("weight must be non-negative");
    std::vector<LocalLabel> out;
    for (auto& comps : enumerate_multipartitions(w, (p - 1) / 2)) {
        BarQuotient q{p, BarPartition(), std::move(comps)};
        if (local_single_character(side, q)) {
            out.push_back({side, q, AssocTag::Self});
        } else {
            out.push_back({side, q, AssocTag::Plus});
            out.push_back({side, q, AssocTag::Minus});
        }
    }
    return out;
}

mpz_class brauer_count(const BlockId& b) {
    require_odd_prime(b.p);
    if (b.weight == 0)
        return 1;
    const mpz_class tuples = enumerate_multipartitions(b.weight, (b.p - 1) / 2).size();
    // Every basic-set quotient has sign (-1)^w, so the block sign fixes
    // whether each one labels a pair or a single character.
    const bool w_odd = b.weight % 2 == 1;
    const bool pairs_on_sym = (w_odd && b.sign().is_plus()) || (!w_odd && !b.sign().is_plus());
    const bool pairs = b.cover == Cover::Sym ? pairs_on_sym : !pairs_on_sym;
    return pairs ? mpz_class(2 * tuples) : tuples;
}

} // namespace spinbasic
