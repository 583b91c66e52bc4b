#include "spinbasic/isometry.hpp"

#include "spinbasic/errors.hpp"
#include "spinbasic/zverify.hpp"

#include <algorithm>

namespace spinbasic {

std::string to_string(const AnyLabel& x) {
    return std::visit([](const auto& l) { return to_string(l); }, x);
}

std::size_t IsometrySpec::index_of(const AnyLabel& x) const {
    auto it = std::find(source.begin(), source.end(), x);
    if (it == source.end())
        throw InvalidArgument("label " + to_string(x) + " is not in the source of the isometry");
    return static_cast<std::size_t>(it - source.begin());
}

void validate(const IsometrySpec& spec) {
    if (spec.images.size() != spec.source.size() || spec.signs.size() != spec.source.size())
        throw InvalidArgument("isometry spec is not total");
    for (std::size_t i = 0; i < spec.size(); ++i)
        for (std::size_t j = i + 1; j < spec.size(); ++j) {
            if (spec.source[i] == spec.source[j])
                throw InvalidArgument("repeated source label " + to_string(spec.source[i]));
            if (spec.images[i] == spec.images[j])
                throw InvalidArgument("repeated image " + to_string(spec.images[i]));
        }
}

IsometrySpec inverse(const IsometrySpec& spec) {
    validate(spec);
    return {spec.images, spec.source, spec.signs};
}

IsometrySpec compose(const IsometrySpec& outer, const IsometrySpec& inner) {
    validate(outer);
    validate(inner);
    if (outer.size() != inner.size())
        throw InvalidArgument("isometries have different sizes");
    IsometrySpec out;
    for (std::size_t k = 0; k < inner.size(); ++k) {
        const std::size_t j = outer.index_of(inner.images[k]);
        out.source.push_back(inner.source[k]);
        out.images.push_back(outer.images[j]);
        out.signs.push_back(inner.signs[k] * outer.signs[j]);
    }
    return out;
}

IsometrySpec identity_isometry(const BlockId& b) {
    IsometrySpec spec;
    for (const auto& x : block_members(b)) {
        spec.source.emplace_back(x);
        spec.images.emplace_back(x);
        spec.signs.push_back(Sign::plus());
    }
    return spec;
}

IsometrySpec swap_J(const BlockId& b, const BarPartition& lambda) {
    if (b.cover != Cover::Sym)
        throw InvalidArgument("the swap isometry is defined on blocks of the S_n cover");
    if (sigma(lambda).is_plus())
        throw InvalidArgument(to_string(lambda) + " labels a self-associate character");
    const auto members = block_members(b);
    const SpinLabel plus{Cover::Sym, lambda, AssocTag::Plus};
    const SpinLabel minus{Cover::Sym, lambda, AssocTag::Minus};
    const bool has_plus = std::find(members.begin(), members.end(), plus) != members.end();
    const bool has_minus = std::find(members.begin(), members.end(), minus) != members.end();
    if (!has_plus || !has_minus)
        throw InvalidArgument("the pair for " + to_string(lambda) + " is not contained in block " +
                              to_string(b));
    IsometrySpec spec;
    for (const auto& x : members) {
        spec.source.emplace_back(x);
        spec.images.emplace_back(x.lambda == lambda ? epsilon_twist(x) : x);
        spec.signs.push_back(Sign::plus());
    }
    return spec;
}

IsometrySpec iso_I(const BlockId& b) {
    if (b.cover != Cover::Sym)
        throw InvalidArgument("the block isometry is defined on blocks of the S_n cover");
    if (b.weight == 0)
        throw InvalidArgument("the block isometry needs weight >= 1");
    const LocalSide side = b.sign().is_plus() ? LocalSide::G : LocalSide::H;
    IsometrySpec spec;
    for (const auto& x : block_members(b)) {
        const auto cq = bar_core_quotient(x.lambda, b.p);
        const bool single = local_single_character(side, cq.quotient);
        if (single != (x.tag == AssocTag::Self))
            throw InternalError("association of " + to_string(x) +
                                " does not match its local label");
        spec.source.emplace_back(x);
        spec.images.emplace_back(LocalLabel{side, cq.quotient, x.tag});
        spec.signs.push_back(delta_bar(x.lambda, b.p) *
                             Sign::parity(cq.quotient.lambda0.size()));
    }
    return spec;
}

bool transports_basic_set(const IsometrySpec& spec, const BlockId& b) {
    const LocalSide side = b.sign().is_plus() ? LocalSide::G : LocalSide::H;
    const auto expected = local_basic_labels(b.weight, b.p, side);
    std::vector<LocalLabel> got;
    for (const auto& x : basic_set(b)) {
        const auto* l = std::get_if<LocalLabel>(&spec.images[spec.index_of(x)]);
        if (!l)
            return false;
        if (std::find(got.begin(), got.end(), *l) != got.end())
            return false;
        got.push_back(*l);
    }
    if (got.size() != expected.size())
        return false;
    return std::all_of(expected.begin(), expected.end(), [&](const LocalLabel& l) {
        return std::find(got.begin(), got.end(), l) != got.end();
    });
}

std::optional<std::size_t> Kernel::row_of(const SplitClass& c) const {
    auto it = std::find(row_classes.begin(), row_classes.end(), c);
    if (it == row_classes.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - row_classes.begin());
}

std::optional<std::size_t> Kernel::col_of(const SplitClass& c) const {
    auto it = std::find(col_classes.begin(), col_classes.end(), c);
    if (it == col_classes.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - col_classes.begin());
}

namespace {

const SpinLabel& spin_label_or_throw(const AnyLabel& x) {
    if (const auto* s = std::get_if<SpinLabel>(&x))
        return *s;
    throw UnsupportedTarget("no character values are available for " + to_string(x));
}

} // namespace

Kernel kernel_of(const IsometrySpec& spec, const CharacterTable& source,
                 const CharacterTable& target) {
    validate(spec);
    Kernel k;
    k.row_classes = source.all_classes();
    k.col_classes = target.all_classes();
    k.values.assign(k.row_classes.size(), std::vector<AlgNum>(k.col_classes.size()));
    for (std::size_t t = 0; t < spec.size(); ++t) {
        const auto src_row = source.full_row(source.index_of(spin_label_or_throw(spec.source[t])));
        auto img_row = target.full_row(target.index_of(spin_label_or_throw(spec.images[t])));
        if (!spec.signs[t].is_plus())
            for (auto& v : img_row)
                v = -v;
        for (std::size_t r = 0; r < k.row_classes.size(); ++r) {
            if (src_row[r].is_zero())
                continue;
            const AlgNum left = src_row[r].conj();
            for (std::size_t c = 0; c < k.col_classes.size(); ++c)
                if (!img_row[c].is_zero())
                    k.values[r][c] += left * img_row[c];
        }
    }
    return k;
}

Kernel compose_kernel(const Kernel& a, const Kernel& b) {
    if (a.col_classes != b.row_classes)
        throw InvalidArgument("kernels do not share the middle group");
    Kernel out;
    out.row_classes = a.row_classes;
    out.col_classes = b.col_classes;
    out.values.assign(a.row_classes.size(), std::vector<AlgNum>(b.col_classes.size()));
    for (std::size_t y = 0; y < a.col_classes.size(); ++y) {
        const mpq_class w(1, mpz_class(static_cast<unsigned long>(a.col_classes[y].centralizer_order)));
        for (std::size_t x = 0; x < a.row_classes.size(); ++x) {
            if (a.values[x][y].is_zero())
                continue;
            const AlgNum left = a.values[x][y] * w;
            for (std::size_t z = 0; z < b.col_classes.size(); ++z)
                if (!b.values[y][z].is_zero())
                    out.values[x][z] += left * b.values[y][z];
        }
    }
    return out;
}

Kernel kernel_difference(const Kernel& a, const Kernel& b) {
    if (a.row_classes != b.row_classes || a.col_classes != b.col_classes)
        throw InvalidArgument("kernels are over different classes");
    Kernel out = a;
    for (std::size_t r = 0; r < a.values.size(); ++r)
        for (std::size_t c = 0; c < a.values[r].size(); ++c)
            out.values[r][c] -= b.values[r][c];
    return out;
}

BroueReport broue_check(const Kernel& k, int p) {
    require_odd_prime(p);
    BroueReport rep;
    for (std::size_t r = 0; r < k.row_classes.size(); ++r) {
        const auto& x = k.row_classes[r];
        const mpz_class cx(static_cast<unsigned long>(x.centralizer_order));
        for (std::size_t c = 0; c < k.col_classes.size(); ++c) {
            const auto& v = k.values[r][c];
            if (v.is_zero())
                continue;
            const auto& y = k.col_classes[c];
            const mpz_class cy(static_cast<unsigned long>(y.centralizer_order));
            if (!p_integrality(v, p, cx) || !p_integrality(v, p, cy)) {
                rep.condition_i = false;
                rep.violations.push_back({x, y, v, 1});
            }
            if (x.p_regular(p) != y.p_regular(p)) {
                rep.condition_ii = false;
                rep.violations.push_back({x, y, v, 2});
            }
        }
    }
    return rep;
}

bool perfect_check(const IsometrySpec& spec, const CharacterTable& table, int p) {
    validate(spec);
    const auto classes = table.all_classes();
    const auto order = table.group_order();
    auto restrict = [&](std::vector<AlgNum> row) {
        for (std::size_t j = 0; j < classes.size(); ++j)
            if (!classes[j].p_regular(p))
                row[j] = AlgNum();
        return row;
    };
    auto signed_image_row = [&](std::size_t t) {
        auto row = table.full_row(table.index_of(spin_label_or_throw(spec.images[t])));
        if (!spec.signs[t].is_plus())
            for (auto& v : row)
                v = -v;
        return row;
    };
    // reject local targets up front
    for (std::size_t t = 0; t < spec.size(); ++t) {
        spin_label_or_throw(spec.source[t]);
        spin_label_or_throw(spec.images[t]);
    }

    for (std::size_t t = 0; t < spec.size(); ++t) {
        const auto res_chi =
            restrict(table.full_row(table.index_of(std::get<SpinLabel>(spec.source[t]))));
        // expand res(chi) in the irreducible spin characters
        std::vector<AlgNum> lhs(classes.size());
        for (std::size_t e = 0; e < table.labels().size(); ++e) {
            const auto eta = table.full_row(e);
            const mpq_class coeff = inner_product(classes, res_chi, eta, order);
            if (coeff == 0)
                continue;
            const AnyLabel eta_label = table.labels()[e];
            auto it = std::find(spec.source.begin(), spec.source.end(), eta_label);
            if (it == spec.source.end())
                return false; // res(chi) leaves the span of the block
            const auto img = signed_image_row(static_cast<std::size_t>(it - spec.source.begin()));
            for (std::size_t j = 0; j < classes.size(); ++j)
                lhs[j] += img[j] * coeff;
        }
        if (lhs != restrict(signed_image_row(t)))
            return false;
    }
    return true;
}

} // namespace spinbasic
