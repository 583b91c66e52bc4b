#include "spinbasic/report.hpp"

namespace spinbasic::report {

json integer(const mpz_class& v) {
    if (v.fits_slong_p())
        return v.get_si();
    return v.get_str();
}

json rational(const mpq_class& v) { return json::array({integer(v.get_num()), integer(v.get_den())}); }

json to_json(const Partition& mu) { return json(mu.parts()); }
json to_json(const BarPartition& lambda) { return json(lambda.parts()); }

json to_json(const BarQuotient& q) {
    json comps = json::array();
    for (const auto& c : q.components)
        comps.push_back(to_json(c));
    return {{"lambda0", to_json(q.lambda0)}, {"components", comps}};
}

json to_json(const AlgNum& v) {
    auto part = [](const AlgNum::Radicals& r) {
        json a = json::array();
        for (const auto& [d, c] : r)
            a.push_back(json::array({integer(c.get_num()), integer(c.get_den()), d}));
        return a;
    };
    return {{"re", part(v.re())}, {"im", part(v.im())}};
}

json to_json(const SpinLabel& x) {
    return {{"lambda", to_json(x.lambda)}, {"tag", to_string(x.tag)}, {"name", to_string(x)}};
}

json to_json(const LocalLabel& x) {
    return {{"side", to_string(x.side)},
            {"quotient", to_json(x.q)},
            {"tag", to_string(x.tag)},
            {"name", to_string(x)}};
}

json to_json(const AnyLabel& x) {
    return std::visit([](const auto& l) { return to_json(l); }, x);
}

json to_json(const SplitClass& c) {
    std::string half = "none";
    if (c.half == ClassHalf::Plus)
        half = "plus";
    else if (c.half == ClassHalf::Minus)
        half = "minus";
    return {{"pi", to_json(c.pi)},
            {"half", half},
            {"z", c.zflag},
            {"centralizer", c.centralizer_order},
            {"name", to_string(c)}};
}

json to_json(const BlockId& b) {
    return {{"group", to_string(b.cover)},
            {"p", b.p},
            {"core", to_json(b.core)},
            {"weight", b.weight},
            {"tag", to_string(b.tag)},
            {"sign", b.sign().value()},
            {"defect_zero", b.defect_zero()}};
}

json to_json(const VerificationReport& r) {
    json out;
    if (r.block)
        out["block"] = to_json(*r.block);
    json cand = json::array();
    for (const auto& x : r.candidates)
        cand.push_back(to_json(x));
    out["basic_set"] = cand;
    json rel = json::array();
    for (const auto& rc : r.others) {
        json e = {{"label", to_json(rc.label)}, {"integral", rc.integral}};
        if (rc.coefficients) {
            json co = json::array();
            for (const auto& q : *rc.coefficients)
                co.push_back(rational(q));
            e["coefficients"] = co;
        } else {
            e["coefficients"] = nullptr;
        }
        rel.push_back(e);
    }
    out["relations"] = rel;
    out["rank_full"] = r.rank_full;
    out["rank_basic_set"] = r.rank_candidates;
    out["independent"] = r.candidates_independent;
    out["hnf_equal"] = r.hnf_equal;
    out["pass"] = r.pass;
    return out;
}

json to_json(const IsometrySpec& s) {
    json m = json::array();
    for (std::size_t k = 0; k < s.size(); ++k)
        m.push_back({{"source", to_json(s.source[k])},
                     {"sign", s.signs[k].value()},
                     {"image", to_json(s.images[k])}});
    return m;
}

json to_json(const BroueReport& r) {
    json v = json::array();
    for (const auto& e : r.violations)
        v.push_back({{"x", to_json(e.x)},
                     {"y", to_json(e.y)},
                     {"value", to_json(e.value)},
                     {"condition", e.condition}});
    return {{"condition_i", r.condition_i}, {"condition_ii", r.condition_ii}, {"pass", r.pass()},
            {"violations", v}};
}

} // namespace spinbasic::report
