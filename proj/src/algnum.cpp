#include "spinbasic/algnum.hpp"

#include "spinbasic/errors.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace spinbasic {

std::pair<std::uint64_t, std::uint64_t> squarefree_split(std::uint64_t m) {
    if (m == 0)
        return {0, 1};
    std::uint64_t s = 1, d = 1;
    for (std::uint64_t f = 2; f * f <= m; ++f) {
        int e = 0;
        while (m % f == 0) {
            m /= f;
            ++e;
        }
        for (int k = 0; k < e / 2; ++k)
            s *= f;
        if (e % 2)
            d *= f;
    }
    d *= m;
    return {s, d};
}

AlgNum::AlgNum(long v) : AlgNum(mpq_class(v)) {}

AlgNum::AlgNum(const mpq_class& v) {
    if (v != 0)
        re_[1] = v;
}

AlgNum AlgNum::i() { return radical(1, 1, true); }

AlgNum AlgNum::i_pow(long k) {
    switch (((k % 4) + 4) % 4) {
    case 0: return AlgNum(1);
    case 1: return i();
    case 2: return AlgNum(-1);
    default: return -i();
    }
}

AlgNum AlgNum::sqrt(std::uint64_t m) {
    auto [s, d] = squarefree_split(m);
    if (m == 0)
        return AlgNum();
    return radical(mpq_class(mpz_class(static_cast<unsigned long>(s))), d);
}

AlgNum AlgNum::radical(const mpq_class& coeff, std::uint64_t d, bool imag) {
    AlgNum a;
    if (coeff != 0)
        (imag ? a.im_ : a.re_)[d] = coeff;
    return a;
}

std::optional<mpq_class> AlgNum::as_rational() const {
    if (!im_.empty())
        return std::nullopt;
    if (re_.empty())
        return mpq_class(0);
    if (re_.size() == 1 && re_.begin()->first == 1)
        return re_.begin()->second;
    return std::nullopt;
}

AlgNum AlgNum::conj() const {
    AlgNum a = *this;
    for (auto& [d, c] : a.im_)
        c = -c;
    return a;
}

void AlgNum::add_into(Radicals& dst, const Radicals& src, int sign) {
    for (const auto& [d, c] : src) {
        auto it = dst.find(d);
        if (it == dst.end()) {
            dst.emplace(d, sign > 0 ? c : mpq_class(-c));
        } else {
            if (sign > 0)
                it->second += c;
            else
                it->second -= c;
            if (it->second == 0)
                dst.erase(it);
        }
    }
}

AlgNum::Radicals AlgNum::mul(const Radicals& a, const Radicals& b) {
    Radicals out;
    for (const auto& [da, ca] : a) {
        for (const auto& [db, cb] : b) {
            // sqrt(da) sqrt(db) = g sqrt((da/g)(db/g)), g = gcd(da, db)
            const std::uint64_t g = std::gcd(da, db);
            const std::uint64_t d = (da / g) * (db / g);
            mpq_class c = ca * cb * mpq_class(mpz_class(static_cast<unsigned long>(g)));
            auto it = out.find(d);
            if (it == out.end()) {
                out.emplace(d, c);
            } else {
                it->second += c;
                if (it->second == 0)
                    out.erase(it);
            }
        }
    }
    return out;
}

AlgNum& AlgNum::operator+=(const AlgNum& o) {
    add_into(re_, o.re_, 1);
    add_into(im_, o.im_, 1);
    return *this;
}

AlgNum& AlgNum::operator-=(const AlgNum& o) {
    add_into(re_, o.re_, -1);
    add_into(im_, o.im_, -1);
    return *this;
}

AlgNum& AlgNum::operator*=(const AlgNum& o) {
    Radicals re = mul(re_, o.re_);
    add_into(re, mul(im_, o.im_), -1);
    Radicals im = mul(re_, o.im_);
    add_into(im, mul(im_, o.re_), 1);
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

AlgNum& AlgNum::operator*=(const mpq_class& s) {
    if (s == 0) {
        re_.clear();
        im_.clear();
        return *this;
    }
    for (auto& [d, c] : re_)
        c *= s;
    for (auto& [d, c] : im_)
        c *= s;
    return *this;
}

AlgNum& AlgNum::operator/=(const mpq_class& s) {
    if (s == 0)
        throw InvalidArgument("division by zero");
    for (auto& [d, c] : re_)
        c /= s;
    for (auto& [d, c] : im_)
        c /= s;
    return *this;
}

AlgNum AlgNum::operator-() const {
    AlgNum a = *this;
    return a *= mpq_class(-1);
}

std::vector<std::pair<std::pair<std::uint64_t, bool>, mpq_class>> AlgNum::coordinates() const {
    std::vector<std::pair<std::pair<std::uint64_t, bool>, mpq_class>> out;
    for (const auto& [d, c] : re_)
        out.push_back({{d, false}, c});
    for (const auto& [d, c] : im_)
        out.push_back({{d, true}, c});
    return out;
}

namespace {

void print_part(std::ostringstream& os, const AlgNum::Radicals& r, bool imag, bool& first) {
    for (const auto& [d, c] : r) {
        const bool neg = c < 0;
        mpq_class mag = neg ? mpq_class(-c) : c;
        if (!first)
            os << (neg ? " - " : " + ");
        else if (neg)
            os << "-";
        first = false;
        const bool unit = (mag == 1);
        if (!unit || (d == 1 && !imag))
            os << mag.get_str();
        if (d != 1)
            os << (unit ? "" : "*") << "sqrt(" << d << ")";
        if (imag)
            os << ((unit && d == 1) ? "i" : "*i");
    }
}

} // namespace

std::string AlgNum::to_string() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    print_part(os, re_, false, first);
    print_part(os, im_, true, first);
    return os.str();
}

double AlgNum::approx_re() const {
    double v = 0;
    for (const auto& [d, c] : re_)
        v += c.get_d() * std::sqrt(static_cast<double>(d));
    return v;
}

double AlgNum::approx_im() const {
    double v = 0;
    for (const auto& [d, c] : im_)
        v += c.get_d() * std::sqrt(static_cast<double>(d));
    return v;
}

} // namespace spinbasic
