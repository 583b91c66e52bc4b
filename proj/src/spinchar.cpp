#include "spinbasic/spinchar.hpp"

#include "spinbasic/errors.hpp"

#include <algorithm>
#include <functional>

namespace spinbasic {

std::string to_string(Cover c) { return c == Cover::Sym ? "sym" : "alt"; }

std::string to_string(AssocTag t) {
    switch (t) {
    case AssocTag::Self: return "self";
    case AssocTag::Plus: return "plus";
    default: return "minus";
    }
}

Cover parse_cover(const std::string& s) {
    if (s == "sym")
        return Cover::Sym;
    if (s == "alt")
        return Cover::Alt;
    throw InvalidArgument("unknown group '" + s + "' (expected sym or alt)");
}

bool labels_single_character(Cover cover, const BarPartition& lambda) {
    // A_0 = A_1 = S_1: the cover is just {1, z}
    if (cover == Cover::Alt && lambda.size() <= 1)
        return true;
    const bool plus = sigma(lambda).is_plus();
    return cover == Cover::Sym ? plus : !plus;
}

SpinLabel SpinLabel::make(Cover cover, BarPartition lambda, AssocTag tag) {
    const bool single = labels_single_character(cover, lambda);
    if (single != (tag == AssocTag::Self))
        throw InvalidArgument("tag " + to_string(tag) + " is inconsistent with " +
                              to_string(lambda) + " on the " + to_string(cover) + " cover");
    return SpinLabel{cover, std::move(lambda), tag};
}

std::string to_string(const SpinLabel& x) {
    std::string s = (x.cover == Cover::Sym ? "xi" : "zeta") + to_string(x.lambda);
    if (x.tag == AssocTag::Plus)
        s += "+";
    else if (x.tag == AssocTag::Minus)
        s += "-";
    return s;
}

std::vector<SpinLabel> labels(Cover cover, int n) {
    if (n < 0)
        throw InvalidArgument("n must be non-negative");
    std::vector<SpinLabel> out;
    for (auto& lambda : enumerate_bar_partitions(n)) {
        if (labels_single_character(cover, lambda)) {
            out.push_back({cover, lambda, AssocTag::Self});
        } else {
            out.push_back({cover, lambda, AssocTag::Plus});
            out.push_back({cover, lambda, AssocTag::Minus});
        }
    }
    return out;
}

SpinLabel epsilon_twist(const SpinLabel& x) {
    SpinLabel y = x;
    if (x.tag == AssocTag::Plus)
        y.tag = AssocTag::Minus;
    else if (x.tag == AssocTag::Minus)
        y.tag = AssocTag::Plus;
    return y;
}

bool SplitClass::p_regular(int p) const {
    return std::all_of(pi.parts().begin(), pi.parts().end(), [p](int x) { return x % p != 0; });
}

SplitClass SplitClass::with_z(int z) const {
    SplitClass c = *this;
    c.zflag = z;
    return c;
}

std::string to_string(const SplitClass& c) {
    std::string s = (c.zflag ? "z.t" : "t") + to_string(c.pi);
    if (c.half == ClassHalf::Plus)
        s += "+";
    else if (c.half == ClassHalf::Minus)
        s += "-";
    return s;
}

std::uint64_t z_of(const Partition& pi) {
    std::uint64_t z = 1;
    const auto& v = pi.parts();
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i])
            ++j;
        const std::uint64_t m = j - i;
        for (std::uint64_t k = 1; k <= m; ++k)
            z *= static_cast<std::uint64_t>(v[i]) * k;
        i = j;
    }
    return z;
}

mpz_class group_order(Cover cover, int n) {
    mpz_class f = 1;
    for (int k = 2; k <= n; ++k)
        f *= k;
    if (cover == Cover::Alt && n <= 1)
        return 2;
    return cover == Cover::Sym ? mpz_class(2 * f) : f;
}

std::vector<SplitClass> split_class_reps(Cover cover, int n, std::optional<int> regular_only_for) {
    if (n < 0)
        throw InvalidArgument("n must be non-negative");
    std::vector<SplitClass> out;
    for (auto& pi : enumerate_odd_partitions(n)) {
        const std::uint64_t z = z_of(pi);
        if (cover == Cover::Sym) {
            out.push_back({cover, pi, ClassHalf::None, 0, 2 * z});
        } else if (n <= 1) {
            out.push_back({cover, pi, ClassHalf::None, 0, 2});
        } else if (pi.distinct()) {
            out.push_back({cover, pi, ClassHalf::Plus, 0, 2 * z});
            out.push_back({cover, pi, ClassHalf::Minus, 0, 2 * z});
        } else {
            out.push_back({cover, pi, ClassHalf::None, 0, z});
        }
    }
    for (auto& lambda : enumerate_bar_partitions(n)) {
        const auto pi = lambda.as_partition();
        const bool minus = !sigma(lambda).is_plus();
        if (cover == Cover::Sym && minus)
            out.push_back({cover, pi, ClassHalf::None, 0, 2 * z_of(pi)});
        else if (cover == Cover::Alt && !minus && !pi.all_odd())
            out.push_back({cover, pi, ClassHalf::None, 0, z_of(pi)});
    }
    if (regular_only_for) {
        const int p = *regular_only_for;
        std::erase_if(out, [p](const SplitClass& c) { return !c.p_regular(p); });
    }
    return out;
}

std::vector<SplitClass> split_classes(Cover cover, int n, std::optional<int> regular_only_for) {
    std::vector<SplitClass> out;
    for (const auto& c : split_class_reps(cover, n, regular_only_for)) {
        out.push_back(c);
        out.push_back(c.with_z(1));
    }
    return out;
}

std::vector<std::pair<int, BarPartition>> BarStripRecursion::lower_by(const BarPartition& lambda,
                                                                       int r) {
    // Lowering part i gives the sequence lambda - r e_i, straightened with
    //   Q_(..a,b..) = -Q_(..b,a..) + 2(-1)^a [a+b=0] Q_(.. ..),
    // trailing zeros dropped and a negative last entry giving zero.
    std::vector<std::pair<int, BarPartition>> out;
    const auto& v = lambda.parts();
    const int m = lambda.length();
    for (int i = 0; i < m; ++i) {
        const int b = v[i] - r;
        if (b > 0) {
            if (lambda.contains(b))
                continue;
            int passed = 0;
            std::vector<int> mu;
            for (int j = 0; j < m; ++j) {
                if (j == i)
                    continue;
                if (j > i && v[j] > b)
                    ++passed;
                mu.push_back(v[j]);
            }
            mu.push_back(b);
            std::sort(mu.begin(), mu.end(), std::greater<>());
            out.emplace_back(Sign::parity(passed).value(), BarPartition(mu));
        } else if (b == 0) {
            std::vector<int> mu;
            for (int j = 0; j < m; ++j)
                if (j != i)
                    mu.push_back(v[j]);
            out.emplace_back(Sign::parity(m - 1 - i).value(), BarPartition(mu));
        } else {
            const auto it = std::find(v.begin() + i + 1, v.end(), -b);
            if (it == v.end())
                continue;
            const int j = static_cast<int>(it - v.begin());
            std::vector<int> mu;
            for (int k = 0; k < m; ++k)
                if (k != i && k != j)
                    mu.push_back(v[k]);
            const int coeff = 2 * Sign::parity(j - i - 1).value() * Sign::parity(-b).value();
            out.emplace_back(coeff, BarPartition(mu));
        }
    }
    return out;
}

mpz_class BarStripRecursion::operator()(const BarPartition& lambda, const Partition& odd_pi) {
    if (lambda.size() != odd_pi.size())
        throw InvalidArgument("size mismatch between " + to_string(lambda) + " and " +
                              to_string(odd_pi));
    if (odd_pi.empty())
        return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda.parts(), odd_pi.parts());
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;

    const int r = odd_pi.parts().front();
    if (r % 2 == 0)
        throw InvalidArgument("class " + to_string(odd_pi) + " has an even part");
    const Partition rest(std::vector<int>(odd_pi.parts().begin() + 1, odd_pi.parts().end()));
    mpz_class x = 0;
    for (const auto& [coeff, mu] : lower_by(lambda, r))
        x += coeff * (*this)(mu, rest);
    memo_.emplace(std::move(key), x);
    return x;
}

namespace {

// 2^{floor((l(pi) - l(lambda)) / 2)} X^lambda_pi
AlgNum odd_class_value(const BarPartition& lambda, const Partition& pi, BarStripRecursion& rec) {
    const mpz_class x = rec(lambda, pi);
    if (x == 0)
        return AlgNum();
    const int diff = pi.length() - lambda.length();
    const int e = diff >= 0 ? diff / 2 : -((-diff + 1) / 2);
    mpq_class v(x);
    if (e >= 0)
        v *= mpq_class(mpz_class(1) << e);
    else
        v /= mpq_class(mpz_class(1) << -e);
    v.canonicalize();
    if (v.get_den() != 1)
        throw InternalError("non-integral spin value at " + to_string(pi));
    return AlgNum(v);
}

std::uint64_t product_of_parts(const BarPartition& lambda) {
    std::uint64_t z = 1;
    for (int x : lambda.parts())
        z *= static_cast<std::uint64_t>(x);
    return z;
}

int tag_sign(AssocTag t) { return t == AssocTag::Minus ? -1 : 1; }

} // namespace

AlgNum char_value(const SpinLabel& x, const SplitClass& c) {
    BarStripRecursion rec;
    return char_value(x, c, rec);
}

AlgNum char_value(const SpinLabel& x, const SplitClass& c, BarStripRecursion& rec) {
    if (x.lambda.size() != c.pi.size())
        throw InvalidArgument("label " + to_string(x) + " and class " + to_string(c) +
                              " have different n");
    if (x.cover != c.cover)
        throw InvalidArgument("label and class belong to different covers");
    const int n = x.lambda.size();
    const int k = x.lambda.length();

    AlgNum v;
    if (x.cover == Cover::Sym) {
        if (c.pi.all_odd()) {
            v = odd_class_value(x.lambda, c.pi, rec);
        } else if (x.tag != AssocTag::Self && c.pi == x.lambda.as_partition()) {
            // xi+(t_l) = -xi-(t_l) = i^{(n-k+1)/2} sqrt(z_l / 2)
            v = AlgNum::i_pow((n - k + 1) / 2) * AlgNum::sqrt(product_of_parts(x.lambda) / 2);
            v *= mpq_class(tag_sign(x.tag));
        }
    } else {
        AlgNum base = c.pi.all_odd() ? odd_class_value(x.lambda, c.pi, rec) : AlgNum();
        if (x.tag == AssocTag::Self) {
            v = base; // restriction of xi+ (= restriction of xi-)
        } else {
            v = base / mpq_class(2);
            if (c.pi == x.lambda.as_partition()) {
                // The two constituents differ on the class of lambda itself by
                // d = i^{(n-k)/2} sqrt(z_l).  Labeling: "plus" carries +d' on
                // the Plus (or unsplit) class, where d' is d rotated to have a
                // positive coefficient (real or imaginary).
                const bool imaginary = ((n - k) / 2) % 2 == 1;
                AlgNum d = AlgNum::sqrt(product_of_parts(x.lambda));
                if (imaginary)
                    d *= AlgNum::i();
                const int half_sign = c.half == ClassHalf::Minus ? -1 : 1;
                v += d * mpq_class(tag_sign(x.tag) * half_sign, 2);
            }
        }
    }
    if (c.zflag == 1)
        v = -v;
    return v;
}

mpz_class degree(const SpinLabel& x) {
    const auto& l = x.lambda.parts();
    const int n = x.lambda.size();
    const int k = x.lambda.length();
    mpq_class g = 1;
    for (int m = 2; m <= n; ++m)
        g *= m;
    for (int a : l)
        for (int m = 2; m <= a; ++m)
            g /= m;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            g *= mpq_class(l[i] - l[j], l[i] + l[j]);
    g.canonicalize();
    if (g.get_den() != 1)
        throw InternalError("non-integral shifted tableau count");
    mpz_class d = g.get_num() << ((n - k) / 2);
    if (x.cover == Cover::Alt && x.tag != AssocTag::Self)
        d /= 2;
    return d;
}

mpq_class inner_product(std::span<const SplitClass> classes, std::span<const AlgNum> f,
                        std::span<const AlgNum> g, const mpz_class& order) {
    if (f.size() != classes.size() || g.size() != classes.size())
        throw InvalidArgument("class function length does not match the class list");
    AlgNum sum;
    for (std::size_t j = 0; j < classes.size(); ++j) {
        const mpz_class centralizer(static_cast<unsigned long>(classes[j].centralizer_order));
        if (order % centralizer != 0)
            throw InvalidArgument("centralizer order does not divide the group order");
        sum += f[j] * g[j].conj() * mpq_class(order / centralizer);
    }
    sum /= mpq_class(order);
    auto r = sum.as_rational();
    if (!r)
        throw InternalError("inner product is not rational: " + sum.to_string());
    return *r;
}

CharacterTable::CharacterTable(Cover cover, int n)
    : cover_(cover), n_(n), labels_(spinbasic::labels(cover, n)),
      classes_(split_class_reps(cover, n)) {
    BarStripRecursion rec;
    values_.reserve(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        label_index_.emplace(labels_[i], i);
        std::vector<AlgNum> row;
        row.reserve(classes_.size());
        for (const auto& c : classes_)
            row.push_back(char_value(labels_[i], c, rec));
        values_.push_back(std::move(row));
    }
}

std::size_t CharacterTable::index_of(const SpinLabel& x) const {
    auto it = label_index_.find(x);
    if (it == label_index_.end())
        throw InvalidArgument("label " + to_string(x) + " is not in this table");
    return it->second;
}

std::optional<std::size_t> CharacterTable::class_index(const SplitClass& c) const {
    const SplitClass rep = c.with_z(0);
    for (std::size_t j = 0; j < classes_.size(); ++j)
        if (classes_[j] == rep)
            return j;
    return std::nullopt;
}

std::vector<SplitClass> CharacterTable::all_classes() const {
    std::vector<SplitClass> out;
    for (const auto& c : classes_) {
        out.push_back(c);
        out.push_back(c.with_z(1));
    }
    return out;
}

std::vector<AlgNum> CharacterTable::full_row(std::size_t label) const {
    std::vector<AlgNum> out;
    for (const auto& v : values_[label]) {
        out.push_back(v);
        out.push_back(-v);
    }
    return out;
}

AlgNum CharacterTable::value_at(std::size_t label, const SplitClass& c) const {
    auto j = class_index(c);
    if (!j)
        throw InvalidArgument("class " + to_string(c) + " is not a split class of this cover");
    return c.zflag ? -values_[label][*j] : values_[label][*j];
}

} // namespace spinbasic
