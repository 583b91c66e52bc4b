#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spinbasic {

/// Exact numbers a + b*i where a and b are finite Q-linear combinations of
/// sqrt(d) for squarefree d >= 1.  The representation is canonical (zero
/// coefficients are never stored), so equality is structural.
class AlgNum {
public:
    using Radicals = std::map<std::uint64_t, mpq_class>; // d -> coefficient of sqrt(d)

    AlgNum() = default;
    AlgNum(long v);
    AlgNum(const mpq_class& v);
    AlgNum(const mpz_class& v) : AlgNum(mpq_class(v)) {}

    static AlgNum i();
    /// i^k for any integer k.
    static AlgNum i_pow(long k);
    /// sqrt(m) reduced to s*sqrt(d) with d squarefree.
    static AlgNum sqrt(std::uint64_t m);
    /// coeff * sqrt(d), d squarefree (imag selects the i-part).
    static AlgNum radical(const mpq_class& coeff, std::uint64_t d, bool imag = false);

    const Radicals& re() const { return re_; }
    const Radicals& im() const { return im_; }

    bool is_zero() const { return re_.empty() && im_.empty(); }
    /// The value as a rational, if it is one.
    std::optional<mpq_class> as_rational() const;

    AlgNum conj() const;

    AlgNum& operator+=(const AlgNum& o);
    AlgNum& operator-=(const AlgNum& o);
    AlgNum& operator*=(const AlgNum& o);
    AlgNum& operator*=(const mpq_class& s);
    AlgNum& operator/=(const mpq_class& s);

    friend AlgNum operator+(AlgNum a, const AlgNum& b) { return a += b; }
    friend AlgNum operator-(AlgNum a, const AlgNum& b) { return a -= b; }
    friend AlgNum operator*(AlgNum a, const AlgNum& b) { return a *= b; }
    friend AlgNum operator*(AlgNum a, const mpq_class& s) { return a *= s; }
    friend AlgNum operator/(AlgNum a, const mpq_class& s) { return a /= s; }
    AlgNum operator-() const;

    bool operator==(const AlgNum& o) const { return re_ == o.re_ && im_ == o.im_; }

    /// Coordinates over the Q-basis {sqrt(d), i*sqrt(d)}; key (d, is_imag).
    std::vector<std::pair<std::pair<std::uint64_t, bool>, mpq_class>> coordinates() const;

    std::string to_string() const;
    double approx_re() const;
    double approx_im() const;

private:
    static void add_into(Radicals& dst, const Radicals& src, int sign);
    static Radicals mul(const Radicals& a, const Radicals& b);
    Radicals re_, im_;
};

/// Splits m = s^2 * d with d squarefree; returns {s, d}.
std::pair<std::uint64_t, std::uint64_t> squarefree_split(std::uint64_t m);

} // namespace spinbasic
