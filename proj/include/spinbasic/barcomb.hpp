#pragma once

// Bar partitions, the p-bar abacus and ordinary p-cores.
//
// Quotient convention for bar partitions (odd p): beads are placed on p
// runners by residue.  Runner 0 gives lambda0 (parts kp become k).  For
// 1 <= i <= (p-1)/2, runners i and p-i are glued into one bi-infinite
// runner: a part kp+i sits at level k >= 0, and a part kp+(p-i) leaves a
// hole at level -k-1 on an otherwise full negative half.  Every p-bar
// removal on that pair moves one bead of the glued runner down by one, so
// the glued runner is the beta-set (Maya diagram) of the component
// lambda^i, read with charge (#runner i) - (#runner p-i).

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace spinbasic {

class Sign {
public:
    constexpr Sign() = default;
    static constexpr Sign plus() { return Sign(1); }
    static constexpr Sign minus() { return Sign(-1); }
    // (-1)^k
    static constexpr Sign parity(long long k) { return Sign((k % 2 == 0) ? 1 : -1); }

    constexpr int value() const { return v_; }
    constexpr bool is_plus() const { return v_ == 1; }
    constexpr Sign operator-() const { return Sign(-v_); }
    constexpr Sign operator*(Sign o) const { return Sign(v_ * o.v_); }
    constexpr Sign& operator*=(Sign o) { v_ *= o.v_; return *this; }
    constexpr bool operator==(const Sign&) const = default;

private:
    constexpr explicit Sign(int v) : v_(v) {}
    int v_ = 1;
};

/// An ordinary partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    bool all_odd() const;
    bool distinct() const;

    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }
    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// A bar partition: strictly decreasing positive parts.
class BarPartition {
public:
    BarPartition() = default;
    explicit BarPartition(std::vector<int> parts);
    BarPartition(std::initializer_list<int> parts) : BarPartition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    bool contains(int part) const;
    Partition as_partition() const { return Partition(parts_); }

    auto operator<=>(const BarPartition& o) const { return parts_ <=> o.parts_; }
    bool operator==(const BarPartition& o) const { return parts_ == o.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

struct BarQuotient {
    int p = 3;
    BarPartition lambda0;
    std::vector<Partition> components; // lambda^1 .. lambda^{(p-1)/2}

    int weight() const;
    // (-1)^{w - l(lambda0)}
    Sign sigma() const;
    bool operator==(const BarQuotient&) const = default;
};

struct BarCoreQuotient {
    BarPartition core;
    BarQuotient quotient;
    int weight() const { return quotient.weight(); }
};

struct PartitionCoreQuotient {
    Partition core;
    std::vector<Partition> quotient; // components 1..p
    int weight() const;
};

bool is_odd_prime(int p);
// Throws InvalidParameter unless p is an odd prime.
void require_odd_prime(int p);

/// All partitions of n, lexicographically descending.
std::vector<Partition> enumerate_partitions(int n);
/// All strict partitions of n, lexicographically descending.
std::vector<BarPartition> enumerate_bar_partitions(int n);
/// Partitions of n with every part odd, lexicographically descending.
std::vector<Partition> enumerate_odd_partitions(int n);

/// (-1)^{|lambda| - l(lambda)}
Sign sigma(const BarPartition& lambda);

BarCoreQuotient bar_core_quotient(const BarPartition& lambda, int p);
BarPartition bar_core(const BarPartition& lambda, int p);
bool is_bar_core(const BarPartition& lambda, int p);

/// Inverse of bar_core_quotient.  Throws InvalidCore if `core` still has a
/// removable p-bar, InvalidArgument if the quotient shape does not match p.
BarPartition from_core_quotient(const BarPartition& core, const BarQuotient& q, int p);

enum class BarKind {
    WholePart,   // a part equal to p is deleted
    Shift,       // a part x > p becomes x - p
    PairedParts, // two parts summing to p are deleted
};

struct BarRemoval {
    BarKind kind;
    int first;  // the part moved or deleted (the larger one for PairedParts)
    int second; // smaller part for PairedParts, otherwise 0
    BarPartition result;
    int leg; // leg length entering the relative sign
};

/// Every removable p-bar of lambda, in descending order of `first`.
/// Leg lengths: for a Shift x -> x-p, the parts strictly between x-p and x;
/// for WholePart, the parts below p; for PairedParts a > b, the parts
/// strictly between b and a plus b.
std::vector<BarRemoval> removable_bars(const BarPartition& lambda, int p);

/// Relative sign: product of (-1)^leg over any complete p-bar removal
/// sequence down to the core.
Sign delta_bar(const BarPartition& lambda, int p);

/// D(lambda) with Frobenius symbol (l_1, ..., l_k | l_1 - 1, ..., l_k - 1).
Partition doubling(const BarPartition& lambda);

/// Ordinary p-core and p-quotient.  Component k (1-based) collects the
/// Maya-diagram positions m = mu_j - j with m = k - 1 - (p-1)/2 (mod p),
/// so for odd p the middle component (p+1)/2 is the runner through 0.
PartitionCoreQuotient partition_core_quotient(const Partition& mu, int p);
Partition partition_from_core_quotient(const Partition& core,
                                       const std::vector<Partition>& quotient, int p);

/// Tuples of k partitions with total size n, in canonical order
/// (sizes lexicographically descending, then each component descending).
std::vector<std::vector<Partition>> enumerate_multipartitions(int n, int k);

std::string to_string(const Partition& mu);
std::string to_string(const BarPartition& lambda);
std::string to_string(const BarQuotient& q);
std::ostream& operator<<(std::ostream& os, const Partition& mu);
std::ostream& operator<<(std::ostream& os, const BarPartition& lambda);

/// Parses "5,2", "(5,2)", "5 2" or "" into a bar partition.
BarPartition parse_bar_partition(const std::string& text);

} // namespace spinbasic
