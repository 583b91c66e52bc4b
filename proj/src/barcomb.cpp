#include "spinbasic/barcomb.hpp"

#include "spinbasic/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace spinbasic {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw InvalidArgument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InvalidArgument("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::all_odd() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int x) { return x % 2 == 1; });
}

bool Partition::distinct() const {
    return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

BarPartition::BarPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw InvalidArgument("bar partition parts must be positive");
        if (i > 0 && parts_[i] >= parts_[i - 1])
            throw InvalidArgument("bar partition parts must be strictly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool BarPartition::contains(int part) const {
    return std::binary_search(parts_.begin(), parts_.end(), part, std::greater<>());
}

int BarQuotient::weight() const {
    int w = lambda0.size();
    for (const auto& c : components)
        w += c.size();
    return w;
}

Sign BarQuotient::sigma() const { return Sign::parity(weight() - lambda0.length()); }

int PartitionCoreQuotient::weight() const {
    int w = 0;
    for (const auto& c : quotient)
        w += c.size();
    return w;
}

bool is_odd_prime(int p) {
    if (p < 3 || p % 2 == 0)
        return false;
    for (int d = 3; d * d <= p; d += 2)
        if (p % d == 0)
            return false;
    return true;
}

void require_odd_prime(int p) {
    if (!is_odd_prime(p))
        throw InvalidParameter("p must be an odd prime, got " + std::to_string(p));
}

namespace {

void partitions_rec(int n, int max_part, std::vector<int>& cur, bool strict, bool odd,
                    const std::function<void(const std::vector<int>&)>& emit) {
    if (n == 0) {
        emit(cur);
        return;
    }
    for (int a = std::min(n, max_part); a >= 1; --a) {
        if (odd && a % 2 == 0)
            continue;
        cur.push_back(a);
        partitions_rec(n - a, strict ? a - 1 : a, cur, strict, odd, emit);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0)
        throw InvalidArgument("n must be non-negative");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, false, false, [&](const auto& v) { out.emplace_back(v); });
    return out;
}

std::vector<BarPartition> enumerate_bar_partitions(int n) {
    if (n < 0)
        throw InvalidArgument("n must be non-negative");
    std::vector<BarPartition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, true, false, [&](const auto& v) { out.emplace_back(v); });
    return out;
}

std::vector<Partition> enumerate_odd_partitions(int n) {
    if (n < 0)
        throw InvalidArgument("n must be non-negative");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, false, true, [&](const auto& v) { out.emplace_back(v); });
    return out;
}

Sign sigma(const BarPartition& lambda) {
    return Sign::parity(lambda.size() - lambda.length());
}

namespace {

// Partition read off a Maya diagram given by its occupied positions in a
// window (descending) above which nothing is occupied and below which
// everything is, with the given charge.
Partition partition_from_maya(const std::vector<long>& occupied_desc, long charge) {
    std::vector<int> parts;
    for (std::size_t k = 0; k < occupied_desc.size(); ++k) {
        long part = occupied_desc[k] - charge + static_cast<long>(k) + 1;
        if (part < 0)
            throw InternalError("malformed Maya diagram");
        if (part == 0)
            break;
        parts.push_back(static_cast<int>(part));
    }
    return Partition(parts);
}

// Occupied positions of the Maya diagram of mu at the given charge, limited
// to positions >= lowest; everything below `lowest` is occupied too.
std::set<long> maya_positions(const Partition& mu, long charge, long& lowest) {
    std::set<long> occ;
    const long len = mu.length();
    for (long k = 1; k <= len; ++k)
        occ.insert(mu.parts()[k - 1] + charge - k);
    // every position <= top is occupied
    const long top = charge - len - 1;
    lowest = std::min(top, -1L);
    for (long j = lowest; j <= top; ++j)
        occ.insert(j);
    return occ;
}

} // namespace

BarCoreQuotient bar_core_quotient(const BarPartition& lambda, int p) {
    require_odd_prime(p);
    const int half = (p - 1) / 2;

    BarCoreQuotient out;
    out.quotient.p = p;

    std::vector<int> zero_parts;
    std::vector<std::vector<int>> levels(p); // per residue, ascending
    for (int x : lambda.parts()) {
        if (x % p == 0)
            zero_parts.push_back(x / p);
        else
            levels[x % p].push_back(x / p);
    }
    for (auto& lv : levels)
        std::sort(lv.begin(), lv.end());
    out.quotient.lambda0 = BarPartition(zero_parts);

    std::vector<int> core_parts;
    for (int i = 1; i <= half; ++i) {
        const auto& up = levels[i];
        const auto& down = levels[p - i];
        const long charge = static_cast<long>(up.size()) - static_cast<long>(down.size());
        const long hole_floor = down.empty() ? 0 : down.back() + 1;

        std::vector<long> occ;
        for (auto it = up.rbegin(); it != up.rend(); ++it)
            occ.push_back(*it);
        for (long j = -1; j >= -hole_floor - 1; --j) {
            const long level = -j - 1;
            if (!std::binary_search(down.begin(), down.end(), static_cast<int>(level)))
                occ.push_back(j);
        }
        out.quotient.components.push_back(partition_from_maya(occ, charge));

        if (charge >= 0) {
            for (long k = 0; k < charge; ++k)
                core_parts.push_back(static_cast<int>(k * p + i));
        } else {
            for (long k = 0; k < -charge; ++k)
                core_parts.push_back(static_cast<int>(k * p + (p - i)));
        }
    }
    std::sort(core_parts.begin(), core_parts.end(), std::greater<>());
    out.core = BarPartition(core_parts);

    if (out.core.size() + p * out.quotient.weight() != lambda.size())
        throw InternalError("bar core/quotient size mismatch");
    return out;
}

BarPartition bar_core(const BarPartition& lambda, int p) {
    return bar_core_quotient(lambda, p).core;
}

bool is_bar_core(const BarPartition& lambda, int p) {
    return bar_core_quotient(lambda, p).quotient.weight() == 0;
}

BarPartition from_core_quotient(const BarPartition& core, const BarQuotient& q, int p) {
    require_odd_prime(p);
    const int half = (p - 1) / 2;
    if (q.p != p || static_cast<int>(q.components.size()) != half)
        throw InvalidArgument("quotient does not have (p-1)/2 components for p = " +
                              std::to_string(p));

    std::vector<std::vector<int>> core_levels(p);
    for (int x : core.parts()) {
        if (x % p == 0)
            throw InvalidCore("core " + to_string(core) + " has a part divisible by p");
        core_levels[x % p].push_back(x / p);
    }
    for (int i = 1; i <= half; ++i) {
        const auto& up = core_levels[i];
        const auto& down = core_levels[p - i];
        if (!up.empty() && !down.empty())
            throw InvalidCore("core " + to_string(core) + " has two parts summing to p");
        for (const auto* lv : {&up, &down}) {
            std::vector<int> sorted = *lv;
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t k = 0; k < sorted.size(); ++k)
                if (sorted[k] != static_cast<int>(k))
                    throw InvalidCore("core " + to_string(core) + " has a removable p-bar");
        }
    }

    std::vector<int> parts;
    for (int x : q.lambda0.parts())
        parts.push_back(x * p);
    for (int i = 1; i <= half; ++i) {
        const long charge = static_cast<long>(core_levels[i].size()) -
                            static_cast<long>(core_levels[p - i].size());
        long lowest = 0;
        const auto occ = maya_positions(q.components[i - 1], charge, lowest);
        for (long pos : occ)
            if (pos >= 0)
                parts.push_back(static_cast<int>(pos * p + i));
        for (long j = -1; j > lowest; --j)
            if (!occ.contains(j))
                parts.push_back(static_cast<int>((-j - 1) * p + (p - i)));
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return BarPartition(parts);
}

std::vector<BarRemoval> removable_bars(const BarPartition& lambda, int p) {
    require_odd_prime(p);
    const auto& parts = lambda.parts();
    auto count_between = [&](int lo, int hi) {
        return static_cast<int>(
            std::count_if(parts.begin(), parts.end(), [&](int y) { return lo < y && y < hi; }));
    };
    auto without = [&](std::initializer_list<int> drop, int add) {
        std::vector<int> v;
        for (int y : parts)
            if (std::find(drop.begin(), drop.end(), y) == drop.end())
                v.push_back(y);
        if (add > 0)
            v.push_back(add);
        std::sort(v.begin(), v.end(), std::greater<>());
        return BarPartition(v);
    };

    std::vector<BarRemoval> out;
    for (int x : parts) {
        if (x == p) {
            out.push_back({BarKind::WholePart, x, 0, without({x}, 0), count_between(0, p)});
        } else if (x > p && !lambda.contains(x - p)) {
            out.push_back({BarKind::Shift, x, 0, without({x}, x - p), count_between(x - p, x)});
        } else if (x < p && 2 * x > p && lambda.contains(p - x)) {
            const int y = p - x;
            out.push_back({BarKind::PairedParts, x, y, without({x, y}, 0),
                           count_between(y, x) + y});
        }
    }
    return out;
}

Sign delta_bar(const BarPartition& lambda, int p) {
    Sign s = Sign::plus();
    BarPartition cur = lambda;
    for (;;) {
        auto bars = removable_bars(cur, p);
        if (bars.empty())
            return s;
        s *= Sign::parity(bars.front().leg);
        cur = bars.front().result;
    }
}

Partition doubling(const BarPartition& lambda) {
    const int k = lambda.length();
    const auto& a = lambda.parts();
    std::vector<int> rows;
    for (int i = 0; i < k; ++i)
        rows.push_back(a[i] + i + 1);
    // column j (1-based) has length b_j + j = a_j - 1 + j
    for (int r = k + 1;; ++r) {
        int len = 0;
        for (int j = 0; j < k; ++j)
            if (a[j] - 1 + j + 1 >= r)
                ++len;
        if (len == 0)
            break;
        rows.push_back(len);
    }
    return Partition(rows);
}

namespace {

int runner_of_component(int k, int p) { // k is 1-based
    const int r = (k - 1 - (p - 1) / 2) % p;
    return r < 0 ? r + p : r;
}

int bead_count(int len, int p, int extra) {
    // a multiple of p with room for every bead and `extra` slack per runner
    const int need = len + p * (extra + 1);
    return ((need + p - 1) / p) * p;
}

} // namespace

PartitionCoreQuotient partition_core_quotient(const Partition& mu, int p) {
    if (p < 2)
        throw InvalidParameter("p must be at least 2");
    const int n_beads = bead_count(mu.length(), p, 0);
    std::vector<std::vector<int>> levels(p);
    for (int j = 0; j < n_beads; ++j) {
        const int part = j < mu.length() ? mu.parts()[j] : 0;
        const int beta = part + n_beads - 1 - j;
        levels[beta % p].push_back(beta / p);
    }
    PartitionCoreQuotient out;
    std::vector<int> core_beta;
    std::vector<Partition> by_runner(p);
    for (int r = 0; r < p; ++r) {
        auto& lv = levels[r]; // descending already
        const int m = static_cast<int>(lv.size());
        std::vector<int> parts;
        for (int j = 0; j < m; ++j)
            if (lv[j] - (m - 1 - j) > 0)
                parts.push_back(lv[j] - (m - 1 - j));
        by_runner[r] = Partition(parts);
        for (int j = 0; j < m; ++j)
            core_beta.push_back(j * p + r);
    }
    std::sort(core_beta.begin(), core_beta.end(), std::greater<>());
    std::vector<int> core_parts;
    for (int j = 0; j < n_beads; ++j) {
        const int part = core_beta[j] - (n_beads - 1 - j);
        if (part > 0)
            core_parts.push_back(part);
    }
    out.core = Partition(core_parts);
    for (int k = 1; k <= p; ++k)
        out.quotient.push_back(by_runner[runner_of_component(k, p)]);
    return out;
}

Partition partition_from_core_quotient(const Partition& core, const std::vector<Partition>& quotient,
                                       int p) {
    if (p < 2)
        throw InvalidParameter("p must be at least 2");
    if (static_cast<int>(quotient.size()) != p)
        throw InvalidArgument("quotient must have p components");
    int longest = 0;
    for (const auto& c : quotient)
        longest = std::max(longest, c.length());
    const int n_beads = bead_count(core.length(), p, longest);
    std::vector<std::vector<int>> levels(p);
    for (int j = 0; j < n_beads; ++j) {
        const int part = j < core.length() ? core.parts()[j] : 0;
        const int beta = part + n_beads - 1 - j;
        levels[beta % p].push_back(beta / p);
    }
    std::vector<int> beta;
    for (int k = 1; k <= p; ++k) {
        const int r = runner_of_component(k, p);
        const int m = static_cast<int>(levels[r].size());
        const auto& comp = quotient[k - 1];
        if (comp.length() > m)
            throw InternalError("not enough beads on runner");
        for (int j = 0; j < m; ++j) {
            const int add = j < comp.length() ? comp.parts()[j] : 0;
            beta.push_back((add + (m - 1 - j)) * p + r);
        }
    }
    std::sort(beta.begin(), beta.end(), std::greater<>());
    std::vector<int> parts;
    for (int j = 0; j < n_beads; ++j) {
        const int part = beta[j] - (n_beads - 1 - j);
        if (part > 0)
            parts.push_back(part);
    }
    return Partition(parts);
}

std::vector<std::vector<Partition>> enumerate_multipartitions(int n, int k) {
    std::vector<std::vector<Partition>> out;
    if (k <= 0) {
        if (n == 0)
            out.emplace_back();
        return out;
    }
    std::vector<Partition> cur;
    std::function<void(int, int)> rec = [&](int idx, int remaining) {
        if (idx == k - 1) {
            for (const auto& mu : enumerate_partitions(remaining)) {
                cur.push_back(mu);
                out.push_back(cur);
                cur.pop_back();
            }
            return;
        }
        for (int s = remaining; s >= 0; --s) {
            for (const auto& mu : enumerate_partitions(s)) {
                cur.push_back(mu);
                rec(idx + 1, remaining - s);
                cur.pop_back();
            }
        }
    };
    rec(0, n);
    return out;
}

namespace {

std::string join_parts(const std::vector<int>& parts) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts.size(); ++i)
        os << (i ? "," : "") << parts[i];
    os << ')';
    return os.str();
}

} // namespace

std::string to_string(const Partition& mu) { return join_parts(mu.parts()); }
std::string to_string(const BarPartition& lambda) { return join_parts(lambda.parts()); }

std::string to_string(const BarQuotient& q) {
    std::string s = "(" + to_string(q.lambda0) + ";";
    for (std::size_t i = 0; i < q.components.size(); ++i)
        s += (i ? "," : "") + to_string(q.components[i]);
    return s + ")";
}

std::ostream& operator<<(std::ostream& os, const Partition& mu) { return os << to_string(mu); }
std::ostream& operator<<(std::ostream& os, const BarPartition& lambda) {
    return os << to_string(lambda);
}

BarPartition parse_bar_partition(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    auto flush = [&] {
        if (token.empty())
            return;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw InvalidArgument("cannot parse part '" + token + "'");
        }
        if (used != token.size())
            throw InvalidArgument("cannot parse part '" + token + "'");
        parts.push_back(v);
        token.clear();
    };
    for (char c : text) {
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
            token.push_back(c);
        } else if (c == ',' || c == ' ' || c == '(' || c == ')' || c == '[' || c == ']') {
            flush();
        } else {
            throw InvalidArgument(std::string("unexpected character '") + c + "' in partition");
        }
    }
    flush();
    return BarPartition(parts);
}

} // namespace spinbasic
