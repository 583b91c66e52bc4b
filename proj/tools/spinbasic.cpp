// spinbasic: enumerate spin blocks and verify their basic sets.

#include "spinbasic/barcomb.hpp"
#include "spinbasic/blocks.hpp"
#include "spinbasic/errors.hpp"
#include "spinbasic/intmatrix.hpp"
#include "spinbasic/isometry.hpp"
#include "spinbasic/report.hpp"
#include "spinbasic/spinchar.hpp"
#include "spinbasic/zverify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace spinbasic;
using report::json;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int n = -1;
    int p = 3;
    std::string group = "sym";
    std::string core;
    std::string format = "json";
};

struct Context {
    Cover cover = Cover::Sym;
    int n = 0;
    int p = 3;
    std::optional<BarPartition> core;
    bool table = false;
    unsigned workers = 1;
};

unsigned worker_count() {
    const char* env = std::getenv("SPINBASIC_WORKERS");
    if (!env || !*env) {
        const unsigned hw = std::thread::hardware_concurrency();
        return hw ? hw : 1;
    }
    try {
        std::size_t used = 0;
        const long v = std::stol(env, &used);
        if (used != std::string(env).size() || v < 1 || v > 1024)
            throw std::invalid_argument("range");
        return static_cast<unsigned>(v);
    } catch (const std::exception&) {
        throw UsageError(std::string("SPINBASIC_WORKERS must be a positive integer, got '") + env + "'");
    }
}

// results[i] = fn(i); scheduling order does not affect the output
template <class T>
std::vector<T> parallel_map(std::size_t count, unsigned workers, const std::function<T(std::size_t)>& fn) {
    std::vector<std::optional<T>> slots(count);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto run = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                slots[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(failure_mu);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    const unsigned k = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < k; ++t)
        pool.emplace_back(run);
    run();
    for (auto& th : pool)
        th.join();
    if (failure)
        std::rethrow_exception(failure);
    std::vector<T> out;
    out.reserve(count);
    for (auto& s : slots)
        out.push_back(std::move(*s));
    return out;
}

Context make_context(const Options& o) {
    Context c;
    if (o.n < 0)
        throw UsageError("--n must be a non-negative integer");
    c.n = o.n;
    if (!is_odd_prime(o.p))
        throw UsageError("--p must be an odd prime, got " + std::to_string(o.p));
    c.p = o.p;
    if (o.group != "sym" && o.group != "alt")
        throw UsageError("--group must be sym or alt");
    c.cover = parse_cover(o.group);
    if (!o.core.empty()) {
        try {
            c.core = parse_bar_partition(o.core);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--core: ") + e.what());
        }
        if (!is_bar_core(*c.core, c.p))
            throw UsageError("--core " + to_string(*c.core) + " is not a " + std::to_string(c.p) +
                             "-bar core");
        if (c.core->size() > c.n || (c.n - c.core->size()) % c.p != 0)
            throw UsageError("no block of n=" + std::to_string(c.n) + " has core " + to_string(*c.core));
    }
    c.table = o.format == "table";
    c.workers = worker_count();
    return c;
}

json header(const std::string& verb, const Context& c) {
    json h;
    h["verb"] = verb;
    h["group"] = to_string(c.cover);
    h["n"] = c.n;
    h["p"] = c.p;
    h["core"] = c.core ? report::to_json(*c.core) : json(nullptr);
    return h;
}

std::vector<Block> selected_blocks(const Context& c) {
    auto all = block_partition(c.cover, c.n, c.p);
    if (!c.core)
        return all;
    std::vector<Block> out;
    for (auto& b : all)
        if (b.id.core == *c.core)
            out.push_back(std::move(b));
    return out;
}

std::string label_list(const std::vector<SpinLabel>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? " " : "") + to_string(xs[i]);
    return s.empty() ? "-" : s;
}

std::string block_name(const BlockId& b) {
    std::string s = "core " + to_string(b.core) + " w=" + std::to_string(b.weight);
    if (b.tag != AssocTag::Self)
        s += " (" + to_string(b.tag) + ")";
    return s;
}

// ---- verbs ----

int cmd_cores(const Context& c, std::ostream& out) {
    json doc = header("cores", c);
    json rows = json::array();
    std::ostringstream tab;
    for (const auto& lambda : enumerate_bar_partitions(c.n)) {
        const auto cq = bar_core_quotient(lambda, c.p);
        if (c.core && cq.core != *c.core)
            continue;
        const Sign delta = delta_bar(lambda, c.p);
        rows.push_back({{"lambda", report::to_json(lambda)},
                        {"sigma", sigma(lambda).value()},
                        {"core", report::to_json(cq.core)},
                        {"weight", cq.weight()},
                        {"quotient", report::to_json(cq.quotient)},
                        {"delta", delta.value()}});
        tab << to_string(lambda) << "  core " << to_string(cq.core) << "  w=" << cq.weight()
            << "  quotient " << to_string(cq.quotient) << "  sigma " << (sigma(lambda).is_plus() ? '+' : '-')
            << "  delta " << (delta.is_plus() ? '+' : '-') << '\n';
    }
    doc["partitions"] = rows;
    if (c.table)
        out << tab.str();
    else
        out << doc.dump(2) << '\n';
    return kOk;
}

int cmd_blocks(const Context& c, std::ostream& out) {
    json doc = header("blocks", c);
    json rows = json::array();
    std::ostringstream tab;
    for (const auto& b : selected_blocks(c)) {
        json mem = json::array();
        for (const auto& x : b.members)
            mem.push_back(report::to_json(x));
        rows.push_back({{"block", report::to_json(b.id)}, {"size", b.members.size()}, {"members", mem}});
        tab << block_name(b.id) << "  sign " << (b.id.sign().is_plus() ? '+' : '-') << "  "
            << b.members.size() << (b.members.size() == 1 ? " character" : " characters")
            << (b.id.defect_zero() ? "  defect zero" : "") << "\n  " << label_list(b.members) << '\n';
    }
    doc["blocks"] = rows;
    if (c.table)
        out << tab.str();
    else
        out << doc.dump(2) << '\n';
    return kOk;
}

int cmd_basic_set(const Context& c, std::ostream& out) {
    json doc = header("basic-set", c);
    json rows = json::array();
    std::ostringstream tab;
    for (const auto& b : selected_blocks(c)) {
        const auto bs = basic_set(b.id);
        json arr = json::array();
        for (const auto& x : bs)
            arr.push_back(report::to_json(x));
        rows.push_back({{"block", report::to_json(b.id)},
                        {"basic_set", arr},
                        {"size", bs.size()},
                        {"brauer_count", report::integer(brauer_count(b.id))}});
        tab << block_name(b.id) << "  basic set (" << bs.size() << "): " << label_list(bs) << '\n';
    }
    doc["blocks"] = rows;
    if (c.table)
        out << tab.str();
    else
        out << doc.dump(2) << '\n';
    return kOk;
}

std::string relation_text(const VerificationReport& r, const RowCoordinates& rc) {
    std::string s = "^" + to_string(rc.label) + " =";
    if (!rc.coefficients)
        return s + " (not in the span)";
    bool first = true;
    for (std::size_t k = 0; k < rc.coefficients->size(); ++k) {
        const mpq_class& q = (*rc.coefficients)[k];
        if (q == 0)
            continue;
        const bool neg = q < 0;
        s += first ? (neg ? " -" : " ") : (neg ? " - " : " + ");
        const mpq_class a = neg ? mpq_class(-q) : q;
        if (a != 1)
            s += a.get_str() + "*";
        s += "^" + to_string(r.candidates[k]);
        first = false;
    }
    if (first)
        s += " 0";
    return s;
}

int cmd_verify(const Context& c, std::ostream& out) {
    const auto blocks = selected_blocks(c);
    const CharacterTable table(c.cover, c.n);
    const auto reports = parallel_map<VerificationReport>(
        blocks.size(), c.workers, [&](std::size_t i) { return verify_basic_set(blocks[i].id, table); });

    std::size_t passed = 0;
    json doc = header("verify", c);
    json rows = json::array();
    std::ostringstream tab;
    for (const auto& r : reports) {
        passed += r.pass ? 1 : 0;
        rows.push_back(report::to_json(r));
        tab << block_name(*r.block) << "  " << (r.pass ? "PASS" : "FAIL") << "  rank " << r.rank_full
            << "  basic set " << label_list(r.candidates) << '\n';
        for (const auto& rc : r.others)
            tab << "  " << relation_text(r, rc) << '\n';
    }
    const std::size_t failed = reports.size() - passed;
    doc["blocks"] = rows;
    doc["summary"] = {{"blocks", reports.size()}, {"pass", passed}, {"fail", failed}};
    tab << "summary: " << passed << " pass, " << failed << " fail\n";
    if (c.table)
        out << tab.str();
    else
        out << doc.dump(2) << '\n';
    return failed == 0 ? kOk : kFail;
}

int cmd_counts(const Context& c, std::ostream& out) {
    const auto blocks = selected_blocks(c);
    const CharacterTable table(c.cover, c.n);
    struct Row {
        std::size_t members, basic;
        mpz_class brauer;
        std::size_t rank;
    };
    const auto counted = parallel_map<Row>(blocks.size(), c.workers, [&](std::size_t i) {
        const auto m = restricted_matrix(blocks[i].id, table);
        const auto ex = expand_over_integral_basis(m.entries);
        return Row{blocks[i].members.size(), basic_set(blocks[i].id).size(), brauer_count(blocks[i].id),
                   lattice_rank(ex.rows)};
    });
    bool ok = true;
    json doc = header("counts", c);
    json rows = json::array();
    std::ostringstream tab;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const auto& r = counted[i];
        const bool agree = r.brauer == mpz_class(static_cast<unsigned long>(r.basic)) && r.rank == r.basic;
        ok = ok && agree;
        rows.push_back({{"block", report::to_json(blocks[i].id)},
                        {"characters", r.members},
                        {"basic_set", r.basic},
                        {"brauer_count", report::integer(r.brauer)},
                        {"rank", r.rank},
                        {"agree", agree}});
        tab << block_name(blocks[i].id) << "  characters " << r.members << "  basic set " << r.basic
            << "  brauer " << r.brauer.get_str() << "  rank " << r.rank << (agree ? "" : "  MISMATCH") << '\n';
    }
    doc["blocks"] = rows;
    if (c.table)
        out << tab.str();
    else
        out << doc.dump(2) << '\n';
    return ok ? kOk : kFail;
}

int cmd_isometry(const Context& c, std::ostream& out) {
    if (c.cover != Cover::Sym)
        throw UsageError("isometry is only available for --group sym");
    const auto blocks = selected_blocks(c);
    const CharacterTable table(c.cover, c.n);
    bool ok = true;
    json doc = header("isometry", c);
    json rows = json::array();
    std::ostringstream tab;
    for (const auto& b : blocks) {
        json row = {{"block", report::to_json(b.id)}};
        tab << block_name(b.id) << '\n';
        if (b.id.defect_zero()) {
            row["iso_I"] = nullptr;
            row["transports_basic_set"] = nullptr;
            tab << "  defect zero: no local isometry\n";
        } else {
            const auto spec = iso_I(b.id);
            const bool transport = transports_basic_set(spec, b.id);
            ok = ok && transport;
            row["iso_I"] = report::to_json(spec);
            row["transports_basic_set"] = transport;
            for (std::size_t k = 0; k < spec.size(); ++k)
                tab << "  I: " << to_string(spec.source[k]) << " -> " << (spec.signs[k].is_plus() ? "+" : "-")
                    << to_string(spec.images[k]) << '\n';
            tab << "  basic set transported: " << (transport ? "yes" : "NO") << '\n';
        }

        json swaps = json::array();
        const auto id_kernel = kernel_of(identity_isometry(b.id), table, table);
        for (const auto& x : b.members) {
            // a defect-zero pair is split over two blocks
            if (x.tag != AssocTag::Plus || b.id.defect_zero())
                continue;
            const auto j = swap_J(b.id, x.lambda);
            const auto jk = kernel_of(j, table, table);
            const auto br = broue_check(jk, c.p);
            const bool perfect = perfect_check(j, table, c.p);
            const auto diff = kernel_difference(jk, id_kernel);
            const SplitClass t{Cover::Sym, x.lambda.as_partition(), ClassHalf::None, 0,
                               2 * z_of(x.lambda.as_partition())};
            json d = nullptr;
            if (auto r = diff.row_of(t))
                d = report::to_json(diff.at(*r, *r));
            ok = ok && br.pass() && perfect;
            swaps.push_back({{"lambda", report::to_json(x.lambda)},
                             {"broue", report::to_json(br)},
                             {"perfect", perfect},
                             {"discrepancy_at_t_lambda", d}});
            tab << "  J" << to_string(x.lambda) << ": broue " << (br.pass() ? "pass" : "FAIL") << ", perfect "
                << (perfect ? "yes" : "NO");
            if (auto r = diff.row_of(t))
                tab << ", J^-I^ at t" << to_string(x.lambda) << " = " << diff.at(*r, *r).to_string();
            tab << '\n';
        }
        row["swaps"] = swaps;
        rows.push_back(row);
    }
    doc["blocks"] = rows;
    doc["pass"] = ok;
    if (c.table)
        out << tab.str();
    else
        out << doc.dump(2) << '\n';
    return ok ? kOk : kFail;
}

int cmd_selftest(const Context& c, std::ostream& out) {
    struct Check {
        std::string name;
        std::function<bool()> fn;
    };
    const std::vector<Check> checks = {
        {"n=3 p=3 block verifies", [] {
             const auto r = verify_basic_set(BlockId{Cover::Sym, 3, {}, 1, AssocTag::Self});
             return r.pass && r.others.size() == 1;
         }},
        {"row orthogonality n<=6", [] {
             for (Cover cv : {Cover::Sym, Cover::Alt})
                 for (int n = 1; n <= 6; ++n) {
                     const CharacterTable t(cv, n);
                     const auto cls = t.all_classes();
                     for (std::size_t a = 0; a < t.labels().size(); ++a)
                         for (std::size_t b = 0; b < t.labels().size(); ++b)
                             if (inner_product(cls, t.full_row(a), t.full_row(b), t.group_order()) !=
                                 (a == b ? 1 : 0))
                                 return false;
                 }
             return true;
         }},
        {"core/quotient roundtrip n<=15", [] {
             for (int n = 0; n <= 15; ++n)
                 for (int p : {3, 5, 7})
                     for (const auto& l : enumerate_bar_partitions(n)) {
                         const auto cq = bar_core_quotient(l, p);
                         if (from_core_quotient(cq.core, cq.quotient, p) != l)
                             return false;
                     }
             return true;
         }},
        {"counts agree n<=8", [] {
             for (Cover cv : {Cover::Sym, Cover::Alt})
                 for (int p : {3, 5, 7})
                     for (const auto& b : block_partition(cv, 8, p))
                         if (brauer_count(b.id) != mpz_class(static_cast<unsigned long>(basic_set(b.id).size())))
                             return false;
             return true;
         }},
    };
    json doc = header("selftest", c);
    json rows = json::array();
    bool ok = true;
    std::ostringstream tab;
    for (const auto& ch : checks) {
        bool pass = false;
        try {
            pass = ch.fn();
        } catch (const std::exception&) {
            pass = false;
        }
        ok = ok && pass;
        rows.push_back({{"check", ch.name}, {"pass", pass}});
        tab << (pass ? "PASS " : "FAIL ") << ch.name << '\n';
    }
    doc["checks"] = rows;
    doc["pass"] = ok;
    if (c.table)
        out << tab.str();
    else
        out << doc.dump(2) << '\n';
    return ok ? kOk : kFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spin blocks of the double covers of S_n and A_n: cores, blocks, basic sets, isometries"};
    app.require_subcommand(1);

    Options opt;
    using Handler = int (*)(const Context&, std::ostream&);
    const std::vector<std::tuple<std::string, std::string, Handler, bool>> verbs = {
        {"cores", "p-bar cores, quotients and signs of all bar partitions of n", cmd_cores, false},
        {"blocks", "spin p-blocks of the cover", cmd_blocks, true},
        {"basic-set", "basic set (empty lambda0) of each block", cmd_basic_set, true},
        {"verify", "check the basic set spans each block over Z", cmd_verify, true},
        {"counts", "basic set size vs Brauer count vs lattice rank", cmd_counts, true},
        {"isometry", "block isometry I and swap isometries J (sym only)", cmd_isometry, true},
        {"selftest", "quick internal consistency checks", cmd_selftest, false},
    };
    std::vector<std::pair<CLI::App*, Handler>> subs;
    for (const auto& [name, desc, fn, needs_group] : verbs) {
        auto* sub = app.add_subcommand(name, desc);
        const bool need_n = name != "selftest";
        auto* n_opt = sub->add_option("--n", opt.n, "degree n");
        if (need_n)
            n_opt->required();
        sub->add_option("--p", opt.p, "odd prime p")->capture_default_str();
        if (needs_group)
            sub->add_option("--group", opt.group, "sym or alt")->check(CLI::IsMember({"sym", "alt"}))->capture_default_str();
        if (name != "selftest")
            sub->add_option("--core", opt.core, "restrict to one p-bar core, e.g. 5,2");
        sub->add_option("--format", opt.format, "json or table")
            ->check(CLI::IsMember({"json", "table"}))
            ->capture_default_str();
        subs.emplace_back(sub, fn);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    for (const auto& [sub, fn] : subs) {
        if (!sub->parsed())
            continue;
        try {
            Options o = opt;
            if (sub->get_name() == "selftest" && o.n < 0)
                o.n = 0;
            const Context ctx = make_context(o);
            return fn(ctx, std::cout);
        } catch (const UsageError& e) {
            std::cerr << "error: " << e.what() << "\n\n" << sub->help();
            return kUsage;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return kFail;
        }
    }
    return kUsage;
}
