#include "spinbasic/zverify.hpp"

#include "spinbasic/errors.hpp"

#include <algorithm>
#include <map>

namespace spinbasic {

ValueMatrix ValueMatrix::select(const std::vector<SpinLabel>& labels) const {
    ValueMatrix out;
    out.cols = cols;
    for (const auto& x : labels) {
        out.rows.push_back(x);
        out.entries.push_back(entries[row_index(x)]);
    }
    return out;
}

std::size_t ValueMatrix::row_index(const SpinLabel& x) const {
    auto it = std::find(rows.begin(), rows.end(), x);
    if (it == rows.end())
        throw InvalidArgument("label " + to_string(x) + " is not a row of the matrix");
    return static_cast<std::size_t>(it - rows.begin());
}

ExpandedRows expand_over_integral_basis(const std::vector<std::vector<AlgNum>>& rows) {
    ExpandedRows out;
    std::map<BasisKey, std::size_t> index;
    mpz_class den = 1;
    for (const auto& row : rows)
        for (const auto& v : row)
            for (const auto& [key, c] : v.coordinates()) {
                index.emplace(key, 0);
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
            }
    std::size_t k = 0;
    for (auto& [key, slot] : index) {
        slot = k++;
        out.basis.push_back(key);
    }
    out.scale = den;
    const std::size_t width = rows.empty() ? 0 : rows.front().size();
    for (const auto& row : rows) {
        if (row.size() != width)
            throw InvalidArgument("ragged value matrix");
        // column-major over (class, basis element)
        IntRow ints(width * out.basis.size(), mpz_class(0));
        for (std::size_t j = 0; j < row.size(); ++j) {
            for (const auto& [key, c] : row[j].coordinates()) {
                const mpq_class scaled = c * mpq_class(den);
                if (scaled.get_den() != 1)
                    throw InternalError("coordinate not integral after clearing denominators");
                ints[j * out.basis.size() + index.at(key)] = scaled.get_num();
            }
        }
        out.rows.push_back(std::move(ints));
    }
    return out;
}

IntSpanResult int_span_equal(const IntMatrix& rows, std::size_t candidate_count) {
    if (candidate_count > rows.size())
        throw InvalidArgument("more candidates than rows");
    IntSpanResult res;
    const IntMatrix cand(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(candidate_count));
    const IntMatrix hnf_cand = hermite_normal_form(cand);
    const IntMatrix hnf_full = hermite_normal_form(rows);
    res.rank_candidates = hnf_cand.size();
    res.rank_full = hnf_full.size();
    res.candidates_independent = res.rank_candidates == candidate_count;
    res.hnf_equal = hnf_cand == hnf_full;

    bool all_integral = res.candidates_independent;
    for (std::size_t r = candidate_count; r < rows.size(); ++r) {
        std::optional<RatRow> c;
        if (res.candidates_independent)
            c = solve_coordinates(cand, rows[r]);
        if (!c || std::any_of(c->begin(), c->end(), [](const mpq_class& q) { return q.get_den() != 1; }))
            all_integral = false;
        res.coordinates.push_back(std::move(c));
    }
    res.pass = res.candidates_independent && all_integral;
    if (res.pass != (res.candidates_independent && res.hnf_equal))
        throw InternalError("Hermite form and coordinate solve disagree on span equality");
    return res;
}

VerificationReport z_span_equal(const ValueMatrix& candidate, const ValueMatrix& full) {
    if (candidate.cols != full.cols)
        throw InvalidArgument("candidate and full matrices have different columns");
    // candidates first, then the remaining rows of `full` in their order
    std::vector<std::vector<AlgNum>> ordered;
    std::vector<SpinLabel> others;
    for (const auto& x : candidate.rows)
        ordered.push_back(full.entries[full.row_index(x)]);
    for (std::size_t r = 0; r < full.rows.size(); ++r) {
        if (std::find(candidate.rows.begin(), candidate.rows.end(), full.rows[r]) ==
            candidate.rows.end()) {
            others.push_back(full.rows[r]);
            ordered.push_back(full.entries[r]);
        }
    }
    for (std::size_t r = 0; r < candidate.rows.size(); ++r)
        if (candidate.entries[r] != ordered[r])
            throw InvalidArgument("candidate row " + to_string(candidate.rows[r]) +
                                  " differs from the full matrix");

    const auto expanded = expand_over_integral_basis(ordered);
    const auto res = int_span_equal(expanded.rows, candidate.rows.size());

    VerificationReport rep;
    rep.candidates = candidate.rows;
    rep.rank_full = res.rank_full;
    rep.rank_candidates = res.rank_candidates;
    rep.candidates_independent = res.candidates_independent;
    rep.hnf_equal = res.hnf_equal;
    rep.pass = res.pass;
    for (std::size_t k = 0; k < others.size(); ++k) {
        RowCoordinates rc{others[k], res.coordinates[k], false};
        if (rc.coefficients)
            rc.integral = std::all_of(rc.coefficients->begin(), rc.coefficients->end(),
                                      [](const mpq_class& q) { return q.get_den() == 1; });
        rep.others.push_back(std::move(rc));
    }
    return rep;
}

ValueMatrix restricted_matrix(const BlockId& b, const CharacterTable& table) {
    if (table.cover() != b.cover || table.n() != b.n())
        throw InvalidArgument("character table does not match block " + to_string(b));
    ValueMatrix m;
    std::vector<std::size_t> col_idx;
    for (std::size_t j = 0; j < table.classes().size(); ++j) {
        if (table.classes()[j].p_regular(b.p)) {
            col_idx.push_back(j);
            m.cols.push_back(table.classes()[j]);
        }
    }
    for (const auto& x : block_members(b)) {
        const std::size_t i = table.index_of(x);
        std::vector<AlgNum> row;
        for (std::size_t j : col_idx)
            row.push_back(table.value(i, j));
        m.rows.push_back(x);
        m.entries.push_back(std::move(row));
    }
    return m;
}

ValueMatrix restricted_matrix(const BlockId& b) {
    return restricted_matrix(b, CharacterTable(b.cover, b.n()));
}

VerificationReport verify_basic_set(const BlockId& b, const CharacterTable& table) {
    const ValueMatrix full = restricted_matrix(b, table);
    auto rep = z_span_equal(full.select(basic_set(b)), full);
    rep.block = b;
    return rep;
}

VerificationReport verify_basic_set(const BlockId& b) {
    return verify_basic_set(b, CharacterTable(b.cover, b.n()));
}

bool p_integrality(const AlgNum& v, int p, const mpz_class& denominator) {
    if (denominator <= 0)
        throw InvalidArgument("denominator must be positive");
    const mpz_class pz = p;
    for (const auto& [key, c] : v.coordinates()) {
        const mpq_class q = c / mpq_class(denominator);
        if (mpz_divisible_p(q.get_den_mpz_t(), pz.get_mpz_t()))
            return false;
    }
    return true;
}

} // namespace spinbasic
