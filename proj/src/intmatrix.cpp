#include "spinbasic/intmatrix.hpp"

#include "spinbasic/errors.hpp"

#include <algorithm>

namespace spinbasic {

namespace {

// g = s a + t b
void gcdext(const mpz_class& a, const mpz_class& b, mpz_class& g, mpz_class& s, mpz_class& t) {
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

} // namespace

IntMatrix hermite_normal_form(IntMatrix rows) {
    if (rows.empty())
        return {};
    const std::size_t ncols = rows.front().size();
    for (const auto& r : rows)
        if (r.size() != ncols)
            throw InvalidArgument("ragged integer matrix");

    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t col = 0; col < ncols && pivot_row < rows.size(); ++col) {
        // fold every lower entry of this column into the pivot row
        for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0)
                continue;
            if (rows[pivot_row][col] == 0) {
                std::swap(rows[pivot_row], rows[r]);
                continue;
            }
            const mpz_class a = rows[pivot_row][col];
            const mpz_class b = rows[r][col];
            mpz_class g, s, t;
            gcdext(a, b, g, s, t);
            const mpz_class ag = a / g, bg = b / g;
            for (std::size_t k = col; k < ncols; ++k) {
                const mpz_class x = rows[pivot_row][k];
                const mpz_class y = rows[r][k];
                rows[pivot_row][k] = s * x + t * y;
                rows[r][k] = ag * y - bg * x;
            }
        }
        if (rows[pivot_row][col] == 0)
            continue;
        if (rows[pivot_row][col] < 0)
            for (auto& v : rows[pivot_row])
                v = -v;
        pivot_cols.push_back(col);
        ++pivot_row;
    }
    rows.resize(pivot_row);

    // reduce above the pivots
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::size_t col = pivot_cols[i];
        const mpz_class& piv = rows[i][col];
        for (std::size_t r = 0; r < i; ++r) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), piv.get_mpz_t());
            if (q == 0)
                continue;
            for (std::size_t k = col; k < ncols; ++k)
                rows[r][k] -= q * rows[i][k];
        }
    }
    return rows;
}

std::size_t lattice_rank(const IntMatrix& rows) { return hermite_normal_form(rows).size(); }

std::optional<RatRow> solve_coordinates(const IntMatrix& basis, const IntRow& target) {
    const std::size_t k = basis.size();
    const std::size_t m = target.size();
    for (const auto& r : basis)
        if (r.size() != m)
            throw InvalidArgument("basis row length differs from target length");

    // Solve basis^T c = target: m equations in k unknowns, augmented.
    std::vector<RatRow> a(m, RatRow(k + 1));
    for (std::size_t e = 0; e < m; ++e) {
        for (std::size_t u = 0; u < k; ++u)
            a[e][u] = basis[u][e];
        a[e][k] = target[e];
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_of(k, m);
    for (std::size_t u = 0; u < k; ++u) {
        std::size_t sel = row;
        while (sel < m && a[sel][u] == 0)
            ++sel;
        if (sel == m)
            throw InvalidArgument("basis rows are linearly dependent");
        std::swap(a[row], a[sel]);
        const mpq_class piv = a[row][u];
        for (auto& v : a[row])
            v /= piv;
        for (std::size_t e = 0; e < m; ++e) {
            if (e == row || a[e][u] == 0)
                continue;
            const mpq_class f = a[e][u];
            for (std::size_t c = u; c <= k; ++c)
                a[e][c] -= f * a[row][c];
        }
        pivot_of[u] = row;
        ++row;
    }
    for (std::size_t e = row; e < m; ++e)
        if (a[e][k] != 0)
            return std::nullopt;
    RatRow c(k);
    for (std::size_t u = 0; u < k; ++u)
        c[u] = a[pivot_of[u]][k];
    return c;
}

} // namespace spinbasic
