#include "tassign/linalg.hpp"

#include "tassign/errors.hpp"

#include <utility>

namespace tassign::linalg {

namespace {

using IntRow = std::vector<Integer>;

IntRow to_integer_row(const Row& r) {
    Integer l = 1;
    for (const auto& q : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    IntRow out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) out[i] = r[i].get_num() * (l / r[i].get_den());
    return out;
}

void remove_content(IntRow& r) {
    Integer g = 0;
    for (const auto& v : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1)
        for (auto& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// target <- p*target - c*source, where p = source[col], c = target[col].
void eliminate(IntRow& target, const IntRow& source, std::size_t col) {
    const Integer p = source[col];
    const Integer c = target[col];
    if (c == 0) return;
    for (std::size_t j = 0; j < target.size(); ++j) target[j] = p * target[j] - c * source[j];
    remove_content(target);
}

} // namespace

Echelon row_reduce(const Matrix& m, std::size_t cols) {
    std::vector<IntRow> rows;
    rows.reserve(m.size());
    for (const auto& r : m) {
        if (r.size() != cols) throw Error("row_reduce: ragged matrix");
        rows.push_back(to_integer_row(r));
        remove_content(rows.back());
    }

    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t col = 0; col < cols && next < rows.size(); ++col) {
        std::size_t sel = next;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[next], rows[sel]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != next) eliminate(rows[i], rows[next], col);
        pivots.push_back(col);
        ++next;
    }

    Echelon out;
    out.pivots = pivots;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const Integer lead = rows[i][pivots[i]];
        Row r(cols);
        for (std::size_t j = 0; j < cols; ++j) {
            r[j] = Rational(rows[i][j], lead);
            r[j].canonicalize();
        }
        out.rows.push_back(std::move(r));
    }
    return out;
}

std::size_t rank(const Matrix& m, std::size_t cols) { return row_reduce(m, cols).pivots.size(); }

Matrix nullspace(const Matrix& m, std::size_t cols) {
    const Echelon e = row_reduce(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;

    Matrix basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Row v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][free];
        basis.push_back(std::move(v));
    }
    return row_reduce(basis, cols).rows;
}

} // namespace tassign::linalg
