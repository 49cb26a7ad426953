#include "qasl/linalg.hpp"

#include <algorithm>

namespace qasl {

namespace {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

// Clear denominators row by row (an elementary operation on each row, so
// rank and solution sets are preserved).
PolyMatrix cleared(const QMatrixData& m) {
    PolyMatrix r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        LaurentPoly common = LaurentPoly::one();
        for (const auto& x : m[i])
            if (!x.denominator().is_one())
                common = LaurentPoly::divide_exact(
                    common * x.denominator(), LaurentPoly::gcd(common, x.denominator()));
        r[i].reserve(m[i].size());
        for (const auto& x : m[i])
            r[i].push_back(x.numerator() *
                           LaurentPoly::divide_exact(common, x.denominator()));
    }
    return r;
}

// Bareiss forward elimination; returns pivot columns. On exit the matrix is
// in row-echelon form up to row scaling.
std::vector<std::size_t> echelonize(PolyMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size();
    std::size_t cols = m[0].size();
    LaurentPoly prev = LaurentPoly::one();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Pick the structurally smallest nonzero pivot to limit growth.
        std::size_t best = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            if (best == rows ||
                m[i][c].term_count() < m[best][c].term_count())
                best = i;
        }
        if (best == rows) continue;
        std::swap(m[r], m[best]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                LaurentPoly t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                m[i][j] = LaurentPoly::divide_exact(t, prev);
            }
            m[i][c] = LaurentPoly();
        }
        prev = m[r][c];
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t matrix_rank(const QMatrixData& m) {
    if (m.empty()) return 0;
    PolyMatrix p = cleared(m);
    return echelonize(p).size();
}

QVector solve_unique(const QMatrixData& a, const QVector& b) {
    std::size_t rows = a.size();
    if (rows != b.size())
        raise(ErrorKind::InvalidInput, "solve_unique: shape mismatch");
    std::size_t cols = rows == 0 ? 0 : a[0].size();
    if (cols == 0) {
        for (const auto& x : b)
            if (!x.is_zero())
                raise(ErrorKind::InvariantViolation, "solve_unique: inconsistent system");
        return {};
    }

    QMatrixData aug(rows, QVector(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        std::copy(a[i].begin(), a[i].end(), aug[i].begin());
        aug[i][cols] = b[i];
    }
    PolyMatrix m = cleared(aug);
    std::vector<std::size_t> pivots = echelonize(m);

    std::size_t a_rank = 0;
    bool augmented_pivot = false;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        if (pivots[k] < cols)
            ++a_rank;
        else
            augmented_pivot = true;
    }
    if (a_rank < cols)
        raise(ErrorKind::RankDeficient,
              "solve_unique: column rank " + std::to_string(a_rank) + " < " +
                  std::to_string(cols));
    if (augmented_pivot)
        raise(ErrorKind::InvariantViolation, "solve_unique: inconsistent system");

    // Back substitution in Q(q).
    QVector x(cols);
    for (std::size_t k = cols; k-- > 0;) {
        QScalar acc(QScalar(m[k][cols], LaurentPoly::one()));
        for (std::size_t j = k + 1; j < cols; ++j)
            acc -= QScalar(m[k][j], LaurentPoly::one()) * x[j];
        x[k] = acc / QScalar(m[k][k], LaurentPoly::one());
    }
    return x;
}

} // namespace qasl
