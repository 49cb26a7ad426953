#pragma once

#include <vector>

#include "qasl/qscalar.hpp"

namespace qasl {

using QVector = std::vector<QScalar>;
using QMatrixData = std::vector<QVector>;

/// Rank of a matrix over Q(q), computed by fraction-free (Bareiss)
/// elimination on denominator-cleared rows.
std::size_t matrix_rank(const QMatrixData& m);

/// Solve A x = b where A has full column rank and the system is consistent.
/// Raises RankDeficient when the columns are linearly dependent and
/// InvariantViolation when the system is inconsistent.
QVector solve_unique(const QMatrixData& a, const QVector& b);

} // namespace qasl
