#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qasl/qscalar.hpp"

namespace qasl {

/// Generator X_{ij} of the quantum matrix algebra; the PBW order is
/// row-major lexicographic on (row, col).
struct GenIndex {
    int row = 1; // 1..u
    int col = 1; // 1..v
    auto operator<=>(const GenIndex&) const = default;
};

using Word = std::vector<GenIndex>;

std::string word_to_string(const Word& w);

/// N^u row-degree of a homogeneous element (multiplicity of each row index).
struct RowDegree {
    std::vector<int> mult;

    bool operator==(const RowDegree&) const = default;
    RowDegree operator+(const RowDegree& rhs) const;
    std::string to_string() const;
};

/// Ambient data every PBW element carries: matrix sizes and the relation
/// convention. `mirror` swaps q and q^{-1} throughout (and the minor sign
/// base accordingly); the default convention is the one all structural
/// checks are run against.
struct QmAmbient {
    int rows = 1;
    int cols = 1;
    bool mirror = false;

    bool operator==(const QmAmbient&) const = default;
    QScalar q_power(long e) const { return QScalar::q_power(mirror ? -e : e); }
};

/// Element of O_q(M_{u,v}) in PBW normal form: a map from sorted generator
/// words to nonzero Q(q) coefficients. Immutable value semantics; all
/// arithmetic re-normalizes eagerly so equal values have equal
/// representations.
class PbwElement {
public:
    PbwElement() = default;
    explicit PbwElement(QmAmbient ambient) : ambient_(ambient) {}

    const QmAmbient& ambient() const { return ambient_; }
    const std::map<Word, QScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    PbwElement operator+(const PbwElement& rhs) const;
    PbwElement operator-(const PbwElement& rhs) const;
    PbwElement operator*(const PbwElement& rhs) const;
    PbwElement operator*(const QScalar& c) const;
    PbwElement& operator+=(const PbwElement& rhs) { return *this = *this + rhs; }
    PbwElement& operator-=(const PbwElement& rhs) { return *this = *this - rhs; }

    bool operator==(const PbwElement& rhs) const {
        return ambient_ == rhs.ambient_ && terms_ == rhs.terms_;
    }
    bool operator!=(const PbwElement& rhs) const { return !(*this == rhs); }

    QScalar coefficient(const Word& w) const;

    /// Common row-degree when homogeneous; nullopt when inhomogeneous or
    /// zero (the zero element is homogeneous of every degree).
    std::optional<RowDegree> row_degree() const;

    std::string to_string() const;

private:
    friend class QuantumMatrices;

    void add_term(const Word& w, const QScalar& c);

    QmAmbient ambient_;
    std::map<Word, QScalar> terms_;
};

struct ConfluenceReport {
    bool ok = true;
    long words_checked = 0;
    std::vector<std::string> failures;
};

/// The algebra O_q(M_{u,v}): construction of elements and the rewriting
/// engine that brings arbitrary generator words to PBW normal form.
///
/// Relation convention (for i < k, j < l):
///   X_ij X_il = q X_il X_ij,  X_ij X_kj = q X_kj X_ij,
///   X_ij X_kl = X_kl X_ij              (j > l),
///   X_ij X_kl - X_kl X_ij = (q - q^{-1}) X_il X_kj   (j < l).
class QuantumMatrices {
public:
    QuantumMatrices(int rows, int cols, bool mirror = false);

    int rows() const { return ambient_.rows; }
    int cols() const { return ambient_.cols; }
    const QmAmbient& ambient() const { return ambient_; }

    PbwElement zero() const { return PbwElement(ambient_); }
    PbwElement one() const;
    PbwElement generator(GenIndex g) const;

    /// PBW expansion of the product of generators in the given order.
    PbwElement normal_form(const Word& word) const;

    /// Quantum minor [I|J] = sum over permutations sigma of
    /// (-q)^{l(sigma)} X_{i_sigma(1) j_1} ... X_{i_sigma(t) j_t}.
    PbwElement quantum_minor(const std::vector<int>& row_set,
                             const std::vector<int>& col_set) const;

    /// Transpose automorphism X_ij -> X_ji (square ambient only).
    PbwElement transpose(const PbwElement& x) const;

    /// Exhaustively checks that every word of length <= max_word_len reaches
    /// the same normal form along every reduction sequence.
    ConfluenceReport confluence_check(int max_word_len = 3) const;

    /// True when a and b commute on the nose (anti-diagonal or equal pairs).
    static bool commutes_trivially(GenIndex a, GenIndex b);

    void check_bounds(GenIndex g) const;

private:
    QmAmbient ambient_;
};

} // namespace qasl
