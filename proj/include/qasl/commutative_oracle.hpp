#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "qasl/qmatrix.hpp"

namespace qasl::comm {

/// Commutative polynomial over Q in the generators X_{ij}: monomials are
/// sorted generator multisets. Deliberately shares no code with the PBW
/// rewriting path; it serves as the q = 1 oracle.
class CommPoly {
public:
    using Monomial = std::vector<GenIndex>; // kept sorted

    CommPoly() = default;
    explicit CommPoly(const mpq_class& c);

    static CommPoly generator(GenIndex g);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, mpq_class>& terms() const { return terms_; }

    CommPoly operator+(const CommPoly& rhs) const;
    CommPoly operator-(const CommPoly& rhs) const;
    CommPoly operator*(const CommPoly& rhs) const;
    CommPoly operator*(const mpq_class& c) const;
    CommPoly& operator+=(const CommPoly& rhs) { return *this = *this + rhs; }

    bool operator==(const CommPoly& rhs) const { return terms_ == rhs.terms_; }

private:
    void add_term(const Monomial& m, const mpq_class& c);

    std::map<Monomial, mpq_class> terms_;
};

/// Classical minor det(X[I, J]) with Leibniz signs.
CommPoly classical_minor(const std::vector<int>& row_set, const std::vector<int>& col_set);

/// The q = 1 specialization of a PBW element, as a commutative polynomial.
/// Raises DenominatorVanishes if any coefficient has a pole at q = 1.
CommPoly specialize_q1(const PbwElement& x);

/// Dense exact linear solve over Q; returns false when no unique solution
/// exists. Independent of the Q(q) elimination used by the main pipeline.
bool solve_rational(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b,
                    std::vector<mpq_class>& x);

} // namespace qasl::comm
