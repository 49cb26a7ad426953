#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qasl/error.hpp"

namespace qasl {

/// Integer-coefficient Laurent polynomial in the formal parameter q.
///
/// Stored as the lowest exponent plus a dense coefficient vector, so
/// coeff(low()+k) == coeffs_[k]. The zero polynomial has an empty vector;
/// otherwise the first and last stored coefficients are nonzero.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long constant) : LaurentPoly(mpz_class(constant)) {}
    explicit LaurentPoly(const mpz_class& constant);

    /// c * q^e
    static LaurentPoly term(const mpz_class& c, long e);
    static LaurentPoly q_power(long e) { return term(1, e); }
    static LaurentPoly one() { return LaurentPoly(1); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;

    /// Lowest/highest exponent with nonzero coefficient. Nonzero input only.
    long low() const;
    long high() const;

    /// Coefficient of q^e (zero outside the stored range).
    mpz_class coeff(long e) const;

    /// Number of nonzero terms.
    std::size_t term_count() const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator-(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    LaurentPoly& operator+=(const LaurentPoly& rhs) { return *this = *this + rhs; }
    LaurentPoly& operator-=(const LaurentPoly& rhs) { return *this = *this - rhs; }
    LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

    bool operator==(const LaurentPoly& rhs) const {
        return low_ == rhs.low_ && coeffs_ == rhs.coeffs_;
    }
    bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

    /// Multiply by q^e.
    LaurentPoly shifted(long e) const;

    LaurentPoly pow(unsigned long e) const;

    /// gcd of all coefficients, sign chosen so the result is nonnegative.
    mpz_class content() const;

    /// Sign of the leading (highest-exponent) coefficient; 0 for zero.
    int leading_sign() const;

    /// Greatest common divisor in Z[q^{±1}], normalized so the result is an
    /// ordinary polynomial (low() == 0) with positive leading coefficient.
    /// gcd includes the integer content.
    static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

    /// Exact quotient a/b; raises InvariantViolation if b does not divide a.
    static LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

    /// Evaluate at a nonzero rational point.
    mpq_class evaluate(const mpq_class& t) const;

    /// Canonical text form, highest exponent first, e.g. "q^2 - 1".
    std::string to_string() const;

    /// Total order (for use as container key): compare (low, coeffs).
    int compare(const LaurentPoly& rhs) const;
    bool operator<(const LaurentPoly& rhs) const { return compare(rhs) < 0; }

private:
    void normalize();

    long low_ = 0;
    std::vector<mpz_class> coeffs_;
};

} // namespace qasl
