#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "qasl/laurent.hpp"

namespace qasl {

/// Exact element of Q(q), the field of rational functions in the formal
/// deformation parameter q, stored as a reduced fraction of integer Laurent
/// polynomials.
///
/// Canonical form: the denominator is an ordinary polynomial (lowest
/// exponent 0) with positive leading coefficient, coprime to the numerator
/// in Z[q^{±1}] (including integer content). Equality of values is equality
/// of representations.
class QScalar {
public:
    QScalar() = default;
    QScalar(long constant) : num_(constant) {}
    QScalar(const mpz_class& constant) : num_(constant) {}
    explicit QScalar(const mpq_class& constant)
        : QScalar(LaurentPoly(constant.get_num()), LaurentPoly(constant.get_den())) {}
    QScalar(LaurentPoly numerator) : num_(std::move(numerator)) {}
    QScalar(LaurentPoly numerator, LaurentPoly denominator);

    static QScalar q() { return QScalar(LaurentPoly::q_power(1)); }
    static QScalar q_power(long e) { return QScalar(LaurentPoly::q_power(e)); }

    const LaurentPoly& numerator() const { return num_; }
    const LaurentPoly& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    QScalar operator-() const;
    QScalar operator+(const QScalar& rhs) const;
    QScalar operator-(const QScalar& rhs) const;
    QScalar operator*(const QScalar& rhs) const;
    QScalar operator/(const QScalar& rhs) const;
    QScalar& operator+=(const QScalar& rhs) { return *this = *this + rhs; }
    QScalar& operator-=(const QScalar& rhs) { return *this = *this - rhs; }
    QScalar& operator*=(const QScalar& rhs) { return *this = *this * rhs; }
    QScalar& operator/=(const QScalar& rhs) { return *this = *this / rhs; }

    QScalar inverse() const;
    QScalar pow(long e) const;

    bool operator==(const QScalar& rhs) const {
        return num_ == rhs.num_ && den_ == rhs.den_;
    }
    bool operator!=(const QScalar& rhs) const { return !(*this == rhs); }

    /// If the value is exactly s * q^e with s = ±1, returns (s, e).
    std::optional<std::pair<int, long>> as_pure_q_power() const;

    /// Exact value at q = t (t a nonzero rational).
    /// Raises DenominatorVanishes when the reduced denominator is zero at t.
    mpq_class specialize(const mpq_class& t) const;

    std::string to_string() const;

    /// Parse the grammar: integers, q, ^, +, -, *, /, parentheses.
    /// Accepts both ASCII '-' and the typographic minus sign.
    static QScalar parse(std::string_view text);

    /// Total order for container keys (no algebraic meaning).
    bool operator<(const QScalar& rhs) const {
        int c = num_.compare(rhs.num_);
        return c != 0 ? c < 0 : den_.compare(rhs.den_) < 0;
    }

private:
    void reduce();

    LaurentPoly num_;
    LaurentPoly den_ = LaurentPoly::one();
};

} // namespace qasl
