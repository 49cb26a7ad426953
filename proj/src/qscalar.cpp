#include "qasl/qscalar.hpp"

#include <cctype>

namespace qasl {

QScalar::QScalar(LaurentPoly numerator, LaurentPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero())
        raise(ErrorKind::InvalidInput, "zero denominator in Q(q) element");
    reduce();
}

void QScalar::reduce() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::one();
        return;
    }
    // Pull the q^k unit of the denominator into the numerator.
    long dlow = den_.low();
    if (dlow != 0) {
        den_ = den_.shifted(-dlow);
        num_ = num_.shifted(-dlow);
    }
    LaurentPoly g = LaurentPoly::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = LaurentPoly::divide_exact(num_, g);
        den_ = LaurentPoly::divide_exact(den_, g);
    }
    if (den_.leading_sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

QScalar QScalar::operator-() const {
    QScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

QScalar QScalar::operator+(const QScalar& rhs) const {
    if (is_zero()) return rhs;
    if (rhs.is_zero()) return *this;
    return QScalar(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

QScalar QScalar::operator-(const QScalar& rhs) const { return *this + (-rhs); }

QScalar QScalar::operator*(const QScalar& rhs) const {
    if (is_zero() || rhs.is_zero()) return QScalar();
    return QScalar(num_ * rhs.num_, den_ * rhs.den_);
}

QScalar QScalar::operator/(const QScalar& rhs) const { return *this * rhs.inverse(); }

QScalar QScalar::inverse() const {
    if (is_zero()) raise(ErrorKind::InvalidInput, "inverse of zero in Q(q)");
    return QScalar(den_, num_);
}

QScalar QScalar::pow(long e) const {
    if (e == 0) return QScalar(1);
    QScalar base = e > 0 ? *this : inverse();
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    QScalar r(1);
    while (n > 0) {
        if (n & 1ul) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

std::optional<std::pair<int, long>> QScalar::as_pure_q_power() const {
    if (!den_.is_one()) return std::nullopt;
    if (num_.is_zero() || num_.term_count() != 1) return std::nullopt;
    long e = num_.low();
    mpz_class c = num_.coeff(e);
    if (c == 1) return std::make_pair(1, e);
    if (c == -1) return std::make_pair(-1, e);
    return std::nullopt;
}

mpq_class QScalar::specialize(const mpq_class& t) const {
    if (t == 0) raise(ErrorKind::InvalidInput, "specialization point must be nonzero");
    mpq_class dv = den_.evaluate(t);
    if (dv == 0)
        raise(ErrorKind::DenominatorVanishes,
              "denominator " + den_.to_string() + " vanishes at q = " + t.get_str());
    mpq_class r = num_.evaluate(t) / dv;
    r.canonicalize();
    return r;
}

std::string QScalar::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

/// Recursive-descent parser for the scalar grammar.
class ScalarParser {
public:
    explicit ScalarParser(std::string_view text) : text_(text) {}

    QScalar run() {
        QScalar v = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("trailing characters");
        return v;
    }

private:
    QScalar expr() {
        QScalar v = term();
        for (;;) {
            skip_ws();
            if (accept('+')) {
                v += term();
            } else if (accept_minus()) {
                v -= term();
            } else {
                return v;
            }
        }
    }

    QScalar term() {
        QScalar v = factor();
        for (;;) {
            skip_ws();
            if (accept('*')) {
                v *= factor();
            } else if (accept('/')) {
                QScalar d = factor();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }

    QScalar factor() {
        skip_ws();
        bool neg = false;
        while (accept_minus()) {
            neg = !neg;
            skip_ws();
        }
        QScalar v = atom();
        skip_ws();
        if (accept('^')) {
            long e = integer();
            v = v.pow(e);
        }
        return neg ? -v : v;
    }

    QScalar atom() {
        skip_ws();
        if (accept('(')) {
            QScalar v = expr();
            skip_ws();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (pos_ < text_.size() && (text_[pos_] == 'q' || text_[pos_] == 'Q')) {
            ++pos_;
            return QScalar::q();
        }
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return QScalar(mpz_class(std::string(text_.substr(start, pos_ - start))));
        }
        fail("expected number, 'q' or '('");
    }

    long integer() {
        skip_ws();
        bool neg = false;
        while (accept_minus()) neg = !neg;
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected integer");
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return neg ? -v : v;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    // ASCII '-' or UTF-8 U+2212.
    bool accept_minus() {
        if (accept('-')) return true;
        if (pos_ + 2 < text_.size() + 1 && text_.substr(pos_, 3) == "−") {
            pos_ += 3;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& why) {
        raise(ErrorKind::InvalidInput,
              "scalar parse error at offset " + std::to_string(pos_) + ": " + why);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

QScalar QScalar::parse(std::string_view text) { return ScalarParser(text).run(); }

} // namespace qasl
