#include "qasl/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace qasl {

LaurentPoly::LaurentPoly(const mpz_class& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

LaurentPoly LaurentPoly::term(const mpz_class& c, long e) {
    LaurentPoly p;
    if (c != 0) {
        p.low_ = e;
        p.coeffs_.push_back(c);
    }
    return p;
}

bool LaurentPoly::is_one() const {
    return coeffs_.size() == 1 && low_ == 0 && coeffs_[0] == 1;
}

long LaurentPoly::low() const {
    if (is_zero()) raise(ErrorKind::InvariantViolation, "low() of zero polynomial");
    return low_;
}

long LaurentPoly::high() const {
    if (is_zero()) raise(ErrorKind::InvariantViolation, "high() of zero polynomial");
    return low_ + static_cast<long>(coeffs_.size()) - 1;
}

mpz_class LaurentPoly::coeff(long e) const {
    if (is_zero()) return 0;
    long k = e - low_;
    if (k < 0 || k >= static_cast<long>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

std::size_t LaurentPoly::term_count() const {
    std::size_t n = 0;
    for (const auto& c : coeffs_)
        if (c != 0) ++n;
    return n;
}

void LaurentPoly::normalize() {
    std::size_t begin = 0;
    std::size_t end = coeffs_.size();
    while (end > begin && coeffs_[end - 1] == 0) --end;
    while (begin < end && coeffs_[begin] == 0) ++begin;
    if (begin == end) {
        coeffs_.clear();
        low_ = 0;
        return;
    }
    if (begin > 0 || end < coeffs_.size()) {
        std::vector<mpz_class> trimmed(coeffs_.begin() + static_cast<long>(begin),
                                       coeffs_.begin() + static_cast<long>(end));
        coeffs_ = std::move(trimmed);
        low_ += static_cast<long>(begin);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    if (is_zero()) return rhs;
    if (rhs.is_zero()) return *this;
    long lo = std::min(low_, rhs.low_);
    long hi = std::max(high(), rhs.high());
    LaurentPoly r;
    r.low_ = lo;
    r.coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), 0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        r.coeffs_[static_cast<std::size_t>(low_ - lo) + k] += coeffs_[k];
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
        r.coeffs_[static_cast<std::size_t>(rhs.low_ - lo) + k] += rhs.coeffs_[k];
    r.normalize();
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
    return *this + (-rhs);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return LaurentPoly();
    LaurentPoly r;
    r.low_ = low_ + rhs.low_;
    r.coeffs_.assign(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    r.normalize();
    return r;
}

LaurentPoly LaurentPoly::shifted(long e) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.low_ += e;
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned long e) const {
    LaurentPoly r = one();
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1ul) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

mpz_class LaurentPoly::content() const {
    mpz_class g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

int LaurentPoly::leading_sign() const {
    if (is_zero()) return 0;
    return sgn(coeffs_.back());
}

namespace {

// Ordinary-polynomial pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
// Both arguments nonzero with low() == 0 viewed as polynomials in q.
LaurentPoly pseudo_rem(LaurentPoly a, const LaurentPoly& b) {
    long db = b.high();
    mpz_class lb = b.coeff(db);
    while (!a.is_zero() && a.high() >= db) {
        long da = a.high();
        LaurentPoly t = LaurentPoly::term(a.coeff(da), da - db);
        a = a * LaurentPoly(lb) - t * b;
        if (!a.is_zero() && a.high() >= da)
            raise(ErrorKind::InvariantViolation, "pseudo_rem failed to reduce degree");
    }
    return a;
}

LaurentPoly primitive_part(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    mpz_class c = p.content();
    if (p.leading_sign() < 0) c = -c;
    return LaurentPoly::divide_exact(p, LaurentPoly(c));
}

} // namespace

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return LaurentPoly();
    if (a.is_zero()) return gcd(b, b);
    if (b.is_zero()) {
        LaurentPoly r = a.shifted(-a.low());
        if (r.leading_sign() < 0) r = -r;
        return r;
    }
    // Units q^k are factored out first; gcd of the polynomial parts is
    // content gcd times primitive-part gcd.
    LaurentPoly pa = a.shifted(-a.low());
    LaurentPoly pb = b.shifted(-b.low());
    mpz_class cont;
    mpz_gcd(cont.get_mpz_t(), pa.content().get_mpz_t(), pb.content().get_mpz_t());

    LaurentPoly r0 = primitive_part(pa);
    LaurentPoly r1 = primitive_part(pb);
    if (r0.high() < r1.high()) std::swap(r0, r1);
    while (!r1.is_zero()) {
        LaurentPoly r2 = pseudo_rem(r0, r1);
        if (!r2.is_zero()) r2 = primitive_part(r2.shifted(-r2.low()));
        r0 = r1;
        r1 = r2;
    }
    LaurentPoly g = r0 * LaurentPoly(cont);
    if (g.leading_sign() < 0) g = -g;
    return g;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) raise(ErrorKind::InvariantViolation, "division by zero polynomial");
    if (a.is_zero()) return LaurentPoly();
    long shift = a.low() - b.low();
    LaurentPoly rem = a.shifted(-a.low());
    LaurentPoly div = b.shifted(-b.low());
    long db = div.high();
    mpz_class lb = div.coeff(db);
    LaurentPoly quot;
    while (!rem.is_zero() && rem.high() >= db) {
        long da = rem.high();
        mpz_class qc, rc;
        mpz_tdiv_qr(qc.get_mpz_t(), rc.get_mpz_t(), rem.coeff(da).get_mpz_t(), lb.get_mpz_t());
        if (rc != 0)
            raise(ErrorKind::InvariantViolation, "divide_exact: inexact coefficient quotient");
        LaurentPoly t = term(qc, da - db);
        quot += t;
        rem -= t * div;
        if (!rem.is_zero() && rem.high() >= da)
            raise(ErrorKind::InvariantViolation, "divide_exact failed to reduce degree");
    }
    if (!rem.is_zero())
        raise(ErrorKind::InvariantViolation, "divide_exact: nonzero remainder");
    return quot.shifted(shift);
}

mpq_class LaurentPoly::evaluate(const mpq_class& t) const {
    if (t == 0) raise(ErrorKind::InvalidInput, "evaluation point must be nonzero");
    if (is_zero()) return 0;
    // Horner on the polynomial part, then the q^low unit.
    mpq_class acc = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        acc = acc * t + mpq_class(coeffs_[k]);
    }
    mpq_class unit = 1;
    long e = low_;
    mpq_class base = e >= 0 ? t : mpq_class(1) / t;
    unsigned long n = static_cast<unsigned long>(e >= 0 ? e : -e);
    while (n > 0) {
        if (n & 1ul) unit *= base;
        base *= base;
        n >>= 1;
    }
    acc *= unit;
    acc.canonicalize();
    return acc;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long e = high(); e >= low(); --e) {
        mpz_class c = coeff(e);
        if (c == 0) continue;
        bool neg = c < 0;
        mpz_class a = abs(c);
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (e == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

int LaurentPoly::compare(const LaurentPoly& rhs) const {
    if (coeffs_.empty() != rhs.coeffs_.empty()) return coeffs_.empty() ? -1 : 1;
    if (coeffs_.empty()) return 0;
    if (low_ != rhs.low_) return low_ < rhs.low_ ? -1 : 1;
    if (coeffs_.size() != rhs.coeffs_.size())
        return coeffs_.size() < rhs.coeffs_.size() ? -1 : 1;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        int c = cmp(coeffs_[k], rhs.coeffs_[k]);
        if (c != 0) return c;
    }
    return 0;
}

} // namespace qasl
