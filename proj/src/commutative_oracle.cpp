#include "qasl/commutative_oracle.hpp"

#include <algorithm>

namespace qasl::comm {

CommPoly::CommPoly(const mpq_class& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

CommPoly CommPoly::generator(GenIndex g) {
    CommPoly p;
    p.terms_.emplace(Monomial{g}, mpq_class(1));
    return p;
}

void CommPoly::add_term(const Monomial& m, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

CommPoly CommPoly::operator+(const CommPoly& rhs) const {
    CommPoly r = *this;
    for (const auto& [m, c] : rhs.terms_) r.add_term(m, c);
    return r;
}

CommPoly CommPoly::operator-(const CommPoly& rhs) const {
    return *this + rhs * mpq_class(-1);
}

CommPoly CommPoly::operator*(const mpq_class& c) const {
    CommPoly r;
    if (c == 0) return r;
    for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
    return r;
}

CommPoly CommPoly::operator*(const CommPoly& rhs) const {
    CommPoly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : rhs.terms_) {
            Monomial m;
            m.reserve(ma.size() + mb.size());
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
            r.add_term(m, ca * cb);
        }
    return r;
}

CommPoly classical_minor(const std::vector<int>& row_set, const std::vector<int>& col_set) {
    std::size_t t = row_set.size();
    CommPoly result;
    std::vector<std::size_t> perm(t);
    for (std::size_t i = 0; i < t; ++i) perm[i] = i;
    do {
        long inversions = 0;
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = i + 1; j < t; ++j)
                if (perm[i] > perm[j]) ++inversions;
        CommPoly term(mpq_class(inversions % 2 == 0 ? 1 : -1));
        for (std::size_t i = 0; i < t; ++i)
            term = term * CommPoly::generator({row_set[perm[i]], col_set[i]});
        result += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

CommPoly specialize_q1(const PbwElement& x) {
    CommPoly r;
    for (const auto& [w, c] : x.terms()) {
        CommPoly::Monomial m = w;
        std::sort(m.begin(), m.end());
        CommPoly term;
        term = CommPoly(c.specialize(1));
        CommPoly mono = CommPoly(mpq_class(1));
        for (const auto& g : m) mono = mono * CommPoly::generator(g);
        r += term * mono;
    }
    return r;
}

bool solve_rational(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b,
                    std::vector<mpq_class>& x) {
    std::size_t rows = a.size();
    std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::size_t r = 0;
    std::vector<std::size_t> pivot_row(cols, rows);
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (a[i][c] != 0) {
                p = i;
                break;
            }
        if (p == rows) return false; // dependent columns
        std::swap(a[r], a[p]);
        std::swap(b[r], b[p]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            mpq_class f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_row[c] = r;
        ++r;
    }
    if (r < cols) return false;
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) return false; // inconsistent
    x.assign(cols, 0);
    for (std::size_t c = 0; c < cols; ++c) {
        x[c] = b[pivot_row[c]] / a[pivot_row[c]][c];
        x[c].canonicalize();
    }
    return true;
}

} // namespace qasl::comm
