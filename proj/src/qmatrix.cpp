#include "qasl/qmatrix.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qasl {

std::string word_to_string(const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ".";
        os << "X" << w[i].row << "," << w[i].col;
    }
    return os.str();
}

RowDegree RowDegree::operator+(const RowDegree& rhs) const {
    if (mult.size() != rhs.mult.size())
        raise(ErrorKind::BadShape, "row degree arity mismatch");
    RowDegree r = *this;
    for (std::size_t i = 0; i < mult.size(); ++i) r.mult[i] += rhs.mult[i];
    return r;
}

std::string RowDegree::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < mult.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(mult[i]);
    }
    return s + ")";
}

// ---------------------------------------------------------------------------
// PbwElement

void PbwElement::add_term(const Word& w, const QScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PbwElement PbwElement::operator+(const PbwElement& rhs) const {
    if (ambient_ != rhs.ambient_)
        raise(ErrorKind::BadShape, "ambient mismatch in PBW addition");
    PbwElement r = *this;
    for (const auto& [w, c] : rhs.terms_) r.add_term(w, c);
    return r;
}

PbwElement PbwElement::operator-(const PbwElement& rhs) const {
    return *this + rhs * QScalar(-1);
}

PbwElement PbwElement::operator*(const QScalar& c) const {
    PbwElement r(ambient_);
    if (c.is_zero()) return r;
    for (const auto& [w, coeff] : terms_) r.terms_.emplace(w, coeff * c);
    return r;
}

PbwElement PbwElement::operator*(const PbwElement& rhs) const {
    if (ambient_ != rhs.ambient_)
        raise(ErrorKind::BadShape, "ambient mismatch in PBW multiplication");
    QuantumMatrices algebra(ambient_.rows, ambient_.cols, ambient_.mirror);
    PbwElement r(ambient_);
    for (const auto& [wa, ca] : terms_) {
        for (const auto& [wb, cb] : rhs.terms_) {
            Word concat = wa;
            concat.insert(concat.end(), wb.begin(), wb.end());
            PbwElement nf = algebra.normal_form(concat);
            QScalar scale = ca * cb;
            for (const auto& [w, c] : nf.terms_) r.add_term(w, c * scale);
        }
    }
    return r;
}

QScalar PbwElement::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? QScalar() : it->second;
}

std::optional<RowDegree> PbwElement::row_degree() const {
    if (terms_.empty()) return std::nullopt;
    std::optional<RowDegree> common;
    for (const auto& [w, c] : terms_) {
        RowDegree d{std::vector<int>(static_cast<std::size_t>(ambient_.rows), 0)};
        for (const auto& g : w) ++d.mult[static_cast<std::size_t>(g.row - 1)];
        if (!common) {
            common = d;
        } else if (*common != d) {
            return std::nullopt;
        }
    }
    return common;
}

std::string PbwElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*" << word_to_string(w);
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// QuantumMatrices

QuantumMatrices::QuantumMatrices(int rows, int cols, bool mirror) {
    if (rows < 1 || cols < 1)
        raise(ErrorKind::BadShape, "quantum matrix sizes must be positive");
    ambient_ = {rows, cols, mirror};
}

PbwElement QuantumMatrices::one() const {
    PbwElement r(ambient_);
    r.add_term({}, QScalar(1));
    return r;
}

PbwElement QuantumMatrices::generator(GenIndex g) const {
    check_bounds(g);
    PbwElement r(ambient_);
    r.add_term({g}, QScalar(1));
    return r;
}

void QuantumMatrices::check_bounds(GenIndex g) const {
    if (g.row < 1 || g.row > ambient_.rows || g.col < 1 || g.col > ambient_.cols)
        raise(ErrorKind::IndexOutOfBounds,
              "generator X" + std::to_string(g.row) + "," + std::to_string(g.col) +
                  " outside " + std::to_string(ambient_.rows) + "x" +
                  std::to_string(ambient_.cols));
}

bool QuantumMatrices::commutes_trivially(GenIndex a, GenIndex b) {
    if (a == b) return true;
    return (a.row < b.row && a.col > b.col) || (b.row < a.row && b.col > a.col);
}

namespace {

// One rewriting step at position k of w, where w[k] > w[k+1]. Appends the
// replacement terms to `out` as (word, multiplier) pairs. Every replacement
// is strictly smaller in same-length lexicographic word order, the measure
// that makes the rewriting terminate; asserted below.
void apply_rule(const QmAmbient& ambient, const Word& w, std::size_t k,
                std::vector<std::pair<Word, QScalar>>& out) {
    std::size_t start = out.size();
    GenIndex a = w[k], b = w[k + 1]; // a > b in the generator order
    Word swapped = w;
    std::swap(swapped[k], swapped[k + 1]);
    if (a.row == b.row || a.col == b.col) {
        // Same row (cols b.col < a.col) or same column (rows b.row < a.row):
        // X_a X_b = q^{-1} X_b X_a.
        out.emplace_back(std::move(swapped), ambient.q_power(-1));
    } else if (a.col < b.col) {
        // a.row > b.row, a.col < b.col: the pair commutes.
        out.emplace_back(std::move(swapped), QScalar(1));
    } else {
        // a.row > b.row, a.col > b.col:
        // X_a X_b = X_b X_a - (q - q^{-1}) X_{b.row,a.col} X_{a.row,b.col}.
        out.emplace_back(std::move(swapped), QScalar(1));
        Word corr = w;
        corr[k] = {b.row, a.col};
        corr[k + 1] = {a.row, b.col};
        out.emplace_back(std::move(corr),
                         -(ambient.q_power(1) - ambient.q_power(-1)));
    }
    for (std::size_t i = start; i < out.size(); ++i)
        if (!(out[i].first < w))
            raise(ErrorKind::InvariantViolation,
                  "rewriting step did not decrease the word order at " + word_to_string(w));
}

std::size_t leftmost_descent(const Word& w) {
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
        if (w[k + 1] < w[k]) return k;
    return w.size();
}

} // namespace

PbwElement QuantumMatrices::normal_form(const Word& word) const {
    for (const auto& g : word) check_bounds(g);
    PbwElement result(ambient_);
    std::vector<std::pair<Word, QScalar>> stack;
    stack.emplace_back(word, QScalar(1));
    std::vector<std::pair<Word, QScalar>> replacement;
    while (!stack.empty()) {
        auto [w, c] = std::move(stack.back());
        stack.pop_back();
        std::size_t k = leftmost_descent(w);
        if (k == w.size()) {
            result.add_term(w, c);
            continue;
        }
        replacement.clear();
        apply_rule(ambient_, w, k, replacement);
        for (auto& [w2, m] : replacement) stack.emplace_back(std::move(w2), c * m);
    }
    return result;
}

PbwElement QuantumMatrices::quantum_minor(const std::vector<int>& row_set,
                                          const std::vector<int>& col_set) const {
    std::size_t t = row_set.size();
    if (t == 0 || t != col_set.size())
        raise(ErrorKind::BadShape, "minor index sets must be nonempty of equal size");
    if (t > static_cast<std::size_t>(std::min(ambient_.rows, ambient_.cols)))
        raise(ErrorKind::BadShape, "minor larger than ambient matrix");
    for (std::size_t i = 1; i < t; ++i)
        if (row_set[i - 1] >= row_set[i] || col_set[i - 1] >= col_set[i])
            raise(ErrorKind::BadShape, "minor index sets must be strictly increasing");
    check_bounds({row_set.front(), col_set.front()});
    check_bounds({row_set.back(), col_set.back()});

    PbwElement result(ambient_);
    std::vector<std::size_t> perm(t);
    for (std::size_t i = 0; i < t; ++i) perm[i] = i;
    QScalar minus_q = -ambient_.q_power(1);
    do {
        long inversions = 0;
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = i + 1; j < t; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Word w(t);
        for (std::size_t i = 0; i < t; ++i)
            w[i] = {row_set[perm[i]], col_set[i]};
        PbwElement nf = normal_form(w);
        result += nf * minus_q.pow(inversions);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

PbwElement QuantumMatrices::transpose(const PbwElement& x) const {
    if (x.ambient() != ambient_)
        raise(ErrorKind::BadShape, "ambient mismatch in transpose");
    if (ambient_.rows != ambient_.cols)
        raise(ErrorKind::NotSquare, "transpose requires a square ambient");
    PbwElement r(ambient_);
    for (const auto& [w, c] : x.terms()) {
        Word t(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) t[i] = {w[i].col, w[i].row};
        PbwElement nf = normal_form(t);
        r += nf * c;
    }
    return r;
}

ConfluenceReport QuantumMatrices::confluence_check(int max_word_len) const {
    ConfluenceReport report;
    std::vector<GenIndex> gens;
    for (int i = 1; i <= ambient_.rows; ++i)
        for (int j = 1; j <= ambient_.cols; ++j) gens.push_back({i, j});

    // Normal form computed along every possible reduction sequence, with
    // agreement asserted at each branching point.
    std::map<Word, PbwElement> memo;
    std::function<const PbwElement&(const Word&)> all_routes =
        [&](const Word& w) -> const PbwElement& {
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
        std::vector<std::size_t> descents;
        for (std::size_t k = 0; k + 1 < w.size(); ++k)
            if (w[k + 1] < w[k]) descents.push_back(k);
        PbwElement value(ambient_);
        if (descents.empty()) {
            value.add_term(w, QScalar(1));
        } else {
            bool first = true;
            for (std::size_t k : descents) {
                std::vector<std::pair<Word, QScalar>> repl;
                apply_rule(ambient_, w, k, repl);
                PbwElement branch(ambient_);
                for (const auto& [w2, m] : repl) branch += all_routes(w2) * m;
                if (first) {
                    value = branch;
                    first = false;
                } else if (branch != value) {
                    report.ok = false;
                    report.failures.push_back("ambiguous normal form for " +
                                              word_to_string(w));
                }
            }
        }
        return memo.emplace(w, std::move(value)).first->second;
    };

    std::vector<Word> frontier{{}};
    for (int len = 1; len <= max_word_len; ++len) {
        std::vector<Word> next;
        for (const auto& w : frontier)
            for (const auto& g : gens) {
                Word w2 = w;
                w2.push_back(g);
                next.push_back(std::move(w2));
            }
        frontier = std::move(next);
        for (const auto& w : frontier) {
            const PbwElement& nf = all_routes(w);
            if (nf != normal_form(w)) {
                report.ok = false;
                report.failures.push_back("strategy mismatch for " + word_to_string(w));
            }
            ++report.words_checked;
        }
    }
    return report;
}

} // namespace qasl
