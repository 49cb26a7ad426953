#include "qasl/grassmann.hpp"

#include <algorithm>
#include <sstream>

#include "qasl/linalg.hpp"

namespace qasl {

// ---------------------------------------------------------------------------
// PluckerIndex

std::string PluckerIndex::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(rows[i]);
    }
    return s;
}

PluckerIndex PluckerIndex::parse(const std::string& text) {
    PluckerIndex out;
    std::istringstream is(text);
    std::string piece;
    while (std::getline(is, piece, ',')) {
        try {
            out.rows.push_back(std::stoi(piece));
        } catch (const std::exception&) {
            raise(ErrorKind::InvalidInput, "bad tuple component: " + piece);
        }
    }
    if (out.rows.empty()) raise(ErrorKind::InvalidInput, "empty tuple");
    return out;
}

void check_plucker_shape(const PluckerIndex& I, int m, int n) {
    if (static_cast<int>(I.rows.size()) != m)
        raise(ErrorKind::BadShape, "tuple " + I.to_string() + " does not have arity " +
                                       std::to_string(m));
    for (std::size_t k = 0; k < I.rows.size(); ++k) {
        if (I.rows[k] < 1 || I.rows[k] > n)
            raise(ErrorKind::BadShape, "tuple entry out of range in " + I.to_string());
        if (k > 0 && I.rows[k - 1] >= I.rows[k])
            raise(ErrorKind::BadShape, "tuple not strictly increasing: " + I.to_string());
    }
}

bool plucker_leq(const PluckerIndex& a, const PluckerIndex& b) {
    if (a.rows.size() != b.rows.size())
        raise(ErrorKind::BadShape, "comparing tuples of different arity");
    for (std::size_t k = 0; k < a.rows.size(); ++k)
        if (a.rows[k] > b.rows[k]) return false;
    return true;
}

bool plucker_comparable(const PluckerIndex& a, const PluckerIndex& b) {
    return plucker_leq(a, b) || plucker_leq(b, a);
}

PluckerIndex plucker_meet(const PluckerIndex& a, const PluckerIndex& b) {
    PluckerIndex r = a;
    for (std::size_t k = 0; k < a.rows.size(); ++k) r.rows[k] = std::min(a.rows[k], b.rows[k]);
    return r;
}

PluckerIndex plucker_join(const PluckerIndex& a, const PluckerIndex& b) {
    PluckerIndex r = a;
    for (std::size_t k = 0; k < a.rows.size(); ++k) r.rows[k] = std::max(a.rows[k], b.rows[k]);
    return r;
}

PluckerIndex plucker_complement(const PluckerIndex& I, int n) {
    int m = static_cast<int>(I.rows.size());
    if (n != 2 * m)
        raise(ErrorKind::BadShape, "complement oracle needs n = 2m");
    check_plucker_shape(I, m, n);
    PluckerIndex r;
    std::size_t at = 0;
    for (int v = 1; v <= n; ++v) {
        if (at < I.rows.size() && I.rows[at] == v) {
            ++at;
            continue;
        }
        r.rows.push_back(v);
    }
    return r;
}

PluckerIndex disjoint_union(const PluckerIndex& I, const std::vector<int>& S) {
    PluckerIndex r = I;
    for (int v : S) {
        if (std::find(I.rows.begin(), I.rows.end(), v) != I.rows.end())
            raise(ErrorKind::BadShape, "union sets are not disjoint");
        r.rows.push_back(v);
    }
    std::sort(r.rows.begin(), r.rows.end());
    for (std::size_t k = 1; k < r.rows.size(); ++k)
        if (r.rows[k - 1] == r.rows[k])
            raise(ErrorKind::BadShape, "union sets are not disjoint");
    return r;
}

bool complement_order_evidence(const PluckerIndex& I, const PluckerIndex& J, int n) {
    PluckerIndex ic = plucker_complement(I, n);
    PluckerIndex jc = plucker_complement(J, n);
    if (!plucker_leq(I, J)) return true; // implication vacuously holds
    return plucker_leq(jc, ic);
}

bool disjoint_union_order_evidence(const PluckerIndex& I, const PluckerIndex& K,
                                   const std::vector<int>& S) {
    PluckerIndex is = disjoint_union(I, S);
    PluckerIndex ks = disjoint_union(K, S);
    if (!plucker_leq(I, K)) return true;
    return plucker_leq(is, ks);
}

// ---------------------------------------------------------------------------
// Standard monomials and expansions

bool is_standard(const StdMonomial& mono) {
    for (std::size_t t = 1; t < mono.size(); ++t)
        if (!plucker_leq(mono[t - 1], mono[t])) return false;
    return true;
}

std::string std_monomial_to_string(const StdMonomial& mono) {
    if (mono.empty()) return "1";
    std::string s;
    for (std::size_t t = 0; t < mono.size(); ++t) {
        s += "[" + mono[t].to_string() + "]";
    }
    return s;
}

QScalar StdExpansion::coefficient(const StdMonomial& mono) const {
    auto it = terms.find(mono);
    return it == terms.end() ? QScalar() : it->second;
}

void StdExpansion::add(const StdMonomial& mono, const QScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

StdExpansion StdExpansion::operator-(const StdExpansion& rhs) const {
    StdExpansion r = *this;
    for (const auto& [mono, c] : rhs.terms) r.add(mono, -c);
    return r;
}

StdExpansion StdExpansion::operator*(const QScalar& c) const {
    StdExpansion r;
    if (c.is_zero()) return r;
    for (const auto& [mono, coeff] : terms) r.terms.emplace(mono, coeff * c);
    return r;
}

// ---------------------------------------------------------------------------
// PluckerPoset

std::size_t PluckerPoset::index_of(const PluckerIndex& I) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), I);
    if (it == elements.end() || *it != I)
        raise(ErrorKind::InvalidInput, "tuple not in the poset: " + I.to_string());
    return static_cast<std::size_t>(it - elements.begin());
}

PluckerPoset plucker_poset(int m, int n) {
    if (m < 1 || m > n) raise(ErrorKind::BadShape, "need 1 <= m <= n");
    PluckerPoset out;
    // Enumerate m-subsets in lexicographic order.
    std::vector<int> pick(m);
    for (int i = 0; i < m; ++i) pick[i] = i + 1;
    for (;;) {
        out.elements.push_back(PluckerIndex{pick});
        int k = m - 1;
        while (k >= 0 && pick[k] == n - (m - 1 - k)) --k;
        if (k < 0) break;
        ++pick[k];
        for (int j = k + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
    }

    std::vector<std::string> ids;
    ids.reserve(out.elements.size());
    for (const auto& e : out.elements) ids.push_back(e.to_string());
    std::vector<std::vector<bool>> leq(out.elements.size(),
                                       std::vector<bool>(out.elements.size(), false));
    for (std::size_t a = 0; a < out.elements.size(); ++a)
        for (std::size_t b = 0; b < out.elements.size(); ++b)
            leq[a][b] = plucker_leq(out.elements[a], out.elements[b]);
    out.lattice = FiniteLattice::from_poset(FinitePoset::from_leq(ids, std::move(leq)));
    out.lattice.require_distributive();

    out.realization.d = static_cast<std::size_t>(m);
    out.realization.sizes.assign(static_cast<std::size_t>(m), n);
    out.realization.N = 2L * n + 1;
    out.realization.increasing_images = true;
    out.realization.iota.reserve(out.elements.size());
    for (const auto& e : out.elements) out.realization.iota.push_back(e.rows);
    out.realization.validate(out.lattice);
    return out;
}

void AslReport::violation(std::string s) {
    ok = false;
    violations.push_back(std::move(s));
}

// ---------------------------------------------------------------------------
// GrassmannAlgebra

GrassmannAlgebra::GrassmannAlgebra(int m, int n, bool mirror)
    : m_(m), n_(n), matrices_(n, m, mirror), poset_(plucker_poset(m, n)) {
    elements_ = poset_.elements;
    std::vector<int> cols(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) cols[static_cast<std::size_t>(j)] = j + 1;
    minors_.reserve(elements_.size());
    for (const auto& I : elements_) minors_.push_back(matrices_.quantum_minor(I.rows, cols));
}

const PbwElement& GrassmannAlgebra::minor(const PluckerIndex& I) const {
    return minors_[poset_.index_of(I)];
}

PbwElement GrassmannAlgebra::product(const std::vector<PluckerIndex>& factors) const {
    if (factors.empty()) return matrices_.one();
    StdMonomial key = factors;
    bool standard = is_standard(key);
    if (standard) {
        auto it = monomial_cache_.find(key);
        if (it != monomial_cache_.end()) return it->second;
    }
    PbwElement acc = minor(factors[0]);
    for (std::size_t t = 1; t < factors.size(); ++t) acc = acc * minor(factors[t]);
    if (standard) monomial_cache_.emplace(std::move(key), acc);
    return acc;
}

std::vector<StdMonomial> GrassmannAlgebra::standard_monomials(int degree) const {
    std::vector<StdMonomial> out;
    if (degree == 0) {
        out.push_back({});
        return out;
    }
    StdMonomial chain;
    auto dfs = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(chain);
            return;
        }
        for (const auto& e : elements_) {
            if (!chain.empty() && !plucker_leq(chain.back(), e)) continue;
            if (!chain.empty() && e < chain.back()) continue; // keep lexicographic growth
            chain.push_back(e);
            self(self, remaining - 1);
            chain.pop_back();
        }
    };
    dfs(dfs, degree);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<StdMonomial> GrassmannAlgebra::standard_monomials_with_content(
    int degree, const RowDegree& target) const {
    std::vector<StdMonomial> out;
    RowDegree acc{std::vector<int>(static_cast<std::size_t>(n_), 0)};
    StdMonomial chain;
    auto fits = [&](const PluckerIndex& e) {
        for (int r : e.rows)
            if (acc.mult[static_cast<std::size_t>(r - 1)] + 1 >
                target.mult[static_cast<std::size_t>(r - 1)])
                return false;
        return true;
    };
    auto dfs = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            if (acc == target) out.push_back(chain);
            return;
        }
        for (const auto& e : elements_) {
            if (!chain.empty() && !plucker_leq(chain.back(), e)) continue;
            if (!fits(e)) continue;
            chain.push_back(e);
            for (int r : e.rows) ++acc.mult[static_cast<std::size_t>(r - 1)];
            self(self, remaining - 1);
            for (int r : e.rows) --acc.mult[static_cast<std::size_t>(r - 1)];
            chain.pop_back();
        }
    };
    dfs(dfs, degree);
    std::sort(out.begin(), out.end());
    return out;
}

RowDegree GrassmannAlgebra::content_of(const PluckerIndex& I) const {
    RowDegree d{std::vector<int>(static_cast<std::size_t>(n_), 0)};
    for (int r : I.rows) ++d.mult[static_cast<std::size_t>(r - 1)];
    return d;
}

RowDegree GrassmannAlgebra::content_of(const StdMonomial& mono) const {
    RowDegree d{std::vector<int>(static_cast<std::size_t>(n_), 0)};
    for (const auto& I : mono)
        for (int r : I.rows) ++d.mult[static_cast<std::size_t>(r - 1)];
    return d;
}

StdExpansion GrassmannAlgebra::expand_in_std(const std::vector<PluckerIndex>& factors) const {
    for (const auto& I : factors) check_plucker_shape(I, m_, n_);
    StdExpansion out;
    if (factors.empty()) {
        out.add({}, QScalar(1));
        return out;
    }
    if (is_standard(factors)) {
        out.add(factors, QScalar(1));
        return out;
    }
    PbwElement target = product(factors);
    RowDegree deg = content_of(factors);
    std::vector<StdMonomial> basis =
        standard_monomials_with_content(static_cast<int>(factors.size()), deg);
    if (basis.empty())
        raise(ErrorKind::InvariantViolation, "no standard monomials share the content");

    // Coordinate rows: every PBW word appearing in the target or any basis
    // monomial.
    std::vector<PbwElement> columns;
    columns.reserve(basis.size());
    std::map<Word, std::size_t> row_of;
    auto note_words = [&](const PbwElement& x) {
        for (const auto& [w, c] : x.terms()) row_of.emplace(w, row_of.size());
    };
    for (const auto& mono : basis) {
        columns.push_back(product(mono));
        note_words(columns.back());
    }
    note_words(target);

    QMatrixData a(row_of.size(), QVector(basis.size()));
    QVector b(row_of.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [w, c] : columns[j].terms()) a[row_of.at(w)][j] = c;
    for (const auto& [w, c] : target.terms()) b[row_of.at(w)] = c;

    QVector x = solve_unique(a, b);
    for (std::size_t j = 0; j < basis.size(); ++j) out.add(basis[j], x[j]);
    return out;
}

const StraighteningTable& GrassmannAlgebra::straightening_table() const {
    if (table_) return *table_;
    StraighteningTable table;
    table.m = m_;
    table.n = n_;
    for (const auto& I : elements_) {
        for (const auto& J : elements_) {
            if (plucker_comparable(I, J)) continue;
            table.straightening.emplace(std::make_pair(I, J),
                                        expand_in_std({I, J}));
        }
    }
    for (const auto& I : elements_) {
        for (const auto& J : elements_) {
            StraighteningTable::Commutation entry;
            if (I == J) {
                entry.qpow = QScalar(1);
            } else if (plucker_leq(I, J)) {
                // [I][J] is standard; read q^{f} off the reversed product.
                StdExpansion rev = expand_in_std({J, I});
                QScalar lead = rev.coefficient({I, J});
                if (lead.is_zero())
                    raise(ErrorKind::InvariantViolation,
                          "reversed product misses its standard leading term");
                entry.qpow = lead.inverse();
                StdExpansion rest = rev;
                rest.add({I, J}, -lead);
                entry.tail = rest * (-entry.qpow);
            } else if (plucker_leq(J, I)) {
                StdExpansion fwd = expand_in_std({I, J});
                QScalar lead = fwd.coefficient({J, I});
                if (lead.is_zero())
                    raise(ErrorKind::InvariantViolation,
                          "product misses its standard leading term");
                entry.qpow = lead;
                StdExpansion rest = fwd;
                rest.add({J, I}, -lead);
                entry.tail = rest;
            } else {
                const StdExpansion& fwd = table.straightening.at({I, J});
                const StdExpansion& rev = table.straightening.at({J, I});
                StdMonomial meet_join{plucker_meet(I, J), plucker_join(I, J)};
                QScalar lead_fwd = fwd.coefficient(meet_join);
                QScalar lead_rev = rev.coefficient(meet_join);
                if (lead_fwd.is_zero() || lead_rev.is_zero())
                    raise(ErrorKind::InvariantViolation,
                          "straightening misses the meet-join leading term");
                entry.qpow = lead_fwd / lead_rev;
                entry.tail = fwd - rev * entry.qpow;
            }
            table.commutation.emplace(std::make_pair(I, J), std::move(entry));
        }
    }
    verify_table(table);
    table_ = std::move(table);
    return *table_;
}

void GrassmannAlgebra::verify_table(StraighteningTable& table) const {
    auto check_terms = [&](const PluckerIndex& I, const PluckerIndex& J,
                           const StdExpansion& e, const char* what) {
        RowDegree expect = content_of(StdMonomial{I, J});
        for (const auto& [mono, c] : e.terms) {
            if (mono.size() != 2)
                raise(ErrorKind::InvariantViolation, std::string(what) + ": term degree != 2");
            const PluckerIndex& K = mono[0];
            const PluckerIndex& L = mono[1];
            bool support = plucker_leq(K, I) && K != I && plucker_leq(K, J) && K != J &&
                           plucker_leq(I, L) && L != I && plucker_leq(J, L) && L != J;
            if (!support)
                raise(ErrorKind::InvariantViolation,
                      std::string(what) + " support violated for ([" + I.to_string() + "],[" +
                          J.to_string() + "]) term " + std_monomial_to_string(mono));
            if (content_of(mono) != expect)
                raise(ErrorKind::InvariantViolation,
                      std::string(what) + " content violated for ([" + I.to_string() + "],[" +
                          J.to_string() + "]) term " + std_monomial_to_string(mono));
        }
    };

    for (const auto& [key, expansion] : table.straightening) {
        const auto& [I, J] = key;
        StdMonomial meet_join{plucker_meet(I, J), plucker_join(I, J)};
        QScalar lead = expansion.coefficient(meet_join);
        auto pure = lead.as_pure_q_power();
        if (!pure || pure->first != 1)
            raise(ErrorKind::InvariantViolation,
                  "leading straightening coefficient for ([" + I.to_string() + "],[" +
                      J.to_string() + "]) is not +q^e: " + lead.to_string());
        check_terms(I, J, expansion, "straightening");
    }
    for (const auto& [key, entry] : table.commutation) {
        const auto& [I, J] = key;
        auto pure = entry.qpow.as_pure_q_power();
        if (!pure || pure->first != 1)
            raise(ErrorKind::InvariantViolation,
                  "commutation factor for ([" + I.to_string() + "],[" + J.to_string() +
                      "]) is not +q^f: " + entry.qpow.to_string());
        StdMonomial meet_join{plucker_meet(I, J), plucker_join(I, J)};
        if (!entry.tail.coefficient(meet_join).is_zero())
            raise(ErrorKind::InvariantViolation,
                  "commutation tail hits the meet-join monomial for ([" + I.to_string() +
                      "],[" + J.to_string() + "])");
        check_terms(I, J, entry.tail, "commutation");
    }
}

AslReport GrassmannAlgebra::verify_symmetric_asl(int max_degree) const {
    AslReport report;
    // (iv): the identity realization has increasing images by construction;
    // validate() has certified the morphism property.
    poset_.realization.validate(poset_.lattice);
    report.note("realization: d=" + std::to_string(m_) + " sizes=n N=" +
                std::to_string(poset_.realization.N) + " increasing=true");

    for (int d = 1; d <= max_degree; ++d) {
        auto monos = standard_monomials(d);
        // Group monomials by row content and certify each block has full
        // column rank in PBW coordinates.
        std::map<std::vector<int>, std::vector<StdMonomial>> blocks;
        for (const auto& mono : monos) blocks[content_of(mono).mult].push_back(mono);
        std::size_t rank_total = 0;
        for (const auto& [deg, block] : blocks) {
            std::map<Word, std::size_t> row_of;
            std::vector<PbwElement> cols;
            for (const auto& mono : block) {
                cols.push_back(product(mono));
                for (const auto& [w, c] : cols.back().terms()) row_of.emplace(w, row_of.size());
            }
            QMatrixData a(row_of.size(), QVector(block.size()));
            for (std::size_t j = 0; j < cols.size(); ++j)
                for (const auto& [w, c] : cols[j].terms()) a[row_of.at(w)][j] = c;
            std::size_t r = matrix_rank(a);
            rank_total += r;
            if (r != block.size())
                report.violation("degree " + std::to_string(d) + " content block rank " +
                                 std::to_string(r) + " < " + std::to_string(block.size()));
        }
        report.note("degree " + std::to_string(d) + ": standard monomials = " +
                    std::to_string(monos.size()) + ", coordinate rank = " +
                    std::to_string(rank_total));
        if (rank_total != monos.size())
            report.violation("(ASL-1) fails in degree " + std::to_string(d));
    }

    try {
        straightening_table();
        report.note("straightening table: " + std::to_string(table_->straightening.size()) +
                    " straightening entries, " + std::to_string(table_->commutation.size()) +
                    " commutation entries, all invariants hold");
    } catch (const Error& e) {
        report.violation(std::string("table construction failed: ") + e.what());
    }
    return report;
}

} // namespace qasl
