#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qasl/lattice.hpp"
#include "qasl/qmatrix.hpp"

namespace qasl {

/// Strictly increasing m-tuple (i_1 < ... < i_m) with 1 <= i_k <= n; the
/// index of a maximal quantum minor of O_q(M_{n,m}).
struct PluckerIndex {
    std::vector<int> rows;

    auto operator<=>(const PluckerIndex&) const = default;

    std::string to_string() const; // comma-joined, e.g. "1,3"
    static PluckerIndex parse(const std::string& text);
};

void check_plucker_shape(const PluckerIndex& I, int m, int n);

bool plucker_leq(const PluckerIndex& a, const PluckerIndex& b);
bool plucker_comparable(const PluckerIndex& a, const PluckerIndex& b);
PluckerIndex plucker_meet(const PluckerIndex& a, const PluckerIndex& b);
PluckerIndex plucker_join(const PluckerIndex& a, const PluckerIndex& b);

/// Set complement within {1..2m} (both tuples in Pi_{m,2m}).
PluckerIndex plucker_complement(const PluckerIndex& I, int n);
/// Sorted disjoint union of index sets.
PluckerIndex disjoint_union(const PluckerIndex& I, const std::vector<int>& S);

/// Order oracles: instances of "I <= J implies I^c >= J^c" and
/// "I <= K implies I ⊔ S <= K ⊔ S".
bool complement_order_evidence(const PluckerIndex& I, const PluckerIndex& J, int n);
bool disjoint_union_order_evidence(const PluckerIndex& I, const PluckerIndex& K,
                                   const std::vector<int>& S);

/// Weakly increasing chain I_1 <= ... <= I_s in Pi_{m,n} (s >= 0).
using StdMonomial = std::vector<PluckerIndex>;

bool is_standard(const StdMonomial& mono);
std::string std_monomial_to_string(const StdMonomial& mono);

/// Linear combination of standard monomials with Q(q) coefficients. All
/// terms share the degree (chain length) and the row content.
struct StdExpansion {
    std::map<StdMonomial, QScalar> terms;

    bool is_zero() const { return terms.empty(); }
    QScalar coefficient(const StdMonomial& mono) const;
    void add(const StdMonomial& mono, const QScalar& c);
    StdExpansion operator-(const StdExpansion& rhs) const;
    StdExpansion operator*(const QScalar& c) const;
    bool operator==(const StdExpansion& rhs) const { return terms == rhs.terms; }
};

/// Straightening and commutation data of O_q(G_{m,n}).
///
/// `straightening` is keyed by incomparable ordered pairs (I, J) and gives
/// the unique expansion [I][J] = sum c [K][L]. `commutation` is keyed by
/// every ordered pair and gives q^{f_IJ} and the tail of
/// [I][J] - q^{f_IJ} [J][I] = sum d [K][L].
struct StraighteningTable {
    int m = 0;
    int n = 0;

    struct Commutation {
        QScalar qpow;
        StdExpansion tail;
        bool operator==(const Commutation&) const = default;
    };

    std::map<std::pair<PluckerIndex, PluckerIndex>, StdExpansion> straightening;
    std::map<std::pair<PluckerIndex, PluckerIndex>, Commutation> commutation;

    bool operator==(const StraighteningTable&) const = default;
};

/// The Plücker poset Pi_{m,n} together with its identity realization in the
/// chain product C_n^m (N = 2n+1, increasing images).
struct PluckerPoset {
    std::vector<PluckerIndex> elements; // lexicographically sorted
    FiniteLattice lattice;              // element i <-> elements[i]
    ChainProductRealization realization;

    std::size_t index_of(const PluckerIndex& I) const;
};

PluckerPoset plucker_poset(int m, int n);

struct AslReport {
    bool ok = true;
    std::vector<std::string> lines;
    std::vector<std::string> violations;

    void note(std::string s) { lines.push_back(std::move(s)); }
    void violation(std::string s);
};

/// The quantum Grassmannian O_q(G_{m,n}) inside O_q(M_{n,m}): minors,
/// expansion of minor products in the standard-monomial basis by exact
/// linear solving, straightening tables and the structural verifications.
class GrassmannAlgebra {
public:
    GrassmannAlgebra(int m, int n, bool mirror = false);

    int m() const { return m_; }
    int n() const { return n_; }
    const QuantumMatrices& matrices() const { return matrices_; }
    const std::vector<PluckerIndex>& elements() const { return elements_; }
    const PluckerPoset& poset() const { return poset_; }

    /// The generator [I] (minor on rows I, columns 1..m).
    const PbwElement& minor(const PluckerIndex& I) const;

    /// PBW form of the ordered product [I_1]...[I_s]; cached for standard
    /// monomials.
    PbwElement product(const std::vector<PluckerIndex>& factors) const;

    /// All standard monomials of the given degree, lexicographically sorted.
    std::vector<StdMonomial> standard_monomials(int degree) const;

    /// Standard monomials of the given degree with the given row content.
    std::vector<StdMonomial> standard_monomials_with_content(int degree,
                                                             const RowDegree& target) const;

    /// Unique expansion of [I_1]...[I_s] over the standard-monomial basis.
    StdExpansion expand_in_std(const std::vector<PluckerIndex>& factors) const;

    /// Full straightening/commutation table with all structural invariants
    /// certified (support, content, pure-q-power leading coefficients,
    /// vanishing meet-join commutation coefficient).
    const StraighteningTable& straightening_table() const;

    /// Certifies (ASL-1) ranks per degree <= max_degree, plus the condition
    /// (C) checks carried by the table and the realization.
    AslReport verify_symmetric_asl(int max_degree) const;

    RowDegree content_of(const PluckerIndex& I) const;
    RowDegree content_of(const StdMonomial& mono) const;

private:
    void verify_table(StraighteningTable& table) const;

    int m_;
    int n_;
    QuantumMatrices matrices_;
    std::vector<PluckerIndex> elements_;
    PluckerPoset poset_;
    std::vector<PbwElement> minors_;
    mutable std::map<StdMonomial, PbwElement> monomial_cache_;
    mutable std::optional<StraighteningTable> table_;
};

} // namespace qasl
