#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qasl/error.hpp"

namespace qasl {

/// Finite partially ordered set over opaque element ids. The order is kept
/// as a full relation table; construction from cover relations computes the
/// reflexive-transitive closure eagerly. Immutable after construction.
class FinitePoset {
public:
    static FinitePoset from_covers(std::vector<std::string> elements,
                                   const std::vector<std::pair<std::string, std::string>>& covers);
    static FinitePoset from_leq(std::vector<std::string> elements,
                                std::vector<std::vector<bool>> leq);

    std::size_t size() const { return elements_.size(); }
    const std::string& id(std::size_t i) const { return elements_[i]; }
    const std::vector<std::string>& elements() const { return elements_; }
    std::size_t index(const std::string& id) const;

    bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
    bool less(std::size_t a, std::size_t b) const { return a != b && leq_[a][b]; }
    bool comparable(std::size_t a, std::size_t b) const { return leq_[a][b] || leq_[b][a]; }

    std::vector<std::size_t> minimal_elements() const;
    std::vector<std::size_t> maximal_elements() const;

    /// Longest strictly increasing chain ending at x, resp. over the poset.
    int rank_of(std::size_t x) const;
    int rank() const;

    /// Topological order, ties broken by element index.
    std::vector<std::size_t> linear_extension() const;

    /// Cover pairs (a, b) with a covered by b, for serialization.
    std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const;

private:
    void validate() const;

    std::vector<std::string> elements_;
    std::map<std::string, std::size_t> index_;
    std::vector<std::vector<bool>> leq_;
};

/// Finite lattice: a poset together with exhaustively verified meet and
/// join tables. Distributivity is decided at construction time.
class FiniteLattice {
public:
    static FiniteLattice from_poset(FinitePoset poset);

    const FinitePoset& poset() const { return poset_; }
    std::size_t size() const { return poset_.size(); }

    std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a][b]; }
    std::size_t join(std::size_t a, std::size_t b) const { return join_[a][b]; }
    std::size_t minimum() const { return minimum_; }
    std::size_t maximum() const { return maximum_; }

    bool is_distributive() const { return distributive_; }
    void require_distributive() const;

private:
    FinitePoset poset_;
    std::vector<std::vector<std::size_t>> meet_;
    std::vector<std::vector<std::size_t>> join_;
    std::size_t minimum_ = 0;
    std::size_t maximum_ = 0;
    bool distributive_ = false;
    std::string distributivity_witness_;
};

/// Embedding of a lattice into a product of finite chains C_{n_1} x ... x
/// C_{n_d}, with the N-adic encoding constant N = 2 max{n_t} + 1.
struct ChainProductRealization {
    std::size_t d = 0;
    std::vector<int> sizes;
    std::vector<std::vector<int>> iota; // tuple per lattice element
    long N = 0;
    bool increasing_images = false;

    /// Checks every invariant against the carrying lattice: injectivity,
    /// lattice morphism, bounds, N, increasing flag.
    void validate(const FiniteLattice& lattice) const;

    long omega(std::size_t x) const;
    long max_omega() const;
};

/// wt(x) = M + 1 - omega(x); requires M = max omega over the lattice.
long weight(const ChainProductRealization& r, long m_value, std::size_t x);

struct JoinIrreducibles {
    std::vector<std::size_t> irr;      // join-irreducible elements
    std::vector<std::size_t> irr_plus; // irr plus the minimum
};
JoinIrreducibles join_irreducibles(const FiniteLattice& lattice);

/// Certificate that x -> {p in irr : p <= x} is a lattice isomorphism onto
/// the down-sets of the irreducible subposet, plus the rank identity.
struct BirkhoffCertificate {
    std::vector<std::size_t> irreducibles;        // fixed linear-extension order
    std::vector<std::vector<bool>> downset_of;    // per element, over irreducibles
    std::size_t downset_count = 0;                // |J(irr)|
    int rank = 0;
};
BirkhoffCertificate birkhoff_check(const FiniteLattice& lattice);

/// Birkhoff indicator embedding into C_2^{|irr|} (d = 1 constant map for
/// the one-element lattice).
ChainProductRealization canonical_realization(const FiniteLattice& lattice);

/// Multiset of tuple entries ("content").
struct MultisetContent {
    std::map<int, int> counts;

    int total() const;
    bool operator==(const MultisetContent& rhs) const { return counts == rhs.counts; }
    std::string to_string() const;
};

MultisetContent content(const std::vector<int>& tuple);
MultisetContent content_union(const MultisetContent& a, const MultisetContent& b);

/// Interval [alpha, beta] and its complement Pi_alpha ∪ Pi^beta; certifies
/// the complement splits into a Pi-ideal and a Pi^opp-ideal and that the
/// interval is a sublattice (distributive when the host lattice is).
struct IntervalSplit {
    std::vector<std::size_t> interval;
    std::vector<std::size_t> complement;
};
IntervalSplit interval_and_complement(const FiniteLattice& lattice, std::size_t alpha,
                                      std::size_t beta);

/// Convenience constructors used across tests and the CLI.
FiniteLattice chain_lattice(int p);
FiniteLattice chain_product_lattice(const std::vector<int>& sizes);
FiniteLattice diamond_lattice();
FiniteLattice m3_lattice(); // the 5-element nondistributive counterexample

} // namespace qasl
