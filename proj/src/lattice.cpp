#include "qasl/lattice.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace qasl {

// ---------------------------------------------------------------------------
// FinitePoset

FinitePoset FinitePoset::from_covers(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& covers) {
    FinitePoset p;
    p.elements_ = std::move(elements);
    for (std::size_t i = 0; i < p.elements_.size(); ++i) {
        if (!p.index_.emplace(p.elements_[i], i).second)
            raise(ErrorKind::InvalidInput, "duplicate element id: " + p.elements_[i]);
    }
    std::size_t n = p.elements_.size();
    p.leq_.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) p.leq_[i][i] = true;
    for (const auto& [a, b] : covers) p.leq_[p.index(a)][p.index(b)] = true;
    // Reflexive-transitive closure.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (p.leq_[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (p.leq_[k][j]) p.leq_[i][j] = true;
    p.validate();
    return p;
}

FinitePoset FinitePoset::from_leq(std::vector<std::string> elements,
                                  std::vector<std::vector<bool>> leq) {
    FinitePoset p;
    p.elements_ = std::move(elements);
    for (std::size_t i = 0; i < p.elements_.size(); ++i) {
        if (!p.index_.emplace(p.elements_[i], i).second)
            raise(ErrorKind::InvalidInput, "duplicate element id: " + p.elements_[i]);
    }
    if (leq.size() != p.elements_.size())
        raise(ErrorKind::InvalidInput, "relation table size mismatch");
    for (const auto& row : leq)
        if (row.size() != p.elements_.size())
            raise(ErrorKind::InvalidInput, "relation table size mismatch");
    p.leq_ = std::move(leq);
    p.validate();
    return p;
}

void FinitePoset::validate() const {
    std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i)
        if (!leq_[i][i])
            raise(ErrorKind::InvalidInput, "order not reflexive at " + elements_[i]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && leq_[i][j] && leq_[j][i])
                raise(ErrorKind::InvalidInput,
                      "order not antisymmetric on {" + elements_[i] + "," + elements_[j] + "}");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (leq_[i][j])
                for (std::size_t k = 0; k < n; ++k)
                    if (leq_[j][k] && !leq_[i][k])
                        raise(ErrorKind::InvalidInput,
                              "order not transitive through " + elements_[j]);
}

std::size_t FinitePoset::index(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        raise(ErrorKind::InvalidInput, "unknown element id: " + id);
    return it->second;
}

std::vector<std::size_t> FinitePoset::minimal_elements() const {
    std::vector<std::size_t> r;
    for (std::size_t x = 0; x < size(); ++x) {
        bool minimal = true;
        for (std::size_t y = 0; y < size() && minimal; ++y)
            if (less(y, x)) minimal = false;
        if (minimal) r.push_back(x);
    }
    return r;
}

std::vector<std::size_t> FinitePoset::maximal_elements() const {
    std::vector<std::size_t> r;
    for (std::size_t x = 0; x < size(); ++x) {
        bool maximal = true;
        for (std::size_t y = 0; y < size() && maximal; ++y)
            if (less(x, y)) maximal = false;
        if (maximal) r.push_back(x);
    }
    return r;
}

std::vector<std::size_t> FinitePoset::linear_extension() const {
    // Repeatedly emit the smallest-index minimal element not yet emitted.
    std::size_t n = size();
    std::vector<bool> done(n, false);
    std::vector<std::size_t> order;
    order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = n;
        for (std::size_t x = 0; x < n && pick == n; ++x) {
            if (done[x]) continue;
            bool minimal = true;
            for (std::size_t y = 0; y < n && minimal; ++y)
                if (!done[y] && less(y, x)) minimal = false;
            if (minimal) pick = x;
        }
        done[pick] = true;
        order.push_back(pick);
    }
    return order;
}

int FinitePoset::rank_of(std::size_t x) const {
    std::vector<int> rank(size(), 0);
    for (std::size_t y : linear_extension()) {
        int best = 0;
        for (std::size_t z = 0; z < size(); ++z)
            if (less(z, y)) best = std::max(best, rank[z] + 1);
        rank[y] = best;
    }
    return rank[x];
}

int FinitePoset::rank() const {
    int best = 0;
    std::vector<int> rank(size(), 0);
    for (std::size_t y : linear_extension()) {
        int r = 0;
        for (std::size_t z = 0; z < size(); ++z)
            if (less(z, y)) r = std::max(r, rank[z] + 1);
        rank[y] = r;
        best = std::max(best, r);
    }
    return best;
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::cover_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t a = 0; a < size(); ++a)
        for (std::size_t b = 0; b < size(); ++b) {
            if (!less(a, b)) continue;
            bool cover = true;
            for (std::size_t c = 0; c < size() && cover; ++c)
                if (less(a, c) && less(c, b)) cover = false;
            if (cover) covers.emplace_back(a, b);
        }
    return covers;
}

// ---------------------------------------------------------------------------
// FiniteLattice

FiniteLattice FiniteLattice::from_poset(FinitePoset poset) {
    FiniteLattice l;
    l.poset_ = std::move(poset);
    std::size_t n = l.poset_.size();
    if (n == 0) raise(ErrorKind::InvalidInput, "empty lattice");
    l.meet_.assign(n, std::vector<std::size_t>(n, 0));
    l.join_.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            // Greatest lower bound: a common lower bound dominating all others.
            std::size_t glb = n, lub = n;
            for (std::size_t c = 0; c < n; ++c) {
                if (l.poset_.leq(c, a) && l.poset_.leq(c, b)) {
                    bool greatest = true;
                    for (std::size_t e = 0; e < n && greatest; ++e)
                        if (l.poset_.leq(e, a) && l.poset_.leq(e, b) && !l.poset_.leq(e, c))
                            greatest = false;
                    if (greatest) glb = c;
                }
                if (l.poset_.leq(a, c) && l.poset_.leq(b, c)) {
                    bool least = true;
                    for (std::size_t e = 0; e < n && least; ++e)
                        if (l.poset_.leq(a, e) && l.poset_.leq(b, e) && !l.poset_.leq(c, e))
                            least = false;
                    if (least) lub = c;
                }
            }
            if (glb == n || lub == n)
                raise(ErrorKind::InvalidInput,
                      "not a lattice: pair {" + l.poset_.id(a) + "," + l.poset_.id(b) +
                          "} lacks a meet or join");
            l.meet_[a][b] = glb;
            l.join_[a][b] = lub;
        }
    }
    auto mins = l.poset_.minimal_elements();
    auto maxs = l.poset_.maximal_elements();
    l.minimum_ = mins.front();
    l.maximum_ = maxs.front();

    l.distributive_ = true;
    for (std::size_t x = 0; x < n && l.distributive_; ++x)
        for (std::size_t y = 0; y < n && l.distributive_; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                if (l.meet_[x][l.join_[y][z]] != l.join_[l.meet_[x][y]][l.meet_[x][z]]) {
                    l.distributive_ = false;
                    l.distributivity_witness_ = "{" + l.poset_.id(x) + "," + l.poset_.id(y) +
                                                "," + l.poset_.id(z) + "}";
                    break;
                }
            }
    return l;
}

void FiniteLattice::require_distributive() const {
    if (!distributive_)
        raise(ErrorKind::NotDistributive,
              "distributivity fails on triple " + distributivity_witness_);
}

// ---------------------------------------------------------------------------
// Realizations, omega, weights

void ChainProductRealization::validate(const FiniteLattice& lattice) const {
    std::size_t n = lattice.size();
    if (d == 0 || sizes.size() != d)
        raise(ErrorKind::InvalidInput, "realization: bad dimension");
    for (int s : sizes)
        if (s < 2) raise(ErrorKind::InvalidInput, "realization: chain size < 2");
    if (iota.size() != n)
        raise(ErrorKind::InvalidInput, "realization: tuple count mismatch");
    int max_size = *std::max_element(sizes.begin(), sizes.end());
    if (N != 2L * max_size + 1)
        raise(ErrorKind::InvariantViolation, "realization: N != 2*max(sizes)+1");
    for (std::size_t x = 0; x < n; ++x) {
        if (iota[x].size() != d)
            raise(ErrorKind::InvalidInput, "realization: tuple arity mismatch");
        for (std::size_t t = 0; t < d; ++t)
            if (iota[x][t] < 1 || iota[x][t] > sizes[t])
                raise(ErrorKind::InvalidInput, "realization: component out of range");
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            if (iota[x] == iota[y])
                raise(ErrorKind::InvariantViolation, "realization: iota not injective");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t t = 0; t < d; ++t) {
                int lo = std::min(iota[x][t], iota[y][t]);
                int hi = std::max(iota[x][t], iota[y][t]);
                if (iota[lattice.meet(x, y)][t] != lo || iota[lattice.join(x, y)][t] != hi)
                    raise(ErrorKind::InvariantViolation,
                          "realization: iota is not a lattice morphism");
            }
        }
    if (increasing_images) {
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t t = 1; t < d; ++t)
                if (iota[x][t - 1] > iota[x][t])
                    raise(ErrorKind::InvariantViolation,
                          "realization: image tuple not increasing");
    }
}

long ChainProductRealization::omega(std::size_t x) const {
    long acc = 0;
    for (std::size_t t = 0; t < d; ++t) {
        if (acc > (std::numeric_limits<long>::max() - sizes[t]) / N)
            raise(ErrorKind::InvalidInput, "omega overflow; realization too large");
        acc = acc * N + iota[x][t];
    }
    return acc;
}

long ChainProductRealization::max_omega() const {
    long best = 0;
    for (std::size_t x = 0; x < iota.size(); ++x) best = std::max(best, omega(x));
    return best;
}

long weight(const ChainProductRealization& r, long m_value, std::size_t x) {
    long w = m_value + 1 - r.omega(x);
    if (w < 1) raise(ErrorKind::InvariantViolation, "weight not positive; M too small");
    return w;
}

// ---------------------------------------------------------------------------
// Join-irreducibles and Birkhoff

JoinIrreducibles join_irreducibles(const FiniteLattice& lattice) {
    std::size_t n = lattice.size();
    JoinIrreducibles out;
    std::size_t bottom = lattice.minimum();
    for (std::size_t z : lattice.poset().linear_extension()) {
        if (z == bottom) continue;
        bool irreducible = true;
        for (std::size_t x = 0; x < n && irreducible; ++x)
            for (std::size_t y = 0; y < n && irreducible; ++y)
                if (lattice.join(x, y) == z && x != z && y != z) irreducible = false;
        if (irreducible) out.irr.push_back(z);
    }
    out.irr_plus = out.irr;
    out.irr_plus.insert(out.irr_plus.begin(), bottom);
    return out;
}

namespace {

// Enumerate all down-sets of the subposet on `ground` by BFS, adding one
// minimal element of the complement at a time. The count is what Birkhoff
// compares against |L|, so this stays linear in the answer.
std::size_t count_downsets(const FinitePoset& poset, const std::vector<std::size_t>& ground) {
    std::size_t k = ground.size();
    if (k > 62) raise(ErrorKind::InvalidInput, "too many join-irreducibles to enumerate");
    std::set<std::uint64_t> seen;
    std::vector<std::uint64_t> frontier{0};
    seen.insert(0);
    while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t mask : frontier) {
            for (std::size_t i = 0; i < k; ++i) {
                if (mask & (1ull << i)) continue;
                bool addable = true; // all strictly-below elements already in
                for (std::size_t j = 0; j < k && addable; ++j)
                    if (j != i && poset.less(ground[j], ground[i]) && !(mask & (1ull << j)))
                        addable = false;
                if (!addable) continue;
                std::uint64_t grown = mask | (1ull << i);
                if (seen.insert(grown).second) next.push_back(grown);
            }
        }
        frontier = std::move(next);
    }
    return seen.size();
}

} // namespace

BirkhoffCertificate birkhoff_check(const FiniteLattice& lattice) {
    lattice.require_distributive();
    std::size_t n = lattice.size();
    BirkhoffCertificate cert;
    cert.irreducibles = join_irreducibles(lattice).irr;
    std::size_t k = cert.irreducibles.size();

    cert.downset_of.assign(n, std::vector<bool>(k, false));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t t = 0; t < k; ++t)
            cert.downset_of[x][t] = lattice.poset().leq(cert.irreducibles[t], x);

    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            if (cert.downset_of[x] == cert.downset_of[y])
                raise(ErrorKind::InvariantViolation, "Birkhoff map not injective");

    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            bool sub = true;
            std::vector<bool> cap(k), cup(k);
            for (std::size_t t = 0; t < k; ++t) {
                sub = sub && (!cert.downset_of[x][t] || cert.downset_of[y][t]);
                cap[t] = cert.downset_of[x][t] && cert.downset_of[y][t];
                cup[t] = cert.downset_of[x][t] || cert.downset_of[y][t];
            }
            if (sub != lattice.poset().leq(x, y))
                raise(ErrorKind::InvariantViolation, "Birkhoff map not an order embedding");
            if (cap != cert.downset_of[lattice.meet(x, y)] ||
                cup != cert.downset_of[lattice.join(x, y)])
                raise(ErrorKind::InvariantViolation,
                      "Birkhoff map does not preserve meet/join");
        }

    cert.downset_count = count_downsets(lattice.poset(), cert.irreducibles);
    if (cert.downset_count != n)
        raise(ErrorKind::InvariantViolation, "Birkhoff map not surjective onto down-sets");

    cert.rank = lattice.poset().rank();
    if (static_cast<std::size_t>(cert.rank) != k)
        raise(ErrorKind::InvariantViolation, "rank(L) != number of join-irreducibles");
    return cert;
}

ChainProductRealization canonical_realization(const FiniteLattice& lattice) {
    lattice.require_distributive();
    auto irr = join_irreducibles(lattice).irr;
    // Keep the fixed linear-extension order of join_irreducibles for iota.
    ChainProductRealization r;
    std::size_t n = lattice.size();
    if (irr.empty()) {
        // One-element lattice: constant embedding into a single C_2.
        r.d = 1;
        r.sizes = {2};
        r.iota.assign(n, {1});
        r.N = 5;
        r.increasing_images = true;
        r.validate(lattice);
        return r;
    }
    r.d = irr.size();
    r.sizes.assign(r.d, 2);
    r.N = 5;
    r.iota.assign(n, std::vector<int>(r.d, 1));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t t = 0; t < r.d; ++t)
            if (lattice.poset().leq(irr[t], x)) r.iota[x][t] = 2;
    r.increasing_images = true;
    for (std::size_t x = 0; x < n && r.increasing_images; ++x)
        for (std::size_t t = 1; t < r.d; ++t)
            if (r.iota[x][t - 1] > r.iota[x][t]) {
                r.increasing_images = false;
                break;
            }
    r.validate(lattice);
    return r;
}

// ---------------------------------------------------------------------------
// Content multisets

int MultisetContent::total() const {
    int n = 0;
    for (const auto& [value, mult] : counts) n += mult;
    return n;
}

std::string MultisetContent::to_string() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [value, mult] : counts) {
        if (!first) os << ",";
        first = false;
        os << value;
        if (mult > 1) os << ":x" << mult;
    }
    os << "}";
    return os.str();
}

MultisetContent content(const std::vector<int>& tuple) {
    MultisetContent c;
    for (int v : tuple) {
        auto [it, inserted] = c.counts.emplace(v, 1);
        if (!inserted) ++it->second;
    }
    return c;
}

MultisetContent content_union(const MultisetContent& a, const MultisetContent& b) {
    MultisetContent c = a;
    for (const auto& [value, mult] : b.counts) {
        auto [it, inserted] = c.counts.emplace(value, mult);
        if (!inserted) it->second += mult;
    }
    return c;
}

// ---------------------------------------------------------------------------
// Intervals

IntervalSplit interval_and_complement(const FiniteLattice& lattice, std::size_t alpha,
                                      std::size_t beta) {
    const FinitePoset& p = lattice.poset();
    if (!p.leq(alpha, beta))
        raise(ErrorKind::NotComparable,
              p.id(alpha) + " is not below " + p.id(beta));
    IntervalSplit out;
    std::vector<bool> in_interval(lattice.size(), false);
    for (std::size_t g = 0; g < lattice.size(); ++g) {
        if (p.leq(alpha, g) && p.leq(g, beta)) {
            in_interval[g] = true;
            out.interval.push_back(g);
        } else {
            out.complement.push_back(g);
        }
    }
    // Complement must be exactly Pi_alpha ∪ Pi^beta, with the two halves a
    // Pi-ideal resp. Pi^opp-ideal.
    for (std::size_t g : out.complement)
        if (p.leq(alpha, g) && p.leq(g, beta))
            raise(ErrorKind::InvariantViolation, "complement overlaps interval");
    for (std::size_t g = 0; g < lattice.size(); ++g) {
        bool in_pi_alpha = !p.leq(alpha, g);
        bool in_pi_beta = !p.leq(g, beta);
        if ((in_pi_alpha || in_pi_beta) == in_interval[g])
            raise(ErrorKind::InvariantViolation, "interval/complement split mismatch");
        if (in_pi_alpha)
            for (std::size_t h = 0; h < lattice.size(); ++h)
                if (p.leq(h, g) && p.leq(alpha, h))
                    raise(ErrorKind::InvariantViolation, "Pi_alpha is not a Pi-ideal");
        if (in_pi_beta)
            for (std::size_t h = 0; h < lattice.size(); ++h)
                if (p.leq(g, h) && p.leq(h, beta))
                    raise(ErrorKind::InvariantViolation, "Pi^beta is not a Pi^opp-ideal");
    }
    // The interval is a sublattice; distributivity is inherited.
    for (std::size_t x : out.interval)
        for (std::size_t y : out.interval) {
            if (!in_interval[lattice.meet(x, y)] || !in_interval[lattice.join(x, y)])
                raise(ErrorKind::InvariantViolation, "interval not closed under meet/join");
        }
    return out;
}

// ---------------------------------------------------------------------------
// Stock lattices

FiniteLattice chain_lattice(int p) {
    if (p < 1) raise(ErrorKind::InvalidInput, "chain size must be positive");
    std::vector<std::string> ids;
    std::vector<std::pair<std::string, std::string>> covers;
    for (int i = 1; i <= p; ++i) ids.push_back(std::to_string(i));
    for (int i = 1; i < p; ++i) covers.emplace_back(std::to_string(i), std::to_string(i + 1));
    return FiniteLattice::from_poset(FinitePoset::from_covers(ids, covers));
}

FiniteLattice chain_product_lattice(const std::vector<int>& sizes) {
    if (sizes.empty()) raise(ErrorKind::InvalidInput, "empty chain product");
    for (int s : sizes)
        if (s < 1) raise(ErrorKind::InvalidInput, "chain size must be positive");
    std::vector<std::vector<int>> tuples{{}};
    for (int s : sizes) {
        std::vector<std::vector<int>> next;
        for (const auto& t : tuples)
            for (int v = 1; v <= s; ++v) {
                auto u = t;
                u.push_back(v);
                next.push_back(u);
            }
        tuples = std::move(next);
    }
    auto name = [](const std::vector<int>& t) {
        std::string s;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(t[i]);
        }
        return s;
    };
    std::vector<std::string> ids;
    for (const auto& t : tuples) ids.push_back(name(t));
    std::vector<std::vector<bool>> leq(tuples.size(), std::vector<bool>(tuples.size(), false));
    for (std::size_t a = 0; a < tuples.size(); ++a)
        for (std::size_t b = 0; b < tuples.size(); ++b) {
            bool le = true;
            for (std::size_t t = 0; t < sizes.size() && le; ++t)
                le = tuples[a][t] <= tuples[b][t];
            leq[a][b] = le;
        }
    return FiniteLattice::from_poset(FinitePoset::from_leq(ids, std::move(leq)));
}

FiniteLattice diamond_lattice() {
    return FiniteLattice::from_poset(FinitePoset::from_covers(
        {"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}}));
}

FiniteLattice m3_lattice() {
    return FiniteLattice::from_poset(FinitePoset::from_covers(
        {"0", "x", "y", "z", "1"},
        {{"0", "x"}, {"0", "y"}, {"0", "z"}, {"x", "1"}, {"y", "1"}, {"z", "1"}}));
}

} // namespace qasl
