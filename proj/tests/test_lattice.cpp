#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "qasl/lattice.hpp"

using namespace qasl;

namespace {

std::set<std::string> ids(const FiniteLattice& l, const std::vector<std::size_t>& xs) {
    std::set<std::string> out;
    for (auto x : xs) out.insert(l.poset().id(x));
    return out;
}

// Increasing tuples of C_{n}^d, used for the omega-lemma scans.
std::vector<std::vector<int>> increasing_tuples(int n, int d) {
    std::vector<std::vector<int>> out, stack{{}};
    while (!stack.empty()) {
        auto t = stack.back();
        stack.pop_back();
        if (static_cast<int>(t.size()) == d) {
            out.push_back(t);
            continue;
        }
        int lo = t.empty() ? 1 : t.back();
        for (int v = lo; v <= n; ++v) {
            auto u = t;
            u.push_back(v);
            stack.push_back(u);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool tuple_leq(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::multiset<int> msum(const std::vector<int>& a, const std::vector<int>& b) {
    std::multiset<int> m(a.begin(), a.end());
    m.insert(b.begin(), b.end());
    return m;
}

long omega_of(const std::vector<int>& t, long n_adic) {
    long acc = 0;
    for (int v : t) acc = acc * n_adic + v;
    return acc;
}

} // namespace

TEST_CASE("poset validation") {
    CHECK_THROWS_AS(FinitePoset::from_leq({"a", "b"}, {{true, true}, {true, true}}), Error);
    // Broken transitivity must be rejected when given as a full table.
    CHECK_THROWS_AS(FinitePoset::from_leq({"a", "b", "c"},
                                          {{true, true, false},
                                           {false, true, true},
                                           {false, false, true}}),
                    Error);
    auto p = FinitePoset::from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(p.leq(p.index("a"), p.index("c")));
    CHECK(p.rank() == 2);
}

TEST_CASE("join irreducibles on spec examples") {
    auto c3 = chain_lattice(3);
    auto ji = join_irreducibles(c3);
    CHECK(ids(c3, ji.irr) == std::set<std::string>{"2", "3"});
    CHECK(ids(c3, ji.irr_plus) == std::set<std::string>{"1", "2", "3"});

    auto d = diamond_lattice();
    CHECK(ids(d, join_irreducibles(d).irr) == std::set<std::string>{"b", "c"});
}

TEST_CASE("birkhoff certificate and failures") {
    auto c5 = chain_lattice(5);
    auto cert = birkhoff_check(c5);
    CHECK(cert.rank == 4);
    CHECK(cert.irreducibles.size() == 4);
    CHECK(cert.downset_count == 5);

    CHECK_THROWS_AS(birkhoff_check(m3_lattice()), Error);
    CHECK(!m3_lattice().is_distributive());
}

TEST_CASE("canonical realization") {
    auto c3 = chain_lattice(3);
    auto r = canonical_realization(c3);
    CHECK(r.d == 2);
    CHECK(r.sizes == std::vector<int>{2, 2});
    CHECK(r.N == 5);
    r.validate(c3);
    // Bottom maps to all-ones, top to all-twos.
    CHECK(r.iota[c3.minimum()] == std::vector<int>{1, 1});
    CHECK(r.iota[c3.maximum()] == std::vector<int>{2, 2});

    auto d = diamond_lattice();
    auto rd = canonical_realization(d);
    CHECK(rd.d == 2);
    CHECK(rd.iota[d.poset().index("a")] == std::vector<int>{1, 1});
    CHECK(rd.iota[d.poset().index("d")] == std::vector<int>{2, 2});
    std::set<std::vector<int>> bc{rd.iota[d.poset().index("b")], rd.iota[d.poset().index("c")]};
    CHECK(bc == std::set<std::vector<int>>{{1, 2}, {2, 1}});
    CHECK(!rd.increasing_images);

    auto one = FiniteLattice::from_poset(FinitePoset::from_covers({"x"}, {}));
    auto r1 = canonical_realization(one);
    CHECK(r1.d == 1);
    CHECK(r1.sizes == std::vector<int>{2});
    CHECK(r1.iota == std::vector<std::vector<int>>{{1}});
}

TEST_CASE("omega and weight arithmetic on the 2x4 tuple lattice") {
    // Mirror of the Plücker poset realization with d=2, sizes=(4,4), N=9.
    auto tuples = increasing_tuples(4, 2);
    std::vector<std::vector<int>> strict;
    for (auto& t : tuples)
        if (t[0] < t[1]) strict.push_back(t);
    CHECK(strict.size() == 6);

    long n_adic = 9;
    CHECK(omega_of({1, 4}, n_adic) == 13);
    CHECK(omega_of({2, 3}, n_adic) == 21);
    CHECK(omega_of({1, 3}, n_adic) == 12);
    CHECK(omega_of({2, 4}, n_adic) == 22);
    CHECK(omega_of({1, 4}, n_adic) + omega_of({2, 3}, n_adic) ==
          omega_of({1, 3}, n_adic) + omega_of({2, 4}, n_adic));

    long m_value = omega_of({3, 4}, n_adic);
    CHECK(m_value == 31);
    auto wt = [&](std::vector<int> t) { return m_value + 1 - omega_of(t, n_adic); };
    CHECK(wt({3, 4}) == 1);
    CHECK(wt({1, 2}) == 21);
    CHECK(wt({1, 4}) + wt({2, 3}) == 30);
    CHECK(wt({1, 3}) + wt({2, 4}) == 30);
}

TEST_CASE("omega strictly increasing and geometric-sum minimum") {
    auto l = chain_product_lattice({3, 4});
    ChainProductRealization r;
    r.d = 2;
    r.sizes = {3, 4};
    r.N = 9;
    r.iota.resize(l.size());
    for (std::size_t x = 0; x < l.size(); ++x) {
        const std::string& name = l.poset().id(x);
        r.iota[x] = {name[0] - '0', name[2] - '0'};
    }
    r.validate(l);
    for (std::size_t x = 0; x < l.size(); ++x)
        for (std::size_t y = 0; y < l.size(); ++y)
            if (l.poset().less(x, y)) CHECK(r.omega(x) < r.omega(y));
    // omega(1,...,1) = (N^d - 1)/(N - 1)
    CHECK(r.omega(l.minimum()) == (9 * 9 - 1) / (9 - 1));
}

TEST_CASE("pre-property-omega exhaustively on C4xC4") {
    auto tuples = increasing_tuples(4, 2);
    long count = 0;
    for (auto& K : tuples)
        for (auto& I : tuples)
            for (auto& J : tuples)
                for (auto& L : tuples) {
                    if (!(tuple_leq(K, I) && tuple_leq(I, J) && tuple_leq(J, L))) continue;
                    if (msum(K, L) != msum(I, J)) continue;
                    ++count;
                    for (std::size_t s = 1; s <= 2; ++s) {
                        bool prefix_eq = true;
                        for (std::size_t t = 0; t + 1 < s; ++t)
                            if (J[t] != L[t]) prefix_eq = false;
                        if (!prefix_eq) continue;
                        for (std::size_t t = 0; t < s; ++t) CHECK(I[t] == K[t]);
                    }
                }
    CHECK(count > 0);
}

TEST_CASE("property-omega exhaustively on C4xC4") {
    auto tuples = increasing_tuples(4, 2);
    long n_adic = 9;
    long equality_cases = 0;
    for (auto& K : tuples)
        for (auto& I : tuples)
            for (auto& J : tuples)
                for (auto& L : tuples) {
                    bool strict_below = tuple_leq(K, I) && K != I && tuple_leq(K, J) && K != J;
                    bool strict_above = tuple_leq(I, L) && I != L && tuple_leq(J, L) && J != L;
                    if (!strict_below || !strict_above) continue;
                    if (msum(K, L) != msum(I, J)) continue;
                    long lhs = omega_of(I, n_adic) + omega_of(J, n_adic);
                    long rhs = omega_of(K, n_adic) + omega_of(L, n_adic);
                    CHECK(lhs <= rhs);
                    std::vector<int> meet{std::min(I[0], J[0]), std::min(I[1], J[1])};
                    std::vector<int> join{std::max(I[0], J[0]), std::max(I[1], J[1])};
                    CHECK((lhs == rhs) == (K == meet && L == join));
                    if (lhs == rhs) ++equality_cases;
                }
    CHECK(equality_cases > 0);
}

TEST_CASE("property-omega randomized on C5xC5xC5") {
    auto tuples = increasing_tuples(5, 3);
    long n_adic = 11;
    std::mt19937_64 rng(20250101);
    std::uniform_int_distribution<std::size_t> pick(0, tuples.size() - 1);
    long instances = 0;
    while (instances < 10000) {
        const auto& I = tuples[pick(rng)];
        const auto& J = tuples[pick(rng)];
        // Enumerate splits of the multiset I ⊔ J into two increasing triples.
        std::vector<int> all;
        all.insert(all.end(), I.begin(), I.end());
        all.insert(all.end(), J.begin(), J.end());
        std::sort(all.begin(), all.end());
        std::vector<int> sel(6, 0);
        std::fill(sel.begin() + 3, sel.end(), 1);
        std::sort(sel.begin(), sel.end());
        std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
        do {
            std::vector<int> K, L;
            for (int t = 0; t < 6; ++t) (sel[t] ? L : K).push_back(all[t]);
            if (!seen.insert({K, L}).second) continue;
            bool strict_below = tuple_leq(K, I) && K != I && tuple_leq(K, J) && K != J;
            bool strict_above = tuple_leq(I, L) && I != L && tuple_leq(J, L) && J != L;
            if (!strict_below || !strict_above) continue;
            long lhs = omega_of(I, n_adic) + omega_of(J, n_adic);
            long rhs = omega_of(K, n_adic) + omega_of(L, n_adic);
            CHECK(lhs <= rhs);
            std::vector<int> meet(3), join(3);
            for (int t = 0; t < 3; ++t) {
                meet[t] = std::min(I[t], J[t]);
                join[t] = std::max(I[t], J[t]);
            }
            CHECK((lhs == rhs) == (K == meet && L == join));
            ++instances;
        } while (std::next_permutation(sel.begin(), sel.end()));
    }
    CHECK(instances >= 10000);
}

TEST_CASE("rank equals count of irreducibles below, on distributive lattices") {
    for (const auto& l : {chain_product_lattice({2, 3}), chain_product_lattice({2, 2, 2}),
                          diamond_lattice(), chain_lattice(6)}) {
        auto cert = birkhoff_check(l);
        for (std::size_t x = 0; x < l.size(); ++x) {
            int below = 0;
            for (std::size_t t = 0; t < cert.irreducibles.size(); ++t)
                if (cert.downset_of[x][t]) ++below;
            CHECK(l.poset().rank_of(x) == below);
        }
    }
}

TEST_CASE("content multisets") {
    auto u = content_union(content({1, 4}), content({2, 3}));
    CHECK(u == content({1, 2, 3, 4}));
    auto v = content_union(content({1, 3}), content({2, 3}));
    CHECK(v.counts == std::map<int, int>{{1, 1}, {2, 1}, {3, 2}});
    CHECK(v.total() == 4);

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> val(1, 6);
    for (int it = 0; it < 50; ++it) {
        std::vector<int> a{val(rng), val(rng), val(rng)}, b{val(rng), val(rng)};
        CHECK(content_union(content(a), content(b)) == content_union(content(b), content(a)));
    }
}

TEST_CASE("interval and complement") {
    auto l = chain_product_lattice({2, 3});
    auto alpha = l.poset().index("1,2");
    auto beta = l.poset().index("2,3");
    auto split = interval_and_complement(l, alpha, beta);
    CHECK(ids(l, split.interval) == std::set<std::string>{"1,2", "1,3", "2,2", "2,3"});
    CHECK(ids(l, split.complement) == std::set<std::string>{"1,1", "2,1"});

    auto single = interval_and_complement(l, alpha, alpha);
    CHECK(single.interval.size() == 1);

    auto full = interval_and_complement(l, l.minimum(), l.maximum());
    CHECK(full.complement.empty());

    CHECK_THROWS_AS(interval_and_complement(l, beta, alpha), Error);
}
