#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "qasl/commutative_oracle.hpp"
#include "qasl/grassmann.hpp"

using namespace qasl;

namespace {

PluckerIndex P(std::initializer_list<int> rows) { return PluckerIndex{rows}; }

// Classical straightening of p_I p_J over Q, solved independently of the
// quantum pipeline: coordinates in commutative monomials, rational
// elimination.
std::map<StdMonomial, mpq_class> classical_straightening(int m, int n, const PluckerIndex& I,
                                                         const PluckerIndex& J) {
    std::vector<int> cols(m);
    for (int j = 0; j < m; ++j) cols[j] = j + 1;
    auto poset = plucker_poset(m, n);

    auto content = [&](const StdMonomial& mono) {
        std::multiset<int> c;
        for (const auto& e : mono) c.insert(e.rows.begin(), e.rows.end());
        return c;
    };
    StdMonomial target_mono{I, J};
    std::multiset<int> target_content = content(target_mono);

    std::vector<StdMonomial> basis;
    for (const auto& K : poset.elements)
        for (const auto& L : poset.elements) {
            if (!plucker_leq(K, L)) continue;
            StdMonomial mono{K, L};
            if (content(mono) == target_content) basis.push_back(mono);
        }

    comm::CommPoly target = comm::classical_minor(I.rows, cols) *
                            comm::classical_minor(J.rows, cols);
    std::vector<comm::CommPoly> columns;
    std::map<comm::CommPoly::Monomial, std::size_t> row_of;
    auto note = [&](const comm::CommPoly& p) {
        for (const auto& [mono, c] : p.terms()) row_of.emplace(mono, row_of.size());
    };
    for (const auto& mono : basis) {
        columns.push_back(comm::classical_minor(mono[0].rows, cols) *
                          comm::classical_minor(mono[1].rows, cols));
        note(columns.back());
    }
    note(target);

    std::vector<std::vector<mpq_class>> a(row_of.size(),
                                          std::vector<mpq_class>(basis.size(), 0));
    std::vector<mpq_class> b(row_of.size(), 0);
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [mono, c] : columns[j].terms()) a[row_of.at(mono)][j] = c;
    for (const auto& [mono, c] : target.terms()) b[row_of.at(mono)] = c;

    std::vector<mpq_class> x;
    REQUIRE(comm::solve_rational(a, b, x));
    std::map<StdMonomial, mpq_class> out;
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (x[j] != 0) out.emplace(basis[j], x[j]);
    return out;
}

} // namespace

TEST_CASE("plucker poset shapes") {
    auto p24 = plucker_poset(2, 4);
    CHECK(p24.elements.size() == 6);
    CHECK(p24.lattice.poset().rank() == 4);
    CHECK(p24.realization.N == 9);

    auto p13 = plucker_poset(1, 3);
    CHECK(p13.elements.size() == 3);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
            CHECK(p13.lattice.poset().comparable(a, b)); // a chain

    auto p36 = plucker_poset(3, 6);
    CHECK(p36.elements.size() == 20);
    CHECK(p36.lattice.poset().rank() == 9);

    CHECK_THROWS_AS(plucker_poset(4, 2), Error);
}

TEST_CASE("join irreducibles and intervals of Pi_{2,4}") {
    auto poset = plucker_poset(2, 4);
    auto ji = join_irreducibles(poset.lattice);
    std::set<std::string> irr;
    for (std::size_t x : ji.irr) irr.insert(poset.lattice.poset().id(x));
    CHECK(irr == std::set<std::string>{"1,3", "1,4", "2,3", "3,4"});

    auto split = interval_and_complement(poset.lattice, poset.index_of(P({1, 3})),
                                         poset.index_of(P({2, 4})));
    std::set<std::string> interval, complement;
    for (std::size_t x : split.interval) interval.insert(poset.lattice.poset().id(x));
    for (std::size_t x : split.complement) complement.insert(poset.lattice.poset().id(x));
    CHECK(interval == std::set<std::string>{"1,3", "1,4", "2,3", "2,4"});
    CHECK(complement == std::set<std::string>{"1,2", "3,4"});
}

TEST_CASE("plucker order oracles") {
    CHECK(plucker_complement(P({1, 2}), 4) == P({3, 4}));
    CHECK(complement_order_evidence(P({1, 2}), P({1, 3}), 4));
    // exhaustive over Pi_{2,4}
    auto poset = plucker_poset(2, 4);
    for (const auto& I : poset.elements)
        for (const auto& J : poset.elements) CHECK(complement_order_evidence(I, J, 4));
    CHECK_THROWS_AS(plucker_complement(P({1, 2}), 5), Error);

    CHECK(disjoint_union(P({1}), {3}) == P({1, 3}));
    CHECK(disjoint_union_order_evidence(P({1}), P({2}), {3}));
    CHECK_THROWS_AS(disjoint_union(P({1, 3}), {3}), Error);
    auto p15 = plucker_poset(1, 4);
    for (const auto& I : p15.elements)
        for (const auto& K : p15.elements) {
            if (I.rows[0] == 3 || K.rows[0] == 3) continue;
            CHECK(disjoint_union_order_evidence(I, K, {3}));
        }
}

TEST_CASE("expansion basics") {
    GrassmannAlgebra g(2, 4);
    auto one = g.expand_in_std({P({1, 2})});
    CHECK(one.terms.size() == 1);
    CHECK(one.coefficient({P({1, 2})}) == QScalar(1));

    // [23][14] expansion has a pure q-power on [13][24].
    auto e = g.expand_in_std({P({2, 3}), P({1, 4})});
    auto lead = e.coefficient({P({1, 3}), P({2, 4})});
    CHECK(lead.as_pure_q_power().has_value());

    // degree-1 contents are distinct; expansions of single minors are the
    // minors themselves
    for (const auto& I : g.elements()) {
        auto x = g.expand_in_std({I});
        CHECK(x.terms.size() == 1);
    }
}

TEST_CASE("straightening of [14][23] matches the classical Plücker relation at q=1") {
    GrassmannAlgebra g(2, 4);
    auto e = g.expand_in_std({P({1, 4}), P({2, 3})});
    // Classically p14 p23 = p13 p24 - p12 p34.
    auto classical = classical_straightening(2, 4, P({1, 4}), P({2, 3}));
    REQUIRE(classical.size() == 2);
    CHECK(classical.at({P({1, 3}), P({2, 4})}) == 1);
    CHECK(classical.at({P({1, 2}), P({3, 4})}) == -1);

    std::map<StdMonomial, mpq_class> specialized;
    for (const auto& [mono, c] : e.terms) {
        mpq_class v = c.specialize(1);
        if (v != 0) specialized.emplace(mono, v);
    }
    CHECK(specialized == classical);
}

TEST_CASE("straightening table for (2,4)") {
    GrassmannAlgebra g(2, 4);
    const auto& table = g.straightening_table();
    CHECK(table.straightening.size() == 2); // the ordered pair and its swap
    CHECK(table.commutation.size() == 36);

    // q = 1 specialization of both straightening entries matches the
    // classical oracle.
    for (const auto& [key, expansion] : table.straightening) {
        auto classical = classical_straightening(2, 4, key.first, key.second);
        std::map<StdMonomial, mpq_class> specialized;
        for (const auto& [mono, c] : expansion.terms) {
            mpq_class v = c.specialize(1);
            if (v != 0) specialized.emplace(mono, v);
        }
        CHECK(specialized == classical);
    }

    // Commutation factors multiply to 1 on opposite pairs.
    for (const auto& I : g.elements())
        for (const auto& J : g.elements()) {
            const auto& fwd = table.commutation.at({I, J});
            const auto& rev = table.commutation.at({J, I});
            CHECK(fwd.qpow * rev.qpow == QScalar(1));
        }
}

TEST_CASE("straightening table for (2,5) satisfies the content law") {
    GrassmannAlgebra g(2, 5);
    const auto& table = g.straightening_table();
    // Incomparable pairs in Pi_{2,5}: {14,23},{15,23},{15,24},{25,34},{15,34}
    std::set<std::set<PluckerIndex>> unordered;
    for (const auto& [key, e] : table.straightening)
        unordered.insert({key.first, key.second});
    CHECK(unordered.size() == 5);
    CHECK(unordered.count({P({1, 4}), P({2, 3})}) == 1);
    CHECK(unordered.count({P({1, 5}), P({2, 3})}) == 1);
    CHECK(unordered.count({P({1, 5}), P({2, 4})}) == 1);
    CHECK(unordered.count({P({2, 5}), P({3, 4})}) == 1);
    CHECK(unordered.count({P({1, 5}), P({3, 4})}) == 1);
    // verify_table has already certified support/content/leading laws.
}

TEST_CASE("ASL-1 ranks for (2,4)") {
    GrassmannAlgebra g(2, 4);
    auto report = g.verify_symmetric_asl(2);
    CHECK(report.ok);
    CHECK(g.standard_monomials(1).size() == 6);
    CHECK(g.standard_monomials(2).size() == 20);
}

TEST_CASE("chain case (1,n) has commutation-only tables") {
    GrassmannAlgebra g(1, 4);
    const auto& table = g.straightening_table();
    CHECK(table.straightening.empty());
    CHECK(table.commutation.size() == 16);
    for (const auto& [key, entry] : table.commutation) CHECK(entry.tail.is_zero());
    auto report = g.verify_symmetric_asl(2);
    CHECK(report.ok);
}

TEST_CASE("Muir extension consistency from (2,5) into (3,5)") {
    GrassmannAlgebra g25(2, 5);
    GrassmannAlgebra g35(3, 5);
    const auto& table = g25.straightening_table();
    int applicable = 0;
    for (const auto& [key, expansion] : table.straightening) {
        const auto& [I, J] = key;
        std::set<int> used(I.rows.begin(), I.rows.end());
        used.insert(J.rows.begin(), J.rows.end());
        if (used.size() != 4) continue; // oracle applies to disjoint pairs
        for (int s = 1; s <= 5; ++s) {
            if (used.count(s)) continue;
            ++applicable;
            auto lifted = g35.expand_in_std({disjoint_union(I, {s}), disjoint_union(J, {s})});
            CHECK(lifted.terms.size() == expansion.terms.size());
            for (const auto& [mono, c] : expansion.terms) {
                StdMonomial lifted_mono{disjoint_union(mono[0], {s}),
                                        disjoint_union(mono[1], {s})};
                CHECK(lifted.coefficient(lifted_mono) == c);
            }
        }
    }
    CHECK(applicable > 0);
}
