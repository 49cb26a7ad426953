#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qasl/commutative_oracle.hpp"
#include "qasl/degeneration.hpp"

using namespace qasl;

namespace {

PluckerIndex P(std::initializer_list<int> rows) { return PluckerIndex{rows}; }

// Straightening table of the classical (q=1) coordinate ring, built from
// the commutative oracle, wrapped in the table type for extraction.
StraighteningTable classical_table_24() {
    StraighteningTable t;
    t.m = 2;
    t.n = 4;
    // p14 p23 = p13 p24 - p12 p34 and the same with the factors swapped.
    StdExpansion e;
    e.add({P({1, 3}), P({2, 4})}, QScalar(1));
    e.add({P({1, 2}), P({3, 4})}, QScalar(-1));
    t.straightening.emplace(std::make_pair(P({1, 4}), P({2, 3})), e);
    t.straightening.emplace(std::make_pair(P({2, 3}), P({1, 4})), e);
    auto poset = plucker_poset(2, 4);
    for (const auto& I : poset.elements)
        for (const auto& J : poset.elements)
            t.commutation.emplace(std::make_pair(I, J),
                                  StraighteningTable::Commutation{QScalar(1), {}});
    return t;
}

} // namespace

TEST_CASE("weight filtration of the Plücker poset") {
    auto poset = plucker_poset(2, 4);
    auto f = weight_filtration(poset.lattice, poset.realization);
    CHECK(f.M == 31);
    CHECK(f.weights[poset.index_of(P({3, 4}))] == 1);
    CHECK(f.weights[poset.index_of(P({1, 2}))] == 21);
    // order-reversing
    for (std::size_t x = 0; x < poset.lattice.size(); ++x)
        for (std::size_t y = 0; y < poset.lattice.size(); ++y)
            if (poset.lattice.poset().less(x, y)) CHECK(f.weights[x] > f.weights[y]);
}

TEST_CASE("extraction from the quantum (2,4) table") {
    GrassmannAlgebra g(2, 4);
    auto extraction = extract_graded(g.straightening_table(), g.poset());
    const auto& p = extraction.presentation;
    // cmap has entries exactly for the single incomparable pair, both orders
    CHECK(p.cmap.size() == 2);
    std::size_t i14 = g.poset().index_of(P({1, 4}));
    std::size_t i23 = g.poset().index_of(P({2, 3}));
    CHECK(p.cmap.count({i14, i23}) == 1);
    CHECK(p.cmap.count({i23, i14}) == 1);
    p.validate();
    CHECK(confluence_certify(p).ok);

    // q = 1 specialization of every extracted unit is 1 (sign +1 throughout)
    for (const auto& [key, v] : p.qmap) CHECK(v.specialize(1) == 1);
    for (const auto& [key, v] : p.cmap) CHECK(v.specialize(1) == 1);
}

TEST_CASE("extraction from the classical table matches the q=1 specialization") {
    auto poset = plucker_poset(2, 4);
    auto classical = extract_graded(classical_table_24(), poset);
    CHECK(classical.presentation.cmap.size() == 2);
    for (const auto& [key, v] : classical.presentation.qmap) CHECK(v == QScalar(1));
    for (const auto& [key, v] : classical.presentation.cmap) CHECK(v == QScalar(1));

    GrassmannAlgebra g(2, 4);
    auto quantum = extract_graded(g.straightening_table(), g.poset());
    for (const auto& [key, v] : quantum.presentation.qmap)
        CHECK(QScalar(mpq_class(v.specialize(1))) == classical.presentation.qmap.at(key));
    for (const auto& [key, v] : quantum.presentation.cmap)
        CHECK(QScalar(mpq_class(v.specialize(1))) == classical.presentation.cmap.at(key));
}

TEST_CASE("weight violations are detected") {
    auto poset = plucker_poset(2, 4);
    StraighteningTable bad = classical_table_24();
    // Weights reverse the order, so a low term carries too much weight.
    StdExpansion e;
    e.add({P({1, 3}), P({2, 4})}, QScalar(1));
    e.add({P({1, 2}), P({1, 2})}, QScalar(1));
    bad.straightening[{P({1, 4}), P({2, 3})}] = e;
    CHECK_THROWS_AS(extract_graded(bad, poset), Error);
}

TEST_CASE("chain case has empty cmap") {
    GrassmannAlgebra g(1, 3);
    auto extraction = extract_graded(g.straightening_table(), g.poset());
    CHECK(extraction.presentation.cmap.empty());
    for (const auto& [key, v] : extraction.presentation.qmap)
        CHECK(v.as_pure_q_power().has_value());
}

TEST_CASE("torus embedding of the extracted (2,4) presentation") {
    GrassmannAlgebra g(2, 4);
    auto extraction = extract_graded(g.straightening_table(), g.poset());
    auto embedding = torus_embedding(extraction.presentation);
    std::vector<std::string> gens;
    for (std::size_t x : embedding.generators)
        gens.push_back(extraction.presentation.lattice.poset().id(x));
    CHECK(gens == std::vector<std::string>{"1,2", "1,3", "1,4", "2,3", "3,4"});

    // X_24 = c_{14,23}^{-1} X_13^{-1} X_14 X_23 (already normal-ordered)
    std::size_t i24 = g.poset().index_of(P({2, 4}));
    CHECK(embedding.image[i24].exps == std::vector<long>{0, -1, 1, 1, 0});
    std::size_t i14 = g.poset().index_of(P({1, 4}));
    std::size_t i23 = g.poset().index_of(P({2, 3}));
    CHECK(embedding.image[i24].coeff ==
          extraction.presentation.cmap.at({i14, i23}).inverse());
}

TEST_CASE("full degeneration verification for (2,4)") {
    GrassmannAlgebra g(2, 4);
    auto report = verify_degeneration(g, 2, 20240811);
    for (const auto& v : report.violations) MESSAGE(v);
    CHECK(report.ok);
}

TEST_CASE("full degeneration verification for (1,3) chain") {
    GrassmannAlgebra g(1, 3);
    auto report = verify_degeneration(g, 3, 7);
    CHECK(report.ok);
}
