#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qasl/commutative_oracle.hpp"
#include "qasl/qmatrix.hpp"

using namespace qasl;

namespace {

Word random_word(QuantumMatrices& alg, std::mt19937_64& rng, int len) {
    std::uniform_int_distribution<int> row(1, alg.rows());
    std::uniform_int_distribution<int> col(1, alg.cols());
    Word w;
    for (int i = 0; i < len; ++i) w.push_back({row(rng), col(rng)});
    return w;
}

} // namespace

TEST_CASE("normal form on the fixed convention") {
    QuantumMatrices alg(2, 2);
    auto q = QScalar::q();

    // X12 X11 = q^{-1} X11 X12
    PbwElement a = alg.normal_form({{1, 2}, {1, 1}});
    PbwElement expect = alg.normal_form({{1, 1}, {1, 2}}) * q.pow(-1);
    CHECK(a == expect);

    // sorted word is fixed
    CHECK(alg.normal_form({{1, 1}, {2, 2}}).coefficient({{1, 1}, {2, 2}}) == QScalar(1));

    // X22 X11 = X11 X22 - (q - q^{-1}) X12 X21
    PbwElement b = alg.normal_form({{2, 2}, {1, 1}});
    CHECK(b.coefficient({{1, 1}, {2, 2}}) == QScalar(1));
    CHECK(b.coefficient({{1, 2}, {2, 1}}) == -(q - q.pow(-1)));
    CHECK(b.terms().size() == 2);

    CHECK_THROWS_AS(alg.normal_form({{3, 1}}), Error);
}

TEST_CASE("quantum minors") {
    QuantumMatrices alg(3, 3);
    auto q = QScalar::q();

    CHECK(alg.quantum_minor({1}, {1}) == alg.generator({1, 1}));

    PbwElement m12 = alg.quantum_minor({1, 2}, {1, 2});
    CHECK(m12.coefficient({{1, 1}, {2, 2}}) == QScalar(1));
    CHECK(m12.coefficient({{1, 2}, {2, 1}}) == -q);
    CHECK(m12.terms().size() == 2);

    CHECK_THROWS_AS(alg.quantum_minor({1, 2}, {1}), Error);
    CHECK_THROWS_AS(alg.quantum_minor({2, 1}, {1, 2}), Error);
    CHECK_THROWS_AS(alg.quantum_minor({1, 2, 3, 4}, {1, 2, 3, 4}), Error);
}

TEST_CASE("transpose is an involutive automorphism sending [I|J] to [J|I]") {
    QuantumMatrices alg(3, 3);
    CHECK(alg.transpose(alg.generator({1, 2})) == alg.generator({2, 1}));

    std::mt19937_64 rng(17);
    for (int it = 0; it < 20; ++it) {
        Word w = random_word(alg, rng, 3);
        PbwElement x = alg.normal_form(w);
        CHECK(alg.transpose(alg.transpose(x)) == x);
    }

    // tr([I|J]) = [J|I] on random minors in O_q(M_4).
    QuantumMatrices alg4(4, 4);
    std::vector<std::vector<int>> sets2 = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    for (const auto& I : sets2)
        for (const auto& J : sets2)
            CHECK(alg4.transpose(alg4.quantum_minor(I, J)) == alg4.quantum_minor(J, I));
    CHECK(alg4.transpose(alg4.quantum_minor({1, 2, 3}, {1, 2, 4})) ==
          alg4.quantum_minor({1, 2, 4}, {1, 2, 3}));

    QuantumMatrices rect(3, 2);
    CHECK_THROWS_AS(rect.transpose(rect.generator({1, 1})), Error);
}

TEST_CASE("row degree") {
    QuantumMatrices alg(4, 2);
    PbwElement m = alg.quantum_minor({1, 3}, {1, 2});
    auto d = m.row_degree();
    REQUIRE(d.has_value());
    CHECK(d->mult == std::vector<int>{1, 0, 1, 0});

    CHECK(!alg.zero().row_degree().has_value());
    CHECK(alg.zero().is_zero());

    PbwElement inhom = alg.generator({1, 1}) + alg.generator({2, 1});
    CHECK(!inhom.row_degree().has_value());

    // degree is additive on homogeneous products
    PbwElement m2 = alg.quantum_minor({2, 4}, {1, 2});
    auto d2 = (m * m2).row_degree();
    REQUIRE(d2.has_value());
    CHECK(d2->mult == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("normal form is multiplicative") {
    QuantumMatrices alg(3, 2);
    std::mt19937_64 rng(23);
    for (int it = 0; it < 40; ++it) {
        Word w1 = random_word(alg, rng, 2);
        Word w2 = random_word(alg, rng, 3);
        Word cat = w1;
        cat.insert(cat.end(), w2.begin(), w2.end());
        CHECK(alg.normal_form(cat) == alg.normal_form(w1) * alg.normal_form(w2));
    }
}

TEST_CASE("confluence of O_q(M_2) up to length 3") {
    QuantumMatrices alg(2, 2);
    auto report = alg.confluence_check(3);
    CHECK(report.ok);
    CHECK(report.failures.empty());
    CHECK(report.words_checked == 4 + 16 + 64);
}

TEST_CASE("mirror convention is also confluent") {
    QuantumMatrices alg(2, 2, /*mirror=*/true);
    auto report = alg.confluence_check(3);
    CHECK(report.ok);
    PbwElement b = alg.normal_form({{2, 2}, {1, 1}});
    CHECK(b.coefficient({{1, 2}, {2, 1}}) == -(QScalar::q_power(-1) - QScalar::q()));
}

TEST_CASE("q=1 specialization is the commutative algebra") {
    QuantumMatrices alg(3, 2);
    std::mt19937_64 rng(31);
    for (int it = 0; it < 30; ++it) {
        Word w = random_word(alg, rng, 4);
        comm::CommPoly expected(mpq_class(1));
        for (const auto& g : w) expected = expected * comm::CommPoly::generator(g);
        CHECK(comm::specialize_q1(alg.normal_form(w)) == expected);
    }
    // classical minors match the quantum ones at q=1
    QuantumMatrices alg33(3, 3);
    CHECK(comm::specialize_q1(alg33.quantum_minor({1, 3}, {2, 3})) ==
          comm::classical_minor({1, 3}, {2, 3}));
}

TEST_CASE("equal products from trivially commuting swaps") {
    QuantumMatrices alg(3, 2);
    std::mt19937_64 rng(37);
    int found = 0;
    for (int it = 0; it < 400 && found < 100; ++it) {
        Word w = random_word(alg, rng, 5);
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            if (!QuantumMatrices::commutes_trivially(w[k], w[k + 1])) continue;
            Word swapped = w;
            std::swap(swapped[k], swapped[k + 1]);
            CHECK(alg.normal_form(w) == alg.normal_form(swapped));
            ++found;
            break;
        }
    }
    CHECK(found >= 100);
}
