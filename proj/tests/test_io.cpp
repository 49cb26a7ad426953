#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qasl/degeneration.hpp"
#include "qasl/json_io.hpp"

using namespace qasl;

TEST_CASE("lattice json round trip (covers form)") {
    auto l = diamond_lattice();
    json j = lattice_to_json(l);
    auto back = lattice_from_json(j);
    CHECK(back.size() == l.size());
    for (std::size_t a = 0; a < l.size(); ++a)
        for (std::size_t b = 0; b < l.size(); ++b) {
            std::size_t a2 = back.poset().index(l.poset().id(a));
            std::size_t b2 = back.poset().index(l.poset().id(b));
            CHECK(back.poset().leq(a2, b2) == l.poset().leq(a, b));
        }
    CHECK(lattice_to_json(back) == j);
}

TEST_CASE("lattice json chain-product form") {
    json j;
    j["chain_product"]["sizes"] = {2, 2};
    j["members"] = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
    auto l = lattice_from_json(j);
    CHECK(l.size() == 4);
    CHECK(l.is_distributive());

    // members must be closed under meet and join
    json bad = j;
    bad["members"] = {{1, 1}, {1, 2}, {2, 1}};
    CHECK_THROWS_AS(lattice_from_json(bad), Error);
}

TEST_CASE("straightening table json round trip") {
    for (auto [m, n] : {std::pair{2, 4}, std::pair{2, 5}}) {
        GrassmannAlgebra g(m, n);
        const auto& table = g.straightening_table();
        json j = table_to_json(table);
        StraighteningTable back = table_from_json(j);
        CHECK(back == table);
        CHECK(table_to_json(back).dump(2) == j.dump(2)); // byte-stable
    }
}

TEST_CASE("presentation json round trip") {
    GrassmannAlgebra g(2, 4);
    auto extraction = extract_graded(g.straightening_table(), g.poset());
    json j = presentation_to_json(extraction.presentation);
    ToricPresentation back = presentation_from_json(j);
    back.validate();
    CHECK(back.qmap == extraction.presentation.qmap);
    CHECK(back.cmap == extraction.presentation.cmap);
    CHECK(presentation_to_json(back) == j);
    // the reconstructed presentation is still confluent
    CHECK(confluence_certify(back).ok);
}

TEST_CASE("realization defaults to canonical when omitted") {
    auto p = commutative_presentation(diamond_lattice());
    json j = presentation_to_json(p);
    j.erase("realization");
    auto back = presentation_from_json(j);
    back.validate();
    CHECK(back.realization.d == 2);
}

TEST_CASE("hilbert json shape") {
    GrassmannAlgebra g(2, 4);
    auto r = richardson(g, PluckerIndex{{1, 3}}, PluckerIndex{{2, 4}});
    auto h = hilbert(r, hilbert_default_degree(r));
    json j = hilbert_to_json(h);
    CHECK(j["krull"] == 3);
    CHECK(j["numerator"] == json::array({"1", "1"}));
    CHECK(j["palindromic"] == true);
}

TEST_CASE("lattice analysis json") {
    json j = lattice_analysis_to_json(plucker_poset(2, 4).lattice);
    CHECK(j["size"] == 6);
    CHECK(j["rank"] == 4);
    CHECK(j["distributive"] == true);
    CHECK(j["join_irreducibles"].size() == 4);

    json m3 = lattice_analysis_to_json(m3_lattice());
    CHECK(m3["distributive"] == false);
    CHECK(!m3.contains("realization"));
}
