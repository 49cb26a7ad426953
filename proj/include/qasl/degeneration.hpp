#pragma once

#include <map>
#include <string>
#include <vector>

#include "qasl/grassmann.hpp"
#include "qasl/toric.hpp"

namespace qasl {

/// Weight data attached to a realized lattice: M = max omega and
/// wt(x) = M + 1 - omega(x), extended additively to standard monomials.
struct WeightFiltration {
    long M = 0;
    std::vector<long> weights; // per lattice element

    long weight_of(std::size_t x) const { return weights[x]; }
};

WeightFiltration weight_filtration(const FiniteLattice& lattice,
                                   const ChainProductRealization& realization);

/// Toric presentation read off a straightening table, with the weight
/// margins of every relation certified: the meet-join term carries the full
/// weight, every other term lies strictly below.
struct GradedExtraction {
    ToricPresentation presentation;
    WeightFiltration filtration;
    long straightening_terms_checked = 0;
    long commutation_terms_checked = 0;
};

GradedExtraction extract_graded(const StraighteningTable& table, const PluckerPoset& poset);

struct DegenerationReport {
    bool ok = true;
    std::vector<std::string> lines;
    std::vector<std::string> violations;

    void note(std::string s) { lines.push_back(std::move(s)); }
    void violation(std::string s) {
        ok = false;
        violations.push_back(std::move(s));
    }
};

/// Checks, for O_q(G_{m,n}):
///  (a) products of generators lie in F_{sum of weights} (exhaustive in
///      degree 2, seeded random words up to max_degree);
///  (b) per degree and weight, filtered PBW coordinate ranks grow exactly
///      by the number of standard monomials of that weight;
///  (c) the extracted presentation is consistent and confluent.
DegenerationReport verify_degeneration(const GrassmannAlgebra& algebra, int max_degree,
                                       unsigned long seed);

} // namespace qasl
