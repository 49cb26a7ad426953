#include "qasl/degeneration.hpp"

#include <algorithm>
#include <random>

#include "qasl/linalg.hpp"

namespace qasl {

WeightFiltration weight_filtration(const FiniteLattice& lattice,
                                   const ChainProductRealization& realization) {
    realization.validate(lattice);
    WeightFiltration f;
    f.M = realization.max_omega();
    f.weights.reserve(lattice.size());
    for (std::size_t x = 0; x < lattice.size(); ++x)
        f.weights.push_back(weight(realization, f.M, x));
    return f;
}

GradedExtraction extract_graded(const StraighteningTable& table, const PluckerPoset& poset) {
    GradedExtraction out;
    out.filtration = weight_filtration(poset.lattice, poset.realization);
    const auto& wt = out.filtration.weights;

    ToricPresentation p;
    p.lattice = poset.lattice;
    p.realization = poset.realization;

    for (const auto& [key, entry] : table.commutation) {
        std::size_t a = poset.index_of(key.first);
        std::size_t b = poset.index_of(key.second);
        p.qmap[{a, b}] = entry.qpow;
        long bound = wt[a] + wt[b];
        for (const auto& [mono, coeff] : entry.tail.terms) {
            long w = wt[poset.index_of(mono[0])] + wt[poset.index_of(mono[1])];
            if (w >= bound)
                raise(ErrorKind::WeightViolation,
                      "commutation tail term " + std_monomial_to_string(mono) + " of ([" +
                          key.first.to_string() + "],[" + key.second.to_string() +
                          "]) does not lower the weight");
            ++out.commutation_terms_checked;
        }
    }

    for (const auto& [key, expansion] : table.straightening) {
        std::size_t a = poset.index_of(key.first);
        std::size_t b = poset.index_of(key.second);
        StdMonomial meet_join{plucker_meet(key.first, key.second),
                              plucker_join(key.first, key.second)};
        QScalar lead = expansion.coefficient(meet_join);
        if (lead.is_zero())
            raise(ErrorKind::WeightViolation,
                  "straightening of ([" + key.first.to_string() + "],[" +
                      key.second.to_string() + "]) misses its meet-join term");
        p.cmap[{a, b}] = lead;
        long bound = wt[a] + wt[b];
        for (const auto& [mono, coeff] : expansion.terms) {
            long w = wt[poset.index_of(mono[0])] + wt[poset.index_of(mono[1])];
            if (mono == meet_join) {
                if (w != bound)
                    raise(ErrorKind::WeightViolation,
                          "meet-join term weight mismatch for ([" + key.first.to_string() +
                              "],[" + key.second.to_string() + "])");
            } else if (w >= bound) {
                raise(ErrorKind::WeightViolation,
                      "straightening term " + std_monomial_to_string(mono) + " of ([" +
                          key.first.to_string() + "],[" + key.second.to_string() +
                          "]) does not lower the weight");
            }
            ++out.straightening_terms_checked;
        }
    }

    p.validate();
    out.presentation = std::move(p);
    return out;
}

DegenerationReport verify_degeneration(const GrassmannAlgebra& algebra, int max_degree,
                                       unsigned long seed) {
    DegenerationReport report;
    const PluckerPoset& poset = algebra.poset();
    WeightFiltration filtration = weight_filtration(poset.lattice, poset.realization);
    const auto& wt = filtration.weights;

    auto monomial_weight = [&](const StdMonomial& mono) {
        long w = 0;
        for (const auto& I : mono) w += wt[poset.index_of(I)];
        return w;
    };

    // (a) pre-filtration containment: every standard term of a product of
    // generators weighs at most the sum of the generator weights.
    auto check_word = [&](const std::vector<PluckerIndex>& word) {
        long bound = 0;
        for (const auto& I : word) bound += wt[poset.index_of(I)];
        StdExpansion e = algebra.expand_in_std(word);
        for (const auto& [mono, coeff] : e.terms) {
            if (monomial_weight(mono) > bound) {
                std::string w;
                for (const auto& I : word) w += "[" + I.to_string() + "]";
                report.violation("product " + w + " escapes F_{sum wt}: term " +
                                 std_monomial_to_string(mono));
            }
        }
    };

    long degree2 = 0;
    for (const auto& I : algebra.elements())
        for (const auto& J : algebra.elements()) {
            check_word({I, J});
            ++degree2;
        }
    report.note("filtration containment: " + std::to_string(degree2) +
                " degree-2 products checked exhaustively");

    if (max_degree >= 3) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, algebra.elements().size() - 1);
        long sampled = 0;
        for (int len = 3; len <= max_degree; ++len) {
            for (int it = 0; it < 40; ++it) {
                std::vector<PluckerIndex> word;
                for (int t = 0; t < len; ++t) word.push_back(algebra.elements()[pick(rng)]);
                check_word(word);
                ++sampled;
            }
        }
        report.note("filtration containment: " + std::to_string(sampled) +
                    " random words of length 3.." + std::to_string(max_degree));
    }

    // (b) filtered dimension table versus the weight census.
    for (int d = 1; d <= std::min(max_degree, 2); ++d) {
        auto monos = algebra.standard_monomials(d);
        std::map<long, std::vector<StdMonomial>> by_weight;
        for (const auto& mono : monos) by_weight[monomial_weight(mono)].push_back(mono);

        std::map<Word, std::size_t> row_of;
        std::vector<std::pair<long, PbwElement>> columns;
        for (const auto& [w, block] : by_weight)
            for (const auto& mono : block) {
                columns.emplace_back(w, algebra.product(mono));
                for (const auto& [word, c] : columns.back().second.terms())
                    row_of.emplace(word, row_of.size());
            }
        // columns are already grouped by ascending weight (map order)
        std::size_t prev_rank = 0;
        std::size_t used = 0;
        QMatrixData matrix;
        for (const auto& [w, block] : by_weight) {
            for (std::size_t t = 0; t < block.size(); ++t) {
                QVector col(row_of.size());
                for (const auto& [word, c] : columns[used].second.terms())
                    col[row_of.at(word)] = c;
                matrix.push_back(std::move(col));
                ++used;
            }
            // matrix holds column vectors as rows; rank is transpose-stable.
            std::size_t rank = matrix_rank(matrix);
            if (rank - prev_rank != block.size())
                report.violation("degree " + std::to_string(d) + " weight " +
                                 std::to_string(w) + ": filtered rank step " +
                                 std::to_string(rank - prev_rank) + " != census " +
                                 std::to_string(block.size()));
            prev_rank = rank;
        }
        report.note("degree " + std::to_string(d) + ": filtered dimension table matches " +
                    std::to_string(by_weight.size()) + " weight steps");
    }

    // (c) extraction: consistent parameters, confluent rewriting.
    try {
        GradedExtraction extraction = extract_graded(algebra.straightening_table(), poset);
        auto confluence = confluence_certify(extraction.presentation);
        if (!confluence.ok)
            for (const auto& f : confluence.failures) report.violation(f);
        else
            report.note("extracted presentation consistent and confluent (" +
                        std::to_string(confluence.overlaps_checked) + " overlaps)");
        report.note("weight margins: " +
                    std::to_string(extraction.straightening_terms_checked) +
                    " straightening terms, " +
                    std::to_string(extraction.commutation_terms_checked) +
                    " commutation tail terms");
    } catch (const Error& e) {
        report.violation(std::string("extraction failed: ") + e.what());
    }
    return report;
}

} // namespace qasl
