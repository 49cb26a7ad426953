#include "qasl/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "qasl/commutative_oracle.hpp"
#include "qasl/degeneration.hpp"
#include "qasl/grassmann.hpp"
#include "qasl/linalg.hpp"
#include "qasl/richardson.hpp"
#include "qasl/toric.hpp"

namespace qasl::selftest {

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
    void require(bool condition, const std::string& why) {
        if (!condition) fail(why);
    }
};

Word random_word(std::mt19937_64& rng, int rows, int cols, int len) {
    std::uniform_int_distribution<int> row(1, rows);
    std::uniform_int_distribution<int> col(1, cols);
    Word w;
    for (int i = 0; i < len; ++i) w.push_back({row(rng), col(rng)});
    return w;
}

// -- criterion 1 ------------------------------------------------------------

void criterion_qmatrix(Check& c, unsigned long seed) {
    QuantumMatrices m2(2, 2);
    auto report = m2.confluence_check(3);
    c.require(report.ok && report.words_checked == 84,
              "O_q(M_2) confluence scan failed");

    QuantumMatrices m32(3, 2);
    std::mt19937_64 rng(seed);
    long pairs = 0;
    while (pairs < 1000 && c.ok) {
        Word w = random_word(rng, 3, 2, 6);
        std::vector<std::size_t> spots;
        for (std::size_t k = 0; k + 1 < w.size(); ++k)
            if (w[k] != w[k + 1] && QuantumMatrices::commutes_trivially(w[k], w[k + 1]))
                spots.push_back(k);
        if (spots.empty()) continue;
        Word swapped = w;
        std::size_t k = spots[rng() % spots.size()];
        std::swap(swapped[k], swapped[k + 1]);
        if (m32.normal_form(w) != m32.normal_form(swapped))
            c.fail("equal products diverged: " + word_to_string(w));
        ++pairs;
    }

    for (int it = 0; it < 200 && c.ok; ++it) {
        Word w = random_word(rng, 3, 2, 4);
        comm::CommPoly expected(mpq_class(1));
        for (const auto& g : w) expected = expected * comm::CommPoly::generator(g);
        if (comm::specialize_q1(m32.normal_form(w)) != expected)
            c.fail("q=1 specialization mismatch on " + word_to_string(w));
    }
    if (c.ok)
        c.detail = "84 words exhaustive, 1000 equal-product pairs, 200 q=1 checks";
}

// -- criterion 2 ------------------------------------------------------------

void criterion_tables(Check& c, unsigned long) {
    std::ostringstream detail;
    for (auto [m, n] : {std::pair{2, 4}, std::pair{2, 5}, std::pair{3, 6}}) {
        GrassmannAlgebra g(m, n);
        // construction certifies: unique solve per pair, support law,
        // content law, +q^e leading coefficients
        const auto& table = g.straightening_table();
        detail << "(" << m << "," << n << "): " << table.straightening.size() << " entries; ";
    }

    // classical Plücker cross-check for (2,4) at q = 1
    GrassmannAlgebra g24(2, 4);
    const auto& table = g24.straightening_table();
    std::vector<int> cols{1, 2};
    for (const auto& [key, expansion] : table.straightening) {
        comm::CommPoly lhs = comm::classical_minor(key.first.rows, cols) *
                             comm::classical_minor(key.second.rows, cols);
        comm::CommPoly rhs;
        for (const auto& [mono, coeff] : expansion.terms) {
            comm::CommPoly term(coeff.specialize(1));
            for (const auto& I : mono) term = term * comm::classical_minor(I.rows, cols);
            rhs += term;
        }
        if (!(lhs == rhs)) {
            c.fail("q=1 straightening of ([" + key.first.to_string() + "],[" +
                   key.second.to_string() + "]) differs from the classical relation");
            return;
        }
    }
    c.detail = detail.str() + "(2,4) matches classical Plücker at q=1";
}

// -- criterion 3 ------------------------------------------------------------

void criterion_asl1(Check& c, unsigned long) {
    GrassmannAlgebra g24(2, 4);
    auto monos = g24.standard_monomials(2);
    c.require(monos.size() == 20, "(2,4) degree-2 census is not 20");
    auto report = g24.verify_symmetric_asl(2);
    c.require(report.ok, report.violations.empty() ? "(ASL-1) rank check failed"
                                                   : report.violations.front());

    GrassmannAlgebra g25(2, 5);
    auto report25 = g25.verify_symmetric_asl(2);
    c.require(report25.ok, "(2,5) (ASL-1) rank check failed");
    if (c.ok)
        c.detail = "(2,4): 20 = 20; (2,5): " + std::to_string(g25.standard_monomials(2).size()) +
                   " monomials, full rank";
}

// -- criterion 4 ------------------------------------------------------------

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
    return out;
}

bool tuple_leq(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

void criterion_lattice_lemmas(Check& c, unsigned long seed) {
    // Exhaustive scan over C_4 x C_4 with N = 9.
    {
        auto tuples = increasing_tuples(4, 2);
        const long N = 9;
        auto omega = [&](const std::vector<int>& t) { return N * t[0] + t[1]; };
        auto msum = [](const std::vector<int>& a, const std::vector<int>& b) {
            std::multiset<int> m(a.begin(), a.end());
            m.insert(b.begin(), b.end());
            return m;
        };
        long quadruples = 0;
        for (auto& K : tuples)
            for (auto& I : tuples)
                for (auto& J : tuples)
                    for (auto& L : tuples) {
                        if (msum(K, L) != msum(I, J)) continue;
                        // prefix lemma on K <= I <= J <= L
                        if (tuple_leq(K, I) && tuple_leq(I, J) && tuple_leq(J, L)) {
                            ++quadruples;
                            for (std::size_t s = 1; s <= 2; ++s) {
                                bool prefix = true;
                                for (std::size_t t = 0; t + 1 < s; ++t)
                                    if (J[t] != L[t]) prefix = false;
                                if (!prefix) continue;
                                for (std::size_t t = 0; t < s; ++t)
                                    if (I[t] != K[t]) c.fail("prefix lemma fails on C4xC4");
                            }
                        }
                        // omega lemma on K < I,J < L
                        bool strict = tuple_leq(K, I) && K != I && tuple_leq(K, J) && K != J &&
                                      tuple_leq(I, L) && I != L && tuple_leq(J, L) && J != L;
                        if (!strict) continue;
                        long lhs = omega(I) + omega(J);
                        long rhs = omega(K) + omega(L);
                        if (lhs > rhs) c.fail("omega inequality fails on C4xC4");
                        std::vector<int> meet{std::min(I[0], J[0]), std::min(I[1], J[1])};
                        std::vector<int> join{std::max(I[0], J[0]), std::max(I[1], J[1])};
                        if ((lhs == rhs) != (K == meet && L == join))
                            c.fail("omega equality case fails on C4xC4");
                    }
        c.require(quadruples > 0, "empty C4xC4 scan");
    }

    // Randomized scan in C_5^3 with N = 11, covering both lemmas.
    {
        auto tuples = increasing_tuples(5, 3);
        const long N = 11;
        auto omega = [&](const std::vector<int>& t) { return N * N * t[0] + N * t[1] + t[2]; };
        std::mt19937_64 rng(seed + 1);
        std::uniform_int_distribution<std::size_t> pick(0, tuples.size() - 1);
        long omega_instances = 0;
        long prefix_instances = 0;
        while ((omega_instances < 10000 || prefix_instances < 10000) && c.ok) {
            const auto& I = tuples[pick(rng)];
            const auto& J = tuples[pick(rng)];
            std::vector<int> meet(3), join(3);
            for (int t = 0; t < 3; ++t) {
                meet[t] = std::min(I[t], J[t]);
                join[t] = std::max(I[t], J[t]);
            }
            std::vector<int> all;
            all.insert(all.end(), I.begin(), I.end());
            all.insert(all.end(), J.begin(), J.end());
            std::sort(all.begin(), all.end());
            std::vector<int> sel{0, 0, 0, 1, 1, 1};
            std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
            do {
                std::vector<int> K, L;
                for (int t = 0; t < 6; ++t) (sel[t] ? L : K).push_back(all[t]);
                if (!seen.insert({K, L}).second) continue;
                bool strict = tuple_leq(K, I) && K != I && tuple_leq(K, J) && K != J &&
                              tuple_leq(I, L) && I != L && tuple_leq(J, L) && J != L;
                if (strict) {
                    long lhs = omega(I) + omega(J);
                    long rhs = omega(K) + omega(L);
                    if (lhs > rhs) c.fail("omega inequality fails on C5^3");
                    if ((lhs == rhs) != (K == meet && L == join))
                        c.fail("omega equality case fails on C5^3");
                    ++omega_instances;
                }
                // prefix lemma on the chain K <= meet <= join <= L
                if (tuple_leq(K, meet) && tuple_leq(join, L)) {
                    for (std::size_t s = 1; s <= 3; ++s) {
                        bool prefix = true;
                        for (std::size_t t = 0; t + 1 < s; ++t)
                            if (join[t] != L[t]) prefix = false;
                        if (!prefix) continue;
                        for (std::size_t t = 0; t < s; ++t)
                            if (meet[t] != K[t]) c.fail("prefix lemma fails on C5^3");
                    }
                    ++prefix_instances;
                }
            } while (std::next_permutation(sel.begin(), sel.end()));
        }
    }

    // Birkhoff rank identities.
    for (auto [m, n, expected] : {std::tuple{2, 4, 4}, std::tuple{2, 5, 6}, std::tuple{3, 6, 9}}) {
        auto poset = plucker_poset(m, n);
        auto cert = birkhoff_check(poset.lattice);
        if (cert.rank != expected ||
            cert.irreducibles.size() != static_cast<std::size_t>(expected))
            c.fail("Birkhoff rank mismatch for (" + std::to_string(m) + "," +
                   std::to_string(n) + ")");
    }
    if (c.ok) c.detail = "C4xC4 exhaustive, 10^4 random C5^3 instances, Birkhoff ranks 4/6/9";
}

// -- criterion 5 ------------------------------------------------------------

void criterion_degeneration(Check& c, unsigned long seed) {
    std::ostringstream detail;
    for (auto [m, n] : {std::pair{2, 4}, std::pair{2, 5}}) {
        GrassmannAlgebra g(m, n);
        auto report = verify_degeneration(g, 2, seed);
        if (!report.ok) {
            c.fail("(" + std::to_string(m) + "," + std::to_string(n) + "): " +
                   report.violations.front());
            return;
        }
        auto extraction = extract_graded(g.straightening_table(), g.poset());
        detail << "(" << m << "," << n << "): " << extraction.straightening_terms_checked
               << "+" << extraction.commutation_terms_checked << " weight margins; ";
    }
    c.detail = detail.str() + "filtered dimensions match, extractions confluent";
}

// -- criterion 6 ------------------------------------------------------------

void criterion_torus(Check& c, unsigned long) {
    GrassmannAlgebra g(2, 4);
    auto extraction = extract_graded(g.straightening_table(), g.poset());
    auto embedding = torus_embedding(extraction.presentation);
    c.require(embedding.generators.size() == 5, "irr+ of Pi_{2,4} should have 5 elements");
    c.require(gkdim_toric(extraction.presentation) == 5, "GK dimension of Pi_{2,4} is not 5");
    if (c.ok)
        c.detail = "all " + std::to_string(embedding.relations_verified) +
                   " defining relations verified in the torus; GKdim = 5";
}

// -- criterion 7 ------------------------------------------------------------

void criterion_richardson(Check& c, unsigned long) {
    GrassmannAlgebra g(2, 4);
    int pairs = 0;
    for (const auto& a : g.elements())
        for (const auto& b : g.elements()) {
            if (!plucker_leq(a, b)) continue;
            ++pairs;
            auto r = richardson(g, a, b);
            gk_dim(r); // raises if the three formulas disagree
        }
    c.require(pairs == 20, "expected 20 comparable pairs");

    auto diamond = richardson(g, PluckerIndex{{1, 3}}, PluckerIndex{{2, 4}});
    auto h = hilbert(diamond, std::max(hilbert_default_degree(diamond), 6));
    for (int d = 0; d <= 6; ++d)
        if (h.coefficients[static_cast<std::size_t>(d)] != mpz_class((d + 1) * (d + 1)))
            c.fail("diamond h_" + std::to_string(d) + " != (d+1)^2");
    c.require(h.numerator == std::vector<mpz_class>{1, 1}, "diamond numerator != 1+t");
    c.require(h.palindromic && gorenstein_indicator(diamond),
              "diamond Gorenstein indicator is not true");

    for (int d = 1; d <= 2 && c.ok; ++d) {
        std::size_t expected = h.coefficients[static_cast<std::size_t>(d)].get_ui();
        if (quotient_dimension(diamond, d, std::nullopt) != expected ||
            quotient_dimension(diamond, d, mpq_class(1)) != expected ||
            quotient_dimension(diamond, d, mpq_class(2)) != expected)
            c.fail("h_" + std::to_string(d) + " depends on the q specialization");
    }
    if (c.ok)
        c.detail = "20 pairs, three GK formulas agree; diamond h_d=(d+1)^2, numerator 1+t, "
                   "h_d stable at q symbolic/1/2";
}

// -- criterion 8 ------------------------------------------------------------

void criterion_regularity(Check& c, unsigned long) {
    GrassmannAlgebra g(2, 4);
    auto extraction = extract_graded(g.straightening_table(), g.poset());
    for (std::size_t gamma = 0; gamma < extraction.presentation.lattice.size(); ++gamma)
        if (!phi_injective(extraction.presentation, gamma, 4)) {
            c.fail("phi_" + extraction.presentation.lattice.poset().id(gamma) +
                   " is not injective on monomials of length <= 4");
            return;
        }
    c.detail = "phi_gamma injective for all 6 generators on 182 monomials of length <= 4";
}

} // namespace

std::vector<CriterionResult> run_all(unsigned long seed) {
    struct Entry {
        int number;
        const char* name;
        std::function<void(Check&, unsigned long)> run;
        double limit_seconds;
    };
    const std::vector<Entry> entries = {
        {1, "quantum matrix engine confluence and q=1 oracle", criterion_qmatrix, 30.0},
        {2, "straightening tables (2,4),(2,5),(3,6)", criterion_tables, 300.0},
        {3, "ASL-1 degree-2 dimension check", criterion_asl1, 60.0},
        {4, "lattice lemmas and Birkhoff ranks", criterion_lattice_lemmas, 10.0},
        {5, "weight filtration degeneration (2,4),(2,5)", criterion_degeneration, 120.0},
        {6, "quantum torus embedding for Pi_{2,4}", criterion_torus, 60.0},
        {7, "Richardson GK/Hilbert/Gorenstein", criterion_richardson, 60.0},
        {8, "toric regularity surrogate (phi injectivity)", criterion_regularity, 60.0},
    };

    std::vector<CriterionResult> results;
    for (const auto& entry : entries) {
        CriterionResult r;
        r.number = entry.number;
        r.name = entry.name;
        Check check;
        auto t0 = std::chrono::steady_clock::now();
        try {
            entry.run(check, seed);
        } catch (const std::exception& e) {
            check.fail(e.what());
        }
        auto t1 = std::chrono::steady_clock::now();
        r.seconds = std::chrono::duration<double>(t1 - t0).count();
        if (check.ok && r.seconds > entry.limit_seconds) {
            check.fail("runtime " + std::to_string(r.seconds) + "s exceeds " +
                       std::to_string(entry.limit_seconds) + "s");
        }
        r.passed = check.ok;
        r.detail = check.detail;
        results.push_back(std::move(r));
    }
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

} // namespace qasl::selftest
