#include "qasl/richardson.hpp"

#include <algorithm>

#include "qasl/linalg.hpp"

namespace qasl {

bool RichardsonAlgebra::contains(const PluckerIndex& I) const {
    return std::binary_search(interval.begin(), interval.end(), I);
}

bool RichardsonAlgebra::supported(const StdMonomial& mono) const {
    for (const auto& I : mono)
        if (!contains(I)) return false;
    return true;
}

RichardsonAlgebra richardson(const GrassmannAlgebra& host, const PluckerIndex& alpha,
                             const PluckerIndex& beta) {
    check_plucker_shape(alpha, host.m(), host.n());
    check_plucker_shape(beta, host.m(), host.n());
    if (!plucker_leq(alpha, beta))
        raise(ErrorKind::NotComparable,
              alpha.to_string() + " is not below " + beta.to_string());

    RichardsonAlgebra r;
    r.host = &host;
    r.alpha = alpha;
    r.beta = beta;
    // interval_and_complement also certifies the ideal/sublattice structure
    // of the split on the host lattice.
    auto split = interval_and_complement(host.poset().lattice,
                                         host.poset().index_of(alpha),
                                         host.poset().index_of(beta));
    for (std::size_t x : split.interval) r.interval.push_back(host.poset().elements[x]);
    std::sort(r.interval.begin(), r.interval.end());

    const StraighteningTable& full = host.straightening_table();
    r.restricted.m = full.m;
    r.restricted.n = full.n;
    auto drop = [&](const StdExpansion& e) {
        StdExpansion out;
        for (const auto& [mono, c] : e.terms)
            if (r.supported(mono)) out.terms.emplace(mono, c);
        return out;
    };
    for (const auto& [key, expansion] : full.straightening) {
        if (!r.contains(key.first) || !r.contains(key.second)) continue;
        r.restricted.straightening.emplace(key, drop(expansion));
    }
    for (const auto& [key, entry] : full.commutation) {
        if (!r.contains(key.first) || !r.contains(key.second)) continue;
        StraighteningTable::Commutation c{entry.qpow, drop(entry.tail)};
        r.restricted.commutation.emplace(key, std::move(c));
    }
    return r;
}

StdExpansion quotient_expand(const RichardsonAlgebra& r,
                             const std::vector<PluckerIndex>& factors) {
    for (const auto& I : factors)
        if (!r.contains(I))
            raise(ErrorKind::InvalidInput,
                  "factor [" + I.to_string() + "] lies outside the interval");
    StdExpansion full = r.host->expand_in_std(factors);
    StdExpansion out;
    for (const auto& [mono, c] : full.terms)
        if (r.supported(mono)) out.terms.emplace(mono, c);
    return out;
}

StdExpansion quotient_multiply_right(const RichardsonAlgebra& r, const StdExpansion& a,
                                     const std::vector<PluckerIndex>& factors) {
    StdExpansion out;
    for (const auto& [mono, c] : a.terms) {
        std::vector<PluckerIndex> word = mono;
        word.insert(word.end(), factors.begin(), factors.end());
        StdExpansion part = quotient_expand(r, word);
        for (const auto& [m2, c2] : part.terms) out.add(m2, c * c2);
    }
    return out;
}

StdExpansion quotient_multiply_left(const RichardsonAlgebra& r,
                                    const std::vector<PluckerIndex>& factors,
                                    const StdExpansion& a) {
    StdExpansion out;
    for (const auto& [mono, c] : a.terms) {
        std::vector<PluckerIndex> word = factors;
        word.insert(word.end(), mono.begin(), mono.end());
        StdExpansion part = quotient_expand(r, word);
        for (const auto& [m2, c2] : part.terms) out.add(m2, c * c2);
    }
    return out;
}

long coset_length(const PluckerIndex& I) {
    long m = static_cast<long>(I.rows.size());
    long sum = 0;
    for (int v : I.rows) sum += v;
    return sum - m * (m + 1) / 2;
}

int gk_dim(const RichardsonAlgebra& r) {
    long by_formula = 1;
    for (std::size_t k = 0; k < r.alpha.rows.size(); ++k)
        by_formula += r.beta.rows[k] - r.alpha.rows[k];

    // rank of the interval as an induced subposet; the interval is sorted
    // lexicographically, which extends the componentwise order, so one
    // left-to-right pass settles the longest-chain DP
    int rank = 0;
    {
        std::vector<int> rk(r.interval.size(), 0);
        for (std::size_t i = 0; i < r.interval.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (plucker_leq(r.interval[j], r.interval[i]))
                    rk[i] = std::max(rk[i], rk[j] + 1);
        for (int v : rk) rank = std::max(rank, v);
    }
    long by_rank = rank + 1;
    long by_length = coset_length(r.beta) - coset_length(r.alpha) + 1;
    if (by_formula != by_rank || by_formula != by_length)
        raise(ErrorKind::InvariantViolation,
              "GK dimension formulas disagree: " + std::to_string(by_formula) + " vs rank+1 " +
                  std::to_string(by_rank) + " vs length " + std::to_string(by_length));
    return static_cast<int>(by_formula);
}

int hilbert_default_degree(const RichardsonAlgebra& r) {
    return gk_dim(r) - 1 + static_cast<int>(r.interval.size()) + 2;
}

HilbertData hilbert(const RichardsonAlgebra& r, int max_degree) {
    if (max_degree < 1) raise(ErrorKind::InvalidInput, "hilbert degree must be positive");
    HilbertData out;
    out.krull = gk_dim(r);

    // Multichain transfer count within the interval.
    std::size_t k = r.interval.size();
    std::vector<mpz_class> ending(k, 1); // chains of length 1 ending at x
    out.coefficients.push_back(1);       // h_0
    mpz_class h1 = 0;
    for (const auto& c : ending) h1 += c;
    out.coefficients.push_back(h1);
    for (int d = 2; d <= max_degree; ++d) {
        std::vector<mpz_class> next(k, 0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (plucker_leq(r.interval[j], r.interval[i])) next[i] += ending[j];
        ending = std::move(next);
        mpz_class total = 0;
        for (const auto& c : ending) total += c;
        out.coefficients.push_back(total);
    }

    // Candidate numerator = (sum h_d t^d)(1-t)^krull, truncated at degree
    // max_degree; every coefficient up to the cut is exact.
    std::vector<mpz_class> binom(static_cast<std::size_t>(out.krull) + 1, 0);
    binom[0] = 1;
    for (int i = 1; i <= out.krull; ++i)
        for (int j = i; j >= 1; --j) binom[j] += binom[j - 1];
    std::vector<mpz_class> cand(static_cast<std::size_t>(max_degree) + 1, 0);
    for (int j = 0; j <= max_degree; ++j)
        for (int i = 0; i <= out.krull && i <= j; ++i) {
            mpz_class term = binom[i] * out.coefficients[static_cast<std::size_t>(j - i)];
            if (i % 2 == 1) term = -term;
            cand[static_cast<std::size_t>(j)] += term;
        }

    int top = -1;
    for (int j = 0; j <= max_degree; ++j)
        if (cand[static_cast<std::size_t>(j)] != 0) top = j;
    if (top > max_degree - (out.krull + 2))
        raise(ErrorKind::ReconstructionFailed,
              "trailing numerator coefficients do not vanish by degree " +
                  std::to_string(max_degree) + "; increase the degree bound");
    out.numerator.assign(cand.begin(), cand.begin() + top + 1);
    if (out.numerator.empty()) out.numerator.push_back(0);

    out.palindromic = true;
    for (std::size_t j = 0; j < out.numerator.size(); ++j)
        if (out.numerator[j] != out.numerator[out.numerator.size() - 1 - j])
            out.palindromic = false;
    return out;
}

bool gorenstein_indicator(const RichardsonAlgebra& r) {
    return hilbert(r, hilbert_default_degree(r)).palindromic;
}

namespace {

QMatrixData specialized(const QMatrixData& m, const std::optional<mpq_class>& q_value) {
    if (!q_value) return m;
    QMatrixData out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        out[i].reserve(m[i].size());
        for (const auto& x : m[i]) out[i].emplace_back(QScalar(mpq_class(x.specialize(*q_value))));
    }
    return out;
}

} // namespace

std::size_t quotient_dimension(const RichardsonAlgebra& r, int degree,
                               const std::optional<mpq_class>& q_value) {
    if (degree < 0 || degree > 2)
        raise(ErrorKind::InvalidInput, "quotient_dimension supports degrees 0..2");
    if (degree == 0) return 1;
    const GrassmannAlgebra& g = *r.host;

    // Spanning set of the dropped ideal in this degree: all ordered products
    // with at least one factor outside the interval.
    std::vector<std::vector<PluckerIndex>> ideal_products;
    if (degree == 1) {
        for (const auto& I : g.elements())
            if (!r.contains(I)) ideal_products.push_back({I});
    } else {
        for (const auto& I : g.elements())
            for (const auto& J : g.elements())
                if (!r.contains(I) || !r.contains(J)) ideal_products.push_back({I, J});
    }
    auto monos = g.standard_monomials(degree);

    std::map<Word, std::size_t> row_of;
    std::vector<PbwElement> all_columns;
    for (const auto& mono : monos) {
        all_columns.push_back(g.product(mono));
        for (const auto& [w, c] : all_columns.back().terms()) row_of.emplace(w, row_of.size());
    }
    std::vector<PbwElement> ideal_columns;
    for (const auto& p : ideal_products) {
        ideal_columns.push_back(g.product(p));
        for (const auto& [w, c] : ideal_columns.back().terms())
            row_of.emplace(w, row_of.size());
    }
    auto to_matrix = [&](const std::vector<PbwElement>& cols) {
        QMatrixData m(cols.size(), QVector(row_of.size()));
        for (std::size_t i = 0; i < cols.size(); ++i)
            for (const auto& [w, c] : cols[i].terms()) m[i][row_of.at(w)] = c;
        return m; // columns stored as rows; rank is transpose-invariant
    };
    std::size_t dim_full = matrix_rank(specialized(to_matrix(all_columns), q_value));
    std::size_t dim_ideal = matrix_rank(specialized(to_matrix(ideal_columns), q_value));
    if (dim_ideal > dim_full)
        raise(ErrorKind::InvariantViolation, "ideal rank exceeds algebra rank");
    return dim_full - dim_ideal;
}

AslReport verify_richardson(const RichardsonAlgebra& r) {
    AslReport report;
    auto interval_leq = [](const PluckerIndex& a, const PluckerIndex& b) {
        return plucker_leq(a, b);
    };

    for (const auto& [key, expansion] : r.restricted.straightening) {
        const auto& [I, J] = key;
        StdMonomial meet_join{plucker_meet(I, J), plucker_join(I, J)};
        if (!r.contains(meet_join[0]) || !r.contains(meet_join[1]))
            report.violation("interval is not closed under meet/join");
        QScalar lead = expansion.coefficient(meet_join);
        auto pure = lead.as_pure_q_power();
        if (!pure || pure->first != 1)
            report.violation("restricted leading coefficient is not +q^e for ([" +
                             I.to_string() + "],[" + J.to_string() + "])");
        for (const auto& [mono, c] : expansion.terms) {
            if (!r.supported(mono))
                report.violation("restricted expansion leaves the interval");
            if (!(interval_leq(mono[0], I) && mono[0] != I && interval_leq(mono[0], J) &&
                  mono[0] != J && interval_leq(I, mono[1]) && mono[1] != I &&
                  interval_leq(J, mono[1]) && mono[1] != J))
                report.violation("restricted support law fails for ([" + I.to_string() +
                                 "],[" + J.to_string() + "])");
        }
    }
    for (const auto& [key, entry] : r.restricted.commutation) {
        const auto& [I, J] = key;
        auto pure = entry.qpow.as_pure_q_power();
        if (!pure || pure->first != 1)
            report.violation("restricted commutation factor is not +q^f");
        StdMonomial meet_join{plucker_meet(I, J), plucker_join(I, J)};
        if (!entry.tail.coefficient(meet_join).is_zero())
            report.violation("restricted commutation tail hits the meet-join term");
    }
    report.note("restricted table: " + std::to_string(r.restricted.straightening.size()) +
                " straightening entries over an interval of size " +
                std::to_string(r.interval.size()));
    return report;
}

} // namespace qasl
