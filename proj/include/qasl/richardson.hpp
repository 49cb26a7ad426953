#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "qasl/grassmann.hpp"

namespace qasl {

/// Quotient of O_q(G_{m,n}) by the minors outside an interval [alpha, beta]
/// of the Plücker poset. The quotient basis is the set of standard
/// monomials supported in the interval; multiplication straightens in the
/// full algebra and drops every term that involves an outside element.
///
/// Holds a non-owning pointer to the host algebra, which must outlive it.
struct RichardsonAlgebra {
    const GrassmannAlgebra* host = nullptr;
    PluckerIndex alpha;
    PluckerIndex beta;
    std::vector<PluckerIndex> interval; // sorted
    StraighteningTable restricted;

    bool contains(const PluckerIndex& I) const;
    bool supported(const StdMonomial& mono) const;
};

/// NotComparable unless alpha <= beta.
RichardsonAlgebra richardson(const GrassmannAlgebra& host, const PluckerIndex& alpha,
                             const PluckerIndex& beta);

/// Straighten in the host, then delete terms leaving the interval.
StdExpansion quotient_expand(const RichardsonAlgebra& r,
                             const std::vector<PluckerIndex>& factors);

/// Left/right multiplication of a quotient expansion by generator factors.
StdExpansion quotient_multiply_right(const RichardsonAlgebra& r, const StdExpansion& a,
                                     const std::vector<PluckerIndex>& factors);
StdExpansion quotient_multiply_left(const RichardsonAlgebra& r,
                                    const std::vector<PluckerIndex>& factors,
                                    const StdExpansion& a);

/// Sum over tuple entries minus m(m+1)/2: the Weyl coset length of the
/// minimal representative attached to the tuple.
long coset_length(const PluckerIndex& I);

/// GK dimension sum(beta_k - alpha_k) + 1, certified against
/// rank([alpha,beta]) + 1 and the coset-length difference formula.
int gk_dim(const RichardsonAlgebra& r);

/// Truncated Hilbert data of the quotient: h_d counts weakly increasing
/// chains of length d in the interval; the numerator is reconstructed
/// against (1-t)^krull and checked to terminate.
struct HilbertData {
    std::vector<mpz_class> coefficients; // h_0..h_D
    int krull = 0;
    std::vector<mpz_class> numerator; // P: constant term first
    bool palindromic = false;
};

int hilbert_default_degree(const RichardsonAlgebra& r);
HilbertData hilbert(const RichardsonAlgebra& r, int max_degree);

/// Palindromy of the reconstructed numerator (the Hilbert-series Gorenstein
/// indicator; an indicator, not a proof object).
bool gorenstein_indicator(const RichardsonAlgebra& r);

/// Graded dimension of the quotient in the given degree, computed as
/// dim A_d minus the rank of the degree-d slice of the dropped ideal, both
/// from PBW coordinates (specialized at q = t when given). Degrees <= 2.
std::size_t quotient_dimension(const RichardsonAlgebra& r, int degree,
                               const std::optional<mpq_class>& q_value);

/// ASL/condition-(C) style invariants of the restricted table, relative to
/// the interval sublattice.
AslReport verify_richardson(const RichardsonAlgebra& r);

} // namespace qasl
