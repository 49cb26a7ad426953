#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qasl/lattice.hpp"
#include "qasl/qscalar.hpp"

namespace qasl {

/// Formal unit of the monoid M_Pi: Q_{alpha beta} or C_{alpha beta},
/// indexed by lattice element positions.
struct ScalarUnit {
    enum class Kind { Q, C };
    Kind kind = Kind::Q;
    std::size_t alpha = 0;
    std::size_t beta = 0;

    auto operator<=>(const ScalarUnit&) const = default;
};

/// Element of M_Pi in canonical form: only keys with alpha < beta are
/// stored (Q_{beta alpha} folds to Q_{alpha beta}^{-1}, C_{beta alpha} to
/// C_{alpha beta} Q_{beta alpha}), so equal monoid elements have equal maps.
/// Q exponents range over Z, C exponents over N.
class ScalarMonomial {
public:
    static ScalarMonomial one() { return {}; }

    void mul_q(std::size_t alpha, std::size_t beta);
    void mul_c(std::size_t alpha, std::size_t beta);

    bool is_one() const { return exps_.empty(); }
    const std::map<ScalarUnit, long>& exponents() const { return exps_; }

    bool operator==(const ScalarMonomial&) const = default;

    std::string to_string(const FinitePoset& poset) const;

private:
    void bump(const ScalarUnit& unit, long by);

    std::map<ScalarUnit, long> exps_;
};

/// A distributive lattice with unit maps q (all ordered pairs) and c
/// (incomparable ordered pairs), presenting the algebra A_{Pi,q,c}.
struct ToricPresentation {
    FiniteLattice lattice;
    ChainProductRealization realization;
    std::map<std::pair<std::size_t, std::size_t>, QScalar> qmap;
    std::map<std::pair<std::size_t, std::size_t>, QScalar> cmap;

    QScalar q(std::size_t a, std::size_t b) const;
    QScalar c(std::size_t a, std::size_t b) const;

    /// NotDistributive / InconsistentParameters on the paper's parameter
    /// identities: q_aa = 1, q_ab q_ba = 1, c_ab = q_ab c_ba, units nonzero.
    void validate() const;
};

/// Normal form xi * (standard monomial). Exactly one of the scalar slots is
/// set, matching the rewriting mode.
struct ToricNF {
    std::optional<ScalarMonomial> symbolic;
    std::optional<QScalar> numeric;
    std::vector<std::size_t> monomial; // weakly increasing element indices
};

/// Rewrites a word to normal form in A_Pi (symbolic scalars in M_Pi).
/// Strategy: leftmost applicable position; asserts the termination measure
/// on every applied rule.
ToricNF toric_nf_symbolic(const FiniteLattice& lattice, const ChainProductRealization& r,
                          const std::vector<std::size_t>& word);

/// Rewrites a word to normal form in A_{Pi,q,c} (numeric scalars).
ToricNF toric_nf(const ToricPresentation& p, const std::vector<std::size_t>& word);

struct ToricConfluenceReport {
    bool ok = true;
    long overlaps_checked = 0;
    std::vector<std::string> failures;
};

/// Local confluence of every length-3 word: any two distinct first rewrites
/// reach the same (scalar, monomial) pair after deterministic completion.
ToricConfluenceReport confluence_certify(const ToricPresentation& p);

/// Laurent monomial in the quantum torus on irr+(Pi): coeff * prod g^e in
/// the fixed generator order.
struct TorusMonomial {
    QScalar coeff;
    std::vector<long> exps;

    bool operator==(const TorusMonomial&) const = default;
};

struct TorusEmbedding {
    std::vector<std::size_t> generators; // irr+ elements, minimum first
    std::vector<TorusMonomial> image;    // per lattice element
    long relations_verified = 0;
};

/// The localization map of A_{Pi,q,c} into its quantum torus: expresses
/// every X_gamma over irr+ generators and verifies all defining relations
/// on the images. NotConfluent if the presentation fails certification.
TorusEmbedding torus_embedding(const ToricPresentation& p);

/// Multiplication in the quantum torus attached to the embedding.
TorusMonomial torus_multiply(const ToricPresentation& p,
                             const std::vector<std::size_t>& generators,
                             const TorusMonomial& a, const TorusMonomial& b);

/// GK dimension rank(Pi) + 1, cross-checked against |irr(Pi)| + 1.
int gkdim_toric(const ToricPresentation& p);

/// All weakly increasing chains of the given length (element indices).
std::vector<std::vector<std::size_t>> lattice_multichains(const FiniteLattice& lattice,
                                                          int length);

/// The regularity surrogate: the map sending a standard monomial m of
/// length <= max_len to the standard part of nf(gamma * m) is injective.
bool phi_injective(const ToricPresentation& p, std::size_t gamma, int max_len);

/// Commutative presentation q = c = 1 over a distributive lattice.
ToricPresentation commutative_presentation(const FiniteLattice& lattice);

} // namespace qasl
