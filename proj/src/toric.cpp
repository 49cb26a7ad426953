#include "qasl/toric.hpp"

#include <algorithm>
#include <sstream>

namespace qasl {

// ---------------------------------------------------------------------------
// ScalarMonomial

void ScalarMonomial::bump(const ScalarUnit& unit, long by) {
    if (by == 0) return;
    auto [it, inserted] = exps_.emplace(unit, by);
    if (!inserted) {
        it->second += by;
        if (it->second == 0) exps_.erase(it);
    }
}

void ScalarMonomial::mul_q(std::size_t alpha, std::size_t beta) {
    if (alpha == beta) return; // Q_aa = 1
    if (alpha < beta)
        bump({ScalarUnit::Kind::Q, alpha, beta}, 1);
    else
        bump({ScalarUnit::Kind::Q, beta, alpha}, -1); // Q_ba = Q_ab^{-1}
}

void ScalarMonomial::mul_c(std::size_t alpha, std::size_t beta) {
    if (alpha < beta) {
        bump({ScalarUnit::Kind::C, alpha, beta}, 1);
    } else {
        // C_ab = Q_ab C_ba
        bump({ScalarUnit::Kind::C, beta, alpha}, 1);
        mul_q(alpha, beta);
    }
}

std::string ScalarMonomial::to_string(const FinitePoset& poset) const {
    if (exps_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [unit, e] : exps_) {
        if (!first) os << "*";
        first = false;
        os << (unit.kind == ScalarUnit::Kind::Q ? "Q" : "C") << "(" << poset.id(unit.alpha)
           << ";" << poset.id(unit.beta) << ")";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// ToricPresentation

QScalar ToricPresentation::q(std::size_t a, std::size_t b) const {
    auto it = qmap.find({a, b});
    if (it == qmap.end())
        raise(ErrorKind::InvalidInput, "missing q parameter for (" + lattice.poset().id(a) +
                                           "," + lattice.poset().id(b) + ")");
    return it->second;
}

QScalar ToricPresentation::c(std::size_t a, std::size_t b) const {
    auto it = cmap.find({a, b});
    if (it == cmap.end())
        raise(ErrorKind::InvalidInput, "missing c parameter for (" + lattice.poset().id(a) +
                                           "," + lattice.poset().id(b) + ")");
    return it->second;
}

void ToricPresentation::validate() const {
    lattice.require_distributive();
    realization.validate(lattice);
    std::size_t n = lattice.size();
    for (std::size_t a = 0; a < n; ++a) {
        if (q(a, a) != QScalar(1))
            raise(ErrorKind::InconsistentParameters,
                  "q(" + lattice.poset().id(a) + "," + lattice.poset().id(a) + ") != 1");
        for (std::size_t b = 0; b < n; ++b) {
            QScalar qab = q(a, b);
            if (qab.is_zero())
                raise(ErrorKind::InconsistentParameters, "q parameter is zero");
            if (qab * q(b, a) != QScalar(1))
                raise(ErrorKind::InconsistentParameters,
                      "q(" + lattice.poset().id(a) + "," + lattice.poset().id(b) +
                          ") q(b,a) != 1");
            if (!lattice.poset().comparable(a, b)) {
                QScalar cab = c(a, b);
                if (cab.is_zero())
                    raise(ErrorKind::InconsistentParameters, "c parameter is zero");
                if (cab != qab * c(b, a))
                    raise(ErrorKind::InconsistentParameters,
                          "c(" + lattice.poset().id(a) + "," + lattice.poset().id(b) +
                              ") != q(a,b) c(b,a)");
            }
        }
    }
}

ToricPresentation commutative_presentation(const FiniteLattice& lattice) {
    ToricPresentation p;
    p.lattice = lattice;
    p.realization = canonical_realization(lattice);
    for (std::size_t a = 0; a < lattice.size(); ++a)
        for (std::size_t b = 0; b < lattice.size(); ++b) {
            p.qmap[{a, b}] = QScalar(1);
            if (!lattice.poset().comparable(a, b)) p.cmap[{a, b}] = QScalar(1);
        }
    return p;
}

// ---------------------------------------------------------------------------
// Rewriting

namespace {

struct Measure {
    long omega_sum = 0;
    unsigned __int128 omega_sq = 0;
    long inversions = 0;
};

Measure measure_of(const FiniteLattice& lattice, const ChainProductRealization& r,
                   const std::vector<std::size_t>& word) {
    Measure m;
    for (std::size_t x : word) {
        long o = r.omega(x);
        m.omega_sum += o;
        m.omega_sq += static_cast<unsigned __int128>(o) * static_cast<unsigned __int128>(o);
    }
    for (std::size_t t = 0; t < word.size(); ++t)
        for (std::size_t u = t + 1; u < word.size(); ++u)
            if (lattice.poset().less(word[u], word[t])) ++m.inversions;
    return m;
}

// Shared engine; Swap/Split are callbacks accumulating the scalar.
template <typename OnSwap, typename OnSplit>
std::vector<std::size_t> rewrite_word(const FiniteLattice& lattice,
                                      const ChainProductRealization& r,
                                      std::vector<std::size_t> word, OnSwap&& on_swap,
                                      OnSplit&& on_split) {
    for (std::size_t x : word)
        if (x >= lattice.size())
            raise(ErrorKind::InvalidInput, "word element out of range");
    Measure before = measure_of(lattice, r, word);
    for (;;) {
        std::size_t pos = word.size();
        for (std::size_t t = 0; t + 1 < word.size(); ++t) {
            std::size_t x = word[t], y = word[t + 1];
            if (!lattice.poset().comparable(x, y) || lattice.poset().less(y, x)) {
                pos = t;
                break;
            }
        }
        if (pos == word.size()) break;
        std::size_t x = word[pos], y = word[pos + 1];
        if (lattice.poset().comparable(x, y)) {
            on_swap(x, y); // X_x X_y = q_xy X_y X_x
            std::swap(word[pos], word[pos + 1]);
            Measure after = measure_of(lattice, r, word);
            if (after.omega_sum != before.omega_sum || after.omega_sq != before.omega_sq ||
                after.inversions >= before.inversions)
                raise(ErrorKind::InvariantViolation,
                      "termination measure violated by a comparable swap");
            before = after;
        } else {
            on_split(x, y); // X_x X_y = c_xy X_{x^y} X_{xvy}
            word[pos] = lattice.meet(x, y);
            word[pos + 1] = lattice.join(x, y);
            Measure after = measure_of(lattice, r, word);
            if (after.omega_sum != before.omega_sum || after.omega_sq <= before.omega_sq)
                raise(ErrorKind::InvariantViolation,
                      "termination measure violated by an incomparable split");
            before = after;
        }
    }
    return word;
}

} // namespace

ToricNF toric_nf_symbolic(const FiniteLattice& lattice, const ChainProductRealization& r,
                          const std::vector<std::size_t>& word) {
    lattice.require_distributive();
    ToricNF nf;
    ScalarMonomial xi;
    nf.monomial = rewrite_word(
        lattice, r, word, [&](std::size_t x, std::size_t y) { xi.mul_q(x, y); },
        [&](std::size_t x, std::size_t y) { xi.mul_c(x, y); });
    nf.symbolic = std::move(xi);
    return nf;
}

ToricNF toric_nf(const ToricPresentation& p, const std::vector<std::size_t>& word) {
    p.validate();
    ToricNF nf;
    QScalar xi(1);
    nf.monomial = rewrite_word(
        p.lattice, p.realization, word,
        [&](std::size_t x, std::size_t y) { xi *= p.q(x, y); },
        [&](std::size_t x, std::size_t y) { xi *= p.c(x, y); });
    nf.numeric = std::move(xi);
    return nf;
}

// ---------------------------------------------------------------------------
// Confluence

namespace {

// One forced rewrite at position t of the word, scalar into xi.
void apply_at(const ToricPresentation& p, std::vector<std::size_t>& word, std::size_t t,
              QScalar& xi) {
    std::size_t x = word[t], y = word[t + 1];
    if (p.lattice.poset().comparable(x, y)) {
        xi *= p.q(x, y);
        std::swap(word[t], word[t + 1]);
    } else {
        xi *= p.c(x, y);
        word[t] = p.lattice.meet(x, y);
        word[t + 1] = p.lattice.join(x, y);
    }
}

bool applicable(const ToricPresentation& p, const std::vector<std::size_t>& word,
                std::size_t t) {
    std::size_t x = word[t], y = word[t + 1];
    return !p.lattice.poset().comparable(x, y) || p.lattice.poset().less(y, x);
}

} // namespace

ToricConfluenceReport confluence_certify(const ToricPresentation& p) {
    p.validate();
    ToricConfluenceReport report;
    std::size_t n = p.lattice.size();
    std::vector<std::size_t> word(3);
    for (word[0] = 0; word[0] < n; ++word[0])
        for (word[1] = 0; word[1] < n; ++word[1])
            for (word[2] = 0; word[2] < n; ++word[2]) {
                bool a0 = applicable(p, word, 0);
                bool a1 = applicable(p, word, 1);
                if (!a0 || !a1) continue;
                ++report.overlaps_checked;
                auto run = [&](std::size_t t) {
                    std::vector<std::size_t> w = word;
                    QScalar xi(1);
                    apply_at(p, w, t, xi);
                    ToricNF nf = toric_nf(p, w);
                    return std::make_pair(xi * *nf.numeric, nf.monomial);
                };
                auto [s0, m0] = run(0);
                auto [s1, m1] = run(1);
                if (s0 != s1 || m0 != m1) {
                    report.ok = false;
                    std::string w;
                    for (std::size_t x : word) w += p.lattice.poset().id(x) + " ";
                    report.failures.push_back("overlap diverges on word " + w);
                }
            }
    return report;
}

// ---------------------------------------------------------------------------
// Quantum torus

TorusMonomial torus_multiply(const ToricPresentation& p,
                             const std::vector<std::size_t>& generators,
                             const TorusMonomial& a, const TorusMonomial& b) {
    TorusMonomial r;
    r.coeff = a.coeff * b.coeff;
    r.exps.resize(generators.size());
    // Crossing factor from moving each b-generator left past the higher
    // a-generators: prod_{j>i} q(g_j, g_i)^{a_j b_i}.
    for (std::size_t i = 0; i < generators.size(); ++i) {
        r.exps[i] = a.exps[i] + b.exps[i];
        for (std::size_t j = i + 1; j < generators.size(); ++j) {
            long e = a.exps[j] * b.exps[i];
            if (e != 0) r.coeff *= p.q(generators[j], generators[i]).pow(e);
        }
    }
    return r;
}

namespace {

TorusMonomial torus_inverse(const ToricPresentation& p,
                            const std::vector<std::size_t>& generators,
                            const TorusMonomial& m) {
    TorusMonomial t;
    t.coeff = QScalar(1);
    t.exps.resize(m.exps.size());
    for (std::size_t i = 0; i < m.exps.size(); ++i) t.exps[i] = -m.exps[i];
    TorusMonomial unit = torus_multiply(p, generators, m, t);
    t.coeff = unit.coeff.inverse();
    return t;
}

} // namespace

TorusEmbedding torus_embedding(const ToricPresentation& p) {
    auto confluence = confluence_certify(p);
    if (!confluence.ok)
        raise(ErrorKind::NotConfluent,
              "presentation fails confluence: " + confluence.failures.front());

    TorusEmbedding out;
    out.generators = join_irreducibles(p.lattice).irr_plus;
    std::size_t k = out.generators.size();
    std::vector<long> gen_slot(p.lattice.size(), -1);
    for (std::size_t i = 0; i < k; ++i) gen_slot[out.generators[i]] = static_cast<long>(i);

    out.image.assign(p.lattice.size(), TorusMonomial{QScalar(0), std::vector<long>(k, 0)});
    for (std::size_t gamma : p.lattice.poset().linear_extension()) {
        if (gen_slot[gamma] >= 0) {
            TorusMonomial m{QScalar(1), std::vector<long>(k, 0)};
            m.exps[static_cast<std::size_t>(gen_slot[gamma])] = 1;
            out.image[gamma] = m;
            continue;
        }
        // gamma is reducible: pick the first pair alpha, beta < gamma with
        // alpha v beta = gamma and invert the defining relation
        // X_alpha X_beta = c_ab X_{a^b} X_gamma.
        bool found = false;
        for (std::size_t alpha = 0; alpha < p.lattice.size() && !found; ++alpha) {
            if (!p.lattice.poset().less(alpha, gamma)) continue;
            for (std::size_t beta = 0; beta < p.lattice.size() && !found; ++beta) {
                if (!p.lattice.poset().less(beta, gamma)) continue;
                if (p.lattice.join(alpha, beta) != gamma) continue;
                if (p.lattice.poset().comparable(alpha, beta)) continue;
                TorusMonomial t =
                    torus_multiply(p, out.generators, out.image[alpha], out.image[beta]);
                TorusMonomial meet_inv =
                    torus_inverse(p, out.generators, out.image[p.lattice.meet(alpha, beta)]);
                TorusMonomial m = torus_multiply(p, out.generators, meet_inv, t);
                m.coeff = m.coeff * p.c(alpha, beta).inverse();
                out.image[gamma] = m;
                found = true;
            }
        }
        if (!found)
            raise(ErrorKind::InvariantViolation,
                  "reducible element admits no join decomposition");
    }

    // Verify every defining relation of A_{Pi,q,c} on the images.
    for (std::size_t a = 0; a < p.lattice.size(); ++a)
        for (std::size_t b = 0; b < p.lattice.size(); ++b) {
            TorusMonomial ab = torus_multiply(p, out.generators, out.image[a], out.image[b]);
            TorusMonomial ba = torus_multiply(p, out.generators, out.image[b], out.image[a]);
            ba.coeff = ba.coeff * p.q(a, b);
            if (!(ab == ba))
                raise(ErrorKind::InvariantViolation,
                      "commutation relation fails in the torus for (" +
                          p.lattice.poset().id(a) + "," + p.lattice.poset().id(b) + ")");
            ++out.relations_verified;
            if (!p.lattice.poset().comparable(a, b)) {
                TorusMonomial mj = torus_multiply(p, out.generators,
                                                  out.image[p.lattice.meet(a, b)],
                                                  out.image[p.lattice.join(a, b)]);
                mj.coeff = mj.coeff * p.c(a, b);
                if (!(ab == mj))
                    raise(ErrorKind::InvariantViolation,
                          "binomial relation fails in the torus for (" +
                              p.lattice.poset().id(a) + "," + p.lattice.poset().id(b) + ")");
                ++out.relations_verified;
            }
        }
    return out;
}

int gkdim_toric(const ToricPresentation& p) {
    p.lattice.require_distributive();
    int rank = p.lattice.poset().rank();
    std::size_t irr = join_irreducibles(p.lattice).irr.size();
    if (static_cast<std::size_t>(rank) != irr)
        raise(ErrorKind::InvariantViolation, "rank(Pi) != |irr(Pi)|");
    return rank + 1;
}

// ---------------------------------------------------------------------------
// Standard monomial enumeration and the regularity surrogate

std::vector<std::vector<std::size_t>> lattice_multichains(const FiniteLattice& lattice,
                                                          int length) {
    std::vector<std::vector<std::size_t>> out;
    if (length == 0) {
        out.push_back({});
        return out;
    }
    std::vector<std::size_t> chain;
    auto dfs = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(chain);
            return;
        }
        for (std::size_t e = 0; e < lattice.size(); ++e) {
            if (!chain.empty() && !lattice.poset().leq(chain.back(), e)) continue;
            chain.push_back(e);
            self(self, remaining - 1);
            chain.pop_back();
        }
    };
    dfs(dfs, length);
    return out;
}

bool phi_injective(const ToricPresentation& p, std::size_t gamma, int max_len) {
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> image_of;
    for (int len = 0; len <= max_len; ++len) {
        for (const auto& mono : lattice_multichains(p.lattice, len)) {
            std::vector<std::size_t> word;
            word.push_back(gamma);
            word.insert(word.end(), mono.begin(), mono.end());
            ToricNF nf = toric_nf(p, word);
            auto [it, inserted] = image_of.emplace(nf.monomial, mono);
            if (!inserted && it->second != mono) return false;
        }
    }
    return true;
}

} // namespace qasl
