#include "qasl/json_io.hpp"

#include <algorithm>

namespace qasl {

namespace {

std::string tuple_key(const std::vector<int>& t) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s;
}

json monomial_to_json(const StdMonomial& mono) {
    json arr = json::array();
    for (const auto& I : mono) arr.push_back(I.to_string());
    return arr;
}

StdMonomial monomial_from_json(const json& j) {
    StdMonomial mono;
    for (const auto& piece : j) mono.push_back(PluckerIndex::parse(piece.get<std::string>()));
    return mono;
}

} // namespace

json lattice_to_json(const FiniteLattice& lattice) {
    json j;
    j["elements"] = json::array();
    for (const auto& id : lattice.poset().elements()) j["elements"].push_back(id);
    j["covers"] = json::array();
    for (const auto& [a, b] : lattice.poset().cover_pairs())
        j["covers"].push_back(json::array({lattice.poset().id(a), lattice.poset().id(b)}));
    return j;
}

FiniteLattice lattice_from_json(const json& j) {
    if (j.contains("chain_product")) {
        std::vector<int> sizes = j.at("chain_product").at("sizes").get<std::vector<int>>();
        if (!j.contains("members")) return chain_product_lattice(sizes);
        // Sublattice of the chain product on the listed member tuples.
        std::vector<std::vector<int>> members;
        for (const auto& row : j.at("members")) members.push_back(row.get<std::vector<int>>());
        std::vector<std::string> ids;
        for (const auto& t : members) {
            if (t.size() != sizes.size())
                raise(ErrorKind::InvalidInput, "member arity mismatch");
            for (std::size_t k = 0; k < t.size(); ++k)
                if (t[k] < 1 || t[k] > sizes[k])
                    raise(ErrorKind::InvalidInput, "member entry out of chain range");
            ids.push_back(tuple_key(t));
        }
        std::vector<std::vector<bool>> leq(members.size(),
                                           std::vector<bool>(members.size(), false));
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = 0; b < members.size(); ++b) {
                bool le = true;
                for (std::size_t k = 0; k < sizes.size() && le; ++k)
                    le = members[a][k] <= members[b][k];
                leq[a][b] = le;
            }
        return FiniteLattice::from_poset(FinitePoset::from_leq(std::move(ids), std::move(leq)));
    }
    std::vector<std::string> ids;
    for (const auto& e : j.at("elements")) ids.push_back(e.get<std::string>());
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& c : j.at("covers"))
        covers.emplace_back(c.at(0).get<std::string>(), c.at(1).get<std::string>());
    return FiniteLattice::from_poset(FinitePoset::from_covers(std::move(ids), covers));
}

json realization_to_json(const ChainProductRealization& r) {
    json j;
    j["d"] = r.d;
    j["sizes"] = r.sizes;
    j["N"] = r.N;
    j["increasing_images"] = r.increasing_images;
    j["iota"] = r.iota;
    return j;
}

ChainProductRealization realization_from_json(const json& j) {
    ChainProductRealization r;
    r.d = j.at("d").get<std::size_t>();
    r.sizes = j.at("sizes").get<std::vector<int>>();
    r.N = j.at("N").get<long>();
    r.increasing_images = j.at("increasing_images").get<bool>();
    r.iota = j.at("iota").get<std::vector<std::vector<int>>>();
    return r;
}

json expansion_to_json(const StdExpansion& e) {
    json arr = json::array();
    for (const auto& [mono, c] : e.terms) {
        json term;
        term["monomial"] = monomial_to_json(mono);
        term["coeff"] = c.to_string();
        arr.push_back(term);
    }
    return arr;
}

StdExpansion expansion_from_json(const json& j) {
    StdExpansion e;
    for (const auto& term : j)
        e.add(monomial_from_json(term.at("monomial")),
              QScalar::parse(term.at("coeff").get<std::string>()));
    return e;
}

json table_to_json(const StraighteningTable& table) {
    json j;
    j["m"] = table.m;
    j["n"] = table.n;
    j["straightening"] = json::array();
    for (const auto& [key, e] : table.straightening) {
        json entry;
        entry["I"] = key.first.to_string();
        entry["J"] = key.second.to_string();
        entry["terms"] = expansion_to_json(e);
        j["straightening"].push_back(entry);
    }
    j["commutation"] = json::array();
    for (const auto& [key, c] : table.commutation) {
        json entry;
        entry["I"] = key.first.to_string();
        entry["J"] = key.second.to_string();
        entry["qpow"] = c.qpow.to_string();
        entry["tail"] = expansion_to_json(c.tail);
        j["commutation"].push_back(entry);
    }
    return j;
}

StraighteningTable table_from_json(const json& j) {
    StraighteningTable table;
    table.m = j.at("m").get<int>();
    table.n = j.at("n").get<int>();
    for (const auto& entry : j.at("straightening")) {
        auto I = PluckerIndex::parse(entry.at("I").get<std::string>());
        auto J = PluckerIndex::parse(entry.at("J").get<std::string>());
        table.straightening.emplace(std::make_pair(I, J),
                                    expansion_from_json(entry.at("terms")));
    }
    for (const auto& entry : j.at("commutation")) {
        auto I = PluckerIndex::parse(entry.at("I").get<std::string>());
        auto J = PluckerIndex::parse(entry.at("J").get<std::string>());
        StraighteningTable::Commutation c;
        c.qpow = QScalar::parse(entry.at("qpow").get<std::string>());
        c.tail = expansion_from_json(entry.at("tail"));
        table.commutation.emplace(std::make_pair(I, J), std::move(c));
    }
    return table;
}

json presentation_to_json(const ToricPresentation& p) {
    json j;
    j["lattice"] = lattice_to_json(p.lattice);
    j["realization"] = realization_to_json(p.realization);
    j["q"] = json::array();
    for (const auto& [key, v] : p.qmap)
        j["q"].push_back(json::array({p.lattice.poset().id(key.first),
                                      p.lattice.poset().id(key.second), v.to_string()}));
    j["c"] = json::array();
    for (const auto& [key, v] : p.cmap)
        j["c"].push_back(json::array({p.lattice.poset().id(key.first),
                                      p.lattice.poset().id(key.second), v.to_string()}));
    return j;
}

ToricPresentation presentation_from_json(const json& j) {
    if (j.contains("presentation")) return presentation_from_json(j.at("presentation"));
    ToricPresentation p;
    p.lattice = lattice_from_json(j.at("lattice"));
    if (j.contains("realization"))
        p.realization = realization_from_json(j.at("realization"));
    else
        p.realization = canonical_realization(p.lattice);
    for (const auto& row : j.at("q")) {
        std::size_t a = p.lattice.poset().index(row.at(0).get<std::string>());
        std::size_t b = p.lattice.poset().index(row.at(1).get<std::string>());
        p.qmap[{a, b}] = QScalar::parse(row.at(2).get<std::string>());
    }
    for (const auto& row : j.at("c")) {
        std::size_t a = p.lattice.poset().index(row.at(0).get<std::string>());
        std::size_t b = p.lattice.poset().index(row.at(1).get<std::string>());
        p.cmap[{a, b}] = QScalar::parse(row.at(2).get<std::string>());
    }
    return p;
}

json hilbert_to_json(const HilbertData& h) {
    json j;
    j["krull"] = h.krull;
    j["coefficients"] = json::array();
    for (const auto& c : h.coefficients) j["coefficients"].push_back(c.get_str());
    j["numerator"] = json::array();
    for (const auto& c : h.numerator) j["numerator"].push_back(c.get_str());
    j["palindromic"] = h.palindromic;
    return j;
}

json torus_embedding_to_json(const ToricPresentation& p, const TorusEmbedding& e) {
    json j;
    j["generators"] = json::array();
    for (std::size_t g : e.generators) j["generators"].push_back(p.lattice.poset().id(g));
    j["images"] = json::array();
    for (std::size_t x = 0; x < e.image.size(); ++x) {
        json img;
        img["element"] = p.lattice.poset().id(x);
        img["coeff"] = e.image[x].coeff.to_string();
        img["exponents"] = e.image[x].exps;
        j["images"].push_back(img);
    }
    j["relations_verified"] = e.relations_verified;
    return j;
}

json lattice_analysis_to_json(const FiniteLattice& lattice) {
    json j;
    j["size"] = lattice.size();
    j["rank"] = lattice.poset().rank();
    j["distributive"] = lattice.is_distributive();
    j["minimum"] = lattice.poset().id(lattice.minimum());
    j["maximum"] = lattice.poset().id(lattice.maximum());
    auto ji = join_irreducibles(lattice);
    j["join_irreducibles"] = json::array();
    for (std::size_t x : ji.irr) j["join_irreducibles"].push_back(lattice.poset().id(x));
    if (lattice.is_distributive()) {
        auto cert = birkhoff_check(lattice);
        j["birkhoff"] = {{"downsets", cert.downset_count},
                         {"rank_equals_irreducibles", true}};
        auto r = canonical_realization(lattice);
        j["realization"] = realization_to_json(r);
        WeightFiltration f = weight_filtration(lattice, r);
        j["max_omega"] = f.M;
        json weights = json::object();
        for (std::size_t x = 0; x < lattice.size(); ++x)
            weights[lattice.poset().id(x)] = f.weights[x];
        j["weights"] = weights;
    }
    return j;
}

} // namespace qasl
