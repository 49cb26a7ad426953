#pragma once

#include <json.hpp>

#include "qasl/degeneration.hpp"
#include "qasl/grassmann.hpp"
#include "qasl/richardson.hpp"
#include "qasl/toric.hpp"

namespace qasl {

using nlohmann::json;

/// Scalars serialize as canonical strings of the Q(q) grammar; tuples as
/// comma-joined integers. Every emitter has a parser that reproduces an
/// equal in-memory object.

json lattice_to_json(const FiniteLattice& lattice);
FiniteLattice lattice_from_json(const json& j);

json realization_to_json(const ChainProductRealization& r);
ChainProductRealization realization_from_json(const json& j);

json expansion_to_json(const StdExpansion& e);
StdExpansion expansion_from_json(const json& j);

json table_to_json(const StraighteningTable& table);
StraighteningTable table_from_json(const json& j);

json presentation_to_json(const ToricPresentation& p);
ToricPresentation presentation_from_json(const json& j);

json hilbert_to_json(const HilbertData& h);
json torus_embedding_to_json(const ToricPresentation& p, const TorusEmbedding& e);

json lattice_analysis_to_json(const FiniteLattice& lattice);

} // namespace qasl
