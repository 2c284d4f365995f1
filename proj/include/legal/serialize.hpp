#pragma once

#include <json.hpp>

#include "legal/construction.hpp"
#include "legal/legal_system.hpp"
#include "legal/pseudorandom.hpp"
#include "legal/random_models.hpp"
#include "legal/search.hpp"

namespace legal {

/// JSON documents carry a "schema" field; vertex sets are hex bitstrings
/// (vertex 0 = least significant bit), pair lists are explicit.
nlohmann::json certificate_to_json(const LegalityCertificate& cert, int n);
nlohmann::json transcript_to_json(const ConstructionTranscript& t);
nlohmann::json report_to_json(const PropertyReport& rep);
nlohmann::json trace_to_json(const ProcessTrace& trace);
nlohmann::json search_result_to_json(const SearchResult& r, int n);
nlohmann::json classification_to_json(const std::vector<GraphClassEntry>& table);

/// Reads back what a replayed verification needs: n, the initial state and
/// the move list (the basis is recomputed).
struct ReplayableSystem {
    int n = 0;
    Method method = Method::dense;
    VertexSet s;
    MoveSet moves;
};
ReplayableSystem system_from_transcript_json(const nlohmann::json& j);

}  // namespace legal
