#pragma once

#include <json.hpp>

#include "evc/characterization.hpp"
#include "evc/defense.hpp"
#include "evc/game.hpp"
#include "evc/graph.hpp"
#include "evc/vertex_cover.hpp"

// JSON views of the result types. Vertices are always written as labels.
namespace evc {

nlohmann::json labels_json(const Graph& g, const VertexSet& s);
nlohmann::json graph_json(const Graph& g);
nlohmann::json cover_json(const Graph& g, const CoverResult& r);
nlohmann::json evc_result_json(const Graph& g, const EvcResult& r);
nlohmann::json char_report_json(const Graph& g, const CharReport& r);
nlohmann::json moves_json(const Graph& g, const MoveSet& moves);
/// {"round":r,"attack":[u,v],"moves":[[f,t],...],"config":[...]}
nlohmann::json round_json(const Graph& g, const RoundRecord& r);

/// Graph from a parsed {"vertices":[...],"edges":[...]} object. Throws ParseError.
Graph graph_from_json(const nlohmann::json& doc);

/// Label of a JSON vertex reference (string or integer). Throws ParseError.
std::string label_from_json(const nlohmann::json& v);

}  // namespace evc
