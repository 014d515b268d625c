#pragma once

#include <json.hpp>

#include "compidx/competition.hpp"
#include "compidx/connectivity.hpp"
#include "compidx/sink_analysis.hpp"
#include "compidx/structure.hpp"

namespace compidx {

/// {"zeta", "layers", "terminal": "all_sinks" | "empty"}
nlohmann::json to_json(const SinkSequence& ss);
/// {"cindex", "cperiod", "eventual_period", "matrix_index", "matrix_period"}
nlohmann::json to_json(const CompetitionProfile& profile);
nlohmann::json to_json(const PrimitivityReport& report);
/// {"vertex", "type": "type1" | "type2" | "both"}
nlohmann::json vertex_type_json(std::size_t vertex, VertexType type);

std::string_view to_string(VertexType type) noexcept;
std::string_view to_string(TerminalKind kind) noexcept;

}  // namespace compidx
