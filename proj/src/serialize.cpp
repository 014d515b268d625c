#include "compidx/serialize.hpp"

namespace compidx {

std::string_view to_string(VertexType type) noexcept {
  switch (type) {
    case VertexType::Type1Only: return "type1";
    case VertexType::Type2Only: return "type2";
    case VertexType::Both: return "both";
  }
  return "?";
}

std::string_view to_string(TerminalKind kind) noexcept {
  return kind == TerminalKind::AllSinks ? "all_sinks" : "empty";
}

nlohmann::json to_json(const SinkSequence& ss) {
  return {{"zeta", ss.zeta}, {"layers", ss.layers}, {"terminal", to_string(ss.terminal)}};
}

nlohmann::json to_json(const CompetitionProfile& profile) {
  return {
      {"cindex", profile.cindex},
      {"cperiod", profile.cperiod_literal},
      {"eventual_period", profile.eventual_graph_period},
      {"matrix_index", profile.matrix_index},
      {"matrix_period", profile.matrix_period},
  };
}

nlohmann::json to_json(const PrimitivityReport& report) {
  nlohmann::json j = {
      {"strongly_connected", report.strongly_connected},
      {"cycle_gcd", report.cycle_gcd},
      {"primitive", report.primitive},
  };
  j["exponent"] = report.exponent ? nlohmann::json(*report.exponent) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json vertex_type_json(std::size_t vertex, VertexType type) {
  return {{"vertex", vertex}, {"type", to_string(type)}};
}

}  // namespace compidx
