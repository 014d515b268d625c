#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "compidx/digraph.hpp"

namespace compidx {

// One checker per statement about sink sequences, competition indices and
// periods, walk types and exponents. Every checker re-derives its hypotheses
// from the digraph itself: the partition is re-inferred from non-adjacency,
// acyclicity is recomputed, and so on.
enum class ClaimId {
  P2_1, L2_2, T2_3, T2_4, C2_5, C2_6, L2_7, T2_8,
  P3_1, L3_3, L3_4, L3_5, L3_6, L3_7, T3_8, T3_9,
  P4_1, T4_2, P4_3,
  T5_1, P5_2, C5_3, T5_4,
};

inline constexpr std::array<ClaimId, 23> kAllClaims = {
    ClaimId::P2_1, ClaimId::L2_2, ClaimId::T2_3, ClaimId::T2_4, ClaimId::C2_5, ClaimId::C2_6,
    ClaimId::L2_7, ClaimId::T2_8, ClaimId::P3_1, ClaimId::L3_3, ClaimId::L3_4, ClaimId::L3_5,
    ClaimId::L3_6, ClaimId::L3_7, ClaimId::T3_8, ClaimId::T3_9, ClaimId::P4_1, ClaimId::T4_2,
    ClaimId::P4_3, ClaimId::T5_1, ClaimId::P5_2, ClaimId::C5_3, ClaimId::T5_4,
};

/// "P2.1", "T5.4", ...
std::string_view claim_name(ClaimId id) noexcept;
std::optional<ClaimId> parse_claim(std::string_view name) noexcept;

struct ClaimResult {
  ClaimId claim_id = ClaimId::P2_1;
  bool applicable = false;
  bool passed = false;
  /// Counterexample description when applicable && !passed.
  std::optional<std::string> witness;
  /// Free-form observation tags aggregated by the suite ("cperiod=2", shape labels, ...).
  std::vector<std::string> observations;
};

struct Caps {
  /// Ceiling on pumping thresholds; 0 means 4n^2 + 12.
  std::size_t pump_cap = 0;
  /// Largest n for which walks are enumerated exhaustively by the walk-type cross-check.
  std::size_t walk_enum_n_max = 6;
  /// Largest n for the exact longest-cycle computation behind the cindex bound check.
  std::size_t longest_cycle_n_max = 20;
  /// Walk lengths up to 2n + this are scanned for typed-walk witnesses.
  std::size_t witness_slack = 8;

  std::size_t pump_cap_for(std::size_t n) const noexcept { return pump_cap != 0 ? pump_cap : 4 * n * n + 12; }
};

/// Evaluates every claim against `d`; inapplicable claims are reported with
/// applicable = false rather than skipped. The result lists all 23 claims in
/// kAllClaims order.
std::vector<ClaimResult> check_instance(const Digraph& d, const Caps& caps = {});

/// Evaluates only the listed claims (shared analysis is still computed once).
std::vector<ClaimResult> check_instance(const Digraph& d, const Caps& caps, const std::vector<ClaimId>& only);

}  // namespace compidx
