#include "compidx/competition.hpp"

#include <unordered_map>

#include "compidx/error.hpp"

namespace compidx {

SimpleGraph competition_graph(const Digraph& d) { return row_graph(d.adjacency()); }

SimpleGraph m_step_competition_graph(const Digraph& d, std::size_t m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "m must be positive");
  return row_graph(bool_power(d.adjacency(), m));
}

std::vector<SimpleGraph> graph_sequence(const Digraph& d, std::size_t m_max) {
  if (m_max == 0) throw Error(ErrorCode::InvalidArgument, "m_max must be positive");
  std::vector<SimpleGraph> out;
  out.reserve(m_max);
  BooleanMatrix power = d.adjacency();
  for (std::size_t m = 1; m <= m_max; ++m) {
    if (m > 1) power = bool_multiply(power, d.adjacency());
    out.push_back(row_graph(power));
  }
  return out;
}

PowerSequence::PowerSequence(const BooleanMatrix& a, std::size_t max_steps) {
  std::unordered_multimap<Hash128, std::size_t, Hash128Hasher> seen;
  BooleanMatrix current = a;
  for (std::size_t t = 1;; ++t) {
    const Hash128 h = hash_words(current.raw(), current.size());
    auto [lo, hi] = seen.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
      if (powers_[it->second - 1] == current) {
        index_ = it->second;
        period_ = t - it->second;
        graphs_.reserve(powers_.size());
        for (const auto& p : powers_) graphs_.push_back(row_graph(p));
        return;
      }
    }
    if (t > max_steps) throw Error(ErrorCode::TooLarge, "no repeat among the first " + std::to_string(max_steps) + " powers");
    seen.emplace(h, t);
    powers_.push_back(current);
    current = bool_multiply(current, a);
  }
}

std::size_t PowerSequence::slot(std::size_t t) const {
  if (t == 0) throw Error(ErrorCode::InvalidArgument, "exponents start at 1");
  if (t <= powers_.size()) return t - 1;
  return index_ + (t - index_) % period_ - 1;
}

CompetitionProfile competition_profile(const Digraph& d) { return competition_profile(PowerSequence(d)); }

CompetitionProfile competition_profile(const PowerSequence& powers) {
  CompetitionProfile profile;
  const std::size_t i = powers.index();
  const std::size_t period = powers.period();
  profile.matrix_index = i;
  profile.matrix_period = period;

  auto tail_has_period = [&](std::size_t p) {
    for (std::size_t t = i; t < i + period; ++t)
      if (!(powers.graph(t) == powers.graph(t + p))) return false;
    return true;
  };
  std::size_t p = period;
  for (std::size_t cand = 1; cand < period; ++cand)
    if (period % cand == 0 && tail_has_period(cand)) {
      p = cand;
      break;
    }
  profile.eventual_graph_period = p;

  std::size_t q = i;
  while (q > 1 && powers.graph(q - 1) == powers.graph(q - 1 + p)) --q;
  profile.cindex = q;

  std::size_t literal = 1;
  while (!(powers.graph(q) == powers.graph(q + literal))) ++literal;
  profile.cperiod_literal = literal;

  for (std::size_t t = 1; t <= i + period; ++t) profile.sequence_hashes.push_back(powers.graph(t).canonical_hash());
  return profile;
}

}  // namespace compidx
