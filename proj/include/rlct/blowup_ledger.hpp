#pragma once

// Exponent bookkeeping of the blow-up sequence that proves the counting rule.
//
// After the blow-up of depth j (j = 1 .. m_L) the chart contributes the
// pole-order ratio
//
//   (j r + beta + sum_{s <= L, m_s <= j} (j - m_s) n*_s) / (2 j),
//
// and the terminal chart, reached once every capped shelf is absorbed,
// contributes (r + sum_s n*_s) / 2. The bound is the minimum over all charts.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rlct/counting_core.hpp"
#include "rlct/rational.hpp"

namespace rlct::ledger {

struct ChartCandidate {
  /// Blow-up depth; empty for the terminal chart.
  std::optional<std::int64_t> depth;
  Rational value;
  /// "Step1" for j <= m_1, "Step3-k" for m_k < j <= m_{k+1}, "Step4" terminal.
  std::string stage;

  bool is_terminal() const { return !depth.has_value(); }
};

std::vector<ChartCandidate> chart_candidates(const ProblemSpec& spec);

struct LedgerMinimum {
  Rational value;
  /// Number of charts attaining the minimum. Compared against the theorem's
  /// multiplicity rule in tests, but not guaranteed to coincide with it.
  int advisory_multiplicity = 0;
};

LedgerMinimum ledger_min(const ProblemSpec& spec);
LedgerMinimum ledger_min(const std::vector<ChartCandidate>& candidates);

}  // namespace rlct::ledger
