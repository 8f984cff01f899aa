#pragma once

// Text, JSON and CSV renderings of CLI results. Exact values are always
// emitted as "p/q" (or separate numerator/denominator columns); decimal
// columns are renderings for plotting only.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rlct/blowup_ledger.hpp"
#include "rlct/counting_core.hpp"
#include "rlct/nn_bounds.hpp"
#include "rlct/spec_file.hpp"
#include "rlct/verification.hpp"

namespace rlct::io {

enum class Format { Text, Json, Csv };

Format parse_format(std::string_view name);

struct ResultRecord {
  Rational lambda;
  int multiplicity = 1;
  std::size_t K = 0;
  std::size_t L = 0;
  std::vector<Integer> n_star;
  std::string bound_case;
  std::string assumptions_note;
  Json provenance;
};

ResultRecord make_record(const BoundResult& result, std::string assumptions_note, Json provenance);
Json to_json(const ResultRecord& record);
std::string render(const ResultRecord& record, Format format);

/// {"r", "alpha", "beta", "shelves": [{"m", "n"}, ...]} for the shelves a
/// result actually used.
Json tuple_json(const ProblemSpec& spec, const BoundResult& result);

struct ComparisonRow {
  std::int64_t redundant = 0;  // H - H*
  nn::Comparison comparison;
};

struct ComparisonTable {
  std::string family;
  std::int64_t outputs = 1;
  std::int64_t inputs = 1;
  std::int64_t true_hidden = 1;
  std::vector<ComparisonRow> rows;
  nn::CrossoverScan crossover;
};

std::string render(const ComparisonTable& table, Format format);

struct FigureRow {
  std::string family;
  Point point = Point::P1;
  std::int64_t outputs = 1;
  std::int64_t inputs = 1;
  std::int64_t true_hidden = 0;
  std::int64_t hidden = 1;
  Rational lambda;
};

inline constexpr std::string_view kFigureHeader =
    "family,point,M,N,H_star,H,lambda_num,lambda_den,lambda_decimal";

std::string render_figure_csv(const std::vector<FigureRow>& rows);

struct LedgerTable {
  std::vector<ledger::ChartCandidate> candidates;
  ledger::LedgerMinimum minimum;
  int theorem_multiplicity = 1;
};

std::string render(const LedgerTable& table, Format format);

std::string render(const verify::Report& report, Format format);

}  // namespace rlct::io
