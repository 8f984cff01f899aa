#include "rlct/report.hpp"

#include <sstream>

#include "rlct/error.hpp"

namespace rlct::io {

namespace {

Json integer_json(const Integer& value) {
  if (value.fits_slong_p()) return Json(value.get_si());
  return Json(value.get_str());
}

std::string joined(const std::vector<Integer>& values, std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += separator;
    out += values[i].get_str();
  }
  return out;
}

std::string depth_text(const ledger::ChartCandidate& c) {
  return c.depth ? std::to_string(*c.depth) : std::string("Terminal");
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw Error(ErrorCode::InvalidArgument, "unknown format '" + std::string(name) + "'");
}

ResultRecord make_record(const BoundResult& result, std::string assumptions_note, Json provenance) {
  ResultRecord record;
  record.lambda = result.lambda_bound;
  record.multiplicity = result.multiplicity;
  record.K = result.K;
  record.L = result.L;
  record.n_star = result.n_star;
  record.bound_case = std::string(to_string(result.bound_case));
  record.assumptions_note = std::move(assumptions_note);
  record.provenance = std::move(provenance);
  return record;
}

Json to_json(const ResultRecord& record) {
  Json out;
  out["lambda"] = record.lambda.to_string();
  out["lambda_decimal"] = record.lambda.to_decimal();
  out["multiplicity"] = record.multiplicity;
  out["K"] = record.K;
  out["L"] = record.L;
  Json n_star = Json::array();
  for (const auto& n : record.n_star) n_star.push_back(integer_json(n));
  out["n_star"] = std::move(n_star);
  out["case"] = record.bound_case;
  out["assumptions_note"] = record.assumptions_note;
  out["provenance"] = record.provenance;
  return out;
}

std::string render(const ResultRecord& record, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Json:
      os << to_json(record).dump(2) << "\n";
      break;
    case Format::Csv:
      os << "lambda,lambda_num,lambda_den,lambda_decimal,multiplicity,K,L,n_star,case\n"
         << record.lambda.to_string() << "," << record.lambda.numerator().get_str() << ","
         << record.lambda.denominator().get_str() << "," << record.lambda.to_decimal() << ","
         << record.multiplicity << "," << record.K << "," << record.L << ","
         << joined(record.n_star, ";") << "," << record.bound_case << "\n";
      break;
    case Format::Text:
      os << "lambda        " << record.lambda << "  (" << record.lambda.to_decimal() << ")\n"
         << "multiplicity  " << record.multiplicity << "\n"
         << "K             " << record.K << "\n"
         << "L             " << record.L << "\n"
         << "n_star        " << joined(record.n_star, " ") << "\n"
         << "case          " << record.bound_case << "\n"
         << "note          " << record.assumptions_note << "\n";
      break;
  }
  return os.str();
}

Json tuple_json(const ProblemSpec& spec, const BoundResult& result) {
  Json out;
  out["r"] = spec.rank;
  out["alpha"] = spec.demand;
  out["beta"] = spec.budget;
  Json shelves = Json::array();
  for (const auto& shelf : result.shelves) {
    Json item;
    item["m"] = shelf.price;
    item["n"] = integer_json(shelf.inventory);
    shelves.push_back(std::move(item));
  }
  out["shelves"] = std::move(shelves);
  out["gamma"] = spec.shelves.is_finite() ? Json(*spec.shelves.size()) : Json("infinite");
  return out;
}

std::string render(const ComparisonTable& table, Format format) {
  const auto& scan = table.crossover;
  // Threshold 0: P2 never wins. No flip otherwise: P2 never loses in the window.
  const std::string summary = scan.threshold == 0 ? "p1_always"
                              : scan.flips == 0   ? "no_crossover"
                              : scan.multiple_flips() ? "crossover_multiple_flips"
                                                      : "crossover";
  std::ostringstream os;
  if (format == Format::Json) {
    Json out;
    out["family"] = table.family;
    out["M"] = table.outputs;
    out["N"] = table.inputs;
    out["H_star"] = table.true_hidden;
    Json rows = Json::array();
    for (const auto& row : table.rows) {
      Json r;
      r["H_minus_Hstar"] = row.redundant;
      r["lambda_P1"] = row.comparison.lambda_p1.to_string();
      r["lambda_P2"] = row.comparison.lambda_p2.to_string();
      r["winner"] = std::string(nn::to_string(row.comparison.smaller));
      rows.push_back(std::move(r));
    }
    out["rows"] = std::move(rows);
    Json cross;
    cross["status"] = summary;
    cross["threshold"] = scan.threshold;
    cross["strict_threshold"] = scan.strict_threshold;
    cross["flips"] = scan.flips;
    out["crossover"] = std::move(cross);
    os << out.dump(2) << "\n";
    return os.str();
  }
  if (format == Format::Csv) {
    os << "family,M,N,H_star,H_minus_Hstar,lambda_P1_num,lambda_P1_den,lambda_P2_num,"
          "lambda_P2_den,lambda_P1_decimal,lambda_P2_decimal,winner\n";
    for (const auto& row : table.rows) {
      const auto& c = row.comparison;
      os << table.family << "," << table.outputs << "," << table.inputs << "," << table.true_hidden
         << "," << row.redundant << "," << c.lambda_p1.numerator().get_str() << ","
         << c.lambda_p1.denominator().get_str() << "," << c.lambda_p2.numerator().get_str() << ","
         << c.lambda_p2.denominator().get_str() << "," << c.lambda_p1.to_decimal() << ","
         << c.lambda_p2.to_decimal() << "," << nn::to_string(c.smaller) << "\n";
    }
    // Summary row: threshold in the H_minus_Hstar column, status as winner.
    os << table.family << "," << table.outputs << "," << table.inputs << "," << table.true_hidden
       << "," << scan.threshold << ",,,,,,," << summary << "\n";
    return os.str();
  }
  os << "family " << table.family << "  M=" << table.outputs << " N=" << table.inputs
     << " H*=" << table.true_hidden << "\n";
  os << "H-H*  lambda_P1      lambda_P2      winner\n";
  for (const auto& row : table.rows) {
    const auto& c = row.comparison;
    std::string p1 = c.lambda_p1.to_string();
    std::string p2 = c.lambda_p2.to_string();
    p1.resize(std::max<std::size_t>(p1.size(), 14), ' ');
    p2.resize(std::max<std::size_t>(p2.size(), 14), ' ');
    std::string d = std::to_string(row.redundant);
    d.resize(std::max<std::size_t>(d.size(), 5), ' ');
    os << d << " " << p1 << " " << p2 << " " << nn::to_string(c.smaller) << "\n";
  }
  os << summary << ": lambda_P2 <= lambda_P1 up to H-H* = " << scan.threshold
     << " (strictly up to " << scan.strict_threshold << ", flips " << scan.flips << ")\n";
  return os.str();
}

std::string render_figure_csv(const std::vector<FigureRow>& rows) {
  std::ostringstream os;
  os << kFigureHeader << "\n";
  for (const auto& row : rows) {
    os << row.family << "," << to_string(row.point) << "," << row.outputs << "," << row.inputs
       << "," << row.true_hidden << "," << row.hidden << "," << row.lambda.numerator().get_str()
       << "," << row.lambda.denominator().get_str() << "," << row.lambda.to_decimal() << "\n";
  }
  return os.str();
}

std::string render(const LedgerTable& table, Format format) {
  std::ostringstream os;
  const auto& min = table.minimum;
  if (format == Format::Json) {
    Json out;
    Json rows = Json::array();
    for (const auto& c : table.candidates) {
      Json r;
      r["stage"] = c.stage;
      r["depth"] = c.depth ? Json(*c.depth) : Json("Terminal");
      r["value"] = c.value.to_string();
      r["is_min"] = c.value == min.value;
      rows.push_back(std::move(r));
    }
    out["candidates"] = std::move(rows);
    out["min"] = min.value.to_string();
    out["advisory_multiplicity"] = min.advisory_multiplicity;
    out["theorem_multiplicity"] = table.theorem_multiplicity;
    os << out.dump(2) << "\n";
    return os.str();
  }
  if (format == Format::Csv) {
    os << "stage,depth,value,value_decimal,is_min,advisory_multiplicity,theorem_multiplicity\n";
    for (const auto& c : table.candidates) {
      os << c.stage << "," << depth_text(c) << "," << c.value << "," << c.value.to_decimal() << ","
         << (c.value == min.value ? 1 : 0) << ",,\n";
    }
    os << "summary,," << min.value << "," << min.value.to_decimal() << ",,"
       << min.advisory_multiplicity << "," << table.theorem_multiplicity << "\n";
    return os.str();
  }
  os << "stage     depth     value\n";
  for (const auto& c : table.candidates) {
    std::string stage = c.stage;
    stage.resize(std::max<std::size_t>(stage.size(), 9), ' ');
    std::string depth = depth_text(c);
    depth.resize(std::max<std::size_t>(depth.size(), 9), ' ');
    os << stage << " " << depth << " " << c.value << (c.value == min.value ? "  *" : "") << "\n";
  }
  os << "min " << min.value << "  (" << min.value.to_decimal() << ")"
     << "  ledger multiplicity " << min.advisory_multiplicity << "  theorem multiplicity "
     << table.theorem_multiplicity << "\n";
  return os.str();
}

std::string render(const verify::Report& report, Format format) {
  if (format == Format::Json) {
    Json out;
    out["cases"] = report.cases;
    out["failures"] = report.failures;
    out["ok"] = report.ok();
    return out.dump(2) + "\n";
  }
  return report.render();
}

}  // namespace rlct::io
