#include "rlct/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>

#include "rlct/blowup_ledger.hpp"
#include "rlct/counting_core.hpp"
#include "rlct/error.hpp"
#include "rlct/nn_bounds.hpp"
#include "rlct/report.hpp"
#include "rlct/spec_file.hpp"
#include "rlct/verification.hpp"

namespace rlct::cli {

namespace {

constexpr std::string_view kGenericNote =
    "upper bound; the caller asserts the expansion hypotheses behind the supplied tuple";

struct GlobalOptions {
  std::string format = "text";
  std::string out_path;
  std::uint64_t seed = 7;
  std::int64_t scan_max = nn::kDefaultScanMax;
};

// Inputs shared by `bound` and `ledger`.
struct GenericInputs {
  std::string spec_path;
  std::optional<std::int64_t> r, alpha, beta;
  std::vector<std::int64_t> prices;
  std::vector<std::int64_t> inventories;
  std::string tail;
  std::int64_t tail_start = 1;
  std::int64_t tail_step = 1;
  std::int64_t tail_n = 1;
};

struct NetworkInputs {
  std::int64_t N = 1, H = 1, M = 1, Hstar = 0;
  std::string activation = "tanh";
  std::string point = "P1";
  std::vector<std::int64_t> exponents;
};

void add_generic_options(CLI::App* sub, GenericInputs& in) {
  sub->add_option("--spec", in.spec_path, "JSON spec file");
  sub->add_option("--r", in.r, "rank of the Fisher information");
  sub->add_option("--alpha", in.alpha, "demand");
  sub->add_option("--beta", in.beta, "budget");
  sub->add_option("--m", in.prices, "shelf prices, comma separated")->delimiter(',');
  sub->add_option("--n", in.inventories, "shelf inventories, comma separated")->delimiter(',');
  sub->add_option("--tail", in.tail, "infinite tail family")
      ->check(CLI::IsMember({"exp", "swish", "odd", "arithmetic"}));
  sub->add_option("--tail-start", in.tail_start, "arithmetic tail start");
  sub->add_option("--tail-step", in.tail_step, "arithmetic tail step");
  sub->add_option("--tail-n", in.tail_n, "tail inventory per shelf");
}

io::Json inline_provenance(const GenericInputs& in) {
  io::Json doc;
  doc["r"] = *in.r;
  doc["alpha"] = *in.alpha;
  doc["beta"] = *in.beta;
  io::Json shelves = io::Json::array();
  for (std::size_t i = 0; i < in.prices.size(); ++i) {
    io::Json s;
    s["m"] = in.prices[i];
    s["n"] = in.inventories[i];
    shelves.push_back(std::move(s));
  }
  doc["shelves"] = std::move(shelves);
  if (!in.tail.empty()) {
    io::Json tail;
    tail["family"] = in.tail;
    io::Json params;
    if (in.tail == "arithmetic") {
      params["start"] = in.tail_start;
      params["step"] = in.tail_step;
    }
    params["n"] = in.tail_n;
    tail["params"] = std::move(params);
    doc["infinite_tail"] = std::move(tail);
  }
  return doc;
}

io::SpecRequest resolve(const GenericInputs& in) {
  if (!in.spec_path.empty()) return io::load_spec_file(in.spec_path);
  if (!in.r || !in.alpha || !in.beta) {
    throw Error(ErrorCode::InvalidArgument, "give --spec FILE or all of --r --alpha --beta");
  }
  if (in.prices.size() != in.inventories.size()) {
    throw Error(ErrorCode::InvalidArgument, "--m and --n must have the same length");
  }
  // Inline flags go through the same parser as files.
  return io::parse_spec(inline_provenance(in));
}

io::SpecRequest resolve(const NetworkInputs& in) {
  io::Json doc;
  doc["N"] = in.N;
  doc["H"] = in.H;
  doc["M"] = in.M;
  doc["H_star"] = in.Hstar;
  io::Json act;
  act["family"] = in.activation;
  if (!in.exponents.empty()) act["exponents"] = in.exponents;
  doc["activation"] = std::move(act);
  doc["point"] = in.point;
  return io::parse_spec(doc);
}

io::ResultRecord evaluate(const io::SpecRequest& request) {
  if (const auto* generic = std::get_if<io::GenericRequest>(&request)) {
    const BoundResult result = compute_bound(generic->spec);
    return io::make_record(result, std::string(kGenericNote), generic->provenance);
  }
  const auto& net = std::get<io::NetworkRequest>(request);
  const nn::NetworkBound bound =
      net.point == io::Point::P1
          ? nn::bound_P1(net.shape, io::make_support(net.activation, net.exponents))
          : nn::bound_P2(net.shape);
  io::Json provenance = net.provenance;
  provenance["tuple"] = io::tuple_json(bound.spec, bound.result);
  provenance["closed_form"] = bound.closed_form.to_string();
  return io::make_record(bound.result, std::string(nn::kAssumptionsNote), std::move(provenance));
}

ProblemSpec generic_spec(const io::SpecRequest& request) {
  if (const auto* generic = std::get_if<io::GenericRequest>(&request)) return generic->spec;
  const auto& net = std::get<io::NetworkRequest>(request);
  return net.point == io::Point::P1
             ? nn::shelves_P1(net.shape, io::make_support(net.activation, net.exponents))
             : nn::shelves_P2(net.shape);
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ShelfCapExceeded: return kCapExceeded;
    case ErrorCode::Io: return kIo;
    case ErrorCode::InternalInconsistency: return kVerificationFailed;
    default: return kValidation;
  }
}

void report_error(std::ostream& err, std::string_view code, const std::string& message) {
  io::Json e;
  e["error"] = std::string(code);
  e["message"] = message;
  err << e.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact upper bounds for local learning coefficients", "rlct"};
  app.require_subcommand(1);
  GlobalOptions global;
  app.add_option("--format", global.format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", global.out_path, "write results to FILE");
  app.add_option("--seed", global.seed, "seed for randomized commands");
  app.add_option("--scan-max", global.scan_max, "largest H - H* scanned");

  GenericInputs bound_in;
  auto* bound = app.add_subcommand("bound", "counting-rule bound for a generic spec");
  add_generic_options(bound, bound_in);

  NetworkInputs net_in;
  auto* nn_bound = app.add_subcommand("nn-bound", "bound at P1 or P2 of a three-layer network");
  nn_bound->add_option("--N", net_in.N, "input units")->required();
  nn_bound->add_option("--H", net_in.H, "hidden units")->required();
  nn_bound->add_option("--M", net_in.M, "output units")->required();
  nn_bound->add_option("--Hstar", net_in.Hstar, "true hidden units")->required();
  nn_bound->add_option("--activation", net_in.activation, "exp | swish | tanh | poly | custom")
      ->check(CLI::IsMember({"exp", "swish", "tanh", "odd", "poly", "custom"}));
  nn_bound->add_option("--point", net_in.point, "P1 | P2")->check(CLI::IsMember({"P1", "P2"}));
  nn_bound->add_option("--exponents", net_in.exponents, "support degrees for poly/custom")
      ->delimiter(',');

  NetworkInputs cmp_in;
  cmp_in.Hstar = 1;
  auto* compare = app.add_subcommand("compare", "P1 vs P2 over H - H* = 1..scan-max");
  compare->add_option("--N", cmp_in.N, "input units");
  compare->add_option("--M", cmp_in.M, "output units");
  compare->add_option("--Hstar", cmp_in.Hstar, "true hidden units");
  compare->add_option("--activation", cmp_in.activation, "exp | swish | tanh | custom")
      ->check(CLI::IsMember({"exp", "swish", "tanh", "odd", "custom"}));
  compare->add_option("--exponents", cmp_in.exponents, "support degrees for custom")->delimiter(',');

  std::int64_t fig_hstar = 2;
  std::int64_t fig_n = 1;
  std::vector<std::int64_t> fig_m = {1, 2, 3};
  std::int64_t fig_hmax = 0;
  auto* figure = app.add_subcommand("figure", "P1/P2 bound grid for exp, swish and tanh");
  figure->add_option("--Hstar", fig_hstar, "true hidden units");
  figure->add_option("--N", fig_n, "input units");
  figure->add_option("--M-list", fig_m, "output unit counts")->delimiter(',');
  figure->add_option("--H-max", fig_hmax, "largest H (default H* + 20)");

  GenericInputs ledger_in;
  auto* ledger_cmd = app.add_subcommand("ledger", "per-chart candidates of the blow-up sequence");
  add_generic_options(ledger_cmd, ledger_in);

  std::size_t verify_cases = 500;
  std::size_t verify_shelves = 6;
  auto* verify_cmd = app.add_subcommand("verify", "randomized oracle/ledger/property agreement");
  verify_cmd->add_option("--cases", verify_cases, "number of random specs");
  verify_cmd->add_option("--max-shelves", verify_shelves, "largest shelf count");

  for (auto* sub : {bound, nn_bound, compare, figure, ledger_cmd, verify_cmd}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    report_error(err, "UsageError", e.what());
    return kValidation;
  }

  int status = kOk;
  std::string output;
  try {
    const io::Format format = io::parse_format(global.format);
    if (bound->parsed()) {
      output = io::render(evaluate(resolve(bound_in)), format);
    } else if (nn_bound->parsed()) {
      output = io::render(evaluate(resolve(net_in)), format);
    } else if (compare->parsed()) {
      const nn::ActivationSupport support = io::make_support(cmp_in.activation, cmp_in.exponents);
      io::ComparisonTable table;
      table.family = std::string(nn::to_string(support.family()));
      table.outputs = cmp_in.M;
      table.inputs = cmp_in.N;
      table.true_hidden = cmp_in.Hstar;
      for (std::int64_t d = 1; d <= global.scan_max; ++d) {
        const nn::NetworkShape shape{cmp_in.N, cmp_in.Hstar + d, cmp_in.M, cmp_in.Hstar};
        table.rows.push_back({d, nn::compare_P1_P2(shape, support)});
      }
      try {
        table.crossover =
            nn::crossover_threshold(cmp_in.M, support, cmp_in.Hstar, global.scan_max, cmp_in.N);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotFoundWithin) throw;
      }
      output = io::render(table, format);
    } else if (figure->parsed()) {
      const std::int64_t h_max = fig_hmax > 0 ? fig_hmax : fig_hstar + 20;
      std::vector<io::FigureRow> rows;
      const std::vector<std::string> families = {"exp", "swish", "tanh"};
      for (const auto& family : families) {
        const nn::ActivationSupport support = io::make_support(family, {});
        for (io::Point point : {io::Point::P1, io::Point::P2}) {
          if (point == io::Point::P2 && fig_hstar < 1) continue;
          for (std::int64_t M : fig_m) {
            for (std::int64_t H = fig_hstar + 1; H <= h_max; ++H) {
              const nn::NetworkShape shape{fig_n, H, M, fig_hstar};
              const nn::NetworkBound b =
                  point == io::Point::P1 ? nn::bound_P1(shape, support) : nn::bound_P2(shape);
              rows.push_back({family, point, M, fig_n, fig_hstar, H, b.result.lambda_bound});
            }
          }
        }
      }
      output = io::render_figure_csv(rows);
    } else if (ledger_cmd->parsed()) {
      const ProblemSpec spec = generic_spec(resolve(ledger_in));
      io::LedgerTable table;
      table.candidates = ledger::chart_candidates(spec);
      table.minimum = ledger::ledger_min(table.candidates);
      table.theorem_multiplicity = compute_bound(spec).multiplicity;
      output = io::render(table, format);
    } else if (verify_cmd->parsed()) {
      verify::SpecLimits limits;
      limits.max_shelves = std::max<std::size_t>(verify_shelves, 1);
      limits.max_price = std::max<std::int64_t>(limits.max_price,
                                                static_cast<std::int64_t>(limits.max_shelves));
      const verify::Report report = verify::run(verify_cases, global.seed, limits);
      output = io::render(report, format);
      if (!report.ok()) status = kVerificationFailed;
    }
  } catch (const Error& e) {
    report_error(err, to_string(e.code()), e.detail());
    return exit_code_for(e.code());
  }

  if (global.out_path.empty()) {
    out << output;
    return status;
  }
  std::ofstream file(global.out_path, std::ios::binary);
  if (!file || !(file << output) || !file.flush()) {
    report_error(err, "Io", "cannot write '" + global.out_path + "'");
    return kIo;
  }
  return status;
}

}  // namespace rlct::cli
