#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "scindex/analytics.hpp"
#include "scindex/dim_expr.hpp"
#include "scindex/errors.hpp"
#include "scindex/io.hpp"
#include "scindex/scaling.hpp"
#include "scindex/table1.hpp"

namespace scindex::cli {
namespace {

// Error already carrying its source (file, expression) in the message.
class LocatedError : public Error {
 public:
  using Error::Error;
};

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream file(path, std::ios::binary);
  if (!file) throw LocatedError(path + ": cannot open file");
  return std::string(std::istreambuf_iterator<char>(file), {});
}

InputFormat input_format(const std::string& requested, const std::string& path) {
  if (requested == "json") return InputFormat::Json;
  if (requested == "csv") return InputFormat::Csv;
  return path.size() >= 5 && path.ends_with(".json") ? InputFormat::Json : InputFormat::Csv;
}

const std::map<std::string, TableFormat> kTableFormats{
    {"tsv", TableFormat::Tsv}, {"csv", TableFormat::Csv}, {"json", TableFormat::Json}};

Precision resolve_precision(const std::string& flag) {
  std::string text = flag;
  if (text.empty()) {
    if (const char* env = std::getenv("SCINDEX_PRECISION")) text = env;
  }
  if (text.empty()) return kDefaultPrecision;
  if (text == "full") return std::nullopt;
  int value = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || p != text.data() + text.size() || value > 17) {
    throw LocatedError("precision '" + text + "' must be an integer <= 17 or 'full'");
  }
  if (value < 0) return std::nullopt;
  return value;
}

std::vector<PortfolioSummary> load(const std::string& path, const std::string& fmt_flag,
                                   std::istream& in) {
  const std::string text = read_source(path, in);
  try {
    return parse_input(text, input_format(fmt_flag, path));
  } catch (const Error& e) {
    throw LocatedError(fmt::format("{}: {}", path == "-" ? "<stdin>" : path, e.what()));
  }
}

std::vector<TableRow> build_rows(const std::vector<PortfolioSummary>& portfolios) {
  std::vector<TableRow> rows;
  for (const auto& p : portfolios) {
    try {
      rows.push_back(build_row(p));
    } catch (const Error& e) {
      throw LocatedError(fmt::format("portfolio '{}': {}", p.label, e.what()));
    }
  }
  return rows;
}

AnalyticsTable make_table(std::vector<TableRow> rows) {
  AnalyticsTable table(common_columns(rows));
  for (auto& r : rows) table.add_row(std::move(r));
  return table;
}

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<std::uint64_t> parse_uints(const std::string& text, char sep, const char* what) {
  std::vector<std::uint64_t> out;
  for (const auto& tok : split_list(text, sep)) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size()) {
      throw LocatedError(fmt::format("{}: '{}' is not a non-negative integer", what, tok));
    }
    out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------

struct ComputeArgs {
  std::string file = "-";
  std::string input_format = "auto";
  std::string format = "tsv";
  std::string precision;
  std::string rank_by;
};

int run_compute(const ComputeArgs& a, std::istream& in, std::ostream& out) {
  const Precision precision = resolve_precision(a.precision);
  AnalyticsTable table = make_table(build_rows(load(a.file, a.input_format, in)));
  if (!a.rank_by.empty()) {
    const auto order = rank_by(table, a.rank_by);
    AnalyticsTable ranked(table.columns());
    for (const auto& label : order) {
      auto it = std::find_if(table.rows().begin(), table.rows().end(),
                             [&](const TableRow& r) { return r.label == label; });
      ranked.add_row(*it);
    }
    table = std::move(ranked);
  }
  out << emit_table(table, kTableFormats.at(a.format), precision);
  return kExitOk;
}

struct CorrelateArgs {
  std::string file = "-";
  std::string input_format = "auto";
  std::string columns;
  std::string format = "tsv";
  std::string precision;
};

int run_correlate(const CorrelateArgs& a, std::istream& in, std::ostream& out) {
  const Precision precision = resolve_precision(a.precision);
  const AnalyticsTable table = make_table(build_rows(load(a.file, a.input_format, in)));
  std::vector<std::string> cols = a.columns.empty() ? table.columns() : split_list(a.columns, ',');
  out << emit_correlations(pearson_matrix(table, cols), kTableFormats.at(a.format), precision);
  return kExitOk;
}

struct ProbeArgs {
  std::string base;
  std::string lambdas = "1,2,3,4,5";
  std::vector<std::string> indices;
  std::string svg;
};

int run_probe(const ProbeArgs& a, std::ostream& out) {
  std::vector<std::uint64_t> counts = parse_uints(a.base, ';', "--base");
  if (counts.empty()) throw LocatedError("--base: no citation counts given");
  const CitationVector base{std::move(counts)};
  const std::vector<std::uint64_t> lambdas = parse_uints(a.lambdas, ',', "--lambdas");

  std::vector<const IndicatorDescriptor*> selected;
  if (a.indices.empty()) {
    for (const auto& d : indicator_registry()) selected.push_back(&d);
  } else {
    for (const auto& list : a.indices) {
      for (const auto& name : split_list(list, ',')) selected.push_back(&find_indicator(name));
    }
  }

  bool all_pass = true;
  std::vector<PlotSeries> plot;
  for (const auto* desc : selected) {
    const ProbeResult r = verify_dimension(*desc, base, lambdas);
    out << r.summary() << '\n';
    all_pass = all_pass && r.pass;
    if (!r.exactly_zero) {
      PlotSeries s{r.name, {}};
      for (std::size_t k = 0; k < lambdas.size(); ++k) {
        s.points.emplace_back(static_cast<double>(lambdas[k] * base.size()), r.series.values[k]);
      }
      plot.push_back(std::move(s));
    }
  }

  if (!a.svg.empty()) {
    const PlotOutput rendered = emit_loglog_svg(plot);
    std::string csv_path = a.svg;
    if (csv_path.ends_with(".svg")) csv_path.resize(csv_path.size() - 4);
    csv_path += ".csv";
    std::ofstream(a.svg, std::ios::binary) << rendered.svg;
    std::ofstream(csv_path, std::ios::binary) << rendered.csv;
    out << "wrote " << a.svg << " and " << csv_path << '\n';
  }
  out << (all_pass ? "all dimensions verified" : "dimension verification FAILED") << '\n';
  return all_pass ? kExitOk : kExitVerificationFailed;
}

struct DimsArgs {
  std::string expression;
  std::vector<std::string> symbols;
};

int run_dims(const DimsArgs& a, std::ostream& out) {
  SymbolTable table = indicator_symbols();
  for (const auto& binding : a.symbols) {
    const auto eq = binding.find('=');
    if (eq == std::string::npos) throw LocatedError("--symbol '" + binding + "' must be NAME=EXPONENT");
    const std::string name = binding.substr(0, eq);
    const std::string exp = binding.substr(eq + 1);
    try {
      const auto dim = parse_dim_expr("x^(" + exp + ")");
      table.insert_or_assign(name, Dimension{dim.exponent()});
    } catch (const Error&) {
      throw LocatedError("--symbol '" + binding + "': exponent must be an integer or a/b");
    }
  }
  try {
    out << eval_dim_expr(parse_dim_expr(a.expression), table).to_string() << '\n';
  } catch (const ParseError& e) {
    throw LocatedError(fmt::format("in expression '{}': {}\n  {}\n  {}^", a.expression, e.what(),
                                   a.expression, std::string(e.position(), ' ')));
  } catch (const HeterogeneityError& e) {
    throw LocatedError(fmt::format("homogeneity violation in expression '{}': {}", a.expression,
                                   e.what()));
  } catch (const Error& e) {
    throw LocatedError(fmt::format("in expression '{}': {}", a.expression, e.what()));
  }
  return kExitOk;
}

struct Table1Args {
  std::string format = "tsv";
  std::string precision;
};

int run_table1(const Table1Args& a, std::ostream& out) {
  const Precision precision = resolve_precision(a.precision);
  const TableFormat format = kTableFormats.at(a.format);
  const AnalyticsTable table = table1::reconstructed();
  // Correlations use the printed, rounded values as published.
  const CorrelationMatrix corr = pearson_matrix(table1::printed(), table1::columns());
  if (format == TableFormat::Json) {
    nlohmann::ordered_json doc;
    doc["table"] = nlohmann::ordered_json::parse(emit_table(table, format, precision));
    doc["correlation"] = nlohmann::ordered_json::parse(emit_correlations(corr, format, precision));
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << emit_table(table, format, precision) << '\n' << emit_correlations(corr, format, precision);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"scindex: dimensioned citation indices"};
  app.name("scindex");
  app.require_subcommand(1);

  const auto format_check = CLI::IsMember({"tsv", "csv", "json"});
  const auto input_check = CLI::IsMember({"auto", "csv", "json"});

  ComputeArgs compute;
  auto* compute_cmd = app.add_subcommand("compute", "Indicators for each input portfolio");
  compute_cmd->add_option("file", compute.file, "CSV or JSON input ('-' for stdin)");
  compute_cmd->add_option("--input-format", compute.input_format)->check(input_check);
  compute_cmd->add_option("--format", compute.format, "Output format")->check(format_check);
  compute_cmd->add_option("--precision", compute.precision, "Decimal places, or 'full'");
  compute_cmd->add_option("--rank-by", compute.rank_by, "Order rows by descending indicator");

  CorrelateArgs correlate;
  auto* correlate_cmd = app.add_subcommand("correlate", "Pearson matrix across portfolios");
  correlate_cmd->add_option("file", correlate.file, "CSV or JSON input ('-' for stdin)");
  correlate_cmd->add_option("--input-format", correlate.input_format)->check(input_check);
  correlate_cmd->add_option("--columns", correlate.columns, "Comma-separated indicator names");
  correlate_cmd->add_option("--format", correlate.format)->check(format_check);
  correlate_cmd->add_option("--precision", correlate.precision);

  ProbeArgs probe;
  auto* probe_cmd = app.add_subcommand("probe", "Verify scaling exponents under replication");
  probe_cmd->add_option("--base", probe.base, "Base citation vector, e.g. \"4;2;1\"")->required();
  probe_cmd->add_option("--lambdas", probe.lambdas, "Comma-separated replication factors");
  probe_cmd->add_option("--index", probe.indices, "Indicator(s) to probe; default all");
  probe_cmd->add_option("--svg", probe.svg, "Write a log-log plot (plus companion .csv)");

  DimsArgs dims;
  auto* dims_cmd = app.add_subcommand("dims", "Dimension of an index expression");
  dims_cmd->add_option("expression", dims.expression)->required();
  dims_cmd->add_option("--symbol", dims.symbols, "Extra symbol binding NAME=EXPONENT");

  Table1Args t1;
  auto* table1_cmd = app.add_subcommand("table1", "Reproduce the polymer solar cells table");
  table1_cmd->add_option("--format", t1.format)->check(format_check);
  table1_cmd->add_option("--precision", t1.precision);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*compute_cmd) return run_compute(compute, in, out);
    if (*correlate_cmd) return run_correlate(correlate, in, out);
    if (*probe_cmd) return run_probe(probe, out);
    if (*dims_cmd) return run_dims(dims, out);
    if (*table1_cmd) return run_table1(t1, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace scindex::cli
