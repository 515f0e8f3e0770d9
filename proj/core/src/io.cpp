#include "scindex/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>

#include <fmt/format.h>
#include <json.hpp>

#include "scindex/errors.hpp"
#include "scindex/scaling.hpp"

namespace scindex {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr std::string_view kWideHeader = "author,citations";
constexpr std::string_view kSummaryHeader = "author,P,i,eta";
constexpr std::string_view kSummaryHeaderH = "author,P,i,eta,h";

struct CsvRecord {
  std::size_t line;
  std::vector<std::string> fields;
  std::string raw;
};

// RFC 4180 style records: quoted fields may contain commas, doubled quotes and newlines.
std::vector<CsvRecord> split_csv(std::string_view text) {
  std::vector<CsvRecord> out;
  std::size_t line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    CsvRecord rec;
    rec.line = line;
    const std::size_t start = i;
    std::string field;
    bool quoted = false;
    bool done = false;
    while (!done) {
      if (i >= text.size()) {
        if (quoted) throw FormatError(rec.line, "unterminated quoted field");
        done = true;
        break;
      }
      const char c = text[i];
      if (quoted) {
        if (c == '"') {
          if (i + 1 < text.size() && text[i + 1] == '"') {
            field += '"';
            i += 2;
          } else {
            quoted = false;
            ++i;
          }
        } else {
          if (c == '\n') ++line;
          field += c;
          ++i;
        }
        continue;
      }
      switch (c) {
        case '"':
          if (!field.empty()) throw FormatError(line, "stray quote inside unquoted field");
          quoted = true;
          ++i;
          break;
        case ',':
          rec.fields.push_back(std::move(field));
          field.clear();
          ++i;
          break;
        case '\r':
          ++i;
          break;
        case '\n':
          ++line;
          ++i;
          done = true;
          break;
        default:
          field += c;
          ++i;
      }
    }
    rec.fields.push_back(std::move(field));
    rec.raw = std::string(text.substr(start, i - start));
    while (!rec.raw.empty() && (rec.raw.back() == '\n' || rec.raw.back() == '\r')) rec.raw.pop_back();
    if (rec.raw.empty()) continue;  // blank line
    out.push_back(std::move(rec));
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto ws = [](char c) { return c == ' ' || c == '\t'; };
  while (!s.empty() && ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && ws(s.back())) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_count(std::string_view token, std::size_t line) {
  token = trim(token);
  if (token.empty()) throw FormatError(line, "empty citation count");
  if (token.front() == '-') {
    const auto digits = token.substr(1);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw NegativeCountError(line, std::string(token));
    }
  }
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || p != token.data() + token.size()) {
    throw FormatError(line, "citation count '" + std::string(token) + "' is not a non-negative integer");
  }
  return v;
}

CitationVector make_vector(std::vector<std::uint64_t> counts, std::size_t line) {
  if (counts.empty()) throw FormatError(line, "portfolio has no citation counts");
  try {
    return CitationVector{std::move(counts)};
  } catch (const DomainError& e) {
    throw FormatError(line, e.what());
  }
}

double parse_real(std::string_view token, std::size_t line, const char* field) {
  token = trim(token);
  double v = 0.0;
  auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc{} || p != token.data() + token.size() || !std::isfinite(v)) {
    throw FormatError(line, fmt::format("field {} = '{}' is not a real number", field, token));
  }
  return v;
}

SummaryTriple make_summary(double papers, double impact, double eta, std::optional<double> h,
                           std::size_t line) {
  if (!(papers >= 1.0) || papers != std::floor(papers) || papers > 9007199254740992.0) {
    throw FormatError(line, fmt::format("P = {} is not a positive integer", papers));
  }
  if (!(impact >= 0.0)) throw FormatError(line, fmt::format("i = {} is negative", impact));
  if (!(eta > 0.0 && eta <= 1.0)) throw FormatError(line, fmt::format("eta = {} is outside (0, 1]", eta));
  if (h && !(*h >= 0.0)) throw FormatError(line, fmt::format("h = {} is negative", *h));
  return SummaryTriple{static_cast<std::uint64_t>(papers), impact, eta, h};
}

std::vector<PortfolioSummary> parse_csv(std::string_view text) {
  const auto records = split_csv(text);
  if (records.empty()) throw FormatError(1, "missing header");
  const std::string& header = records.front().raw;
  const bool wide = header == kWideHeader;
  const bool with_h = header == kSummaryHeaderH;
  if (!wide && !with_h && header != kSummaryHeader) {
    throw FormatError(records.front().line,
                      fmt::format("unrecognised header '{}'; expected '{}' or '{}'", header,
                                  kWideHeader, kSummaryHeaderH));
  }
  const std::size_t width = wide ? 2 : (with_h ? 5 : 4);

  std::vector<PortfolioSummary> out;
  for (std::size_t k = 1; k < records.size(); ++k) {
    const auto& rec = records[k];
    if (rec.fields.size() != width) {
      throw FormatError(rec.line, fmt::format("expected {} fields, found {}", width, rec.fields.size()));
    }
    PortfolioSummary p;
    p.label = std::string(trim(rec.fields[0]));
    if (p.label.empty()) throw FormatError(rec.line, "empty author label");
    if (wide) {
      std::vector<std::uint64_t> counts;
      std::string_view cell = rec.fields[1];
      while (true) {
        const auto semi = cell.find(';');
        counts.push_back(parse_count(cell.substr(0, semi), rec.line));
        if (semi == std::string_view::npos) break;
        cell.remove_prefix(semi + 1);
      }
      p.source = make_vector(std::move(counts), rec.line);
    } else {
      std::optional<double> h;
      if (with_h && !trim(rec.fields[4]).empty()) h = parse_real(rec.fields[4], rec.line, "h");
      p.source = make_summary(parse_real(rec.fields[1], rec.line, "P"),
                              parse_real(rec.fields[2], rec.line, "i"),
                              parse_real(rec.fields[3], rec.line, "eta"), h, rec.line);
    }
    out.push_back(std::move(p));
  }
  return out;
}

double json_number(const json& rec, const char* key, std::size_t index) {
  if (!rec.contains(key) || !rec[key].is_number()) {
    throw FormatError(index, fmt::format("field '{}' missing or not a number", key));
  }
  return rec[key].get<double>();
}

std::vector<PortfolioSummary> parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(1, fmt::format("invalid JSON at byte {}: {}", e.byte, e.what()));
  }
  if (!doc.is_array()) throw FormatError(1, "top-level JSON value must be an array of records");

  std::vector<PortfolioSummary> out;
  std::optional<bool> wide_form;
  for (std::size_t k = 0; k < doc.size(); ++k) {
    const std::size_t index = k + 1;
    const json& rec = doc[k];
    if (!rec.is_object()) throw FormatError(index, "record is not an object");
    if (!rec.contains("author") || !rec["author"].is_string()) {
      throw FormatError(index, "field 'author' missing or not a string");
    }
    const bool wide = rec.contains("citations");
    if (wide_form && *wide_form != wide) throw FormatError(index, "mixed wide and summary records");
    wide_form = wide;

    PortfolioSummary p;
    p.label = rec["author"].get<std::string>();
    if (wide) {
      const json& arr = rec["citations"];
      if (!arr.is_array()) throw FormatError(index, "field 'citations' must be an array");
      std::vector<std::uint64_t> counts;
      for (const json& c : arr) {
        if (c.is_number_integer() && c.get<std::int64_t>() < 0) {
          throw NegativeCountError(index, c.dump());
        }
        if (!c.is_number_unsigned()) {
          throw FormatError(index, "citation count " + c.dump() + " is not a non-negative integer");
        }
        counts.push_back(c.get<std::uint64_t>());
      }
      p.source = make_vector(std::move(counts), index);
    } else {
      std::optional<double> h;
      if (rec.contains("h") && !rec["h"].is_null()) h = json_number(rec, "h", index);
      p.source = make_summary(json_number(rec, "P", index), json_number(rec, "i", index),
                              json_number(rec, "eta", index), h, index);
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

bool is_integral(std::string_view column) {
  for (const auto& d : indicator_registry()) {
    if (d.name == column) return d.integral;
  }
  return false;
}

std::string shortest(double v) { return fmt::format("{}", v); }

}  // namespace

std::vector<PortfolioSummary> parse_input(std::string_view bytes, InputFormat format) {
  return format == InputFormat::Csv ? parse_csv(bytes) : parse_json(bytes);
}

std::string emit_input_csv(std::span<const PortfolioSummary> portfolios) {
  const bool wide = portfolios.empty() || std::holds_alternative<CitationVector>(portfolios.front().source);
  std::string out;
  if (wide) {
    out += std::string(kWideHeader) + "\n";
  } else {
    out += std::string(kSummaryHeaderH) + "\n";
  }
  for (std::size_t k = 0; k < portfolios.size(); ++k) {
    const auto& p = portfolios[k];
    if (std::holds_alternative<CitationVector>(p.source) != wide) {
      throw FormatError(k + 2, "mixed wide and summary records");
    }
    out += csv_field(p.label);
    out += ',';
    if (wide) {
      const auto counts = std::get<CitationVector>(p.source).counts();
      out += '"';
      for (std::size_t j = 0; j < counts.size(); ++j) {
        if (j) out += ';';
        out += std::to_string(counts[j]);
      }
      out += '"';
    } else {
      const auto& s = std::get<SummaryTriple>(p.source);
      out += fmt::format("{},{},{},{}", s.papers, shortest(s.impact), shortest(s.eta),
                         s.h ? shortest(*s.h) : std::string{});
    }
    out += '\n';
  }
  return out;
}

std::string format_value(double value, bool integral, Precision precision) {
  if (integral && value == std::floor(value) && std::abs(value) < 9007199254740992.0) {
    return fmt::format("{:.0f}", value);
  }
  if (!precision) return shortest(value);
  return fmt::format("{:.{}f}", value, *precision);
}

std::string emit_table(const AnalyticsTable& table, TableFormat format, Precision precision) {
  const auto& cols = table.columns();
  if (format == TableFormat::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto& row : table.rows()) {
      ordered_json obj;
      obj["author"] = row.label;
      for (const auto& c : cols) {
        const Quantity& q = row.values.find(c)->second;
        obj[c] = {{"value", q.magnitude()},
                  {"dimension", q.dim().to_string()},
                  {"reconstructed", row.reconstructed.contains(c)}};
      }
      arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
  }

  const std::string sep = format == TableFormat::Tsv ? "\t" : ",";
  const auto cell = [&](std::string_view s) {
    return format == TableFormat::Csv ? csv_field(s) : std::string(s);
  };
  std::string out = "author";
  for (const auto& c : cols) out += sep + cell(c);
  out += '\n';
  if (cols.empty()) return out;

  out += "Dimensions";
  for (const auto& c : cols) out += sep + table.column_dim(c).to_string();
  out += '\n';
  for (const auto& row : table.rows()) {
    out += cell(row.label);
    for (const auto& c : cols) {
      out += sep + format_value(row.values.find(c)->second.magnitude(), is_integral(c), precision);
    }
    out += '\n';
  }
  return out;
}

std::string emit_correlations(const CorrelationMatrix& m, TableFormat format, Precision precision) {
  const std::size_t n = m.names.size();
  if (format == TableFormat::Json) {
    ordered_json obj;
    obj["columns"] = m.names;
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < n; ++r) {
      ordered_json row = ordered_json::array();
      for (std::size_t c = 0; c < n; ++c) row.push_back(m.at(r, c));
      rows.push_back(std::move(row));
    }
    obj["pearson"] = std::move(rows);
    return obj.dump(2) + "\n";
  }
  const std::string sep = format == TableFormat::Tsv ? "\t" : ",";
  std::string out = "CORRELATION";
  for (const auto& name : m.names) out += sep + name;
  out += '\n';
  for (std::size_t r = 0; r < n; ++r) {
    out += m.names[r];
    for (std::size_t c = 0; c < n; ++c) out += sep + format_value(m.at(r, c), false, precision);
    out += '\n';
  }
  return out;
}

namespace {

constexpr double kWidth = 720;
constexpr double kHeight = 480;
constexpr double kLeft = 70;
constexpr double kRight = 200;
constexpr double kTop = 30;
constexpr double kBottom = 50;

constexpr std::array<std::string_view, 8> kColours{"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                   "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string marker(std::size_t shape, double x, double y, std::string_view colour) {
  constexpr double r = 5;
  switch (shape % 6) {
    case 0:
      return fmt::format(R"(<circle cx="{:.2f}" cy="{:.2f}" r="{}" fill="{}"/>)", x, y, r, colour);
    case 1:
      return fmt::format(R"(<rect x="{:.2f}" y="{:.2f}" width="{}" height="{}" fill="{}"/>)", x - r,
                         y - r, 2 * r, 2 * r, colour);
    case 2:
      return fmt::format(R"(<polygon points="{:.2f},{:.2f} {:.2f},{:.2f} {:.2f},{:.2f}" fill="{}"/>)",
                         x, y - r, x - r, y + r, x + r, y + r, colour);
    case 3:
      return fmt::format(
          R"(<polygon points="{:.2f},{:.2f} {:.2f},{:.2f} {:.2f},{:.2f} {:.2f},{:.2f}" fill="{}"/>)", x,
          y - r, x + r, y, x, y + r, x - r, y, colour);
    case 4:
      return fmt::format(R"(<polygon points="{:.2f},{:.2f} {:.2f},{:.2f} {:.2f},{:.2f}" fill="{}"/>)",
                         x, y + r, x - r, y - r, x + r, y - r, colour);
    default:
      return fmt::format(
          R"(<path d="M{:.2f},{:.2f} L{:.2f},{:.2f} M{:.2f},{:.2f} L{:.2f},{:.2f}" stroke="{}" stroke-width="2"/>)",
          x - r, y - r, x + r, y + r, x - r, y + r, x + r, y - r, colour);
  }
}

}  // namespace

PlotOutput emit_loglog_svg(std::span<const PlotSeries> series) {
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      if (!(x > 0.0) || !(y > 0.0)) {
        throw NonPositivePointError(
            fmt::format("series '{}' has point ({}, {}) that cannot be drawn on log axes", s.name, x, y));
      }
    }
  }
  std::vector<ExponentEstimate> fits;
  double lx0 = std::numeric_limits<double>::infinity(), lx1 = -lx0;
  double ly0 = lx0, ly1 = -lx0;
  for (const auto& s : series) {
    std::vector<double> xs, ys;
    for (const auto& [x, y] : s.points) {
      xs.push_back(x);
      ys.push_back(y);
      lx0 = std::min(lx0, std::log10(x));
      lx1 = std::max(lx1, std::log10(x));
      ly0 = std::min(ly0, std::log10(y));
      ly1 = std::max(ly1, std::log10(y));
    }
    try {
      fits.push_back(loglog_fit(xs, ys));
    } catch (const DegenerateSeriesError& e) {
      throw DegenerateSeriesError(fmt::format("series '{}': {}", s.name, e.what()));
    }
  }
  if (series.empty()) lx0 = ly0 = 0, lx1 = ly1 = 1;
  // Whole decades around the data, at least one wide.
  lx0 = std::floor(lx0), ly0 = std::floor(ly0);
  lx1 = std::max(std::ceil(lx1), lx0 + 1), ly1 = std::max(std::ceil(ly1), ly0 + 1);

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  const auto px = [&](double x) { return kLeft + (std::log10(x) - lx0) / (lx1 - lx0) * pw; };
  const auto py = [&](double y) { return kTop + ph - (std::log10(y) - ly0) / (ly1 - ly0) * ph; };

  std::string svg = fmt::format(
      R"(<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="{1}" viewBox="0 0 {0} {1}" font-family="sans-serif" font-size="12">)"
      "\n",
      kWidth, kHeight);
  svg += fmt::format(R"(<rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="black"/>)"
                     "\n",
                     kLeft, kTop, pw, ph);
  for (double d = lx0; d <= lx1; d += 1.0) {
    const double x = px(std::pow(10.0, d));
    svg += fmt::format(R"(<line x1="{0:.2f}" y1="{1}" x2="{0:.2f}" y2="{2}" stroke="#ddd"/>)"
                       R"(<text x="{0:.2f}" y="{3}" text-anchor="middle">1e{4}</text>)"
                       "\n",
                       x, kTop, kTop + ph, kTop + ph + 18, d);
  }
  for (double d = ly0; d <= ly1; d += 1.0) {
    const double y = py(std::pow(10.0, d));
    svg += fmt::format(R"(<line x1="{1}" y1="{0:.2f}" x2="{2}" y2="{0:.2f}" stroke="#ddd"/>)"
                       R"(<text x="{3}" y="{0:.2f}" text-anchor="end" dominant-baseline="middle">1e{4}</text>)"
                       "\n",
                       y, kLeft, kLeft + pw, kLeft - 6, d);
  }
  svg += fmt::format(R"(<text x="{}" y="{}" text-anchor="middle">papers (log scale)</text>)"
                     "\n",
                     kLeft + pw / 2, kHeight - 8);
  svg += fmt::format(
      R"~(<text x="16" y="{0}" text-anchor="middle" transform="rotate(-90 16 {0})">index value (log scale)</text>)~"
      "\n",
      kTop + ph / 2);

  std::string csv = "series,x,y\n";
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    const auto colour = kColours[k % kColours.size()];
    const auto& fit = fits[k];
    double x0 = s.points.front().first, x1 = x0;
    for (const auto& [x, y] : s.points) {
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
    }
    const auto fitted = [&](double x) { return std::exp(fit.intercept + fit.slope * std::log(x)); };
    svg += fmt::format(
        R"(<line x1="{:.2f}" y1="{:.2f}" x2="{:.2f}" y2="{:.2f}" stroke="{}" stroke-dasharray="4 3"/>)"
        "\n",
        px(x0), py(fitted(x0)), px(x1), py(fitted(x1)), colour);
    for (const auto& [x, y] : s.points) {
      svg += marker(k, px(x), py(y), colour) + "\n";
      csv += fmt::format("{},{},{}\n", csv_field(s.name), shortest(x), shortest(y));
    }
    const double ly = kTop + 14 + 20 * static_cast<double>(k);
    svg += marker(k, kLeft + pw + 20, ly - 4, colour);
    svg += fmt::format(R"(<text x="{:.2f}" y="{:.2f}" class="slope">{} slope {:.2f}</text>)"
                       "\n",
                       kLeft + pw + 32, ly, xml_escape(s.name), fit.slope);
  }
  svg += "</svg>\n";
  return PlotOutput{std::move(svg), std::move(csv)};
}

}  // namespace scindex
