#include "scindex/table1.hpp"

namespace scindex::table1 {
namespace {

// author, P, i, eta, h, z, i_E, C
constexpr std::array<PublishedRow, 10> kRows{{
    {"LI YF", 142, 33.25, 0.20, 34, 31.41, 891.42, 4721},
    {"KREBS FC", 96, 73.05, 0.24, 41, 49.69, 1462.71, 7013},
    {"YANG Y", 78, 128.65, 0.12, 37, 53.69, 3281.34, 10035},
    {"JANSSEN RAJ", 56, 53.32, 0.17, 24, 30.13, 962.81, 2986},
    {"HOU JH", 45, 99.89, 0.17, 21, 42.15, 1640.71, 4495},
    {"JEN AKY", 45, 48.71, 0.42, 23, 35.51, 504.50, 2192},
    {"CAO Y", 44, 38.73, 0.18, 15, 22.97, 599.26, 1704},
    {"KIM H", 44, 9.55, 0.26, 11, 10.18, 123.38, 420},
    {"YIP HL", 44, 49.82, 0.43, 23, 36.05, 504.50, 2192},
    {"ZHANG FL", 44, 62.32, 0.32, 23, 37.86, 733.40, 2742},
}};

constexpr std::array<double, 49> kCorrelations{
    1.00,  0.04,  -0.35, 0.74,  0.27,  0.29,  0.53,   //
    0.04,  1.00,  -0.41, 0.55,  0.88,  0.92,  0.83,   //
    -0.35, -0.41, 1.00,  -0.24, -0.14, -0.60, -0.52,  //
    0.74,  0.55,  -0.24, 1.00,  0.81,  0.65,  0.86,   //
    0.27,  0.88,  -0.14, 0.81,  1.00,  0.78,  0.85,   //
    0.29,  0.92,  -0.60, 0.65,  0.78,  1.00,  0.94,   //
    0.53,  0.83,  -0.52, 0.86,  0.85,  0.94,  1.00,
};

}  // namespace

std::span<const PublishedRow> rows() { return kRows; }

const std::vector<std::string>& columns() {
  static const std::vector<std::string> cols{"P", "i", "eta", "h", "z", "i_E", "C"};
  return cols;
}

const std::array<double, 49>& printed_correlations() { return kCorrelations; }

std::vector<PortfolioSummary> summaries() {
  std::vector<PortfolioSummary> out;
  for (const auto& r : kRows) {
    out.push_back({std::string(r.author), SummaryTriple{r.papers, r.impact, r.eta, r.h}});
  }
  return out;
}

AnalyticsTable reconstructed() {
  AnalyticsTable table(columns());
  for (const auto& s : summaries()) table.add_row(build_row(s));
  return table;
}

AnalyticsTable printed() {
  AnalyticsTable table(columns());
  const Dimension p1 = Dimension::papers(1);
  for (const auto& r : kRows) {
    TableRow row;
    row.label = std::string(r.author);
    row.values.emplace("P", Quantity{static_cast<double>(r.papers), p1});
    row.values.emplace("i", Quantity{r.impact, p1});
    row.values.emplace("eta", Quantity{r.eta, Dimension::dimensionless()});
    row.values.emplace("h", Quantity{r.h, p1});
    row.values.emplace("z", Quantity{r.z, p1});
    row.values.emplace("i_E", Quantity{r.i_e, Dimension::papers(3, 2)});
    row.values.emplace("C", Quantity{r.c, Dimension::papers(2)});
    table.add_row(std::move(row));
  }
  return table;
}

}  // namespace scindex::table1
