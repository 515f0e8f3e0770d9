#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "scindex/analytics.hpp"

namespace scindex::table1 {

/// One printed row of the leading polymer-solar-cell authors table.
struct PublishedRow {
  std::string_view author;
  std::uint64_t papers;
  double impact;
  double eta;
  double h;
  double z;
  double i_e;
  double c;
};

/// The ten published rows, in the published order (descending P).
std::span<const PublishedRow> rows();

/// Column order of the published table and its correlation block.
const std::vector<std::string>& columns();

/// Published correlation block, row-major over columns().
const std::array<double, 49>& printed_correlations();

/// Summary inputs (author, P, i, eta, h) for reconstruction.
std::vector<PortfolioSummary> summaries();

/// Reconstructed table: C, z, i_E derived from (P, i, eta); h carried through.
AnalyticsTable reconstructed();

/// The printed, rounded values exactly as published.
AnalyticsTable printed();

}  // namespace scindex::table1
