#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scindex/dim_expr.hpp"
#include "scindex/quantity.hpp"

namespace scindex {

/// Citation counts of a portfolio, one entry per paper. Stored in canonical
/// non-increasing order, so every indicator is permutation invariant.
/// An empty vector is representable; indicators reject it with EmptyPortfolioError.
class CitationVector {
 public:
  CitationVector() = default;
  explicit CitationVector(std::vector<std::uint64_t> counts);
  CitationVector(std::initializer_list<std::uint64_t> counts)
      : CitationVector(std::vector<std::uint64_t>(counts)) {}

  /// Sorted non-increasing.
  std::span<const std::uint64_t> counts() const noexcept { return counts_; }
  std::size_t size() const noexcept { return counts_.size(); }
  bool empty() const noexcept { return counts_.empty(); }

  friend bool operator==(const CitationVector&, const CitationVector&) = default;

 private:
  std::vector<std::uint64_t> counts_;
};

Quantity paper_count(const CitationVector& v);      // P    [P]
Quantity total_citations(const CitationVector& v);  // C    [P^2]
Quantity mean_impact(const CitationVector& v);      // i    [P]
Quantity h_index(const CitationVector& v);         // h    [P]
Quantity g_index(const CitationVector& v);         // g    [P], capped at P
Quantity energy(const CitationVector& v);           // E    [P^3]
Quantity exergy(const CitationVector& v);           // X    [P^3]
Quantity entropy_term(const CitationVector& v);     // S    [P^3]
/// eta = X/E, dimensionless. The all-zero vector is perfectly even: eta = 1.
Quantity consistency(const CitationVector& v);
Quantity z_index(const CitationVector& v);          // z    [P]
Quantity euclidean_index(const CitationVector& v);  // i_E  [P^3/2]

struct IndicatorDescriptor {
  std::string_view name;
  Dimension declared_dim;
  Quantity (*compute)(const CitationVector&);
  /// Integral by definition on raw vectors (rendered without decimals).
  bool integral = false;
};

/// Fixed registry order: P, C, i, h, g, X, E, S, eta, z, i_E.
std::span<const IndicatorDescriptor> indicator_registry();

/// Throws UnknownIndicatorError.
const IndicatorDescriptor& find_indicator(std::string_view name);

/// Every indicator name mapped to its declared dimension, for eval_dim_expr.
SymbolTable indicator_symbols();

/// One portfolio's indicators by name. Reports built from summaries hold a subset.
using IndicatorReport = std::map<std::string, Quantity, std::less<>>;

/// All registered indicators. Throws std::logic_error if a descriptor returns
/// a dimension other than the one it declares.
IndicatorReport compute_all(const CitationVector& v);

}  // namespace scindex
