#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "scindex/dimension.hpp"

namespace scindex {

using SymbolTable = std::map<std::string, Dimension, std::less<>>;

/// Immutable expression tree over named symbols, used to check the dimension
/// of index formulas such as "(eta*i^2*P)^(1/3)". Subtrees are shared.
class DimExpr {
 public:
  enum class Kind { Symbol, Product, Quotient, Sum, Power };

  static DimExpr symbol(std::string name);
  static DimExpr product(DimExpr lhs, DimExpr rhs);
  static DimExpr quotient(DimExpr lhs, DimExpr rhs);
  static DimExpr sum(DimExpr lhs, DimExpr rhs);
  static DimExpr power(DimExpr base, Rational exponent);

  Kind kind() const noexcept;
  /// Symbol name; empty for non-leaf nodes.
  const std::string& name() const noexcept;
  /// Left operand, or the base of a Power.
  const DimExpr& lhs() const;
  const DimExpr& rhs() const;
  /// Exponent of a Power; 1 otherwise.
  const Rational& exponent() const noexcept;

  friend bool operator==(const DimExpr& a, const DimExpr& b);

 private:
  struct Node;
  explicit DimExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Grammar, loosest to tightest:
///
///   sum      := product ('+' product)*
///   product  := power (('*' | '/') power)*
///   power    := primary ('^' exponent)?
///   exponent := int | '(' int ('/' int)? ')'   ['^' exponent, right-assoc]
///   primary  := identifier | '(' sum ')'
///
/// where int may carry a leading '-'. Identifiers are ASCII [A-Za-z_][A-Za-z0-9_]*.
/// Throws ParseError carrying the 0-based offset of the offending token.
DimExpr parse_dim_expr(std::string_view text);

/// Canonical infix form with minimal parentheses; parse_dim_expr(to_string(e)) == e.
std::string to_string(const DimExpr& expr);

/// Throws UnknownSymbolError for unresolved leaves and HeterogeneityError
/// for sums over different dimensions.
Dimension eval_dim_expr(const DimExpr& expr, const SymbolTable& symbols);

}  // namespace scindex
