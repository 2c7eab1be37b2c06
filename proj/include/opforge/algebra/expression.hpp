#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "opforge/algebra/scalar.hpp"
#include "opforge/core/signature.hpp"

namespace opforge {

/// A term tree over the generators of a symmetric presentation, with
/// abstract arguments a1..an at the leaves.
struct ExprTree {
  int gen = -1;  // index into the generator table, -1 for an argument
  int arg = 0;
  std::vector<ExprTree> children;

  static ExprTree argument(int i) { return ExprTree{-1, i, {}}; }
  static ExprTree apply(int gen, std::vector<ExprTree> children) {
    return ExprTree{gen, 0, std::move(children)};
  }
  friend bool operator==(const ExprTree&, const ExprTree&) = default;
};

struct ExprTerm {
  Scalar coeff;
  ExprTree tree;
  friend bool operator==(const ExprTerm&, const ExprTerm&) = default;
};

/// A multilinear expression: every term uses each of a1..a_arity once.
/// Terms are kept as written, without collection.
struct Expression {
  int arity = 0;
  std::vector<ExprTerm> terms;

  Expression& operator+=(const Expression& o);
  Expression& operator-=(const Expression& o);
  friend bool operator==(const Expression&, const Expression&) = default;
};

/// Grammar (whitespace-insensitive):
///   element  := ['+'|'-'] term (('+'|'-') term)* | '0'
///   term     := [rational ['*']] product
///   product  := atom ['o' atom]
///   atom     := 'a' integer | ident '(' product (',' product)* ')'
///             | '[' product ',' product ']' | '(' product ')'
///   rational := integer ['/' integer]
/// `x o y` names the generator `o`, `[x, y]` the generator `b`; everything
/// else is prefix. A chain `x o y o z` must be parenthesized.
///
/// With arity 0 the arity is inferred from the largest argument index.
/// Throws ParseError for syntax, unknown generators, and argument misuse.
Expression parse_expression(std::string_view text, const std::vector<GeneratorSpec>& gens,
                            int arity = 0);

/// Canonical printer; parse(print(e)) == e.
std::string to_text(const Expression& e, const std::vector<GeneratorSpec>& gens);
std::string to_text(const ExprTree& t, const std::vector<GeneratorSpec>& gens);

/// Number of leaves of a term tree.
int leaf_count(const ExprTree& t);

}  // namespace opforge
