#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qct/error.hpp"
#include "qct/frame.hpp"

namespace qct {

enum class FormulaOp { Atom, Prop, Not, And, Or, Implies, Box, Diamond };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable syntax tree.
///   Atom:        name
///   Prop:        elem @ block
///   Box/Diamond: [block, elem] lhs
///   Not:         lhs
///   binary:      lhs op rhs
struct Formula {
  FormulaOp op;
  std::string name;
  std::string elem;
  std::string block;
  FormulaPtr lhs;
  FormulaPtr rhs;

  static FormulaPtr atom(std::string name);
  static FormulaPtr prop(std::string elem, std::string block);
  static FormulaPtr negation(FormulaPtr f);
  static FormulaPtr binary(FormulaOp op, FormulaPtr lhs, FormulaPtr rhs);
  static FormulaPtr modal(FormulaOp op, std::string block, std::string elem, FormulaPtr f);
};

bool same_tree(const Formula& a, const Formula& b);

class ParseError : public QctError {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected, std::string found);

  /// 0-based byte offset into the input.
  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

/// Grammar, loosest binding first:
///   f    := or ('->' f)?
///   or   := and ('|' and)*
///   and  := un ('&' un)*
///   un   := '~' un | 'box' '[' NAME ',' NAME ']' un | 'dia' '[' ... ']' un | prim
///   prim := 'atom' '(' NAME ')' | 'prop' '(' NAME '@' NAME ')' | '(' f ')'
/// NAME is [A-Za-z0-9_']+. Whitespace is ignored between tokens.
FormulaPtr parse_formula(std::string_view text);

/// Fewest parentheses that reparse to the same tree.
std::string print_formula(const Formula& f);

/// Clopen set of points satisfying f. Throws UnknownBlock,
/// UnknownProposition, PropNotInBlock or NotClopen.
PointSet eval(const QuantumFrame& frame, const Formula& f);

}  // namespace qct
