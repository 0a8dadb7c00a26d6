#include "qct/formula.hpp"

#include <cctype>

namespace qct {

FormulaPtr Formula::atom(std::string name) {
  return std::make_shared<const Formula>(Formula{FormulaOp::Atom, std::move(name), {}, {}, {}, {}});
}

FormulaPtr Formula::prop(std::string elem, std::string block) {
  return std::make_shared<const Formula>(
      Formula{FormulaOp::Prop, {}, std::move(elem), std::move(block), {}, {}});
}

FormulaPtr Formula::negation(FormulaPtr f) {
  return std::make_shared<const Formula>(Formula{FormulaOp::Not, {}, {}, {}, std::move(f), {}});
}

FormulaPtr Formula::binary(FormulaOp op, FormulaPtr lhs, FormulaPtr rhs) {
  return std::make_shared<const Formula>(Formula{op, {}, {}, {}, std::move(lhs), std::move(rhs)});
}

FormulaPtr Formula::modal(FormulaOp op, std::string block, std::string elem, FormulaPtr f) {
  return std::make_shared<const Formula>(
      Formula{op, {}, std::move(elem), std::move(block), std::move(f), {}});
}

bool same_tree(const Formula& a, const Formula& b) {
  if (a.op != b.op || a.name != b.name || a.elem != b.elem || a.block != b.block) return false;
  if (bool(a.lhs) != bool(b.lhs) || bool(a.rhs) != bool(b.rhs)) return false;
  if (a.lhs && !same_tree(*a.lhs, *b.lhs)) return false;
  if (a.rhs && !same_tree(*a.rhs, *b.rhs)) return false;
  return true;
}

namespace {

std::string describe(std::size_t position, const std::vector<std::string>& expected,
                     const std::string& found) {
  std::string msg = "at position " + std::to_string(position) + ": expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) msg += i + 1 == expected.size() ? " or " : ", ";
    msg += expected[i];
  }
  return msg + ", found " + found;
}

}  // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected, std::string found)
    : QctError(ErrorKind::ParseError, describe(position, expected, found),
               std::to_string(position)),
      position_(position),
      expected_(std::move(expected)) {}

namespace {

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FormulaPtr parse() {
    FormulaPtr f = implication();
    skip();
    if (pos_ != text_.size()) fail({"'&'", "'|'", "'->'", "end of input"});
    return f;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string found() const {
    if (pos_ >= text_.size()) return "end of input";
    std::size_t end = pos_;
    if (name_char(text_[end])) {
      while (end < text_.size() && name_char(text_[end])) ++end;
    } else {
      end = pos_ + (text_.compare(pos_, 2, "->") == 0 ? 2 : 1);
    }
    return "'" + std::string(text_.substr(pos_, end - pos_)) + "'";
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    throw ParseError(pos_, std::move(expected), found());
  }

  bool accept(std::string_view tok) {
    skip();
    if (text_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail({"'" + std::string(tok) + "'"});
  }

  /// Keyword only when not followed by further name characters.
  bool accept_keyword(std::string_view kw) {
    skip();
    if (text_.compare(pos_, kw.size(), kw) != 0) return false;
    const std::size_t end = pos_ + kw.size();
    if (end < text_.size() && name_char(text_[end])) return false;
    pos_ = end;
    return true;
  }

  std::string name(const char* what) {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && name_char(text_[pos_])) ++pos_;
    if (pos_ == start) fail({what});
    return std::string(text_.substr(start, pos_ - start));
  }

  FormulaPtr implication() {
    FormulaPtr lhs = disjunction();
    if (accept("->")) return Formula::binary(FormulaOp::Implies, lhs, implication());
    return lhs;
  }

  FormulaPtr disjunction() {
    FormulaPtr f = conjunction();
    while (accept("|")) f = Formula::binary(FormulaOp::Or, f, conjunction());
    return f;
  }

  FormulaPtr conjunction() {
    FormulaPtr f = unary();
    while (accept("&")) f = Formula::binary(FormulaOp::And, f, unary());
    return f;
  }

  FormulaPtr unary() {
    if (accept("~")) return Formula::negation(unary());
    for (auto [kw, op] : {std::pair{"box", FormulaOp::Box}, std::pair{"dia", FormulaOp::Diamond}}) {
      if (accept_keyword(kw)) {
        expect("[");
        std::string block = name("block name");
        expect(",");
        std::string elem = name("element name");
        expect("]");
        return Formula::modal(op, std::move(block), std::move(elem), unary());
      }
    }
    return primary();
  }

  FormulaPtr primary() {
    if (accept_keyword("atom")) {
      expect("(");
      std::string n = name("atom name");
      expect(")");
      return Formula::atom(std::move(n));
    }
    if (accept_keyword("prop")) {
      expect("(");
      std::string elem = name("element name");
      expect("@");
      std::string block = name("block name");
      expect(")");
      return Formula::prop(std::move(elem), std::move(block));
    }
    if (accept("(")) {
      FormulaPtr f = implication();
      expect(")");
      return f;
    }
    fail({"'~'", "'box'", "'dia'", "'atom'", "'prop'", "'('"});
  }
};

int precedence(const Formula& f) {
  switch (f.op) {
    case FormulaOp::Implies: return 1;
    case FormulaOp::Or: return 2;
    case FormulaOp::And: return 3;
    case FormulaOp::Not:
    case FormulaOp::Box:
    case FormulaOp::Diamond: return 4;
    default: return 5;
  }
}

std::string print_at(const Formula& f, int required) {
  std::string s;
  switch (f.op) {
    case FormulaOp::Atom: s = "atom(" + f.name + ")"; break;
    case FormulaOp::Prop: s = "prop(" + f.elem + "@" + f.block + ")"; break;
    case FormulaOp::Not: s = "~" + print_at(*f.lhs, 4); break;
    case FormulaOp::Box:
    case FormulaOp::Diamond:
      s = std::string(f.op == FormulaOp::Box ? "box[" : "dia[") + f.block + "," + f.elem + "] " +
          print_at(*f.lhs, 4);
      break;
    case FormulaOp::And: s = print_at(*f.lhs, 3) + " & " + print_at(*f.rhs, 4); break;
    case FormulaOp::Or: s = print_at(*f.lhs, 2) + " | " + print_at(*f.rhs, 3); break;
    case FormulaOp::Implies: s = print_at(*f.lhs, 2) + " -> " + print_at(*f.rhs, 1); break;
  }
  return precedence(f) < required ? "(" + s + ")" : s;
}

std::size_t resolve_block(const ContextSpace& s, const std::string& label) {
  auto b = s.find_block(label);
  if (!b) throw QctError(ErrorKind::UnknownBlock, "unknown block '" + label + "'", label);
  return *b;
}

Elem resolve_elem(const ContextSpace& s, const std::string& name) {
  auto e = s.lattice().find(name);
  if (!e) throw QctError(ErrorKind::UnknownProposition, "unknown proposition '" + name + "'", name);
  return *e;
}

}  // namespace

FormulaPtr parse_formula(std::string_view text) { return Parser(text).parse(); }

std::string print_formula(const Formula& f) { return print_at(f, 0); }

PointSet eval(const QuantumFrame& frame, const Formula& f) {
  const auto& s = frame.space();
  switch (f.op) {
    case FormulaOp::Atom:
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.open_name(i) == f.name) return s.basic_open(i);
      }
      throw QctError(ErrorKind::UnknownProposition, "unknown clopen atom '" + f.name + "'", f.name);
    case FormulaOp::Prop: {
      const std::size_t b = resolve_block(s, f.block);
      const Elem p = resolve_elem(s, f.elem);
      if (!s.blocks()[b].contains(p)) {
        throw QctError(ErrorKind::PropNotInBlock, f.elem + " is not in block " + f.block,
                       "(" + f.elem + "," + f.block + ")");
      }
      return frame.prop_set(p) & s.block_points(b);
    }
    case FormulaOp::Not: return ~eval(frame, *f.lhs);
    case FormulaOp::And: return eval(frame, *f.lhs) & eval(frame, *f.rhs);
    case FormulaOp::Or: return eval(frame, *f.lhs) | eval(frame, *f.rhs);
    case FormulaOp::Implies: return ~eval(frame, *f.lhs) | eval(frame, *f.rhs);
    case FormulaOp::Box:
    case FormulaOp::Diamond: {
      const std::size_t b = resolve_block(s, f.block);
      const Elem p = resolve_elem(s, f.elem);
      auto k = frame.find_index(b, p);
      if (!k) {
        throw QctError(ErrorKind::UnknownProposition,
                       "modal index needs a nonzero element, got '" + f.elem + "'", f.elem);
      }
      const PointSet inner = eval(frame, *f.lhs);
      return f.op == FormulaOp::Box ? frame.box(*k, inner) : frame.diamond(*k, inner);
    }
  }
  return s.empty_set();
}

}  // namespace qct
