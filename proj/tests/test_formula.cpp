#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "qct/formula.hpp"

using namespace qct;

namespace {

std::vector<std::pair<std::string, std::string>> read_corpus(const std::string& file) {
  std::ifstream in(std::string(QCT_TEST_DATA) + "/" + file);
  REQUIRE(in);
  std::vector<std::pair<std::string, std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.starts_with("#")) continue;
    const auto tab = line.find('\t');
    REQUIRE(tab != std::string::npos);
    rows.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  return rows;
}

FormulaPtr random_formula(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> op(0, depth > 0 ? 7 : 1);
  const char* elems[] = {"a", "a'", "b", "1"};
  const char* blocks[] = {"Ba", "Bb", "B1"};
  auto e = [&] { return std::string(elems[rng() % 4]); };
  auto b = [&] { return std::string(blocks[rng() % 3]); };
  switch (op(rng)) {
    case 0: return Formula::atom("U_" + b() + "_" + e());
    case 1: return Formula::prop(e(), b());
    case 2: return Formula::negation(random_formula(rng, depth - 1));
    case 3: return Formula::binary(FormulaOp::And, random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 4: return Formula::binary(FormulaOp::Or, random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 5: return Formula::binary(FormulaOp::Implies, random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 6: return Formula::modal(FormulaOp::Box, b(), e(), random_formula(rng, depth - 1));
    default: return Formula::modal(FormulaOp::Diamond, b(), e(), random_formula(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("golden corpus round-trips") {
  auto rows = read_corpus("formulas_golden.txt");
  CHECK(rows.size() == 30);
  for (const auto& [input, printed] : rows) {
    CAPTURE(input);
    auto tree = parse_formula(input);
    CHECK(print_formula(*tree) == printed);
    CHECK(same_tree(*parse_formula(print_formula(*tree)), *tree));
  }
}

TEST_CASE("malformed corpus reports positions") {
  auto rows = read_corpus("formulas_malformed.txt");
  CHECK(rows.size() == 10);
  for (const auto& [input, pos] : rows) {
    CAPTURE(input);
    try {
      parse_formula(input);
      FAIL("accepted malformed formula");
    } catch (const ParseError& e) {
      CHECK(e.position() == std::stoul(pos));
      CHECK(!e.expected().empty());
      CHECK(e.kind() == ErrorKind::ParseError);
    }
  }
}

TEST_CASE("precedence and associativity") {
  auto f = parse_formula("~prop(a@B1) & prop(b@B2) | prop(c@B3) -> prop(d@B4) -> prop(e@B5)");
  REQUIRE(f->op == FormulaOp::Implies);
  CHECK(f->rhs->op == FormulaOp::Implies);
  REQUIRE(f->lhs->op == FormulaOp::Or);
  REQUIRE(f->lhs->lhs->op == FormulaOp::And);
  CHECK(f->lhs->lhs->lhs->op == FormulaOp::Not);

  auto g = parse_formula("box[B1,a] prop(a@B1) & prop(b@B1)");
  REQUIRE(g->op == FormulaOp::And);
  CHECK(g->lhs->op == FormulaOp::Box);

  auto h = parse_formula("prop(a@B1) & prop(b@B1) & prop(c@B1)");
  REQUIRE(h->op == FormulaOp::And);
  CHECK(h->lhs->op == FormulaOp::And);
  CHECK(h->rhs->op == FormulaOp::Prop);
}

TEST_CASE("keywords need a delimiter") {
  auto f = parse_formula("atom(boxes)");
  CHECK(f->name == "boxes");
  CHECK_THROWS_AS(parse_formula("boxx[B1,a] prop(a@B1)"), ParseError);
}

TEST_CASE("random trees round-trip through the printer") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 500; ++i) {
    auto tree = random_formula(rng, 4);
    const std::string text = print_formula(*tree);
    CAPTURE(text);
    auto back = parse_formula(text);
    CHECK(same_tree(*back, *tree));
    CHECK(print_formula(*back) == text);
  }
}
