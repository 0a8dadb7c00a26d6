#include <algorithm>

#include "doctest.h"
#include "qct/error.hpp"
#include "qct/hilbert.hpp"

using namespace qct;

namespace {

const GaussianRational I{0, 1};
const Rational half{1, 2};
const Rational mhalf{-1, 2};

ExactBasis basis(std::vector<Vector> vs) {
  ExactBasis b;
  b.dim = vs[0].size();
  b.vectors = std::move(vs);
  return b;
}

Matrix mat(std::vector<std::vector<GaussianRational>> rows) {
  Matrix m(rows.size(), rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const QctError& e) {
    return e.kind();
  }
  FAIL("expected QctError");
  return ErrorKind::InputError;
}

std::vector<ExactBasis> test_bases() {
  return {
      basis({{1, 0}, {0, 1}}),
      basis({{1, 1}, {1, -1}}),
      basis({{1, I}, {1, -I}}),
      basis({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
      basis({{1, 1, 1}, {1, -1, 0}, {1, 1, -2}}),
      basis({{1, I, 0}, {1, -I, 0}, {0, 0, 1}}),
      basis({{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 1, -1, 0}, {0, 0, 0, Rational(1, 3)}}),
  };
}

}  // namespace

TEST_CASE("gaussian rational arithmetic") {
  GaussianRational z{Rational(1, 2), Rational(-3, 4)};
  CHECK(z * z.conj() == GaussianRational(z.norm2()));
  CHECK(z / z == GaussianRational(1));
  CHECK(I * I == GaussianRational(-1));
  CHECK(to_string(GaussianRational{half, -half}) == "1/2-1/2i");
  CHECK(to_string(-I) == "-i");
  CHECK(kind_of([&] { return z / GaussianRational(0); }) == ErrorKind::ZeroVector);
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_scalar(nlohmann::json::array({"1/2", 2})) == GaussianRational(half, 2));
  CHECK(kind_of([] { parse_rational("1/0"); }) == ErrorKind::InputError);
  CHECK(kind_of([] { parse_rational("x"); }) == ErrorKind::InputError);
}

TEST_CASE("rank-1 projections from vectors") {
  CHECK(projection_from_vector({1, 0}) == mat({{1, 0}, {0, 0}}));
  CHECK(projection_from_vector({1, 1}) == mat({{half, half}, {half, half}}));
  // (1,i): v v* = [[1, -i], [i, 1]], v* v = 2.
  CHECK(projection_from_vector({1, I}) ==
        mat({{half, GaussianRational(0, -half)}, {GaussianRational(0, half), half}}));
  CHECK(kind_of([] { projection_from_vector({0, 0}); }) == ErrorKind::ZeroVector);
}

TEST_CASE("range join and meet") {
  const Matrix e1 = projection_from_vector({1, 0, 0});
  const Matrix e2 = projection_from_vector({0, 1, 0});
  const Matrix plane = proj_join(e1, e2);
  CHECK(plane == mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}));
  const Matrix diag = projection_from_vector({1, 1, 0});
  CHECK(proj_leq(diag, plane));
  CHECK(!proj_leq(diag, e1));
  CHECK(proj_meet(plane, proj_join(diag, projection_from_vector({0, 0, 1}))) == diag);
  CHECK(proj_meet(e1, diag) == Matrix::zero(3));
  CHECK(proj_join(e1, diag).rank() == 2);
}

TEST_CASE("block from basis") {
  auto std2 = block_from_basis(basis({{1, 0}, {0, 1}}));
  REQUIRE(std2.elements.size() == 4);
  CHECK(std2.elements[0] == Matrix::zero(2));
  CHECK(std2.elements[1] == mat({{1, 0}, {0, 0}}));
  CHECK(std2.elements[2] == mat({{0, 0}, {0, 1}}));
  CHECK(std2.elements[3] == Matrix::identity(2));
  auto had = block_from_basis(basis({{1, 1}, {1, -1}}));
  CHECK(had.elements[2] == mat({{half, mhalf}, {mhalf, half}}));
  auto std3 = block_from_basis(basis({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(std3.elements.size() == 8);
  for (const auto& a : std3.atoms) CHECK(a.rank() == 1);
  CHECK(kind_of([] { block_from_basis(basis({{1, 1}, {1, 0}})); }) == ErrorKind::NotOrthogonal);
  CHECK(kind_of([] {
          ExactBasis b = basis({{1, 0, 0}, {0, 1, 0}});
          b.dim = 3;
          block_from_basis(b);
        }) == ErrorKind::NotComplete);
  CHECK(kind_of([] { block_from_basis(basis({{1, 0}, {0, 0}})); }) == ErrorKind::ZeroVector);
}

TEST_CASE("basis/block round trip with exact orthogonality and completeness") {
  for (const auto& b : test_bases()) {
    auto block = block_from_basis(b);
    const std::size_t n = b.dim;
    Matrix sum = Matrix::zero(n);
    for (std::size_t i = 0; i < n; ++i) {
      sum = sum + block.atoms[i];
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) CHECK(block.atoms[i] * block.atoms[j] == Matrix::zero(n));
      }
    }
    CHECK(sum == Matrix::identity(n));
    auto back = basis_from_block(block);
    REQUIRE(back.vectors.size() == n);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(projection_from_vector(back.vectors[i]) == block.atoms[i]);
      // Same ray as the input vector: rank of [v, w] is 1.
      CHECK(Matrix::from_columns({b.vectors[i], back.vectors[i]}, n).rank() == 1);
    }
    auto again = block_from_basis(back);
    CHECK(again.elements == block.elements);
  }
}

TEST_CASE("higher-rank atoms are reported") {
  const Matrix p = proj_join(projection_from_vector({1, 0, 0}), projection_from_vector({0, 1, 0}));
  auto block = block_from_atoms({p, proj_ortho(p)});
  CHECK(block.elements.size() == 4);
  CHECK(kind_of([&] { basis_from_block(block); }) == ErrorKind::AtomRankNotOne);
}

TEST_CASE("lattices generated by bases") {
  auto one = lattice_from_bases({basis({{1, 0}, {0, 1}})});
  CHECK(one.lattice.size() == 4);
  CHECK(enumerate_blocks(one.lattice).size() == 1);

  auto two = lattice_from_bases({basis({{1, 0}, {0, 1}}), basis({{1, 1}, {1, -1}})});
  CHECK(two.lattice.size() == 6);
  CHECK(enumerate_blocks(two.lattice).size() == 2);
  CHECK(two.lattice.atoms().size() == 4);

  auto three = lattice_from_bases(
      {basis({{1, 0}, {0, 1}}), basis({{1, 1}, {1, -1}}), basis({{1, I}, {1, -I}})});
  CHECK(three.lattice.size() == 8);
  CHECK(enumerate_blocks(three.lattice).size() == 3);

  for (Elem x = 0; x < three.lattice.size(); ++x) {
    CHECK(is_projection(three.projections[x]));
    CHECK(three.projections[three.lattice.ortho(x)] == proj_ortho(three.projections[x]));
    for (Elem y = 0; y < three.lattice.size(); ++y) {
      CHECK(three.projections[three.lattice.join(x, y)] ==
            proj_join(three.projections[x], three.projections[y]));
    }
  }
}

TEST_CASE("two dim-3 bases sharing one vector paste like two triangles") {
  auto l = lattice_from_bases({basis({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
                               basis({{1, 1, 0}, {1, -1, 0}, {0, 0, 1}})});
  CHECK(l.lattice.size() == 12);
  CHECK(enumerate_blocks(l.lattice).size() == 2);
}

TEST_CASE("closure cap") {
  // Two bases in general position generate an infinite lattice.
  std::vector<ExactBasis> bs{basis({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
                             basis({{1, 1, 1}, {1, -1, 0}, {1, 1, -2}})};
  CHECK(kind_of([&] { lattice_from_bases(bs); }) == ErrorKind::ClosureCapExceeded);
  CHECK(kind_of([&] {
          lattice_from_bases({basis({{1, 0}, {0, 1}}), basis({{1, 1}, {1, -1}})}, 5);
        }) == ErrorKind::ClosureCapExceeded);
}

TEST_CASE("bases file parsing") {
  auto doc = nlohmann::json::parse(R"({"dim": 2, "bases": [[[[1,0],[0,0]],[[0,0],[1,0]]],
                                      [[[1,0],["1/2",0]],[["-1/2",0],[1,0]]]]})");
  auto f = bases_from_json(doc);
  CHECK(f.bases.size() == 2);
  CHECK(f.bases[1].vectors[0][1] == GaussianRational(half));
  auto big = nlohmann::json::parse(R"({"dim": 5, "bases": []})");
  CHECK(kind_of([&] { bases_from_json(big); }) == ErrorKind::SizeCapExceeded);
}
