#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"
#include "qct/oml.hpp"

namespace qct {

using Rational = boost::multiprecision::cpp_rational;

/// re + i·im with exact rational parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(int r) : re(r), im(0) {}

  bool is_zero() const { return re == 0 && im == 0; }
  GaussianRational conj() const { return {re, -im}; }
  /// |z|^2, always rational.
  Rational norm2() const { return re * re + im * im; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  /// Throws ZeroVector on division by zero.
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
  GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
  GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

std::string to_string(const GaussianRational& z);
/// Accepts an integer or a "p/q" string.
Rational parse_rational(const nlohmann::json& v);
/// Accepts [re, im] or a bare real scalar.
GaussianRational parse_scalar(const nlohmann::json& v);
nlohmann::json scalar_to_json(const GaussianRational& z);

using Vector = std::vector<GaussianRational>;

/// Dense row-major matrix over GaussianRational.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t n) { return Matrix(n, n); }
  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t dim);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  Vector column(std::size_t c) const;

  Matrix adjoint() const;
  std::size_t rank() const;
  /// Indices of a maximal set of linearly independent columns (pivot columns).
  std::vector<std::size_t> independent_columns() const;
  /// Inverse of a square invertible matrix.
  Matrix inverse() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator<(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

std::string to_string(const Matrix& m);
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& rows, std::size_t dim);

/// Hermitian inner product <u, v> = Σ conj(u_i) v_i.
GaussianRational inner(const Vector& u, const Vector& v);

bool is_projection(const Matrix& p);
/// P = v v* / (v* v). Throws ZeroVector.
Matrix projection_from_vector(const Vector& v);
/// Orthogonal projection onto the column space of `a`.
Matrix projection_onto_columns(const Matrix& a);
/// Projection onto range(P) + range(Q).
Matrix proj_join(const Matrix& p, const Matrix& q);
/// Projection onto range(P) ∩ range(Q), via I - ((I-P) ∨ (I-Q)).
Matrix proj_meet(const Matrix& p, const Matrix& q);
Matrix proj_ortho(const Matrix& p);
/// range(P) ⊆ range(Q), i.e. QP = P.
bool proj_leq(const Matrix& p, const Matrix& q);

/// Orthogonal (not necessarily normalized) basis.
struct ExactBasis {
  std::size_t dim = 0;
  std::vector<Vector> vectors;
};

/// The Boolean algebra generated by pairwise orthogonal rank-k atoms summing
/// to I. `elements[mask]` is the sum of the atoms selected by `mask`.
struct ProjectionBlock {
  std::size_t dim = 0;
  std::vector<Matrix> atoms;
  std::vector<Matrix> elements;

  bool contains(const Matrix& p) const;
};

/// Throws ZeroVector, NotOrthogonal, NotComplete.
ProjectionBlock block_from_basis(const ExactBasis& basis);
/// Checks P_iP_j = 0 for i != j and Σ P_i = I. Throws NotOrthogonal or
/// NotComplete.
ProjectionBlock block_from_atoms(std::vector<Matrix> atoms);
/// One nonzero range vector per atom. Throws AtomRankNotOne.
ExactBasis basis_from_block(const ProjectionBlock& block);

/// Projection OML generated by a family of bases. `projections[x]` is the
/// matrix of lattice element x.
struct ProjectionLattice {
  std::size_t dim = 0;
  OmlLattice lattice;
  std::vector<Matrix> projections;

  std::optional<Elem> find(const Matrix& p) const;
};

/// Closes the union of the bases' blocks under join, meet and I - P. Throws
/// ClosureCapExceeded when more than `cap` projections appear.
ProjectionLattice lattice_from_bases(const std::vector<ExactBasis>& bases,
                                     std::size_t cap = 64);

/// {"dim": n, "bases": [[vector, ...], ...], "unitaries": [[row, ...], ...]}
/// where each scalar is [re, im] and re/im are integers or "p/q" strings.
struct BasesFile {
  std::size_t dim = 0;
  std::vector<ExactBasis> bases;
  std::vector<Matrix> unitaries;
};
BasesFile bases_from_json(const nlohmann::json& doc, std::size_t max_dim = 4);
BasesFile read_bases(const std::filesystem::path& path, std::size_t max_dim = 4);

}  // namespace qct
