#include "qct/hilbert.hpp"

#include <algorithm>

#include "qct/error.hpp"
#include "qct/lattice_io.hpp"

namespace qct {

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  const Rational d = b.norm2();
  if (d == 0) throw QctError(ErrorKind::ZeroVector, "division by zero scalar");
  const GaussianRational n = a * b.conj();
  return {n.re / d, n.im / d};
}

std::string to_string(const GaussianRational& z) {
  if (z.im == 0) return z.re.str();
  std::string im = z.im == 1 ? "" : z.im == -1 ? "-" : z.im.str();
  if (z.re == 0) return im + "i";
  return z.re.str() + (z.im > 0 ? "+" : "") + im + "i";
}

Rational parse_rational(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    const auto slash = s.find('/');
    auto digits = [](const std::string& t, bool sign) {
      std::size_t i = (sign && !t.empty() && t[0] == '-') ? 1 : 0;
      return i < t.size() &&
             std::all_of(t.begin() + i, t.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (digits(num, true) && digits(den, false)) {
      boost::multiprecision::cpp_int d(den);
      if (d != 0) return Rational(boost::multiprecision::cpp_int(num), d);
    }
    throw QctError(ErrorKind::InputError, "malformed rational '" + s + "'");
  }
  throw QctError(ErrorKind::InputError, "rational must be an integer or \"p/q\" string");
}

GaussianRational parse_scalar(const nlohmann::json& v) {
  if (v.is_array()) {
    if (v.size() != 2) throw QctError(ErrorKind::InputError, "scalar must be [re, im]");
    return {parse_rational(v[0]), parse_rational(v[1])};
  }
  return {parse_rational(v), 0};
}

nlohmann::json scalar_to_json(const GaussianRational& z) {
  auto one = [](const Rational& r) -> nlohmann::json {
    if (denominator(r) == 1) return numerator(r).str();
    return r.str();
  };
  return nlohmann::json::array({one(z.re), one(z.im)});
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t dim) {
  Matrix m(dim, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t r = 0; r < dim; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::adjoint() const {
  Matrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c).conj();
  }
  return m;
}

std::vector<std::size_t> Matrix::independent_columns() const {
  Matrix m = *this;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols_ && row < rows_; ++c) {
    std::size_t p = row;
    while (p < rows_ && m(p, c).is_zero()) ++p;
    if (p == rows_) continue;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(m(p, k), m(row, k));
    for (std::size_t r = row + 1; r < rows_; ++r) {
      if (m(r, c).is_zero()) continue;
      const GaussianRational f = m(r, c) / m(row, c);
      for (std::size_t k = c; k < cols_; ++k) m(r, k) -= f * m(row, k);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::size_t Matrix::rank() const { return independent_columns().size(); }

Matrix Matrix::inverse() const {
  const std::size_t n = rows_;
  Matrix a = *this;
  Matrix inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) throw QctError(ErrorKind::InputError, "singular matrix");
    for (std::size_t k = 0; k < n; ++k) {
      std::swap(a(p, k), a(c, k));
      std::swap(inv(p, k), inv(c, k));
    }
    const GaussianRational piv = a(c, c);
    for (std::size_t k = 0; k < n; ++k) {
      a(c, k) = a(c, k) / piv;
      inv(c, k) = inv(c, k) / piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      const GaussianRational f = a(r, c);
      for (std::size_t k = 0; k < n; ++k) {
        a(r, k) -= f * a(c, k);
        inv(r, k) -= f * inv(c, k);
      }
    }
  }
  return inv;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) m(r, c) += a(r, k) * b(k, c);
    }
  }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

bool operator<(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    return std::pair(a.rows_, a.cols_) < std::pair(b.rows_, b.cols_);
  }
  for (std::size_t i = 0; i < a.data_.size(); ++i) {
    const auto& x = a.data_[i];
    const auto& y = b.data_[i];
    if (x.re != y.re) return x.re < y.re;
    if (x.im != y.im) return x.im < y.im;
  }
  return false;
}

std::string to_string(const Matrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += r ? ",[" : "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ",";
      out += to_string(m(r, c));
    }
    out += "]";
  }
  return out + "]";
}

nlohmann::json matrix_to_json(const Matrix& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const nlohmann::json& rows, std::size_t dim) {
  if (!rows.is_array() || rows.size() != dim) {
    throw QctError(ErrorKind::InputError, "matrix must have " + std::to_string(dim) + " rows");
  }
  Matrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    if (!rows[r].is_array() || rows[r].size() != dim) {
      throw QctError(ErrorKind::InputError,
                     "matrix row must have " + std::to_string(dim) + " entries");
    }
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = parse_scalar(rows[r][c]);
  }
  return m;
}

GaussianRational inner(const Vector& u, const Vector& v) {
  GaussianRational s;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i].conj() * v[i];
  return s;
}

bool is_projection(const Matrix& p) {
  return p.rows() == p.cols() && p * p == p && p.adjoint() == p;
}

Matrix projection_from_vector(const Vector& v) {
  const GaussianRational n = inner(v, v);
  if (n.is_zero()) throw QctError(ErrorKind::ZeroVector, "projection of the zero vector");
  Matrix m(v.size(), v.size());
  for (std::size_t r = 0; r < v.size(); ++r) {
    for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = v[r] * v[c].conj() / n;
  }
  return m;
}

Matrix projection_onto_columns(const Matrix& a) {
  const auto cols = a.independent_columns();
  if (cols.empty()) return Matrix::zero(a.rows());
  std::vector<Vector> basis;
  for (auto c : cols) basis.push_back(a.column(c));
  const Matrix b = Matrix::from_columns(basis, a.rows());
  const Matrix bh = b.adjoint();
  return b * (bh * b).inverse() * bh;
}

Matrix proj_join(const Matrix& p, const Matrix& q) {
  Matrix both(p.rows(), p.cols() + q.cols());
  for (std::size_t r = 0; r < p.rows(); ++r) {
    for (std::size_t c = 0; c < p.cols(); ++c) both(r, c) = p(r, c);
    for (std::size_t c = 0; c < q.cols(); ++c) both(r, p.cols() + c) = q(r, c);
  }
  return projection_onto_columns(both);
}

Matrix proj_ortho(const Matrix& p) { return Matrix::identity(p.rows()) - p; }

Matrix proj_meet(const Matrix& p, const Matrix& q) {
  return proj_ortho(proj_join(proj_ortho(p), proj_ortho(q)));
}

bool proj_leq(const Matrix& p, const Matrix& q) { return q * p == p; }

bool ProjectionBlock::contains(const Matrix& p) const {
  return std::find(elements.begin(), elements.end(), p) != elements.end();
}

ProjectionBlock block_from_atoms(std::vector<Matrix> atoms) {
  if (atoms.empty()) throw QctError(ErrorKind::NotComplete, "no atoms");
  const std::size_t dim = atoms[0].rows();
  if (atoms.size() > 16) throw QctError(ErrorKind::SizeCapExceeded, "too many atoms");
  Matrix sum = Matrix::zero(dim);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (!is_projection(atoms[i])) {
      throw QctError(ErrorKind::InputError, "atom " + std::to_string(i + 1) +
                                                " is not an orthogonal projection");
    }
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      if (!(atoms[i] * atoms[j] == Matrix::zero(dim))) {
        throw QctError(ErrorKind::NotOrthogonal, "P_i P_j != 0",
                       "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
    }
    sum = sum + atoms[i];
  }
  if (!(sum == Matrix::identity(dim))) {
    throw QctError(ErrorKind::NotComplete, "sum of atoms is not I", to_string(sum));
  }
  ProjectionBlock block;
  block.dim = dim;
  block.elements.resize(std::size_t{1} << atoms.size());
  for (std::size_t mask = 0; mask < block.elements.size(); ++mask) {
    Matrix m = Matrix::zero(dim);
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (mask >> i & 1u) m = m + atoms[i];
    }
    block.elements[mask] = std::move(m);
  }
  block.atoms = std::move(atoms);
  return block;
}

ProjectionBlock block_from_basis(const ExactBasis& basis) {
  for (std::size_t i = 0; i < basis.vectors.size(); ++i) {
    if (basis.vectors[i].size() != basis.dim) {
      throw QctError(ErrorKind::InputError, "vector length differs from dim");
    }
    if (std::all_of(basis.vectors[i].begin(), basis.vectors[i].end(),
                    [](const auto& z) { return z.is_zero(); })) {
      throw QctError(ErrorKind::ZeroVector, "basis vector " + std::to_string(i + 1) + " is zero");
    }
  }
  for (std::size_t i = 0; i < basis.vectors.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.vectors.size(); ++j) {
      if (!inner(basis.vectors[i], basis.vectors[j]).is_zero()) {
        throw QctError(ErrorKind::NotOrthogonal, "basis vectors are not orthogonal",
                       "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
    }
  }
  if (basis.vectors.size() != basis.dim) {
    throw QctError(ErrorKind::NotComplete, std::to_string(basis.vectors.size()) +
                                               " vectors do not span dim " +
                                               std::to_string(basis.dim));
  }
  std::vector<Matrix> atoms;
  for (const auto& v : basis.vectors) atoms.push_back(projection_from_vector(v));
  return block_from_atoms(std::move(atoms));
}

ExactBasis basis_from_block(const ProjectionBlock& block) {
  ExactBasis basis;
  basis.dim = block.dim;
  for (std::size_t i = 0; i < block.atoms.size(); ++i) {
    const Matrix& p = block.atoms[i];
    const auto cols = p.independent_columns();
    if (cols.size() != 1) {
      throw QctError(ErrorKind::AtomRankNotOne,
                     "atom " + std::to_string(i + 1) + " has rank " + std::to_string(cols.size()),
                     to_string(p));
    }
    basis.vectors.push_back(p.column(cols[0]));
  }
  return basis;
}

std::optional<Elem> ProjectionLattice::find(const Matrix& p) const {
  auto it = std::find(projections.begin(), projections.end(), p);
  if (it == projections.end()) return std::nullopt;
  return static_cast<Elem>(it - projections.begin());
}

ProjectionLattice lattice_from_bases(const std::vector<ExactBasis>& bases, std::size_t cap) {
  if (bases.empty()) throw QctError(ErrorKind::InputError, "no bases given");
  const std::size_t dim = bases[0].dim;
  std::vector<Matrix> found;
  auto add = [&](Matrix m) {
    if (std::find(found.begin(), found.end(), m) != found.end()) return;
    if (found.size() >= cap) {
      throw QctError(ErrorKind::ClosureCapExceeded,
                     "projection closure exceeds " + std::to_string(cap) + " elements");
    }
    found.push_back(std::move(m));
  };
  add(Matrix::zero(dim));
  add(Matrix::identity(dim));
  for (const auto& b : bases) {
    if (b.dim != dim) throw QctError(ErrorKind::InputError, "bases differ in dim");
    const auto block = block_from_basis(b);
    for (const auto& a : block.atoms) add(a);
    for (const auto& e : block.elements) add(e);
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    add(proj_ortho(found[i]));
    for (std::size_t j = 0; j < i; ++j) {
      add(proj_join(found[i], found[j]));
      add(proj_meet(found[i], found[j]));
    }
  }

  // Declaration order: by rank, then discovery.
  std::vector<std::size_t> rank(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) rank[i] = found[i].rank();
  std::vector<std::size_t> order(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
  ProjectionLattice out;
  out.dim = dim;
  RawLattice raw;
  raw.relation_is_covers = false;
  std::vector<std::string> names(found.size());
  std::size_t counter = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t i = order[k];
    if (rank[i] == 0) {
      names[i] = "0";
    } else if (rank[i] == dim) {
      names[i] = "1";
    } else {
      names[i] = "p" + std::to_string(++counter);
    }
    raw.elements.push_back(names[i]);
    out.projections.push_back(found[i]);
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    const auto o = std::find(found.begin(), found.end(), proj_ortho(found[i])) - found.begin();
    raw.ortho.emplace_back(names[i], names[o]);
    for (std::size_t j = 0; j < found.size(); ++j) {
      if (i != j && proj_leq(found[i], found[j])) raw.relation.emplace_back(names[i], names[j]);
    }
  }
  out.lattice = validate_oml(raw);
  return out;
}

BasesFile bases_from_json(const nlohmann::json& doc, std::size_t max_dim) {
  if (!doc.is_object() || !doc.contains("dim") || !doc["dim"].is_number_unsigned()) {
    throw QctError(ErrorKind::InputError, "bases file needs a positive integer 'dim'");
  }
  BasesFile file;
  file.dim = doc["dim"].get<std::size_t>();
  if (file.dim == 0) throw QctError(ErrorKind::InputError, "dim must be positive");
  if (file.dim > max_dim) {
    throw QctError(ErrorKind::SizeCapExceeded,
                   "dim " + std::to_string(file.dim) + " exceeds cap " + std::to_string(max_dim));
  }
  if (doc.contains("bases")) {
    if (!doc["bases"].is_array()) throw QctError(ErrorKind::InputError, "'bases' must be an array");
    for (const auto& b : doc["bases"]) {
      if (!b.is_array()) throw QctError(ErrorKind::InputError, "each basis must be an array");
      ExactBasis basis;
      basis.dim = file.dim;
      for (const auto& v : b) {
        if (!v.is_array() || v.size() != file.dim) {
          throw QctError(ErrorKind::InputError,
                         "each vector needs " + std::to_string(file.dim) + " entries");
        }
        Vector vec;
        for (const auto& z : v) vec.push_back(parse_scalar(z));
        basis.vectors.push_back(std::move(vec));
      }
      file.bases.push_back(std::move(basis));
    }
  }
  if (doc.contains("unitaries")) {
    for (const auto& u : doc["unitaries"]) file.unitaries.push_back(matrix_from_json(u, file.dim));
  }
  return file;
}

BasesFile read_bases(const std::filesystem::path& path, std::size_t max_dim) {
  return bases_from_json(read_json_file(path), max_dim);
}

}  // namespace qct
