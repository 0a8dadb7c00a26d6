#include "qct/automorphism.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qct/error.hpp"

namespace qct {

bool OrthoAutomorphism::is_identity() const {
  for (Elem x = 0; x < map.size(); ++x) {
    if (map[x] != x) return false;
  }
  return true;
}

OrthoAutomorphism compose(const OrthoAutomorphism& f, const OrthoAutomorphism& g) {
  OrthoAutomorphism h;
  h.map.resize(g.map.size());
  for (Elem x = 0; x < g.map.size(); ++x) h.map[x] = f.map[g.map[x]];
  return h;
}

OrthoAutomorphism inverse(const OrthoAutomorphism& f) {
  OrthoAutomorphism h;
  h.map.resize(f.map.size());
  for (Elem x = 0; x < f.map.size(); ++x) h.map[f.map[x]] = x;
  return h;
}

OrthoAutomorphism identity_automorphism(std::size_t size) {
  OrthoAutomorphism id;
  id.map.resize(size);
  for (Elem x = 0; x < size; ++x) id.map[x] = x;
  return id;
}

std::string automorphism_violation(const OmlLattice& l, const OrthoAutomorphism& f) {
  if (f.map.size() != l.size()) return "wrong domain size";
  std::vector<char> hit(l.size(), 0);
  for (Elem y : f.map) {
    if (y >= l.size() || hit[y]) return "not a bijection";
    hit[y] = 1;
  }
  if (f(l.bottom()) != l.bottom() || f(l.top()) != l.top()) return "bounds not fixed";
  for (Elem x = 0; x < l.size(); ++x) {
    if (f(l.ortho(x)) != l.ortho(f(x))) return "ortho not preserved at " + l.name(x);
    for (Elem y = 0; y < l.size(); ++y) {
      if (l.leq(x, y) != l.leq(f(x), f(y))) {
        return "order not preserved at (" + l.name(x) + "," + l.name(y) + ")";
      }
    }
  }
  return {};
}

std::vector<OrthoAutomorphism> enumerate_ortho_automorphisms(const OmlLattice& l,
                                                             std::size_t cap) {
  if (l.size() > cap) {
    throw QctError(ErrorKind::SizeCapExceeded,
                   "automorphism search limited to " + std::to_string(cap) + " elements, got " +
                       std::to_string(l.size()));
  }
  constexpr Elem unset = static_cast<Elem>(-1);
  const std::size_t n = l.size();
  std::vector<Elem> map(n, unset);
  std::vector<char> used(n, 0);
  std::vector<OrthoAutomorphism> out;

  auto consistent = [&](Elem x, Elem y) {
    for (Elem z = 0; z < n; ++z) {
      if (map[z] == unset) continue;
      if (l.leq(x, z) != l.leq(y, map[z]) || l.leq(z, x) != l.leq(map[z], y)) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, Elem x) -> void {
    while (x < n && map[x] != unset) ++x;
    if (x == n) {
      out.push_back(OrthoAutomorphism{map});
      return;
    }
    const Elem xo = l.ortho(x);
    for (Elem y = 0; y < n; ++y) {
      const Elem yo = l.ortho(y);
      if (used[y] || (xo != x && used[yo]) || (xo == x) != (yo == y)) continue;
      if (!consistent(x, y)) continue;
      map[x] = y;
      used[y] = 1;
      if (xo != x) {
        if (consistent(xo, yo)) {
          map[xo] = yo;
          used[yo] = 1;
          self(self, x + 1);
          map[xo] = unset;
          used[yo] = 0;
        }
      } else {
        self(self, x + 1);
      }
      map[x] = unset;
      used[y] = 0;
    }
  };
  search(search, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> image(const OrthoAutomorphism& f, const std::vector<Elem>& carrier) {
  std::vector<Elem> out;
  for (Elem x : carrier) out.push_back(f(x));
  std::sort(out.begin(), out.end());
  return out;
}

GroupReport check_group(const std::vector<OrthoAutomorphism>& group) {
  GroupReport report;
  auto fail = [&](std::string check, std::string witness) {
    report.pass = false;
    report.failed_check = std::move(check);
    report.witness = std::move(witness);
    return report;
  };
  if (group.empty()) return fail("identity", "empty set");
  std::map<OrthoAutomorphism, std::size_t> index;
  for (std::size_t i = 0; i < group.size(); ++i) index.emplace(group[i], i);
  auto pair = [](std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };
  std::vector<std::size_t> table(group.size() * group.size());
  for (std::size_t i = 0; i < group.size(); ++i) {
    for (std::size_t j = 0; j < group.size(); ++j) {
      auto it = index.find(compose(group[i], group[j]));
      if (it == index.end()) return fail("closure", pair(i, j));
      table[i * group.size() + j] = it->second;
    }
  }
  const std::size_t n = group.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (table[table[i * n + j] * n + k] != table[i * n + table[j * n + k]]) {
          return fail("associativity",
                      "(" + std::to_string(i) + "," + std::to_string(j) + "," +
                          std::to_string(k) + ")");
        }
      }
    }
  }
  const auto id = identity_automorphism(group[0].map.size());
  if (!index.count(id)) return fail("identity", "identity missing");
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.count(inverse(group[i]))) return fail("inverse", "(" + std::to_string(i) + ")");
  }
  return report;
}

PhiValue phi_formula(const OmlLattice& l, const Block& from, const Block& to, Elem x) {
  if (std::find(from.atoms.begin(), from.atoms.end(), x) == from.atoms.end()) {
    throw QctError(ErrorKind::InputError, l.name(x) + " is not an atom of the source block");
  }
  Elem acc = l.bottom();
  for (Elem a : to.atoms) acc = l.join(acc, l.meet(x, a));
  return {acc, acc == l.bottom()};
}

bool is_unitary(const Matrix& u) {
  return u.rows() == u.cols() && u * u.adjoint() == Matrix::identity(u.rows());
}

OrthoAutomorphism induced_automorphism(const Matrix& u, const ProjectionLattice& pl) {
  if (u.rows() != pl.dim || !is_unitary(u)) {
    throw QctError(ErrorKind::NotUnitary, "U U* != I", to_string(u));
  }
  const Matrix uh = u.adjoint();
  OrthoAutomorphism f;
  for (const auto& p : pl.projections) {
    const Matrix q = u * p * uh;
    auto y = pl.find(q);
    if (!y) {
      throw QctError(ErrorKind::LatticeNotClosed, "U P U* is not in the lattice", to_string(q));
    }
    f.map.push_back(*y);
  }
  return f;
}

bool homomorphism_holds(const Matrix& u, const Matrix& v, const ProjectionLattice& pl) {
  return induced_automorphism(u * v, pl) ==
         compose(induced_automorphism(u, pl), induced_automorphism(v, pl));
}

}  // namespace qct
