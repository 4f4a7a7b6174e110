#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "torsorlat/group_lattice.hpp"

namespace torsorlat {

/// Basis e_i . e_j (i <= j) of Sym^2 Z^r, in lexicographic order:
/// (0,0), (0,1), ..., (0,r-1), (1,1), ...
class Sym2Basis {
 public:
  explicit Sym2Basis(std::size_t rank);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const noexcept { return pairs_; }
  /// Index of e_i . e_j; argument order does not matter.
  std::size_t index(std::size_t i, std::size_t j) const;

 private:
  std::size_t rank_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

/// Basis e_i ^ e_j (i < j) of the exterior square, lexicographic.
class Wedge2Basis {
 public:
  explicit Wedge2Basis(std::size_t rank);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const noexcept { return pairs_; }
  std::size_t index(std::size_t i, std::size_t j) const;

 private:
  std::size_t rank_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

/// x . y in Sym^2 coordinates, for column vectors x, y of the same length.
IntMat sym2_product(const IntMat& x, const IntMat& y);
/// x ^ y in exterior-square coordinates.
IntMat wedge2_product(const IntMat& x, const IntMat& y);

/// Induced maps of an endomorphism g of Z^r.
IntMat sym2_matrix(const IntMat& g);
IntMat wedge2_matrix(const IntMat& g);
IntMat kronecker(const IntMat& a, const IntMat& b);

GLattice sym2(const GLattice& lattice);
GLattice wedge2(const GLattice& lattice);
/// Both factors must carry the same group.
GLattice tensor(const GLattice& left, const GLattice& right);

/// Verifies 0 -> wedge^2 A -> A (x) A -> Sym^2 A -> 0, with a ^ b sent to
/// a (x) b - b (x) a: both maps equivariant, composite zero, first map
/// injective with saturated image equal to the kernel of the second, and
/// the second surjective.
bool check_sym_wedge_sequence(const GLattice& lattice);

/// Verifies that the canonical maps
///   Sym^2 A1 + A1 (x) A2 + Sym^2 A2 -> Sym^2(A1 + A2)
///   wedge^2 A1 + A1 (x) A2 + wedge^2 A2 -> wedge^2(A1 + A2)
/// are equivariant isomorphisms.
bool check_direct_sum_decomposition(const GLattice& first, const GLattice& second);

/// Same check for a lattice whose action is block diagonal with blocks of
/// ranks (split, rank - split). Throws NotApplicable if some generator
/// mixes the two summands.
bool check_direct_sum_decomposition(const GLattice& lattice, std::size_t split);

/// Direct sum with block-diagonal action.
GLattice direct_sum(const GLattice& first, const GLattice& second);

}  // namespace torsorlat
