#include "torsorlat/multilinear.hpp"

namespace torsorlat {

Sym2Basis::Sym2Basis(std::size_t rank) : rank_(rank) {
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = i; j < rank; ++j) pairs_.emplace_back(i, j);
}

std::size_t Sym2Basis::index(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  if (j >= rank_) throw Error(ErrorCode::IndexOutOfRange, "Sym^2 index");
  // Rows 0..i-1 contribute (rank - 0) + ... + (rank - i + 1) entries.
  return i * rank_ - i * (i - 1) / 2 + (j - i);
}

Wedge2Basis::Wedge2Basis(std::size_t rank) : rank_(rank) {
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = i + 1; j < rank; ++j) pairs_.emplace_back(i, j);
}

std::size_t Wedge2Basis::index(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  if (i == j || j >= rank_) throw Error(ErrorCode::IndexOutOfRange, "wedge^2 index");
  return i * (rank_ - 1) - i * (i - 1) / 2 + (j - i - 1);
}

IntMat sym2_product(const IntMat& x, const IntMat& y) {
  if (x.cols() != 1 || y.cols() != 1 || x.rows() != y.rows())
    throw Error(ErrorCode::DimensionMismatch, "sym2_product needs column vectors of equal length");
  Sym2Basis basis(x.rows());
  IntMat out(basis.size(), 1);
  for (std::size_t a = 0; a < x.rows(); ++a)
    for (std::size_t b = 0; b < x.rows(); ++b) out(basis.index(a, b), 0) += x(a, 0) * y(b, 0);
  return out;
}

IntMat wedge2_product(const IntMat& x, const IntMat& y) {
  if (x.cols() != 1 || y.cols() != 1 || x.rows() != y.rows())
    throw Error(ErrorCode::DimensionMismatch, "wedge2_product needs column vectors of equal length");
  Wedge2Basis basis(x.rows());
  IntMat out(basis.size(), 1);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    auto [a, b] = basis.pairs()[k];
    out(k, 0) = x(a, 0) * y(b, 0) - x(b, 0) * y(a, 0);
  }
  return out;
}

IntMat sym2_matrix(const IntMat& g) {
  if (!g.is_square()) throw Error(ErrorCode::NonSquare, "sym2_matrix");
  Sym2Basis basis(g.rows());
  IntMat out(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    auto [i, j] = basis.pairs()[col];
    IntMat image = sym2_product(g.col(i), g.col(j));
    for (std::size_t row = 0; row < basis.size(); ++row) out(row, col) = image(row, 0);
  }
  return out;
}

IntMat wedge2_matrix(const IntMat& g) {
  if (!g.is_square()) throw Error(ErrorCode::NonSquare, "wedge2_matrix");
  Wedge2Basis basis(g.rows());
  IntMat out(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    auto [i, j] = basis.pairs()[col];
    IntMat image = wedge2_product(g.col(i), g.col(j));
    for (std::size_t row = 0; row < basis.size(); ++row) out(row, col) = image(row, 0);
  }
  return out;
}

IntMat kronecker(const IntMat& a, const IntMat& b) {
  IntMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

GLattice sym2(const GLattice& lattice) {
  std::vector<IntMat> action;
  for (const auto& g : lattice.action()) action.push_back(sym2_matrix(g));
  const std::size_t r = lattice.rank();
  return GLattice(lattice.group(), std::move(action), r * (r + 1) / 2);
}

GLattice wedge2(const GLattice& lattice) {
  std::vector<IntMat> action;
  for (const auto& g : lattice.action()) action.push_back(wedge2_matrix(g));
  const std::size_t r = lattice.rank();
  return GLattice(lattice.group(), std::move(action), r * (r - (r > 0 ? 1 : 0)) / 2);
}

GLattice tensor(const GLattice& left, const GLattice& right) {
  if (left.group() != right.group() && !left.group()->same_as(*right.group()))
    throw Error(ErrorCode::GroupMismatch, "tensor factors carry different groups");
  std::vector<IntMat> action;
  for (std::size_t s = 0; s < left.action().size(); ++s) action.push_back(kronecker(left.action()[s], right.action()[s]));
  return GLattice(left.group(), std::move(action), left.rank() * right.rank());
}

GLattice direct_sum(const GLattice& first, const GLattice& second) {
  if (first.group() != second.group() && !first.group()->same_as(*second.group()))
    throw Error(ErrorCode::GroupMismatch, "summands carry different groups");
  const std::size_t r1 = first.rank();
  const std::size_t r2 = second.rank();
  std::vector<IntMat> action;
  for (std::size_t s = 0; s < first.action().size(); ++s) {
    IntMat m(r1 + r2, r1 + r2);
    for (std::size_t i = 0; i < r1; ++i)
      for (std::size_t j = 0; j < r1; ++j) m(i, j) = first.action()[s](i, j);
    for (std::size_t i = 0; i < r2; ++i)
      for (std::size_t j = 0; j < r2; ++j) m(r1 + i, r1 + j) = second.action()[s](i, j);
    action.push_back(std::move(m));
  }
  return GLattice(first.group(), std::move(action), r1 + r2);
}

namespace {

// a ^ b -> a (x) b - b (x) a
IntMat wedge_to_tensor(std::size_t r) {
  Wedge2Basis wb(r);
  IntMat m(r * r, wb.size());
  for (std::size_t k = 0; k < wb.size(); ++k) {
    auto [i, j] = wb.pairs()[k];
    m(i * r + j, k) = 1;
    m(j * r + i, k) = -1;
  }
  return m;
}

// a (x) b -> a . b
IntMat tensor_to_sym(std::size_t r) {
  Sym2Basis sb(r);
  IntMat m(sb.size(), r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) m(sb.index(i, j), i * r + j) = 1;
  return m;
}

bool all_units(const std::vector<Integer>& diag) {
  for (const auto& d : diag)
    if (d != 1) return false;
  return true;
}

}  // namespace

bool check_sym_wedge_sequence(const GLattice& lattice) {
  const std::size_t r = lattice.rank();
  const GLattice w = wedge2(lattice);
  const GLattice t = tensor(lattice, lattice);
  const GLattice s = sym2(lattice);
  const IntMat iota = wedge_to_tensor(r);
  const IntMat pi = tensor_to_sym(r);

  for (std::size_t g = 0; g < lattice.action().size(); ++g) {
    if (t.action()[g] * iota != iota * w.action()[g]) return false;
    if (s.action()[g] * pi != pi * t.action()[g]) return false;
  }
  if (!(pi * iota).is_zero()) return false;

  // First map injective with saturated image.
  if (!is_saturated_basis(iota)) return false;
  // Image equals the kernel of the second map.
  const IntMat ker = kernel_basis(pi);
  if (ker.cols() != iota.cols() || !same_lattice(ker, iota)) return false;
  // Second map surjective.
  auto diag = smith_invariants(pi);
  return diag.size() == s.rank() && all_units(diag);
}

bool check_direct_sum_decomposition(const GLattice& first, const GLattice& second) {
  if (first.group() != second.group() && !first.group()->same_as(*second.group()))
    throw Error(ErrorCode::GroupMismatch, "summands carry different groups");
  const std::size_t r1 = first.rank();
  const std::size_t r2 = second.rank();
  const std::size_t r = r1 + r2;
  const GLattice whole = direct_sum(first, second);

  const GLattice s1 = sym2(first), s2 = sym2(second), w1 = wedge2(first), w2 = wedge2(second);
  const GLattice mixed = tensor(first, second);

  Sym2Basis sb(r), sb1(r1), sb2(r2);
  Wedge2Basis wb(r), wb1(r1), wb2(r2);

  // Columns: images of the basis of the displayed direct sum.
  IntMat sym_map(sb.size(), sb1.size() + r1 * r2 + sb2.size());
  IntMat wedge_map(wb.size(), wb1.size() + r1 * r2 + wb2.size());
  std::size_t col = 0;
  for (auto [i, j] : sb1.pairs()) sym_map(sb.index(i, j), col++) = 1;
  for (std::size_t i = 0; i < r1; ++i)
    for (std::size_t j = 0; j < r2; ++j) sym_map(sb.index(i, r1 + j), col++) = 1;
  for (auto [i, j] : sb2.pairs()) sym_map(sb.index(r1 + i, r1 + j), col++) = 1;
  col = 0;
  for (auto [i, j] : wb1.pairs()) wedge_map(wb.index(i, j), col++) = 1;
  for (std::size_t i = 0; i < r1; ++i)
    for (std::size_t j = 0; j < r2; ++j) wedge_map(wb.index(i, r1 + j), col++) = 1;
  for (auto [i, j] : wb2.pairs()) wedge_map(wb.index(r1 + i, r1 + j), col++) = 1;

  if (abs(det(sym_map)) != 1 || abs(det(wedge_map)) != 1) return false;

  const GLattice sym_whole = sym2(whole);
  const GLattice wedge_whole = wedge2(whole);
  for (std::size_t g = 0; g < first.action().size(); ++g) {
    const IntMat sym_src = direct_sum(direct_sum(s1, mixed), s2).action()[g];
    const IntMat wedge_src = direct_sum(direct_sum(w1, mixed), w2).action()[g];
    if (sym_whole.action()[g] * sym_map != sym_map * sym_src) return false;
    if (wedge_whole.action()[g] * wedge_map != wedge_map * wedge_src) return false;
  }
  return true;
}

bool check_direct_sum_decomposition(const GLattice& lattice, std::size_t split) {
  const std::size_t r = lattice.rank();
  if (split > r) throw Error(ErrorCode::DimensionMismatch, "split exceeds rank");
  std::vector<IntMat> a1, a2;
  for (const auto& g : lattice.action()) {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        if ((i < split) != (j < split) && sgn(g(i, j)) != 0)
          throw Error(ErrorCode::NotApplicable, "action does not preserve the two summands");
    a1.push_back(g.block(0, 0, split, split));
    a2.push_back(g.block(split, split, r - split, r - split));
  }
  return check_direct_sum_decomposition(GLattice(lattice.group(), std::move(a1), split),
                                        GLattice(lattice.group(), std::move(a2), r - split));
}

}  // namespace torsorlat
