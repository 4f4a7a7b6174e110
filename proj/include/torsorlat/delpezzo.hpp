#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "torsorlat/group_lattice.hpp"
#include "torsorlat/multilinear.hpp"

namespace torsorlat::delpezzo {

/// Orders of W(R_r) for r = 3..8 (A1xA2, A4, D5, E6, E7, E8).
Integer weyl_order_constant(std::size_t r);

/// Picard lattice of a del Pezzo surface of degree d: basis l_0..l_r with
/// r = 9 - d, intersection form diag(1, -1, ..., -1) and canonical class
/// omega = -3 l_0 + l_1 + ... + l_r.
class DelPezzoPic {
 public:
  explicit DelPezzoPic(int degree);

  int degree() const noexcept { return degree_; }
  std::size_t r() const noexcept { return r_; }
  std::size_t rank() const noexcept { return r_ + 1; }

  const IntMat& form() const noexcept { return form_; }
  const IntMat& omega() const noexcept { return omega_; }

  /// Basis vector l_i as a column.
  IntMat l(std::size_t i) const;
  Integer pairing(const IntMat& x, const IntMat& y) const;

  /// True iff g^T Q g == Q and g omega == omega.
  bool preserves_structure(const IntMat& g) const;

 private:
  int degree_;
  std::size_t r_;
  IntMat form_;
  IntMat omega_;
};

inline DelPezzoPic picard_lattice(int degree) { return DelPezzoPic(degree); }

struct RootDatum {
  std::size_t r = 0;
  std::vector<IntMat> roots;
  std::vector<IntMat> simple_roots;
  Integer weyl_order_constant;
};

/// Search window for the l_0 coefficient when enumerating classes.
struct CoefficientBound {
  long lo = -3;
  long hi = 7;
};

/// Classes E with E.E = -1 and E.omega = -1, sorted by l_0 coefficient and
/// then by (l_1, ..., l_r) coefficients in decreasing lexicographic order.
std::vector<IntMat> exceptional_classes(const DelPezzoPic& pic, CoefficientBound bound = {});

/// Roots alpha.alpha = -2, alpha.omega = 0, with the simple system
/// l_1 - l_2, ..., l_{r-1} - l_r, l_0 - l_1 - l_2 - l_3. Needs 3 <= r <= 8.
RootDatum roots(const DelPezzoPic& pic, CoefficientBound bound = {});

/// s_alpha(x) = x + (x, alpha) alpha.
IntMat reflection(const DelPezzoPic& pic, const IntMat& alpha);

/// Closure of the simple reflections; refused for r >= 7.
GroupPtr weyl_group(const DelPezzoPic& pic, std::size_t cap = kDefaultGroupCap);

/// Permutations of l_1..l_r (adjacent transpositions as generators).
GroupPtr symmetric_group_image(const DelPezzoPic& pic);

/// Intersection number of a Sym^2 vector: x . y -> (x, y), extended linearly.
Integer cup(const DelPezzoPic& pic, const IntMat& sym2_vector);

/// The row vector of cup in Sym^2 coordinates.
IntMat cup_row(const DelPezzoPic& pic);

/// Sym^2 Pic with the action induced by `group` (acting on Pic).
GLattice sym2_picard(const DelPezzoPic& pic, const GroupPtr& group);

/// Kernel of cup on Sym^2 Pic with the induced action, together with the
/// kernel basis (columns, in Sym^2 coordinates).
struct KernelLattice {
  IntMat basis;
  GLattice lattice;
};
KernelLattice kernel_lattice(const DelPezzoPic& pic, const GroupPtr& group);

// ---------------------------------------------------------------------------
// Cubic surface data (d = 3)

/// L = l_0 . l_0 - sum_i l_i . l_i.
IntMat cubic_L(const DelPezzoPic& pic);
/// Omega . omega.
IntMat omega_square(const DelPezzoPic& pic);
/// The 27 lines in the order l_i; 2 l_0 - sum_{j != i} l_j; l_0 - l_i - l_j.
std::vector<IntMat> cubic_lines_ordered(const DelPezzoPic& pic);
/// Columns -L, D_1.D_1, ..., D_27.D_27 in Sym^2 coordinates.
IntMat cubic_square_basis(const DelPezzoPic& pic);

/// Change of basis from Sym^2 coordinates to the mixed basis
/// [l_i.l_i (i = 0..6), -l_0.l_i (i = 1..6), l_i.l_j (1 <= i < j <= 6)].
/// Returns P with v_mixed = P * v_sym2.
IntMat mixed_basis_transform(const DelPezzoPic& pic);

/// Rows: -L, D_1.D_1, ..., D_27.D_27 in the mixed basis. Needs d = 3.
IntMat matrix_A(const DelPezzoPic& pic);

/// The 28 x 28 matrix as printed in the cubic surface computation, used as
/// a fixture to compare against matrix_A.
IntMat printed_matrix_A();

struct RowComparison {
  bool identical = false;
  bool equal_up_to_row_permutation = false;
  std::vector<std::size_t> mismatched_rows;
};
RowComparison compare_rows(const IntMat& computed, const IntMat& reference);

// ---------------------------------------------------------------------------
// Degree 6 witnesses

/// Sum_{1 <= i < j <= 3} (l_0 - l_i) . (l_0 - l_j).
IntMat degree6_L1(const DelPezzoPic& pic);
/// l_0 . (omega + l_0).
IntMat degree6_L2(const DelPezzoPic& pic);

// ---------------------------------------------------------------------------
// Sylow arithmetic

/// r! as an integer.
Integer factorial(std::size_t n);

/// v_p(r!) == v_p(|W(R_r)|) for r = 9 - d, d in {1, 2, 3, 4}.
bool sylow_order_check(int degree, unsigned long p);

/// v_p(|W(E6)|) == v_p(|W(E7)|).
bool sylow_e6_e7_check(unsigned long p);

// ---------------------------------------------------------------------------
// Obstruction report

struct ObstructionReport {
  int degree = 0;
  std::size_t group_order = 0;
  Integer cup_index;
  std::size_t invariant_rank = 0;
  FinAbGroup h1_sym2;
  FinAbGroup h1_kernel;
  bool order_identity = false;
  bool vanishing = false;
  std::string h1_method;
};

enum class H1Method { Auto, Constraints, Saturation };

/// Cup index of (Sym^2 Pic)^G in Z, H^1 of Sym^2 Pic and of the cup kernel,
/// and the order identity |H^1(ker)| == index * |H^1(Sym^2)|.
ObstructionReport obstruction_report(const DelPezzoPic& pic, const GroupPtr& group, H1Method method = H1Method::Auto);

ObstructionReport obstruction_report(int degree, const std::vector<IntMat>& galois_generators,
                                     std::size_t cap = kDefaultGroupCap, H1Method method = H1Method::Auto);

}  // namespace torsorlat::delpezzo
