#include "torsorlat/delpezzo.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace torsorlat::delpezzo {

Integer weyl_order_constant(std::size_t r) {
  switch (r) {
    case 3: return 12;
    case 4: return 120;
    case 5: return 1920;
    case 6: return 51840;
    case 7: return 2903040;
    case 8: return 696729600;
    default: throw Error(ErrorCode::BadRank, "no root system of rank " + std::to_string(r));
  }
}

DelPezzoPic::DelPezzoPic(int degree) : degree_(degree) {
  if (degree < 1 || degree > 9) throw Error(ErrorCode::BadDegree, "degree must lie in 1..9, got " + std::to_string(degree));
  r_ = static_cast<std::size_t>(9 - degree);
  form_ = IntMat(rank(), rank());
  omega_ = IntMat(rank(), 1);
  form_(0, 0) = 1;
  omega_(0, 0) = -3;
  for (std::size_t i = 1; i <= r_; ++i) {
    form_(i, i) = -1;
    omega_(i, 0) = 1;
  }
}

IntMat DelPezzoPic::l(std::size_t i) const {
  if (i > r_) throw Error(ErrorCode::IndexOutOfRange, "no basis vector l_" + std::to_string(i));
  IntMat v(rank(), 1);
  v(i, 0) = 1;
  return v;
}

Integer DelPezzoPic::pairing(const IntMat& x, const IntMat& y) const {
  if (x.rows() != rank() || y.rows() != rank() || x.cols() != 1 || y.cols() != 1)
    throw Error(ErrorCode::DimensionMismatch, "pairing needs two Pic vectors");
  Integer s = 0;
  for (std::size_t i = 0; i < rank(); ++i) s += form_(i, i) * x(i, 0) * y(i, 0);
  return s;
}

bool DelPezzoPic::preserves_structure(const IntMat& g) const {
  if (g.rows() != rank() || g.cols() != rank()) return false;
  return g.transpose() * form_ * g == form_ && g * omega_ == omega_;
}

namespace {

// All tails (a_1..a_r) with sum a_i^2 == sq and sum a_i == total.
void search_tails(std::size_t r, long sq, long total, std::vector<long>& prefix, std::vector<std::vector<long>>& out) {
  const std::size_t left = r - prefix.size();
  if (left == 0) {
    if (sq == 0 && total == 0) out.push_back(prefix);
    return;
  }
  // Cauchy-Schwarz: total^2 <= left * sq.
  if (sq < 0 || total * total > static_cast<long>(left) * sq) return;
  const long m = static_cast<long>(std::sqrt(static_cast<double>(sq))) + 1;
  for (long a = m; a >= -m; --a) {
    if (a * a > sq) continue;
    prefix.push_back(a);
    search_tails(r, sq - a * a, total - a, prefix, out);
    prefix.pop_back();
  }
}

// Classes with Q(x,x) = -norm and Q(x, omega) = -canonical.
std::vector<IntMat> classes_with(const DelPezzoPic& pic, long norm, long canonical, CoefficientBound bound) {
  std::vector<IntMat> out;
  for (long a0 = bound.lo; a0 <= bound.hi; ++a0) {
    // a0^2 - sum a_i^2 = -norm;  -3 a0 - sum a_i = -canonical.
    const long sq = a0 * a0 + norm;
    const long total = canonical - 3 * a0;
    std::vector<std::vector<long>> tails;
    std::vector<long> prefix;
    search_tails(pic.r(), sq, total, prefix, tails);
    for (const auto& t : tails) {
      IntMat v(pic.rank(), 1);
      v(0, 0) = a0;
      for (std::size_t i = 0; i < t.size(); ++i) v(i + 1, 0) = t[i];
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<IntMat> simple_roots(const DelPezzoPic& pic) {
  std::vector<IntMat> out;
  for (std::size_t i = 1; i < pic.r(); ++i) out.push_back(pic.l(i) - pic.l(i + 1));
  if (pic.r() >= 3) out.push_back(pic.l(0) - pic.l(1) - pic.l(2) - pic.l(3));
  return out;
}

void require_structure(const DelPezzoPic& pic, const MatGroup& group) {
  if (group.rank() != pic.rank())
    throw Error(ErrorCode::DimensionMismatch, "group does not act on Pic of degree " + std::to_string(pic.degree()));
  for (const auto& g : group.generators())
    if (!pic.preserves_structure(g))
      throw Error(ErrorCode::ActionDoesNotPreserveForm, "generator does not preserve the form and omega");
}

}  // namespace

std::vector<IntMat> exceptional_classes(const DelPezzoPic& pic, CoefficientBound bound) {
  if (pic.r() == 0) return {};
  return classes_with(pic, 1, 1, bound);
}

RootDatum roots(const DelPezzoPic& pic, CoefficientBound bound) {
  if (pic.r() < 3 || pic.r() > 8) throw Error(ErrorCode::BadRank, "roots need 3 <= r <= 8");
  RootDatum d;
  d.r = pic.r();
  d.roots = classes_with(pic, 2, 0, bound);
  d.simple_roots = simple_roots(pic);
  d.weyl_order_constant = weyl_order_constant(pic.r());
  return d;
}

IntMat reflection(const DelPezzoPic& pic, const IntMat& alpha) {
  if (alpha.rows() != pic.rank() || alpha.cols() != 1) throw Error(ErrorCode::DimensionMismatch, "root has wrong length");
  if (pic.pairing(alpha, alpha) != -2 || sgn(pic.pairing(alpha, pic.omega())) != 0)
    throw Error(ErrorCode::NotARoot, "vector is not a root");
  // Column j is l_j + Q(l_j, alpha) alpha.
  IntMat m = IntMat::identity(pic.rank());
  for (std::size_t j = 0; j < pic.rank(); ++j) {
    const Integer c = pic.form()(j, j) * alpha(j, 0);
    for (std::size_t i = 0; i < pic.rank(); ++i) m(i, j) += c * alpha(i, 0);
  }
  return m;
}

GroupPtr weyl_group(const DelPezzoPic& pic, std::size_t cap) {
  if (pic.r() >= 7)
    throw Error(ErrorCode::TooLargeForEnumeration, "W(E" + std::to_string(pic.r()) + ") is not enumerated");
  std::vector<IntMat> gens;
  for (const auto& a : simple_roots(pic)) gens.push_back(reflection(pic, a));
  return make_group(pic.rank(), gens, cap);
}

GroupPtr symmetric_group_image(const DelPezzoPic& pic) {
  std::vector<IntMat> gens;
  for (std::size_t i = 1; i < pic.r(); ++i) {
    IntMat m = IntMat::identity(pic.rank());
    m.swap_cols(i, i + 1);
    gens.push_back(std::move(m));
  }
  return make_group(pic.rank(), gens);
}

IntMat cup_row(const DelPezzoPic& pic) {
  Sym2Basis basis(pic.rank());
  IntMat row(1, basis.size());
  for (std::size_t i = 0; i < pic.rank(); ++i) row(0, basis.index(i, i)) = pic.form()(i, i);
  return row;
}

Integer cup(const DelPezzoPic& pic, const IntMat& v) {
  const IntMat row = cup_row(pic);
  if (v.rows() != row.cols() || v.cols() != 1) throw Error(ErrorCode::DimensionMismatch, "not a Sym^2 Pic vector");
  return (row * v)(0, 0);
}

GLattice sym2_picard(const DelPezzoPic& pic, const GroupPtr& group) {
  require_structure(pic, *group);
  return sym2(GLattice::standard(group));
}

KernelLattice kernel_lattice(const DelPezzoPic& pic, const GroupPtr& group) {
  const GLattice s = sym2_picard(pic, group);
  IntMat basis = kernel_basis(cup_row(pic));
  GLattice lattice = sublattice_action(s, basis);
  return {std::move(basis), std::move(lattice)};
}

// ---------------------------------------------------------------------------

namespace {

void require_cubic(const DelPezzoPic& pic) {
  if (pic.degree() != 3) throw Error(ErrorCode::WrongDegree, "needs a cubic surface (degree 3)");
}

}  // namespace

IntMat cubic_L(const DelPezzoPic& pic) {
  IntMat v = sym2_product(pic.l(0), pic.l(0));
  for (std::size_t i = 1; i <= pic.r(); ++i) v = v - sym2_product(pic.l(i), pic.l(i));
  return v;
}

IntMat omega_square(const DelPezzoPic& pic) { return sym2_product(pic.omega(), pic.omega()); }

std::vector<IntMat> cubic_lines_ordered(const DelPezzoPic& pic) {
  require_cubic(pic);
  std::vector<IntMat> lines;
  for (std::size_t i = 1; i <= 6; ++i) lines.push_back(pic.l(i));
  for (std::size_t i = 1; i <= 6; ++i) {
    IntMat v = 2 * pic.l(0);
    for (std::size_t j = 1; j <= 6; ++j)
      if (j != i) v = v - pic.l(j);
    lines.push_back(std::move(v));
  }
  for (std::size_t i = 1; i <= 6; ++i)
    for (std::size_t j = i + 1; j <= 6; ++j) lines.push_back(pic.l(0) - pic.l(i) - pic.l(j));
  return lines;
}

IntMat cubic_square_basis(const DelPezzoPic& pic) {
  IntMat m = -cubic_L(pic);
  for (const auto& d : cubic_lines_ordered(pic)) m = m.hstack(sym2_product(d, d));
  return m;
}

IntMat mixed_basis_transform(const DelPezzoPic& pic) {
  const std::size_t n = pic.rank();
  Sym2Basis basis(n);
  IntMat p(basis.size(), basis.size());
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i) p(row++, basis.index(i, i)) = 1;
  // The mixed basis uses -l_0.l_i, so the coordinate flips sign.
  for (std::size_t i = 1; i < n; ++i) p(row++, basis.index(0, i)) = -1;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) p(row++, basis.index(i, j)) = 1;
  return p;
}

IntMat matrix_A(const DelPezzoPic& pic) {
  require_cubic(pic);
  return (mixed_basis_transform(pic) * cubic_square_basis(pic)).transpose();
}

RowComparison compare_rows(const IntMat& computed, const IntMat& reference) {
  if (computed.rows() != reference.rows() || computed.cols() != reference.cols())
    throw Error(ErrorCode::DimensionMismatch, "matrices have different shapes");
  RowComparison out;
  std::map<std::vector<std::string>, long> multiset;
  auto key = [](const IntMat& m, std::size_t i) {
    std::vector<std::string> k;
    for (std::size_t j = 0; j < m.cols(); ++j) k.push_back(m(i, j).get_str());
    return k;
  };
  for (std::size_t i = 0; i < computed.rows(); ++i) {
    bool same = true;
    for (std::size_t j = 0; j < computed.cols() && same; ++j) same = computed(i, j) == reference(i, j);
    if (!same) out.mismatched_rows.push_back(i);
    ++multiset[key(computed, i)];
    --multiset[key(reference, i)];
  }
  out.identical = out.mismatched_rows.empty();
  out.equal_up_to_row_permutation = std::all_of(multiset.begin(), multiset.end(), [](const auto& e) { return e.second == 0; });
  return out;
}

IntMat degree6_L1(const DelPezzoPic& pic) {
  if (pic.degree() != 6) throw Error(ErrorCode::WrongDegree, "needs degree 6");
  IntMat v(Sym2Basis(pic.rank()).size(), 1);
  for (std::size_t i = 1; i <= 3; ++i)
    for (std::size_t j = i + 1; j <= 3; ++j) v = v + sym2_product(pic.l(0) - pic.l(i), pic.l(0) - pic.l(j));
  return v;
}

IntMat degree6_L2(const DelPezzoPic& pic) {
  if (pic.degree() != 6) throw Error(ErrorCode::WrongDegree, "needs degree 6");
  return sym2_product(pic.l(0), pic.omega() + pic.l(0));
}

// ---------------------------------------------------------------------------

Integer factorial(std::size_t n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

bool sylow_order_check(int degree, unsigned long p) {
  if (degree < 1 || degree > 4) throw Error(ErrorCode::BadInput, "Sylow comparison covers degrees 1..4");
  if (!is_prime(p)) throw Error(ErrorCode::BadInput, std::to_string(p) + " is not prime");
  const std::size_t r = static_cast<std::size_t>(9 - degree);
  return valuation(factorial(r), p) == valuation(weyl_order_constant(r), p);
}

bool sylow_e6_e7_check(unsigned long p) {
  if (!is_prime(p)) throw Error(ErrorCode::BadInput, std::to_string(p) + " is not prime");
  return valuation(weyl_order_constant(6), p) == valuation(weyl_order_constant(7), p);
}

// ---------------------------------------------------------------------------

namespace {

// Rows of the generator-constraint system above which the saturation route
// is used instead.
constexpr std::size_t kConstraintRowBudget = 400000;

FinAbGroup h1_by(const GLattice& lattice, bool constraints) {
  return constraints ? h1(lattice).group : h1_saturation(lattice);
}

}  // namespace

ObstructionReport obstruction_report(const DelPezzoPic& pic, const GroupPtr& group, H1Method method) {
  require_structure(pic, *group);
  ObstructionReport rep;
  rep.degree = pic.degree();
  rep.group_order = group->order();

  const GLattice s = sym2_picard(pic, group);
  const IntMat inv = invariants(s);
  rep.invariant_rank = inv.cols();
  rep.cup_index = gcd_of_entries(cup_row(pic) * inv);

  const KernelLattice k = kernel_lattice(pic, group);
  bool constraints = method == H1Method::Constraints;
  if (method == H1Method::Auto)
    constraints = group->order() * group->num_generators() * s.rank() <= kConstraintRowBudget;
  rep.h1_method = constraints ? "constraints" : "saturation";
  rep.h1_sym2 = h1_by(s, constraints);
  rep.h1_kernel = h1_by(k.lattice, constraints);

  const auto a = rep.h1_kernel.order();
  const auto b = rep.h1_sym2.order();
  rep.order_identity = a && b && *a == rep.cup_index * *b;
  rep.vanishing = rep.h1_sym2.is_trivial();
  return rep;
}

ObstructionReport obstruction_report(int degree, const std::vector<IntMat>& galois_generators, std::size_t cap,
                                     H1Method method) {
  DelPezzoPic pic(degree);
  for (const auto& g : galois_generators)
    if (g.rows() != pic.rank() || g.cols() != pic.rank())
      throw Error(ErrorCode::DimensionMismatch, "generator is not " + std::to_string(pic.rank()) + "x" +
                                                    std::to_string(pic.rank()));
  for (const auto& g : galois_generators)
    if (!pic.preserves_structure(g))
      throw Error(ErrorCode::ActionDoesNotPreserveForm, "generator does not preserve the form and omega");
  return obstruction_report(pic, make_group(pic.rank(), galois_generators, cap), method);
}

// ---------------------------------------------------------------------------

IntMat printed_matrix_A() {
  static const IntMat a = IntMat::from_rows({
      {-1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {4, 0, 1, 1, 1, 1, 1, 0, 4, 4, 4, 4, 4, 0, 0, 0, 0, 0, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2},
      {4, 1, 0, 1, 1, 1, 1, 4, 0, 4, 4, 4, 4, 0, 2, 2, 2, 2, 0, 0, 0, 0, 2, 2, 2, 2, 2, 2},
      {4, 1, 1, 0, 1, 1, 1, 4, 4, 0, 4, 4, 4, 2, 0, 2, 2, 2, 0, 2, 2, 2, 0, 0, 0, 2, 2, 2},
      {4, 1, 1, 1, 0, 1, 1, 4, 4, 4, 0, 4, 4, 2, 2, 0, 2, 2, 2, 0, 2, 2, 0, 2, 2, 0, 0, 2},
      {4, 1, 1, 1, 1, 0, 1, 4, 4, 4, 4, 0, 4, 2, 2, 2, 0, 2, 2, 2, 0, 2, 2, 0, 2, 0, 2, 0},
      {4, 1, 1, 1, 1, 1, 0, 4, 4, 4, 4, 4, 0, 2, 2, 2, 2, 0, 2, 2, 2, 0, 2, 2, 0, 2, 0, 0},
      {1, 1, 1, 0, 0, 0, 0, 2, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {1, 1, 0, 1, 0, 0, 0, 2, 0, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {1, 1, 0, 0, 1, 0, 0, 2, 0, 0, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {1, 1, 0, 0, 0, 1, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {1, 1, 0, 0, 0, 0, 1, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {1, 0, 1, 1, 0, 0, 0, 0, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {1, 0, 1, 0, 1, 0, 0, 0, 2, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0},
      {1, 0, 1, 0, 0, 1, 0, 0, 2, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0},
      {1, 0, 1, 0, 0, 0, 1, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0},
      {1, 0, 0, 1, 1, 0, 0, 0, 0, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0},
      {1, 0, 0, 1, 0, 1, 0, 0, 0, 2, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0},
      {1, 0, 0, 1, 0, 0, 1, 0, 0, 2, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0},
      {1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0},
      {1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 2, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0},
      {1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2},  });
  return a;
}

}  // namespace torsorlat::delpezzo
