#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "torsorlat/delpezzo.hpp"

using namespace torsorlat;
using namespace torsorlat::delpezzo;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::BadInput;
}

std::set<std::string> as_set(const std::vector<IntMat>& v) {
  std::set<std::string> s;
  for (const auto& x : v) s.insert(x.to_string());
  return s;
}

IntMat sym2_vec(const IntMat& x, const IntMat& y) { return sym2_product(x, y); }

}  // namespace

TEST_CASE("picard lattice") {
  DelPezzoPic p3(3);
  CHECK(p3.rank() == 7);
  CHECK(p3.pairing(p3.omega(), p3.omega()) == 3);
  DelPezzoPic p9(9);
  CHECK(p9.rank() == 1);
  CHECK(p9.omega() == IntMat::column({-3}));
  CHECK(p9.pairing(p9.omega(), p9.omega()) == 9);
  DelPezzoPic p1(1);
  CHECK(p1.rank() == 9);
  CHECK(p1.pairing(p1.omega(), p1.omega()) == 1);
  CHECK(p3.pairing(p3.l(0), p3.l(0)) == 1);
  CHECK(p3.pairing(p3.l(2), p3.l(2)) == -1);
  CHECK(p3.pairing(p3.l(1), p3.l(2)) == 0);
  CHECK(code_of([] { DelPezzoPic(0); }) == ErrorCode::BadDegree);
  CHECK(code_of([] { DelPezzoPic(10); }) == ErrorCode::BadDegree);
}

TEST_CASE("weyl order constants") {
  CHECK(weyl_order_constant(3) == 12);
  CHECK(weyl_order_constant(4) == 120);
  CHECK(weyl_order_constant(5) == 1920);
  CHECK(weyl_order_constant(6) == 51840);
  CHECK(weyl_order_constant(7) == 2903040);
  CHECK(weyl_order_constant(8) == Integer("696729600"));
}

TEST_CASE("exceptional classes") {
  CHECK(exceptional_classes(DelPezzoPic(8)) == std::vector<IntMat>{IntMat::column({0, 1})});
  auto r3 = exceptional_classes(DelPezzoPic(6));
  CHECK(r3.size() == 6);
  std::vector<IntMat> expected{IntMat::column({0, 1, 0, 0}), IntMat::column({0, 0, 1, 0}),
                               IntMat::column({0, 0, 0, 1}), IntMat::column({1, -1, -1, 0}),
                               IntMat::column({1, -1, 0, -1}), IntMat::column({1, 0, -1, -1})};
  CHECK(as_set(r3) == as_set(expected));
  DelPezzoPic p3(3);
  auto e = exceptional_classes(p3);
  CHECK(e.size() == 27);
  CHECK(as_set(e) == as_set(cubic_lines_ordered(p3)));
  for (const auto& x : e) {
    CHECK(p3.pairing(x, x) == -1);
    CHECK(p3.pairing(x, p3.omega()) == -1);
  }
}

TEST_CASE("counts against an unpruned box search") {
  for (std::size_t r = 3; r <= 5; ++r) {
    DelPezzoPic p(static_cast<int>(9 - r));
    CoefficientBound wide{-5, 9};
    CHECK(exceptional_classes(p).size() == oracle::box_count(r, 1, 1, -3, 7));
    CHECK(exceptional_classes(p, wide).size() == exceptional_classes(p).size());
    CHECK(roots(p).roots.size() == oracle::box_count(r, 2, 0, -3, 7));
  }
}

TEST_CASE("roots") {
  const std::size_t counts[] = {8, 20, 40, 72};
  for (std::size_t r = 3; r <= 6; ++r) {
    DelPezzoPic p(static_cast<int>(9 - r));
    auto rd = roots(p);
    CHECK(rd.roots.size() == counts[r - 3]);
    CHECK(rd.simple_roots.size() == r);
    CHECK(rd.weyl_order_constant == weyl_order_constant(r));
    for (const auto& a : rd.roots) {
      CHECK(p.pairing(a, a) == -2);
      CHECK(p.pairing(a, p.omega()) == 0);
    }
  }
  CHECK(code_of([] { roots(DelPezzoPic(7)); }) == ErrorCode::BadRank);
}

TEST_CASE("reflections") {
  DelPezzoPic p(6);
  IntMat a = IntMat::column({1, -1, -1, -1});
  IntMat s = reflection(p, a);
  CHECK(s * s == IntMat::identity(4));
  CHECK(p.preserves_structure(s));
  // Sum a_i l_i -> (a0 + c) l0 + sum (a_i - c) l_i with c = a0 + a1 + a2 + a3.
  IntMat x = IntMat::column({2, 5, -1, 3});
  const long c = 2 + 5 - 1 + 3;
  CHECK(s * x == IntMat::column({2 + c, 5 - c, -1 - c, 3 - c}));
  IntMat t = reflection(p, IntMat::column({0, 1, -1, 0}));
  CHECK(t == IntMat::from_rows({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}));
  CHECK(code_of([&] { reflection(p, IntMat::column({1, 0, 0, 0})); }) == ErrorCode::NotARoot);
}

TEST_CASE("weyl groups") {
  CHECK(weyl_group(DelPezzoPic(6))->order() == 12);
  CHECK(weyl_group(DelPezzoPic(5))->order() == 120);
  CHECK(code_of([] { weyl_group(DelPezzoPic(2)); }) == ErrorCode::TooLargeForEnumeration);
  CHECK(code_of([] { weyl_group(DelPezzoPic(1)); }) == ErrorCode::TooLargeForEnumeration);
}

TEST_CASE("weyl group preserves structure and permutes classes") {
  DelPezzoPic p(4);
  auto w = weyl_group(p);
  auto exc = as_set(exceptional_classes(p));
  auto rts = as_set(roots(p).roots);
  for (std::size_t i = 0; i < w->order(); ++i) {
    IntMat g = w->element(i);
    REQUIRE(p.preserves_structure(g));
    if (i % 97 != 0) continue;
    for (const auto& x : exceptional_classes(p)) CHECK(exc.count((g * x).to_string()) == 1);
    for (const auto& x : roots(p).roots) CHECK(rts.count((g * x).to_string()) == 1);
  }
}

TEST_CASE("symmetric group image") {
  DelPezzoPic p3(6);
  CHECK(symmetric_group_image(p3)->order() == 6);
  DelPezzoPic p(3);
  auto s = symmetric_group_image(p);
  CHECK(s->order() == 720);
  for (const auto& g : s->generators()) CHECK(p.preserves_structure(g));
}

TEST_CASE("cup values") {
  for (int d = 1; d <= 4; ++d) {
    DelPezzoPic p(d);
    CHECK(cup(p, omega_square(p)) == d);
  }
  DelPezzoPic p3(3);
  CHECK(cup(p3, cubic_L(p3)) == 7);
  DelPezzoPic p6(6);
  CHECK(cup(p6, degree6_L1(p6)) == 3);
  CHECK(cup(p6, degree6_L2(p6)) == -2);
  CHECK(cup(p3, sym2_vec(p3.l(1), p3.l(2))) == 0);
  CHECK(code_of([&] { cup(p3, IntMat::column({1, 2})); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("cup is equivariant") {
  DelPezzoPic p(5);
  auto w = weyl_group(p);
  auto s = sym2_picard(p, w);
  IntMat row = cup_row(p);
  for (const auto& g : s.action()) CHECK(row * g == row);
}

TEST_CASE("kernel lattice") {
  DelPezzoPic p9(9);
  auto k9 = kernel_lattice(p9, make_group(1, {}));
  CHECK(k9.basis.cols() == 0);
  DelPezzoPic p3(3);
  auto k3 = kernel_lattice(p3, symmetric_group_image(p3));
  CHECK(k3.basis.cols() == 27);
  CHECK((cup_row(p3) * k3.basis).is_zero());
  auto bad = make_group(7, {-IntMat::identity(7)});
  CHECK(code_of([&] { sym2_picard(p3, bad); }) == ErrorCode::ActionDoesNotPreserveForm);
}

TEST_CASE("invariants of the full W(E6) action") {
  DelPezzoPic p(3);
  auto s = sym2_picard(p, weyl_group(p));
  IntMat inv = invariants(s);
  CHECK(inv.cols() == 2);
  CHECK(solve(inv, omega_square(p)).has_value());
  CHECK(solve(inv, cubic_L(p)).has_value());
}

TEST_CASE("cubic identity") {
  DelPezzoPic p(3);
  IntMat sum(28, 1);
  for (const auto& d : cubic_lines_ordered(p)) sum = sum + sym2_vec(d, d);
  CHECK(Integer(6) * cubic_L(p) == Integer(5) * omega_square(p) - sum);
}

TEST_CASE("matrix A") {
  DelPezzoPic p(3);
  IntMat a = matrix_A(p);
  CHECK(a.rows() == 28);
  CHECK(a.cols() == 28);
  CHECK(abs(det(a)) == 671088640);
  CHECK(a.row(0) == IntMat::from_rows({{-1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0,
                                        0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}));
  for (std::size_t i = 1; i <= 6; ++i) {
    for (std::size_t j = 0; j < 28; ++j) CHECK(a(i, j) == (j == i ? 1 : 0));
  }
  CHECK(a(7, 0) == 4);
  CHECK(a(7, 1) == 0);
  for (std::size_t j = 2; j <= 6; ++j) CHECK(a(7, j) == 1);
  auto cmp = compare_rows(a, printed_matrix_A());
  CHECK(cmp.identical);
  CHECK(cmp.mismatched_rows.empty());
  CHECK(code_of([] { matrix_A(DelPezzoPic(4)); }) == ErrorCode::WrongDegree);
}

TEST_CASE("mixed basis transform is unimodular") {
  DelPezzoPic p(3);
  IntMat t = mixed_basis_transform(p);
  CHECK(abs(det(t)) == 1);
  // Rows of A are the mixed-basis coordinates of the square basis.
  CHECK(matrix_A(p).transpose() == t * cubic_square_basis(p));
}

TEST_CASE("row comparison") {
  IntMat a = IntMat::from_rows({{1, 0}, {0, 1}});
  IntMat b = IntMat::from_rows({{0, 1}, {1, 0}});
  auto c = compare_rows(a, b);
  CHECK(!c.identical);
  CHECK(c.equal_up_to_row_permutation);
  CHECK(c.mismatched_rows == std::vector<std::size_t>{0, 1});
  auto d = compare_rows(a, IntMat::from_rows({{1, 0}, {0, 2}}));
  CHECK(!d.equal_up_to_row_permutation);
  CHECK(d.mismatched_rows == std::vector<std::size_t>{1});
}

TEST_CASE("permutation basis for W(E6) at 3 and not at 2") {
  DelPezzoPic p(3);
  auto s = sym2_picard(p, weyl_group(p));
  IntMat basis = cubic_square_basis(p);
  auto three = is_permutation_basis(s, basis, 3);
  CHECK(three.is_permutation_basis);
  CHECK(abs(three.determinant) == 671088640);
  CHECK(!is_permutation_basis(s, basis, 2).is_permutation_basis);
}

TEST_CASE("sylow arithmetic") {
  CHECK(factorial(6) == 720);
  CHECK(sylow_order_check(4, 3));
  CHECK(sylow_order_check(4, 5));
  CHECK(sylow_order_check(3, 5));
  CHECK(!sylow_order_check(3, 3));
  CHECK(sylow_order_check(1, 7));
  CHECK(!sylow_order_check(1, 5));
  CHECK(sylow_e6_e7_check(3));
  CHECK(sylow_e6_e7_check(5));
  CHECK(!sylow_e6_e7_check(7));
  CHECK(code_of([] { sylow_order_check(5, 3); }) == ErrorCode::BadInput);
  CHECK(code_of([] { sylow_order_check(3, 4); }) == ErrorCode::BadInput);
}

TEST_CASE("obstruction report, trivial cases") {
  auto r9 = obstruction_report(9, {});
  CHECK(r9.cup_index == 1);
  CHECK(r9.h1_sym2.is_trivial());
  CHECK(r9.h1_kernel.is_trivial());
  CHECK(r9.order_identity);
  CHECK(r9.vanishing);
  auto r3 = obstruction_report(3, {});
  CHECK(r3.group_order == 1);
  CHECK(r3.cup_index == 1);
  CHECK(r3.order_identity);
}

TEST_CASE("obstruction report, degree 6 with W(R3)") {
  DelPezzoPic p(6);
  auto r = obstruction_report(p, weyl_group(p));
  CHECK(r.group_order == 12);
  CHECK(r.cup_index == 1);
  CHECK(r.order_identity);
  auto sat = obstruction_report(p, weyl_group(p), H1Method::Saturation);
  CHECK(sat.h1_sym2 == r.h1_sym2);
  CHECK(sat.h1_kernel == r.h1_kernel);
}

TEST_CASE("obstruction report, one element of order 3 in W(E6)") {
  DelPezzoPic p(3);
  auto w = weyl_group(p);
  std::size_t idx = 0;
  while (w->element_order(idx) != 3) ++idx;
  auto r = obstruction_report(3, {w->element(idx)});
  CHECK(r.group_order == 3);
  CHECK(r.h1_sym2.p_part(3).is_trivial());
  CHECK(r.order_identity);
}
