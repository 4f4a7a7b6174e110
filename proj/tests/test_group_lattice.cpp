#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "torsorlat/delpezzo.hpp"
#include "torsorlat/group_lattice.hpp"

using namespace torsorlat;

namespace {

IntMat swap2() { return IntMat::from_rows({{0, 1}, {1, 0}}); }

GLattice on_itself(std::vector<IntMat> gens) {
  const std::size_t n = gens.front().rows();
  return GLattice::standard(make_group(n, gens));
}

}  // namespace

TEST_CASE("closure of small groups") {
  CHECK(MatGroup::close(3, {}).order() == 1);
  auto g = MatGroup::close(1, {IntMat::from_rows({{-1}})});
  CHECK(g.order() == 2);
  CHECK(g.element(0).is_identity());
  CHECK(g.element(1) == IntMat::from_rows({{-1}}));
  CHECK(g.word(1) == std::vector<std::size_t>{0});
}

TEST_CASE("closure errors") {
  CHECK_THROWS_AS(MatGroup::close(1, {IntMat::from_rows({{2}})}), Error);
  try {
    MatGroup::close(2, {IntMat::from_rows({{1, 1}, {0, 1}})}, 50);
    FAIL("expected a cap error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GroupTooLarge);
  }
}

TEST_CASE("closure is a group") {
  auto pic = delpezzo::DelPezzoPic(6);
  auto w = delpezzo::weyl_group(pic);
  REQUIRE(w->order() == 12);
  for (std::size_t a = 0; a < w->order(); ++a) {
    CHECK(w->multiply(a, w->inverse(a)) == 0);
    for (std::size_t b = 0; b < w->order(); ++b) CHECK(w->index_of(w->element(a) * w->element(b)) == w->multiply(a, b));
    IntMat prod = IntMat::identity(4);
    for (auto s : w->word(a)) prod = prod * w->generators()[s];
    CHECK(prod == w->element(a));
  }
}

TEST_CASE("D5 reflections generate 1920 elements") {
  auto w = delpezzo::weyl_group(delpezzo::DelPezzoPic(4));
  CHECK(w->order() == 1920);
}

TEST_CASE("invariants") {
  auto g = make_group(2, {});
  CHECK(invariants(GLattice::trivial(g, 2)).cols() == 2);
  auto sw = on_itself({swap2()});
  CHECK(same_lattice(invariants(sw), IntMat::column({1, 1})));
}

TEST_CASE("invariants are fixed by every element") {
  auto pic = delpezzo::DelPezzoPic(5);
  auto w = delpezzo::weyl_group(pic);
  auto s = delpezzo::sym2_picard(pic, w);
  IntMat inv = invariants(s);
  CHECK(inv.cols() == 2);
  for (const auto& m : s.element_actions()) CHECK(m * inv == inv);
}

TEST_CASE("h1 examples") {
  auto triv = GLattice::trivial(make_group(2, {swap2()}), 3);
  CHECK(h1(triv).group.is_trivial());
  auto sign = on_itself({IntMat::from_rows({{-1}})});
  CHECK(h1(sign).group.to_string() == "Z/2");
  CHECK(h1(on_itself({swap2()})).group.is_trivial());
  CHECK(h1_saturation(sign).to_string() == "Z/2");
  auto none = GLattice::trivial(make_group(1, {}), 2);
  CHECK(h1(none).group.is_trivial());
}

TEST_CASE("h1_cyclic examples") {
  CHECK(h1_cyclic(IntMat::identity(1), 2).is_trivial());
  CHECK(h1_cyclic(IntMat::from_rows({{0, -1}, {-1, 0}}), 2).is_trivial());
  CHECK(h1_cyclic(IntMat::from_rows({{-1}}), 2).to_string() == "Z/2");
  try {
    h1_cyclic(IntMat::from_rows({{0, 1}, {1, 0}}), 3);
    FAIL("expected NotPeriodic");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPeriodic);
  }
}

TEST_CASE("h1 agrees with the bar complex on signed permutation actions") {
  std::mt19937_64 rng(21);
  int tested = 0;
  while (tested < 15) {
    const std::size_t n = 1 + rng() % 3;
    std::vector<IntMat> gens{oracle::random_signed_permutation(rng, n, true)};
    if (rng() % 2) gens.push_back(oracle::random_signed_permutation(rng, n, true));
    auto g = make_group(n, gens);
    if (g->order() > 12) continue;
    GLattice lat = GLattice::standard(g);
    auto expected = oracle::bar_h1(lat);
    CHECK(h1(lat).group == expected);
    CHECK(h1_saturation(lat) == expected);
    ++tested;
  }
}

TEST_CASE("h1 is unchanged by a change of basis") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = 2 + rng() % 2;
    IntMat a = oracle::random_signed_permutation(rng, n, true);
    IntMat u = oracle::random_unimodular(rng, n, 4);
    IntMat ui = *solve(u, IntMat::identity(n));
    auto base = on_itself({a});
    auto conj = on_itself({u * a * ui});
    CHECK(h1(base).group == h1(conj).group);
  }
}

TEST_CASE("h1 order divides |G|^rank") {
  auto lat = on_itself({IntMat::from_rows({{-1, 0}, {0, -1}}), IntMat::from_rows({{0, 1}, {1, 0}})});
  auto r = h1(lat).group;
  REQUIRE(r.order().has_value());
  Integer bound = 1;
  for (std::size_t i = 0; i < lat.rank(); ++i) bound *= static_cast<unsigned long>(lat.group()->order());
  CHECK(bound % *r.order() == 0);
}

TEST_CASE("lattice relations are verified") {
  auto g = make_group(1, {IntMat::from_rows({{-1}})});
  GLattice good(g, {IntMat::from_rows({{0, 1}, {1, 0}})});
  CHECK(good.verify_relations());
  GLattice bad(g, {IntMat::from_rows({{0, 1}, {-1, 0}})});
  CHECK(!bad.verify_relations());
}

TEST_CASE("permutation basis certificate") {
  auto s3 = make_group(3, {IntMat::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}),
                           IntMat::from_rows({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}})});
  auto lat = GLattice::standard(s3);
  auto cert = is_permutation_basis(lat, IntMat::identity(3), 5);
  CHECK(cert.is_permutation_basis);
  CHECK(cert.perms.size() == 2);
  CHECK(cert.perms[0] == std::vector<std::size_t>{1, 0, 2});
  auto sign = on_itself({IntMat::from_rows({{-1}})});
  CHECK(!is_permutation_basis(sign, IntMat::identity(1), 3).is_permutation_basis);
  auto scaled = is_permutation_basis(lat, 2 * IntMat::identity(3), 2);
  CHECK(!scaled.determinant_coprime);
  CHECK(!scaled.is_permutation_basis);
  CHECK_THROWS_AS(is_permutation_basis(lat, IntMat::identity(2), 3), Error);
}

TEST_CASE("restriction") {
  auto pic = delpezzo::DelPezzoPic(6);
  auto w = delpezzo::weyl_group(pic);
  GLattice lat = GLattice::standard(w);
  auto only_identity = restrict_to(lat, {0});
  CHECK(only_identity.group()->order() == 1);
  CHECK(h1(only_identity).group.is_trivial());
  // 3-cycle on l1, l2, l3.
  IntMat cyc = IntMat::identity(4);
  cyc(1, 1) = 0; cyc(2, 2) = 0; cyc(3, 3) = 0;
  cyc(2, 1) = 1; cyc(3, 2) = 1; cyc(1, 3) = 1;
  auto idx = w->index_of(cyc);
  REQUIRE(idx.has_value());
  auto c3 = restrict_to(lat, {*idx});
  CHECK(c3.group()->order() == 3);
  CHECK(h1(c3).group.is_trivial());
  // The reflection in l0 - l1 - l2 - l3 has order 2.
  IntMat s = delpezzo::reflection(pic, IntMat::column({1, -1, -1, -1}));
  auto sidx = w->index_of(s);
  REQUIRE(sidx.has_value());
  auto c2 = restrict_to(lat, {*sidx});
  CHECK(c2.group()->order() == 2);
  CHECK(h1(c2).group == h1_cyclic(s, 2));
  CHECK_THROWS_AS(restrict_to(lat, {w->order()}), Error);
}

TEST_CASE("sylow subgroups") {
  auto pic3 = delpezzo::DelPezzoPic(6);
  auto s3 = delpezzo::symmetric_group_image(pic3);
  auto p = sylow_subgroup(*s3, 3);
  CHECK(s3->subgroup_closure(p).size() == 3);
  CHECK(s3->subgroup_closure(sylow_subgroup(*s3, 5)).size() == 1);
  auto w5 = delpezzo::weyl_group(delpezzo::DelPezzoPic(4));
  CHECK(w5->subgroup_closure(sylow_subgroup(*w5, 5)).size() == 5);
  CHECK(w5->subgroup_closure(sylow_subgroup(*w5, 2, 17)).size() == 128);
}

TEST_CASE("sublattice action") {
  auto sw = on_itself({swap2()});
  auto sub = sublattice_action(sw, IntMat::column({1, 1}));
  CHECK(sub.rank() == 1);
  CHECK(sub.action()[0] == IntMat::identity(1));
  CHECK_THROWS_AS(sublattice_action(sw, IntMat::column({1, 0})), Error);
}
