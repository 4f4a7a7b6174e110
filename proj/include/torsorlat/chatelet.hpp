#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torsorlat/group_lattice.hpp"
#include "torsorlat/multilinear.hpp"

namespace torsorlat::chatelet {

/// Permutation of {0, ..., n-1} given as its image array.
using Perm = std::vector<std::size_t>;

struct Factor {
  long id = 0;
  std::size_t degree = 0;
};

/// Galois data of a generalized Chatelet surface y^2 - a z^2 = P(t).
///
/// Roots are numbered 0..n-1, factor by factor in the listed order: the
/// roots J_i of factor i form a consecutive block. `gamma_generators`
/// generate the image of Gal(kbar/k') on the roots, k' = k(sqrt a), and
/// `sigma_root_perm` is the action of one lift of the nontrivial element of
/// Gal(k'/k).
struct ChateletSpec {
  std::vector<Factor> factors;
  std::vector<Perm> gamma_generators;
  Perm sigma_root_perm;

  std::size_t total_degree() const;
  /// Position of a factor in `factors`; BadFactorId if unknown.
  std::size_t position(long id) const;
  /// First root index of the factor at `pos`.
  std::size_t offset(std::size_t pos) const;
  std::vector<std::size_t> roots_of(long id) const;
};

/// Throws on malformed data (BadInput, OddDegree, InconsistentSigma).
/// Returns, per factor, whether gamma acts transitively on its roots.
std::vector<bool> validate(const ChateletSpec& spec);

/// Pic of the surface over kbar with basis D_0..D_{n-1}, F, G and the
/// action of the full Galois image. Group generators are the gamma
/// generators (acting by permutation) followed by the sigma lift, which
/// sends D_j to F - D_{sigma j} and G to G + sum D - (n/2) F.
struct ChateletLattice {
  ChateletSpec spec;
  std::size_t n = 0;
  GLattice lattice;
  /// Index of the sigma lift among the group generators.
  std::size_t sigma_generator = 0;
  bool transitive = true;

  std::size_t rank() const { return n + 2; }
  std::size_t f_index() const { return n; }
  std::size_t g_index() const { return n + 1; }
  const IntMat& sigma_matrix() const { return lattice.action()[sigma_generator]; }
};

/// Throws NotTransitive unless `allow_nontransitive` is set.
ChateletLattice build_picard(const ChateletSpec& spec, bool allow_nontransitive = false,
                             std::size_t cap = kDefaultGroupCap);

/// Matrix of a root permutation acting on D_0..D_{n-1}, F, G.
IntMat gamma_matrix(std::size_t n, const Perm& perm);
IntMat sigma_matrix(std::size_t n, const Perm& perm);

/// A gamma-orbit in J_i x J_i' (ordered pairs of global root indices).
/// When i == i' pairs are unordered, stored with first <= second, and the
/// diagonal is an orbit of its own.
struct PairOrbit {
  long i = 0;
  long i2 = 0;
  std::vector<std::pair<std::size_t, std::size_t>> members;
  bool diagonal = false;
  bool sigma_stable = false;
  std::size_t sigma_image = 0;
  std::size_t size() const { return members.size(); }
};

/// Orbits of O_{i,i'} in order of their least member.
std::vector<PairOrbit> orbit_decomposition(const ChateletSpec& spec, long i, long i2);

/// D_S as a vector of Sym^2 Pic.
IntMat orbit_class(const ChateletLattice& pic, const PairOrbit& orbit);

struct LemmaResult {
  bool holds = false;
  std::optional<PairOrbit> witness;
};

/// Looks for a sigma-stable orbit in O_{i0,i}; needs |J_i0| odd and i != i0.
LemmaResult lemma53_check(const ChateletSpec& spec, long i0, long i);

/// Every S in O_{i,i} has |J_i| dividing 2|S|; for |J_i| even, also finds a
/// sigma-stable S with 2|S|/|J_i| odd.
LemmaResult lemma54_check(const ChateletSpec& spec, long i);

struct Prop52Result {
  FinAbGroup h1_full;
  FinAbGroup h1_reduced;  // H^1(Z/2, (Sym^2 Pic)^gamma)
  bool agree = false;
  bool hypotheses_hold = true;
  std::size_t group_order = 0;
  std::size_t invariant_rank = 0;
  std::string h1_method;
};

/// H^1 of Sym^2 Pic over the full Galois image, cross-checked against the
/// Z/2 cohomology of the gamma-invariants. Non-transitive data is computed
/// anyway and flagged through `hypotheses_hold`.
Prop52Result verify_prop52(const ChateletSpec& spec, std::size_t cap = kDefaultGroupCap);

struct FiltrationStep {
  std::string label;
  IntMat basis;  // columns in Sym^2 Pic coordinates
  /// Whether A_1 + ... + A_l is sigma-stable.
  bool prefix_sigma_stable = false;
  /// H^1(Z/2, A'_l); empty when the prefix is not stable.
  std::optional<FinAbGroup> h1;
};

struct Filtration {
  std::optional<long> i0;
  std::vector<std::pair<long, PairOrbit>> s0;
  std::vector<std::pair<long, PairOrbit>> s1;
  std::vector<FiltrationStep> steps;
  std::size_t total_rank = 0;
  std::size_t invariant_rank = 0;
  /// The six bases together form a basis of the gamma-invariants.
  bool spans_invariants = false;
  bool all_trivial = false;
};

/// The six-step filtration of (Sym^2 Pic)^gamma. Witnesses are the first
/// qualifying orbits in enumeration order and i0 is the least id of odd
/// degree. Throws WitnessNotFound if a required orbit does not exist.
Filtration build_filtration(const ChateletSpec& spec);

/// Basis F.F, F.G, G.G, (F.D_i), (G.D_i), (D_S) of the gamma-invariants,
/// with one D_S per orbit in O_{i,i'}, i <= i' in factor order.
IntMat invariant_orbit_basis(const ChateletLattice& pic);

}  // namespace torsorlat::chatelet
