#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "torsorlat/exact_linalg.hpp"

namespace torsorlat {

inline constexpr std::size_t kDefaultGroupCap = 200000;

/// Finite group of invertible integer matrices, enumerated by breadth-first
/// closure from its generators.
///
/// Element 0 is the identity. Elements are listed in BFS order (layer by
/// layer, generators tried in order), so indices are reproducible. Each
/// element g carries a word (s1, ..., sm) in generator indices with
/// g = s1 * s2 * ... * sm.
///
/// Elements are stored internally as 64-bit matrices; any entry overflow
/// during closure raises EntryOverflow.
class MatGroup {
 public:
  static MatGroup close(std::size_t rank, const std::vector<IntMat>& generators,
                        std::size_t cap = kDefaultGroupCap);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t order() const noexcept { return words_.size(); }
  std::size_t num_generators() const noexcept { return generators_.size(); }
  const std::vector<IntMat>& generators() const noexcept { return generators_; }

  IntMat element(std::size_t index) const;
  const std::vector<std::size_t>& word(std::size_t index) const { return words_.at(index); }

  /// Index of s * g where s is generator `gen` and g is element `index`.
  std::size_t left_mul(std::size_t gen, std::size_t index) const { return cayley_[index * generators_.size() + gen]; }
  /// Index of the element equal to generator `gen`.
  std::size_t generator_index(std::size_t gen) const { return generator_elements_.at(gen); }

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;
  std::size_t element_order(std::size_t a) const;

  std::optional<std::size_t> index_of(const IntMat& m) const;
  bool contains(const IntMat& m) const { return index_of(m).has_value(); }

  /// Indices of the subgroup generated by the given elements (BFS order).
  std::vector<std::size_t> subgroup_closure(const std::vector<std::size_t>& gens) const;

  /// Same generators, in the same order.
  bool same_as(const MatGroup& other) const { return generators_ == other.generators_ && rank_ == other.rank_; }

 private:
  std::size_t stride() const noexcept { return rank_ * rank_; }
  std::span<const std::int64_t> raw(std::size_t index) const {
    return {elements_.data() + index * stride(), stride()};
  }
  std::optional<std::size_t> lookup(std::span<const std::int64_t> m) const;

  std::size_t rank_ = 0;
  std::vector<IntMat> generators_;
  std::vector<std::int64_t> elements_;
  std::vector<std::vector<std::size_t>> words_;
  std::vector<std::size_t> cayley_;
  std::vector<std::size_t> generator_elements_;
  std::unordered_map<std::string, std::size_t> index_;
  mutable std::vector<std::size_t> inverse_cache_;
};

using GroupPtr = std::shared_ptr<const MatGroup>;

GroupPtr make_group(std::size_t rank, const std::vector<IntMat>& generators, std::size_t cap = kDefaultGroupCap);

/// Free finite-rank Z-module with an action of a MatGroup, given by one
/// matrix per group generator.
///
/// The constructor checks shapes and invertibility only. Modules built by
/// functorial constructions respect the group relations automatically;
/// modules assembled from external data should call verify_relations().
class GLattice {
 public:
  /// `rank` is only needed when the group has no generators.
  GLattice(GroupPtr group, std::vector<IntMat> action, std::size_t rank = 0);

  /// The group acting on Z^rank through its own matrices.
  static GLattice standard(GroupPtr group);
  static GLattice trivial(GroupPtr group, std::size_t rank);

  std::size_t rank() const noexcept { return rank_; }
  const GroupPtr& group() const noexcept { return group_; }
  const std::vector<IntMat>& action() const noexcept { return action_; }

  /// Action matrix of every closure element, in element order.
  std::vector<IntMat> element_actions() const;
  IntMat action_of(std::size_t element) const;

  /// True iff extending the generator action along the Cayley graph gives
  /// a well-defined map on every element.
  bool verify_relations() const;

 private:
  GroupPtr group_;
  std::size_t rank_ = 0;
  std::vector<IntMat> action_;
};

/// Saturated sublattice M^G (columns of the returned matrix).
IntMat invariants(const GLattice& lattice);

struct H1Result {
  FinAbGroup group;
  std::size_t cocycle_rank = 0;    // rank of Z^1
  std::size_t coboundary_rank = 0;  // rank of B^1
};

/// H^1(G, M) by the generator-constraint method: a cocycle is fixed by its
/// values on the generators, propagated along the BFS words, and every
/// Cayley-graph edge s*g contributes the constraint f(sg) = f(s) + s f(g).
H1Result h1(const GLattice& lattice);

/// H^1(G, M) as the torsion of Z^{k rank} / B^1, where B^1 is the image of
/// m -> (s m - m)_s. Valid for finite G because Z^1 is the saturation of
/// B^1; needs no enumeration of constraints.
FinAbGroup h1_saturation(const GLattice& lattice);

/// ker(N) / im(sigma - 1) for the cyclic group generated by sigma.
FinAbGroup h1_cyclic(const IntMat& sigma, std::size_t order);

struct PermutationCertificate {
  bool is_permutation_basis = false;
  Integer determinant;
  bool determinant_coprime = false;
  /// perms[s][j] = index of the column that generator s sends column j to;
  /// empty when some image is not a column of the basis.
  std::vector<std::vector<std::size_t>> perms;
};

/// Checks whether every generator permutes the columns of `basis`
/// (unsigned) and p does not divide det(basis).
PermutationCertificate is_permutation_basis(const GLattice& lattice, const IntMat& basis, unsigned long p);

/// The same module with the action restricted to the subgroup generated by
/// the given closure elements.
GLattice restrict_to(const GLattice& lattice, const std::vector<std::size_t>& subgroup_elements);

/// Action of each generator on the sublattice spanned by the saturated
/// columns of `basis`; throws PreconditionViolated if it is not stable.
GLattice sublattice_action(const GLattice& ambient, const IntMat& basis);

/// Generators (closure element indices) of a Sylow p-subgroup, grown one
/// normalizing step at a time. Candidate order is shuffled with `seed`.
std::vector<std::size_t> sylow_subgroup(const MatGroup& group, unsigned long p, std::uint64_t seed = 0);

}  // namespace torsorlat
