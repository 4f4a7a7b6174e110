#include "torsorlat/chatelet.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace torsorlat::chatelet {

std::size_t ChateletSpec::total_degree() const {
  std::size_t n = 0;
  for (const auto& f : factors) n += f.degree;
  return n;
}

std::size_t ChateletSpec::position(long id) const {
  for (std::size_t p = 0; p < factors.size(); ++p)
    if (factors[p].id == id) return p;
  throw Error(ErrorCode::BadFactorId, "no factor with id " + std::to_string(id));
}

std::size_t ChateletSpec::offset(std::size_t pos) const {
  std::size_t off = 0;
  for (std::size_t p = 0; p < pos; ++p) off += factors.at(p).degree;
  return off;
}

std::vector<std::size_t> ChateletSpec::roots_of(long id) const {
  const std::size_t p = position(id);
  std::vector<std::size_t> out(factors[p].degree);
  std::iota(out.begin(), out.end(), offset(p));
  return out;
}

namespace {

bool is_perm(const Perm& p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (std::size_t x : p) {
    if (x >= n || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

Perm compose(const Perm& a, const Perm& b) {  // a after b
  Perm out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

Perm invert(const Perm& a) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = i;
  return out;
}

std::vector<std::size_t> block_of_roots(const ChateletSpec& spec) {
  std::vector<std::size_t> block;
  for (std::size_t p = 0; p < spec.factors.size(); ++p) block.insert(block.end(), spec.factors[p].degree, p);
  return block;
}

bool preserves_blocks(const Perm& p, const std::vector<std::size_t>& block) {
  for (std::size_t j = 0; j < p.size(); ++j)
    if (block[p[j]] != block[j]) return false;
  return true;
}

std::set<Perm> permutation_closure(const std::vector<Perm>& gens, std::size_t n) {
  Perm id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> seen{id};
  std::vector<Perm> queue{id};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& g : gens) {
      Perm next = compose(g, queue[i]);
      if (seen.insert(next).second) {
        if (seen.size() > kDefaultGroupCap) throw Error(ErrorCode::GroupTooLarge, "root permutation group too large");
        queue.push_back(std::move(next));
      }
    }
  return seen;
}

IntMat basis_vector(std::size_t rank, std::size_t i) {
  IntMat v(rank, 1);
  v(i, 0) = 1;
  return v;
}

IntMat factor_sum(const ChateletLattice& pic, long id) {
  IntMat v(pic.rank(), 1);
  for (std::size_t a : pic.spec.roots_of(id)) v(a, 0) = 1;
  return v;
}

// Rows of the generator-constraint system above which H^1 is computed by
// saturation instead.
constexpr std::size_t kConstraintRowBudget = 400000;

}  // namespace

std::vector<bool> validate(const ChateletSpec& spec) {
  if (spec.factors.empty()) throw Error(ErrorCode::BadInput, "no factors");
  std::set<long> ids;
  for (const auto& f : spec.factors) {
    if (f.degree == 0) throw Error(ErrorCode::BadInput, "factor " + std::to_string(f.id) + " has degree 0");
    if (!ids.insert(f.id).second) throw Error(ErrorCode::BadInput, "duplicate factor id " + std::to_string(f.id));
  }
  const std::size_t n = spec.total_degree();
  if (n % 2 != 0) throw Error(ErrorCode::OddDegree, "total degree " + std::to_string(n) + " is odd");

  const auto block = block_of_roots(spec);
  for (const auto& g : spec.gamma_generators) {
    if (!is_perm(g, n)) throw Error(ErrorCode::BadInput, "gamma generator is not a permutation of the roots");
    if (!preserves_blocks(g, block)) throw Error(ErrorCode::BadInput, "gamma generator mixes roots of different factors");
  }
  const Perm& tau = spec.sigma_root_perm;
  if (!is_perm(tau, n)) throw Error(ErrorCode::BadInput, "sigma_root_perm is not a permutation of the roots");
  if (!preserves_blocks(tau, block)) throw Error(ErrorCode::InconsistentSigma, "sigma does not preserve the factors");

  const auto gamma = permutation_closure(spec.gamma_generators, n);
  const Perm tau_inv = invert(tau);
  for (const auto& g : spec.gamma_generators)
    if (!gamma.count(compose(tau, compose(g, tau_inv))))
      throw Error(ErrorCode::InconsistentSigma, "sigma does not normalize gamma");
  if (!gamma.count(compose(tau, tau))) throw Error(ErrorCode::InconsistentSigma, "sigma^2 is not in gamma");

  std::vector<bool> transitive;
  for (std::size_t p = 0; p < spec.factors.size(); ++p) {
    const std::size_t first = spec.offset(p);
    std::set<std::size_t> orbit;
    for (const auto& g : gamma) orbit.insert(g[first]);
    transitive.push_back(orbit.size() == spec.factors[p].degree);
  }
  return transitive;
}

IntMat gamma_matrix(std::size_t n, const Perm& perm) {
  IntMat m(n + 2, n + 2);
  for (std::size_t j = 0; j < n; ++j) m(perm[j], j) = 1;
  m(n, n) = 1;
  m(n + 1, n + 1) = 1;
  return m;
}

IntMat sigma_matrix(std::size_t n, const Perm& perm) {
  IntMat m(n + 2, n + 2);
  for (std::size_t j = 0; j < n; ++j) {
    m(n, j) = 1;
    m(perm[j], j) = -1;
  }
  m(n, n) = 1;
  for (std::size_t j = 0; j < n; ++j) m(j, n + 1) = 1;
  m(n, n + 1) = -static_cast<long>(n / 2);
  m(n + 1, n + 1) = 1;
  return m;
}

ChateletLattice build_picard(const ChateletSpec& spec, bool allow_nontransitive, std::size_t cap) {
  const auto transitive = validate(spec);
  const bool all_transitive = std::all_of(transitive.begin(), transitive.end(), [](bool b) { return b; });
  if (!all_transitive && !allow_nontransitive)
    throw Error(ErrorCode::NotTransitive, "gamma is not transitive on the roots of every factor");

  const std::size_t n = spec.total_degree();
  std::vector<IntMat> gens;
  for (const auto& g : spec.gamma_generators) gens.push_back(gamma_matrix(n, g));
  gens.push_back(sigma_matrix(n, spec.sigma_root_perm));
  auto group = make_group(n + 2, gens, cap);

  // Every closure element must be of one of the two shapes: it fixes G and
  // permutes the D_j, or it sends G to G' and each D_j to F - D_k.
  const IntMat g_prime = sigma_matrix(n, Perm(spec.sigma_root_perm)).col(n + 1);
  for (std::size_t e = 0; e < group->order(); ++e) {
    const IntMat m = group->element(e);
    const IntMat g_col = m.col(n + 1);
    const bool even = g_col == basis_vector(n + 2, n + 1);
    if (!even && g_col != g_prime) throw Error(ErrorCode::InconsistentSigma, "closure element moves G inconsistently");
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t nonzero = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (sgn(m(i, j)) != 0) ++nonzero;
      const Integer expected_f = even ? 0 : 1;
      if (nonzero != 1 || m(n, j) != expected_f || sgn(m(n + 1, j)) != 0)
        throw Error(ErrorCode::InconsistentSigma, "closure element is not a signed root permutation");
    }
  }

  GLattice lattice(group, gens);
  return ChateletLattice{spec, n, std::move(lattice), gens.size() - 1, all_transitive};
}

std::vector<PairOrbit> orbit_decomposition(const ChateletSpec& spec, long i, long i2) {
  const auto left = spec.roots_of(i);
  const auto right = spec.roots_of(i2);
  const bool same = i == i2;
  auto normalize = [same](std::size_t a, std::size_t b) {
    if (same && a > b) std::swap(a, b);
    return std::make_pair(a, b);
  };

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a : left)
    for (std::size_t b : right)
      if (!same || a <= b) pairs.emplace_back(a, b);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t k = 0; k < pairs.size(); ++k) index.emplace(pairs[k], k);

  std::vector<std::size_t> parent(pairs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t k = 0; k < pairs.size(); ++k)
    for (const auto& g : spec.gamma_generators) {
      const std::size_t other = index.at(normalize(g[pairs[k].first], g[pairs[k].second]));
      const std::size_t x = find(k), y = find(other);
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }

  std::vector<PairOrbit> orbits;
  std::map<std::size_t, std::size_t> orbit_of_root;
  std::vector<std::size_t> orbit_of_pair(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const std::size_t root = find(k);
    auto [it, fresh] = orbit_of_root.emplace(root, orbits.size());
    if (fresh) {
      PairOrbit o;
      o.i = i;
      o.i2 = i2;
      o.diagonal = same && pairs[k].first == pairs[k].second;
      orbits.push_back(std::move(o));
    }
    orbits[it->second].members.push_back(pairs[k]);
    orbit_of_pair[k] = it->second;
  }

  const Perm& tau = spec.sigma_root_perm;
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    const auto [a, b] = orbits[o].members.front();
    orbits[o].sigma_image = orbit_of_pair[index.at(normalize(tau[a], tau[b]))];
    orbits[o].sigma_stable = orbits[o].sigma_image == o;
  }
  return orbits;
}

IntMat orbit_class(const ChateletLattice& pic, const PairOrbit& orbit) {
  IntMat v(Sym2Basis(pic.rank()).size(), 1);
  for (auto [a, b] : orbit.members)
    v = v + sym2_product(basis_vector(pic.rank(), a), basis_vector(pic.rank(), b));
  return v;
}

LemmaResult lemma53_check(const ChateletSpec& spec, long i0, long i) {
  validate(spec);
  if (spec.factors[spec.position(i0)].degree % 2 == 0)
    throw Error(ErrorCode::PreconditionViolated, "factor " + std::to_string(i0) + " has even degree");
  if (i == i0) throw Error(ErrorCode::PreconditionViolated, "needs two different factors");
  LemmaResult out;
  for (auto& o : orbit_decomposition(spec, i0, i))
    if (o.sigma_stable) {
      out.holds = true;
      out.witness = std::move(o);
      break;
    }
  return out;
}

LemmaResult lemma54_check(const ChateletSpec& spec, long i) {
  validate(spec);
  const std::size_t deg = spec.factors[spec.position(i)].degree;
  const auto orbits = orbit_decomposition(spec, i, i);
  LemmaResult out;
  const bool divisible = std::all_of(orbits.begin(), orbits.end(), [deg](const PairOrbit& o) { return 2 * o.size() % deg == 0; });
  if (deg % 2 != 0) {
    out.holds = divisible;
    return out;
  }
  for (const auto& o : orbits)
    if (o.sigma_stable && (2 * o.size() / deg) % 2 == 1 && 2 * o.size() % deg == 0) {
      out.witness = o;
      break;
    }
  out.holds = divisible && out.witness.has_value();
  return out;
}

namespace {

// Gamma-invariants of Sym^2 Pic and the matrix of sigma on them.
struct InvariantData {
  IntMat basis;
  IntMat sigma;
};

InvariantData gamma_invariants(const ChateletLattice& pic) {
  const std::size_t n = pic.n;
  const std::size_t big = Sym2Basis(pic.rank()).size();
  IntMat stacked(0, big);
  const IntMat id = IntMat::identity(big);
  for (const auto& g : pic.spec.gamma_generators) stacked = stacked.vstack(sym2_matrix(gamma_matrix(n, g)) - id);
  IntMat basis = stacked.rows() == 0 ? id : kernel_basis(stacked);
  const IntMat sigma = sym2_matrix(pic.sigma_matrix());
  const IntMat image = sigma * basis;
  IntMat coords = left_inverse(basis) * image;
  if (basis * coords != image) throw Error(ErrorCode::InconsistentSigma, "sigma does not preserve the gamma-invariants");
  return {std::move(basis), std::move(coords)};
}

std::vector<std::pair<std::size_t, std::size_t>> factor_pairs(std::size_t count) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p = 0; p < count; ++p)
    for (std::size_t q = p; q < count; ++q) out.emplace_back(p, q);
  return out;
}

}  // namespace

IntMat invariant_orbit_basis(const ChateletLattice& pic) {
  const std::size_t r = pic.rank();
  const IntMat f = basis_vector(r, pic.f_index());
  const IntMat g = basis_vector(r, pic.g_index());
  IntMat b = sym2_product(f, f).hstack(sym2_product(f, g)).hstack(sym2_product(g, g));
  for (const auto& fac : pic.spec.factors) b = b.hstack(sym2_product(f, factor_sum(pic, fac.id)));
  for (const auto& fac : pic.spec.factors) b = b.hstack(sym2_product(g, factor_sum(pic, fac.id)));
  for (auto [p, q] : factor_pairs(pic.spec.factors.size()))
    for (const auto& o : orbit_decomposition(pic.spec, pic.spec.factors[p].id, pic.spec.factors[q].id))
      b = b.hstack(orbit_class(pic, o));
  return b;
}

Prop52Result verify_prop52(const ChateletSpec& spec, std::size_t cap) {
  const ChateletLattice pic = build_picard(spec, true, cap);
  Prop52Result out;
  out.hypotheses_hold = pic.transitive;
  const MatGroup& group = *pic.lattice.group();
  out.group_order = group.order();

  const GLattice s = sym2(pic.lattice);
  const bool constraints = group.order() * group.num_generators() * s.rank() <= kConstraintRowBudget;
  out.h1_method = constraints ? "constraints" : "saturation";
  out.h1_full = constraints ? h1(s).group : h1_saturation(s);

  const InvariantData inv = gamma_invariants(pic);
  out.invariant_rank = inv.basis.cols();
  out.h1_reduced = inv.basis.cols() == 0 ? FinAbGroup{} : h1_cyclic(inv.sigma, 2);
  out.agree = out.h1_full == out.h1_reduced;
  return out;
}

Filtration build_filtration(const ChateletSpec& spec) {
  const ChateletLattice pic = build_picard(spec);
  const auto& factors = pic.spec.factors;
  const std::size_t r = pic.rank();
  const IntMat f = basis_vector(r, pic.f_index());
  const IntMat g = basis_vector(r, pic.g_index());

  Filtration out;
  for (const auto& fac : factors)
    if (fac.degree % 2 == 1 && (!out.i0 || fac.id < *out.i0)) out.i0 = fac.id;

  // Orbits of O_{i,i'} for positions p <= q.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<PairOrbit>> orbits;
  for (auto [p, q] : factor_pairs(factors.size()))
    orbits[{p, q}] = orbit_decomposition(pic.spec, factors[p].id, factors[q].id);

  // Orbits consumed by A_1, A_2 and A_5.
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> reserved;
  for (std::size_t p = 0; p < factors.size(); ++p) {
    const auto& own = orbits[{p, p}];
    for (std::size_t o = 0; o < own.size(); ++o)
      if (own[o].diagonal) reserved.insert({p, p, o});
    if (factors[p].degree % 2 == 1) continue;
    const std::size_t deg = factors[p].degree;
    bool found = false;
    for (std::size_t o = 0; o < own.size() && !found; ++o)
      if (own[o].sigma_stable && 2 * own[o].size() % deg == 0 && (2 * own[o].size() / deg) % 2 == 1) {
        out.s0.emplace_back(factors[p].id, own[o]);
        reserved.insert({p, p, o});
        found = true;
      }
    if (!found) throw Error(ErrorCode::WitnessNotFound, "no orbit S0 for factor " + std::to_string(factors[p].id));
  }
  const std::size_t p0 = out.i0 ? pic.spec.position(*out.i0) : 0;
  if (out.i0) {
    for (std::size_t p = 0; p < factors.size(); ++p) {
      if (p == p0 || factors[p].degree % 2 == 0) continue;
      const auto key = std::make_pair(std::min(p, p0), std::max(p, p0));
      const auto& list = orbits[key];
      bool found = false;
      for (std::size_t o = 0; o < list.size() && !found; ++o)
        if (list[o].sigma_stable) {
          out.s1.emplace_back(factors[p].id, list[o]);
          reserved.insert({key.first, key.second, o});
          found = true;
        }
      if (!found) throw Error(ErrorCode::WitnessNotFound, "no orbit S1 for factor " + std::to_string(factors[p].id));
    }
  }

  auto d = [&](std::size_t p) { return factor_sum(pic, factors[p].id); };
  std::vector<IntMat> blocks(6, IntMat(Sym2Basis(r).size(), 0));
  blocks[0] = sym2_product(f, f);
  for (std::size_t p = 0; p < factors.size(); ++p)
    if (factors[p].degree % 2 == 1) blocks[0] = blocks[0].hstack(sym2_product(f, d(p)));
  if (out.i0)
    for (std::size_t p = 0; p < factors.size(); ++p)
      if (p != p0 && factors[p].degree % 2 == 1) blocks[0] = blocks[0].hstack(sym2_product(d(p0), d(p)));

  for (std::size_t p = 0; p < factors.size(); ++p)
    if (factors[p].degree % 2 == 0) blocks[1] = blocks[1].hstack(sym2_product(f, d(p)));
  for (const auto& [id, orbit] : out.s0) blocks[1] = blocks[1].hstack(orbit_class(pic, orbit));

  blocks[2] = sym2_product(g, f);

  for (const auto& [key, list] : orbits)
    for (std::size_t o = 0; o < list.size(); ++o)
      if (!reserved.count({key.first, key.second, o})) blocks[3] = blocks[3].hstack(orbit_class(pic, list[o]));

  for (std::size_t p = 0; p < factors.size(); ++p) blocks[4] = blocks[4].hstack(sym2_product(g, d(p)));
  for (std::size_t p = 0; p < factors.size(); ++p) {
    const auto& own = orbits[{p, p}];
    for (const auto& o : own)
      if (o.diagonal) blocks[4] = blocks[4].hstack(orbit_class(pic, o));
  }

  blocks[5] = sym2_product(g, g);

  IntMat all(Sym2Basis(r).size(), 0);
  for (const auto& b : blocks) all = all.hstack(b);
  const InvariantData inv = gamma_invariants(pic);
  out.total_rank = all.cols();
  out.invariant_rank = inv.basis.cols();
  out.spans_invariants = all.cols() == inv.basis.cols() && same_lattice(all, inv.basis);

  std::optional<IntMat> sigma;
  if (out.spans_invariants) {
    const IntMat image = sym2_matrix(pic.sigma_matrix()) * all;
    sigma = left_inverse(all) * image;
  }

  std::size_t start = 0;
  bool previous_stable = true;
  for (std::size_t l = 0; l < 6; ++l) {
    FiltrationStep step;
    step.label = "A" + std::to_string(l + 1);
    step.basis = blocks[l];
    const std::size_t end = start + blocks[l].cols();
    if (sigma) {
      bool stable = true;
      for (std::size_t row = end; row < sigma->rows() && stable; ++row)
        for (std::size_t col = 0; col < end && stable; ++col) stable = sgn((*sigma)(row, col)) == 0;
      step.prefix_sigma_stable = stable;
      if (stable && previous_stable) {
        const std::size_t size = end - start;
        step.h1 = size == 0 ? FinAbGroup{} : h1_cyclic(sigma->block(start, start, size, size), 2);
      }
      previous_stable = stable;
    }
    out.steps.push_back(std::move(step));
    start = end;
  }
  out.all_trivial = out.spans_invariants && std::all_of(out.steps.begin(), out.steps.end(), [](const FiltrationStep& s) {
                      return s.prefix_sigma_stable && s.h1 && s.h1->is_trivial();
                    });
  return out;
}

}  // namespace torsorlat::chatelet
