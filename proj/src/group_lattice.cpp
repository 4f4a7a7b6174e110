#include "torsorlat/group_lattice.hpp"

#include <deque>
#include <numeric>
#include <random>
#include <sstream>

namespace torsorlat {

namespace {

std::vector<std::int64_t> to_small(const IntMat& m) {
  std::vector<std::int64_t> out(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Integer& v = m(i, j);
      if (!v.fits_slong_p()) throw Error(ErrorCode::EntryOverflow, "matrix entry exceeds 64 bits");
      out[i * m.cols() + j] = v.get_si();
    }
  return out;
}

std::string key_of(std::span<const std::int64_t> m) {
  return std::string(reinterpret_cast<const char*>(m.data()), m.size() * sizeof(std::int64_t));
}

void small_mul(std::span<const std::int64_t> a, std::span<const std::int64_t> b, std::size_t n,
               std::vector<std::int64_t>& out) {
  out.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t aik = a[i * n + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        std::int64_t prod;
        if (__builtin_mul_overflow(aik, b[k * n + j], &prod) ||
            __builtin_add_overflow(out[i * n + j], prod, &out[i * n + j]))
          throw Error(ErrorCode::EntryOverflow, "group element entries exceed 64 bits");
      }
    }
}

std::string column_key(const IntMat& m, std::size_t j) {
  std::string key;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    key += m(i, j).get_str();
    key += ',';
  }
  return key;
}

}  // namespace

// ---------------------------------------------------------------------------
// MatGroup

MatGroup MatGroup::close(std::size_t rank, const std::vector<IntMat>& generators, std::size_t cap) {
  MatGroup g;
  g.rank_ = rank;
  g.generators_ = generators;
  std::vector<std::vector<std::int64_t>> gens;
  for (const auto& m : generators) {
    if (m.rows() != rank || m.cols() != rank)
      throw Error(ErrorCode::DimensionMismatch, "generator is not " + std::to_string(rank) + "x" + std::to_string(rank));
    const Integer d = det(m);
    if (abs(d) != 1) throw Error(ErrorCode::NotInvertible, "generator has determinant " + d.get_str());
    gens.push_back(to_small(m));
  }
  const std::size_t k = gens.size();

  auto identity = to_small(IntMat::identity(rank));
  g.elements_ = identity;
  g.words_.push_back({});
  g.index_.emplace(key_of(identity), 0);

  std::vector<std::int64_t> prod;
  for (std::size_t i = 0; i < g.words_.size(); ++i) {
    for (std::size_t s = 0; s < k; ++s) {
      small_mul(gens[s], g.raw(i), rank, prod);
      std::string key = key_of(prod);
      auto it = g.index_.find(key);
      std::size_t target;
      if (it != g.index_.end()) {
        target = it->second;
      } else {
        target = g.words_.size();
        if (target >= cap)
          throw Error(ErrorCode::GroupTooLarge, "closure exceeds cap of " + std::to_string(cap) + " elements");
        g.index_.emplace(std::move(key), target);
        g.elements_.insert(g.elements_.end(), prod.begin(), prod.end());
        std::vector<std::size_t> w;
        w.reserve(g.words_[i].size() + 1);
        w.push_back(s);
        w.insert(w.end(), g.words_[i].begin(), g.words_[i].end());
        g.words_.push_back(std::move(w));
      }
      g.cayley_.push_back(target);
    }
  }
  for (std::size_t s = 0; s < k; ++s) g.generator_elements_.push_back(g.left_mul(s, 0));
  return g;
}

GroupPtr make_group(std::size_t rank, const std::vector<IntMat>& generators, std::size_t cap) {
  return std::make_shared<const MatGroup>(MatGroup::close(rank, generators, cap));
}

IntMat MatGroup::element(std::size_t index) const {
  if (index >= order()) throw Error(ErrorCode::IndexOutOfRange, "element index " + std::to_string(index));
  IntMat m(rank_, rank_);
  auto r = raw(index);
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) m(i, j) = static_cast<long>(r[i * rank_ + j]);
  return m;
}

std::optional<std::size_t> MatGroup::lookup(std::span<const std::int64_t> m) const {
  auto it = index_.find(key_of(m));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> MatGroup::index_of(const IntMat& m) const {
  if (m.rows() != rank_ || m.cols() != rank_) return std::nullopt;
  std::vector<std::int64_t> small;
  try {
    small = to_small(m);
  } catch (const Error&) {
    return std::nullopt;
  }
  return lookup(small);
}

std::size_t MatGroup::multiply(std::size_t a, std::size_t b) const {
  const auto& w = word(a);
  std::size_t x = b;
  for (auto it = w.rbegin(); it != w.rend(); ++it) x = left_mul(*it, x);
  return x;
}

std::size_t MatGroup::element_order(std::size_t a) const {
  std::size_t n = 1;
  for (std::size_t x = a; x != 0; x = multiply(a, x)) ++n;
  return n;
}

std::size_t MatGroup::inverse(std::size_t a) const {
  if (inverse_cache_.empty()) inverse_cache_.assign(order(), order());
  if (inverse_cache_[a] != order()) return inverse_cache_[a];
  // a^(ord - 1)
  std::size_t x = 0;
  const std::size_t ord = element_order(a);
  for (std::size_t i = 0; i + 1 < ord; ++i) x = multiply(a, x);
  inverse_cache_[a] = x;
  inverse_cache_[x] = a;
  return x;
}

std::vector<std::size_t> MatGroup::subgroup_closure(const std::vector<std::size_t>& gens) const {
  std::vector<char> seen(order(), 0);
  std::vector<std::size_t> out{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t g : gens) {
      const std::size_t y = multiply(g, out[i]);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  return out;
}

// ---------------------------------------------------------------------------
// GLattice

GLattice::GLattice(GroupPtr group, std::vector<IntMat> action, std::size_t rank)
    : group_(std::move(group)), action_(std::move(action)) {
  if (!group_) throw Error(ErrorCode::BadInput, "lattice without a group");
  if (action_.size() != group_->num_generators())
    throw Error(ErrorCode::DimensionMismatch, "need one action matrix per group generator");
  rank_ = action_.empty() ? rank : action_.front().rows();
  for (const auto& a : action_) {
    if (a.rows() != rank_ || a.cols() != rank_)
      throw Error(ErrorCode::DimensionMismatch, "action matrices must be square of equal rank");
    if (abs(det(a)) != 1) throw Error(ErrorCode::NotInvertible, "action matrix is not invertible over Z");
  }
}

GLattice GLattice::standard(GroupPtr group) {
  auto gens = group->generators();
  if (gens.empty()) return trivial(group, group->rank());
  return GLattice(std::move(group), std::move(gens));
}

GLattice GLattice::trivial(GroupPtr group, std::size_t rank) {
  std::vector<IntMat> action(group->num_generators(), IntMat::identity(rank));
  return GLattice(std::move(group), std::move(action), rank);
}

std::vector<IntMat> GLattice::element_actions() const {
  const MatGroup& g = *group_;
  std::vector<IntMat> acts(g.order());
  std::vector<char> done(g.order(), 0);
  acts[0] = IntMat::identity(rank_);
  done[0] = 1;
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t s = 0; s < g.num_generators(); ++s) {
      const std::size_t h = g.left_mul(s, i);
      if (!done[h]) {
        acts[h] = action_[s] * acts[i];
        done[h] = 1;
      }
    }
  return acts;
}

IntMat GLattice::action_of(std::size_t element) const {
  IntMat m = IntMat::identity(rank_);
  const auto& w = group_->word(element);
  for (auto it = w.rbegin(); it != w.rend(); ++it) m = action_[*it] * m;
  return m;
}

bool GLattice::verify_relations() const {
  const MatGroup& g = *group_;
  auto acts = element_actions();
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t s = 0; s < g.num_generators(); ++s)
      if (action_[s] * acts[i] != acts[g.left_mul(s, i)]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Cohomology

IntMat invariants(const GLattice& lattice) {
  const std::size_t r = lattice.rank();
  if (lattice.action().empty()) return IntMat::identity(r);
  IntMat stacked(0, r);
  const IntMat id = IntMat::identity(r);
  for (const auto& a : lattice.action()) stacked = stacked.vstack(a - id);
  return kernel_basis(stacked);
}

namespace {

// Rows (s m - m)_s stacked, i.e. the coboundary map Z^r -> Z^{k r}.
IntMat coboundary_matrix(const GLattice& lattice) {
  const std::size_t r = lattice.rank();
  IntMat b(0, r);
  const IntMat id = IntMat::identity(r);
  for (const auto& a : lattice.action()) b = b.vstack(a - id);
  return b;
}

}  // namespace

H1Result h1(const GLattice& lattice) {
  const MatGroup& g = *lattice.group();
  const std::size_t r = lattice.rank();
  const std::size_t k = g.num_generators();
  const std::size_t n = k * r;
  H1Result result;
  if (n == 0) return result;

  // f(g) = M_g * x, x = (f(s_1), ..., f(s_k)).
  std::vector<IntMat> m(g.order());
  std::vector<char> done(g.order(), 0);
  m[0] = IntMat(r, n);
  done[0] = 1;
  std::vector<IntMat> unit(k, IntMat(r, n));
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t i = 0; i < r; ++i) unit[s](i, s * r + i) = 1;

  std::vector<std::vector<Integer>> constraints;
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t s = 0; s < k; ++s) {
      const std::size_t h = g.left_mul(s, i);
      IntMat candidate = unit[s] + lattice.action()[s] * m[i];
      if (!done[h]) {
        m[h] = std::move(candidate);
        done[h] = 1;
        continue;
      }
      IntMat diff = m[h] - candidate;
      for (std::size_t row = 0; row < r; ++row) {
        bool nonzero = false;
        std::vector<Integer> v(n);
        for (std::size_t j = 0; j < n; ++j) {
          v[j] = diff(row, j);
          nonzero = nonzero || sgn(v[j]) != 0;
        }
        if (nonzero) constraints.push_back(std::move(v));
      }
    }

  const IntMat z1 = constraints.empty() ? IntMat::identity(n) : kernel_basis(IntMat::from_rows(constraints));
  const IntMat b1 = coboundary_matrix(lattice);
  result.cocycle_rank = z1.cols();
  result.coboundary_rank = rank(b1);
  if (z1.cols() == 0) return result;

  // Coordinates of the coboundaries in the cocycle basis.
  const IntMat coords = left_inverse(z1) * b1;
  if (z1 * coords != b1) throw Error(ErrorCode::PreconditionViolated, "coboundary outside the cocycle lattice");
  result.group = quotient(z1.cols(), coords);
  return result;
}

FinAbGroup h1_saturation(const GLattice& lattice) {
  const std::size_t n = lattice.group()->num_generators() * lattice.rank();
  if (n == 0) return {};
  return quotient(n, coboundary_matrix(lattice)).torsion();
}

FinAbGroup h1_cyclic(const IntMat& sigma, std::size_t order) {
  if (!sigma.is_square()) throw Error(ErrorCode::NonSquare, "h1_cyclic needs a square matrix");
  if (order == 0) throw Error(ErrorCode::BadInput, "order must be positive");
  const std::size_t r = sigma.rows();
  IntMat power = IntMat::identity(r);
  IntMat norm(r, r);
  for (std::size_t i = 0; i < order; ++i) {
    norm = norm + power;
    power = sigma * power;
  }
  if (!power.is_identity()) throw Error(ErrorCode::NotPeriodic, "sigma^" + std::to_string(order) + " is not the identity");
  const IntMat kernel = kernel_basis(norm);
  if (kernel.cols() == 0) return {};
  const IntMat image = sigma - IntMat::identity(r);
  const IntMat coords = left_inverse(kernel) * image;
  if (kernel * coords != image) throw Error(ErrorCode::PreconditionViolated, "im(sigma - 1) not inside ker(N)");
  return quotient(kernel.cols(), coords);
}

PermutationCertificate is_permutation_basis(const GLattice& lattice, const IntMat& basis, unsigned long p) {
  const std::size_t r = lattice.rank();
  if (basis.rows() != r || basis.cols() != r)
    throw Error(ErrorCode::DimensionMismatch, "basis must be rank x rank");
  PermutationCertificate cert;
  cert.determinant = det(basis);
  cert.determinant_coprime = !mpz_divisible_ui_p(cert.determinant.get_mpz_t(), p);

  std::unordered_map<std::string, std::size_t> columns;
  for (std::size_t j = 0; j < r; ++j) columns.emplace(column_key(basis, j), j);
  bool all_perm = columns.size() == r;
  for (const auto& a : lattice.action()) {
    if (!all_perm) break;
    const IntMat image = a * basis;
    std::vector<std::size_t> perm(r);
    std::vector<char> hit(r, 0);
    for (std::size_t j = 0; j < r && all_perm; ++j) {
      auto it = columns.find(column_key(image, j));
      if (it == columns.end() || hit[it->second]) {
        all_perm = false;
      } else {
        perm[j] = it->second;
        hit[it->second] = 1;
      }
    }
    if (all_perm) cert.perms.push_back(std::move(perm));
  }
  if (!all_perm) cert.perms.clear();
  cert.is_permutation_basis = all_perm && cert.determinant_coprime;
  return cert;
}

GLattice restrict_to(const GLattice& lattice, const std::vector<std::size_t>& subgroup_elements) {
  const MatGroup& g = *lattice.group();
  std::vector<IntMat> gens;
  std::vector<IntMat> action;
  for (std::size_t e : subgroup_elements) {
    if (e >= g.order()) throw Error(ErrorCode::IndexOutOfRange, "element index " + std::to_string(e));
    gens.push_back(g.element(e));
    action.push_back(lattice.action_of(e));
  }
  auto sub = make_group(g.rank(), gens);
  if (action.empty()) return GLattice::trivial(sub, lattice.rank());
  return GLattice(std::move(sub), std::move(action));
}

GLattice sublattice_action(const GLattice& ambient, const IntMat& basis) {
  if (basis.rows() != ambient.rank()) throw Error(ErrorCode::DimensionMismatch, "basis does not live in the lattice");
  const IntMat coords = left_inverse(basis);
  std::vector<IntMat> action;
  for (const auto& g : ambient.action()) {
    const IntMat image = g * basis;
    IntMat m = coords * image;
    if (basis * m != image) throw Error(ErrorCode::PreconditionViolated, "sublattice is not stable under the action");
    action.push_back(std::move(m));
  }
  return GLattice(ambient.group(), std::move(action), basis.cols());
}

std::vector<std::size_t> sylow_subgroup(const MatGroup& group, unsigned long p, std::uint64_t seed) {
  if (!is_prime(p)) throw Error(ErrorCode::BadInput, std::to_string(p) + " is not prime");
  std::size_t target = 1;
  for (std::size_t n = group.order(); n % p == 0; n /= p) target *= p;

  std::vector<std::size_t> order(group.order());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin() + 1, order.end(), rng);

  std::vector<std::size_t> gens;
  std::vector<char> in_p(group.order(), 0);
  in_p[0] = 1;
  std::size_t size = 1;
  while (size < target) {
    bool grown = false;
    for (std::size_t c : order) {
      if (in_p[c]) continue;
      std::size_t power = 0;
      for (unsigned long i = 0; i < p; ++i) power = group.multiply(c, power);
      if (!in_p[power]) continue;
      const std::size_t c_inv = group.inverse(c);
      bool normalizes = true;
      for (std::size_t x : gens)
        if (!in_p[group.multiply(group.multiply(c, x), c_inv)]) {
          normalizes = false;
          break;
        }
      if (!normalizes) continue;
      gens.push_back(c);
      auto elems = group.subgroup_closure(gens);
      std::fill(in_p.begin(), in_p.end(), 0);
      for (std::size_t e : elems) in_p[e] = 1;
      size = elems.size();
      grown = true;
      break;
    }
    if (!grown) throw Error(ErrorCode::WitnessNotFound, "no normalizing p-element found");
  }
  return gens;
}

}  // namespace torsorlat
