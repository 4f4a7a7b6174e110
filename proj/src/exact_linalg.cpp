#include "torsorlat/exact_linalg.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <sstream>
#include <utility>

namespace torsorlat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::NotPeriodic: return "NotPeriodic";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::BadDegree: return "BadDegree";
    case ErrorCode::BadRank: return "BadRank";
    case ErrorCode::NotARoot: return "NotARoot";
    case ErrorCode::TooLargeForEnumeration: return "TooLargeForEnumeration";
    case ErrorCode::ActionDoesNotPreserveForm: return "ActionDoesNotPreserveForm";
    case ErrorCode::WrongDegree: return "WrongDegree";
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::OddDegree: return "OddDegree";
    case ErrorCode::InconsistentSigma: return "InconsistentSigma";
    case ErrorCode::BadFactorId: return "BadFactorId";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::WitnessNotFound: return "WitnessNotFound";
    case ErrorCode::EntryOverflow: return "EntryOverflow";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// IntMat

IntMat::IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr ? rows.begin()->size() : 0;
  IntMat m(nr, nc);
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != nc) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    std::size_t j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<Integer>>& rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr ? rows.front().size() : 0;
  IntMat m(nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    if (rows[i].size() != nc) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMat IntMat::column(const std::vector<Integer>& entries) {
  IntMat m(entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
  return m;
}

IntMat IntMat::column(std::initializer_list<long> entries) {
  IntMat m(entries.size(), 1);
  std::size_t i = 0;
  for (long v : entries) m(i++, 0) = v;
  return m;
}

IntMat IntMat::diagonal(const std::vector<Integer>& entries) {
  IntMat m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

IntMat IntMat::col(std::size_t j) const { return block(0, j, rows_, 1); }
IntMat IntMat::row(std::size_t i) const { return block(i, 0, 1, cols_); }
IntMat IntMat::cols_range(std::size_t first, std::size_t last) const { return block(0, first, rows_, last - first); }
IntMat IntMat::rows_range(std::size_t first, std::size_t last) const { return block(first, 0, last - first, cols_); }

IntMat IntMat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorCode::IndexOutOfRange, "block outside matrix");
  IntMat m(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return sgn(v) == 0; });
}

bool IntMat::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

void IntMat::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) mpz_swap((*this)(a, j).get_mpz_t(), (*this)(b, j).get_mpz_t());
}

void IntMat::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) mpz_swap((*this)(i, a).get_mpz_t(), (*this)(i, b).get_mpz_t());
}

IntMat IntMat::hstack(const IntMat& other) const {
  if (rows_ != other.rows_) throw Error(ErrorCode::DimensionMismatch, "hstack row counts differ");
  IntMat m(rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
  }
  return m;
}

IntMat IntMat::vstack(const IntMat& other) const {
  if (cols_ != other.cols_) throw Error(ErrorCode::DimensionMismatch, "vstack column counts differ");
  IntMat m(rows_ + other.rows_, cols_);
  std::copy(data_.begin(), data_.end(), m.data_.begin());
  std::copy(other.data_.begin(), other.data_.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return m;
}

bool operator==(const IntMat& a, const IntMat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "product of incompatible shapes");
  IntMat c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (sgn(b(k, j)) != 0) mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
      }
    }
  return c;
}

IntMat operator+(const IntMat& a, const IntMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "sum of different shapes");
  IntMat c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
  return c;
}

IntMat operator-(const IntMat& a, const IntMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "difference of different shapes");
  IntMat c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
  return c;
}

IntMat operator-(const IntMat& a) {
  IntMat c = a;
  for (auto& v : c.data_) v = -v;
  return c;
}

IntMat operator*(const Integer& s, const IntMat& a) {
  IntMat c = a;
  for (auto& v : c.data_) v *= s;
  return c;
}

std::string IntMat::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMat& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m(i, j);
    }
  }
  return os << ']';
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

// Row/column operations on a working matrix, optionally mirrored into the
// left (U) and right (V) transforms.
class SmithEngine {
 public:
  SmithEngine(IntMat a, bool track_u, bool track_v)
      : d_(std::move(a)), track_u_(track_u), track_v_(track_v) {
    if (track_u_) u_ = IntMat::identity(d_.rows());
    if (track_v_) v_ = IntMat::identity(d_.cols());
  }

  void run() {
    const std::size_t m = d_.rows();
    const std::size_t n = d_.cols();
    const std::size_t limit = std::min(m, n);
    for (std::size_t t = 0; t < limit; ++t) {
      if (!reduce_at(t)) break;
    }
  }

  IntMat& d() { return d_; }
  IntMat& u() { return u_; }
  IntMat& v() { return v_; }

 private:
  // Locates the least nonzero |entry| in the trailing block, first in
  // (row, col) order among ties. Returns false if the block is zero.
  bool find_pivot(std::size_t t, std::size_t& pr, std::size_t& pc) const {
    bool found = false;
    for (std::size_t i = t; i < d_.rows(); ++i)
      for (std::size_t j = t; j < d_.cols(); ++j) {
        const Integer& x = d_(i, j);
        if (sgn(x) == 0) continue;
        if (!found || mpz_cmpabs(x.get_mpz_t(), d_(pr, pc).get_mpz_t()) < 0) {
          pr = i;
          pc = j;
          found = true;
        }
      }
    return found;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    d_.swap_rows(a, b);
    if (track_u_) u_.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    d_.swap_cols(a, b);
    if (track_v_) v_.swap_cols(a, b);
  }
  // row_dst -= q * row_src
  void row_axpy(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t j = 0; j < d_.cols(); ++j)
      if (sgn(d_(src, j))) mpz_submul(d_(dst, j).get_mpz_t(), q.get_mpz_t(), d_(src, j).get_mpz_t());
    if (track_u_)
      for (std::size_t j = 0; j < u_.cols(); ++j)
        if (sgn(u_(src, j))) mpz_submul(u_(dst, j).get_mpz_t(), q.get_mpz_t(), u_(src, j).get_mpz_t());
  }
  // col_dst -= q * col_src
  void col_axpy(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < d_.rows(); ++i)
      if (sgn(d_(i, src))) mpz_submul(d_(i, dst).get_mpz_t(), q.get_mpz_t(), d_(i, src).get_mpz_t());
    if (track_v_)
      for (std::size_t i = 0; i < v_.rows(); ++i)
        if (sgn(v_(i, src))) mpz_submul(v_(i, dst).get_mpz_t(), q.get_mpz_t(), v_(i, src).get_mpz_t());
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < d_.cols(); ++j) d_(r, j) = -d_(r, j);
    if (track_u_)
      for (std::size_t j = 0; j < u_.cols(); ++j) u_(r, j) = -u_(r, j);
  }

  bool reduce_at(std::size_t t) {
    Integer q;
    for (;;) {
      std::size_t pr = 0, pc = 0;
      if (!find_pivot(t, pr, pc)) return false;
      swap_rows(t, pr);
      swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < d_.rows(); ++i) {
        if (sgn(d_(i, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d_(i, t).get_mpz_t(), d_(t, t).get_mpz_t());
        row_axpy(i, t, q);
        if (sgn(d_(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d_.cols(); ++j) {
        if (sgn(d_(t, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d_(t, j).get_mpz_t(), d_(t, t).get_mpz_t());
        col_axpy(j, t, q);
        if (sgn(d_(t, j)) != 0) clean = false;
      }
      if (!clean) continue;

      // Row and column are clear; enforce the divisibility chain.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < d_.rows() && divides_all; ++i)
        for (std::size_t j = t + 1; j < d_.cols(); ++j)
          if (!mpz_divisible_p(d_(i, j).get_mpz_t(), d_(t, t).get_mpz_t())) {
            row_axpy(t, i, Integer(-1));
            divides_all = false;
            break;
          }
      if (!divides_all) continue;

      if (sgn(d_(t, t)) < 0) negate_row(t);
      return true;
    }
  }

  IntMat d_;
  IntMat u_;
  IntMat v_;
  bool track_u_;
  bool track_v_;
};

// Incremental row echelon form over Z using extended-gcd row combinations.
// All operations are unimodular, so the row lattice is preserved.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols), pivots_(cols) {}

  void insert(std::vector<Integer> v) {
    Integer g, a, b, pc, vc;
    bool dirty = false;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (sgn(v[c]) == 0) continue;
      auto& slot = pivots_[c];
      if (!slot) {
        slot = std::move(v);
        reduce();
        return;
      }
      std::vector<Integer>& p = *slot;
      if (mpz_divisible_p(v[c].get_mpz_t(), p[c].get_mpz_t())) {
        mpz_divexact(a.get_mpz_t(), v[c].get_mpz_t(), p[c].get_mpz_t());
        for (std::size_t j = c; j < cols_; ++j)
          if (sgn(p[j])) mpz_submul(v[j].get_mpz_t(), a.get_mpz_t(), p[j].get_mpz_t());
        continue;
      }
      mpz_gcdext(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), p[c].get_mpz_t(), v[c].get_mpz_t());
      mpz_divexact(pc.get_mpz_t(), p[c].get_mpz_t(), g.get_mpz_t());
      mpz_divexact(vc.get_mpz_t(), v[c].get_mpz_t(), g.get_mpz_t());
      for (std::size_t j = c; j < cols_; ++j) {
        Integer np = a * p[j] + b * v[j];
        Integer nv = pc * v[j] - vc * p[j];
        p[j].swap(np);
        v[j].swap(nv);
      }
      dirty = true;
    }
    // Keeping the rows reduced after every pivot change stops the entries
    // from growing on long redundant inputs.
    if (dirty) reduce();
  }

  // Hermite-reduced rows in pivot order.
  IntMat finish() {
    reduce();
    std::vector<std::size_t> order;
    for (std::size_t c = 0; c < cols_; ++c)
      if (pivots_[c]) order.push_back(c);
    IntMat h(order.size(), cols_);
    for (std::size_t k = 0; k < order.size(); ++k)
      for (std::size_t j = 0; j < cols_; ++j) h(k, j) = (*pivots_[order[k]])[j];
    return h;
  }

 private:
  // Positive pivots, entries above each pivot in [0, pivot).
  void reduce() {
    std::vector<std::size_t> order;
    for (std::size_t c = 0; c < cols_; ++c)
      if (pivots_[c]) order.push_back(c);
    for (std::size_t c : order) {
      auto& p = *pivots_[c];
      if (sgn(p[c]) < 0)
        for (auto& x : p) x = -x;
    }
    Integer q;
    for (std::size_t k = 0; k < order.size(); ++k) {
      const std::size_t c = order[k];
      const auto& p = *pivots_[c];
      for (std::size_t k2 = 0; k2 < k; ++k2) {
        auto& r = *pivots_[order[k2]];
        if (sgn(r[c]) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), r[c].get_mpz_t(), p[c].get_mpz_t());
        if (sgn(q) == 0) continue;
        for (std::size_t j = c; j < cols_; ++j)
          if (sgn(p[j])) mpz_submul(r[j].get_mpz_t(), q.get_mpz_t(), p[j].get_mpz_t());
      }
    }
  }

  std::size_t cols_;
  std::vector<std::optional<std::vector<Integer>>> pivots_;
};

}  // namespace

std::vector<Integer> SmithForm::nonzero_diagonal() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
    if (sgn(D(i, i)) != 0) out.push_back(D(i, i));
  return out;
}

std::size_t SmithForm::rank() const { return nonzero_diagonal().size(); }

SmithForm snf(const IntMat& a) {
  SmithEngine engine(a, true, true);
  engine.run();
  return SmithForm{std::move(engine.u()), std::move(engine.d()), std::move(engine.v())};
}

IntMat hermite_rows(const IntMat& a) {
  RowEchelon ech(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<Integer> r(a.cols());
    bool nonzero = false;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      r[j] = a(i, j);
      nonzero = nonzero || sgn(r[j]) != 0;
    }
    if (nonzero) ech.insert(std::move(r));
  }
  return ech.finish();
}

std::vector<Integer> smith_invariants(const IntMat& a) {
  // The Smith form is invariant under transposition and under unimodular
  // row operations, so compress to at most min(rows, cols) rows first.
  IntMat compressed = a.rows() >= a.cols() ? hermite_rows(a) : hermite_rows(a.transpose());
  SmithEngine engine(std::move(compressed), false, false);
  engine.run();
  std::vector<Integer> out;
  const IntMat& d = engine.d();
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
    if (sgn(d(i, i)) != 0) out.push_back(d(i, i));
  return out;
}

std::size_t rank(const IntMat& a) { return hermite_rows(a).rows(); }

Integer det(const IntMat& a) {
  if (!a.is_square()) throw Error(ErrorCode::NonSquare, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMat m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && sgn(m(swap_with, k)) == 0) ++swap_with;
      if (swap_with == n) return 0;
      m.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  Integer result = m(n - 1, n - 1);
  return sign < 0 ? Integer(-result) : result;
}

IntMat kernel_basis(const IntMat& a) {
  const std::size_t n = a.cols();
  if (n == 0) return IntMat(0, 0);
  IntMat compressed = hermite_rows(a);
  const std::size_t r = compressed.rows();
  if (r == n) return IntMat(n, 0);
  if (r == 0) return IntMat::identity(n);
  SmithEngine engine(std::move(compressed), false, true);
  engine.run();
  IntMat raw = engine.v().cols_range(r, n);
  return hermite_rows(raw.transpose()).transpose();
}

FinAbGroup quotient(std::size_t ambient_rank, const IntMat& sub) {
  if (sub.cols() == 0) return FinAbGroup::from_cyclic_orders({}, ambient_rank);
  if (sub.rows() != ambient_rank)
    throw Error(ErrorCode::DimensionMismatch, "sublattice generators do not live in the ambient lattice");
  auto diag = smith_invariants(sub);
  return FinAbGroup::from_cyclic_orders(diag, ambient_rank - diag.size());
}

std::optional<IntMat> solve(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "solve: row counts differ");
  const std::size_t n = a.cols();
  if (n == 0) {
    if (!b.is_zero()) return std::nullopt;
    return IntMat(0, b.cols());
  }
  SmithForm s = snf(a);
  IntMat ub = s.U * b;
  const std::size_t r = s.rank();
  IntMat y(n, b.cols());
  for (std::size_t i = 0; i < ub.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (i < r) {
        if (!mpz_divisible_p(ub(i, j).get_mpz_t(), s.D(i, i).get_mpz_t())) return std::nullopt;
        mpz_divexact(y(i, j).get_mpz_t(), ub(i, j).get_mpz_t(), s.D(i, i).get_mpz_t());
      } else if (sgn(ub(i, j)) != 0) {
        return std::nullopt;
      }
    }
  return s.V * y;
}

bool is_saturated_basis(const IntMat& basis) {
  if (basis.cols() == 0) return true;
  auto diag = smith_invariants(basis);
  return diag.size() == basis.cols() &&
         std::all_of(diag.begin(), diag.end(), [](const Integer& d) { return d == 1; });
}

IntMat left_inverse(const IntMat& basis) {
  const std::size_t m = basis.cols();
  if (m == 0) return IntMat(0, basis.rows());
  SmithForm s = snf(basis);
  for (std::size_t i = 0; i < m; ++i)
    if (s.D(i, i) != 1) throw Error(ErrorCode::PreconditionViolated, "left inverse needs a saturated basis");
  return s.V * s.U.rows_range(0, m);
}

bool same_lattice(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows()) return false;
  return hermite_rows(a.transpose()) == hermite_rows(b.transpose());
}

Integer gcd_of_entries(const IntMat& a) {
  Integer g = 0;
  for (const auto& v : a.entries()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

unsigned valuation(const Integer& n, unsigned long p) {
  if (sgn(n) == 0) throw Error(ErrorCode::BadInput, "valuation of zero");
  Integer x = abs(n);
  unsigned v = 0;
  while (mpz_divisible_ui_p(x.get_mpz_t(), p)) {
    mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), p);
    ++v;
  }
  return v;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// FinAbGroup

FinAbGroup FinAbGroup::from_cyclic_orders(const std::vector<Integer>& orders, std::size_t free_rank) {
  FinAbGroup g;
  g.free_rank_ = free_rank;
  std::vector<Integer> finite;
  for (const auto& o : orders) {
    if (sgn(o) == 0) {
      ++g.free_rank_;
    } else if (abs(o) != 1) {
      finite.push_back(abs(o));
    }
  }
  if (finite.size() > 1) finite = smith_invariants(IntMat::diagonal(finite));
  for (auto& d : finite)
    if (d != 1) g.factors_.push_back(d);
  return g;
}

std::optional<Integer> FinAbGroup::order() const {
  if (free_rank_ != 0) return std::nullopt;
  Integer o = 1;
  for (const auto& d : factors_) o *= d;
  return o;
}

FinAbGroup FinAbGroup::torsion() const {
  FinAbGroup g = *this;
  g.free_rank_ = 0;
  return g;
}

FinAbGroup FinAbGroup::p_part(unsigned long p) const {
  std::vector<Integer> parts;
  for (const auto& d : factors_) {
    Integer pp = 1;
    Integer x = d;
    while (mpz_divisible_ui_p(x.get_mpz_t(), p)) {
      mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), p);
      pp *= p;
    }
    parts.push_back(pp);
  }
  return from_cyclic_orders(parts);
}

std::string FinAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank_ > 0) {
    os << 'Z';
    if (free_rank_ > 1) os << '^' << free_rank_;
    first = false;
  }
  for (const auto& d : factors_) {
    if (!first) os << " + ";
    os << "Z/" << d;
    first = false;
  }
  return os.str();
}

}  // namespace torsorlat
