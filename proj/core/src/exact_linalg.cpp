#include "langdual/exact_linalg.hpp"

#include "langdual/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

namespace langdual {

// ---------------------------------------------------------------------------
// Matrix

template <typename T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> init) {
  rows_ = init.size();
  cols_ = rows_ == 0 ? 0 : init.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : init) {
    if (r.size() != cols_) throw InvalidArgument("ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

template <typename T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

template <typename T>
Matrix<T> Matrix<T>::from_columns(std::size_t rows, const std::vector<std::vector<T>>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw InvalidArgument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

template <typename T>
Matrix<T> Matrix<T>::from_rows(std::size_t cols, const std::vector<std::vector<T>>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InvalidArgument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

template <typename T>
std::vector<T> Matrix<T>::row(std::size_t i) const {
  return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

template <typename T>
std::vector<T> Matrix<T>::column(std::size_t j) const {
  std::vector<T> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

template <typename T>
Matrix<T> Matrix<T>::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

template <typename T>
Matrix<T> Matrix<T>::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw InvalidArgument("matrix product dimension mismatch");
  Matrix p(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const T& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) p(i, j) += a * rhs(k, j);
    }
  return p;
}

template <typename T>
std::vector<T> Matrix<T>::operator*(const std::vector<T>& v) const {
  if (cols_ != v.size()) throw InvalidArgument("matrix-vector dimension mismatch");
  std::vector<T> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

template <typename T>
Matrix<T> Matrix<T>::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidArgument("matrix sum dimension mismatch");
  Matrix s(*this);
  for (std::size_t k = 0; k < data_.size(); ++k) s.data_[k] += rhs.data_[k];
  return s;
}

template <typename T>
Matrix<T> Matrix<T>::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidArgument("matrix difference dimension mismatch");
  Matrix s(*this);
  for (std::size_t k = 0; k < data_.size(); ++k) s.data_[k] -= rhs.data_[k];
  return s;
}

template <typename T>
Matrix<T> Matrix<T>::operator-() const {
  Matrix s(*this);
  for (auto& x : s.data_) x = -x;
  return s;
}

template <typename T>
Matrix<T> Matrix<T>::stack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return Matrix();
  const std::size_t c = blocks.front().cols_;
  std::size_t r = 0;
  for (const auto& b : blocks) {
    if (b.cols_ != c) throw InvalidArgument("stack: column count mismatch");
    r += b.rows_;
  }
  Matrix s(r, c);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    std::copy(b.data_.begin(), b.data_.end(), s.data_.begin() + static_cast<std::ptrdiff_t>(off * c));
    off += b.rows_;
  }
  return s;
}

template <typename T>
std::string Matrix<T>::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << (*this)(i, j);
    }
  }
  os << ']';
  return os.str();
}

template class Matrix<Integer>;
template class Matrix<Rational>;

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

RationalVector to_rational(const IntegerVector& v) {
  RationalVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

IntegerMatrix to_integer(const RationalMatrix& m) {
  IntegerMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& q = m(i, j);
      if (denominator(q) != 1) throw InvalidArgument("matrix has non-integral entry " + q.str());
      r(i, j) = numerator(q);
    }
  return r;
}

// ---------------------------------------------------------------------------
// FiniteAbelianGroup

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<Integer> invariant_factors) {
  for (auto& f : invariant_factors) {
    if (f <= 0) throw InvalidArgument("invariant factors must be positive");
    if (f == 1) continue;
    if (!factors_.empty() && f % factors_.back() != 0)
      throw InvalidArgument("invariant factors must form a divisibility chain");
    factors_.push_back(std::move(f));
  }
}

Integer FiniteAbelianGroup::order() const {
  Integer o = 1;
  for (const auto& f : factors_) o *= f;
  return o;
}

std::string FiniteAbelianGroup::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << " x ";
    os << "Z/" << factors_[i];
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

class SmithWorker {
 public:
  explicit SmithWorker(const IntegerMatrix& m)
      : m_(m.rows()),
        n_(m.cols()),
        d_(m),
        u_(IntegerMatrix::identity(m_)),
        v_(IntegerMatrix::identity(n_)),
        ui_(IntegerMatrix::identity(m_)),
        vi_(IntegerMatrix::identity(n_)) {}

  SmithDecomposition run() {
    const std::size_t steps = std::min(m_, n_);
    for (std::size_t t = 0; t < steps; ++t) {
      if (!move_smallest_to(t, t, t)) break;
      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < m_; ++i) {
          if (d_(i, t) == 0) continue;
          Integer q = d_(i, t) / d_(t, t);
          if (q != 0) add_row(i, t, -q);
          if (d_(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < n_; ++j) {
          if (d_(t, j) == 0) continue;
          Integer q = d_(t, j) / d_(t, t);
          if (q != 0) add_col(j, t, -q);
          if (d_(t, j) != 0) clean = false;
        }
        if (!clean) {
          move_smallest_in_cross(t);
          continue;
        }
        auto bad = find_non_divisible(t);
        if (bad) {
          add_row(t, *bad, 1);
          continue;
        }
        break;
      }
      if (d_(t, t) < 0) negate_row(t);
    }
    return SmithDecomposition{std::move(u_), std::move(v_), std::move(d_), std::move(ui_), std::move(vi_)};
  }

 private:
  // row_i += q * row_j
  void add_row(std::size_t i, std::size_t j, const Integer& q) {
    for (std::size_t c = 0; c < n_; ++c) d_(i, c) += q * d_(j, c);
    for (std::size_t c = 0; c < m_; ++c) u_(i, c) += q * u_(j, c);
    for (std::size_t r = 0; r < m_; ++r) ui_(r, j) -= q * ui_(r, i);
  }
  // col_j += q * col_i
  void add_col(std::size_t j, std::size_t i, const Integer& q) {
    for (std::size_t r = 0; r < m_; ++r) d_(r, j) += q * d_(r, i);
    for (std::size_t r = 0; r < n_; ++r) v_(r, j) += q * v_(r, i);
    for (std::size_t c = 0; c < n_; ++c) vi_(i, c) -= q * vi_(j, c);
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < n_; ++c) std::swap(d_(a, c), d_(b, c));
    for (std::size_t c = 0; c < m_; ++c) std::swap(u_(a, c), u_(b, c));
    for (std::size_t r = 0; r < m_; ++r) std::swap(ui_(r, a), ui_(r, b));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < m_; ++r) std::swap(d_(r, a), d_(r, b));
    for (std::size_t r = 0; r < n_; ++r) std::swap(v_(r, a), v_(r, b));
    for (std::size_t c = 0; c < n_; ++c) std::swap(vi_(a, c), vi_(b, c));
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < n_; ++c) d_(i, c) = -d_(i, c);
    for (std::size_t c = 0; c < m_; ++c) u_(i, c) = -u_(i, c);
    for (std::size_t r = 0; r < m_; ++r) ui_(r, i) = -ui_(r, i);
  }

  // Smallest nonzero |entry| in the trailing block starting at (r0, c0),
  // moved to (t, t). Returns false if the block is zero.
  bool move_smallest_to(std::size_t t, std::size_t r0, std::size_t c0) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = r0; i < m_; ++i)
      for (std::size_t j = c0; j < n_; ++j) {
        if (d_(i, j) == 0) continue;
        Integer a = abs(d_(i, j));
        if (!best || a < best_abs) {
          best = {i, j};
          best_abs = a;
        }
      }
    if (!best) return false;
    swap_rows(t, best->first);
    swap_cols(t, best->second);
    return true;
  }

  void move_smallest_in_cross(std::size_t t) {
    std::size_t bi = t, bj = t;
    Integer best = abs(d_(t, t));
    for (std::size_t i = t + 1; i < m_; ++i)
      if (d_(i, t) != 0 && abs(d_(i, t)) < best) {
        best = abs(d_(i, t));
        bi = i;
        bj = t;
      }
    for (std::size_t j = t + 1; j < n_; ++j)
      if (d_(t, j) != 0 && abs(d_(t, j)) < best) {
        best = abs(d_(t, j));
        bi = t;
        bj = j;
      }
    swap_rows(t, bi);
    swap_cols(t, bj);
  }

  std::optional<std::size_t> find_non_divisible(std::size_t t) const {
    for (std::size_t i = t + 1; i < m_; ++i)
      for (std::size_t j = t + 1; j < n_; ++j)
        if (d_(i, j) % d_(t, t) != 0) return i;
    return std::nullopt;
  }

  std::size_t m_, n_;
  IntegerMatrix d_, u_, v_, ui_, vi_;
};

}  // namespace

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  const std::size_t k = std::min(D.rows(), D.cols());
  while (r < k && D(r, r) != 0) ++r;
  return r;
}

std::vector<Integer> SmithDecomposition::diagonal() const {
  const std::size_t k = std::min(D.rows(), D.cols());
  std::vector<Integer> d(k);
  for (std::size_t i = 0; i < k; ++i) d[i] = D(i, i);
  return d;
}

SmithDecomposition smith_normal_form(const IntegerMatrix& m) { return SmithWorker(m).run(); }

std::size_t rank(const IntegerMatrix& m) { return smith_normal_form(m).rank(); }

Integer determinant(const IntegerMatrix& m) {
  if (!m.is_square()) throw InvalidArgument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a(m);
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rational determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw InvalidArgument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix a(m);
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.is_square()) throw InvalidArgument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix a(m);
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw InvalidArgument("matrix is singular");
    if (p != k)
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(k, c), a(p, c));
        std::swap(inv(k, c), inv(p, c));
      }
    Rational piv = a(k, k);
    for (std::size_t c = 0; c < n; ++c) {
      a(k, c) /= piv;
      inv(k, c) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rational f = a(i, k);
      for (std::size_t c = 0; c < n; ++c) {
        a(i, c) -= f * a(k, c);
        inv(i, c) -= f * inv(k, c);
      }
    }
  }
  return inv;
}

IntegerMatrix kernel_basis(const IntegerMatrix& m) {
  auto snf = smith_normal_form(m);
  const std::size_t r = snf.rank();
  const std::size_t n = m.cols();
  IntegerMatrix k(n, n - r);
  for (std::size_t j = r; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) k(i, j - r) = snf.V(i, j);
  return k;
}

Cokernel cokernel(const IntegerMatrix& m) {
  auto snf = smith_normal_form(m);
  const std::size_t r = snf.rank();
  std::vector<Integer> factors;
  for (std::size_t i = 0; i < r; ++i)
    if (snf.D(i, i) > 1) factors.push_back(snf.D(i, i));
  return Cokernel{m.rows() - r, FiniteAbelianGroup(std::move(factors))};
}

IntegerMatrix column_lattice_basis(const IntegerMatrix& m) {
  auto snf = smith_normal_form(m);
  const std::size_t r = snf.rank();
  IntegerMatrix b(m.rows(), r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) b(i, j) = snf.U_inverse(i, j) * snf.D(j, j);
  return b;
}

bool lattice_contains(const IntegerMatrix& basis, const IntegerVector& v) {
  auto coords = inverse(to_rational(basis)) * to_rational(v);
  return std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return denominator(q) == 1; });
}

bool lattice_contains(const IntegerMatrix& basis, const IntegerMatrix& generators) {
  auto coords = inverse(to_rational(basis)) * to_rational(generators);
  const auto& e = coords.entries();
  return std::all_of(e.begin(), e.end(), [](const Rational& q) { return denominator(q) == 1; });
}

Integer floor(const Rational& q) {
  Integer n = numerator(q);
  Integer d = denominator(q);
  Integer f = n / d;
  if (n < 0 && f * d != n) f -= 1;
  return f;
}

Rational fractional_part(const Rational& q) { return q - Rational(floor(q)); }

RationalMatrix left_inverse(const IntegerMatrix& k) {
  auto snf = smith_normal_form(k);
  const std::size_t f = k.cols();
  if (snf.rank() != f) throw InvalidArgument("left_inverse: matrix lacks full column rank");
  RationalMatrix dinv(f, k.rows());
  for (std::size_t i = 0; i < f; ++i) dinv(i, i) = Rational(1) / Rational(snf.D(i, i));
  return to_rational(snf.V) * dinv * to_rational(snf.U);
}

// ---------------------------------------------------------------------------
// Coset enumeration

namespace {
constexpr std::size_t kMaxCosets = 10'000'000;
}

bool LatticeCosets::is_solution(const RationalVector& x) const {
  auto image = to_rational(reduced_) * x;
  return std::all_of(image.begin(), image.end(), [](const Rational& q) { return denominator(q) == 1; });
}

RationalVector LatticeCosets::key(const RationalVector& x) const {
  auto y = to_rational(v_inverse_) * x;
  RationalVector k;
  k.reserve(divisors_.size());
  for (std::size_t i = 0; i < divisors_.size(); ++i) k.push_back(fractional_part(y[i]));
  return k;
}

std::optional<std::size_t> LatticeCosets::coset_index(const RationalVector& x) const {
  if (x.size() != reduced_.cols()) throw InvalidArgument("coset_index: dimension mismatch");
  if (!is_solution(x)) return std::nullopt;
  auto k = key(x);
  auto it = std::find(keys_.begin(), keys_.end(), k);
  if (it == keys_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - keys_.begin());
}

LatticeCosets solve_mod_lattice(const IntegerMatrix& m, const IntegerMatrix& lattice_basis, bool allow_kernel) {
  if (!lattice_basis.is_square() || lattice_basis.rows() != m.rows())
    throw InvalidArgument("solve_mod_lattice: lattice basis must be square with M's row count");
  if (determinant(lattice_basis) == 0) throw InvalidArgument("solve_mod_lattice: lattice basis is singular");

  LatticeCosets out;
  RationalMatrix n_rational = inverse(to_rational(lattice_basis)) * to_rational(m);
  try {
    out.reduced_ = to_integer(n_rational);
  } catch (const InvalidArgument&) {
    throw InvalidArgument("solve_mod_lattice: lattice does not contain M Z^n");
  }

  auto snf = smith_normal_form(out.reduced_);
  const std::size_t n = m.cols();
  const std::size_t r = snf.rank();
  out.kernel_dim_ = n - r;
  if (!allow_kernel && out.kernel_dim_ > 0)
    throw InfiniteSolutionSet("infinite transverse solution set: kernel of dimension " +
                              std::to_string(out.kernel_dim_));
  out.v_inverse_ = snf.V_inverse;
  auto diag = snf.diagonal();
  out.divisors_.assign(diag.begin(), diag.begin() + static_cast<std::ptrdiff_t>(r));

  Integer total = 1;
  for (const auto& d : out.divisors_) total *= d;
  if (total > kMaxCosets) throw InvalidArgument("solve_mod_lattice: too many cosets (" + total.str() + ")");

  // Odometer over y_i = k_i / d_i.
  const auto vr = to_rational(snf.V);
  std::vector<Integer> counter(r, 0);
  std::vector<std::pair<RationalVector, RationalVector>> found;
  for (;;) {
    RationalVector y(n, Rational(0));
    for (std::size_t i = 0; i < r; ++i) y[i] = Rational(counter[i], out.divisors_[i]);
    auto x = vr * y;
    for (auto& c : x) c = fractional_part(c);
    auto k = out.key(x);
    found.emplace_back(std::move(x), std::move(k));

    std::size_t i = 0;
    while (i < r) {
      if (++counter[i] < out.divisors_[i]) break;
      counter[i] = 0;
      ++i;
    }
    if (i == r) break;
  }
  std::sort(found.begin(), found.end());
  for (auto& [x, k] : found) {
    out.reps_.push_back(std::move(x));
    out.keys_.push_back(std::move(k));
  }
  return out;
}

LatticeCosets solve_mod_lattice(const IntegerMatrix& m, bool allow_kernel) {
  return solve_mod_lattice(m, IntegerMatrix::identity(m.rows()), allow_kernel);
}

}  // namespace langdual
