#include "langdual/clifford.hpp"

#include "langdual/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace langdual {

std::string GaussianRational::to_string() const {
  std::ostringstream os;
  if (im == 0) {
    os << re;
  } else if (re == 0) {
    os << im << "i";
  } else {
    os << "(" << re << (im < 0 ? "-" : "+") << abs(im) << "i)";
  }
  return os.str();
}

CliffordElement::CliffordElement(std::size_t n) : n_(n) {
  if (n < 1 || n > kMaxCliffordDimension)
    throw InvalidArgument("Clifford dimension must be in [1, 4], got " + std::to_string(n));
  coeffs_.resize(std::size_t{1} << (2 * n));
}

CliffordElement CliffordElement::scalar(std::size_t n, const GaussianRational& c) {
  CliffordElement x(n);
  x.coeffs_[0] = c;
  return x;
}

CliffordElement CliffordElement::e(std::size_t n, std::size_t j) {
  CliffordElement x(n);
  if (j >= n) throw InvalidArgument("generator index out of range");
  x.coeffs_[Blade{1} << j] = Rational(1);
  return x;
}

CliffordElement CliffordElement::eps(std::size_t n, std::size_t j) {
  CliffordElement x(n);
  if (j >= n) throw InvalidArgument("generator index out of range");
  x.coeffs_[Blade{1} << (n + j)] = Rational(1);
  return x;
}

int CliffordElement::blade_sign(Blade a, Blade b) {
  int swaps = 0;
  while (b) {
    const int i = std::countr_zero(b);
    b &= b - 1;
    swaps += std::popcount(a >> (i + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

CliffordElement CliffordElement::operator+(const CliffordElement& o) const {
  if (o.n_ != n_) throw InvalidArgument("Clifford dimension mismatch");
  CliffordElement r(*this);
  for (std::size_t b = 0; b < coeffs_.size(); ++b) r.coeffs_[b] += o.coeffs_[b];
  return r;
}

CliffordElement CliffordElement::operator-(const CliffordElement& o) const {
  if (o.n_ != n_) throw InvalidArgument("Clifford dimension mismatch");
  CliffordElement r(*this);
  for (std::size_t b = 0; b < coeffs_.size(); ++b) r.coeffs_[b] = r.coeffs_[b] - o.coeffs_[b];
  return r;
}

CliffordElement CliffordElement::operator*(const CliffordElement& o) const {
  if (o.n_ != n_) throw InvalidArgument("Clifford dimension mismatch");
  CliffordElement r(n_);
  for (Blade a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a].is_zero()) continue;
    for (Blade b = 0; b < o.coeffs_.size(); ++b) {
      if (o.coeffs_[b].is_zero()) continue;
      GaussianRational c = coeffs_[a] * o.coeffs_[b];
      if (blade_sign(a, b) < 0) c = -c;
      r.coeffs_[a ^ b] += c;
    }
  }
  return r;
}

CliffordElement CliffordElement::operator*(const GaussianRational& c) const {
  CliffordElement r(*this);
  for (auto& x : r.coeffs_) x = x * c;
  return r;
}

CliffordElement CliffordElement::star() const {
  CliffordElement r(n_);
  for (Blade b = 0; b < coeffs_.size(); ++b) {
    const int k = std::popcount(b);
    GaussianRational c = coeffs_[b].conj();
    if ((k * (k - 1) / 2) % 2) c = -c;
    r.coeffs_[b] = c;
  }
  return r;
}

bool CliffordElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const GaussianRational& c) { return c.is_zero(); });
}

std::string CliffordElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (Blade b = 0; b < coeffs_.size(); ++b) {
    if (coeffs_[b].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[b].to_string();
    for (std::size_t j = 0; j < 2 * n_; ++j)
      if (b & (Blade{1} << j)) os << (j < n_ ? " e" : " eps") << (j % n_) + 1;
  }
  return first ? "0" : os.str();
}

// ---------------------------------------------------------------------------

namespace {

// (1 - i a b) / 2
CliffordElement half_projector(const CliffordElement& a, const CliffordElement& b) {
  const std::size_t n = a.dimension();
  const GaussianRational half(Rational(1, 2));
  const GaussianRational minus_half_i(0, Rational(-1, 2));
  return CliffordElement::scalar(n, half) + (a * b) * minus_half_i;
}

}  // namespace

CliffordElement clifford_projection(std::size_t n) {
  CliffordElement p = CliffordElement::scalar(n, Rational(1));
  for (std::size_t j = 0; j < n; ++j) p = p * half_projector(CliffordElement::e(n, j), CliffordElement::eps(n, j));
  return p;
}

CliffordElement dual_projection(std::size_t n) {
  CliffordElement p = CliffordElement::scalar(n, Rational(1));
  for (std::size_t j = 0; j < n; ++j) p = p * half_projector(CliffordElement::eps(n, j), CliffordElement::e(n, j));
  return p;
}

CliffordElement spinor_intertwiner(std::size_t n) {
  CliffordElement u = CliffordElement::scalar(n, Rational(1));
  for (std::size_t j = 0; j < n; ++j) u = u * (n % 2 == 0 ? CliffordElement::eps(n, j) : CliffordElement::e(n, j));
  return u;
}

CliffordElement conjugation_by_u(std::size_t n, const CliffordElement& a) {
  if (a.dimension() != n) throw InvalidArgument("Clifford dimension mismatch");
  const CliffordElement u = spinor_intertwiner(n);
  return u * a * u.star();
}

CliffordElement apply_orthogonal(const RationalMatrix& g, const CliffordElement& a) {
  const std::size_t n = a.dimension();
  if (g.rows() != n || g.cols() != n) throw InvalidArgument("orthogonal matrix has wrong shape");
  if (g.transpose() * g != RationalMatrix::identity(n)) throw InvalidArgument("matrix is not orthogonal");

  std::vector<CliffordElement> image;  // image[bit]
  for (std::size_t half = 0; half < 2; ++half)
    for (std::size_t j = 0; j < n; ++j) {
      CliffordElement v(n);
      for (std::size_t k = 0; k < n; ++k) {
        if (g(k, j) == 0) continue;
        v.set_coefficient(CliffordElement::Blade{1} << (half * n + k), GaussianRational(g(k, j)));
      }
      image.push_back(std::move(v));
    }

  CliffordElement out(n);
  for (CliffordElement::Blade b = 0; b < a.blade_count(); ++b) {
    if (a.coefficient(b).is_zero()) continue;
    CliffordElement term = CliffordElement::scalar(n, a.coefficient(b));
    for (std::size_t bit = 0; bit < 2 * n; ++bit)
      if (b & (CliffordElement::Blade{1} << bit)) term = term * image[bit];
    out = out + term;
  }
  return out;
}

bool symmetric_invariance_check(std::size_t n, const RationalMatrix& g, const CliffordElement& a) {
  if (a.dimension() != n) throw InvalidArgument("Clifford dimension mismatch");
  return apply_orthogonal(g, a) == a;
}

CliffordElement power_sum(std::size_t n, std::size_t k) {
  CliffordElement s(n);
  for (std::size_t j = 0; j < n; ++j) {
    const CliffordElement x = CliffordElement::e(n, j) * CliffordElement::eps(n, j);
    CliffordElement p = CliffordElement::scalar(n, Rational(1));
    for (std::size_t i = 0; i < k; ++i) p = p * x;
    s = s + p;
  }
  return s;
}

CliffordElement elementary_symmetric(std::size_t n, std::size_t k) {
  CliffordElement s(n);
  if (k > n) return s;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
    CliffordElement p = CliffordElement::scalar(n, Rational(1));
    for (std::size_t j = 0; j < n; ++j)
      if (mask & (1u << j)) p = p * (CliffordElement::e(n, j) * CliffordElement::eps(n, j));
    s = s + p;
  }
  return s;
}

std::vector<RationalMatrix> signed_permutations(std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<RationalMatrix> out;
  do {
    for (unsigned signs = 0; signs < (1u << n); ++signs) {
      RationalMatrix g(n, n);
      for (std::size_t j = 0; j < n; ++j) g(perm[j], j) = (signs & (1u << j)) ? -1 : 1;
      out.push_back(std::move(g));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace langdual
