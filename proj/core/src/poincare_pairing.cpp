#include "langdual/poincare_pairing.hpp"

#include "langdual/error.hpp"
#include "langdual/root_datum.hpp"
#include "langdual/weyl_group.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace langdual {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Eigen::VectorXd as_vector(const Point& p) { return Eigen::Map<const Eigen::VectorXd>(p.data(), static_cast<Eigen::Index>(p.size())); }

Point as_point(const Eigen::VectorXd& v) { return Point(v.data(), v.data() + v.size()); }

Eigen::MatrixXd as_double(const IntegerMatrix& m) {
  Eigen::MatrixXd d(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d(i, j) = m(i, j).convert_to<double>();
  return d;
}

double dot(const Point& a, const std::vector<long>& g) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * static_cast<double>(g[i]);
  return s;
}

Complex phase(double t) { return std::polar(1.0, kTwoPi * t); }

Point shifted(const Point& x, const std::vector<long>& g, int sign) {
  Point y = x;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += sign * static_cast<double>(g[i]);
  return y;
}

// All integer vectors with lo_i <= v_i <= hi_i.
std::vector<std::vector<long>> box(const std::vector<long>& lo, const std::vector<long>& hi) {
  std::vector<std::vector<long>> out;
  std::vector<long> v = lo;
  const std::size_t n = lo.size();
  if (n == 0) return {v};
  for (std::size_t i = 0; i < n; ++i)
    if (lo[i] > hi[i]) return out;
  while (true) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < n && v[i] == hi[i]) {
      v[i] = lo[i];
      ++i;
    }
    if (i == n) break;
    ++v[i];
  }
  return out;
}

void require_rank(const Point& p, std::size_t n, const char* what) {
  if (p.size() != n) throw InvalidArgument(std::string(what) + " has the wrong dimension");
}

}  // namespace

CompactBump::CompactBump(Point center, double radius, Complex amplitude)
    : CompactBump(center, radius, amplitude, Eigen::MatrixXd::Identity(center.size(), center.size())) {}

CompactBump::CompactBump(Point center, double radius, Complex amplitude, Eigen::MatrixXd shape)
    : center_(std::move(center)), radius_(radius), amplitude_(amplitude), shape_(std::move(shape)) {
  const auto n = static_cast<Eigen::Index>(center_.size());
  if (n == 0) throw InvalidArgument("bump needs rank >= 1");
  if (!(radius_ > 0) || !std::isfinite(radius_)) throw InvalidArgument("bump radius must be positive and finite");
  if (shape_.rows() != n || shape_.cols() != n) throw InvalidArgument("bump shape matrix has the wrong size");
  Eigen::FullPivLU<Eigen::MatrixXd> lu(shape_);
  if (!lu.isInvertible()) throw InvalidArgument("bump shape matrix is singular");
  shape_inverse_ = lu.inverse();
}

Complex CompactBump::operator()(const Point& x) const {
  require_rank(x, rank(), "evaluation point");
  const double r = (shape_ * (as_vector(x) - as_vector(center_))).norm();
  if (r >= radius_) return 0.0;
  const double s = 1.0 - (r / radius_) * (r / radius_);
  return amplitude_ * (s * s);
}

double CompactBump::support_radius() const { return shape_inverse_.norm() * radius_; }

CompactBump CompactBump::transformed(const IntegerMatrix& w) const {
  if (w.rows() != rank() || w.cols() != rank()) throw InvalidArgument("lattice automorphism has the wrong size");
  const Eigen::MatrixXd wd = as_double(w);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(wd);
  if (!lu.isInvertible() || std::abs(std::abs(wd.determinant()) - 1.0) > 1e-12)
    throw InvalidArgument("matrix does not preserve Z^n");
  return CompactBump(as_point(wd * as_vector(center_)), radius_, amplitude_, shape_ * lu.inverse());
}

CompactBump CompactBump::scaled(Complex c) const { return CompactBump(center_, radius_, amplitude_ * c, shape_); }

std::vector<std::vector<long>> contributing_translates(const CompactBump& phi, const Point& x) {
  require_rank(x, phi.rank(), "point");
  const double b = phi.support_radius();
  std::vector<long> lo(phi.rank()), hi(phi.rank());
  for (std::size_t i = 0; i < phi.rank(); ++i) {
    const double mid = x[i] - phi.center()[i];
    lo[i] = static_cast<long>(std::ceil(mid - b));
    hi[i] = static_cast<long>(std::floor(mid + b));
  }
  std::vector<std::vector<long>> out;
  for (auto& g : box(lo, hi))
    if (phi(shifted(x, g, -1)) != 0.0) out.push_back(std::move(g));
  return out;
}

Complex section_transform(const CompactBump& phi, const Point& x, const Point& theta) {
  require_rank(theta, phi.rank(), "character");
  Complex s = 0;
  for (const auto& g : contributing_translates(phi, x)) s += phi(shifted(x, g, -1)) * phase(dot(theta, g));
  return s;
}

Complex pairing(const CompactBump& phi1, const CompactBump& phi2, const Point& x, const Point& eta) {
  if (phi1.rank() != phi2.rank()) throw InvalidArgument("bumps have different ranks");
  require_rank(eta, phi1.rank(), "dual point");
  const auto as = contributing_translates(phi1, x);
  const auto bs = contributing_translates(phi2, x);
  Complex s = 0;
  for (const auto& a : as) {
    const Complex left = std::conj(phi1(shifted(x, a, -1)));
    for (const auto& b : bs) s += left * phi2(shifted(x, b, -1)) * phase(dot(eta, b) - dot(eta, a));
  }
  return s;
}

Complex pairing(const std::vector<std::pair<Complex, CompactBump>>& f1,
                const std::vector<std::pair<Complex, CompactBump>>& f2, const Point& x, const Point& eta) {
  Complex s = 0;
  for (const auto& [c1, p1] : f1)
    for (const auto& [c2, p2] : f2) s += std::conj(c1) * c2 * pairing(p1, p2, x, eta);
  return s;
}

double equivariance_check(const IntegerMatrix& w, const CompactBump& phi1, const CompactBump& phi2,
                          const std::vector<PairingSample>& samples) {
  const CompactBump w1 = phi1.transformed(w);
  const CompactBump w2 = phi2.transformed(w);
  const Eigen::MatrixXd wd = as_double(w);
  const Eigen::MatrixXd winv = wd.inverse();
  double worst = 0;
  for (const auto& s : samples) {
    const Complex lhs = pairing(w1, w2, s.x, s.eta);
    const Point x0 = as_point(winv * as_vector(s.x));
    const Point eta0 = as_point(wd.transpose() * as_vector(s.eta));
    worst = std::max(worst, std::abs(lhs - pairing(phi1, phi2, x0, eta0)));
  }
  return worst;
}

GramCheck fourier_gram_check(const CompactBump& phi, const Point& x, int window) {
  const std::size_t n = phi.rank();
  if (window < 0) throw InvalidArgument("window must be non-negative");
  if (n > 2) throw InvalidArgument("Gram check supports ranks 1 and 2");
  const long reach = static_cast<long>(std::ceil(2.0 * phi.support_radius())) + 1;
  const long grid = 2 * reach + 1;

  // c_γ = grid^{-n} sum over η on the grid of <φ, φ>(x, η) e^{-2πi <η, γ>}
  const std::vector<long> zero(n, 0), top(n, grid - 1);
  const auto etas = box(zero, top);
  std::vector<Complex> values;
  for (const auto& k : etas) {
    Point eta(n);
    for (std::size_t i = 0; i < n; ++i) eta[i] = static_cast<double>(k[i]) / static_cast<double>(grid);
    values.push_back(pairing(phi, phi, x, eta));
  }
  auto coefficient = [&](const std::vector<long>& g) -> Complex {
    for (long gi : g)
      if (std::abs(gi) > reach) return 0.0;
    Complex c = 0;
    for (std::size_t e = 0; e < etas.size(); ++e) {
      double t = 0;
      for (std::size_t i = 0; i < n; ++i) t += static_cast<double>(etas[e][i] * g[i]) / static_cast<double>(grid);
      c += values[e] * phase(-t);
    }
    return c / std::pow(static_cast<double>(grid), static_cast<double>(n));
  };

  const auto index = box(std::vector<long>(n, -window), std::vector<long>(n, window));
  const auto m = static_cast<Eigen::Index>(index.size());
  Eigen::MatrixXcd t(m, m);
  GramCheck out;
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b) {
      std::vector<long> g(n);
      for (std::size_t i = 0; i < n; ++i) g[i] = index[b][i] - index[a][i];
      t(a, b) = coefficient(g);
      out.scale = std::max(out.scale, std::abs(t(a, b)));
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(t, Eigen::EigenvaluesOnly);
  out.min_eigenvalue = eig.eigenvalues().minCoeff();
  out.size = static_cast<std::size_t>(m);
  return out;
}

Point random_point(std::mt19937_64& rng, std::size_t rank, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  Point p(rank);
  for (auto& v : p) v = u(rng);
  return p;
}

CompactBump random_bump(std::mt19937_64& rng, std::size_t rank) {
  std::uniform_real_distribution<double> radius(0.3, 1.6);
  std::uniform_real_distribution<double> skew(-0.3, 0.3);
  std::normal_distribution<double> normal;
  Point c = random_point(rng, rank, -1.0, 1.0);
  const double r = radius(rng);
  const Complex amp(normal(rng), normal(rng));
  Eigen::MatrixXd shape = Eigen::MatrixXd::Identity(rank, rank);
  for (Eigen::Index i = 0; i < shape.rows(); ++i)
    for (Eigen::Index j = 0; j < shape.cols(); ++j) shape(i, j) += skew(rng);
  return CompactBump(std::move(c), r, amp, std::move(shape));
}

double PoincareSuiteResult::max_deviation() const {
  return std::max({quasi_periodicity, periodicity_x, periodicity_eta, equivariance, hermitian, sesquilinearity,
                   std::max(0.0, -gram_min_eigenvalue)});
}

PoincareSuiteResult run_poincare_suite(std::uint64_t seed, std::size_t samples) {
  if (samples == 0) throw InvalidArgument("need at least one sample");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> shift(-3, 3);
  std::normal_distribution<double> normal;

  PoincareSuiteResult r;
  r.seed = seed;
  r.samples = samples;
  r.gram_min_eigenvalue = std::numeric_limits<double>::infinity();

  for (std::size_t n : {std::size_t{1}, std::size_t{2}}) {
    std::vector<IntegerMatrix> weyl;
    const WeylGroup w = WeylGroup::generate(build_simple(CartanType::A, n, GroupForm::simply_connected()));
    for (std::size_t i = 0; i < w.size(); ++i) weyl.push_back(w.element(i));
    if (n == 2) weyl.push_back(IntegerMatrix::from_rows(2, {{0, 1}, {1, 0}}));
    r.weyl_elements += weyl.size();

    for (std::size_t s = 0; s < samples; ++s) {
      const CompactBump p1 = random_bump(rng, n);
      const CompactBump p2 = random_bump(rng, n);
      const CompactBump p3 = random_bump(rng, n);
      const Point x = random_point(rng, n, -2.0, 2.0);
      const Point eta = random_point(rng, n, -1.0, 1.0);
      const Point theta = random_point(rng, n, 0.0, 1.0);
      std::vector<long> delta(n);
      for (auto& d : delta) d = shift(rng);

      const Complex sigma = section_transform(p1, x, theta);
      const Complex moved = section_transform(p1, shifted(x, delta, +1), theta);
      const double scale = std::max(std::abs(sigma), std::abs(p1.amplitude()));
      r.quasi_periodicity = std::max(r.quasi_periodicity, std::abs(moved - phase(dot(theta, delta)) * sigma) / scale);

      const Complex base = pairing(p1, p2, x, eta);
      r.periodicity_x = std::max(r.periodicity_x, std::abs(pairing(p1, p2, shifted(x, delta, +1), eta) - base));
      r.periodicity_eta = std::max(r.periodicity_eta, std::abs(pairing(p1, p2, x, shifted(eta, delta, +1)) - base));
      r.hermitian = std::max(r.hermitian, std::abs(pairing(p2, p1, x, eta) - std::conj(base)));

      const Complex a(normal(rng), normal(rng)), b(normal(rng), normal(rng));
      const Complex combo = pairing({{a, p1}}, {{Complex(1.0), p2}, {b, p3}}, x, eta);
      const Complex expect = std::conj(a) * (base + b * pairing(p1, p3, x, eta));
      r.sesquilinearity = std::max(r.sesquilinearity, std::abs(combo - expect));

      for (const auto& g : weyl)
        r.equivariance = std::max(r.equivariance, equivariance_check(g, p1, p2, {{x, eta}}));

      if (s % 10 == 0) {
        const GramCheck gram = fourier_gram_check(p1, x, 2);
        if (gram.scale > 0) r.gram_min_eigenvalue = std::min(r.gram_min_eigenvalue, gram.min_eigenvalue / gram.scale);
      }
    }
  }
  if (std::isinf(r.gram_min_eigenvalue)) r.gram_min_eigenvalue = 0;
  return r;
}

}  // namespace langdual
