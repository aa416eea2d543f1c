#include "langdual/root_datum.hpp"

#include "langdual/error.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

namespace langdual {

char to_char(CartanType t) { return static_cast<char>('A' + static_cast<int>(t)); }

CartanType parse_cartan_type(const std::string& s) {
  if (s.size() != 1) throw InvalidArgument("unknown Cartan type '" + s + "'");
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (c < 'A' || c > 'G') throw InvalidArgument("unknown Cartan type '" + s + "'");
  return static_cast<CartanType>(c - 'A');
}

CartanType dual_type(CartanType t) {
  if (t == CartanType::B) return CartanType::C;
  if (t == CartanType::C) return CartanType::B;
  return t;
}

bool is_valid_type(CartanType t, std::size_t rank) {
  switch (t) {
    case CartanType::A: return rank >= 1;
    case CartanType::B:
    case CartanType::C: return rank >= 2;
    case CartanType::D: return rank >= 3;
    case CartanType::E: return rank >= 6 && rank <= 8;
    case CartanType::F: return rank == 4;
    case CartanType::G: return rank == 2;
  }
  return false;
}

IntegerMatrix cartan_matrix(CartanType t, std::size_t n) {
  if (!is_valid_type(t, n))
    throw InvalidArgument(std::string("invalid type ") + to_char(t) + std::to_string(n));
  IntegerMatrix a(n, n);
  auto link = [&a](std::size_t i, std::size_t j) {
    a(i, j) = -1;
    a(j, i) = -1;
  };
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 2;
  switch (t) {
    case CartanType::A:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case CartanType::B:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 1, n - 2) = -2;  // alpha_n short
      break;
    case CartanType::C:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 2, n - 1) = -2;  // alpha_n long
      break;
    case CartanType::D:
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case CartanType::E:
      link(0, 2);
      link(1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case CartanType::F:
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a(2, 1) = -2;
      break;
    case CartanType::G:
      link(0, 1);
      a(0, 1) = -3;  // alpha_1 short
      break;
  }
  return a;
}

std::uint64_t weyl_group_order(CartanType t, std::size_t n) {
  if (!is_valid_type(t, n))
    throw InvalidArgument(std::string("invalid type ") + to_char(t) + std::to_string(n));
  auto factorial = [](std::size_t k) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= k; ++i) {
      if (f > std::numeric_limits<std::uint64_t>::max() / i) return std::numeric_limits<std::uint64_t>::max();
      f *= i;
    }
    return f;
  };
  auto times_pow2 = [](std::uint64_t f, std::size_t e) {
    for (std::size_t i = 0; i < e; ++i) {
      if (f > std::numeric_limits<std::uint64_t>::max() / 2) return std::numeric_limits<std::uint64_t>::max();
      f *= 2;
    }
    return f;
  };
  switch (t) {
    case CartanType::A: return factorial(n + 1);
    case CartanType::B:
    case CartanType::C: return times_pow2(factorial(n), n);
    case CartanType::D: return times_pow2(factorial(n), n - 1);
    case CartanType::E: return n == 6 ? 51840ULL : n == 7 ? 2903040ULL : 696729600ULL;
    case CartanType::F: return 1152;
    case CartanType::G: return 12;
  }
  return 0;
}

GroupForm GroupForm::parse(const std::string& tag, CartanType t, std::size_t n) {
  if (!is_valid_type(t, n))
    throw InvalidArgument(std::string("invalid type ") + to_char(t) + std::to_string(n));
  if (tag == "sc") return simply_connected();
  if (tag == "adjoint" || tag == "adj") return adjoint();
  auto unit = [n](std::size_t i, long scale) {
    IntegerVector v(n, 0);
    v[i] = scale;
    return v;
  };
  if (tag == "so" || tag == "ss" || tag == "ss'") {
    if (t != CartanType::D) throw InvalidArgument("form '" + tag + "' only exists for type D");
    if (tag == "so") return quotient({unit(0, 1)});
    if (n % 2 != 0) throw InvalidArgument("half-spin forms need D_n with n even");
    return quotient({unit(tag == "ss" ? n - 1 : n - 2, 1)});
  }
  const std::string prefix = "quotient:";
  if (tag.rfind(prefix, 0) == 0) {
    if (t != CartanType::A) throw InvalidArgument("form '" + tag + "' only exists for type A");
    long d = 0;
    try {
      d = std::stol(tag.substr(prefix.size()));
    } catch (const std::exception&) {
      throw InvalidArgument("bad quotient order in '" + tag + "'");
    }
    const long order = static_cast<long>(n) + 1;
    if (d <= 0 || order % d != 0)
      throw InvalidArgument("Z/" + std::to_string(d) + " is not a subgroup of pi_1 = Z/" + std::to_string(order));
    return quotient({unit(0, order / d)});
  }
  throw InvalidArgument("unknown group form '" + tag + "'");
}

std::string RootDatumLabel::to_string() const {
  return std::string(1, to_char(type)) + std::to_string(rank) + " " + form;
}

// ---------------------------------------------------------------------------

namespace {

Integer dot(const IntegerVector& a, const IntegerVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

struct RootPair {
  IntegerVector root;
  IntegerVector coroot;
  std::optional<std::size_t> simple;  // Bourbaki index

  bool operator<(const RootPair& o) const { return std::tie(root, coroot) < std::tie(o.root, o.coroot); }
};

RootDatum assemble(RootDatumLabel label, std::vector<RootPair> pairs, std::size_t n) {
  std::sort(pairs.begin(), pairs.end());
  std::vector<IntegerVector> roots, coroots;
  std::vector<std::size_t> simple(n);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    roots.push_back(pairs[k].root);
    coroots.push_back(pairs[k].coroot);
    if (pairs[k].simple) simple[*pairs[k].simple] = k;
  }
  return RootDatum(std::move(label), std::move(roots), std::move(coroots), std::move(simple));
}

// All (root, coroot) pairs in simple-root / simple-coroot coordinates.
std::vector<RootPair> generate_system(const IntegerMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<RootPair> out;
  std::set<IntegerVector> seen;
  std::deque<RootPair> queue;
  for (std::size_t i = 0; i < n; ++i) {
    IntegerVector e(n, 0);
    e[i] = 1;
    queue.push_back({e, e, i});
    seen.insert(e);
  }
  while (!queue.empty()) {
    RootPair p = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      Integer rb = 0, rc = 0;
      for (std::size_t j = 0; j < n; ++j) {
        rb += a(i, j) * p.root[j];
        rc += a(j, i) * p.coroot[j];
      }
      RootPair q{p.root, p.coroot, std::nullopt};
      q.root[i] -= rb;
      q.coroot[i] -= rc;
      if (seen.insert(q.root).second) queue.push_back(std::move(q));
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

RootDatum::RootDatum(RootDatumLabel label, std::vector<IntegerVector> roots, std::vector<IntegerVector> coroots,
                     std::vector<std::size_t> simple_indices)
    : label_(std::move(label)), roots_(std::move(roots)), coroots_(std::move(coroots)), simple_(std::move(simple_indices)) {
  if (roots_.size() != coroots_.size()) throw InvalidArgument("root and coroot counts differ");
  for (std::size_t k = 0; k < roots_.size(); ++k) {
    if (roots_[k].size() != label_.rank || coroots_[k].size() != label_.rank)
      throw InvalidArgument("root vector of wrong length");
    if (dot(roots_[k], coroots_[k]) != 2) throw InvalidArgument("<alpha, alpha^vee> != 2");
  }
  for (auto s : simple_)
    if (s >= roots_.size()) throw InvalidArgument("simple index out of range");
}

IntegerMatrix RootDatum::root_matrix() const { return IntegerMatrix::from_columns(rank(), roots_); }
IntegerMatrix RootDatum::coroot_matrix() const { return IntegerMatrix::from_columns(rank(), coroots_); }

IntegerMatrix RootDatum::reflection(std::size_t k) const {
  const std::size_t n = rank();
  IntegerMatrix s = IntegerMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) -= coroots_[k][i] * roots_[k][j];
  return s;
}

std::vector<IntegerMatrix> RootDatum::simple_reflections() const {
  std::vector<IntegerMatrix> out;
  for (auto k : simple_) out.push_back(reflection(k));
  return out;
}

RootDatum build_simple(CartanType t, std::size_t n, const GroupForm& form, std::size_t rank_cap) {
  if (!is_valid_type(t, n))
    throw InvalidArgument(std::string("invalid type/rank combination ") + to_char(t) + std::to_string(n));
  if (n > rank_cap)
    throw InvalidArgument("rank " + std::to_string(n) + " exceeds cap " + std::to_string(rank_cap));

  const IntegerMatrix a = cartan_matrix(t, n);
  const IntegerMatrix coroot_lattice = a.transpose();  // simple coroots in coweight coordinates

  IntegerMatrix basis;  // basis of X_* in coweight coordinates
  switch (form.kind) {
    case GroupForm::Kind::simply_connected: basis = coroot_lattice; break;
    case GroupForm::Kind::adjoint: basis = IntegerMatrix::identity(n); break;
    case GroupForm::Kind::quotient: {
      std::vector<IntegerVector> cols;
      for (std::size_t j = 0; j < n; ++j) cols.push_back(coroot_lattice.column(j));
      for (const auto& g : form.generators) {
        if (g.size() != n) throw InvalidArgument("quotient generator has wrong length");
        cols.push_back(g);
      }
      basis = column_lattice_basis(IntegerMatrix::from_columns(n, cols));
      break;
    }
  }

  const IntegerMatrix to_cochar = to_integer(inverse(to_rational(basis)) * to_rational(coroot_lattice));
  const IntegerMatrix to_char_coords = basis.transpose();

  auto pairs = generate_system(a);
  for (auto& p : pairs) {
    p.root = to_char_coords * p.root;
    p.coroot = to_cochar * p.coroot;
  }
  RootDatum provisional = assemble({t, n, ""}, std::move(pairs), n);
  std::string tag = identify_form(t, provisional);
  return RootDatum({t, n, tag}, provisional.roots(), provisional.coroots(), provisional.simple_indices());
}

RootDatum dualize(const RootDatum& rd) {
  const std::size_t n = rd.rank();
  std::vector<RootPair> pairs;
  std::vector<std::optional<std::size_t>> simple_of(rd.roots().size());
  for (std::size_t i = 0; i < rd.simple_indices().size(); ++i) simple_of[rd.simple_indices()[i]] = i;
  for (std::size_t k = 0; k < rd.roots().size(); ++k) pairs.push_back({rd.coroots()[k], rd.roots()[k], simple_of[k]});
  const CartanType t = dual_type(rd.label().type);
  RootDatum provisional = assemble({t, n, ""}, std::move(pairs), n);
  std::string tag = identify_form(t, provisional);
  return RootDatum({t, n, tag}, provisional.roots(), provisional.coroots(), provisional.simple_indices());
}

FiniteAbelianGroup fundamental_group(const RootDatum& rd) {
  auto c = cokernel(rd.coroot_matrix());
  if (c.free_rank != 0) throw InvalidArgument("datum is not semisimple");
  return c.torsion;
}

FiniteAbelianGroup center(const RootDatum& rd) {
  auto c = cokernel(rd.root_matrix());
  if (c.free_rank != 0) throw InvalidArgument("datum is not semisimple");
  return c.torsion;
}

Integer connection_index(const RootDatum& rd) { return fundamental_group(rd).order() * center(rd).order(); }

std::string identify_form(CartanType t, const RootDatum& rd) {
  const std::size_t n = rd.rank();
  if (fundamental_group(rd).is_trivial()) return "sc";
  if (center(rd).is_trivial()) return "adjoint";

  // Coweight coordinates of x in X_* are (<alpha_i, x>)_i.
  std::vector<IntegerVector> simple_roots, simple_coroots;
  for (auto k : rd.simple_indices()) {
    simple_roots.push_back(rd.roots()[k]);
    simple_coroots.push_back(rd.coroots()[k]);
  }
  const IntegerMatrix r = IntegerMatrix::from_rows(n, simple_roots);
  const IntegerMatrix lattice = r;  // image of the standard basis of X_*
  const IntegerMatrix qv = r * IntegerMatrix::from_columns(n, simple_coroots);

  auto same_lattice = [&](const GroupForm& f) {
    std::vector<IntegerVector> cols;
    for (std::size_t j = 0; j < n; ++j) cols.push_back(qv.column(j));
    for (const auto& g : f.generators) cols.push_back(g);
    IntegerMatrix cand = column_lattice_basis(IntegerMatrix::from_columns(n, cols));
    return cand.cols() == n && lattice_contains(cand, lattice) && lattice_contains(lattice, cand);
  };

  if (t == CartanType::A) {
    return "quotient:" + fundamental_group(rd).order().str();
  }
  if (t == CartanType::D) {
    for (const char* tag : {"so", "ss", "ss'"}) {
      if (n % 2 != 0 && std::string(tag) != "so") continue;
      if (same_lattice(GroupForm::parse(tag, t, n))) return tag;
    }
  }
  return "quotient";
}

}  // namespace langdual
