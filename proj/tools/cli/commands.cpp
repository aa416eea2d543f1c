#include "commands.hpp"

#include "reports.hpp"

#include "langdual/clifford.hpp"
#include "langdual/error.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

namespace langdual::cli {

namespace {

constexpr std::size_t kLargeCap = 1'000'000'000;

struct Selector {
  std::string type;
  std::optional<std::size_t> rank;
  std::string form = "sc";
};

struct Options {
  Selector sel;
  std::string json;
  bool allow_large = false;
  std::size_t max_rank = 3;
  std::string forms = "sc,adjoint";
  std::string fixture;
  std::string affine_form = "adjoint";
  int dim = 1;
  std::optional<std::size_t> grid;
  double halfwidth = 6.0;
  std::optional<double> tol;
  std::optional<std::size_t> count;
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  std::size_t max_n = 3;
};

std::size_t cap(const Options& o) { return o.allow_large ? kLargeCap : kDefaultWeylCap; }

std::size_t default_rank(CartanType t) {
  if (t == CartanType::F) return 4;
  if (t == CartanType::G) return 2;
  throw InvalidArgument(std::string("--rank is required for type ") + to_char(t));
}

RootDatum select(const Selector& s) {
  if (s.type.empty()) throw InvalidArgument("--type is required");
  const CartanType t = parse_cartan_type(s.type);
  const std::size_t n = s.rank ? *s.rank : default_rank(t);
  return build_simple(t, n, GroupForm::parse(s.form, t, n));
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

// All valid (type, rank <= max_rank) data for the given forms, skipping tags
// that do not apply to a type and data already listed.
std::vector<RootDatum> sweep(std::size_t max_rank, const std::vector<std::string>& forms) {
  if (max_rank < 1 || max_rank > kDefaultRankCap) throw InvalidArgument("--max-rank must be in [1, 8]");
  if (forms.empty()) throw InvalidArgument("--forms is empty");
  std::vector<RootDatum> out;
  std::set<std::string> seen;
  for (CartanType t : {CartanType::A, CartanType::B, CartanType::C, CartanType::D, CartanType::E, CartanType::F,
                       CartanType::G})
    for (std::size_t n = 1; n <= max_rank; ++n) {
      if (!is_valid_type(t, n)) continue;
      for (const auto& f : forms) {
        std::optional<GroupForm> form;
        try {
          form = GroupForm::parse(f, t, n);
        } catch (const InvalidArgument&) {
          continue;
        }
        RootDatum rd = build_simple(t, n, *form);
        if (seen.insert(rd.label().to_string()).second) out.push_back(std::move(rd));
      }
    }
  if (out.empty()) throw InvalidArgument("no root datum matches --max-rank/--forms");
  return out;
}

void emit(const Json& j, const std::string& path, std::ostream& out) {
  if (path.empty()) return;
  if (path == "-") {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw InvalidArgument("cannot write JSON to " + path);
  f << j.dump(2) << "\n";
}

bool text(const Options& o) { return o.json != "-"; }

std::string lattice(const std::vector<IntegerVector>& vs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    os << (i ? " " : "") << "(";
    for (std::size_t k = 0; k < vs[i].size(); ++k) os << (k ? "," : "") << vs[i][k];
    os << ")";
  }
  return os.str();
}

std::string point(const RationalVector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------

int cmd_dual(const Options& o, std::ostream& out) {
  const RootDatum rd = select(o.sel);
  const RootDatum dual = dualize(rd);
  if (text(o)) {
    const bool self = rd.label() == dual.label();
    out << "datum: " << rd.label().to_string() << "\n";
    out << "dual:  " << dual.label().to_string() << (self ? "  (self-dual)" : "") << "\n";
    out << "pi1 = " << fundamental_group(rd).to_string() << ", center = " << center(rd).to_string()
        << ", connection index f = " << connection_index(rd) << "\n";
    out << "simple roots:   " << lattice([&] {
      std::vector<IntegerVector> v;
      for (auto i : rd.simple_indices()) v.push_back(rd.roots()[i]);
      return v;
    }()) << "\n";
    out << "simple coroots: " << lattice([&] {
      std::vector<IntegerVector> v;
      for (auto i : rd.simple_indices()) v.push_back(rd.coroots()[i]);
      return v;
    }()) << "\n";
  }
  Json j;
  j["datum"] = to_json(rd);
  j["dual"] = to_json(dual);
  j["self_dual"] = rd.label() == dual.label();
  j["connection_index"] = connection_index(rd).convert_to<long long>();
  emit(j, o.json, out);
  return kPass;
}

int cmd_verify_duality(const Options& o, std::ostream& out) {
  std::vector<RootDatum> data;
  if (!o.sel.type.empty())
    data.push_back(select(o.sel));
  else
    data = sweep(o.max_rank, split(o.forms));
  // Fail fast on the cap before doing any work.
  for (const auto& rd : data) {
    const auto order = weyl_group_order(rd.label().type, rd.rank());
    if (order > cap(o))
      throw GroupTooLarge(rd.label().to_string() + ": |W| = " + std::to_string(order) +
                          " exceeds the default cap; pass --allow-large");
  }
  Json reports = Json::array();
  bool all = true;
  for (const auto& rd : data) {
    const DualityReport r = verify_duality(rd, cap(o));
    all = all && r.equal;
    reports.push_back(to_json(r));
    if (text(o))
      out << std::left << std::setw(12) << r.primal_label.to_string() << " K = (" << r.primal.k0 << ", " << r.primal.k1
          << ")   dual " << std::setw(12) << r.dual_label.to_string() << " K = (" << r.dual.k0 << ", " << r.dual.k1
          << ")   " << (r.equal ? "equal" : "DIFFERENT") << "\n";
  }
  if (text(o)) out << (all ? "all equal" : "mismatch found") << " (" << data.size() << " data)\n";
  emit(Json{{"reports", reports}, {"all_equal", all}}, o.json, out);
  return all ? kPass : kCheckFailed;
}

int cmd_affine(const Options& o, std::ostream& out) {
  if (o.affine_form != "adjoint" && o.affine_form != "adj")
    throw InvalidArgument("affine-compare works on adjoint forms only");
  std::vector<RootDatum> data;
  if (!o.sel.type.empty())
    data.push_back(select(Selector{o.sel.type, o.sel.rank, "adjoint"}));
  else
    data = sweep(o.max_rank, {"adjoint"});
  Json reports = Json::array();
  bool all = true;
  for (const auto& rd : data) {
    const AffineReport r = affine_comparison(rd, cap(o));
    all = all && r.passed();
    reports.push_back(to_json(r));
    if (text(o)) {
      out << std::left << std::setw(12) << r.label.to_string() << " extended (" << r.extended.k0 << ", "
          << r.extended.k1 << ")  dual affine (" << r.dual_affine.k0 << ", " << r.dual_affine.k1 << ")  affine ("
          << r.affine.k0 << ", " << r.affine.k1 << ")" << (r.affine_asserted ? "" : " [not asserted]") << "   "
          << (r.passed() ? "equal" : "DIFFERENT") << "\n";
    }
  }
  emit(Json{{"reports", reports}, {"all_equal", all}}, o.json, out);
  return all ? kPass : kCheckFailed;
}

int cmd_ktheory(const Options& o, std::ostream& out) {
  KTheoryComputation k;
  Json j;
  if (!o.fixture.empty()) {
    if (!o.sel.type.empty()) throw InvalidArgument("--fixture and --type are exclusive");
    if (o.fixture == "inversion") {
      const auto w = WeylGroup::from_generators(1, {IntegerMatrix::from_rows(1, {{-1}})});
      k = rational_equivariant_k(w);
      j["fixture"] = "inversion";
    } else if (o.fixture == "trivial") {
      const std::size_t n = o.sel.rank.value_or(1);
      if (n < 1 || n > 8) throw InvalidArgument("--rank must be in [1, 8] for the trivial fixture");
      k = rational_equivariant_k(WeylGroup::from_generators(n, {}));
      j["fixture"] = "trivial";
      j["rank"] = n;
    } else {
      throw InvalidArgument("unknown fixture '" + o.fixture + "' (expected inversion or trivial)");
    }
  } else {
    const RootDatum rd = select(o.sel);
    k = rational_equivariant_k(WeylGroup::generate(rd, cap(o)));
    j["type"] = std::string(1, to_char(rd.label().type));
    j["rank"] = rd.rank();
    j["form"] = rd.label().form;
  }
  j["k"] = to_json(k.rank);
  j["classes"] = Json::array();
  for (const auto& c : k.classes) j["classes"].push_back(to_json(c));
  if (text(o)) {
    out << "class  size  |Z(w)|  dim T^w  components  even  odd\n";
    for (std::size_t i = 0; i < k.classes.size(); ++i) {
      const auto& c = k.classes[i];
      out << std::right << std::setw(5) << i << std::setw(6) << c.class_size << std::setw(8) << c.centralizer_order
          << std::setw(9) << c.fixed_dim << std::setw(12) << c.components << std::setw(6) << c.even << std::setw(5)
          << c.odd << "\n";
    }
    out << "rank K^0 = " << k.rank.k0 << ", rank K^1 = " << k.rank.k1 << "\n";
  }
  emit(j, o.json, out);
  return kPass;
}

int cmd_fixed_points(const Options& o, std::ostream& out) {
  const RootDatum rd = select(o.sel);
  const FixedSetReport full = full_fixed_points(rd);
  const WeylGroup w = WeylGroup::generate(rd, cap(o));
  Json j;
  j["datum"] = rd.label().to_string();
  j["full_fixed_points"] = to_json(full);
  j["classes"] = Json::array();
  if (text(o)) {
    out << rd.label().to_string() << ": " << full.components.size() << " point(s) fixed by all of W:";
    for (const auto& c : full.components) out << " " << point(c);
    out << "\nclass  rep  dim T^w  components\n";
  }
  const auto& classes = w.conjugacy_classes();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const FixedSetReport r = fixed_set(w, classes[i].representative);
    j["classes"].push_back(to_json(r));
    if (text(o))
      out << std::right << std::setw(5) << i << std::setw(5) << classes[i].representative << std::setw(9)
          << r.fixed_dim << std::setw(12) << r.components.size() << "\n";
  }
  emit(j, o.json, out);
  return kPass;
}

int cmd_oscillator(const Options& o, std::ostream& out) {
  OscillatorParams p;
  p.dimension = o.dim;
  p.grid = o.grid.value_or(o.dim == 2 ? 60 : 1600);
  p.halfwidth = o.halfwidth;
  const std::size_t count = o.count.value_or(o.dim == 2 ? 6 : 10);
  const double tol = o.tol.value_or(o.dim == 2 ? 0.03 : 0.01);
  const auto disc = build_q0(p);
  const SpectralReport r = spectral_check(disc, count);

  bool ok = r.max_deviation() <= tol && r.kernel_dim == 1;
  if (o.dim == 1) ok = ok && r.kernel_parity >= 0.999 && r.kernel_cosine >= 0.999;

  if (text(o)) {
    out << "Q_0^2, dim " << r.dimension << ", grid " << r.grid << ", L = " << r.halfwidth << "\n";
    out << "   k   eigenvalue    expected    deviation   residual\n";
    for (std::size_t i = 0; i < r.eigenvalues.size(); ++i)
      out << std::right << std::setw(4) << i << std::setw(13) << std::fixed << std::setprecision(6)
          << r.eigenvalues[i] << std::setw(12) << r.expected[i] << std::setw(13) << std::scientific
          << std::setprecision(2) << r.deviations[i] << std::setw(11) << r.residuals[i] << "\n";
    out << std::defaultfloat << std::setprecision(6);
    out << "kernel dim " << r.kernel_dim << ", even fraction " << r.kernel_parity << ", cosine to ground state "
        << r.kernel_cosine << "\n";
    out << "max deviation " << r.max_deviation() << " (tol " << tol << "): " << (ok ? "pass" : "FAIL") << "\n";
  }
  Json j = to_json(r);
  j["tolerance"] = tol;
  j["passed"] = ok;
  emit(j, o.json, out);
  return ok ? kPass : kCheckFailed;
}

int cmd_clifford(const Options& o, std::ostream& out) {
  if (o.max_n < 1 || o.max_n > kMaxCliffordDimension) throw InvalidArgument("--max-n must be in [1, 4]");
  Json rows = Json::array();
  bool all = true;
  for (std::size_t n = 1; n <= o.max_n; ++n) {
    const CliffordElement p = clifford_projection(n);
    Json row;
    row["n"] = n;
    row["P^2 = P"] = p * p == p;
    row["P* = P"] = p.star() == p;
    row["uPu* = P^vee"] = conjugation_by_u(n, p) == dual_projection(n);
    bool e_ok = true, eps_ok = true;
    for (std::size_t j = 0; j < n; ++j) {
      e_ok = e_ok && conjugation_by_u(n, CliffordElement::e(n, j)) == CliffordElement::e(n, j);
      eps_ok = eps_ok && conjugation_by_u(n, CliffordElement::eps(n, j)) ==
                             CliffordElement::eps(n, j) * GaussianRational(Rational(-1));
    }
    row["u e_j u* = e_j"] = e_ok;
    row["u eps^j u* = -eps^j"] = eps_ok;
    bool inv = true;
    const auto gs = signed_permutations(n);
    for (const auto& g : gs) inv = inv && symmetric_invariance_check(n, g, p);
    row["P invariant under signed permutations"] = inv;
    row["signed_permutations"] = gs.size();
    bool row_ok = true;
    for (auto it = row.begin(); it != row.end(); ++it)
      if (it.value().is_boolean()) row_ok = row_ok && it.value().get<bool>();
    row["passed"] = row_ok;
    all = all && row_ok;
    if (text(o)) {
      out << "n = " << n << ":";
      for (auto it = row.begin(); it != row.end(); ++it)
        if (it.value().is_boolean() && it.key() != "passed")
          out << "  [" << (it.value().get<bool>() ? "ok" : "FAIL") << "] " << it.key();
      out << "\n";
    }
    rows.push_back(row);
  }
  emit(Json{{"rows", rows}, {"all_passed", all}}, o.json, out);
  return all ? kPass : kCheckFailed;
}

int cmd_poincare(const Options& o, std::ostream& out) {
  const double tol = o.tol.value_or(1e-10);
  const PoincareSuiteResult r = run_poincare_suite(o.seed, o.samples);
  const bool ok = r.max_deviation() <= tol;
  if (text(o)) {
    out << "seed " << r.seed << ", " << r.samples << " samples per rank (ranks 1, 2)\n";
    const std::vector<std::pair<std::string, double>> lines = {
        {"quasi-periodicity of section transform", r.quasi_periodicity},
        {"Gamma-periodicity of pairing in x", r.periodicity_x},
        {"Gamma^vee-periodicity in eta", r.periodicity_eta},
        {"W-equivariance (" + std::to_string(r.weyl_elements) + " elements)", r.equivariance},
        {"Hermitian symmetry", r.hermitian},
        {"sesquilinearity", r.sesquilinearity},
        {"Gram min eigenvalue (relative)", r.gram_min_eigenvalue},
    };
    for (const auto& [name, value] : lines) out << "  " << std::left << std::setw(42) << name << value << "\n";
    out << "max deviation " << r.max_deviation() << " (tol " << tol << "): " << (ok ? "pass" : "FAIL") << "\n";
  }
  Json j = to_json(r);
  j["tolerance"] = tol;
  j["passed"] = ok;
  emit(j, o.json, out);
  return ok ? kPass : kCheckFailed;
}

void add_selector(CLI::App* app, Options& o, bool form = true) {
  app->add_option("--type", o.sel.type, "Cartan type A-G");
  app->add_option("--rank", o.sel.rank, "rank");
  if (form) app->add_option("--form", o.sel.form, "sc, adjoint, so, ss, ss', quotient:d")->capture_default_str();
}

void add_json(CLI::App* app, Options& o) { app->add_option("--json", o.json, "write JSON to this path ('-' for stdout)"); }

}  // namespace

int table_check(const std::vector<ReferenceTableRow>& rows, const std::string& json_path, std::ostream& out) {
  Json results = Json::array();
  std::size_t passed = 0;
  const bool txt = json_path != "-";
  for (const auto& row : rows) {
    const RowResult r = check_row(row);
    passed += r.passed() ? 1 : 0;
    results.push_back(to_json(r));
    if (txt) {
      out << (r.passed() ? "pass  " : "FAIL  ") << std::left << std::setw(18) << row.group << std::setw(12)
          << row.dual << " f = " << std::setw(4) << row.f << " | " << r.computed_label << " -> " << r.computed_dual
          << ", f = " << r.computed_f;
      if (!r.f_ok) out << " (expected " << row.connection_index << ", dual has " << r.computed_dual_f << ")";
      if (!r.dual_ok)
        out << " (expected dual " << RootDatumLabel{dual_type(row.type), row.rank, row.dual_form}.to_string() << ")";
      out << "\n";
    }
  }
  const bool ok = passed == rows.size();
  if (txt) out << passed << "/" << rows.size() << " rows pass\n";
  emit(Json{{"rows", results}, {"passed", passed}, {"total", rows.size()}}, json_path, out);
  return ok ? kPass : kCheckFailed;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Langlands duality checks for compact Lie groups", "langdual"};
  app.require_subcommand(1);
  Options o;

  auto* dual = app.add_subcommand("dual", "construct a root datum and its Langlands dual");
  add_selector(dual, o);
  add_json(dual, o);

  auto* table = app.add_subcommand("table-check", "check the table of duals and connection indices");
  add_json(table, o);

  auto* verify = app.add_subcommand("verify-duality", "compare rational K_W(T) and K_W(T^vee)");
  add_selector(verify, o);
  verify->add_option("--max-rank", o.max_rank, "largest rank in the sweep")->capture_default_str();
  verify->add_option("--forms", o.forms, "comma-separated form tags")->capture_default_str();
  verify->add_flag("--allow-large", o.allow_large, "lift the |W| cap");
  add_json(verify, o);

  auto* affine = app.add_subcommand("affine-compare", "compare K-theory of affine Weyl group algebras");
  affine->add_option("--type", o.sel.type, "Cartan type A-G");
  affine->add_option("--rank", o.sel.rank, "rank");
  affine->add_option("--form", o.affine_form, "must be adjoint")->capture_default_str();
  affine->add_option("--max-rank", o.max_rank, "largest rank in the sweep")->capture_default_str();
  affine->add_flag("--allow-large", o.allow_large, "lift the |W| cap");
  add_json(affine, o);

  auto* ktheory = app.add_subcommand("ktheory", "rational W-equivariant K-theory of the maximal torus");
  add_selector(ktheory, o);
  ktheory->add_option("--fixture", o.fixture, "inversion (Z/2 on U(1)) or trivial (trivial group on T^rank)");
  ktheory->add_flag("--allow-large", o.allow_large, "lift the |W| cap");
  add_json(ktheory, o);

  auto* fixed = app.add_subcommand("fixed-points", "fixed sets of Weyl group elements on T");
  add_selector(fixed, o);
  fixed->add_flag("--allow-large", o.allow_large, "lift the |W| cap");
  add_json(fixed, o);

  auto* osc = app.add_subcommand("oscillator", "spectrum of the discretized Q_0^2");
  osc->add_option("--dim", o.dim, "1 or 2")->capture_default_str();
  osc->add_option("--grid", o.grid, "grid points per axis (default 1600 in 1D, 60 in 2D)");
  osc->add_option("--halfwidth", o.halfwidth, "domain is [-L, L]")->capture_default_str();
  osc->add_option("--tol", o.tol, "relative eigenvalue tolerance (default 0.01 in 1D, 0.03 in 2D)");
  osc->add_option("--count", o.count, "number of eigenvalues (default 10 in 1D, 6 in 2D)");
  add_json(osc, o);

  auto* cliff = app.add_subcommand("clifford-check", "exact Clifford algebra identities");
  cliff->add_option("--max-n", o.max_n, "largest dimension")->capture_default_str();
  add_json(cliff, o);

  auto* poinc = app.add_subcommand("poincare-check", "property suite for the Poincare bundle pairing");
  poinc->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
  poinc->add_option("--samples", o.samples, "samples per rank")->capture_default_str();
  poinc->add_option("--tol", o.tol, "max deviation (default 1e-10)");
  add_json(poinc, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsageError;
  }

  try {
    if (*dual) return cmd_dual(o, out);
    if (*table) return table_check(reference_table(), o.json, out);
    if (*verify) return cmd_verify_duality(o, out);
    if (*affine) return cmd_affine(o, out);
    if (*ktheory) return cmd_ktheory(o, out);
    if (*fixed) return cmd_fixed_points(o, out);
    if (*osc) return cmd_oscillator(o, out);
    if (*cliff) return cmd_clifford(o, out);
    if (*poinc) return cmd_poincare(o, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const GroupTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsageError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"langdual"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace langdual::cli
