// One line per acceptance criterion; nonzero exit if any fails.

#include "commands.hpp"
#include "oracles.hpp"

#include "langdual/clifford.hpp"
#include "langdual/equivariant_k.hpp"
#include "langdual/oscillator.hpp"
#include "langdual/poincare_pairing.hpp"
#include "langdual/torus_fixed_points.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace langdual;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double budget_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < budget_seconds;
  const bool ok = o.ok && in_time;
  if (!ok) ++failures;
  std::printf("criterion %d: %s  %-50s %s (%.2f s of %.0f s)%s\n", id, ok ? "PASS" : "FAIL", name.c_str(),
              o.detail.c_str(), secs, budget_seconds, in_time ? "" : " over budget");
  std::fflush(stdout);
}

std::string rank_string(const GradedRank& k) {
  return "(" + std::to_string(k.k0) + ", " + std::to_string(k.k1) + ")";
}

std::vector<std::string> forms_for(CartanType t, std::size_t n) {
  std::vector<std::string> tags{"sc", "adjoint"};
  if (t == CartanType::D) {
    tags.push_back("so");
    if (n % 2 == 0) {
      tags.push_back("ss");
      tags.push_back("ss'");
    }
  }
  if (t == CartanType::A)
    for (std::size_t d = 2; d <= n; ++d)
      if ((n + 1) % d == 0) tags.push_back("quotient:" + std::to_string(d));
  return tags;
}

}  // namespace

int main() {
  criterion(1, "Z/2 acting on U(1) by inversion", 1, [] {
    const auto w = WeylGroup::from_generators(1, {IntegerMatrix{{-1}}});
    const auto k = rational_equivariant_k(w).rank;
    return Outcome{k == GradedRank{3, 0}, "K = " + rank_string(k)};
  });

  criterion(2, "connection-index table", 5, [] {
    std::ostringstream sink;
    const int code = cli::table_check(cli::reference_table(), "", sink);
    std::string fs;
    bool match = true;
    const std::vector<std::uint64_t> expected{3, 2, 2, 4, 3, 2, 1, 1, 1};
    std::size_t passed = 0;
    for (std::size_t i = 0; i < cli::reference_table().size(); ++i) {
      const auto r = cli::check_row(cli::reference_table()[i]);
      passed += r.passed();
      match = match && i < expected.size() && r.computed_f == expected[i];
      fs += (fs.empty() ? "" : ",") + std::to_string(r.computed_f);
    }
    return Outcome{code == cli::kPass && match && passed == 9,
                   std::to_string(passed) + "/9 rows, f = {" + fs + "}"};
  });

  criterion(3, "SU3 / PSU3 fixed points", 1, [] {
    const RootDatum su3 = build_simple(CartanType::A, 2, GroupForm::simply_connected());
    const auto a = full_fixed_points(su3).components.size();
    const auto b = full_fixed_points(dualize(su3)).components.size();
    return Outcome{a == 3 && b == 1, std::to_string(a) + " and " + std::to_string(b) + " points"};
  });

  criterion(4, "duality, ranks <= 4, sc and adjoint", 300, [] {
    const std::vector<std::pair<CartanType, std::size_t>> types{
        {CartanType::A, 1}, {CartanType::A, 2}, {CartanType::A, 3}, {CartanType::A, 4}, {CartanType::B, 2},
        {CartanType::B, 3}, {CartanType::B, 4}, {CartanType::C, 2}, {CartanType::C, 3}, {CartanType::C, 4},
        {CartanType::D, 3}, {CartanType::D, 4}, {CartanType::G, 2}, {CartanType::F, 4}};
    std::size_t total = 0, equal = 0;
    std::string bad;
    for (auto [t, n] : types)
      for (const auto& form : {GroupForm::simply_connected(), GroupForm::adjoint()}) {
        const auto rep = verify_duality(build_simple(t, n, form));
        ++total;
        if (rep.equal) ++equal;
        else bad += " " + rep.primal_label.to_string();
      }
    return Outcome{equal == total, std::to_string(equal) + "/" + std::to_string(total) + " equal" + bad};
  });

  criterion(5, "affine comparison, adjoint A2 A3 D4 G2 F4", 120, [] {
    const std::vector<std::pair<CartanType, std::size_t>> types{
        {CartanType::A, 2}, {CartanType::A, 3}, {CartanType::D, 4}, {CartanType::G, 2}, {CartanType::F, 4}};
    std::size_t passed = 0;
    std::string bad;
    for (auto [t, n] : types) {
      const auto r = affine_comparison(build_simple(t, n, GroupForm::adjoint()));
      if (r.passed() && r.affine_asserted) ++passed;
      else bad += " " + r.label.to_string();
    }
    return Outcome{passed == types.size(), std::to_string(passed) + "/5 equal" + bad};
  });

  criterion(6, "oscillator spectrum, 1D grid 1600 and 2D grid 60", 120, [] {
    const auto one = spectral_check(build_q0({1, 1600, 6.0, 4}), 10);
    const bool ok1 = one.max_deviation() <= 0.01 && one.kernel_dim == 1 && one.kernel_parity >= 0.999 &&
                     one.kernel_cosine >= 0.999;
    const auto two = spectral_check(build_q0({2, 60, 6.0, 4}), 6);
    const bool ok2 = two.max_deviation() <= 0.03;
    char buf[200];
    std::snprintf(buf, sizeof buf, "1D dev %.1e ker %zu par %.4f cos %.4f; 2D dev %.2e", one.max_deviation(),
                  one.kernel_dim, one.kernel_parity, one.kernel_cosine, two.max_deviation());
    return Outcome{ok1 && ok2, buf};
  });

  criterion(7, "exact Clifford identities, n = 1, 2, 3", 10, [] {
    std::size_t checks = 0, passed = 0;
    auto check = [&](bool b) {
      ++checks;
      passed += b;
    };
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto p = clifford_projection(n);
      check(p * p == p);
      check(conjugation_by_u(n, p) == dual_projection(n));
      for (std::size_t j = 0; j < n; ++j) {
        check(conjugation_by_u(n, CliffordElement::e(n, j)) == CliffordElement::e(n, j));
        check(conjugation_by_u(n, CliffordElement::eps(n, j)) == CliffordElement::eps(n, j) * GaussianRational(-1));
      }
      for (const auto& g : signed_permutations(n)) check(apply_orthogonal(g, p) == p);
    }
    return Outcome{passed == checks, std::to_string(passed) + "/" + std::to_string(checks) + " identities"};
  });

  criterion(8, "pairing property suite, 100 samples per rank", 30, [] {
    const auto r = run_poincare_suite(20240611, 100);
    char buf[120];
    std::snprintf(buf, sizeof buf, "max deviation %.2e over %zu Weyl elements", r.max_deviation(), r.weyl_elements);
    return Outcome{r.samples >= 100 && r.max_deviation() <= 1e-10, buf};
  });

  criterion(9, "class sums vs commuting pairs, |W| <= 48", 60, [] {
    std::size_t data = 0, agree = 0;
    std::string bad;
    for (CartanType t : {CartanType::A, CartanType::B, CartanType::C, CartanType::D, CartanType::E, CartanType::F,
                         CartanType::G})
      for (std::size_t n = 1; n <= 8; ++n) {
        if (!is_valid_type(t, n) || weyl_group_order(t, n) > 48) continue;
        for (const auto& tag : forms_for(t, n)) {
          const RootDatum rd = build_simple(t, n, GroupForm::parse(tag, t, n));
          const auto w = WeylGroup::generate(rd);
          ++data;
          if (rational_equivariant_k(w).rank == oracle::commuting_pairs_k(w)) ++agree;
          else bad += " " + rd.label().to_string();
        }
      }
    return Outcome{data > 0 && agree == data, std::to_string(agree) + "/" + std::to_string(data) + " data agree" + bad};
  });

  std::printf("%d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
