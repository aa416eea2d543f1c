#include "langdual/error.hpp"
#include "langdual/weyl_group.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace langdual;

namespace {

RootDatum sc(CartanType t, std::size_t n) { return build_simple(t, n, GroupForm::simply_connected()); }

struct EntrywiseLess {
  bool operator()(const IntegerMatrix& a, const IntegerMatrix& b) const {
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
    return false;
  }
};
using MatrixSet = std::set<IntegerMatrix, EntrywiseLess>;

std::vector<RootDatum> small_data() {
  std::vector<RootDatum> out;
  for (auto [t, n] : std::vector<std::pair<CartanType, std::size_t>>{{CartanType::A, 1},
                                                                     {CartanType::A, 2},
                                                                     {CartanType::A, 3},
                                                                     {CartanType::B, 2},
                                                                     {CartanType::B, 3},
                                                                     {CartanType::C, 3},
                                                                     {CartanType::D, 3},
                                                                     {CartanType::G, 2}}) {
    out.push_back(build_simple(t, n, GroupForm::simply_connected()));
    out.push_back(build_simple(t, n, GroupForm::adjoint()));
  }
  return out;
}

}  // namespace

TEST_CASE("group orders") {
  CHECK(WeylGroup::generate(sc(CartanType::A, 1)).size() == 2);
  CHECK(WeylGroup::generate(sc(CartanType::A, 2)).size() == 6);
  CHECK(WeylGroup::generate(sc(CartanType::B, 2)).size() == 8);
  CHECK(WeylGroup::generate(sc(CartanType::D, 4)).size() == 192);
  CHECK(WeylGroup::generate(sc(CartanType::F, 4)).size() == 1152);
  CHECK(WeylGroup::generate(sc(CartanType::G, 2)).size() == 12);

  const auto a1 = WeylGroup::generate(sc(CartanType::A, 1));
  const MatrixSet got(a1.elements().begin(), a1.elements().end());
  CHECK(got == MatrixSet{IntegerMatrix{{1}}, IntegerMatrix{{-1}}});
}

TEST_CASE("cap is enforced before enumeration") {
  CHECK_THROWS_AS(WeylGroup::generate(sc(CartanType::E, 7)), GroupTooLarge);
  CHECK_THROWS_AS(WeylGroup::generate(sc(CartanType::E, 8)), GroupTooLarge);
  CHECK_THROWS_AS(WeylGroup::generate(sc(CartanType::B, 3), 10), GroupTooLarge);
  CHECK_THROWS_AS(WeylGroup::from_generators(1, {IntegerMatrix{{2}}}), InvalidArgument);
}

TEST_CASE("conjugacy classes") {
  CHECK(WeylGroup::generate(sc(CartanType::A, 1)).conjugacy_classes().size() == 2);

  const auto a2 = WeylGroup::generate(sc(CartanType::A, 2));
  std::multiset<std::size_t> sizes;
  for (const auto& c : a2.conjugacy_classes()) sizes.insert(c.members.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});

  CHECK(WeylGroup::generate(sc(CartanType::B, 2)).conjugacy_classes().size() == 5);
  CHECK(WeylGroup::generate(sc(CartanType::G, 2)).conjugacy_classes().size() == 6);
  CHECK(WeylGroup::generate(sc(CartanType::A, 3)).conjugacy_classes().size() == 5);
  CHECK(WeylGroup::generate(sc(CartanType::F, 4)).conjugacy_classes().size() == 25);
}

TEST_CASE("class structure agrees with brute-force conjugation") {
  for (const auto& rd : small_data()) {
    CAPTURE(rd.label().to_string());
    const auto w = WeylGroup::generate(rd);
    const auto& els = w.elements();
    std::size_t total = 0;
    for (const auto& c : w.conjugacy_classes()) {
      std::set<std::size_t> brute;
      for (std::size_t g = 0; g < w.size(); ++g) {
        const IntegerMatrix conj = els[g] * els[c.representative] * els[w.inverse(g)];
        brute.insert(w.find(conj));
      }
      CHECK(std::vector<std::size_t>(brute.begin(), brute.end()) == c.members);
      CHECK(std::binary_search(c.members.begin(), c.members.end(), c.representative));
      total += c.members.size();
      // orbit-stabilizer
      CHECK(c.members.size() * w.centralizer(c.representative).size() == w.size());
    }
    CHECK(total == w.size());
  }
}

TEST_CASE("centralizers in S3") {
  const auto a2 = WeylGroup::generate(sc(CartanType::A, 2));
  CHECK(a2.centralizer(0).size() == 6);
  for (std::size_t g = 0; g < a2.size(); ++g) {
    const IntegerMatrix& m = a2.element(g);
    const Integer tr = m(0, 0) + m(1, 1);
    if (g == 0) continue;
    // 3-cycles have trace -1, transpositions trace 0
    CHECK(a2.centralizer(g).size() == (tr == -1 ? 3u : 2u));
  }
}

TEST_CASE("group axioms and Weyl invariants") {
  for (const auto& rd : small_data()) {
    CAPTURE(rd.label().to_string());
    const auto w = WeylGroup::generate(rd);
    const auto& els = w.elements();
    CHECK(els[0] == IntegerMatrix::identity(rd.rank()));
    const std::set<IntegerVector> coroots(rd.coroots().begin(), rd.coroots().end());
    const std::set<IntegerVector> roots(rd.roots().begin(), rd.roots().end());
    for (std::size_t a = 0; a < w.size(); ++a) {
      CHECK(abs(determinant(els[a])) == 1);
      std::set<IntegerVector> image;
      for (const auto& c : rd.coroots()) image.insert(els[a] * c);
      CHECK(image == coroots);
      CHECK(els[a] * els[w.inverse(a)] == IntegerMatrix::identity(rd.rank()));
      for (std::size_t b = 0; b < w.size(); ++b) CHECK(w.multiply(a, b) == w.find(els[a] * els[b]));
    }
    for (std::size_t a = 0; a < w.size(); ++a)
      for (std::size_t g = 0; g < w.generators().size(); ++g)
        CHECK(w.cayley()[a][g] == w.multiply(a, w.generators()[g]));
    // contragredient action preserves roots and the pairing
    const auto dual_action = w.contragredient();
    for (std::size_t a = 0; a < w.size(); ++a) {
      std::set<IntegerVector> image;
      for (const auto& r : rd.roots()) image.insert(dual_action.element(a) * r);
      CHECK(image == roots);
      CHECK(dual_action.element(a).transpose() * els[a] == IntegerMatrix::identity(rd.rank()));
    }
  }
}

TEST_CASE("Weyl action is compatible with dualize") {
  for (const auto& rd : small_data()) {
    CAPTURE(rd.label().to_string());
    const auto w = WeylGroup::generate(rd);
    const auto wd = WeylGroup::generate(dualize(rd)).contragredient();
    const MatrixSet a(w.elements().begin(), w.elements().end());
    const MatrixSet b(wd.elements().begin(), wd.elements().end());
    CHECK(a == b);
  }
}

TEST_CASE("trivial group") {
  const auto t = WeylGroup::from_generators(3, {});
  CHECK(t.size() == 1);
  CHECK(t.conjugacy_classes().size() == 1);
  CHECK(t.element(0) == IntegerMatrix::identity(3));
}
