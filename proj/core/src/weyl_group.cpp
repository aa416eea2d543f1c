#include "langdual/weyl_group.hpp"

#include "langdual/error.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace langdual {

namespace {

std::int64_t checked_int64(const Integer& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw InvalidArgument("matrix entry does not fit the group-arithmetic range: " + x.str());
  return x.convert_to<std::int64_t>();
}

IntegerMatrix to_matrix(std::size_t n, const std::vector<std::int64_t>& f) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = f[i * n + j];
  return m;
}

}  // namespace

std::size_t WeylGroup::FlatHash::operator()(const Flat& f) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto x : f) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

WeylGroup::Flat WeylGroup::product(const Flat& a, const Flat& b) const {
  const std::size_t n = rank_;
  Flat c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t aik = a[i * n + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        std::int64_t t = 0;
        if (__builtin_mul_overflow(aik, b[k * n + j], &t) || __builtin_add_overflow(c[i * n + j], t, &c[i * n + j]))
          throw InvalidArgument("integer overflow in group multiplication");
      }
    }
  return c;
}

WeylGroup WeylGroup::close(std::size_t rank, const std::vector<Flat>& gens, std::size_t cap) {
  WeylGroup g;
  g.rank_ = rank;
  Flat id(rank * rank, 0);
  for (std::size_t i = 0; i < rank; ++i) id[i * rank + i] = 1;
  g.flat_.push_back(id);
  g.index_.emplace(id, 0);

  // Generators in the order given, duplicates and the identity included, so
  // cayley columns line up with the caller's list.
  std::deque<std::size_t> queue{0};
  std::vector<std::vector<std::size_t>> table;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    if (table.size() <= x) table.resize(x + 1);
    table[x].resize(gens.size());
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Flat y = g.product(g.flat_[x], gens[s]);
      auto it = g.index_.find(y);
      if (it == g.index_.end()) {
        if (g.flat_.size() >= cap)
          throw GroupTooLarge("group exceeds the cap of " + std::to_string(cap) + " elements");
        const std::size_t idx = g.flat_.size();
        g.index_.emplace(y, idx);
        g.flat_.push_back(std::move(y));
        queue.push_back(idx);
        table[x][s] = idx;
      } else {
        table[x][s] = it->second;
      }
    }
  }
  table.resize(g.flat_.size());
  g.cayley_ = std::move(table);
  for (const auto& s : gens) g.generators_.push_back(g.index_.at(s));
  g.elements_.reserve(g.flat_.size());
  for (const auto& f : g.flat_) g.elements_.push_back(to_matrix(rank, f));
  g.finish();
  return g;
}

void WeylGroup::finish() {
  const std::size_t n = rank_;
  const std::size_t order = flat_.size();
  Flat id(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;

  // Inverses: x^{-1} is the last nontrivial power before returning to 1.
  inverse_.assign(order, order);
  for (std::size_t x = 0; x < order; ++x) {
    if (inverse_[x] != order) continue;
    Flat prev = id;
    Flat cur = flat_[x];
    while (cur != id) {
      prev = cur;
      cur = product(cur, flat_[x]);
    }
    const std::size_t inv = index_.at(prev);
    inverse_[x] = inv;
    inverse_[inv] = x;
  }

  // Conjugacy classes: orbits under conjugation by generators.
  class_of_.assign(order, order);
  std::vector<ConjugacyClass> classes;
  for (std::size_t x = 0; x < order; ++x) {
    if (class_of_[x] != order) continue;
    const std::size_t c = classes.size();
    ConjugacyClass cls{x, {x}};
    class_of_[x] = c;
    std::deque<std::size_t> queue{x};
    while (!queue.empty()) {
      const std::size_t y = queue.front();
      queue.pop_front();
      for (auto s : generators_) {
        const std::size_t z = index_.at(product(product(flat_[s], flat_[y]), flat_[inverse_[s]]));
        if (class_of_[z] == order) {
          class_of_[z] = c;
          cls.members.push_back(z);
          queue.push_back(z);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.representative = *std::min_element(cls.members.begin(), cls.members.end(),
                                           [this](std::size_t a, std::size_t b) { return flat_[a] < flat_[b]; });
    classes.push_back(std::move(cls));
  }
  std::vector<std::size_t> perm(classes.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return flat_[classes[a].representative] < flat_[classes[b].representative];
  });
  classes_.clear();
  for (std::size_t k = 0; k < perm.size(); ++k) {
    for (auto m : classes[perm[k]].members) class_of_[m] = k;
    classes_.push_back(std::move(classes[perm[k]]));
  }
}

WeylGroup WeylGroup::generate(const RootDatum& rd, std::size_t cap) {
  const auto expected = weyl_group_order(rd.label().type, rd.rank());
  if (expected > cap)
    throw GroupTooLarge(std::string("group too large: |W(") + to_char(rd.label().type) + std::to_string(rd.rank()) +
                        ")| = " + std::to_string(expected) + " exceeds the cap of " + std::to_string(cap));
  return from_generators(rd.rank(), rd.simple_reflections(), cap);
}

WeylGroup WeylGroup::from_generators(std::size_t rank, const std::vector<IntegerMatrix>& generators, std::size_t cap) {
  std::vector<Flat> gens;
  for (const auto& m : generators) {
    if (m.rows() != rank || m.cols() != rank) throw InvalidArgument("generator has wrong shape");
    const Integer d = determinant(m);
    if (d != 1 && d != -1) throw InvalidArgument("generator is not invertible over Z");
    Flat f;
    for (const auto& e : m.entries()) f.push_back(checked_int64(e));
    gens.push_back(std::move(f));
  }
  return close(rank, gens, cap);
}

std::size_t WeylGroup::multiply(std::size_t a, std::size_t b) const {
  return index_.at(product(flat_[a], flat_[b]));
}

std::size_t WeylGroup::find(const IntegerMatrix& m) const {
  if (m.rows() != rank_ || m.cols() != rank_) return size();
  Flat f;
  for (const auto& e : m.entries()) {
    if (e > std::numeric_limits<std::int64_t>::max() || e < std::numeric_limits<std::int64_t>::min()) return size();
    f.push_back(e.convert_to<std::int64_t>());
  }
  auto it = index_.find(f);
  return it == index_.end() ? size() : it->second;
}

std::vector<std::size_t> WeylGroup::centralizer(std::size_t w) const {
  std::vector<std::size_t> out;
  for (std::size_t z = 0; z < size(); ++z)
    if (product(flat_[z], flat_[w]) == product(flat_[w], flat_[z])) out.push_back(z);
  return out;
}

WeylGroup WeylGroup::contragredient() const {
  WeylGroup g;
  g.rank_ = rank_;
  const std::size_t n = rank_;
  g.flat_.resize(size());
  for (std::size_t x = 0; x < size(); ++x) {
    const Flat& inv = flat_[inverse_[x]];
    Flat t(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t[j * n + i] = inv[i * n + j];
    g.index_.emplace(t, x);
    g.flat_[x] = std::move(t);
  }
  g.generators_ = generators_;
  g.cayley_ = cayley_;
  for (const auto& f : g.flat_) g.elements_.push_back(to_matrix(n, f));
  g.finish();
  return g;
}

}  // namespace langdual
