#pragma once

#include "langdual/exact_linalg.hpp"
#include "langdual/root_datum.hpp"

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace langdual {

inline constexpr std::size_t kDefaultWeylCap = 2'000'000;

struct ConjugacyClass {
  std::size_t representative;    // lexicographically minimal member
  std::vector<std::size_t> members;  // sorted
};

// A finite group of integer matrices acting on Z^n, enumerated in full.
// For a root datum the action is on X_*; the action on X^* is the inverse
// transpose (see contragredient()).
//
// Element 0 is always the identity. Elements are indexed in breadth-first
// order over the generators, so indices are reproducible.
class WeylGroup {
 public:
  // Closure of the simple reflections of rd acting on X_*. Throws
  // GroupTooLarge when |W| (known in advance from the type) exceeds cap.
  static WeylGroup generate(const RootDatum& rd, std::size_t cap = kDefaultWeylCap);

  // Closure of arbitrary invertible integer matrices. An empty generator list
  // gives the trivial group.
  static WeylGroup from_generators(std::size_t rank, const std::vector<IntegerMatrix>& generators,
                                   std::size_t cap = kDefaultWeylCap);

  std::size_t size() const { return elements_.size(); }
  std::size_t rank() const { return rank_; }
  const IntegerMatrix& element(std::size_t i) const { return elements_[i]; }
  const std::vector<IntegerMatrix>& elements() const { return elements_; }
  // Element indices of the generators.
  const std::vector<std::size_t>& generators() const { return generators_; }
  // cayley()[i][g] = index of element(i) * element(generators()[g]).
  const std::vector<std::vector<std::size_t>>& cayley() const { return cayley_; }

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  // Index of a matrix, or size() if it is not in the group.
  std::size_t find(const IntegerMatrix& m) const;

  const std::vector<ConjugacyClass>& conjugacy_classes() const { return classes_; }
  std::size_t class_of(std::size_t element) const { return class_of_[element]; }
  // {z : zw = wz}, sorted element indices.
  std::vector<std::size_t> centralizer(std::size_t w) const;
  bool commute(std::size_t a, std::size_t b) const { return multiply(a, b) == multiply(b, a); }

  // Same abstract group acting by w^{-T}; element i corresponds to element i.
  WeylGroup contragredient() const;

 private:
  using Flat = std::vector<std::int64_t>;
  struct FlatHash {
    std::size_t operator()(const Flat& f) const noexcept;
  };

  WeylGroup() = default;
  static WeylGroup close(std::size_t rank, const std::vector<Flat>& gens, std::size_t cap);
  Flat product(const Flat& a, const Flat& b) const;
  void finish();

  std::size_t rank_ = 0;
  std::vector<Flat> flat_;
  std::vector<IntegerMatrix> elements_;
  std::unordered_map<Flat, std::size_t, FlatHash> index_;
  std::vector<std::size_t> generators_;
  std::vector<std::vector<std::size_t>> cayley_;
  std::vector<std::size_t> inverse_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
};

}  // namespace langdual
