#pragma once

#include "langdual/exact_linalg.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace langdual {

enum class CartanType { A, B, C, D, E, F, G };

char to_char(CartanType t);
// Accepts a single letter A-G (case-insensitive); throws InvalidArgument.
CartanType parse_cartan_type(const std::string& s);

// Whether (type, rank) names a simple root system.
bool is_valid_type(CartanType t, std::size_t rank);

// Bourbaki numbering; entry (i, j) is <alpha_i^vee, alpha_j>.
IntegerMatrix cartan_matrix(CartanType t, std::size_t rank);

// |W| from the product of the degrees. Saturates at UINT64_MAX (never hit
// for simple types of rank <= 8).
std::uint64_t weyl_group_order(CartanType t, std::size_t rank);

// Isogeny form. A quotient is described by generators of a subgroup of
// P^vee / Q^vee given in fundamental-coweight coordinates; the resulting
// cocharacter lattice is Q^vee + span(generators).
struct GroupForm {
  enum class Kind { simply_connected, adjoint, quotient };
  Kind kind = Kind::simply_connected;
  std::vector<IntegerVector> generators;

  static GroupForm simply_connected() { return {Kind::simply_connected, {}}; }
  static GroupForm adjoint() { return {Kind::adjoint, {}}; }
  static GroupForm quotient(std::vector<IntegerVector> gens) { return {Kind::quotient, std::move(gens)}; }

  // Named forms: "sc", "adjoint" (or "adj"), "so" and "ss"/"ss'" (D_n
  // special orthogonal and half-spin quotients), "quotient:d" (A_n, the
  // quotient of SU(n+1) by its order-d central subgroup).
  static GroupForm parse(const std::string& tag, CartanType t, std::size_t rank);
};

struct RootDatumLabel {
  CartanType type = CartanType::A;
  std::size_t rank = 0;
  std::string form;  // canonical tag, see GroupForm::parse

  std::string to_string() const;  // e.g. "A2 sc"
  bool operator==(const RootDatumLabel&) const = default;
};

// (X^*, R, X_*, R^vee) in dual coordinates: X^* = Z^rank, X_* = Z^rank and the
// pairing is the dot product. roots[k] pairs with coroots[k]. Root/coroot
// pairs are kept sorted lexicographically by root.
class RootDatum {
 public:
  RootDatum(RootDatumLabel label, std::vector<IntegerVector> roots, std::vector<IntegerVector> coroots,
            std::vector<std::size_t> simple_indices);

  const RootDatumLabel& label() const { return label_; }
  std::size_t rank() const { return label_.rank; }
  const std::vector<IntegerVector>& roots() const { return roots_; }
  const std::vector<IntegerVector>& coroots() const { return coroots_; }
  // simple_indices()[i] is the position of alpha_{i+1} (Bourbaki order).
  const std::vector<std::size_t>& simple_indices() const { return simple_; }

  // Columns are the roots / coroots.
  IntegerMatrix root_matrix() const;
  IntegerMatrix coroot_matrix() const;
  // Reflection s_alpha on X_* for the k-th root: x -> x - <alpha, x> alpha^vee.
  IntegerMatrix reflection(std::size_t k) const;
  std::vector<IntegerMatrix> simple_reflections() const;

  bool operator==(const RootDatum&) const = default;

 private:
  RootDatumLabel label_;
  std::vector<IntegerVector> roots_;
  std::vector<IntegerVector> coroots_;
  std::vector<std::size_t> simple_;
};

inline constexpr std::size_t kDefaultRankCap = 8;

RootDatum build_simple(CartanType t, std::size_t rank, const GroupForm& form, std::size_t rank_cap = kDefaultRankCap);

// Swap (X^*, R) with (X_*, R^vee).
RootDatum dualize(const RootDatum& rd);

// X_* / Z R^vee.
FiniteAbelianGroup fundamental_group(const RootDatum& rd);
// X^* / Z R.
FiniteAbelianGroup center(const RootDatum& rd);
// |pi_1| * |Z|.
Integer connection_index(const RootDatum& rd);

// Canonical form tag of an arbitrary datum of the given type, computed from
// where X_* sits between the coroot and coweight lattices.
std::string identify_form(CartanType t, const RootDatum& rd);

// Type of the dual root system: B <-> C, everything else fixed.
CartanType dual_type(CartanType t);

}  // namespace langdual
