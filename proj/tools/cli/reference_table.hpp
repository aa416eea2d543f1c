#pragma once

#include "langdual/root_datum.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace langdual::cli {

// One row of the table of Langlands duals, with the representative datum
// used to check it.
struct ReferenceTableRow {
  std::string group;     // as printed, e.g. "A_n = SU_{n+1}"
  std::string dual;      // e.g. "PSU_{n+1}"
  std::string f;         // e.g. "n+1"
  CartanType type;
  std::size_t rank;      // smallest valid rank
  std::string form;      // form tag of the representative
  std::string dual_form; // expected form tag of its dual
  std::uint64_t connection_index;  // f at that rank
};

const std::vector<ReferenceTableRow>& reference_table();

struct RowResult {
  ReferenceTableRow row;
  std::string computed_label;
  std::string computed_dual;  // label of dualize(representative)
  std::uint64_t computed_f = 0;
  std::uint64_t computed_dual_f = 0;
  bool f_ok = false;
  bool dual_ok = false;
  bool passed() const { return f_ok && dual_ok; }
};

RowResult check_row(const ReferenceTableRow& row);

}  // namespace langdual::cli
