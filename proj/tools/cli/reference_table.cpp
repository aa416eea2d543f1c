#include "reference_table.hpp"

namespace langdual::cli {

const std::vector<ReferenceTableRow>& reference_table() {
  static const std::vector<ReferenceTableRow> rows = {
      {"A_n = SU_{n+1}", "PSU_{n+1}", "n+1", CartanType::A, 2, "sc", "adjoint", 3},
      {"B_n = SO_{2n+1}", "Sp_{2n}", "2", CartanType::B, 2, "adjoint", "sc", 2},
      {"C_n = Sp_{2n}", "SO_{2n+1}", "2", CartanType::C, 2, "sc", "adjoint", 2},
      {"D_n = SO_{2n}", "SO_{2n}", "4", CartanType::D, 4, "so", "so", 4},
      {"E_6", "E_6", "3", CartanType::E, 6, "sc", "adjoint", 3},
      {"E_7", "E_7", "2", CartanType::E, 7, "sc", "adjoint", 2},
      {"E_8", "E_8", "1", CartanType::E, 8, "sc", "sc", 1},
      {"F_4", "F_4", "1", CartanType::F, 4, "sc", "sc", 1},
      {"G_2", "G_2", "1", CartanType::G, 2, "sc", "sc", 1},
  };
  return rows;
}

RowResult check_row(const ReferenceTableRow& row) {
  RowResult r;
  r.row = row;
  const RootDatum rd = build_simple(row.type, row.rank, GroupForm::parse(row.form, row.type, row.rank));
  const RootDatum dual = dualize(rd);
  r.computed_label = rd.label().to_string();
  r.computed_dual = dual.label().to_string();
  r.computed_f = connection_index(rd).convert_to<std::uint64_t>();
  r.computed_dual_f = connection_index(dual).convert_to<std::uint64_t>();
  r.f_ok = r.computed_f == row.connection_index && r.computed_dual_f == row.connection_index;
  const RootDatumLabel expected{dual_type(row.type), row.rank, row.dual_form};
  r.dual_ok = dual.label() == expected;
  return r;
}

}  // namespace langdual::cli
