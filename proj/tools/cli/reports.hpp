#pragma once

#include "reference_table.hpp"

#include "langdual/equivariant_k.hpp"
#include "langdual/oscillator.hpp"
#include "langdual/poincare_pairing.hpp"
#include "langdual/root_datum.hpp"
#include "langdual/torus_fixed_points.hpp"

#include <json.hpp>

namespace langdual::cli {

using Json = nlohmann::ordered_json;

// {type, rank, form, roots, coroots}
Json to_json(const RootDatum& rd);
Json to_json(const GradedRank& k);
Json to_json(const ClassContribution& c);
// {type, rank, form, primal:{k0,k1}, dual:{k0,k1}, verdict, classes}
Json to_json(const DualityReport& r);
Json to_json(const AffineReport& r);
Json to_json(const FixedSetReport& r);
// {dim, grid, halfwidth, eigenvalues, kernel_dim, kernel_parity, residual_max}
Json to_json(const SpectralReport& r);
Json to_json(const PoincareSuiteResult& r);
Json to_json(const RowResult& r);

Json to_json(const IntegerVector& v);
Json to_json(const RationalVector& v);

}  // namespace langdual::cli
