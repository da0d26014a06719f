#pragma once

// JSON forms of series, matrices, operators and groups. Elements are always
// canonical strings ("a/b" or least residue).

#include <vector>

#include <json.hpp>

#include "hurwitz/diffgalois.hpp"
#include "hurwitz/linode.hpp"
#include "hurwitz/matrix.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz::io {

using nlohmann::json;

// {"field": "Q"|"gf:p", "coeffs": ["...", ...]}
json series_to_json(const HurwitzSeries& s, Precision p);
/// Finite truncation, zero padded. Throws ParseError.
HurwitzSeries series_from_json(const json& j);

// {"field": ..., "rows": n, "cols": m, "entries": [[...], ...]}
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

// {"field": ..., "order": n, "coeffs": [<series or scalar>, ...]}
json operator_to_json(const LinearOperator& op, Precision p);
LinearOperator operator_from_json(const json& j);

// {"field": ..., "n": ..., "B": ..., "constraint": "invertible"|"fixes_constants", "algebra_basis": [...]}
json descriptor_to_json(const GroupDescriptor& g);
// {"field", "roots", "multiplicities", "S", "N", "T"}
json spectral_to_json(const SpectralData& sd);
json blocks_to_json(const std::vector<BlockGroup>& blocks);
// {"params": [...], "entries": [[...]], "conditions": [...]}
json family_to_json(const ParametricFamily& f);

}  // namespace hurwitz::io
