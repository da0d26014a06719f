#include "hurwitz/json_io.hpp"

#include "hurwitz/error.hpp"

namespace hurwitz::io {

namespace {

json elems_to_json(const std::vector<FieldElem>& v) {
    json out = json::array();
    for (const auto& e : v) out.push_back(e.to_string());
    return out;
}

FieldElem elem_from_json(const json& j, const FieldSpec& spec) {
    if (j.is_string()) return parse_elem(j.get<std::string>(), spec);
    if (j.is_number_integer()) return FieldElem::from_integer(j.get<long>(), spec);
    throw ParseError(0, "field element must be a string or an integer");
}

const json& member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(0, std::string("missing key \"") + key + "\"");
    return j.at(key);
}

FieldSpec field_of(const json& j) {
    const json& f = member(j, "field");
    if (!f.is_string()) throw ParseError(0, "\"field\" must be a string");
    return FieldSpec::parse(f.get<std::string>());
}

std::vector<FieldElem> elems_from_json(const json& arr, const FieldSpec& spec) {
    if (!arr.is_array()) throw ParseError(0, "expected an array of field elements");
    std::vector<FieldElem> out;
    for (const auto& e : arr) out.push_back(elem_from_json(e, spec));
    return out;
}

}  // namespace

json series_to_json(const HurwitzSeries& s, Precision p) {
    return {{"field", s.spec().to_string()}, {"coeffs", elems_to_json(s.truncate(p))}};
}

HurwitzSeries series_from_json(const json& j) {
    const FieldSpec spec = field_of(j);
    return HurwitzSeries::finite(spec, elems_from_json(member(j, "coeffs"), spec));
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_string());
        rows.push_back(std::move(row));
    }
    return {{"field", m.spec().to_string()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const json& j) {
    const FieldSpec spec = field_of(j);
    const json& entries = member(j, "entries");
    if (!entries.is_array()) throw ParseError(0, "\"entries\" must be an array of rows");
    std::vector<std::vector<FieldElem>> rows;
    for (const auto& row : entries) rows.push_back(elems_from_json(row, spec));
    Matrix m = Matrix::from_rows(rows, spec);
    if (j.contains("rows") && j.at("rows") != m.rows()) throw Error(ErrorKind::ShapeMismatch, "\"rows\" disagrees with entries");
    if (j.contains("cols") && j.at("cols") != m.cols()) throw Error(ErrorKind::ShapeMismatch, "\"cols\" disagrees with entries");
    return m;
}

json operator_to_json(const LinearOperator& op, Precision p) {
    json coeffs = json::array();
    if (op.is_constant()) {
        for (const auto& c : op.constants()) coeffs.push_back(c.to_string());
    } else {
        for (const auto& h : op.coeffs()) coeffs.push_back(series_to_json(h, p));
    }
    return {{"field", op.spec().to_string()}, {"order", op.order()}, {"coeffs", std::move(coeffs)}};
}

LinearOperator operator_from_json(const json& j) {
    const FieldSpec spec = field_of(j);
    const json& coeffs = member(j, "coeffs");
    if (!coeffs.is_array()) throw ParseError(0, "\"coeffs\" must be an array");
    if (j.contains("order") && j.at("order") != coeffs.size()) {
        throw Error(ErrorKind::ArityMismatch, "\"order\" disagrees with the number of coefficients");
    }
    bool all_scalar = true;
    for (const auto& c : coeffs) all_scalar = all_scalar && !c.is_object();
    if (all_scalar) return LinearOperator::with_constants(elems_from_json(coeffs, spec), spec);

    std::vector<HurwitzSeries> series;
    for (const auto& c : coeffs) {
        if (c.is_object()) {
            HurwitzSeries s = series_from_json(c);
            if (!(s.spec() == spec)) throw Error(ErrorKind::MixedFields, "coefficient series over another field");
            series.push_back(std::move(s));
        } else {
            series.push_back(HurwitzSeries::constant(elem_from_json(c, spec)));
        }
    }
    return LinearOperator::with_series(std::move(series), spec);
}

json descriptor_to_json(const GroupDescriptor& g) {
    json basis = json::array();
    for (const auto& m : g.algebra_basis) basis.push_back(matrix_to_json(m));
    return {{"field", g.spec.to_string()},
            {"n", g.n},
            {"B", matrix_to_json(g.b)},
            {"constraint", g.constraint == GroupConstraint::InvertibleOnly ? "invertible" : "fixes_constants"},
            {"algebra_basis", std::move(basis)}};
}

json spectral_to_json(const SpectralData& sd) {
    return {{"field", sd.spec.to_string()},
            {"roots", elems_to_json(sd.roots)},
            {"multiplicities", sd.multiplicities},
            {"S", matrix_to_json(sd.s)},
            {"N", matrix_to_json(sd.nilpotent)},
            {"T", matrix_to_json(sd.t)}};
}

json blocks_to_json(const std::vector<BlockGroup>& blocks) {
    json out = json::array();
    for (const auto& b : blocks) {
        out.push_back({{"root", b.root.to_string()},
                       {"offset", b.offset},
                       {"size", b.size},
                       {"unipotent_required", b.unipotent_required}});
    }
    return out;
}

json family_to_json(const ParametricFamily& f) {
    json entries = json::array();
    const std::size_t n = f.generators.empty() ? 0 : f.generators.front().rows();
    for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < n; ++k) row.push_back(f.entry(i, k));
        entries.push_back(std::move(row));
    }
    return {{"params", f.params}, {"entries", std::move(entries)}, {"conditions", f.conditions}};
}

}  // namespace hurwitz::io
