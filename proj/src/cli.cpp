#include "hurwitz/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hurwitz/diffgalois.hpp"
#include "hurwitz/error.hpp"
#include "hurwitz/json_io.hpp"
#include "hurwitz/linode.hpp"

namespace hurwitz::cli {

namespace {

using nlohmann::json;

constexpr std::size_t kDefaultPrecision = 32;

constexpr const char* kOperatorHelp =
    "Operators are monic: L(y) = y^(n) + a_{n-1} y^(n-1) + ... + a_0 y, so the characteristic "
    "polynomial is X^n + a_{n-1} X^{n-1} + ... + a_0. Give constant coefficients as --coeffs "
    "\"a0,a1,...\"; series coefficients only via --operator FILE (JSON), where finite coefficient "
    "lists are padded with zeros, which fixes the operator beyond the supplied truncation. "
    "Non-monic operators must be divided through by the leading coefficient first.";

struct Common {
    std::string field = "Q";
    std::size_t precision = kDefaultPrecision;
    bool precision_given = false;
    std::string format;
};

struct OperatorInput {
    std::string coeffs;
    std::string file;
};

struct SeriesInput {
    std::vector<std::string> lists;
    std::string file;
};

void add_common(CLI::App* cmd, Common& c, const char* default_format) {
    cmd->add_option("--field", c.field, "\"Q\" or \"gf:<p>\"")->capture_default_str();
    cmd->add_option("--precision", c.precision, "number of leading coefficients")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--format", c.format, std::string("table or json (default ") + default_format + ")")
        ->check(CLI::IsMember({"table", "json"}));
}

void add_operator(CLI::App* cmd, OperatorInput& in, bool required) {
    auto* coeffs = cmd->add_option("--coeffs", in.coeffs, "constant coefficients a0,...,a_{n-1}");
    auto* file = cmd->add_option("--operator", in.file, "operator JSON file");
    coeffs->excludes(file);
    if (required) cmd->require_option(1, 0);
}

void add_series(CLI::App* cmd, SeriesInput& in, const char* name, const char* help) {
    cmd->add_option(name, in.lists, help);
    cmd->add_option(std::string(name) + "-file", in.file,
                    "JSON file holding a series object or an array of them");
}

json read_json_file(const std::string& path) {
    std::ifstream stream(path);
    if (!stream) throw ParseError(0, "cannot open \"" + path + "\"");
    try {
        return json::parse(stream);
    } catch (const json::parse_error& e) {
        throw ParseError(e.byte, std::string("invalid JSON in \"") + path + "\"");
    }
}

FieldSpec field_of(const Common& c) { return FieldSpec::parse(c.field); }

std::optional<LinearOperator> read_operator(const OperatorInput& in, const FieldSpec& spec) {
    if (!in.file.empty()) {
        LinearOperator op = io::operator_from_json(read_json_file(in.file));
        if (!(op.spec() == spec)) {
            throw Error(ErrorKind::MixedFields, "operator file is over " + op.spec().to_string() + ", --field is " +
                                                    spec.to_string());
        }
        return op;
    }
    if (!in.coeffs.empty()) return LinearOperator::with_constants(parse_elem_list(in.coeffs, spec), spec);
    return std::nullopt;
}

LinearOperator require_operator(const OperatorInput& in, const FieldSpec& spec) {
    auto op = read_operator(in, spec);
    if (!op) throw ParseError(0, "an operator is required (--coeffs or --operator)");
    return *op;
}

/// Finite series as given, with their supplied lengths.
std::vector<std::pair<HurwitzSeries, std::size_t>> read_series(const SeriesInput& in, const FieldSpec& spec) {
    std::vector<std::pair<HurwitzSeries, std::size_t>> out;
    for (const auto& text : in.lists) {
        auto coeffs = parse_elem_list(text, spec);
        const std::size_t len = coeffs.size();
        out.emplace_back(HurwitzSeries::finite(spec, std::move(coeffs)), len);
    }
    if (!in.file.empty()) {
        json j = read_json_file(in.file);
        std::vector<json> items = j.is_array() ? j.get<std::vector<json>>() : std::vector<json>{j};
        for (const auto& item : items) {
            HurwitzSeries s = io::series_from_json(item);
            if (!(s.spec() == spec)) throw Error(ErrorKind::MixedFields, "series file is over another field");
            out.emplace_back(s, item.at("coeffs").size());
        }
    }
    return out;
}

Matrix parse_matrix(const std::string& text, const FieldSpec& spec) {
    std::vector<std::vector<FieldElem>> rows;
    std::stringstream stream(text);
    std::string row;
    while (std::getline(stream, row, ';')) rows.push_back(parse_elem_list(row, spec));
    return Matrix::from_rows(rows, spec);
}

void print_series_list(std::ostream& out, const std::vector<HurwitzSeries>& series, Precision p,
                       const std::string& format) {
    if (format == "json") {
        json arr = json::array();
        for (const auto& s : series) arr.push_back(io::series_to_json(s, p));
        out << (series.size() == 1 ? arr.front() : arr).dump(2) << '\n';
        return;
    }
    for (const auto& s : series) {
        const auto coeffs = s.truncate(p);
        for (std::size_t i = 0; i < coeffs.size(); ++i) out << (i ? " " : "") << coeffs[i].to_string();
        out << '\n';
    }
}

void print_matrix_table(std::ostream& out, const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j).to_string();
        out << '\n';
    }
}

void print_family_table(std::ostream& out, const ParametricFamily& f) {
    out << "params";
    for (const auto& p : f.params) out << ' ' << p;
    out << '\n';
    const std::size_t n = f.generators.front().rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out << (j ? " " : "") << f.entry(i, j);
        out << '\n';
    }
    out << "conditions";
    for (const auto& c : f.conditions) out << ' ' << '[' << c << ']';
    out << '\n';
}

std::optional<SpectralData> try_spectral(const LinearOperator& op) {
    try {
        return spectral_data(op);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotSplitOverK) return std::nullopt;
        throw;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Hurwitz series, linear ODE solutions and their differential automorphism groups"};
    app.name(args.empty() ? "hurwitz" : args.front());
    app.require_subcommand(1);
    app.footer(kOperatorHelp);

    Common common;
    OperatorInput op_in;
    SeriesInput series_in;
    SeriesInput lhs_in;
    SeriesInput rhs_in;
    std::string ic;
    std::string beta;
    std::string matrix_text;
    std::string matrix_file;

    auto* solve = app.add_subcommand("solve", "solve L(y) = 0 with initial values pi_0..pi_{n-1}");
    add_common(solve, common, "table");
    add_operator(solve, op_in, false);
    solve->add_option("--ic", ic, "initial values c0,...,c_{n-1}")->required();

    auto* basis = app.add_subcommand("basis", "standard solution basis, pi_{i-1}(y_j) = delta_ij");
    add_common(basis, common, "table");
    add_operator(basis, op_in, false);

    auto* apply_cmd = app.add_subcommand(
        "apply", "apply L to a finite series; prints only coefficients fixed by the supplied prefix");
    add_common(apply_cmd, common, "table");
    add_operator(apply_cmd, op_in, false);
    add_series(apply_cmd, series_in, "--series", "coefficients of the input series");

    auto* mul = app.add_subcommand("mul", "Hurwitz product of two finite series");
    add_common(mul, common, "table");
    add_series(mul, lhs_in, "--lhs", "left factor coefficients");
    add_series(mul, rhs_in, "--rhs", "right factor coefficients");

    auto* exp_cmd = app.add_subcommand("exp", "exponential (1, beta, beta^2, ...)");
    add_common(exp_cmd, common, "table");
    exp_cmd->add_option("--beta", beta, "field element")->required();

    auto* wr = app.add_subcommand("wronskian", "Wronskian of finite series, or of an operator's solution basis");
    add_common(wr, common, "table");
    add_operator(wr, op_in, false);
    add_series(wr, series_in, "--series", "one series per occurrence");

    auto* from_basis = app.add_subcommand("from-basis", "monic operator annihilating the given series");
    add_common(from_basis, common, "table");
    add_operator(from_basis, op_in, false);
    add_series(from_basis, series_in, "--series", "one series per occurrence");

    auto* group = app.add_subcommand("group", "differential automorphism group of the solution space");
    add_common(group, common, "json");
    add_operator(group, op_in, false);

    auto* spectral = app.add_subcommand("spectral", "Jordan data when the characteristic polynomial splits");
    add_common(spectral, common, "json");
    add_operator(spectral, op_in, false);

    auto* act_cmd = app.add_subcommand("act", "image Y*C of the standard basis under a group member C");
    add_common(act_cmd, common, "table");
    add_operator(act_cmd, op_in, false);
    act_cmd->add_option("--matrix", matrix_text, "row-major entries, rows separated by ';'");
    act_cmd->add_option("--matrix-file", matrix_file, "matrix JSON file");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: usage: " << e.what() << '\n';
        return kExitUsage;
    }

    CLI::App* used = app.get_subcommands().front();
    for (const auto* opt : used->get_options()) {
        if (opt->get_name() == "--precision" && opt->count() > 0) common.precision_given = true;
    }
    if (common.format.empty()) common.format = (used == group || used == spectral) ? "json" : "table";

    try {
        const FieldSpec spec = field_of(common);
        const Precision p(common.precision);
        const std::string& format = common.format;

        if (used == solve) {
            const LinearOperator op = require_operator(op_in, spec);
            print_series_list(out, {solve_ivp(op, parse_elem_list(ic, spec))}, p, format);
        } else if (used == basis) {
            print_series_list(out, solution_basis(require_operator(op_in, spec)).basis, p, format);
        } else if (used == apply_cmd) {
            const LinearOperator op = require_operator(op_in, spec);
            auto inputs = read_series(series_in, spec);
            if (inputs.size() != 1) throw ParseError(0, "apply takes exactly one series");
            const auto& [h, len] = inputs.front();
            if (len <= op.order()) throw ParseError(0, "series must have more coefficients than the operator order");
            std::size_t determined = len - op.order();
            if (common.precision_given) determined = std::min(determined, common.precision);
            print_series_list(out, {apply(op, h)}, Precision(determined), format);
        } else if (used == mul) {
            auto lhs = read_series(lhs_in, spec);
            auto rhs = read_series(rhs_in, spec);
            if (lhs.size() != 1 || rhs.size() != 1) throw ParseError(0, "mul takes one --lhs and one --rhs series");
            print_series_list(out, {lhs.front().first * rhs.front().first}, p, format);
        } else if (used == exp_cmd) {
            print_series_list(out, {HurwitzSeries::exponential(parse_elem(beta, spec))}, p, format);
        } else if (used == wr || used == from_basis) {
            std::vector<HurwitzSeries> series;
            if (auto op = read_operator(op_in, spec)) {
                series = solution_basis(*op).basis;
            }
            for (auto& [s, len] : read_series(series_in, spec)) series.push_back(s);
            if (series.empty()) throw ParseError(0, "no series given");
            if (used == wr) {
                print_series_list(out, {wronskian(series, p)}, p, format);
            } else {
                LinearOperator op = operator_from_basis(series, p);
                if (auto constant = op.as_constant(p)) op = *constant;
                if (format == "json") {
                    out << io::operator_to_json(op, p).dump(2) << '\n';
                } else if (op.is_constant()) {
                    const auto a = op.constants();
                    for (std::size_t i = 0; i < a.size(); ++i) out << (i ? " " : "") << a[i].to_string();
                    out << '\n';
                } else {
                    print_series_list(out, op.coeffs(), p, format);
                }
            }
        } else if (used == group) {
            const LinearOperator op = require_operator(op_in, spec);
            const GroupDescriptor g = group_descriptor(op);
            const ParametricFamily general = descriptor_family(g);
            const auto sd = try_spectral(op);
            if (format == "json") {
                json j = io::descriptor_to_json(g);
                j["family"] = io::family_to_json(general);
                if (sd) {
                    const auto blocks = block_group_decomposition(*sd);
                    j["spectral"] = io::spectral_to_json(*sd);
                    j["blocks"] = io::blocks_to_json(blocks);
                    j["block_family"] = io::family_to_json(block_family(*sd, blocks));
                } else {
                    j["spectral"] = nullptr;
                }
                out << j.dump(2) << '\n';
            } else {
                out << "field " << spec.to_string() << '\n';
                out << "n " << g.n << '\n';
                out << "constraint "
                    << (g.constraint == GroupConstraint::InvertibleOnly ? "invertible" : "fixes_constants") << '\n';
                out << "B\n";
                print_matrix_table(out, g.b);
                out << "family\n";
                print_family_table(out, general);
                if (sd) {
                    out << "block_family\n";
                    print_family_table(out, block_family(*sd, block_group_decomposition(*sd)));
                }
            }
        } else if (used == spectral) {
            const SpectralData sd = spectral_data(require_operator(op_in, spec));
            const auto blocks = block_group_decomposition(sd);
            if (format == "json") {
                json j = io::spectral_to_json(sd);
                j["blocks"] = io::blocks_to_json(blocks);
                out << j.dump(2) << '\n';
            } else {
                out << "roots";
                for (const auto& r : sd.roots) out << ' ' << r.to_string();
                out << "\nmultiplicities";
                for (auto m : sd.multiplicities) out << ' ' << m;
                out << "\nS\n";
                print_matrix_table(out, sd.s);
                out << "N\n";
                print_matrix_table(out, sd.nilpotent);
                out << "T\n";
                print_matrix_table(out, sd.t);
            }
        } else if (used == act_cmd) {
            const LinearOperator op = require_operator(op_in, spec);
            if (matrix_text.empty() == matrix_file.empty()) throw ParseError(0, "give exactly one of --matrix, --matrix-file");
            const Matrix c = matrix_text.empty() ? io::matrix_from_json(read_json_file(matrix_file))
                                                 : parse_matrix(matrix_text, spec);
            if (!(c.spec() == spec)) throw Error(ErrorKind::MixedFields, "matrix file is over another field");
            print_series_list(out, act(c, solution_basis(op)), p, format);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        const bool usage = e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::InvalidArgument;
        return usage ? kExitUsage : kExitMathError;
    }
    return kExitOk;
}

}  // namespace hurwitz::cli
