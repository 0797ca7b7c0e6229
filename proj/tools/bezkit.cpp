// bezkit: command-line front end. Reads polynomial JSON documents, runs the
// bezout / nullspace / common-root / gcd / convert / verify-kernel
// operations and writes JSON results. Exit status: 0 success, 1 domain
// error, 2 malformed input, with {"error","detail"} on stderr.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bezout/bezout.hpp"
#include "bezout/serialization.hpp"

namespace {

using bezout::Json;

struct JobConfig {
    std::string command;
    std::vector<std::string> inputs;
    std::string basis_spec;  // "", "native", shorthand or a JSON basis object
    std::string method;      // gcd only
    std::string to_spec;     // convert only
    std::string roots_json;  // verify-kernel only
    std::string scalar = "exact";
    double tol = bezout::kDefaultTol;
    std::string output; // empty = stdout
};

// Resolves a --basis argument against the required Bezout basis degree.
// Shorthands adapt their degree; a JSON object must match exactly.
template <class K>
bezout::Basis<K> resolve_basis_spec(const std::string& spec, std::size_t degree) {
    if (spec == "monomial") return bezout::Basis<K>::monomial(degree);
    if (spec == "bernstein") return bezout::Basis<K>::bernstein(degree);
    Json j = Json::parse(spec, nullptr, false);
    if (j.is_discarded())
        bezout::fail("MalformedJson", "--basis is neither a shorthand nor a JSON object");
    bezout::Basis<K> basis = bezout::basis_from_json<K>(j, "--basis");
    if (basis.degree() != degree)
        bezout::fail("BasisDegreeMismatch",
                     "--basis must have degree " + std::to_string(degree));
    return basis;
}

// Default basis for a Bezout matrix over the given inputs: the degree-(n-1)
// truncation of their shared basis, or the monomial basis when they disagree.
template <class K>
bezout::Basis<K> auto_basis(const std::vector<bezout::Poly<K>>& ps, std::size_t target_degree) {
    for (const auto& p : ps)
        if (!(p.basis == ps.front().basis)) return bezout::Basis<K>::monomial(target_degree);
    return bezout::truncated_to_degree(ps.front().basis, target_degree);
}

template <class K>
bezout::Basis<K> pick_basis(const JobConfig& cfg, const std::vector<bezout::Poly<K>>& ps,
                            std::size_t target_degree, bool allow_native) {
    if (cfg.basis_spec.empty()) return auto_basis(ps, target_degree);
    if (cfg.basis_spec == "native") {
        if (!allow_native)
            bezout::fail("BadArguments", "--basis native is only valid for gcd");
        for (const auto& p : ps)
            if (!(p.basis == ps.front().basis))
                bezout::fail("MixedBases", "native basis requested but inputs disagree");
        return bezout::truncated_to_degree(ps.front().basis, target_degree);
    }
    return resolve_basis_spec<K>(cfg.basis_spec, target_degree);
}

template <class K>
std::size_t max_effective_degree(const std::vector<bezout::Poly<K>>& ps, double tol) {
    int n = -1;
    for (const auto& p : ps) n = std::max(n, bezout::effective_degree(p, tol));
    if (n < 1) bezout::fail("BadDegree", "inputs must contain a polynomial of degree >= 1");
    return static_cast<std::size_t>(n);
}

template <class K>
bezout::KernelDescription<K> roots_from_json(const std::string& text, std::size_t n) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) bezout::fail("MalformedJson", "--roots is not valid JSON");
    if (!j.is_array()) bezout::fail("SchemaViolation", "--roots: expected an array");
    bezout::KernelDescription<K> desc;
    desc.n = n;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string path = "--roots/" + std::to_string(i);
        bezout::detail::require_object_keys(j[i], path, {"root", "multiplicity"});
        if (!j[i]["root"].is_string())
            bezout::fail("SchemaViolation", path + "/root: expected a rational string");
        if (!j[i]["multiplicity"].is_number_integer())
            bezout::fail("SchemaViolation", path + "/multiplicity: expected an integer");
        desc.blocks.push_back({bezout::scalar_from_string<K>(j[i]["root"].get<std::string>()),
                               j[i]["multiplicity"].get<int>()});
    }
    return desc;
}

void emit(const JobConfig& cfg, const Json& result) {
    const std::string text = result.dump(2) + "\n";
    if (cfg.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(cfg.output);
        if (!out) bezout::fail("BadArguments", "cannot open output file \"" + cfg.output + "\"");
        out << text;
    }
}

template <class K>
int run(const JobConfig& cfg) {
    const double tol = cfg.tol;
    std::vector<bezout::Poly<K>> ps;
    ps.reserve(cfg.inputs.size());
    for (const auto& file : cfg.inputs) ps.push_back(bezout::parse_poly_file<K>(file));
    const bool is_float = !bezout::ScalarTraits<K>::is_exact;

    if (cfg.command == "bezout") {
        const std::size_t n = max_effective_degree(ps, tol);
        const auto phi = pick_basis(cfg, ps, n - 1, false);
        Json j = bezout::bezout_to_json(bezout::bezout_matrix(ps[0], ps[1], phi, tol));
        if (is_float) j["tol"] = tol;
        emit(cfg, j);
    } else if (cfg.command == "nullspace") {
        const std::size_t n = max_effective_degree(ps, tol);
        const auto phi = pick_basis(cfg, ps, n - 1, false);
        std::size_t p_index = 0;
        while (bezout::effective_degree(ps[p_index], tol) != static_cast<int>(n)) ++p_index;
        std::vector<bezout::Poly<K>> qs;
        for (std::size_t i = 0; i < ps.size(); ++i)
            if (i != p_index) qs.push_back(ps[i]);
        const auto stack = bezout::stacked(ps[p_index], qs, phi, tol);
        const auto basis = bezout::null_space_basis(stack.matrix, tol);
        Json j;
        j["basis"] = bezout::basis_to_json(phi);
        j["n"] = stack.n;
        j["rank"] = stack.n - basis.cols();
        j["nullity"] = basis.cols();
        j["null_space"] = bezout::matrix_to_json(basis);
        if (is_float) j["tol"] = tol;
        emit(cfg, j);
    } else if (cfg.command == "common-root") {
        const std::size_t n = max_effective_degree(ps, tol);
        const auto phi = pick_basis(cfg, ps, n - 1, false);
        const auto bez = bezout::bezout_matrix(ps[0], ps[1], phi, tol);
        Json j;
        j["root"] = bezout::scalar_to_string(bezout::simple_common_root(bez, tol));
        if (is_float) j["tol"] = tol;
        emit(cfg, j);
    } else if (cfg.command == "gcd") {
        bezout::GcdMethod method = bezout::GcdMethod::EuclidOracle;
        if (cfg.method == "barnett")
            method = bezout::GcdMethod::BarnettPhi;
        else if (cfg.method == "nullspace")
            method = bezout::GcdMethod::NullspacePhi;
        bezout::PhiSpec<K> phi; // auto
        if (cfg.basis_spec == "native") {
            phi = bezout::NativeBasis{};
        } else if (!cfg.basis_spec.empty()) {
            const std::size_t n = max_effective_degree(ps, tol);
            phi = resolve_basis_spec<K>(cfg.basis_spec, n - 1);
        }
        Json j = bezout::gcd_result_to_json(bezout::gcd(ps, method, phi, tol));
        if (is_float) j["tol"] = tol;
        emit(cfg, j);
    } else if (cfg.command == "convert") {
        bezout::Basis<K> to = [&] {
            if (cfg.to_spec == "monomial")
                return bezout::Basis<K>::monomial(ps[0].basis.degree());
            if (cfg.to_spec == "bernstein")
                return bezout::Basis<K>::bernstein(ps[0].basis.degree());
            Json j = Json::parse(cfg.to_spec, nullptr, false);
            if (j.is_discarded())
                bezout::fail("MalformedJson", "--to is neither a shorthand nor a JSON object");
            return bezout::basis_from_json<K>(j, "--to");
        }();
        emit(cfg, bezout::poly_to_json(bezout::convert(ps[0], to, tol)));
    } else if (cfg.command == "verify-kernel") {
        const std::size_t n = max_effective_degree(ps, tol);
        const auto phi = pick_basis(cfg, ps, n - 1, false);
        const auto bez = bezout::bezout_matrix(ps[0], ps[1], phi, tol);
        const auto desc = roots_from_json<K>(cfg.roots_json, bez.n);
        Json j = bezout::verdict_to_json(bezout::verify_kernel_structure(bez, desc, tol));
        if (is_float) j["tol"] = tol;
        emit(cfg, j);
    }
    return 0;
}

int error_exit_code(const std::string& code) {
    if (code == "MalformedJson" || code == "SchemaViolation" || code == "BadRational" ||
        code == "BadArguments")
        return 2;
    return 1;
}

void print_error(const std::string& code, const std::string& detail) {
    Json j;
    j["error"] = code;
    j["detail"] = detail;
    std::cerr << j.dump() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    JobConfig cfg;
    CLI::App app{"Bezout matrices and polynomial gcds in arbitrary bases"};
    app.require_subcommand(1);
    app.add_option("--scalar", cfg.scalar, "Scalar mode: exact (default) or float")
        ->check(CLI::IsMember({"exact", "float"}));
    auto* tol_opt = app.add_option("--tol", cfg.tol, "Zero tolerance (float mode only)")
                        ->check(CLI::NonNegativeNumber);
    app.add_option("-o,--output", cfg.output, "Write the JSON result to a file");

    auto add_inputs = [&](CLI::App* sub, int count) {
        auto* opt = sub->add_option("files", cfg.inputs, "Polynomial JSON files");
        if (count > 0)
            opt->expected(count)->required();
        else
            opt->expected(-2)->required(); // at least two
    };

    auto* cmd_bezout = app.add_subcommand("bezout", "Bezout matrix of P and Q");
    cmd_bezout->add_option("--basis", cfg.basis_spec, "Bezout basis (JSON object or shorthand)");
    add_inputs(cmd_bezout, 2);

    auto* cmd_nullspace =
        app.add_subcommand("nullspace", "Null-space basis of the stacked Bezout matrix");
    cmd_nullspace->add_option("--basis", cfg.basis_spec, "Bezout basis");
    add_inputs(cmd_nullspace, 0);

    auto* cmd_root = app.add_subcommand("common-root", "Unique simple common root of P and Q");
    add_inputs(cmd_root, 2);

    auto* cmd_gcd = app.add_subcommand("gcd", "Monic gcd of two or more polynomials");
    cmd_gcd->add_option("--method", cfg.method, "barnett, nullspace or euclid")
        ->required()
        ->check(CLI::IsMember({"barnett", "nullspace", "euclid"}));
    cmd_gcd->add_option("--basis", cfg.basis_spec, "Bezout basis, or \"native\"");
    add_inputs(cmd_gcd, 0);

    auto* cmd_convert = app.add_subcommand("convert", "Change the basis of a polynomial");
    cmd_convert->add_option("--to", cfg.to_spec, "Target basis (JSON object or shorthand)")
        ->required();
    add_inputs(cmd_convert, 1);

    auto* cmd_verify = app.add_subcommand("verify-kernel",
                                          "Check the root-block structure of the null space");
    cmd_verify->add_option("--roots", cfg.roots_json,
                           "JSON array of {\"root\",\"multiplicity\"}")
        ->required();
    add_inputs(cmd_verify, 2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print_error("BadArguments", e.what());
        return 2;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    if (tol_opt->count() > 0 && cfg.scalar != "float") {
        print_error("BadArguments", "--tol is only valid with --scalar float");
        return 2;
    }

    try {
        return cfg.scalar == "float" ? run<double>(cfg) : run<bezout::Rational>(cfg);
    } catch (const bezout::Error& e) {
        const std::string detail = e.what();
        print_error(e.code(), detail.substr(detail.find(": ") + 2));
        return error_exit_code(e.code());
    } catch (const std::exception& e) {
        print_error("Internal", e.what());
        return 1;
    }
}
