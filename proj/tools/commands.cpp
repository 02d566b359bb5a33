#include "commands.hpp"

#include "orbhrr/equivariant_hilbert.hpp"
#include "orbhrr/errors.hpp"
#include "orbhrr/inertia.hpp"
#include "orbhrr/json_io.hpp"
#include "orbhrr/orbifold_hrr.hpp"
#include "orbhrr/toy_stacks.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace orbhrr::cli {

namespace {

using Json = json_io::Json;

struct CommandResult {
    std::string command;
    Json inputs = Json::object();
    Json outputs = Json::object();
    std::string status = "ok";
    std::vector<std::string> text;
};

struct Options {
    bool json = false;
    std::uint32_t order = 0;
    std::string preset;
    std::string model_file;
    bool no_validate = false;
    std::string class_file;
    std::string class_preset;
    std::int64_t length = 0;
    bool all_rows = false;
    std::uint32_t n = 0;
    std::uint32_t trials = 100;
    std::uint64_t seed = 1;
    std::vector<std::uint32_t> weights;
    std::int64_t degree = 0;
    std::int64_t r = 0, d = 0, s = 0;
    std::vector<std::int64_t> c1;
    bool generic = false;
};

std::string join(const std::vector<std::uint32_t>& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

K3GModel preset_model(const std::string& name)
{
    if (name == "trivial") return preset_trivial();
    if (name.rfind("cyclic:", 0) == 0) {
        const std::string digits = name.substr(7);
        if (!digits.empty() && digits.size() <= 2 && std::all_of(digits.begin(), digits.end(), ::isdigit)) {
            return preset_cyclic(static_cast<std::uint32_t>(std::stoul(digits)));
        }
    }
    throw SchemaError("unknown preset \"" + name + "\" (expected cyclic:2..cyclic:8 or trivial)");
}

// Loads the model named by --preset or --model. The identity check runs
// unless --no-validate was given or the caller asks to skip it.
K3GModel load_model(const Options& o, CommandResult& res, bool validate)
{
    if (!o.model_file.empty()) {
        res.inputs["model"] = o.model_file;
        return json_io::model_from_json(json_io::read_file(o.model_file), validate && !o.no_validate);
    }
    if (o.preset.empty()) {
        throw SchemaError("one of --preset or --model is required");
    }
    res.inputs["preset"] = o.preset;
    K3GModel model = preset_model(o.preset);
    if (validate && !o.no_validate) check_identity(model);
    return model;
}

void fixed_points(const Options& o, CommandResult& res)
{
    res.inputs["order"] = o.order;
    const std::int64_t f = solve_fixed_points_cyclic(o.order);
    const Rational closed = fixed_points_closed_form(o.order);
    const Rational identity = validate_identity(preset_cyclic(o.order));
    const Rational residual = identity - 1;
    if (closed != f) {
        throw ConsistencyError("solver gives " + std::to_string(f) + ", closed form gives " + closed.to_string());
    }
    res.outputs["fixed_points"] = f;
    res.outputs["closed_form"] = closed.to_string();
    res.outputs["identity"] = identity.to_string();
    res.outputs["residual"] = residual.to_string();
    res.text.push_back("f_" + std::to_string(o.order) + " = " + std::to_string(f));
    res.text.push_back("closed form: " + closed.to_string());
    res.text.push_back("identity: " + identity.to_string() + " (exact), residual " + residual.to_string());
}

void dim(const Options& o, CommandResult& res)
{
    const K3GModel model = load_model(o, res, true);
    EquivariantClass x;
    if (!o.class_file.empty()) {
        res.inputs["class"] = o.class_file;
        x = json_io::class_from_json(json_io::read_file(o.class_file));
    } else if (o.class_preset == "ox") {
        x = structure_sheaf_class(model);
    } else if (o.class_preset == "op") {
        x = point_class(model);
    } else if (o.class_preset == "tx") {
        x = tangent_class(model);
    } else {
        throw SchemaError("one of --class or --class-preset ox|op|tx is required");
    }
    if (o.class_file.empty()) res.inputs["class_preset"] = o.class_preset;
    const Rational pairing = euler_pairing(model, x, x);
    const Rational dimension = Rational(2) - pairing;
    res.outputs["pairing"] = pairing.to_string();
    res.outputs["dimension"] = dimension.to_string();
    res.text.push_back("<v^2> = " + pairing.to_string());
    res.text.push_back("dimension = " + dimension.to_string());
}

void hilb_enum(const Options& o, CommandResult& res)
{
    res.inputs["length"] = o.length;
    res.inputs["all"] = o.all_rows;
    Json rows = Json::array();
    res.text.push_back("l = " + std::to_string(o.length));
    for (const auto& row : enumerate_mu2(o.length)) {
        if (row.count == 0 && !o.all_rows) continue;
        Json dims = Json::array();
        Json dim_counts = Json::object();
        std::string dims_text;
        for (const auto& [d, c] : row.dims) {
            dims.push_back(d);
            dim_counts[std::to_string(d)] = c;
            dims_text += (dims_text.empty() ? "" : ", ") + std::to_string(d) + " x" + std::to_string(c);
        }
        rows.push_back(Json{{"l", o.length}, {"n", row.n}, {"count", row.count}, {"dims", dims}, {"dim_counts", dim_counts}});
        res.text.push_back("n = " + std::to_string(row.n) + "  count = " + std::to_string(row.count) + "  dims: " +
                           (dims_text.empty() ? "-" : dims_text));
    }
    res.outputs["rows"] = std::move(rows);
}

void verify_identity(const Options& o, CommandResult& res)
{
    const K3GModel model = load_model(o, res, false);
    const Rational value = validate_identity(model);
    res.outputs["identity"] = value.to_string();
    res.outputs["residual"] = (value - 1).to_string();
    if (value != 1) {
        throw ModelIntegrityError("unit identity fails: value " + value.to_string(), (value - 1).to_string());
    }
    res.text.push_back(value.to_string() + " (exact)");
}

void parseval(const Options& o, CommandResult& res)
{
    res.inputs["n"] = o.n;
    res.inputs["trials"] = o.trials;
    res.inputs["seed"] = o.seed;
    std::mt19937_64 rng(o.seed);
    std::uint32_t failures = 0;
    for (std::uint32_t t = 0; t < o.trials; ++t) {
        const auto f = random_group_ring_element(o.n, rng);
        const auto g = random_group_ring_element(o.n, rng);
        if (!parseval_check(f, g)) ++failures;
    }
    res.outputs["failures"] = failures;
    res.outputs["result"] = failures == 0 ? "pass" : "fail";
    res.text.push_back("parseval n=" + std::to_string(o.n) + " trials=" + std::to_string(o.trials) +
                       " seed=" + std::to_string(o.seed) + ": " + (failures == 0 ? "pass" : "fail"));
    if (failures) {
        throw ConsistencyError(std::to_string(failures) + " Parseval trials failed");
    }
}

void wps_euler(const Options& o, CommandResult& res)
{
    res.inputs["weights"] = o.weights;
    const WPSElement e = wps_euler_class_tangent(o.weights);
    const WPSElement rel = wps_relation(o.weights);
    const std::string modulus = e.residue.ring().modulus().to_string("x");
    res.outputs["modulus"] = modulus;
    res.outputs["euler_class"] = e.to_string();
    res.outputs["relation"] = rel.to_string();
    res.text.push_back("K(P(" + join(o.weights) + ")) = Z[x]/(" + modulus + ")");
    res.text.push_back("e(T) = " + e.to_string());
    res.text.push_back("relation prod(1 - x^-a) = " + rel.to_string());
    if (!rel.residue.is_zero()) {
        throw ConsistencyError("relation does not vanish in the K-ring");
    }
}

void bg_count(const Options& o, CommandResult& res)
{
    res.inputs["n"] = o.n;
    res.inputs["degree"] = o.degree;
    const Integer count = bg_moduli_count(o.n, o.degree);
    res.outputs["count"] = count.str();
    res.text.push_back("l(" + std::to_string(o.n) + ", " + std::to_string(o.degree) + ") = " + count.str());
}

void check_hypotheses_cmd(const Options& o, CommandResult& res)
{
    res.inputs["r"] = o.r;
    res.inputs["d"] = o.d;
    res.inputs["s"] = o.s;
    res.inputs["c1"] = o.c1;
    res.inputs["generic"] = o.generic;
    const HypothesisReport rep = check_hypotheses(o.r, NSClass{o.c1}, o.s, o.d, o.generic);
    const std::vector<std::pair<const char*, bool>> fields = {
        {"rank_positive", rep.rank_positive},
        {"primitive", rep.primitive},
        {"degree_positive", rep.degree_positive},
        {"rank_degree_coprime", rep.rank_degree_coprime},
        {"rank_degree_s_coprime", rep.rank_degree_s_coprime},
        {"generic_polarization", rep.generic_polarization},
        {"hilbert_deformation_type", rep.hilbert_deformation_type},
        {"smooth_projective", rep.smooth_projective},
    };
    for (const auto& [name, value] : fields) {
        res.outputs[name] = value;
        res.text.push_back(std::string(name) + ": " + (value ? "true" : "false"));
    }
}

void emit(const CommandResult& res, bool json, std::ostream& out)
{
    if (json) {
        Json j{{"command", res.command}, {"inputs", res.inputs}, {"outputs", res.outputs}, {"status", res.status}};
        out << j.dump(2) << '\n';
        return;
    }
    for (const auto& line : res.text) out << line << '\n';
}

int fail(CommandResult& res, bool json, std::ostream& out, std::ostream& err, int code, const std::string& status,
         const std::string& message, const std::string& residual = {})
{
    err << "error: " << message << '\n';
    if (!residual.empty()) err << "residual: " << residual << '\n';
    if (json) {
        res.status = status;
        res.outputs["error"] = message;
        if (!residual.empty()) res.outputs["residual"] = residual;
        res.text.clear();
        emit(res, true, out);
    }
    return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Exact orbifold Riemann-Roch computations for K3 surfaces with a finite group action", "orbhrr"};
    app.require_subcommand(1);

    auto* fp = app.add_subcommand("fixed-points", "Fixed-point count f_n of an order-n symplectic automorphism");
    fp->add_option("--order", o.order, "group order n")->required()->check(CLI::Range(2, 8));

    auto* dm = app.add_subcommand("dim", "Orbifold Mukai self-pairing and moduli dimension of a class");
    dm->add_option("--preset", o.preset, "cyclic:2..cyclic:8 or trivial");
    dm->add_option("--model", o.model_file, "model JSON file");
    dm->add_flag("--no-validate", o.no_validate, "skip the unit identity check");
    dm->add_option("--class", o.class_file, "equivariant class JSON file");
    dm->add_option("--class-preset", o.class_preset, "ox, op or tx")->check(CLI::IsMember({"ox", "op", "tx"}));

    auto* he = app.add_subcommand("hilb-enum", "Enumerate mu_2-equivariant Hilbert scheme classes of a given length");
    he->add_option("--length", o.length, "length l")->required()->check(CLI::NonNegativeNumber);
    he->add_flag("--all", o.all_rows, "include rows without solutions");

    auto* vi = app.add_subcommand("verify-identity", "Evaluate the unit identity of a model exactly");
    vi->add_option("--preset", o.preset, "cyclic:2..cyclic:8 or trivial");
    vi->add_option("--model", o.model_file, "model JSON file");

    auto* pv = app.add_subcommand("parseval", "Randomized Parseval check on Z[x]/(x^n - 1)");
    pv->add_option("--n", o.n, "n")->required()->check(CLI::Range(1, 64));
    pv->add_option("--trials", o.trials, "number of random pairs")->capture_default_str();
    pv->add_option("--seed", o.seed, "random seed")->capture_default_str();

    auto* we = app.add_subcommand("wps-euler", "K-theoretic Euler class of the tangent bundle of P(a_0,...,a_k)");
    we->add_option("--weights", o.weights, "comma-separated weights")->required()->delimiter(',')->check(
        CLI::PositiveNumber);

    auto* bg = app.add_subcommand("bg-count", "Number of degree-d points in the moduli of Bmu_n sheaves");
    bg->add_option("--n", o.n, "n")->required()->check(CLI::PositiveNumber);
    bg->add_option("--degree", o.degree, "d")->required()->check(CLI::NonNegativeNumber);

    auto* ch = app.add_subcommand("check-hypotheses", "Evaluate the moduli-space hypotheses for a Mukai vector");
    ch->add_option("--r", o.r, "rank")->required();
    ch->add_option("--d", o.d, "degree c1.h")->required();
    ch->add_option("--s", o.s, "r + ch_2")->required();
    ch->add_option("--c1", o.c1, "comma-separated c1 coordinates")->delimiter(',');
    ch->add_flag("--generic", o.generic, "assert that the polarization is generic");

    for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", o.json, "machine-readable output");

    CommandResult res;
    res.command = args.empty() ? "" : args.front();
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream parse_out, parse_err;
        const int code = app.exit(e, parse_out, parse_err);
        out << parse_out.str();
        if (code == 0) return kSuccess;
        const bool json = std::find(args.begin(), args.end(), "--json") != args.end();
        return fail(res, json, out, err, kUsageError, "usage_error", e.what());
    }

    try {
        if (fp->parsed()) fixed_points(o, res);
        else if (dm->parsed()) dim(o, res);
        else if (he->parsed()) hilb_enum(o, res);
        else if (vi->parsed()) verify_identity(o, res);
        else if (pv->parsed()) parseval(o, res);
        else if (we->parsed()) wps_euler(o, res);
        else if (bg->parsed()) bg_count(o, res);
        else if (ch->parsed()) check_hypotheses_cmd(o, res);
    } catch (const ModelIntegrityError& e) {
        return fail(res, o.json, out, err, kModelIntegrityFailure, "model_integrity_failure", e.what(), e.residual());
    } catch (const ExactnessError& e) {
        return fail(res, o.json, out, err, kModelIntegrityFailure, "model_integrity_failure", e.what());
    } catch (const ConsistencyError& e) {
        return fail(res, o.json, out, err, kConsistencyFailure, "consistency_failure", e.what());
    } catch (const SchemaError& e) {
        return fail(res, o.json, out, err, kUsageError, "usage_error", e.what());
    } catch (const DimensionMismatchError& e) {
        return fail(res, o.json, out, err, kUsageError, "usage_error", e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(res, o.json, out, err, kUsageError, "usage_error", e.what());
    } catch (const Error& e) {
        return fail(res, o.json, out, err, kConsistencyFailure, "consistency_failure", e.what());
    }
    emit(res, o.json, out);
    return kSuccess;
}

}  // namespace orbhrr::cli
