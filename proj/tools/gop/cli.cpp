#include "gop/cli.hpp"

#include "gop/expr.hpp"
#include "gop/galochkin.hpp"
#include "gop/guess.hpp"
#include "gop/kovacic.hpp"
#include "gop/local.hpp"
#include "gop/nga.hpp"
#include "gop/order1.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace gop::cli {

namespace {

using nlohmann::json;

/// Bad input files or flags; reported with exit status 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json rat(const Rat& q)
{
    return to_string(q);
}

json pp_json(const PowerProduct& p)
{
    return p.to_string();
}

json fuchs_json(const FuchsReport& r)
{
    json places = json::array();
    for (const auto& d : r.places) {
        json p;
        p["place"] = d.place.to_string();
        if (d.rational_coefficients) {
            p["indicial"] = d.indicial.to_string("rho");
            json ex = json::array();
            for (const auto& [root, mult] : d.exponents.roots)
                for (int i = 0; i < mult; ++i)
                    ex.push_back(rat(root));
            p["exponents"] = ex;
            p["exponents_rational"] = d.exponents.all_rational;
        } else {
            json coeffs = json::array();
            for (const auto& c : d.indicial_residue)
                coeffs.push_back(c.to_string("x"));
            p["indicial_coefficients_mod_place"] = coeffs;
            p["exponents_rational"] = false;
        }
        places.push_back(p);
    }
    json violations = json::array();
    for (const auto& v : r.offending)
        violations.push_back({{"place", v.place.to_string()}, {"k", v.k}, {"pole_order", v.actual}});
    return {{"fuchsian", r.is_fuchsian}, {"places", places}, {"violations", violations}};
}

RatFunc as_function(const DiffOp& l, const std::string& what)
{
    if (l.order() > 0)
        throw UsageError(what + " must not contain D");
    return l.is_zero() ? RatFunc(0) : l.coeff(0);
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Rat> read_series(const std::filesystem::path& path, std::size_t trunc)
{
    std::istringstream in(read_file(path));
    std::vector<Rat> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line) && out.size() < trunc) {
        ++lineno;
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#')
            continue;
        const auto e = line.find_last_not_of(" \t\r");
        try {
            out.push_back(parse_rat(std::string_view(line).substr(b, e - b + 1)));
        } catch (const std::exception&) {
            throw UsageError(path.string() + ":" + std::to_string(lineno) + ": not a rational number");
        }
    }
    return out;
}

NGAExpr read_nga_spec(const std::filesystem::path& path, std::size_t trunc, json& echo)
{
    std::istringstream in(read_file(path));
    std::vector<std::tuple<Rat, unsigned, std::string, std::filesystem::path>> rows;
    std::string line;
    std::size_t lineno = 0;
    unsigned level = 1;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string alpha, j, coeff, file;
        if (!(ls >> alpha) || alpha[0] == '#')
            continue;
        const std::string where = path.string() + ":" + std::to_string(lineno) + ": ";
        std::string extra;
        if (!(ls >> j >> coeff >> file) || (ls >> extra))
            throw UsageError(where + "expected 'alpha j coeff-spec series-file'");
        Rat a;
        long jj;
        try {
            a = parse_rat(alpha);
            jj = std::stol(j);
        } catch (const std::exception&) {
            throw UsageError(where + "bad alpha or j");
        }
        if (jj < 0)
            throw UsageError(where + "j must be non-negative");
        level = common_level(level, static_cast<unsigned>(a.get_den().get_ui()));
        for (std::size_t p = coeff.find("zeta"); p != std::string::npos; p = coeff.find("zeta", p + 4)) {
            std::size_t q = p + 4, n = 0;
            while (q < coeff.size() && std::isdigit(static_cast<unsigned char>(coeff[q])))
                n = n * 10 + static_cast<std::size_t>(coeff[q++] - '0');
            if (n > 0)
                level = common_level(level, static_cast<unsigned>(n));
        }
        rows.emplace_back(a, static_cast<unsigned>(jj), coeff, path.parent_path() / file);
    }
    NGAExpr e;
    json terms = json::array();
    for (const auto& [a, j, coeff, file] : rows) {
        TruncSeries s = TruncSeries::from_coeffs(read_series(file, trunc));
        e.terms.push_back(NGATerm::make(a, j, parse_cyc_const(coeff, level), std::move(s)));
        terms.push_back({{"alpha", rat(a)}, {"j", j}, {"coefficient", coeff}, {"series_file", file.filename().string()}});
    }
    echo["terms"] = terms;
    return e;
}

std::size_t default_trunc()
{
    const char* env = std::getenv("GOP_TRUNC_DEFAULT");
    if (!env || !*env)
        return 64;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v <= 0)
        throw UsageError("GOP_TRUNC_DEFAULT must be a positive integer");
    return static_cast<std::size_t>(v);
}

json analyze(const DiffOp& l, json& diagnostics, json& warnings)
{
    if (l.order() < 1)
        throw DomainError("analyze needs an operator of order >= 1");
    json r = fuchs_json(is_fuchsian(l));
    r["order"] = l.order();
    r["operator"] = l.to_string();
    try {
        r["fuchs_relation"] = fuchs_relation_check(l);
    } catch (const DomainError& e) {
        warnings.push_back(std::string("fuchs relation not checked: ") + e.what());
    }
    if (l.order() == 2 && r["fuchsian"].get<bool>()) {
        try {
            r["residue_exponent_identity"] = residue_exponent_identity(l);
        } catch (const DomainError& e) {
            warnings.push_back(std::string("residue identity not checked: ") + e.what());
        }
    }
    json sp = json::array();
    for (const auto& p : singular_places(l))
        sp.push_back(p.to_string());
    diagnostics["singular_places"] = sp;
    return r;
}

json galochkin(const DiffOp& l, unsigned k, json& diagnostics)
{
    if (l.order() < 1)
        throw DomainError("galochkin needs an operator of order >= 1");
    if (k == 0)
        throw UsageError("--k must be positive");
    GalochkinReport g = denominator_sequence(companion(l), k);
    json d = json::array();
    for (const auto& x : g.D)
        d.push_back(to_string(x));
    json divides = true;
    for (std::size_t i = 0; i + 1 < g.D.size(); ++i)
        if (g.D[i + 1] % g.D[i] != 0)
            divides = false;
    diagnostics["log2_slope_tail"] = rat(g.slope_tail);
    diagnostics["divisibility_chain"] = divides;
    return {{"k", k}, {"D", d}, {"T", g.T.to_string()}};
}

json order1(const DiffOp& l, json& diagnostics)
{
    RatFunc a;
    if (l.order() == 1)
        a = -l.coeff(0) / l.coeff(1);
    else if (l.order() == 0)
        a = as_function(l, "a");
    else
        throw DomainError("order1 needs D - a or the function a");
    Order1Verdict v = classify_order1(a);
    json r{{"a", a.to_string()}, {"g_operator", v.is_g_operator}};
    r["solution"] = v.solution ? pp_json(*v.solution) : json(nullptr);
    if (!v.reason.empty())
        r["reason"] = v.reason;
    if (v.failure)
        diagnostics["fuchs"] = fuchs_json(*v.failure);
    if (v.solution)
        diagnostics["log_derivative_matches"] = pp_log_derivative(*v.solution) == a;
    return r;
}

json inhom(const RatFunc& a, const RatFunc& b, json& diagnostics)
{
    InhomResult res = solve_inhomogeneous(a, b);
    json r{{"L2", res.L2.to_string()},
           {"g", pp_json(res.g)},
           {"integrand", pp_json(res.integrand)},
           {"rationality_flag", res.rationality_flag}};
    r["witness"] = res.witness ? json(res.witness->to_string()) : json(nullptr);
    if (res.witness)
        diagnostics["witness_check"] = (res.witness->derivative() - a * *res.witness - b).is_zero();
    return r;
}

json kovacic(const DiffOp& l, json& diagnostics, json& warnings)
{
    Theorem2Verdict v = classify_theorem2(l);
    json r{{"case", v.kovacic_case}, {"outcome", to_string(v.kind)}, {"g_conditions", v.g_conditions}};
    json feasible = json::array();
    for (int c : v.conditions.feasible)
        feasible.push_back(c);
    r["feasible_cases"] = feasible;
    r["normal_form_r"] = v.normal.r.to_string();
    if (v.primitive) {
        r["g"] = pp_json(v.primitive->g);
        r["h"] = pp_json(v.primitive->h);
        if (pp_is_rational(v.primitive->h))
            r["h_rational"] = pp_to_ratfunc(v.primitive->h).to_string();
        r["right_factor"] = v.primitive->right_factor.to_string();
        r["left_factor"] = v.primitive->left_factor.to_string();
    } else if (v.right_factor) {
        r["right_factor"] = v.right_factor->to_string();
    }
    if (v.algebraic) {
        json basis = json::array();
        for (const auto& b : v.algebraic->basis)
            basis.push_back(pp_json(b));
        r["algebraic_basis"] = basis;
        if (v.algebraic->quadratic) {
            const auto& q = *v.algebraic->quadratic;
            r["quadratic"] = {{"phi", q.phi.to_string()}, {"psi", q.psi.to_string()}};
        }
    }
    if (v.case1) {
        diagnostics["case1"] = {{"omega", v.case1->omega.to_string()},
                                {"P", v.case1->P.to_string()},
                                {"certificate", case1_certificate(v.normal.r, *v.case1)}};
    }
    if (v.case2) {
        diagnostics["case2"] = {{"phi", v.case2->phi.to_string()},
                                {"psi", v.case2->psi.to_string()},
                                {"certificate", case2_certificate(v.normal.r, *v.case2)}};
    }
    if (v.case3) {
        json n = json::array();
        for (int x : v.case3->admissible_n)
            n.push_back(x);
        diagnostics["case3"] = {{"conditions_hold", v.case3->conditions_hold}, {"admissible_n", n}, {"moot", v.case3->moot}};
        warnings.push_back("case 3 is detected, not constructed; the candidate needs follow-up");
    }
    if (!v.note.empty())
        diagnostics["note"] = v.note;
    diagnostics["fuchsian"] = v.fuchs.is_fuchsian;
    return r;
}

json series_json(const TruncSeries& s)
{
    json c = json::array();
    for (const auto& x : s.coeffs)
        c.push_back(rat(x));
    return c;
}

json nga_split(const NGAExpr& e, json& diagnostics)
{
    SplitResult sp = holonomy_split(e);
    json comps = json::array();
    for (const auto& c : sp.components)
        comps.push_back({{"alpha", rat(c.alpha)},
                         {"j", c.j},
                         {"zeta_power", c.zeta_power},
                         {"tau_power", c.tau_power},
                         {"offset", rat(c.series.offset)},
                         {"series", series_json(c.series)}});
    diagnostics["reassembly_matches"] = nga_equivalent(reassemble(sp), e);
    return {{"level", sp.level}, {"components", comps}};
}

json guess(const TruncSeries& s, unsigned max_order, unsigned max_degree, unsigned margin, json& diagnostics,
           json& warnings)
{
    GuessResult g = guess_ode(s, max_order, max_degree, margin);
    json r{{"found", g.found}, {"overdetermination", g.overdetermination}, {"truncation", s.truncation()}};
    r["operator"] = g.op ? json(g.op->to_string()) : json(nullptr);
    if (g.found) {
        r["order"] = g.order;
        r["degree"] = g.degree;
        warnings.push_back("annihilation is certified through the truncation only; consistent with holonomy, not a proof");
    }
    GrowthReport gr = g_growth_diagnostic(s);
    diagnostics["growth"] = {{"d_last", gr.d.empty() ? json("1") : json(to_string(gr.d.back()))},
                             {"log2_denominator_slope", rat(gr.denominator_slope)},
                             {"log2_height_slope", rat(gr.height_slope)},
                             {"first_half_slope", rat(gr.first_half_slope)},
                             {"second_half_slope", rat(gr.second_half_slope)},
                             {"superlinear", gr.superlinear}};
    warnings.push_back(gr.superlinear ? "denominator growth is superlinear; not consistent with a G-function"
                                      : "denominator growth is consistent with a G-function");
    return r;
}

void flatten(const json& j, const std::string& key, std::vector<std::pair<std::string, std::string>>& out)
{
    auto scalar = [](const json& v) {
        if (v.is_string())
            return v.get<std::string>();
        if (v.is_null())
            return std::string("none");
        return v.dump();
    };
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            flatten(v, key.empty() ? k : key + "." + k, out);
    } else if (j.is_array()) {
        bool flat = std::all_of(j.begin(), j.end(), [](const json& v) { return v.is_primitive(); });
        if (flat) {
            std::string s;
            for (const auto& v : j)
                s += (s.empty() ? "" : ", ") + scalar(v);
            out.emplace_back(key, j.empty() ? "(none)" : s);
        } else {
            for (std::size_t i = 0; i < j.size(); ++i)
                flatten(j[i], key + "[" + std::to_string(i) + "]", out);
        }
    } else {
        out.emplace_back(key, scalar(j));
    }
}

void print_text(const json& report, std::ostream& out)
{
    std::vector<std::pair<std::string, std::string>> lines;
    lines.emplace_back("command", report["command"].get<std::string>());
    flatten(report["input"], "input", lines);
    flatten(report["result"], "", lines);
    flatten(report["diagnostics"], "diagnostics", lines);
    for (const auto& w : report["warnings"])
        lines.emplace_back("warning", w.get<std::string>());
    std::size_t width = 0;
    for (const auto& l : lines)
        width = std::max(width, l.first.size());
    for (const auto& [k, v] : lines)
        out << k << ':' << std::string(width - k.size() + 1, ' ') << v << '\n';
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact analysis of linear differential operators over Q(z)", "gop"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    unsigned k = 10, max_order = 2, max_degree = 2, margin = 10;
    std::size_t trunc = 0;
    app.add_flag("--json", as_json, "Emit canonical JSON");
    app.add_option("--k", k, "Galochkin: number of denominators D_1..D_k");
    app.add_option("--max-order", max_order, "guess: largest operator order");
    app.add_option("--max-degree", max_degree, "guess: largest coefficient degree");
    app.add_option("--margin", margin, "guess: required surplus equations");
    app.add_option("--trunc", trunc, "Series coefficients read per file (default $GOP_TRUNC_DEFAULT or 64)");

    std::string op_text, a_text, b_text, file;
    auto* c_analyze = app.add_subcommand("analyze", "Singular places, exponents and Fuchs' criterion");
    c_analyze->add_option("operator", op_text)->required();
    auto* c_gal = app.add_subcommand("galochkin", "Denominator sequence D_k of the companion system");
    c_gal->add_option("operator", op_text)->required();
    auto* c_o1 = app.add_subcommand("order1", "Classify D - a (give the operator or a)");
    c_o1->add_option("operator", op_text)->required();
    auto* c_inh = app.add_subcommand("inhom", "Solve f' = a f + b");
    c_inh->add_option("a", a_text)->required();
    c_inh->add_option("b", b_text)->required();
    auto* c_kov = app.add_subcommand("kovacic", "Liouvillian classification of an order-2 operator");
    c_kov->add_option("operator", op_text)->required();
    auto* c_nga = app.add_subcommand("nga-split", "Split a Nilsson-Gevrey expression into components");
    c_nga->add_option("spec-file", file)->required();
    auto* c_guess = app.add_subcommand("guess", "Guess an annihilating operator for a series");
    c_guess->add_option("series-file", file)->required();

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    json report{{"command", command}, {"input", json::object()}, {"result", json::object()},
                {"diagnostics", json::object()}, {"warnings", json::array()}};
    json& input = report["input"];
    json& diagnostics = report["diagnostics"];
    json& warnings = report["warnings"];
    try {
        if (trunc == 0)
            trunc = default_trunc();
        auto parse_op = [&](const std::string& text) {
            DiffOp l = parse_diffop(text);
            input["operator"] = text;
            input["canonical"] = l.to_string();
            return l;
        };
        json result;
        if (command == "analyze")
            result = analyze(parse_op(op_text), diagnostics, warnings);
        else if (command == "galochkin")
            result = galochkin(parse_op(op_text), k, diagnostics);
        else if (command == "order1")
            result = order1(parse_op(op_text), diagnostics);
        else if (command == "kovacic")
            result = kovacic(parse_op(op_text), diagnostics, warnings);
        else if (command == "inhom") {
            input["a"] = a_text;
            input["b"] = b_text;
            result = inhom(as_function(parse_diffop(a_text), "a"), as_function(parse_diffop(b_text), "b"), diagnostics);
        } else if (command == "nga-split") {
            input["spec_file"] = std::filesystem::path(file).filename().string();
            input["trunc"] = trunc;
            result = nga_split(read_nga_spec(file, trunc, input), diagnostics);
        } else {
            input["series_file"] = std::filesystem::path(file).filename().string();
            input["trunc"] = trunc;
            input["max_order"] = max_order;
            input["max_degree"] = max_degree;
            input["margin"] = margin;
            result = guess(TruncSeries::from_coeffs(read_series(file, trunc)), max_order, max_degree, margin,
                           diagnostics, warnings);
        }
        report["result"] = std::move(result);
    } catch (const ParseError& e) {
        err << "gop: " << e.what() << '\n';
        return 1;
    } catch (const UsageError& e) {
        err << "gop: " << e.what() << '\n';
        return 1;
    } catch (const DomainError& e) {
        err << "gop: " << e.what() << '\n';
        return 2;
    }
    if (as_json)
        out << report.dump(2) << '\n';
    else
        print_text(report, out);
    return 0;
}

} // namespace gop::cli
