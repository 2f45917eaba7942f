#include "motivic/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "motivic/io.hpp"

namespace motivic::cli {

namespace {

using io::Json;
using io::SchemaError;

struct Settings {
    std::optional<std::int64_t> floor;
    std::optional<std::int64_t> cap;
    std::string format = "text";
    std::uint64_t seed = 1;
    int trials = 200;
    std::string file = "-";
};

struct Problem {
    std::string kind;
    Json payload;
    std::int64_t floor = kDefaultFloor;
    std::int64_t cap = kDefaultCap;
    std::optional<std::int64_t> e_max_override;
};

// Result of one command: text and JSON renderings plus the exit code.
struct Outcome {
    std::string text;
    Json json;
    int exit_code = kExitOk;
};

Problem load_problem(const Settings& settings, const std::string& expected_kind, std::istream& in) {
    std::string content;
    if (settings.file == "-") {
        std::stringstream ss;
        ss << in.rdbuf();
        content = ss.str();
    } else {
        std::ifstream f(settings.file);
        if (!f)
            throw SchemaError(settings.file, "cannot open problem file");
        std::stringstream ss;
        ss << f.rdbuf();
        content = ss.str();
    }

    Json root;
    try {
        root = Json::parse(content);
    } catch (const Json::parse_error& e) {
        throw SchemaError("<root>", std::string("malformed JSON: ") + e.what());
    }

    const std::int64_t schema = io::read_int(io::require(root, "schema", ""), "schema");
    if (schema != io::kSchemaVersion)
        throw SchemaError("schema", "unsupported schema version " + std::to_string(schema));

    Problem p;
    if (root.contains("kind"))
        p.kind = io::read_string(root["kind"], "kind");
    if (expected_kind.empty()) {
        if (p.kind.empty())
            throw SchemaError("kind", "missing field");
    } else if (!p.kind.empty() && p.kind != expected_kind) {
        throw SchemaError("kind", "file declares kind '" + p.kind + "' but command '" + expected_kind + "' was run");
    } else {
        p.kind = expected_kind;
    }

    p.payload = io::require(root, "payload", "");
    if (!p.payload.is_object())
        throw SchemaError("payload", "expected an object");

    if (root.contains("options")) {
        const Json& opts = root["options"];
        if (!opts.is_object())
            throw SchemaError("options", "expected an object");
        if (opts.contains("floor"))
            p.floor = io::read_int(opts["floor"], "options.floor");
        if (opts.contains("cap"))
            p.cap = io::read_int(opts["cap"], "options.cap");
        if (opts.contains("e_max_override"))
            p.e_max_override = io::read_int(opts["e_max_override"], "options.e_max_override");
    }
    if (settings.floor)
        p.floor = *settings.floor;
    if (settings.cap)
        p.cap = *settings.cap;
    if (p.cap < 0)
        throw SchemaError("options.cap", "must be >= 0");
    return p;
}

std::vector<std::string> string_list(const Json& value, const std::string& path) {
    if (!value.is_array())
        throw SchemaError(path, "expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < value.size(); ++i)
        out.push_back(io::read_string(value[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<std::string> optional_variables(const Json& payload) {
    return payload.contains("variables") ? string_list(payload["variables"], "payload.variables")
                                         : std::vector<std::string>{};
}

std::vector<MultiPoly> read_polys(const Json& value, const std::string& path, const std::vector<std::string>& vars) {
    const auto texts = string_list(value, path);
    return parse_polynomials(texts, vars);
}

std::string join_strings(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i)
        out += (i ? sep : "") + items[i];
    return out;
}

// --- jets -----------------------------------------------------------------

Outcome cmd_jets(const Problem& p) {
    const auto vars = optional_variables(p.payload);
    const auto gens = read_polys(io::require(p.payload, "generators", "payload"), "payload.generators", vars);
    if (gens.empty())
        throw SchemaError("payload.generators", "expected at least one generator");
    const auto& ideal_vars = gens.front().variables();
    const PolySystem ideal(ideal_vars, gens);

    Outcome out;
    out.json["variables"] = ideal_vars;
    std::vector<std::string> text_lines;
    if (p.payload.contains("n")) {
        const std::int64_t n = io::read_int(p.payload["n"], "payload.n");
        if (n < 0)
            throw SchemaError("payload.n", "must be >= 0");
        const PolySystem jets = jet_equations(ideal, static_cast<std::size_t>(n));
        const auto eqs = jets.sorted_strings();
        out.json["jet_variables"] = jets.variables();
        out.json["equations"] = eqs;
        text_lines.insert(text_lines.end(), eqs.begin(), eqs.end());
    }
    const bool hx = p.payload.contains("hx") && p.payload["hx"].is_boolean() && p.payload["hx"].get<bool>();
    if (hx || p.payload.contains("minors_dim")) {
        PolySystem H;
        if (hx) {
            if (gens.size() != 1)
                throw SchemaError("payload.hx", "H_X is computed for a single hypersurface equation");
            H = hypersurface_HX(gens.front());
        } else {
            const std::int64_t d = io::read_int(p.payload["minors_dim"], "payload.minors_dim");
            if (d < 0)
                throw SchemaError("payload.minors_dim", "must be >= 0");
            H = jacobian_minors(gens, ideal_vars.size(), static_cast<std::size_t>(d));
        }
        std::vector<std::string> hs;
        for (const auto& g : H.generators())
            hs.push_back(g.to_string());
        out.json["H_X"] = hs;
        text_lines.push_back("H_X: " + join_strings(hs, ", "));
    }
    if (text_lines.empty())
        throw SchemaError("payload", "nothing to compute: give 'n', 'hx' or 'minors_dim'");
    out.text = join_strings(text_lines, "\n");
    return out;
}

// --- compose --------------------------------------------------------------

Outcome cmd_compose(const Problem& p) {
    const auto vars = optional_variables(p.payload);
    const std::string ftext = io::read_string(io::require(p.payload, "f", "payload"), "payload.f");
    const MultiPoly f = MultiPoly::parse(ftext, vars);
    const auto cap = static_cast<std::size_t>(p.cap);
    const ArcJet gamma = io::read_arc(io::require(p.payload, "arc", "payload"), "payload.arc", cap);

    const TruncSeries s = compose(f, gamma);
    std::vector<std::string> coeffs;
    for (const auto& c : s.coeffs())
        coeffs.push_back(c.get_str());

    Outcome out;
    out.json["cap"] = p.cap;
    out.json["series"] = coeffs;
    out.json["order"] = series_order(s).to_string();
    std::vector<std::string> lines{"series: " + join_strings(coeffs, " "), "order: " + series_order(s).to_string()};

    if (p.payload.contains("H")) {
        const auto H = read_polys(p.payload["H"], "payload.H", f.variables());
        const SeriesOrder level = arc_level(gamma, PolySystem(f.variables(), H));
        out.json["level"] = level.to_string();
        lines.push_back("level: " + level.to_string());
    }
    if (p.payload.contains("sigma")) {
        const auto sigma = read_polys(p.payload["sigma"], "payload.sigma", f.variables());
        const std::int64_t d = io::read_int(io::require(p.payload, "minor_dim", "payload"), "payload.minor_dim");
        const SeriesOrder o = ord_jac_along(sigma, gamma, static_cast<std::size_t>(d));
        out.json["ord_jac"] = o.to_string();
        lines.push_back("ord_jac: " + o.to_string());
    }
    if (p.payload.contains("entries")) {
        const Json& je = p.payload["entries"];
        if (!je.is_array())
            throw SchemaError("payload.entries", "expected an array of [numerator, denominator] pairs");
        std::vector<RationalEntry> entries;
        for (std::size_t i = 0; i < je.size(); ++i) {
            const std::string ep = "payload.entries[" + std::to_string(i) + "]";
            const auto pair = string_list(je[i], ep);
            if (pair.size() != 2)
                throw SchemaError(ep, "expected [numerator, denominator]");
            const auto polys = parse_polynomials(pair, f.variables());
            entries.push_back({polys[0], polys[1]});
        }
        const SeriesOrder o = jacobian_matrix_order(entries, gamma);
        out.json["matrix_order"] = o.to_string();
        lines.push_back("matrix_order: " + o.to_string());
    }
    out.text = join_strings(lines, "\n");
    return out;
}

// --- measures -------------------------------------------------------------

MotiveSeries measure_from_json(const Json& desc, const std::string& path, std::int64_t floor) {
    if (desc.is_string())
        return io::read_series(desc, path).truncated(Degree(floor));
    if (!desc.is_object())
        throw SchemaError(path, "expected a series string or an object");
    if (desc.contains("series"))
        return io::read_series(desc["series"], path + ".series").truncated(Degree(floor));
    if (desc.contains("stable"))
        return MotiveSeries(measure_stable(io::read_stable(desc["stable"], path + ".stable")), Degree(floor));
    if (desc.contains("cylinder"))
        return MotiveSeries(measure_cylinder(io::read_cylinder(desc["cylinder"], path + ".cylinder")), Degree(floor));
    if (desc.contains("resolution")) {
        const auto D = io::read_diagram(desc["resolution"], path + ".resolution", false);
        std::string side = "source";
        if (desc.contains("side"))
            side = io::read_string(desc["side"], path + ".side");
        if (side == "source")
            return germ_measure(D.source_data(), floor);
        if (side == "image")
            return image_measure(D, floor);
        throw SchemaError(path + ".side", "expected 'source' or 'image'");
    }
    throw SchemaError(path, "expected one of 'series', 'stable', 'cylinder', 'resolution'");
}

Outcome series_outcome(const std::string& key, const MotiveSeries& s) {
    Outcome out;
    out.text = s.to_string();
    out.json[key] = s.to_string();
    return out;
}

Outcome cmd_measure(const Problem& p) {
    Outcome out = series_outcome("measure", measure_from_json(p.payload, "payload", p.floor));
    out.json["floor"] = p.floor;
    return out;
}

Outcome cmd_integrate(const Problem& p) {
    const auto D = io::read_diagram(io::require(p.payload, "resolution", "payload"), "payload.resolution", false);
    std::string side = "source";
    if (p.payload.contains("side"))
        side = io::read_string(p.payload["side"], "payload.side");
    if (side != "source" && side != "image")
        throw SchemaError("payload.side", "expected 'source' or 'image'");
    const ResolutionData R = side == "source" ? D.source_data() : D.target_data();

    std::vector<MultiplicityVector> alpha;
    if (p.payload.contains("alpha")) {
        const Json& ja = p.payload["alpha"];
        if (!ja.is_array() || ja.size() != R.strata.size())
            throw SchemaError("payload.alpha", "expected one integer array per stratum");
        for (std::size_t s = 0; s < ja.size(); ++s) {
            const std::string ap = "payload.alpha[" + std::to_string(s) + "]";
            alpha.push_back(io::read_int_list(ja[s], ap));
            if (alpha.back().size() != R.strata[s].index_set.size())
                throw SchemaError(ap, "length differs from the stratum's index_set");
        }
    }
    std::string method = "closed";
    if (p.payload.contains("method"))
        method = io::read_string(p.payload["method"], "payload.method");

    MotiveSeries value;
    if (method == "closed")
        value = motivic_integral(R, alpha, p.floor);
    else if (method == "enumerate")
        value = motivic_integral_by_enumeration(R, alpha, p.floor, p.e_max_override);
    else
        throw SchemaError("payload.method", "expected 'closed' or 'enumerate'");
    Outcome out = series_outcome("integral", value);
    out.json["floor"] = p.floor;
    return out;
}

Outcome cmd_compare(const Problem& p) {
    const MotiveSeries a = measure_from_json(io::require(p.payload, "a", "payload"), "payload.a", p.floor);
    const MotiveSeries b = measure_from_json(io::require(p.payload, "b", "payload"), "payload.b", p.floor);
    const Order o = compare_germ_measures(a, b);
    Outcome out;
    out.text = std::string(to_string(o));
    out.json["a"] = a.to_string();
    out.json["b"] = b.to_string();
    out.json["relation"] = std::string(to_string(o));
    return out;
}

// --- check-map ------------------------------------------------------------

Outcome cmd_check_map(const Problem& p) {
    const auto D = io::read_diagram(io::require(p.payload, "diagram", "payload"), "payload.diagram", true);
    const MotiveSeries muX = p.payload.contains("mu_x") ? measure_from_json(p.payload["mu_x"], "payload.mu_x", p.floor)
                                                        : germ_measure(D.source_data(), p.floor);
    const MotiveSeries muY = p.payload.contains("mu_y") ? measure_from_json(p.payload["mu_y"], "payload.mu_y", p.floor)
                                                        : image_measure(D, p.floor);
    std::string theorem = "auto";
    if (p.payload.contains("theorem"))
        theorem = io::read_string(p.payload["theorem"], "payload.theorem");
    if (theorem != "auto" && theorem != "inverse" && theorem != "compare")
        throw SchemaError("payload.theorem", "expected 'auto', 'inverse' or 'compare'");

    std::vector<TheoremReport> reports;
    if (theorem != "compare")
        reports.push_back(inverse_mapping_report(D, muX, muY));
    if (theorem == "compare" || (theorem == "auto" && reports.back().conclusion == Conclusion::Inconclusive))
        reports.push_back(measure_comparison_report(D, muX, muY));

    const Conclusion final_conclusion = reports.back().conclusion;
    Outcome out;
    out.json["schema"] = io::kSchemaVersion;
    out.json["kind"] = "check-map";
    out.json["floor"] = p.floor;
    out.json["conclusion"] = std::string(to_string(final_conclusion));
    Json rs = Json::array();
    for (const auto& r : reports)
        rs.push_back(io::write_report(r));
    out.json["reports"] = std::move(rs);
    out.text = out.json.dump(2);
    out.exit_code = final_conclusion == Conclusion::Inconclusive ? kExitInconclusive : kExitOk;
    return out;
}

Outcome dispatch(const Problem& p) {
    static const std::map<std::string, std::function<Outcome(const Problem&)>> handlers = {
        {"jets", cmd_jets},       {"compose", cmd_compose}, {"measure", cmd_measure},
        {"integrate", cmd_integrate}, {"compare", cmd_compare}, {"check-map", cmd_check_map},
    };
    auto it = handlers.find(p.kind);
    if (it == handlers.end())
        throw SchemaError("kind", "unknown kind '" + p.kind + "'");
    return it->second(p);
}

// --- selfcheck ------------------------------------------------------------

LaurentPoly random_laurent(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count(0, 4), exponent(-5, 5), coeff(-6, 6);
    LaurentPoly p;
    for (int i = count(rng); i > 0; --i)
        p += LaurentPoly::monomial(coeff(rng), exponent(rng));
    return p;
}

int cmd_selfcheck(const Settings& s, std::ostream& out) {
    std::mt19937_64 rng(s.seed);
    int failures = 0;
    for (int t = 0; t < s.trials; ++t) {
        const auto a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
        const bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a * b == b * a &&
                        a * (b + c) == a * b + a * c && (a * b).is_zero() == (a.is_zero() || b.is_zero());
        failures += ok ? 0 : 1;
    }
    out << "ring_axioms: " << (failures == 0 ? "ok" : "FAILED") << " (" << s.trials << " trials, seed " << s.seed
        << ")\n";

    int cov_failures = 0;
    std::uniform_int_distribution<int> mult(0, 3), size(0, 2), cls(1, 3);
    for (int t = 0; t < s.trials / 10 + 1; ++t) {
        ResolutionData R;
        const int d = 2;
        const int n_strata = 1 + size(rng);
        for (int k = 0; k < n_strata; ++k) {
            const int width = size(rng);
            SNCStratum S{"s" + std::to_string(k), {}, LaurentPoly::u(cls(rng) - 1) + LaurentPoly(1), d};
            MultiplicityVector m;
            for (int i = 0; i < width; ++i) {
                S.index_set.push_back(i);
                m.push_back(mult(rng));
            }
            R.strata.push_back(S);
            R.jac_mults.push_back(m);
        }
        const auto closed = motivic_integral(R, {}, -20);
        const auto enumerated = motivic_integral_by_enumeration(R, {}, -20);
        cov_failures += closed == enumerated ? 0 : 1;
    }
    out << "change_of_variables: " << (cov_failures == 0 ? "ok" : "FAILED") << "\n";
    return failures + cov_failures == 0 ? kExitOk : kExitInternal;
}

int report_error(std::ostream& err, const std::string& what, int code) {
    err << "error: " << what << "\n";
    return code;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact motivic measures and integrals on arc spaces"};
    app.require_subcommand(1);
    Settings settings;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", settings.file, "problem file (JSON), '-' for stdin");
        sub->add_option("--floor", settings.floor, "precision floor (default -16)");
        sub->add_option("--cap", settings.cap, "truncation cap for arcs (default 12)");
        sub->add_option("--format", settings.format, "output format")->check(CLI::IsMember({"text", "json"}));
    };

    std::vector<std::pair<CLI::App*, std::string>> kinds;
    for (const char* kind : {"jets", "compose", "measure", "integrate", "compare", "check-map"}) {
        CLI::App* sub = app.add_subcommand(kind, std::string("solve a '") + kind + "' problem file");
        add_common(sub);
        kinds.emplace_back(sub, kind);
    }
    CLI::App* run_sub = app.add_subcommand("run", "solve a problem file of any kind");
    add_common(run_sub);
    CLI::App* selfcheck = app.add_subcommand("selfcheck", "randomized consistency checks");
    selfcheck->add_option("--seed", settings.seed, "random seed");
    selfcheck->add_option("--trials", settings.trials, "number of trials")->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty())
        reversed.pop_back(); // program name
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitSchema;
    }

    if (selfcheck->parsed())
        return cmd_selfcheck(settings, out);

    std::string kind;
    for (const auto& [sub, name] : kinds)
        if (sub->parsed())
            kind = name;

    std::int64_t floor_for_hint = settings.floor.value_or(kDefaultFloor);
    try {
        const Problem problem = load_problem(settings, kind, in);
        floor_for_hint = problem.floor;
        Outcome outcome = dispatch(problem);
        if (settings.format == "json" || problem.kind == "check-map")
            out << outcome.json.dump(2) << "\n";
        else
            out << outcome.text << "\n";
        return outcome.exit_code;
    } catch (const DivergentExponent& e) {
        return report_error(err, e.what(), kExitDivergent);
    } catch (const PrecisionExhausted& e) {
        const std::int64_t deeper = floor_for_hint < 0 ? 2 * floor_for_hint : kDefaultFloor;
        return report_error(err, std::string(e.what()) + "; try --floor " + std::to_string(deeper), kExitPrecision);
    } catch (const Error& e) {
        return report_error(err, e.what(), kExitSchema);
    } catch (const std::exception& e) {
        return report_error(err, std::string("internal: ") + e.what(), kExitInternal);
    }
}

} // namespace motivic::cli
