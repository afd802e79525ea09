#include "qtorus/error.hpp"
#include "qtorus/json_io.hpp"
#include "qtorus/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

using namespace qtorus;
using io::Json;

namespace {

struct Options {
    std::string config;
    std::string points;
    std::string r;
    std::string rep;
    std::string lhs;
    std::string rhs;
    std::optional<std::int64_t> d;
    std::optional<std::int64_t> window;
    std::optional<std::int64_t> k;
    std::size_t trials = 100;
    std::uint64_t seed = default_seed;
};

// Exit status 1: an asserted identity failed on the instance.
struct Outcome {
    Json body;
    bool ok = true;
};

Json suite_json(const SuiteReport& s) {
    return {{"suite", s.name}, {"trials", s.trials}, {"checks", s.checks}, {"failures", s.failures},
            {"counters", s.counters}};
}

Json load(const std::string& path_or_json) {
    if (!path_or_json.empty() && (path_or_json.front() == '{' || path_or_json.front() == '[')) {
        try {
            return Json::parse(path_or_json);
        } catch (const nlohmann::json::exception& e) {
            fail(ErrorCode::invalid_input, e.what());
        }
    }
    return io::read_file(path_or_json);
}

void require(const std::string& value, const char* flag) {
    if (value.empty())
        fail(ErrorCode::invalid_input, std::string("missing required flag ") + flag);
}

// --config holds either a torus config or a full module spec.
io::ModuleSpec module_spec(const Options& o) {
    require(o.config, "--config");
    const Json j = load(o.config);
    Json spec = j.contains("torus") ? j : Json{{"torus", j}};
    if (o.d)
        spec["d"] = *o.d;
    if (!o.rep.empty())
        spec["rep"] = o.rep;
    if (o.window)
        spec["window"] = *o.window;
    if (!o.points.empty())
        spec["points"] = load(o.points);
    return io::module_spec_from_json(spec);
}

QMatrixPtr torus(const Options& o) { return module_spec(o).torus; }

std::size_t matrix_size(const Options& o) {
    const std::int64_t d = o.d.value_or(2);
    if (d < 1)
        fail(ErrorCode::invalid_input, "--d must be positive");
    return static_cast<std::size_t>(d);
}

FinRep build_rep(const io::ModuleSpec& s) { return make_rep(s.torus, s.d, s.points, s.rep); }

Outcome torus_describe(const Options& o) {
    const auto q = torus(o);
    Json body = io::to_json(*q);
    body["radf_basis"] = q->radf().basis();
    body["radf_index"] = q->radf().index();
    body["elementary_divisors"] = q->radf().elementary_divisors();
    body["N"] = q->central_powers();
    body["commutative"] = q->is_commutative();
    return {body};
}

Outcome torus_verify(const Options& o) {
    const auto q = torus(o);
    const auto cocycle = cocycle_suite(q, o.trials, o.seed);
    const auto center = center_suite(q, o.trials, o.seed + 1);
    return {{{"suites", {suite_json(cocycle), suite_json(center)}},
             {"failures", cocycle.failures + center.failures}},
            cocycle.ok() && center.ok()};
}

Outcome hc1_dim(const Options& o) {
    const auto q = torus(o);
    require(o.r, "--r");
    const Degree r = io::parse_degree(o.r, q->n());
    return {{{"r", io::to_json(r)}, {"in_radf", q->in_radf(r)}, {"dim", graded_dim(*q, r)}}};
}

Outcome hc1_oracle(const Options& o) {
    const auto q = torus(o);
    require(o.r, "--r");
    const Degree r = io::parse_degree(o.r, q->n());
    const std::int64_t support = o.window.value_or(3);
    if (support < 1)
        fail(ErrorCode::invalid_input, "--window must be positive");
    const std::size_t oracle = bruteforce_dim(*q, r, support);
    const std::size_t dim = graded_dim(*q, r);
    return {{{"r", io::to_json(r)}, {"support", support}, {"dim", oracle}, {"graded_dim", dim}, {"agree", oracle == dim}},
            oracle == dim};
}

Outcome bracket_cmd(const Options& o) {
    const auto q = torus(o);
    const std::size_t d = matrix_size(o);
    require(o.lhs, "--lhs");
    require(o.rhs, "--rhs");
    const auto x = io::toroidal_from_json(q, d, load(o.lhs));
    const auto y = io::toroidal_from_json(q, d, load(o.rhs));
    return {{{"result", io::to_json(bracket(x, y))}}};
}

Outcome fiber_decompose(const Options& o) {
    const auto s = module_spec(o);
    Json fibers = Json::array();
    for (const auto& k : s.points.tuples()) {
        Json item = io::to_json(wedderburn(build_fiber(s.torus, s.points, k)));
        item["k"] = k;
        fibers.push_back(std::move(item));
    }
    IntVector box;
    std::size_t expected = 1;
    for (std::size_t j = 0; j < s.torus->n(); ++j) {
        box.push_back(static_cast<std::int64_t>(s.points.values[j].size()) * s.torus->central_powers()[j]);
        expected *= static_cast<std::size_t>(box.back());
    }
    const std::size_t crt = crt_rank(s.torus, s.points);
    return {{{"fibers", fibers}, {"crt_rank", crt}, {"quotient_dim", expected}}, crt == expected};
}

Outcome fiber_rep(const Options& o) {
    const auto s = module_spec(o);
    const Pullback p = build_pullback(s.torus, s.points);
    Json reps = Json::array();
    bool ok = true;
    for (std::size_t t = 0; t < p.tuples.size(); ++t)
        for (const auto& r : p.reps[t]) {
            Json item = io::to_json(r);
            item["k"] = p.tuples[t];
            ok = ok && verify_relations(r);
            reps.push_back(std::move(item));
        }
    return {{{"reps", reps}}, ok};
}

Outcome module_build(const Options& o) {
    const auto s = module_spec(o);
    const FinRep rep = build_rep(s);
    Json parts = Json::array();
    for (const auto& p : rep.parts())
        parts.push_back(to_string(p));
    const auto axiom = module_axiom_suite(rep, o.trials, o.seed);
    Json indices = Json::array();
    for (std::size_t i = 0; i < s.d; ++i)
        for (std::size_t j = 0; j < s.d; ++j)
            if (i != j)
                indices.push_back({{"i", i + 1},
                                   {"j", j + 1},
                                   {"index", integrability_index(rep, Matrix::unit(s.d, s.d, i, j),
                                                                 Degree(s.torus->n()))}});
    return {{{"spec", io::to_json(s)},
             {"dim", rep.dim()},
             {"slice_dim", rep.dim()},
             {"parts", parts},
             {"blocks", rep.block_count()},
             {"module_axiom", suite_json(axiom)},
             {"integrability", indices}},
            axiom.ok()};
}

Outcome module_vplus(const Options& o) {
    const FinRep rep = build_rep(module_spec(o));
    const auto basis = vplus(rep);
    Json vectors = Json::array();
    for (const auto& v : basis)
        vectors.push_back(io::to_json(v));
    Json body{{"dim", basis.size()}, {"basis", vectors}};
    bool ok = !basis.empty();
    if (rep.block_count() == 1) {
        EchelonBasis a(rep.dim());
        for (const auto& v : basis)
            a.insert(v);
        const auto other = vplus_cosets(rep);
        bool agree = other.size() == basis.size();
        for (const auto& v : other)
            agree = agree && a.contains(v);
        body["cosets_agree"] = agree;
        ok = ok && agree;
    }
    return {body, ok};
}

Outcome module_weights(const Options& o) {
    const FinRep rep = build_rep(module_spec(o));
    auto spaces_json = [](const std::vector<WeightSpace>& spaces) {
        Json out = Json::array();
        for (const auto& w : spaces)
            out.push_back({{"weight", io::to_json(w.weight)}, {"mult", w.basis.size()}});
        return out;
    };
    const auto top = weight_spaces(rep, vplus(rep));
    bool dominant = true;
    for (const auto& w : top)
        dominant = dominant && is_dominant_integral(w.weight);
    const bool weyl = weyl_multiplicity_check(rep);
    Json central = Json::array();
    for (std::size_t i = 0; i < rep.torus()->n(); ++i) {
        const auto z = highest_central_operator(rep, i, o.k.value_or(4));
        central.push_back({{"i", i + 1},
                           {"found", z.found},
                           {"k", z.k},
                           {"h", z.h + 1},
                           {"degree", io::to_json(z.degree)},
                           {"rank", z.rank},
                           {"vplus_dim", z.vplus_dim}});
    }
    return {{{"vbar", spaces_json(weight_spaces(rep))},
             {"vplus", spaces_json(top)},
             {"dominant_integral", dominant},
             {"weyl_multiplicities", weyl},
             {"central_operators", central}},
            dominant && weyl};
}

Outcome module_decompose(const Options& o) {
    const auto s = module_spec(o);
    return {io::to_json(decompose_window(build_rep(s), s.window))};
}

Outcome module_lambda(const Options& o) {
    const FinRep rep = build_rep(module_spec(o));
    const std::int64_t k = o.k.value_or(6);
    if (k < 1)
        fail(ErrorCode::invalid_truncation, "truncation must be at least 1");
    const auto checks = loop_checks(rep, static_cast<std::size_t>(k));
    Json items = Json::array();
    bool ok = true;
    for (const auto& c : checks) {
        items.push_back({{"beta", c.beta + 1},
                         {"j", c.j + 1},
                         {"lambda", c.lambda_value.get_str()},
                         {"h_modes_vanish", c.h_modes_vanish},
                         {"lambda_modes_vanish", c.lambda_modes_vanish},
                         {"bound_holds", c.bound_holds},
                         {"forward", c.forward},
                         {"converse", c.converse}});
        ok = ok && c.forward && c.converse && c.bound_holds;
    }
    Json series = Json::array();
    if (const auto top = vplus(rep); !top.empty() && rep.rank_d() >= 2)
        for (const auto& v : lambda_series(rep, 0, 0, top.front(), static_cast<std::size_t>(k)))
            series.push_back(io::to_json(v));
    return {{{"truncation", k}, {"checks", items}, {"series", series}}, ok};
}

Outcome verify_jacobi(const Options& o) {
    const auto s = jacobi_suite(torus(o), matrix_size(o), o.trials, o.seed);
    Json body = suite_json(s);
    return {body, s.ok()};
}

int emit(Json body, int status) {
    body["schema_version"] = io::schema_version;
    std::cout << body.dump(2) << '\n';
    return status;
}

int emit_error(const std::string& code, const std::string& message, int status) {
    return emit({{"error", {{"code", code}, {"message", message}}}}, status);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with rational quantum tori and toroidal Lie algebras"};
    app.require_subcommand(1);
    Options o;
    std::function<Outcome(const Options&)> action;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", o.config, "torus config or module spec (path or inline JSON)");
        cmd->add_option("--seed", o.seed, "random seed");
        cmd->add_option("--trials", o.trials, "number of random trials");
    };
    auto add_module_flags = [&](CLI::App* cmd) {
        cmd->add_option("--d", o.d, "matrix size d");
        cmd->add_option("--points", o.points, "evaluation points JSON");
        cmd->add_option("--rep", o.rep, "representation, e.g. natural, adjoint:1, natural+trivial");
        cmd->add_option("--window", o.window, "window bound B");
        cmd->add_option("--k", o.k, "truncation or search bound");
    };
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                    Outcome (*fn)(const Options&)) {
        CLI::App* cmd = parent->add_subcommand(name, help);
        add_common(cmd);
        cmd->callback([&action, fn] { action = fn; });
        return cmd;
    };

    CLI::App* torus_cmd = app.add_subcommand("torus", "quantum torus data")->require_subcommand(1);
    leaf(torus_cmd, "describe", "rad f, central powers and lattice invariants", torus_describe);
    leaf(torus_cmd, "verify", "cocycle and centre identity suites", torus_verify);

    CLI::App* hc1_cmd = app.add_subcommand("hc1", "cyclic homology HC_1")->require_subcommand(1);
    leaf(hc1_cmd, "dim", "graded dimension", hc1_dim)->add_option("--r", o.r, "degree a,b,...");
    auto* oracle = leaf(hc1_cmd, "oracle", "brute-force dimension", hc1_oracle);
    oracle->add_option("--r", o.r, "degree a,b,...");
    oracle->add_option("--window", o.window, "support bound D");

    auto* br = app.add_subcommand("bracket", "bracket of two elements of tau-hat(d,q)");
    add_common(br);
    br->add_option("--d", o.d, "matrix size d");
    br->add_option("--lhs", o.lhs, "element JSON (path or inline)");
    br->add_option("--rhs", o.rhs, "element JSON (path or inline)");
    br->callback([&] { action = bracket_cmd; });

    CLI::App* fiber_cmd = app.add_subcommand("fiber", "fiber algebras at evaluation points")->require_subcommand(1);
    for (auto* c : {leaf(fiber_cmd, "decompose", "Wedderburn data per point tuple", fiber_decompose),
                    leaf(fiber_cmd, "rep", "irreducible representations per block", fiber_rep)})
        c->add_option("--points", o.points, "evaluation points JSON");

    CLI::App* module_cmd = app.add_subcommand("module", "graded modules Vbar (x) A_n")->require_subcommand(1);
    for (auto* c : {leaf(module_cmd, "build", "dimensions, module axiom, integrability", module_build),
                    leaf(module_cmd, "vplus", "highest weight space", module_vplus),
                    leaf(module_cmd, "weights", "weights, dominance, central operators", module_weights),
                    leaf(module_cmd, "decompose", "windowed decomposition into components", module_decompose),
                    leaf(module_cmd, "lambda", "Lambda-series and the loop criterion", module_lambda)})
        add_module_flags(c);

    CLI::App* verify_cmd = app.add_subcommand("verify", "randomized identity suites")->require_subcommand(1);
    leaf(verify_cmd, "jacobi", "Jacobi identity on tau-hat(d,q)", verify_jacobi)->add_option("--d", o.d, "matrix size d");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return emit_error("invalid-input", e.what(), 2);
    }

    try {
        Outcome out = action(o);
        return emit(std::move(out.body), out.ok ? 0 : 1);
    } catch (const Error& e) {
        const bool verification = e.code() == ErrorCode::internal_inconsistency || e.code() == ErrorCode::not_integrable;
        return emit_error(std::string(to_string(e.code())), e.what(), verification ? 1 : 2);
    } catch (const std::exception& e) {
        return emit_error("invalid-input", e.what(), 2);
    }
}
