#include "quasinet/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "quasinet/certify.hpp"
#include "quasinet/network.hpp"
#include "quasinet/random.hpp"
#include "quasinet/scan.hpp"
#include "quasinet/serialize.hpp"

namespace quasinet::cli {

namespace {

Json read_json_file(const std::string& path) {
    if (path.empty()) throw Error("--config <path> is required");
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw Error("malformed JSON in '" + path + "': " + e.what());
    }
}

// Runs `body` against either the caller's stream or the --out file, mapping
// exceptions onto the exit-code contract.
int guarded(const Options& options, std::ostream& out, std::ostream& err,
            const std::function<int(std::ostream&)>& body) {
    try {
        if (options.out.empty()) return body(out);
        std::ostringstream buffer;
        const int code = body(buffer);
        std::ofstream file(options.out);
        if (!file) throw Error("cannot write '" + options.out + "'");
        file << buffer.str();
        return code;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
}

void require_format(const Options& options, std::initializer_list<const char*> allowed) {
    if (options.format.empty()) return;
    for (const char* f : allowed) {
        if (options.format == f) return;
    }
    throw Error("unsupported --format '" + options.format + "' for this command");
}

Json report_for(const QuasiDistribution& r, const std::vector<Rational>& source_negativities,
                const std::optional<Rational>& process_negativity) {
    Json report = Json::object();
    if (r.vars() == canonical_vars()) {
        const Rational i = correlator_i(r), j = correlator_j(r);
        report["I"] = to_string(i);
        report["J"] = to_string(j);
        report["bilocal_value"] = bilocal_value(r);
        report["satisfies_bilocal_inequality"] = satisfies_bilocal_inequality(i, j);
        report["region"] = std::string(region_name(classify_distribution(r)));
    }
    Json negs = Json::array();
    for (const auto& n : source_negativities) negs.push_back(to_string(n));
    report["negativity_sources"] = std::move(negs);
    if (process_negativity) report["negativity_process"] = to_string(*process_negativity);
    report["negativity_output"] = to_string(negativity(r));
    return report;
}

// ------------------------------------------------------------------- demo

class Checklist {
public:
    explicit Checklist(std::ostream& out) : out_(out) {}

    void check(const std::string& what, const std::function<bool()>& test) {
        bool ok = false;
        std::string note;
        try {
            ok = test();
        } catch (const std::exception& e) {
            note = std::string(" (threw: ") + e.what() + ")";
        }
        out_ << (ok ? "PASS  " : "FAIL  ") << what << note << '\n';
        failures_ += ok ? 0 : 1;
    }

    int failures() const { return failures_; }

private:
    std::ostream& out_;
    int failures_ = 0;
};

int demo_body(const Options& options, std::ostream& out) {
    Checklist c(out);
    const Rational half(1, 2), quarter(1, 4);

    c.check("source at mu=1/2 is a proper distribution with CHSH value 2", [&] {
        const auto q = source_family(half, Side::AB);
        const auto e = to_correlators(q);
        auto pair = [&](const char* a, const char* b) { return e.at(std::vector<std::string>{a, b}); };
        const Rational chsh = pair("a0", "beta0") + pair("a0", "beta1") + pair("a1", "beta0") - pair("a1", "beta1");
        return is_nonnegative(q) && chsh == 2;
    });
    c.check("source at mu=3/4 has negativity > 1", [&] { return negativity(source_family(Rational(3, 4), Side::AB)) > 1; });
    c.check("coupler(1) is stochastic and coupler(6/5) is not", [&] {
        return is_stochastic(coupler(1)) && !is_stochastic(coupler(Rational(6, 5)));
    });
    c.check("coupler(6/5) = 11/10 parity + (-1/10) flipped parity, bitwise", [&] {
        const Rational eta(6, 5);
        const auto w = nebit_decompose(eta);
        const auto mixed = affine_combination(parity_map("beta0", "betap0", "b0"),
                                              flipped_parity_map("beta0", "betap0", "b0"), w.w_and);
        return w.w_and == Rational(11, 10) && w.w_nand == Rational(-1, 10) &&
               mixed == bit_coupler(eta, "beta0", "betap0", "b0");
    });
    c.check("compose(eta=1, mu1=mu2=1/2) equals the closed form at t=1/4", [&] {
        return compose_bilocal(BilocalParams{half, half, Rational(1)}) == closed_form(quarter);
    });
    c.check("closed form at t=1/4 has I = J = 1/4 and bilocal value exactly 1", [&] {
        const auto r = closed_form(quarter);
        const Rational i = correlator_i(r), j = correlator_j(r);
        return i == quarter && j == quarter && satisfies_bilocal_inequality(i, j) &&
               !bilocal_value_at_most(i, j, Rational(999999, 1000000));
    });
    c.check("region bounds: 1/4 BILOCAL, 1/2 BIQUANTUM, 1 BEYOND_BQ, 1001/1000 UNPHYSICAL", [&] {
        return classify(quarter) == Region::Bilocal && classify(half) == Region::Biquantum &&
               classify(1) == Region::BeyondBiquantum && classify(Rational(1001, 1000)) == Region::Unphysical;
    });
    c.check("N(r_BQ) = 3/2", [&] { return negativity(make_rbq()) == Rational(3, 2); });
    c.check("r_BQ+ is nonnegative and shares every observable marginal with r_BQ", [&] {
        const auto plus = make_rbq_plus();
        return is_nonnegative(plus) &&
               observable_marginals(plus).behavior == observable_marginals(make_rbq()).behavior;
    });
    c.check("r_BQ+ is inseparable after summing out b0,b1", [&] {
        const auto ac = marginalize(make_rbq_plus(), std::vector<std::string>{"a0", "a1", "c0", "c1"});
        return !separability_check(ac, {"a0", "a1"}, {"c0", "c1"});
    });
    c.check("r_BQ is separable after summing out b0,b1", [&] {
        const auto ac = marginalize(make_rbq(), std::vector<std::string>{"a0", "a1", "c0", "c1"});
        return separability_check(ac, {"a0", "a1"}, {"c0", "c1"});
    });
    c.check("noisy r_BQ at V=1/2 has bilocal value exactly 1 and is a proper distribution", [&] {
        const auto r = make_rbq_noisy(half);
        const Rational i = correlator_i(r), j = correlator_j(r);
        // sqrt|I| + sqrt|J| = 1 exactly: (1 - |I| - |J|)^2 = 4|I||J| on the bilocal side.
        const Rational slack = 1 - abs(i) - abs(j);
        return satisfies_bilocal_inequality(i, j) && slack * slack == 4 * abs(i) * abs(j) && is_nonnegative(r) &&
               r == mix(make_rbq(), uniform(canonical_vars()), half);
    });
    c.check("noisy r_BQ at V=501/1000 violates the bilocal inequality", [&] {
        const auto r = make_rbq_noisy(Rational(501, 1000));
        return !satisfies_bilocal_inequality(correlator_i(r), correlator_j(r));
    });
    c.check("Bob joint marginals are nonnegative at t=1/2 and not at t=3/4", [&] {
        return bob_joint_marginals_check(closed_form(half)) && !bob_joint_marginals_check(closed_form(Rational(3, 4)));
    });
    c.check("observable marginals at t=1/2 admit a local model (certificate verified)", [&] {
        const auto b = observable_marginals(closed_form(half)).behavior;
        const auto cert = locality_lp(b);
        return cert.local() && verify_locality(b, cert);
    });
    c.check("observable marginals at t=3/5 are nonlocal (witness verified)", [&] {
        const auto b = observable_marginals(closed_form(Rational(3, 5))).behavior;
        const auto cert = locality_lp(b);
        return !cert.local() && verify_locality(b, cert);
    });

    const int trials = 200;
    c.check("bilocal inequality holds on " + std::to_string(trials) + " random bilocal models (seed " +
                std::to_string(options.seed) + ")",
            [&] {
                InstanceGenerator gen(options.seed);
                for (int k = 0; k < trials; ++k) {
                    BilocalScenario s{gen.distribution(source_ab_vars()), gen.distribution(source_bc_vars()),
                                      gen.stochastic(VariableSet{"beta0", "beta1", "betap0", "betap1"},
                                                     VariableSet{"b0", "b1"})};
                    const auto r = compose_bilocal(s);
                    if (!satisfies_bilocal_inequality(correlator_i(r), correlator_j(r))) return false;
                }
                return true;
            });

    out << (c.failures() == 0 ? "all checks passed" : std::to_string(c.failures()) + " check(s) failed") << '\n';
    return c.failures() == 0 ? kOk : kInternalError;
}

}  // namespace

int cmd_compose(const Options& options, std::ostream& out, std::ostream& err) {
    return guarded(options, out, err, [&](std::ostream& os) {
        require_format(options, {"json"});
        const Scenario scenario = scenario_from_json(read_json_file(options.config));
        Json doc;
        if (const auto* params = std::get_if<BilocalParams>(&scenario)) {
            const auto s = parametric_scenario(*params);
            const auto r = compose_bilocal(s);
            Json report = to_json(bilocal_report(s));
            report["t"] = to_string(params->t());
            report["parametric_region"] = std::string(region_name(classify(params->t())));
            doc = Json{{"distribution", to_json(r)}, {"report", std::move(report)}};
        } else if (const auto* s = std::get_if<BilocalScenario>(&scenario)) {
            doc = Json{{"distribution", to_json(compose_bilocal(*s))}, {"report", to_json(bilocal_report(*s))}};
        } else {
            const auto& net = std::get<ChainNetwork>(scenario);
            auto r = compose_chain(net);
            std::vector<Rational> negs;
            for (const auto& q : net.sources) negs.push_back(negativity(q));
            std::optional<Rational> proc;
            for (const auto& p : net.processors) {
                const Rational n = column_negativity(p);
                proc = proc ? *proc * n : n;
            }
            if (r.vars().same_members(canonical_vars())) r = r.reorder(canonical_vars());
            doc = Json{{"distribution", to_json(r)}, {"report", report_for(r, negs, proc)}};
        }
        os << doc.dump(2) << '\n';
        return kOk;
    });
}

int cmd_scan(const Options& options, std::ostream& out, std::ostream& err) {
    return guarded(options, out, err, [&](std::ostream& os) {
        require_format(options, {"csv", "json"});
        const ScanConfig config = scan_config_from_json(read_json_file(options.config));
        const auto rows = run_scan(config);
        if (options.format == "json") {
            os << rows_to_json(config, rows).dump(2) << '\n';
        } else {
            write_csv(os, config, rows);
        }
        return kOk;
    });
}

int cmd_certify(const Options& options, std::ostream& out, std::ostream& err) {
    return guarded(options, out, err, [&](std::ostream& os) {
        require_format(options, {"json"});
        const Behavior b = behavior_from_json(read_json_file(options.config));
        Json doc{{"normalized", b.normalized()},
                 {"no_signalling", b.no_signalling()},
                 {"nonnegative", b.nonnegative()}};
        try {
            b.validate();
        } catch (const Error& e) {
            doc["valid"] = false;
            doc["validation_error"] = e.what();
            os << doc.dump(2) << '\n';
            return kOk;
        }
        doc["valid"] = true;
        const auto locality = locality_lp(b);
        const auto negativity_cert = min_negativity_lp(b);
        doc["locality"] = to_json(locality, b.dims());
        doc["min_negativity"] = to_json(negativity_cert);
        doc["certificates_verified"] = verify_locality(b, locality) && verify_min_negativity(b, negativity_cert);
        os << doc.dump(2) << '\n';
        return kOk;
    });
}

int cmd_demo(const Options& options, std::ostream& out, std::ostream& err) {
    return guarded(options, out, err, [&](std::ostream& os) { return demo_body(options, os); });
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact composition and certification of quasi-probabilistic bilocal networks", "quasinet"};
    app.require_subcommand(1);
    Options options;
    auto add_common = [&](CLI::App* sub, bool needs_config) {
        auto* cfg = sub->add_option("--config", options.config, "Input JSON document");
        if (needs_config) cfg->required();
        sub->add_option("--out", options.out, "Write the result here instead of stdout");
        sub->add_option("--format", options.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--seed", options.seed, "Seed for randomized checks");
    };
    auto* compose = app.add_subcommand("compose", "Compose a bilocal or chain scenario");
    auto* scan = app.add_subcommand("scan", "Scan (eta, mu) and emit region data");
    auto* certify = app.add_subcommand("certify", "Certify locality and minimum negativity of a behavior");
    auto* demo = app.add_subcommand("demo", "Run the worked example and print identity checks");
    add_common(compose, true);
    add_common(scan, true);
    add_common(certify, true);
    add_common(demo, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    if (compose->parsed()) return cmd_compose(options, out, err);
    if (scan->parsed()) return cmd_scan(options, out, err);
    if (certify->parsed()) return cmd_certify(options, out, err);
    return cmd_demo(options, out, err);
}

}  // namespace quasinet::cli
