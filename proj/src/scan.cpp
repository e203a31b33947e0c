#include "quasinet/scan.hpp"

#include <cmath>
#include <cstdio>
#include <map>

#include "quasinet/certify.hpp"

namespace quasinet {

namespace {

const std::map<std::string, ScanOutput>& output_names() {
    static const std::map<std::string, ScanOutput> names{{"bilocal_value", ScanOutput::BilocalValue},
                                                         {"region", ScanOutput::Region},
                                                         {"source_negativity", ScanOutput::SourceNegativity},
                                                         {"process_negativity", ScanOutput::ProcessNegativity},
                                                         {"lp_verdict", ScanOutput::LpVerdict}};
    return names;
}

GridRange range_from(const Json& j, const char* name) {
    if (!j.is_object()) throw Error(std::string("'") + name + "' must be an object with min, max, steps");
    auto get = [&](const char* key) -> const Json& {
        auto it = j.find(key);
        if (it == j.end()) throw Error(std::string("'") + name + "' is missing '" + key + "'");
        return *it;
    };
    const Json& min = get("min");
    const Json& max = get("max");
    const Json& steps = get("steps");
    if (!min.is_string() || !max.is_string()) throw Error("range bounds must be \"num/den\" strings");
    if (!steps.is_number_unsigned()) throw Error("'steps' must be a positive integer");
    return {parse_rational(min.get<std::string>()), parse_rational(max.get<std::string>()), steps.get<std::size_t>()};
}

void check_range(const GridRange& r, const char* name, const Rational& hi) {
    if (r.steps < 2) throw Error(std::string(name) + " needs at least 2 steps");
    if (r.min < 0 || r.max > hi || r.min > r.max) {
        throw Error(std::string(name) + " range must satisfy 0 <= min <= max <= " + to_string(hi));
    }
}

std::string render(const Rational& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return to_string(v);
}

std::string decimal(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

Rational GridRange::at(std::size_t k) const {
    return min + (max - min) * ratio(static_cast<long>(k), static_cast<long>(steps - 1));
}

void ScanConfig::validate() const {
    check_range(eta, "eta", 2);
    check_range(mu, "mu", 1);
    if (!symmetric_mu) check_range(mu2, "mu2", 1);
    if (outputs.empty()) throw Error("scan needs at least one output column");
}

ScanConfig scan_config_from_json(const Json& j) {
    if (!j.is_object()) throw Error("scan config must be a JSON object");
    ScanConfig c;
    if (auto it = j.find("eta"); it != j.end()) c.eta = range_from(*it, "eta");
    if (auto it = j.find("mu"); it != j.end()) c.mu = range_from(*it, "mu");
    if (auto it = j.find("symmetric_mu"); it != j.end()) {
        if (!it->is_boolean()) throw Error("'symmetric_mu' must be a boolean");
        c.symmetric_mu = it->get<bool>();
    }
    if (auto it = j.find("mu2"); it != j.end()) {
        c.mu2 = range_from(*it, "mu2");
    } else {
        c.mu2 = c.mu;
    }
    if (auto it = j.find("outputs"); it != j.end()) {
        if (!it->is_array()) throw Error("'outputs' must be an array of column names");
        c.outputs.clear();
        for (const auto& name : *it) {
            if (!name.is_string()) throw Error("output names must be strings");
            auto found = output_names().find(name.get<std::string>());
            if (found == output_names().end()) throw Error("unknown scan output '" + name.get<std::string>() + "'");
            c.outputs.insert(found->second);
        }
    }
    c.validate();
    return c;
}

std::vector<ScanRow> run_scan(const ScanConfig& config) {
    config.validate();
    const GridRange& mu2_range = config.symmetric_mu ? config.mu : config.mu2;
    const bool want_lp = config.outputs.count(ScanOutput::LpVerdict) > 0;

    // Sources and couplers depend on one grid coordinate each.
    std::vector<QuasiDistribution> sources_ab, sources_bc;
    for (std::size_t k = 0; k < config.mu.steps; ++k) sources_ab.push_back(source_family(config.mu.at(k), Side::AB));
    for (std::size_t k = 0; k < mu2_range.steps; ++k) sources_bc.push_back(source_family(mu2_range.at(k), Side::BC));
    std::map<Rational, bool> lp_cache;

    std::vector<ScanRow> rows;
    rows.reserve(config.eta.steps * config.mu.steps * (config.symmetric_mu ? 1 : mu2_range.steps));
    for (std::size_t e = 0; e < config.eta.steps; ++e) {
        const Rational eta = config.eta.at(e);
        const QuasiStochasticProcess bob = coupler(eta);
        const bool process_neg = !is_stochastic(bob);
        const std::size_t inner = config.symmetric_mu ? 1 : mu2_range.steps;
        for (std::size_t m = 0; m < config.mu.steps; ++m) {
            for (std::size_t m2 = 0; m2 < inner; ++m2) {
                const std::size_t k2 = config.symmetric_mu ? m : m2;
                ScanRow row;
                row.eta = eta;
                row.mu1 = config.mu.at(m);
                row.mu2 = mu2_range.at(k2);
                row.t = eta * row.mu1 * row.mu2;
                const auto r = compose_bilocal(BilocalScenario{sources_ab[m], sources_bc[k2], bob});
                const Rational i = correlator_i(r), j = correlator_j(r);
                row.bilocal_value = std::sqrt(std::fabs(to_double(i))) + std::sqrt(std::fabs(to_double(j)));
                row.region = classify(row.t);
                row.source_neg = !is_nonnegative(sources_ab[m]) || !is_nonnegative(sources_bc[k2]);
                row.process_neg = process_neg;
                if (want_lp) {
                    auto cached = lp_cache.find(row.t);
                    if (cached == lp_cache.end()) {
                        const bool local = locality_lp(observable_marginals(r).behavior).local();
                        cached = lp_cache.emplace(row.t, local).first;
                    }
                    row.local = cached->second;
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

void write_csv(std::ostream& out, const ScanConfig& config, const std::vector<ScanRow>& rows) {
    const auto& o = config.outputs;
    out << (config.symmetric_mu ? "eta,mu,t" : "eta,mu1,mu2,t");
    if (o.count(ScanOutput::BilocalValue)) out << ",bilocal_value";
    if (o.count(ScanOutput::Region)) out << ",region";
    if (o.count(ScanOutput::SourceNegativity)) out << ",source_neg";
    if (o.count(ScanOutput::ProcessNegativity)) out << ",process_neg";
    if (o.count(ScanOutput::LpVerdict)) out << ",lp_verdict";
    out << '\n';
    for (const auto& r : rows) {
        out << render(r.eta) << ',' << render(r.mu1);
        if (!config.symmetric_mu) out << ',' << render(r.mu2);
        out << ',' << render(r.t);
        if (o.count(ScanOutput::BilocalValue)) out << ',' << decimal(r.bilocal_value);
        if (o.count(ScanOutput::Region)) out << ',' << region_name(r.region);
        if (o.count(ScanOutput::SourceNegativity)) out << ',' << (r.source_neg ? "true" : "false");
        if (o.count(ScanOutput::ProcessNegativity)) out << ',' << (r.process_neg ? "true" : "false");
        if (o.count(ScanOutput::LpVerdict)) out << ',' << (r.local.value_or(false) ? "LOCAL" : "NONLOCAL");
        out << '\n';
    }
}

Json rows_to_json(const ScanConfig& config, const std::vector<ScanRow>& rows) {
    const auto& o = config.outputs;
    Json arr = Json::array();
    for (const auto& r : rows) {
        Json row{{"eta", to_string(r.eta)}, {"t", to_string(r.t)}};
        if (config.symmetric_mu) {
            row["mu"] = to_string(r.mu1);
        } else {
            row["mu1"] = to_string(r.mu1);
            row["mu2"] = to_string(r.mu2);
        }
        if (o.count(ScanOutput::BilocalValue)) row["bilocal_value"] = r.bilocal_value;
        if (o.count(ScanOutput::Region)) row["region"] = std::string(region_name(r.region));
        if (o.count(ScanOutput::SourceNegativity)) row["source_neg"] = r.source_neg;
        if (o.count(ScanOutput::ProcessNegativity)) row["process_neg"] = r.process_neg;
        if (o.count(ScanOutput::LpVerdict)) row["lp_verdict"] = r.local.value_or(false) ? "LOCAL" : "NONLOCAL";
        arr.push_back(std::move(row));
    }
    return arr;
}

}  // namespace quasinet
