#include "quasinet/serialize.hpp"

namespace quasinet {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw Error("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw Error(std::string("missing field '") + key + "'");
    return *it;
}

Rational rational_from(const Json& j) {
    if (!j.is_string()) throw Error("rationals must be \"num/den\" strings");
    return parse_rational(j.get<std::string>());
}

VariableSet vars_from(const Json& j) {
    if (!j.is_array()) throw Error("variable list must be an array of strings");
    std::vector<std::string> names;
    for (const auto& v : j) {
        if (!v.is_string()) throw Error("variable labels must be strings");
        names.push_back(v.get<std::string>());
    }
    return VariableSet(std::move(names));
}

std::vector<Rational> rationals_from(const Json& j) {
    if (!j.is_array()) throw Error("expected an array of rationals");
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const auto& v : j) out.push_back(rational_from(v));
    return out;
}

Json rationals_to(const std::vector<Rational>& values) {
    Json arr = Json::array();
    for (const auto& v : values) arr.push_back(to_string(v));
    return arr;
}

std::size_t count_from(const Json& j) {
    if (!j.is_number_unsigned()) throw Error("setting counts must be positive integers");
    return j.get<std::size_t>();
}

std::string setting_key(std::size_t x, std::size_t y, std::size_t z) {
    return std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z);
}

std::string outcome_key(std::size_t o) {
    auto s = [&](std::size_t bit) { return ((o >> bit) & 1U) ? std::string("-1") : std::string("+1"); };
    return s(0) + "," + s(1) + "," + s(2);
}

Json table_to(const Behavior& b, const std::vector<Rational>& cells) {
    const Dims& d = b.dims();
    Json table = Json::object();
    for (std::size_t x = 0; x < d.x; ++x) {
        for (std::size_t y = 0; y < d.y; ++y) {
            for (std::size_t z = 0; z < d.z; ++z) {
                Json inner = Json::object();
                for (std::size_t o = 0; o < 8; ++o) inner[outcome_key(o)] = to_string(cells[b.index(x, y, z, o)]);
                table[setting_key(x, y, z)] = std::move(inner);
            }
        }
    }
    return table;
}

}  // namespace

Json to_json(const QuasiDistribution& q) {
    return Json{{"variables", q.vars().names()}, {"weights", rationals_to(q.weights())}};
}

QuasiDistribution distribution_from_json(const Json& j) {
    return QuasiDistribution(vars_from(field(j, "variables")), rationals_from(field(j, "weights")));
}

Json to_json(const CorrelatorTable& t) {
    Json coeffs = Json::object();
    for (SubsetMask s = 0; s < t.size(); ++s) {
        if (auto e = t.get(s)) coeffs[t.vars().subset_label(s)] = to_string(*e);
    }
    return Json{{"variables", t.vars().names()}, {"coeffs", std::move(coeffs)}};
}

CorrelatorTable correlators_from_json(const Json& j) {
    VariableSet vars = vars_from(field(j, "variables"));
    const Json& coeffs = field(j, "coeffs");
    if (!coeffs.is_object()) throw Error("'coeffs' must be an object keyed by subset label");
    CorrelatorTable t(vars);
    for (auto it = coeffs.begin(); it != coeffs.end(); ++it) {
        t.set(vars.parse_subset_label(it.key()), rational_from(it.value()));
    }
    return t;
}

Json to_json(const QuasiStochasticProcess& s) {
    return Json{{"in_variables", s.in_vars().names()},
                {"out_variables", s.out_vars().names()},
                {"kernel", rationals_to(s.kernel())}};
}

QuasiStochasticProcess process_from_json(const Json& j) {
    return QuasiStochasticProcess(vars_from(field(j, "in_variables")), vars_from(field(j, "out_variables")),
                                  rationals_from(field(j, "kernel")));
}

Json to_json(const Behavior& b) {
    const Dims& d = b.dims();
    return Json{{"settings", {d.x, d.y, d.z}}, {"allow_negative", b.allow_negative()}, {"table", table_to(b, b.table())}};
}

Behavior behavior_from_json(const Json& j) {
    const Json& settings = field(j, "settings");
    if (!settings.is_array() || settings.size() != 3) throw Error("'settings' must list three setting counts");
    Dims dims{count_from(settings[0]), count_from(settings[1]), count_from(settings[2])};
    bool allow_negative = false;
    if (auto it = j.find("allow_negative"); it != j.end()) {
        if (!it->is_boolean()) throw Error("'allow_negative' must be a boolean");
        allow_negative = it->get<bool>();
    }
    Behavior b(dims, allow_negative);
    const Json& table = field(j, "table");
    if (!table.is_object() || table.size() != dims.setting_triples()) {
        throw Error("'table' must hold one entry per setting triple");
    }
    for (std::size_t x = 0; x < dims.x; ++x) {
        for (std::size_t y = 0; y < dims.y; ++y) {
            for (std::size_t z = 0; z < dims.z; ++z) {
                const std::string key = setting_key(x, y, z);
                const Json& inner = field(table, key.c_str());
                if (!inner.is_object() || inner.size() != 8) throw Error("setting '" + key + "' needs 8 outcomes");
                for (std::size_t o = 0; o < 8; ++o) b.set(x, y, z, o, rational_from(field(inner, outcome_key(o).c_str())));
            }
        }
    }
    return b;
}

Json to_json(const BilocalReport& r) {
    return Json{{"I", to_string(r.i)},
                {"J", to_string(r.j)},
                {"bilocal_value", r.bilocal_value},
                {"satisfies_bilocal_inequality", satisfies_bilocal_inequality(r.i, r.j)},
                {"region", std::string(region_name(r.region))},
                {"negativity_sources", {to_string(r.negativity_sources[0]), to_string(r.negativity_sources[1])}},
                {"negativity_process", to_string(r.negativity_process)}};
}

Json to_json(const LocalityCertificate& c, const Dims& dims) {
    Json out{{"status", std::string(status_name(c.lp.status))}};
    if (c.local()) {
        Json weights = Json::object();
        for (std::size_t l = 0; l < c.strategies.size(); ++l) {
            if (c.weights[l] != 0) weights[c.strategies[l].label(dims)] = to_string(c.weights[l]);
        }
        out["strategy_weights"] = std::move(weights);
    } else {
        Behavior layout(dims, true);
        out["witness"] = table_to(layout, c.witness);
        out["witness_offset"] = to_string(c.witness_offset);
    }
    return out;
}

Json to_json(const NegativityCertificate& c) {
    return Json{{"min_negativity", to_string(c.optimum)},
                {"optimizer", to_json(c.optimizer)},
                {"dual", rationals_to(c.lp.dual)}};
}

Scenario scenario_from_json(const Json& j) {
    if (!j.is_object()) throw Error("scenario must be a JSON object");
    if (auto it = j.find("params"); it != j.end()) {
        const Json& p = *it;
        return BilocalParams{rational_from(field(p, "mu1")), rational_from(field(p, "mu2")), rational_from(field(p, "eta"))};
    }
    const Json& sources = field(j, "sources");
    if (!sources.is_array()) throw Error("'sources' must be an array");
    std::vector<QuasiDistribution> qs;
    for (const auto& s : sources) qs.push_back(distribution_from_json(s));
    if (auto it = j.find("processors"); it != j.end()) {
        if (!it->is_array()) throw Error("'processors' must be an array");
        ChainNetwork net{std::move(qs), {}};
        for (const auto& s : *it) net.processors.push_back(process_from_json(s));
        return net;
    }
    if (qs.size() != 2) throw Error("a bilocal scenario needs exactly two sources");
    return BilocalScenario{qs[0], qs[1], process_from_json(field(j, "processor"))};
}

}  // namespace quasinet
