#include <hcblock/json_io.hpp>

#include <json.hpp>

#include <sstream>

namespace hcblock {

using nlohmann::json;

namespace {

json conditions_to_json(const CertificateConditions& c) {
    json j;
    j["thm2"] = c.thm2 ? json(*c.thm2) : json(nullptr);
    j["thm3"] = c.thm3 ? json(*c.thm3) : json(nullptr);
    j["thm4"] = c.thm4 ? json(*c.thm4) : json(nullptr);
    j["star_shaped"] = c.star_shaped;
    j["db_half"] = c.db_half;
    j["branch_count"] = c.branch_count;
    return j;
}

json certificate_json(const ColoringCertificate& cert) {
    json j;
    j["n"] = cert.n;
    j["omega"] = cert.omega;
    j["xi"] = cert.xi;
    j["total_level"] = cert.total_level;
    j["lower_bound"] = cert.lower_bound;
    j["ordering"] = cert.ordering ? json(cert.ordering->seq) : json(nullptr);
    j["colors"] = cert.colors;
    j["span"] = cert.span;
    j["valid"] = cert.valid;
    json vio = json::array();
    for (const auto& v : cert.violations)
        vio.push_back({{"u", v.u},
                       {"v", v.v},
                       {"D", v.detour},
                       {"required", v.required},
                       {"actual", v.actual}});
    j["violations"] = vio;
    j["conditions"] = conditions_to_json(cert.conditions);
    j["warnings"] = cert.warnings;
    return j;
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error(Error::Kind::parse, "malformed JSON input");
    return j;
}

std::string to_text(const json& j) {
    std::ostringstream out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        out << it.key() << ": ";
        if (it->is_structured())
            out << it->dump();
        else
            out << it->dump();
        out << '\n';
    }
    return out.str();
}

} // namespace

std::string certificate_to_json(const ColoringCertificate& cert, int indent) {
    return certificate_json(cert).dump(indent) + "\n";
}

std::string certificate_to_text(const ColoringCertificate& cert) {
    return to_text(certificate_json(cert));
}

namespace {

json analysis_json(const DetourProfile& p) {
    SdbClassification cls = classify_sdb(p);
    json j;
    j["n"] = p.n();
    j["edge_count"] = p.graph().edge_count();
    j["omega"] = p.omega();
    j["center"] = p.center();
    j["xi"] = p.xi();
    j["levels"] = p.levels();
    j["total_level"] = p.total_level();
    j["detour_diameter"] = p.detour_diameter();
    j["branch_count"] = p.branch_count();
    j["lower_bound"] = span_lower_bound(p);
    j["star_shaped"] = cls.star_shaped;
    j["db_half"] = cls.db_half;
    j["sdb"] = cls.sdb;
    return j;
}

} // namespace

std::string analysis_to_json(const DetourProfile& p, int indent) {
    return analysis_json(p).dump(indent) + "\n";
}

std::string analysis_to_text(const DetourProfile& p) { return to_text(analysis_json(p)); }

std::string detour_search_to_json(const DetourSearchResult& r, int u, int v, int indent) {
    json j;
    j["op"] = "detour";
    j["u"] = u;
    j["v"] = v;
    j["value"] = r.value;
    j["witness_path"] = r.path;
    j["explored"] = r.explored;
    return j.dump(indent) + "\n";
}

std::string hc_search_to_json(const HcSearchResult& r, int indent) {
    json j;
    j["op"] = "exact_hc";
    j["value"] = r.value;
    j["witness_colors"] = r.witness;
    j["witness_ordering"] = r.ordering.seq;
    j["explored"] = r.explored;
    return j.dump(indent) + "\n";
}

std::string family_sidecar_to_json(const FamilySpec& spec, int n, long long formula_hc,
                                   bool caveat, int indent) {
    json j;
    j["family"] = family_name(spec);
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, LevelWiseG1>) {
                j["k"] = s.k;
                j["m"] = s.m;
            } else if constexpr (std::is_same_v<T, LevelWiseGm1>) {
                j["central"] = s.central;
                j["k"] = s.k;
                j["m"] = s.m;
            } else if constexpr (std::is_same_v<T, SymmetricBlocks>) {
                j["p"] = s.p;
                j["k"] = s.k;
                j["d"] = s.d;
            } else if constexpr (std::is_same_v<T, ExtendedStarOfBlocks>) {
                j["m"] = s.m;
                j["p"] = s.p;
                j["k"] = s.k;
            } else if constexpr (std::is_same_v<T, OnePointUnion>) {
                j["p"] = s.p;
                j["k"] = s.k;
            } else if constexpr (std::is_same_v<T, StarFamily>) {
                j["k"] = s.k;
            } else {
                j["n"] = s.n;
            }
        },
        spec);
    j["n"] = n;
    j["formula_hc"] = formula_hc;
    j["caveat"] = caveat;
    return j.dump(indent) + "\n";
}

FamilySpec family_spec_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("family"))
        throw Error(Error::Kind::parse, "sidecar JSON lacks a \"family\" field");
    std::string name = j["family"];
    try {
        if (name == "g1")
            return LevelWiseG1{j.at("k").get<std::vector<int>>(),
                               j.at("m").get<std::vector<int>>()};
        if (name == "gm1")
            return LevelWiseGm1{j.at("central").get<int>(), j.at("k").get<std::vector<int>>(),
                                j.at("m").get<std::vector<int>>()};
        if (name == "symmetric")
            return SymmetricBlocks{j.at("p").get<int>(), j.at("k").get<int>(),
                                   j.at("d").get<int>()};
        if (name == "extstar")
            return ExtendedStarOfBlocks{j.at("m").get<int>(), j.at("p").get<int>(),
                                        j.at("k").get<int>()};
        if (name == "onepoint")
            return OnePointUnion{j.at("p").get<int>(), j.at("k").get<int>()};
        if (name == "star") return StarFamily{j.at("k").get<int>()};
        if (name == "path") return PathFamily{j.at("n").get<int>()};
    } catch (const json::exception& e) {
        throw Error(Error::Kind::parse, std::string("bad sidecar parameters: ") + e.what());
    }
    throw Error(Error::Kind::validation, "sidecar family '" + name + "' has no closed form");
}

std::vector<long long> colors_from_json(const std::string& text, int n_expected) {
    json j = parse(text);
    if (j.is_object()) {
        if (!j.contains("colors"))
            throw Error(Error::Kind::missing_color, "JSON object lacks a \"colors\" array");
        j = j["colors"];
    }
    if (!j.is_array())
        throw Error(Error::Kind::missing_color, "expected a JSON array of colors");
    std::vector<long long> colors;
    for (const auto& item : j) {
        if (!item.is_number_integer())
            throw Error(Error::Kind::missing_color, "colors must be integers");
        colors.push_back(item.get<long long>());
    }
    if (static_cast<int>(colors.size()) != n_expected)
        throw Error(Error::Kind::missing_color,
                    "expected " + std::to_string(n_expected) + " colors, got " +
                        std::to_string(colors.size()));
    return colors;
}

Ordering ordering_from_json(const std::string& text) {
    json j = parse(text);
    if (j.is_object()) {
        if (!j.contains("ordering"))
            throw Error(Error::Kind::parse, "JSON object lacks an \"ordering\" array");
        j = j["ordering"];
    }
    if (!j.is_array()) throw Error(Error::Kind::parse, "expected a JSON array ordering");
    Ordering o;
    for (const auto& item : j) {
        if (!item.is_number_integer())
            throw Error(Error::Kind::parse, "ordering entries must be integers");
        o.seq.push_back(item.get<int>());
    }
    return o;
}

} // namespace hcblock
