#include "chowdiv/families.hpp"

#include <json.hpp>

#include <sstream>

namespace chowdiv {

namespace {

using nlohmann::json;

int get_int(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw ParseError(std::string("family/space spec: missing integer field '") + field + "'");
    return j[field].get<int>();
}

SpaceSpec space_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw ParseError("space spec: missing type");
    std::string t = j["type"].get<std::string>();
    if (t == "Pn" || t == "P") return make_space(SpaceSpec::Kind::Pn, 0, get_int(j, "n"));
    if (t == "Qn" || t == "Q") return make_space(SpaceSpec::Kind::Qn, 0, get_int(j, "n"));
    if (t == "G") return make_space(SpaceSpec::Kind::G, get_int(j, "k"), get_int(j, "n"));
    if (t == "OG") return make_space(SpaceSpec::Kind::OG, get_int(j, "k"), get_int(j, "n"));
    if (t == "SG") return make_space(SpaceSpec::Kind::SG, get_int(j, "k"), get_int(j, "n"));
    if (t == "SGmax") return make_space(SpaceSpec::Kind::SGmax, 0, get_int(j, "m"));
    throw ParseError("space spec: unknown type '" + t + "'");
}

FamilyPtr family_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw ParseError("family expression: node without type");
    std::string t = j["type"].get<std::string>();
    if (t == "proj") return FamilyExpr::proj(get_int(j, "m"));
    if (t == "quadric_odd") return FamilyExpr::quadric_odd(get_int(j, "m"));
    if (t == "quadric_even") return FamilyExpr::quadric_even(get_int(j, "m"));
    if (t == "veronese2") return FamilyExpr::veronese2(get_int(j, "m"));
    if (t == "product") {
        if (!j.contains("left") || !j.contains("right"))
            throw ParseError("product node needs left and right");
        return FamilyExpr::product(family_from_json(j["left"]), family_from_json(j["right"]));
    }
    if (t == "proj_bundle") {
        if (!j.contains("base")) throw ParseError("proj_bundle node needs a base");
        ChernSpec chern;
        chern.bundle_rank = get_int(j, "rank");
        if (!j.contains("chern") || !j["chern"].is_array())
            throw ParseError("proj_bundle node needs a chern array");
        for (const auto& entry : j["chern"]) {
            if (!entry.is_array()) throw ParseError("chern entries must be coefficient arrays");
            std::vector<Int> v;
            for (const auto& c : entry) {
                if (!c.is_number_integer())
                    throw ParseError("chern coefficients must be integers");
                v.emplace_back(c.get<long>());
            }
            chern.coeffs.push_back(std::move(v));
        }
        return FamilyExpr::proj_bundle(family_from_json(j["base"]), std::move(chern));
    }
    if (t == "vmrt") {
        if (!j.contains("space")) throw ParseError("vmrt node needs a space");
        return FamilyExpr::vmrt(space_from_json(j["space"]));
    }
    throw ParseError("family expression: unknown type '" + t + "'");
}

json space_json(const SpaceSpec& s) {
    json j;
    switch (s.kind) {
        case SpaceSpec::Kind::Pn: j["type"] = "Pn"; j["n"] = s.n; break;
        case SpaceSpec::Kind::Qn: j["type"] = "Qn"; j["n"] = s.n; break;
        case SpaceSpec::Kind::G: j["type"] = "G"; j["k"] = s.k; j["n"] = s.n; break;
        case SpaceSpec::Kind::OG: j["type"] = "OG"; j["k"] = s.k; j["n"] = s.n; break;
        case SpaceSpec::Kind::SG: j["type"] = "SG"; j["k"] = s.k; j["n"] = s.n; break;
        case SpaceSpec::Kind::SGmax: j["type"] = "SGmax"; j["m"] = s.n; break;
    }
    return j;
}

json family_json(const FamilyExpr& e) {
    json j;
    switch (e.kind) {
        case FamilyExpr::Kind::Proj:
            j["type"] = "proj";
            j["m"] = e.m;
            break;
        case FamilyExpr::Kind::QuadricOdd:
            j["type"] = "quadric_odd";
            j["m"] = e.m;
            break;
        case FamilyExpr::Kind::QuadricEven:
            j["type"] = "quadric_even";
            j["m"] = e.m;
            break;
        case FamilyExpr::Kind::Veronese2:
            j["type"] = "veronese2";
            j["m"] = e.m;
            break;
        case FamilyExpr::Kind::Product:
            j["type"] = "product";
            j["left"] = family_json(*e.left);
            j["right"] = family_json(*e.right);
            break;
        case FamilyExpr::Kind::ProjBundle: {
            j["type"] = "proj_bundle";
            j["base"] = family_json(*e.base);
            j["rank"] = e.chern.bundle_rank;
            json chern = json::array();
            for (const auto& v : e.chern.coeffs) {
                json row = json::array();
                for (const Int& c : v) {
                    if (!c.fits_slong_p())
                        throw std::runtime_error("chern coefficient exceeds the file integer range");
                    row.push_back(c.get_si());
                }
                chern.push_back(std::move(row));
            }
            j["chern"] = std::move(chern);
            break;
        }
        case FamilyExpr::Kind::Vmrt:
            j["type"] = "vmrt";
            j["space"] = space_json(e.space);
            break;
    }
    return j;
}

}  // namespace

FamilyPtr parse_family(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("family expression: ") + e.what());
    }
    return family_from_json(j);
}

std::string family_to_json(const FamilyExpr& expr) { return family_json(expr).dump(); }

SpaceSpec parse_space(const std::string& text) {
    std::string s = text;
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) throw ParseError("empty space spec");
    if (s[a] == '{') {
        json j;
        try {
            j = json::parse(s);
        } catch (const json::exception& e) {
            throw ParseError(std::string("space spec: ") + e.what());
        }
        return space_from_json(j);
    }
    std::vector<std::string> parts;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) parts.push_back(tok);
    auto num = [&](size_t idx) -> int {
        try {
            size_t pos = 0;
            int v = std::stoi(parts.at(idx), &pos);
            if (pos != parts[idx].size()) throw std::invalid_argument("");
            return v;
        } catch (...) {
            throw ParseError("space spec: bad number '" + (idx < parts.size() ? parts[idx] : "") +
                             "' in '" + text + "'");
        }
    };
    const std::string& kind = parts[0];
    auto need = [&](size_t n) {
        if (parts.size() != n + 1)
            throw ParseError("space spec '" + text + "': wrong number of parameters");
    };
    if (kind == "P" || kind == "Pn") { need(1); return make_space(SpaceSpec::Kind::Pn, 0, num(1)); }
    if (kind == "Q" || kind == "Qn") { need(1); return make_space(SpaceSpec::Kind::Qn, 0, num(1)); }
    if (kind == "G") { need(2); return make_space(SpaceSpec::Kind::G, num(1), num(2)); }
    if (kind == "OG") { need(2); return make_space(SpaceSpec::Kind::OG, num(1), num(2)); }
    if (kind == "SG") { need(2); return make_space(SpaceSpec::Kind::SG, num(1), num(2)); }
    if (kind == "SGmax") { need(1); return make_space(SpaceSpec::Kind::SGmax, 0, num(1)); }
    throw ParseError("space spec: unknown kind '" + kind + "'");
}

std::string space_to_json(const SpaceSpec& s) { return space_json(s).dump(); }

}  // namespace chowdiv
