#include "chowdiv/graded_ring.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace chowdiv {

namespace {

constexpr int kRingFileVersion = 1;

long to_long_checked(const Int& v) {
    if (!v.fits_slong_p())
        throw std::runtime_error("structure constant exceeds the ring-file integer range");
    return v.get_si();
}

}  // namespace

std::string serialize(const GradedRingModel& R) {
    nlohmann::json j;
    j["version"] = kRingFileVersion;
    j["cutoff"] = R.cutoff;
    j["ranks"] = R.ranks;
    j["basis_labels"] = R.basis_labels;
    nlohmann::json tables = nlohmann::json::object();
    for (const auto& [key, flat] : R.tables) {
        auto [i, jj] = key;
        int ri = R.ranks[i], rj = R.ranks[jj], rk = R.ranks[i + jj];
        nlohmann::json cube = nlohmann::json::array();
        size_t idx = 0;
        for (int p = 0; p < ri; ++p) {
            nlohmann::json plane = nlohmann::json::array();
            for (int q = 0; q < rj; ++q) {
                nlohmann::json row = nlohmann::json::array();
                for (int k = 0; k < rk; ++k) row.push_back(to_long_checked(flat[idx++]));
                plane.push_back(std::move(row));
            }
            cube.push_back(std::move(plane));
        }
        std::ostringstream os;
        os << i << "," << jj;
        tables[os.str()] = std::move(cube);
    }
    j["tables"] = std::move(tables);
    // nlohmann objects keep keys sorted; dump() without indent gives the
    // canonical byte representation.
    return j.dump();
}

GradedRingModel deserialize(const std::string& bytes) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("malformed ring file: ") + e.what());
    }
    if (!j.is_object()) throw std::runtime_error("malformed ring file: not a JSON object");
    for (const char* field : {"version", "cutoff", "ranks", "basis_labels", "tables"})
        if (!j.contains(field))
            throw std::runtime_error(std::string("malformed ring file: missing field ") + field);
    if (!j["version"].is_number_integer() || j["version"].get<long>() != kRingFileVersion)
        throw std::runtime_error("unsupported ring file version");
    if (!j["cutoff"].is_number_integer())
        throw std::runtime_error("malformed ring file: cutoff must be an integer");
    int cutoff = j["cutoff"].get<int>();

    std::vector<int> ranks;
    if (!j["ranks"].is_array()) throw std::runtime_error("malformed ring file: ranks");
    for (const auto& r : j["ranks"]) {
        if (!r.is_number_integer()) throw std::runtime_error("malformed ring file: ranks");
        ranks.push_back(r.get<int>());
    }

    std::vector<std::vector<std::string>> labels;
    if (!j["basis_labels"].is_array())
        throw std::runtime_error("malformed ring file: basis_labels");
    for (const auto& per_degree : j["basis_labels"]) {
        if (!per_degree.is_array()) throw std::runtime_error("malformed ring file: basis_labels");
        std::vector<std::string> row;
        for (const auto& s : per_degree) {
            if (!s.is_string()) throw std::runtime_error("malformed ring file: basis_labels");
            row.push_back(s.get<std::string>());
        }
        labels.push_back(std::move(row));
    }

    std::map<std::pair<int, int>, std::vector<Int>> tables;
    if (!j["tables"].is_object()) throw std::runtime_error("malformed ring file: tables");
    auto rank_of = [&](int d) -> int {
        if (d < 0 || d >= static_cast<int>(ranks.size()))
            throw std::runtime_error("malformed ring file: table degree outside ranks");
        return ranks[d];
    };
    for (const auto& [key, cube] : j["tables"].items()) {
        std::istringstream is(key);
        int i = -1, jj = -1;
        char comma = 0;
        if (!(is >> i >> comma >> jj) || comma != ',' || !is.eof() || i < 0 || jj < 0)
            throw std::runtime_error("malformed ring file: bad table key '" + key + "'");
        size_t ri = rank_of(i), rj = rank_of(jj), rk = rank_of(i + jj);
        if (!cube.is_array() || cube.size() != ri)
            throw std::runtime_error("malformed ring file: table " + key + " shape");
        std::vector<Int> flat;
        for (const auto& plane : cube) {
            if (!plane.is_array() || plane.size() != rj)
                throw std::runtime_error("malformed ring file: table " + key + " shape");
            for (const auto& row : plane) {
                if (!row.is_array() || row.size() != rk)
                    throw std::runtime_error("malformed ring file: table " + key + " shape");
                for (const auto& v : row) {
                    if (!v.is_number_integer())
                        throw std::runtime_error("malformed ring file: non-integer entry in table " + key);
                    flat.emplace_back(v.get<long>());
                }
            }
        }
        tables[{i, jj}] = std::move(flat);
    }

    return make_ring(cutoff, std::move(ranks), std::move(labels), std::move(tables));
}

}  // namespace chowdiv
