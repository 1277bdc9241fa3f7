// serialization.hpp
//
// The on-disk JSON formats. Integers are always Felt encodings, polynomial
// coefficients are listed constant term first, and object keys are emitted
// in sorted order, so identical inputs produce byte-identical files.
//
//   field    {"p":., "m":., "base_poly":[..], "top_poly":[..], "generator":.}
//   eval     {"points":[..], "infinity":bool}
//   code     {"field":{..}, "eval":{..}, "v":[..], "k":., "gen":[[..]..], "checks":{..}}
//   request  {"family":., "q":., "k":., "r":., "blocks":[..]}

#ifndef GRSHERMES_SERIALIZATION_HPP
#define GRSHERMES_SERIALIZATION_HPP

#include <cstdio>
#include <string_view>

#include <json.hpp>

#include "grshermes/hermitian.hpp"

namespace grshermes {

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline nlohmann::json field_to_json(const FieldTower& f) {
    return nlohmann::json{{"p", f.characteristic()},
                          {"m", f.extension_degree()},
                          {"base_poly", f.base_poly()},
                          {"top_poly", f.top_poly()},
                          {"generator", f.generator()}};
}

inline std::shared_ptr<const FieldTower> field_from_json(const nlohmann::json& j) {
    return std::make_shared<const FieldTower>(
        j.at("p").get<unsigned>(), j.at("m").get<unsigned>(),
        j.at("base_poly").get<std::vector<Felt>>(), j.at("top_poly").get<std::vector<Felt>>(),
        j.at("generator").get<Felt>());
}

inline nlohmann::json eval_to_json(const EvalSet& e) {
    return nlohmann::json{{"points", e.points}, {"infinity", e.with_infinity}};
}

inline EvalSet eval_from_json(std::shared_ptr<const FieldTower> tower, const nlohmann::json& j) {
    return make_eval_set(std::move(tower), j.at("points").get<std::vector<Felt>>(),
                         j.at("infinity").get<bool>());
}

inline std::string check_state_name(CheckState s) {
    switch (s) {
        case CheckState::pass: return "pass";
        case CheckState::fail: return "fail";
        default: return "unknown";
    }
}

inline CheckState check_state_from_name(const std::string& s) {
    if (s == "pass") return CheckState::pass;
    if (s == "fail") return CheckState::fail;
    if (s == "unknown") return CheckState::unknown;
    throw std::invalid_argument("unknown check state: " + s);
}

inline nlohmann::json checks_to_json(const Checks& c) {
    return nlohmann::json{{"hermitian_ok", check_state_name(c.hermitian_ok)},
                          {"mds_ok", check_state_name(c.mds_ok)},
                          {"rational_dual_ok", check_state_name(c.rational_dual_ok)}};
}

inline Checks checks_from_json(const nlohmann::json& j) {
    return Checks{check_state_from_name(j.at("hermitian_ok").get<std::string>()),
                  check_state_from_name(j.at("mds_ok").get<std::string>()),
                  check_state_from_name(j.at("rational_dual_ok").get<std::string>())};
}

inline nlohmann::json code_to_json(const GrsCode& code) {
    nlohmann::json gen = nlohmann::json::array();
    for (std::size_t r = 0; r < code.gen.rows; ++r) {
        std::vector<Felt> row(code.gen.a.begin() + r * code.gen.cols,
                              code.gen.a.begin() + (r + 1) * code.gen.cols);
        gen.push_back(row);
    }
    return nlohmann::json{{"field", field_to_json(*code.tower)}, {"eval", eval_to_json(code.eval)},
                          {"v", code.v},                         {"k", code.k},
                          {"gen", gen},                          {"checks", checks_to_json(code.checks)}};
}

/// Loads a code file as-is: the generator matrix is range- and
/// shape-checked but deliberately not recomputed, so verification sees
/// exactly what the file contains.
inline GrsCode code_from_json(const nlohmann::json& j) {
    auto tower = field_from_json(j.at("field"));
    GrsCode code;
    code.tower = tower;
    code.eval = eval_from_json(tower, j.at("eval"));
    code.v = j.at("v").get<std::vector<Felt>>();
    code.k = j.at("k").get<std::size_t>();
    code.checks = checks_from_json(j.at("checks"));

    const std::size_t n = code.eval.length();
    if (code.v.size() != n) throw std::invalid_argument("code file: scaling vector length mismatch");
    for (Felt vi : code.v)
        if (vi == 0 || !tower->valid(vi))
            throw std::invalid_argument("code file: scaling entries must be nonzero encodings");
    if (code.k > n) throw std::invalid_argument("code file: dimension out of range");

    const auto& gen = j.at("gen");
    if (!gen.is_array() || gen.size() != code.k)
        throw std::invalid_argument("code file: generator must have k rows");
    code.gen = Matrix(code.k, n);
    for (std::size_t r = 0; r < code.k; ++r) {
        const auto row = gen.at(r).get<std::vector<Felt>>();
        if (row.size() != n) throw std::invalid_argument("code file: generator row length mismatch");
        for (std::size_t c = 0; c < n; ++c) {
            if (!tower->valid(row[c]))
                throw std::invalid_argument("code file: generator entry out of range");
            code.gen.at(r, c) = row[c];
        }
    }
    return code;
}

/// Content hash of the immutable part of a code (field, eval, v, k, gen);
/// the checks record is verification state and excluded on purpose.
inline std::string code_content_hash(const GrsCode& code) {
    nlohmann::json j = code_to_json(code);
    j.erase("checks");
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(j.dump())));
    return std::string("fnv1a64:") + buf;
}

inline nlohmann::json family_params_to_json(const FamilyParams& fp) {
    return nlohmann::json{{"family", family_name(fp.family)},
                          {"q", fp.q},
                          {"k", fp.k},
                          {"r", fp.r},
                          {"blocks", fp.block_sizes}};
}

inline FamilyParams family_params_from_json(const nlohmann::json& j) {
    FamilyParams fp;
    fp.family = family_from_name(j.at("family").get<std::string>());
    fp.q = j.at("q").get<std::uint64_t>();
    fp.k = j.at("k").get<std::size_t>();
    if (j.contains("r")) fp.r = j.at("r").get<std::uint64_t>();
    if (j.contains("blocks")) fp.block_sizes = j.at("blocks").get<std::vector<std::size_t>>();
    return fp;
}

}  // namespace grshermes

#endif  // GRSHERMES_SERIALIZATION_HPP
