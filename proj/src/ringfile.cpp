#include "ftex/ringfile.hpp"

#include <fstream>
#include <set>

#include <json.hpp>

#include "ftex/parse.hpp"

namespace ftex {

namespace {

RingSpec ring_from_json(const nlohmann::json& j, const std::string& name)
{
    if (!j.is_object()) throw std::invalid_argument("ring file: top level must be a JSON object");
    if (!j.contains("prime") || !j["prime"].is_number_integer())
        throw std::invalid_argument("ring file: missing integer field 'prime'");
    std::int64_t p = j["prime"].get<std::int64_t>();
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument(std::to_string(p) + " is not prime");
    FieldSpec field(static_cast<std::uint64_t>(p));

    if (!j.contains("variables") || !j["variables"].is_array() || j["variables"].empty())
        throw std::invalid_argument("ring file: 'variables' must be a nonempty array");
    std::vector<std::string> vars;
    std::set<std::string> seen;
    for (const auto& v : j["variables"]) {
        if (!v.is_string()) throw std::invalid_argument("ring file: variable names must be strings");
        std::string s = v.get<std::string>();
        if (!valid_identifier(s)) throw std::invalid_argument("invalid variable name '" + s + "'");
        if (!seen.insert(s).second) throw std::invalid_argument("duplicate variable name '" + s + "'");
        vars.push_back(std::move(s));
    }
    RingPtr ring = std::make_shared<Ring>(field, std::move(vars));

    std::vector<Polynomial> quot;
    if (j.contains("quotient")) {
        if (!j["quotient"].is_array()) throw std::invalid_argument("ring file: 'quotient' must be an array");
        for (const auto& q : j["quotient"]) {
            if (!q.is_string()) throw std::invalid_argument("ring file: quotient entries must be strings");
            quot.push_back(parse_polynomial(q.get<std::string>(), ring));
        }
    }
    return RingSpec(ring, std::move(quot), name);
}

}  // namespace

RingSpec load_ring_from_string(const std::string& json_text, const std::string& name)
{
    nlohmann::json j = nlohmann::json::parse(json_text);
    return ring_from_json(j, name);
}

RingSpec load_ring(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open ring file: " + path);
    nlohmann::json j;
    in >> j;
    std::string name = path;
    auto slash = name.find_last_of("/\\");
    if (slash != std::string::npos) name = name.substr(slash + 1);
    auto dot = name.rfind('.');
    if (dot != std::string::npos) name = name.substr(0, dot);
    return ring_from_json(j, name);
}

std::string print_ring(const RingSpec& ring)
{
    nlohmann::ordered_json j;
    j["prime"] = ring.field().p();
    j["variables"] = ring.ambient()->variables;
    nlohmann::ordered_json quot = nlohmann::ordered_json::array();
    for (const auto& g : ring.quotient().gens()) quot.push_back(print_polynomial(g));
    j["quotient"] = std::move(quot);
    return j.dump(2) + "\n";
}

}  // namespace ftex
