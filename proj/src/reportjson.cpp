#include "campana/reportjson.hpp"

namespace campana {

using nlohmann::json;

json constant_to_json(const ConstantReport& rep, const std::string& kind) {
    json j;
    j["name"] = rep.name;
    j["value"] = rep.value;
    j["enclosure"] = {{"tail_estimate", rep.tail_estimate}, {"kind", kind}};
    j["alpha"] = rep.alpha;
    j["beta"] = rep.beta;
    j["sigma_inf"] = rep.sigma_inf;
    j["exponent_a"] = rep.exponent_a.str();
    j["exponent_b"] = rep.exponent_b.str();
    j["truncation"] = rep.truncation;
    json breakdown = json::array();
    for (const auto& [name, value] : rep.breakdown)
        breakdown.push_back({{"quantity", name}, {"value", value}});
    j["breakdown"] = breakdown;
    return j;
}

json count_record_to_json(const CountRecord& rec) {
    return {{"B", rec.B}, {"raw_count", rec.raw}, {"divisor", rec.divisor},
            {"value", rec.value()}};
}

bool validate_constant_json(const json& j, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (!j.is_object()) return fail("not an object");
    for (const char* key : {"name", "value", "enclosure", "truncation", "breakdown",
                            "alpha", "beta", "sigma_inf", "exponent_a", "exponent_b"})
        if (!j.contains(key)) return fail(std::string("missing key: ") + key);
    if (!j["name"].is_string()) return fail("name must be a string");
    if (!j["value"].is_number()) return fail("value must be a number");
    const auto& enc = j["enclosure"];
    if (!enc.is_object() || !enc.contains("tail_estimate") || !enc.contains("kind"))
        return fail("enclosure must carry tail_estimate and kind");
    if (!enc["tail_estimate"].is_number() || enc["tail_estimate"].get<double>() < 0)
        return fail("tail_estimate must be a nonnegative number");
    std::string kind = enc["kind"].get<std::string>();
    if (kind != "rigorous" && kind != "heuristic") return fail("bad enclosure kind");
    if (!j["truncation"].is_string()) return fail("truncation must be a string");
    if (!j["breakdown"].is_array()) return fail("breakdown must be an array");
    for (const auto& item : j["breakdown"])
        if (!item.is_object() || !item.contains("quantity") || !item.contains("value"))
            return fail("breakdown items need quantity and value");
    return true;
}

}  // namespace campana
