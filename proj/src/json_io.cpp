#include "extenso/json_io.hpp"

#include <fstream>
#include <sstream>

namespace extenso {

using nlohmann::json;

Poset poset_from_json(const json& j) {
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw RangeError("poset json: missing integer field 'n'");
    int n = j["n"].get<int>();
    std::vector<std::pair<int, int>> rel;
    if (j.contains("relations"))
        for (const auto& pair : j["relations"]) {
            if (!pair.is_array() || pair.size() != 2)
                throw RangeError("poset json: relations must be [a,b] pairs");
            rel.emplace_back(pair[0].get<int>(), pair[1].get<int>());
        }
    return Poset(n, rel);
}

json poset_to_json(const Poset& p) {
    json j;
    j["n"] = p.size();
    json rel = json::array();
    for (auto [a, b] : p.relation_pairs()) rel.push_back({a, b});
    j["relations"] = std::move(rel);
    return j;
}

IntervalFamily intervals_from_json(const json& j) {
    if (!j.contains("intervals")) throw RangeError("interval json: missing field 'intervals'");
    IntervalFamily f;
    for (const auto& pair : j["intervals"]) {
        if (!pair.is_array() || pair.size() != 2)
            throw RangeError("interval json: intervals must be [a,b] pairs");
        f.intervals.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return f;
}

json intervals_to_json(const IntervalFamily& f) {
    json arr = json::array();
    for (auto [a, b] : f.intervals) arr.push_back({a, b});
    return json{{"intervals", std::move(arr)}};
}

namespace {

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw RangeError("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

} // namespace

Poset load_poset(const std::string& path) { return poset_from_json(parse_file(path)); }

IntervalFamily load_intervals(const std::string& path) {
    return intervals_from_json(parse_file(path));
}

namespace {

void put_opt(json& j, const char* key, const std::optional<double>& v) {
    if (v) j[key] = *v;
}

} // namespace

json bounds_report_to_json(const BoundsReport& r) {
    json j;
    j["n"] = r.n;
    j["comp"] = r.comp;
    if (!r.delta.empty()) j["delta"] = r.delta;
    j["height"] = r.height;
    j["width"] = r.width;
    if (r.log2_e) {
        j["e"] = r.e_decimal;
        j["log2_e"] = *r.log2_e;
        j["sandwich_ok"] = r.sandwich_ok;
    }
    put_opt(j, "log2_lower_orientation", r.log2_lower_orientation);
    put_opt(j, "log2_lower_half", r.log2_lower_half);
    put_opt(j, "log2_lower_hook_formula", r.log2_lower_hook_formula);
    put_opt(j, "log2_lower_hook_lengths", r.log2_lower_hook_lengths);
    put_opt(j, "log2_lower_height_cap", r.log2_lower_height_cap);
    put_opt(j, "log2_upper_martingale", r.log2_upper_martingale);
    put_opt(j, "log2_upper_backdegree", r.log2_upper_backdegree);
    put_opt(j, "log2_upper_incomp", r.log2_upper_incomp);
    put_opt(j, "log2_upper_width_cap", r.log2_upper_width_cap);
    return j;
}

std::string bounds_report_to_csv(const BoundsReport& r) {
    static const char* fields[] = {
        "n", "comp", "delta", "height", "width", "log2_e",
        "log2_lower_orientation", "log2_lower_half", "log2_lower_hook_formula",
        "log2_lower_hook_lengths", "log2_lower_height_cap", "log2_upper_martingale",
        "log2_upper_backdegree", "log2_upper_incomp", "log2_upper_width_cap"};
    std::ostringstream out;
    bool first = true;
    for (const char* f : fields) {
        out << (first ? "" : ",") << f;
        first = false;
    }
    out << "\n";
    auto num = [](const std::optional<double>& v) {
        return v ? std::to_string(*v) : std::string();
    };
    out << r.n << "," << r.comp << "," << r.delta << "," << r.height << "," << r.width << ","
        << num(r.log2_e) << "," << num(r.log2_lower_orientation) << "," << num(r.log2_lower_half)
        << "," << num(r.log2_lower_hook_formula) << "," << num(r.log2_lower_hook_lengths) << ","
        << num(r.log2_lower_height_cap) << "," << num(r.log2_upper_martingale) << ","
        << num(r.log2_upper_backdegree) << "," << num(r.log2_upper_incomp) << ","
        << num(r.log2_upper_width_cap) << "\n";
    return out.str();
}

json sandwich_to_json(const EntropySandwich& s) {
    json j;
    j["H_G"] = s.H_G;
    j["H_Gbar"] = s.H_Gbar;
    j["log2_e"] = s.log2_e;
    j["entropy_lower_log2"] = s.entropy_lower_log2;
    j["entropy_upper_log2"] = s.entropy_upper_log2;
    j["half_entropy_lower_log2"] = s.half_entropy_lower_log2;
    j["tol"] = s.tol;
    j["ok"] = s.ok;
    return j;
}

} // namespace extenso
