#pragma once

#include <string>

#include <json.hpp>

#include "extenso/bounds.hpp"
#include "extenso/entropy.hpp"
#include "extenso/poset.hpp"
#include "extenso/random_orders.hpp"

namespace extenso {

// {"n": <int>, "relations": [[a,b], ...]}; closure applied, cycles rejected.
Poset poset_from_json(const nlohmann::json& j);
nlohmann::json poset_to_json(const Poset& p);

// {"intervals": [[a,b], ...]}
IntervalFamily intervals_from_json(const nlohmann::json& j);
nlohmann::json intervals_to_json(const IntervalFamily& f);

Poset load_poset(const std::string& path);
IntervalFamily load_intervals(const std::string& path);

nlohmann::json bounds_report_to_json(const BoundsReport& r);
std::string bounds_report_to_csv(const BoundsReport& r);

nlohmann::json sandwich_to_json(const EntropySandwich& s);

} // namespace extenso
