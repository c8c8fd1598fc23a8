#pragma once

#include <botecon/analysis.hpp>
#include <botecon/montecarlo.hpp>

#include <json.hpp>

#include <filesystem>
#include <string>

namespace botecon {

using nlohmann::json;

/// Strict scenario schema: top-level keys n_attackers, horizon_days, C,
/// C_min, usagefee, usagefee_max, p_win, traffic ([time, count] pairs),
/// rents (N x N, USD/day), alphas (length N) and an optional modes object.
/// Unknown keys anywhere are a hard error.
Scenario scenario_from_json(const json& j);
json to_json(const Scenario& s);

Scenario load_scenario(const std::filesystem::path& path);
void save_scenario(const Scenario& s, const std::filesystem::path& path);

/// Defense schema: all keys optional — virtual_bot_fraction,
/// virtual_attacker {charge_per_day, pay_per_day: number or length-N array},
/// buffering {window_days, duty}, renegotiation_cost,
/// payout_split {realtime, deferred}, adaptive_policy {window_days,
/// attacks_per_day_threshold, min_payout_multiplier, toggle_buffering}.
DefenseConfig defense_from_json(const json& j, int n_attackers);
json to_json(const DefenseConfig& cfg);

DefenseConfig load_defense(const std::filesystem::path& path, int n_attackers);

json to_json(const BreakEvenResult& r);
json to_json(const SaddleResult& r, bool include_trace = true);
json to_json(const RewardReport& r);
json to_json(const SimulationSummary& s);
json to_json(const DefenseComparison& c);

/// Fixed-precision number rendering (9 significant digits) used for CSV
/// output so files diff cleanly.
std::string format_g9(Real x);

void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace botecon
