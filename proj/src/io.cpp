#include <botecon/io.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace botecon {

namespace {

void check_keys(const json& j, const std::string& what,
                std::initializer_list<const char*> allowed) {
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* key : allowed)
      if (item.key() == key) {
        known = true;
        break;
      }
    if (!known)
      throw std::invalid_argument("unknown key \"" + item.key() + "\" in " + what);
  }
}

const json& get_field(const json& j, const char* key, const std::string& what) {
  const auto it = j.find(key);
  if (it == j.end())
    throw std::invalid_argument("missing key \"" + std::string(key) + "\" in " + what);
  return *it;
}

Real get_number(const json& j, const char* key, const std::string& what) {
  const json& field = get_field(j, key, what);
  if (!field.is_number())
    throw std::invalid_argument("key \"" + std::string(key) + "\" in " + what +
                                " must be a number");
  return field.get<Real>();
}

Vector vector_from_json(const json& arr, const std::string& what) {
  if (!arr.is_array()) throw std::invalid_argument(what + " must be an array");
  Vector v(arr.size());
  Index k = 0;
  for (const json& x : arr) {
    if (!x.is_number()) throw std::invalid_argument(what + " must contain numbers");
    v[k++] = x.get<Real>();
  }
  return v;
}

json vector_to_json(const Vector& v) {
  json arr = json::array();
  for (Index k = 0; k < v.size(); ++k) arr.push_back(v[k]);
  return arr;
}

// A number broadcasts to all attackers; an array gives one entry each.
Vector broadcast_from_json(const json& field, int n, const std::string& what) {
  if (field.is_number()) return Vector::Constant(n, field.get<Real>());
  Vector v = vector_from_json(field, what);
  if (v.size() != n)
    throw std::invalid_argument(what + " must be a number or a length-N array");
  return v;
}

}  // namespace

Scenario scenario_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("scenario must be a JSON object");
  check_keys(j, "scenario",
             {"n_attackers", "horizon_days", "C", "C_min", "usagefee", "usagefee_max",
              "p_win", "traffic", "rents", "alphas", "modes"});

  Scenario s;
  const json& n_field = get_field(j, "n_attackers", "scenario");
  if (!n_field.is_number_integer() || n_field.get<long>() < 1)
    throw std::invalid_argument("n_attackers must be a positive integer");
  s.n_attackers = n_field.get<int>();
  s.horizon_days = get_number(j, "horizon_days", "scenario");
  s.payout_ceiling = get_number(j, "C", "scenario");
  s.min_payout = get_number(j, "C_min", "scenario");
  s.usagefee = get_number(j, "usagefee", "scenario");
  s.usagefee_max = get_number(j, "usagefee_max", "scenario");
  s.win_prob = get_number(j, "p_win", "scenario");

  const json& traffic = get_field(j, "traffic", "scenario");
  if (!traffic.is_array() || traffic.empty())
    throw std::invalid_argument("traffic must be a non-empty array of [time, count] pairs");
  Vector times(traffic.size()), counts(traffic.size());
  Index k = 0;
  for (const json& pair : traffic) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
      throw std::invalid_argument("traffic entries must be [time, count] number pairs");
    times[k] = pair[0].get<Real>();
    counts[k] = pair[1].get<Real>();
    ++k;
  }
  s.traffic = TrafficProfile(s.horizon_days, std::move(times), std::move(counts));

  const json& rents = get_field(j, "rents", "scenario");
  if (!rents.is_array() || static_cast<int>(rents.size()) != s.n_attackers)
    throw std::invalid_argument("rents must be an N x N array of USD/day rates");
  s.rents = Matrix(s.n_attackers, s.n_attackers);
  for (int r = 0; r < s.n_attackers; ++r) {
    const json& row = rents[r];
    if (!row.is_array() || static_cast<int>(row.size()) != s.n_attackers)
      throw std::invalid_argument("rents must be an N x N array of USD/day rates");
    for (int c = 0; c < s.n_attackers; ++c) {
      if (!row[c].is_number()) throw std::invalid_argument("rent rates must be numbers");
      s.rents(r, c) = row[c].get<Real>();
    }
  }

  const Vector alphas = vector_from_json(get_field(j, "alphas", "scenario"), "alphas");
  if (alphas.size() != s.n_attackers)
    throw std::invalid_argument("alphas must list one learning rate per attacker");
  s.curves.reserve(alphas.size());
  for (Index i = 0; i < alphas.size(); ++i)
    s.curves.push_back(LearningCurve::exponential(alphas[i]));

  if (j.contains("modes")) {
    const json& modes = j["modes"];
    if (!modes.is_object()) throw std::invalid_argument("modes must be an object");
    check_keys(modes, "modes", {"target_cost_mode", "intrusion_cost_mode"});
    if (modes.contains("target_cost_mode")) {
      const std::string v = modes["target_cost_mode"].get<std::string>();
      if (v == "as-written") s.target_cost_mode = TargetCostMode::AsWritten;
      else if (v == "consistent") s.target_cost_mode = TargetCostMode::Consistent;
      else throw std::invalid_argument("target_cost_mode must be \"as-written\" or \"consistent\"");
    }
    if (modes.contains("intrusion_cost_mode")) {
      const std::string v = modes["intrusion_cost_mode"].get<std::string>();
      if (v == "worst-case") s.intrusion_cost_mode = IntrusionCostMode::WorstCase;
      else if (v == "expected") s.intrusion_cost_mode = IntrusionCostMode::Expected;
      else throw std::invalid_argument("intrusion_cost_mode must be \"worst-case\" or \"expected\"");
    }
  }

  validate(s);
  return s;
}

json to_json(const Scenario& s) {
  json traffic = json::array();
  for (Index k = 0; k < s.traffic.times().size(); ++k)
    traffic.push_back({s.traffic.times()[k], s.traffic.counts()[k]});

  json rents = json::array();
  for (Index r = 0; r < s.rents.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < s.rents.cols(); ++c) row.push_back(s.rents(r, c));
    rents.push_back(row);
  }

  json alphas = json::array();
  for (const LearningCurve& curve : s.curves) {
    if (!curve.is_exponential())
      throw std::invalid_argument("only exponential learning curves are serializable");
    alphas.push_back(curve.alpha());
  }

  return json{
      {"n_attackers", s.n_attackers},
      {"horizon_days", s.horizon_days},
      {"C", s.payout_ceiling},
      {"C_min", s.min_payout},
      {"usagefee", s.usagefee},
      {"usagefee_max", s.usagefee_max},
      {"p_win", s.win_prob},
      {"traffic", traffic},
      {"rents", rents},
      {"alphas", alphas},
      {"modes",
       {{"target_cost_mode",
         s.target_cost_mode == TargetCostMode::AsWritten ? "as-written" : "consistent"},
        {"intrusion_cost_mode",
         s.intrusion_cost_mode == IntrusionCostMode::WorstCase ? "worst-case" : "expected"}}}};
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open scenario file: " + path.string());
  return scenario_from_json(json::parse(in));
}

void save_scenario(const Scenario& s, const std::filesystem::path& path) {
  write_text_file(path, to_json(s).dump(2) + "\n");
}

DefenseConfig defense_from_json(const json& j, int n_attackers) {
  if (!j.is_object()) throw std::invalid_argument("defense config must be a JSON object");
  check_keys(j, "defense config",
             {"virtual_bot_fraction", "virtual_attacker", "buffering", "renegotiation_cost",
              "payout_split", "adaptive_policy"});

  DefenseConfig cfg;
  if (j.contains("virtual_bot_fraction"))
    cfg.virtual_bot_fraction = get_number(j, "virtual_bot_fraction", "defense config");
  if (j.contains("renegotiation_cost"))
    cfg.renegotiation_cost = get_number(j, "renegotiation_cost", "defense config");

  if (j.contains("virtual_attacker")) {
    const json& va = j["virtual_attacker"];
    check_keys(va, "virtual_attacker", {"charge_per_day", "pay_per_day"});
    VirtualAttackerConfig v;
    v.charge_per_day = broadcast_from_json(get_field(va, "charge_per_day", "virtual_attacker"),
                                           n_attackers, "charge_per_day");
    v.pay_per_day = broadcast_from_json(get_field(va, "pay_per_day", "virtual_attacker"),
                                        n_attackers, "pay_per_day");
    cfg.virtual_attacker = std::move(v);
  }
  if (j.contains("buffering")) {
    const json& buf = j["buffering"];
    check_keys(buf, "buffering", {"window_days", "duty"});
    cfg.buffering = BufferingConfig{get_number(buf, "window_days", "buffering"),
                                    get_number(buf, "duty", "buffering")};
  }
  if (j.contains("payout_split")) {
    const json& split = j["payout_split"];
    check_keys(split, "payout_split", {"realtime", "deferred"});
    cfg.payout_split = PayoutSplitConfig{get_number(split, "realtime", "payout_split"),
                                         get_number(split, "deferred", "payout_split")};
  }
  if (j.contains("adaptive_policy")) {
    const json& ap = j["adaptive_policy"];
    check_keys(ap, "adaptive_policy",
               {"window_days", "attacks_per_day_threshold", "min_payout_multiplier",
                "toggle_buffering"});
    AdaptivePolicyConfig a;
    a.window = get_number(ap, "window_days", "adaptive_policy");
    a.attacks_per_day_threshold = get_number(ap, "attacks_per_day_threshold", "adaptive_policy");
    if (ap.contains("min_payout_multiplier"))
      a.min_payout_multiplier = get_number(ap, "min_payout_multiplier", "adaptive_policy");
    if (ap.contains("toggle_buffering")) {
      if (!ap["toggle_buffering"].is_boolean())
        throw std::invalid_argument("toggle_buffering must be a boolean");
      a.toggle_buffering = ap["toggle_buffering"].get<bool>();
    }
    cfg.adaptive = a;
  }

  validate(cfg, n_attackers);
  return cfg;
}

json to_json(const DefenseConfig& cfg) {
  json j = json::object();
  j["virtual_bot_fraction"] = cfg.virtual_bot_fraction;
  j["renegotiation_cost"] = cfg.renegotiation_cost;
  if (cfg.virtual_attacker)
    j["virtual_attacker"] = {{"charge_per_day", vector_to_json(cfg.virtual_attacker->charge_per_day)},
                             {"pay_per_day", vector_to_json(cfg.virtual_attacker->pay_per_day)}};
  if (cfg.buffering)
    j["buffering"] = {{"window_days", cfg.buffering->window}, {"duty", cfg.buffering->duty}};
  if (cfg.payout_split)
    j["payout_split"] = {{"realtime", cfg.payout_split->realtime},
                         {"deferred", cfg.payout_split->deferred}};
  if (cfg.adaptive)
    j["adaptive_policy"] = {{"window_days", cfg.adaptive->window},
                            {"attacks_per_day_threshold", cfg.adaptive->attacks_per_day_threshold},
                            {"min_payout_multiplier", cfg.adaptive->min_payout_multiplier},
                            {"toggle_buffering", cfg.adaptive->toggle_buffering}};
  return j;
}

DefenseConfig load_defense(const std::filesystem::path& path, int n_attackers) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open defense file: " + path.string());
  return defense_from_json(json::parse(in), n_attackers);
}

json to_json(const BreakEvenResult& r) {
  return json{{"required_success_prob", r.required_success_prob},
              {"feasible", r.feasible},
              {"net_rent_paid", r.net_rent_paid},
              {"slack_vs_bound", r.slack_vs_bound}};
}

json to_json(const SaddleResult& r, bool include_trace) {
  json j{{"kind", r.kind == SaddleKind::MaxMin ? "max-min" : "min-max"},
         {"duration_days", r.duration},
         {"value", r.value},
         {"evaluations", r.trace.size()}};
  if (include_trace) {
    json trace = json::array();
    for (const auto& [tau, value] : r.trace) trace.push_back({tau, value});
    j["trace"] = trace;
  }
  return j;
}

json to_json(const RewardReport& r) {
  json j{{"target", r.target},
         {"attackers", vector_to_json(r.attackers)},
         {"per_customer", r.per_customer},
         {"scenario_hash", r.meta.scenario_hash},
         {"modes",
          {{"target_cost_mode",
            r.meta.target_cost_mode == TargetCostMode::AsWritten ? "as-written" : "consistent"},
           {"intrusion_cost_mode",
            r.meta.intrusion_cost_mode == IntrusionCostMode::WorstCase ? "worst-case"
                                                                       : "expected"}}}};
  if (r.meta.seed) j["seed"] = *r.meta.seed;
  return j;
}

json to_json(const SimulationSummary& s) {
  return json{{"trials", s.trials},
              {"seed", s.master_seed},
              {"scenario_hash", s.scenario_hash},
              {"players", s.players},
              {"mean", vector_to_json(s.mean)},
              {"stddev", vector_to_json(s.stddev)},
              {"q05", vector_to_json(s.q05)},
              {"q50", vector_to_json(s.q50)},
              {"q95", vector_to_json(s.q95)},
              {"p_positive", vector_to_json(s.p_positive)}};
}

json to_json(const DefenseComparison& c) {
  return json{{"baseline", to_json(c.baseline)},
              {"defended", to_json(c.defended)},
              {"players", c.players},
              {"mean_delta", vector_to_json(c.mean_delta)},
              {"p_positive_delta", vector_to_json(c.p_positive_delta)}};
}

std::string format_g9(Real x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path.string());
  out << content;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace botecon
