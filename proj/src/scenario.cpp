#include <botecon/scenario.hpp>

#include <cstdio>

namespace botecon {

void validate(const Scenario& s) {
  require(s.n_attackers >= 1, "n_attackers must be at least 1");
  require_finite(s.horizon_days, "horizon_days");
  require(s.horizon_days > 0, "horizon_days must be positive");
  require_finite(s.payout_ceiling, "C");
  require(s.payout_ceiling >= 0, "C must be non-negative");
  require_finite(s.min_payout, "C_min");
  require_finite(s.usagefee, "usagefee");
  require(s.usagefee >= 0, "usagefee must be non-negative");
  require_finite(s.usagefee_max, "usagefee_max");
  require_prob(s.win_prob, "p_win");

  require(!s.traffic.empty(), "traffic profile is missing");
  require(std::abs(s.traffic.horizon() - s.horizon_days) <=
              1e-12 * std::max(Real(1), s.horizon_days),
          "traffic profile horizon must match horizon_days");

  const Index n = s.n_attackers;
  require(s.rents.rows() == n && s.rents.cols() == n,
          "rents must be an N x N matrix");
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      require_finite(s.rents(i, j), "rent rate");
      require(s.rents(i, j) >= 0, "rent rates must be non-negative");
    }
  require(static_cast<Index>(s.curves.size()) == n,
          "one learning curve per attacker is required");
}

Vector net_rent_income_rate(const Matrix& rents) {
  return rents.colwise().sum().transpose() - rents.rowwise().sum();
}

namespace {

void append_real(std::string& out, Real x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g;", x);
  out += buf;
}

void append_vector(std::string& out, const Vector& v) {
  for (Index k = 0; k < v.size(); ++k) append_real(out, v[k]);
  out += "|";
}

}  // namespace

std::string scenario_hash(const Scenario& s) {
  std::string canon;
  canon.reserve(256);
  canon += "N=" + std::to_string(s.n_attackers) + ";";
  append_real(canon, s.horizon_days);
  append_real(canon, s.payout_ceiling);
  append_real(canon, s.min_payout);
  append_real(canon, s.usagefee);
  append_real(canon, s.usagefee_max);
  append_real(canon, s.win_prob);
  append_vector(canon, s.traffic.times());
  append_vector(canon, s.traffic.counts());
  for (Index i = 0; i < s.rents.rows(); ++i)
    for (Index j = 0; j < s.rents.cols(); ++j) append_real(canon, s.rents(i, j));
  canon += "|";
  for (const LearningCurve& c : s.curves) {
    if (c.is_exponential()) {
      append_real(canon, c.alpha());
    } else {
      append_vector(canon, c.times());
      append_vector(canon, c.probs());
    }
  }
  canon += s.target_cost_mode == TargetCostMode::AsWritten ? "aw;" : "co;";
  canon += s.intrusion_cost_mode == IntrusionCostMode::WorstCase ? "wc;" : "ex;";

  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char byte : canon) {
    h ^= byte;
    h *= 1099511628211ull;
  }
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(h));
  return hex;
}

Days uniform_slot_length(const Scenario& s) {
  require(s.n_attackers >= 2, "uniform schedule requires at least two attackers");
  const Real pairs = Real(s.n_attackers) * Real(s.n_attackers - 1);
  return s.horizon_days / pairs;
}

Days uniform_first_slot_start(const Scenario& s, int attacker) {
  require(attacker >= 1 && attacker <= s.n_attackers, "attacker id out of range");
  // Slots run in lexicographic (tenant, landlord) order, so tenant i's first
  // slot is preceded by (i-1)*(N-1) others.
  return Real(attacker - 1) * Real(s.n_attackers - 1) * uniform_slot_length(s);
}

}  // namespace botecon
