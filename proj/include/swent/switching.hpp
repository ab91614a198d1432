#pragma once

// Switching signals: right-continuous piecewise-constant mode schedules with
// exact active-time accounting, asymptotic-rate estimation over a tail
// window, and the periodic / set-point constructors used by the bound
// evaluators and the examples.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "swent/rational.hpp"

namespace swent {

struct DeclaredAsymptotics {
  std::vector<double> rho_hat;             // one per mode
  std::vector<int> persistent;             // mode ids
  std::vector<int> strongly_persistent;    // mode ids
};

class SwitchingSignal {
 public:
  static SwitchingSignal constant(int mode, int num_modes, double horizon);

  // Explicit schedule: strictly increasing positive switch times, one mode
  // per switch, consecutive modes distinct. Queries past `horizon` throw.
  static SwitchingSignal explicit_schedule(int initial_mode,
                                           std::vector<double> switch_times,
                                           std::vector<int> mode_sequence,
                                           int num_modes, double horizon,
                                           std::optional<DeclaredAsymptotics>
                                               declared = std::nullopt);

  // Periodic schedule cycling through `cycle` with the given dwell times.
  // Backed by the rule, so queries beyond `horizon` are still valid; the
  // exact asymptotic rates (dwell share of the period) are declared.
  static SwitchingSignal periodic(std::vector<double> dwell,
                                  std::vector<int> cycle, int num_modes,
                                  double horizon);

  // Two-mode set-point schedule: mode 0 first, t_1 given, and each switch
  // occurs the first instant the other mode's active rate reaches `ratio`.
  // Breakpoints are generated in exact rational arithmetic. ratio in (1/2,1).
  static SwitchingSignal setpoint(const Rational& ratio, const Rational& t1,
                                  double horizon);

  int num_modes() const { return num_modes_; }
  double horizon() const { return horizon_; }
  int initial_mode() const { return initial_mode_; }
  bool rule_backed() const { return periodic_.has_value(); }

  int mode_at(double t) const;
  double active_time(int p, double t) const;
  double active_rate(int p, double t) const;  // indicator of sigma(0) at t=0

  // Breakpoint access; switches are 1-based, segment k spans [t_k, t_{k+1})
  // with t_0 = 0. For rule-backed signals these work for any time.
  std::size_t switch_count(double up_to) const;  // switches with t_k <= up_to
  double switch_time(std::size_t k) const;       // k in [1, switch_count]
  int segment_mode(std::size_t k) const;         // mode on [t_k, t_{k+1})

  const std::optional<DeclaredAsymptotics>& declared() const {
    return declared_;
  }
  // Setpoint signals only: exact breakpoints, in order.
  const std::vector<Rational>& exact_switch_times() const {
    return exact_times_;
  }

  std::vector<double> switch_times_upto(double t) const;
  std::vector<int> mode_sequence_upto(double t) const;

 private:
  SwitchingSignal() = default;
  void check_time(double t) const;

  struct PeriodicRule {
    std::vector<double> dwell;        // per cycle position
    std::vector<int> cycle;           // repeats with no two equal neighbors
    std::vector<double> cum;          // cum[i] = sum of dwell[0..i-1]
    double period = 0.0;
    std::vector<double> per_cycle;    // total dwell per mode over one cycle
    // per-mode cumulative active time at the start of cycle position i
    std::vector<std::vector<double>> cum_mode;
  };

  int initial_mode_ = 0;
  int num_modes_ = 1;
  double horizon_ = 0.0;
  std::vector<double> times_;   // explicit switch times (empty if rule-backed)
  std::vector<int> modes_;      // mode after k-th switch
  std::vector<std::vector<double>> cum_active_;  // [mode][switch index]
  std::optional<PeriodicRule> periodic_;
  std::optional<DeclaredAsymptotics> declared_;
  std::vector<Rational> exact_times_;
};

// Active times, rates and tail-window estimates of the asymptotic rates.
struct RateProfile {
  std::vector<double> active_times;       // tau_p(horizon)
  std::vector<double> rates;              // rho_p(horizon)
  std::vector<double> rho_hat;            // declared when present, else estimate
  std::vector<double> rho_hat_estimate;   // max of rho_p over tail breakpoints
  std::vector<bool> persistent;           // P_inf membership
  std::vector<bool> strongly_persistent;  // P_plus membership
  bool declared_used = false;
  bool tail_warning = false;  // tail window contains no switch breakpoint
  double horizon = 0.0;
  double tail_fraction = 0.5;
  double threshold = 1e-6;
};

// The tail keeps the last floor(tail_fraction * N) switch breakpoints plus
// the horizon endpoint; rho_hat is estimated as the maximum rate over them.
RateProfile asymptotic_rates(const SwitchingSignal& sig, double horizon,
                             double tail_fraction = 0.5,
                             double threshold = 1e-6);

// Visits every switch time t_k <= horizon in order and then the horizon
// endpoint, with exact running active times. The callback receives
// (t, tau, in_tail) where tau has one entry per mode.
template <class F>
void walk_breakpoints(const SwitchingSignal& sig, double horizon,
                      double tail_fraction, F&& cb) {
  if (!(horizon > 0.0)) throw std::invalid_argument("horizon must be positive");
  if (!sig.rule_backed() && horizon > sig.horizon() * (1 + 1e-12))
    throw std::out_of_range("horizon exceeds the generated schedule");
  const std::size_t n_switch = sig.switch_count(horizon);
  const std::size_t tail_len = static_cast<std::size_t>(
      tail_fraction * static_cast<double>(n_switch));
  const std::size_t first_tail =
      n_switch >= tail_len ? n_switch - tail_len + 1 : 1;
  std::vector<double> tau(sig.num_modes(), 0.0);
  double prev = 0.0;
  int mode = sig.segment_mode(0);
  for (std::size_t k = 1; k <= n_switch; ++k) {
    const double tk = sig.switch_time(k);
    tau[mode] += tk - prev;
    prev = tk;
    mode = sig.segment_mode(k);
    cb(tk, tau, k >= first_tail);
  }
  if (horizon > prev) tau[mode] += horizon - prev;
  cb(horizon, tau, true);  // horizon endpoint is always in the tail
}

}  // namespace swent
