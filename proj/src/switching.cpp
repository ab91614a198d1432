#include "swent/switching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace swent {

namespace {

void validate_mode(int mode, int num_modes) {
  if (mode < 0 || mode >= num_modes)
    throw std::invalid_argument("mode index " + std::to_string(mode) +
                                " outside [0, " + std::to_string(num_modes) +
                                ")");
}

}  // namespace

void SwitchingSignal::check_time(double t) const {
  if (t < 0.0 || !std::isfinite(t))
    throw std::invalid_argument("time must be finite and nonnegative");
  if (!periodic_ && t > horizon_ * (1 + 1e-12))
    throw std::out_of_range("query at t=" + std::to_string(t) +
                            " beyond generated horizon " +
                            std::to_string(horizon_));
}

SwitchingSignal SwitchingSignal::constant(int mode, int num_modes,
                                          double horizon) {
  return explicit_schedule(mode, {}, {}, num_modes, horizon,
                           DeclaredAsymptotics{
                               [&] {
                                 std::vector<double> r(num_modes, 0.0);
                                 r[mode] = 1.0;
                                 return r;
                               }(),
                               {mode},
                               {mode}});
}

SwitchingSignal SwitchingSignal::explicit_schedule(
    int initial_mode, std::vector<double> switch_times,
    std::vector<int> mode_sequence, int num_modes, double horizon,
    std::optional<DeclaredAsymptotics> declared) {
  if (num_modes <= 0) throw std::invalid_argument("need at least one mode");
  validate_mode(initial_mode, num_modes);
  if (switch_times.size() != mode_sequence.size())
    throw std::invalid_argument("one mode per switch time required");
  if (!(horizon > 0.0)) throw std::invalid_argument("horizon must be positive");
  int prev_mode = initial_mode;
  double prev_time = 0.0;
  for (std::size_t k = 0; k < switch_times.size(); ++k) {
    if (!(switch_times[k] > prev_time))
      throw std::invalid_argument(
          "switch times must be strictly increasing and positive");
    validate_mode(mode_sequence[k], num_modes);
    if (mode_sequence[k] == prev_mode)
      throw std::invalid_argument("consecutive modes must differ");
    prev_time = switch_times[k];
    prev_mode = mode_sequence[k];
  }
  SwitchingSignal s;
  s.initial_mode_ = initial_mode;
  s.num_modes_ = num_modes;
  s.horizon_ = horizon;
  s.times_ = std::move(switch_times);
  s.modes_ = std::move(mode_sequence);
  s.declared_ = std::move(declared);
  // Cumulative active time per mode at each switch.
  s.cum_active_.assign(num_modes, std::vector<double>(s.times_.size() + 1, 0.0));
  double t_prev = 0.0;
  int mode = initial_mode;
  for (std::size_t k = 0; k < s.times_.size(); ++k) {
    for (int p = 0; p < num_modes; ++p)
      s.cum_active_[p][k + 1] = s.cum_active_[p][k];
    s.cum_active_[mode][k + 1] += s.times_[k] - t_prev;
    t_prev = s.times_[k];
    mode = s.modes_[k];
  }
  return s;
}

SwitchingSignal SwitchingSignal::periodic(std::vector<double> dwell,
                                          std::vector<int> cycle,
                                          int num_modes, double horizon) {
  if (cycle.empty()) throw std::invalid_argument("cycle must not be empty");
  if (dwell.size() != cycle.size())
    throw std::invalid_argument("one dwell time per cycle entry required");
  for (double d : dwell)
    if (!(d > 0.0)) throw std::invalid_argument("dwell times must be positive");
  for (int m : cycle) validate_mode(m, num_modes);
  if (cycle.size() > 1) {
    for (std::size_t i = 0; i < cycle.size(); ++i)
      if (cycle[i] == cycle[(i + 1) % cycle.size()])
        throw std::invalid_argument("consecutive cycle modes must differ");
  }
  if (!(horizon > 0.0)) throw std::invalid_argument("horizon must be positive");

  SwitchingSignal s;
  s.num_modes_ = num_modes;
  s.horizon_ = horizon;
  s.initial_mode_ = cycle[0];
  PeriodicRule rule;
  rule.dwell = std::move(dwell);
  rule.cycle = std::move(cycle);
  const std::size_t L = rule.cycle.size();
  rule.cum.assign(L + 1, 0.0);
  for (std::size_t i = 0; i < L; ++i) rule.cum[i + 1] = rule.cum[i] + rule.dwell[i];
  rule.period = rule.cum[L];
  rule.per_cycle.assign(num_modes, 0.0);
  rule.cum_mode.assign(L + 1, std::vector<double>(num_modes, 0.0));
  for (std::size_t i = 0; i < L; ++i) {
    rule.cum_mode[i + 1] = rule.cum_mode[i];
    rule.cum_mode[i + 1][rule.cycle[i]] += rule.dwell[i];
  }
  for (int p = 0; p < num_modes; ++p) rule.per_cycle[p] = rule.cum_mode[L][p];

  DeclaredAsymptotics decl;
  decl.rho_hat.assign(num_modes, 0.0);
  for (int p = 0; p < num_modes; ++p)
    decl.rho_hat[p] = rule.per_cycle[p] / rule.period;
  for (int p = 0; p < num_modes; ++p) {
    if (rule.per_cycle[p] > 0.0) {
      decl.persistent.push_back(p);
      decl.strongly_persistent.push_back(p);
    }
  }
  if (L == 1) {  // degenerate: constant signal
    return constant(rule.cycle[0], num_modes, horizon);
  }
  s.periodic_ = std::move(rule);
  s.declared_ = std::move(decl);
  return s;
}

SwitchingSignal SwitchingSignal::setpoint(const Rational& ratio,
                                          const Rational& t1, double horizon) {
  if (!(ratio > Rational(1, 2) && ratio < Rational(1)))
    throw std::invalid_argument(
        "set-point ratio must lie in (1/2, 1) for the rule to alternate");
  if (!(t1 > Rational(0))) throw std::invalid_argument("t1 must be positive");
  if (!(horizon > 0.0) || horizon > 1e15)
    throw std::invalid_argument("set-point horizon must lie in (0, 1e15]");

  const Rational one_minus = Rational(1) - ratio;
  std::vector<Rational> exact{t1};
  Rational tau0 = t1;        // active time of mode 0 at the latest switch
  Rational tau1 = Rational(0);
  // Mode 0 occupies [t_{2k}, t_{2k+1}), mode 1 occupies [t_{2k+1}, t_{2k+2}).
  // The next switch lands where the currently active mode's rate reaches
  // `ratio`: t = (active time of the *other* mode) / (1 - ratio).
  while (exact.back().value() <= horizon) {
    const bool mode1_active = exact.size() % 2 == 1;
    Rational t_prev = exact.back();
    Rational t_next = (mode1_active ? tau0 : tau1) / one_minus;
    if (!(t_next > t_prev))
      throw std::logic_error("set-point rule failed to advance");
    if (mode1_active)
      tau1 = tau1 + (t_next - t_prev);
    else
      tau0 = tau0 + (t_next - t_prev);
    exact.push_back(t_next);
    if (exact.size() > 4096)
      throw std::overflow_error("set-point schedule too long for horizon");
  }

  std::vector<double> times;
  std::vector<int> modes;
  times.reserve(exact.size());
  for (std::size_t k = 0; k < exact.size(); ++k) {
    times.push_back(exact[k].value());
    modes.push_back(k % 2 == 0 ? 1 : 0);  // first switch enters mode 1
  }
  DeclaredAsymptotics decl;
  decl.rho_hat = {ratio.value(), ratio.value()};
  decl.persistent = {0, 1};
  decl.strongly_persistent = {0, 1};
  SwitchingSignal s = explicit_schedule(0, std::move(times), std::move(modes),
                                        2, horizon, std::move(decl));
  s.exact_times_ = std::move(exact);
  return s;
}

int SwitchingSignal::mode_at(double t) const {
  check_time(t);
  return segment_mode(switch_count(t));
}

std::size_t SwitchingSignal::switch_count(double up_to) const {
  if (!(up_to > 0.0)) return 0;
  if (periodic_) {
    const auto& r = *periodic_;
    const std::size_t L = r.cycle.size();
    double cycles = std::floor(up_to / r.period);
    std::size_t count = static_cast<std::size_t>(cycles) * L;
    double rem = up_to - cycles * r.period;
    std::size_t j = 0;
    while (j < L && r.cum[j + 1] <= rem) ++j;
    count += j;
    // Guard against floating drift at exact cycle boundaries.
    while (count >= 1 && switch_time(count) > up_to) --count;
    while (switch_time(count + 1) <= up_to) ++count;
    return count;
  }
  auto it = std::upper_bound(times_.begin(), times_.end(), up_to);
  return static_cast<std::size_t>(it - times_.begin());
}

double SwitchingSignal::switch_time(std::size_t k) const {
  if (k == 0) throw std::invalid_argument("switches are 1-based");
  if (periodic_) {
    const auto& r = *periodic_;
    const std::size_t L = r.cycle.size();
    return static_cast<double>(k / L) * r.period + r.cum[k % L];
  }
  if (k > times_.size()) throw std::out_of_range("switch index out of range");
  return times_[k - 1];
}

int SwitchingSignal::segment_mode(std::size_t k) const {
  if (periodic_) {
    const auto& r = *periodic_;
    return r.cycle[k % r.cycle.size()];
  }
  if (k == 0) return initial_mode_;
  if (k > modes_.size()) throw std::out_of_range("segment index out of range");
  return modes_[k - 1];
}

double SwitchingSignal::active_time(int p, double t) const {
  validate_mode(p, num_modes_);
  check_time(t);
  if (periodic_) {
    const auto& r = *periodic_;
    double cycles = std::floor(t / r.period);
    double rem = t - cycles * r.period;
    double tau = cycles * r.per_cycle[p];
    std::size_t i = 0;
    while (i < r.cycle.size() && r.cum[i + 1] <= rem) ++i;
    if (i < r.cycle.size()) {
      tau += r.cum_mode[i][p];
      if (r.cycle[i] == p) tau += rem - r.cum[i];
    } else {
      tau += r.per_cycle[p];
    }
    return tau;
  }
  const std::size_t k = switch_count(t);
  double tau = cum_active_[p][k];
  if (segment_mode(k) == p) tau += t - (k == 0 ? 0.0 : times_[k - 1]);
  return tau;
}

double SwitchingSignal::active_rate(int p, double t) const {
  validate_mode(p, num_modes_);
  if (t == 0.0) return mode_at(0.0) == p ? 1.0 : 0.0;
  return active_time(p, t) / t;
}

std::vector<double> SwitchingSignal::switch_times_upto(double t) const {
  const std::size_t n = switch_count(t);
  std::vector<double> out(n);
  for (std::size_t k = 1; k <= n; ++k) out[k - 1] = switch_time(k);
  return out;
}

std::vector<int> SwitchingSignal::mode_sequence_upto(double t) const {
  const std::size_t n = switch_count(t);
  std::vector<int> out(n);
  for (std::size_t k = 1; k <= n; ++k) out[k - 1] = segment_mode(k);
  return out;
}

RateProfile asymptotic_rates(const SwitchingSignal& sig, double horizon,
                             double tail_fraction, double threshold) {
  if (!(tail_fraction > 0.0 && tail_fraction <= 1.0))
    throw std::invalid_argument("tail_fraction must lie in (0, 1]");
  const int m = sig.num_modes();
  RateProfile out;
  out.horizon = horizon;
  out.tail_fraction = tail_fraction;
  out.threshold = threshold;
  out.rho_hat_estimate.assign(m, 0.0);
  out.persistent.assign(m, false);
  out.strongly_persistent.assign(m, false);

  std::vector<double> tau_final(m, 0.0);
  std::size_t tail_breaks = 0;
  std::vector<bool> active_in_tail(m, false);
  walk_breakpoints(sig, horizon, tail_fraction,
                   [&](double t, const std::vector<double>& tau, bool tail) {
                     if (!tail) return;
                     ++tail_breaks;
                     for (int p = 0; p < m; ++p)
                       out.rho_hat_estimate[p] =
                           std::max(out.rho_hat_estimate[p], tau[p] / t);
                     tau_final = tau;
                   });
  // Modes active within the tail window: segments starting at tail switches
  // plus the segment containing the horizon.
  {
    const std::size_t n_switch = sig.switch_count(horizon);
    const std::size_t tail_len =
        static_cast<std::size_t>(tail_fraction * static_cast<double>(n_switch));
    const std::size_t first_tail =
        n_switch >= tail_len ? n_switch - tail_len + 1 : 1;
    if (n_switch > 0 && tail_len == 0) out.tail_warning = true;
    for (std::size_t k = first_tail; k <= n_switch; ++k)
      active_in_tail[sig.segment_mode(k)] = true;
    active_in_tail[sig.segment_mode(n_switch)] = true;
  }

  out.active_times = tau_final;
  out.rates.assign(m, 0.0);
  for (int p = 0; p < m; ++p) out.rates[p] = tau_final[p] / horizon;

  for (int p = 0; p < m; ++p) {
    out.persistent[p] = active_in_tail[p];
    out.strongly_persistent[p] = out.rho_hat_estimate[p] > threshold;
  }
  if (sig.declared()) {
    out.declared_used = true;
    out.rho_hat = sig.declared()->rho_hat;
    std::fill(out.persistent.begin(), out.persistent.end(), false);
    std::fill(out.strongly_persistent.begin(), out.strongly_persistent.end(),
              false);
    for (int p : sig.declared()->persistent) out.persistent[p] = true;
    for (int p : sig.declared()->strongly_persistent)
      out.strongly_persistent[p] = true;
  } else {
    out.rho_hat = out.rho_hat_estimate;
  }
  return out;
}

}  // namespace swent
