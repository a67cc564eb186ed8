#include "bornsim/split_protocol.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace bornsim {

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Fraction {
  BigInt num;
  BigInt den;
};

// Exact rational value of a positive double: x = num / den.
Fraction exact_rational(double x) {
  int exp2 = 0;
  const double mant = std::frexp(x, &exp2);
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
  exp2 -= 53;
  Fraction f{BigInt(scaled), BigInt(1)};
  if (exp2 >= 0) {
    f.num <<= exp2;
  } else {
    f.den <<= -exp2;
  }
  return f;
}

// |x - a.num/a.den| < |x - b.num/b.den|, exactly, for x = num/den.
// Equality of errors returns false.
bool strictly_closer(const Fraction& x, const Fraction& a, const Fraction& b) {
  const BigInt err_a = abs(x.num * a.den - a.num * x.den) * b.den;
  const BigInt err_b = abs(x.num * b.den - b.num * x.den) * a.den;
  return err_a < err_b;
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> approximate_ratio(
    double r, std::uint64_t max_denominator) {
  if (!std::isfinite(r) || r <= 0.0) {
    throw std::invalid_argument(
        "approximate_ratio: ratio must be finite and positive");
  }
  if (max_denominator == 0) {
    throw std::invalid_argument(
        "approximate_ratio: max_denominator must be positive");
  }
  const double squared = r * r;
  if (!std::isfinite(squared)) {
    throw std::invalid_argument("approximate_ratio: r^2 overflows");
  }

  const Fraction x = exact_rational(squared);
  const BigInt bound(max_denominator);

  // Continued-fraction walk. The best approximation with denominator
  // <= bound is the last convergent that fits, or the deepest
  // semiconvergent toward the one that does not.
  BigInt num = x.num, den = x.den;
  BigInt a = num / den;
  BigInt rem = num - a * den;
  BigInt p_prev = 1, q_prev = 0;  // convergent h_{-1}/k_{-1}
  BigInt p = a, q = 1;            // convergent h_0/k_0

  std::vector<Fraction> candidates;
  while (true) {
    if (rem == 0) {
      candidates.push_back({p, q});  // exact value reached
      break;
    }
    num = den;
    den = rem;
    a = num / den;
    rem = num - a * den;
    const BigInt p_next = a * p + p_prev;
    const BigInt q_next = a * q + q_prev;
    if (q_next > bound) {
      candidates.push_back({p, q});
      const BigInt t = (bound - q_prev) / q;
      if (t >= 1) candidates.push_back({p_prev + t * p, q_prev + t * q});
      break;
    }
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
  }

  const Fraction* best = nullptr;
  for (const Fraction& c : candidates) {
    if (c.num < 1) continue;  // the numerator maps to a dot count, so >= 1
    if (best == nullptr || strictly_closer(x, c, *best) ||
        (!strictly_closer(x, *best, c) &&
         (c.den < best->den || (c.den == best->den && c.num < best->num)))) {
      best = &c;
    }
  }
  if (best == nullptr) {
    // x lies below every representable fraction; 1/max_denominator is
    // the closest admissible value.
    return {1, max_denominator};
  }
  if (*&best->num > BigInt(UINT64_MAX) || best->den > BigInt(UINT64_MAX)) {
    throw std::out_of_range("approximate_ratio: result does not fit in 64 bits");
  }
  return {best->num.convert_to<std::uint64_t>(),
          best->den.convert_to<std::uint64_t>()};
}

double pulse_duration_for_fraction(double fraction, double delta_e) {
  if (!(fraction >= 0.0 && fraction <= 1.0)) {
    throw std::invalid_argument(
        "pulse_duration_for_fraction: fraction must lie in [0, 1]");
  }
  if (!std::isfinite(delta_e) || delta_e <= 0.0) {
    throw std::invalid_argument(
        "pulse_duration_for_fraction: level splitting must be positive");
  }
  return 2.0 * std::asin(std::sqrt(fraction)) / delta_e;
}

DotChain pulse_chain(const Pulse& pulse, std::size_t site_count) {
  std::vector<double> on_site(site_count, 0.0);
  std::vector<double> hopping(site_count > 0 ? site_count - 1 : 0, 0.0);
  switch (pulse.kind) {
    case Pulse::Kind::transfer:
      if (pulse.index + 1 >= site_count) {
        throw std::invalid_argument("pulse_chain: hopping index out of range");
      }
      hopping[pulse.index] = pulse.strength;
      break;
    case Pulse::Kind::phase:
      if (pulse.index >= site_count) {
        throw std::invalid_argument("pulse_chain: dot index out of range");
      }
      on_site[pulse.index] = pulse.strength;
      break;
  }
  return DotChain(std::move(on_site), std::move(hopping));
}

RegionPartition SplitPlan::partition() const {
  return RegionPartition::left_right(left_dots, right_dots);
}

QuantumState canonical_start(std::size_t n, std::size_t m) {
  if (n < 1 || m < 1) {
    throw std::invalid_argument("canonical_start: both blocks need a dot");
  }
  QuantumState state;
  state.amplitudes.assign(n + m, Complex(0.0, 0.0));
  state.amplitudes[0] = std::sqrt(static_cast<double>(n));
  state.amplitudes[n] = std::sqrt(static_cast<double>(m));
  return state;
}

SplitPlan plan_equalization(std::size_t n, std::size_t m) {
  if (n < 1 || m < 1) {
    throw std::invalid_argument("plan_equalization: both blocks need a dot");
  }
  SplitPlan plan{n, m, {}};
  const auto cascade = [&plan](std::size_t offset, std::size_t size) {
    for (std::size_t i = 0; i + 1 < size; ++i) {
      const auto remaining = static_cast<double>(size - i);
      const double fraction = (remaining - 1.0) / remaining;
      plan.schedule.pulses.push_back(
          {Pulse::Kind::transfer, offset + i, 1.0,
           pulse_duration_for_fraction(fraction, 2.0)});
    }
  };
  cascade(0, n);
  cascade(n, m);
  return plan;
}

QuantumState execute(const SplitPlan& plan, const QuantumState& state) {
  if (plan.left_dots < 1 || plan.right_dots < 1) {
    throw std::invalid_argument("execute: plan has an empty block");
  }
  if (state.size() != plan.site_count()) {
    throw std::invalid_argument(
        "execute: state dimension does not match the plan");
  }
  const std::size_t boundary = plan.left_dots - 1;
  QuantumState current = state;
  for (const Pulse& pulse : plan.schedule.pulses) {
    if (pulse.kind == Pulse::Kind::transfer && pulse.index == boundary) {
      throw std::invalid_argument(
          "execute: segment couples across the L/R boundary");
    }
    current = evolve(current, EvolutionSegment(
                                  pulse_chain(pulse, plan.site_count()),
                                  pulse.duration));
  }
  return current;
}

double max_equalization_error(const QuantumState& state) {
  const double total = total_norm(state);
  if (state.size() == 0 || total <= 0.0) {
    throw std::invalid_argument(
        "max_equalization_error: state must carry norm");
  }
  const double share = total / static_cast<double>(state.size());
  double worst = 0.0;
  for (const Complex& a : state.amplitudes) {
    worst = std::max(worst, std::abs(std::norm(a) - share) / share);
  }
  return worst;
}

std::pair<PulseSchedule, QuantumState> zero_phase(const QuantumState& state,
                                                  std::size_t dot,
                                                  const DotChain& chain,
                                                  double pulse_energy) {
  if (chain.site_count() != state.size()) {
    throw std::invalid_argument(
        "zero_phase: state dimension does not match the chain");
  }
  if (dot >= state.size()) {
    throw std::invalid_argument("zero_phase: dot index out of range");
  }
  const bool left_open = dot > 0 && chain.hopping()[dot - 1] != 0.0;
  const bool right_open =
      dot + 1 < chain.site_count() && chain.hopping()[dot] != 0.0;
  if (left_open || right_open) {
    throw std::invalid_argument(
        "zero_phase: dot is coupled; the pulse would leak norm");
  }
  if (!std::isfinite(pulse_energy) || pulse_energy <= 0.0) {
    throw std::invalid_argument("zero_phase: pulse energy must be positive");
  }

  double angle = std::arg(state.amplitudes[dot]);
  if (angle == 0.0) {
    return {PulseSchedule{}, state};
  }
  if (angle < 0.0) angle += 2.0 * M_PI;  // want eps * T = arg mod 2pi, T >= 0

  const Pulse pulse{Pulse::Kind::phase, dot, pulse_energy,
                    angle / pulse_energy};
  const QuantumState rotated =
      evolve(state, EvolutionSegment(pulse_chain(pulse, state.size()),
                                     pulse.duration));
  return {PulseSchedule{{pulse}}, rotated};
}

}  // namespace bornsim
