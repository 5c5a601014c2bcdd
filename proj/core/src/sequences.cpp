#include "sympolar/sequences.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "sympolar/errors.hpp"
#include "sympolar/suspension.hpp"

namespace sympolar {

namespace {

void require_positive(int n, const char* what) {
  if (n < 1) throw PreconditionError(std::string(what) + ": n must be positive, got " + std::to_string(n));
}

mpz_class factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

mpz_class power(unsigned long base, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

// Γ(n/2+1)^2 = coefficient * pi^(n mod 2).
Rational gamma_half_squared(int n) {
  const unsigned long m = static_cast<unsigned long>(n / 2);
  if (n % 2 == 0) {
    const mpz_class f = factorial(m);
    return Rational(f * f);
  }
  // Γ(m+3/2) = (2m+2)! / (4^{m+1} (m+1)!) * sqrt(pi)
  const mpz_class num = factorial(2 * m + 2);
  const Rational g = ratio(num, power(4, m + 1) * factorial(m + 1));
  return g * g;
}

// vol(Q^n ⊕₂ C^n) / pi^(n mod 2) = 4^n / (n!)^2 * Γ(n/2+1)^2.
Rational ball_sum_volume(int n) {
  const auto un = static_cast<unsigned long>(n);
  return ratio(power(4, un), factorial(un) * factorial(un)) * gamma_half_squared(n);
}

// a_1 .. a_{n_max} of the compare sequence, built incrementally.
std::vector<SequenceValue> compare_values(int n_max) {
  std::vector<SequenceValue> out;
  out.reserve(static_cast<std::size_t>(n_max));
  Rational vol = 1;
  for (int n = 1; n <= n_max; ++n) {
    vol *= ratio(2 * (4 * n - 1), n * (4 * n - 2));
    out.push_back({ball_sum_volume(n) / vol, n % 2});
  }
  return out;
}

}  // namespace

double SequenceValue::to_double() const {
  return sympolar::to_double(coefficient) * std::pow(std::numbers::pi, pi_power);
}

std::string to_string(const SequenceValue& value) {
  if (value.pi_power == 0) return to_string(value.coefficient);
  std::ostringstream os;
  os << to_string(value.coefficient) << " pi";
  if (value.pi_power != 1) os << '^' << value.pi_power;
  return os.str();
}

SequenceValue sequence_compare(int n) {
  require_positive(n, "sequence_compare");
  return {ball_sum_volume(n) / volume_closed_form(n), n % 2};
}

Rational sequence_viterbo_ratio(int n) {
  require_positive(n, "sequence_viterbo_ratio");
  const Rational base = ratio(2 * n + 1, n);
  Rational denom = 1;
  for (int i = 0; i < n; ++i) denom *= base;
  return Rational(factorial(static_cast<unsigned long>(n))) * volume_closed_form(n) / denom;
}

Rational sequence_viterbo_product(int n) {
  require_positive(n, "sequence_viterbo_product");
  const Rational r = ratio(2 * n, 2 * n + 1);
  Rational out = 1;
  for (int i = 0; i < n; ++i) out *= r;
  for (int k = 0; k < n; ++k) out *= ratio(4 * k + 3, 4 * k + 2);
  return out;
}

Rational compare_step_ratio(int n) {
  const mpz_class z = n;
  return ratio(16 * z * z * z + 64 * z * z + 76 * z + 24, 16 * z * z * z + 56 * z * z + 61 * z + 21);
}

SequenceKind parse_sequence_kind(const std::string& text) {
  if (text == "compare") return SequenceKind::Compare;
  if (text == "viterbo") return SequenceKind::Viterbo;
  throw PreconditionError("unknown sequence kind '" + text + "' (expected compare or viterbo)");
}

std::string to_string(SequenceKind kind) { return kind == SequenceKind::Compare ? "compare" : "viterbo"; }

MonotonicityReport monotonicity_check(SequenceKind kind, int n_max) {
  if (n_max < 2) throw PreconditionError("monotonicity_check: N must be at least 2");
  MonotonicityReport report;
  report.kind = kind;
  report.checked_up_to = n_max;
  auto fail = [&](int n) {
    if (report.holds) {
      report.holds = false;
      report.offending_n = n;
    }
  };

  if (kind == SequenceKind::Compare) {
    const auto a = compare_values(n_max + 2);
    // a_1 = pi/3 < 22/21 < 8/7 = a_2 using pi < 22/7.
    if (!(a[0].coefficient * ratio(22, 7) < a[1].coefficient)) fail(1);
    for (int n = 1; n <= n_max; ++n)
      if (!(a[static_cast<std::size_t>(n + 1)].coefficient > a[static_cast<std::size_t>(n - 1)].coefficient)) fail(n);
  } else {
    // a_{n+1}/a_n = ((2n+2)/(2n+3))^{n+1} ((2n+1)/(2n))^n (4n+3)/(4n+2)
    for (int n = 1; n <= n_max; ++n) {
      const Rational up = ratio(2 * n + 2, 2 * n + 3), down = ratio(2 * n + 1, 2 * n);
      Rational step = ratio(4 * n + 3, 4 * n + 2);
      for (int i = 0; i <= n; ++i) step *= up;
      for (int i = 0; i < n; ++i) step *= down;
      if (!(step > 1)) fail(n);
    }
  }
  report.limit = sequence_asymptotic_constant(kind);
  const double n = n_max;
  report.normalized = std::exp(sequence_log_value(kind, n) - 0.25 * std::log(n));
  return report;
}

double sequence_log_value(SequenceKind kind, double n) {
  // log vol P^{⋉n} = n log 2 - log n! + log Γ(n+3/4) + log Γ(1/2) - log Γ(n+1/2) - log Γ(3/4)
  const double log_vol = n * std::log(2.0) - std::lgamma(n + 1) + std::lgamma(n + 0.75) + std::lgamma(0.5) -
                         std::lgamma(n + 0.5) - std::lgamma(0.75);
  if (kind == SequenceKind::Compare) {
    const double log_num = n * std::log(4.0) - std::lgamma(n + 1) + 2 * std::lgamma(n / 2 + 1) - std::lgamma(n + 1);
    return log_num - log_vol;
  }
  return std::lgamma(n + 1) + log_vol - n * std::log(2 + 1 / n);
}

double sequence_asymptotic_constant(SequenceKind kind) {
  if (kind == SequenceKind::Compare) return std::tgamma(0.75) / std::sqrt(2.0);
  return std::tgamma(0.5) / (std::exp(0.5) * std::tgamma(0.75));
}

}  // namespace sympolar
