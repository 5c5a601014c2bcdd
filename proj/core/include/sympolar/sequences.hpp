#pragma once

#include <optional>
#include <string>

#include "sympolar/rational.hpp"

namespace sympolar {

/// coefficient * pi^pi_power.
struct SequenceValue {
  Rational coefficient;
  int pi_power = 0;

  double to_double() const;
  friend bool operator==(const SequenceValue&, const SequenceValue&) = default;
};

std::string to_string(const SequenceValue& value);

/// a_n = vol(Q^n ⊕₂ C^n) / vol(P^{⋉n}), with the numerator
/// 4^n/n! * Γ(n/2+1)^2 / Γ(n+1) reduced through half-integer Γ values.
SequenceValue sequence_compare(int n);

/// a_n = n! vol(P^{⋉n}) / (2+1/n)^n.
Rational sequence_viterbo_ratio(int n);

/// (2n/(2n+1))^n * prod_{k<n} (4k+3)/(4k+2), evaluated independently of
/// volume_closed_form.
Rational sequence_viterbo_product(int n);

/// (16n^3+64n^2+76n+24) / (16n^3+56n^2+61n+21).
Rational compare_step_ratio(int n);

enum class SequenceKind { Compare, Viterbo };

SequenceKind parse_sequence_kind(const std::string& text);
std::string to_string(SequenceKind kind);

struct MonotonicityReport {
  SequenceKind kind = SequenceKind::Compare;
  int checked_up_to = 0;
  bool holds = true;
  std::optional<int> offending_n;  ///< first n where the check failed
  double limit = 0;                ///< asymptotic constant of a_n / n^{1/4}
  double normalized = 0;           ///< a_N / N^{1/4} in floating point
};

/// compare: a_{n+2} > a_n for n <= N and a_2 > a_1; viterbo: a_{n+1} > a_n
/// for n <= N. All comparisons are exact. Throws PreconditionError for N < 2.
MonotonicityReport monotonicity_check(SequenceKind kind, int n_max);

/// log a_n in floating point via lgamma; usable for n in the millions.
double sequence_log_value(SequenceKind kind, double n);

/// Γ(3/4)/√2 for compare, Γ(1/2)/(e^{1/2} Γ(3/4)) for viterbo.
double sequence_asymptotic_constant(SequenceKind kind);

}  // namespace sympolar
