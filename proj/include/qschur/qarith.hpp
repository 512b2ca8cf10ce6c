#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qschur {

/// Raised when an expression has no finite limit at a symbolic q. Callers
/// holding such an expression must switch to the crystal-limit formulas.
class DivergentLimit : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The quantum parameter: a strictly positive binary64 value, or one of the
/// two symbolic endpoints. The endpoints are tags, never 0.0 or inf.
class QParam {
 public:
  enum class Kind { finite, zero, infinity };

  static QParam finite(double value);
  static QParam zero() { return QParam(Kind::zero, 0.0); }
  static QParam infinity() { return QParam(Kind::infinity, 0.0); }

  /// Accepts "zero", "infinity" (also "0" and "inf"), or a positive decimal.
  static QParam parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_symbolic() const { return kind_ != Kind::finite; }

  /// Finite value; throws std::logic_error for symbolic q.
  double value() const;

  /// "zero", "infinity", or the value with 17 significant digits.
  std::string tag() const;

  friend bool operator==(const QParam&, const QParam&) = default;

 private:
  QParam(Kind kind, double value) : kind_(kind), value_(value) {}

  Kind kind_;
  double value_;
};

/// Sign / natural-log-magnitude carrier. Products of many quantum integers
/// stay representable here long after binary64 would overflow.
class LogScalar {
 public:
  LogScalar() = default;
  LogScalar(int sign, double log_magnitude);

  static LogScalar zero() { return {}; }
  static LogScalar one() { return LogScalar(1, 0.0); }
  static LogScalar from_double(double x);

  int sign() const { return sign_; }
  double log_magnitude() const { return log_magnitude_; }
  bool is_zero() const { return sign_ == 0; }

  double value() const;

  /// Principal square root. Throws std::domain_error on negative input.
  LogScalar sqrt() const;
  LogScalar operator-() const { return LogScalar(-sign_, log_magnitude_); }

  LogScalar& operator*=(const LogScalar& rhs);
  LogScalar& operator/=(const LogScalar& rhs);

  friend LogScalar operator*(LogScalar a, const LogScalar& b) { return a *= b; }
  friend LogScalar operator/(LogScalar a, const LogScalar& b) { return a /= b; }

 private:
  int sign_ = 0;
  double log_magnitude_ = 0.0;
};

/// [n] for n >= 0. At q = 1 this is n (to rounding). At symbolic q only n <= 1 is
/// finite; larger n throws DivergentLimit.
LogScalar qint(long n, const QParam& q);

/// [n] for any integer, using [-n] = -[n].
LogScalar signed_qint(long n, const QParam& q);

/// [a]/[b] for a, b >= 1, with the analytic limit at symbolic q
/// (1 if a == b, 0 if a < b, DivergentLimit if a > b).
LogScalar qint_ratio(long a, long b, const QParam& q);

/// q^{e/2}. At q = zero: 0 for e > 0, 1 for e == 0, divergent for e < 0;
/// mirrored at infinity.
LogScalar qpow_half(long e, const QParam& q);

/// Reference evaluation q^{n-1} + q^{n-3} + ... + q^{-(n-1)}.
double qint_summed(long n, double q);

/// Reference evaluation (q^n - q^-n)/(q - q^-1); undefined at q = 1.
double qint_rational(long n, double q);

/// Leading term sign * q^{twice_exponent/2} of an expression as q tends to
/// one of the symbolic endpoints. A zero expression has sign 0.
struct LeadingTerm {
  int sign = 1;
  long twice_exponent = 0;

  static LeadingTerm zero() { return {0, 0}; }
  bool is_zero() const { return sign == 0; }

  LeadingTerm& operator*=(const LeadingTerm& rhs);
  LeadingTerm& operator/=(const LeadingTerm& rhs);
  friend LeadingTerm operator*(LeadingTerm a, const LeadingTerm& b) { return a *= b; }
  friend LeadingTerm operator/(LeadingTerm a, const LeadingTerm& b) { return a /= b; }

  /// Requires a non-negative value with an integer exponent.
  LeadingTerm sqrt() const;
};

/// Leading term of [n] (any sign of n) as q -> limit.
LeadingTerm leading_qint(long n, QParam::Kind limit);

/// Leading term of q^{e/2}.
LeadingTerm leading_qpow_half(long e, QParam::Kind limit);

/// Limit value of the expression: 0, +1 or -1. Throws DivergentLimit when
/// the leading term grows without bound.
int limit_value(const LeadingTerm& term, QParam::Kind limit);

}  // namespace qschur
