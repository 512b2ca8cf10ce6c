#include "qschur/qarith.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

namespace qschur {

namespace {

// log(sinh(z)) for z > 0 without overflow.
double log_sinh(double z) {
  if (z > 20.0) return z - std::log(2.0) + std::log1p(-std::exp(-2.0 * z));
  return std::log(std::sinh(z));
}

void require_endpoint(QParam::Kind limit) {
  if (limit == QParam::Kind::finite)
    throw std::invalid_argument("leading-term analysis needs a symbolic q");
}

}  // namespace

QParam QParam::finite(double value) {
  if (!(value > 0.0) || !std::isfinite(value))
    throw std::invalid_argument("q must be a finite positive real");
  return QParam(Kind::finite, value);
}

QParam QParam::parse(std::string_view text) {
  if (text == "zero" || text == "0") return zero();
  if (text == "infinity" || text == "inf") return infinity();
  std::string buf(text);
  char* end = nullptr;
  double v = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size())
    throw std::invalid_argument("cannot parse q value '" + buf + "'");
  return finite(v);
}

double QParam::value() const {
  if (kind_ != Kind::finite) throw std::logic_error("symbolic q has no numeric value");
  return value_;
}

std::string QParam::tag() const {
  switch (kind_) {
    case Kind::zero:
      return "zero";
    case Kind::infinity:
      return "infinity";
    case Kind::finite:
      break;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value_);
  return buf;
}

LogScalar::LogScalar(int sign, double log_magnitude)
    : sign_(sign > 0 ? 1 : (sign < 0 ? -1 : 0)),
      log_magnitude_(sign == 0 ? 0.0 : log_magnitude) {}

LogScalar LogScalar::from_double(double x) {
  if (x == 0.0) return zero();
  return LogScalar(x > 0 ? 1 : -1, std::log(std::fabs(x)));
}

double LogScalar::value() const {
  if (sign_ == 0) return 0.0;
  return sign_ * std::exp(log_magnitude_);
}

LogScalar LogScalar::sqrt() const {
  if (sign_ < 0) throw std::domain_error("square root of a negative LogScalar");
  if (sign_ == 0) return zero();
  return LogScalar(1, 0.5 * log_magnitude_);
}

LogScalar& LogScalar::operator*=(const LogScalar& rhs) {
  sign_ *= rhs.sign_;
  log_magnitude_ = sign_ == 0 ? 0.0 : log_magnitude_ + rhs.log_magnitude_;
  return *this;
}

LogScalar& LogScalar::operator/=(const LogScalar& rhs) {
  if (rhs.sign_ == 0) throw std::domain_error("division by zero LogScalar");
  sign_ *= rhs.sign_;
  log_magnitude_ = sign_ == 0 ? 0.0 : log_magnitude_ - rhs.log_magnitude_;
  return *this;
}

LogScalar qint(long n, const QParam& q) {
  if (n < 0) throw std::invalid_argument("qint requires n >= 0");
  if (n == 0) return LogScalar::zero();
  if (n == 1) return LogScalar::one();
  if (q.is_symbolic())
    throw DivergentLimit("[n] diverges at symbolic q for n >= 2; use qint_ratio");
  const double v = q.value();
  if (v == 1.0) return LogScalar(1, std::log(static_cast<double>(n)));
  // [n] = sinh(n y) / sinh(y) with y = |ln q|; symmetric under q -> 1/q.
  const double y = std::fabs(std::log(v));
  return LogScalar(1, log_sinh(n * y) - log_sinh(y));
}

LogScalar signed_qint(long n, const QParam& q) {
  return n < 0 ? -qint(-n, q) : qint(n, q);
}

LogScalar qint_ratio(long a, long b, const QParam& q) {
  if (a < 1 || b < 1) throw std::invalid_argument("qint_ratio requires a, b >= 1");
  if (q.is_symbolic()) {
    if (a == b) return LogScalar::one();
    if (a < b) return LogScalar::zero();
    throw DivergentLimit("[a]/[b] diverges at symbolic q for a > b");
  }
  return qint(a, q) / qint(b, q);
}

LogScalar qpow_half(long e, const QParam& q) {
  if (e == 0) return LogScalar::one();
  switch (q.kind()) {
    case QParam::Kind::zero:
      if (e > 0) return LogScalar::zero();
      throw DivergentLimit("q^{e/2} diverges at q = 0 for e < 0");
    case QParam::Kind::infinity:
      if (e < 0) return LogScalar::zero();
      throw DivergentLimit("q^{e/2} diverges at q = infinity for e > 0");
    case QParam::Kind::finite:
      break;
  }
  return LogScalar(1, 0.5 * static_cast<double>(e) * std::log(q.value()));
}

double qint_summed(long n, double q) {
  if (n < 0) throw std::invalid_argument("qint_summed requires n >= 0");
  double sum = 0.0;
  for (long k = 0; k < n; ++k) sum += std::pow(q, static_cast<double>(n - 1 - 2 * k));
  return sum;
}

double qint_rational(long n, double q) {
  if (q == 1.0) throw std::domain_error("rational form is singular at q = 1");
  return (std::pow(q, n) - std::pow(q, -n)) / (q - 1.0 / q);
}

LeadingTerm& LeadingTerm::operator*=(const LeadingTerm& rhs) {
  sign *= rhs.sign;
  twice_exponent = sign == 0 ? 0 : twice_exponent + rhs.twice_exponent;
  return *this;
}

LeadingTerm& LeadingTerm::operator/=(const LeadingTerm& rhs) {
  if (rhs.sign == 0) throw std::domain_error("division by a vanishing leading term");
  sign *= rhs.sign;
  twice_exponent = sign == 0 ? 0 : twice_exponent - rhs.twice_exponent;
  return *this;
}

LeadingTerm LeadingTerm::sqrt() const {
  if (sign < 0) throw std::domain_error("square root of a negative leading term");
  if (sign == 0) return zero();
  if (twice_exponent % 2 != 0) throw std::logic_error("square root of a half-integer power");
  return {1, twice_exponent / 2};
}

LeadingTerm leading_qint(long n, QParam::Kind limit) {
  require_endpoint(limit);
  if (n == 0) return LeadingTerm::zero();
  const long magnitude = n < 0 ? -n : n;
  const long e = 2 * (magnitude - 1);
  return {n < 0 ? -1 : 1, limit == QParam::Kind::infinity ? e : -e};
}

LeadingTerm leading_qpow_half(long e, QParam::Kind limit) {
  require_endpoint(limit);
  return {1, e};
}

int limit_value(const LeadingTerm& term, QParam::Kind limit) {
  require_endpoint(limit);
  if (term.sign == 0) return 0;
  if (term.twice_exponent == 0) return term.sign;
  const bool vanishes = limit == QParam::Kind::infinity ? term.twice_exponent < 0
                                                         : term.twice_exponent > 0;
  if (vanishes) return 0;
  throw DivergentLimit("expression diverges at the symbolic endpoint");
}

}  // namespace qschur
