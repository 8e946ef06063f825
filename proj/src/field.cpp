#include "liecap/field.hpp"

#include <cctype>

namespace liecap {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MixedFields: return "MixedFields";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotContained: return "NotContained";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotCentral: return "NotCentral";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::WrongDimension: return "WrongDimension";
    case ErrorKind::UnknownKey: return "UnknownKey";
    case ErrorKind::EpsilonRequired: return "EpsilonRequired";
    case ErrorKind::EpsilonForbidden: return "EpsilonForbidden";
    case ErrorKind::NotParameterized: return "NotParameterized";
    case ErrorKind::ZeroEpsilonComparison: return "ZeroEpsilonComparison";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::SkippedHypothesisFailed: return "SkippedHypothesisFailed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::JacobiViolation: return "JacobiViolation";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
  }
  return "Unknown";
}

Field Field::prime(std::uint32_t p) {
  if (p < 3)
    throw Error(ErrorKind::InvalidField, "characteristic must be an odd prime, got " + std::to_string(p));
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) throw Error(ErrorKind::InvalidField, std::to_string(p) + " is not prime");
  return Field(p);
}

void Field::reduce_mod(mpq_class& x) const {
  mpz_class m(p_);
  mpz_class n = x.get_num() % m;
  if (n < 0) n += m;
  x = n;
}

mpq_class Field::from_rational(const mpq_class& q) const {
  if (p_ == 0) return q;
  mpz_class m(p_);
  mpz_class den = q.get_den() % m;
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "denominator vanishes in " + name());
  mpz_class inv_den;
  mpz_invert(inv_den.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
  mpq_class r(mpz_class(q.get_num() * inv_den));
  reduce_mod(r);
  return r;
}

mpq_class Field::inv(const mpq_class& a) const {
  if (sgn(a) == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (p_ == 0) return 1 / a;
  mpz_class m(p_), r;
  mpz_class num = a.get_num();
  mpz_invert(r.get_mpz_t(), num.get_mpz_t(), m.get_mpz_t());
  return mpq_class(r);
}

bool Field::is_square(const mpq_class& a) const {
  if (sgn(a) == 0) return true;
  if (p_ == 0) {
    if (sgn(a) < 0) return false;
    return mpz_perfect_square_p(a.get_num_mpz_t()) && mpz_perfect_square_p(a.get_den_mpz_t());
  }
  mpz_class m(p_);
  mpz_class num = a.get_num();
  return mpz_legendre(num.get_mpz_t(), m.get_mpz_t()) == 1;
}

mpq_class Field::parse(std::string_view text) const {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty coefficient");
  mpq_class q;
  auto dot = s.find('.');
  try {
    if (dot == std::string::npos) {
      if (s.front() == '+') s.erase(0, 1);
      if (q.set_str(s, 10) != 0) throw Error(ErrorKind::ParseError, "bad coefficient '" + s + "'");
      if (q.get_den() == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + s + "'");
      q.canonicalize();
    } else {
      bool negative = s.front() == '-';
      std::string body = (s.front() == '-' || s.front() == '+') ? s.substr(1) : s;
      dot = body.find('.');
      std::string digits = body.substr(0, dot) + body.substr(dot + 1);
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw Error(ErrorKind::ParseError, "bad decimal '" + s + "'");
      mpz_class num(digits, 10);
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, body.size() - dot - 1);
      q = mpq_class(num, den);
      q.canonicalize();
      if (negative) q = -q;
    }
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::ParseError, "bad coefficient '" + s + "'");
  }
  return from_rational(q);
}

std::string Field::format(const mpq_class& a) const {
  mpq_class c = a;
  c.canonicalize();
  reduce(c);
  return c.get_str(10);
}

std::string Field::name() const { return p_ == 0 ? "Q" : "GF(" + std::to_string(p_) + ")"; }

}  // namespace liecap
