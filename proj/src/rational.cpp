#include "linkdraw/rational.hpp"

#include "linkdraw/error.hpp"

#include <cctype>

namespace linkdraw {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::DegenerateActor: return "DegenerateActor";
    case ErrorCode::NotRotation: return "NotRotation";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::HasRealRoot: return "HasRealRoot";
    case ErrorCode::IrreducibleFactorNotQuadraticOverRationals:
      return "IrreducibleFactorNotQuadraticOverRationals";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::NoRationalZeroInDirection: return "NoRationalZeroInDirection";
    case ErrorCode::NotRepresentable: return "NotRepresentable";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::InvalidCurve: return "InvalidCurve";
    case ErrorCode::NotMotionPolynomial: return "NotMotionPolynomial";
    case ErrorCode::NonInvertibleRemainderLead: return "NonInvertibleRemainderLead";
    case ErrorCode::NotGeneric: return "NotGeneric";
    case ErrorCode::NotTame: return "NotTame";
    case ErrorCode::ZeroPickExhausted: return "ZeroPickExhausted";
    case ErrorCode::FlipUndefined: return "FlipUndefined";
    case ErrorCode::InvalidDegreeParity: return "InvalidDegreeParity";
    case ErrorCode::UserM0Invalid: return "UserM0Invalid";
    case ErrorCode::ModeUnsupported: return "ModeUnsupported";
    case ErrorCode::Mismatch: return "Mismatch";
    case ErrorCode::ClosureViolation: return "ClosureViolation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IOError: return "IOError";
  }
  return "Unknown";
}

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::NotInvertible, "division by zero rational");
  v_ /= o.v_;
  return *this;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorCode::ParseError, "invalid rational '" + std::string(text) + "'");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  mpz_class d{std::string(den)};
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(mpz_class(n), d);
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational inverse(const Rational& r) { return Rational(1) / r; }

bool exact_sqrt(const Rational& r, Rational& out) {
  if (r.sign() < 0) return false;
  mpz_class n = r.num(), d = r.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  out = Rational(sn, sd);
  return true;
}

Rational dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 operator*(const Rational& s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }

bool is_zero(const Vec3& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

std::string str(const Vec3& v) {
  return "(" + v[0].str() + ", " + v[1].str() + ", " + v[2].str() + ")";
}

}  // namespace linkdraw
