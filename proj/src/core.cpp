#include "drprim/core.hpp"

#include <sstream>

namespace drprim {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::NonCommuting: return "NonCommuting";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::NotComposable: return "NotComposable";
    case ErrorCode::LatticeMismatch: return "LatticeMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::BoundTooSmall: return "BoundTooSmall";
    case ErrorCode::NotSeparable: return "NotSeparable";
    case ErrorCode::MixedQuasiOrbits: return "MixedQuasiOrbits";
    case ErrorCode::SupportNotInLattice: return "SupportNotInLattice";
    case ErrorCode::SourceMismatch: return "SourceMismatch";
    case ErrorCode::BatteryFailure: return "BatteryFailure";
    case ErrorCode::VerificationFailure: return "VerificationFailure";
    case ErrorCode::SourcelessVertex: return "SourcelessVertex";
    case ErrorCode::DuplicateQuasiOrbit: return "DuplicateQuasiOrbit";
  }
  return "Unknown";
}

std::string to_string(const ZVector& v) {
  std::ostringstream out;
  out << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v(i);
  }
  out << ')';
  return out.str();
}

Rational frac(const Rational& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  BigInt r = num % den;
  if (r < 0) r += den;
  return Rational(r, den);
}

std::string rational_to_string(const Rational& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  auto bad = [&] { return Error(ErrorCode::Parse, "not a rational: '" + text + "'"); };
  if (text.empty()) throw bad();
  auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    if (s.empty()) throw bad();
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw bad();
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw bad();
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw bad();
  return Rational(num, den);
}

}  // namespace drprim
