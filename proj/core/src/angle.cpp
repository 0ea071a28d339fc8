#include "gaussq/angle.hpp"

#include <charconv>
#include <cmath>
#include <numeric>

#include "gaussq/error.hpp"

namespace gaussq {
namespace {

constexpr long double kPiL = 3.141592653589793238462643383279502884L;

// Rounds a long double in [0, 2pi] to a double strictly below 2pi.
double wrap_to_double(long double value) {
  long double wrapped = std::fmod(value, 2.0L * kPiL);
  if (wrapped < 0.0L) wrapped += 2.0L * kPiL;
  double out = static_cast<double>(wrapped);
  if (out >= kTwoPi) out = std::nextafter(kTwoPi, 0.0);
  if (out < 0.0) out = 0.0;
  return out;
}

PiFraction wrap_fraction(PiFraction f) {
  const std::int64_t period = 2 * f.den;
  std::int64_t num = f.num % period;
  if (num < 0) num += period;
  return {num, f.den};
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

[[noreturn]] void fail(std::string_view text, std::string_view token,
                       std::string_view why) {
  throw ParseError("malformed angle \"" + std::string(text) + "\": " +
                   std::string(why) + " at token \"" + std::string(token) +
                   "\"");
}

std::int64_t parse_positive_int(std::string_view text, std::string_view token) {
  if (token.empty()) fail(text, token, "expected a positive integer");
  for (char c : token) {
    if (!is_digit(c)) fail(text, token, "expected a positive integer");
  }
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    fail(text, token, "integer out of range");
  }
  if (value <= 0) fail(text, token, "expected a positive integer");
  return value;
}

bool looks_decimal(std::string_view token) {
  // [+-]? digits [. digits]? ([eE][+-]?digits)?  with at least one digit
  std::size_t i = 0;
  if (i < token.size() && (token[i] == '+' || token[i] == '-')) ++i;
  std::size_t digits = 0;
  while (i < token.size() && is_digit(token[i])) ++i, ++digits;
  if (i < token.size() && token[i] == '.') {
    ++i;
    while (i < token.size() && is_digit(token[i])) ++i, ++digits;
  }
  if (digits == 0) return false;
  if (i < token.size() && (token[i] == 'e' || token[i] == 'E')) {
    ++i;
    if (i < token.size() && (token[i] == '+' || token[i] == '-')) ++i;
    std::size_t exp_digits = 0;
    while (i < token.size() && is_digit(token[i])) ++i, ++exp_digits;
    if (exp_digits == 0) return false;
  }
  return i == token.size();
}

double parse_decimal(std::string_view text, std::string_view token) {
  if (!looks_decimal(token)) fail(text, token, "expected decimal radians");
  std::string_view digits = token;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || !std::isfinite(value)) {
    fail(text, token, "decimal out of range");
  }
  return value;
}

}  // namespace

PiFraction reduce(std::int64_t num, std::int64_t den) {
  if (den == 0) throw PreconditionError("pi fraction with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

Angle Angle::from_radians(double radians) {
  if (!std::isfinite(radians)) throw PreconditionError("angle must be finite");
  Angle out;
  out.origin_ = Origin::kDecimal;
  out.value_ = wrap_to_double(static_cast<long double>(radians));
  return out;
}

Angle Angle::from_pi_fraction(std::int64_t num, std::int64_t den) {
  Angle out;
  out.origin_ = Origin::kPiFraction;
  out.fraction_ = wrap_fraction(reduce(num, den));
  out.value_ = wrap_to_double(static_cast<long double>(out.fraction_.num) * kPiL /
                              static_cast<long double>(out.fraction_.den));
  return out;
}

std::optional<PiFraction> Angle::pi_fraction() const {
  if (origin_ != Origin::kPiFraction) return std::nullopt;
  return fraction_;
}

std::optional<std::pair<int, int>> Angle::lattice_direction() const {
  static constexpr std::pair<int, int> kOctants[8] = {
      {1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
  if (origin_ == Origin::kPiFraction) {
    // num/den * pi = k * pi/4  <=>  4 * num divisible by den
    if ((4 * fraction_.num) % fraction_.den != 0) return std::nullopt;
    return kOctants[(4 * fraction_.num) / fraction_.den];
  }
  if (value_ == 0.0) return kOctants[0];
  return std::nullopt;
}

long double Angle::cos_intent() const {
  if (auto dir = lattice_direction()) {
    return dir->first == 0 ? 0.0L : dir->first * (dir->second == 0 ? 1.0L : std::sqrt(0.5L));
  }
  if (origin_ == Origin::kPiFraction) {
    return std::cos(static_cast<long double>(fraction_.num) * kPiL /
                    static_cast<long double>(fraction_.den));
  }
  return std::cos(static_cast<long double>(value_));
}

long double Angle::sin_intent() const {
  if (auto dir = lattice_direction()) {
    return dir->second == 0 ? 0.0L : dir->second * (dir->first == 0 ? 1.0L : std::sqrt(0.5L));
  }
  if (origin_ == Origin::kPiFraction) {
    return std::sin(static_cast<long double>(fraction_.num) * kPiL /
                    static_cast<long double>(fraction_.den));
  }
  return std::sin(static_cast<long double>(value_));
}

std::string Angle::to_string() const {
  if (origin_ == Origin::kPiFraction) {
    const auto [num, den] = fraction_;
    if (num == 0) return "0";
    std::string out = num == 1 ? std::string{} : std::to_string(num);
    out += "pi";
    if (den != 1) out += "/" + std::to_string(den);
    return out;
  }
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value_);
  return std::string(buf, ptr);
}

Angle operator+(const Angle& lhs, const Angle& rhs) {
  if (lhs.origin_ == Angle::Origin::kPiFraction && rhs.origin_ == Angle::Origin::kPiFraction) {
    const __int128 num = static_cast<__int128>(lhs.fraction_.num) * rhs.fraction_.den +
                         static_cast<__int128>(rhs.fraction_.num) * lhs.fraction_.den;
    const __int128 den = static_cast<__int128>(lhs.fraction_.den) * rhs.fraction_.den;
    __int128 a = num < 0 ? -num : num;
    __int128 b = den;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    const __int128 rn = num / a;
    const __int128 rd = den / a;
    constexpr __int128 kMax = INT64_MAX / 4;
    if (rd <= kMax && rn <= kMax && rn >= -kMax) {
      return Angle::from_pi_fraction(static_cast<std::int64_t>(rn), static_cast<std::int64_t>(rd));
    }
  }
  return Angle::from_radians(static_cast<double>(static_cast<long double>(lhs.value_) +
                                                 static_cast<long double>(rhs.value_)));
}

AngleLiteral parse_angle_literal(std::string_view text) {
  if (text.empty()) fail(text, text, "empty angle");
  const std::size_t pi_pos = text.find("pi");
  if (pi_pos == std::string_view::npos) {
    const double value = parse_decimal(text, text);
    return {Angle::from_radians(value), static_cast<long double>(value), std::nullopt};
  }

  std::int64_t k = 1;
  if (pi_pos > 0) k = parse_positive_int(text, text.substr(0, pi_pos));

  std::string_view rest = text.substr(pi_pos + 2);
  std::int64_t n = 1;
  if (!rest.empty() && rest.front() == '/') {
    std::size_t end = 1;
    while (end < rest.size() && is_digit(rest[end])) ++end;
    n = parse_positive_int(text, rest.substr(1, end - 1));
    rest.remove_prefix(end);
  }
  if (4 * static_cast<__int128>(k) > INT64_MAX || 4 * static_cast<__int128>(n) > INT64_MAX) {
    fail(text, text, "integer out of range");
  }

  const PiFraction exact = reduce(k, n);
  const long double unwrapped =
      static_cast<long double>(exact.num) * kPiL / static_cast<long double>(exact.den);
  if (rest.empty()) {
    return {Angle::from_pi_fraction(exact.num, exact.den), unwrapped, exact};
  }
  if (rest.front() != '+' && rest.front() != '-') {
    fail(text, rest, "unexpected trailing characters");
  }
  const std::string_view offset_token = rest;
  if (offset_token.size() < 2 || (offset_token[1] == '+' || offset_token[1] == '-')) {
    fail(text, offset_token, "expected decimal offset");
  }
  const double offset = parse_decimal(text, offset_token);
  const long double total = unwrapped + static_cast<long double>(offset);
  return {Angle::from_radians(static_cast<double>(total)), total, std::nullopt};
}

Angle parse_angle(std::string_view text) { return parse_angle_literal(text).angle; }

}  // namespace gaussq
