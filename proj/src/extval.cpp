#include "qdt/extval.hpp"

#include <charconv>
#include <limits>

namespace qdt {

namespace {

__extension__ typedef __int128 i128;

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

Rational make_reduced(i128 num, i128 den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  if (!fits64(num) || !fits64(den)) throw std::overflow_error("rational overflow");
  return Rational::from_coprime(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

std::int64_t parse_int(std::string_view t, std::string_view whole) {
  if (t.empty()) throw ParseError("malformed number '" + std::string(whole) + "'");
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size())
    throw ParseError("malformed number '" + std::string(whole) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  i128 n = num, d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n == 0) d = 1;
  if (!fits64(n) || !fits64(d)) throw std::overflow_error("rational overflow");
  num_ = static_cast<std::int64_t>(n);
  den_ = static_cast<std::int64_t>(d);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return make_reduced(i128(a.num_) + b.num_, a.den_);
  return make_reduced(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return make_reduced(i128(a.num_) - b.num_, a.den_);
  return make_reduced(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return make_reduced(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("division by zero");
  return make_reduced(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
}

Rational Rational::operator-() const { return make_reduced(-i128(num_), den_); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  i128 l = i128(a.num_) * b.den_, r = i128(b.num_) * a.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  std::string_view t = trim(text);
  auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(t, text));
  std::int64_t n = parse_int(trim(t.substr(0, slash)), text);
  std::int64_t d = parse_int(trim(t.substr(slash + 1)), text);
  if (d <= 0) throw ParseError("nonpositive denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

ExtVal::ExtVal(const Rational& q) : q_(q) {
  if (q.is_negative()) throw std::domain_error("negative distance value " + q.str());
}

std::strong_ordering operator<=>(const ExtVal& a, const ExtVal& b) {
  if (a.inf_ || b.inf_) return int(a.inf_) <=> int(b.inf_);
  return a.q_ <=> b.q_;
}

std::string ExtVal::str() const { return inf_ ? "inf" : q_.str(); }

ExtVal ExtVal::parse(std::string_view text) {
  std::string_view t = trim(text);
  if (t == "inf") return infinity();
  Rational q = Rational::parse(t);
  if (q.is_negative()) throw ParseError("negative distance value '" + std::string(text) + "'");
  return ExtVal(q);
}

ExtVal add(const ExtVal& a, const ExtVal& b) {
  if (a.is_inf() || b.is_inf()) return kInf;
  return ExtVal(a.value() + b.value());
}

ExtVal tminus(const ExtVal& a, const ExtVal& b) {
  if (b.is_inf()) return kZero;
  if (a.is_inf()) return kInf;
  if (a.value() <= b.value()) return kZero;
  return ExtVal(a.value() - b.value());
}

ExtVal scale(std::uint64_t n, const ExtVal& a) {
  if (n == 0) return kZero;
  if (a.is_inf()) return kInf;
  if (n > std::uint64_t(std::numeric_limits<std::int64_t>::max())) throw std::overflow_error("scale factor too large");
  return ExtVal(a.value() * Rational(static_cast<std::int64_t>(n)));
}

ExtVal inf_set(std::span<const ExtVal> s) {
  ExtVal m = kInf;
  for (const auto& v : s) m = min(m, v);
  return m;
}

ExtVal sup_set(std::span<const ExtVal> s) {
  ExtVal m = kZero;
  for (const auto& v : s) m = max(m, v);
  return m;
}

SignedExt SignedExt::diff(const ExtVal& a, const ExtVal& b) {
  if (a.is_inf() && b.is_inf()) return SignedExt();
  if (b.is_inf()) return neg_inf();
  if (a.is_inf()) return pos_inf();
  return SignedExt(a.value() - b.value());
}

ExtVal SignedExt::positive_part() const {
  switch (kind_) {
    case Kind::NegInf: return kZero;
    case Kind::PosInf: return kInf;
    case Kind::Finite: return q_.is_negative() ? kZero : ExtVal(q_);
  }
  return kZero;
}

std::strong_ordering operator<=>(const SignedExt& a, const SignedExt& b) {
  if (a.kind_ != b.kind_) return int(a.kind_) <=> int(b.kind_);
  if (a.kind_ == SignedExt::Kind::Finite) return a.q_ <=> b.q_;
  return std::strong_ordering::equal;
}

std::string SignedExt::str() const {
  switch (kind_) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "inf";
    case Kind::Finite: return q_.str();
  }
  return "";
}

}  // namespace qdt
