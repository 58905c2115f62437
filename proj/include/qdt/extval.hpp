#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qdt {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Signed rational with 64-bit parts.  Intermediates are 128-bit and every
// result is reduced; a result that does not fit throws std::overflow_error
// rather than wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);
  // Caller guarantees den > 0 and gcd(num, den) = 1.
  static Rational from_coprime(std::int64_t num, std::int64_t den) {
    Rational r;
    r.num_ = num;
    r.den_ = den;
    return r;
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string str() const;
  static Rational parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// A value of [0, inf]: a nonnegative reduced rational or infinity.
class ExtVal {
 public:
  constexpr ExtVal() = default;
  ExtVal(const Rational& q);  // throws std::domain_error when q < 0
  ExtVal(std::int64_t n) : ExtVal(Rational(n)) {}

  static constexpr ExtVal infinity() {
    ExtVal v;
    v.inf_ = true;
    return v;
  }
  static ExtVal ratio(std::int64_t num, std::int64_t den) { return ExtVal(Rational(num, den)); }

  bool is_inf() const { return inf_; }
  bool is_finite() const { return !inf_; }
  bool is_zero() const { return !inf_ && q_.is_zero(); }
  // Only meaningful for finite values.
  const Rational& value() const { return q_; }

  friend bool operator==(const ExtVal& a, const ExtVal& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.q_ == b.q_);
  }
  friend std::strong_ordering operator<=>(const ExtVal& a, const ExtVal& b);

  std::string str() const;
  static ExtVal parse(std::string_view text);

 private:
  bool inf_ = false;
  Rational q_;
};

inline constexpr ExtVal kZero{};
inline constexpr ExtVal kInf = ExtVal::infinity();

ExtVal add(const ExtVal& a, const ExtVal& b);
inline ExtVal operator+(const ExtVal& a, const ExtVal& b) { return add(a, b); }
// (a - b)_+ with finite - inf = 0, inf - finite = inf, inf - inf = 0.
ExtVal tminus(const ExtVal& a, const ExtVal& b);
// n * a with 0 * inf = 0.
ExtVal scale(std::uint64_t n, const ExtVal& a);
ExtVal inf_set(std::span<const ExtVal> s);  // inf {} = inf
ExtVal sup_set(std::span<const ExtVal> s);  // sup {} = 0
inline ExtVal min(const ExtVal& a, const ExtVal& b) { return b < a ? b : a; }
inline ExtVal max(const ExtVal& a, const ExtVal& b) { return a < b ? b : a; }

// A value of [-inf, inf], produced only by untruncated subtraction of two
// ExtVals (inf - inf = 0, finite - inf = -inf, inf - finite = +inf).
class SignedExt {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  constexpr SignedExt() = default;
  SignedExt(const Rational& q) : q_(q) {}
  static SignedExt neg_inf() { return SignedExt(Kind::NegInf); }
  static SignedExt pos_inf() { return SignedExt(Kind::PosInf); }
  static SignedExt diff(const ExtVal& a, const ExtVal& b);

  Kind kind() const { return kind_; }
  const Rational& value() const { return q_; }
  // max(this, 0) as an ExtVal.
  ExtVal positive_part() const;

  friend bool operator==(const SignedExt& a, const SignedExt& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.q_ == b.q_);
  }
  friend std::strong_ordering operator<=>(const SignedExt& a, const SignedExt& b);

  std::string str() const;

 private:
  explicit SignedExt(Kind k) : kind_(k) {}
  Kind kind_ = Kind::Finite;
  Rational q_;
};

}  // namespace qdt
