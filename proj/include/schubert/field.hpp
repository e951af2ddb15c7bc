#pragma once

// Ground fields: arbitrary-precision rationals and prime fields F_p.
//
// A field is described by a small descriptor object (RationalField,
// PrimeField) that knows how to produce constants, parse and print values,
// and draw random elements. Element types carry ordinary arithmetic
// operators so that the linear algebra can be written once as templates.

#include <concepts>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace schubert {

class parse_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Element of Z/pZ. Carries its modulus so that values are self-describing;
// mixing moduli is a programming error and throws.
class Fp {
 public:
  Fp() = default;
  Fp(std::uint64_t value, std::uint32_t p) : v_(static_cast<std::uint32_t>(value % p)), p_(p) {}

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  friend Fp operator+(Fp a, Fp b) {
    check(a, b);
    std::uint64_t s = std::uint64_t{a.v_} + b.v_;
    return {s >= a.p_ ? s - a.p_ : s, a.p_};
  }
  friend Fp operator-(Fp a, Fp b) {
    check(a, b);
    return {a.v_ >= b.v_ ? a.v_ - b.v_ : std::uint64_t{a.v_} + a.p_ - b.v_, a.p_};
  }
  friend Fp operator*(Fp a, Fp b) {
    check(a, b);
    return {std::uint64_t{a.v_} * b.v_, a.p_};
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const { return {v_ == 0 ? 0 : p_ - v_, p_}; }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_ && a.p_ == b.p_; }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("Fp: division by zero");
    // Fermat: v^(p-2).
    std::uint64_t result = 1, base = v_, e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return {result, p_};
  }

 private:
  static void check(Fp a, Fp b) {
    if (a.p_ != b.p_) throw std::logic_error("Fp: mismatched moduli");
  }
  std::uint32_t v_ = 0;
  std::uint32_t p_ = 2;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

namespace detail {

// Splits "a/b" into numerator and denominator text; "a" yields denominator "1".
inline std::pair<std::string_view, std::string_view> split_fraction(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return {s, "1"};
  return {s.substr(0, slash), s.substr(slash + 1)};
}

inline bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace detail

struct RationalField {
  using value_type = mpq_class;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t n) const { return mpq_class(static_cast<signed long>(n)); }
  static bool is_zero(const value_type& x) { return sgn(x) == 0; }

  value_type parse(std::string_view s) const {
    auto [num, den] = detail::split_fraction(s);
    if (!detail::is_integer_text(num) || !detail::is_integer_text(den))
      throw parse_error("not a rational number: '" + std::string(s) + "'");
    std::string n(num), d(den);
    if (n[0] == '+') n.erase(0, 1);
    if (d[0] == '+') d.erase(0, 1);
    mpz_class zn(n), zd(d);
    if (zd == 0) throw parse_error("zero denominator: '" + std::string(s) + "'");
    mpq_class q(zn, zd);
    q.canonicalize();
    return q;
  }
  std::string to_string(const value_type& x) const { return x.get_str(); }
  std::string name() const { return "Q"; }
  bool operator==(const RationalField&) const = default;

  // Small integers keep coordinates readable and rational growth modest.
  template <class Rng>
  value_type random(Rng& rng) const {
    return from_int(static_cast<std::int64_t>(rng() % 19) - 9);
  }
};

struct PrimeField {
  using value_type = Fp;

  explicit PrimeField(std::uint32_t prime = 1009) : p(prime) {
    if (!is_prime(prime) || prime > (1u << 31))
      throw std::invalid_argument("PrimeField: modulus " + std::to_string(prime) + " is not a prime below 2^31");
  }

  std::uint32_t p;

  value_type zero() const { return {0, p}; }
  value_type one() const { return {1, p}; }
  value_type from_int(std::int64_t n) const {
    std::int64_t m = n % static_cast<std::int64_t>(p);
    if (m < 0) m += p;
    return {static_cast<std::uint64_t>(m), p};
  }
  static bool is_zero(const value_type& x) { return x.is_zero(); }

  value_type parse(std::string_view s) const {
    auto [num, den] = detail::split_fraction(s);
    if (!detail::is_integer_text(num) || !detail::is_integer_text(den))
      throw parse_error("not an integer or fraction: '" + std::string(s) + "'");
    auto reduce = [this](std::string_view t) {
      std::string str(t);
      if (str[0] == '+') str.erase(0, 1);
      mpz_class z(str);
      mpz_class m = z % p;
      if (m < 0) m += p;
      return value_type{m.get_ui(), p};
    };
    value_type d = reduce(den);
    if (d.is_zero()) throw parse_error("denominator vanishes mod p: '" + std::string(s) + "'");
    return reduce(num) / d;
  }
  std::string to_string(const value_type& x) const { return std::to_string(x.value()); }
  std::string name() const { return "Fp " + std::to_string(p); }
  bool operator==(const PrimeField&) const = default;

  template <class Rng>
  value_type random(Rng& rng) const {
    return {rng() % p, p};
  }
};

template <class F>
concept Field = requires(const F& f, const typename F::value_type& x, std::mt19937_64& rng) {
  { f.zero() } -> std::convertible_to<typename F::value_type>;
  { f.one() } -> std::convertible_to<typename F::value_type>;
  { F::is_zero(x) } -> std::convertible_to<bool>;
  { f.to_string(x) } -> std::convertible_to<std::string>;
  { f.random(rng) } -> std::convertible_to<typename F::value_type>;
};

}  // namespace schubert
