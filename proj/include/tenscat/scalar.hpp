#pragma once

// Exact scalars over Q, F_p and cyclotomic fields Q(zeta_n).
//
// A Scalar carries the field it lives in. Values produced by integer
// conversion (Scalar(0), Scalar(1), ...) are "untyped" constants: they adopt
// the field of whatever typed value they meet, which lets Eigen build
// Zero()/Identity() matrices without knowing the field. Two typed values from
// different fields never combine; doing so throws FieldMismatch.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace tenscat {

class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class FieldKind : std::uint8_t { rationals, prime, cyclotomic };

struct FieldSpec {
  FieldKind kind = FieldKind::rationals;
  std::uint32_t param = 0;  // p for prime fields, n for Q(zeta_n)

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint32_t p);
  static FieldSpec cyclotomic(std::uint32_t n);

  /// Parses "q", "fp:P" or "cyc:N".
  static FieldSpec parse(const std::string& text);
  std::string to_string() const;

  std::uint32_t characteristic() const { return kind == FieldKind::prime ? param : 0; }
  /// Dimension over the prime field (deg Phi_n for cyclotomic fields).
  int degree() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

/// Coefficients (low degree first) of the n-th cyclotomic polynomial.
const std::vector<long>& cyclotomic_polynomial(std::uint32_t n);

class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : q_(v) {}  // NOLINT: implicit on purpose, Eigen needs it
  Scalar(long v) : q_(v) {}  // NOLINT

  static Scalar from_rational(const mpq_class& v, const FieldSpec& field);
  static Scalar untyped(const mpq_class& v) {
    Scalar s;
    s.q_ = v;
    return s;
  }
  static Scalar from_int(long v, const FieldSpec& field) { return from_rational(mpq_class(v), field); }
  static Scalar zero(const FieldSpec& field) { return from_int(0, field); }
  static Scalar one(const FieldSpec& field) { return from_int(1, field); }
  /// zeta_n^k in Q(zeta_n).
  static Scalar zeta_power(std::uint32_t n, long k);
  /// Element of Q(zeta_n) from coefficients in the power basis 1, zeta, zeta^2, ...
  static Scalar from_cyclotomic(std::uint32_t n, std::vector<mpq_class> coeffs);

  /// Serialized forms: "p/q", "k mod p", or "[c0, c1, ...]" for cyclotomic.
  static Scalar parse(const std::string& text, const FieldSpec& field);
  std::string to_string() const;

  bool typed() const { return typed_; }
  const FieldSpec& field() const { return field_; }
  /// Re-expresses an untyped constant in `field`; typed values must already match.
  Scalar in_field(const FieldSpec& field) const;

  bool is_zero() const;
  bool is_one() const;
  Scalar inverse() const;

  /// Rational value; throws unless the scalar lies in the prime subfield of a
  /// characteristic-zero field.
  mpq_class rational_value() const;
  std::uint64_t residue() const { return r_; }
  const std::vector<mpq_class>& cyclotomic_coefficients() const { return c_; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  void require_same_field(const Scalar& o) const;
  template <class Op>
  Scalar& combine(const Scalar& o, Op op);

  FieldSpec field_{};
  bool typed_ = false;
  mpq_class q_{0};               // rationals and untyped constants
  std::uint64_t r_ = 0;          // residue for F_p
  std::vector<mpq_class> c_;     // power-basis coefficients for Q(zeta_n)
};

/// A primitive n-th root of unity in Q(zeta_n).
Scalar cyclotomic_primitive_root(std::uint32_t n);

/// A primitive n-th root of unity in `field`, if one exists.
bool primitive_root_of_unity(std::uint32_t n, const FieldSpec& field, Scalar& out);

/// Multiplicative order of a nonzero scalar, or 0 if it exceeds `bound`.
std::uint32_t multiplicative_order(const Scalar& s, std::uint32_t bound);

}  // namespace tenscat

namespace Eigen {
template <>
struct NumTraits<tenscat::Scalar> : GenericNumTraits<tenscat::Scalar> {
  using Real = tenscat::Scalar;
  using NonInteger = tenscat::Scalar;
  using Nested = tenscat::Scalar;
  using Literal = tenscat::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 16,
    MulCost = 32
  };
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
