#include "tenscat/scalar.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace tenscat {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31))
    throw std::invalid_argument("prime field needs a prime below 2^31, got " + std::to_string(p));
  return {FieldKind::prime, p};
}

FieldSpec FieldSpec::cyclotomic(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic field order must be positive");
  return {FieldKind::cyclotomic, n};
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "q" || text == "Q" || text == "rationals") return rationals();
  auto number_after = [&](std::size_t pos) -> std::uint32_t {
    std::size_t used = 0;
    const std::string tail = text.substr(pos);
    unsigned long v = 0;
    try {
      v = std::stoul(tail, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tail.size()) throw std::invalid_argument("malformed field '" + text + "'");
    return static_cast<std::uint32_t>(v);
  };
  if (text.rfind("fp:", 0) == 0) return prime(number_after(3));
  if (text.rfind("cyc:", 0) == 0) return cyclotomic(number_after(4));
  throw std::invalid_argument("unknown field '" + text + "' (expected q, fp:P or cyc:N)");
}

std::string FieldSpec::to_string() const {
  switch (kind) {
    case FieldKind::rationals: return "q";
    case FieldKind::prime: return "fp:" + std::to_string(param);
    case FieldKind::cyclotomic: return "cyc:" + std::to_string(param);
  }
  return "?";
}

int FieldSpec::degree() const {
  if (kind != FieldKind::cyclotomic) return 1;
  return static_cast<int>(cyclotomic_polynomial(param).size()) - 1;
}

namespace {

using Poly = std::vector<long>;

// Exact division of monic integer polynomials.
Poly divide_exact(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  Poly quo(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const long c = num[k];
    quo[k - dn] = c;
    for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
  }
  return quo;
}

// Caller holds the cache lock.
const Poly& cyclotomic_locked(std::uint32_t n, std::map<std::uint32_t, Poly>& cache) {
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d)
    if (n % d == 0) p = divide_exact(p, cyclotomic_locked(d, cache));
  return cache.emplace(n, std::move(p)).first->second;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(std::uint32_t n) {
  static std::mutex mu;
  static std::map<std::uint32_t, Poly> cache;
  if (n == 0) throw std::invalid_argument("cyclotomic polynomial of order 0");
  std::lock_guard<std::mutex> lock(mu);
  return cyclotomic_locked(n, cache);
}

namespace {

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t mpz_mod_u(const mpz_class& a, std::uint64_t p) {
  mpz_class r = a % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

std::uint64_t rational_to_residue(const mpq_class& q, std::uint64_t p) {
  const std::uint64_t num = mpz_mod_u(q.get_num(), p);
  const std::uint64_t den = mpz_mod_u(q.get_den(), p);
  if (den == 0) throw std::domain_error("rational " + q.get_str() + " has no image in F_" + std::to_string(p));
  return num * mod_pow(den, p - 2, p) % p;
}

void reduce_cyclotomic(std::vector<mpq_class>& c, std::uint32_t n) {
  const Poly& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = c.size(); k-- > deg;) {
    if (c[k] == 0) continue;
    const mpq_class t = c[k];
    for (std::size_t i = 0; i <= deg; ++i)
      if (phi[i] != 0) c[k - deg + i] -= t * phi[i];
  }
  c.resize(deg);
}

}  // namespace

Scalar Scalar::from_rational(const mpq_class& v, const FieldSpec& field) {
  Scalar s;
  s.field_ = field;
  s.typed_ = true;
  switch (field.kind) {
    case FieldKind::rationals:
      s.q_ = v;
      break;
    case FieldKind::prime:
      s.q_ = 0;
      s.r_ = rational_to_residue(v, field.param);
      break;
    case FieldKind::cyclotomic:
      s.q_ = 0;
      s.c_.assign(static_cast<std::size_t>(field.degree()), mpq_class(0));
      s.c_[0] = v;
      break;
  }
  return s;
}

Scalar Scalar::from_cyclotomic(std::uint32_t n, std::vector<mpq_class> coeffs) {
  Scalar s;
  s.field_ = FieldSpec::cyclotomic(n);
  s.typed_ = true;
  const auto deg = static_cast<std::size_t>(s.field_.degree());
  if (coeffs.size() < deg) coeffs.resize(deg, mpq_class(0));
  reduce_cyclotomic(coeffs, n);
  s.c_ = std::move(coeffs);
  return s;
}

Scalar Scalar::zeta_power(std::uint32_t n, long k) {
  long e = k % static_cast<long>(n);
  if (e < 0) e += n;
  std::vector<mpq_class> c(static_cast<std::size_t>(std::max<long>(e + 1, FieldSpec::cyclotomic(n).degree())),
                           mpq_class(0));
  c[static_cast<std::size_t>(e)] = 1;
  return from_cyclotomic(n, std::move(c));
}

Scalar Scalar::in_field(const FieldSpec& field) const {
  if (typed_) {
    if (!(field_ == field))
      throw FieldMismatch("scalar in " + field_.to_string() + " used where " + field.to_string() + " expected");
    return *this;
  }
  return from_rational(q_, field);
}

bool Scalar::is_zero() const {
  if (!typed_) return q_ == 0;
  switch (field_.kind) {
    case FieldKind::rationals: return q_ == 0;
    case FieldKind::prime: return r_ == 0;
    case FieldKind::cyclotomic:
      for (const auto& c : c_)
        if (c != 0) return false;
      return true;
  }
  return false;
}

bool Scalar::is_one() const {
  if (!typed_) return q_ == 1;
  switch (field_.kind) {
    case FieldKind::rationals: return q_ == 1;
    case FieldKind::prime: return r_ == 1;
    case FieldKind::cyclotomic:
      if (c_[0] != 1) return false;
      for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
      return true;
  }
  return false;
}

mpq_class Scalar::rational_value() const {
  if (!typed_ || field_.kind == FieldKind::rationals) return q_;
  if (field_.kind == FieldKind::cyclotomic) {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) throw std::domain_error("cyclotomic scalar is not rational");
    return c_[0];
  }
  throw std::domain_error("prime-field scalar has no rational value");
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar s = *this;
  if (!typed_ || field_.kind == FieldKind::rationals) {
    s.q_ = 1 / q_;
    return s;
  }
  if (field_.kind == FieldKind::prime) {
    s.r_ = mod_pow(r_, field_.param - 2, field_.param);
    return s;
  }
  // Solve a * b = 1 via the multiplication-by-a matrix on the power basis.
  const std::size_t deg = c_.size();
  std::vector<std::vector<mpq_class>> m(deg, std::vector<mpq_class>(deg + 1, mpq_class(0)));
  for (std::size_t j = 0; j < deg; ++j) {
    std::vector<mpq_class> col(deg + j, mpq_class(0));
    for (std::size_t i = 0; i < deg; ++i) col[i + j] = c_[i];
    reduce_cyclotomic(col, field_.param);
    for (std::size_t i = 0; i < deg; ++i) m[i][j] = col[i];
  }
  m[0][deg] = 1;
  for (std::size_t col = 0; col < deg; ++col) {
    std::size_t piv = col;
    while (m[piv][col] == 0) ++piv;
    std::swap(m[piv], m[col]);
    const mpq_class inv = 1 / m[col][col];
    for (auto& v : m[col]) v *= inv;
    for (std::size_t r = 0; r < deg; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const mpq_class f = m[r][col];
      for (std::size_t k = col; k <= deg; ++k) m[r][k] -= f * m[col][k];
    }
  }
  for (std::size_t i = 0; i < deg; ++i) s.c_[i] = m[i][deg];
  return s;
}

void Scalar::require_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw FieldMismatch("cannot combine scalars from " + field_.to_string() + " and " + o.field_.to_string());
}

template <class Op>
Scalar& Scalar::combine(const Scalar& o, Op op) {
  if (!typed_ && !o.typed_) {
    op(*this, o);
  } else if (typed_ && o.typed_) {
    require_same_field(o);
    op(*this, o);
  } else if (!typed_) {
    *this = in_field(o.field_);
    op(*this, o);
  } else {
    op(*this, o.in_field(field_));
  }
  return *this;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  return combine(o, [](Scalar& a, const Scalar& b) {
    if (!a.typed_) {
      a.q_ += b.q_;
      return;
    }
    switch (a.field_.kind) {
      case FieldKind::rationals: a.q_ += b.q_; break;
      case FieldKind::prime: a.r_ = (a.r_ + b.r_) % a.field_.param; break;
      case FieldKind::cyclotomic:
        for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
        break;
    }
  });
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (!typed_ || field_.kind == FieldKind::rationals) {
    s.q_ = -q_;
  } else if (field_.kind == FieldKind::prime) {
    s.r_ = r_ == 0 ? 0 : field_.param - r_;
  } else {
    for (auto& c : s.c_) c = -c;
  }
  return s;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  return combine(o, [](Scalar& a, const Scalar& b) {
    if (!a.typed_) {
      a.q_ *= b.q_;
      return;
    }
    switch (a.field_.kind) {
      case FieldKind::rationals: a.q_ *= b.q_; break;
      case FieldKind::prime: a.r_ = a.r_ * b.r_ % a.field_.param; break;
      case FieldKind::cyclotomic: {
        const std::size_t deg = a.c_.size();
        std::vector<mpq_class> prod(2 * deg - 1, mpq_class(0));
        for (std::size_t i = 0; i < deg; ++i) {
          if (a.c_[i] == 0) continue;
          for (std::size_t j = 0; j < deg; ++j)
            if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
        }
        reduce_cyclotomic(prod, a.field_.param);
        a.c_ = std::move(prod);
        break;
      }
    }
  });
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!a.typed_ && !b.typed_) return a.q_ == b.q_;
  if (a.typed_ && b.typed_) {
    if (!(a.field_ == b.field_)) return false;
    switch (a.field_.kind) {
      case FieldKind::rationals: return a.q_ == b.q_;
      case FieldKind::prime: return a.r_ == b.r_;
      case FieldKind::cyclotomic: return a.c_ == b.c_;
    }
  }
  return (a - b).is_zero();
}

std::string Scalar::to_string() const {
  if (!typed_ || field_.kind == FieldKind::rationals) return q_.get_str();
  if (field_.kind == FieldKind::prime) return std::to_string(r_) + " mod " + std::to_string(field_.param);
  std::string s = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ", ";
    s += c_[i].get_str();
  }
  return s + "]";
}

namespace {

mpq_class parse_rational(std::string t) {
  auto trim = [](std::string& x) {
    while (!x.empty() && std::isspace(static_cast<unsigned char>(x.back()))) x.pop_back();
    std::size_t i = 0;
    while (i < x.size() && std::isspace(static_cast<unsigned char>(x[i]))) ++i;
    x.erase(0, i);
  };
  trim(t);
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  mpq_class q;
  if (t.empty() || q.set_str(t, 10) != 0) throw std::invalid_argument("malformed rational '" + t + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + t + "'");
  q.canonicalize();
  return q;
}

}  // namespace

Scalar Scalar::parse(const std::string& text, const FieldSpec& field) {
  if (field.kind == FieldKind::prime) {
    const auto pos = text.find(" mod ");
    if (pos != std::string::npos) {
      const mpq_class k = parse_rational(text.substr(0, pos));
      const mpq_class p = parse_rational(text.substr(pos + 5));
      if (p != field.param) throw FieldMismatch("residue '" + text + "' is not in " + field.to_string());
      return from_rational(k, field);
    }
    return from_rational(parse_rational(text), field);
  }
  if (field.kind == FieldKind::cyclotomic && !text.empty() && text.front() == '[') {
    if (text.back() != ']') throw std::invalid_argument("malformed cyclotomic scalar '" + text + "'");
    std::vector<mpq_class> coeffs;
    std::stringstream ss(text.substr(1, text.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) coeffs.push_back(parse_rational(item));
    if (coeffs.size() > static_cast<std::size_t>(field.degree()))
      throw std::invalid_argument("cyclotomic scalar '" + text + "' has more coefficients than deg Phi_n");
    return from_cyclotomic(field.param, std::move(coeffs));
  }
  return from_rational(parse_rational(text), field);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar cyclotomic_primitive_root(std::uint32_t n) { return Scalar::zeta_power(n, 1); }

std::uint32_t multiplicative_order(const Scalar& s, std::uint32_t bound) {
  if (s.is_zero()) return 0;
  Scalar p = s;
  for (std::uint32_t k = 1; k <= bound; ++k) {
    if (p.is_one()) return k;
    p *= s;
  }
  return 0;
}

bool primitive_root_of_unity(std::uint32_t n, const FieldSpec& field, Scalar& out) {
  if (n == 0) return false;
  switch (field.kind) {
    case FieldKind::rationals:
      if (n > 2) return false;
      out = Scalar::from_int(n == 1 ? 1 : -1, field);
      return true;
    case FieldKind::prime: {
      const std::uint64_t p = field.param;
      if (n == 1) {
        out = Scalar::one(field);
        return true;
      }
      if ((p - 1) % n) return false;
      for (std::uint64_t g = 2; g < p; ++g) {
        const Scalar h = Scalar::from_int(static_cast<long>(mod_pow(g, (p - 1) / n, p)), field);
        if (multiplicative_order(h, n) == n) {
          out = h;
          return true;
        }
      }
      return false;
    }
    case FieldKind::cyclotomic: {
      const std::uint32_t m = field.param;
      const std::uint32_t roots = (m % 2) ? 2 * m : m;  // roots of unity in Q(zeta_m)
      if (roots % n) return false;
      Scalar base = Scalar::zeta_power(m, 1);
      if (m % 2) base = -base;  // -zeta_m has order 2m
      Scalar r = Scalar::one(field);
      for (std::uint32_t i = 0; i < roots / n; ++i) r *= base;
      out = r;
      return true;
    }
  }
  return false;
}

}  // namespace tenscat
