// SPDX-License-Identifier: Apache-2.0
#include "aoa/finite_field.hpp"

#include <sstream>

#include "aoa/error.hpp"
#include "aoa/numeric.hpp"
#include "aoa/polynomial.hpp"

namespace aoa {

namespace {

constexpr std::uint32_t kMaxFieldOrder = 1u << 16;
constexpr std::uint32_t kMaxAddTable = 256;

std::vector<std::uint32_t> to_digits(std::uint32_t a, std::uint32_t p, unsigned m) {
  std::vector<std::uint32_t> d(m);
  for (unsigned i = 0; i < m; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

std::uint32_t from_digits(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  std::uint32_t a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
  return a;
}

// Schoolbook product reduced by the monic modulus; only used to build tables.
std::uint32_t slow_mul(const FieldSpec& s, std::uint32_t a, std::uint32_t b) {
  if (s.m == 1) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % s.p);
  auto da = to_digits(a, s.p, s.m);
  auto db = to_digits(b, s.p, s.m);
  std::vector<std::uint64_t> prod(2 * s.m - 1, 0);
  for (unsigned i = 0; i < s.m; ++i)
    for (unsigned j = 0; j < s.m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % s.p;
  for (std::size_t deg = prod.size(); deg-- > s.m;) {
    auto c = prod[deg];
    if (c == 0) continue;
    // x^deg = x^(deg-m) * x^m and x^m = -(modulus low part)
    for (unsigned i = 0; i < s.m; ++i) {
      auto sub = (c * s.modulus[i]) % s.p;
      auto& slot = prod[deg - s.m + i];
      slot = (slot + s.p - sub) % s.p;
    }
    prod[deg] = 0;
  }
  std::vector<std::uint32_t> r(s.m);
  for (unsigned i = 0; i < s.m; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
  return from_digits(r, s.p);
}

std::uint32_t digit_add(const FieldSpec& s, std::uint32_t a, std::uint32_t b, bool subtract) {
  std::uint32_t r = 0, scale = 1;
  for (unsigned i = 0; i < s.m; ++i) {
    auto x = a % s.p, y = b % s.p;
    a /= s.p;
    b /= s.p;
    auto d = subtract ? (x + s.p - y) % s.p : (x + y) % s.p;
    r += d * scale;
    scale *= s.p;
  }
  return r;
}

}  // namespace

namespace detail {

struct FieldTables {
  FieldSpec spec;
  std::uint32_t q = 0;
  Element generator = 1;
  std::vector<Element> exp;           // length 2(q-1)
  std::vector<std::uint32_t> log;     // log[0] unused
  std::vector<Element> add_table;     // q*q when q <= kMaxAddTable
  std::vector<Element> neg_table;

  Element add(Element a, Element b) const {
    if (spec.p == 2) return a ^ b;
    if (spec.m == 1) {
      auto s = a + b;
      return s >= q ? s - q : s;
    }
    if (!add_table.empty()) return add_table[std::size_t{a} * q + b];
    return digit_add(spec, a, b, false);
  }
};

}  // namespace detail

std::uint32_t FieldSpec::order() const { return static_cast<std::uint32_t>(ipow(p, m)); }

std::string to_string(const FieldSpec& spec) {
  std::ostringstream os;
  os << "GF(" << spec.order() << ")";
  if (spec.m > 1) {
    os << " mod [";
    for (std::size_t i = 0; i < spec.modulus.size(); ++i) os << (i ? "," : "") << spec.modulus[i];
    os << "]";
  }
  return os.str();
}

namespace {

std::shared_ptr<const detail::FieldTables> build_tables(FieldSpec spec) {
  auto t = std::make_shared<detail::FieldTables>();
  t->spec = std::move(spec);
  const auto& s = t->spec;
  const std::uint32_t q = s.order();
  t->q = q;

  t->neg_table.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    if (s.p == 2) t->neg_table[a] = a;
    else if (s.m == 1) t->neg_table[a] = a == 0 ? 0 : q - a;
    else t->neg_table[a] = digit_add(s, 0, a, true);
  }
  if (s.p != 2 && s.m > 1 && q <= kMaxAddTable) {
    t->add_table.resize(std::size_t{q} * q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) t->add_table[std::size_t{a} * q + b] = digit_add(s, a, b, false);
  }

  // Smallest-index element of order q-1: g^((q-1)/r) != 1 for each prime r | q-1.
  const std::uint32_t n = q - 1;
  auto primes = factorize(n);
  auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t r = 1, b = a;
    while (e) {
      if (e & 1) r = slow_mul(s, r, b);
      b = slow_mul(s, b, b);
      e >>= 1;
    }
    return r;
  };
  Element g = 1;
  if (n > 1) {
    for (g = 2; g < q; ++g) {
      bool ok = true;
      for (auto [r, e] : primes) {
        (void)e;
        if (slow_pow(g, n / r) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) break;
    }
    require(g < q, Errc::BadModulus, "modulus is not irreducible: no primitive element for " + to_string(s));
  }
  t->generator = g;

  t->exp.resize(2 * std::size_t{n});
  t->log.assign(q, 0);
  Element x = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    t->exp[i] = x;
    t->log[x] = i;
    x = slow_mul(s, x, g);
  }
  require(x == 1, Errc::BadModulus, "generator order mismatch in " + to_string(s));
  for (std::uint32_t i = n; i < 2 * n; ++i) t->exp[i] = t->exp[i - n];
  return t;
}

}  // namespace

Field Field::create(std::uint32_t p, unsigned m) {
  require(m >= 1, Errc::DegreeZero, "extension degree must be >= 1");
  require(is_prime(p), Errc::NotPrime, std::to_string(p) + " is not prime");
  auto q = checked_pow(p, m, kMaxFieldOrder);
  require(q.has_value(), Errc::ParameterViolation, "field order exceeds 2^16");
  if (m == 1) return Field(build_tables(FieldSpec{p, 1, {}}));
  auto prime = create(p, 1);
  auto h = find_irreducible(prime, m);
  return Field(build_tables(FieldSpec{p, m, h.coeffs()}));
}

Field Field::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  require(is_prime(p), Errc::NotPrime, std::to_string(p) + " is not prime");
  require(modulus.size() >= 2, Errc::DegreeZero, "modulus must have degree >= 1");
  const unsigned m = static_cast<unsigned>(modulus.size() - 1);
  if (m == 1) return create(p, 1);
  require(modulus.back() == 1, Errc::BadModulus, "modulus must be monic");
  for (auto c : modulus) require(c < p, Errc::BadModulus, "modulus coefficient out of range");
  auto q = checked_pow(p, m, kMaxFieldOrder);
  require(q.has_value(), Errc::ParameterViolation, "field order exceeds 2^16");
  auto prime = create(p, 1);
  Polynomial h(std::vector<Element>(modulus.begin(), modulus.end()));
  require(is_irreducible(prime, h), Errc::BadModulus, "modulus is reducible over GF(p)");
  return Field(build_tables(FieldSpec{p, m, std::move(modulus)}));
}

Field Field::from_spec(const FieldSpec& spec) {
  require(spec.m >= 1, Errc::DegreeZero, "extension degree must be >= 1");
  if (spec.m == 1) return create(spec.p, 1);
  require(spec.modulus.size() == spec.m + 1, Errc::BadModulus, "modulus length must be m+1");
  return with_modulus(spec.p, spec.modulus);
}

Field Field::of_order(std::uint64_t q) {
  auto pp = prime_power(q);
  require(pp.has_value(), Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
  return create(static_cast<std::uint32_t>(pp->p), pp->m);
}

const FieldSpec& Field::spec() const noexcept { return t_->spec; }
std::uint32_t Field::p() const noexcept { return t_->spec.p; }
unsigned Field::m() const noexcept { return t_->spec.m; }
std::uint32_t Field::q() const noexcept { return t_->q; }

void Field::check(Element a) const {
  require(a < q(), Errc::EncodingOutOfRange,
          "element " + std::to_string(a) + " outside GF(" + std::to_string(q()) + ")");
}

Element Field::add(Element a, Element b) const { return t_->add(a, b); }
Element Field::neg(Element a) const { return t_->neg_table[a]; }
Element Field::sub(Element a, Element b) const { return t_->add(a, t_->neg_table[b]); }

Element Field::mul(Element a, Element b) const {
  if (a == 0 || b == 0) return 0;
  return t_->exp[std::size_t{t_->log[a]} + t_->log[b]];
}

Element Field::inv(Element a) const {
  require(a != 0, Errc::DivisionByZero, "inverse of zero");
  const std::uint32_t n = q() - 1;
  return t_->exp[(n - t_->log[a]) % n];
}

Element Field::div(Element a, Element b) const { return mul(a, inv(b)); }

Element Field::pow(Element a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t n = q() - 1;
  return t_->exp[(std::uint64_t{t_->log[a]} * (e % n)) % n];
}

Element Field::from_int(std::int64_t n) const noexcept {
  std::int64_t p = t_->spec.p;
  return static_cast<Element>(((n % p) + p) % p);
}

Element Field::primitive() const noexcept { return t_->generator; }

std::uint64_t Field::order_of(Element a) const {
  require(a != 0, Errc::DivisionByZero, "zero has no multiplicative order");
  const std::uint64_t n = q() - 1;
  const std::uint64_t l = t_->log[a];
  return n / gcd(n, l == 0 ? n : l);
}

bool Field::operator==(const Field& other) const noexcept {
  return t_ == other.t_ || t_->spec == other.t_->spec;
}

Element find_primitive(const Field& field) {
  const std::uint64_t n = field.q() - 1;
  for (Element a = 1; a < field.q(); ++a)
    if (field.order_of(a) == n) return a;
  fail(Errc::NoSuchElement, "no primitive element");
}

Element special_alpha_char2(const Field& field) {
  require(field.p() == 2 && field.q() >= 4, Errc::NoSuchElement,
          "requires characteristic 2 and q >= 4");
  std::vector<bool> hit(field.q(), false);
  for (Element a = 1; a < field.q(); ++a) hit[field.add(a, field.inv(a))] = true;
  for (Element alpha = 1; alpha < field.q(); ++alpha) {
    if (hit[alpha]) continue;
    Polynomial h({1, alpha, 1});
    require(is_irreducible(field, h), Errc::NoSuchElement, "x^2+ax+1 unexpectedly reducible");
    return alpha;
  }
  fail(Errc::NoSuchElement, "every nonzero element has the form a + 1/a");
}

}  // namespace aoa
