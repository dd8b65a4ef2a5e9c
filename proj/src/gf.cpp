#include "subcodes/gf.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace subcodes {

namespace {

// Built-in monic irreducible polynomials (Conway polynomials), little-endian.
const std::map<std::pair<int, int>, std::vector<int>>& builtin_polys() {
  static const std::map<std::pair<int, int>, std::vector<int>> table = {
      {{2, 2}, {1, 1, 1}},           // x^2 + x + 1
      {{2, 3}, {1, 1, 0, 1}},        // x^3 + x + 1
      {{2, 4}, {1, 1, 0, 0, 1}},     // x^4 + x + 1
      {{2, 5}, {1, 0, 1, 0, 0, 1}},  // x^5 + x^2 + 1
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{3, 2}, {2, 2, 1}},  // x^2 + 2x + 2
      {{3, 3}, {1, 2, 0, 1}},
      {{5, 2}, {2, 4, 1}},
      {{7, 2}, {3, 6, 1}},
  };
  return table;
}

int mod_p(long long v, int p) {
  long long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

// Polynomial arithmetic over F_p on little-endian coefficient vectors,
// used for construction-time checks only.
std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
  std::vector<int> out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] = mod_p(out[i + j] + 1LL * a[i] * b[j], p);
  return out;
}

std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& mod, int p) {
  const int dm = static_cast<int>(mod.size()) - 1;
  // mod is monic
  for (int d = static_cast<int>(a.size()) - 1; d >= dm; --d) {
    int c = a[d];
    if (c == 0) continue;
    for (int i = 0; i <= dm; ++i) a[d - dm + i] = mod_p(a[d - dm + i] - 1LL * c * mod[i], p);
  }
  a.resize(dm);
  return a;
}

bool poly_is_zero(const std::vector<int>& a) {
  return std::all_of(a.begin(), a.end(), [](int c) { return c == 0; });
}

// Exhaustive trial division by monic polynomials of degree 1..deg/2.
bool poly_irreducible(const std::vector<int>& poly, int p) {
  const int deg = static_cast<int>(poly.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    // enumerate monic divisors of degree d
    std::vector<int> div(d + 1, 0);
    div[d] = 1;
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long c = 0; c < count; ++c) {
      long long t = c;
      for (int i = 0; i < d; ++i) {
        div[i] = static_cast<int>(t % p);
        t /= p;
      }
      if (poly_is_zero(poly_mod(poly, div, p))) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::shared_ptr<const Field::Impl> Field::make_impl(int p, int m,
                                                    std::optional<std::vector<int>> poly) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw InvalidArgument("extension degree must be >= 1");

  long long q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > (1 << 20)) throw InvalidArgument("field order too large");
  }

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->m = m;
  impl->q = static_cast<int>(q);

  if (m == 1) {
    impl->poly = {0, 1};  // unused
  } else if (poly) {
    impl->poly = std::move(*poly);
    if (static_cast<int>(impl->poly.size()) != m + 1 || impl->poly[m] != 1)
      throw InvalidArgument("reduction polynomial must be monic of degree m");
    for (int c : impl->poly)
      if (c < 0 || c >= p) throw InvalidArgument("reduction polynomial coefficient out of range");
    if (!poly_irreducible(impl->poly, p))
      throw InvalidArgument("reduction polynomial is reducible over F_" + std::to_string(p));
  } else {
    auto it = builtin_polys().find({p, m});
    if (it == builtin_polys().end())
      throw InvalidArgument("no built-in polynomial for GF(" + std::to_string(p) + "^" +
                            std::to_string(m) + "); supply one explicitly");
    impl->poly = it->second;
  }

  if (impl->q <= kTableLimit) {
    Field f(std::shared_ptr<const Impl>(impl, impl.get()));  // non-owning view for mul_slow
    impl->mul_table.assign(static_cast<size_t>(impl->q) * impl->q, 0);
    for (int a = 0; a < impl->q; ++a)
      for (int b = 0; b <= a; ++b) {
        int v = f.mul_slow(a, b);
        impl->mul_table[static_cast<size_t>(a) * impl->q + b] = static_cast<int16_t>(v);
        impl->mul_table[static_cast<size_t>(b) * impl->q + a] = static_cast<int16_t>(v);
      }
    impl->inv_table.assign(impl->q, 0);
    for (int a = 1; a < impl->q; ++a) {
      for (int b = 1; b < impl->q; ++b)
        if (impl->mul_table[static_cast<size_t>(a) * impl->q + b] == 1) {
          impl->inv_table[a] = static_cast<int16_t>(b);
          break;
        }
      if (impl->inv_table[a] == 0)
        throw Error("internal: no inverse found; reduction polynomial not irreducible?");
    }
  }
  return impl;
}

Field::Field(int p, int m) : impl_(make_impl(p, m, std::nullopt)) {}
Field::Field(int p, int m, std::vector<int> poly) : impl_(make_impl(p, m, std::move(poly))) {}

Field Field::parse(std::string_view descriptor) {
  auto caret = descriptor.find('^');
  auto slash = descriptor.find('/');
  std::string_view p_part = descriptor.substr(0, std::min(caret, slash));
  int p = 0, m = 1;
  auto parse_int = [](std::string_view s, int& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
  };
  if (!parse_int(p_part, p)) throw InvalidArgument("bad field descriptor: " + std::string(descriptor));
  if (caret != std::string_view::npos) {
    std::string_view m_part = descriptor.substr(caret + 1, slash == std::string_view::npos
                                                               ? std::string_view::npos
                                                               : slash - caret - 1);
    if (!parse_int(m_part, m)) throw InvalidArgument("bad field descriptor: " + std::string(descriptor));
  }
  if (slash == std::string_view::npos) return Field(p, m);

  std::vector<int> poly;
  std::string_view rest = descriptor.substr(slash + 1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    int c = 0;
    if (!parse_int(rest.substr(0, comma), c))
      throw InvalidArgument("bad polynomial in field descriptor: " + std::string(descriptor));
    poly.push_back(c);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return Field(p, m, std::move(poly));
}

std::string Field::descriptor() const {
  std::string out = std::to_string(p()) + "^" + std::to_string(m());
  return out;
}

int Field::add(int a, int b) const {
  const auto& im = *impl_;
  if (im.m == 1) return (a + b) % im.p;
  int out = 0, w = 1;
  for (int i = 0; i < im.m; ++i) {
    out += ((a % im.p) + (b % im.p)) % im.p * w;
    a /= im.p;
    b /= im.p;
    w *= im.p;
  }
  return out;
}

int Field::neg(int a) const {
  const auto& im = *impl_;
  if (im.m == 1) return (im.p - a) % im.p;
  int out = 0, w = 1;
  for (int i = 0; i < im.m; ++i) {
    out += (im.p - a % im.p) % im.p * w;
    a /= im.p;
    w *= im.p;
  }
  return out;
}

int Field::sub(int a, int b) const { return add(a, neg(b)); }

int Field::mul_slow(int a, int b) const {
  const auto& im = *impl_;
  if (im.m == 1) return static_cast<int>((1LL * a * b) % im.p);
  std::vector<int> va = to_vector(a), vb = to_vector(b);
  auto prod = poly_mod(poly_mul(va, vb, im.p), im.poly, im.p);
  return from_vector(prod);
}

int Field::mul(int a, int b) const {
  const auto& im = *impl_;
  if (im.m == 1) return static_cast<int>((1LL * a * b) % im.p);
  if (!im.mul_table.empty()) return im.mul_table[static_cast<size_t>(a) * im.q + b];
  return mul_slow(a, b);
}

int Field::inv(int a) const {
  const auto& im = *impl_;
  if (a == 0) throw InvalidArgument("zero has no multiplicative inverse");
  if (!im.inv_table.empty()) return im.inv_table[a];
  return pow(a, im.q - 2);
}

int Field::pow(int a, long long e) const {
  const auto& im = *impl_;
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  long long r = e % (im.q - 1);
  if (r == 0 && e != 0) r = im.q - 1;
  int out = 1, base = a;
  while (r > 0) {
    if (r & 1) out = mul(out, base);
    base = mul(base, base);
    r >>= 1;
  }
  return out;
}

std::vector<int> Field::to_vector(int a) const {
  const auto& im = *impl_;
  if (a < 0 || a >= im.q) throw InvalidArgument("element index out of range");
  std::vector<int> v(im.m);
  for (int i = 0; i < im.m; ++i) {
    v[i] = a % im.p;
    a /= im.p;
  }
  return v;
}

int Field::from_vector(std::span<const int> v) const {
  const auto& im = *impl_;
  if (static_cast<int>(v.size()) != im.m)
    throw InvalidArgument("coefficient vector has wrong length");
  int out = 0, w = 1;
  for (int i = 0; i < im.m; ++i) {
    if (v[i] < 0 || v[i] >= im.p) throw InvalidArgument("coefficient out of range [0, p)");
    out += v[i] * w;
    w *= im.p;
  }
  return out;
}

FieldElement Field::element(int index) const {
  if (index < 0 || index >= impl_->q) throw InvalidArgument("element index out of range");
  return FieldElement(*this, index);
}
FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }

bool Field::operator==(const Field& other) const {
  if (impl_ == other.impl_) return true;
  return impl_->p == other.impl_->p && impl_->m == other.impl_->m && impl_->poly == other.impl_->poly;
}

FieldElement::FieldElement(Field field, int index) : field_(std::move(field)), index_(index) {
  if (index_ < 0 || index_ >= field_.order()) throw InvalidArgument("element index out of range");
}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (field_ != o.field_) throw InvalidArgument("mixed-field operands");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same_field(o);
  return FieldElement(field_, field_.add(index_, o.index_));
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same_field(o);
  return FieldElement(field_, field_.sub(index_, o.index_));
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same_field(o);
  return FieldElement(field_, field_.mul(index_, o.index_));
}
FieldElement FieldElement::operator-() const { return FieldElement(field_, field_.neg(index_)); }
FieldElement FieldElement::inverse() const { return FieldElement(field_, field_.inv(index_)); }

bool FieldElement::operator==(const FieldElement& o) const {
  return field_ == o.field_ && index_ == o.index_;
}

}  // namespace subcodes
