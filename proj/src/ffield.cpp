#include "ggk/ffield.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "ggk/linalg.hpp"
#include "ggk/numtheory.hpp"

namespace ggk {

namespace {

// Dense polynomials over F_p, constant term first, no trailing zeros.
using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = powmod(f.back(), p - 2, p);
  while (a.size() > df) {
    const std::uint64_t c = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = (a[shift + i] + p - mulmod(c, f[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), f, p);
  while (e != 0) {
    if (e & 1U) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1U;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or: f of degree k is irreducible iff gcd(x^(p^i) - x, f) = 1 for i <= k/2.
bool is_irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t k = f.size() - 1;
  if (k == 1) return true;
  if (f[0] == 0) return false;
  Poly h{0, 1};
  for (std::size_t i = 1; i <= k / 2; ++i) {
    h = poly_powmod(h, p, f, p);
    Poly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (poly_gcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint64_t p, unsigned k) {
  // Lex order with c0 most significant: counter digits read most significant first.
  // For k >= 2 a zero constant term means a factor x, so the search starts at c0 = 1.
  if (k == 1) return {0, 1};
  std::vector<std::uint64_t> counter(k, 0);
  counter[0] = 1;
  while (true) {
    Poly f(counter.begin(), counter.end());
    f.push_back(1);
    if (is_irreducible(f, p)) return {f.begin(), f.end()};
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++counter[pos] < p) break;
      counter[pos] = 0;
      if (pos == 0) throw std::logic_error("no irreducible polynomial found");
    }
  }
}

std::uint64_t clmul_reduce(std::uint64_t a, std::uint64_t b, unsigned k, std::uint64_t low_bits) {
  u128 prod = 0;
  for (unsigned i = 0; i < k; ++i) {
    if ((b >> i) & 1U) prod ^= static_cast<u128>(a) << i;
  }
  for (int i = 2 * static_cast<int>(k) - 2; i >= static_cast<int>(k); --i) {
    if ((prod >> i) & 1U) {
      prod ^= static_cast<u128>(1) << i;
      prod ^= static_cast<u128>(low_bits) << (i - static_cast<int>(k));
    }
  }
  return static_cast<std::uint64_t>(prod);
}

}  // namespace

// ---------------------------------------------------------------- Field

const Field& Field::get(std::uint64_t p, unsigned k) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint64_t, unsigned>, std::unique_ptr<Field>> registry;
  if (!is_prime(p)) throw std::invalid_argument("field: characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw std::invalid_argument("field: degree must be positive");
  if (p >= (std::uint64_t{1} << 32)) throw std::invalid_argument("field: characteristic exceeds 2^32");
  const auto order = checked_pow(p, k);
  if (!order || *order == UINT64_MAX) throw std::invalid_argument("field: order exceeds 2^64");
  std::lock_guard lock(mutex);
  auto& slot = registry[{p, k}];
  if (!slot) slot.reset(new Field(p, k));
  return *slot;
}

Field::Field(std::uint64_t p, unsigned k)
    : p_(p), k_(k), order_(*checked_pow(p, k)), modulus_(smallest_irreducible(p, k)) {
  if (p_ == 2) {
    for (unsigned i = 0; i < k_; ++i) modulus_bits_ |= static_cast<std::uint64_t>(modulus_[i]) << i;
  }
  unit_factors_ = order_ > 2 ? factorize(order_ - 1) : std::vector<std::pair<std::uint64_t, unsigned>>{};

  const std::uint64_t units = order_ - 1;
  for (std::uint64_t rank = 1; rank < order_; ++rank) {
    const std::uint64_t candidate = code_at_lex_rank(rank);
    bool primitive = true;
    for (auto [prime, exp] : unit_factors_) {
      if (pow_poly(candidate, units / prime) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      primitive_ = candidate;
      break;
    }
  }

  if (order_ <= kTableLimit) {
    exp_.resize(units);
    log_.assign(order_, 0);
    std::uint64_t x = 1;
    for (std::uint64_t i = 0; i < units; ++i) {
      exp_[i] = static_cast<std::uint32_t>(x);
      log_[x] = static_cast<std::uint32_t>(i);
      x = mul_poly(x, primitive_);
    }
    tables_ = true;
  }
}

FieldElement Field::element(std::uint64_t code) const {
  if (code >= order_) throw std::out_of_range("field element code out of range");
  return {*this, code};
}

FieldElement Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > k_) throw std::invalid_argument("too many coefficients for field degree");
  std::vector<std::uint32_t> reduced(coeffs.begin(), coeffs.end());
  for (auto& c : reduced) c = static_cast<std::uint32_t>(c % p_);
  return {*this, encode(reduced)};
}

FieldElement Field::scalar(std::int64_t value) const {
  const auto pp = static_cast<std::int64_t>(p_);
  return {*this, static_cast<std::uint64_t>(((value % pp) + pp) % pp)};
}

FieldElement Field::generator() const {
  if (k_ == 1) {
    // x reduces to -modulus[0] in the prime field
    return {*this, (p_ - modulus_[0]) % p_};
  }
  return {*this, p_};
}

std::vector<FieldElement> Field::all_elements() const {
  if (order_ > kTableLimit) throw std::length_error("field too large to enumerate");
  std::vector<FieldElement> out;
  out.reserve(order_);
  for (std::uint64_t c = 0; c < order_; ++c) out.emplace_back(*this, c);
  return out;
}

std::string Field::descriptor() const {
  std::ostringstream os;
  os << p_ << '^' << k_ << ':';
  for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
  return os.str();
}

std::vector<std::uint32_t> Field::digits(std::uint64_t code) const {
  std::vector<std::uint32_t> d(k_, 0);
  if (p_ == 2) {
    for (unsigned i = 0; i < k_; ++i) d[i] = (code >> i) & 1U;
  } else {
    for (unsigned i = 0; i < k_ && code != 0; ++i) {
      d[i] = static_cast<std::uint32_t>(code % p_);
      code /= p_;
    }
  }
  return d;
}

std::uint64_t Field::encode(std::span<const std::uint32_t> digits) const {
  std::uint64_t code = 0;
  for (std::size_t i = digits.size(); i-- > 0;) code = code * p_ + digits[i];
  return code;
}

std::uint64_t Field::lex_rank(std::uint64_t code) const {
  std::uint64_t rank = 0;
  for (std::uint32_t d : digits(code)) rank = rank * p_ + d;
  return rank;
}

std::uint64_t Field::code_at_lex_rank(std::uint64_t rank) const {
  std::vector<std::uint32_t> d(k_, 0);
  for (unsigned i = k_; i-- > 0;) {
    d[i] = static_cast<std::uint32_t>(rank % p_);
    rank /= p_;
  }
  return encode(d);
}

std::uint64_t Field::add(std::uint64_t a, std::uint64_t b) const {
  if (p_ == 2) return a ^ b;
  std::uint64_t result = 0;
  std::uint64_t place = 1;
  while (a != 0 || b != 0) {
    const std::uint64_t s = (a % p_ + b % p_) % p_;
    result += s * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return result;
}

std::uint64_t Field::neg(std::uint64_t a) const {
  if (p_ == 2) return a;
  std::uint64_t result = 0;
  std::uint64_t place = 1;
  while (a != 0) {
    const std::uint64_t d = a % p_;
    result += ((p_ - d) % p_) * place;
    a /= p_;
    place *= p_;
  }
  return result;
}

std::uint64_t Field::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t Field::mul(std::uint64_t a, std::uint64_t b) const {
  if (a == 0 || b == 0) return 0;
  if (tables_) {
    const std::uint64_t units = order_ - 1;
    std::uint64_t e = static_cast<std::uint64_t>(log_[a]) + log_[b];
    if (e >= units) e -= units;
    return exp_[e];
  }
  return mul_poly(a, b);
}

std::uint64_t Field::mul_poly(std::uint64_t a, std::uint64_t b) const {
  if (a == 0 || b == 0) return 0;
  if (k_ == 1) return mulmod(a, b, p_);
  if (p_ == 2) return clmul_reduce(a, b, k_, modulus_bits_);
  const auto da = digits(a);
  const auto db = digits(b);
  std::vector<std::uint64_t> r(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) r[i + j] = (r[i + j] + mulmod(da[i], db[j], p_)) % p_;
  }
  for (unsigned i = 2 * k_ - 2; i >= k_; --i) {
    const std::uint64_t c = r[i];
    if (c == 0) continue;
    r[i] = 0;
    for (unsigned j = 0; j < k_; ++j) r[i - k_ + j] = (r[i - k_ + j] + mulmod(p_ - c, modulus_[j], p_)) % p_;
  }
  std::vector<std::uint32_t> out(k_);
  for (unsigned i = 0; i < k_; ++i) out[i] = static_cast<std::uint32_t>(r[i]);
  return encode(out);
}

std::uint64_t Field::pow_poly(std::uint64_t a, std::uint64_t exponent) const {
  std::uint64_t result = 1;
  while (exponent != 0) {
    if (exponent & 1U) result = mul_poly(result, a);
    a = mul_poly(a, a);
    exponent >>= 1U;
  }
  return result;
}

std::uint64_t Field::pow(std::uint64_t a, std::uint64_t exponent) const {
  if (exponent == 0) return 1;
  if (a == 0) return 0;
  if (tables_) {
    const std::uint64_t units = order_ - 1;
    return exp_[mulmod(log_[a], exponent % units, units)];
  }
  return pow_poly(a, exponent);
}

std::uint64_t Field::inv(std::uint64_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (tables_) return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
  return pow_poly(a, order_ - 2);
}

const Field& field_create(std::uint64_t p, unsigned k) { return Field::get(p, k); }

// ---------------------------------------------------------------- FieldElement

FieldElement::FieldElement(const Field& field, std::uint64_t code) : field_(&field), code_(code) {}

const Field& FieldElement::field() const {
  if (field_ == nullptr) throw std::logic_error("use of a default-constructed field element");
  return *field_;
}

std::vector<std::uint32_t> FieldElement::coeffs() const { return field().digits(code_); }

bool FieldElement::is_one() const { return code_ == 1; }

namespace {
const Field& common_field(const FieldElement& a, const FieldElement& b) {
  if (&a.field() != &b.field()) throw std::invalid_argument("field mismatch");
  return a.field();
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  const Field& f = common_field(*this, rhs);
  return {f, f.add(code_, rhs.code_)};
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  const Field& f = common_field(*this, rhs);
  return {f, f.sub(code_, rhs.code_)};
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  const Field& f = common_field(*this, rhs);
  return {f, f.mul(code_, rhs.code_)};
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
  const Field& f = common_field(*this, rhs);
  return {f, f.mul(code_, f.inv(rhs.code_))};
}

FieldElement FieldElement::operator-() const { return {field(), field().neg(code_)}; }

FieldElement FieldElement::pow(std::uint64_t exponent) const { return {field(), field().pow(code_, exponent)}; }

FieldElement FieldElement::inverse() const { return {field(), field().inv(code_)}; }

FieldElement FieldElement::frobenius(unsigned times) const {
  FieldElement x = *this;
  const std::uint64_t p = field().characteristic();
  for (unsigned i = 0; i < times; ++i) x = x.pow(p);
  return x;
}

std::string FieldElement::to_string() const {
  std::ostringstream os;
  os << '(';
  const auto c = coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ')';
  return os.str();
}

bool lex_less(const FieldElement& lhs, const FieldElement& rhs) {
  const Field& f = common_field(lhs, rhs);
  return f.lex_rank(lhs.code()) < f.lex_rank(rhs.code());
}

// ---------------------------------------------------------------- free functions

std::uint64_t element_order(const FieldElement& e) {
  if (e.is_zero()) throw std::domain_error("element_order: zero has no multiplicative order");
  const Field& f = e.field();
  std::uint64_t order = f.order() - 1;
  for (auto [prime, exp] : f.unit_group_factors()) {
    for (unsigned i = 0; i < exp; ++i) {
      if (e.pow(order / prime).is_one()) {
        order /= prime;
      } else {
        break;
      }
    }
  }
  return order;
}

FieldElement cyclic_subgroup_generator(const Field& field, std::uint64_t t) {
  const std::uint64_t units = field.order() - 1;
  if (t == 0 || units % t != 0) {
    throw std::invalid_argument("cyclic_subgroup_generator: " + std::to_string(t) + " does not divide " +
                                std::to_string(units));
  }
  return field.primitive_root().pow(units / t);
}

unsigned element_degree(const FieldElement& e) {
  const unsigned k = e.field().degree();
  const std::uint64_t p = e.field().characteristic();
  FieldElement x = e;
  for (unsigned d = 1; d <= k; ++d) {
    x = x.pow(p);
    if (x == e && k % d == 0) return d;
  }
  return k;
}

unsigned generated_subfield(std::span<const FieldElement> elements, const Field& ambient) {
  std::uint64_t degree = 1;
  for (const auto& e : elements) {
    if (&e.field() != &ambient) throw std::invalid_argument("generated_subfield: field mismatch");
    degree = lcm(degree, element_degree(e));
  }
  return static_cast<unsigned>(degree);
}

SubfieldEmbedding make_embedding(const Field& source, const Field& target) {
  if (source.characteristic() != target.characteristic() || target.degree() % source.degree() != 0) {
    throw std::invalid_argument("make_embedding: " + source.descriptor() + " does not embed in " +
                                target.descriptor());
  }
  const Subfield copy(target, source.degree());
  const auto& mod = source.modulus();
  std::vector<FieldElement> candidates = copy.elements();
  std::sort(candidates.begin(), candidates.end(), lex_less);
  for (const auto& r : candidates) {
    FieldElement value = target.zero();
    for (std::size_t i = mod.size(); i-- > 0;) value = value * r + target.scalar(mod[i]);
    if (value.is_zero()) return {&source, &target, r};
  }
  throw std::logic_error("make_embedding: no root of the source modulus in target");
}

FieldElement embed(const FieldElement& e, const SubfieldEmbedding& emb) {
  if (&e.field() != emb.source) throw std::invalid_argument("embed: element is not in the source field");
  FieldElement result = emb.target->zero();
  const auto c = e.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) result = result * emb.generator_image + emb.target->scalar(c[i]);
  return result;
}

Subfield::Subfield(const Field& host, unsigned degree) : host_(&host), degree_(degree) {
  if (degree == 0 || host.degree() % degree != 0) {
    throw std::invalid_argument("subfield degree " + std::to_string(degree) + " does not divide " +
                                std::to_string(host.degree()));
  }
  order_ = *checked_pow(host.characteristic(), degree);
  primitive_ = cyclic_subgroup_generator(host, order_ - 1);
}

bool Subfield::contains(const FieldElement& x) const {
  return &x.field() == host_ && x.pow(order_) == x;
}

std::vector<FieldElement> Subfield::basis() const {
  std::vector<FieldElement> out;
  FieldElement x = host_->one();
  for (unsigned i = 0; i < degree_; ++i) {
    out.push_back(x);
    x = x * primitive_;
  }
  return out;
}

std::vector<FieldElement> Subfield::elements() const {
  std::vector<FieldElement> out{host_->zero()};
  FieldElement x = host_->one();
  for (std::uint64_t i = 0; i + 1 < order_; ++i) {
    out.push_back(x);
    x = x * primitive_;
  }
  return out;
}

std::vector<FieldElement> trace_zero_basis(std::uint64_t q, const Subfield& quadratic) {
  if (quadratic.order() / q != q || quadratic.order() % q != 0) {
    throw std::invalid_argument("trace_zero_basis: subfield does not have q^2 elements");
  }
  const auto domain = quadratic.basis();
  std::vector<FieldElement> images;
  images.reserve(domain.size());
  for (const auto& u : domain) images.push_back(u.pow(q) + u);
  return kernel(domain, images);
}

std::vector<FieldElement> trace_zero_basis(std::uint64_t q, const Field& ambient) {
  if (ambient.order() / q != q || ambient.order() % q != 0) {
    throw std::invalid_argument("trace_zero_basis: ambient field does not have q^2 elements");
  }
  return trace_zero_basis(q, Subfield(ambient, ambient.degree()));
}

}  // namespace ggk
