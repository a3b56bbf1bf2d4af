#include "ggk/autgrp.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ggk/linalg.hpp"
#include "ggk/numtheory.hpp"

namespace ggk {

const Field& Params::ambient() const { return Field::get(p, 2 * e * n); }

const Field& Params::quadratic_field() const { return Field::get(p, 2 * e); }

Subfield Params::quadratic_subfield() const { return Subfield(ambient(), 2 * e); }

std::uint64_t Params::group_order() const {
  const u128 order = static_cast<u128>(m) * q * q * q * (static_cast<u128>(q) * q - 1);
  return order > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(order);
}

std::string Params::to_string() const {
  std::ostringstream os;
  os << "q=" << q << ",n=" << n;
  return os.str();
}

Params make_params(std::uint64_t q, unsigned n) {
  const auto pp = prime_power(q);
  if (!pp) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  if (n == 0 || n % 2 == 0) throw std::invalid_argument("n = " + std::to_string(n) + " must be odd and positive");
  const auto size = checked_pow(q, 2 * n);
  if (!size || *size == UINT64_MAX) throw std::invalid_argument("q^(2n) exceeds the 2^64 field-size bound");
  Params params;
  params.p = pp->first;
  params.e = pp->second;
  params.q = q;
  params.n = n;
  params.qn_plus_1 = *checked_pow(q, n) + 1;
  params.m = params.qn_plus_1 / (q + 1);
  params.mu_order = params.qn_plus_1 * (q - 1);
  return params;
}

bool aut_less(const Aut& lhs, const Aut& rhs) {
  const FieldElement* l[] = {&lhs.a, &lhs.b, &lhs.c, &lhs.d};
  const FieldElement* r[] = {&rhs.a, &rhs.b, &rhs.c, &rhs.d};
  for (int i = 0; i < 4; ++i) {
    if (lex_less(*l[i], *r[i])) return true;
    if (lex_less(*r[i], *l[i])) return false;
  }
  return false;
}

bool hermitian_less(const HermitianAut& lhs, const HermitianAut& rhs) {
  return aut_less({lhs.a, lhs.b, lhs.c, lhs.a}, {rhs.a, rhs.b, rhs.c, rhs.a});
}

namespace {
std::size_t mix(std::size_t seed, std::uint64_t v) {
  return seed ^ (std::hash<std::uint64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (seed << 6U) + (seed >> 2U));
}
}  // namespace

std::size_t AutHash::operator()(const Aut& g) const {
  return mix(mix(mix(mix(0, g.a.code()), g.b.code()), g.c.code()), g.d.code());
}

std::size_t HermitianAutHash::operator()(const HermitianAut& h) const {
  return mix(mix(mix(0, h.a.code()), h.b.code()), h.c.code());
}

std::string to_string(const Aut& g) {
  return "[" + g.a.to_string() + ";" + g.b.to_string() + ";" + g.c.to_string() + ";" + g.d.to_string() + "]";
}

std::string to_string(const HermitianAut& h) {
  return "[" + h.a.to_string() + ";" + h.b.to_string() + ";" + h.c.to_string() + "]";
}

Aut identity(const Params& params) {
  const Field& f = params.ambient();
  return {f.one(), f.zero(), f.zero(), f.one()};
}

HermitianAut hermitian_identity(const Params& params) {
  const Field& f = params.ambient();
  return {f.one(), f.zero(), f.zero()};
}

namespace {

bool in_quadratic(const Params& params, const FieldElement& x) { return x.pow(params.q * params.q) == x; }

bool over_ambient(const Params& params, const FieldElement& x) {
  return x.valid() && &x.field() == &params.ambient();
}

void require_ambient(const Params& params, const Aut& g) {
  if (!over_ambient(params, g.a) || !over_ambient(params, g.b) || !over_ambient(params, g.c) ||
      !over_ambient(params, g.d)) {
    throw std::invalid_argument("automorphism is not defined over the ambient field of " + params.to_string());
  }
}

void require_ambient(const Params& params, const HermitianAut& h) {
  if (!over_ambient(params, h.a) || !over_ambient(params, h.b) || !over_ambient(params, h.c)) {
    throw std::invalid_argument("automorphism is not defined over the ambient field of " + params.to_string());
  }
}

}  // namespace

bool is_valid(const Params& params, const HermitianAut& h) {
  if (!over_ambient(params, h.a) || !over_ambient(params, h.b) || !over_ambient(params, h.c)) return false;
  if (h.a.is_zero()) return false;
  if (!in_quadratic(params, h.a) || !in_quadratic(params, h.b) || !in_quadratic(params, h.c)) return false;
  return h.c.pow(params.q) + h.c == h.b.pow(params.q + 1);
}

bool is_valid(const Params& params, const Aut& g) {
  if (!is_valid(params, HermitianAut{g.a, g.b, g.c})) return false;
  if (!over_ambient(params, g.d)) return false;
  return g.d.pow(params.m) == g.a && g.d.pow(params.mu_order).is_one();
}

bool is_valid(const Params& params, const AffinePoint& pt) {
  if (!over_ambient(params, pt.alpha) || !over_ambient(params, pt.beta)) return false;
  if (!in_quadratic(params, pt.alpha) || !in_quadratic(params, pt.beta)) return false;
  return pt.alpha.pow(params.q) + pt.alpha == pt.beta.pow(params.q + 1);
}

HermitianAut compose(const Params& params, const HermitianAut& h1, const HermitianAut& h2) {
  require_ambient(params, h1);
  require_ambient(params, h2);
  const std::uint64_t q = params.q;
  return {h1.a * h2.a, h2.a * h1.b + h2.b, h2.a.pow(q + 1) * h1.c + h2.a * h2.b.pow(q) * h1.b + h2.c};
}

Aut compose(const Params& params, const Aut& g1, const Aut& g2) {
  require_ambient(params, g1);
  require_ambient(params, g2);
  const HermitianAut h = compose(params, pi(g1), pi(g2));
  return {h.a, h.b, h.c, g1.d * g2.d};
}

HermitianAut inverse(const Params& params, const HermitianAut& h) {
  require_ambient(params, h);
  const FieldElement a_inv = h.a.inverse();
  const FieldElement norm_inv = a_inv.pow(params.q + 1);
  return {a_inv, -(a_inv * h.b), norm_inv * (h.b.pow(params.q + 1) - h.c)};
}

Aut inverse(const Params& params, const Aut& g) {
  const HermitianAut h = inverse(params, pi(g));
  return {h.a, h.b, h.c, g.d.inverse()};
}

Aut power(const Params& params, const Aut& g, std::uint64_t t) {
  Aut result = identity(params);
  Aut base = g;
  while (t != 0) {
    if (t & 1U) result = compose(params, result, base);
    base = compose(params, base, base);
    t >>= 1U;
  }
  return result;
}

HermitianAut pi(const Aut& g) { return {g.a, g.b, g.c}; }

std::uint64_t element_order_group(const Params& params, const Aut& g) {
  const Aut id = identity(params);
  Aut x = g;
  std::uint64_t t = 1;
  while (!(x == id)) {
    x = compose(params, x, g);
    ++t;
  }
  return t;
}

std::uint64_t element_order_group(const Params& params, const HermitianAut& h) {
  const HermitianAut id = hermitian_identity(params);
  HermitianAut x = h;
  std::uint64_t t = 1;
  while (!(x == id)) {
    x = compose(params, x, h);
    ++t;
  }
  return t;
}

std::vector<FieldElement> solve_trace_equation(const Params& params, const FieldElement& rhs) {
  const Subfield quad = params.quadratic_subfield();
  const auto domain = quad.basis();
  std::vector<FieldElement> images;
  for (const auto& u : domain) images.push_back(u.pow(params.q) + u);
  const auto particular = preimage(domain, images, rhs);
  if (!particular) return {};
  const auto kernel_basis = kernel(domain, images);
  std::vector<FieldElement> out;
  for (const auto& t : span_of(params.ambient(), kernel_basis).elements()) out.push_back(*particular + t);
  std::sort(out.begin(), out.end(), [](const FieldElement& x, const FieldElement& y) { return x.code() < y.code(); });
  return out;
}

std::vector<HermitianAut> enumerate_hermitian_group(const Params& params, std::uint64_t max_order) {
  const u128 order = static_cast<u128>(params.q) * params.q * params.q * (static_cast<u128>(params.q) * params.q - 1);
  if (order > max_order) {
    throw std::length_error("A(P_inf) has more than " + std::to_string(max_order) + " elements");
  }
  const Subfield quad = params.quadratic_subfield();
  const auto elements = quad.elements();
  std::vector<HermitianAut> out;
  for (const auto& b : elements) {
    const auto cs = solve_trace_equation(params, b.pow(params.q + 1));
    for (const auto& a : elements) {
      if (a.is_zero()) continue;
      for (const auto& c : cs) out.push_back({a, b, c});
    }
  }
  std::sort(out.begin(), out.end(), hermitian_less);
  return out;
}

std::vector<Aut> enumerate_full_group(const Params& params, std::uint64_t max_order) {
  if (params.group_order() > max_order) {
    throw std::length_error("B(Q_inf) for " + params.to_string() + " has more than " + std::to_string(max_order) +
                            " elements");
  }
  const Field& f = params.ambient();
  const FieldElement zeta = cyclic_subgroup_generator(f, params.mu_order);
  const FieldElement zeta_m = zeta.pow(params.m);                  // generates F_{q^2}^*
  const FieldElement root_of_unity = zeta.pow(params.q * params.q - 1);  // generates the m-th roots of 1
  const auto bs = params.quadratic_subfield().elements();

  std::vector<Aut> out;
  out.reserve(params.group_order());
  for (const auto& b : bs) {
    const auto cs = solve_trace_equation(params, b.pow(params.q + 1));
    FieldElement a = f.one();
    FieldElement d0 = f.one();  // d0^m = a
    for (std::uint64_t i = 0; i + 1 < params.q * params.q; ++i) {
      for (const auto& c : cs) {
        FieldElement d = d0;
        for (std::uint64_t j = 0; j < params.m; ++j) {
          out.push_back({a, b, c, d});
          d = d * root_of_unity;
        }
      }
      a = a * zeta_m;
      d0 = d0 * zeta;
    }
  }
  std::sort(out.begin(), out.end(), aut_less);
  return out;
}

AffinePoint hermitian_action(const Params& params, const HermitianAut& h, const AffinePoint& pt) {
  const std::uint64_t q = params.q;
  return {h.a.pow(q + 1) * pt.alpha + h.a * h.b.pow(q) * pt.beta + h.c, h.a * pt.beta + h.b};
}

std::vector<AffinePoint> affine_points(const Params& params) {
  std::vector<AffinePoint> out;
  for (const auto& beta : params.quadratic_subfield().elements()) {
    for (const auto& alpha : solve_trace_equation(params, beta.pow(params.q + 1))) out.push_back({alpha, beta});
  }
  return out;
}

std::uint64_t count_fixed_points(const Params& params, const Aut& g, std::span<const AffinePoint> points) {
  const HermitianAut h = pi(g);
  std::uint64_t count = 0;
  for (const auto& pt : points) {
    if (hermitian_action(params, h, pt) == pt) ++count;
  }
  return count;
}

std::uint64_t count_fixed_points(const Params& params, const Aut& g) {
  const auto points = affine_points(params);
  return count_fixed_points(params, g, points);
}

std::uint64_t N_formula(const Params& params, const Aut& g) {
  const HermitianAut h = pi(g);
  const std::uint64_t q = params.q;
  if (h == hermitian_identity(params)) return q * q * q;
  const std::uint64_t t = element_order_group(params, h);
  if (t % params.p == 0) return 0;
  if ((q + 1) % t == 0) return q;
  return 1;
}

std::uint64_t v_Qinf(const Params& params, const Aut& g) {
  if (g == identity(params)) throw std::invalid_argument("v_Qinf: undefined for the identity");
  if (g.d.is_one()) return g.b.is_zero() ? params.qn_plus_1 + 1 : params.m + 1;
  return 1;
}

}  // namespace ggk
