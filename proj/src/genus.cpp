#include "ggk/genus.hpp"

#include <stdexcept>

#include "ggk/errors.hpp"
#include "ggk/numtheory.hpp"

namespace ggk {

namespace {

std::int64_t narrow(i128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error(std::string(what) + " exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

bool is_power_of(std::uint64_t x, std::uint64_t p) {
  if (x == 0) return false;
  while (x % p == 0) x /= p;
  return x == 1;
}

void check_inputs(const Params& params, std::uint64_t g0, std::uint64_t size_G2, std::uint64_t size_G3) {
  if (g0 == 0 || params.mu_order % g0 != 0) {
    throw std::invalid_argument("g0 = " + std::to_string(g0) + " does not divide " + std::to_string(params.mu_order));
  }
  if (!is_power_of(size_G2, params.p) || size_G2 > params.q * params.q) {
    throw std::invalid_argument("#G2 = " + std::to_string(size_G2) + " is not a power of p up to q^2");
  }
  if (!is_power_of(size_G3, params.p) || size_G3 > params.q) {
    throw std::invalid_argument("#G3 = " + std::to_string(size_G3) + " is not a power of p up to q");
  }
}

}  // namespace

std::int64_t ambient_genus(const Params& params) {
  const i128 q = params.q;
  const i128 qn = params.qn_plus_1 - 1;
  return narrow((q - 1) * (qn * q + qn - q * q) / 2, "ambient genus");
}

GenusRecord genus_formula(const Params& params, std::uint64_t g0, std::uint64_t size_G2, std::uint64_t size_G3) {
  check_inputs(params, g0, size_G2, size_G3);
  GenusRecord r;
  r.p = params.p;
  r.q = params.q;
  r.n = params.n;
  r.g0 = g0;
  r.size_G2 = size_G2;
  r.size_G3 = size_G3;
  r.delta1 = gcd(g0, params.m);
  r.delta2 = gcd(g0, params.qn_plus_1);
  const i128 q = params.q, m = params.m, N = params.qn_plus_1;
  const i128 d1 = r.delta1, d2 = r.delta2, G2 = size_G2, G3 = size_G3;
  const i128 gw = G2 * G3;
  const i128 order = static_cast<i128>(g0) * gw;
  const i128 num = q * q * N - q * q * q * d1 - q * (d2 - d1) * G2 + (d2 - m) * gw - (N - m) * G3;
  if (num % (2 * order) != 0) {
    throw ConsistencyError("genus numerator " + to_string(num) + " is not divisible by 2#G = " +
                           to_string(2 * order) + " for (g0,#G2,#G3) = (" + std::to_string(g0) + "," +
                           std::to_string(size_G2) + "," + std::to_string(size_G3) + ")");
  }
  r.size_G = static_cast<std::uint64_t>(order);
  r.genus = narrow(num / (2 * order), "genus");
  if (r.genus < 0) throw ConsistencyError("negative genus " + std::to_string(r.genus));
  return r;
}

RamificationSummary diff_degree_formula(const Params& params, std::uint64_t g0, std::uint64_t size_G2,
                                        std::uint64_t size_G3) {
  check_inputs(params, g0, size_G2, size_G3);
  const i128 q = params.q, m = params.m, N = params.qn_plus_1, g = g0;
  const i128 d1 = gcd(g0, params.m), d2 = gcd(g0, params.qn_plus_1);
  const i128 G2 = size_G2, G3 = size_G3, gw = G2 * G3;
  RamificationSummary s;
  s.sum_v = narrow((m + g) * gw + (N - m) * G3 - (N + 1), "sum_v");
  s.sum_N = narrow(q * (d2 - d1) * G2 + (g - d2) * gw + q * q * q * (d1 - 1), "sum_N");
  s.deg_diff = narrow(static_cast<i128>(s.sum_v) + s.sum_N, "deg_diff");
  return s;
}

RamificationSummary diff_degree_elementwise(const ExplicitSubgroup& G) {
  const Params& params = G.params;
  const auto points = affine_points(params);
  const Aut id = identity(params);
  RamificationSummary s;
  for (const auto& g : G.elements) {
    if (g == id) continue;
    s.sum_v += static_cast<std::int64_t>(v_Qinf(params, g));
    s.sum_N += static_cast<std::int64_t>(count_fixed_points(params, g, points));
  }
  s.deg_diff = s.sum_v + s.sum_N;
  return s;
}

std::int64_t genus_from_different(const Params& params, std::uint64_t order, std::int64_t deg_diff) {
  // 2g' - 2 = (2g - 2 - deg Diff) / #G
  const i128 lhs = 2 * static_cast<i128>(ambient_genus(params)) - 2 - deg_diff;
  if (order == 0 || lhs % static_cast<i128>(order) != 0) {
    throw ConsistencyError("Riemann-Hurwitz: " + to_string(lhs) + " not divisible by #G = " + std::to_string(order));
  }
  const i128 twice = lhs / static_cast<i128>(order) + 2;
  if (twice % 2 != 0 || twice < 0) throw ConsistencyError("Riemann-Hurwitz: 2g' = " + to_string(twice));
  return narrow(twice / 2, "genus");
}

std::int64_t genus_via_RH(const ExplicitSubgroup& G) {
  return genus_from_different(G.params, G.order(), diff_degree_elementwise(G).deg_diff);
}

std::int64_t hermitian_genus(std::uint64_t q, std::uint64_t g1, std::uint64_t size_G2, std::uint64_t size_G3) {
  const i128 d2 = gcd(g1, q + 1);
  const i128 order = static_cast<i128>(g1) * size_G2 * size_G3;
  const i128 num = (static_cast<i128>(q) - size_G3) * (static_cast<i128>(q) - (d2 - 1) * size_G2);
  if (order == 0 || num % (2 * order) != 0) {
    throw ConsistencyError("Hermitian genus numerator " + to_string(num) + " not divisible by 2#G");
  }
  return narrow(num / (2 * order), "genus");
}

}  // namespace ggk
