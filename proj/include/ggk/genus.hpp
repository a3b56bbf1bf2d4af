#pragma once

// Genus of the fixed field C_n^G from the cardinalities (g0, #G2, #G3),
// the different-degree sums, and the Riemann-Hurwitz cross-check on
// explicit subgroups.

#include <cstdint>
#include <string>

#include "ggk/autgrp.hpp"
#include "ggk/subgroup.hpp"

namespace ggk {

struct GenusRecord {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  unsigned n = 0;
  std::uint64_t g0 = 1;
  std::uint64_t size_G2 = 1;
  std::uint64_t size_G3 = 1;
  std::uint64_t delta1 = 1;
  std::uint64_t delta2 = 1;
  std::uint64_t size_G = 1;
  std::int64_t genus = 0;
};

struct RamificationSummary {
  std::int64_t sum_v = 0;
  std::int64_t sum_N = 0;
  std::int64_t deg_diff = 0;
  friend bool operator==(const RamificationSummary&, const RamificationSummary&) = default;
};

/// (q-1)(q^(n+1) + q^n - q^2)/2.
std::int64_t ambient_genus(const Params& params);

/// Throws std::invalid_argument unless g0 divides (q^n+1)(q-1) and both sizes
/// are powers of p (with #G3 <= q, #G2 <= q^2); ConsistencyError when the
/// numerator is not divisible by 2#G.
GenusRecord genus_formula(const Params& params, std::uint64_t g0, std::uint64_t size_G2, std::uint64_t size_G3);

RamificationSummary diff_degree_formula(const Params& params, std::uint64_t g0, std::uint64_t size_G2,
                                        std::uint64_t size_G3);

/// Element-wise sums of v_Qinf and fixed affine points over the non-identity elements.
RamificationSummary diff_degree_elementwise(const ExplicitSubgroup& G);

/// Genus g' of a quotient of C_n by a group of the given order whose different has degree deg_diff.
/// Throws ConsistencyError when g' is not a nonnegative integer.
std::int64_t genus_from_different(const Params& params, std::uint64_t order, std::int64_t deg_diff);

/// Solves 2g(C_n) - 2 = #G(2g' - 2) + deg Diff. Throws ConsistencyError when g'
/// is not a nonnegative integer.
std::int64_t genus_via_RH(const ExplicitSubgroup& G);

/// Closed form for n = 1: (q - #G3)(q - (delta2 - 1)#G2) / (2#G), with
/// delta2 = gcd(g1, q+1) and #G = g1 #G2 #G3.
std::int64_t hermitian_genus(std::uint64_t q, std::uint64_t g1, std::uint64_t size_G2, std::uint64_t size_G3);

}  // namespace ggk
