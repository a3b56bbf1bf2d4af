#pragma once

// Brute-force subgroup enumeration of B(Q_inf) and A(P_inf) at small
// parameters, and the exhaustive verification report built on it.
// Nothing here consults the classification.

#include <cstdint>
#include <string>
#include <vector>

#include "ggk/autgrp.hpp"
#include "ggk/subgroup.hpp"

namespace ggk {

/// Multiplication table of a finite group on indices 0..size-1.
class CayleyTable {
 public:
  CayleyTable(std::size_t size, std::vector<std::uint32_t> products, std::uint32_t identity);

  std::size_t size() const { return size_; }
  std::uint32_t identity() const { return identity_; }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const { return products_[x * size_ + y]; }
  std::uint32_t inverse(std::uint32_t x) const { return inverses_[x]; }

  /// Sorted index list of the subgroup generated by gens.
  std::vector<std::uint32_t> closure(const std::vector<std::uint32_t>& gens) const;
  bool is_subgroup(const std::vector<std::uint32_t>& sorted) const;

 private:
  std::size_t size_;
  std::vector<std::uint32_t> products_;
  std::vector<std::uint32_t> inverses_;
  std::uint32_t identity_;
};

/// B(Q_inf) with its elements sorted by aut_less and their Cayley table.
struct FullGroup {
  Params params;
  std::vector<Aut> elements;
  CayleyTable table;

  ExplicitSubgroup subgroup(const std::vector<std::uint32_t>& indices) const;
};

/// Throws std::length_error when #B(Q_inf) exceeds max_order.
FullGroup build_full_group(const Params& params, std::uint64_t max_order = 10000);

CayleyTable hermitian_table(const Params& params, std::uint64_t max_order = 10000);

enum class EnumerationStrategy {
  cyclic_extension,  // extend known subgroups by one outside element
  join_closure,      // close the set of cyclic subgroups under pairwise joins
};

/// Sorted index lists of every subgroup, each once, ordered by (size, indices).
std::vector<std::vector<std::uint32_t>> all_subgroups(const CayleyTable& table,
                                                      EnumerationStrategy strategy = EnumerationStrategy::cyclic_extension);

/// Every subgroup of B(Q_inf). Throws std::length_error above max_order.
std::vector<ExplicitSubgroup> enumerate_all_subgroups(const Params& params, std::uint64_t max_order = 10000);

struct ClaimResult {
  std::string claim;
  long subgroup = -1;  // index into the enumeration, -1 for group-level claims
  bool pass = true;
  std::string witness;  // set on failure
};

struct VerifyOptions {
  std::uint64_t max_order = 10000;
  /// Run the second enumeration strategy when #B(Q_inf) is at most this.
  std::uint64_t cross_check_order = 300;
};

struct VerifyReport {
  Params params;
  std::size_t subgroup_count = 0;
  std::vector<ClaimResult> results;

  bool passed() const;
  std::size_t failures() const;
  /// One "PASS|FAIL claim subgroup [witness]" line per result, then a summary line.
  std::string to_text() const;
  std::string to_json() const;
};

VerifyReport verify_all(const Params& params, const VerifyOptions& options = {});

}  // namespace ggk
