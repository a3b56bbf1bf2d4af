#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ggk/autgrp.hpp"

namespace ggk {

/// A concrete subgroup of B(Q_inf): its elements sorted by aut_less.
struct ExplicitSubgroup {
  Params params;
  std::vector<Aut> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(const Aut& g) const;
};

/// Closure of the generators under composition.
/// Throws std::length_error once more than max_order elements appear.
ExplicitSubgroup generate_subgroup(const Params& params, std::span<const Aut> generators,
                                   std::uint64_t max_order = 10000);

/// Contains the identity and is closed under composition and inversion.
bool is_closed(const ExplicitSubgroup& group);

/// Hermitian subgroups are kept as sorted element lists.
using HermitianSubgroup = std::vector<HermitianAut>;

/// The image pi(G), sorted by hermitian_less.
HermitianSubgroup project(const ExplicitSubgroup& group);

}  // namespace ggk
