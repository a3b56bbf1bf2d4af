#include "ggk/subgroup.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace ggk {

bool ExplicitSubgroup::contains(const Aut& g) const {
  return std::binary_search(elements.begin(), elements.end(), g, aut_less);
}

ExplicitSubgroup generate_subgroup(const Params& params, std::span<const Aut> generators, std::uint64_t max_order) {
  std::unordered_set<Aut, AutHash> seen;
  std::vector<Aut> order;
  const Aut id = identity(params);
  seen.insert(id);
  order.push_back(id);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& s : generators) {
      Aut next = compose(params, order[i], s);
      if (seen.insert(next).second) {
        if (seen.size() > max_order) {
          throw std::length_error("subgroup closure exceeded " + std::to_string(max_order) + " elements");
        }
        order.push_back(std::move(next));
      }
    }
  }
  // In a finite group, closure under right multiplication by generators is the generated subgroup.
  std::sort(order.begin(), order.end(), aut_less);
  return {params, std::move(order)};
}

bool is_closed(const ExplicitSubgroup& group) {
  const Params& params = group.params;
  const std::unordered_set<Aut, AutHash> members(group.elements.begin(), group.elements.end());
  if (members.size() != group.elements.size() || !members.count(identity(params))) return false;
  for (const auto& g : group.elements) {
    if (!members.count(inverse(params, g))) return false;
    for (const auto& h : group.elements) {
      if (!members.count(compose(params, g, h))) return false;
    }
  }
  return true;
}

HermitianSubgroup project(const ExplicitSubgroup& group) {
  HermitianSubgroup out;
  out.reserve(group.elements.size());
  for (const auto& g : group.elements) out.push_back(pi(g));
  std::sort(out.begin(), out.end(), hermitian_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ggk
