#pragma once

// F_p-linear algebra on field elements viewed as coefficient vectors.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ggk/ffield.hpp"

namespace ggk {

/// Incrementally built F_p-span of field elements, kept in reduced row echelon form.
class FpSpan {
 public:
  explicit FpSpan(const Field& field);

  /// Adds x; returns true if the dimension grew.
  bool insert(const FieldElement& x);
  bool contains(const FieldElement& x) const;
  bool contains_all(std::span<const FieldElement> xs) const;
  std::size_t dimension() const { return rows_.size(); }
  /// p^dimension.
  std::uint64_t size() const;
  /// Fully reduced echelon rows, sorted by pivot. Equal spans give equal bases.
  std::vector<FieldElement> basis() const;
  /// All p^dimension members in code order.
  std::vector<FieldElement> elements() const;

 private:
  std::vector<std::uint32_t> reduce(std::vector<std::uint32_t> v) const;

  const Field* field_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::size_t> pivots_;
};

FpSpan span_of(const Field& field, std::span<const FieldElement> xs);

/// Canonical F_p-basis of the span of xs.
std::vector<FieldElement> canonical_basis(const Field& field, std::span<const FieldElement> xs);

/// Kernel of the F_p-linear map sending domain[j] to images[j], as elements
/// of span(domain). Requires domain to be linearly independent.
std::vector<FieldElement> kernel(std::span<const FieldElement> domain, std::span<const FieldElement> images);

/// Some x in span(domain) mapping to target, or nullopt.
std::optional<FieldElement> preimage(std::span<const FieldElement> domain, std::span<const FieldElement> images,
                                     const FieldElement& target);

}  // namespace ggk
