#pragma once

// Exact arithmetic in finite fields GF(p^k).
//
// A Field is identified by (p, k) and is interned: Field::get returns the same
// immutable object for the same pair, so elements can hold a plain pointer to
// their field. The modulus is the lexicographically smallest monic irreducible
// polynomial of degree k, comparing coefficient lists constant term first.
//
// Elements are stored as a packed base-p code: coefficient i of the residue
// class is digit i of the code.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ggk {

class Field;

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const Field& field, std::uint64_t code);

  const Field& field() const;
  bool valid() const { return field_ != nullptr; }
  std::uint64_t code() const { return code_; }
  std::vector<std::uint32_t> coeffs() const;

  bool is_zero() const { return code_ == 0; }
  bool is_one() const;

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
  FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

  FieldElement pow(std::uint64_t exponent) const;
  FieldElement inverse() const;
  /// x^(p^times).
  FieldElement frobenius(unsigned times = 1) const;

  friend bool operator==(const FieldElement& lhs, const FieldElement& rhs) {
    return lhs.field_ == rhs.field_ && lhs.code_ == rhs.code_;
  }
  friend bool operator!=(const FieldElement& lhs, const FieldElement& rhs) { return !(lhs == rhs); }

  /// "(c0,c1,...)" coefficient tuple.
  std::string to_string() const;

 private:
  const Field* field_ = nullptr;
  std::uint64_t code_ = 0;
};

/// Coefficient-lex order, constant term compared first.
bool lex_less(const FieldElement& lhs, const FieldElement& rhs);

class Field {
 public:
  /// Largest field order that gets log/antilog tables.
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

  /// Interned field of order p^k. Throws std::invalid_argument for a
  /// non-prime p, k = 0, or p^k >= 2^64.
  static const Field& get(std::uint64_t p, unsigned k);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint64_t order() const { return order_; }
  /// Monic modulus, k+1 coefficients, constant term first.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  /// Prime factorization of p^k - 1.
  const std::vector<std::pair<std::uint64_t, unsigned>>& unit_group_factors() const { return unit_factors_; }

  FieldElement zero() const { return {*this, 0}; }
  FieldElement one() const { return {*this, 1}; }
  FieldElement element(std::uint64_t code) const;
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  /// Image of an integer in the prime field.
  FieldElement scalar(std::int64_t value) const;
  /// The residue class of x.
  FieldElement generator() const;
  /// Smallest-lex element of multiplicative order p^k - 1.
  FieldElement primitive_root() const { return {*this, primitive_}; }

  /// Every element, in code order. Only for fields of at most kTableLimit elements.
  std::vector<FieldElement> all_elements() const;

  /// "p^k:c0,c1,...,ck".
  std::string descriptor() const;

  // Raw arithmetic on codes.
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t exponent) const;
  std::uint64_t inv(std::uint64_t a) const;

  std::vector<std::uint32_t> digits(std::uint64_t code) const;
  std::uint64_t encode(std::span<const std::uint32_t> digits) const;
  /// Position of a code in coefficient-lex order, and the inverse map.
  std::uint64_t lex_rank(std::uint64_t code) const;
  std::uint64_t code_at_lex_rank(std::uint64_t rank) const;

 private:
  Field(std::uint64_t p, unsigned k);

  std::uint64_t mul_poly(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow_poly(std::uint64_t a, std::uint64_t exponent) const;

  std::uint64_t p_;
  unsigned k_;
  std::uint64_t order_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::pair<std::uint64_t, unsigned>> unit_factors_;
  std::uint64_t primitive_ = 0;
  std::uint64_t modulus_bits_ = 0;  // p = 2: modulus without the leading term
  bool tables_ = false;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

/// Field of order p^k (see Field::get).
const Field& field_create(std::uint64_t p, unsigned k);

/// Least t >= 1 with e^t = 1. Throws std::domain_error for e = 0.
std::uint64_t element_order(const FieldElement& e);

/// Element of order exactly t: primitive_root^((p^k-1)/t).
/// Throws std::invalid_argument when t does not divide p^k - 1.
FieldElement cyclic_subgroup_generator(const Field& field, std::uint64_t t);

/// Degree over F_p of the minimal polynomial of e.
unsigned element_degree(const FieldElement& e);

/// Degree over F_p of the smallest subfield containing every element of S.
unsigned generated_subfield(std::span<const FieldElement> elements, const Field& ambient);

/// Homomorphism from a smaller field into one containing a copy of it.
struct SubfieldEmbedding {
  const Field* source = nullptr;
  const Field* target = nullptr;
  FieldElement generator_image;
};

/// Uses the smallest-lex root of source's modulus in target.
/// Throws std::invalid_argument unless source degree divides target degree.
SubfieldEmbedding make_embedding(const Field& source, const Field& target);
FieldElement embed(const FieldElement& e, const SubfieldEmbedding& emb);

/// The unique subfield of a host field with p^degree elements.
class Subfield {
 public:
  Subfield(const Field& host, unsigned degree);

  const Field& host() const { return *host_; }
  unsigned degree() const { return degree_; }
  std::uint64_t order() const { return order_; }
  /// Generator of the subfield's multiplicative group.
  const FieldElement& primitive() const { return primitive_; }
  bool contains(const FieldElement& x) const;
  /// 1, w, ..., w^(degree-1) for the primitive w: an F_p-basis.
  std::vector<FieldElement> basis() const;
  /// 0 followed by the powers of the primitive.
  std::vector<FieldElement> elements() const;

 private:
  const Field* host_;
  unsigned degree_;
  std::uint64_t order_;
  FieldElement primitive_;
};

/// F_p-basis of {c in F_{q^2} : c^q + c = 0}, of size log_p(q).
std::vector<FieldElement> trace_zero_basis(std::uint64_t q, const Field& ambient);
/// Same, for the copy of F_{q^2} inside a larger field.
std::vector<FieldElement> trace_zero_basis(std::uint64_t q, const Subfield& quadratic);

}  // namespace ggk
