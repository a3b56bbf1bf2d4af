#pragma once

// The stabilizer B(Q_inf) of the pole of z in Aut(C_n), its Hermitian image
// A(P_inf), and the per-element quantities entering the different.
//
// An element [a,b,c,d] acts by x -> a^(q+1)x + ab^q y + c, y -> ay + b,
// z -> dz, subject to c^q + c = b^(q+1) and d^m = a. All four coordinates
// live in the ambient field F_{q^2n}; a, b, c lie in its F_{q^2} subfield.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ggk/ffield.hpp"

namespace ggk {

struct Params {
  std::uint64_t p = 0;
  unsigned e = 0;  // q = p^e
  std::uint64_t q = 0;
  unsigned n = 0;
  std::uint64_t qn_plus_1 = 0;  // q^n + 1
  std::uint64_t m = 0;          // (q^n + 1) / (q + 1)
  std::uint64_t mu_order = 0;   // (q^n + 1)(q - 1)

  /// F_{q^2n}.
  const Field& ambient() const;
  /// F_{q^2} constructed on its own.
  const Field& quadratic_field() const;
  /// F_{q^2} inside the ambient field.
  Subfield quadratic_subfield() const;
  /// m q^3 (q^2 - 1), saturating at UINT64_MAX.
  std::uint64_t group_order() const;

  friend bool operator==(const Params& a, const Params& b) { return a.q == b.q && a.n == b.n; }
  std::string to_string() const;
};

/// Validates q (prime power), n (odd, >= 1) and q^(2n) < 2^64.
Params make_params(std::uint64_t q, unsigned n);

struct HermitianAut {
  FieldElement a, b, c;
  friend bool operator==(const HermitianAut&, const HermitianAut&) = default;
};

struct Aut {
  FieldElement a, b, c, d;
  friend bool operator==(const Aut&, const Aut&) = default;
};

struct AffinePoint {
  FieldElement alpha, beta;
  friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

/// Coefficient-lex order on (a, b, c, d).
bool aut_less(const Aut& lhs, const Aut& rhs);
bool hermitian_less(const HermitianAut& lhs, const HermitianAut& rhs);

struct AutHash {
  std::size_t operator()(const Aut& g) const;
};
struct HermitianAutHash {
  std::size_t operator()(const HermitianAut& h) const;
};

/// "[a;b;c;d]" with coefficient tuples.
std::string to_string(const Aut& g);
std::string to_string(const HermitianAut& h);

Aut identity(const Params& params);
HermitianAut hermitian_identity(const Params& params);

bool is_valid(const Params& params, const Aut& g);
bool is_valid(const Params& params, const HermitianAut& h);
bool is_valid(const Params& params, const AffinePoint& pt);

/// g1 o g2 = [a1 a2, a2 b1 + b2, a2^(q+1) c1 + a2 b2^q b1 + c2, d1 d2].
/// Throws std::invalid_argument when either element is not over params.ambient().
Aut compose(const Params& params, const Aut& g1, const Aut& g2);
HermitianAut compose(const Params& params, const HermitianAut& h1, const HermitianAut& h2);

Aut inverse(const Params& params, const Aut& g);
HermitianAut inverse(const Params& params, const HermitianAut& h);

Aut power(const Params& params, const Aut& g, std::uint64_t t);

HermitianAut pi(const Aut& g);
inline FieldElement pi_a(const Aut& g) { return g.a; }
inline FieldElement pi_d(const Aut& g) { return g.d; }

/// Least t with g^t = identity.
std::uint64_t element_order_group(const Params& params, const Aut& g);
std::uint64_t element_order_group(const Params& params, const HermitianAut& h);

/// Every element of B(Q_inf), sorted by aut_less.
/// Throws std::length_error above max_order elements.
std::vector<Aut> enumerate_full_group(const Params& params, std::uint64_t max_order = 10000);
/// Every element of A(P_inf), over the F_{q^2} subfield of the ambient field.
std::vector<HermitianAut> enumerate_hermitian_group(const Params& params, std::uint64_t max_order = 10000);

/// All solutions c of c^q + c = rhs, with rhs in F_{q^2}; ascending code order.
std::vector<FieldElement> solve_trace_equation(const Params& params, const FieldElement& rhs);

/// (alpha, beta) -> (a^(q+1) alpha + a b^q beta + c, a beta + b).
/// This is a right action: act(g1 o g2, P) = act(g2, act(g1, P)).
AffinePoint hermitian_action(const Params& params, const HermitianAut& h, const AffinePoint& pt);

/// The q^3 affine points of the Hermitian curve over F_{q^2}.
std::vector<AffinePoint> affine_points(const Params& params);

/// Number of affine points fixed by pi(g).
std::uint64_t count_fixed_points(const Params& params, const Aut& g);
std::uint64_t count_fixed_points(const Params& params, const Aut& g, std::span<const AffinePoint> points);

/// Closed-form number of fixed affine points of pi(g).
std::uint64_t N_formula(const Params& params, const Aut& g);

/// v_{Q_inf}(g(tau) - tau). Throws std::invalid_argument for the identity.
std::uint64_t v_Qinf(const Params& params, const Aut& g);

}  // namespace ggk
