#pragma once

// Admissible classification data (G0, G2, G3) of subgroups of B(Q_inf):
//   G0 a cyclic subgroup of mu,
//   G2 an F_p(G0^m)-subspace of F_{q^2},
//   G3 an F_p(G0^(q^n+1))-subspace of {c : c^q + c = 0} containing W,
// together with the correspondence G <-> (pi(G), pi_d(G)) and witness construction.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ggk/autgrp.hpp"
#include "ggk/errors.hpp"
#include "ggk/ffield.hpp"
#include "ggk/subgroup.hpp"

namespace ggk {

/// A subspace, stored as its canonical F_p-basis.
using Subspace = std::vector<FieldElement>;

/// F_{q^2} realized inside a host field: either standalone or as the
/// subfield of the ambient F_{q^2n}. Elements of triples live in host().
class QuadraticView {
 public:
  static QuadraticView standalone(const Params& params);
  static QuadraticView in_ambient(const Params& params);

  const Params& params() const { return params_; }
  const Field& host() const { return quad_.host(); }
  const Subfield& quadratic() const { return quad_; }
  /// F_q inside the host.
  const Subfield& base() const { return base_; }
  /// F_p-basis of {c : c^q + c = 0}.
  const std::vector<FieldElement>& trace_zero() const { return trace_zero_; }

 private:
  QuadraticView(const Params& params, const Field& host);

  Params params_;
  Subfield quad_;
  Subfield base_;
  std::vector<FieldElement> trace_zero_;
};

struct TripleDescriptor {
  std::uint64_t g0 = 1;
  Subspace G2_basis;
  Subspace G3_basis;
  std::uint64_t g1 = 1;
  std::uint64_t delta1 = 1;
  std::uint64_t delta2 = 1;
  std::uint64_t size_G2 = 1;
  std::uint64_t size_G3 = 1;
  std::uint64_t g_w = 1;
  std::uint64_t size_G = 1;

  bool operator==(const TripleDescriptor& other) const {
    return g0 == other.g0 && G2_basis == other.G2_basis && G3_basis == other.G3_basis;
  }
};

/// Canonicalizes the spanning sets and fills the derived quantities.
TripleDescriptor make_triple(const Params& params, std::uint64_t g0, std::span<const FieldElement> G2_span,
                             std::span<const FieldElement> G3_span);

/// Totally ordered key (g0, G2 codes, G3 codes) for set comparisons.
struct TripleKey {
  std::uint64_t g0;
  std::vector<std::uint64_t> G2;
  std::vector<std::uint64_t> G3;
  auto operator<=>(const TripleKey&) const = default;
};
TripleKey key_of(const TripleDescriptor& t);

/// Human-readable "g0=..,G2={..},G3={..}".
std::string to_string(const TripleDescriptor& t);

/// Empty if the descriptor satisfies every classification condition, otherwise the first violation.
std::optional<std::string> triple_violation(const QuadraticView& view, const TripleDescriptor& t);

/// Divisors of (q^n+1)(q-1), ascending.
std::vector<std::uint64_t> admissible_g0_list(const Params& params);

struct CoefficientFields {
  unsigned deg2 = 1;  // [F_p(G1) : F_p]
  unsigned deg3 = 1;  // [F_p(G0^(q^n+1)) : F_p]
  friend bool operator==(const CoefficientFields&, const CoefficientFields&) = default;
};

/// Throws std::invalid_argument when g0 is not admissible.
CoefficientFields coefficient_fields(const QuadraticView& view, std::uint64_t g0);
CoefficientFields coefficient_fields(const Params& params, std::uint64_t g0);

/// Every scalars-subspace of the span of `basis`, which must be linearly
/// independent over `scalars`. Ordered by dimension, then reduced echelon shape.
std::vector<Subspace> enumerate_subspaces(const Subfield& scalars, std::span<const FieldElement> basis);

/// Number of subspaces of an r-dimensional space over a field with Q elements (saturating).
unsigned __int128 count_subspaces(std::uint64_t Q, unsigned r);

std::vector<Subspace> enumerate_G2_spaces(const QuadraticView& view, std::uint64_t g0);

/// The full set W, codes ascending.
std::vector<FieldElement> W_of(const QuadraticView& view, std::span<const FieldElement> G2_basis);
/// F_p-basis of span(W), computed from basis pairs.
Subspace W_span(const QuadraticView& view, std::span<const FieldElement> G2_basis);

std::vector<Subspace> enumerate_G3_spaces(const QuadraticView& view, std::uint64_t g0, const Subspace& G2);

enum class TripleMode {
  witness,   // one descriptor per (g0, G2, G3)
  spectrum,  // one representative per (g0, #G2, #G3)
};

class SearchBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Witness mode enumerates everything; spectrum mode searches each
/// F_p(G1)-subspace lattice once and throws SearchBudgetExceeded when a
/// lattice has more than max_subspaces members.
std::vector<TripleDescriptor> realizable_triples(const QuadraticView& view, TripleMode mode,
                                                 std::uint64_t max_subspaces = 2'000'000);

struct Cardinalities {
  std::uint64_t g0;
  std::uint64_t size_G2;
  std::uint64_t size_G3;
  auto operator<=>(const Cardinalities&) const = default;
};

/// Distinct (g0, #G2, #G3) of realizable triples, ascending.
std::vector<Cardinalities> realizable_cardinalities(const Params& params, std::uint64_t max_subspaces = 2'000'000);

// ---------------------------------------------------------------- the correspondence

/// (H1, H2, H3) data of a subgroup H of A(P_inf): h1 = #phi(H), H2 = psi(ker phi), H3 = ker psi.
struct HermitianTriple {
  std::uint64_t h1 = 1;
  Subspace H2;
  Subspace H3;
  friend bool operator==(const HermitianTriple&, const HermitianTriple&) = default;
};

/// Throws ConsistencyError when ker-phi images are not F_p-spaces.
HermitianTriple hermitian_triple(const Params& params, const HermitianSubgroup& H);

struct SigmaPair {
  HermitianSubgroup H;
  HermitianTriple H_data;
  FieldElement M_generator;
  std::uint64_t M_order = 1;
};

/// True when M^m = phi(H) as subgroups of F_{q^2}^*.
bool sigma_condition(const Params& params, const SigmaPair& pair);

/// (pi(G), pi_d(G)). Throws std::invalid_argument when G is not closed.
SigmaPair xi(const ExplicitSubgroup& G);

/// {g : pi(g) in H, pi_d(g) in M}, filtered from the full group.
/// Throws std::invalid_argument when the Sigma condition fails.
ExplicitSubgroup xi_inverse(const Params& params, const SigmaPair& pair, std::span<const Aut> full_group);

/// (#pi_d(G), psi(ker phi), ker psi) of a subgroup.
TripleDescriptor extract_triple(const ExplicitSubgroup& G);

struct SubgroupWitness {
  std::vector<Aut> generators;
  TripleDescriptor triple;
  ExplicitSubgroup group;
};

/// Closure search: [d^m,0,0,d] with ord(d) = g0, lifts [1,b,c_b,1] of the G2
/// basis and [1,0,c,1] for the G3 basis, backtracking over the choices of c_b.
/// The descriptor's elements must lie in the ambient field.
/// Throws ConsistencyError when no choice closes up to the requested triple.
SubgroupWitness construct_witness(const Params& params, const TripleDescriptor& t, std::uint64_t max_order = 10000);

}  // namespace ggk
