#include "ggk/classify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_set>
#include <utility>

#include "ggk/linalg.hpp"
#include "ggk/numtheory.hpp"

namespace ggk {

// ---------------------------------------------------------------- QuadraticView

QuadraticView::QuadraticView(const Params& params, const Field& host)
    : params_(params),
      quad_(host, 2 * params.e),
      base_(host, params.e),
      trace_zero_(trace_zero_basis(params.q, quad_)) {}

QuadraticView QuadraticView::standalone(const Params& params) { return {params, params.quadratic_field()}; }

QuadraticView QuadraticView::in_ambient(const Params& params) { return {params, params.ambient()}; }

// ---------------------------------------------------------------- descriptors

namespace {

std::uint64_t span_size(const Params& params, std::size_t dim) {
  return *checked_pow(params.p, static_cast<unsigned>(dim));
}

Subspace canonical(std::span<const FieldElement> xs) {
  if (xs.empty()) return {};
  return canonical_basis(xs.front().field(), xs);
}

std::vector<std::uint64_t> codes(const Subspace& s) {
  std::vector<std::uint64_t> out;
  for (const auto& x : s) out.push_back(x.code());
  return out;
}

std::string basis_string(const Subspace& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i].to_string();
  return out + "}";
}

// Multiplies every vector by every element of an F_p-basis of the scalar field.
std::vector<FieldElement> scalar_closure(std::span<const FieldElement> rows, const Subfield& scalars) {
  std::vector<FieldElement> out;
  const auto basis = scalars.basis();
  for (const auto& r : rows)
    for (const auto& w : basis) out.push_back(w * r);
  return out;
}

}  // namespace

TripleDescriptor make_triple(const Params& params, std::uint64_t g0, std::span<const FieldElement> G2_span,
                             std::span<const FieldElement> G3_span) {
  TripleDescriptor t;
  t.g0 = g0;
  t.G2_basis = canonical(G2_span);
  t.G3_basis = canonical(G3_span);
  t.delta1 = gcd(g0, params.m);
  t.delta2 = gcd(g0, params.qn_plus_1);
  t.g1 = g0 / t.delta1;
  t.size_G2 = span_size(params, t.G2_basis.size());
  t.size_G3 = span_size(params, t.G3_basis.size());
  t.g_w = t.size_G2 * t.size_G3;
  t.size_G = g0 * t.g_w;
  return t;
}

TripleKey key_of(const TripleDescriptor& t) { return {t.g0, codes(t.G2_basis), codes(t.G3_basis)}; }

std::string to_string(const TripleDescriptor& t) {
  std::ostringstream os;
  os << "g0=" << t.g0 << ",G2=" << basis_string(t.G2_basis) << ",G3=" << basis_string(t.G3_basis);
  return os.str();
}

std::vector<std::uint64_t> admissible_g0_list(const Params& params) { return divisors(params.mu_order); }

CoefficientFields coefficient_fields(const QuadraticView& view, std::uint64_t g0) {
  const Params& params = view.params();
  if (g0 == 0 || params.mu_order % g0 != 0) {
    throw std::invalid_argument("g0 = " + std::to_string(g0) + " does not divide " + std::to_string(params.mu_order));
  }
  const std::uint64_t g1 = g0 / gcd(g0, params.m);
  const std::uint64_t s3 = g0 / gcd(g0, params.qn_plus_1);
  const FieldElement gen1 = cyclic_subgroup_generator(view.host(), g1);
  const FieldElement gen3 = cyclic_subgroup_generator(view.host(), s3);
  return {generated_subfield(std::span(&gen1, 1), view.host()), generated_subfield(std::span(&gen3, 1), view.host())};
}

CoefficientFields coefficient_fields(const Params& params, std::uint64_t g0) {
  return coefficient_fields(QuadraticView::standalone(params), g0);
}

std::optional<std::string> triple_violation(const QuadraticView& view, const TripleDescriptor& t) {
  const Params& params = view.params();
  if (t.g0 == 0 || params.mu_order % t.g0 != 0) return "g0 does not divide (q^n+1)(q-1)";
  const FpSpan g2 = span_of(view.host(), t.G2_basis);
  const FpSpan g3 = span_of(view.host(), t.G3_basis);
  const FieldElement gen1 = cyclic_subgroup_generator(view.host(), t.g0 / gcd(t.g0, params.m));
  const FieldElement gen3 = cyclic_subgroup_generator(view.host(), t.g0 / gcd(t.g0, params.qn_plus_1));
  for (const auto& b : t.G2_basis) {
    if (!view.quadratic().contains(b)) return "G2 element " + b.to_string() + " outside F_{q^2}";
    if (!g2.contains(gen1 * b)) return "G2 not closed under F_p(G1)";
  }
  for (const auto& c : t.G3_basis) {
    if (!(c.pow(params.q) + c).is_zero()) return "G3 element " + c.to_string() + " has nonzero trace";
    if (!g3.contains(gen3 * c)) return "G3 not closed under F_p(G0^(q^n+1))";
  }
  const auto w = W_span(view, t.G2_basis);
  if (!g3.contains_all(w)) return "G3 does not contain W";
  if (t.size_G2 != g2.size() || t.size_G3 != g3.size()) return "stored cardinalities disagree with bases";
  return std::nullopt;
}

// ---------------------------------------------------------------- subspace lattices

namespace {

// Calls visit(rows) for every scalars-subspace of span(basis), rows being a
// scalars-basis in reduced echelon form relative to `basis`.
template <typename Visit>
void for_each_subspace(const Subfield& scalars, std::span<const FieldElement> basis, Visit&& visit) {
  const auto values = scalars.elements();
  const std::size_t D = basis.size();
  const std::size_t Q = values.size();
  for (std::size_t k = 0; k <= D; ++k) {
    std::vector<std::size_t> pivots(k);
    for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
    while (true) {
      // free slots (row, column) to the right of each pivot, off the pivot columns
      std::vector<std::pair<std::size_t, std::size_t>> slots;
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = pivots[r] + 1; c < D; ++c) {
          if (!std::binary_search(pivots.begin(), pivots.end(), c)) slots.emplace_back(r, c);
        }
      }
      std::vector<std::size_t> choice(slots.size(), 0);
      while (true) {
        std::vector<FieldElement> rows;
        rows.reserve(k);
        for (std::size_t r = 0; r < k; ++r) rows.push_back(basis[pivots[r]]);
        for (std::size_t s = 0; s < slots.size(); ++s) {
          if (choice[s] != 0) rows[slots[s].first] = rows[slots[s].first] + values[choice[s]] * basis[slots[s].second];
        }
        visit(std::as_const(rows));
        std::size_t s = slots.size();
        bool done = true;
        while (s > 0) {
          --s;
          if (++choice[s] < Q) {
            done = false;
            break;
          }
          choice[s] = 0;
        }
        if (done) break;
      }
      // next pivot combination
      std::size_t i = k;
      bool advanced = false;
      while (i > 0) {
        --i;
        if (pivots[i] < D - k + i) {
          ++pivots[i];
          for (std::size_t j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
  }
}

// K-basis gamma^0, ..., gamma^(D-1) of F_{q^2}, gamma a primitive element.
std::vector<FieldElement> quadratic_basis_over(const QuadraticView& view, unsigned deg) {
  const unsigned D = 2 * view.params().e / deg;
  std::vector<FieldElement> out;
  FieldElement x = view.host().one();
  for (unsigned i = 0; i < D; ++i) {
    out.push_back(x);
    x = x * view.quadratic().primitive();
  }
  return out;
}

// K3-basis theta * delta^i of the trace-zero line, delta primitive in F_q.
std::vector<FieldElement> trace_zero_basis_over(const QuadraticView& view, unsigned deg) {
  const unsigned D = view.params().e / deg;
  std::vector<FieldElement> out;
  FieldElement x = view.trace_zero().front();
  for (unsigned i = 0; i < D; ++i) {
    out.push_back(x);
    x = x * view.base().primitive();
  }
  return out;
}

FpSpan closure_span(const Field& host, std::span<const FieldElement> xs, const Subfield& scalars) {
  return span_of(host, scalar_closure(xs, scalars));
}

}  // namespace

unsigned __int128 count_subspaces(std::uint64_t Q, unsigned r) {
  using u128 = unsigned __int128;
  constexpr u128 cap = static_cast<u128>(1) << 126;
  auto sat_add = [](u128 a, u128 b) { return a > cap - b ? cap : a + b; };
  auto sat_mul = [](u128 a, u128 b) { return (b != 0 && a > cap / b) ? cap : a * b; };
  // row[k] = Gaussian binomial [i, k]_Q
  std::vector<u128> row{1};
  for (unsigned i = 1; i <= r; ++i) {
    std::vector<u128> next(i + 1, 1);
    u128 qk = 1;
    for (unsigned k = 1; k < i; ++k) {
      qk = sat_mul(qk, Q);
      next[k] = sat_add(row[k - 1], sat_mul(qk, row[k]));
    }
    row = std::move(next);
  }
  u128 total = 0;
  for (u128 v : row) total = sat_add(total, v);
  return total;
}

std::vector<Subspace> enumerate_subspaces(const Subfield& scalars, std::span<const FieldElement> basis) {
  std::vector<Subspace> out;
  for_each_subspace(scalars, basis, [&](const std::vector<FieldElement>& rows) {
    out.push_back(canonical(scalar_closure(rows, scalars)));
  });
  return out;
}

std::vector<Subspace> enumerate_G2_spaces(const QuadraticView& view, std::uint64_t g0) {
  const CoefficientFields cf = coefficient_fields(view, g0);
  const Subfield scalars(view.host(), cf.deg2);
  const auto basis = quadratic_basis_over(view, cf.deg2);
  return enumerate_subspaces(scalars, basis);
}

std::vector<FieldElement> W_of(const QuadraticView& view, std::span<const FieldElement> G2_basis) {
  const std::uint64_t q = view.params().q;
  const auto members = span_of(view.host(), G2_basis).elements();
  std::unordered_set<std::uint64_t> seen;
  std::vector<FieldElement> out;
  auto add = [&](const FieldElement& w) {
    if (seen.insert(w.code()).second) out.push_back(w);
  };
  if (view.params().p == 2) {
    for (const auto& b : members) add(b.pow(q + 1));
  } else {
    std::vector<FieldElement> frob;
    for (const auto& b : members) frob.push_back(b.pow(q));
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = 0; j < members.size(); ++j) add(members[i] * frob[j] - members[j] * frob[i]);
  }
  std::sort(out.begin(), out.end(), [](const FieldElement& a, const FieldElement& b) { return a.code() < b.code(); });
  return out;
}

Subspace W_span(const QuadraticView& view, std::span<const FieldElement> G2_basis) {
  const std::uint64_t q = view.params().q;
  FpSpan s(view.host());
  std::vector<FieldElement> frob;
  for (const auto& b : G2_basis) frob.push_back(b.pow(q));
  for (std::size_t i = 0; i < G2_basis.size(); ++i) {
    if (view.params().p == 2) s.insert(G2_basis[i] * frob[i]);
    for (std::size_t j = i + 1; j < G2_basis.size(); ++j) {
      // p = 2: polarization b_i b_j^q + b_j b_i^q of the norm
      s.insert(G2_basis[i] * frob[j] - G2_basis[j] * frob[i]);
    }
  }
  return s.basis();
}

std::vector<Subspace> enumerate_G3_spaces(const QuadraticView& view, std::uint64_t g0, const Subspace& G2) {
  const CoefficientFields cf = coefficient_fields(view, g0);
  const Subfield scalars(view.host(), cf.deg3);
  const auto required = closure_span(view.host(), W_span(view, G2), scalars).basis();
  std::vector<Subspace> out;
  for (auto& s : enumerate_subspaces(scalars, trace_zero_basis_over(view, cf.deg3))) {
    if (span_of(view.host(), s).contains_all(required)) out.push_back(std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------- realizable triples

namespace {

struct LatticeMinimum {
  std::size_t w = SIZE_MAX;  // F_{deg3}-dimension of the F_{deg3}-span of W
  Subspace G2;
};

std::vector<TripleDescriptor> spectrum_triples(const QuadraticView& view, std::uint64_t max_subspaces) {
  const Params& params = view.params();
  const auto g0s = admissible_g0_list(params);
  std::map<unsigned, std::set<unsigned>> deg3_by_deg2;
  std::vector<CoefficientFields> fields;
  for (std::uint64_t g0 : g0s) {
    fields.push_back(coefficient_fields(view, g0));
    deg3_by_deg2[fields.back().deg2].insert(fields.back().deg3);
  }

  // (deg2, K2-dimension of G2, deg3) -> minimal W dimension and a G2 attaining it
  std::map<std::tuple<unsigned, std::size_t, unsigned>, LatticeMinimum> minima;
  for (const auto& [deg2, deg3s] : deg3_by_deg2) {
    const auto Q = *checked_pow(params.p, deg2);
    const unsigned D = 2 * params.e / deg2;
    if (count_subspaces(Q, D) > max_subspaces) {
      throw SearchBudgetExceeded("subspace lattice of F_{" + std::to_string(params.q) + "^2} over F_" +
                                 std::to_string(Q) + " exceeds " + std::to_string(max_subspaces) + " subspaces");
    }
    const Subfield K2(view.host(), deg2);
    std::vector<Subfield> K3s;
    for (unsigned d3 : deg3s) K3s.emplace_back(view.host(), d3);
    const auto basis = quadratic_basis_over(view, deg2);
    for_each_subspace(K2, basis, [&](const std::vector<FieldElement>& rows) {
      const auto g2 = scalar_closure(rows, K2);
      const auto w = W_span(view, g2);
      for (const auto& K3 : K3s) {
        const std::size_t dim = closure_span(view.host(), w, K3).dimension() / K3.degree();
        auto& slot = minima[{deg2, rows.size(), K3.degree()}];
        if (dim < slot.w) {
          slot.w = dim;
          slot.G2 = canonical(g2);
        }
      }
    });
  }

  std::vector<TripleDescriptor> out;
  for (std::size_t i = 0; i < g0s.size(); ++i) {
    const auto [deg2, deg3] = fields[i];
    const Subfield K3(view.host(), deg3);
    const auto t_basis = trace_zero_basis_over(view, deg3);
    const unsigned D3 = params.e / deg3;
    for (std::size_t k = 0; k <= 2 * params.e / deg2; ++k) {
      const LatticeMinimum& best = minima.at({deg2, k, deg3});
      for (std::size_t j = best.w; j <= D3; ++j) {
        FpSpan g3 = closure_span(view.host(), W_span(view, best.G2), K3);
        for (const auto& t : t_basis) {
          if (g3.dimension() >= j * deg3) break;
          if (g3.contains(t)) continue;
          for (const auto& x : scalar_closure(std::span(&t, 1), K3)) g3.insert(x);
        }
        const auto g3_basis = g3.basis();
        out.push_back(make_triple(params, g0s[i], best.G2, g3_basis));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const TripleDescriptor& a, const TripleDescriptor& b) {
    return std::tie(a.g0, a.size_G2, a.size_G3) < std::tie(b.g0, b.size_G2, b.size_G3);
  });
  return out;
}

}  // namespace

std::vector<TripleDescriptor> realizable_triples(const QuadraticView& view, TripleMode mode,
                                                 std::uint64_t max_subspaces) {
  if (mode == TripleMode::spectrum) return spectrum_triples(view, max_subspaces);
  const Params& params = view.params();
  std::vector<TripleDescriptor> out;
  for (std::uint64_t g0 : admissible_g0_list(params)) {
    for (const auto& g2 : enumerate_G2_spaces(view, g0)) {
      for (const auto& g3 : enumerate_G3_spaces(view, g0, g2)) out.push_back(make_triple(params, g0, g2, g3));
    }
  }
  return out;
}

std::vector<Cardinalities> realizable_cardinalities(const Params& params, std::uint64_t max_subspaces) {
  std::vector<Cardinalities> out;
  for (const auto& t : realizable_triples(QuadraticView::standalone(params), TripleMode::spectrum, max_subspaces)) {
    out.push_back({t.g0, t.size_G2, t.size_G3});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------- the correspondence

namespace {

Subspace checked_space(const std::vector<FieldElement>& set, const char* what) {
  if (set.empty()) return {};
  const FpSpan s = span_of(set.front().field(), set);
  if (s.size() != set.size()) {
    throw ConsistencyError(std::string(what) + " is not an F_p-vector space");
  }
  return s.basis();
}

std::vector<FieldElement> distinct(std::vector<FieldElement> xs) {
  std::sort(xs.begin(), xs.end(), [](const FieldElement& a, const FieldElement& b) { return a.code() < b.code(); });
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace

HermitianTriple hermitian_triple(const Params& params, const HermitianSubgroup& H) {
  (void)params;
  std::vector<FieldElement> as, bs, cs;
  for (const auto& h : H) {
    as.push_back(h.a);
    if (h.a.is_one()) {
      bs.push_back(h.b);
      if (h.b.is_zero()) cs.push_back(h.c);
    }
  }
  HermitianTriple t;
  t.h1 = distinct(as).size();
  t.H2 = checked_space(distinct(bs), "psi(ker phi)");
  t.H3 = checked_space(distinct(cs), "ker psi");
  return t;
}

bool sigma_condition(const Params& params, const SigmaPair& pair) {
  std::vector<FieldElement> phi;
  for (const auto& h : pair.H) phi.push_back(h.a);
  phi = distinct(std::move(phi));
  std::vector<FieldElement> Mm;
  const FieldElement gen = pair.M_generator.pow(params.m);
  FieldElement x = gen;
  for (std::uint64_t i = 0; i < pair.M_order; ++i) {
    Mm.push_back(x);
    x = x * gen;
  }
  return distinct(std::move(Mm)) == phi;
}

SigmaPair xi(const ExplicitSubgroup& G) {
  if (!is_closed(G)) throw std::invalid_argument("xi: the element list is not a subgroup");
  const Params& params = G.params;
  SigmaPair pair;
  pair.H = project(G);
  pair.H_data = hermitian_triple(params, pair.H);
  std::vector<FieldElement> ds;
  for (const auto& g : G.elements) ds.push_back(g.d);
  pair.M_order = distinct(std::move(ds)).size();
  pair.M_generator = cyclic_subgroup_generator(params.ambient(), pair.M_order);
  return pair;
}

ExplicitSubgroup xi_inverse(const Params& params, const SigmaPair& pair, std::span<const Aut> full_group) {
  if (!sigma_condition(params, pair)) throw std::invalid_argument("xi_inverse: M^m differs from phi(H)");
  std::unordered_set<HermitianAut, HermitianAutHash> H(pair.H.begin(), pair.H.end());
  std::unordered_set<std::uint64_t> M;
  FieldElement x = pair.M_generator;
  for (std::uint64_t i = 0; i < pair.M_order; ++i) {
    M.insert(x.code());
    x = x * pair.M_generator;
  }
  ExplicitSubgroup G{params, {}};
  for (const auto& g : full_group) {
    if (H.count(pi(g)) != 0 && M.count(g.d.code()) != 0) G.elements.push_back(g);
  }
  std::sort(G.elements.begin(), G.elements.end(), aut_less);
  return G;
}

TripleDescriptor extract_triple(const ExplicitSubgroup& G) {
  std::vector<FieldElement> ds;
  for (const auto& g : G.elements) ds.push_back(g.d);
  const std::uint64_t g0 = distinct(std::move(ds)).size();
  const HermitianTriple h = hermitian_triple(G.params, project(G));
  return make_triple(G.params, g0, h.H2, h.H3);
}

SubgroupWitness construct_witness(const Params& params, const TripleDescriptor& t, std::uint64_t max_order) {
  const Field& f = params.ambient();
  for (const auto* basis : {&t.G2_basis, &t.G3_basis}) {
    for (const auto& x : *basis) {
      if (&x.field() != &f) throw std::invalid_argument("construct_witness: triple is not over the ambient field");
    }
  }
  if (t.size_G > max_order) {
    throw std::length_error("construct_witness: #G = " + std::to_string(t.size_G) + " exceeds " +
                            std::to_string(max_order));
  }
  const FieldElement d = cyclic_subgroup_generator(f, t.g0);
  std::vector<Aut> fixed{{d.pow(params.m), f.zero(), f.zero(), d}};
  for (const auto& c : t.G3_basis) fixed.push_back({f.one(), f.zero(), c, f.one()});

  std::vector<std::vector<FieldElement>> lifts;
  for (const auto& b : t.G2_basis) lifts.push_back(solve_trace_equation(params, b.pow(params.q + 1)));

  std::vector<std::size_t> choice(lifts.size(), 0);
  while (true) {
    std::vector<Aut> gens = fixed;
    for (std::size_t i = 0; i < lifts.size(); ++i) gens.push_back({f.one(), t.G2_basis[i], lifts[i][choice[i]], f.one()});
    try {
      ExplicitSubgroup G = generate_subgroup(params, gens, t.size_G);
      if (G.order() == t.size_G && extract_triple(G) == t) return {std::move(gens), t, std::move(G)};
    } catch (const std::length_error&) {
      // this choice of lifts generates too much
    }
    std::size_t i = lifts.size();
    bool done = true;
    while (i > 0) {
      --i;
      if (++choice[i] < lifts[i].size()) {
        done = false;
        break;
      }
      choice[i] = 0;
    }
    if (done) break;
  }
  throw ConsistencyError("construct_witness: no subgroup realizes " + to_string(t));
}

}  // namespace ggk
