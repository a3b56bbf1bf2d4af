#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ggk/classify.hpp"
#include "ggk/linalg.hpp"
#include "ggk/numtheory.hpp"

using namespace ggk;

namespace {

std::multiset<std::uint64_t> sizes(const std::vector<Subspace>& spaces, std::uint64_t p) {
  std::multiset<std::uint64_t> out;
  for (const auto& s : spaces) out.insert(*checked_pow(p, static_cast<unsigned>(s.size())));
  return out;
}

std::set<Cardinalities> size_set(const std::vector<TripleDescriptor>& ts) {
  std::set<Cardinalities> out;
  for (const auto& t : ts) out.insert({t.g0, t.size_G2, t.size_G3});
  return out;
}

}  // namespace

TEST_CASE("admissible g0") {
  CHECK(admissible_g0_list(make_params(2, 3)) == std::vector<std::uint64_t>{1, 3, 9});
  CHECK(admissible_g0_list(make_params(2, 5)) == std::vector<std::uint64_t>{1, 3, 11, 33});
  CHECK(admissible_g0_list(make_params(2, 1)) == std::vector<std::uint64_t>{1, 3});
}

TEST_CASE("coefficient fields") {
  CHECK(coefficient_fields(make_params(4, 3), 5) == CoefficientFields{4, 1});
  CHECK(coefficient_fields(make_params(2, 3), 9) == CoefficientFields{2, 1});
  CHECK(coefficient_fields(make_params(2, 3), 1) == CoefficientFields{1, 1});
  CHECK_THROWS_AS(coefficient_fields(make_params(2, 3), 2), std::invalid_argument);
  // standalone and ambient views agree
  for (auto [q, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{4, 3}, {3, 3}, {8, 3}, {9, 1}}) {
    const Params params = make_params(q, n);
    const auto amb = QuadraticView::in_ambient(params);
    for (auto g0 : admissible_g0_list(params)) {
      const auto cf = coefficient_fields(params, g0);
      CHECK(cf == coefficient_fields(amb, g0));
      CHECK(cf.deg2 == multiplicative_order(params.p, g0 / gcd(g0, params.m)));
      CHECK(params.e % cf.deg3 == 0);
      CHECK(cf.deg2 % cf.deg3 == 0);
    }
  }
}

TEST_CASE("subspace counts") {
  CHECK(count_subspaces(2, 2) == 5);
  CHECK(count_subspaces(2, 3) == 16);
  CHECK(count_subspaces(3, 2) == 6);
  CHECK(count_subspaces(5, 6) == 3583232);
  CHECK(count_subspaces(2, 0) == 1);
  const Field& f = Field::get(2, 4);
  const Subfield f2(f, 1);
  CHECK(enumerate_subspaces(f2, Subfield(f, 4).basis()).size() == 67);
  const Field& g = Field::get(3, 4);
  const Subfield f9(g, 2);
  const std::vector<FieldElement> basis{g.one(), g.generator()};
  CHECK(enumerate_subspaces(f9, basis).size() == count_subspaces(9, 2));
}

TEST_CASE("G2 spaces") {
  const auto v23 = QuadraticView::standalone(make_params(2, 3));
  const auto s = enumerate_G2_spaces(v23, 1);
  CHECK(s.size() == 5);
  CHECK(sizes(s, 2) == std::multiset<std::uint64_t>{1, 2, 2, 2, 4});
  CHECK(sizes(enumerate_G2_spaces(v23, 9), 2) == std::multiset<std::uint64_t>{1, 4});
  const auto v43 = QuadraticView::standalone(make_params(4, 3));
  CHECK(sizes(enumerate_G2_spaces(v43, 5), 2) == std::multiset<std::uint64_t>{1, 16});
  // every space is closed under its coefficient field and distinct
  const auto v33 = QuadraticView::in_ambient(make_params(3, 3));
  for (auto g0 : admissible_g0_list(v33.params())) {
    const auto spaces = enumerate_G2_spaces(v33, g0);
    std::set<std::vector<std::uint64_t>> seen;
    const Subfield K(v33.host(), coefficient_fields(v33, g0).deg2);
    for (const auto& sp : spaces) {
      std::vector<std::uint64_t> codes;
      for (const auto& x : sp) codes.push_back(x.code());
      CHECK(seen.insert(codes).second);
      const auto span = span_of(v33.host(), sp);
      for (const auto& b : sp) {
        CHECK(v33.quadratic().contains(b));
        CHECK(span.contains(K.primitive() * b));
      }
    }
  }
}

TEST_CASE("W") {
  const auto v2 = QuadraticView::standalone(make_params(2, 3));
  const Field& f4 = v2.host();
  CHECK(W_of(v2, {}) == std::vector<FieldElement>{f4.zero()});
  const auto full = Subfield(f4, 2).basis();
  CHECK(W_of(v2, full) == std::vector<FieldElement>{f4.zero(), f4.one()});
  CHECK(W_span(v2, full) == std::vector<FieldElement>{f4.one()});

  const auto v3 = QuadraticView::standalone(make_params(3, 1));
  const auto w = W_of(v3, Subfield(v3.host(), 2).basis());
  CHECK(w.size() == 3);
  for (const auto& c : w) CHECK((c.pow(3) + c).is_zero());

  // the span computed from basis pairs equals the span of the full set
  for (auto [q, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{4, 3}, {9, 1}, {8, 3}, {5, 3}}) {
    const auto view = QuadraticView::standalone(make_params(q, n));
    for (auto g0 : {std::uint64_t{1}}) {
      for (const auto& g2 : enumerate_G2_spaces(view, g0)) {
        if (g2.size() > 4) continue;
        const auto all = W_of(view, g2);
        CHECK(canonical_basis(view.host(), all) == W_span(view, g2));
        for (const auto& c : all) CHECK((c.pow(q) + c).is_zero());
      }
    }
  }
}

TEST_CASE("G3 spaces") {
  const auto v43 = QuadraticView::standalone(make_params(4, 3));
  CHECK(sizes(enumerate_G3_spaces(v43, 5, {}), 2) == std::multiset<std::uint64_t>{1, 2, 2, 2, 4});
  const auto v23 = QuadraticView::standalone(make_params(2, 3));
  const auto full = Subfield(v23.host(), 2).basis();
  CHECK(sizes(enumerate_G3_spaces(v23, 1, canonical_basis(v23.host(), full)), 2) == std::multiset<std::uint64_t>{2});
  const auto g3 = enumerate_G3_spaces(v23, 9, {});
  CHECK(std::count_if(g3.begin(), g3.end(), [](const Subspace& s) { return s.empty(); }) == 1);
}

TEST_CASE("realizable triples at q=2, n=3") {
  const Params params = make_params(2, 3);
  const auto view = QuadraticView::standalone(params);
  const auto witness = realizable_triples(view, TripleMode::witness);
  const std::set<Cardinalities> expected{{1, 1, 1}, {1, 1, 2}, {1, 2, 2}, {1, 4, 2}, {3, 1, 1}, {3, 1, 2},
                                         {3, 2, 2}, {3, 4, 2}, {9, 1, 1}, {9, 1, 2}, {9, 4, 2}};
  CHECK(size_set(witness) == expected);
  for (const auto& t : witness) CHECK_FALSE(triple_violation(view, t).has_value());
  const auto spectrum = realizable_triples(view, TripleMode::spectrum);
  CHECK(size_set(spectrum) == expected);
  CHECK(spectrum.size() == expected.size());
}

TEST_CASE("spectrum mode agrees with full enumeration") {
  for (auto [q, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {2, 5}, {3, 1}, {3, 3}, {4, 1}, {4, 3}, {5, 1}, {8, 1}, {9, 1}, {2, 7}}) {
    const auto view = QuadraticView::standalone(make_params(q, n));
    const auto witness = realizable_triples(view, TripleMode::witness);
    const auto spectrum = realizable_triples(view, TripleMode::spectrum);
    CHECK(size_set(witness) == size_set(spectrum));
    for (const auto& t : spectrum) CHECK_FALSE(triple_violation(view, t).has_value());
  }
}

TEST_CASE("the genus-18 triple at q=4, n=3") {
  const auto cards = realizable_cardinalities(make_params(4, 3));
  CHECK(std::find(cards.begin(), cards.end(), Cardinalities{5, 1, 4}) != cards.end());
}

TEST_CASE("search budget") {
  CHECK_THROWS_AS(realizable_cardinalities(make_params(64, 1)), SearchBudgetExceeded);
  CHECK_THROWS_AS(realizable_cardinalities(make_params(4, 3), 3), SearchBudgetExceeded);
}

TEST_CASE("triple violations are reported") {
  const Params params = make_params(2, 3);
  const auto view = QuadraticView::standalone(params);
  const Field& f = view.host();
  // G2 = F_4 forces W = F_2 into G3
  const auto bad = make_triple(params, 1, Subfield(f, 2).basis(), {});
  CHECK(triple_violation(view, bad).has_value());
  const auto good = make_triple(params, 1, Subfield(f, 2).basis(), std::vector{f.one()});
  CHECK_FALSE(triple_violation(view, good).has_value());
  CHECK(good.size_G == 8);
  CHECK(good.g_w == 8);
  // g0 = 9 needs an F_4-space
  CHECK(triple_violation(view, make_triple(params, 9, std::vector{f.one()}, {})).has_value());
  CHECK(triple_violation(view, make_triple(params, 2, {}, {})).has_value());
  // nonzero trace
  CHECK(triple_violation(view, make_triple(params, 1, {}, std::vector{f.generator()})).has_value());
}

TEST_CASE("correspondence at q=2, n=3") {
  const Params params = make_params(2, 3);
  const Field& f = params.ambient();
  const auto full = enumerate_full_group(params);
  const auto z = cyclic_subgroup_generator(f, 3);

  const ExplicitSubgroup trivial{params, {identity(params)}};
  const SigmaPair tp = xi(trivial);
  CHECK(tp.H.size() == 1);
  CHECK(tp.M_order == 1);
  CHECK(xi_inverse(params, tp, full).elements == trivial.elements);

  const ExplicitSubgroup cyc = generate_subgroup(params, std::vector{Aut{z.pow(3), f.zero(), f.zero(), z}});
  CHECK(cyc.order() == 3);
  const SigmaPair cp = xi(cyc);
  CHECK(cp.H.size() == 1);
  CHECK(cp.M_order == 3);
  CHECK(sigma_condition(params, cp));
  CHECK(xi_inverse(params, cp, full).elements == cyc.elements);
  const auto ct = extract_triple(cyc);
  CHECK(ct.g0 == 3);
  CHECK(ct.G2_basis.empty());
  CHECK(ct.G3_basis.empty());

  const ExplicitSubgroup all{params, full};
  const SigmaPair fp = xi(all);
  CHECK(fp.H.size() == 24);
  CHECK(fp.M_order == 9);
  CHECK(xi_inverse(params, fp, full).order() == 72);
  const auto ft = extract_triple(all);
  CHECK(ft.g0 == 9);
  CHECK(ft.size_G2 == 4);
  CHECK(ft.size_G3 == 2);

  // H trivial with M of order 9 breaks the Sigma condition (M^m has order 3)
  SigmaPair broken = tp;
  broken.M_order = 9;
  broken.M_generator = cyclic_subgroup_generator(f, 9);
  CHECK_FALSE(sigma_condition(params, broken));
  CHECK_THROWS_AS(xi_inverse(params, broken, full), std::invalid_argument);

  const ExplicitSubgroup not_closed{params, {identity(params), full[5]}};
  CHECK_THROWS_AS(xi(not_closed), std::invalid_argument);
}

TEST_CASE("witness construction") {
  const Params params = make_params(2, 3);
  const Field& f = params.ambient();
  const auto trivial = construct_witness(params, make_triple(params, 1, {}, {}));
  CHECK(trivial.group.order() == 1);
  const auto cyc = construct_witness(params, make_triple(params, 3, {}, {}));
  CHECK(cyc.group.order() == 3);
  const auto two = construct_witness(params, make_triple(params, 1, {}, std::vector{f.one()}));
  CHECK(two.group.elements == std::vector<Aut>{identity(params), Aut{f.one(), f.zero(), f.one(), f.one()}});

  // every realizable triple in the ambient field has a witness
  for (auto [q, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {2, 5}, {3, 1}}) {
    const Params p = make_params(q, n);
    for (const auto& t : realizable_triples(QuadraticView::in_ambient(p), TripleMode::witness)) {
      const auto w = construct_witness(p, t);
      CHECK(w.group.order() == t.size_G);
      CHECK(extract_triple(w.group) == t);
    }
  }
  const auto standalone = realizable_triples(QuadraticView::standalone(params), TripleMode::witness);
  const auto foreign = std::find_if(standalone.begin(), standalone.end(), [](const auto& t) { return !t.G2_basis.empty(); });
  REQUIRE(foreign != standalone.end());
  CHECK_THROWS_AS(construct_witness(params, *foreign), std::invalid_argument);
}
