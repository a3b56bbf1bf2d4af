#include <doctest.h>

#include <random>
#include <stdexcept>

#include "ggk/ffield.hpp"
#include "ggk/linalg.hpp"
#include "ggk/numtheory.hpp"

using namespace ggk;

namespace {

using Coeffs = std::vector<std::uint32_t>;

FieldElement random_element(const Field& f, std::mt19937_64& rng) {
  return f.element(std::uniform_int_distribution<std::uint64_t>(0, f.order() - 1)(rng));
}

FieldElement random_nonzero(const Field& f, std::mt19937_64& rng) {
  return f.element(std::uniform_int_distribution<std::uint64_t>(1, f.order() - 1)(rng));
}

}  // namespace

TEST_CASE("moduli are the smallest irreducibles") {
  CHECK(Field::get(2, 2).modulus() == Coeffs{1, 1, 1});
  CHECK(Field::get(2, 1).modulus() == Coeffs{0, 1});
  CHECK(Field::get(3, 2).modulus() == Coeffs{1, 0, 1});
  CHECK(Field::get(2, 3).modulus() == Coeffs{1, 0, 1, 1});
  CHECK(Field::get(2, 4).modulus() == Coeffs{1, 0, 0, 1, 1});
  CHECK(Field::get(5, 1).modulus() == Coeffs{0, 1});
  CHECK(Field::get(3, 2).descriptor() == "3^2:1,0,1");
}

TEST_CASE("fields are interned") {
  CHECK(&Field::get(2, 6) == &Field::get(2, 6));
  CHECK(&field_create(5, 3) == &Field::get(5, 3));
}

TEST_CASE("field_create rejects bad parameters") {
  CHECK_THROWS_AS(Field::get(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(Field::get(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(Field::get(2, 64), std::invalid_argument);
  CHECK_NOTHROW(Field::get(2, 63));
}

TEST_CASE("the modulus is irreducible for a spread of fields") {
  // A reducible modulus would give zero divisors; x^(p^k) = x checks the field size too.
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 6}, {3, 4}, {5, 3}, {7, 2}, {2, 13}, {3, 7}}) {
    const Field& f = Field::get(p, k);
    const FieldElement x = f.generator();
    CHECK(x.frobenius(k) == x);
    for (unsigned d = 1; d < k; ++d) {
      if (k % d == 0) CHECK(x.frobenius(d) != x);
    }
    CHECK(element_order(f.primitive_root()) == f.order() - 1);
  }
}

TEST_CASE("large fields without tables") {
  const Field& f = Field::get(2, 40);
  const FieldElement x = f.generator();
  CHECK(x.frobenius(40) == x);
  CHECK((x * x.inverse()).is_one());
  const Field& g = Field::get(3, 30);
  CHECK(g.generator().frobenius(30) == g.generator());
  CHECK((g.generator().pow(g.order() - 1)).is_one());
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(12345);
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 6}, {3, 4}, {5, 6}, {2, 24}, {7, 3}, {3, 21}}) {
    const Field& f = Field::get(p, k);
    for (int i = 0; i < 200; ++i) {
      const auto a = random_element(f, rng), b = random_element(f, rng), c = random_element(f, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a - a).is_zero());
      CHECK(a + f.zero() == a);
      CHECK(a * f.one() == a);
      const auto u = random_nonzero(f, rng);
      CHECK((u * u.inverse()).is_one());
      CHECK((a / u) * u == a);
      CHECK(a.pow(p) == a.frobenius());
    }
  }
}

TEST_CASE("coefficient round trips") {
  const Field& f = Field::get(3, 4);
  const Coeffs c{2, 0, 1, 1};
  const auto x = f.from_coeffs(c);
  CHECK(x.coeffs() == c);
  CHECK(x.to_string() == "(2,0,1,1)");
  CHECK(f.scalar(-1) == -f.one());
  CHECK(f.scalar(5) == f.scalar(2));
  for (std::uint64_t r = 0; r < f.order(); ++r) CHECK(f.lex_rank(f.code_at_lex_rank(r)) == r);
}

TEST_CASE("lex order compares the constant term first") {
  const Field& f = Field::get(3, 2);
  CHECK(lex_less(f.from_coeffs(Coeffs{0, 2}), f.from_coeffs(Coeffs{1, 0})));
  CHECK(lex_less(f.from_coeffs(Coeffs{1, 0}), f.from_coeffs(Coeffs{1, 1})));
  CHECK_FALSE(lex_less(f.one(), f.one()));
}

TEST_CASE("element_order") {
  const Field& f4 = Field::get(2, 2);
  CHECK(element_order(f4.one()) == 1);
  CHECK(element_order(f4.generator()) == 3);
  CHECK_THROWS_AS(element_order(f4.zero()), std::domain_error);
  const Field& f64 = Field::get(2, 6);
  for (const auto& x : f64.all_elements()) {
    if (!x.is_zero() && (x * x + x + f64.one()).is_zero()) CHECK(element_order(x) == 3);
  }
}

TEST_CASE("cyclic_subgroup_generator") {
  const Field& f4 = Field::get(2, 2);
  const auto g = cyclic_subgroup_generator(f4, 3);
  CHECK(g == f4.primitive_root());
  // smallest-lex of the two generators
  for (const auto& x : f4.all_elements()) {
    if (!x.is_zero() && element_order(x) == 3) CHECK_FALSE(lex_less(x, g));
  }
  CHECK_THROWS_AS(cyclic_subgroup_generator(f4, 2), std::invalid_argument);

  const Field& f64 = Field::get(2, 6);
  CHECK(cyclic_subgroup_generator(f64, 9) == f64.primitive_root().pow(7));
  CHECK(element_order(cyclic_subgroup_generator(f64, 9)) == 9);

  for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 12}, {3, 6}, {5, 4}}) {
    const Field& f = Field::get(p, k);
    for (auto t : divisors(f.order() - 1)) CHECK(element_order(cyclic_subgroup_generator(f, t)) == t);
  }
}

TEST_CASE("primitive root is the smallest-lex generator") {
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 4}, {3, 3}, {5, 2}, {7, 2}}) {
    const Field& f = Field::get(p, k);
    const auto g = f.primitive_root();
    for (const auto& x : f.all_elements()) {
      if (!x.is_zero() && lex_less(x, g)) CHECK(element_order(x) != f.order() - 1);
    }
  }
}

TEST_CASE("generated_subfield") {
  const Field& f16 = Field::get(2, 4);
  const std::vector<FieldElement> prime{f16.zero(), f16.one()};
  CHECK(generated_subfield(prime, f16) == 1);
  const auto z5 = cyclic_subgroup_generator(f16, 5);
  const auto z3 = cyclic_subgroup_generator(f16, 3);
  CHECK(generated_subfield(std::vector{z5}, f16) == 4);
  CHECK(generated_subfield(std::vector{z3}, f16) == 2);
  CHECK(generated_subfield(std::vector<FieldElement>{}, f16) == 1);

  // Frobenius membership agrees with the generated degree
  std::mt19937_64 rng(7);
  const Field& f = Field::get(3, 6);
  for (int i = 0; i < 100; ++i) {
    const auto x = random_element(f, rng);
    const unsigned d = element_degree(x);
    CHECK(x.frobenius(d) == x);
    for (unsigned e = 1; e < d; ++e) CHECK(x.frobenius(e) != x);
  }
}

TEST_CASE("subfield embeddings are homomorphisms") {
  std::mt19937_64 rng(99);
  const Field& f4 = Field::get(2, 2);
  const Field& f64 = Field::get(2, 6);
  const auto emb = make_embedding(f4, f64);
  CHECK(embed(f4.zero(), emb).is_zero());
  CHECK(embed(f4.one(), emb).is_one());
  const auto img = embed(f4.generator(), emb);
  CHECK(element_order(img) == 3);
  CHECK(img.pow(3).is_one());
  for (const auto& a : f4.all_elements()) {
    for (const auto& b : f4.all_elements()) {
      CHECK(embed(a + b, emb) == embed(a, emb) + embed(b, emb));
      CHECK(embed(a * b, emb) == embed(a, emb) * embed(b, emb));
    }
  }
  CHECK_THROWS_AS(make_embedding(Field::get(2, 4), f64), std::invalid_argument);

  const Field& src = Field::get(3, 2);
  const Field& dst = Field::get(3, 6);
  const auto e2 = make_embedding(src, dst);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_element(src, rng), b = random_element(src, rng);
    CHECK(embed(a * b, e2) == embed(a, e2) * embed(b, e2));
    CHECK(embed(a + b, e2) == embed(a, e2) + embed(b, e2));
    if (!a.is_zero()) CHECK(element_order(embed(a, e2)) == element_order(a));
  }
}

TEST_CASE("trace_zero_basis") {
  struct Case {
    std::uint64_t q, p;
    unsigned e;
  };
  for (auto [q, p, e] : std::vector<Case>{{2, 2, 1}, {4, 2, 2}, {3, 3, 1}, {9, 3, 2}, {5, 5, 1}, {8, 2, 3}}) {
    const Field& f = Field::get(p, 2 * e);
    const auto basis = trace_zero_basis(q, f);
    CHECK(basis.size() == e);
    const auto span = span_of(f, basis);
    CHECK(span.size() == q);
    std::uint64_t count = 0;
    for (const auto& c : f.all_elements()) {
      const bool zero = (c.pow(q) + c).is_zero();
      if (zero) ++count;
      CHECK(zero == span.contains(c));
    }
    CHECK(count == q);
    // an F_q-line: closed under F_q scalars
    const Subfield base(f, e);
    for (const auto& s : base.elements()) CHECK(span.contains(s * basis.front()));
  }
  CHECK(trace_zero_basis(2, Field::get(2, 2)) == std::vector{Field::get(2, 2).one()});
  CHECK_THROWS_AS(trace_zero_basis(4, Field::get(2, 2)), std::invalid_argument);

  // the copy of F_{q^2} inside a larger field
  const Field& amb = Field::get(3, 6);
  const Subfield quad(amb, 2);
  const auto b = trace_zero_basis(3, quad);
  REQUIRE(b.size() == 1);
  CHECK(quad.contains(b[0]));
  CHECK((b[0].pow(3) + b[0]).is_zero());
}

TEST_CASE("subfields") {
  const Field& f = Field::get(2, 6);
  const Subfield s(f, 2);
  CHECK(s.order() == 4);
  CHECK(s.elements().size() == 4);
  for (const auto& x : s.elements()) CHECK(s.contains(x));
  CHECK(element_order(s.primitive()) == 3);
  CHECK_THROWS_AS(Subfield(f, 4), std::invalid_argument);
}

TEST_CASE("FpSpan and kernels") {
  const Field& f = Field::get(3, 4);
  const auto x = f.generator();
  FpSpan s(f);
  CHECK(s.insert(f.one()));
  CHECK(s.insert(x));
  CHECK_FALSE(s.insert(f.one() + x + x));
  CHECK(s.dimension() == 2);
  CHECK(s.size() == 9);
  CHECK(s.elements().size() == 9);
  CHECK(canonical_basis(f, std::vector{x, f.one()}) == canonical_basis(f, std::vector{x + f.one(), x - f.one()}));

  // Frobenius minus identity on F_81 has kernel F_3
  const auto domain = Subfield(f, 4).basis();
  std::vector<FieldElement> images;
  for (const auto& u : domain) images.push_back(u.frobenius() - u);
  const auto ker = kernel(domain, images);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0].frobenius() == ker[0]);
  const auto pre = preimage(domain, images, images[1] + images[2]);
  REQUIRE(pre.has_value());
  CHECK(pre->frobenius() - *pre == images[1] + images[2]);
  CHECK_FALSE(preimage(domain, images, f.one()).has_value());
}
