#include "ggk/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "ggk/classify.hpp"
#include "ggk/errors.hpp"
#include "ggk/genus.hpp"
#include "ggk/numtheory.hpp"

namespace ggk {

// ---------------------------------------------------------------- Cayley tables

CayleyTable::CayleyTable(std::size_t size, std::vector<std::uint32_t> products, std::uint32_t identity)
    : size_(size), products_(std::move(products)), inverses_(size), identity_(identity) {
  if (products_.size() != size * size) throw std::invalid_argument("CayleyTable: table has the wrong shape");
  for (std::uint32_t x = 0; x < size; ++x) {
    for (std::uint32_t y = 0; y < size; ++y) {
      if (mul(x, y) == identity) {
        inverses_[x] = y;
        break;
      }
    }
  }
}

std::vector<std::uint32_t> CayleyTable::closure(const std::vector<std::uint32_t>& gens) const {
  std::vector<char> seen(size_, 0);
  std::vector<std::uint32_t> out{identity_};
  seen[identity_] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::uint32_t s : gens) {
      const std::uint32_t next = mul(out[i], s);
      if (!seen[next]) {
        seen[next] = 1;
        out.push_back(next);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool CayleyTable::is_subgroup(const std::vector<std::uint32_t>& sorted) const {
  std::vector<char> member(size_, 0);
  for (std::uint32_t x : sorted) member[x] = 1;
  if (!member[identity_]) return false;
  for (std::uint32_t x : sorted) {
    if (!member[inverse(x)]) return false;
    for (std::uint32_t y : sorted) {
      if (!member[mul(x, y)]) return false;
    }
  }
  return true;
}

namespace {

template <typename T, typename Hash, typename Compose>
CayleyTable build_table(const std::vector<T>& elements, const T& id, Compose&& compose) {
  std::unordered_map<T, std::uint32_t, Hash> index;
  for (std::uint32_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);
  const std::size_t n = elements.size();
  std::vector<std::uint32_t> products(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto it = index.find(compose(elements[x], elements[y]));
      if (it == index.end()) throw ConsistencyError("group enumeration is not closed under composition");
      products[x * n + y] = it->second;
    }
  }
  return {n, std::move(products), index.at(id)};
}

}  // namespace

ExplicitSubgroup FullGroup::subgroup(const std::vector<std::uint32_t>& indices) const {
  ExplicitSubgroup G{params, {}};
  G.elements.reserve(indices.size());
  for (std::uint32_t i : indices) G.elements.push_back(elements[i]);
  return G;
}

FullGroup build_full_group(const Params& params, std::uint64_t max_order) {
  auto elements = enumerate_full_group(params, max_order);
  CayleyTable table = build_table<Aut, AutHash>(elements, identity(params),
                                                [&](const Aut& x, const Aut& y) { return compose(params, x, y); });
  return {params, std::move(elements), std::move(table)};
}

CayleyTable hermitian_table(const Params& params, std::uint64_t max_order) {
  const auto elements = enumerate_hermitian_group(params, max_order);
  return build_table<HermitianAut, HermitianAutHash>(
      elements, hermitian_identity(params),
      [&](const HermitianAut& x, const HermitianAut& y) { return compose(params, x, y); });
}

// ---------------------------------------------------------------- subgroup enumeration

namespace {

struct IndexListHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::size_t h = v.size();
    for (std::uint32_t x : v) h ^= std::hash<std::uint32_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6U) + (h >> 2U);
    return h;
  }
};

struct SubgroupStore {
  std::vector<std::vector<std::uint32_t>> members;
  std::vector<std::vector<std::uint32_t>> generators;
  std::unordered_set<std::vector<std::uint32_t>, IndexListHash> seen;

  void add(std::vector<std::uint32_t> elements, std::vector<std::uint32_t> gens) {
    if (seen.insert(elements).second) {
      members.push_back(std::move(elements));
      generators.push_back(std::move(gens));
    }
  }
};

SubgroupStore cyclic_subgroups(const CayleyTable& table) {
  SubgroupStore store;
  store.add({table.identity()}, {});
  for (std::uint32_t x = 0; x < table.size(); ++x) {
    if (x != table.identity()) store.add(table.closure({x}), {x});
  }
  return store;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> all_subgroups(const CayleyTable& table, EnumerationStrategy strategy) {
  SubgroupStore store = cyclic_subgroups(table);
  if (strategy == EnumerationStrategy::cyclic_extension) {
    for (std::size_t i = 0; i < store.members.size(); ++i) {
      const auto S = store.members[i];
      const auto gens = store.generators[i];
      std::vector<char> covered(table.size(), 0);
      for (std::uint32_t s : S) covered[s] = 1;
      for (std::uint32_t x = 0; x < table.size(); ++x) {
        if (covered[x]) continue;
        // <S, x s> = <S, x> for every s in S
        for (std::uint32_t s : S) covered[table.mul(x, s)] = 1;
        auto ext = gens;
        ext.push_back(x);
        auto members = table.closure(ext);
        store.add(std::move(members), std::move(ext));
      }
    }
  } else {
    for (std::size_t i = 0; i < store.members.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        auto gens = store.generators[i];
        gens.insert(gens.end(), store.generators[j].begin(), store.generators[j].end());
        auto members = table.closure(gens);
        store.add(std::move(members), std::move(gens));
      }
    }
  }
  auto out = std::move(store.members);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<ExplicitSubgroup> enumerate_all_subgroups(const Params& params, std::uint64_t max_order) {
  const FullGroup full = build_full_group(params, max_order);
  std::vector<ExplicitSubgroup> out;
  for (const auto& idx : all_subgroups(full.table)) out.push_back(full.subgroup(idx));
  return out;
}

// ---------------------------------------------------------------- report

bool VerifyReport::passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.pass; }));
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.pass ? "PASS " : "FAIL ") << r.claim << ' ' << params.to_string();
    if (r.subgroup >= 0) os << " subgroup=" << r.subgroup;
    if (!r.pass) os << " witness: " << r.witness;
    os << '\n';
  }
  os << (passed() ? "PASS" : "FAIL") << " verify " << params.to_string() << ": " << subgroup_count << " subgroups, "
     << results.size() << " checks, " << failures() << " failures\n";
  return os.str();
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["q"] = params.q;
  j["n"] = params.n;
  j["subgroups"] = subgroup_count;
  j["passed"] = passed();
  j["failures"] = failures();
  auto& claims = j["results"] = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json c;
    c["claim"] = r.claim;
    c["q"] = params.q;
    c["n"] = params.n;
    c["subgroup"] = r.subgroup;
    c["pass"] = r.pass;
    if (!r.pass) c["witness"] = r.witness;
    claims.push_back(std::move(c));
  }
  return j.dump(2) + "\n";
}

namespace {

class Recorder {
 public:
  explicit Recorder(VerifyReport& report) : report_(report) {}

  void check(const std::string& claim, long subgroup, bool pass, const std::string& witness = {}) {
    report_.results.push_back({claim, subgroup, pass, pass ? std::string() : witness});
  }

 private:
  VerifyReport& report_;
};

std::set<std::uint64_t> code_set(const std::vector<FieldElement>& xs) {
  std::set<std::uint64_t> out;
  for (const auto& x : xs) out.insert(x.code());
  return out;
}

std::string describe(const TripleKey& k) {
  std::ostringstream os;
  os << "g0=" << k.g0 << " G2=[";
  for (auto c : k.G2) os << c << ' ';
  os << "] G3=[";
  for (auto c : k.G3) os << c << ' ';
  os << "]";
  return os.str();
}

using PairKey = std::pair<std::vector<std::uint64_t>, std::uint64_t>;

PairKey key_of(const SigmaPair& pair) {
  PairKey k;
  k.second = pair.M_order;
  for (const auto& h : pair.H) {
    k.first.push_back(h.a.code());
    k.first.push_back(h.b.code());
    k.first.push_back(h.c.code());
  }
  return k;
}

}  // namespace

VerifyReport verify_all(const Params& params, const VerifyOptions& options) {
  VerifyReport report;
  report.params = params;
  Recorder rec(report);

  const FullGroup full = build_full_group(params, options.max_order);
  const std::size_t N = full.elements.size();
  const auto subgroups = all_subgroups(full.table);
  report.subgroup_count = subgroups.size();

  // per-element ramification data, via the fixed-point oracle
  const auto points = affine_points(params);
  std::vector<std::int64_t> v(N, 0), fixed(N, 0);
  {
    std::string bad;
    for (std::uint32_t i = 0; i < N; ++i) {
      if (i == full.table.identity()) continue;
      const Aut& g = full.elements[i];
      v[i] = static_cast<std::int64_t>(v_Qinf(params, g));
      fixed[i] = static_cast<std::int64_t>(count_fixed_points(params, g, points));
      const auto formula = N_formula(params, g);
      if (bad.empty() && static_cast<std::int64_t>(formula) != fixed[i]) {
        bad = to_string(g) + " N_formula=" + std::to_string(formula) + " fixed=" + std::to_string(fixed[i]);
      }
    }
    rec.check("fixed_points", -1, bad.empty(), bad);
  }

  {
    std::string bad;
    for (const auto& s : subgroups) {
      if (N % s.size() != 0) bad = "subgroup of order " + std::to_string(s.size());
    }
    rec.check("lagrange", -1, bad.empty(), bad);
    const bool ends = !subgroups.empty() && subgroups.front().size() == 1 && subgroups.back().size() == N;
    rec.check("trivial_and_full_present", -1, ends, "first or last subgroup has the wrong order");
  }

  if (N <= options.cross_check_order) {
    const auto other = all_subgroups(full.table, EnumerationStrategy::join_closure);
    std::map<std::size_t, std::size_t> a, b;
    for (const auto& s : subgroups) ++a[s.size()];
    for (const auto& s : other) ++b[s.size()];
    rec.check("enumeration_strategies_agree", -1, other == subgroups,
              std::to_string(subgroups.size()) + " subgroups by extension vs " + std::to_string(other.size()) +
                  " by joins" + (a == b ? " (same order profile)" : ""));
  }

  const QuadraticView view = QuadraticView::in_ambient(params);
  const std::int64_t top = ambient_genus(params);
  std::set<TripleKey> oracle_triples;
  std::set<std::int64_t> oracle_genera;
  std::set<PairKey> pairs;

  for (std::size_t k = 0; k < subgroups.size(); ++k) {
    const long id = static_cast<long>(k);
    const auto& idx = subgroups[k];
    const ExplicitSubgroup G = full.subgroup(idx);
    rec.check("closure", id, full.table.is_subgroup(idx), "not closed under composition or inversion");

    TripleDescriptor t;
    try {
      t = extract_triple(G);
    } catch (const ConsistencyError& err) {
      rec.check("triple_extraction", id, false, err.what());
      continue;
    }
    oracle_triples.insert(ggk::key_of(t));

    const auto image = project(G);
    std::size_t kernel = 0;
    std::vector<FieldElement> as, dms;
    for (const auto& g : G.elements) {
      if (g.a.is_one() && g.b.is_zero() && g.c.is_zero()) ++kernel;
      as.push_back(g.a);
      dms.push_back(g.d.pow(params.m));
    }
    const bool sizes = G.order() == t.g0 * t.g_w && image.size() == t.g1 * t.g_w && kernel == t.delta1;
    std::ostringstream sz;
    sz << "#G=" << G.order() << " g0=" << t.g0 << " g_w=" << t.g_w << " #pi(G)=" << image.size() << " g1=" << t.g1
       << " #ker=" << kernel << " delta1=" << t.delta1;
    rec.check("cardinalities", id, sizes, sz.str());
    rec.check("a_is_d_power", id, code_set(as) == code_set(dms), "pi_a(G) differs from pi_d(G)^m");

    const auto violation = triple_violation(view, t);
    rec.check("admissible_triple", id, !violation, violation.value_or(""));

    RamificationSummary elementwise;
    for (std::uint32_t i : idx) {
      elementwise.sum_v += v[i];
      elementwise.sum_N += fixed[i];
    }
    elementwise.deg_diff = elementwise.sum_v + elementwise.sum_N;
    try {
      const auto formula = diff_degree_formula(params, t.g0, t.size_G2, t.size_G3);
      rec.check("different_sums", id, formula == elementwise,
                "formula (" + std::to_string(formula.sum_v) + "," + std::to_string(formula.sum_N) + ") vs elements (" +
                    std::to_string(elementwise.sum_v) + "," + std::to_string(elementwise.sum_N) + ")");
      const std::int64_t rh = genus_from_different(params, G.order(), elementwise.deg_diff);
      const std::int64_t closed = genus_formula(params, t.g0, t.size_G2, t.size_G3).genus;
      oracle_genera.insert(rh);
      rec.check("genus", id, rh == closed,
                "Riemann-Hurwitz " + std::to_string(rh) + " vs formula " + std::to_string(closed));
      rec.check("genus_bound", id, rh >= 0 && rh <= top, "genus " + std::to_string(rh));
    } catch (const std::exception& err) {
      rec.check("genus", id, false, err.what());
    }

    try {
      const SigmaPair pair = xi(G);
      pairs.insert(key_of(pair));
      const ExplicitSubgroup back = xi_inverse(params, pair, full.elements);
      rec.check("xi_roundtrip", id, back.elements == G.elements,
                "xi_inverse returned " + std::to_string(back.order()) + " elements");
    } catch (const std::exception& err) {
      rec.check("xi_roundtrip", id, false, err.what());
    }
  }

  rec.check("xi_injective", -1, pairs.size() == subgroups.size(),
            std::to_string(pairs.size()) + " distinct pairs for " + std::to_string(subgroups.size()) + " subgroups");

  {
    const CayleyTable herm = hermitian_table(params, options.max_order);
    const auto herm_elements = enumerate_hermitian_group(params, options.max_order);
    const auto t_values = divisors(params.mu_order);
    std::uint64_t count = 0;
    for (const auto& H : all_subgroups(herm)) {
      std::set<std::uint64_t> a;
      for (std::uint32_t i : H) a.insert(herm_elements[i].a.code());
      for (std::uint64_t t : t_values) {
        if (t / gcd(t, params.m) == a.size()) ++count;
      }
    }
    rec.check("sigma_pair_count", -1, count == subgroups.size(),
              std::to_string(count) + " valid pairs vs " + std::to_string(subgroups.size()) + " subgroups");
  }

  {
    std::set<TripleKey> predicted;
    std::set<std::int64_t> predicted_genera;
    for (const auto& t : realizable_triples(view, TripleMode::witness)) {
      predicted.insert(ggk::key_of(t));
      predicted_genera.insert(genus_formula(params, t.g0, t.size_G2, t.size_G3).genus);
    }
    std::string witness;
    for (const auto& k : oracle_triples) {
      if (!predicted.count(k)) {
        witness = "subgroup triple not predicted: " + describe(k);
        break;
      }
    }
    if (witness.empty()) {
      for (const auto& k : predicted) {
        if (!oracle_triples.count(k)) {
          witness = "predicted triple without a subgroup: " + describe(k);
          break;
        }
      }
    }
    rec.check("classification", -1, witness.empty(), witness);
    rec.check("genus_spectrum", -1, oracle_genera == predicted_genera,
              std::to_string(oracle_genera.size()) + " oracle genera vs " + std::to_string(predicted_genera.size()) +
                  " predicted");
  }
  return report;
}

}  // namespace ggk
