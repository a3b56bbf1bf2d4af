#include "ggk/spectrum.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "ggk/classify.hpp"
#include "ggk/numtheory.hpp"

namespace ggk {

std::vector<GenusRecord> run_spectrum(const SpectrumRequest& req) {
  const Params params = make_params(req.q, req.n);
  std::vector<GenusRecord> out;
  for (const auto& c : realizable_cardinalities(params, req.max_subspaces)) {
    out.push_back(genus_formula(params, c.g0, c.size_G2, c.size_G3));
  }
  std::sort(out.begin(), out.end(), [](const GenusRecord& a, const GenusRecord& b) {
    return std::tie(a.genus, a.g0, a.size_G2, a.size_G3) < std::tie(b.genus, b.g0, b.size_G2, b.size_G3);
  });
  return out;
}

std::set<std::int64_t> genus_set(const std::vector<GenusRecord>& records) {
  std::set<std::int64_t> out;
  for (const auto& r : records) out.insert(r.genus);
  return out;
}

std::vector<Factorization> factorizations(std::uint64_t ell) {
  const auto pp = prime_power(ell);
  if (!pp) throw std::invalid_argument("ell = " + std::to_string(ell) + " is not a prime power");
  const auto [p, k] = *pp;
  std::vector<Factorization> out;
  // k = 2 e n with n odd
  if (k % 2 == 0) {
    for (unsigned n = 1; n <= k / 2; n += 2) {
      if ((k / 2) % n != 0) continue;
      out.push_back({*checked_pow(p, k / (2 * n)), n, n == 1});
    }
  }
  if (out.empty()) throw std::invalid_argument("ell = " + std::to_string(ell) + " is not q^(2n) with n odd");
  std::sort(out.begin(), out.end(), [](const Factorization& a, const Factorization& b) { return a.q < b.q; });
  return out;
}

std::set<std::int64_t> read_reference(std::istream& in) {
  std::set<std::int64_t> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    line = line.substr(0, line.find('#'));
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(first, last - first + 1);
    const bool digits = std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; });
    if (!digits || token.size() > 18) {
      throw std::invalid_argument("reference line " + std::to_string(number) + ": expected a nonnegative integer, got '" +
                                  token + "'");
    }
    out.insert(std::stoll(token));
  }
  return out;
}

std::set<std::int64_t> read_reference_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open reference file " + path);
  return read_reference(in);
}

std::vector<std::int64_t> compare_known(const std::set<std::int64_t>& spectrum, const std::set<std::int64_t>& reference) {
  std::vector<std::int64_t> out;
  for (std::int64_t g : spectrum) {
    if (g != 0 && !reference.count(g)) out.push_back(g);
  }
  return out;
}

FieldSpectrum field_spectrum(std::uint64_t ell, std::uint64_t max_subspaces) {
  FieldSpectrum out;
  out.ell = ell;
  for (const auto& f : factorizations(ell)) {
    try {
      auto records = run_spectrum({f.q, f.n, false, max_subspaces});
      out.records.insert(out.records.end(), records.begin(), records.end());
      out.searched.push_back(f);
    } catch (const SearchBudgetExceeded&) {
      out.skipped.push_back(f);
    }
  }
  return out;
}

std::optional<std::string> coverage_advisory(unsigned n) {
  if (n == 3) return "n = 3: only subgroups of the stabilizer B(Q_inf) are covered";
  return std::nullopt;
}

void write_spectrum(std::ostream& out, const std::vector<GenusRecord>& records, const OutputOptions& options,
                    const std::vector<std::string>& advisories, const std::string& label) {
  const auto genera = genus_set(records);
  std::set<std::int64_t> fresh;
  if (options.known) {
    for (auto g : compare_known(genera, *options.known)) fresh.insert(g);
  }

  if (options.json) {
    nlohmann::ordered_json j;
    j["query"] = label;
    j["advisories"] = advisories;
    if (options.genus_set) {
      j["genera"] = genera;
    } else {
      auto& rows = j["records"] = nlohmann::ordered_json::array();
      for (const auto& r : records) {
        nlohmann::ordered_json row;
        row["p"] = r.p;
        row["q"] = r.q;
        row["n"] = r.n;
        row["g0"] = r.g0;
        row["size_G2"] = r.size_G2;
        row["size_G3"] = r.size_G3;
        row["size_G"] = r.size_G;
        row["delta1"] = r.delta1;
        row["delta2"] = r.delta2;
        row["genus"] = r.genus;
        rows.push_back(std::move(row));
      }
    }
    if (options.known) j["new_genera"] = fresh;
    out << j.dump(2) << '\n';
    return;
  }

  for (const auto& a : advisories) out << "# " << a << '\n';
  if (options.genus_set) {
    out << (options.known ? "genus,new_genus\n" : "genus\n");
    for (auto g : genera) {
      out << g;
      if (options.known) out << ',' << (fresh.count(g) ? 1 : 0);
      out << '\n';
    }
    return;
  }
  out << kCsvHeader << (options.known ? ",new_genus\n" : "\n");
  for (const auto& r : records) {
    out << r.p << ',' << r.q << ',' << r.n << ',' << r.g0 << ',' << r.size_G2 << ',' << r.size_G3 << ',' << r.size_G
        << ',' << r.delta1 << ',' << r.delta2 << ',' << r.genus;
    if (options.known) out << ',' << (fresh.count(r.genus) ? 1 : 0);
    out << '\n';
  }
}

}  // namespace ggk
