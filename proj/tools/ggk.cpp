// ggk: genus spectra of Galois subfields of the GGK function fields.

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ggk/classify.hpp"
#include "ggk/errors.hpp"
#include "ggk/oracle.hpp"
#include "ggk/spectrum.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kConsistency = 2;

struct OutputFlags {
  bool genus_set = false;
  std::string format = "csv";
  std::string known;
  std::uint64_t max_subspaces = 2'000'000;
};

void add_output_flags(CLI::App* cmd, OutputFlags& flags) {
  cmd->add_flag("--genus-set", flags.genus_set, "Emit only the sorted distinct genera");
  cmd->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--known", flags.known, "Reference genus list; flags genera missing from it");
  cmd->add_option("--max-subspaces", flags.max_subspaces, "Largest subspace lattice searched per coefficient field");
}

ggk::OutputOptions output_options(const OutputFlags& flags) {
  ggk::OutputOptions o;
  o.genus_set = flags.genus_set;
  o.json = flags.format == "json";
  if (!flags.known.empty()) o.known = ggk::read_reference_file(flags.known);
  return o;
}

std::string label(std::uint64_t q, unsigned n) { return "q=" + std::to_string(q) + ",n=" + std::to_string(n); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genus spectra of Galois subfields of the GGK function fields"};
  app.require_subcommand(1);
  std::uint64_t max_group_order = 10000;
  app.add_option("--max-group-order", max_group_order, "Largest group the oracle enumerates");

  OutputFlags spectrum_flags;
  std::uint64_t q = 0;
  unsigned n = 0;
  auto* spectrum = app.add_subcommand("spectrum", "Genus of every realizable (g0, #G2, #G3) for one (q, n)");
  spectrum->add_option("--q", q, "Prime power q")->required();
  spectrum->add_option("--n", n, "Odd n >= 1")->required();
  add_output_flags(spectrum, spectrum_flags);

  OutputFlags field_flags;
  std::uint64_t ell = 0;
  auto* field = app.add_subcommand("field", "Union of spectra over every factorization ell = q^(2n), n odd");
  field->add_option("--ell", ell, "Field size")->required();
  add_output_flags(field, field_flags);

  std::uint64_t vq = 0;
  unsigned vn = 0;
  bool extended = false;
  std::string verify_format = "text";
  auto* verify = app.add_subcommand("verify", "Exhaustive oracle checks over every subgroup of B(Q_inf)");
  verify->add_option("--q", vq, "Prime power q")->required();
  verify->add_option("--n", vn, "Odd n >= 1")->required();
  verify->add_flag("--extended", extended, "Also cross-check subgroup enumeration by a second strategy");
  verify->add_option("--format", verify_format, "Report format")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*spectrum) {
      ggk::SpectrumRequest req{q, n, spectrum_flags.genus_set, spectrum_flags.max_subspaces};
      const auto options = output_options(spectrum_flags);
      const auto records = ggk::run_spectrum(req);
      std::vector<std::string> advisories;
      if (auto a = ggk::coverage_advisory(n)) advisories.push_back(*a);
      ggk::write_spectrum(std::cout, records, options, advisories, label(q, n));
    } else if (*field) {
      const auto options = output_options(field_flags);
      const auto result = ggk::field_spectrum(ell, field_flags.max_subspaces);
      std::vector<std::string> advisories;
      for (const auto& f : result.searched) {
        if (auto a = ggk::coverage_advisory(f.n)) advisories.push_back(label(f.q, f.n) + ": " + *a);
      }
      for (const auto& f : result.skipped) {
        advisories.push_back(label(f.q, f.n) + ": skipped, subspace search exceeds --max-subspaces");
      }
      ggk::write_spectrum(std::cout, result.records, options, advisories, "ell=" + std::to_string(ell));
    } else if (*verify) {
      const ggk::Params params = ggk::make_params(vq, vn);
      ggk::VerifyOptions options;
      options.max_order = max_group_order;
      if (extended) options.cross_check_order = max_group_order;
      const auto report = ggk::verify_all(params, options);
      std::cout << (verify_format == "json" ? report.to_json() : report.to_text());
      return report.passed() ? kOk : kConsistency;
    }
  } catch (const ggk::ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << '\n';
    return kConsistency;
  } catch (const ggk::SearchBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise --max-subspaces)\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << " (raise --max-group-order)\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConsistency;
  }
  return kOk;
}
