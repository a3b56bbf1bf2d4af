#pragma once

// Genus spectra per (q, n) and per field size, reference comparison, and output.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ggk/autgrp.hpp"
#include "ggk/genus.hpp"

namespace ggk {

struct SpectrumRequest {
  std::uint64_t q = 0;
  unsigned n = 0;
  bool genus_set = false;
  std::uint64_t max_subspaces = 2'000'000;
};

/// One record per realizable (g0, #G2, #G3), sorted by (genus, g0, #G2, #G3).
/// Throws std::invalid_argument for an invalid (q, n) and SearchBudgetExceeded
/// when a subspace lattice is too large to search.
std::vector<GenusRecord> run_spectrum(const SpectrumRequest& req);

std::set<std::int64_t> genus_set(const std::vector<GenusRecord>& records);

struct Factorization {
  std::uint64_t q;
  unsigned n;
  bool hermitian;  // n = 1
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Every (q, n) with q^(2n) = ell and n odd, q ascending.
/// Throws std::invalid_argument when ell is not a prime power or has no such factorization.
std::vector<Factorization> factorizations(std::uint64_t ell);

/// One nonnegative integer per line; '#' starts a comment; blank lines ignored.
/// Throws std::invalid_argument naming the offending line.
std::set<std::int64_t> read_reference(std::istream& in);
std::set<std::int64_t> read_reference_file(const std::string& path);

/// Genera of the spectrum absent from the reference, never including 0.
std::vector<std::int64_t> compare_known(const std::set<std::int64_t>& spectrum, const std::set<std::int64_t>& reference);

/// Union over factorizations. Factorizations whose search exceeds the budget are
/// listed in `skipped` rather than failing the whole query.
struct FieldSpectrum {
  std::uint64_t ell = 0;
  std::vector<Factorization> searched;
  std::vector<Factorization> skipped;
  std::vector<GenusRecord> records;  // sorted as in run_spectrum, concatenated in factorization order
};
FieldSpectrum field_spectrum(std::uint64_t ell, std::uint64_t max_subspaces = 2'000'000);

/// Advisory attached to n = 3 output: only subgroups of B(Q_inf) are covered.
std::optional<std::string> coverage_advisory(unsigned n);

inline constexpr const char* kCsvHeader = "p,q,n,g0,size_G2,size_G3,size_G,delta1,delta2,genus";

struct OutputOptions {
  bool genus_set = false;
  bool json = false;
  std::optional<std::set<std::int64_t>> known;
};

/// Writes records (or their genus set) as CSV or JSON. With a reference list,
/// CSV gains a trailing new_genus column and JSON a "new_genera" array.
void write_spectrum(std::ostream& out, const std::vector<GenusRecord>& records, const OutputOptions& options,
                    const std::vector<std::string>& advisories, const std::string& label);

}  // namespace ggk
