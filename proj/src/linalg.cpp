#include "ggk/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "ggk/numtheory.hpp"

namespace ggk {

namespace {

using Vec = std::vector<std::uint32_t>;

std::uint32_t inv_mod(std::uint32_t a, std::uint64_t p) {
  return static_cast<std::uint32_t>(powmod(a, p - 2, p));
}

// v -= c * w (mod p)
void axpy(Vec& v, std::uint64_t c, const Vec& w, std::uint64_t p) {
  if (c == 0) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = static_cast<std::uint32_t>((v[i] + p - mulmod(c, w[i], p)) % p);
  }
}

}  // namespace

FpSpan::FpSpan(const Field& field) : field_(&field) {}

Vec FpSpan::reduce(Vec v) const {
  const std::uint64_t p = field_->characteristic();
  for (std::size_t r = 0; r < rows_.size(); ++r) axpy(v, v[pivots_[r]], rows_[r], p);
  return v;
}

bool FpSpan::insert(const FieldElement& x) {
  if (&x.field() != field_) throw std::invalid_argument("FpSpan: field mismatch");
  Vec v = reduce(x.coeffs());
  const auto it = std::find_if(v.begin(), v.end(), [](std::uint32_t c) { return c != 0; });
  if (it == v.end()) return false;
  const std::uint64_t p = field_->characteristic();
  const auto pivot = static_cast<std::size_t>(it - v.begin());
  const std::uint32_t scale = inv_mod(v[pivot], p);
  for (auto& c : v) c = static_cast<std::uint32_t>(mulmod(c, scale, p));
  for (auto& row : rows_) axpy(row, row[pivot], v, p);
  const auto pos = static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin());
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), pivot);
  return true;
}

bool FpSpan::contains(const FieldElement& x) const {
  if (&x.field() != field_) return false;
  const Vec v = reduce(x.coeffs());
  return std::all_of(v.begin(), v.end(), [](std::uint32_t c) { return c == 0; });
}

bool FpSpan::contains_all(std::span<const FieldElement> xs) const {
  return std::all_of(xs.begin(), xs.end(), [this](const FieldElement& x) { return contains(x); });
}

std::uint64_t FpSpan::size() const {
  const auto s = checked_pow(field_->characteristic(), static_cast<unsigned>(rows_.size()));
  if (!s) throw std::overflow_error("FpSpan: span too large to count");
  return *s;
}

std::vector<FieldElement> FpSpan::basis() const {
  std::vector<FieldElement> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(field_->from_coeffs(row));
  return out;
}

std::vector<FieldElement> FpSpan::elements() const {
  std::vector<FieldElement> out{field_->zero()};
  const std::uint64_t p = field_->characteristic();
  for (const auto& b : basis()) {
    const std::size_t count = out.size();
    FieldElement multiple = b;
    for (std::uint64_t c = 1; c < p; ++c) {
      for (std::size_t i = 0; i < count; ++i) out.push_back(out[i] + multiple);
      multiple = multiple + b;
    }
  }
  std::sort(out.begin(), out.end(), [](const FieldElement& a, const FieldElement& b) { return a.code() < b.code(); });
  return out;
}

FpSpan span_of(const Field& field, std::span<const FieldElement> xs) {
  FpSpan s(field);
  for (const auto& x : xs) s.insert(x);
  return s;
}

std::vector<FieldElement> canonical_basis(const Field& field, std::span<const FieldElement> xs) {
  return span_of(field, xs).basis();
}

namespace {

struct Elimination {
  std::vector<Vec> rows;            // reduced rows over [unknowns | rhs]
  std::vector<std::size_t> pivots;  // pivot column per row
};

// Columns are the images; optional rhs appended as last column.
Elimination eliminate(std::span<const FieldElement> images, const FieldElement* rhs) {
  const Field& f = images.front().field();
  const std::uint64_t p = f.characteristic();
  const std::size_t n = images.size();
  const std::size_t k = f.degree();
  std::vector<Vec> columns;
  for (const auto& img : images) columns.push_back(img.coeffs());
  if (rhs != nullptr) columns.push_back(rhs->coeffs());
  const std::size_t width = columns.size();
  std::vector<Vec> m(k, Vec(width, 0));
  for (std::size_t c = 0; c < width; ++c)
    for (std::size_t r = 0; r < k; ++r) m[r][c] = columns[c][r];

  Elimination out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < k; ++col) {
    std::size_t sel = row;
    while (sel < k && m[sel][col] == 0) ++sel;
    if (sel == k) continue;
    std::swap(m[sel], m[row]);
    const std::uint32_t scale = inv_mod(m[row][col], p);
    for (auto& c : m[row]) c = static_cast<std::uint32_t>(mulmod(c, scale, p));
    for (std::size_t r = 0; r < k; ++r) {
      if (r != row) axpy(m[r], m[r][col], m[row], p);
    }
    out.pivots.push_back(col);
    ++row;
  }
  m.resize(k);
  out.rows = std::move(m);
  return out;
}

FieldElement combine(std::span<const FieldElement> domain, const Vec& coeffs) {
  const Field& f = domain.front().field();
  FieldElement x = f.zero();
  for (std::size_t j = 0; j < domain.size(); ++j) {
    if (coeffs[j] != 0) x = x + f.scalar(coeffs[j]) * domain[j];
  }
  return x;
}

}  // namespace

std::vector<FieldElement> kernel(std::span<const FieldElement> domain, std::span<const FieldElement> images) {
  if (domain.size() != images.size()) throw std::invalid_argument("kernel: size mismatch");
  if (domain.empty()) return {};
  const std::uint64_t p = domain.front().field().characteristic();
  const Elimination e = eliminate(images, nullptr);
  const std::size_t n = domain.size();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<FieldElement> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec x(n, 0);
    x[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      x[e.pivots[r]] = static_cast<std::uint32_t>((p - e.rows[r][free]) % p);
    }
    out.push_back(combine(domain, x));
  }
  return out;
}

std::optional<FieldElement> preimage(std::span<const FieldElement> domain, std::span<const FieldElement> images,
                                     const FieldElement& target) {
  if (domain.size() != images.size()) throw std::invalid_argument("preimage: size mismatch");
  if (domain.empty()) return target.is_zero() ? std::optional<FieldElement>(target) : std::nullopt;
  const Elimination e = eliminate(images, &target);
  const std::size_t n = domain.size();
  for (std::size_t r = e.pivots.size(); r < e.rows.size(); ++r) {
    if (e.rows[r][n] != 0) return std::nullopt;
  }
  Vec x(n, 0);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.rows[r][n];
  return combine(domain, x);
}

}  // namespace ggk
