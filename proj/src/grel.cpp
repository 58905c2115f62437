#include "qdt/grel.hpp"

#include <algorithm>
#include <string>

namespace qdt {

namespace {

void require_same_shape(const GRel& a, const GRel& b, const char* op_name) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError(std::string(op_name) + ": shapes " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()) + " differ");
}

void require_chain(const GRel& a, const GRel& b, const char* op_name) {
  if (a.cols() != b.rows())
    throw DimensionError(std::string(op_name) + ": inner dimensions " + std::to_string(a.cols()) + " and " +
                         std::to_string(b.rows()) + " differ");
}

}  // namespace

GRel GRel::identity(std::size_t n) {
  return characteristic(n, n, [](std::size_t i, std::size_t j) { return i == j; });
}

GRel GRel::from_rows(const std::vector<std::vector<ExtVal>>& rows) {
  std::size_t r = rows.size(), c = rows.empty() ? 0 : rows.front().size();
  GRel g(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) g(i, j) = rows[i][j];
  }
  return g;
}

std::vector<ExtVal> GRel::column(std::size_t j) const {
  std::vector<ExtVal> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

std::vector<ExtVal> GRel::values() const {
  std::vector<ExtVal> v = data_;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool GRel::is_characteristic() const {
  return std::all_of(data_.begin(), data_.end(), [](const ExtVal& v) { return v.is_zero() || v.is_inf(); });
}

GRel compose(const GRel& a, const GRel& b) {
  require_chain(a, b, "compose");
  GRel out(a.rows(), b.cols(), kInf);
  for (std::size_t x = 0; x < a.rows(); ++x)
    for (std::size_t z = 0; z < a.cols(); ++z) {
      const ExtVal& axz = a(x, z);
      if (axz.is_inf()) continue;
      for (std::size_t y = 0; y < b.cols(); ++y) {
        const ExtVal& bzy = b(z, y);
        if (bzy.is_inf()) continue;
        ExtVal s = axz + bzy;
        if (s < out(x, y)) out(x, y) = s;
      }
    }
  return out;
}

bool leq(const GRel& a, const GRel& b) {
  require_same_shape(a, b, "leq");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (b(i, j) < a(i, j)) return false;
  return true;
}

GRel pointwise_max(const GRel& a, const GRel& b) {
  require_same_shape(a, b, "pointwise_max");
  GRel out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = max(a(i, j), b(i, j));
  return out;
}

GRel pointwise_min(const GRel& a, const GRel& b) {
  require_same_shape(a, b, "pointwise_min");
  GRel out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = min(a(i, j), b(i, j));
  return out;
}

GRel scale(std::uint64_t n, const GRel& a) {
  GRel out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = scale(n, a(i, j));
  return out;
}

bool uniform_leq(const GRel& a, const GRel& b) {
  require_same_shape(a, b, "uniform_leq");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (b(i, j).is_zero() && !a(i, j).is_zero()) return false;
  return true;
}

std::map<ExtVal, ExtVal> modulus(const GRel& a, const GRel& b) {
  require_same_shape(a, b, "modulus");
  std::map<ExtVal, ExtVal> out;
  out[kZero] = kZero;
  for (const ExtVal& v : b.values()) out[v] = kZero;
  for (auto& [r, m] : out)
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (b(i, j) <= r) m = max(m, a(i, j));
  return out;
}

GRel phi_compose(const GRel& a, const GRel& b) {
  require_chain(a, b, "phi_compose");
  GRel out(a.rows(), b.cols(), kInf);
  for (std::size_t z = 0; z < b.rows(); ++z)
    for (std::size_t y = 0; y < b.cols(); ++y) {
      if (!b(z, y).is_zero()) continue;
      for (std::size_t x = 0; x < a.rows(); ++x) out(x, y) = min(out(x, y), a(x, z));
    }
  return out;
}

GRel phi_left(const GRel& a, const GRel& b) { return op(phi_compose(op(b), op(a))); }

GRel op(const GRel& a) {
  GRel out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

GRel sym(const GRel& a) {
  if (!a.is_square()) throw DimensionError("sym: relation is not square");
  return pointwise_max(a, op(a));
}

GRel zero_set(const GRel& a) {
  return GRel::characteristic(a.rows(), a.cols(), [&](std::size_t i, std::size_t j) { return a(i, j).is_zero(); });
}

GRel submatrix(const GRel& a, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  GRel out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = a(rows[i], cols[j]);
  return out;
}

}  // namespace qdt
