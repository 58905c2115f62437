#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "qdt/extval.hpp"

namespace qdt {

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Dense rows x cols matrix of ExtVal: a generalized relation between two
// finite point sets identified with {0..rows-1} and {0..cols-1}.
class GRel {
 public:
  GRel() = default;
  GRel(std::size_t rows, std::size_t cols, ExtVal fill = kZero)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static GRel filled(std::size_t rows, std::size_t cols, ExtVal v) { return GRel(rows, cols, v); }
  // 0 on the diagonal, inf elsewhere.
  static GRel identity(std::size_t n);
  static GRel from_rows(const std::vector<std::vector<ExtVal>>& rows);
  // Characteristic function of a classical relation: 0 where pred holds.
  template <class Pred>
  static GRel characteristic(std::size_t rows, std::size_t cols, Pred pred) {
    GRel r(rows, cols, kInf);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (pred(i, j)) r(i, j) = kZero;
    return r;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const ExtVal& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  ExtVal& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::span<const ExtVal> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<ExtVal> column(std::size_t j) const;

  // Distinct entries, ascending.
  std::vector<ExtVal> values() const;
  bool is_characteristic() const;  // all entries in {0, inf}

  friend bool operator==(const GRel&, const GRel&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<ExtVal> data_;
};

// x(a∘b)y = min_z (x a z + z b y)
GRel compose(const GRel& a, const GRel& b);
// Pointwise order and lattice operations.
bool leq(const GRel& a, const GRel& b);
GRel pointwise_max(const GRel& a, const GRel& b);
GRel pointwise_min(const GRel& a, const GRel& b);
GRel scale(std::uint64_t n, const GRel& a);
// a ≾ b, decided as zero-set containment: b(x,y) = 0 implies a(x,y) = 0.
bool uniform_leq(const GRel& a, const GRel& b);
// r ↦ sup{a(x,y) : b(x,y) ≤ r} sampled at 0 and at every value of b.
std::map<ExtVal, ExtVal> modulus(const GRel& a, const GRel& b);
// a∘Φ^b = sup_n a∘(n·b); on finite sets x ↦ min{a(x,z) : b(z,y) = 0}.
GRel phi_compose(const GRel& a, const GRel& b);
// Φ^a∘b = sup_n (n·a)∘b; on finite sets min{b(z,y) : a(x,z) = 0}.
GRel phi_left(const GRel& a, const GRel& b);
GRel op(const GRel& a);
GRel sym(const GRel& a);
// Characteristic function of the zero set: the relation x ≤^a y.
GRel zero_set(const GRel& a);
GRel submatrix(const GRel& a, std::span<const std::size_t> rows, std::span<const std::size_t> cols);

}  // namespace qdt
