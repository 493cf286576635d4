#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "quatseq/cyclotomy.hpp"

namespace quatseq {

/// Dense matrix over Z4, row-major.
class Z4Matrix {
 public:
  Z4Matrix() = default;
  Z4Matrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows, Row(cols, 0)) {}
  /// Throws DimensionMismatch on ragged input. Entries are reduced mod 4.
  static Z4Matrix from_rows(std::vector<std::vector<std::uint8_t>> rows);
  static Z4Matrix identity(std::size_t n);

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }
  std::uint8_t operator()(std::size_t i, std::size_t j) const { return data_[i][j]; }
  std::uint8_t& operator()(std::size_t i, std::size_t j) { return data_[i][j]; }
  std::span<const std::uint8_t> row(std::size_t i) const { return data_[i]; }

  friend bool operator==(const Z4Matrix&, const Z4Matrix&) = default;

 private:
  using Row = std::vector<std::uint8_t>;
  friend Z4Matrix howell_form(Z4Matrix m);
  friend std::optional<std::vector<std::uint8_t>> solve_mod4(const Z4Matrix&,
                                                             std::span<const std::uint8_t>);

  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

/// Howell normal form of the row module of m over Z4: echelon rows with
/// pivots 1 or 2, entries above a pivot 1 cleared, entries above a pivot 2
/// reduced to {0, 1}, and 2 * (any row with pivot 2) lying in the span of the
/// rows beneath it. Zero rows are dropped. Two matrices have the same row
/// span iff their Howell forms are equal.
Z4Matrix howell_form(Z4Matrix m);

/// Some x with a x = b over Z4, or nullopt when none exists.
/// Throws DimensionMismatch if b.size() != a.rows().
std::optional<std::vector<std::uint8_t>> solve_mod4(const Z4Matrix& a,
                                                    std::span<const std::uint8_t> b);

/// C(X) = 1 + c_1 X + ... + c_L X^L over Z4.
class ConnectionPoly {
 public:
  /// Throws InvalidArgument unless coeffs[0] == 1. Trailing zeros are dropped.
  explicit ConnectionPoly(std::vector<std::uint8_t> coeffs);

  std::span<const std::uint8_t> coeffs() const { return coeffs_; }
  std::size_t degree() const { return coeffs_.size() - 1; }

  friend bool operator==(const ConnectionPoly&, const ConnectionPoly&) = default;

 private:
  std::vector<std::uint8_t> coeffs_;
};

struct MinimalConnection {
  std::size_t length = 0;
  ConnectionPoly poly{{1}};
};

/// True iff S(X) C(X) = 0 (mod X^T - 1) over Z4, i.e. the LFSR with
/// connection polynomial c generates seq.
bool check_connection(const QuatSequence& seq, const ConnectionPoly& c);

/// Linear complexity over Z4 by ascending search: for L = 0, 1, ... solve
/// the T periodic recurrence equations in c_1..c_L and stop at the first
/// feasible L.
MinimalConnection minimal_connection(const QuatSequence& seq);

}  // namespace quatseq
