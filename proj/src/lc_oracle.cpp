#include "quatseq/lc_oracle.hpp"

#include <algorithm>

#include "quatseq/error.hpp"

namespace quatseq {

namespace {

using Row = std::vector<std::uint8_t>;

// row -= k * pivot (mod 4), over all columns.
void sub_scaled(Row& row, const Row& pivot, std::uint8_t k) {
  k &= 3;
  if (k == 0) return;
  const std::uint8_t neg = static_cast<std::uint8_t>(4 - k);
  for (std::size_t c = 0; c < row.size(); ++c) row[c] = (row[c] + neg * pivot[c]) & 3;
}

bool all_zero(const Row& row, std::size_t limit) {
  return std::all_of(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(limit),
                     [](std::uint8_t v) { return v == 0; });
}

// Row-reduces `rows` to Howell form with respect to the first `key_cols`
// columns; any further columns are carried along. Rows whose key part is
// zero end up after the pivot rows. Returns the number of pivot rows.
std::size_t howell_reduce(std::vector<Row>& rows, std::size_t key_cols) {
  std::size_t top = 0;
  for (std::size_t c = 0; c < key_cols && top < rows.size(); ++c) {
    std::size_t pick = rows.size();
    for (std::size_t i = top; i < rows.size(); ++i) {
      if (rows[i][c] & 1) {
        pick = i;
        break;
      }
    }
    bool unit = pick != rows.size();
    if (!unit) {
      for (std::size_t i = top; i < rows.size(); ++i) {
        if (rows[i][c] == 2) {
          pick = i;
          break;
        }
      }
      if (pick == rows.size()) continue;
    }
    std::swap(rows[top], rows[pick]);
    Row& pivot = rows[top];
    if (unit && pivot[c] == 3) {
      for (auto& v : pivot) v = (3 * v) & 3;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == top || rows[i][c] == 0) continue;
      // Unit pivot clears the column; a 2-pivot leaves entries above in {0,1}
      // (rows below can only hold 0 or 2 here).
      sub_scaled(rows[i], pivot, unit ? rows[i][c] : static_cast<std::uint8_t>(rows[i][c] >> 1));
    }
    if (!unit) {
      Row twice = pivot;
      for (auto& v : twice) v = (2 * v) & 3;
      if (!all_zero(twice, twice.size())) rows.push_back(std::move(twice));
    }
    ++top;
  }
  return top;
}

}  // namespace

Z4Matrix Z4Matrix::from_rows(std::vector<std::vector<std::uint8_t>> rows) {
  Z4Matrix m;
  m.cols_ = rows.empty() ? 0 : rows.front().size();
  for (auto& r : rows) {
    if (r.size() != m.cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (auto& v : r) v &= 3;
  }
  m.data_ = std::move(rows);
  return m;
}

Z4Matrix Z4Matrix::identity(std::size_t n) {
  Z4Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Z4Matrix howell_form(Z4Matrix m) {
  std::size_t pivots = howell_reduce(m.data_, m.cols_);
  m.data_.resize(pivots);
  return m;
}

std::optional<std::vector<std::uint8_t>> solve_mod4(const Z4Matrix& a,
                                                    std::span<const std::uint8_t> b) {
  if (b.size() != a.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "right-hand side length does not match rows");
  }
  const std::size_t m = a.rows(), n = a.cols();
  // Rows of [A^T | I]: the key part spans the column module of A and the
  // tail records which combination of columns produced it.
  std::vector<Row> rows(n, Row(m + n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) rows[j][i] = a(i, j);
    rows[j][m + j] = 1;
  }
  const std::size_t pivots = howell_reduce(rows, m);

  Row residual(b.begin(), b.end());
  for (auto& v : residual) v &= 3;
  std::vector<std::uint8_t> x(n, 0);
  for (std::size_t k = 0; k < pivots; ++k) {
    const Row& row = rows[k];
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    std::uint8_t coef;
    if (row[c] == 1) {
      coef = residual[c];
    } else {
      if (residual[c] & 1) return std::nullopt;
      coef = residual[c] >> 1;
    }
    if (coef == 0) continue;
    const std::uint8_t neg = static_cast<std::uint8_t>(4 - coef);
    for (std::size_t i = 0; i < m; ++i) residual[i] = (residual[i] + neg * row[i]) & 3;
    for (std::size_t j = 0; j < n; ++j) x[j] = (x[j] + coef * row[m + j]) & 3;
  }
  if (!all_zero(residual, m)) return std::nullopt;
  return x;
}

ConnectionPoly::ConnectionPoly(std::vector<std::uint8_t> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty() || coeffs_[0] != 1) {
    throw Error(ErrorCode::InvalidArgument, "connection polynomial must have constant term 1");
  }
  for (auto& v : coeffs_) {
    if (v > 3) throw Error(ErrorCode::InvalidArgument, "coefficient outside Z4");
  }
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

bool check_connection(const QuatSequence& seq, const ConnectionPoly& c) {
  const std::size_t T = seq.period();
  // Coefficient of X^n in S(X) C(X) mod X^T - 1.
  for (std::size_t n = 0; n < T; ++n) {
    unsigned acc = 0;
    for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
      acc += c.coeffs()[k] * seq[(n + T - k % T) % T];
    }
    if (acc & 3) return false;
  }
  return true;
}

MinimalConnection minimal_connection(const QuatSequence& seq) {
  const std::size_t T = seq.period();
  const auto values = seq.values();
  if (std::all_of(values.begin(), values.end(), [](std::uint8_t v) { return v == 0; })) {
    return {};
  }
  Row rhs(T);
  for (std::size_t n = 0; n < T; ++n) rhs[n] = static_cast<std::uint8_t>((4 - seq[n]) & 3);
  // 1 - X^T always works, so the loop terminates by L = T.
  for (std::size_t L = 1; L <= T; ++L) {
    // sum_{k=1..L} c_k s_{n-k} = -s_n for every n mod T.
    Z4Matrix a(T, L);
    for (std::size_t n = 0; n < T; ++n) {
      for (std::size_t k = 1; k <= L; ++k) a(n, k - 1) = seq[(n + T - k % T) % T];
    }
    if (auto x = solve_mod4(a, rhs)) {
      std::vector<std::uint8_t> coeffs{1};
      coeffs.insert(coeffs.end(), x->begin(), x->end());
      return {L, ConnectionPoly(std::move(coeffs))};
    }
  }
  throw Error(ErrorCode::Internal, "no connection polynomial of degree <= T");
}

}  // namespace quatseq
