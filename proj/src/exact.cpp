#include "latvar/exact.hpp"

#include "latvar/error.hpp"

#include <algorithm>
#include <utility>

namespace latvar {

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

std::size_t bareiss_rank(IntMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    m.swap_rows(rank, pivot);
    const Integer p = m(rank, c);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = m(r, j) * p - m(r, c) * m(rank, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(r, j) = std::move(v);
      }
      m(r, c) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

Integer bareiss_determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(v);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

// a * row - b * pivot, both sorted by column.
SparseRow combine(const Integer& a, const SparseRow& row, const Integer& b, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].column < pivot[j].column)) {
      out.push_back({row[i].column, a * row[i].value});
      ++i;
    } else if (i == row.size() || pivot[j].column < row[i].column) {
      out.push_back({pivot[j].column, -b * pivot[j].value});
      ++j;
    } else {
      Integer v = a * row[i].value - b * pivot[j].value;
      if (v != 0) out.push_back({row[i].column, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::optional<std::size_t> SparseEliminator::add_row(SparseRow row) {
  std::erase_if(row, [](const SparseEntry& e) { return e.value == 0; });
  std::sort(row.begin(), row.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.column < b.column; });
  while (!row.empty()) {
    const std::size_t lead = row.front().column;
    if (lead >= pivots_.size()) throw Error(ErrorCode::InvalidArgument, "sparse row column out of range");
    const SparseRow& pivot = pivots_[lead];
    if (pivot.empty()) {
      pivots_[lead] = std::move(row);
      ++rank_;
      return lead;
    }
    Integer a = pivot.front().value;
    Integer b = row.front().value;
    const Integer g = gcd(a, b);
    a /= g;
    b /= g;
    row = combine(a, row, b, pivot);
    scale_ *= Rational(a);
    if (row.empty()) break;
    Integer content = 0;
    for (const auto& e : row) content = gcd(content, e.value);
    if (content != 1) {
      for (auto& e : row) mpz_divexact(e.value.get_mpz_t(), e.value.get_mpz_t(), content.get_mpz_t());
      scale_ /= Rational(content);
    }
  }
  return std::nullopt;
}

std::size_t sparse_rank(const std::vector<SparseRow>& rows, std::size_t columns) {
  SparseEliminator elim(columns);
  for (const auto& r : rows) elim.add_row(r);
  return elim.rank();
}

Integer sparse_determinant(const std::vector<SparseRow>& rows, std::size_t n) {
  if (rows.size() != n) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  SparseEliminator elim(n);
  // Only the row being inserted is modified, so det(reduced) = det(input) * scale.
  // The reduced rows, placed by leading column, form an upper-triangular matrix.
  std::vector<std::size_t> lead_of_row;
  lead_of_row.reserve(n);
  for (const auto& r : rows) {
    auto lead = elim.add_row(r);
    if (!lead) return 0;
    lead_of_row.push_back(*lead);
  }
  int sign = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (lead_of_row[i] > lead_of_row[j]) sign = -sign;
  Integer product = sign;
  for (const auto& p : elim.pivots()) product *= p.front().value;
  Rational det = Rational(product) / elim.scale();
  det.canonicalize();
  if (det.get_den() != 1) throw Error(ErrorCode::RankMismatch, "non-integral determinant from sparse elimination");
  return det.get_num();
}

IntMatrix to_dense(const std::vector<SparseRow>& rows, std::size_t columns) {
  IntMatrix m(rows.size(), columns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& e : rows[r]) m(r, e.column) = e.value;
  return m;
}

}  // namespace latvar
