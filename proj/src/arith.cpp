#include "wonderful/arith.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wonderful {

bool Weight::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](auto x) { return x == 0; });
}

bool Weight::is_nonnegative() const {
  return std::all_of(c.begin(), c.end(), [](auto x) { return x >= 0; });
}

bool Weight::is_nonpositive() const {
  return std::all_of(c.begin(), c.end(), [](auto x) { return x <= 0; });
}

std::int64_t Weight::height() const { return std::accumulate(c.begin(), c.end(), std::int64_t{0}); }

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Weight& w) {
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  return os << ')';
}

bool Coweight::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x == 0; });
}

bool Coweight::is_integral() const {
  return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.denominator() == 1; });
}

Coweight& Coweight::operator+=(const Coweight& o) {
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

Coweight& Coweight::operator-=(const Coweight& o) {
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  return *this;
}

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::ostream& operator<<(std::ostream& os, const Coweight& w) {
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << to_string(w[i]);
  return os << ')';
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Weight IntMatrix::apply(const Weight& w) const {
  Weight out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j) * w[j];
    out[i] = s;
  }
  return out;
}

Weight IntMatrix::column(std::size_t j) const {
  Weight out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = (*this)(i, j);
  return out;
}

void IntMatrix::set_column(std::size_t j, const Weight& w) {
  for (std::size_t i = 0; i < n_; ++i) (*this)(i, j) = w[i];
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  IntMatrix out(x.n_);
  for (std::size_t i = 0; i < x.n_; ++i)
    for (std::size_t k = 0; k < x.n_; ++k) {
      const auto xik = x(i, k);
      if (xik == 0) continue;
      for (std::size_t j = 0; j < x.n_; ++j) out(i, j) += xik * y(k, j);
    }
  return out;
}

std::vector<Rational> to_rational(const Weight& w) {
  std::vector<Rational> out;
  out.reserve(w.size());
  for (auto x : w.c) out.emplace_back(x);
  return out;
}

namespace {

// Row-reduces m in place, returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Rational>>& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = Rational(1) / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t k = 0; k < m[r].size(); ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<std::vector<Rational>> solve_exact(const std::vector<std::vector<Rational>>& columns,
                                                 const std::vector<Rational>& rhs) {
  const std::size_t k = columns.size();
  const std::size_t n = rhs.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = columns[j].at(i);
    m[i][k] = rhs[i];
  }
  const auto pivots = row_reduce(m, k + 1);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;  // inconsistent
  if (pivots.size() != k) throw ConsistencyError("solve_exact: columns are linearly dependent");
  std::vector<Rational> x(k);
  for (std::size_t r = 0; r < k; ++r) x[pivots[r]] = m[r][k];
  return x;
}

std::size_t rank_of(const std::vector<std::vector<Rational>>& vectors) {
  if (vectors.empty()) return 0;
  auto m = vectors;
  return row_reduce(m, m.front().size()).size();
}

}  // namespace wonderful
