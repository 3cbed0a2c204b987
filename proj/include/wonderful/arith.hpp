#pragma once

// Exact lattice arithmetic shared by every module: integer weights in the
// simple-root basis, rational coweights in the simple-coroot basis, small
// integer matrices acting on the root lattice, and an exact rational solver.

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace wonderful {

using Rational = boost::rational<std::int64_t>;

// Boost 1.74's mixed rational/integer comparisons recurse under C++20
// rewritten operators; these exact-match overloads take precedence.
inline bool operator==(const Rational& a, int b) { return a.denominator() == 1 && a.numerator() == b; }
inline bool operator<(const Rational& a, int b) { return a < Rational(b); }
inline bool operator>(const Rational& a, int b) { return a > Rational(b); }
inline bool operator<=(const Rational& a, int b) { return !(a > Rational(b)); }
inline bool operator>=(const Rational& a, int b) { return !(a < Rational(b)); }
inline bool operator==(const Rational& a, std::int64_t b) { return a.denominator() == 1 && a.numerator() == b; }
inline bool operator<(const Rational& a, std::int64_t b) { return a < Rational(b); }
inline bool operator>(const Rational& a, std::int64_t b) { return a > Rational(b); }
inline bool operator<=(const Rational& a, std::int64_t b) { return !(a > Rational(b)); }
inline bool operator>=(const Rational& a, std::int64_t b) { return !(a < Rational(b)); }

/// Bad user input: invalid type/rank, parameters outside a family's range.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A derived structure violates an invariant it must satisfy.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed catalog or diagram data.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integer vector in the simple-root basis.
struct Weight {
  std::vector<std::int64_t> c;

  Weight() = default;
  explicit Weight(std::size_t n) : c(n, 0) {}
  explicit Weight(std::vector<std::int64_t> v) : c(std::move(v)) {}

  static Weight unit(std::size_t n, std::size_t i) {
    Weight w(n);
    w.c[i] = 1;
    return w;
  }

  std::size_t size() const { return c.size(); }
  std::int64_t operator[](std::size_t i) const { return c[i]; }
  std::int64_t& operator[](std::size_t i) { return c[i]; }

  bool is_zero() const;
  bool is_nonnegative() const;
  bool is_nonpositive() const;
  std::int64_t height() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a) {
    for (auto& x : a.c) x = -x;
    return a;
  }
  friend Weight operator*(std::int64_t k, Weight a) {
    for (auto& x : a.c) x *= k;
    return a;
  }
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

/// Rational vector in the simple-coroot basis.
struct Coweight {
  std::vector<Rational> c;

  Coweight() = default;
  explicit Coweight(std::size_t n) : c(n, Rational(0)) {}
  explicit Coweight(std::vector<Rational> v) : c(std::move(v)) {}

  std::size_t size() const { return c.size(); }
  const Rational& operator[](std::size_t i) const { return c[i]; }
  Rational& operator[](std::size_t i) { return c[i]; }

  bool is_zero() const;
  bool is_integral() const;

  Coweight& operator+=(const Coweight& o);
  Coweight& operator-=(const Coweight& o);
  friend Coweight operator+(Coweight a, const Coweight& b) { return a += b; }
  friend Coweight operator-(Coweight a, const Coweight& b) { return a -= b; }
  friend Coweight operator*(Rational k, Coweight a) {
    for (auto& x : a.c) x *= k;
    return a;
  }
  friend bool operator==(const Coweight&, const Coweight&) = default;
};

std::ostream& operator<<(std::ostream& os, const Coweight& w);

std::string to_string(const Rational& q);

/// Square integer matrix acting on column vectors.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}
  static IntMatrix identity(std::size_t n);

  std::size_t dim() const { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

  Weight apply(const Weight& w) const;
  /// Column j is the image of the j-th basis vector.
  Weight column(std::size_t j) const;
  void set_column(std::size_t j, const Weight& w);

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend IntMatrix operator-(IntMatrix x) {
    for (auto& v : x.a_) v = -v;
    return x;
  }
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> a_;
};

/// Solve sum_k x_k * columns[k] == rhs exactly over the rationals.
/// Columns must be linearly independent; returns nullopt when rhs is not in
/// their span.
std::optional<std::vector<Rational>> solve_exact(const std::vector<std::vector<Rational>>& columns,
                                                 const std::vector<Rational>& rhs);

/// Rank of a set of rational vectors.
std::size_t rank_of(const std::vector<std::vector<Rational>>& vectors);

std::vector<Rational> to_rational(const Weight& w);

}  // namespace wonderful
