#ifndef ISOSPEC_ALGEBRA_HPP_
#define ISOSPEC_ALGEBRA_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace isospec {

using Rational = mpq_class;

// A signed permutation matrix on n points.  Row i holds a single non-zero
// entry sign(i) in column target(i).  Indices are 0-based internally; every
// file format and printed form uses 1-based vertices.
class SignedPerm {
 public:
  SignedPerm() = default;

  static SignedPerm identity(std::size_t n);

  // targets[i] is the column of the non-zero entry of row i, signs[i] is +1
  // or -1.  Throws std::invalid_argument unless targets is a permutation.
  static SignedPerm from_images(std::span<const std::size_t> targets,
                                std::span<const int> signs);

  // Same layout, unchecked; see valid().
  static SignedPerm from_images_unchecked(std::span<const std::size_t> targets,
                                          std::span<const int> signs);

  // Packed entries +-(target+1), no validation.
  static SignedPerm from_packed_unchecked(std::vector<std::int32_t> packed) {
    SignedPerm p;
    p.images_ = std::move(packed);
    return p;
  }

  std::size_t size() const { return images_.size(); }
  std::size_t target(std::size_t i) const {
    return static_cast<std::size_t>(images_[i] < 0 ? -images_[i] : images_[i]) - 1;
  }
  int sign(std::size_t i) const { return images_[i] < 0 ? -1 : 1; }

  // Matrix entry (row, col).
  int entry(std::size_t row, std::size_t col) const {
    return target(row) == col ? sign(row) : 0;
  }

  bool valid() const;
  bool is_identity() const;
  bool is_involution() const;
  // Matrix symmetry: A_ij == A_ji.
  bool is_symmetric() const;

  // Packed form: entry i is +-(target(i)+1).
  const std::vector<std::int32_t>& packed() const { return images_; }

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
  friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;

 private:
  std::vector<std::int32_t> images_;
};

// Matrix product p*q.
SignedPerm compose(const SignedPerm& p, const SignedPerm& q);
SignedPerm inverse(const SignedPerm& p);
std::int64_t trace(const SignedPerm& p);
// Index (i, j) of the factor pair maps to i*q.size() + j.
SignedPerm kronecker(const SignedPerm& p, const SignedPerm& q);
// D*p*D with D = diag(signs).
SignedPerm conjugate_by_diagonal(const SignedPerm& p, std::span<const int> signs);
// The permutation matrix S with kronecker(p,q) * S == S * kronecker(q,p) for
// every p of size m and q of size n.
SignedPerm shuffle_perm(std::size_t m, std::size_t n);

// Cycle notation "(1,-2)(3)": each cycle lists i, target(i), ...; a leading
// minus marks a point whose row carries a -1 entry.
std::string to_cycle_string(const SignedPerm& p);
// Inverse of to_cycle_string on n points; omitted points are fixed with +1.
SignedPerm parse_signed_cycles(const std::string& text, std::size_t n);
std::ostream& operator<<(std::ostream& os, const SignedPerm& p);

struct SignedPermHash {
  std::size_t operator()(const SignedPerm& p) const noexcept;
};

// Exact rational matrix, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RatMatrix from_int_rows(const std::vector<std::vector<long>>& rows);
  static RatMatrix from_signed_perm(const SignedPerm& p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  bool is_zero() const;
  std::size_t rank() const;
  bool invertible() const { return is_square() && rank() == rows_; }
  Rational determinant() const;
  RatMatrix transpose() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&);
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& s, const RatMatrix& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// p*m and m*p without densifying p.
RatMatrix operator*(const SignedPerm& p, const RatMatrix& m);
RatMatrix operator*(const RatMatrix& m, const SignedPerm& p);
RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b);
std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

}  // namespace isospec

#endif  // ISOSPEC_ALGEBRA_HPP_
