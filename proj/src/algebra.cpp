#include "isospec/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <utility>

namespace isospec {

SignedPerm SignedPerm::identity(std::size_t n) {
  SignedPerm p;
  p.images_.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.images_[i] = static_cast<std::int32_t>(i + 1);
  return p;
}

SignedPerm SignedPerm::from_images_unchecked(std::span<const std::size_t> targets,
                                             std::span<const int> signs) {
  if (targets.size() != signs.size())
    throw std::invalid_argument("signed permutation: targets and signs differ in length");
  SignedPerm p;
  p.images_.resize(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    auto t = static_cast<std::int32_t>(targets[i] + 1);
    p.images_[i] = signs[i] < 0 ? -t : t;
  }
  return p;
}

SignedPerm SignedPerm::from_images(std::span<const std::size_t> targets,
                                   std::span<const int> signs) {
  for (int s : signs)
    if (s != 1 && s != -1) throw std::invalid_argument("signed permutation: sign must be +1 or -1");
  SignedPerm p = from_images_unchecked(targets, signs);
  if (!p.valid()) throw std::invalid_argument("signed permutation: targets are not a permutation");
  return p;
}

bool SignedPerm::valid() const {
  std::vector<bool> hit(size(), false);
  for (std::size_t i = 0; i < size(); ++i) {
    if (images_[i] == 0) return false;
    std::size_t t = target(i);
    if (t >= size() || hit[t]) return false;
    hit[t] = true;
  }
  return true;
}

bool SignedPerm::is_identity() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (images_[i] != static_cast<std::int32_t>(i + 1)) return false;
  return true;
}

bool SignedPerm::is_involution() const {
  for (std::size_t i = 0; i < size(); ++i) {
    std::size_t t = target(i);
    if (target(t) != i || sign(i) * sign(t) != 1) return false;
  }
  return true;
}

bool SignedPerm::is_symmetric() const {
  for (std::size_t i = 0; i < size(); ++i) {
    std::size_t t = target(i);
    if (entry(t, i) != sign(i)) return false;
  }
  return true;
}

SignedPerm compose(const SignedPerm& p, const SignedPerm& q) {
  if (p.size() != q.size()) throw std::invalid_argument("compose: size mismatch");
  // (p*q)[i][k] = p[i][j] q[j][k] with j = p.target(i), k = q.target(j).
  std::vector<std::size_t> targets(p.size());
  std::vector<int> signs(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::size_t j = p.target(i);
    targets[i] = q.target(j);
    signs[i] = p.sign(i) * q.sign(j);
  }
  return SignedPerm::from_images_unchecked(targets, signs);
}

SignedPerm inverse(const SignedPerm& p) {
  std::vector<std::size_t> targets(p.size());
  std::vector<int> signs(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    targets[p.target(i)] = i;
    signs[p.target(i)] = p.sign(i);
  }
  return SignedPerm::from_images_unchecked(targets, signs);
}

std::int64_t trace(const SignedPerm& p) {
  std::int64_t t = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.target(i) == i) t += p.sign(i);
  return t;
}

SignedPerm kronecker(const SignedPerm& p, const SignedPerm& q) {
  const std::size_t n = q.size();
  std::vector<std::size_t> targets(p.size() * n);
  std::vector<int> signs(p.size() * n);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t k = 0; k < n; ++k) {
      targets[i * n + k] = p.target(i) * n + q.target(k);
      signs[i * n + k] = p.sign(i) * q.sign(k);
    }
  return SignedPerm::from_images_unchecked(targets, signs);
}

SignedPerm conjugate_by_diagonal(const SignedPerm& p, std::span<const int> signs) {
  if (signs.size() != p.size())
    throw std::invalid_argument("conjugate_by_diagonal: length mismatch");
  std::vector<std::size_t> targets(p.size());
  std::vector<int> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    targets[i] = p.target(i);
    out[i] = p.sign(i) * signs[i] * signs[p.target(i)];
  }
  return SignedPerm::from_images_unchecked(targets, out);
}

SignedPerm shuffle_perm(std::size_t m, std::size_t n) {
  std::vector<std::size_t> targets(m * n);
  std::vector<int> signs(m * n, 1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < n; ++k) targets[i * n + k] = k * m + i;
  return SignedPerm::from_images_unchecked(targets, signs);
}

std::string to_cycle_string(const SignedPerm& p) {
  std::ostringstream out;
  std::vector<bool> seen(p.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    out << '(';
    std::size_t j = i;
    bool first = true;
    do {
      seen[j] = true;
      if (!first) out << ',';
      out << (p.sign(j) < 0 ? "-" : "") << j + 1;
      first = false;
      j = p.target(j);
    } while (j != i);
    out << ')';
    any = true;
  }
  if (!any) out << "()";
  return out.str();
}

SignedPerm parse_signed_cycles(const std::string& text, std::size_t n) {
  std::vector<std::int32_t> packed(n, 0);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("signed cycle \"" + text + "\": " + why);
  };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_point = [&](int& sign) -> std::size_t {
    skip_ws();
    sign = 1;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::size_t start = pos;
    std::size_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      v = v * 10 + static_cast<std::size_t>(text[pos++] - '0');
    if (pos == start) fail("expected a point");
    if (v < 1 || v > n) fail("point " + std::to_string(v) + " out of range");
    skip_ws();
    return v - 1;
  };
  for (skip_ws(); pos < text.size(); skip_ws()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    skip_ws();
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      continue;
    }
    std::vector<std::pair<std::size_t, int>> cycle;
    for (;;) {
      int s = 1;
      std::size_t v = read_point(s);
      cycle.emplace_back(v, s);
      if (pos >= text.size()) fail("unterminated cycle");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      fail("expected ',' or ')'");
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      auto [v, s] = cycle[k];
      if (packed[v] != 0) fail("point " + std::to_string(v + 1) + " repeated");
      auto t = static_cast<std::int32_t>(cycle[(k + 1) % cycle.size()].first + 1);
      packed[v] = s < 0 ? -t : t;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (packed[i] == 0) packed[i] = static_cast<std::int32_t>(i + 1);
  return SignedPerm::from_packed_unchecked(std::move(packed));
}

std::ostream& operator<<(std::ostream& os, const SignedPerm& p) {
  return os << to_cycle_string(p);
}

std::size_t SignedPermHash::operator()(const SignedPerm& p) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::int32_t v : p.packed()) {
    h ^= static_cast<std::uint32_t>(v);
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

// ---------------------------------------------------------------------------

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("matrix rows differ in length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatMatrix RatMatrix::from_int_rows(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> q;
  q.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<Rational> r;
    for (long v : row) r.emplace_back(v);
    q.push_back(std::move(r));
  }
  return from_rows(q);
}

RatMatrix RatMatrix::from_signed_perm(const SignedPerm& p) {
  RatMatrix m(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m(i, p.target(i)) = p.sign(i);
  return m;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& v) { return v == 0; });
}

namespace {

// Row echelon form in place; returns the rank and accumulates the
// determinant factor (sign of swaps times pivots).
std::size_t eliminate(std::vector<Rational>& a, std::size_t rows, std::size_t cols,
                      Rational* det) {
  std::size_t rank = 0;
  if (det) *det = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) {
      if (det) *det = 0;
      continue;
    }
    if (piv != rank) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a[piv * cols + k], a[rank * cols + k]);
      if (det) *det = -*det;
    }
    const Rational pivot = a[rank * cols + c];
    if (det) *det *= pivot;
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r * cols + c] == 0) continue;
      const Rational f = a[r * cols + c] / pivot;
      for (std::size_t k = c; k < cols; ++k) a[r * cols + k] -= f * a[rank * cols + k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t RatMatrix::rank() const {
  std::vector<Rational> a = data_;
  return eliminate(a, rows_, cols_, nullptr);
}

Rational RatMatrix::determinant() const {
  if (!is_square()) throw std::invalid_argument("determinant of non-square matrix");
  std::vector<Rational> a = data_;
  Rational det;
  std::size_t r = eliminate(a, rows_, cols_, &det);
  return r == rows_ ? det : Rational(0);
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  RatMatrix m(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& v = a(r, k);
      if (v == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) m(r, c) += v * b(k, c);
    }
  return m;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix sum: dimension mismatch");
  RatMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

RatMatrix operator*(const Rational& s, const RatMatrix& m) {
  RatMatrix out = m;
  for (auto& v : out.data_) v *= s;
  return out;
}

RatMatrix operator*(const SignedPerm& p, const RatMatrix& m) {
  if (p.size() != m.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const std::size_t src = p.target(r);
    for (std::size_t c = 0; c < m.cols(); ++c)
      out(r, c) = p.sign(r) < 0 ? Rational(-m(src, c)) : m(src, c);
  }
  return out;
}

RatMatrix operator*(const RatMatrix& m, const SignedPerm& p) {
  if (p.size() != m.cols()) throw std::invalid_argument("matrix product: dimension mismatch");
  RatMatrix out(m.rows(), m.cols());
  // (m*p)[r][t(j)] = m[r][j] * sign(j)
  for (std::size_t j = 0; j < p.size(); ++j) {
    const std::size_t dst = p.target(j);
    for (std::size_t r = 0; r < m.rows(); ++r)
      out(r, dst) = p.sign(j) < 0 ? Rational(-m(r, j)) : m(r, j);
  }
  return out;
}

RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

}  // namespace isospec
