#include "dhall/field_matrix.hpp"

#include "dhall/errors.hpp"

#include <string>
#include <utility>

namespace dhall {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p, std::uint32_t max_prime) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (p > max_prime)
    throw std::invalid_argument("characteristic " + std::to_string(p) + " exceeds configured bound " +
                                std::to_string(max_prime));
}

Fp PrimeField::inv(Fp a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
  // Fermat: a^(p-2).
  Fp result = 1, base = a % p_;
  for (std::uint32_t e = p_ - 2; e > 0; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

Fp PrimeField::reduce(long long v) const {
  long long r = v % static_cast<long long>(p_);
  return static_cast<Fp>(r < 0 ? r + p_ : r);
}

FpMatrix::FpMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FpMatrix::FpMatrix(PrimeField field, std::size_t rows, std::size_t cols, std::vector<Fp> entries)
    : field_(field), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw MismatchError("matrix entry count does not match its shape");
  for (Fp e : data_)
    if (e >= field_.p()) throw std::invalid_argument("matrix entry out of range for F_p");
}

FpMatrix::FpMatrix(PrimeField field, std::initializer_list<std::initializer_list<long long>> rows)
    : field_(field), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw MismatchError("ragged matrix literal");
    for (long long v : r) data_.push_back(field_.reduce(v));
  }
}

FpMatrix FpMatrix::identity(PrimeField field, std::size_t n) {
  FpMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

bool FpMatrix::is_zero() const {
  for (Fp e : data_)
    if (e) return false;
  return true;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = data_[r * cols_ + c];
  return t;
}

FpMatrix FpMatrix::scaled(Fp s) const {
  FpMatrix out = *this;
  for (Fp& e : out.data_) e = field_.mul(e, s % field_.p());
  return out;
}

std::vector<Fp> FpMatrix::apply(std::span<const Fp> v) const {
  if (v.size() != cols_) throw MismatchError("vector length does not match matrix columns");
  std::vector<Fp> out(rows_, 0);
  const Fp p = field_.p();
  for (std::size_t r = 0; r < rows_; ++r) {
    Fp acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc = (acc + data_[r * cols_ + c] * v[c]) % p;
    out[r] = acc;
  }
  return out;
}

FpMatrix FpMatrix::row_slice(std::size_t begin, std::size_t end) const {
  return FpMatrix(field_, end - begin, cols_,
                  std::vector<Fp>(data_.begin() + begin * cols_, data_.begin() + end * cols_));
}

FpMatrix FpMatrix::stacked(const FpMatrix& below) const {
  if (below.cols_ != cols_ && below.rows_ != 0 && rows_ != 0) throw MismatchError("stacking matrices of different widths");
  if (rows_ == 0) return below;
  if (below.rows_ == 0) return *this;
  std::vector<Fp> d = data_;
  d.insert(d.end(), below.data_.begin(), below.data_.end());
  return FpMatrix(field_, rows_ + below.rows_, cols_, std::move(d));
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
  if (a.field_ != b.field_) throw MismatchError("matrices over different fields");
  if (a.cols_ != b.rows_) throw MismatchError("matrix product shape mismatch");
  const Fp p = a.field_.p();
  FpMatrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      Fp x = a.data_[i * a.cols_ + k];
      if (!x) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        out.data_[i * b.cols_ + j] = (out.data_[i * b.cols_ + j] + x * b.data_[k * b.cols_ + j]) % p;
    }
  return out;
}

FpMatrix operator+(const FpMatrix& a, const FpMatrix& b) {
  if (a.field_ != b.field_ || a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw MismatchError("matrix sum shape mismatch");
  FpMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
  return out;
}

FpMatrix operator-(const FpMatrix& a, const FpMatrix& b) {
  if (a.field_ != b.field_ || a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw MismatchError("matrix difference shape mismatch");
  FpMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
  return out;
}

bool operator==(const FpMatrix& a, const FpMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

EchelonForm row_reduce(const FpMatrix& m) {
  const PrimeField& f = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Fp> a = m.entries();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    const Fp s = f.inv(a[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = f.mul(a[r * cols + j], s);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Fp x = a[i * cols + c];
      if (!x) continue;
      for (std::size_t j = c; j < cols; ++j) a[i * cols + j] = f.sub(a[i * cols + j], f.mul(x, a[r * cols + j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return {FpMatrix(f, rows, cols, std::move(a)), std::move(pivots)};
}

std::size_t rank(const FpMatrix& m) { return row_reduce(m).pivots.size(); }

FpMatrix kernel_basis(const FpMatrix& m) {
  const auto ech = row_reduce(m);
  const PrimeField& f = m.field();
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : ech.pivots) is_pivot[c] = true;
  std::vector<Fp> out;
  std::size_t count = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Fp> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = f.neg(ech.reduced(i, free));
    out.insert(out.end(), v.begin(), v.end());
    ++count;
  }
  return FpMatrix(f, count, cols, std::move(out));
}

FpMatrix row_space_basis(const FpMatrix& m) {
  auto ech = row_reduce(m);
  return ech.reduced.row_slice(0, ech.pivots.size());
}

FpMatrix image_basis(const FpMatrix& m) { return row_space_basis(m.transpose()); }

std::optional<std::vector<Fp>> solve(const FpMatrix& a, std::span<const Fp> b) {
  if (b.size() != a.rows()) throw MismatchError("right-hand side length does not match matrix rows");
  const PrimeField& f = a.field();
  const std::size_t rows = a.rows(), cols = a.cols();
  FpMatrix aug(f, rows, cols + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) aug.set(r, c, a(r, c));
    aug.set(r, cols, b[r] % f.p());
  }
  const auto ech = row_reduce(aug);
  std::vector<Fp> x(cols, 0);
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    if (ech.pivots[i] == cols) return std::nullopt;
    x[ech.pivots[i]] = ech.reduced(i, cols);
  }
  return x;
}

std::optional<FpMatrix> inverse(const FpMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  const PrimeField& f = m.field();
  FpMatrix aug(f, n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.set(r, c, m(r, c));
    aug.set(r, n + r, 1);
  }
  const auto ech = row_reduce(aug);
  if (ech.pivots.size() < n || (n > 0 && ech.pivots[n - 1] != n - 1)) return std::nullopt;
  FpMatrix inv(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.set(r, c, ech.reduced(r, n + c));
  return inv;
}

bool is_invertible(const FpMatrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

FpMatrix complement_rows(const FpMatrix& sub, const FpMatrix& ambient) {
  const PrimeField& f = ambient.field();
  FpMatrix basis = row_space_basis(sub);
  std::size_t current = basis.rows();
  std::vector<Fp> chosen;
  std::size_t count = 0;
  for (std::size_t r = 0; r < ambient.rows(); ++r) {
    FpMatrix row(f, 1, ambient.cols(), std::vector<Fp>(ambient.row(r).begin(), ambient.row(r).end()));
    FpMatrix trial = basis.stacked(row);
    if (rank(trial) > current) {
      basis = row_space_basis(trial);
      current = basis.rows();
      chosen.insert(chosen.end(), ambient.row(r).begin(), ambient.row(r).end());
      ++count;
    }
  }
  return FpMatrix(f, count, ambient.cols(), std::move(chosen));
}

bool in_row_space(const FpMatrix& basis, std::span<const Fp> v) {
  FpMatrix row(basis.field(), 1, v.size(), std::vector<Fp>(v.begin(), v.end()));
  if (basis.rows() == 0) return row.is_zero();
  return rank(basis.stacked(row)) == rank(basis);
}

}  // namespace dhall
