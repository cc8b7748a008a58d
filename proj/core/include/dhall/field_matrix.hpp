#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace dhall {

using Fp = std::uint32_t;

// The prime field F_p. Construction rejects composite p and p above the
// configured ceiling.
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultMaxPrime = 13;

  explicit PrimeField(std::uint32_t p, std::uint32_t max_prime = kDefaultMaxPrime);

  std::uint32_t p() const { return p_; }

  Fp add(Fp a, Fp b) const { return (a + b) % p_; }
  Fp sub(Fp a, Fp b) const { return (a + p_ - b) % p_; }
  Fp mul(Fp a, Fp b) const { return (a * b) % p_; }
  Fp neg(Fp a) const { return a == 0 ? 0 : p_ - a; }
  Fp inv(Fp a) const;
  Fp reduce(long long v) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

// Dense row-major matrix over F_p. A rows x cols matrix acts on column
// vectors of length cols.
class FpMatrix {
 public:
  FpMatrix(PrimeField field, std::size_t rows, std::size_t cols);
  FpMatrix(PrimeField field, std::size_t rows, std::size_t cols, std::vector<Fp> entries);
  FpMatrix(PrimeField field, std::initializer_list<std::initializer_list<long long>> rows);

  static FpMatrix identity(PrimeField field, std::size_t n);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Fp operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Fp v) { data_[r * cols_ + c] = v % field_.p(); }
  std::span<const Fp> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Fp>& entries() const { return data_; }

  bool is_zero() const;
  FpMatrix transpose() const;
  FpMatrix scaled(Fp s) const;
  std::vector<Fp> apply(std::span<const Fp> v) const;

  // Rows [begin, end).
  FpMatrix row_slice(std::size_t begin, std::size_t end) const;
  FpMatrix stacked(const FpMatrix& below) const;

  friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
  friend FpMatrix operator+(const FpMatrix& a, const FpMatrix& b);
  friend FpMatrix operator-(const FpMatrix& a, const FpMatrix& b);
  friend bool operator==(const FpMatrix& a, const FpMatrix& b);
  friend auto operator<=>(const FpMatrix& a, const FpMatrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return a.data_ <=> b.data_;
  }

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Fp> data_;
};

struct EchelonForm {
  FpMatrix reduced;                 // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

EchelonForm row_reduce(const FpMatrix& m);

std::size_t rank(const FpMatrix& m);

// Rows form a basis of {v : m v = 0}.
FpMatrix kernel_basis(const FpMatrix& m);

// Rows form a basis of the row space (reduced echelon rows).
FpMatrix row_space_basis(const FpMatrix& m);

// Rows form a basis of the column space of m, i.e. the image of m.
FpMatrix image_basis(const FpMatrix& m);

// Some x with a x = b, or nullopt if inconsistent. Throws MismatchError when
// b.size() != a.rows().
std::optional<std::vector<Fp>> solve(const FpMatrix& a, std::span<const Fp> b);

std::optional<FpMatrix> inverse(const FpMatrix& m);

bool is_invertible(const FpMatrix& m);

// Rows of `ambient` (in order) that extend a basis of span(sub) to a basis of
// span(sub) + span(ambient).
FpMatrix complement_rows(const FpMatrix& sub, const FpMatrix& ambient);

// Whether v lies in the row space spanned by `basis`.
bool in_row_space(const FpMatrix& basis, std::span<const Fp> v);

}  // namespace dhall
