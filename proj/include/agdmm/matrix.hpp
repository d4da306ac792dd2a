#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "agdmm/field.hpp"
#include "agdmm/rng.hpp"

namespace agdmm {

// Dense row-major matrix of field element codes.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::int64_t rows, std::int64_t cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {
    require(rows >= 1 && cols >= 1, Errc::BadInput, "matrix dimensions must be positive");
  }

  std::int64_t rows() const { return rows_; }
  std::int64_t cols() const { return cols_; }
  Gf operator()(std::int64_t r, std::int64_t c) const {
    return data_[static_cast<std::size_t>(r * cols_ + c)];
  }
  Gf& operator()(std::int64_t r, std::int64_t c) {
    return data_[static_cast<std::size_t>(r * cols_ + c)];
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::int64_t rows_ = 0;
  std::int64_t cols_ = 0;
  std::vector<Gf> data_;
};

Matrix identity_matrix(const Field& gf, std::int64_t n);
Matrix random_matrix(const Field& gf, std::int64_t rows, std::int64_t cols,
                     Xoshiro256StarStar& rng);

// Schoolbook product; adds rows*cols*inner to *mults when given.
Matrix multiply(const Field& gf, const Matrix& a, const Matrix& b,
                std::uint64_t* mults = nullptr);
Matrix add(const Field& gf, const Matrix& a, const Matrix& b);
// acc += c * x
void add_scaled(const Field& gf, Matrix& acc, Gf c, const Matrix& x);

// i-th of m equal slices by rows / by columns; PartitionIndivisible when the
// dimension is not a multiple of m.
Matrix row_block(const Matrix& a, std::int64_t i, std::int64_t m);
Matrix col_block(const Matrix& a, std::int64_t i, std::int64_t m);
void place_block(Matrix& dest, const Matrix& block, std::int64_t r0, std::int64_t c0);

// CSV with header "# gf p k modulus=c0,c1,..."; cells are decimal codes.
void write_matrix_csv(std::ostream& out, const Field& gf, const Matrix& a);
struct CsvMatrix {
  Field field;
  Matrix matrix;
};
CsvMatrix read_matrix_csv(std::istream& in);

}  // namespace agdmm
