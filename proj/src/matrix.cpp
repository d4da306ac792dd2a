#include "agdmm/matrix.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace agdmm {

Matrix identity_matrix(const Field& gf, std::int64_t n) {
  Matrix out(n, n);
  for (std::int64_t i = 0; i < n; ++i) out(i, i) = gf.one();
  return out;
}

Matrix random_matrix(const Field& gf, std::int64_t rows, std::int64_t cols,
                     Xoshiro256StarStar& rng) {
  Matrix out(rows, cols);
  for (std::int64_t r = 0; r < rows; ++r)
    for (std::int64_t c = 0; c < cols; ++c)
      out(r, c) = gf.element(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(gf.order()))));
  return out;
}

Matrix multiply(const Field& gf, const Matrix& a, const Matrix& b, std::uint64_t* mults) {
  require(a.cols() == b.rows(), Errc::DimensionMismatch,
          "inner dimensions " + std::to_string(a.cols()) + " and " + std::to_string(b.rows()) +
              " differ");
  Matrix out(a.rows(), b.cols());
  for (std::int64_t r = 0; r < a.rows(); ++r)
    for (std::int64_t c = 0; c < b.cols(); ++c) {
      Gf acc = gf.zero();
      for (std::int64_t i = 0; i < a.cols(); ++i)
        acc = gf.add(acc, gf.mul(a(r, i), b(i, c)));
      out(r, c) = acc;
    }
  if (mults)
    *mults += static_cast<std::uint64_t>(a.rows()) * static_cast<std::uint64_t>(b.cols()) *
              static_cast<std::uint64_t>(a.cols());
  return out;
}

Matrix add(const Field& gf, const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), Errc::DimensionMismatch,
          "matrix shapes differ");
  Matrix out(a.rows(), a.cols());
  for (std::int64_t r = 0; r < a.rows(); ++r)
    for (std::int64_t c = 0; c < a.cols(); ++c) out(r, c) = gf.add(a(r, c), b(r, c));
  return out;
}

void add_scaled(const Field& gf, Matrix& acc, Gf c, const Matrix& x) {
  require(acc.rows() == x.rows() && acc.cols() == x.cols(), Errc::DimensionMismatch,
          "matrix shapes differ");
  for (std::int64_t r = 0; r < x.rows(); ++r)
    for (std::int64_t cc = 0; cc < x.cols(); ++cc)
      acc(r, cc) = gf.add(acc(r, cc), gf.mul(c, x(r, cc)));
}

Matrix row_block(const Matrix& a, std::int64_t i, std::int64_t m) {
  require(a.rows() % m == 0, Errc::PartitionIndivisible,
          std::to_string(a.rows()) + " rows not divisible by " + std::to_string(m));
  const std::int64_t h = a.rows() / m;
  Matrix out(h, a.cols());
  for (std::int64_t r = 0; r < h; ++r)
    for (std::int64_t c = 0; c < a.cols(); ++c) out(r, c) = a(i * h + r, c);
  return out;
}

Matrix col_block(const Matrix& a, std::int64_t i, std::int64_t m) {
  require(a.cols() % m == 0, Errc::PartitionIndivisible,
          std::to_string(a.cols()) + " cols not divisible by " + std::to_string(m));
  const std::int64_t w = a.cols() / m;
  Matrix out(a.rows(), w);
  for (std::int64_t r = 0; r < a.rows(); ++r)
    for (std::int64_t c = 0; c < w; ++c) out(r, c) = a(r, i * w + c);
  return out;
}

void place_block(Matrix& dest, const Matrix& block, std::int64_t r0, std::int64_t c0) {
  require(r0 + block.rows() <= dest.rows() && c0 + block.cols() <= dest.cols(),
          Errc::DimensionMismatch, "block does not fit");
  for (std::int64_t r = 0; r < block.rows(); ++r)
    for (std::int64_t c = 0; c < block.cols(); ++c) dest(r0 + r, c0 + c) = block(r, c);
}

void write_matrix_csv(std::ostream& out, const Field& gf, const Matrix& a) {
  out << "# gf " << gf.characteristic() << " " << gf.degree() << " modulus=";
  const auto& mod = gf.modulus();
  for (std::size_t i = 0; i < mod.size(); ++i) out << (i ? "," : "") << mod[i];
  out << "\n";
  for (std::int64_t r = 0; r < a.rows(); ++r) {
    for (std::int64_t c = 0; c < a.cols(); ++c) out << (c ? "," : "") << a(r, c).code;
    out << "\n";
  }
}

CsvMatrix read_matrix_csv(std::istream& in) {
  std::string line;
  require(static_cast<bool>(std::getline(in, line)), Errc::IoError, "empty matrix file");
  std::istringstream head(line);
  std::string hash, tag, moduluskv;
  std::int64_t p = 0, k = 0;
  head >> hash >> tag >> p >> k >> moduluskv;
  require(hash == "#" && tag == "gf" && moduluskv.rfind("modulus=", 0) == 0, Errc::BadInput,
          "bad matrix header: " + line);
  std::vector<std::int64_t> mod;
  std::istringstream modstream(moduluskv.substr(8));
  for (std::string cell; std::getline(modstream, cell, ',');) mod.push_back(std::stoll(cell));
  Field gf(p, k, mod);

  std::vector<std::vector<Gf>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<Gf> row;
    std::istringstream cells(line);
    for (std::string cell; std::getline(cells, cell, ',');)
      row.push_back(gf.element(std::stoll(cell)));
    require(rows.empty() || row.size() == rows.front().size(), Errc::BadInput,
            "ragged matrix row");
    rows.push_back(std::move(row));
  }
  require(!rows.empty() && !rows.front().empty(), Errc::BadInput, "matrix has no cells");
  Matrix m(static_cast<std::int64_t>(rows.size()), static_cast<std::int64_t>(rows.front().size()));
  for (std::int64_t r = 0; r < m.rows(); ++r)
    for (std::int64_t c = 0; c < m.cols(); ++c)
      m(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  return CsvMatrix{std::move(gf), std::move(m)};
}

}  // namespace agdmm
