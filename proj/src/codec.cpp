#include "agdmm/codec.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace agdmm {
namespace {

std::map<std::int64_t, std::size_t> order_index(const std::vector<std::int64_t>& orders) {
  std::map<std::int64_t, std::size_t> out;
  for (std::size_t i = 0; i < orders.size(); ++i) out.emplace(orders[i], i);
  return out;
}

}  // namespace

CodeScheme scheme_build(ProblemKind kind, const Curve& curve, const NumericalSemigroup& s,
                        const std::string& method, std::int64_t m, std::optional<std::int64_t> n,
                        std::int64_t workers) {
  require(s == curve.weierstrass(), Errc::SemigroupCurveMismatch,
          "semigroup does not match the curve's Weierstrass semigroup");
  if (kind == ProblemKind::Poly)
    require(n.has_value(), Errc::BadInput, "poly schemes need n");
  SolutionPair sol = build_by_method(s, kind, method, m, kind == ProblemKind::Poly ? *n : m);

  require(workers <= curve.place_count(), Errc::NotEnoughPlaces,
          "requested " + std::to_string(workers) + " workers but the curve has " +
              std::to_string(curve.place_count()) + " places");
  require(workers >= sol.threshold, Errc::NotEnoughPlaces,
          "threshold " + std::to_string(sol.threshold) + " exceeds " + std::to_string(workers) +
              " workers");

  const std::int64_t k = sol.deg_a.back() + sol.deg_b.back();
  const std::int64_t q0 = curve.sub_order();
  BasisRegistry registry(curve, k + q0 * (q0 + 1));
  if (kind == ProblemKind::Poly)
    registry.apply_poly_products(sol.deg_a, sol.deg_b);
  else
    registry.apply_matdot_indicator(sol.deg_a, sol.deg_b, *sol.d);
  registry.freeze();

  auto all = curve.places();
  std::vector<Place> chosen(all.begin(), all.begin() + workers);

  CodeScheme scheme{kind,   curve, std::move(sol), std::move(registry), std::move(chosen),
                    k,      {},    {}};
  scheme.basis_orders = scheme.registry.orders_up_to(k);
  scheme.basis_eval.resize(scheme.basis_orders.size());
  for (std::size_t l = 0; l < scheme.basis_orders.size(); ++l) {
    auto& row = scheme.basis_eval[l];
    row.reserve(scheme.places.size());
    const FunctionElement& f = scheme.registry.entry(scheme.basis_orders[l]);
    for (const auto& place : scheme.places) row.push_back(fe_evaluate(curve, f, place));
  }
  return scheme;
}

std::vector<EncodedShare> encode(const CodeScheme& scheme, const Matrix& a, const Matrix& b) {
  const Field& gf = scheme.curve.field();
  require(a.cols() == b.rows(), Errc::DimensionMismatch, "cols(A) must equal rows(B)");
  const SolutionPair& sol = scheme.solution;
  const auto index = order_index(scheme.basis_orders);

  std::vector<Matrix> blocks_a, blocks_b;
  std::vector<std::int64_t> orders_a, orders_b;
  if (scheme.kind == ProblemKind::Poly) {
    for (std::int64_t i = 0; i < sol.m; ++i) {
      blocks_a.push_back(row_block(a, i, sol.m));
      orders_a.push_back(sol.deg_a[static_cast<std::size_t>(i)]);
    }
    for (std::int64_t j = 0; j < sol.n; ++j) {
      blocks_b.push_back(col_block(b, j, sol.n));
      orders_b.push_back(sol.deg_b[static_cast<std::size_t>(j)]);
    }
  } else {
    for (std::int64_t i = 0; i < sol.m; ++i) {
      blocks_a.push_back(col_block(a, i, sol.m));
      orders_a.push_back(sol.deg_a[static_cast<std::size_t>(i)]);
      blocks_b.push_back(row_block(b, i, sol.m));
      orders_b.push_back(*sol.d - sol.deg_a[static_cast<std::size_t>(i)]);
    }
  }

  std::vector<EncodedShare> shares;
  shares.reserve(scheme.places.size());
  for (std::size_t p = 0; p < scheme.places.size(); ++p) {
    EncodedShare share;
    share.place_index = static_cast<std::int32_t>(p);
    share.a_part = Matrix(blocks_a.front().rows(), blocks_a.front().cols());
    share.b_part = Matrix(blocks_b.front().rows(), blocks_b.front().cols());
    for (std::size_t i = 0; i < blocks_a.size(); ++i)
      add_scaled(gf, share.a_part, scheme.basis_eval[index.at(orders_a[i])][p], blocks_a[i]);
    for (std::size_t i = 0; i < blocks_b.size(); ++i)
      add_scaled(gf, share.b_part, scheme.basis_eval[index.at(orders_b[i])][p], blocks_b[i]);
    shares.push_back(std::move(share));
  }
  return shares;
}

WorkerResult worker_multiply(const CodeScheme& scheme, const EncodedShare& share) {
  WorkerResult out;
  out.place_index = share.place_index;
  out.product = multiply(scheme.curve.field(), share.a_part, share.b_part, &out.mults);
  return out;
}

Matrix build_interpolation_matrix(const CodeScheme& scheme,
                                  const std::vector<std::int32_t>& responders) {
  require(static_cast<std::int64_t>(responders.size()) >= scheme.degree_bound + 1,
          Errc::TooFewResponders,
          "need at least " + std::to_string(scheme.degree_bound + 1) + " responders");
  std::set<std::int32_t> seen(responders.begin(), responders.end());
  require(seen.size() == responders.size(), Errc::DuplicatePlace, "duplicate responder index");
  const auto rows = static_cast<std::int64_t>(scheme.basis_orders.size());
  Matrix g(rows, static_cast<std::int64_t>(responders.size()));
  for (std::int64_t l = 0; l < rows; ++l)
    for (std::size_t i = 0; i < responders.size(); ++i) {
      const auto r = responders[i];
      require(r >= 0 && r < scheme.workers(), Errc::OutOfRange, "responder index out of range");
      g(l, static_cast<std::int64_t>(i)) =
          scheme.basis_eval[static_cast<std::size_t>(l)][static_cast<std::size_t>(r)];
    }
  return g;
}

Matrix right_inverse(const Field& gf, const Matrix& g, std::uint64_t* mults) {
  const std::int64_t rows = g.rows();
  const std::int64_t cols = g.cols();
  Matrix work = g;
  Matrix e = identity_matrix(gf, rows);
  std::uint64_t ops = 0;

  std::vector<std::pair<std::int64_t, std::int64_t>> pivots;
  std::int64_t pivot_row = 0;
  for (std::int64_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::int64_t found = -1;
    for (std::int64_t r = pivot_row; r < rows; ++r)
      if (!(work(r, col) == gf.zero())) {
        found = r;
        break;
      }
    if (found < 0) continue;
    if (found != pivot_row)
      for (std::int64_t c = 0; c < cols; ++c) {
        std::swap(work(found, c), work(pivot_row, c));
        if (c < rows) std::swap(e(found, c), e(pivot_row, c));
      }
    const Gf inv = gf.inv(work(pivot_row, col));
    for (std::int64_t c = 0; c < cols; ++c) work(pivot_row, c) = gf.mul(inv, work(pivot_row, c));
    for (std::int64_t c = 0; c < rows; ++c) e(pivot_row, c) = gf.mul(inv, e(pivot_row, c));
    ops += static_cast<std::uint64_t>(cols + rows);
    for (std::int64_t r = 0; r < rows; ++r) {
      if (r == pivot_row) continue;
      const Gf factor = work(r, col);
      if (factor == gf.zero()) continue;
      for (std::int64_t c = 0; c < cols; ++c)
        work(r, c) = gf.sub(work(r, c), gf.mul(factor, work(pivot_row, c)));
      for (std::int64_t c = 0; c < rows; ++c)
        e(r, c) = gf.sub(e(r, c), gf.mul(factor, e(pivot_row, c)));
      ops += static_cast<std::uint64_t>(cols + rows);
    }
    pivots.emplace_back(pivot_row, col);
    ++pivot_row;
  }
  require(pivot_row == rows, Errc::RankDeficient, "interpolation matrix is rank deficient");

  Matrix r(cols, rows);
  for (const auto& [pr, pc] : pivots)
    for (std::int64_t j = 0; j < rows; ++j) r(pc, j) = e(pr, j);
  require(multiply(gf, g, r) == identity_matrix(gf, rows), Errc::RankDeficient,
          "right inverse verification failed");
  if (mults) *mults += ops;
  return r;
}

DecodeOutcome decode(const CodeScheme& scheme, const std::vector<WorkerResult>& results) {
  const Field& gf = scheme.curve.field();
  const std::int64_t threshold = scheme.threshold();
  require(static_cast<std::int64_t>(results.size()) >= threshold, Errc::TooFewResponders,
          "have " + std::to_string(results.size()) + " results, need " +
              std::to_string(threshold));
  std::set<std::int32_t> seen;
  for (const auto& r : results)
    require(seen.insert(r.place_index).second, Errc::DuplicatePlace,
            "duplicate result from place " + std::to_string(r.place_index));

  std::vector<const WorkerResult*> chosen;
  for (std::int64_t i = 0; i < threshold; ++i) chosen.push_back(&results[static_cast<std::size_t>(i)]);
  std::sort(chosen.begin(), chosen.end(),
            [](const WorkerResult* a, const WorkerResult* b) { return a->place_index < b->place_index; });

  DecodeReport report;
  report.threshold = threshold;
  for (const auto* r : chosen) report.responders_used.push_back(r->place_index);
  report.worker_mults = chosen.front()->mults;

  const Matrix g = build_interpolation_matrix(scheme, report.responders_used);
  const Matrix rinv = right_inverse(gf, g, &report.decode_mults);

  const std::int64_t br = chosen.front()->product.rows();
  const std::int64_t bc = chosen.front()->product.cols();
  for (const auto* r : chosen)
    require(r->product.rows() == br && r->product.cols() == bc, Errc::DimensionMismatch,
            "worker products differ in shape");

  const auto index = order_index(scheme.basis_orders);
  const SolutionPair& sol = scheme.solution;

  // coordinate l of the interpolated function, one matrix entry at a time
  auto coordinate = [&](std::size_t l) {
    Matrix x(br, bc);
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      const Gf w = rinv(static_cast<std::int64_t>(i), static_cast<std::int64_t>(l));
      add_scaled(gf, x, w, chosen[i]->product);
    }
    report.decode_mults += static_cast<std::uint64_t>(br) * static_cast<std::uint64_t>(bc) *
                           chosen.size();
    return x;
  };

  if (scheme.kind == ProblemKind::Matdot) {
    Matrix product = coordinate(index.at(*sol.d));
    DecodeOutcome out{std::move(product), std::move(report)};
    return out;
  }

  std::vector<Matrix> coords;
  coords.reserve(scheme.basis_orders.size());
  for (std::size_t l = 0; l < scheme.basis_orders.size(); ++l) coords.push_back(coordinate(l));

  Matrix product(br * sol.m, bc * sol.n);
  for (std::int64_t i = 0; i < sol.m; ++i)
    for (std::int64_t j = 0; j < sol.n; ++j) {
      const std::int64_t order = sol.deg_a[static_cast<std::size_t>(i)] +
                                 sol.deg_b[static_cast<std::size_t>(j)];
      place_block(product, coords[index.at(order)], i * br, j * bc);
    }
  DecodeOutcome out{std::move(product), std::move(report)};
  return out;
}

}  // namespace agdmm
