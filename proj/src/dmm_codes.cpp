#include "agdmm/dmm_codes.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "agdmm/linalg.hpp"

namespace agdmm {

namespace {

std::string num(std::uint64_t v) { return std::to_string(v); }

}  // namespace

void validate_params(const SchemeParams& p) {
  const Dims& d = p.dims;
  if (p.m < 1 || (is_polynomial(p.scheme) && p.n < 1))
    throw Error(ErrorCode::InvalidArgument, "partition counts must be >= 1");
  if (d.r == 0 || d.s == 0 || d.t == 0) throw Error(ErrorCode::InvalidArgument, "matrix dimensions must be positive");
  if (is_polynomial(p.scheme)) {
    if (d.r % p.m != 0) throw Error(ErrorCode::IndivisibleDimensions, "m = " + num(p.m) + " does not divide r = " + num(d.r));
    if (d.t % p.n != 0) throw Error(ErrorCode::IndivisibleDimensions, "n = " + num(p.n) + " does not divide t = " + num(d.t));
  } else if (d.s % p.m != 0) {
    throw Error(ErrorCode::IndivisibleDimensions, "m = " + num(p.m) + " does not divide s = " + num(d.s));
  }

  validate_curve(p.curve);
  if (is_ag(p.scheme) == (p.curve.kind == CurveKind::Rational))
    throw Error(ErrorCode::SchemeCurveMismatch,
                std::string(to_string(p.scheme)) + " on a " + std::string(to_string(p.curve.kind)) + " curve");
  if (is_ag(p.scheme)) {
    const auto mode = p.scheme == Scheme::PolyAG ? FriendlyMode::mn(p.m) : FriendlyMode::matdot(p.m);
    const auto report = verify_friendly(p.curve, mode);
    if (!report.pass()) {
      std::string failed;
      for (const auto& c : report.conditions)
        if (!c.pass) failed += (failed.empty() ? "" : ", ") + c.name;
      throw Error(ErrorCode::NotFriendly, "curve fails: " + failed);
    }
  }
}

BasisDescriptor descriptor_from_monomials(Scheme scheme, std::vector<Monomial> f, std::vector<Monomial> g,
                                          std::int64_t x_weight, std::int64_t y_weight) {
  BasisDescriptor desc{scheme, std::move(f), std::move(g), {}, std::nullopt, {}, std::nullopt};
  auto weight = [&](Monomial mono) { return x_weight * mono.x_exp + y_weight * mono.y_exp; };
  for (const auto& fi : desc.f)
    for (const auto& gj : desc.g) desc.pole_orders.push_back(weight(fi) + weight(gj));

  if (is_polynomial(scheme)) {
    for (const auto& fi : desc.f)
      for (const auto& gj : desc.g) desc.product_monomials.push_back({fi.x_exp + gj.x_exp, fi.y_exp + gj.y_exp});
  } else {
    // Distinct product monomials sorted by pole order; the diagonal order
    // (m - 1 for the standard choice) carries AB.
    std::map<std::pair<std::int64_t, std::pair<std::uint32_t, std::uint32_t>>, Monomial> distinct;
    for (const auto& fi : desc.f)
      for (const auto& gj : desc.g) {
        Monomial prod{fi.x_exp + gj.x_exp, fi.y_exp + gj.y_exp};
        distinct[{weight(prod), {prod.x_exp, prod.y_exp}}] = prod;
      }
    for (const auto& [key, mono] : distinct) desc.product_monomials.push_back(mono);
    if (!desc.f.empty() && !desc.g.empty()) {
      const Monomial diag{desc.f[0].x_exp + desc.g[0].x_exp, desc.f[0].y_exp + desc.g[0].y_exp};
      desc.target_order = weight(diag);
      const auto it = std::find(desc.product_monomials.begin(), desc.product_monomials.end(), diag);
      desc.target_column = static_cast<std::size_t>(it - desc.product_monomials.begin());
    }
  }
  return desc;
}

BasisDescriptor basis_descriptor(const SchemeParams& params) {
  validate_params(params);
  const std::uint32_t m = params.m, n = params.n;
  std::vector<Monomial> f, g;
  switch (params.scheme) {
    case Scheme::RationalPoly:
      // f_i = x^(i-1), g_j = x^(m(j-1))
      for (std::uint32_t i = 0; i < m; ++i) f.push_back({i, 0});
      for (std::uint32_t j = 0; j < n; ++j) g.push_back({m * j, 0});
      return descriptor_from_monomials(params.scheme, f, g, 1, 0);
    case Scheme::PolyAG:
      // f_i = y^(i-1), g_j = x^(j-1); pole orders 1 and m at the
      // distinguished place.
      for (std::uint32_t i = 0; i < m; ++i) f.push_back({0, i});
      for (std::uint32_t j = 0; j < n; ++j) g.push_back({j, 0});
      return descriptor_from_monomials(params.scheme, f, g, m, 1);
    case Scheme::RationalMatdot:
      // f_i = x^(i-1), g_j = x^(m-j)
      for (std::uint32_t i = 0; i < m; ++i) f.push_back({i, 0});
      for (std::uint32_t j = 0; j < m; ++j) g.push_back({m - 1 - j, 0});
      return descriptor_from_monomials(params.scheme, f, g, 1, 0);
    case Scheme::MatdotAG:
      // f_i = y^(i-1), g_j = y^(m-j)
      for (std::uint32_t i = 0; i < m; ++i) f.push_back({0, i});
      for (std::uint32_t j = 0; j < m; ++j) g.push_back({0, m - 1 - j});
      return descriptor_from_monomials(params.scheme, f, g, 0, 1);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown scheme");
}

bool check_code_condition(const BasisDescriptor& desc, Scheme scheme) {
  if (is_polynomial(scheme)) {
    std::set<std::int64_t> seen(desc.pole_orders.begin(), desc.pole_orders.end());
    return seen.size() == desc.pole_orders.size();
  }
  if (!desc.target_order || desc.f.size() != desc.g.size()) return false;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < desc.f.size(); ++i)
    for (std::size_t j = 0; j < desc.g.size(); ++j)
      if (desc.pole_order(i, j) == *desc.target_order) {
        if (i != j) return false;
        ++hits;
      }
  return hits == desc.f.size();
}

std::uint64_t recovery_threshold(const SchemeParams& params) {
  const std::uint64_t m = params.m, n = params.n;
  switch (params.scheme) {
    case Scheme::RationalPoly: return m * n;
    case Scheme::PolyAG: return genus(params.curve) + m * n;
    case Scheme::RationalMatdot: return 2 * m - 1;
    case Scheme::MatdotAG: return 2 * genus(params.curve) + 2 * m - 1;
  }
  return 0;
}

std::uint64_t pole_degree_threshold(const SchemeParams& params, const BasisDescriptor& desc) {
  const PoleData poles = pole_data(params.curve);
  std::uint64_t max_x = 0, max_y = 0;
  for (const auto& mono : desc.product_monomials) {
    max_x = std::max<std::uint64_t>(max_x, mono.x_exp);
    max_y = std::max<std::uint64_t>(max_y, mono.y_exp);
  }
  return max_x * poles.x_pole_degree + max_y * poles.y_pole_degree + 1;
}

std::uint64_t worker_mul_count(const SchemeParams& params) {
  const Dims& d = params.dims;
  if (is_polynomial(params.scheme)) return std::uint64_t(d.r / params.m) * d.s * (d.t / params.n);
  return std::uint64_t(d.r) * (d.s / params.m) * d.t;
}

Blocks partition(const Matrix& a, const Matrix& b, const SchemeParams& params) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::DimensionMismatch, "A has " + num(a.cols()) + " columns but B has " + num(b.rows()) + " rows");
  const std::size_t r = a.rows(), s = a.cols(), t = b.cols();
  const std::size_t m = params.m, n = params.n;
  Blocks blocks;
  if (is_polynomial(params.scheme)) {
    if (r % m != 0 || t % n != 0) throw Error(ErrorCode::IndivisibleDimensions, "r/m or t/n is not an integer");
    for (std::size_t i = 0; i < m; ++i) blocks.a.push_back(a.block(i * (r / m), 0, r / m, s));
    for (std::size_t j = 0; j < n; ++j) blocks.b.push_back(b.block(0, j * (t / n), s, t / n));
  } else {
    if (s % m != 0) throw Error(ErrorCode::IndivisibleDimensions, "s/m is not an integer");
    for (std::size_t i = 0; i < m; ++i) blocks.a.push_back(a.block(0, i * (s / m), r, s / m));
    for (std::size_t j = 0; j < m; ++j) blocks.b.push_back(b.block(j * (s / m), 0, s / m, t));
  }
  return blocks;
}

std::vector<EncodedTask> encode(const Blocks& blocks, const BasisDescriptor& desc, const CurveSpec& curve,
                                std::span<const Place> places, std::uint64_t threshold, EncodeStats* stats,
                                kernels::Exec exec) {
  if (places.size() < threshold)
    throw Error(ErrorCode::TooFewPlaces, num(places.size()) + " places for recovery threshold " + num(threshold));
  if (blocks.a.size() != desc.f.size() || blocks.b.size() != desc.g.size())
    throw Error(ErrorCode::DimensionMismatch, "block count does not match the encoding functions");

  // Evaluate every encoding function up front so failures surface before
  // any parallel work starts.
  const std::size_t nf = desc.f.size(), ng = desc.g.size();
  std::vector<Element> fval(places.size() * nf), gval(places.size() * ng);
  for (std::size_t k = 0; k < places.size(); ++k) {
    for (std::size_t i = 0; i < nf; ++i)
      fval[k * nf + i] = evaluate_monomial(curve, places[k], desc.f[i].x_exp, desc.f[i].y_exp);
    for (std::size_t j = 0; j < ng; ++j)
      gval[k * ng + j] = evaluate_monomial(curve, places[k], desc.g[j].x_exp, desc.g[j].y_exp);
  }

  const Matrix& a0 = blocks.a.front();
  const Matrix& b0 = blocks.b.front();
  std::vector<EncodedTask> tasks;
  tasks.reserve(places.size());
  for (const Place& p : places)
    tasks.push_back(EncodedTask{p.id, Matrix(a0.field(), a0.rows(), a0.cols()), Matrix(b0.field(), b0.rows(), b0.cols())});

  auto fill = [&](std::size_t k) {
    for (std::size_t i = 0; i < nf; ++i) kernels::axpy(tasks[k].f_share, fval[k * nf + i], blocks.a[i], kernels::Exec::Serial);
    for (std::size_t j = 0; j < ng; ++j) kernels::axpy(tasks[k].g_share, gval[k * ng + j], blocks.b[j], kernels::Exec::Serial);
  };
  if (exec == kernels::Exec::Serial) {
    for (std::size_t k = 0; k < tasks.size(); ++k) fill(k);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(tasks.size()); ++k) fill(static_cast<std::size_t>(k));
  }

  if (stats)
    stats->mul_count += places.size() * (nf * a0.rows() * a0.cols() + ng * b0.rows() * b0.cols());
  return tasks;
}

WorkerResult worker_multiply(const EncodedTask& task) {
  auto product = linalg::matmul(task.f_share, task.g_share, kernels::Exec::Serial);
  return WorkerResult{task.place, std::move(product.value), 0, product.mul_count};
}

Matrix evaluation_matrix(const CurveSpec& curve, const BasisDescriptor& desc, std::span<const Place> places) {
  Matrix m(curve.field, places.size(), desc.product_monomials.size());
  for (std::size_t k = 0; k < places.size(); ++k)
    for (std::size_t c = 0; c < desc.product_monomials.size(); ++c) {
      const Monomial mono = desc.product_monomials[c];
      m(k, c) = evaluate_monomial(curve, places[k], mono.x_exp, mono.y_exp);
    }
  return m;
}

DecodeReport decode(std::span<const WorkerResult> results, const BasisDescriptor& desc, const SchemeParams& params,
                    std::span<const Place> all_places, DecodeMethod method) {
  const std::uint64_t R = recovery_threshold(params);
  if (results.size() < R)
    throw Error(ErrorCode::InsufficientResponses, num(results.size()) + " responses, threshold " + num(R));

  const Field& field = params.curve.field;
  const std::size_t K = desc.product_monomials.size();
  const std::size_t a = results.front().h_value.rows(), b = results.front().h_value.cols();

  std::vector<Place> used;
  std::set<std::size_t> seen;
  Matrix rhs(field, R, a * b);
  for (std::size_t k = 0; k < R; ++k) {
    const WorkerResult& res = results[k];
    if (res.place >= all_places.size() || all_places[res.place].id != res.place)
      throw Error(ErrorCode::InvalidArgument, "unknown place id " + num(res.place));
    if (!seen.insert(res.place).second) throw Error(ErrorCode::InvalidArgument, "place " + num(res.place) + " answered twice");
    if (res.h_value.rows() != a || res.h_value.cols() != b)
      throw Error(ErrorCode::DimensionMismatch, "worker result shape differs");
    used.push_back(all_places[res.place]);
    std::copy(res.h_value.data().begin(), res.h_value.data().end(), rhs.row(k).begin());
  }

  DecodeReport report{Matrix(field, params.dims.r, params.dims.t), {}, {}, 0};
  for (const Place& p : used) report.places_used.push_back(p.id);

  const Matrix eval = evaluation_matrix(params.curve, desc, used);
  Matrix coeffs(field, K, a * b);
  auto place_list = [&] {
    std::string s;
    for (const Place& p : used) s += (s.empty() ? "" : ",") + num(p.id);
    return s;
  };
  try {
    if (method == DecodeMethod::Eliminate) {
      linalg::SolveStats stats;
      coeffs = linalg::solve_exact(eval, rhs, &stats);
      report.mul_count += stats.mul_count;
    } else {
      // G = eval^T is K x R; coefficients = H^T-rows times G^-1.
      linalg::SolveStats stats;
      const Matrix ginv = linalg::right_inverse(eval.transpose(), &stats);  // R x K
      report.mul_count += stats.mul_count;
      std::vector<std::size_t> wanted;
      if (desc.target_column && !is_polynomial(params.scheme)) {
        wanted.push_back(*desc.target_column);
      } else {
        for (std::size_t c = 0; c < K; ++c) wanted.push_back(c);
      }
      for (std::size_t c : wanted)
        for (std::size_t k = 0; k < R; ++k) {
          const Element w = ginv(k, c);
          if (w == field.zero()) continue;
          auto dst = coeffs.row(c);
          auto src = rhs.row(k);
          for (std::size_t e = 0; e < a * b; ++e) dst[e] = field.add(dst[e], field.mul(w, src[e]));
        }
      report.mul_count += wanted.size() * R * a * b;
    }
  } catch (const Error& err) {
    if (err.code() == ErrorCode::RankDeficient)
      throw Error(ErrorCode::RankDeficient, std::string(err.what()) + " at places {" + place_list() + "}");
    throw;
  }

  for (std::size_t c = 0; c < K; ++c) {
    Matrix block(field, a, b);
    std::copy(coeffs.row(c).begin(), coeffs.row(c).end(), block.data().begin());
    report.coefficients.push_back(std::move(block));
  }

  if (is_polynomial(params.scheme)) {
    const std::size_t n = desc.g.size();
    for (std::size_t i = 0; i < desc.f.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) report.product.set_block(i * a, j * b, report.coefficients[i * n + j]);
  } else {
    report.product = report.coefficients.at(*desc.target_column);
  }
  return report;
}

}  // namespace agdmm
