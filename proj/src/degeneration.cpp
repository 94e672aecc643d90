#include "zal/degeneration.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <stdexcept>

#include "zal/parallel.hpp"

namespace zal::degeneration {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

StarGraphModel StarGraphModel::make(int g, int n, std::vector<double> lengths) {
  if (g < 0) throw std::invalid_argument("StarGraphModel: genus must be non-negative");
  if (n < 1 || n > 16) throw std::invalid_argument("StarGraphModel: need 1 <= n <= 16");
  if (2 * g - 2 + n <= 0) throw std::invalid_argument("StarGraphModel: need 2g - 2 + n > 0");
  if (static_cast<int>(lengths.size()) != n) throw std::invalid_argument("StarGraphModel: need n edge lengths");
  for (double l : lengths)
    if (!(l > 0.0)) throw std::invalid_argument("StarGraphModel: edge lengths must be positive");
  return {g, n, 2 * g - 2 + n, std::move(lengths)};
}

StarGraphModel StarGraphModel::uniform(int g, int n, double t) {
  if (n < 1) throw std::invalid_argument("StarGraphModel: need n >= 1");
  return make(g, n, std::vector<double>(static_cast<std::size_t>(n), wolpert_length(t)));
}

StarGraphModel StarGraphModel::perturbed(int g, int n, double t, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("StarGraphModel: need n >= 1");
  const double l = wolpert_length(t);
  const double lg = std::log(std::abs(t));
  const double scale = 1.0 / (lg * lg * lg * lg);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> c(-1.0, 1.0);
  std::vector<double> lengths;
  for (int j = 0; j < n; ++j) lengths.push_back(l + c(rng) * scale);
  return make(g, n, std::move(lengths));
}

double wolpert_length(double t) {
  double a = std::abs(t);
  if (!(a > 0.0 && a < 1.0)) throw std::domain_error("wolpert_length: need 0 < |t| < 1");
  return 2 * kPi * kPi / -std::log(a);
}

Eigen::MatrixXd matrix_A(const StarGraphModel& model) {
  const int n = model.n;
  const double alpha = model.alpha;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n + 1, n + 1);
  for (int j = 1; j <= n; ++j) {
    double l = model.edge_lengths[static_cast<std::size_t>(j - 1)];
    a(0, 0) += l / alpha;
    a(0, j) = -l / alpha;
    a(j, 0) = -l;
    a(j, j) = l;
  }
  return a;
}

Eigen::MatrixXd matrix_B(const StarGraphModel& model) {
  const auto& ls = model.edge_lengths;
  if (std::any_of(ls.begin(), ls.end(), [&](double l) { return l != ls.front(); })) {
    throw std::invalid_argument("matrix_B: edge lengths must be uniform");
  }
  return matrix_A(model);
}

SpectrumResult graph_spectrum(const Eigen::MatrixXd& m, int alpha) {
  const Eigen::Index size = m.rows();
  if (size != m.cols() || size < 2) throw std::invalid_argument("graph_spectrum: need a square matrix of size >= 2");
  if (alpha <= 0) throw std::invalid_argument("graph_spectrum: alpha must be positive");
  Eigen::VectorXd sqrt_mass = Eigen::VectorXd::Ones(size);
  sqrt_mass(0) = std::sqrt(static_cast<double>(alpha));
  // D^{1/2} M D^{-1/2}
  Eigen::MatrixXd sym = sqrt_mass.asDiagonal() * m * sqrt_mass.cwiseInverse().asDiagonal();
  sym = (sym + sym.transpose()) / 2;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
  if (solver.info() != Eigen::Success) throw std::runtime_error("graph_spectrum: eigen-solver failed");
  SpectrumResult out;
  const double norm = m.norm();
  for (Eigen::Index i = 0; i < size; ++i) {
    double lambda = solver.eigenvalues()(i);
    Eigen::VectorXd v = sqrt_mass.cwiseInverse().asDiagonal() * solver.eigenvectors().col(i);
    double res = (m * v - lambda * v).norm() / (v.norm() * norm);
    out.max_residual = std::max(out.max_residual, res);
    out.eigenvalues.push_back(lambda);
  }
  if (out.max_residual > 1e-10) throw std::runtime_error("graph_spectrum: eigenpair residual too large");
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  out.smallest = out.eigenvalues.front();
  return out;
}

double burger_product(const StarGraphModel& model) {
  SpectrumResult s = graph_spectrum(matrix_A(model), model.alpha);
  double p = 1.0;
  for (int j = 1; j <= model.n; ++j) p *= s.eigenvalues[static_cast<std::size_t>(j)] / model.edge_lengths[static_cast<std::size_t>(j - 1)];
  return p;
}

std::vector<double> laplacian_small_eigenvalues(const StarGraphModel& model) {
  SpectrumResult s = graph_spectrum(matrix_A(model), model.alpha);
  std::vector<double> out;
  for (int j = 1; j <= model.n; ++j) out.push_back(s.eigenvalues[static_cast<std::size_t>(j)] / (2 * kPi * kPi));
  return out;
}

Consistency degeneration_consistency(int g, int n, double t, double zx, const std::vector<double>& zt) {
  if (n < 1) throw std::invalid_argument("degeneration_consistency: need n >= 1");
  return degeneration_consistency(StarGraphModel::uniform(g, n, t), t, zx, zt);
}

Consistency degeneration_consistency(const StarGraphModel& model, double t, double zx, const std::vector<double>& zt) {
  if (!(zx > 0.0)) throw std::invalid_argument("degeneration_consistency: Z'(X, 1) must be positive");
  if (static_cast<int>(zt.size()) != model.n) throw std::invalid_argument("degeneration_consistency: need n values of Z'(T_j, 1)");
  double prod_zt = 1.0;
  for (double z : zt) {
    if (!(z > 0.0)) throw std::invalid_argument("degeneration_consistency: Z'(T_j, 1) must be positive");
    prod_zt *= z;
  }
  wolpert_length(t);  // domain check
  const int n = model.n;
  Consistency c;
  c.lhs12 = std::pow(kPi, -n) * (static_cast<double>(n) / model.alpha + 1) * zx * prod_zt *
            std::pow(std::abs(t), n / 6.0);
  std::vector<double> lambda = laplacian_small_eigenvalues(model);
  double rhs = std::pow(2 * kPi, n) * zx * prod_zt;
  for (int j = 0; j < n; ++j) {
    double l = model.edge_lengths[static_cast<std::size_t>(j)];
    rhs *= lambda[static_cast<std::size_t>(j)] / l * std::exp(-kPi * kPi / (3 * l));
  }
  c.rhs13 = rhs;
  return c;
}

std::vector<SweepRow> sweep(int g, int n, const std::vector<double>& ts, std::uint64_t seed) {
  return parallel_map<SweepRow>(ts.size(), [&](std::size_t i) {
    StarGraphModel model = StarGraphModel::perturbed(g, n, ts[i], seed);
    SweepRow row;
    row.t = ts[i];
    row.eigenvalues = graph_spectrum(matrix_A(model), model.alpha).eigenvalues;
    row.product = burger_product(model);
    row.target = static_cast<double>(n) / model.alpha + 1;
    row.ratio = row.product / row.target;
    return row;
  });
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "t";
  std::size_t width = rows.empty() ? 0 : rows.front().eigenvalues.size();
  for (std::size_t j = 0; j < width; ++j) out += ",mu_" + std::to_string(j);
  out += ",product,target,ratio\n";
  for (const auto& r : rows) {
    out += fmt17(r.t);
    for (double e : r.eigenvalues) out += "," + fmt17(e);
    out += "," + fmt17(r.product) + "," + fmt17(r.target) + "," + fmt17(r.ratio) + "\n";
  }
  return out;
}

}  // namespace zal::degeneration
