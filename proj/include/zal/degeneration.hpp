#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace zal::degeneration {

/// Weighted star graph: hub v0 of mass alpha = 2g - 2 + n joined to n
/// leaves of mass 1 by edges of lengths l_1..l_n.
struct StarGraphModel {
  int g = 0;
  int n = 0;
  int alpha = 0;
  std::vector<double> edge_lengths;

  /// Throws std::invalid_argument unless 1 <= n <= 16, alpha > 0 and all
  /// lengths are positive.
  static StarGraphModel make(int g, int n, std::vector<double> lengths);
  /// All edges of length l(t).
  static StarGraphModel uniform(int g, int n, double t);
  /// Edges l(t) + c_j / (log|t|)^4 with c_j uniform in [-1, 1] from seed.
  static StarGraphModel perturbed(int g, int n, double t, std::uint64_t seed);
};

struct SpectrumResult {
  std::vector<double> eigenvalues;  // ascending, n + 1 values
  double smallest = 0.0;
  double max_residual = 0.0;  // max ||M v - lambda v|| / ||M||
};

/// l(t) = 2 pi^2 / log(1/|t|) for 0 < |t| < 1.
double wolpert_length(double t);

/// Matrix of the operator M_t in the dual basis: D^{-1} L with D the mass
/// diagonal and L the weighted graph Laplacian.
Eigen::MatrixXd matrix_A(const StarGraphModel& model);

/// matrix_A with every edge of length l(t). Throws if the model is not uniform.
Eigen::MatrixXd matrix_B(const StarGraphModel& model);

/// Eigenvalues of a mass-weighted matrix D^{-1} L (masses alpha, 1, ..., 1),
/// solved densely after symmetrizing to D^{1/2} M D^{-1/2}.
SpectrumResult graph_spectrum(const Eigen::MatrixXd& m, int alpha);

/// prod_j mu_j / l_j over the n positive eigenvalues.
double burger_product(const StarGraphModel& model);

/// mu_j / (2 pi^2), the predicted small eigenvalues of the surface.
std::vector<double> laplacian_small_eigenvalues(const StarGraphModel& model);

struct Consistency {
  double lhs12 = 0.0;  // (1/pi^n)(n/alpha + 1) Zx prod Zt |t|^{n/6}
  double rhs13 = 0.0;  // (2 pi)^n Zx prod Zt prod (lambda_j / l_j) exp(-pi^2 / 3 l_j)
  double ratio() const { return rhs13 / lhs12; }
};

/// Both predictions of Z'(Z_t, 1) for synthetic Z'(X, 1), Z'(T_j, 1) inputs.
/// Uses exact Wolpert lengths unless a model is supplied.
Consistency degeneration_consistency(int g, int n, double t, double zx, const std::vector<double>& zt);
Consistency degeneration_consistency(const StarGraphModel& model, double t, double zx, const std::vector<double>& zt);

struct SweepRow {
  double t = 0.0;
  std::vector<double> eigenvalues;
  double product = 0.0;
  double target = 0.0;
  double ratio = 0.0;
};

/// Burger products over the given |t| values, with seeded perturbed lengths.
std::vector<SweepRow> sweep(int g, int n, const std::vector<double>& ts, std::uint64_t seed);
/// CSV "t,mu_0,...,mu_n,product,target,ratio".
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace zal::degeneration
