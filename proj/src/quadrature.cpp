#include "l2geo/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace l2geo {

GaussLegendre GaussLegendre::rule(int point_count) {
  if (point_count < 1) throw std::invalid_argument("GaussLegendre: point count must be >= 1");
  const int n = point_count;
  if (n == 1) return {Vector::Zero(1), Vector::Constant(1, 2.0)};

  // Golub-Welsch: nodes are the eigenvalues of the symmetric tridiagonal
  // Jacobi matrix with off-diagonal b_i = i / sqrt(4 i^2 - 1); the weight of
  // node j is 2 * (first eigenvector component)^2.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) {
    const double b = i / std::sqrt(4.0 * i * i - 1.0);
    jacobi(i, i - 1) = b;
    jacobi(i - 1, i) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("GaussLegendre: eigen decomposition failed");
  }
  GaussLegendre gl;
  gl.nodes = solver.eigenvalues();
  gl.weights = 2.0 * solver.eigenvectors().row(0).transpose().array().square();
  return gl;
}

void QuadratureRule::validate() const {
  if (nodes_per_panel < 2) throw std::invalid_argument("QuadratureRule: nodes_per_panel must be >= 2");
  if (panels_per_piece < 1) throw std::invalid_argument("QuadratureRule: panels_per_piece must be >= 1");
  if (max_panels_per_piece < panels_per_piece) {
    throw std::invalid_argument("QuadratureRule: panel cap below initial panel count");
  }
  if (!(refine_rel_tol > 0.0)) throw std::invalid_argument("QuadratureRule: refine tolerance must be > 0");
}

namespace {

// Composite rule over s in [0,1] for the integrand tangent_norm(m, start + s*delta, delta).
double integrate_piece(const Vector& start, const Vector& delta, const MetricSpec& m,
                       const GaussLegendre& gl, int panels) {
  const double width = 1.0 / panels;
  double total = 0.0;
  for (int j = 0; j < panels; ++j) {
    const double mid = (j + 0.5) * width;
    double panel_sum = 0.0;
    for (Index i = 0; i < gl.nodes.size(); ++i) {
      const double s = mid + 0.5 * width * gl.nodes[i];
      panel_sum += gl.weights[i] * tangent_norm(m, start + s * delta, delta);
    }
    total += 0.5 * width * panel_sum;
  }
  return total;
}

}  // namespace

double piece_length(const ParamCurve& c, int piece, const MetricSpec& m, const QuadratureRule& q) {
  q.validate();
  if (piece < 0 || piece >= c.piece_count()) {
    throw std::out_of_range("piece_length: piece index out of range");
  }
  const Vector& start = c.piece_start(piece);
  const Vector delta = c.piece_end(piece) - start;
  const GaussLegendre gl = GaussLegendre::rule(q.nodes_per_panel);

  int panels = q.panels_per_piece;
  double value = integrate_piece(start, delta, m, gl, panels);
  while (panels < q.max_panels_per_piece) {
    panels *= 2;
    const double refined = integrate_piece(start, delta, m, gl, panels);
    const double change = std::abs(refined - value);
    value = refined;
    if (change <= q.refine_rel_tol * std::max(std::abs(refined), 1e-300)) break;
  }
  return value;
}

std::vector<double> piece_lengths(const ParamCurve& c, const MetricSpec& m,
                                  const QuadratureRule& q) {
  std::vector<double> lengths(static_cast<std::size_t>(c.piece_count()));
  for (int i = 0; i < c.piece_count(); ++i) lengths[static_cast<std::size_t>(i)] = piece_length(c, i, m, q);
  return lengths;
}

double curve_length(const ParamCurve& c, const MetricSpec& m, const QuadratureRule& q) {
  double total = 0.0;
  for (double len : piece_lengths(c, m, q)) total += len;
  return total;
}

}  // namespace l2geo
