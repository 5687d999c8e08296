#include "grasp/boson.hpp"

#include <cmath>
#include <numbers>

#include <unsupported/Eigen/MatrixFunctions>

namespace grasp {

namespace {

void check_grid(const ComplexGrid& grid) {
  if (grid.points < 3 || grid.points % 2 == 0)
    throw DimensionError("grid points must be odd and at least 3");
  if (grid.halfwidth <= 0.0)
    throw DimensionError("grid halfwidth must be positive");
}

}  // namespace

TruncatedBosonSpace::TruncatedBosonSpace(int dim_) : dim(dim_) {
  if (dim < 2) throw DimensionError("boson space needs at least two levels");
  a = Matrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  adag = a.adjoint();
}

double GridField::max_imag() const {
  double worst = 0.0;
  for (const Cplx& v : values) worst = std::max(worst, std::abs(v.imag()));
  return worst;
}

Matrix boson_displacement(Cplx alpha, const TruncatedBosonSpace& space,
                          std::ostream* warnings) {
  if (warnings && std::norm(alpha) > space.dim / 4.0)
    *warnings << "warning: displacement |alpha|^2 = " << std::norm(alpha)
              << " exceeds dim/4 = " << space.dim / 4.0
              << "; truncation artifacts likely\n";
  const Matrix generator = alpha * space.adag - std::conj(alpha) * space.a;
  return generator.exp();
}

Matrix exp_raising(Cplx z, const TruncatedBosonSpace& space) {
  Matrix out = Matrix::Zero(space.dim, space.dim);
  for (int n = 0; n < space.dim; ++n) {
    Cplx entry(1.0, 0.0);
    out(n, n) = entry;
    for (int m = n + 1; m < space.dim; ++m) {
      // entry(m, n) = z^{m-n} sqrt(m!/n!) / (m-n)!
      entry *= z * std::sqrt(static_cast<double>(m)) /
               static_cast<double>(m - n);
      out(m, n) = entry;
    }
  }
  return out;
}

Matrix exp_lowering(Cplx z, const TruncatedBosonSpace& space) {
  // e^{z a} is the adjoint of e^{z* adag}.
  return exp_raising(std::conj(z), space).adjoint();
}

Matrix normal_ordered_displacement_factor(Cplx xi, const TruncatedBosonSpace& space) {
  const int d = space.dim;
  const double x = std::norm(xi);

  // lag[t][k] = generalized Laguerre L_k^{(t)}(x) via the degree recurrence.
  std::vector<std::vector<double>> lag(d, std::vector<double>(d, 1.0));
  for (int t = 0; t < d; ++t) {
    if (d > 1) lag[t][1] = 1.0 + t - x;
    for (int k = 1; k + 1 < d; ++k)
      lag[t][k + 1] = ((2.0 * k + 1.0 + t - x) * lag[t][k] -
                       (k + static_cast<double>(t)) * lag[t][k - 1]) /
                      (k + 1.0);
  }

  // <n+t| e^{xi adag} e^{-xi* a} |n>   = xi^t     sqrt(n!/(n+t)!) L_n^{(t)}(x)
  // <n  | e^{xi adag} e^{-xi* a} |n+t> = (-xi*)^t sqrt(n!/(n+t)!) L_n^{(t)}(x)
  Matrix g(d, d);
  for (int t = 0; t < d; ++t) {
    double root = 1.0;
    for (int j = 1; j <= t; ++j) root /= std::sqrt(static_cast<double>(j));
    Cplx lower_pref = std::pow(xi, t) * root;
    Cplx upper_pref = std::pow(-std::conj(xi), t) * root;
    for (int n = 0; n + t < d; ++n) {
      if (n > 0) {
        const double step = std::sqrt(static_cast<double>(n) /
                                      static_cast<double>(n + t));
        lower_pref *= step;
        upper_pref *= step;
      }
      g(n + t, n) = lower_pref * lag[t][n];
      if (t > 0) g(n, n + t) = upper_pref * lag[t][n];
    }
  }
  return g;
}

Matrix displacement_elements(Cplx xi, const TruncatedBosonSpace& space) {
  return std::exp(-0.5 * std::norm(xi)) *
         normal_ordered_displacement_factor(xi, space);
}

Cplx char_normal(const Matrix& rho, Cplx xi, const TruncatedBosonSpace& space) {
  if (rho.rows() != space.dim || rho.cols() != space.dim)
    throw DimensionError("density matrix does not match the boson space");
  const Matrix g = normal_ordered_displacement_factor(xi, space);
  // Tr(rho g) without forming the product.
  return rho.transpose().cwiseProduct(g).sum();
}

double rim_decay_statistic(const Matrix& rho, const ComplexGrid& grid,
                           const TruncatedBosonSpace& space) {
  constexpr int kAngles = 64;
  double worst = 0.0;
  for (int i = 0; i < kAngles; ++i) {
    const double angle = 2.0 * std::numbers::pi * i / kAngles;
    const Cplx xi = std::polar(grid.halfwidth, angle);
    worst = std::max(worst, std::abs(char_normal(rho, xi, space)));
  }
  return worst;
}

GridField p_function_grid(const Matrix& rho, const ComplexGrid& grid,
                          const TruncatedBosonSpace& space, bool force) {
  check_grid(grid);
  const int m = grid.points;

  if (!force) {
    const double rim = rim_decay_statistic(rho, grid, space);
    if (rim > kRimDecayThreshold)
      throw GridError(
          "P not representable on this grid: characteristic function "
          "magnitude " +
          std::to_string(rim) + " at |xi| = " + std::to_string(grid.halfwidth) +
          " exceeds " + std::to_string(kRimDecayThreshold));
  }

  // Characteristic function over the nodes of the inscribed disc
  // |xi| <= halfwidth.  The square's corner caps lie beyond the certified
  // decay radius and would inject the truncation tail of finite-rank
  // states into the transform.
  const double radius_sq = grid.halfwidth * grid.halfwidth * (1.0 + 1e-12);
  std::vector<Cplx> chi(static_cast<std::size_t>(m) * m, Cplx(0.0, 0.0));
  for (int ju = 0; ju < m; ++ju)
    for (int kv = 0; kv < m; ++kv) {
      const Cplx xi = grid.node(ju, kv);
      if (std::norm(xi) > radius_sq) continue;
      chi[static_cast<std::size_t>(ju) * m + kv] = char_normal(rho, xi, space);
    }

  // P(alpha) = (1/pi^2) sum_xi chi(xi) e^{alpha xi* - alpha* xi} d^2xi with
  // alpha xi* - alpha* xi = 2i (y u - x v); the transform separates into two
  // one-dimensional passes.
  std::vector<Cplx> partial(static_cast<std::size_t>(m) * m);  // [jy][kv]
  for (int jy = 0; jy < m; ++jy) {
    const double y = grid.coordinate(jy);
    for (int kv = 0; kv < m; ++kv) {
      Cplx acc(0.0, 0.0);
      for (int ju = 0; ju < m; ++ju) {
        const double u = grid.coordinate(ju);
        acc += chi[static_cast<std::size_t>(ju) * m + kv] *
               std::polar(1.0, 2.0 * y * u);
      }
      partial[static_cast<std::size_t>(jy) * m + kv] = acc;
    }
  }

  GridField field{grid, std::vector<Cplx>(static_cast<std::size_t>(m) * m)};
  const double scale =
      grid.weight() / (std::numbers::pi * std::numbers::pi);
  for (int jx = 0; jx < m; ++jx) {
    const double x = grid.coordinate(jx);
    for (int jy = 0; jy < m; ++jy) {
      Cplx acc(0.0, 0.0);
      for (int kv = 0; kv < m; ++kv) {
        const double v = grid.coordinate(kv);
        acc += partial[static_cast<std::size_t>(jy) * m + kv] *
               std::polar(1.0, -2.0 * x * v);
      }
      field.at(jx, jy) = scale * acc;
    }
  }
  return field;
}

Cplx moment_from_p(const GridField& field, int n, int m) {
  if (n < 0 || m < 0) throw DomainError("moment orders must be non-negative");
  Cplx acc(0.0, 0.0);
  const int pts = field.grid.points;
  for (int jx = 0; jx < pts; ++jx)
    for (int jy = 0; jy < pts; ++jy) {
      const Cplx alpha = field.grid.node(jx, jy);
      Cplx factor(1.0, 0.0);
      for (int i = 0; i < n; ++i) factor *= std::conj(alpha);
      for (int i = 0; i < m; ++i) factor *= alpha;
      acc += field.at(jx, jy) * factor;
    }
  return acc * field.grid.weight();
}

Matrix weyl_reconstruct_boson(const Matrix& f, const ComplexGrid& grid,
                              const TruncatedBosonSpace& space) {
  check_grid(grid);
  if (f.rows() != space.dim || f.cols() != space.dim)
    throw DimensionError("operator does not match the boson space");

  // The weights Tr[F D(xi)] and the expansion kernels D(-xi) use the exact
  // displacement matrix elements: the truncated matrix exponential is far
  // off the true operator once the displacement overshoots the space.
  // Quadrature runs over the inscribed disc, as for the P transform.
  Matrix out = Matrix::Zero(space.dim, space.dim);
  const double scale = grid.weight() / std::numbers::pi;
  const double radius_sq = grid.halfwidth * grid.halfwidth * (1.0 + 1e-12);
  for (int j = 0; j < grid.points; ++j)
    for (int k = 0; k < grid.points; ++k) {
      const Cplx xi = grid.node(j, k);
      if (std::norm(xi) > radius_sq) continue;
      const Matrix d = displacement_elements(xi, space);
      const Cplx coeff = f.transpose().cwiseProduct(d).sum();  // Tr(F d)
      out += scale * coeff * d.adjoint();  // <m|D(-xi)|n> = <n|D(xi)|m>*
    }
  return out;
}

Matrix thermal_state(double nbar, const TruncatedBosonSpace& space) {
  if (nbar <= 0.0) throw DomainError("thermal state needs nbar > 0");
  const double q = nbar / (1.0 + nbar);
  Eigen::VectorXd weights(space.dim);
  double w = 1.0;
  for (int n = 0; n < space.dim; ++n, w *= q) weights(n) = w;
  weights /= weights.sum();
  Matrix out = Matrix::Zero(space.dim, space.dim);
  out.diagonal() = weights.cast<Cplx>();
  return out;
}

Eigen::VectorXcd coherent_amplitudes(Cplx alpha, int dim) {
  Eigen::VectorXcd out(dim);
  Cplx amp = std::exp(Cplx(-0.5 * std::norm(alpha), 0.0));
  for (int n = 0; n < dim; ++n) {
    out(n) = amp;
    amp *= alpha / std::sqrt(static_cast<double>(n + 1));
  }
  return out;
}

}  // namespace grasp
