#include "qho/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qho/error.hpp"

namespace qho {

using namespace std::complex_literals;

double imaginary_time_rate(double energy, const OscillatorParams& params) {
  if (energy == 0.0) {
    throw Error(ErrorCode::zero_energy, "the conformal map is undefined for E = 0");
  }
  return params.mass * params.omega / (2.0 * energy);
}

ConformalPoint forward_map(const Vec3& x, double t, double energy,
                           const OscillatorParams& params) {
  const double rate = imaginary_time_rate(energy, params);
  return {x, t, x, cplx(t, -(rate * norm_squared(x))), energy, params};
}

ConformalPoint conjugate_map(const Vec3& x, double t, double energy,
                             const OscillatorParams& params) {
  const double rate = imaginary_time_rate(energy, params);
  return {x, t, x, cplx(t, rate * norm_squared(x)), energy, params};
}

namespace {

RealCoordinates finish_inverse(const Vec3& z, cplx t, double tolerance) {
  if (!(std::abs(t.imag()) <= tolerance)) {
    throw Error(ErrorCode::off_manifold,
                "reconstructed time has imaginary part " + format_double(t.imag()));
  }
  return {z, t.real()};
}

}  // namespace

RealCoordinates inverse_map(const Vec3& z, cplx s, double energy,
                            const OscillatorParams& params, double tolerance) {
  const double rate = imaginary_time_rate(energy, params);
  return finish_inverse(z, s + 1i * (rate * norm_squared(z)), tolerance);
}

RealCoordinates inverse_conjugate_map(const Vec3& z_star, cplx s_star, double energy,
                                      const OscillatorParams& params, double tolerance) {
  const double rate = imaginary_time_rate(energy, params);
  return finish_inverse(z_star, s_star - 1i * (rate * norm_squared(z_star)), tolerance);
}

Field make_field(const Eigenfunction3D& psi) {
  Field f;
  f.value = [psi](const Vec3& x, double t) { return psi(x, t); };
  f.d_dx = [psi](const Vec3& x, double t, int axis) { return psi.d_dx(x, t, axis); };
  f.d_dt = [psi](const Vec3& x, double t) { return psi.d_dt(x, t); };
  return f;
}

Field make_numeric_field(std::function<cplx(const Vec3&, double)> value,
                         std::optional<Box> domain) {
  Field f;
  f.value = std::move(value);
  f.domain = domain;
  return f;
}

std::string_view to_string(DerivativeKind kind) {
  switch (kind) {
    case DerivativeKind::d_ds: return "d/ds";
    case DerivativeKind::d_ds_star: return "d/ds*";
    case DerivativeKind::d_dz: return "d/dz";
    case DerivativeKind::d_dz_star: return "d/dz*";
    case DerivativeKind::d_dzeta: return "d/dzeta";
    case DerivativeKind::d_dzeta_star: return "d/dzeta*";
  }
  return "?";
}

double spatial_step(const DerivativeOperator& op) {
  const double scale = op.params.xi_scale();
  return scale > 0.0 ? op.stencil.step / scale : op.stencil.step;
}

double time_step(const DerivativeOperator& op) {
  return op.energy != 0.0 ? op.stencil.step * op.params.hbar / std::abs(op.energy)
                          : op.stencil.step;
}

namespace {

cplx partial_t(const DerivativeOperator& op, const Field& f, const Vec3& x, double t) {
  if (f.d_dt) return f.d_dt(x, t);
  numerics::StencilSpec spec = op.stencil;
  spec.step = time_step(op);
  std::optional<numerics::Interval> range;
  if (f.domain) range = numerics::Interval{f.domain->t_lo, f.domain->t_hi};
  return numerics::differentiate([&](double tt) { return f.value(x, tt); }, t, spec, range)
      .value;
}

cplx partial_x(const DerivativeOperator& op, const Field& f, const Vec3& x, double t) {
  if (f.d_dx) return f.d_dx(x, t, op.axis);
  numerics::StencilSpec spec = op.stencil;
  spec.step = spatial_step(op);
  const auto axis = static_cast<std::size_t>(op.axis);
  std::optional<numerics::Interval> range;
  if (f.domain) range = numerics::Interval{f.domain->lo[axis], f.domain->hi[axis]};
  auto along_axis = [&](double coordinate) {
    Vec3 p = x;
    p[axis] = coordinate;
    return f.value(p, t);
  };
  return numerics::differentiate(along_axis, x[axis], spec, range).value;
}

}  // namespace

cplx apply_derivative(const DerivativeOperator& op, const Field& f, const Vec3& x, double t) {
  if (op.kind == DerivativeKind::d_ds || op.kind == DerivativeKind::d_ds_star) {
    return partial_t(op, f, x, t);
  }
  if (op.axis < 0 || op.axis > 2) {
    throw Error(ErrorCode::domain_error, "axis must be 0, 1 or 2");
  }
  const bool starred =
      op.kind == DerivativeKind::d_dz_star || op.kind == DerivativeKind::d_dzeta_star;
  const double sign = starred ? -1.0 : 1.0;
  const double xi = x[static_cast<std::size_t>(op.axis)];
  const auto& p = op.params;

  cplx result = partial_x(op, f, x, t);
  if (op.form == OperatorForm::chain_rule) {
    if (op.energy == 0.0) {
      throw Error(ErrorCode::zero_energy, "chain-rule form needs a non-zero energy");
    }
    result += sign * 1i * (p.mass * p.omega * xi / op.energy) * partial_t(op, f, x, t);
  } else {
    result += sign * (p.mass * p.omega / p.hbar) * xi * f.value(x, t);
  }

  if (op.kind == DerivativeKind::d_dzeta || op.kind == DerivativeKind::d_dzeta_star) {
    const double scale = p.xi_scale();
    if (!(scale > 0.0)) {
      throw Error(ErrorCode::domain_error, "d/dzeta needs omega > 0");
    }
    result /= scale;
  }
  return result;
}

Field apply_to_field(const DerivativeOperator& op, Field f) {
  Field g;
  auto domain = f.domain;
  g.value = [op, f = std::move(f)](const Vec3& x, double t) {
    return apply_derivative(op, f, x, t);
  };
  g.domain = domain;
  return g;
}

cplx conformal_hamiltonian(const Field& u, const Vec3& x, double t,
                           const OscillatorParams& params,
                           const numerics::StencilSpec& stencil) {
  cplx second{};
  for (int axis = 0; axis < 3; ++axis) {
    DerivativeOperator d_dz{DerivativeKind::d_dz, axis, OperatorForm::energy_substituted,
                            0.0, params, stencil};
    DerivativeOperator d_dz_star = d_dz;
    d_dz_star.kind = DerivativeKind::d_dz_star;
    second += apply_derivative(d_dz_star, apply_to_field(d_dz, u), x, t);
  }
  return -(params.hbar * params.hbar / (2.0 * params.mass)) * second +
         1.5 * params.hbar * params.omega * u(x, t);
}

cplx real_hamiltonian(const Field& u, const Vec3& x, double t,
                      const OscillatorParams& params,
                      const numerics::StencilSpec& stencil) {
  numerics::StencilSpec spec = stencil;
  spec.derivative_order = 2;
  const double scale = params.xi_scale();
  if (scale > 0.0) spec.step = stencil.step / scale;
  cplx laplacian{};
  for (std::size_t axis = 0; axis < 3; ++axis) {
    std::optional<numerics::Interval> range;
    if (u.domain) range = numerics::Interval{u.domain->lo[axis], u.domain->hi[axis]};
    auto along_axis = [&](double coordinate) {
      Vec3 p = x;
      p[axis] = coordinate;
      return u(p, t);
    };
    laplacian += numerics::differentiate(along_axis, x[axis], spec, range).value;
  }
  return -(params.hbar * params.hbar / (2.0 * params.mass)) * laplacian +
         potential_energy(x, params) * u(x, t);
}

CheckReport coordinate_independence_check(const OscillatorParams& params, double energy,
                                          std::span<const RealCoordinates> points,
                                          double tolerance) {
  const double rate = imaginary_time_rate(energy, params);
  auto s_field = make_numeric_field([rate](const Vec3& x, double t) {
    return cplx(t, -rate * norm_squared(x));
  });
  auto s_star_field = make_numeric_field([rate](const Vec3& x, double t) {
    return cplx(t, rate * norm_squared(x));
  });
  auto z_field = [](int axis) {
    return make_numeric_field(
        [axis](const Vec3& x, double) { return cplx(x[static_cast<std::size_t>(axis)]); });
  };

  auto op = [&](DerivativeKind kind, int axis) {
    return DerivativeOperator{kind, axis, OperatorForm::chain_rule, energy, params,
                              numerics::StencilSpec{1e-3, 1, 1}};
  };

  double dz_ds = 0.0, ds_dz = 0.0, dzs_dss = 0.0, dss_dzs = 0.0;
  double identity_block = 0.0;
  for (const auto& pt : points) {
    for (int nu = 0; nu < 3; ++nu) {
      const Field zn = z_field(nu);
      dz_ds = std::max(dz_ds, std::abs(apply_derivative(op(DerivativeKind::d_ds, 0), zn, pt.x, pt.t)));
      dzs_dss = std::max(
          dzs_dss, std::abs(apply_derivative(op(DerivativeKind::d_ds_star, 0), zn, pt.x, pt.t)));
      ds_dz = std::max(ds_dz, std::abs(apply_derivative(op(DerivativeKind::d_dz, nu), s_field,
                                                        pt.x, pt.t)));
      dss_dzs = std::max(dss_dzs, std::abs(apply_derivative(op(DerivativeKind::d_dz_star, nu),
                                                            s_star_field, pt.x, pt.t)));
      // dz_nu/dz_mu = delta and ds/ds = 1 confirm the operators are not trivially zero.
      for (int mu = 0; mu < 3; ++mu) {
        const cplx d = apply_derivative(op(DerivativeKind::d_dz, mu), zn, pt.x, pt.t);
        identity_block = std::max(identity_block, std::abs(d - (mu == nu ? 1.0 : 0.0)));
      }
    }
    identity_block = std::max(
        identity_block,
        std::abs(apply_derivative(op(DerivativeKind::d_ds, 0), s_field, pt.x, pt.t) - 1.0));
  }
  const double worst = std::max({dz_ds, ds_dz, dzs_dss, dss_dzs});
  auto report = CheckReport::make(
      "coordinate-independence",
      "dz_v/ds = ds/dz_u = dz*_v/ds* = ds*/dz*_u = 0", worst, tolerance);
  report.detail("points", static_cast<std::int64_t>(points.size()))
      .detail("max_dz_ds", dz_ds)
      .detail("max_ds_dz", ds_dz)
      .detail("max_dzstar_dsstar", dzs_dss)
      .detail("max_dsstar_dzstar", dss_dzs)
      .detail("identity_block_deviation", identity_block);
  return report;
}

CrAnalysis cr_analyze(const ComplexTimeFunction& tau_fn, double energy,
                      const OscillatorParams& params, const CrGrid& grid) {
  const double rate = imaginary_time_rate(energy, params);
  if (!(rate > 0.0)) {
    throw Error(ErrorCode::domain_error, "Cauchy-Riemann analysis needs omega > 0");
  }
  if (grid.points_t < 1 || grid.points_u < 1 || !(grid.step > 0.0)) {
    throw Error(ErrorCode::domain_error, "invalid Cauchy-Riemann grid");
  }
  if (grid.u_lo - grid.step / rate < 0.0) {
    throw Error(ErrorCode::stencil_out_of_domain,
                "y stencil reaches u = |x|^2 < 0; raise u_lo or shrink the step");
  }

  struct Level {
    double standard = 0.0;
    double standard_min = std::numeric_limits<double>::infinity();
    double swapped = 0.0;
    double second = 0.0;
  };

  auto run = [&](double h) {
    Level level;
    const numerics::StencilSpec first{h, 0, 1};
    const numerics::StencilSpec second_t{h, 0, 2};
    const numerics::StencilSpec second_u{h / rate, 0, 2};
    for (int j = 0; j < grid.points_t; ++j) {
      const double t = grid.points_t == 1
                           ? grid.t_lo
                           : grid.t_lo + (grid.t_hi - grid.t_lo) * j / (grid.points_t - 1);
      for (int k = 0; k < grid.points_u; ++k) {
        const double u = grid.points_u == 1
                             ? grid.u_lo
                             : grid.u_lo + (grid.u_hi - grid.u_lo) * k / (grid.points_u - 1);
        const double y = -rate * u;
        auto along_t = [&](double tt) { return tau_fn(cplx(tt, y)); };
        auto along_y = [&](double yy) { return tau_fn(cplx(t, yy)); };
        auto along_u = [&](double uu) { return tau_fn(cplx(t, -rate * uu)); };
        const cplx d_t = numerics::differentiate(along_t, t, first).value;
        const cplx d_y = numerics::differentiate(along_y, y, first).value;
        // g = Re tau, h = Im tau
        const double g_t = d_t.real(), h_t = d_t.imag();
        const double g_y = d_y.real(), h_y = d_y.imag();
        const double standard = std::max(std::abs(g_t - h_y), std::abs(g_y + h_t));
        const double swapped = std::max(std::abs(g_y - h_t), std::abs(h_y + g_t));
        const cplx tt = numerics::differentiate(along_t, t, second_t).value;
        const cplx uu = numerics::differentiate(along_u, u, second_u).value;
        const cplx laplace = tt + uu / (rate * rate);
        level.standard = std::max(level.standard, standard);
        level.standard_min = std::min(level.standard_min, standard);
        level.swapped = std::max(level.swapped, swapped);
        level.second = std::max(level.second, std::abs(laplace));
      }
    }
    return level;
  };

  const Level coarse = run(grid.step);
  const Level fine = run(0.5 * grid.step);
  CrAnalysis a;
  a.standard_coarse = coarse.standard;
  a.standard_fine = fine.standard;
  a.standard_min_fine = fine.standard_min;
  a.standard_order = numerics::convergence_order(coarse.standard, fine.standard);
  a.swapped_fine = fine.swapped;
  a.second_order_coarse = coarse.second;
  a.second_order_fine = fine.second;
  a.second_order_order = numerics::convergence_order(coarse.second, fine.second);
  return a;
}

double cr_truncation_envelope(double energy, const OscillatorParams& params,
                              const CrGrid& grid) {
  const double k = std::abs(energy) / params.hbar;
  const double h = 0.5 * grid.step;
  // |tau| = exp(k y) peaks at the smallest u.
  const double max_tau = std::exp(-k * imaginary_time_rate(energy, params) * grid.u_lo);
  return (k * h) * (k * h) * k * max_tau;
}

CheckReport cr_residual(const ComplexTimeFunction& tau_fn, double energy,
                        const OscillatorParams& params, const CrGrid& grid,
                        std::optional<double> tolerance) {
  const CrAnalysis a = cr_analyze(tau_fn, energy, params, grid);
  const double envelope = cr_truncation_envelope(energy, params, grid);
  auto report = CheckReport::make("cauchy-riemann", "g_t = h_y, g_y = -h_t for s = t + iy",
                                  a.standard_fine, tolerance.value_or(envelope));
  report.detail("truncation_envelope", envelope)
      .detail("step_coarse", grid.step)
      .detail("residual_coarse", a.standard_coarse)
      .detail("residual_fine", a.standard_fine)
      .detail("residual_min_fine", a.standard_min_fine)
      .detail("convergence_order", a.standard_order)
      .detail("swapped_pairing_residual", a.swapped_fine)
      .detail("second_order_form_coarse", a.second_order_coarse)
      .detail("second_order_form_fine", a.second_order_fine)
      .detail("second_order_form_order", a.second_order_order);
  return report;
}

}  // namespace qho
