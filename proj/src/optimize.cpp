// Copyright 2026 The mubwit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mubwit/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mubwit/parallel.hpp"
#include "mubwit/rng.hpp"

namespace mubwit {

OptimizerConfig default_config_for_dim(int d) {
  OptimizerConfig cfg;
  cfg.restarts = d >= 8 ? 1000 : 200;
  return cfg;
}

// threads is a runtime knob, not part of the reproducible math config: the
// restart merge is thread-count independent, so it stays out of the JSON.
nlohmann::json optimizer_config_to_json(const OptimizerConfig& cfg) {
  return {{"restarts", cfg.restarts},
          {"max_iterations", cfg.max_iterations},
          {"gradient_tolerance", cfg.gradient_tolerance},
          {"step_policy", cfg.step_policy},
          {"seed", cfg.seed}};
}

OptimizerConfig optimizer_config_from_json(const nlohmann::json& j) {
  OptimizerConfig cfg;
  cfg.restarts = j.value("restarts", cfg.restarts);
  cfg.max_iterations = j.value("max_iterations", cfg.max_iterations);
  cfg.gradient_tolerance = j.value("gradient_tolerance", cfg.gradient_tolerance);
  cfg.step_policy = j.value("step_policy", cfg.step_policy);
  cfg.seed = j.value("seed", cfg.seed);
  cfg.threads = j.value("threads", cfg.threads);
  return cfg;
}

Vector decode_pure_state(const RealVector& theta, int d) {
  if (theta.size() != 2 * (d - 1))
    throw std::invalid_argument("decode_pure_state: theta must have length 2(d-1)");
  Vector v(d);
  // Hyperspherical magnitudes from the first d-1 angles, phases from the rest
  // (component 0 carries no phase).
  double sin_prod = 1.0;
  for (int j = 0; j < d - 1; ++j) {
    const double t = theta(j);
    const double r = sin_prod * std::cos(t);
    const double phase = j == 0 ? 0.0 : theta(d - 1 + j - 1);
    v(j) = r * Complex(std::cos(phase), std::sin(phase));
    sin_prod *= std::sin(t);
  }
  v(d - 1) = sin_prod * Complex(std::cos(theta(2 * d - 3)), std::sin(theta(2 * d - 3)));
  // Gauge: first nonvanishing amplitude real non-negative.
  for (int j = 0; j < d; ++j) {
    const double mag = std::abs(v(j));
    if (mag > 1e-14) {
      v *= std::conj(v(j)) / mag;
      break;
    }
  }
  const double n = v.norm();
  if (n > 0) v /= n;
  return v;
}

RealVector encode_pure_state(const Vector& v_in) {
  const int d = static_cast<int>(v_in.size());
  Vector v = v_in;
  for (int j = 0; j < d; ++j) {
    const double mag = std::abs(v(j));
    if (mag > 1e-14) {
      v *= std::conj(v(j)) / mag;
      break;
    }
  }
  RealVector theta = RealVector::Zero(2 * (d - 1));
  // tail(j) = sqrt(sum_{k >= j} |v_k|^2)
  std::vector<double> tail(d + 1, 0.0);
  for (int j = d - 1; j >= 0; --j) tail[j] = tail[j + 1] + std::norm(v(j));
  for (int j = 0; j < d - 1; ++j)
    theta(j) = std::atan2(std::sqrt(std::max(0.0, tail[j + 1])), std::abs(v(j)));
  for (int j = 1; j < d; ++j) theta(d - 1 + j - 1) = std::arg(v(j));
  return theta;
}

ProductObjective::ProductObjective(const MubSet& set) : d_(set.dim), m_(set.size()) {
  vectors_.resize(m_ * d_, d_);
  int row = 0;
  for (const Basis& basis : set.bases)
    for (int i = 0; i < d_; ++i) vectors_.row(row++) = basis.matrix.col(i).adjoint();
}

double ProductObjective::value(const Vector& a, const Vector& b) const {
  const double na = a.squaredNorm(), nb = b.squaredNorm();
  const RealVector pa = (vectors_ * a).cwiseAbs2();
  const RealVector pb = (vectors_ * b).cwiseAbs2();
  return pa.dot(pb) / (na * nb);
}

double ProductObjective::value_and_gradient(const Vector& a, const Vector& b, Vector* grad_a,
                                            Vector* grad_b) const {
  const double na = a.squaredNorm(), nb = b.squaredNorm();
  const Vector ca = vectors_ * a;
  const Vector cb = vectors_ * b;
  const RealVector pa = ca.cwiseAbs2() / na;
  const RealVector pb = cb.cwiseAbs2() / nb;
  const double f = pa.dot(pb);
  if (grad_a) {
    // d f / d conj(a) = (K_b a - f a) / <a,a> with K_b = sum_i pb_i v_i v_i^dag
    const Vector kba = vectors_.adjoint() * (pb.asDiagonal() * ca);
    *grad_a = (kba - f * a) / na;
  }
  if (grad_b) {
    const Vector kab = vectors_.adjoint() * (pa.asDiagonal() * cb);
    *grad_b = (kab - f * b) / nb;
  }
  return f;
}

double ProductObjective::value_packed(const RealVector& x) const {
  if (x.size() != 4 * d_) throw std::invalid_argument("value_packed: wrong length");
  Vector a(d_), b(d_);
  for (int i = 0; i < d_; ++i) {
    a(i) = Complex(x(i), x(d_ + i));
    b(i) = Complex(x(2 * d_ + i), x(3 * d_ + i));
  }
  return value(a, b);
}

RealVector ProductObjective::gradient_packed(const RealVector& x) const {
  Vector a(d_), b(d_);
  for (int i = 0; i < d_; ++i) {
    a(i) = Complex(x(i), x(d_ + i));
    b(i) = Complex(x(2 * d_ + i), x(3 * d_ + i));
  }
  Vector ga, gb;
  value_and_gradient(a, b, &ga, &gb);
  RealVector g(4 * d_);
  for (int i = 0; i < d_; ++i) {
    g(i) = 2.0 * ga(i).real();
    g(d_ + i) = 2.0 * ga(i).imag();
    g(2 * d_ + i) = 2.0 * gb(i).real();
    g(3 * d_ + i) = 2.0 * gb(i).imag();
  }
  return g;
}

double gradient_check(const std::function<double(const RealVector&)>& f,
                      const std::function<RealVector(const RealVector&)>& grad,
                      const RealVector& theta, double step) {
  const int n = static_cast<int>(theta.size());
  RealVector central(n);
  for (int i = 0; i < n; ++i) {
    RealVector tp = theta, tm = theta;
    tp(i) += step;
    tm(i) -= step;
    central(i) = (f(tp) - f(tm)) / (2.0 * step);
  }
  RealVector other(n);
  if (grad) {
    other = grad(theta);
  } else {
    // No analytic gradient: probe smoothness by comparing one-sided slopes
    // against the central ones.
    const double f0 = f(theta);
    for (int i = 0; i < n; ++i) {
      RealVector tp = theta;
      tp(i) += step;
      other(i) = (f(tp) - f0) / step;
    }
  }
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    worst = std::max(worst, std::abs(other(i) - central(i)) / std::max(1.0, std::abs(central(i))));
  return worst;
}

namespace {

struct RestartOutcome {
  double value = 0.0;
  Vector a, b;
  int iterations = 0;
  double grad_norm = 0.0;
  bool converged = false;
};

// Alternating exact minimization: for fixed a the objective is the quadratic
// form <b| K(a) |b>, so each half step solves a d x d Hermitian eigenproblem.
// The value sequence is non-increasing and the joint gradient vanishes at the
// alternation fixed points.
RestartOutcome seesaw_minimize(const Matrix& vectors, Vector a, Vector b,
                               const OptimizerConfig& cfg) {
  const int d = static_cast<int>(vectors.cols());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(d);
  double f_prev = std::numeric_limits<double>::infinity();
  double f = f_prev;
  RestartOutcome out;
  int stall = 0;
  int iter = 0;
  for (; iter < cfg.max_iterations; ++iter) {
    const RealVector pa = (vectors * a).cwiseAbs2();
    solver.compute(vectors.adjoint() * (pa.asDiagonal() * vectors));
    b = solver.eigenvectors().col(0);
    const RealVector pb = (vectors * b).cwiseAbs2();
    solver.compute(vectors.adjoint() * (pb.asDiagonal() * vectors));
    a = solver.eigenvectors().col(0);
    f = solver.eigenvalues()(0);
    const double df = f_prev - f;
    f_prev = f;
    if (df <= 1e-14 * std::max(1.0, std::abs(f))) {
      // Progress stalled: check the joint gradient (the a-block is zero by
      // construction right after the a-update).
      const RealVector pa2 = (vectors * a).cwiseAbs2();
      const Vector kb = vectors.adjoint() * (pa2.asDiagonal() * (vectors * b));
      const double fb = std::real(b.dot(kb));
      const double gnorm = 2.0 * (kb - fb * b).norm();
      out.grad_norm = gnorm;
      if (gnorm < cfg.gradient_tolerance || ++stall >= 3) break;
    } else {
      stall = 0;
    }
  }
  out.iterations = iter;
  out.converged = out.grad_norm < cfg.gradient_tolerance;
  out.value = f;
  out.a = a;
  out.b = b;
  return out;
}

}  // namespace

BoundEstimate lower_bound(const MubSet& set, const OptimizerConfig& cfg) {
  if (cfg.restarts < 1) throw std::invalid_argument("lower_bound: restarts must be >= 1");
  const int d = set.dim;
  Matrix vectors(set.size() * d, d);
  {
    int row = 0;
    for (const Basis& basis : set.bases)
      for (int i = 0; i < d; ++i) vectors.row(row++) = basis.matrix.col(i).adjoint();
  }

  std::vector<RestartOutcome> outcomes(cfg.restarts);
  parallel_for(cfg.restarts, cfg.threads, [&](int r) {
    Rng rng = Rng::for_restart(cfg.seed, r);
    const Vector a0 = rng.haar_state(d);
    const Vector b0 = rng.haar_state(d);
    outcomes[r] = seesaw_minimize(vectors, a0, b0, cfg);
  });

  int best = 0;
  for (int r = 1; r < cfg.restarts; ++r)
    if (outcomes[r].value < outcomes[best].value) best = r;
  double second = std::numeric_limits<double>::infinity();
  int converged = 0;
  BoundEstimate estimate;
  estimate.restart_values.reserve(cfg.restarts);
  for (int r = 0; r < cfg.restarts; ++r) {
    estimate.restart_values.push_back(outcomes[r].value);
    if (outcomes[r].converged) ++converged;
    if (r != best) second = std::min(second, outcomes[r].value);
  }

  estimate.argmin.theta_a = encode_pure_state(outcomes[best].a);
  estimate.argmin.theta_b = encode_pure_state(outcomes[best].b);
  estimate.state_a = decode_pure_state(estimate.argmin.theta_a, d);
  estimate.state_b = decode_pure_state(estimate.argmin.theta_b, d);
  estimate.value = witness_value_product(estimate.state_a, estimate.state_b, set);
  estimate.restarts = cfg.restarts;
  estimate.converged_fraction = static_cast<double>(converged) / cfg.restarts;
  estimate.best_restart_index = best;
  estimate.second_best = cfg.restarts > 1 ? second : estimate.value;
  estimate.seed = cfg.seed;
  estimate.config = cfg;
  return estimate;
}

nlohmann::json bound_estimate_to_json(const BoundEstimate& e) {
  nlohmann::json j;
  j["value"] = e.value;
  j["restarts"] = e.restarts;
  j["converged_fraction"] = e.converged_fraction;
  j["best_restart_index"] = e.best_restart_index;
  j["second_best"] = e.second_best;
  j["seed"] = e.seed;
  j["config"] = optimizer_config_to_json(e.config);
  auto vec_to_json = [](const auto& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
    return arr;
  };
  j["theta_a"] = vec_to_json(e.argmin.theta_a);
  j["theta_b"] = vec_to_json(e.argmin.theta_b);
  nlohmann::json sa = nlohmann::json::array(), sb = nlohmann::json::array();
  for (Eigen::Index i = 0; i < e.state_a.size(); ++i)
    sa.push_back({e.state_a(i).real(), e.state_a(i).imag()});
  for (Eigen::Index i = 0; i < e.state_b.size(); ++i)
    sb.push_back({e.state_b(i).real(), e.state_b(i).imag()});
  j["state_a"] = std::move(sa);
  j["state_b"] = std::move(sb);
  return j;
}

namespace {

// ---- local-unitary search -------------------------------------------------
//
// f(U, V) = sum_ki tr[(U^dag P_ki U (x) V^dag P_ki V) rho] is optimized by
// Riemannian gradient steps on the unitary group: the Euclidean derivative
// d f / d conj(U) is G_U = sum_ki P_ki U S_ki with
// S_ki = Tr_2[(I (x) V^dag P_ki V) rho], the tangent direction is the skew
// part of U^dag G_U, and the retraction is the matrix exponential.

struct LuWorkspace {
  int d = 0;
  std::vector<Vector> proj;  // the m*d basis vectors
  Matrix rho;                // d^2 x d^2

  // Tr_2[(I (x) w w^dag) rho]
  Matrix partial_s(const Vector& w) const {
    Matrix s(d, d);
    for (int c = 0; c < d; ++c)
      for (int a = 0; a < d; ++a) {
        Complex acc = 0.0;
        for (int dd = 0; dd < d; ++dd) {
          Complex inner = 0.0;
          for (int b = 0; b < d; ++b) inner += w(b) * rho(c * d + dd, a * d + b);
          acc += std::conj(w(dd)) * inner;
        }
        s(c, a) = acc;
      }
    return s;
  }
  // Tr_1[(u u^dag (x) I) rho]
  Matrix partial_t(const Vector& u) const {
    Matrix t(d, d);
    for (int dd = 0; dd < d; ++dd)
      for (int b = 0; b < d; ++b) {
        Complex acc = 0.0;
        for (int c = 0; c < d; ++c) {
          Complex inner = 0.0;
          for (int a = 0; a < d; ++a) inner += u(a) * rho(c * d + dd, a * d + b);
          acc += std::conj(u(c)) * inner;
        }
        t(dd, b) = acc;
      }
    return t;
  }

  double value(const Matrix& u, const Matrix& v) const {
    double f = 0.0;
    for (const Vector& p : proj) {
      const Vector uu = u.adjoint() * p;
      const Matrix s = partial_s(v.adjoint() * p);
      f += std::real(Complex(uu.adjoint() * (s * uu)));
    }
    return f;
  }

  double value_and_grads(const Matrix& u, const Matrix& v, Matrix* gu, Matrix* gv) const {
    double f = 0.0;
    *gu = Matrix::Zero(d, d);
    *gv = Matrix::Zero(d, d);
    for (const Vector& p : proj) {
      const Vector uu = u.adjoint() * p;
      const Vector w = v.adjoint() * p;
      const Matrix s = partial_s(w);
      const Matrix t = partial_t(uu);
      f += std::real(Complex(uu.adjoint() * (s * uu)));
      *gu += p * (uu.adjoint() * s);
      *gv += p * (w.adjoint() * t);
    }
    return f;
  }
};

Matrix exp_skew(const Matrix& a) {
  // a is skew-Hermitian; -i a is Hermitian.
  Eigen::SelfAdjointEigenSolver<Matrix> solver(Complex(0, -1) * a);
  const Matrix& q = solver.eigenvectors();
  Vector phases(solver.eigenvalues().size());
  for (Eigen::Index i = 0; i < phases.size(); ++i) {
    const double w = solver.eigenvalues()(i);
    phases(i) = Complex(std::cos(w), std::sin(w));
  }
  return q * phases.asDiagonal() * q.adjoint();
}

Matrix skew_part(const Matrix& m) { return 0.5 * (m - m.adjoint()); }

struct LuRestartOutcome {
  double value = 0.0;
  Matrix u, v;
};

LuRestartOutcome lu_ascend(const LuWorkspace& ws, Matrix u, Matrix v, double sign,
                           bool conjugate_pair, int max_iterations) {
  double eta = 0.5;
  Matrix gu, gv;
  double f = ws.value_and_grads(u, v, &gu, &gv);
  for (int iter = 0; iter < max_iterations; ++iter) {
    bool moved = false;
    if (conjugate_pair) {
      const Matrix g = gu + gv.conjugate();
      const Matrix dir = sign * skew_part(u.adjoint() * g);
      for (int h = 0; h < 40; ++h) {
        const Matrix u2 = u * exp_skew(eta * dir);
        const double f2 = ws.value(u2, u2.conjugate());
        if (sign * (f2 - f) > 1e-14) {
          u = u2;
          v = u.conjugate();
          f = f2;
          moved = true;
          break;
        }
        eta *= 0.5;
      }
    } else {
      const Matrix dir_u = sign * skew_part(u.adjoint() * gu);
      const Matrix dir_v = sign * skew_part(v.adjoint() * gv);
      for (int h = 0; h < 40; ++h) {
        const Matrix u2 = u * exp_skew(eta * dir_u);
        const Matrix v2 = v * exp_skew(eta * dir_v);
        const double f2 = ws.value(u2, v2);
        if (sign * (f2 - f) > 1e-14) {
          u = u2;
          v = v2;
          f = f2;
          moved = true;
          break;
        }
        eta *= 0.5;
      }
    }
    if (!moved) break;
    eta = std::min(eta * 1.5, 2.0);
    f = ws.value_and_grads(u, v, &gu, &gv);
  }
  return {f, u, v};
}

LocalUnitaryOptimum optimize_local_unitaries(const DensityMatrix& rho, const MubSet& set,
                                             const OptimizerConfig& cfg, double sign) {
  const int d = set.dim;
  if (rho.dim != d) throw std::invalid_argument("local unitary search: dimension mismatch");
  LuWorkspace ws;
  ws.d = d;
  ws.rho = rho.matrix;
  for (const Basis& basis : set.bases)
    for (int i = 0; i < d; ++i) ws.proj.push_back(basis.matrix.col(i));

  const int restarts = std::max(1, cfg.restarts);
  // Both families per restart; restart 0 starts from the identity.
  std::vector<LuRestartOutcome> conj_out(restarts), free_out(restarts);
  parallel_for(restarts, cfg.threads, [&](int r) {
    Matrix u0, v0;
    if (r == 0) {
      u0 = Matrix::Identity(d, d);
      v0 = Matrix::Identity(d, d);
    } else {
      Rng rng = Rng::for_restart(cfg.seed ^ 0x5bd1e995u, r);
      u0 = rng.haar_unitary(d);
      v0 = rng.haar_unitary(d);
    }
    conj_out[r] = lu_ascend(ws, u0, u0.conjugate(), sign, true, cfg.max_iterations);
    free_out[r] = lu_ascend(ws, u0, v0, sign, false, cfg.max_iterations);
  });

  LocalUnitaryOptimum best;
  best.value = sign > 0 ? -std::numeric_limits<double>::infinity()
                        : std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    if (sign * conj_out[r].value > sign * best.value) {
      best.value = conj_out[r].value;
      best.u = conj_out[r].u;
      best.v = conj_out[r].v;
      best.conjugate_pair = true;
      best.best_restart_index = r;
    }
    if (sign * free_out[r].value > sign * best.value) {
      best.value = free_out[r].value;
      best.u = free_out[r].u;
      best.v = free_out[r].v;
      best.conjugate_pair = false;
      best.best_restart_index = r;
    }
  }
  return best;
}

}  // namespace

LocalUnitaryOptimum maximize_over_local_unitaries(const DensityMatrix& rho, const MubSet& set,
                                                  const OptimizerConfig& cfg) {
  return optimize_local_unitaries(rho, set, cfg, +1.0);
}

LocalUnitaryOptimum minimize_over_local_unitaries(const DensityMatrix& rho, const MubSet& set,
                                                  const OptimizerConfig& cfg) {
  return optimize_local_unitaries(rho, set, cfg, -1.0);
}

double sampled_product_minimum(const MubSet& set, std::int64_t samples, std::uint64_t seed,
                               int threads) {
  const int d = set.dim;
  Matrix vectors(set.size() * d, d);
  {
    int row = 0;
    for (const Basis& basis : set.bases)
      for (int i = 0; i < d; ++i) vectors.row(row++) = basis.matrix.col(i).adjoint();
  }
  constexpr int kChunks = 256;  // fixed chunking keeps the result thread-count independent
  const std::int64_t per_chunk = (samples + kChunks - 1) / kChunks;
  std::vector<double> mins(kChunks, std::numeric_limits<double>::infinity());
  parallel_for(kChunks, threads, [&](int c) {
    const std::int64_t begin = static_cast<std::int64_t>(c) * per_chunk;
    const std::int64_t count = std::min<std::int64_t>(per_chunk, samples - begin);
    if (count <= 0) return;
    Rng rng = Rng::for_restart(seed ^ 0x9e3779b9u, c);
    Vector a(d), b(d), ca(vectors.rows()), cb(vectors.rows());
    double local = std::numeric_limits<double>::infinity();
    for (std::int64_t s = 0; s < count; ++s) {
      for (int i = 0; i < d; ++i) {
        a(i) = Complex(rng.gaussian(), rng.gaussian());
        b(i) = Complex(rng.gaussian(), rng.gaussian());
      }
      ca.noalias() = vectors * a;
      cb.noalias() = vectors * b;
      double f = 0.0;
      for (Eigen::Index i = 0; i < ca.size(); ++i) f += std::norm(ca(i)) * std::norm(cb(i));
      f /= a.squaredNorm() * b.squaredNorm();
      local = std::min(local, f);
    }
    mins[c] = local;
  });
  return *std::min_element(mins.begin(), mins.end());
}

}  // namespace mubwit
