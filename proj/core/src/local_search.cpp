#include "gmig/local_search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gmig {

LsMethod ls_method_from_string(const std::string& name) {
  if (name == "powell") return LsMethod::Powell;
  if (name == "bfgs") return LsMethod::Bfgs;
  if (name == "nelder-mead" || name == "nelder_mead")
    return LsMethod::NelderMead;
  if (name == "newton") return LsMethod::Newton;
  throw std::invalid_argument("unknown local search method: " + name);
}

const char* ls_method_name(LsMethod m) {
  switch (m) {
    case LsMethod::Powell: return "powell";
    case LsMethod::Bfgs: return "bfgs";
    case LsMethod::NelderMead: return "nelder-mead";
    case LsMethod::Newton: return "newton";
  }
  return "?";
}

int LsConfig::default_iterations(LsMethod m, bool gmig_mode) {
  switch (m) {
    case LsMethod::Powell: return gmig_mode ? 500 : 2000;
    case LsMethod::Bfgs: return gmig_mode ? 22 : 50;
    case LsMethod::NelderMead: return gmig_mode ? 1000 : 2000;
    case LsMethod::Newton: return 1000;
  }
  return 1000;
}

namespace {

struct CountedObjective {
  const Objective& f;
  std::uint64_t count = 0;
  double operator()(const Eigen::VectorXd& x) {
    ++count;
    return f(x);
  }
};

Eigen::VectorXd central_gradient(CountedObjective& f, const Eigen::VectorXd& x,
                                 double h) {
  Eigen::VectorXd g(x.size());
  Eigen::VectorXd xp = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    xp[i] = xi + h;
    const double fp = f(xp);
    xp[i] = xi - h;
    const double fm = f(xp);
    xp[i] = xi;
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

Eigen::MatrixXd central_hessian(CountedObjective& f, const Eigen::VectorXd& x,
                                double f0, double h) {
  const Eigen::Index n = x.size();
  Eigen::MatrixXd hess(n, n);
  Eigen::VectorXd xp = x;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double xi = x[i];
    xp[i] = xi + h;
    const double fp = f(xp);
    xp[i] = xi - h;
    const double fm = f(xp);
    xp[i] = xi;
    hess(i, i) = (fp - 2.0 * f0 + fm) / (h * h);
  }
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double xi = x[i], xj = x[j];
      xp[i] = xi + h; xp[j] = xj + h;
      const double fpp = f(xp);
      xp[j] = xj - h;
      const double fpm = f(xp);
      xp[i] = xi - h; xp[j] = xj + h;
      const double fmp = f(xp);
      xp[j] = xj - h;
      const double fmm = f(xp);
      xp[i] = xi; xp[j] = xj;
      hess(i, j) = hess(j, i) = (fpp - fpm - fmp + fmm) / (4.0 * h * h);
    }
  return hess;
}

// Derivative-free 1D minimization along x0 + t*dir: golden-section
// bracketing followed by Brent refinement.
double line_minimize(CountedObjective& f, const Eigen::VectorXd& x0,
                     const Eigen::VectorXd& dir, double f0, double rel_tol,
                     double* f_out) {
  constexpr double kGold = 1.618033988749895;
  auto phi = [&](double t) { return f(x0 + t * dir); };

  double a = 0.0, fa = f0;
  double b = 1.0, fb = phi(b);
  if (fb > fa) {
    std::swap(a, b);
    std::swap(fa, fb);
  }
  double c = b + kGold * (b - a), fc = phi(c);
  int guard = 0;
  while (fc < fb && ++guard < 60) {
    a = b; fa = fb;
    b = c; fb = fc;
    c = b + kGold * (b - a);
    fc = phi(c);
  }
  if (a > c) { std::swap(a, c); std::swap(fa, fc); }

  // Brent on [a, c] with incumbent b.
  constexpr double kCGold = 0.3819660112501051;
  double x = b, w = b, v = b, fx = fb, fw = fb, fv = fb;
  double d = 0.0, e = 0.0;
  for (int it = 0; it < 80; ++it) {
    const double xm = 0.5 * (a + c);
    const double tol1 = rel_tol * std::abs(x) + 1e-11;
    const double tol2 = 2.0 * tol1;
    if (std::abs(x - xm) <= tol2 - 0.5 * (c - a)) break;
    bool parabolic = false;
    if (std::abs(e) > tol1) {
      const double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::abs(q);
      const double e_old = e;
      e = d;
      if (std::abs(p) < std::abs(0.5 * q * e_old) && p > q * (a - x) &&
          p < q * (c - x)) {
        parabolic = true;
        d = p / q;
        const double u = x + d;
        if (u - a < tol2 || c - u < tol2)
          d = (xm >= x) ? tol1 : -tol1;
      }
    }
    if (!parabolic) {
      e = (x >= xm) ? a - x : c - x;
      d = kCGold * e;
    }
    const double u = (std::abs(d) >= tol1) ? x + d
                                           : x + ((d >= 0) ? tol1 : -tol1);
    const double fu = phi(u);
    if (fu <= fx) {
      if (u >= x) a = x; else c = x;
      v = w; fv = fw; w = x; fw = fx; x = u; fx = fu;
    } else {
      if (u < x) a = u; else c = u;
      if (fu <= fw || w == x) {
        v = w; fv = fw; w = u; fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u; fv = fu;
      }
    }
  }
  *f_out = fx;
  return x;
}

struct Tracker {
  Eigen::VectorXd best_x;
  double best_f;
  std::vector<double> trajectory;
  void record(const Eigen::VectorXd& x, double f) {
    if (f < best_f) {
      best_f = f;
      best_x = x;
    }
    trajectory.push_back(best_f);
  }
};

OptResult finish(Tracker& t, CountedObjective& f, std::string reason,
                 std::chrono::steady_clock::time_point start) {
  OptResult res;
  res.best_theta = std::move(t.best_x);
  res.best_f = t.best_f;
  res.trajectory = std::move(t.trajectory);
  res.eval_count = f.count;
  res.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  res.termination = std::move(reason);
  return res;
}

OptResult powell(CountedObjective& f, const Eigen::VectorXd& theta0,
                 const LsConfig& cfg,
                 std::chrono::steady_clock::time_point start) {
  const Eigen::Index n = theta0.size();
  std::vector<Eigen::VectorXd> dirs;
  for (Eigen::Index i = 0; i < n; ++i)
    dirs.push_back(Eigen::VectorXd::Unit(n, i));

  Eigen::VectorXd x = theta0;
  double fx = f(x);
  Tracker track{x, fx, {}};
  for (int iter = 0; iter < cfg.max_iterations; ++iter) {
    const Eigen::VectorXd x_start = x;
    const double f_start = fx;
    double biggest_drop = 0.0;
    std::size_t drop_idx = 0;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      double f_new;
      const double t = line_minimize(f, x, dirs[i], fx, cfg.line_tolerance,
                                     &f_new);
      if (fx - f_new > biggest_drop) {
        biggest_drop = fx - f_new;
        drop_idx = i;
      }
      x += t * dirs[i];
      fx = f_new;
    }
    track.record(x, fx);
    if (2.0 * (f_start - fx) <=
        cfg.f_tolerance * (std::abs(f_start) + std::abs(fx)) + 1e-300)
      return finish(track, f, "converged", start);
    // Direction replacement heuristic along the net move of this sweep.
    const Eigen::VectorXd net = x - x_start;
    const double f_ext = f(x_start + 2.0 * net);
    if (f_ext < f_start) {
      const double t1 = f_start - fx - biggest_drop;
      const double t2 = f_start - f_ext;
      if (2.0 * (f_start - 2.0 * fx + f_ext) * t1 * t1 <
          biggest_drop * t2 * t2) {
        double f_new;
        const double t =
            line_minimize(f, x, net, fx, cfg.line_tolerance, &f_new);
        x += t * net;
        fx = f_new;
        dirs[drop_idx] = dirs.back();
        dirs.back() = net;
        track.record(x, fx);
      }
    }
  }
  return finish(track, f, "budget", start);
}

OptResult nelder_mead(CountedObjective& f, const Eigen::VectorXd& theta0,
                      const LsConfig& cfg,
                      std::chrono::steady_clock::time_point start) {
  constexpr double kReflect = 1.0, kExpand = 2.0, kContract = 0.5,
                   kShrink = 0.5, kInitStep = 0.05;
  const Eigen::Index n = theta0.size();
  std::vector<Eigen::VectorXd> simplex{theta0};
  for (Eigen::Index i = 0; i < n; ++i)
    simplex.push_back(theta0 + kInitStep * Eigen::VectorXd::Unit(n, i));
  std::vector<double> fvals;
  for (const auto& v : simplex) fvals.push_back(f(v));

  Tracker track{theta0, fvals[0], {}};
  std::vector<std::size_t> order(simplex.size());
  for (int iter = 0; iter < cfg.max_iterations; ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return fvals[a] < fvals[b];
    });
    const std::size_t lo = order.front(), hi = order.back(),
                      next_hi = order[order.size() - 2];
    track.record(simplex[lo], fvals[lo]);
    if (std::abs(fvals[hi] - fvals[lo]) <
        cfg.f_tolerance * (std::abs(fvals[lo]) + std::abs(fvals[hi])) + 1e-300)
      return finish(track, f, "converged", start);

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (std::size_t i : order)
      if (i != hi) centroid += simplex[i];
    centroid /= static_cast<double>(n);

    const Eigen::VectorXd reflected =
        centroid + kReflect * (centroid - simplex[hi]);
    const double f_ref = f(reflected);
    if (f_ref < fvals[lo]) {
      const Eigen::VectorXd expanded =
          centroid + kExpand * (reflected - centroid);
      const double f_exp = f(expanded);
      if (f_exp < f_ref) {
        simplex[hi] = expanded;
        fvals[hi] = f_exp;
      } else {
        simplex[hi] = reflected;
        fvals[hi] = f_ref;
      }
    } else if (f_ref < fvals[next_hi]) {
      simplex[hi] = reflected;
      fvals[hi] = f_ref;
    } else {
      const Eigen::VectorXd contracted =
          centroid + kContract * (simplex[hi] - centroid);
      const double f_con = f(contracted);
      if (f_con < fvals[hi]) {
        simplex[hi] = contracted;
        fvals[hi] = f_con;
      } else {
        for (std::size_t i = 0; i < simplex.size(); ++i) {
          if (i == lo) continue;
          simplex[i] = simplex[lo] + kShrink * (simplex[i] - simplex[lo]);
          fvals[i] = f(simplex[i]);
        }
      }
    }
  }
  std::size_t lo = static_cast<std::size_t>(
      std::min_element(fvals.begin(), fvals.end()) - fvals.begin());
  track.record(simplex[lo], fvals[lo]);
  return finish(track, f, "budget", start);
}

OptResult bfgs(CountedObjective& f, const Eigen::VectorXd& theta0,
               const LsConfig& cfg,
               std::chrono::steady_clock::time_point start) {
  constexpr double kArmijo = 1e-4;
  const Eigen::Index n = theta0.size();
  Eigen::VectorXd x = theta0;
  double fx = f(x);
  Tracker track{x, fx, {}};
  Eigen::MatrixXd b_inv = Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd g = central_gradient(f, x, cfg.gradient_step);
  for (int iter = 0; iter < cfg.max_iterations; ++iter) {
    if (g.norm() < cfg.gradient_tolerance) {
      track.record(x, fx);
      return finish(track, f, "converged", start);
    }
    Eigen::VectorXd d = -b_inv * g;
    double slope = g.dot(d);
    if (slope >= 0.0) {  // lost curvature, restart from steepest descent
      b_inv.setIdentity();
      d = -g;
      slope = g.dot(d);
    }
    // Backtracking with quadratic interpolation; steps must satisfy the
    // Armijo sufficient-decrease condition.
    double t = 1.0;
    double f_new = f(x + t * d);
    while (f_new > fx + kArmijo * t * slope && t > 1e-14) {
      const double tq = -slope * t * t / (2.0 * (f_new - fx - slope * t));
      t = std::clamp(tq, 0.1 * t, 0.5 * t);
      f_new = f(x + t * d);
    }
    // One interpolation refinement of the accepted step: take the 1-D
    // quadratic model's minimizer when it improves and still passes Armijo.
    {
      const double denom = 2.0 * (f_new - fx - slope * t);
      if (denom > 0.0) {
        const double tq = -slope * t * t / denom;
        if (tq > 0.0 && tq < 4.0 && std::abs(tq - t) > 1e-12 * std::abs(t)) {
          const double fq = f(x + tq * d);
          if (fq < f_new && fq <= fx + kArmijo * tq * slope) {
            t = tq;
            f_new = fq;
          }
        }
      }
    }
    if (f_new >= fx) {
      track.record(x, fx);
      return finish(track, f, "converged", start);
    }
    const Eigen::VectorXd x_new = x + t * d;
    const Eigen::VectorXd g_new = central_gradient(f, x_new, cfg.gradient_step);
    const Eigen::VectorXd s = x_new - x;
    const Eigen::VectorXd y = g_new - g;
    const double sy = s.dot(y);
    if (sy > 1e-12) {
      const Eigen::VectorXd by = b_inv * y;
      const double yby = y.dot(by);
      b_inv += ((sy + yby) / (sy * sy)) * (s * s.transpose()) -
               (by * s.transpose() + s * by.transpose()) / sy;
    }
    const double f_prev = fx;
    x = x_new;
    fx = f_new;
    g = g_new;
    track.record(x, fx);
    if (std::abs(f_prev - fx) <
        cfg.f_tolerance * (std::abs(f_prev) + std::abs(fx)) + 1e-300)
      return finish(track, f, "converged", start);
  }
  return finish(track, f, "budget", start);
}

OptResult newton(CountedObjective& f, const Eigen::VectorXd& theta0,
                 const LsConfig& cfg,
                 std::chrono::steady_clock::time_point start) {
  const Eigen::Index n = theta0.size();
  Eigen::VectorXd x = theta0;
  double fx = f(x);
  Tracker track{x, fx, {}};
  double lambda = 1e-3;
  for (int iter = 0; iter < cfg.max_iterations; ++iter) {
    const Eigen::VectorXd g = central_gradient(f, x, cfg.gradient_step);
    if (g.norm() < cfg.gradient_tolerance) {
      track.record(x, fx);
      return finish(track, f, "converged", start);
    }
    const Eigen::MatrixXd hess = central_hessian(f, x, fx, cfg.hessian_step);

    bool accepted = false;
    double f_new = fx;
    Eigen::VectorXd x_new = x;
    for (int attempt = 0; attempt < 20 && !accepted; ++attempt) {
      Eigen::MatrixXd damped = hess;
      // Damping only when the Hessian is not positive definite (or after
      // a rejection bumped lambda).
      Eigen::LLT<Eigen::MatrixXd> llt(damped);
      if (llt.info() != Eigen::Success || attempt > 0) {
        damped += lambda * Eigen::MatrixXd::Identity(n, n);
        llt.compute(damped);
        while (llt.info() != Eigen::Success) {
          lambda *= 10.0;
          damped = hess + lambda * Eigen::MatrixXd::Identity(n, n);
          llt.compute(damped);
        }
      }
      const Eigen::VectorXd d = llt.solve(-g);
      double t = 1.0;
      double f_try = f(x + t * d);
      while (f_try >= fx && t > 1e-10) {
        t *= 0.5;
        f_try = f(x + t * d);
      }
      if (f_try < fx) {
        x_new = x + t * d;
        f_new = f_try;
        accepted = true;
        lambda = std::max(lambda / 10.0, 1e-12);
      } else {
        lambda *= 10.0;
      }
    }
    if (!accepted) {
      track.record(x, fx);
      return finish(track, f, "converged", start);
    }
    const double f_prev = fx;
    x = x_new;
    fx = f_new;
    track.record(x, fx);
    if (std::abs(f_prev - fx) <
        cfg.f_tolerance * (std::abs(f_prev) + std::abs(fx)) + 1e-300)
      return finish(track, f, "converged", start);
  }
  return finish(track, f, "budget", start);
}

}  // namespace

OptResult local_search(LsMethod method, const Objective& objective,
                       const Eigen::VectorXd& theta0, const LsConfig& cfg_in) {
  LsConfig config = cfg_in;
  if (config.f_tolerance < 0.0)
    config.f_tolerance = method == LsMethod::Powell ? 1e-4 : 1e-13;
  CountedObjective f{objective};
  const double f0 = f(theta0);
  if (!std::isfinite(f0))
    throw std::invalid_argument("objective non-finite at starting point");
  const auto start = std::chrono::steady_clock::now();
  switch (method) {
    case LsMethod::Powell: return powell(f, theta0, config, start);
    case LsMethod::Bfgs: return bfgs(f, theta0, config, start);
    case LsMethod::NelderMead: return nelder_mead(f, theta0, config, start);
    case LsMethod::Newton: return newton(f, theta0, config, start);
  }
  throw std::logic_error("unreachable");
}

}  // namespace gmig
