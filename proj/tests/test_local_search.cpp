#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "gmig/local_search.hpp"

using namespace gmig;

TEST_CASE("Newton solves a 1D quadratic in one accepted step") {
  auto f = [](const Eigen::VectorXd& x) {
    return (x[0] - 3.0) * (x[0] - 3.0);
  };
  LsConfig cfg;
  cfg.max_iterations = 1;
  Eigen::VectorXd x0 = Eigen::VectorXd::Zero(1);
  const auto res = local_search(LsMethod::Newton, f, x0, cfg);
  // Tolerance sits above the noise floor of the finite-difference Hessian.
  CHECK(res.best_theta[0] == doctest::Approx(3.0).epsilon(1e-6));
}

TEST_CASE("BFGS on a random SPD quadratic reaches tiny gradients") {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> normal;
  Eigen::MatrixXd a(5, 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) a(i, j) = normal(rng);
  const Eigen::MatrixXd spd =
      a * a.transpose() + 0.5 * Eigen::MatrixXd::Identity(5, 5);
  Eigen::VectorXd b(5);
  for (int i = 0; i < 5; ++i) b[i] = normal(rng);
  const Eigen::VectorXd x_star = spd.ldlt().solve(b);

  auto f = [&](const Eigen::VectorXd& x) {
    return 0.5 * x.dot(spd * x) - b.dot(x);
  };
  auto grad_norm = [&](const Eigen::VectorXd& x) {
    return (spd * x - b).norm();
  };
  LsConfig cfg;
  cfg.max_iterations = 10;
  cfg.f_tolerance = 0.0;  // let the gradient test terminate
  const auto res =
      local_search(LsMethod::Bfgs, f, Eigen::VectorXd::Zero(5), cfg);
  CHECK(grad_norm(res.best_theta) < 1e-8);
  CHECK((res.best_theta - x_star).norm() < 1e-8);
}

TEST_CASE("Nelder-Mead reaches the sphere minimum") {
  auto f = [](const Eigen::VectorXd& x) { return x.squaredNorm(); };
  Eigen::VectorXd x0(2);
  x0 << 1.0, 1.0;
  LsConfig cfg;
  cfg.max_iterations = 200;
  const auto res = local_search(LsMethod::NelderMead, f, x0, cfg);
  CHECK(std::abs(res.best_theta[0]) < 1e-4);
  CHECK(std::abs(res.best_theta[1]) < 1e-4);
}

TEST_CASE("Powell is exact on a separable quadratic") {
  auto f = [](const Eigen::VectorXd& x) {
    double acc = 0.0;
    for (int i = 0; i < x.size(); ++i)
      acc += (i + 1) * (x[i] - i) * (x[i] - i);
    return acc;
  };
  Eigen::VectorXd x0 = Eigen::VectorXd::Constant(4, 5.0);
  LsConfig cfg;
  cfg.max_iterations = 50;
  const auto res = local_search(LsMethod::Powell, f, x0, cfg);
  for (int i = 0; i < 4; ++i)
    CHECK(res.best_theta[i] == doctest::Approx(double(i)).epsilon(1e-8));
  CHECK(res.best_f < 1e-12);
}

TEST_CASE("all methods: monotone acceptance and budget accounting") {
  // Rosenbrock is a stress case none of them solves in a few steps, so the
  // budget path triggers.
  auto rosen = [](const Eigen::VectorXd& x) {
    return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
  };
  Eigen::VectorXd x0(2);
  x0 << -1.2, 1.0;
  const double f0 = rosen(x0);
  for (LsMethod m : {LsMethod::Powell, LsMethod::Bfgs, LsMethod::NelderMead,
                     LsMethod::Newton}) {
    LsConfig cfg;
    cfg.method = m;
    cfg.max_iterations = 5;
    const auto res = local_search(m, rosen, x0, cfg);
    CHECK(res.best_f <= f0);
    CHECK(res.best_f ==
          *std::min_element(res.trajectory.begin(), res.trajectory.end()));
    CHECK(res.eval_count > 0);
    CHECK((res.termination == "budget" || res.termination == "converged"));
  }
}

TEST_CASE("non-finite objective at theta0 is rejected") {
  auto f = [](const Eigen::VectorXd&) {
    return std::numeric_limits<double>::quiet_NaN();
  };
  LsConfig cfg;
  CHECK_THROWS_AS(
      local_search(LsMethod::Newton, f, Eigen::VectorXd::Zero(2), cfg),
      std::invalid_argument);
}

TEST_CASE("per-mode iteration defaults") {
  CHECK(LsConfig::default_iterations(LsMethod::Powell, false) == 2000);
  CHECK(LsConfig::default_iterations(LsMethod::Bfgs, false) == 50);
  CHECK(LsConfig::default_iterations(LsMethod::NelderMead, false) == 2000);
  CHECK(LsConfig::default_iterations(LsMethod::Newton, false) == 1000);
  CHECK(LsConfig::default_iterations(LsMethod::Powell, true) == 500);
  CHECK(LsConfig::default_iterations(LsMethod::Bfgs, true) == 22);
  CHECK(LsConfig::default_iterations(LsMethod::NelderMead, true) == 1000);
  CHECK(LsConfig::default_iterations(LsMethod::Newton, true) == 1000);
}

TEST_CASE("method name parsing round-trips") {
  for (LsMethod m : {LsMethod::Powell, LsMethod::Bfgs, LsMethod::NelderMead,
                     LsMethod::Newton})
    CHECK(ls_method_from_string(ls_method_name(m)) == m);
  CHECK_THROWS_AS(ls_method_from_string("sgd"), std::invalid_argument);
}
