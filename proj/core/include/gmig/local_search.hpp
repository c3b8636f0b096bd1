#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

namespace gmig {

enum class LsMethod { Powell, Bfgs, NelderMead, Newton };

LsMethod ls_method_from_string(const std::string& name);
const char* ls_method_name(LsMethod m);

struct LsConfig {
  LsMethod method = LsMethod::Newton;
  int max_iterations = 1000;
  double gradient_step = 1e-5;       // central differences for gradients
  double hessian_step = 1e-4;        // central differences for Hessians
  // Relative f-change termination tolerance; negative means the method
  // default (Powell keeps its conventional 1e-4, the others 1e-13).
  double f_tolerance = -1.0;
  double gradient_tolerance = 1e-10;
  // Relative tolerance of the derivative-free line minimizations (Powell).
  // 1e-4 is the conventional default for Powell's method.
  double line_tolerance = 1e-4;

  /// Iteration budgets: ordinary-VQE 2000/50/2000/1000 and GMIG
  /// 500/22/1000/1000 for Powell/BFGS/Nelder-Mead/Newton.
  static int default_iterations(LsMethod m, bool gmig_mode);
};

struct OptResult {
  Eigen::VectorXd best_theta;
  double best_f = 0.0;
  std::vector<double> trajectory;  // best f per iteration
  std::uint64_t eval_count = 0;
  double wall_seconds = 0.0;
  std::string termination;  // "converged", "budget", "diverged"
};

using Objective = std::function<double(const Eigen::VectorXd&)>;

OptResult local_search(LsMethod method, const Objective& f,
                       const Eigen::VectorXd& theta0, const LsConfig& config);

}  // namespace gmig
