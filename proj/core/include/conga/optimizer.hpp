#pragma once

#include <cstddef>
#include <vector>

namespace conga {

struct OptimizerConfig {
    double lambda = 0.1;  // learning rate
    double nu = 1.0;      // penalty exponent
    double mu = 0.5;      // target fraction of the violation removed per step
    double beta_v = 0.5;  // EMA factor for the objective gradient
    double beta_w = 0.5;  // EMA factor for the constraint gradient
    double eps = 1e-6;    // division guard in the gamma formulas
};

// EMA accumulators. Fresh state starts at zero with no bias correction.
struct OptimizerState {
    std::vector<double> V;  // smoothed grad v
    std::vector<double> W;  // smoothed grad w
    int step = 0;
};
OptimizerState make_state(std::size_t dim);

// One evaluation of the problem at the current parameters. w uses the
// convention "violated iff w > 0".
struct GradSample {
    double v = 0.0;
    double w = 0.0;
    std::vector<double> grad_v;
    std::vector<double> grad_w;
};

// conga: gamma from the EMA-smoothed gradients, one closed form.
// aga: the three-case rule on raw gradients (the non-smoothed ancestor).
enum class GammaMode { conga, aga };

// L(p) = -v + (gamma/nu) * max(0, w)^nu. Feasible points pay no penalty.
double penalty_loss(double v, double w, double gamma, double nu);

// new = beta * acc + (1 - beta) * grad, elementwise.
std::vector<double> ema_update(const std::vector<double>& acc,
                               const std::vector<double>& grad, double beta);

// gamma = max(0, (V.W + mu*w/lambda) / (w^(nu-1) * W.W + eps)).
// Only meaningful at violated points (w > 0).
double conga_gamma(const std::vector<double>& V, const std::vector<double>& W,
                   double w, const OptimizerConfig& cfg);

struct AgaGamma {
    double gamma;
    int case_id;  // 1: opposed gradients, 2: averaged ratio, 3: fallback
};
AgaGamma aga_gamma(const std::vector<double>& grad_v,
                   const std::vector<double>& grad_w, double w, double lambda,
                   double nu, double eps);

struct StepResult {
    std::vector<double> params;
    OptimizerState state;
    double gamma;  // 0 whenever the sample was feasible
};

// One gradient-ascent step on v with the adaptive penalty:
//   p <- p - lambda * (-V + gamma * max(0,w)^(nu-1) * W)
// EMAs advance in both modes; aga mode just ignores them when forming gamma
// and the update direction.
StepResult conga_step(const std::vector<double>& params,
                      const GradSample& sample, const OptimizerState& state,
                      const OptimizerConfig& cfg,
                      GammaMode mode = GammaMode::conga);

}  // namespace conga
