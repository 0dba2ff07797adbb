#include "conga/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace conga {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += a[i] * b[i];
    return acc;
}

}  // namespace

OptimizerState make_state(std::size_t dim) {
    OptimizerState st;
    st.V.assign(dim, 0.0);
    st.W.assign(dim, 0.0);
    return st;
}

double penalty_loss(double v, double w, double gamma, double nu) {
    return -v + gamma / nu * std::pow(std::max(0.0, w), nu);
}

std::vector<double> ema_update(const std::vector<double>& acc,
                               const std::vector<double>& grad, double beta) {
    if (acc.size() != grad.size())
        throw std::invalid_argument("ema_update: length mismatch");
    std::vector<double> out(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i)
        out[i] = beta * acc[i] + (1.0 - beta) * grad[i];
    return out;
}

double conga_gamma(const std::vector<double>& V, const std::vector<double>& W,
                   double w, const OptimizerConfig& cfg) {
    double num = dot(V, W) + cfg.mu * w / cfg.lambda;
    double den = std::pow(w, cfg.nu - 1.0) * dot(W, W) + cfg.eps;
    return std::max(0.0, num / den);
}

AgaGamma aga_gamma(const std::vector<double>& grad_v,
                   const std::vector<double>& grad_w, double w, double lambda,
                   double nu, double eps) {
    double vw = dot(grad_v, grad_w);
    if (vw < 0.0)
        return {0.0, 1};
    double ww = dot(grad_w, grad_w);
    double wpow = std::pow(w, nu - 1.0);
    double r1 = vw / (wpow * ww + eps);
    double r2 = dot(grad_v, grad_v) / (wpow * vw + eps);
    if (vw > 0.0 && r1 < r2)
        return {0.5 * (r1 + r2), 2};
    double r3 = (vw + w / lambda) / (wpow * ww + eps);
    return {r3, 3};
}

StepResult conga_step(const std::vector<double>& params,
                      const GradSample& sample, const OptimizerState& state,
                      const OptimizerConfig& cfg, GammaMode mode) {
    const std::size_t n = params.size();
    if (sample.grad_v.size() != n || sample.grad_w.size() != n)
        throw std::invalid_argument("conga_step: gradient length mismatch");

    StepResult out;
    // Empty state means "fresh": EMAs start at zero.
    out.state.V = state.V.empty() ? std::vector<double>(n, 0.0) : state.V;
    out.state.W = state.W.empty() ? std::vector<double>(n, 0.0) : state.W;
    out.state.V = ema_update(out.state.V, sample.grad_v, cfg.beta_v);
    out.state.W = ema_update(out.state.W, sample.grad_w, cfg.beta_w);
    out.state.step = state.step + 1;

    const bool use_raw = (mode == GammaMode::aga);
    const std::vector<double>& V = use_raw ? sample.grad_v : out.state.V;
    const std::vector<double>& W = use_raw ? sample.grad_w : out.state.W;

    double gamma = 0.0;
    double wpow = 0.0;
    if (sample.w > 0.0) {
        gamma = use_raw ? aga_gamma(sample.grad_v, sample.grad_w, sample.w,
                                    cfg.lambda, cfg.nu, cfg.eps)
                              .gamma
                        : conga_gamma(V, W, sample.w, cfg);
        wpow = std::pow(sample.w, cfg.nu - 1.0);
    }

    out.params.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double g = -V[i] + gamma * wpow * W[i];
        out.params[i] = params[i] - cfg.lambda * g;
    }
    out.gamma = gamma;
    return out;
}

}  // namespace conga
