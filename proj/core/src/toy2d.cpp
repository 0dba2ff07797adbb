#include "conga/toy2d.hpp"

#include <stdexcept>

namespace conga {

ToyProblem unit_circle_problem() {
    return {{{1.0, 1.0, 1.0}}, ToyProblem::Combine::single};
}

ToyProblem two_circle_problem() {
    return {{{1.0, 1.0, 1.0}, {3.0, 3.0, 1.0}}, ToyProblem::Combine::union_min};
}

GradSample eval_toy(double x, double y, const ToyProblem& prob) {
    if (prob.circles.empty())
        throw std::invalid_argument("eval_toy: no circles");
    GradSample s;
    s.v = x * x + y * y;
    s.grad_v = {2.0 * x, 2.0 * y};

    std::size_t pick = 0;
    if (prob.combine == ToyProblem::Combine::union_min) {
        auto disc_w = [&](const Circle& c) {
            double dx = x - c.cx, dy = y - c.cy;
            return dx * dx + dy * dy - c.r * c.r;
        };
        double best = disc_w(prob.circles[0]);
        for (std::size_t i = 1; i < prob.circles.size(); ++i) {
            double wi = disc_w(prob.circles[i]);
            if (wi < best) {
                best = wi;
                pick = i;
            }
        }
    }
    const Circle& c = prob.circles[pick];
    double dx = x - c.cx, dy = y - c.cy;
    s.w = dx * dx + dy * dy - c.r * c.r;
    s.grad_w = {2.0 * dx, 2.0 * dy};
    return s;
}

std::vector<TrajectoryRow> run_trajectory(double x0, double y0,
                                          const ToyProblem& prob,
                                          GammaMode mode,
                                          const OptimizerConfig& cfg,
                                          int steps) {
    if (steps < 0)
        throw std::invalid_argument("run_trajectory: negative steps");
    std::vector<TrajectoryRow> rows;
    rows.reserve(steps + 1);
    std::vector<double> p{x0, y0};
    OptimizerState state = make_state(2);
    for (int k = 0; k <= steps; ++k) {
        GradSample sample = eval_toy(p[0], p[1], prob);
        StepResult step = conga_step(p, sample, state, cfg, mode);
        int case_id = 0;
        if (sample.w > 0.0) {
            const bool raw = mode == GammaMode::aga;
            case_id = aga_gamma(raw ? sample.grad_v : step.state.V,
                                raw ? sample.grad_w : step.state.W, sample.w,
                                cfg.lambda, cfg.nu, cfg.eps)
                          .case_id;
        }
        rows.push_back({k, p[0], p[1], sample.v, sample.w, step.gamma, case_id});
        if (k < steps) {
            p = std::move(step.params);
            state = std::move(step.state);
        }
    }
    return rows;
}

}  // namespace conga
