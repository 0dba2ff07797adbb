#pragma once

#include <vector>

#include "conga/data.hpp"
#include "conga/optimizer.hpp"

namespace conga {

// 2-d diagnostic problem: maximize v(x,y) = x^2 + y^2 subject to staying
// inside a disc (or inside at least one of several discs). Everything is
// smooth, so the optimizer runs without the relaxation machinery and the
// full trajectory can be plotted.
struct Circle {
    double cx = 0.0, cy = 0.0, r = 1.0;
};

struct ToyProblem {
    enum class Combine { single, union_min };
    std::vector<Circle> circles;
    Combine combine = Combine::single;
};

// The disc of radius 1 around (1,1): the classic single-constraint case,
// optimum v = 3 + 2*sqrt(2) at (1 + 1/sqrt(2), 1 + 1/sqrt(2)).
ToyProblem unit_circle_problem();

// Discs around (1,1) and (3,3): a disconnected feasible set whose better
// component is only reachable by crossing infeasible territory.
ToyProblem two_circle_problem();

// v, w and exact gradients at (x,y). For a union, w is the smallest (least
// violated) disc constraint and the gradients follow that disc; ties pick
// the earlier disc.
GradSample eval_toy(double x, double y, const ToyProblem& prob);

// `steps` optimizer steps from (x0, y0); returns steps+1 rows, row k being
// the iterate before step k. gamma and case are what the step at that
// iterate computes (the final row reports them without moving). case is the
// three-way rule on whichever gradients the mode steers by, 0 if feasible.
std::vector<TrajectoryRow> run_trajectory(double x0, double y0,
                                          const ToyProblem& prob,
                                          GammaMode mode,
                                          const OptimizerConfig& cfg,
                                          int steps);

}  // namespace conga
