#pragma once

#include "conga/rng.hpp"

namespace conga {

// Two-phase temperature schedule: linear ramp tau1 -> tau_hot over the
// warmup epochs, then geometric decay tau_hot -> tau2 until max_epochs.
// Past max_epochs the temperature stays clamped at tau2.
struct TemperatureSchedule {
    double tau1 = 30.0;
    double tau_hot = 30.0;
    double tau2 = 0.01;
    int warmup_epochs = 1;
    int max_epochs = 2000;
};

// Dispersion of the logistic noise added to the logits. Constant mode keeps
// s fixed at s_base; heat mode ramps s_base -> s_peak linearly until
// peak_epoch, then back down to s_base at max_epochs (a reheat pulse that
// helps escape early freezes).
struct NoiseSchedule {
    enum class Mode { constant, heat };
    Mode mode = Mode::constant;
    double s_base = 1.0;
    double s_peak = 0.0;
    int peak_epoch = 0;
    int max_epochs = 2000;
};

// Forward value and straight-through derivative of one relaxed bit.
struct RelaxOutput {
    double x;     // {0,1} when hard, the sigmoid value itself when soft
    double dxdt;  // d sigma(t'/tau) / dt at the (noised) logit, always > 0
};

// Step function used for the hard forward pass; the 0.5 tie breaks to 0.
int heaviside(double t);

double soft_sigmoid(double t, double tau);

// d/dt sigma(t/tau) = sigma(1-sigma)/tau.
double sigmoid_grad(double t, double tau);

// Inverse-CDF sample of a zero-mean logistic with scale s, from a uniform
// u in (0,1). The eps guards keep the log argument finite even for u at the
// edges of representable range.
double sample_logistic(double u, double s, double eps = 1e-8);

// The relaxation in one call: optionally noise the logit, then either
// threshold (hard) or squash (soft). The straight-through derivative is the
// soft one in both cases. `rng` is only consumed when rand is true.
RelaxOutput hot_sigmoid(double t, double tau, double s, bool hard, bool rand,
                        SplitMix64& rng);

double tau_at(int epoch, const TemperatureSchedule& sched);
double s_at(int epoch, const NoiseSchedule& sched);

}  // namespace conga
