#include "conga/relax.hpp"

#include <cmath>
#include <stdexcept>

namespace conga {

int heaviside(double t) { return t > 0.0 ? 1 : 0; }

double soft_sigmoid(double t, double tau) {
    return 1.0 / (1.0 + std::exp(-t / tau));
}

double sigmoid_grad(double t, double tau) {
    double sg = soft_sigmoid(t, tau);
    return sg * (1.0 - sg) / tau;
}

double sample_logistic(double u, double s, double eps) {
    return s * std::log(eps + u / (1.0 - u + eps));
}

RelaxOutput hot_sigmoid(double t, double tau, double s, bool hard, bool rand,
                        SplitMix64& rng) {
    if (rand)
        t += sample_logistic(rng.next_open01(), s);
    RelaxOutput out;
    out.dxdt = sigmoid_grad(t, tau);
    out.x = hard ? static_cast<double>(heaviside(t)) : soft_sigmoid(t, tau);
    return out;
}

double tau_at(int epoch, const TemperatureSchedule& sched) {
    if (epoch < 0)
        throw std::invalid_argument("tau_at: negative epoch");
    if (epoch < sched.warmup_epochs) {
        double frac = static_cast<double>(epoch) / sched.warmup_epochs;
        return sched.tau1 + (sched.tau_hot - sched.tau1) * frac;
    }
    if (epoch >= sched.max_epochs)
        return sched.tau2;
    double frac = static_cast<double>(epoch - sched.warmup_epochs) /
                  (sched.max_epochs - sched.warmup_epochs);
    return sched.tau_hot * std::pow(sched.tau2 / sched.tau_hot, frac);
}

double s_at(int epoch, const NoiseSchedule& sched) {
    if (epoch < 0)
        throw std::invalid_argument("s_at: negative epoch");
    if (sched.mode == NoiseSchedule::Mode::constant)
        return sched.s_base;
    if (epoch <= 0)
        return sched.s_base;
    if (epoch < sched.peak_epoch) {
        double frac = static_cast<double>(epoch) / sched.peak_epoch;
        return sched.s_base + (sched.s_peak - sched.s_base) * frac;
    }
    if (epoch >= sched.max_epochs)
        return sched.s_base;
    double frac = static_cast<double>(epoch - sched.peak_epoch) /
                  (sched.max_epochs - sched.peak_epoch);
    return sched.s_peak + (sched.s_base - sched.s_peak) * frac;
}

}  // namespace conga
