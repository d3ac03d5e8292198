#pragma once

#include <cmath>
#include <cstdint>

namespace ltk {

enum class Act : std::uint8_t {
    Identity = 0,
    LeakyReLU = 1,       // param = negative slope
    SmoothLeakyReLU = 2, // 0.2x + 0.8 ln(1+e^x)
    ReLUWithBias = 3,    // max(x,0) + param
};

struct Activation {
    Act kind = Act::Identity;
    double param = 0.0;

    static Activation identity() { return {Act::Identity, 0.0}; }
    static Activation leaky_relu(double slope) { return {Act::LeakyReLU, slope}; }
    static Activation smooth_leaky_relu() { return {Act::SmoothLeakyReLU, 0.0}; }
    static Activation relu_with_bias(double bias) { return {Act::ReLUWithBias, bias}; }

    double value(double x) const {
        switch (kind) {
            case Act::Identity:
                return x;
            case Act::LeakyReLU:
                return x > 0.0 ? x : param * x;
            case Act::SmoothLeakyReLU:
                // softplus overflows past ~709; the tails are linear to
                // machine precision well before that.
                if (x > 30.0) return x;
                if (x < -30.0) return 0.2 * x;
                return 0.2 * x + 0.8 * std::log1p(std::exp(x));
            case Act::ReLUWithBias:
                return (x > 0.0 ? x : 0.0) + param;
        }
        return x;
    }

    double deriv(double x) const {
        switch (kind) {
            case Act::Identity:
                return 1.0;
            case Act::LeakyReLU:
                return x > 0.0 ? 1.0 : param;
            case Act::SmoothLeakyReLU: {
                if (x > 30.0) return 1.0;
                if (x < -30.0) return 0.2;
                const double s = 1.0 / (1.0 + std::exp(-x));
                return 0.2 + 0.8 * s;
            }
            case Act::ReLUWithBias:
                return x > 0.0 ? 1.0 : 0.0;
        }
        return 1.0;
    }
};

}  // namespace ltk
