#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sqt/errors.hpp"

namespace sqt {

// A real function on [0,inf) together with its derivative and the support-line
// slope C_s used by the superquadratic defining inequality.
struct ScalarFunction {
    std::string name;
    std::function<double(double)> eval;
    std::function<double(double)> deriv;
    std::function<double(double)> subgradient_constant; // s -> C_s
    bool claims_superquadratic = false;
    bool claims_convex = false;
    bool nonnegative = false;

    double operator()(double t) const { return eval(t); }
};

// 101-point grid on [0,10]: 0 exactly, a geometric cluster near 0, and a
// linear tail. Superquadraticity is most delicate near 0.
inline std::vector<double> standard_grid() {
    std::vector<double> g;
    g.push_back(0.0);
    double x = 1e-4;
    while (g.size() < 51) {
        g.push_back(x);
        x *= std::pow(0.1 / 1e-4, 1.0 / 49.0); // cluster tops out below the linear tail
    }
    for (int i = 1; i <= 50; ++i) g.push_back(10.0 * i / 50.0);
    return g;
}

// Names: pow:<p> (p>=2), negpow:<p> (1<=p<=2), abspow:<p>, square, tlogt.
inline ScalarFunction catalog(const std::string& name, double p = 0.0) {
    ScalarFunction f;
    if (name == "square" || (name == "pow" && p == 2.0)) {
        f.name = "pow:2";
        f.eval = [](double t) { return t * t; };
        f.deriv = [](double t) { return 2.0 * t; };
        f.claims_superquadratic = true;
        f.claims_convex = true;
        f.nonnegative = true;
    } else if (name == "pow" || name == "power_p") {
        if (p < 2.0) throw ParameterOutOfRange("pow: requires p >= 2");
        f.name = "pow:" + std::to_string(p);
        f.eval = [p](double t) { return std::pow(t, p); };
        f.deriv = [p](double t) { return p * std::pow(t, p - 1.0); };
        f.claims_superquadratic = true;
        f.claims_convex = true;
        f.nonnegative = true;
    } else if (name == "negpow" || name == "neg_power_p") {
        if (p < 1.0 || p > 2.0) throw ParameterOutOfRange("negpow: requires 1 <= p <= 2");
        f.name = "negpow:" + std::to_string(p);
        f.eval = [p](double t) { return -std::pow(t, p); };
        f.deriv = [p](double t) { return -p * std::pow(t, p - 1.0); };
        f.claims_superquadratic = true; // superquadratic and concave
        f.claims_convex = false;
        f.nonnegative = false;
    } else if (name == "abspow" || name == "abs_power_p") {
        if (p < 1.0) throw ParameterOutOfRange("abspow: requires p >= 1");
        f.name = "abspow:" + std::to_string(p);
        f.eval = [p](double t) { return std::pow(std::abs(t), p); };
        f.deriv = [p](double t) {
            return t == 0.0 ? 0.0 : p * std::pow(std::abs(t), p - 1.0) * (t > 0 ? 1.0 : -1.0);
        };
        f.claims_superquadratic = p >= 2.0;
        f.claims_convex = true;
        f.nonnegative = true;
    } else if (name == "tlogt" || name == "t_log_t") {
        // convex-only; 0*log 0 := 0; never flagged superquadratic
        f.name = "tlogt";
        f.eval = [](double t) { return t <= 0.0 ? 0.0 : t * std::log(t); };
        f.deriv = [](double t) { return t <= 0.0 ? 0.0 : std::log(t) + 1.0; };
        f.claims_superquadratic = false;
        f.claims_convex = true;
        f.nonnegative = false;
    } else if (name == "linear") {
        // counterexample member: convex but not superquadratic
        f.name = "linear";
        f.eval = [](double t) { return t; };
        f.deriv = [](double) { return 1.0; };
        f.claims_superquadratic = false;
        f.claims_convex = true;
        f.nonnegative = true;
    } else {
        throw UnknownName("catalog: unknown function '" + name + "'");
    }
    // C_s = f'(s) holds for every member here (f(0)=f'(0)=0 for the
    // differentiable superquadratic ones; right derivative at 0 otherwise).
    auto d = f.deriv;
    f.subgradient_constant = [d](double s) { return d(s); };
    return f;
}

// "pow:3", "negpow:1.5", "tlogt", "square"
inline ScalarFunction catalog_parse(const std::string& spec) {
    auto pos = spec.find(':');
    if (pos == std::string::npos) return catalog(spec);
    std::string name = spec.substr(0, pos);
    double p = std::stod(spec.substr(pos + 1));
    ScalarFunction f = catalog(name, p);
    f.name = spec;
    return f;
}

struct PointwiseCheck {
    bool passed = true;
    double worst = 0.0;            // most negative slack seen
    std::pair<double, double> witness{0.0, 0.0};
};

// f(t) >= f(s) + C_s (t-s) + f(|t-s|) - tol over all grid pairs.
inline PointwiseCheck check_superquadratic(const ScalarFunction& f,
                                           const std::vector<double>& grid,
                                           double tol = 1e-9) {
    PointwiseCheck r;
    for (double s : grid) {
        const double Cs = f.subgradient_constant(s);
        for (double t : grid) {
            const double slack = f(t) - (f(s) + Cs * (t - s) + f(std::abs(t - s)));
            if (slack < r.worst) {
                r.worst = slack;
                r.witness = {s, t};
            }
        }
    }
    r.passed = r.worst >= -tol;
    return r;
}

// midpoint convexity over grid pairs
inline PointwiseCheck check_convex(const ScalarFunction& f,
                                   const std::vector<double>& grid,
                                   double tol = 1e-9) {
    PointwiseCheck r;
    for (double s : grid) {
        for (double t : grid) {
            const double slack = 0.5 * (f(s) + f(t)) - f(0.5 * (s + t));
            if (slack < r.worst) {
                r.worst = slack;
                r.witness = {s, t};
            }
        }
    }
    r.passed = r.worst >= -tol;
    return r;
}

} // namespace sqt
