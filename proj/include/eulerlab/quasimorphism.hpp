#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "eulerlab/words.hpp"

namespace eulerlab {

// Bounded odd sequence alpha: Z -> R with finite support, alpha(-n) = -alpha(n).
class OddSequence {
public:
    OddSequence() = default;
    // keys are positive indices; zero values are dropped
    explicit OddSequence(std::map<int, double> support);

    double operator()(int n) const;
    double bound() const { return bound_; }
    const std::map<int, double>& support() const { return support_; }

private:
    std::map<int, double> support_;
    double bound_ = 0;
};

struct Quasimorphism {
    std::function<double(const Word&)> evaluator;
    std::optional<double> defect_bound;
    std::string label;

    double operator()(const Word& w) const { return evaluator(w); }
};

// f_alpha(s_{i_1}^{e_1} ... s_{i_m}^{e_m}) = sum_j alpha(e_j), rank 2 only.
double rolli_eval(const OddSequence& alpha, const Word& w);

Quasimorphism rolli_quasimorphism(OddSequence alpha, std::string label = "rolli");

// Exponent-sum homomorphism on one generator; defect 0.
Quasimorphism exponent_sum(int generator);

// delta-bar f (g1, g2) = f(g1) + f(g2) - f(g1 g2)
double bar_coboundary(const Quasimorphism& f, const Word& g1, const Word& g2);

// max |bar_coboundary| over all pairs of reduced words of length <= L in
// rank 2; certified lower bound for the defect D(f), nondecreasing in L.
double defect_lower_bound(const Quasimorphism& f, int L,
                          std::size_t pair_budget = 10000000);

struct HomogenizedValue {
    double value;
    double err;     // |value - homogenization(f)(g)| <= err
    long power;     // n with value = f(g^n)/n
};

// Approximates the homogeneous representative via f(g^n)/n with n doubling
// until D/n <= tol. Valid whenever D >= D(f).
HomogenizedValue homogenize(const Quasimorphism& f, const Word& g, double D,
                            double tol, long max_power = 1 << 22);

} // namespace eulerlab
