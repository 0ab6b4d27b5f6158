#include "eulerlab/quasimorphism.hpp"

#include <cmath>
#include <utility>

namespace eulerlab {

OddSequence::OddSequence(std::map<int, double> support) {
    for (const auto& [n, v] : support) {
        if (n <= 0) throw BadIndex("odd sequence support uses positive indices");
        if (v != 0.0) support_.emplace(n, v);
    }
    for (const auto& [n, v] : support_) {
        (void)n;
        bound_ = std::max(bound_, std::abs(v));
    }
}

double OddSequence::operator()(int n) const {
    if (n == 0) return 0.0;
    const auto it = support_.find(std::abs(n));
    if (it == support_.end()) return 0.0;
    return n > 0 ? it->second : -it->second;
}

double rolli_eval(const OddSequence& alpha, const Word& w) {
    double sum = 0;
    for (const auto& [gen, exp] : syllables(w)) {
        if (gen > 2) throw RankMismatch("Rolli quasimorphisms are defined on rank 2");
        sum += alpha(exp);
    }
    return sum;
}

Quasimorphism rolli_quasimorphism(OddSequence alpha, std::string label) {
    return {[a = std::move(alpha)](const Word& w) { return rolli_eval(a, w); },
            std::nullopt, std::move(label)};
}

Quasimorphism exponent_sum(int generator) {
    return {[generator](const Word& w) {
                double s = 0;
                for (int l : w) {
                    if (l == generator) s += 1;
                    if (l == -generator) s -= 1;
                }
                return s;
            },
            0.0, "exponent_sum"};
}

double bar_coboundary(const Quasimorphism& f, const Word& g1, const Word& g2) {
    return f(g1) + f(g2) - f(word_mul(g1, g2));
}

double defect_lower_bound(const Quasimorphism& f, int L, std::size_t pair_budget) {
    if (L < 1) throw Error("defect_lower_bound needs L >= 1");
    const std::size_t b = reduced_ball_size(2, L);
    if (b * b > pair_budget) throw BallTooLarge("defect ball pair count exceeds budget");
    const auto ball = reduced_ball(2, L);
    std::vector<double> values;
    values.reserve(ball.size());
    for (const auto& w : ball) values.push_back(f(w));
    double best = 0;
    for (std::size_t i = 0; i < ball.size(); ++i)
        for (std::size_t j = 0; j < ball.size(); ++j) {
            const double d = values[i] + values[j] - f(word_mul(ball[i], ball[j]));
            best = std::max(best, std::abs(d));
        }
    return best;
}

HomogenizedValue homogenize(const Quasimorphism& f, const Word& g, double D,
                            double tol, long max_power) {
    if (!(tol > 0)) throw Error("homogenize needs tol > 0");
    if (D < 0) throw Error("homogenize needs D >= 0");
    long n = 1;
    while (D / static_cast<double>(n) > tol) {
        if (2 * n > max_power)
            throw IterationLimit("homogenize: D/n did not reach tolerance at power cap");
        n *= 2;
    }
    const double value = f(word_power(g, n)) / static_cast<double>(n);
    return {value, D / static_cast<double>(n), n};
}

} // namespace eulerlab
