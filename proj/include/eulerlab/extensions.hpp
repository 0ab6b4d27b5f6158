#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "eulerlab/errors.hpp"

namespace eulerlab {

// Finite group given by its multiplication table; laws verified on construction.
struct FiniteGroupTable {
    int order = 1;
    std::vector<int> mul;      // order x order, row-major: mul[g*order + h]
    int identity = 0;
    std::vector<int> inverse;

    FiniteGroupTable() : mul{0}, inverse{0} {}
    FiniteGroupTable(int order_, std::vector<int> mul_);

    static FiniteGroupTable cyclic(int m);

    int times(int g, int h) const { return mul[static_cast<std::size_t>(g) * order + h]; }
};

// Integer-valued 2-cochain on a finite group or on the window {-W..W} of Z.
// Window cocycles are only meaningful on window-interior triples.
struct TwoCocycle {
    enum class Base { Finite, ZWindow };
    Base base = Base::Finite;
    FiniteGroupTable group; // Base::Finite
    int window = 0;         // Base::ZWindow
    std::vector<long long> values;

    static TwoCocycle on_group(FiniteGroupTable g);
    static TwoCocycle on_window(int W);

    int side() const { return base == Base::Finite ? group.order : 2 * window + 1; }
    int index(int g) const { return base == Base::Finite ? g : g + window; }
    long long& at(int g, int h) { return values[static_cast<std::size_t>(index(g)) * side() + index(h)]; }
    long long operator()(int g, int h) const {
        return values[static_cast<std::size_t>(index(g)) * side() + index(h)];
    }
    bool in_base(int g) const {
        return base == Base::Finite ? (g >= 0 && g < group.order)
                                    : (g >= -window && g <= window);
    }
    int times(int g, int h) const { return base == Base::Finite ? group.times(g, h) : g + h; }
    int id() const { return base == Base::Finite ? group.identity : 0; }

    // Visits all triples on which the cocycle identity is defined.
    void for_each_triple(const std::function<void(int, int, int)>& fn) const;
};

// First triple violating c(g2,g3) - c(g1g2,g3) + c(g1,g2g3) - c(g1,g2) = 0.
std::optional<std::array<int, 3>> cocycle_violation(const TwoCocycle& phi);

// Shifts by the coboundary of the constant -phi(g,1); idempotent, same class.
TwoCocycle normalize_cocycle(const TwoCocycle& phi);

struct ExtElem {
    long long a;
    int g;
    bool operator==(const ExtElem&) const = default;
};

// Central extension of the base by Z: (a,g)(b,h) = (a + b + phi(g,h), gh).
class ExtensionGroup {
public:
    explicit ExtensionGroup(TwoCocycle phi);

    ExtElem identity() const { return {0, phi_.id()}; }
    ExtElem times(const ExtElem& x, const ExtElem& y) const;
    ExtElem inv(const ExtElem& x) const;

    // (a, 1) commutes with every element; exhaustive over the base.
    bool coefficient_central() const;

    const TwoCocycle& cocycle() const { return phi_; }

private:
    TwoCocycle phi_;
};

// Verifies phi is normalized and associativity of the extension product on
// all (window-interior) triples; AssociativityFailure names a witness.
ExtensionGroup build_extension(const TwoCocycle& phi);

// phi(g1,g2) = s(g1 g2)^{-1} s(g1) s(g2); needs s(g) over g, projecting to g.
// For a window base the result is defined on interior pairs, 0 elsewhere.
TwoCocycle cocycle_from_section(const ExtensionGroup& E,
                                const std::vector<ExtElem>& section);

// Canonical section g -> (0, g); recovers the defining cocycle exactly.
std::vector<ExtElem> canonical_section(const ExtensionGroup& E);

} // namespace eulerlab
