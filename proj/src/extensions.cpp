#include "eulerlab/extensions.hpp"

#include <array>
#include <string>

namespace eulerlab {

FiniteGroupTable::FiniteGroupTable(int order_, std::vector<int> mul_)
    : order(order_), mul(std::move(mul_)) {
    if (order < 1) throw Error("group order must be >= 1");
    if (order > 512) throw Error("finite base groups are limited to order <= 512");
    if (mul.size() != static_cast<std::size_t>(order) * order)
        throw Error("multiplication table has wrong size");
    for (int v : mul)
        if (v < 0 || v >= order) throw Error("multiplication table entry out of range");

    identity = -1;
    for (int e = 0; e < order; ++e) {
        bool ok = true;
        for (int g = 0; g < order; ++g)
            if (times(e, g) != g || times(g, e) != g) { ok = false; break; }
        if (ok) { identity = e; break; }
    }
    if (identity < 0) throw Error("multiplication table has no identity");

    inverse.assign(order, -1);
    for (int g = 0; g < order; ++g) {
        for (int h = 0; h < order; ++h)
            if (times(g, h) == identity && times(h, g) == identity) { inverse[g] = h; break; }
        if (inverse[g] < 0) throw Error("multiplication table has a non-invertible element");
    }

    for (int g = 0; g < order; ++g)
        for (int h = 0; h < order; ++h)
            for (int k = 0; k < order; ++k)
                if (times(times(g, h), k) != times(g, times(h, k)))
                    throw Error("multiplication table is not associative");
}

FiniteGroupTable FiniteGroupTable::cyclic(int m) {
    if (m < 1) throw Error("cyclic group order must be >= 1");
    std::vector<int> mul(static_cast<std::size_t>(m) * m);
    for (int g = 0; g < m; ++g)
        for (int h = 0; h < m; ++h) mul[static_cast<std::size_t>(g) * m + h] = (g + h) % m;
    return FiniteGroupTable(m, std::move(mul));
}

TwoCocycle TwoCocycle::on_group(FiniteGroupTable g) {
    TwoCocycle c;
    c.base = Base::Finite;
    c.group = std::move(g);
    c.values.assign(static_cast<std::size_t>(c.group.order) * c.group.order, 0);
    return c;
}

TwoCocycle TwoCocycle::on_window(int W) {
    if (W < 1) throw Error("window bound must be >= 1");
    TwoCocycle c;
    c.base = Base::ZWindow;
    c.window = W;
    c.values.assign(static_cast<std::size_t>(2 * W + 1) * (2 * W + 1), 0);
    return c;
}

void TwoCocycle::for_each_triple(const std::function<void(int, int, int)>& fn) const {
    if (base == Base::Finite) {
        for (int g = 0; g < group.order; ++g)
            for (int h = 0; h < group.order; ++h)
                for (int k = 0; k < group.order; ++k) fn(g, h, k);
        return;
    }
    const int W = window;
    for (int g = -W; g <= W; ++g)
        for (int h = -W; h <= W; ++h) {
            if (std::abs(g + h) > W) continue;
            for (int k = -W; k <= W; ++k) {
                if (std::abs(h + k) > W || std::abs(g + h + k) > W) continue;
                fn(g, h, k);
            }
        }
}

std::optional<std::array<int, 3>> cocycle_violation(const TwoCocycle& phi) {
    std::optional<std::array<int, 3>> bad;
    phi.for_each_triple([&](int g, int h, int k) {
        if (bad) return;
        const long long r = phi(h, k) - phi(phi.times(g, h), k) +
                            phi(g, phi.times(h, k)) - phi(g, h);
        if (r != 0) bad = std::array<int, 3>{g, h, k};
    });
    return bad;
}

TwoCocycle normalize_cocycle(const TwoCocycle& phi) {
    if (auto bad = cocycle_violation(phi))
        throw NotACocycle("cocycle identity fails at triple (" +
                          std::to_string((*bad)[0]) + "," + std::to_string((*bad)[1]) +
                          "," + std::to_string((*bad)[2]) + ")");
    const long long k0 = phi(phi.id(), phi.id());
    TwoCocycle out = phi;
    for (auto& v : out.values) v -= k0;
    return out;
}

ExtensionGroup::ExtensionGroup(TwoCocycle phi) : phi_(std::move(phi)) {}

ExtElem ExtensionGroup::times(const ExtElem& x, const ExtElem& y) const {
    if (!phi_.in_base(x.g) || !phi_.in_base(y.g))
        throw Error("extension element outside the base");
    const int gh = phi_.times(x.g, y.g);
    if (!phi_.in_base(gh)) throw Error("extension product leaves the window");
    return {x.a + y.a + phi_(x.g, y.g), gh};
}

ExtElem ExtensionGroup::inv(const ExtElem& x) const {
    const int gi = phi_.base == TwoCocycle::Base::Finite ? phi_.group.inverse[x.g] : -x.g;
    return {-x.a - phi_(gi, x.g), gi};
}

bool ExtensionGroup::coefficient_central() const {
    const int side = phi_.side();
    const int lo = phi_.base == TwoCocycle::Base::Finite ? 0 : -phi_.window;
    for (int i = 0; i < side; ++i) {
        const int g = lo + i;
        const ExtElem z{7, phi_.id()};
        const ExtElem x{0, g};
        if (times(z, x) != times(x, z)) return false;
    }
    return true;
}

ExtensionGroup build_extension(const TwoCocycle& phi) {
    const int e = phi.id();
    const int side = phi.side();
    const int lo = phi.base == TwoCocycle::Base::Finite ? 0 : -phi.window;
    for (int i = 0; i < side; ++i) {
        const int g = lo + i;
        if (phi(g, e) != 0 || phi(e, g) != 0)
            throw NotACocycle("build_extension needs a normalized cocycle");
    }
    std::optional<std::array<int, 3>> bad;
    phi.for_each_triple([&](int g, int h, int k) {
        if (bad) return;
        // associativity of (a,g)(b,h) = (a+b+phi(g,h), gh) on the fibers
        const long long left = phi(g, h) + phi(phi.times(g, h), k);
        const long long right = phi(h, k) + phi(g, phi.times(h, k));
        if (left != right) bad = std::array<int, 3>{g, h, k};
    });
    if (bad)
        throw AssociativityFailure("extension product not associative at (" +
                                   std::to_string((*bad)[0]) + "," +
                                   std::to_string((*bad)[1]) + "," +
                                   std::to_string((*bad)[2]) + "); delta phi != 0");
    return ExtensionGroup(phi);
}

std::vector<ExtElem> canonical_section(const ExtensionGroup& E) {
    const TwoCocycle& phi = E.cocycle();
    const int side = phi.side();
    const int lo = phi.base == TwoCocycle::Base::Finite ? 0 : -phi.window;
    std::vector<ExtElem> s;
    s.reserve(side);
    for (int i = 0; i < side; ++i) s.push_back({0, lo + i});
    return s;
}

TwoCocycle cocycle_from_section(const ExtensionGroup& E,
                                const std::vector<ExtElem>& section) {
    const TwoCocycle& phi = E.cocycle();
    const int side = phi.side();
    const int lo = phi.base == TwoCocycle::Base::Finite ? 0 : -phi.window;
    if (section.size() != static_cast<std::size_t>(side))
        throw NotASection("section must assign one element per base element");
    for (int i = 0; i < side; ++i)
        if (section[i].g != lo + i)
            throw NotASection("section entry " + std::to_string(i) +
                              " does not project to its base element");

    TwoCocycle out = phi;
    for (auto& v : out.values) v = 0;
    const auto s = [&](int g) { return section[static_cast<std::size_t>(g - lo)]; };
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j) {
            const int g = lo + i, h = lo + j;
            const int gh = phi.times(g, h);
            if (!phi.in_base(gh)) continue;
            const ExtElem v = E.times(E.inv(s(gh)), E.times(s(g), s(h)));
            out.at(g, h) = v.a;
        }
    return out;
}

} // namespace eulerlab
