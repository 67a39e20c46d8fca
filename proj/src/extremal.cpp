#include "leafspan/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace leafspan {

void ExtremalParams::validate() const {
    if (t < 1) throw std::invalid_argument("extremal graph needs t >= 1");
    if (n < 2 * t) throw std::invalid_argument("extremal graph needs n >= 2t");
    if (n > kMaxVertices) throw std::invalid_argument("extremal graph order exceeds 64");
}

Graph build_extremal(ExtremalParams params) {
    params.validate();
    const auto [n, t] = params;
    if (n == 2 * t) return join(complete(t), edgeless(t));
    return join(complete(t), disjoint_union(complete(n - 2 * t), edgeless(t)));
}

Partition canonical_partition(ExtremalParams params) {
    params.validate();
    const auto [n, t] = params;
    auto span = [](int from, int to) { return VertexSet::range(to) - VertexSet::range(from); };
    if (n == 2 * t) return Partition(n, {span(0, t), span(t, n)});
    return Partition(n, {span(0, t), span(t, n - t), span(n - t, n)});
}

CharPoly char_poly(ExtremalParams params, MatrixKind kind) {
    params.validate();
    const std::int64_t n = params.n;
    const std::int64_t t = params.t;

    if (!params.cubic_family()) {
        const std::int64_t s = t;
        switch (kind) {
            case MatrixKind::Distance: return QuadPoly{-3 * (s - 1), s * s - 4 * s + 2};
            case MatrixKind::DistanceSignlessLaplacian: return QuadPoly{-(8 * s - 6), 14 * s * s - 22 * s + 8};
            case MatrixKind::Adjacency: return QuadPoly{-(s - 1), -s * s};
            case MatrixKind::SignlessLaplacian: return QuadPoly{-(4 * s - 2), 2 * s * s - 2 * s};
            case MatrixKind::AAlpha: break;
        }
        throw std::invalid_argument("no closed-form characteristic polynomial for the A_alpha matrix");
    }

    const std::int64_t n2 = n * n;
    const std::int64_t t2 = t * t;
    const std::int64_t t3 = t2 * t;
    switch (kind) {
        case MatrixKind::Distance:
            return CubicPoly{-(n + t - 4), -(2 * n * t + 3 * n - 5 * t2 + t - 5),
                             n * t2 - 2 * n * t - 2 * n + 5 * t2 - 2 * t3 + 2};
        case MatrixKind::DistanceSignlessLaplacian:
            return CubicPoly{-(5 * n + t - 8), 8 * n2 - n * t - 26 * n + 8 * t2 - 4 * t + 20,
                             -4 * n2 * n + 2 * n2 * t + 20 * n2 - 8 * n * t2 - 2 * n * t - 32 * n - 2 * t3 + 18 * t2 -
                                 4 * t + 16};
        case MatrixKind::Adjacency:
            return CubicPoly{-n + t + 2, t + 1 - n - t2, n * t2 - 2 * t3 - t2};
        case MatrixKind::SignlessLaplacian:
            return CubicPoly{t - 3 * n + 4, 2 * n2 + n * t - 6 * n - 4 * t2 + 4,
                             -2 * n2 * t + 4 * n * t2 + 6 * n * t - 2 * t3 - 6 * t2 - 4 * t};
        case MatrixKind::AAlpha: break;
    }
    throw std::invalid_argument("no closed-form characteristic polynomial for the A_alpha matrix");
}

namespace {

constexpr double kRootTolerance = 1e-12;

template <typename Poly>
double bisect(const Poly& p, double lo, double hi) {
    double flo = p(lo);
    if (flo == 0.0) return lo;
    if (p(hi) == 0.0) return hi;
    while (hi - lo > kRootTolerance * std::max(1.0, std::abs(hi))) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = p(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

template <typename Poly>
double rightmost_root(const Poly& p, std::vector<double> critical, double lo, double hi) {
    std::vector<double> cuts{lo};
    std::sort(critical.begin(), critical.end());
    for (double c : critical) {
        if (c > lo && c < hi) cuts.push_back(c);
    }
    cuts.push_back(hi);
    for (std::size_t i = cuts.size() - 1; i > 0; --i) {
        const double a = cuts[i - 1];
        const double b = cuts[i];
        const double fa = p(a);
        const double fb = p(b);
        if (fb == 0.0) return b;
        if (fa == 0.0 || (fa < 0.0) != (fb < 0.0)) return bisect(p, a, b);
    }
    throw std::domain_error("largest_root: no sign change at or above the hint");
}

__extension__ using Int128 = __int128;

// Discriminant of a monic cubic; zero iff there is a repeated root.
Int128 discriminant(const CubicPoly& p) {
    const Int128 b = p.c2, c = p.c1, d = p.c0;
    return 18 * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * c * c * c - 27 * d * d;
}

}  // namespace

double largest_root(const CharPoly& poly, double lower_hint) {
    return std::visit(
        [&](const auto& p) -> double {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, QuadPoly>) {
                const std::int64_t disc = p.c1 * p.c1 - 4 * p.c0;
                if (disc < 0) throw std::domain_error("largest_root: quadratic has no real root");
                const double root = (-static_cast<double>(p.c1) + std::sqrt(static_cast<double>(disc))) / 2.0;
                if (root < lower_hint - kRootTolerance) {
                    throw std::domain_error("largest_root: no root at or above the hint");
                }
                return root;
            } else {
                const double bound = 1.0 + static_cast<double>(std::max({std::abs(p.c2), std::abs(p.c1), std::abs(p.c0)}));
                if (lower_hint >= bound) throw std::domain_error("largest_root: hint exceeds the root bound");
                // p'(x) = 3x^2 + 2 c2 x + c1
                std::vector<double> critical;
                const double a = 3.0;
                const double b = 2.0 * static_cast<double>(p.c2);
                const double c = static_cast<double>(p.c1);
                const double disc = b * b - 4.0 * a * c;
                if (disc >= 0.0) {
                    const double sq = std::sqrt(disc);
                    critical = {(-b - sq) / (2.0 * a), (-b + sq) / (2.0 * a)};
                }
                if (discriminant(p) == 0 && !critical.empty()) {
                    // The double root is the critical point where p vanishes; the
                    // simple root follows from the root sum -c2.
                    const double twice = std::abs(p(critical[0])) < std::abs(p(critical[1])) ? critical[0] : critical[1];
                    const double simple = -static_cast<double>(p.c2) - 2.0 * twice;
                    if (twice >= simple && twice >= lower_hint) {
                        throw std::domain_error("largest_root: the largest root is repeated");
                    }
                }
                return rightmost_root(p, critical, lower_hint, bound);
            }
        },
        poly);
}

double root_hint(ExtremalParams params, MatrixKind kind) {
    params.validate();
    const double n = params.n;
    const double t = params.t;
    if (!params.cubic_family()) return 0.0;
    switch (kind) {
        case MatrixKind::Distance: return params.n >= 5 * params.t + 1 ? n + 1.5 * t - 1.0 : 0.0;
        case MatrixKind::DistanceSignlessLaplacian: return params.n >= 9 * params.t + 3 ? 2.0 * n + 5.0 * t - 2.0 : 0.0;
        case MatrixKind::Adjacency: return n - t - 1.0;
        case MatrixKind::SignlessLaplacian: return params.n >= params.t + 2 ? 2.0 * n - 2.0 * t - 2.0 : 0.0;
        case MatrixKind::AAlpha: break;
    }
    return 0.0;
}

double extremal_radius(ExtremalParams params, MatrixKind kind) {
    return largest_root(char_poly(params, kind), root_hint(params, kind));
}

std::vector<BoundCheck> check_bounds(ExtremalParams params) {
    params.validate();
    if (!params.cubic_family()) throw std::invalid_argument("check_bounds needs n >= 2t + 1");
    const auto [n, t] = params;

    auto lower_only = [&](std::string name, MatrixKind kind, bool applicable, double lower) {
        BoundCheck c{std::move(name), applicable, largest_root(char_poly(params, kind)), lower, std::nullopt};
        c.margin = c.radius - lower;
        c.holds = c.margin > 0.0;
        return c;
    };

    std::vector<BoundCheck> out;
    out.push_back(lower_only("distance", MatrixKind::Distance, n >= 5 * t + 1, n + 1.5 * t - 1.0));

    BoundCheck eta{"distance-signless", n >= 9 * t + 3, largest_root(char_poly(params, MatrixKind::DistanceSignlessLaplacian)),
                   2.0 * n + 5.0 * t - 2.0, 3.0 * n - 3.0 * t - 5.0};
    eta.margin = std::min(eta.radius - eta.lower, *eta.upper - eta.radius);
    eta.holds = eta.margin > 0.0;
    out.push_back(std::move(eta));

    out.push_back(lower_only("adjacency", MatrixKind::Adjacency, true, n - t - 1.0));
    out.push_back(lower_only("signless", MatrixKind::SignlessLaplacian, n >= t + 2, 2.0 * n - 2.0 * t - 2.0));
    return out;
}

}  // namespace leafspan
