#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "leafspan/graph.hpp"
#include "leafspan/spectra.hpp"

namespace leafspan {

/// Order n and minimum-degree parameter t of the threshold graph
///   H(n, t) = K_t v (K_{n-2t} u tK_1)   for n >= 2t + 1,
///   H(2t, t) = K_t v tK_1.
struct ExtremalParams {
    int n = 0;
    int t = 0;

    /// Throws std::invalid_argument unless t >= 1 and n >= 2t (and n <= 64).
    void validate() const;
    bool cubic_family() const { return n >= 2 * t + 1; }
};

/// x^3 + c2 x^2 + c1 x + c0 with integer coefficients.
struct CubicPoly {
    std::int64_t c2 = 0, c1 = 0, c0 = 0;

    std::int64_t operator()(std::int64_t x) const { return ((x + c2) * x + c1) * x + c0; }
    double operator()(double x) const {
        return ((x + static_cast<double>(c2)) * x + static_cast<double>(c1)) * x + static_cast<double>(c0);
    }
    bool operator==(const CubicPoly&) const = default;
};

/// x^2 + c1 x + c0 with integer coefficients.
struct QuadPoly {
    std::int64_t c1 = 0, c0 = 0;

    std::int64_t operator()(std::int64_t x) const { return (x + c1) * x + c0; }
    double operator()(double x) const { return (x + static_cast<double>(c1)) * x + static_cast<double>(c0); }
    bool operator==(const QuadPoly&) const = default;
};

using CharPoly = std::variant<CubicPoly, QuadPoly>;

/// Vertex order: the K_t class first, then K_{n-2t}, then the t isolated
/// vertices.
Graph build_extremal(ExtremalParams params);
/// Three classes (or two when n = 2t) in build_extremal's vertex order.
Partition canonical_partition(ExtremalParams params);

/// Characteristic polynomial of the equitable quotient of the given matrix of
/// H(n, t). Cubic for n >= 2t + 1, quadratic (with s = t) for n = 2t.
/// MatrixKind::AAlpha has no closed form and is rejected.
CharPoly char_poly(ExtremalParams params, MatrixKind kind);

/// Largest real root, at least lower_hint. The bracket [lower_hint,
/// 1 + max|c_i|] is split at the real critical points; the rightmost
/// monotone piece with a sign change is bisected to 1e-12. Throws
/// std::domain_error when no such piece exists or a double root sits on a
/// piece boundary.
double largest_root(const CharPoly& poly, double lower_hint = 0.0);

/// Known strict lower bound for the radius (0 when none applies).
double root_hint(ExtremalParams params, MatrixKind kind);

/// Spectral radius of the given matrix of H(n, t) from its characteristic
/// polynomial.
double extremal_radius(ExtremalParams params, MatrixKind kind);

struct BoundCheck {
    std::string name;      // "distance", "distance-signless", "adjacency", "signless"
    bool applicable = false;
    double radius = 0.0;
    double lower = 0.0;
    std::optional<double> upper;
    bool holds = false;
    /// Smallest distance to a violated side; positive when the bound holds.
    double margin = 0.0;
};

/// Evaluates
///   distance:          rho > n + 3t/2 - 1           for n >= 5t + 1
///   distance-signless: 2n + 5t - 2 < rho < 3n - 3t - 5   for n >= 9t + 3
///   adjacency:         rho > n - t - 1
///   signless:          rho > 2n - 2t - 2            for n >= t + 2
/// Requires n >= 2t + 1.
std::vector<BoundCheck> check_bounds(ExtremalParams params);

}  // namespace leafspan
