#pragma once

#include <string_view>
#include <vector>

#include "leafspan/graph.hpp"

namespace leafspan {

/// Default absolute eigenvalue tolerance.
inline constexpr double kEigenTolerance = 1e-10;
/// Slack used when comparing spectral quantities against theorem thresholds.
inline constexpr double kComparisonSlack = 1e-8;
/// Row sums within a block must agree to this absolute tolerance.
inline constexpr double kEquitableTolerance = 1e-12;

enum class MatrixKind {
    Adjacency,                  // A
    SignlessLaplacian,          // Q = D + A
    Distance,                   // distance matrix
    DistanceSignlessLaplacian,  // Tr + distance matrix
    AAlpha,                     // alpha D + (1 - alpha) A
};

std::string_view to_string(MatrixKind kind);
/// Accepts "adjacency", "signless", "distance", "distance-signless", "aalpha".
MatrixKind parse_matrix_kind(std::string_view name);

/// Dense real symmetric matrix, row-major.
class SymMatrix {
public:
    explicit SymMatrix(int n);
    /// Validates squareness and exact symmetry; throws std::invalid_argument.
    static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);

    int dimension() const { return n_; }
    double operator()(int i, int j) const { return a_[index(i, j)]; }
    /// Writes both (i, j) and (j, i).
    void set(int i, int j, double value);

    std::vector<double> multiply(const std::vector<double>& x) const;

private:
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j); }

    int n_;
    std::vector<double> a_;
};

/// alpha is read only for MatrixKind::AAlpha and must lie in [0, 1].
/// Distance kinds throw std::domain_error on disconnected input.
SymMatrix build_matrix(const Graph& g, MatrixKind kind, double alpha = 0.0);

struct Eigenpair {
    double value = 0.0;
    /// Normalised to max-norm 1 with a nonnegative largest component.
    std::vector<double> vector;
};

/// Largest eigenvalue and an eigenvector of a symmetric matrix, satisfying
/// ||Mx - rho x||_inf <= tol * max(1, rho). Uses cyclic Jacobi rotations;
/// throws std::runtime_error if the sweep budget is exhausted or the
/// residual contract fails.
Eigenpair perron_pair(const SymMatrix& m, double tol = kEigenTolerance);
double spectral_radius(const SymMatrix& m, double tol = kEigenTolerance);

/// Dominant eigenpair of a square nonnegative (not necessarily symmetric)
/// matrix given row-major, by shifted power iteration with the same residual
/// contract.
Eigenpair dominant_eigenpair(int n, const std::vector<double>& rows, double tol = kEigenTolerance);

/// Ordered disjoint nonempty classes covering 0..n-1.
class Partition {
public:
    /// Throws std::invalid_argument unless the classes partition 0..n-1.
    Partition(int n, std::vector<VertexSet> classes);

    int order() const { return n_; }
    int class_count() const { return static_cast<int>(classes_.size()); }
    const std::vector<VertexSet>& classes() const { return classes_; }
    std::vector<int> sizes() const;

private:
    int n_;
    std::vector<VertexSet> classes_;
};

/// Block-average matrix: b(i, j) is the sum of block (i, j) divided by the
/// size of class i.
struct QuotientMatrix {
    int classes = 0;
    std::vector<double> b;  // row-major
    bool equitable = false;

    double operator()(int i, int j) const { return b[static_cast<std::size_t>(i * classes + j)]; }
};

QuotientMatrix quotient(const SymMatrix& m, const Partition& p);

struct QuotientRadii {
    double full = 0.0;
    double quotient = 0.0;
    double gap() const;
};

/// Throws std::invalid_argument when the partition is not equitable for m.
QuotientRadii quotient_radii(const SymMatrix& m, const Partition& p, double eig_tol = kEigenTolerance);
bool check_quotient_radius(const SymMatrix& m, const Partition& p, double tol);

}  // namespace leafspan
