#include "leafspan/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace leafspan {

std::string_view to_string(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::Adjacency: return "adjacency";
        case MatrixKind::SignlessLaplacian: return "signless";
        case MatrixKind::Distance: return "distance";
        case MatrixKind::DistanceSignlessLaplacian: return "distance-signless";
        case MatrixKind::AAlpha: return "aalpha";
    }
    return "unknown";
}

MatrixKind parse_matrix_kind(std::string_view name) {
    for (auto kind : {MatrixKind::Adjacency, MatrixKind::SignlessLaplacian, MatrixKind::Distance,
                      MatrixKind::DistanceSignlessLaplacian, MatrixKind::AAlpha}) {
        if (to_string(kind) == name) return kind;
    }
    throw std::invalid_argument("unknown matrix kind '" + std::string(name) + "'");
}

SymMatrix::SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0) {
    if (n < 1) throw std::invalid_argument("matrix dimension must be positive");
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    const int n = static_cast<int>(rows.size());
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n) {
            throw std::invalid_argument("matrix is not square");
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double x = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (x != rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
                throw std::invalid_argument("matrix is not symmetric");
            }
            m.a_[m.index(i, j)] = x;
        }
    }
    return m;
}

void SymMatrix::set(int i, int j, double value) {
    a_[index(i, j)] = value;
    a_[index(j, i)] = value;
}

std::vector<double> SymMatrix::multiply(const std::vector<double>& x) const {
    std::vector<double> y(static_cast<std::size_t>(n_), 0.0);
    for (int i = 0; i < n_; ++i) {
        double s = 0.0;
        for (int j = 0; j < n_; ++j) s += a_[index(i, j)] * x[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(i)] = s;
    }
    return y;
}

SymMatrix build_matrix(const Graph& g, MatrixKind kind, double alpha) {
    const int n = g.order();
    SymMatrix m(n);
    switch (kind) {
        case MatrixKind::Adjacency:
        case MatrixKind::SignlessLaplacian:
        case MatrixKind::AAlpha: {
            if (kind == MatrixKind::AAlpha && !(alpha >= 0.0 && alpha <= 1.0)) {
                throw std::invalid_argument("alpha must lie in [0, 1]");
            }
            const double diag_w = kind == MatrixKind::Adjacency ? 0.0 : kind == MatrixKind::AAlpha ? alpha : 1.0;
            const double off_w = kind == MatrixKind::AAlpha ? 1.0 - alpha : 1.0;
            for (int u = 0; u < n; ++u) {
                m.set(u, u, diag_w * g.degree(u));
                for_each_vertex(g.neighbors(u), [&](int v) { m.set(u, v, off_w); });
            }
            break;
        }
        case MatrixKind::Distance:
        case MatrixKind::DistanceSignlessLaplacian: {
            const DistMatrix d = bfs_distances(g);
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) m.set(i, j, d.at(i, j));
                if (kind == MatrixKind::DistanceSignlessLaplacian) m.set(i, i, d.transmission(i));
            }
            break;
        }
    }
    return m;
}

namespace {

double residual_inf(const SymMatrix& m, const std::vector<double>& x, double rho) {
    const auto y = m.multiply(x);
    double r = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) r = std::max(r, std::abs(y[i] - rho * x[i]));
    return r;
}

void normalise_max(std::vector<double>& x) {
    double peak = 0.0;
    for (double v : x) {
        if (std::abs(v) > std::abs(peak)) peak = v;
    }
    if (peak == 0.0) throw std::runtime_error("zero eigenvector");
    for (double& v : x) v /= peak;
}

constexpr int kJacobiSweeps = 100;
constexpr long kPowerIterations = 2'000'000;

}  // namespace

Eigenpair perron_pair(const SymMatrix& m, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    const int n = m.dimension();
    if (n == 1) return {m(0, 0), {1.0}};

    // Working copy and accumulated rotations, both row-major.
    std::vector<double> a(static_cast<std::size_t>(n * n));
    std::vector<double> v(static_cast<std::size_t>(n * n), 0.0);
    auto at = [n](std::vector<double>& buf, int i, int j) -> double& {
        return buf[static_cast<std::size_t>(i * n + j)];
    };
    double frob = 0.0;
    for (int i = 0; i < n; ++i) {
        at(v, i, i) = 1.0;
        for (int j = 0; j < n; ++j) {
            at(a, i, j) = m(i, j);
            frob += m(i, j) * m(i, j);
        }
    }
    frob = std::sqrt(frob);

    bool converged = false;
    for (int sweep = 0; sweep < kJacobiSweeps && !converged; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += at(a, i, j) * at(a, i, j);
        if (std::sqrt(off) <= 1e-15 * std::max(1.0, frob)) {
            converged = true;
            break;
        }
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(a, p, q);
                if (apq == 0.0) continue;
                const double theta = (at(a, q, q) - at(a, p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = at(a, k, p);
                    const double akq = at(a, k, q);
                    at(a, k, p) = c * akp - s * akq;
                    at(a, k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = at(a, p, k);
                    const double aqk = at(a, q, k);
                    at(a, p, k) = c * apk - s * aqk;
                    at(a, q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = at(v, k, p);
                    const double vkq = at(v, k, q);
                    at(v, k, p) = c * vkp - s * vkq;
                    at(v, k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    if (!converged) throw std::runtime_error("Jacobi eigensolver did not converge");

    int top = 0;
    for (int i = 1; i < n; ++i) {
        if (at(a, i, i) > at(a, top, top)) top = i;
    }
    Eigenpair out{at(a, top, top), std::vector<double>(static_cast<std::size_t>(n))};
    for (int k = 0; k < n; ++k) out.vector[static_cast<std::size_t>(k)] = at(v, k, top);
    normalise_max(out.vector);

    if (residual_inf(m, out.vector, out.value) > tol * std::max(1.0, out.value)) {
        throw std::runtime_error("eigenpair residual exceeds tolerance");
    }
    return out;
}

double spectral_radius(const SymMatrix& m, double tol) { return perron_pair(m, tol).value; }

namespace {
constexpr double kNegligibleComponent = 1e-6;
}  // namespace

Eigenpair dominant_eigenpair(int n, const std::vector<double>& rows, double tol) {
    if (n < 1 || static_cast<int>(rows.size()) != n * n) throw std::invalid_argument("matrix shape mismatch");
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    for (double x : rows) {
        if (x < 0.0) throw std::invalid_argument("dominant_eigenpair expects a nonnegative matrix");
    }
    if (n == 1) return {rows[0], {1.0}};

    auto apply = [&](const std::vector<double>& x) {
        std::vector<double> y(static_cast<std::size_t>(n), 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                y[static_cast<std::size_t>(i)] += rows[static_cast<std::size_t>(i * n + j)] * x[static_cast<std::size_t>(j)];
        return y;
    };

    // A unit shift makes the iteration matrix primitive whenever the input is
    // irreducible, so the Perron root is strictly dominant.
    constexpr double shift = 1.0;
    std::vector<double> x(static_cast<std::size_t>(n), 1.0);
    for (long it = 0; it < kPowerIterations; ++it) {
        auto y = apply(x);
        double peak = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) {
            y[i] += shift * x[i];
            peak = std::max(peak, y[i]);
        }
        if (peak == 0.0) throw std::runtime_error("power iteration collapsed to zero");
        for (double& v : y) v /= peak;
        x = std::move(y);

        if (it % 8 == 7 || it < 8) {
            // Collatz-Wielandt: for a positive x, min (Mx)_i / x_i <= rho <= max (Mx)_i / x_i.
            // Components that have decayed away (reducible input) are left out.
            const auto mx = apply(x);
            double lo = INFINITY;
            double hi = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) {
                if (x[i] < kNegligibleComponent) continue;
                lo = std::min(lo, mx[i] / x[i]);
                hi = std::max(hi, mx[i] / x[i]);
            }
            const double est = 0.5 * (lo + hi);
            double r = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) r = std::max(r, std::abs(mx[i] - est * x[i]));
            const double limit = tol * std::max(1.0, est);
            if (hi - lo <= limit && r <= limit) {
                normalise_max(x);
                return {est, x};
            }
        }
    }
    throw std::runtime_error("power iteration did not converge");
}

Partition::Partition(int n, std::vector<VertexSet> classes) : n_(n), classes_(std::move(classes)) {
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("partition order must be in [1, 64]");
    VertexSet seen;
    for (auto c : classes_) {
        if (c.empty()) throw std::invalid_argument("partition has an empty class");
        if (!(c & seen).empty()) throw std::invalid_argument("partition classes overlap");
        seen = seen | c;
    }
    if (seen != VertexSet::range(n)) throw std::invalid_argument("partition does not cover every vertex");
}

std::vector<int> Partition::sizes() const {
    std::vector<int> out;
    for (auto c : classes_) out.push_back(c.size());
    return out;
}

QuotientMatrix quotient(const SymMatrix& m, const Partition& p) {
    if (p.order() != m.dimension()) throw std::invalid_argument("partition order does not match matrix");
    const int l = p.class_count();
    QuotientMatrix q{l, std::vector<double>(static_cast<std::size_t>(l * l), 0.0), true};
    const auto& cls = p.classes();
    for (int bi = 0; bi < l; ++bi) {
        for (int bj = 0; bj < l; ++bj) {
            std::vector<double> row_sums;
            for_each_vertex(cls[static_cast<std::size_t>(bi)], [&](int i) {
                double s = 0.0;
                for_each_vertex(cls[static_cast<std::size_t>(bj)], [&](int j) { s += m(i, j); });
                row_sums.push_back(s);
            });
            double total = 0.0;
            for (double s : row_sums) total += s;
            const double avg = total / static_cast<double>(row_sums.size());
            for (double s : row_sums) {
                if (std::abs(s - avg) > kEquitableTolerance) q.equitable = false;
            }
            q.b[static_cast<std::size_t>(bi * l + bj)] = avg;
        }
    }
    return q;
}

double QuotientRadii::gap() const { return std::abs(full - quotient); }

QuotientRadii quotient_radii(const SymMatrix& m, const Partition& p, double eig_tol) {
    const QuotientMatrix q = quotient(m, p);
    if (!q.equitable) throw std::invalid_argument("partition is not equitable for this matrix");
    return {spectral_radius(m, eig_tol), dominant_eigenpair(q.classes, q.b, eig_tol).value};
}

bool check_quotient_radius(const SymMatrix& m, const Partition& p, double tol) {
    return quotient_radii(m, p).gap() <= tol;
}

}  // namespace leafspan
