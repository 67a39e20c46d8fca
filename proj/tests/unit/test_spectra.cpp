#include <doctest.h>

#include <cmath>

#include "leafspan/corpus.hpp"
#include "leafspan/extremal.hpp"
#include "leafspan/spectra.hpp"
#include "support/oracles.hpp"

using namespace leafspan;

namespace {

double residual(const SymMatrix& m, const Eigenpair& e) {
    const auto mx = m.multiply(e.vector);
    double r = 0.0;
    for (std::size_t i = 0; i < mx.size(); ++i) r = std::max(r, std::abs(mx[i] - e.value * e.vector[i]));
    return r;
}

oracle::Kind oracle_kind(MatrixKind k) {
    switch (k) {
        case MatrixKind::Adjacency: return oracle::Kind::A;
        case MatrixKind::SignlessLaplacian: return oracle::Kind::Q;
        case MatrixKind::Distance: return oracle::Kind::D;
        default: return oracle::Kind::DQ;
    }
}

}  // namespace

TEST_CASE("matrix entries") {
    const auto a = build_matrix(complete(3), MatrixKind::Adjacency);
    const auto q = build_matrix(complete(3), MatrixKind::SignlessLaplacian);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            CHECK(a(i, j) == (i == j ? 0.0 : 1.0));
            CHECK(q(i, j) == (i == j ? 2.0 : 1.0));
        }
    const auto d = build_matrix(path(3), MatrixKind::Distance);
    const double expect[3][3] = {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(d(i, j) == expect[i][j]);
    CHECK_THROWS_AS(build_matrix(edgeless(3), MatrixKind::Distance), std::domain_error);
    CHECK_THROWS(build_matrix(complete(3), MatrixKind::AAlpha, 1.5));
}

TEST_CASE("a-alpha endpoints") {
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        const Graph g = random_graph(rng, 8, 0.5);
        const auto a = build_matrix(g, MatrixKind::Adjacency);
        const auto q = build_matrix(g, MatrixKind::SignlessLaplacian);
        const auto a0 = build_matrix(g, MatrixKind::AAlpha, 0.0);
        const auto ah = build_matrix(g, MatrixKind::AAlpha, 0.5);
        for (int r = 0; r < 8; ++r)
            for (int c = 0; c < 8; ++c) {
                REQUIRE(a0(r, c) == a(r, c));
                REQUIRE(ah(r, c) == doctest::Approx(0.5 * q(r, c)).epsilon(1e-15));
            }
    }
}

TEST_CASE("spectral radius examples") {
    for (int n = 1; n <= 12; ++n) CHECK(spectral_radius(build_matrix(complete(n), MatrixKind::Adjacency)) == doctest::Approx(n - 1).epsilon(1e-12));
    CHECK(spectral_radius(build_matrix(path(3), MatrixKind::Distance)) == doctest::Approx(1.0 + std::sqrt(3.0)).epsilon(1e-12));
    for (int n = 2; n <= 10; ++n)
        CHECK(spectral_radius(build_matrix(complete(n), MatrixKind::DistanceSignlessLaplacian)) == doctest::Approx(2 * n - 2).epsilon(1e-12));
    CHECK(spectral_radius(build_matrix(complete(2), MatrixKind::SignlessLaplacian)) == doctest::Approx(2.0));
    CHECK(spectral_radius(SymMatrix::from_rows({{3.5}})) == 3.5);
    CHECK_THROWS(SymMatrix::from_rows({{0, 1}, {2, 0}}));
}

TEST_CASE("property: spectral radius matches dense solver and meets residual contract") {
    Rng rng(99);
    const MatrixKind kinds[] = {MatrixKind::Adjacency, MatrixKind::SignlessLaplacian, MatrixKind::Distance,
                                MatrixKind::DistanceSignlessLaplacian};
    for (int i = 0; i < 1000; ++i) {
        const int n = 2 + static_cast<int>(uniform_below(rng, 9));
        const Graph g = *random_connected_graph(rng, n, 1);
        for (MatrixKind k : kinds) {
            const auto m = build_matrix(g, k);
            const auto e = perron_pair(m);
            const double ref = oracle::max_eigenvalue(oracle::matrix(g, oracle_kind(k)));
            REQUIRE(std::abs(e.value - ref) <= 1e-10 * std::max(1.0, ref));
            REQUIRE(residual(m, e) <= kEigenTolerance * std::max(1.0, e.value));
        }
        const double alpha = uniform_unit(rng);
        const auto aa = build_matrix(g, MatrixKind::AAlpha, alpha);
        const auto ref = oracle::matrix(g, oracle::Kind::A, alpha);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) REQUIRE(aa(r, c) == doctest::Approx(ref(r, c)).epsilon(1e-15));
        REQUIRE(spectral_radius(aa) == doctest::Approx(oracle::max_eigenvalue(ref)).epsilon(1e-10));
    }
}

TEST_CASE("quotient examples") {
    const auto k4 = quotient(build_matrix(complete(4), MatrixKind::Adjacency), Partition(4, {VertexSet::range(4)}));
    CHECK(k4.classes == 1);
    CHECK(k4(0, 0) == 3.0);
    CHECK(k4.equitable);

    const auto h = build_matrix(build_extremal({5, 1}), MatrixKind::Adjacency);
    const auto b = quotient(h, canonical_partition({5, 1}));
    const double expect[3][3] = {{0, 3, 1}, {1, 2, 0}, {1, 0, 0}};
    CHECK(b.equitable);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(b(i, j) == expect[i][j]);

    const Partition ends_middle(3, {VertexSet{0b101}, VertexSet{0b010}});
    const auto p = quotient(build_matrix(path(3), MatrixKind::Adjacency), ends_middle);
    CHECK(p.equitable);
    CHECK(p(0, 0) == 0.0);
    CHECK(p(0, 1) == 1.0);
    CHECK(p(1, 0) == 2.0);
    CHECK(p(1, 1) == 0.0);

    const Partition uneven(3, {VertexSet{0b011}, VertexSet{0b100}});
    CHECK_FALSE(quotient(build_matrix(path(3), MatrixKind::Adjacency), uneven).equitable);
    CHECK_THROWS(check_quotient_radius(build_matrix(path(3), MatrixKind::Adjacency), uneven, 1e-8));
    CHECK_THROWS(Partition(3, {VertexSet{0b011}, VertexSet{0b110}}));
    CHECK_THROWS(Partition(3, {VertexSet{0b011}}));
}

TEST_CASE("quotient radius examples") {
    CHECK(check_quotient_radius(build_matrix(build_extremal({5, 1}), MatrixKind::Adjacency), canonical_partition({5, 1}), 1e-8));
    for (MatrixKind k : {MatrixKind::Adjacency, MatrixKind::SignlessLaplacian, MatrixKind::Distance,
                         MatrixKind::DistanceSignlessLaplacian})
        CHECK(check_quotient_radius(build_matrix(complete(6), k), Partition(6, {VertexSet::range(6)}), 1e-8));
    CHECK(check_quotient_radius(build_matrix(build_extremal({9, 2}), MatrixKind::DistanceSignlessLaplacian),
                                canonical_partition({9, 2}), 1e-8));
}

TEST_CASE("dominant eigenpair of nonsymmetric quotient matches dense solver") {
    const auto b = quotient(build_matrix(build_extremal({12, 3}), MatrixKind::Distance), canonical_partition({12, 3}));
    Eigen::MatrixXd m(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = b(i, j);
    CHECK(dominant_eigenpair(3, b.b).value == doctest::Approx(oracle::max_real_eigenvalue(m)).epsilon(1e-11));
}

TEST_CASE("dominant eigenpair on reducible and skewed inputs") {
    CHECK(dominant_eigenpair(3, {2, 0, 0, 0, 5, 0, 0, 0, 3}).value == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(dominant_eigenpair(1, {4.0}).value == 4.0);
    CHECK_THROWS(dominant_eigenpair(2, {1, -1, 0, 1}));
    for (int n : {30, 40}) {
        const auto b = quotient(build_matrix(build_extremal({n, 1}), MatrixKind::DistanceSignlessLaplacian),
                                canonical_partition({n, 1}));
        Eigen::MatrixXd m(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m(i, j) = b(i, j);
        CHECK(std::abs(dominant_eigenpair(3, b.b).value - oracle::max_real_eigenvalue(m)) <= 1e-9);
    }
}
