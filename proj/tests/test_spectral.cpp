#include <doctest.h>

#include <cmath>

#include "support/data.hpp"
#include "support/oracles.hpp"
#include "uelc/error.hpp"
#include "uelc/spectral.hpp"

using namespace uelc;

namespace {

double lambda2_of(const Graph& g) {
    const LinkTransition t(g);
    return estimate_lambda2(MarkovGenerator(t)).lambda2;
}

}  // namespace

TEST_CASE("generator annihilates the uniform vector") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = oracle::random_connected(25, 0.1, seed);
        const LinkTransition t(g);
        const MarkovGenerator gen(t);
        std::vector<double> u(gen.dimension(), 1.0 / static_cast<double>(gen.dimension())), out(gen.dimension());
        gen.apply(u, out);
        for (double v : out) CHECK(std::abs(v) <= 1e-12);
    }
}

TEST_CASE("Rayleigh quotients lie in [0, 2]") {
    Rng rng(11);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = oracle::random_connected(20, 0.2, seed);
        const LinkTransition t(g);
        const MarkovGenerator gen(t);
        const std::size_t m = gen.dimension();
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<double> v(m), out(m);
            for (double& x : v) x = rng.uniform01() - 0.5;
            gen.apply(v, out);
            double num = 0, den = 0;
            for (std::size_t i = 0; i < m; ++i) {
                num += v[i] * out[i];
                den += v[i] * v[i];
            }
            CHECK(num / den >= -1e-12);
            CHECK(num / den <= 2.0 + 1e-12);
        }
    }
}

TEST_CASE("lambda2: path of three nodes is one half") {
    CHECK(std::abs(lambda2_of(oracle::path(3)) - 0.5) <= 1e-12);
}

TEST_CASE("lambda2: karate and Les Miserables") {
    const double karate = lambda2_of(testdata::load("karate.edges").graph);
    CHECK(std::abs(1.0 / karate - 15.1203) <= 1e-3);
    const double lesmis = lambda2_of(testdata::load("lesmis.edges").graph);
    CHECK(std::abs(1.0 / lesmis - 22.6927) <= 1e-3);
}

TEST_CASE("lambda2 matches a dense eigensolver") {
    int checked = 0;
    for (std::uint64_t seed = 0; checked < 50; ++seed) {
        const Graph g = oracle::random_connected(8 + seed % 30, 0.12, seed);
        if (g.edge_count() > 150 || g.edge_count() < 2) continue;
        CHECK(std::abs(lambda2_of(g) - oracle::dense_lambda2(g)) <= 1e-6);
        ++checked;
    }
    const Graph karate = testdata::load("karate.edges").graph;
    CHECK(std::abs(lambda2_of(karate) - oracle::dense_lambda2(karate)) <= 1e-6);
}

TEST_CASE("lambda2: degenerate multiplicity and tiny operators") {
    // The star's line graph is complete, so lambda2 is highly degenerate.
    const Graph star(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    CHECK(std::abs(lambda2_of(star) - oracle::dense_lambda2(star)) <= 1e-8);
    const Graph tri(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(std::abs(lambda2_of(tri) - 0.75) <= 1e-12);
}

TEST_CASE("lambda2: errors") {
    const LinkTransition one(Graph(2, {{0, 1}}));
    CHECK_THROWS_AS(estimate_lambda2(MarkovGenerator(one)), InputError);
    const LinkTransition split(Graph(4, {{0, 1}, {2, 3}}));
    CHECK_THROWS_AS(estimate_lambda2(MarkovGenerator(split)), DisconnectedError);
    const LinkTransition karate(testdata::load("karate.edges").graph);
    CHECK_THROWS_AS(estimate_lambda2(MarkovGenerator(karate), 1e-14, 3), ConvergenceError);
}

TEST_CASE("effect of one intra-clique edge agrees with the dense solver") {
    // Whether filling in a clique speeds mixing depends on where the edge
    // sits, so only agreement with the oracle is asserted.
    const Graph full = oracle::two_cliques_bridge(5);
    const double base = lambda2_of(full);
    std::size_t faster = 0;
    for (EdgeId drop = 0; drop < full.edge_count(); ++drop) {
        const Edge& d = full.edge(drop);
        if (d.u < 5 && d.v >= 5) continue;  // the bridge must stay
        std::vector<Edge> edges;
        for (EdgeId e = 0; e < full.edge_count(); ++e)
            if (e != drop) edges.push_back(full.edge(e));
        const Graph sparse(10, edges);
        const double fast = lambda2_of(sparse);
        CHECK(std::abs(fast - oracle::dense_lambda2(sparse)) <= 1e-8);
        const bool oracle_faster = oracle::dense_lambda2(full) > oracle::dense_lambda2(sparse);
        CHECK((base > fast) == oracle_faster);
        faster += oracle_faster;
    }
    MESSAGE("edges whose addition speeds mixing: " << faster);
}

TEST_CASE("step_bound") {
    SUBCASE("fixed mode returns the cap") {
        StepPolicy p;
        auto b = step_bound(p, nullptr);
        CHECK(b.steps == 100);
        CHECK_FALSE(b.fell_back);
        CHECK_FALSE(b.estimate.has_value());
    }
    SUBCASE("spectral mode on karate") {
        const LinkTransition t(testdata::load("karate.edges").graph);
        const MarkovGenerator gen(t);
        auto b = step_bound({StepMode::spectral, 100}, &gen);
        CHECK(b.steps == 16);
        REQUIRE(b.estimate.has_value());
        CHECK_FALSE(b.fell_back);
        auto capped = step_bound({StepMode::spectral, 10}, &gen);
        CHECK(capped.steps == 10);
    }
    SUBCASE("spectral mode on the path") {
        const LinkTransition t(oracle::path(3));
        const MarkovGenerator gen(t);
        CHECK(step_bound({StepMode::spectral, 100}, &gen).steps == 2);
    }
    SUBCASE("solver failure falls back to the cap") {
        const LinkTransition t(Graph(4, {{0, 1}, {2, 3}}));
        const MarkovGenerator gen(t);
        auto b = step_bound({StepMode::spectral, 100}, &gen);
        CHECK(b.fell_back);
        CHECK(b.steps == 100);
    }
    SUBCASE("spectral mode needs a generator") {
        CHECK_THROWS_AS(step_bound({StepMode::spectral, 100}, nullptr), InputError);
    }
    SUBCASE("ceil of the inverse") {
        CHECK(steps_for_lambda2(0.5) == 2);
        CHECK(steps_for_lambda2(1.0 / 15.1203) == 16);
        CHECK(steps_for_lambda2(0.3) == 4);
        CHECK(steps_for_lambda2(1.5) == 1);
        CHECK(steps_for_lambda2(1.0 / (3.0 + 1e-13)) == 3);
    }
}
