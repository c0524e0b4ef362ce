#include <doctest.h>

#include <functional>

#include "oracle.hpp"
#include "spherekit/complex.hpp"
#include "spherekit/cone_lift.hpp"
#include "spherekit/error.hpp"
#include "spherekit/homology.hpp"
#include "spherekit/invariants.hpp"
#include "spherekit/structure.hpp"
#include "suite.hpp"

using namespace spherekit;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::ParseError;
}

oracle::FaceFamily faces_of(const Complex& c) {
    std::vector<oracle::LabelFace> facets;
    for (const Face& f : c.facets()) facets.push_back(c.labels_of(f));
    return oracle::closure(facets);
}

// Every vertex subset whose subsets of size ≤ j+1 are all faces.
oracle::FaceFamily delta_by_brute_force(const Complex& c, int j) {
    const oracle::FaceFamily faces = faces_of(c);
    const auto& labels = c.labels();
    const std::size_t n = labels.size();
    oracle::FaceFamily out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = true;
        for (std::uint64_t sub = mask; ok; sub = (sub - 1) & mask) {
            if (std::popcount(sub) <= j + 1) {
                oracle::LabelFace s;
                for (std::size_t i = 0; i < n; ++i) {
                    if (sub >> i & 1U) s.push_back(labels[i]);
                }
                if (!faces.count(s)) ok = false;
            }
            if (sub == 0) break;
        }
        if (ok) {
            oracle::LabelFace s;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask >> i & 1U) s.push_back(labels[i]);
            }
            out.insert(s);
        }
    }
    return out;
}

Complex join_all(const std::vector<Complex>& factors) {
    Complex acc = factors.at(0);
    for (std::size_t i = 1; i < factors.size(); ++i) acc = join(acc, factors[i]);
    return acc;
}

}  // namespace

TEST_CASE("delta_j examples") {
    for (int d = 2; d <= 5; ++d) CHECK(delta_j(simplex_boundary(d), d - 1) == simplex(d));

    const Complex s = connected_sum_stacked(4, 6);
    const Complex ball = delta_j(s, 1);
    CHECK(ball.facets().size() == 2);
    for (const Face& f : ball.facets()) CHECK(f.size() == 5);
    CHECK(pure_boundary(ball) == s);

    const Complex oct = cross_polytope(3);
    CHECK(delta_j(oct, 1) == oct);
    CHECK(code_of([&] { delta_j(oct, 3); }) == ErrorCode::BadParameters);
}

TEST_CASE("delta_j agrees with brute force") {
    const std::vector<Complex> cs = {cross_polytope(3), cross_polytope(4), connected_sum_stacked(3, 7),
                                     connected_sum_stacked(4, 8), construct_K(2, 6),
                                     join_fresh({simplex_boundary(2), simplex_boundary(3)}), cycle(6)};
    for (const Complex& c : cs) {
        for (int j = 0; j <= c.dim(); ++j) {
            CAPTURE(j);
            CHECK(faces_of(delta_j(c, j)) == delta_by_brute_force(c, j));
        }
    }
}

TEST_CASE("is_stacked examples") {
    const StackedReport a = is_stacked(connected_sum_stacked(4, 8), 2);
    CHECK(a.stacked);
    REQUIRE(a.certificate);
    CHECK(a.certificate->facets().size() == 4);
    CHECK(a.boundary_matches);
    CHECK(a.delta_equality);
    CHECK(a.certificate_acyclic);
    REQUIRE(a.m_criterion);
    CHECK(*a.m_criterion);

    const Complex k = construct_K(2, 6);
    const StackedReport b = is_stacked(k, 3);
    CHECK(!b.stacked);
    CHECK(b.g_k == 1);
    CHECK(!b.certificate);

    const Complex contracted = contract_edge(k, k.require_index("0.0"), k.require_index("0.1"));
    const StackedReport c = is_stacked(contracted, 3);
    CHECK(c.stacked);
    REQUIRE(c.certificate);
    CHECK(pure_boundary(*c.certificate) == contracted);

    CHECK(code_of([&] { is_stacked(k, 4); }) == ErrorCode::HypothesisViolated);
    CHECK(code_of([&] { is_stacked(k, 0); }) == ErrorCode::HypothesisViolated);
    CHECK(code_of([&] { is_stacked(simplex(4), 1); }) == ErrorCode::HypothesisViolated);
}

TEST_CASE("stacked certificates bound the sphere") {
    for (const auto& [name, c] : suite::spheres(false)) {
        const int d = c.dim() + 1;
        for (int k = 1; 2 * k <= d; ++k) {
            CAPTURE(name);
            CAPTURE(k);
            const StackedReport r = is_stacked(c, k);
            CHECK(r.stacked == (compute_vectors(c).g(k) == 0));
            if (r.stacked) {
                REQUIRE(r.certificate);
                CHECK(faces_of(pure_boundary(*r.certificate)) == faces_of(c));
                CHECK(r.delta_equality);
            }
        }
    }
}

TEST_CASE("join_factorization examples") {
    const auto k = join_factorization(construct_K(2, 6));
    REQUIRE(k.size() == 3);
    for (const Complex& f : k) {
        CHECK(f.num_vertices() == 3);
        CHECK(is_simplex_boundary(f));
    }
    const auto two = join_factorization(join_fresh({simplex_boundary(3), simplex_boundary(3)}));
    REQUIRE(two.size() == 2);
    CHECK(is_simplex_boundary(two[0]));
    CHECK(is_simplex_boundary(two[1]));
    CHECK(two[0].num_vertices() == 4);
    for (int d = 2; d <= 6; ++d) CHECK(join_factorization(simplex_boundary(d)).size() == 1);

    const auto coned = join_factorization(cone(cycle(5), "x"));
    REQUIRE(coned.size() == 2);
    int singletons = 0;
    for (const Complex& f : coned) singletons += f.num_vertices() == 1 ? 1 : 0;
    CHECK(singletons == 1);
    CHECK(join_factorization(cross_polytope(4)).size() == 4);
}

TEST_CASE("join_factorization reconstructs the complex") {
    for (const auto& [name, c] : suite::spheres()) {
        CAPTURE(name);
        CHECK(join_all(join_factorization(c)) == c);
    }
    const Complex c = cone(cross_polytope(3), "apex");
    CHECK(join_all(join_factorization(c)) == c);
}

TEST_CASE("classify_g1 examples") {
    const G1Classification a = classify_g1(construct_K(2, 6), 3);
    CHECK(a.kind == G1Kind::ThreeTriangles);
    CHECK(a.factors.size() == 3);
    CHECK(a.reconstruction_verified);

    const Complex bc = join_fresh({simplex_boundary(4), cycle(5)});
    const G1Classification b = classify_g1(bc, 2);
    CHECK(b.kind == G1Kind::SimplexBoundaryJoinSphere);
    CHECK(b.j == 4);
    REQUIRE(b.factors.size() == 2);
    CHECK(is_simplex_boundary(b.factors[0]));
    CHECK(b.factors[0].num_vertices() == 5);
    CHECK(b.factors[1].num_vertices() == 5);
    CHECK(b.factors[1].dim() == 1);

    const Complex bb = join_fresh({simplex_boundary(3), simplex_boundary(3)});
    CHECK(compute_vectors(bb).h_vec == std::vector<Integer>{1, 2, 3, 4, 3, 2, 1});
    const G1Classification c = classify_g1(bb, 3);
    CHECK(c.kind == G1Kind::TwoSimplexBoundaries);
    CHECK(c.j == 3);
    CHECK(c.j2 == 3);

    const G1Classification d = classify_g1(cross_polytope(4), 2);
    CHECK(d.kind == G1Kind::NotG1);
    CHECK(d.g_k == 2);

    const Complex bo = join_fresh({simplex_boundary(4), cross_polytope(3)});
    const G1Classification e = classify_g1(bo, 3);
    CHECK(e.kind == G1Kind::SimplexBoundaryJoinSphere);
    CHECK(e.j == 4);

    const Complex b2b4 = join_fresh({simplex_boundary(2), simplex_boundary(4)});
    const G1Classification f = classify_g1(b2b4, 2);
    CHECK(f.kind == G1Kind::TwoSimplexBoundaries);
    CHECK(f.j == 2);
    CHECK(f.j2 == 4);

    // K(3,7): d = 2k = 8, g_4 = 1, no missing 4-face.
    const Complex k37 = construct_K(3, 8);
    CHECK(compute_vectors(k37).g(4) == 1);
    CHECK(classify_g1(k37, 4).kind == G1Kind::OutOfTheoremScope);

    CHECK(code_of([&] { classify_g1(simplex_boundary(4), 2); }) == ErrorCode::HypothesisViolated);
    CHECK(code_of([&] { classify_g1(construct_K(2, 6), 4); }) == ErrorCode::HypothesisViolated);
}

TEST_CASE("classifications rebuild the input") {
    for (const auto& [name, c] : suite::spheres()) {
        const int d = c.dim() + 1;
        for (int k = 1; 2 * k <= d; ++k) {
            if (s_class(c) > d - k) continue;
            CAPTURE(name);
            CAPTURE(k);
            const G1Classification r = classify_g1(c, k);
            if (r.kind == G1Kind::NotG1 || r.kind == G1Kind::OutOfTheoremScope) continue;
            CHECK(r.reconstruction_verified);
            CHECK(faces_of(join_all(r.factors)) == faces_of(c));
        }
    }
}

TEST_CASE("g_K closed form") {
    CHECK(g_K_closed_form(2, 6, 3) == 1);
    CHECK(g_K_closed_form(3, 8, 1) == 2);
    CHECK(g_K_closed_form(3, 8, 4) == 1);
    int checked = 0;
    for (int i = 1; i <= 4; ++i) {
        for (int d = 2 * i + 1; d <= std::min(3 * i, 9); ++d) {
            const InvariantVectors v = compute_vectors(construct_K(i, d));
            for (int j = 0; 2 * j <= d; ++j) {
                CAPTURE(i);
                CAPTURE(d);
                CAPTURE(j);
                CHECK(g_K_closed_form(i, d, j) == v.g(j));
                ++checked;
            }
        }
    }
    CHECK(checked > 20);
    CHECK(code_of([&] { g_K_closed_form(2, 4, 1); }) == ErrorCode::HypothesisViolated);
    CHECK(code_of([&] { g_K_closed_form(2, 7, 1); }) == ErrorCode::HypothesisViolated);
}

TEST_CASE("edge contraction lowers g_3 by g_2 of the edge link") {
    std::vector<Complex> cases = {construct_K(2, 6)};
    for (int m = 4; m <= 6; ++m) cases.push_back(join_fresh({simplex_boundary(4), cycle(m)}));
    int contracted = 0;
    for (const Complex& c : cases) {
        const Integer g3 = compute_vectors(c).g(3);
        for (const Face& e : c.faces_of_dim(1)) {
            const int u = e.first();
            const int v = e.last();
            if (!is_contractible(c, u, v)) continue;
            const Complex after = contract_edge(c, u, v);
            CHECK(is_homology_sphere(after));
            CHECK(compute_vectors(after).g(3) == g3 - compute_vectors(link(c, e)).g(2));
            ++contracted;
        }
    }
    CHECK(contracted > 0);
}
