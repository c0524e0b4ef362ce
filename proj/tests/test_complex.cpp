#include <doctest.h>

#include <random>
#include <thread>

#include "oracle.hpp"
#include "spherekit/complex.hpp"
#include "spherekit/complex_io.hpp"
#include "spherekit/error.hpp"
#include "spherekit/homology.hpp"
#include "spherekit/invariants.hpp"
#include "suite.hpp"

using namespace spherekit;

namespace {

std::vector<oracle::LabelFace> label_facets(const Complex& c) {
    std::vector<oracle::LabelFace> out;
    for (const Face& f : c.facets()) out.push_back(c.labels_of(f));
    return out;
}

oracle::FaceFamily all_faces(const Complex& c) {
    oracle::FaceFamily out;
    for (int i = -1; i <= c.dim(); ++i) {
        for (const Face& f : c.faces_of_dim(i)) out.insert(c.labels_of(f));
    }
    return out;
}

std::vector<oracle::LabelFace> library_missing(const Complex& c) {
    std::vector<oracle::LabelFace> out;
    for (const auto& level : c.missing_faces()) {
        for (const Face& f : level) out.push_back(c.labels_of(f));
    }
    std::sort(out.begin(), out.end());
    return out;
}

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::ParseError;
}

Complex octahedron() {
    return Complex::from_facets({"+1", "-1", "+2", "-2", "+3", "-3"},
                                {{"+1", "+2", "+3"}, {"+1", "+2", "-3"}, {"+1", "-2", "+3"}, {"+1", "-2", "-3"},
                                 {"-1", "+2", "+3"}, {"-1", "+2", "-3"}, {"-1", "-2", "+3"}, {"-1", "-2", "-3"}});
}

}  // namespace

TEST_CASE("from_facets builds closures") {
    const Complex tri = Complex::from_facets({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
    CHECK(tri.dim() == 1);
    CHECK(tri.num_faces(1) == 3);
    CHECK(tri.is_pure());

    const Complex point = Complex::from_facets({"a"}, {{"a"}});
    CHECK(point.dim() == 0);
    CHECK(point.num_faces(0) == 1);

    const Complex oct = octahedron();
    CHECK(oct.dim() == 2);
    CHECK(oct.num_vertices() == 6);
    CHECK(oct.num_faces(1) == 12);
    CHECK(all_faces(oct) == oracle::closure(label_facets(oct)));

    const Complex empty;
    CHECK(empty.dim() == -1);
    CHECK(empty.num_faces(-1) == 1);
}

TEST_CASE("from_facets rejects bad input") {
    CHECK(code_of([] { Complex::from_facets({"a", "a"}, {{"a"}}); }) == ErrorCode::DuplicateLabel);
    CHECK(code_of([] { Complex::from_facets({"a", "b"}, {{"a", "b"}, {"a"}}); }) == ErrorCode::NonMaximalFacet);
    CHECK(code_of([] { Complex::from_facets({"a"}, {{"z"}}); }) == ErrorCode::UnknownLabel);
    std::vector<std::string> many;
    for (int i = 0; i < 129; ++i) many.push_back("v" + std::to_string(i));
    CHECK(code_of([&] { Complex::from_facets(many, {}); }) == ErrorCode::TooManyVertices);
}

TEST_CASE("face counts agree with brute-force closure on the suite") {
    for (const auto& [name, c] : suite::spheres(false)) {
        CAPTURE(name);
        CHECK(all_faces(c) == oracle::closure(label_facets(c)));
    }
}

TEST_CASE("missing faces") {
    for (int d = 1; d <= 6; ++d) {
        const Complex b = simplex_boundary(d);
        const auto m = library_missing(b);
        REQUIRE(m.size() == 1);
        CHECK(static_cast<int>(m[0].size()) == d + 1);
    }
    const Complex oct = octahedron();
    const auto om = library_missing(oct);
    CHECK(om == std::vector<oracle::LabelFace>{{"+1", "-1"}, {"+2", "-2"}, {"+3", "-3"}});

    const Complex k25 = construct_K(2, 6);
    const auto km = library_missing(k25);
    REQUIRE(km.size() == 3);
    for (const auto& f : km) CHECK(f.size() == 3);

    for (const auto& [name, c] : suite::spheres(false)) {
        if (c.num_vertices() > 12) continue;
        CAPTURE(name);
        CHECK(library_missing(c) ==
              oracle::missing_faces(c.labels(), oracle::closure(label_facets(c)), static_cast<std::size_t>(c.dim() + 2)));
    }
}

TEST_CASE("missing faces determine the complex") {
    for (const auto& [name, c] : suite::spheres(false)) {
        CAPTURE(name);
        std::vector<Face> missing;
        for (const auto& level : c.missing_faces()) missing.insert(missing.end(), level.begin(), level.end());
        CHECK(Complex::from_missing_faces(c.labels(), missing) == c);
    }
}

TEST_CASE("missing faces of a join are the union of the factors'") {
    const Complex a = with_prefix(cycle(5), "a");
    const Complex b = with_prefix(simplex_boundary(3), "b");
    const Complex j = join(a, b);
    auto expected = library_missing(a);
    const auto mb = library_missing(b);
    expected.insert(expected.end(), mb.begin(), mb.end());
    std::sort(expected.begin(), expected.end());
    CHECK(library_missing(j) == expected);
}

TEST_CASE("link, star, antistar") {
    const Complex oct = octahedron();
    const Complex lk = link(oct, Face::singleton(oct.require_index("+1")));
    CHECK(lk.num_vertices() == 4);
    CHECK(lk.num_faces(1) == 4);
    CHECK(has_sphere_homology(lk, 1));

    CHECK(link(oct, Face{}) == oct);

    const Complex k25 = construct_K(2, 6);
    const Complex st = star(k25, Face::singleton(k25.require_index("0.0")));
    CHECK(st.num_vertices() == 9);
    CHECK(st.facets().size() == 2 * 3 * 3);

    const Complex anti = antistar(oct, Face::singleton(0));
    CHECK(anti.num_vertices() == 5);
    CHECK(anti.facets().size() == 4);

    CHECK(code_of([&] { link(oct, Face{oct.require_index("+1"), oct.require_index("-1")}); }) == ErrorCode::NotAFace);
    CHECK(code_of([&] { antistar(oct, Face{0, 2}); }) == ErrorCode::BadParameters);
}

TEST_CASE("star is the join of the face with its link") {
    for (const auto& [name, c] : suite::spheres(false)) {
        if (c.num_vertices() > 10) continue;
        CAPTURE(name);
        for (int i = 0; i <= std::min(c.dim(), 1); ++i) {
            for (const Face& f : c.faces_of_dim(i)) {
                const Complex tau = Complex::from_index_facets(c.labels_of(f), {Face::range(f.size())});
                CHECK(star(c, f) == join(tau, link(c, f)));
            }
        }
    }
}

TEST_CASE("join") {
    const Complex k = join_fresh({cycle(3), cycle(3), cycle(3)});
    CHECK(k.num_vertices() == 9);
    CHECK(k.facets().size() == 27);
    CHECK(k.dim() == 5);
    CHECK(k == construct_K(2, 6));

    const Complex c = join(cycle(4, "c"), Complex::from_facets({"apex"}, {{"apex"}}));
    CHECK(c.dim() == 2);
    CHECK(c.facets().size() == 4);

    const Complex sq = join_fresh({simplex_boundary(1), simplex_boundary(1)});
    CHECK(sq.num_vertices() == 4);
    CHECK(sq.num_faces(1) == 4);
    CHECK(has_sphere_homology(sq, 1));

    CHECK(code_of([] { join(cycle(3), cycle(4)); }) == ErrorCode::LabelCollision);
}

TEST_CASE("skeleton") {
    const Complex s = skeleton(simplex_boundary(3), 1);
    CHECK(s.num_faces(1) == 6);
    CHECK(s.dim() == 1);
    CHECK(skeleton(octahedron(), 0).num_faces(0) == 6);
    CHECK(skeleton(octahedron(), 0).dim() == 0);
    const Complex k2 = skeleton(construct_K(2, 6), 2);
    CHECK(k2.num_faces(0) == 9);
    CHECK(k2.num_faces(1) == 36);
    CHECK(k2.num_faces(2) == 81);
    CHECK(skeleton(octahedron(), 2) == octahedron());
}

TEST_CASE("construct_K") {
    const Complex cross = construct_K(1, 4);
    CHECK(cross.num_vertices() == 8);
    CHECK(cross.facets().size() == 16);
    CHECK(s_class(cross) == 1);

    const Complex k37 = construct_K(3, 7);
    CHECK(k37.num_vertices() == 4 + 4 + 2);
    CHECK(k37.dim() == 6);
    CHECK(s_class(k37) == 3);
    CHECK(is_homology_sphere(k37));

    CHECK(code_of([] { construct_K(0, 4); }) == ErrorCode::BadParameters);
}

TEST_CASE("connected_sum_stacked") {
    const Complex s45 = connected_sum_stacked(4, 5);
    CHECK(s45.facets().size() == 5);
    CHECK(s45.num_vertices() == 5);
    CHECK(s45.dim() == 3);
    const Complex s46 = connected_sum_stacked(4, 6);
    CHECK(s46.num_vertices() == 6);
    CHECK(compute_vectors(s46).g(2) == 0);
    const auto f37 = oracle::f_vector(oracle::closure(label_facets(connected_sum_stacked(3, 7))));
    CHECK(f37 == std::vector<long long>{1, 7, 15, 10});
    CHECK(code_of([] { connected_sum_stacked(4, 4); }) == ErrorCode::BadParameters);
}

TEST_CASE("contract_edge") {
    const Complex oct = octahedron();
    const Complex c = contract_edge(oct, oct.require_index("+1"), oct.require_index("+2"));
    CHECK(oracle::f_vector(all_faces(c)) == std::vector<long long>{1, 5, 9, 6});
    CHECK(is_homology_sphere(c));
    CHECK(c.index_of("+1'"));

    const Complex k25 = construct_K(2, 6);
    const Complex k = contract_edge(k25, k25.require_index("0.0"), k25.require_index("0.1"));
    CHECK(k.num_vertices() == 8);
    CHECK(compute_vectors(k).g(3) == 0);
    CHECK(is_homology_sphere(k));

    const Complex b = simplex_boundary(4);
    CHECK(code_of([&] { contract_edge(b, 0, 1); }) == ErrorCode::NotContractible);
    CHECK(code_of([&] { contract_edge(oct, oct.require_index("+1"), oct.require_index("-1")); }) == ErrorCode::NotAnEdge);
}

TEST_CASE("contraction preserves sphere homology on contractible edges") {
    for (const auto& [name, c] : suite::spheres(false)) {
        if (c.num_vertices() > 10) continue;
        CAPTURE(name);
        for (const Face& e : c.faces_of_dim(1)) {
            const auto v = e.elements();
            if (!is_contractible(c, v[0], v[1])) continue;
            const Complex k = contract_edge(c, v[0], v[1]);
            CHECK(k.num_vertices() == c.num_vertices() - 1);
            CHECK(betti_z2(k) == betti_z2(c));
            break;
        }
    }
}

TEST_CASE("JSON and text round trips are byte exact") {
    for (const auto& [name, c] : suite::spheres(false)) {
        CAPTURE(name);
        const std::string j = to_json(c);
        CHECK(parse_complex(j) == c);
        CHECK(to_json(parse_complex(j)) == j);
        const std::string t = to_text(c);
        CHECK(parse_complex(t) == c);
        CHECK(to_text(parse_complex(t)) == t);
    }
}

TEST_CASE("text parsing") {
    const Complex c = parse_text_complex("# triangle\na b\nb c  # edge\n\nc a\n");
    CHECK(c.labels() == std::vector<std::string>{"a", "b", "c"});
    CHECK(c.num_faces(1) == 3);
    try {
        parse_text_complex("a b\nb b\n");
        FAIL("expected parse error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK(code_of([] { parse_json_complex("{\"facets\": [[\"a\"], ["); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_json_complex("[1,2]"); }) == ErrorCode::ParseError);
}

TEST_CASE("vertex set order matches lexicographic order of sorted sequences") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> pick(0, 127);
    for (int trial = 0; trial < 2000; ++trial) {
        Face a, b;
        std::vector<int> va, vb;
        const int na = trial % 5, nb = (trial / 5) % 5;
        for (int i = 0; i < na; ++i) a.insert(pick(rng) % (trial % 2 ? 8 : 128));
        for (int i = 0; i < nb; ++i) b.insert(pick(rng) % (trial % 2 ? 8 : 128));
        va = a.elements();
        vb = b.elements();
        CHECK((a < b) == (va < vb));
        CHECK((a == b) == (va == vb));
    }
}

TEST_CASE("lazy face caches are safe under concurrent readers") {
    const Complex k = construct_K(2, 6);
    std::vector<long long> counts(4, 0);
    std::vector<std::thread> threads;
    for (int t = 0; t < 4; ++t) {
        threads.emplace_back([&, t] {
            long long n = 0;
            for (int i = -1; i <= k.dim(); ++i) n += static_cast<long long>(k.faces_of_dim(i).size());
            n += static_cast<long long>(k.missing_faces().size());
            counts[static_cast<std::size_t>(t)] = n;
        });
    }
    for (auto& th : threads) th.join();
    for (long long n : counts) CHECK(n == counts[0]);
}
