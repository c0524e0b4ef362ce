// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "spherekit/complex.hpp"
#include "spherekit/cone_lift.hpp"
#include "spherekit/error.hpp"
#include "spherekit/homology.hpp"
#include "spherekit/invariants.hpp"
#include "spherekit/stress.hpp"
#include "spherekit/structure.hpp"
#include "suite.hpp"

using namespace spherekit;

namespace {

struct Failure {
    std::string what;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

bool in_complex(const Complex& c, const std::vector<std::string>& labels) {
    for (const auto& l : labels) {
        if (!c.index_of(l)) return false;
    }
    return c.contains(c.face_of(labels));
}

std::set<std::vector<std::string>> label_faces(const Complex& c, const std::vector<Face>& faces) {
    std::set<std::vector<std::string>> out;
    for (const Face& f : faces) out.insert(c.labels_of(f));
    return out;
}

// 1. h(∂σ^j) is all ones, and h is symmetric across the suite.
void vector_identities() {
    for (int j = 1; j <= 8; ++j) {
        const InvariantVectors v = compute_vectors(simplex_boundary(j));
        for (const Integer& h : v.h_vec) expect(h == 1, "h of boundary simplex " + std::to_string(j));
    }
    std::vector<suite::Named> spheres = suite::spheres();
    spheres.emplace_back("bd2*bd3", join_fresh({simplex_boundary(2), simplex_boundary(3)}));
    spheres.emplace_back("bd4*bd5", join_fresh({simplex_boundary(4), simplex_boundary(5)}));
    for (const auto& [name, c] : spheres) {
        const InvariantVectors v = compute_vectors(c);
        for (int i = 0; i <= v.d; ++i) expect(v.h(i) == v.h(v.d - i), "Dehn-Sommerville on " + name);
    }
}

// 2. McMullen residual vanishes.
void mcmullen() {
    for (const auto& [name, c] : suite::spheres()) {
        const int d = c.dim() + 1;
        for (int k = 0; k <= (d - 1) / 2; ++k) {
            expect(mcmullen_residual(c, k) == 0, "residual on " + name + " k=" + std::to_string(k));
        }
    }
}

// 3. Stress dimensions equal (h_k, g_k).
void stress_dimensions() {
    for (const auto& [name, c] : suite::spheres()) {
        const InvariantVectors v = compute_vectors(c);
        for (int k = 1; k <= (v.d + 1) / 2; ++k) {
            const StressDims s = stress_dims(c, k, 3);
            const std::string tag = name + " k=" + std::to_string(k);
            expect(s.dim_linear == v.h(k).get_si(), "linear dim on " + tag);
            expect(s.dim_affine == v.g(k).get_si(), "affine dim on " + tag);
        }
    }
    expect(stress_dims(cross_polytope(4), 2, 3).dim_affine == 2, "g_2 of the 4-cross-polytope boundary");
    expect(stress_dims(construct_K(2, 6), 3, 3).dim_affine == 1, "g_3 of K(2,5)");
}

// 4. The unique affine 3-stress on K(2,5).
void unique_stress() {
    const Complex k = construct_K(2, 6);
    const Embedding p = generic_embedding(k, 6, 0);
    const auto basis = stress_basis(k, p, 3, StressKind::Affine);
    expect(basis.size() == 1, "affine 3-stress space has dimension 1");
    const Stress& w = basis[0];
    const Complex supp = support(k, w);
    expect(supp.num_vertices() == k.num_vertices(), "support contains every vertex");
    for (const Face& t : k.missing_faces().at(2)) {
        const auto labels = k.labels_of(t);
        int edges_in_support = 0;
        for (std::size_t a = 0; a < labels.size(); ++a) {
            for (std::size_t b = a + 1; b < labels.size(); ++b) {
                if (in_complex(supp, {labels[a], labels[b]})) ++edges_in_support;
            }
        }
        expect(edges_in_support >= 2, "missing triangle with fewer than two support edges");
    }
    int edges = 0;
    for (const Face& e : k.faces_of_dim(1)) {
        const Complex sa = star(k, Face::singleton(e.first()));
        const Complex sb = star(k, Face::singleton(e.last()));
        for (const Face& f : support_faces(k, w)) {
            const auto labels = k.labels_of(f);
            expect(in_complex(sa, labels) || in_complex(sb, labels), "support outside st(a) u st(b)");
        }
        ++edges;
    }
    expect(edges == 36, "edge count of K(2,5)");
}

// 5. Support law and commuting square for lifts.
void cone_lemma() {
    struct Base {
        Complex complex;
        int dim;
    };
    const Complex k = construct_K(2, 6);
    std::vector<Base> bases = {{cycle(4), 2}};
    for (int v : {0, 4, 8}) bases.push_back({link(k, Face::singleton(v)), 5});
    bases.push_back({link(k, k.face_of(std::vector<std::string>{"0.0", "0.1"})), 4});
    int lifted = 0;
    for (const auto& [base, dim] : bases) {
        const Embedding p = generic_embedding(base, dim, 11);
        const AValues a = random_a_values(base.labels(), 12);
        const Complex coned = cone(base, "apex");
        const Embedding e = cone_embedding(p, a, "apex");
        for (int i = 1; i <= std::min(dim, 3); ++i) {
            for (const Stress& w : stress_basis(base, p, i, StressKind::Linear)) {
                const Stress psi = lift(base, p, w, a, "apex");
                expect(is_stress(coned, e, psi, StressKind::Linear), "lift is not a stress on the cone");
                const Complex s = support(base, w);
                std::set<std::vector<std::string>> expected = label_faces(s, s.faces_of_dim(i - 1));
                for (const Face& f : s.faces_of_dim(i - 2)) {
                    auto l = s.labels_of(f);
                    l.push_back("apex");
                    std::sort(l.begin(), l.end());
                    expected.insert(l);
                }
                expect(label_faces(coned, support_faces(coned, psi)) == expected, "support law");
                const Stress down = apply_dc(psi);
                expect(down == relabel(lift(base, p, apply_dc(w), a, "apex"), down.labels), "commuting square");
                ++lifted;
            }
        }
    }
    expect(lifted > 0, "nothing lifted");
}

void check_edge_stress(const Complex& c, const Face& e, int k, bool unique) {
    const std::string u = c.label(e.first());
    const std::string v = c.label(e.last());
    const EdgeStressResult r = edge_stress(c, u, v, 0);
    const std::string tag = " on edge " + u + " " + v;
    expect(r.omega_bar.degree == k, "degree" + tag);
    expect(!r.omega_bar.is_zero(), "zero output" + tag);
    expect(is_stress(c, r.q, r.omega_bar, StressKind::Affine), "not affine" + tag);
    const Complex su = star(c, Face::singleton(e.first()));
    const Complex sv = star(c, Face::singleton(e.last()));
    bool escaping_in_support = false;
    for (const Face& f : support_faces(c, r.omega_bar)) {
        const auto labels = c.labels_of(f);
        expect(in_complex(su, labels) || in_complex(sv, labels), "support outside two stars" + tag);
        if (f == r.escaping) escaping_in_support = true;
    }
    expect(escaping_in_support, "escaping face not in support" + tag);
    expect(r.escaping.contains(e.first()) && !in_complex(sv, c.labels_of(r.escaping)), "escaping face" + tag);
    if (unique) {
        const auto basis = stress_basis(c, r.q, k, StressKind::Affine);
        expect(basis.size() == 1 && normalized(r.omega_bar) == basis[0], "not the unique stress" + tag);
    }
}

// 6. edge_stress postconditions.
void edge_stresses() {
    const Complex x = cross_polytope(4);
    for (const Face& e : x.faces_of_dim(1)) check_edge_stress(x, e, 2, false);
    const Complex k = construct_K(2, 6);
    for (const Face& e : k.faces_of_dim(1)) check_edge_stress(k, e, 3, true);
}

// 7. Stackedness and the g/m inequalities.
void stackedness() {
    const std::vector<std::pair<int, int>> stacked = {{3, 7}, {4, 6}, {4, 8}, {5, 9}, {6, 11}};
    for (const auto& [d, n] : stacked) {
        const Complex c = connected_sum_stacked(d, n);
        const std::string tag = "stacked(" + std::to_string(d) + "," + std::to_string(n) + ")";
        expect(compute_vectors(c).g(2) == 0, "g_2 of " + tag);
        if (d < 4) continue;
        const StackedReport r = is_stacked(c, 2);
        expect(r.stacked && r.certificate && r.boundary_matches, "certificate of " + tag);
        expect(pure_boundary(*r.certificate) == c, "boundary of the certificate of " + tag);
    }
    const Complex k = construct_K(2, 6);
    const Complex kc = contract_edge(k, k.require_index("0.0"), k.require_index("0.1"));
    expect(compute_vectors(kc).g(3) == 0, "g_3 after contraction");
    const StackedReport r = is_stacked(kc, 3);
    expect(r.stacked && r.certificate && r.boundary_matches && r.delta_equality, "2-stacked certificate");
    for (const auto& [name, c] : suite::spheres()) {
        for (const ReportClause& clause : glbt_report(c)) {
            expect(clause.passed, clause.name + " on " + name + ": " + clause.witness);
        }
    }
}

// 8. Normal forms of spheres with g_k = 1.
void classification() {
    const G1Classification a = classify_g1(construct_K(2, 6), 3);
    expect(a.kind == G1Kind::ThreeTriangles && a.reconstruction_verified, "K(2,5)");
    const G1Classification b = classify_g1(join_fresh({simplex_boundary(4), cycle(5)}), 2);
    expect(b.kind == G1Kind::SimplexBoundaryJoinSphere && b.j == 4 && b.reconstruction_verified, "(k,d) = (2,6)");
    const G1Classification c = classify_g1(join_fresh({simplex_boundary(4), cross_polytope(3)}), 3);
    expect(c.kind == G1Kind::SimplexBoundaryJoinSphere && c.j == 4 && c.reconstruction_verified, "(k,d) = (3,7)");
    const G1Classification t = classify_g1(join_fresh({simplex_boundary(3), simplex_boundary(3)}), 3);
    expect(t.kind == G1Kind::TwoSimplexBoundaries && t.j == 3 && t.j2 == 3 && t.reconstruction_verified,
           "two tetrahedron boundaries");
}

// 9. Closed form for g of K(i, d-1).
void closed_form() {
    for (int i = 1; i <= 4; ++i) {
        for (int d = 2 * i + 1; d <= std::min(3 * i, 9); ++d) {
            const InvariantVectors v = compute_vectors(construct_K(i, d));
            for (int j = 0; 2 * j <= d; ++j) {
                expect(g_K_closed_form(i, d, j) == v.g(j), "i=" + std::to_string(i) + " d=" + std::to_string(d) +
                                                               " j=" + std::to_string(j));
            }
        }
    }
}

// 10. n = 11 vertices, complete graph, d = 6, g_3 = 1.
void arithmetic_lock() {
    const long n = 11;
    const Integer f1 = binomial(n, 2);
    const Integer f2 = 5 * binomial(n, 2) - 15 * n + 36;
    const Integer m2 = binomial(n, 3) - f2;
    expect(f1 == 55 && f2 == 146 && m2 == 19, "closed-form values");
    // Same numbers from the h-vector: h_1 = n - d, h_2 from f_1, h_3 = h_2 + g_3, then symmetry.
    const int d = 6;
    const Integer h1 = n - d;
    const Integer h2 = f1 - (d - 1) * n + binomial(d, 2);
    const Integer h3 = h2 + 1;
    const std::vector<Integer> h = {1, h1, h2, h3, h2, h1, 1};
    const std::vector<Integer> f = f_from_h(h, d);
    expect(f.at(1) == n && f.at(2) == f1 && f.at(3) == f2, "h-vector route");
    expect(oracle::binom(n, 3) - f.at(3).get_si() == 19, "m_2 from the h-vector route");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
        {"vector identities", vector_identities},
        {"McMullen residual", mcmullen},
        {"stress dimension theorem", stress_dimensions},
        {"unique affine 3-stress on K(2,5)", unique_stress},
        {"cone lemma", cone_lemma},
        {"edge_stress postconditions", edge_stresses},
        {"stackedness", stackedness},
        {"g_k = 1 classification", classification},
        {"closed form for g of K(i,d)", closed_form},
        {"arithmetic lock n = 11", arithmetic_lock},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        try {
            criteria[i].second();
        } catch (const Failure& f) {
            detail = f.what;
        } catch (const std::exception& e) {
            detail = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.1fs", secs);
        std::cout << (detail.empty() ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << " ("
                  << timing << ")";
        if (!detail.empty()) {
            std::cout << ": " << detail;
            ++failed;
        }
        std::cout << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
