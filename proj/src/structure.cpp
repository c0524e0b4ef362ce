#include "spherekit/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "spherekit/error.hpp"
#include "spherekit/homology.hpp"
#include "spherekit/invariants.hpp"

namespace spherekit {
namespace {

// Every j-subset S of tau has S ∪ {w} in the complex (smaller subsets follow
// by closure once |tau| ≥ j).
bool extends(const Complex& complex, const Face& tau, int w, int j) {
    Face with = tau;
    with.insert(w);
    if (tau.size() <= j) return complex.contains(with);
    const std::vector<int> elems = tau.elements();
    std::vector<int> pick(static_cast<std::size_t>(j));
    bool ok = true;
    auto rec = [&](auto&& self, std::size_t from, int depth) -> void {
        if (!ok) return;
        if (depth == j) {
            Face s = Face::singleton(w);
            for (int x : pick) s.insert(x);
            if (!complex.contains(s)) ok = false;
            return;
        }
        for (std::size_t t = from; t + static_cast<std::size_t>(j - depth) <= elems.size(); ++t) {
            pick[static_cast<std::size_t>(depth)] = elems[t];
            self(self, t + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return ok;
}

}  // namespace

Complex delta_j(const Complex& complex, int j) {
    if (j < 0 || j > complex.dim()) throw Error(ErrorCode::BadParameters, "delta_j needs 0 <= j <= dim");
    const int n = complex.num_vertices();
    if (j == 0) return Complex::from_index_facets(complex.labels(), {Face::range(n)});

    std::vector<Face> facets;
    auto grow = [&](auto&& self, const Face& tau) -> void {
        bool maximal = true;
        for (int w = 0; w < n; ++w) {
            if (tau.contains(w) || !extends(complex, tau, w, j)) continue;
            maximal = false;
            if (w > tau.last()) {
                Face next = tau;
                next.insert(w);
                self(self, next);
            }
        }
        if (maximal) facets.push_back(tau);
    };
    for (int v = 0; v < n; ++v) grow(grow, Face::singleton(v));
    return Complex::from_index_facets(complex.labels(), std::move(facets));
}

Complex pure_boundary(const Complex& complex) {
    if (!complex.is_pure()) throw Error(ErrorCode::NotPure, "boundary needs a pure complex");
    std::map<Face, int> count;
    for (const Face& f : complex.facets()) {
        f.for_each([&](int v) {
            Face r = f;
            r.erase(v);
            ++count[r];
        });
    }
    std::vector<Face> ridges;
    for (const auto& [r, c] : count) {
        if (c == 1) ridges.push_back(r);
    }
    return generated(complex, ridges);
}

StackedReport is_stacked(const Complex& complex, int k) {
    const int d = complex.dim() + 1;
    if (k < 1 || 2 * k > d) throw Error(ErrorCode::HypothesisViolated, "stackedness needs 1 <= k <= d/2");
    if (!is_homology_sphere(complex)) throw Error(ErrorCode::HypothesisViolated, "not a homology sphere");
    const InvariantVectors vec = compute_vectors(complex);

    StackedReport out;
    out.k = k;
    out.g_k = vec.g(k);
    out.stacked = out.g_k == 0;
    if (d >= 4 && k - 1 >= 1 && k - 1 <= d / 2 - 1) out.m_criterion = vec.g(k - 1) == vec.m(d - k + 1);
    if (!out.stacked) return out;

    Complex ball = delta_j(complex, k - 1);
    out.boundary_matches = ball.is_pure() && ball.dim() == d && pure_boundary(ball) == complex;
    out.delta_equality = delta_j(complex, d - k) == ball;
    out.certificate_acyclic = is_acyclic_z2(ball);
    out.certificate = std::move(ball);
    if (!out.boundary_matches || !out.delta_equality || !out.certificate_acyclic) {
        throw Error(ErrorCode::TheoremViolation, "g_k = 0 but the stacked triangulation check failed");
    }
    return out;
}

std::vector<Complex> join_factorization(const Complex& complex) {
    const int n = complex.num_vertices();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        }
        return x;
    };
    for (const auto& level : complex.missing_faces()) {
        for (const Face& m : level) {
            const int root = find(m.first());
            m.for_each([&](int v) { parent[static_cast<std::size_t>(find(v))] = root; });
        }
    }
    std::map<int, Face> groups;  // keyed by smallest member
    std::vector<int> first_of(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        const int r = find(v);
        if (first_of[static_cast<std::size_t>(r)] < 0) first_of[static_cast<std::size_t>(r)] = v;
        groups[first_of[static_cast<std::size_t>(r)]].insert(v);
    }
    std::vector<Complex> factors;
    Complex rebuilt;
    for (const auto& [first, verts] : groups) {
        (void)first;
        factors.push_back(induced(complex, verts));
        rebuilt = join(rebuilt, factors.back());
    }
    if (!(rebuilt == complex)) throw Error(ErrorCode::VerificationFailed, "join of the factors differs from the input");
    return factors;
}

bool is_simplex_boundary(const Complex& complex) {
    const int n = complex.num_vertices();
    return n >= 2 && complex.dim() == n - 2 && static_cast<int>(complex.facets().size()) == n && complex.is_pure();
}

std::string_view to_string(G1Kind kind) {
    switch (kind) {
        case G1Kind::SimplexBoundaryJoinSphere: return "SimplexBoundaryJoinSphere";
        case G1Kind::TwoSimplexBoundaries: return "TwoSimplexBoundaries";
        case G1Kind::ThreeTriangles: return "ThreeTriangles";
        case G1Kind::NotG1: return "NotG1";
        case G1Kind::OutOfTheoremScope: return "OutOfTheoremScope";
    }
    return "Unknown";
}

G1Classification classify_g1(const Complex& complex, int k) {
    const int d = complex.dim() + 1;
    if (k < 1 || 2 * k > d) throw Error(ErrorCode::HypothesisViolated, "classification needs 1 <= k <= d/2");
    if (s_class(complex) > d - k) {
        throw Error(ErrorCode::HypothesisViolated, "complex has a missing face of dimension above d-k");
    }
    if (!is_homology_sphere(complex)) throw Error(ErrorCode::HypothesisViolated, "not a homology sphere");

    G1Classification out;
    out.k = k;
    out.g_k = compute_vectors(complex).g(k);
    if (out.g_k != 1) {
        out.kind = G1Kind::NotG1;
        return out;
    }

    const std::vector<Complex> factors = join_factorization(complex);
    auto verify = [&](std::vector<Complex> parts) {
        Complex rebuilt;
        for (const Complex& p : parts) rebuilt = join(rebuilt, p);
        if (!(rebuilt == complex)) throw Error(ErrorCode::VerificationFailed, "normal form does not rebuild the input");
        out.factors = std::move(parts);
        out.reconstruction_verified = true;
        return out;
    };

    const auto& missing = complex.missing_faces();
    const bool has_missing_k_face = static_cast<std::size_t>(k) < missing.size() && !missing[static_cast<std::size_t>(k)].empty();
    if (d == 2 * k && !has_missing_k_face) {
        if (k != 3) {
            out.kind = G1Kind::OutOfTheoremScope;
            return out;
        }
        const bool triangles = factors.size() == 3 && std::all_of(factors.begin(), factors.end(), [](const Complex& f) {
                                   return f.num_vertices() == 3 && is_simplex_boundary(f);
                               });
        if (!triangles) throw Error(ErrorCode::TheoremViolation, "g_3 = 1 in S(2,5) but not a join of three 3-cycles");
        out.kind = G1Kind::ThreeTriangles;
        return verify(factors);
    }

    if (factors.size() == 2 && is_simplex_boundary(factors[0]) && is_simplex_boundary(factors[1])) {
        const int a = factors[0].num_vertices() - 1;
        const int b = factors[1].num_vertices() - 1;
        out.kind = G1Kind::TwoSimplexBoundaries;
        out.j = std::min(a, b);
        out.j2 = std::max(a, b);
        return verify(a <= b ? factors : std::vector<Complex>{factors[1], factors[0]});
    }

    for (std::size_t t = 0; t < factors.size(); ++t) {
        if (!is_simplex_boundary(factors[t]) || factors[t].num_vertices() != d - k + 1) continue;
        Complex gamma;
        for (std::size_t s = 0; s < factors.size(); ++s) {
            if (s != t) gamma = join(gamma, factors[s]);
        }
        if (gamma.dim() != k - 1) continue;
        out.kind = G1Kind::SimplexBoundaryJoinSphere;
        out.j = d - k;
        return verify({factors[t], gamma});
    }
    throw Error(ErrorCode::TheoremViolation, "g_k = 1 but no normal form matches");
}

Integer g_K_closed_form(int i, int d, int j) {
    if (i < 1 || !(2 * i < d && d <= 3 * i)) throw Error(ErrorCode::HypothesisViolated, "closed form needs 2i < d <= 3i");
    if (j < 0 || 2 * j > d) throw Error(ErrorCode::HypothesisViolated, "closed form needs 0 <= j <= d/2");
    const int q = (d - 1) / i;
    const int r = d - q * i;
    if (j <= r) return j + 1;
    if (j <= i) return r + 1;
    return d + 1 - 2 * j;
}

}  // namespace spherekit
