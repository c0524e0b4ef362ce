#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spherekit/complex.hpp"
#include "spherekit/exact_linalg.hpp"

namespace spherekit {

/// All vertex sets whose j-skeleton lies in the complex, i.e. every subset of
/// at most j+1 vertices is a face.
Complex delta_j(const Complex& complex, int j);

/// Subcomplex generated by the codimension-one faces lying in exactly one
/// facet of a pure complex.
Complex pure_boundary(const Complex& complex);

struct StackedReport {
    int k = 0;
    Integer g_k;
    bool stacked = false;  // (k−1)-stacked, decided by g_k = 0
    std::optional<Complex> certificate;  // Δ(k−1) when stacked
    bool boundary_matches = false;       // ∂Δ(k−1) = Δ
    bool delta_equality = false;         // Δ(d−k) = Δ(k−1)
    bool certificate_acyclic = false;
    // g_{k−1} = m_{d−k+1}, meaningful only when 1 ≤ k−1 ≤ ⌊d/2⌋−1.
    std::optional<bool> m_criterion;
};

/// Decides (k−1)-stackedness of a homology sphere for 1 ≤ k ≤ d/2 and builds
/// the Δ(k−1) certificate. Throws HypothesisViolated, VerificationFailed.
StackedReport is_stacked(const Complex& complex, int k);

/// Induced subcomplexes on the connected components of the "shares a missing
/// face" graph, plus one singleton factor per vertex in no missing face, ordered
/// by smallest vertex. Their join is the complex (checked).
std::vector<Complex> join_factorization(const Complex& complex);

/// Vertex count is dim+2 and every dim-face on those vertices is present.
bool is_simplex_boundary(const Complex& complex);

enum class G1Kind { SimplexBoundaryJoinSphere, TwoSimplexBoundaries, ThreeTriangles, NotG1, OutOfTheoremScope };

std::string_view to_string(G1Kind kind);

struct G1Classification {
    G1Kind kind = G1Kind::NotG1;
    int k = 0;
    Integer g_k;
    // SimplexBoundaryJoinSphere: j = d−k. TwoSimplexBoundaries: j ≤ j2.
    int j = 0;
    int j2 = 0;
    std::vector<Complex> factors;  // normal-form factors whose join is Δ
    bool reconstruction_verified = false;
};

/// Normal form of a homology (d−1)-sphere with g_k = 1, d ≥ 2k, and no
/// missing face of dimension above d−k. Throws HypothesisViolated, and
/// TheoremViolation when no normal form matches.
G1Classification classify_g1(const Complex& complex, int k);

/// Piecewise value of g_j(K(i, d−1)) for 2i < d ≤ 3i and 0 ≤ j ≤ d/2.
/// Throws HypothesisViolated.
Integer g_K_closed_form(int i, int d, int j);

}  // namespace spherekit
