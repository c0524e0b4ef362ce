#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "spherekit/complex.hpp"
#include "spherekit/stress.hpp"

namespace spherekit {

using AValues = std::map<std::string, Rational>;

/// The (d−1)-embedding of lk(u) obtained by projecting q from u:
/// p′(s)_j = (a_{s,j}/a_{u,j} − a_{s,d}/a_{u,d}) / (1 − a_{s,d}/a_{u,d}).
/// Throws DegenerateCoordinates on a zero denominator.
Embedding link_embedding(const Embedding& q, const Complex& complex, const std::string& u);

/// Cone over a complex with a new apex vertex.
Complex cone(const Complex& base, const std::string& apex);

/// p(apex) = (0,…,0,−1), p(s) = ((1+a_s)·p′(s), a_s). Throws BadAValue when
/// some a_s = −1 or is missing.
Embedding cone_embedding(const Embedding& p_prime, const AValues& a, const std::string& apex);

/// Seeded a-values for the given labels, drawn from a stream disjoint from
/// generic_embedding's; never −1.
AValues random_a_values(const std::vector<std::string>& labels, std::uint64_t seed);

/// ψ_i(ω′) = Σ_j x_apex^j ω_j with ω_0(x) = ω′(x_s/(1+a_s)) and
/// ω_{j+1} = (1/(j+1)) Σ_s a_s ∂_s ω_j, as a stress over the cone labels.
/// Throws NotAStress unless ω′ is a linear stress on (base, p′).
Stress lift(const Complex& base, const Embedding& p_prime, const Stress& omega, const AValues& a,
            const std::string& apex);

struct EdgeStressResult {
    Stress omega_bar;    // affine k-stress on Δ, over Δ's labels
    Stress omega_prime;  // chosen linear (k−1)-stress on st(v, lk u)
    Stress eta;          // its preimage under ∂_{c′} on lk u
    Face escaping;       // support face containing u outside st(v)
    Embedding q;
};

/// Affine k-stress supported on st(u) ∪ st(v) for a homology (2k−1)-sphere
/// without missing faces of dimension ≥ k and an edge uv.
/// Throws HypothesisViolated, GenericityFailure.
EdgeStressResult edge_stress(const Complex& complex, const std::string& u, const std::string& v,
                             std::uint64_t seed);

}  // namespace spherekit
