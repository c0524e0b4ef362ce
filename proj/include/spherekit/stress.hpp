#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "spherekit/complex.hpp"
#include "spherekit/exact_linalg.hpp"

namespace spherekit {

/// A monomial as the ascending multiset of its variable (vertex) indices;
/// x_0^2 x_3 is {0, 0, 3}. Ordering is lexicographic on that sequence, which
/// puts x_0^k first.
using Monomial = std::vector<std::uint8_t>;

Face monomial_support(const Monomial& m);
int exponent(const Monomial& m, int v);

/// Vertex coordinates p(v) ∈ Q^dim. Row j of the coordinate matrix gives the
/// linear form θ_j = Σ_v p(v)_j x_v.
struct Embedding {
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<RationalVector> coords;  // coords[v] has `dim` entries
    std::uint64_t seed = 0;

    const RationalVector& at(const std::string& label) const;
    std::optional<std::size_t> find(const std::string& label) const;
    /// Coordinates of the complex's vertices, in its index order.
    Embedding restricted_to(const Complex& complex) const;
    bool operator==(const Embedding&) const = default;
};

/// Seeded embedding with independent uniform integer coordinates in
/// [−2^30, 2^30].
Embedding generic_embedding(const Complex& complex, int dim, std::uint64_t seed);

/// Integer in [−2^30, 2^30] drawn from a 64-bit Mersenne twister; shared by
/// every seeded construction so streams are reproducible across platforms.
class CoordinateStream {
public:
    explicit CoordinateStream(std::uint64_t seed, std::uint64_t domain = 0);
    Integer next();

private:
    std::mt19937_64 engine_;
};

enum class StressKind { Linear, Affine };

/// A homogeneous polynomial over the vertex variables of `labels`.
struct Stress {
    int degree = 0;
    std::vector<std::string> labels;
    std::map<Monomial, Rational> terms;  // nonzero coefficients only

    bool is_zero() const { return terms.empty(); }
    Rational coefficient(const Monomial& m) const;
    bool operator==(const Stress&) const = default;
};

/// Degree-k monomials whose support is a face, in monomial order.
std::vector<Monomial> monomial_basis(const Complex& complex, int k);

enum class StressRoute {
    Automatic,
    /// Kernel of {∂_{θ_j} λ = 0} (and ∂_c λ = 0) over the monomial basis.
    Direct,
    /// Polynomials in the linear forms orthogonal to the θ_j (and c),
    /// constrained to vanish on non-face monomials.
    Apolar,
};

/// Canonical basis of the linear or affine k-stresses on (complex, p): the
/// reduced row echelon form over monomial_basis(complex, k), so the first
/// nonzero coefficient of every element is 1.
std::vector<Stress> stress_basis(const Complex& complex, const Embedding& p, int k, StressKind kind,
                                 StressRoute route = StressRoute::Automatic);

/// Exact check of the stress conditions: face support, ∂_{θ_j} λ = 0, and for
/// affine stresses ∂_c λ = 0.
bool is_stress(const Complex& complex, const Embedding& p, const Stress& lambda, StressKind kind);

struct StressDims {
    int dim_linear = 0;
    int dim_affine = 0;
    std::vector<int> linear_trials;
    std::vector<int> affine_trials;
    bool trials_agree = true;
};

/// Minimum kernel dimensions over `trials` generic embeddings with seeds
/// seed, seed+1, ...
StressDims stress_dims(const Complex& complex, int k, int trials, std::uint64_t seed = 0);

Stress apply_partial(const Stress& lambda, const std::string& vertex);
/// Σ_v ℓ_v ∂_{x_v} λ for a linear form given per label.
Stress apply_linear_form(const Stress& lambda, const std::map<std::string, Rational>& form);
/// ∂_c λ with c the sum of all variables of λ.
Stress apply_dc(const Stress& lambda);

Stress scaled(const Stress& lambda, const Rational& factor);
Stress add(const Stress& a, const Stress& b);
Stress subtract(const Stress& a, const Stress& b);
/// Scales so the first nonzero coefficient in monomial order is 1.
Stress normalized(const Stress& lambda);
/// Re-expresses λ over another label set, which must contain every variable
/// λ uses.
Stress relabel(const Stress& lambda, const std::vector<std::string>& labels);

/// The (k−1)-faces σ with λ_σ ≠ 0, as faces of `complex`.
std::vector<Face> support_faces(const Complex& complex, const Stress& lambda);
/// Subcomplex of `complex` generated by support_faces.
Complex support(const Complex& complex, const Stress& lambda);

/// Coefficients of λ on monomial_basis(complex, λ.degree).
RationalVector coordinates(const Complex& complex, const Stress& lambda);
Stress from_coordinates(const Complex& complex, int k, const RationalVector& coords);

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& labels);
std::string stress_to_json(const Stress& lambda);
Stress stress_from_json(const std::string& text);

}  // namespace spherekit
