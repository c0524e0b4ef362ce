#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "spherekit/vertex_set.hpp"

namespace spherekit {

using Face = VertexSet;
using FaceSet = std::unordered_set<Face, VertexSetHash>;

/// A finite simplicial complex over labelled vertices.
///
/// Vertices are indexed 0..n-1 in ascending label order, so two complexes with
/// the same labels and the same face family compare equal and serialize
/// identically. Faces of every dimension are materialized on first use and
/// shared between copies; a Complex is immutable once built.
class Complex {
public:
    /// The complex {∅} with no vertices.
    Complex();

    /// Closure of `facets`. Labels must be distinct; no facet may contain
    /// another. Labels that appear in no facet become isolated vertices.
    static Complex from_facets(std::vector<std::string> labels,
                               const std::vector<std::vector<std::string>>& facets);

    /// Same, with facets given as index sets into `labels` (which need not be
    /// sorted; indices are remapped).
    static Complex from_index_facets(std::vector<std::string> labels, std::vector<Face> facets);

    /// Maximal complex on `labels` containing none of `missing` (each given as
    /// an index set into `labels`).
    static Complex from_missing_faces(std::vector<std::string> labels, const std::vector<Face>& missing);

    int num_vertices() const { return static_cast<int>(labels_.size()); }
    int dim() const { return dim_; }
    bool is_pure() const;

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
    std::optional<int> index_of(const std::string& label) const;
    int require_index(const std::string& label) const;
    Face face_of(std::span<const std::string> labels) const;
    std::vector<std::string> labels_of(const Face& face) const;
    Face vertex_set() const { return Face::range(num_vertices()); }

    /// Facets in ascending lexicographic order.
    const std::vector<Face>& facets() const { return facets_; }

    /// All faces of the given dimension (−1 ≤ dim ≤ dim()), sorted.
    const std::vector<Face>& faces_of_dim(int dim) const;
    bool contains(const Face& face) const;
    long long num_faces(int dim) const;

    /// Missing faces grouped by dimension; index i holds the missing faces of
    /// dimension i (index 0 is always empty).
    const std::vector<std::vector<Face>>& missing_faces() const;

    bool operator==(const Complex& other) const;

private:
    struct FaceCache;

    Complex(std::vector<std::string> labels, std::vector<Face> facets, bool already_canonical);
    void ensure_faces() const;

    std::vector<std::string> labels_;
    std::vector<Face> facets_;
    int dim_ = -1;
    std::shared_ptr<FaceCache> cache_;
};

// Face-level operations. All take a face as an index set of the argument
// complex and return complexes on the induced vertex sets.

Complex link(const Complex& complex, const Face& face);
Complex star(const Complex& complex, const Face& face);
/// The antistar Δ∖v of a single vertex.
Complex antistar(const Complex& complex, const Face& vertex);
Complex skeleton(const Complex& complex, int k);
/// Subcomplex of all faces contained in `vertices`.
Complex induced(const Complex& complex, const Face& vertices);
/// Subcomplex generated by the given faces (labels kept from `complex`).
Complex generated(const Complex& complex, const std::vector<Face>& faces);

/// Join of complexes with disjoint label sets.
Complex join(const Complex& a, const Complex& b);
/// Join of several complexes after suffixing every label with its factor
/// index ("x" in factor 2 becomes "x.2").
Complex join_fresh(const std::vector<Complex>& factors);
/// Relabels every vertex as prefix + old label.
Complex with_prefix(const Complex& complex, const std::string& prefix);

// Instances.
Complex simplex(int d, const std::string& prefix = "");
Complex simplex_boundary(int d, const std::string& prefix = "");
Complex cycle(int m, const std::string& prefix = "");
/// Boundary of the d-cross-polytope (join of d copies of ∂σ¹).
Complex cross_polytope(int d);
/// K(i, d−1) = (∂σ^i)^{*q} * ∂σ^r with d = q·i + r and 1 ≤ r ≤ i.
Complex construct_K(int i, int d);
/// Boundary of a stacked d-polytope with n vertices.
Complex connected_sum_stacked(int d, int n);

/// Contracts the edge uv, replacing u and v by a fresh vertex.
Complex contract_edge(const Complex& complex, int u, int v);
bool is_contractible(const Complex& complex, int u, int v);

}  // namespace spherekit
