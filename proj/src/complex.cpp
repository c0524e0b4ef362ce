#include "spherekit/complex.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "spherekit/error.hpp"

namespace spherekit {

struct Complex::FaceCache {
    std::once_flag faces_once;
    std::vector<std::vector<Face>> levels;  // levels[s] = faces with s vertices
    FaceSet all;
    std::once_flag missing_once;
    std::vector<std::vector<Face>> missing;
};

namespace {

std::vector<Face> maximal_only(std::vector<Face> faces) {
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Face> kept;
    for (const Face& f : faces) {
        bool covered = false;
        for (const Face& k : kept) {
            if (f.is_subset_of(k)) {
                covered = true;
                break;
            }
        }
        if (!covered) kept.push_back(f);
    }
    return kept;
}

std::string padded(int value, int width) {
    std::string s = std::to_string(value);
    if (static_cast<int>(s.size()) < width) s.insert(0, static_cast<std::size_t>(width) - s.size(), '0');
    return s;
}

std::vector<std::string> numbered_labels(int count, const std::string& prefix) {
    const int width = static_cast<int>(std::to_string(std::max(count - 1, 0)).size());
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(prefix + padded(i, width));
    return out;
}

// Builds a complex on the vertices `keep` of `parent` from facets given in
// parent indices.
Complex restrict_to(const Complex& parent, const Face& keep, const std::vector<Face>& parent_facets) {
    std::vector<int> remap(static_cast<std::size_t>(parent.num_vertices()), -1);
    std::vector<std::string> labels;
    keep.for_each([&](int v) {
        remap[static_cast<std::size_t>(v)] = static_cast<int>(labels.size());
        labels.push_back(parent.label(v));
    });
    std::vector<Face> facets;
    facets.reserve(parent_facets.size());
    for (const Face& f : maximal_only(parent_facets)) {
        Face g;
        f.for_each([&](int v) { g.insert(remap[static_cast<std::size_t>(v)]); });
        facets.push_back(g);
    }
    return Complex::from_index_facets(std::move(labels), std::move(facets));
}

}  // namespace

Complex::Complex() : Complex({}, {Face{}}, true) {}

Complex::Complex(std::vector<std::string> labels, std::vector<Face> facets, bool)
    : labels_(std::move(labels)), facets_(std::move(facets)), cache_(std::make_shared<FaceCache>()) {
    std::sort(facets_.begin(), facets_.end());
    dim_ = -1;
    for (const Face& f : facets_) dim_ = std::max(dim_, f.size() - 1);
}

Complex Complex::from_index_facets(std::vector<std::string> labels, std::vector<Face> facets) {
    if (labels.size() > static_cast<std::size_t>(kMaxVertices)) {
        throw Error(ErrorCode::TooManyVertices, std::to_string(labels.size()) + " vertices exceed the limit of " +
                                                    std::to_string(kMaxVertices));
    }
    const int n = static_cast<int>(labels.size());
    std::vector<int> order(labels.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return labels[a] < labels[b]; });
    std::vector<int> remap(labels.size());
    std::vector<std::string> sorted;
    sorted.reserve(labels.size());
    for (int pos = 0; pos < n; ++pos) {
        const int old = order[static_cast<std::size_t>(pos)];
        if (pos > 0 && sorted.back() == labels[static_cast<std::size_t>(old)]) {
            throw Error(ErrorCode::DuplicateLabel, "label '" + sorted.back() + "' appears twice");
        }
        remap[static_cast<std::size_t>(old)] = pos;
        sorted.push_back(std::move(labels[static_cast<std::size_t>(old)]));
    }

    Face covered;
    std::vector<Face> mapped;
    mapped.reserve(facets.size() + labels.size());
    for (const Face& f : facets) {
        Face g;
        f.for_each([&](int v) {
            if (v >= n) throw Error(ErrorCode::UnknownLabel, "facet vertex index " + std::to_string(v) + " out of range");
            g.insert(remap[static_cast<std::size_t>(v)]);
        });
        covered |= g;
        mapped.push_back(g);
    }
    for (std::size_t i = 0; i < mapped.size(); ++i) {
        for (std::size_t j = 0; j < mapped.size(); ++j) {
            if (i != j && mapped[i].is_subset_of(mapped[j]) && (mapped[i] != mapped[j] || i < j)) {
                throw Error(ErrorCode::NonMaximalFacet, "a facet is contained in another facet");
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        if (!covered.contains(v)) mapped.push_back(Face::singleton(v));
    }
    // The empty facet survives only when there are no vertices at all.
    if (n > 0) {
        mapped.erase(std::remove_if(mapped.begin(), mapped.end(), [](const Face& f) { return f.empty(); }),
                     mapped.end());
    }
    if (mapped.empty()) mapped.push_back(Face{});
    return Complex(std::move(sorted), std::move(mapped), true);
}

Complex Complex::from_facets(std::vector<std::string> labels, const std::vector<std::vector<std::string>>& facets) {
    std::map<std::string, int> lookup;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!lookup.emplace(labels[i], static_cast<int>(i)).second) {
            throw Error(ErrorCode::DuplicateLabel, "label '" + labels[i] + "' appears twice");
        }
    }
    if (labels.size() > static_cast<std::size_t>(kMaxVertices)) {
        throw Error(ErrorCode::TooManyVertices, std::to_string(labels.size()) + " vertices exceed the limit of " +
                                                    std::to_string(kMaxVertices));
    }
    std::vector<Face> index_facets;
    index_facets.reserve(facets.size());
    for (const auto& facet : facets) {
        Face f;
        for (const std::string& l : facet) {
            auto it = lookup.find(l);
            if (it == lookup.end()) throw Error(ErrorCode::UnknownLabel, "facet uses unknown label '" + l + "'");
            f.insert(it->second);
        }
        index_facets.push_back(f);
    }
    return from_index_facets(std::move(labels), std::move(index_facets));
}

Complex Complex::from_missing_faces(std::vector<std::string> labels, const std::vector<Face>& missing) {
    const int n = static_cast<int>(labels.size());
    if (n > kMaxVertices) throw Error(ErrorCode::TooManyVertices, "too many vertices");
    auto avoids = [&](const Face& f) {
        for (const Face& m : missing) {
            if (m.is_subset_of(f)) return false;
        }
        return true;
    };
    // Grow faces in increasing-vertex order; a set is a face iff it contains no
    // missing face, and that property is inherited by subsets.
    std::vector<Face> facets;
    std::vector<Face> frontier;
    for (int v = 0; v < n; ++v) {
        if (avoids(Face::singleton(v))) frontier.push_back(Face::singleton(v));
    }
    while (!frontier.empty()) {
        std::vector<Face> next;
        for (const Face& f : frontier) {
            bool extended = false;
            for (int w = 0; w < n; ++w) {
                if (f.contains(w)) continue;
                Face g = f;
                g.insert(w);
                if (!avoids(g)) continue;
                extended = true;
                if (w > f.last()) next.push_back(g);
            }
            if (!extended) facets.push_back(f);
        }
        frontier = std::move(next);
    }
    return from_index_facets(std::move(labels), std::move(facets));
}

bool Complex::is_pure() const {
    for (const Face& f : facets_) {
        if (f.size() - 1 != dim_) return false;
    }
    return true;
}

std::optional<int> Complex::index_of(const std::string& label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return std::nullopt;
    return static_cast<int>(it - labels_.begin());
}

int Complex::require_index(const std::string& label) const {
    auto idx = index_of(label);
    if (!idx) throw Error(ErrorCode::UnknownLabel, "no vertex labelled '" + label + "'");
    return *idx;
}

Face Complex::face_of(std::span<const std::string> labels) const {
    Face f;
    for (const std::string& l : labels) f.insert(require_index(l));
    return f;
}

std::vector<std::string> Complex::labels_of(const Face& face) const {
    std::vector<std::string> out;
    face.for_each([&](int v) { out.push_back(label(v)); });
    return out;
}

void Complex::ensure_faces() const {
    std::call_once(cache_->faces_once, [this] {
        std::vector<FaceSet> by_size(static_cast<std::size_t>(dim_ + 2));
        for (const Face& facet : facets_) {
            const std::vector<int> verts = facet.elements();
            const std::size_t m = verts.size();
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
                Face f;
                for (std::size_t b = 0; b < m; ++b) {
                    if ((mask >> b) & 1U) f.insert(verts[b]);
                }
                by_size[static_cast<std::size_t>(f.size())].insert(f);
            }
        }
        cache_->levels.resize(by_size.size());
        for (std::size_t s = 0; s < by_size.size(); ++s) {
            auto& level = cache_->levels[s];
            level.assign(by_size[s].begin(), by_size[s].end());
            std::sort(level.begin(), level.end());
            cache_->all.insert(level.begin(), level.end());
        }
    });
}

const std::vector<Face>& Complex::faces_of_dim(int dim) const {
    static const std::vector<Face> kEmpty;
    ensure_faces();
    if (dim < -1 || dim > dim_) return kEmpty;
    return cache_->levels[static_cast<std::size_t>(dim + 1)];
}

bool Complex::contains(const Face& face) const {
    ensure_faces();
    return cache_->all.contains(face);
}

long long Complex::num_faces(int dim) const { return static_cast<long long>(faces_of_dim(dim).size()); }

const std::vector<std::vector<Face>>& Complex::missing_faces() const {
    ensure_faces();
    std::call_once(cache_->missing_once, [this] {
        const int n = num_vertices();
        auto& missing = cache_->missing;
        missing.assign(static_cast<std::size_t>(std::max(dim_ + 2, 1)), {});
        // A missing face τ with s vertices is σ ∪ {w} for the face σ = τ minus
        // its largest vertex; every (s−1)-subset must be a face.
        for (int s = 2; s <= dim_ + 2; ++s) {
            for (const Face& sigma : faces_of_dim(s - 3 + 1)) {
                for (int w = sigma.last() + 1; w < n; ++w) {
                    Face tau = sigma;
                    tau.insert(w);
                    if (cache_->all.contains(tau)) continue;
                    bool all_faces = true;
                    sigma.for_each([&](int x) {
                        if (!all_faces) return;
                        Face sub = tau;
                        sub.erase(x);
                        if (!cache_->all.contains(sub)) all_faces = false;
                    });
                    if (all_faces) missing[static_cast<std::size_t>(s - 1)].push_back(tau);
                }
            }
        }
        for (auto& level : missing) std::sort(level.begin(), level.end());
    });
    return cache_->missing;
}

bool Complex::operator==(const Complex& other) const {
    return labels_ == other.labels_ && facets_ == other.facets_;
}

Complex link(const Complex& complex, const Face& face) {
    if (!complex.contains(face)) throw Error(ErrorCode::NotAFace, "link of a non-face");
    std::vector<Face> facets;
    Face verts;
    for (const Face& f : complex.facets()) {
        if (face.is_subset_of(f)) {
            facets.push_back(f - face);
            verts |= f - face;
        }
    }
    return restrict_to(complex, verts, facets);
}

Complex star(const Complex& complex, const Face& face) {
    if (!complex.contains(face)) throw Error(ErrorCode::NotAFace, "star of a non-face");
    std::vector<Face> facets;
    Face verts;
    for (const Face& f : complex.facets()) {
        if (face.is_subset_of(f)) {
            facets.push_back(f);
            verts |= f;
        }
    }
    return restrict_to(complex, verts, facets);
}

Complex antistar(const Complex& complex, const Face& vertex) {
    if (vertex.size() != 1) throw Error(ErrorCode::BadParameters, "antistar needs a single vertex");
    if (!complex.contains(vertex)) throw Error(ErrorCode::NotAFace, "antistar of a non-vertex");
    std::vector<Face> facets;
    for (const Face& f : complex.facets()) facets.push_back(f - vertex);
    return restrict_to(complex, complex.vertex_set() - vertex, facets);
}

Complex skeleton(const Complex& complex, int k) {
    if (k < -1) throw Error(ErrorCode::BadParameters, "skeleton dimension must be at least -1");
    if (k >= complex.dim()) return complex;
    if (k == -1) return Complex();
    std::vector<Face> facets = complex.faces_of_dim(k);
    for (const Face& f : complex.facets()) {
        if (f.size() - 1 < k) facets.push_back(f);
    }
    return restrict_to(complex, complex.vertex_set(), facets);
}

Complex induced(const Complex& complex, const Face& vertices) {
    std::vector<Face> facets;
    for (const Face& f : complex.facets()) facets.push_back(f & vertices);
    return restrict_to(complex, vertices & complex.vertex_set(), facets);
}

Complex generated(const Complex& complex, const std::vector<Face>& faces) {
    Face verts;
    for (const Face& f : faces) {
        if (!complex.contains(f)) throw Error(ErrorCode::NotAFace, "generator is not a face");
        verts |= f;
    }
    return restrict_to(complex, verts, faces.empty() ? std::vector<Face>{Face{}} : faces);
}

Complex join(const Complex& a, const Complex& b) {
    std::vector<std::string> labels = a.labels();
    for (const std::string& l : b.labels()) {
        if (a.index_of(l)) throw Error(ErrorCode::LabelCollision, "label '" + l + "' occurs in both join factors");
        labels.push_back(l);
    }
    if (labels.size() > static_cast<std::size_t>(kMaxVertices)) {
        throw Error(ErrorCode::TooManyVertices, "join exceeds the vertex limit");
    }
    const int offset = a.num_vertices();
    std::vector<Face> facets;
    facets.reserve(a.facets().size() * b.facets().size());
    for (const Face& fa : a.facets()) {
        for (const Face& fb : b.facets()) {
            Face f = fa;
            fb.for_each([&](int v) { f.insert(v + offset); });
            facets.push_back(f);
        }
    }
    return Complex::from_index_facets(std::move(labels), std::move(facets));
}

Complex with_prefix(const Complex& complex, const std::string& prefix) {
    std::vector<std::string> labels;
    for (const std::string& l : complex.labels()) labels.push_back(prefix + l);
    return Complex::from_index_facets(std::move(labels), complex.facets());
}

Complex join_fresh(const std::vector<Complex>& factors) {
    Complex out;
    for (std::size_t t = 0; t < factors.size(); ++t) {
        std::vector<std::string> labels;
        for (const std::string& l : factors[t].labels()) labels.push_back(l + "." + std::to_string(t));
        out = join(out, Complex::from_index_facets(std::move(labels), factors[t].facets()));
    }
    return out;
}

Complex simplex(int d, const std::string& prefix) {
    if (d < -1) throw Error(ErrorCode::BadParameters, "simplex dimension must be at least -1");
    return Complex::from_index_facets(numbered_labels(d + 1, prefix), {Face::range(d + 1)});
}

Complex simplex_boundary(int d, const std::string& prefix) {
    if (d < 1) throw Error(ErrorCode::BadParameters, "simplex boundary needs d >= 1");
    std::vector<Face> facets;
    for (int v = 0; v <= d; ++v) {
        Face f = Face::range(d + 1);
        f.erase(v);
        facets.push_back(f);
    }
    return Complex::from_index_facets(numbered_labels(d + 1, prefix), std::move(facets));
}

Complex cycle(int m, const std::string& prefix) {
    if (m < 3) throw Error(ErrorCode::BadParameters, "a cycle needs at least 3 vertices");
    std::vector<Face> facets;
    for (int v = 0; v < m; ++v) facets.push_back(Face{v, (v + 1) % m});
    return Complex::from_index_facets(numbered_labels(m, prefix), std::move(facets));
}

Complex construct_K(int i, int d) {
    if (i < 1 || d < 1) throw Error(ErrorCode::BadParameters, "K(i, d-1) needs i >= 1 and d >= 1");
    const int q = (d - 1) / i;
    const int r = d - q * i;
    std::vector<Complex> factors(static_cast<std::size_t>(q), simplex_boundary(i));
    factors.push_back(simplex_boundary(r));
    return join_fresh(factors);
}

Complex cross_polytope(int d) { return construct_K(1, d); }

Complex connected_sum_stacked(int d, int n) {
    if (d < 2 || n < d + 1) throw Error(ErrorCode::BadParameters, "stacked sphere needs d >= 2 and n >= d + 1");
    if (n > kMaxVertices) throw Error(ErrorCode::TooManyVertices, "too many vertices");
    std::set<Face> facets;
    for (int v = 0; v <= d; ++v) {
        Face f = Face::range(d + 1);
        f.erase(v);
        facets.insert(f);
    }
    for (int w = d + 1; w < n; ++w) {
        const Face base = *facets.begin();
        facets.erase(facets.begin());
        base.for_each([&](int x) {
            Face f = base;
            f.erase(x);
            f.insert(w);
            facets.insert(f);
        });
    }
    return Complex::from_index_facets(numbered_labels(n, "v"), {facets.begin(), facets.end()});
}

bool is_contractible(const Complex& complex, int u, int v) {
    const Face edge{u, v};
    if (u == v || !complex.contains(edge)) return false;
    for (const auto& level : complex.missing_faces()) {
        for (const Face& m : level) {
            if (edge.is_subset_of(m)) return false;
        }
    }
    return true;
}

Complex contract_edge(const Complex& complex, int u, int v) {
    const Face edge{u, v};
    if (u == v || !complex.contains(edge)) throw Error(ErrorCode::NotAnEdge, "contraction needs an edge");
    if (!is_contractible(complex, u, v)) {
        throw Error(ErrorCode::NotContractible, "edge " + complex.label(u) + complex.label(v) + " lies in a missing face");
    }
    std::string fresh = complex.label(u) + "'";
    while (complex.index_of(fresh)) fresh += "'";

    // Surviving vertices keep their indices below n; the new vertex is n.
    const int n = complex.num_vertices();
    std::vector<std::string> labels = complex.labels();
    labels.push_back(fresh);
    std::vector<Face> facets;
    for (const Face& f : complex.facets()) {
        if (f.intersects(edge)) {
            Face g = f - edge;
            g.insert(n);
            facets.push_back(g);
        } else {
            facets.push_back(f);
        }
    }
    facets = maximal_only(std::move(facets));
    // Drop u and v, compacting indices.
    std::vector<int> remap(static_cast<std::size_t>(n + 1), -1);
    std::vector<std::string> kept;
    for (int x = 0; x <= n; ++x) {
        if (x == u || x == v) continue;
        remap[static_cast<std::size_t>(x)] = static_cast<int>(kept.size());
        kept.push_back(labels[static_cast<std::size_t>(x)]);
    }
    for (Face& f : facets) {
        Face g;
        f.for_each([&](int x) { g.insert(remap[static_cast<std::size_t>(x)]); });
        f = g;
    }
    return Complex::from_index_facets(std::move(kept), std::move(facets));
}

}  // namespace spherekit
