#include "spherekit/homology.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

#include "spherekit/error.hpp"

namespace spherekit {
namespace {

using BitRow = std::vector<std::uint64_t>;

// Rank over GF(2) of the boundary map from faces of dimension i to faces of
// dimension i−1 (i ≥ 0; the target of ∂_0 is the empty face).
int boundary_rank(const Complex& complex, int i) {
    const auto& cells = complex.faces_of_dim(i);
    const auto& targets = complex.faces_of_dim(i - 1);
    if (cells.empty() || targets.empty()) return 0;
    std::unordered_map<Face, std::size_t, VertexSetHash> index;
    index.reserve(targets.size());
    for (std::size_t t = 0; t < targets.size(); ++t) index.emplace(targets[t], t);

    const std::size_t words = (targets.size() + 63) / 64;
    std::unordered_map<std::size_t, BitRow> pivot_rows;
    int rank = 0;
    for (const Face& cell : cells) {
        BitRow row(words, 0);
        if (i == 0) {
            row[0] = 1;
        } else {
            cell.for_each([&](int v) {
                Face facet = cell;
                facet.erase(v);
                const std::size_t t = index.at(facet);
                row[t / 64] |= std::uint64_t{1} << (t % 64);
            });
        }
        for (;;) {
            std::size_t lead = words * 64;
            for (std::size_t w = 0; w < words; ++w) {
                if (row[w] != 0) {
                    lead = w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
                    break;
                }
            }
            if (lead == words * 64) break;
            auto it = pivot_rows.find(lead);
            if (it == pivot_rows.end()) {
                pivot_rows.emplace(lead, std::move(row));
                ++rank;
                break;
            }
            for (std::size_t w = 0; w < words; ++w) row[w] ^= it->second[w];
        }
    }
    return rank;
}

}  // namespace

int reduced_betti_z2(const Complex& complex, int i) {
    if (i < -1 || i > complex.dim()) return 0;
    const long long cells = complex.num_faces(i);
    const int out_rank = i >= 0 ? boundary_rank(complex, i) : 0;
    const int in_rank = boundary_rank(complex, i + 1);
    return static_cast<int>(cells - out_rank - in_rank);
}

std::vector<int> betti_z2(const Complex& complex) {
    std::vector<int> out;
    for (int i = 0; i <= complex.dim(); ++i) out.push_back(reduced_betti_z2(complex, i));
    return out;
}

bool has_sphere_homology(const Complex& complex, int sphere_dim) {
    for (int i = -1; i <= std::max(complex.dim(), sphere_dim); ++i) {
        if (reduced_betti_z2(complex, i) != (i == sphere_dim ? 1 : 0)) return false;
    }
    return true;
}

bool is_homology_sphere(const Complex& complex) {
    if (!complex.is_pure()) throw Error(ErrorCode::NotPure, "homology sphere check needs a pure complex");
    const int d = complex.dim() + 1;
    for (int i = -1; i <= complex.dim(); ++i) {
        for (const Face& face : complex.faces_of_dim(i)) {
            const Complex lk = face.empty() ? complex : link(complex, face);
            if (!has_sphere_homology(lk, d - 1 - face.size())) return false;
        }
    }
    return true;
}

bool is_acyclic_z2(const Complex& complex) {
    for (int i = -1; i <= complex.dim(); ++i) {
        if (reduced_betti_z2(complex, i) != 0) return false;
    }
    return true;
}

}  // namespace spherekit
