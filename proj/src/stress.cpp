#include "spherekit/stress.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include <json.hpp>

#include "spherekit/error.hpp"
#include "spherekit/invariants.hpp"

namespace spherekit {

Face monomial_support(const Monomial& m) {
    Face f;
    for (std::uint8_t v : m) f.insert(v);
    return f;
}

int exponent(const Monomial& m, int v) {
    return static_cast<int>(std::count(m.begin(), m.end(), static_cast<std::uint8_t>(v)));
}

namespace {

Monomial times(const Monomial& m, int v) {
    Monomial out;
    out.reserve(m.size() + 1);
    auto pos = std::upper_bound(m.begin(), m.end(), static_cast<std::uint8_t>(v));
    out.insert(out.end(), m.begin(), pos);
    out.push_back(static_cast<std::uint8_t>(v));
    out.insert(out.end(), pos, m.end());
    return out;
}

Monomial without_one(const Monomial& m, int v) {
    Monomial out = m;
    out.erase(std::find(out.begin(), out.end(), static_cast<std::uint8_t>(v)));
    return out;
}

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::size_t h = 1469598103934665603ULL;
        for (std::uint8_t x : m) h = (h ^ x) * 1099511628211ULL;
        return h;
    }
};

using MonomialIndex = std::unordered_map<Monomial, std::size_t, MonomialHash>;

MonomialIndex index_monomials(const std::vector<Monomial>& basis) {
    MonomialIndex idx;
    idx.reserve(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
    return idx;
}

// Calls fn(m) for every degree-k multiset on the given sorted vertices that
// uses each vertex at least once.
template <typename Fn>
void for_each_full_support(const std::vector<int>& verts, int k, Fn&& fn) {
    const int s = static_cast<int>(verts.size());
    if (s > k) return;
    Monomial current(verts.begin(), verts.end());
    // Distribute the k − s extra copies over the s vertices.
    std::vector<int> extra(static_cast<std::size_t>(s), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == s - 1 || s == 0) {
            if (s > 0) extra[static_cast<std::size_t>(pos)] = left;
            else if (left != 0) return;
            Monomial m;
            for (int i = 0; i < s; ++i) {
                m.insert(m.end(), static_cast<std::size_t>(1 + extra[static_cast<std::size_t>(i)]),
                         static_cast<std::uint8_t>(verts[static_cast<std::size_t>(i)]));
            }
            fn(m);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            extra[static_cast<std::size_t>(pos)] = e;
            rec(pos + 1, left - e);
        }
    };
    rec(0, k - s);
}

// Coordinate matrix of the embedding over the complex's vertices, with the
// all-ones row appended for affine stresses.
RationalMatrix constraint_forms(const Embedding& p, StressKind kind) {
    const std::size_t n = p.labels.size();
    const std::size_t rows = static_cast<std::size_t>(p.dim) + (kind == StressKind::Affine ? 1 : 0);
    RationalMatrix a(rows, n);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t j = 0; j < static_cast<std::size_t>(p.dim); ++j) a(j, v) = p.coords[v][j];
        if (kind == StressKind::Affine) a(rows - 1, v) = 1;
    }
    return a;
}

Embedding checked_restriction(const Complex& complex, const Embedding& p) {
    Embedding q = p.restricted_to(complex);
    return q;
}

RationalMatrix direct_system(const Complex& complex, const RationalMatrix& forms, int k,
                             const std::vector<Monomial>& basis) {
    const std::vector<Monomial> lower = monomial_basis(complex, k - 1);
    const MonomialIndex col = index_monomials(basis);
    const std::size_t nforms = forms.rows();
    RationalMatrix m(lower.size() * nforms, basis.size());
    for (std::size_t r = 0; r < lower.size(); ++r) {
        const Monomial& nu = lower[r];
        for (int v = 0; v < complex.num_vertices(); ++v) {
            auto it = col.find(times(nu, v));
            if (it == col.end()) continue;
            const int mult = exponent(nu, v) + 1;
            for (std::size_t j = 0; j < nforms; ++j) {
                if (sgn(forms(j, static_cast<std::size_t>(v))) != 0) {
                    m(r * nforms + j, it->second) = mult * forms(j, static_cast<std::size_t>(v));
                }
            }
        }
    }
    return m;
}

std::vector<RationalVector> direct_route(const Complex& complex, const RationalMatrix& forms, int k,
                                         const std::vector<Monomial>& basis) {
    if (k == 0) return {RationalVector{1}};
    return kernel_basis(direct_system(complex, forms, k, basis));
}

using Polynomial = std::map<Monomial, Integer>;

Polynomial multiply_linear(const Polynomial& poly, const std::vector<Integer>& form) {
    Polynomial out;
    for (const auto& [mono, coef] : poly) {
        for (std::size_t v = 0; v < form.size(); ++v) {
            if (sgn(form[v]) == 0) continue;
            Integer& slot = out[times(mono, static_cast<int>(v))];
            mpz_addmul(slot.get_mpz_t(), coef.get_mpz_t(), form[v].get_mpz_t());
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (sgn(it->second) == 0) it = out.erase(it);
        else ++it;
    }
    return out;
}

// Multiplies v by the least common multiple of its denominators.
std::vector<Integer> integer_multiple(const RationalVector& v) {
    Integer scale = 1;
    for (const Rational& x : v) {
        if (sgn(x) != 0) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
    }
    std::vector<Integer> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) != 0) out[i] = v[i].get_num() * (scale / v[i].get_den());
    }
    return out;
}

// Linear forms spanning the orthogonal complement of the row space of
// `forms`, as integer vectors.
std::vector<std::vector<Integer>> orthogonal_forms(const RationalMatrix& forms) {
    std::vector<std::vector<Integer>> out;
    for (const RationalVector& v : kernel_basis(forms)) out.push_back(integer_multiple(v));
    return out;
}

// Products ℓ_{α_1}···ℓ_{α_k} over all multisets α of size k, in multiset order.
std::vector<Polynomial> symmetric_products(const std::vector<std::vector<Integer>>& ell, int k) {
    std::vector<Polynomial> out;
    std::function<void(const Polynomial&, std::size_t, int)> rec = [&](const Polynomial& acc, std::size_t from,
                                                                        int left) {
        if (left == 0) {
            out.push_back(acc);
            return;
        }
        for (std::size_t t = from; t < ell.size(); ++t) rec(multiply_linear(acc, ell[t]), t, left - 1);
    };
    rec(Polynomial{{Monomial{}, Integer(1)}}, 0, k);
    return out;
}

std::vector<RationalVector> apolar_route(const Complex& complex, const RationalMatrix& forms, int k,
                                         const std::vector<Monomial>& basis) {
    const std::vector<Polynomial> products = symmetric_products(orthogonal_forms(forms), k);
    if (products.empty()) return {};

    // Constraint rows: coefficients on monomials whose support is not a face.
    MonomialIndex row_of;
    std::vector<std::vector<std::pair<std::size_t, const Integer*>>> rows;
    for (std::size_t a = 0; a < products.size(); ++a) {
        for (const auto& [mono, coef] : products[a]) {
            if (complex.contains(monomial_support(mono))) continue;
            auto [it, inserted] = row_of.emplace(mono, rows.size());
            if (inserted) rows.emplace_back();
            rows[it->second].emplace_back(a, &coef);
        }
    }
    RationalMatrix constraints(rows.size(), products.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (const auto& [a, coef] : rows[r]) constraints(r, a) = *coef;
    }
    const std::vector<RationalVector> combos =
        rows.empty() ? kernel_basis(RationalMatrix(0, products.size())) : kernel_basis(constraints);

    const MonomialIndex col = index_monomials(basis);
    std::vector<RationalVector> out;
    out.reserve(combos.size());
    for (const RationalVector& combo : combos) {
        const std::vector<Integer> c = integer_multiple(combo);
        std::vector<Integer> v(basis.size());
        for (std::size_t a = 0; a < products.size(); ++a) {
            if (sgn(c[a]) == 0) continue;
            for (const auto& [mono, coef] : products[a]) {
                auto it = col.find(mono);
                if (it != col.end()) mpz_addmul(v[it->second].get_mpz_t(), c[a].get_mpz_t(), coef.get_mpz_t());
            }
        }
        out.emplace_back(v.begin(), v.end());
    }
    return out;
}

StressRoute choose_route(const Complex& complex, int n, int nforms, int k, std::size_t basis_size) {
    const double lower = static_cast<double>(monomial_basis(complex, k - 1).size());
    const double cols = static_cast<double>(basis_size);
    const double direct_rows = lower * nforms;
    const double direct = direct_rows * cols * std::min(direct_rows, cols);
    const double free_vars = std::max(n - nforms, 0);
    const double alphas = static_cast<double>(binomial(static_cast<long>(free_vars) + k - 1, k).get_d());
    const double all_monomials = static_cast<double>(binomial(n + k - 1, k).get_d());
    const double nonface = std::max(all_monomials - cols, 1.0);
    const double apolar = alphas * all_monomials * (nforms + 1) + nonface * alphas * std::min(nonface, alphas);
    return apolar < direct ? StressRoute::Apolar : StressRoute::Direct;
}

}  // namespace

// ---------------------------------------------------------------- embeddings

CoordinateStream::CoordinateStream(std::uint64_t seed, std::uint64_t domain) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(domain), static_cast<std::uint32_t>(domain >> 32)};
    engine_.seed(seq);
}

Integer CoordinateStream::next() {
    constexpr std::uint64_t kSpan = (std::uint64_t{1} << 31) + 1;
    const std::uint64_t raw = engine_() % kSpan;
    return Integer(static_cast<long>(raw)) - (1L << 30);
}

std::optional<std::size_t> Embedding::find(const std::string& label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels.begin());
}

const RationalVector& Embedding::at(const std::string& label) const {
    auto idx = find(label);
    if (!idx) throw Error(ErrorCode::EmbeddingMismatch, "no coordinates for vertex '" + label + "'");
    return coords[*idx];
}

Embedding Embedding::restricted_to(const Complex& complex) const {
    Embedding out;
    out.dim = dim;
    out.seed = seed;
    out.labels = complex.labels();
    for (const std::string& l : complex.labels()) out.coords.push_back(at(l));
    return out;
}

Embedding generic_embedding(const Complex& complex, int dim, std::uint64_t seed) {
    if (dim < 1) throw Error(ErrorCode::BadParameters, "embedding dimension must be at least 1");
    CoordinateStream stream(seed);
    Embedding p;
    p.dim = dim;
    p.seed = seed;
    p.labels = complex.labels();
    for (int v = 0; v < complex.num_vertices(); ++v) {
        RationalVector c;
        c.reserve(static_cast<std::size_t>(dim));
        for (int j = 0; j < dim; ++j) c.emplace_back(stream.next());
        p.coords.push_back(std::move(c));
    }
    return p;
}

// ---------------------------------------------------------------- stresses

Rational Stress::coefficient(const Monomial& m) const {
    auto it = terms.find(m);
    return it == terms.end() ? Rational(0) : it->second;
}

std::vector<Monomial> monomial_basis(const Complex& complex, int k) {
    std::vector<Monomial> out;
    if (k < 0) return out;
    if (k == 0) return {Monomial{}};
    for (int s = 1; s <= std::min(k, complex.dim() + 1); ++s) {
        for (const Face& f : complex.faces_of_dim(s - 1)) {
            for_each_full_support(f.elements(), k, [&](const Monomial& m) { out.push_back(m); });
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Spanning vectors of the stress space over monomial_basis(complex, k); they
// are linearly independent but not reduced.
std::vector<RationalVector> raw_stresses(const Complex& complex, const Embedding& q, int k, StressKind kind,
                                         StressRoute route, const std::vector<Monomial>& basis) {
    const RationalMatrix forms = constraint_forms(q, kind);
    if (route == StressRoute::Automatic) {
        route = choose_route(complex, complex.num_vertices(), static_cast<int>(forms.rows()), k, basis.size());
    }
    return route == StressRoute::Direct ? direct_route(complex, forms, k, basis)
                                        : apolar_route(complex, forms, k, basis);
}

Stress verified(const Complex& complex, const Embedding& q, int k, StressKind kind, const RationalVector& v) {
    Stress s = from_coordinates(complex, k, v);
    if (!is_stress(complex, q, s, kind)) {
        throw Error(ErrorCode::VerificationFailed, "computed basis element violates the stress conditions");
    }
    return s;
}

}  // namespace

std::vector<Stress> stress_basis(const Complex& complex, const Embedding& p, int k, StressKind kind,
                                 StressRoute route) {
    if (k < 0) throw Error(ErrorCode::BadParameters, "stress degree must be nonnegative");
    const Embedding q = checked_restriction(complex, p);
    const std::vector<Monomial> basis = monomial_basis(complex, k);
    const std::vector<RationalVector> raw = raw_stresses(complex, q, k, kind, route, basis);
    std::vector<Stress> out;
    for (const RationalVector& v : canonical_basis(raw, basis.size())) out.push_back(verified(complex, q, k, kind, v));
    return out;
}

bool is_stress(const Complex& complex, const Embedding& p, const Stress& lambda, StressKind kind) {
    const std::size_t n = lambda.labels.size();
    std::vector<bool> used(n, false);
    for (const auto& [mono, coef] : lambda.terms) {
        if (static_cast<int>(mono.size()) != lambda.degree) return false;
        for (std::uint8_t x : mono) used[x] = true;
    }
    std::vector<int> index(n, -1);
    for (std::size_t v = 0; v < n; ++v) {
        const auto idx = complex.index_of(lambda.labels[v]);
        if (!idx) {
            if (used[v]) return false;
            continue;
        }
        index[v] = *idx;
    }
    for (const auto& [mono, coef] : lambda.terms) {
        Face f;
        for (std::uint8_t x : mono) f.insert(index[x]);
        if (!complex.contains(f)) return false;
    }
    if (lambda.degree == 0 || lambda.terms.empty()) return true;

    // Each condition is homogeneous, so clear denominators of λ and of every
    // form and check the integer identities, all forms in one pass.
    const std::size_t nforms = static_cast<std::size_t>(p.dim) + (kind == StressKind::Affine ? 1 : 0);
    std::vector<std::vector<Integer>> weight(n, std::vector<Integer>(nforms));
    std::vector<Integer> form_scale(nforms, Integer(1));
    for (std::size_t v = 0; v < n; ++v) {
        if (index[v] < 0) continue;
        const RationalVector& c = p.at(lambda.labels[v]);
        for (std::size_t j = 0; j < static_cast<std::size_t>(p.dim); ++j) {
            mpz_lcm(form_scale[j].get_mpz_t(), form_scale[j].get_mpz_t(), c[j].get_den_mpz_t());
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (index[v] < 0) continue;
        const RationalVector& c = p.at(lambda.labels[v]);
        for (std::size_t j = 0; j < static_cast<std::size_t>(p.dim); ++j) {
            weight[v][j] = c[j].get_num() * (form_scale[j] / c[j].get_den());
        }
        if (kind == StressKind::Affine) weight[v][nforms - 1] = 1;
    }
    Integer scale = 1;
    for (const auto& [mono, coef] : lambda.terms) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), coef.get_den_mpz_t());

    std::unordered_map<Monomial, std::vector<Integer>, MonomialHash> sums;
    Integer c, term;
    for (const auto& [mono, coef] : lambda.terms) {
        c = coef.get_num() * (scale / coef.get_den());
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (i > 0 && mono[i] == mono[i - 1]) continue;
            const std::uint8_t v = mono[i];
            std::vector<Integer>& acc = sums.try_emplace(without_one(mono, v), nforms).first->second;
            term = c * exponent(mono, v);
            for (std::size_t j = 0; j < nforms; ++j) {
                if (sgn(weight[v][j]) != 0) mpz_addmul(acc[j].get_mpz_t(), term.get_mpz_t(), weight[v][j].get_mpz_t());
            }
        }
    }
    for (const auto& [mono, acc] : sums) {
        for (const Integer& x : acc) {
            if (sgn(x) != 0) return false;
        }
    }
    return true;
}

namespace {

// Dimension of the stress space, with every spanning vector checked exactly.
int verified_dimension(const Complex& complex, const Embedding& p, int k, StressKind kind) {
    if (k < 0) throw Error(ErrorCode::BadParameters, "stress degree must be nonnegative");
    const Embedding q = checked_restriction(complex, p);
    const std::vector<Monomial> basis = monomial_basis(complex, k);
    const std::vector<RationalVector> raw = raw_stresses(complex, q, k, kind, StressRoute::Automatic, basis);
    for (const RationalVector& v : raw) verified(complex, q, k, kind, v);
    return static_cast<int>(raw.size());
}

}  // namespace

StressDims stress_dims(const Complex& complex, int k, int trials, std::uint64_t seed) {
    if (trials < 1) throw Error(ErrorCode::BadParameters, "stress_dims needs at least one trial");
    const int d = complex.dim() + 1;
    StressDims out;
    for (int t = 0; t < trials; ++t) {
        const Embedding p = generic_embedding(complex, d, seed + static_cast<std::uint64_t>(t));
        out.linear_trials.push_back(verified_dimension(complex, p, k, StressKind::Linear));
        out.affine_trials.push_back(verified_dimension(complex, p, k, StressKind::Affine));
    }
    out.dim_linear = *std::min_element(out.linear_trials.begin(), out.linear_trials.end());
    out.dim_affine = *std::min_element(out.affine_trials.begin(), out.affine_trials.end());
    for (int t = 0; t < trials; ++t) {
        if (out.linear_trials[static_cast<std::size_t>(t)] != out.dim_linear ||
            out.affine_trials[static_cast<std::size_t>(t)] != out.dim_affine) {
            out.trials_agree = false;
        }
    }
    return out;
}

Stress apply_linear_form(const Stress& lambda, const std::map<std::string, Rational>& form) {
    std::vector<Rational> weight(lambda.labels.size());
    for (std::size_t v = 0; v < lambda.labels.size(); ++v) {
        auto it = form.find(lambda.labels[v]);
        if (it != form.end()) weight[v] = it->second;
    }
    Stress out;
    out.degree = std::max(lambda.degree - 1, 0);
    out.labels = lambda.labels;
    if (lambda.degree == 0) return out;
    for (const auto& [mono, coef] : lambda.terms) {
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (i > 0 && mono[i] == mono[i - 1]) continue;
            const std::uint8_t v = mono[i];
            if (sgn(weight[v]) == 0) continue;
            out.terms[without_one(mono, v)] += coef * exponent(mono, v) * weight[v];
        }
    }
    for (auto it = out.terms.begin(); it != out.terms.end();) {
        if (sgn(it->second) == 0) it = out.terms.erase(it);
        else ++it;
    }
    return out;
}

Stress apply_partial(const Stress& lambda, const std::string& vertex) {
    return apply_linear_form(lambda, {{vertex, Rational(1)}});
}

Stress apply_dc(const Stress& lambda) {
    std::map<std::string, Rational> ones;
    for (const std::string& l : lambda.labels) ones[l] = 1;
    return apply_linear_form(lambda, ones);
}

Stress scaled(const Stress& lambda, const Rational& factor) {
    Stress out{lambda.degree, lambda.labels, {}};
    if (sgn(factor) == 0) return out;
    for (const auto& [mono, coef] : lambda.terms) out.terms.emplace(mono, coef * factor);
    return out;
}

Stress add(const Stress& a, const Stress& b) {
    Stress rb = a.labels == b.labels ? b : relabel(b, a.labels);
    Stress out = a;
    for (const auto& [mono, coef] : rb.terms) {
        Rational& slot = out.terms[mono];
        slot += coef;
        if (sgn(slot) == 0) out.terms.erase(mono);
    }
    return out;
}

Stress subtract(const Stress& a, const Stress& b) { return add(a, scaled(b, Rational(-1))); }

Stress normalized(const Stress& lambda) {
    if (lambda.is_zero()) return lambda;
    return scaled(lambda, 1 / lambda.terms.begin()->second);
}

Stress relabel(const Stress& lambda, const std::vector<std::string>& labels) {
    std::vector<int> map(lambda.labels.size(), -1);
    for (std::size_t v = 0; v < lambda.labels.size(); ++v) {
        auto it = std::find(labels.begin(), labels.end(), lambda.labels[v]);
        if (it != labels.end()) map[v] = static_cast<int>(it - labels.begin());
    }
    Stress out{lambda.degree, labels, {}};
    for (const auto& [mono, coef] : lambda.terms) {
        Monomial m;
        for (std::uint8_t x : mono) {
            if (map[x] < 0) {
                throw Error(ErrorCode::EmbeddingMismatch, "variable '" + lambda.labels[x] + "' missing from target");
            }
            m.push_back(static_cast<std::uint8_t>(map[x]));
        }
        std::sort(m.begin(), m.end());
        out.terms.emplace(std::move(m), coef);
    }
    return out;
}

std::vector<Face> support_faces(const Complex& complex, const Stress& lambda) {
    std::vector<Face> out;
    for (const auto& [mono, coef] : lambda.terms) {
        (void)coef;
        if (std::adjacent_find(mono.begin(), mono.end()) != mono.end()) continue;
        Face f;
        for (std::uint8_t x : mono) f.insert(complex.require_index(lambda.labels[x]));
        out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Complex support(const Complex& complex, const Stress& lambda) {
    const std::vector<Face> faces = support_faces(complex, lambda);
    if (faces.empty()) throw Error(ErrorCode::ZeroStress, "stress has no squarefree terms");
    return generated(complex, faces);
}

RationalVector coordinates(const Complex& complex, const Stress& lambda) {
    const Stress local = lambda.labels == complex.labels() ? lambda : relabel(lambda, complex.labels());
    const std::vector<Monomial> basis = monomial_basis(complex, lambda.degree);
    const MonomialIndex col = index_monomials(basis);
    RationalVector v(basis.size());
    for (const auto& [mono, coef] : local.terms) {
        auto it = col.find(mono);
        if (it == col.end()) throw Error(ErrorCode::NotAStress, "term not supported on a face");
        v[it->second] = coef;
    }
    return v;
}

Stress from_coordinates(const Complex& complex, int k, const RationalVector& coords) {
    const std::vector<Monomial> basis = monomial_basis(complex, k);
    Stress s{k, complex.labels(), {}};
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (sgn(coords[i]) != 0) s.terms.emplace(basis[i], coords[i]);
    }
    return s;
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& labels) {
    if (m.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < m.size();) {
        std::size_t j = i;
        while (j < m.size() && m[j] == m[i]) ++j;
        if (!out.empty()) out += '*';
        out += labels[m[i]];
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::string stress_to_json(const Stress& lambda) {
    nlohmann::ordered_json doc;
    doc["degree"] = lambda.degree;
    doc["variables"] = lambda.labels;
    nlohmann::ordered_json terms = nlohmann::ordered_json::object();
    for (const auto& [mono, coef] : lambda.terms) terms[monomial_to_string(mono, lambda.labels)] = coef.get_str();
    doc["terms"] = std::move(terms);
    return doc.dump();
}

Stress stress_from_json(const std::string& text) {
    nlohmann::ordered_json doc;
    try {
        doc = nlohmann::ordered_json::parse(text);
        Stress s;
        s.degree = doc.at("degree").get<int>();
        s.labels = doc.at("variables").get<std::vector<std::string>>();
        for (const auto& [key, value] : doc.at("terms").items()) {
            Monomial m;
            if (key != "1") {
                std::size_t pos = 0;
                while (pos <= key.size()) {
                    std::size_t end = key.find('*', pos);
                    if (end == std::string::npos) end = key.size();
                    std::string factor = key.substr(pos, end - pos);
                    int power = 1;
                    if (auto caret = factor.rfind('^'); caret != std::string::npos) {
                        power = std::stoi(factor.substr(caret + 1));
                        factor = factor.substr(0, caret);
                    }
                    auto it = std::find(s.labels.begin(), s.labels.end(), factor);
                    if (it == s.labels.end()) throw Error(ErrorCode::ParseError, "unknown variable '" + factor + "'");
                    m.insert(m.end(), static_cast<std::size_t>(power), static_cast<std::uint8_t>(it - s.labels.begin()));
                    pos = end + 1;
                }
                std::sort(m.begin(), m.end());
            }
            if (static_cast<int>(m.size()) != s.degree) throw Error(ErrorCode::ParseError, "term degree mismatch");
            const Rational q = parse_rational(value.get<std::string>());
            if (sgn(q) != 0) s.terms[m] += q;
        }
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    } catch (const std::invalid_argument& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

}  // namespace spherekit
