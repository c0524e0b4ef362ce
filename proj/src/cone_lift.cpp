#include "spherekit/cone_lift.hpp"

#include <algorithm>

#include "spherekit/error.hpp"
#include "spherekit/homology.hpp"
#include "spherekit/invariants.hpp"

namespace spherekit {
namespace {

constexpr std::uint64_t kLiftDomain = 0x6c696674;  // "lift"

// Preimage of `target` under ∂_c restricted to span(basis), as a stress over
// `complex`; nullopt when target is outside the image.
std::optional<Stress> dc_preimage(const Complex& complex, const std::vector<Stress>& basis, const Stress& target) {
    const int k = target.degree + 1;
    const RationalVector rhs = coordinates(complex, target);
    RationalMatrix m(rhs.size(), basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
        const RationalVector col = coordinates(complex, apply_dc(basis[c]));
        for (std::size_t r = 0; r < col.size(); ++r) m(r, c) = col[r];
    }
    const auto x = solve(m, rhs);
    if (!x) return std::nullopt;
    Stress out{k, complex.labels(), {}};
    for (std::size_t c = 0; c < basis.size(); ++c) {
        if (sgn((*x)[c]) != 0) out = add(out, scaled(basis[c], (*x)[c]));
    }
    return out;
}

}  // namespace

Embedding link_embedding(const Embedding& q, const Complex& complex, const std::string& u) {
    const int ui = complex.require_index(u);
    const Complex lk = link(complex, Face::singleton(ui));
    const int d = q.dim;
    if (d < 2) throw Error(ErrorCode::BadParameters, "link embedding needs dimension at least 2");
    const RationalVector& au = q.at(u);
    for (int j = 0; j < d; ++j) {
        if (sgn(au[static_cast<std::size_t>(j)]) == 0) {
            throw Error(ErrorCode::DegenerateCoordinates, "coordinate " + std::to_string(j) + " of " + u + " is zero");
        }
    }
    const Rational& aud = au[static_cast<std::size_t>(d - 1)];
    Embedding out;
    out.dim = d - 1;
    out.seed = q.seed;
    out.labels = lk.labels();
    for (const std::string& s : lk.labels()) {
        const RationalVector& as = q.at(s);
        const Rational ratio = as[static_cast<std::size_t>(d - 1)] / aud;
        const Rational denom = 1 - ratio;
        if (sgn(denom) == 0) {
            throw Error(ErrorCode::DegenerateCoordinates, "last coordinates of " + s + " and " + u + " coincide");
        }
        RationalVector c(static_cast<std::size_t>(d - 1));
        for (std::size_t j = 0; j + 1 < static_cast<std::size_t>(d); ++j) c[j] = (as[j] / au[j] - ratio) / denom;
        out.coords.push_back(std::move(c));
    }
    return out;
}

Complex cone(const Complex& base, const std::string& apex) {
    if (base.index_of(apex)) throw Error(ErrorCode::LabelCollision, "apex '" + apex + "' already a vertex");
    return join(base, Complex::from_facets({apex}, {{apex}}));
}

Embedding cone_embedding(const Embedding& p_prime, const AValues& a, const std::string& apex) {
    if (p_prime.find(apex)) throw Error(ErrorCode::LabelCollision, "apex '" + apex + "' already embedded");
    Embedding out;
    out.dim = p_prime.dim + 1;
    out.seed = p_prime.seed;
    out.labels = p_prime.labels;
    out.labels.push_back(apex);
    std::sort(out.labels.begin(), out.labels.end());
    for (const std::string& s : out.labels) {
        RationalVector c(static_cast<std::size_t>(out.dim));
        if (s == apex) {
            c.back() = -1;
        } else {
            auto it = a.find(s);
            if (it == a.end()) throw Error(ErrorCode::BadAValue, "no a-value for " + s);
            if (it->second == -1) throw Error(ErrorCode::BadAValue, "a-value of " + s + " is -1");
            const RationalVector& ps = p_prime.at(s);
            for (std::size_t j = 0; j < ps.size(); ++j) c[j] = (1 + it->second) * ps[j];
            c.back() = it->second;
        }
        out.coords.push_back(std::move(c));
    }
    return out;
}

AValues random_a_values(const std::vector<std::string>& labels, std::uint64_t seed) {
    CoordinateStream stream(seed, kLiftDomain);
    AValues out;
    for (const std::string& l : labels) {
        Integer x = stream.next();
        while (x == -1) x = stream.next();
        out.emplace(l, Rational(x));
    }
    return out;
}

Stress lift(const Complex& base, const Embedding& p_prime, const Stress& omega, const AValues& a,
            const std::string& apex) {
    if (!is_stress(base, p_prime, omega, StressKind::Linear)) {
        throw Error(ErrorCode::NotAStress, "input is not a linear stress on the base");
    }
    std::vector<std::string> labels = base.labels();
    labels.push_back(apex);
    std::sort(labels.begin(), labels.end());
    const auto apex_index = static_cast<std::uint8_t>(std::find(labels.begin(), labels.end(), apex) - labels.begin());

    AValues weights;
    for (const std::string& s : base.labels()) {
        auto it = a.find(s);
        if (it == a.end()) throw Error(ErrorCode::BadAValue, "no a-value for " + s);
        if (it->second == -1) throw Error(ErrorCode::BadAValue, "a-value of " + s + " is -1");
        weights.emplace(s, it->second);
    }

    // ω_0: substitute x_s ↦ x_s / (1 + a_s).
    Stress current = relabel(omega, labels);
    for (auto& [mono, coef] : current.terms) {
        for (std::uint8_t x : mono) coef /= 1 + weights.at(labels[x]);
    }

    Stress out{omega.degree, labels, {}};
    for (int j = 0; j <= omega.degree; ++j) {
        for (const auto& [mono, coef] : current.terms) {
            Monomial m = mono;
            m.insert(m.end(), static_cast<std::size_t>(j), apex_index);
            std::sort(m.begin(), m.end());
            out.terms[m] += coef;
        }
        if (j < omega.degree) current = scaled(apply_linear_form(current, weights), Rational(1, j + 1));
    }
    for (auto it = out.terms.begin(); it != out.terms.end();) {
        if (sgn(it->second) == 0) it = out.terms.erase(it);
        else ++it;
    }
    return out;
}

EdgeStressResult edge_stress(const Complex& complex, const std::string& u, const std::string& v,
                             std::uint64_t seed) {
    const int d = complex.dim() + 1;
    if (d < 2 || d % 2 != 0) throw Error(ErrorCode::HypothesisViolated, "dimension must be 2k-1");
    const int k = d / 2;
    const int ui = complex.require_index(u);
    const int vi = complex.require_index(v);
    if (ui == vi || !complex.contains(Face{ui, vi})) throw Error(ErrorCode::HypothesisViolated, u + v + " is not an edge");
    if (s_class(complex) > k - 1) {
        throw Error(ErrorCode::HypothesisViolated, "complex has a missing face of dimension at least " + std::to_string(k));
    }
    if (!is_homology_sphere(complex)) throw Error(ErrorCode::HypothesisViolated, "not a homology sphere");

    const Embedding q = generic_embedding(complex, d, seed);
    Embedding p_prime;
    try {
        p_prime = link_embedding(q, complex, u);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::DegenerateCoordinates) throw Error(ErrorCode::GenericityFailure, e.what());
        throw;
    }

    const Complex lk_u = link(complex, Face::singleton(ui));
    const Complex st_v_in_lk = star(lk_u, Face::singleton(lk_u.require_index(v)));
    const Complex st_u = star(complex, Face::singleton(ui));
    const Complex st_v = star(complex, Face::singleton(vi));

    AValues a;
    const Rational& aud = q.at(u)[static_cast<std::size_t>(d - 1)];
    for (const std::string& s : lk_u.labels()) a.emplace(s, -q.at(s)[static_cast<std::size_t>(d - 1)] / aud);

    const std::vector<Stress> candidates = stress_basis(st_v_in_lk, p_prime, k - 1, StressKind::Linear);
    const std::vector<Stress> lk_basis = stress_basis(lk_u, p_prime, k, StressKind::Linear);
    const std::vector<Stress> st_u_basis = stress_basis(st_u, q, k, StressKind::Linear);
    const std::vector<Stress> st_v_basis = stress_basis(st_v, q, k, StressKind::Linear);

    auto in_region = [](const Complex& region, const std::vector<std::string>& face) {
        for (const std::string& l : face) {
            if (!region.index_of(l)) return false;
        }
        return region.contains(region.face_of(face));
    };

    for (const Stress& cand : candidates) {
        const Stress omega_prime = relabel(cand, lk_u.labels());
        const auto eta = dc_preimage(lk_u, lk_basis, omega_prime);
        if (!eta) throw Error(ErrorCode::GenericityFailure, "derivative map on the link is not onto");
        bool eta_escapes = false;
        for (const Face& f : support_faces(lk_u, *eta)) {
            if (!in_region(st_v_in_lk, lk_u.labels_of(f))) eta_escapes = true;
        }
        if (!eta_escapes) continue;

        const Stress omega = lift(lk_u, p_prime, omega_prime, a, u);
        const Stress zeta_u = lift(lk_u, p_prime, *eta, a, u);
        if (!is_stress(st_u, q, zeta_u, StressKind::Linear) || relabel(apply_dc(zeta_u), omega.labels) != omega) {
            throw Error(ErrorCode::VerificationFailed, "lifted preimage fails on st(u)");
        }
        const auto solved_u = dc_preimage(st_u, st_u_basis, relabel(omega, st_u.labels()));
        if (!solved_u || *solved_u != relabel(zeta_u, st_u.labels())) {
            throw Error(ErrorCode::VerificationFailed, "derivative map on st(u) is not injective");
        }
        const auto zeta_v = dc_preimage(st_v, st_v_basis, relabel(omega, st_v.labels()));
        if (!zeta_v) throw Error(ErrorCode::GenericityFailure, "lifted stress has no preimage on st(v)");

        const Stress omega_bar =
            subtract(relabel(zeta_u, complex.labels()), relabel(*zeta_v, complex.labels()));
        if (omega_bar.is_zero() || !is_stress(complex, q, omega_bar, StressKind::Affine)) {
            throw Error(ErrorCode::VerificationFailed, "difference is not a nonzero affine stress");
        }
        std::optional<Face> escaping;
        for (const Face& f : support_faces(complex, omega_bar)) {
            const std::vector<std::string> face = complex.labels_of(f);
            if (!in_region(st_u, face) && !in_region(st_v, face)) {
                throw Error(ErrorCode::VerificationFailed, "support leaves st(u) and st(v)");
            }
            if (!escaping && f.contains(ui) && !in_region(st_v, face)) escaping = f;
        }
        if (!escaping) continue;
        return {omega_bar, omega_prime, *eta, *escaping, q};
    }
    throw Error(ErrorCode::GenericityFailure, "no candidate stress on st(v, lk u) escapes");
}

}  // namespace spherekit
