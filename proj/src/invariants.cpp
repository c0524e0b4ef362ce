#include "spherekit/invariants.hpp"

#include <algorithm>

#include "spherekit/error.hpp"

namespace spherekit {

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

std::vector<Integer> h_from_f(const std::vector<Integer>& f, int d) {
    std::vector<Integer> h(static_cast<std::size_t>(d + 1));
    for (int j = 0; j <= d; ++j) {
        Integer acc = 0;
        for (int i = 0; i <= j; ++i) {
            const Integer term = binomial(d - i, d - j) * f[static_cast<std::size_t>(i)];
            if ((j - i) % 2 == 0) acc += term;
            else acc -= term;
        }
        h[static_cast<std::size_t>(j)] = acc;
    }
    return h;
}

std::vector<Integer> f_from_h(const std::vector<Integer>& h, int d) {
    std::vector<Integer> f(static_cast<std::size_t>(d + 1));
    for (int j = 0; j <= d; ++j) {
        Integer acc = 0;
        for (int i = 0; i <= j; ++i) acc += binomial(d - i, j - i) * h[static_cast<std::size_t>(i)];
        f[static_cast<std::size_t>(j)] = acc;
    }
    return f;
}

Integer g_number(const std::vector<Integer>& h, int j) {
    if (j == 0) return 1;
    return h.at(static_cast<std::size_t>(j)) - h.at(static_cast<std::size_t>(j - 1));
}

std::vector<Integer> convolve(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Integer> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

InvariantVectors compute_vectors(const Complex& complex) {
    if (!complex.is_pure()) throw Error(ErrorCode::NotPure, "invariant vectors need a pure complex");
    InvariantVectors out;
    const int d = complex.dim() + 1;
    out.d = d;
    for (int i = -1; i < d; ++i) out.f_vec.emplace_back(static_cast<unsigned long>(complex.num_faces(i)));
    out.h_vec = h_from_f(out.f_vec, d);
    for (int j = 0; j <= (d + 1) / 2; ++j) out.g_vec.push_back(g_number(out.h_vec, j));
    const auto& missing = complex.missing_faces();
    for (int i = 1; i <= d; ++i) {
        const std::size_t count =
            static_cast<std::size_t>(i) < missing.size() ? missing[static_cast<std::size_t>(i)].size() : 0;
        out.m_vec.emplace_back(static_cast<unsigned long>(count));
    }
    return out;
}

Integer mcmullen_residual(const Complex& complex, int k) {
    const InvariantVectors vec = compute_vectors(complex);
    const int d = vec.d;
    if (k < 0 || k > (d - 1) / 2) {
        throw Error(ErrorCode::KOutOfRange, "k=" + std::to_string(k) + " outside 0.." + std::to_string((d - 1) / 2));
    }
    Integer lhs = 0;
    for (int v = 0; v < complex.num_vertices(); ++v) {
        const Complex lk = link(complex, Face::singleton(v));
        const InvariantVectors lv = compute_vectors(lk);
        lhs += g_number(lv.h_vec, k);
    }
    const Integer rhs = (k + 1) * g_number(vec.h_vec, k + 1) + (d + 1 - k) * g_number(vec.h_vec, k);
    return lhs - rhs;
}

int s_class(const Complex& complex) {
    const auto& missing = complex.missing_faces();
    for (int i = static_cast<int>(missing.size()) - 1; i > 0; --i) {
        if (!missing[static_cast<std::size_t>(i)].empty()) return i;
    }
    return 0;
}

std::vector<ReportClause> glbt_report(const Complex& complex) { return glbt_report(compute_vectors(complex)); }

std::vector<ReportClause> glbt_report(const InvariantVectors& v) {
    const int d = v.d;
    std::vector<ReportClause> out;
    auto g = [&](int j) { return g_number(v.h_vec, j); };
    auto show = [](const char* name, int idx, const Integer& val) {
        return std::string(name) + "_" + std::to_string(idx) + "=" + val.get_str();
    };

    for (int k = 0; k <= d / 2; ++k) {
        out.push_back({"g_nonnegative", k, g(k) >= 0, show("g", k, g(k))});
    }
    if (d >= 4) {
        for (int k = 1; k <= (d + 1) / 2 - 1; ++k) {
            out.push_back({"nagel_g_ge_m", k, g(k) >= v.m(d - k), show("g", k, g(k)) + " " + show("m", d - k, v.m(d - k))});
        }
    }
    for (int k = 1; k < d / 2; ++k) {
        if (g(k) == 1) {
            bool ok = true;
            std::string witness = show("g", k, g(k));
            for (int j = k + 1; j <= d / 2; ++j) {
                if (g(j) > 1) ok = false;
                witness += " " + show("g", j, g(j));
            }
            out.push_back({"macaulay_g_le_1_after_1", k, ok, witness});
        } else if (g(k) == 0) {
            bool ok = true;
            std::string witness = show("g", k, g(k));
            for (int j = k + 1; j <= d / 2; ++j) {
                if (g(j) != 0) ok = false;
                witness += " " + show("g", j, g(j));
            }
            out.push_back({"macaulay_zero_after_0", k, ok, witness});
        }
    }
    if (d >= 4) {
        for (int k = 1; k < d / 2; ++k) {
            if (g(k) != 1) continue;
            const Integer& m = v.m(d - k);
            out.push_back({"corollary_m_le_1", k, m <= 1, show("g", k, g(k)) + " " + show("m", d - k, m)});
            out.push_back({"corollary_m_eq_1_iff_next_g_zero", k, (m == 1) == (g(k + 1) == 0),
                           show("m", d - k, m) + " " + show("g", k + 1, g(k + 1))});
        }
    }
    return out;
}

}  // namespace spherekit
