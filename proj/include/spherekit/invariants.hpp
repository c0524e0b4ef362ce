#pragma once

#include <string>
#include <vector>

#include "spherekit/complex.hpp"
#include "spherekit/exact_linalg.hpp"

namespace spherekit {

/// Face, h-, g- and missing-face numbers of a pure (d−1)-dimensional complex.
struct InvariantVectors {
    int d = 0;
    std::vector<Integer> f_vec;  // f_{-1}, f_0, ..., f_{d-1}
    std::vector<Integer> h_vec;  // h_0, ..., h_d
    std::vector<Integer> g_vec;  // g_0, ..., g_{⌈d/2⌉}
    std::vector<Integer> m_vec;  // m_1, ..., m_d

    const Integer& f(int i) const { return f_vec.at(static_cast<std::size_t>(i + 1)); }
    const Integer& h(int j) const { return h_vec.at(static_cast<std::size_t>(j)); }
    const Integer& g(int j) const { return g_vec.at(static_cast<std::size_t>(j)); }
    const Integer& m(int i) const { return m_vec.at(static_cast<std::size_t>(i - 1)); }
};

Integer binomial(long n, long k);

std::vector<Integer> h_from_f(const std::vector<Integer>& f, int d);
std::vector<Integer> f_from_h(const std::vector<Integer>& h, int d);
/// g_j = h_j − h_{j−1} for 1 ≤ j ≤ d, g_0 = 1.
Integer g_number(const std::vector<Integer>& h, int j);
std::vector<Integer> convolve(const std::vector<Integer>& a, const std::vector<Integer>& b);

InvariantVectors compute_vectors(const Complex& complex);

/// Σ_v g_k(lk v) − (k+1)·g_{k+1} − (d+1−k)·g_k, which vanishes for every pure
/// complex and 0 ≤ k ≤ ⌊(d−1)/2⌋.
Integer mcmullen_residual(const Complex& complex, int k);

/// Largest dimension of a missing face, or 0 if there is none.
int s_class(const Complex& complex);

struct ReportClause {
    std::string name;
    int k = 0;
    bool passed = true;
    std::string witness;
};

/// Inequalities and implications among g- and m-numbers that hold on every
/// homology sphere: nonnegativity, g_k ≥ m_{d−k}, the Macaulay bounds after
/// g_k ∈ {0, 1}, and the m_{d−k} ≤ 1 corollary for g_k = 1.
std::vector<ReportClause> glbt_report(const Complex& complex);
std::vector<ReportClause> glbt_report(const InvariantVectors& vectors);

}  // namespace spherekit
