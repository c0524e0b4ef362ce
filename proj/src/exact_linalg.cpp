#include "spherekit/exact_linalg.hpp"

#include <algorithm>
#include <utility>

#include "spherekit/error.hpp"

namespace spherekit {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
        throw Error(ErrorCode::ParseError, "not a rational number: '" + text + "'");
    }
    q.canonicalize();
    return q;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
    RationalMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

RationalVector RationalMatrix::multiply(const RationalVector& v) const {
    RationalVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            const Rational& a = (*this)(r, c);
            if (sgn(a) != 0 && sgn(v[c]) != 0) acc += a * v[c];
        }
        out[r] = acc;
    }
    return out;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

namespace {

using IntRow = std::vector<Integer>;

IntRow clear_denominators(const RationalMatrix& m, std::size_t r) {
    Integer scale = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (sgn(m(r, c)) != 0) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    IntRow row(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (sgn(m(r, c)) != 0) row[c] = m(r, c).get_num() * (scale / m(r, c).get_den());
    }
    return row;
}

void remove_content(IntRow& row, std::size_t from) {
    Integer g = 0;
    for (std::size_t c = from; c < row.size(); ++c) {
        if (sgn(row[c]) != 0) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[c].get_mpz_t());
            if (g == 1) return;
        }
    }
    if (g > 1) {
        for (std::size_t c = from; c < row.size(); ++c) {
            if (sgn(row[c]) != 0) mpz_divexact(row[c].get_mpz_t(), row[c].get_mpz_t(), g.get_mpz_t());
        }
    }
}

// Fraction-free forward elimination on integer rows. Each update
// row_i ← p·row_i − a·row_p is followed by dividing out the row content.
// The pivot in each column is the candidate entry of smallest bit length.
std::pair<std::vector<IntRow>, std::vector<std::size_t>> integer_echelon(const RationalMatrix& m) {
    std::vector<IntRow> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        rows.push_back(clear_denominators(m, r));
        remove_content(rows.back(), 0);
    }
    std::vector<std::size_t> pivots;
    std::size_t top = 0;
    for (std::size_t c = 0; c < m.cols() && top < rows.size(); ++c) {
        std::size_t best = rows.size();
        std::size_t best_bits = 0;
        for (std::size_t r = top; r < rows.size(); ++r) {
            if (sgn(rows[r][c]) == 0) continue;
            const std::size_t bits = mpz_sizeinbase(rows[r][c].get_mpz_t(), 2);
            if (best == rows.size() || bits < best_bits) {
                best = r;
                best_bits = bits;
            }
        }
        if (best == rows.size()) continue;
        std::swap(rows[top], rows[best]);
        const IntRow& p = rows[top];
        for (std::size_t r = top + 1; r < rows.size(); ++r) {
            IntRow& row = rows[r];
            if (sgn(row[c]) == 0) continue;
            const Integer g = gcd(p[c], row[c]);
            const Integer mp = p[c] / g;
            const Integer mr = row[c] / g;
            for (std::size_t j = c + 1; j < row.size(); ++j) {
                const bool row_nz = sgn(row[j]) != 0;
                const bool piv_nz = sgn(p[j]) != 0;
                if (!row_nz && !piv_nz) continue;
                if (row_nz) row[j] *= mp;
                if (piv_nz) row[j] -= mr * p[j];
            }
            row[c] = 0;
            remove_content(row, c + 1);
        }
        pivots.push_back(c);
        ++top;
    }
    rows.resize(top);
    return {std::move(rows), std::move(pivots)};
}

}  // namespace

Echelon row_reduce(const RationalMatrix& m) {
    auto [rows, pivots] = integer_echelon(m);
    const std::size_t rk = pivots.size();
    // Fraction-free back substitution, bottom pivot first; each row is divided
    // by its pivot entry only at the end.
    for (std::size_t r = rk; r-- > 0;) {
        const std::size_t pc = pivots[r];
        const IntRow& p = rows[r];
        for (std::size_t above = 0; above < r; ++above) {
            IntRow& row = rows[above];
            if (sgn(row[pc]) == 0) continue;
            const Integer g = gcd(p[pc], row[pc]);
            const Integer mp = p[pc] / g;
            const Integer mr = row[pc] / g;
            const std::size_t start = pivots[above];
            for (std::size_t j = start; j < row.size(); ++j) {
                const bool row_nz = sgn(row[j]) != 0;
                const bool piv_nz = j >= pc && sgn(p[j]) != 0;
                if (!row_nz && !piv_nz) continue;
                if (row_nz && mp != 1) row[j] *= mp;
                if (piv_nz) row[j] -= mr * p[j];
            }
            remove_content(row, start);
        }
    }
    Echelon out{RationalMatrix(rk, m.cols()), pivots};
    for (std::size_t r = 0; r < rk; ++r) {
        const Integer& lead = rows[r][pivots[r]];
        for (std::size_t c = pivots[r]; c < m.cols(); ++c) {
            if (sgn(rows[r][c]) != 0) {
                Rational& x = out.reduced(r, c);
                x = Rational(rows[r][c], lead);
                x.canonicalize();
            }
        }
    }
    return out;
}

std::size_t rank(const RationalMatrix& m) { return integer_echelon(m).second.size(); }

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
    const Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;
    std::vector<RationalVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RationalVector v(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
        const auto first = std::find_if(v.begin(), v.end(), [](const Rational& x) { return sgn(x) != 0; });
        const Rational lead = *first;
        if (lead != 1) {
            for (Rational& x : v) x /= lead;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b) {
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    const Echelon e = row_reduce(aug);
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
    RationalVector x(m.cols());
    for (std::size_t r = 0; r < e.rank(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
    return x;
}

std::vector<RationalVector> canonical_basis(const std::vector<RationalVector>& vectors, std::size_t length) {
    if (vectors.empty()) return {};
    const Echelon e = row_reduce(RationalMatrix::from_rows(vectors, length));
    std::vector<RationalVector> out;
    out.reserve(e.rank());
    for (std::size_t r = 0; r < e.rank(); ++r) out.push_back(e.reduced.row(r));
    return out;
}

bool is_zero(const RationalVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

}  // namespace spherekit
