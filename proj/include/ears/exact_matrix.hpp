#pragma once

#include "ears/cyclotomic.hpp"
#include "ears/laurent.hpp"
#include "ears/rational.hpp"

#include <stdexcept>
#include <vector>

namespace ears {

namespace detail {

inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
inline Cyc exact_div(const Cyc& a, const Cyc& b) { return a / b; }
inline LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    return a.divide_exact(b);
}

inline Rational ring_one(const Rational&) { return Rational(1); }
inline Cyc ring_one(const Cyc& x) { return Cyc(x.order(), Rational(1)); }
inline LaurentPoly ring_one(const LaurentPoly& x) {
    return LaurentPoly::constant(x.nvars(), Rational(1));
}

} // namespace detail

/// Dense rectangular matrix over an exact scalar domain (Rational, Cyc, or
/// LaurentPoly). Rank is computed by fraction-free Bareiss elimination: the
/// only divisions are by the previous pivot and those are exact in any
/// integral domain, so no fraction field is ever materialized.
template <typename S>
class ExactMatrix {
public:
    ExactMatrix(size_t rows, size_t cols, const S& zero = S())
        : rows_(rows), cols_(cols), a_(rows, std::vector<S>(cols, zero)) {}

    static ExactMatrix from_rows(const std::vector<std::vector<S>>& rows) {
        if (rows.empty()) return ExactMatrix(0, 0);
        ExactMatrix m(rows.size(), rows[0].size(), rows[0][0]);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_)
                throw std::invalid_argument("ExactMatrix: ragged rows");
            m.a_[i] = rows[i];
        }
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    S& at(size_t i, size_t j) { return a_[i][j]; }
    const S& at(size_t i, size_t j) const { return a_[i][j]; }

    ExactMatrix transposed() const {
        ExactMatrix t(cols_, rows_, rows_ && cols_ ? a_[0][0] : S());
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t.a_[j][i] = a_[i][j];
        return t;
    }

    size_t rank() const {
        if (rows_ == 0 || cols_ == 0) return 0;
        std::vector<std::vector<S>> w = a_;
        S prev_pivot = detail::ring_one(w[0][0]);
        size_t r = 0;
        for (size_t col = 0; col < cols_ && r < rows_; ++col) {
            size_t piv = r;
            while (piv < rows_ && w[piv][col].is_zero()) ++piv;
            if (piv == rows_) continue;
            std::swap(w[piv], w[r]);
            for (size_t i = r + 1; i < rows_; ++i) {
                for (size_t j = col + 1; j < cols_; ++j) {
                    S num = w[r][col] * w[i][j] - w[i][col] * w[r][j];
                    w[i][j] = detail::exact_div(num, prev_pivot);
                }
                w[i][col] = zero_like(w[r][col]);
            }
            prev_pivot = w[r][col];
            ++r;
        }
        return r;
    }

private:
    static S zero_like(const S& x) { return x - x; }

    size_t rows_, cols_;
    std::vector<std::vector<S>> a_;
};

/// Exact rank over the scalar's fraction field.
template <typename S>
size_t exact_rank(const ExactMatrix<S>& m) {
    return m.rank();
}

} // namespace ears
