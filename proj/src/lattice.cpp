#include "ears/lattice.hpp"

#include "ears/exact_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ears {

IVec add(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IVec sub(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IVec neg(const IVec& a) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

IVec scale(const Int& k, const IVec& a) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
    return r;
}

std::string ivec_str(const IVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

IVec ivec_of(std::initializer_list<long long> xs) {
    IVec v;
    for (long long x : xs) v.push_back(Int(x));
    return v;
}

namespace {

bool is_zero_row(const IVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

// Extended gcd: returns (g, p, q) with p*a + q*b = g >= 0.
std::tuple<Int, Int, Int> egcd(Int a, Int b) {
    Int p0 = 1, q0 = 0, p1 = 0, q1 = 1;
    while (b != 0) {
        Int k = a / b;
        Int t = a - k * b;
        a = b;
        b = t;
        Int tp = p0 - k * p1, tq = q0 - k * q1;
        p0 = p1;
        q0 = q1;
        p1 = tp;
        q1 = tq;
    }
    if (a < 0) { a = -a; p0 = -p0; q0 = -q0; }
    return {a, p0, q0};
}

} // namespace

IMat hnf(IMat rows) {
    rows.erase(std::remove_if(rows.begin(), rows.end(), is_zero_row), rows.end());
    if (rows.empty()) return rows;
    const size_t n = rows[0].size();
    size_t r = 0;
    for (size_t col = 0; col < n && r < rows.size(); ++col) {
        // combine rows below r to put gcd of the column into row r
        size_t piv = r;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        for (size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            auto [g, p, q] = egcd(rows[r][col], rows[i][col]);
            Int ar = rows[r][col] / g, ai = rows[i][col] / g;
            for (size_t j = 0; j < n; ++j) {
                Int x = rows[r][j], y = rows[i][j];
                rows[r][j] = p * x + q * y;
                rows[i][j] = ar * y - ai * x;
            }
        }
        if (rows[r][col] < 0)
            for (size_t j = 0; j < n; ++j) rows[r][j] = -rows[r][j];
        // reduce entries above the pivot into [0, pivot)
        for (size_t i = 0; i < r; ++i) {
            Int k = rows[i][col] / rows[r][col];
            if (rows[i][col] - k * rows[r][col] < 0) k -= 1;
            if (k == 0) continue;
            for (size_t j = 0; j < n; ++j) rows[i][j] -= k * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

bool hnf_contains(const IMat& h, IVec v) {
    return hnf_coordinates(h, std::move(v)).has_value();
}

std::optional<IVec> hnf_coordinates(const IMat& h, IVec v) {
    IVec coords(h.size(), Int(0));
    for (size_t r = 0; r < h.size(); ++r) {
        size_t p = 0;
        while (p < h[r].size() && h[r][p] == 0) ++p;
        if (p == h[r].size()) continue;
        if (v[p] % h[r][p] != 0) return std::nullopt;
        Int k = v[p] / h[r][p];
        coords[r] = k;
        if (k != 0)
            for (size_t j = p; j < v.size(); ++j) v[j] -= k * h[r][j];
    }
    if (!is_zero_row(v)) return std::nullopt;
    return coords;
}

Subgroup subgroup_span(size_t dim, const IMat& generators) {
    for (const auto& g : generators)
        if (g.size() != dim) throw std::invalid_argument("subgroup_span: wrong vector length");
    return Subgroup(dim, generators);
}

std::vector<IVec> quotient_reps(const IMat& n_basis, const IMat& m_basis, size_t dim) {
    if (m_basis.size() != n_basis.size())
        throw std::invalid_argument("quotient_reps: ranks differ, quotient infinite");
    const size_t r = n_basis.size();
    if (r == 0) return {IVec(dim, Int(0))};
    // coordinates of m rows in the n basis
    IMat c;
    for (const auto& row : m_basis) {
        auto coords = hnf_coordinates(n_basis, row);
        if (!coords) throw std::invalid_argument("quotient_reps: M not inside N");
        c.push_back(*coords);
    }
    IMat h = hnf(c);
    if (h.size() != r) throw std::invalid_argument("quotient_reps: quotient infinite");
    std::vector<Int> diag(r);
    for (size_t i = 0; i < r; ++i) {
        size_t p = 0;
        while (h[i][p] == 0) ++p;
        if (p != i) throw std::invalid_argument("quotient_reps: quotient infinite");
        diag[i] = h[i][i];
    }
    std::vector<IVec> out;
    IVec digits(r, Int(0));
    while (true) {
        IVec v(dim, Int(0));
        for (size_t i = 0; i < r; ++i)
            if (digits[i] != 0) v = add(v, scale(digits[i], n_basis[i]));
        out.push_back(v);
        size_t i = 0;
        while (i < r) {
            digits[i] += 1;
            if (digits[i] < diag[i]) break;
            digits[i] = 0;
            ++i;
        }
        if (i == r) break;
    }
    return out;
}

IMat integer_kernel(const IMat& m) {
    if (m.empty()) return {};
    const size_t rows = m.size(), cols = m[0].size();
    // eliminate on [m | I]; kernel rows are those whose m-part becomes zero
    IMat aug(rows, IVec(cols + rows, Int(0)));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) aug[i][j] = m[i][j];
        aug[i][cols + i] = 1;
    }
    size_t r = 0;
    for (size_t col = 0; col < cols && r < rows; ++col) {
        size_t piv = r;
        while (piv < rows && aug[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(aug[piv], aug[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (aug[i][col] == 0) continue;
            auto [g, p, q] = egcd(aug[r][col], aug[i][col]);
            Int ar = aug[r][col] / g, ai = aug[i][col] / g;
            for (size_t j = 0; j < cols + rows; ++j) {
                Int x = aug[r][j], y = aug[i][j];
                aug[r][j] = p * x + q * y;
                aug[i][j] = ar * y - ai * x;
            }
        }
        ++r;
    }
    IMat kernel;
    for (size_t i = r; i < rows; ++i)
        kernel.push_back(IVec(aug[i].begin() + cols, aug[i].end()));
    return hnf(kernel);
}

IMat lattice_intersection(const IMat& a, const IMat& b, size_t dim) {
    if (a.empty() || b.empty()) return {};
    IMat stacked = a;
    for (const auto& row : b) stacked.push_back(row);
    IMat gens;
    for (const auto& k : integer_kernel(stacked)) {
        IVec v(dim, Int(0));
        for (size_t i = 0; i < a.size(); ++i)
            if (k[i] != 0) v = add(v, scale(k[i], a[i]));
        gens.push_back(v);
    }
    return hnf(gens);
}

Lattice::Lattice(size_t dim, IMat basis) : dim_(dim), basis_(std::move(basis)) {
    for (const auto& row : basis_)
        if (row.size() != dim_) throw std::invalid_argument("Lattice: wrong basis row length");
    hnf_ = hnf(basis_);
    if (hnf_.size() != basis_.size())
        throw std::invalid_argument("Lattice: basis rows are linearly dependent");
    standard_ = basis_.size() == dim_;
    if (standard_)
        for (size_t i = 0; i < dim_ && standard_; ++i)
            for (size_t j = 0; j < dim_ && standard_; ++j)
                if (basis_[i][j] != Int(i == j ? 1 : 0)) standard_ = false;
}

Lattice Lattice::standard(size_t dim) { return scaled(dim, 1); }

Lattice Lattice::scaled(size_t dim, long long c) {
    IMat b(dim, IVec(dim, Int(0)));
    for (size_t i = 0; i < dim; ++i) b[i][i] = c;
    return Lattice(dim, b);
}

std::optional<IVec> Lattice::coordinates(const IVec& v) const {
    if (standard_) return v;
    // solve x * basis = v over Q, then require integrality
    const size_t r = basis_.size(), n = dim_;
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(r));
    std::vector<Rational> b(n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < r; ++j) a[i][j] = Rational(basis_[j][i]);
        b[i] = Rational(v[i]);
    }
    // gaussian elimination on the (possibly non-square) system
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < r && row < n; ++col) {
        size_t piv = row;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) continue;
        std::swap(a[piv], a[row]);
        std::swap(b[piv], b[row]);
        Rational inv = a[row][col].inverse();
        for (size_t j = 0; j < r; ++j) a[row][j] *= inv;
        b[row] *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            Rational f = a[i][col];
            for (size_t j = 0; j < r; ++j) a[i][j] -= f * a[row][j];
            b[i] -= f * b[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (size_t i = row; i < n; ++i)
        if (!b[i].is_zero()) return std::nullopt;   // inconsistent: v outside the span
    IVec x(r, Int(0));
    for (size_t i = 0; i < pivot_col.size(); ++i) {
        if (!b[i].is_integer()) return std::nullopt;
        x[pivot_col[i]] = b[i].numerator();
    }
    return x;
}

CosetSet::CosetSet(Lattice ambient, std::vector<IVec> global_reps) : ambient_(std::move(ambient)) {
    IMat twob;
    for (const auto& row : ambient_.basis()) twob.push_back(scale(Int(2), row));
    two_hnf_ = hnf(twob);
    std::set<IVec> seen;
    for (const auto& g : global_reps) {
        auto coords = ambient_.coordinates(g);
        if (!coords) continue;   // outside the ambient lattice; validate() reports this
        IVec c01(coords->size());
        for (size_t i = 0; i < c01.size(); ++i) c01[i] = ((*coords)[i] % 2 + 2) % 2;
        if (!seen.insert(c01).second) continue;
        IVec global(ambient_.dim(), Int(0));
        for (size_t i = 0; i < c01.size(); ++i)
            if (c01[i] != 0) global = add(global, ambient_.basis()[i]);
        reps01_.push_back(c01);
        reps_global_.push_back(global);
    }
    // sort both lists together by the {0,1} form
    std::vector<size_t> order(reps01_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return reps01_[a] < reps01_[b]; });
    std::vector<IVec> r01, rg;
    for (size_t i : order) {
        r01.push_back(reps01_[i]);
        rg.push_back(reps_global_[i]);
    }
    reps01_ = std::move(r01);
    reps_global_ = std::move(rg);
    rep_lookup_ = std::set<IVec>(reps01_.begin(), reps01_.end());
}

bool CosetSet::contains(const IVec& v) const {
    if (v.size() != ambient_.dim()) throw std::invalid_argument("CosetSet: dimension mismatch");
    for (const auto& rep : reps_global_)
        if (hnf_contains(two_hnf_, sub(v, rep))) return true;
    return false;
}

bool CosetSet::contains_zero_coset() const {
    return !reps01_.empty() && is_zero_row(reps01_.front());
}

Semilattice::Semilattice(Lattice ambient, std::vector<IVec> reps)
    : ambient_(ambient), raw_reps_(std::move(reps)), cosets_(std::move(ambient), raw_reps_) {}

Semilattice Semilattice::full_lattice(Lattice ambient) {
    // S = L is the union of all cosets of 2L
    const size_t r = ambient.rank();
    std::vector<IVec> reps;
    for (size_t mask = 0; mask < (size_t{1} << r); ++mask) {
        IVec v(ambient.dim(), Int(0));
        for (size_t i = 0; i < r; ++i)
            if (mask & (size_t{1} << i)) v = add(v, ambient.basis()[i]);
        reps.push_back(v);
    }
    return Semilattice(std::move(ambient), reps);
}

Semilattice Semilattice::standard(size_t dim) {
    return full_lattice(Lattice::standard(dim));
}

Semilattice Semilattice::two_standard(size_t dim) {
    return full_lattice(Lattice::scaled(dim, 2));
}

size_t Semilattice::index() const {
    size_t n = cosets_.coset_count();
    return cosets_.contains_zero_coset() ? n - 1 : n;
}

Subgroup Semilattice::span() const {
    IMat gens = cosets_.reps_global();
    for (const auto& row : ambient_.basis()) gens.push_back(scale(Int(2), row));
    return Subgroup(ambient_.dim(), gens);
}

std::vector<std::string> Semilattice::validate() const {
    std::vector<std::string> out;
    // every raw representative must live in the ambient lattice
    for (const auto& g : raw_reps_)
        if (!ambient_.coordinates(g))
            out.push_back("rep " + ivec_str(g) + " is not in the ambient lattice");
    if (!cosets_.contains_zero_coset())
        out.push_back("zero coset missing (tau_0 = 0 required)");
    // duplicates mod 2L among the raw reps
    std::set<IVec> seen;
    for (const auto& g : raw_reps_) {
        auto coords = ambient_.coordinates(g);
        if (!coords) continue;
        IVec c01(coords->size());
        for (size_t i = 0; i < c01.size(); ++i) c01[i] = ((*coords)[i] % 2 + 2) % 2;
        if (!seen.insert(c01).second)
            out.push_back("rep " + ivec_str(g) + " duplicates an earlier coset mod 2L");
    }
    // <S> must be the whole ambient lattice
    if (!(span() == Subgroup(ambient_.dim(), ambient_.basis())))
        out.push_back("<S> is a proper subgroup of the ambient lattice");
    return out;
}

CosetSet sumset_cosets(const CosetSet& s, const CosetSet& t) {
    if (!(s.ambient() == t.ambient()))
        throw std::invalid_argument("sumset_cosets: ambient lattices differ");
    std::vector<IVec> sums;
    for (const auto& a : s.reps_global())
        for (const auto& b : t.reps_global()) sums.push_back(add(a, b));
    return CosetSet(s.ambient(), std::move(sums));
}

CosetSet sumset_cosets(const Semilattice& s, const Semilattice& t) {
    return sumset_cosets(s.to_coset_set(), t.to_coset_set());
}

std::vector<std::string> interaction_check(const Semilattice& s, const Semilattice& l) {
    std::vector<std::string> out;
    if (s.dim() != l.dim()) {
        out.push_back("ambient ranks differ");
        return out;
    }
    // <L> + S = S, checked generator-by-generator on cosets of 2<ambient of S>
    const Subgroup l_span = l.span();
    for (const auto& g : l_span.basis())
        for (const auto& tau : s.reps_global())
            if (!s.contains(add(g, tau)))
                out.push_back("<L>+S=S fails: " + ivec_str(g) + " + " + ivec_str(tau) +
                              " leaves S");
    // 2<S> + L = L
    const Subgroup s_span = s.span();
    for (const auto& g : s_span.basis())
        for (const auto& tau : l.reps_global())
            if (!l.contains(add(scale(Int(2), g), tau)))
                out.push_back("2<S>+L=L fails: 2*" + ivec_str(g) + " + " + ivec_str(tau) +
                              " leaves L");
    return out;
}

} // namespace ears
