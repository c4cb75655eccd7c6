#include "ears/finroots.hpp"

#include "ears/exact_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ears {

QVec qvec_add(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVec qvec_sub(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVec qvec_neg(const QVec& a) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

QVec qvec_scale(const Rational& s, const QVec& a) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

bool qvec_is_zero(const QVec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

std::string qvec_str(const QVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i].str();
    }
    os << ")";
    return os.str();
}

std::optional<QVec> rational_coordinates(const std::vector<QVec>& rows, const QVec& v) {
    const size_t r = rows.size();
    if (r == 0) return qvec_is_zero(v) ? std::optional<QVec>(QVec{}) : std::nullopt;
    const size_t n = rows[0].size();
    // solve x * rows = v by eliminating the (n x r) transposed system
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(r));
    std::vector<Rational> b(n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < r; ++j) a[i][j] = rows[j][i];
        b[i] = v[i];
    }
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
        if (!b[i].is_zero()) return std::nullopt;
    QVec x(r, Rational(0));
    for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
    return x;
}

Rational FiniteRootSystem::form(const QVec& a, const QVec& b) const {
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return scale_ * s;
}

bool FiniteRootSystem::is_short(const QVec& v) const {
    return std::find(short_.begin(), short_.end(), v) != short_.end();
}

bool FiniteRootSystem::is_long(const QVec& v) const {
    return std::find(long_.begin(), long_.end(), v) != long_.end();
}

bool FiniteRootSystem::is_positive(const QVec& v) const {
    auto it = base_coords_.find(v);
    if (it == base_coords_.end()) return false;
    for (const Int& c : it->second)
        if (c < 0) return false;
    return true;
}

QVec FiniteRootSystem::coroot(const QVec& alpha) const {
    Rational n = form(alpha, alpha);
    if (n.is_zero()) throw std::domain_error("coroot: isotropic input");
    return qvec_scale(Rational(2) / n, alpha);
}

IVec FiniteRootSystem::base_coordinates(const QVec& root) const {
    auto it = base_coords_.find(root);
    if (it == base_coords_.end()) throw std::invalid_argument("base_coordinates: not a root");
    return it->second;
}

QVec FiniteRootSystem::from_base_coordinates(const IVec& coords) const {
    QVec v(ambient_, Rational(0));
    for (size_t i = 0; i < coords.size(); ++i)
        v = qvec_add(v, qvec_scale(Rational(coords[i]), base_[i]));
    return v;
}

void FiniteRootSystem::finish() {
    std::sort(roots_.begin(), roots_.end());
    lookup_ = std::set<QVec>(roots_.begin(), roots_.end());
    // short / long split: short = minimal squared length
    Rational min_len, max_len;
    bool first = true;
    for (const auto& r : roots_) {
        Rational len = form(r, r);
        if (first || len < min_len) min_len = len;
        if (first || len > max_len) max_len = len;
        first = false;
    }
    for (const auto& r : roots_) {
        if (form(r, r) == min_len) short_.push_back(r);
        else long_.push_back(r);
    }
    if (min_len == max_len) long_.clear();   // simply laced: every root is short
    for (const auto& r : roots_) {
        auto c = rational_coordinates(base_, r);
        if (!c) throw std::logic_error("root outside base span");
        IVec ic(c->size());
        for (size_t i = 0; i < c->size(); ++i) {
            if (!(*c)[i].is_integer()) throw std::logic_error("non-integral base coordinates");
            ic[i] = (*c)[i].numerator();
        }
        base_coords_[r] = ic;
        bool pos = true;
        for (const Int& x : ic)
            if (x < 0) pos = false;
        if (pos) positive_.push_back(r);
    }
}

namespace {

QVec eps(size_t dim, size_t i, const Rational& c = Rational(1)) {
    QVec v(dim, Rational(0));
    v[i] = c;
    return v;
}

std::vector<QVec> e8_roots() {
    std::vector<QVec> out;
    for (size_t i = 0; i < 8; ++i)
        for (size_t j = i + 1; j < 8; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) {
                    QVec v(8, Rational(0));
                    v[i] = si;
                    v[j] = sj;
                    out.push_back(v);
                }
    for (int mask = 0; mask < 256; ++mask) {
        int bits = __builtin_popcount(mask);
        if (bits % 2 != 0) continue;
        QVec v(8, Rational(0));
        for (size_t i = 0; i < 8; ++i) v[i] = Rational((mask >> i) & 1 ? -1 : 1, 2);
        out.push_back(v);
    }
    return out;
}

std::vector<QVec> e8_base() {
    QVec a1(8, Rational(-1, 2));
    a1[0] = Rational(1, 2);
    a1[7] = Rational(1, 2);
    QVec a2 = qvec_add(eps(8, 0), eps(8, 1));
    std::vector<QVec> base{a1, a2};
    for (size_t i = 0; i < 6; ++i) base.push_back(qvec_sub(eps(8, i + 1), eps(8, i)));
    return base;   // a3 = e2-e1, a4 = e3-e2, ..., a8 = e7-e6
}

// Basis of { x : dot(x, row) = 0 for every row }.
std::vector<QVec> orthogonal_complement(const std::vector<QVec>& rows, size_t n) {
    std::vector<std::vector<Rational>> a;
    for (const auto& row : rows) a.push_back(row);
    std::vector<size_t> pivot_of_col(n, SIZE_MAX);
    size_t r = 0;
    for (size_t col = 0; col < n && r < a.size(); ++col) {
        size_t piv = r;
        while (piv < a.size() && a[piv][col].is_zero()) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[r]);
        Rational inv = a[r][col].inverse();
        for (size_t j = 0; j < n; ++j) a[r][j] *= inv;
        for (size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][col].is_zero()) continue;
            Rational f = a[i][col];
            for (size_t j = 0; j < n; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_of_col[col] = r;
        ++r;
    }
    std::vector<QVec> out;
    for (size_t col = 0; col < n; ++col) {
        if (pivot_of_col[col] != SIZE_MAX) continue;
        QVec w(n, Rational(0));
        w[col] = 1;
        for (size_t c = 0; c < n; ++c)
            if (pivot_of_col[c] != SIZE_MAX) w[c] = -a[pivot_of_col[c]][col];
        out.push_back(w);
    }
    return out;
}

} // namespace

FiniteRootSystem build_finite(char type, int rank) {
    FiniteRootSystem r;
    r.type_ = type;
    r.rank_ = rank;
    auto invalid = [&] {
        throw std::invalid_argument(std::string("build_finite: invalid pair (") + type + "," +
                                    std::to_string(rank) + ")");
    };
    switch (type) {
    case 'A': {
        if (rank < 1) invalid();
        const size_t n = rank + 1;
        r.ambient_ = n;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (i != j) r.roots_.push_back(qvec_sub(eps(n, i), eps(n, j)));
        for (size_t i = 0; i + 1 < n; ++i) r.base_.push_back(qvec_sub(eps(n, i), eps(n, i + 1)));
        break;
    }
    case 'B': {
        if (rank < 2) invalid();
        const size_t n = rank;
        r.ambient_ = n;
        r.scale_ = 2;   // short roots +-e_i get squared length 2
        for (size_t i = 0; i < n; ++i) {
            r.roots_.push_back(eps(n, i));
            r.roots_.push_back(qvec_neg(eps(n, i)));
        }
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                for (int si : {1, -1})
                    for (int sj : {1, -1}) {
                        QVec v(n, Rational(0));
                        v[i] = si;
                        v[j] = sj;
                        r.roots_.push_back(v);
                    }
        for (size_t i = 0; i + 1 < n; ++i) r.base_.push_back(qvec_sub(eps(n, i), eps(n, i + 1)));
        r.base_.push_back(eps(n, n - 1));
        break;
    }
    case 'C': {
        if (rank < 3) invalid();
        const size_t n = rank;
        r.ambient_ = n;
        for (size_t i = 0; i < n; ++i) {
            r.roots_.push_back(eps(n, i, Rational(2)));
            r.roots_.push_back(eps(n, i, Rational(-2)));
        }
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                for (int si : {1, -1})
                    for (int sj : {1, -1}) {
                        QVec v(n, Rational(0));
                        v[i] = si;
                        v[j] = sj;
                        r.roots_.push_back(v);
                    }
        for (size_t i = 0; i + 1 < n; ++i) r.base_.push_back(qvec_sub(eps(n, i), eps(n, i + 1)));
        r.base_.push_back(eps(n, n - 1, Rational(2)));
        break;
    }
    case 'D': {
        if (rank < 4) invalid();
        const size_t n = rank;
        r.ambient_ = n;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                for (int si : {1, -1})
                    for (int sj : {1, -1}) {
                        QVec v(n, Rational(0));
                        v[i] = si;
                        v[j] = sj;
                        r.roots_.push_back(v);
                    }
        for (size_t i = 0; i + 1 < n; ++i) r.base_.push_back(qvec_sub(eps(n, i), eps(n, i + 1)));
        r.base_.push_back(qvec_add(eps(n, n - 2), eps(n, n - 1)));
        break;
    }
    case 'E': {
        if (rank < 6 || rank > 8) invalid();
        r.ambient_ = 8;
        auto all = e8_roots();
        auto base8 = e8_base();
        r.base_ = std::vector<QVec>(base8.begin(), base8.begin() + rank);
        if (rank == 8) {
            r.roots_ = all;
        } else {
            for (const auto& v : all)
                if (rational_coordinates(r.base_, v)) r.roots_.push_back(v);
        }
        break;
    }
    case 'F': {
        if (rank != 4) invalid();
        r.ambient_ = 4;
        r.scale_ = 2;
        for (size_t i = 0; i < 4; ++i) {
            r.roots_.push_back(eps(4, i));
            r.roots_.push_back(qvec_neg(eps(4, i)));
        }
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = i + 1; j < 4; ++j)
                for (int si : {1, -1})
                    for (int sj : {1, -1}) {
                        QVec v(4, Rational(0));
                        v[i] = si;
                        v[j] = sj;
                        r.roots_.push_back(v);
                    }
        for (int mask = 0; mask < 16; ++mask) {
            QVec v(4);
            for (size_t i = 0; i < 4; ++i) v[i] = Rational((mask >> i) & 1 ? -1 : 1, 2);
            r.roots_.push_back(v);
        }
        r.base_ = {qvec_sub(eps(4, 1), eps(4, 2)), qvec_sub(eps(4, 2), eps(4, 3)), eps(4, 3),
                   {Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2)}};
        break;
    }
    case 'G': {
        if (rank != 2) invalid();
        r.ambient_ = 3;
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j)
                if (i != j) r.roots_.push_back(qvec_sub(eps(3, i), eps(3, j)));
        for (size_t i = 0; i < 3; ++i)
            for (int s : {1, -1}) {
                QVec v(3, Rational(-s));
                v[i] = Rational(2 * s);
                r.roots_.push_back(v);
            }
        QVec a2(3, Rational(1));
        a2[0] = Rational(-2);
        r.base_ = {qvec_sub(eps(3, 0), eps(3, 1)), a2};
        break;
    }
    default:
        invalid();
    }
    r.finish();
    return r;
}

RootString root_string(const FiniteRootSystem& r, const QVec& alpha, const QVec& beta) {
    if (r.form(alpha, alpha).is_zero()) throw std::domain_error("root_string: isotropic alpha");
    auto member = [&](const QVec& v) { return qvec_is_zero(v) || r.is_root(v); };
    RootString s;
    QVec v = qvec_sub(beta, alpha);
    while (s.down < 8 && member(v)) {
        ++s.down;
        v = qvec_sub(v, alpha);
    }
    v = qvec_add(beta, alpha);
    while (s.up < 8 && member(v)) {
        ++s.up;
        v = qvec_add(v, alpha);
    }
    s.pairing = r.form(beta, r.coroot(alpha));
    if (s.pairing != Rational(s.down - s.up))
        throw std::logic_error("root string law d - u = (beta, alpha^vee) violated");
    return s;
}

QVec DiagramAutomorphism::apply(const QVec& v) const {
    const size_t n = matrix_.size();
    QVec out(n, Rational(0));
    for (size_t j = 0; j < n; ++j) {
        if (v[j].is_zero()) continue;
        for (size_t i = 0; i < n; ++i) out[i] += matrix_[j][i] * v[j];
    }
    return out;
}

QVec DiagramAutomorphism::apply_pow(const QVec& v, int k) const {
    k = ((k % order_) + order_) % order_;
    QVec out = v;
    for (int i = 0; i < k; ++i) out = apply(out);
    return out;
}

DiagramAutomorphism diagram_automorphism(const FiniteRootSystem& r, int order) {
    std::vector<size_t> perm(r.base().size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    const int l = r.rank();
    bool ok = true;
    if (order == 1) {
        // identity
    } else if (order == 2) {
        switch (r.type_label()) {
        case 'A':
            if (l < 2) ok = false;
            for (int i = 0; i < l; ++i) perm[i] = static_cast<size_t>(l - 1 - i);
            break;
        case 'D':
            std::swap(perm[l - 2], perm[l - 1]);
            break;
        case 'E':
            if (l != 6) { ok = false; break; }
            // Bourbaki numbering: a1 <-> a6, a3 <-> a5; a2, a4 fixed
            std::swap(perm[0], perm[5]);
            std::swap(perm[2], perm[4]);
            break;
        default:
            ok = false;
        }
    } else if (order == 3) {
        if (r.type_label() == 'D' && l == 4) {
            perm = {2, 1, 3, 0};   // a1 -> a3 -> a4 -> a1, a2 fixed
        } else {
            ok = false;
        }
    } else {
        ok = false;
    }
    if (!ok)
        throw std::invalid_argument("diagram_automorphism: inadmissible (type, order) pair");

    DiagramAutomorphism d;
    d.host_ = &r;
    d.order_ = order;
    d.perm_ = perm;

    // Extend linearly: the map permutes the base and fixes the orthogonal
    // complement of the base span, which keeps it form-preserving.
    const size_t n = r.ambient_dim();
    std::vector<QVec> full = r.base(), images;
    for (size_t i = 0; i < perm.size(); ++i) images.push_back(r.base()[perm[i]]);
    for (const auto& w : orthogonal_complement(r.base(), n)) {
        full.push_back(w);
        images.push_back(w);
    }
    if (full.size() != n) throw std::logic_error("diagram_automorphism: basis extension failed");
    d.matrix_.assign(n, QVec(n, Rational(0)));
    for (size_t j = 0; j < n; ++j) {
        auto c = rational_coordinates(full, eps(n, j));
        if (!c) throw std::logic_error("diagram_automorphism: solve failed");
        QVec img(n, Rational(0));
        for (size_t k = 0; k < n; ++k)
            if (!(*c)[k].is_zero()) img = qvec_add(img, qvec_scale((*c)[k], images[k]));
        d.matrix_[j] = img;   // column j of the map, stored as row j
    }

    // sanity: sigma^order = id and sigma permutes the root set
    for (const auto& root : r.roots()) {
        if (!r.is_root(d.apply(root)))
            throw std::logic_error("diagram_automorphism: image is not a root");
        if (d.apply_pow(root, order) != root)
            throw std::logic_error("diagram_automorphism: order check failed");
    }
    return d;
}

} // namespace ears
