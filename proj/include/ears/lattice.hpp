#pragma once

#include "ears/rational.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ears {

using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;

/// Canonical row Hermite normal form of the integer row span: echelon shape,
/// positive pivots, entries above each pivot reduced into [0, pivot).
/// Zero rows are dropped, so equal spans give equal matrices.
IMat hnf(IMat rows);

/// Membership of v in the row span of an HNF basis.
bool hnf_contains(const IMat& h, IVec v);

/// Integer coordinates of v in the rows of an HNF basis, when they exist.
std::optional<IVec> hnf_coordinates(const IMat& h, IVec v);

IVec add(const IVec& a, const IVec& b);
IVec sub(const IVec& a, const IVec& b);
IVec neg(const IVec& a);
IVec scale(const Int& k, const IVec& a);

/// Free abelian subgroup of Z^dim presented by a canonical HNF basis.
class Subgroup {
public:
    Subgroup(size_t dim, const IMat& generators) : dim_(dim), basis_(hnf(generators)) {}

    size_t dim() const { return dim_; }
    size_t rank() const { return basis_.size(); }
    const IMat& basis() const { return basis_; }
    bool contains(const IVec& v) const { return hnf_contains(basis_, v); }

    friend bool operator==(const Subgroup& a, const Subgroup& b) {
        return a.dim_ == b.dim_ && a.basis_ == b.basis_;
    }

private:
    size_t dim_;
    IMat basis_;
};

Subgroup subgroup_span(size_t dim, const IMat& generators);

/// Coset representatives of the sublattice M inside the lattice N. Both are
/// given by HNF bases with the same rational span (otherwise the quotient is
/// infinite and this throws). Representatives are returned in ambient
/// coordinates of Z^dim.
std::vector<IVec> quotient_reps(const IMat& n_basis, const IMat& m_basis, size_t dim);

/// HNF basis of { x in Z^rows(m) : x * m = 0 }.
IMat integer_kernel(const IMat& m);

/// HNF basis of the intersection of the row spans of a and b.
IMat lattice_intersection(const IMat& a, const IMat& b, size_t dim);

/// Z-lattice inside Z^dim spanned by `basis` rows (Q-linearly independent).
/// rank() may be smaller than dim() for sublattices of lower rank.
class Lattice {
public:
    Lattice(size_t dim, IMat basis);

    static Lattice standard(size_t dim);
    /// The lattice c * Z^dim.
    static Lattice scaled(size_t dim, long long c);

    size_t dim() const { return dim_; }
    size_t rank() const { return basis_.size(); }
    const IMat& basis() const { return basis_; }
    bool is_standard() const { return standard_; }

    bool contains(const IVec& v) const { return hnf_contains(hnf_, v); }

    /// Integer coordinates of v in the basis rows, when v lies in the lattice.
    std::optional<IVec> coordinates(const IVec& v) const;

    friend bool operator==(const Lattice& a, const Lattice& b) {
        return a.dim_ == b.dim_ && a.basis_ == b.basis_;
    }

private:
    size_t dim_;
    IMat basis_;
    IMat hnf_;
    bool standard_ = false;
};

/// A union of cosets of 2L inside a lattice L, closed under negation because
/// -t = t mod 2L. This is the shape shared by semilattices and their sumsets.
class CosetSet {
public:
    CosetSet(Lattice ambient, std::vector<IVec> global_reps);

    const Lattice& ambient() const { return ambient_; }
    /// Canonical representatives: {0,1}-coordinates w.r.t. the ambient basis,
    /// sorted; one per coset.
    const std::vector<IVec>& reps01() const { return reps01_; }
    /// The same representatives as ambient vectors of Z^dim.
    const std::vector<IVec>& reps_global() const { return reps_global_; }

    bool contains(const IVec& v) const;
    bool contains_zero_coset() const;
    size_t coset_count() const { return reps01_.size(); }

    friend bool operator==(const CosetSet& a, const CosetSet& b) {
        return a.ambient_ == b.ambient_ && a.reps01_ == b.reps01_;
    }

private:
    Lattice ambient_;
    IMat two_hnf_;                   // HNF of 2 * ambient basis
    std::vector<IVec> reps01_;
    std::vector<IVec> reps_global_;
    std::set<IVec> rep_lookup_;      // {0,1}-coordinate forms
    friend class Semilattice;
};

/// Semilattice S in a lattice L: a union of cosets of 2L containing 0 whose
/// members generate L. Stored as the ambient lattice plus coset
/// representatives; representatives are normalized into {0,1}-coordinates
/// relative to the ambient basis.
class Semilattice {
public:
    /// `reps` are ambient vectors of Z^dim. Invalid data (duplicate cosets,
    /// missing zero, span defect) is accepted here and reported by validate().
    Semilattice(Lattice ambient, std::vector<IVec> reps);

    /// S = L itself (single zero coset).
    static Semilattice full_lattice(Lattice ambient);
    /// S = Z^dim.
    static Semilattice standard(size_t dim);
    /// S = 2 Z^dim, represented in its own ambient 2 Z^dim.
    static Semilattice two_standard(size_t dim);

    size_t dim() const { return ambient_.dim(); }
    const Lattice& ambient() const { return ambient_; }
    const std::vector<IVec>& reps_global() const { return raw_reps_; }
    const std::vector<IVec>& reps01() const { return cosets_.reps01(); }

    bool contains(const IVec& v) const { return cosets_.contains(v); }

    /// Number of nonzero coset representatives.
    size_t index() const;

    /// The subgroup <S> generated by the semilattice.
    Subgroup span() const;

    std::vector<std::string> validate() const;
    bool is_valid() const { return validate().empty(); }

    CosetSet to_coset_set() const { return cosets_; }

    friend bool operator==(const Semilattice& a, const Semilattice& b) {
        return a.cosets_ == b.cosets_;
    }

private:
    Lattice ambient_;
    std::vector<IVec> raw_reps_;
    CosetSet cosets_;
};

/// Coset-level sumset S + T; both must share the same ambient lattice.
CosetSet sumset_cosets(const CosetSet& s, const CosetSet& t);
CosetSet sumset_cosets(const Semilattice& s, const Semilattice& t);

/// Checks the semilattice interaction laws <L> + S = S and 2<S> + L = L
/// at the coset level. Returns human-readable violations, empty when ok.
std::vector<std::string> interaction_check(const Semilattice& s, const Semilattice& l);

std::string ivec_str(const IVec& v);
IVec ivec_of(std::initializer_list<long long> xs);

} // namespace ears
