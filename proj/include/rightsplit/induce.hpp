#pragma once

#include <unordered_map>

#include "rightsplit/ffield.hpp"
#include "rightsplit/group.hpp"
#include "rightsplit/split.hpp"

namespace rsplit {

/// Dense square matrix of field codes, row-major.
struct Mat {
    int n = 0;
    std::vector<std::int32_t> e;

    Mat() = default;
    explicit Mat(int dim) : n(dim), e(static_cast<size_t>(dim) * dim, 0) {}
    std::int64_t at(int r, int c) const { return e[static_cast<size_t>(r) * n + c]; }
    void set(int r, int c, std::int64_t v) { e[static_cast<size_t>(r) * n + c] = static_cast<std::int32_t>(v); }
    bool operator==(const Mat&) const = default;
};

Mat mat_id(int n);
Mat mat_mul(const Field& f, const Mat& a, const Mat& b);
bool mat_is_identity(const Mat& a);
bool mat_is_scalar(const Mat& a);
std::int64_t mat_det(const Field& f, const Mat& a);
bool mat_invertible(const Field& f, const Mat& a);
/// Scales so the first nonzero entry in row-major order is 1.
Mat mat_proj_normalize(const Field& f, const Mat& a);
/// Kronecker product with the row-major block convention (a11*B in the
/// top-left block).
Mat mat_kron(const Field& f, const Mat& a, const Mat& b);
Mat mat_block_diag(const Field& f, const Mat& a, const Mat& b);
std::string mat_key(const Mat& a);
/// "[[r00,r01],[r10,r11]]" with field-rendered entries.
std::string render_mat(const Field& f, const Mat& a);

/// Matrix representation of a finite group: one invertible matrix per
/// element, forming a homomorphism.
struct Rep {
    GroupPtr group;
    Field field;
    int dim = 0;
    std::vector<Mat> mats;

    const Mat& operator()(Elem g) const { return mats[g]; }
};

Rep trivial_rep(GroupPtr g, const Field& f, int dim = 1);
/// Extends generator images to the whole group by breadth-first word
/// decomposition, then re-verifies the homomorphism property exhaustively.
/// Throws NotHomomorphism if the images are inconsistent or non-invertible.
Rep rep_from_images(GroupPtr g, const Field& f, int dim,
                    const std::vector<std::pair<Elem, Mat>>& gen_images);
/// Restriction to a subgroup, as a Rep on the subgroup-as-group.
Rep restrict_rep(const Rep& pi, const Subgroup& h);
CheckResult verify_rep(const Rep& r, const VerifyPolicy& policy = {});

/// The multiplicative image of a Rep as a FiniteGroup of (optionally
/// projectivized) matrices, with the evaluation homomorphism from the source.
class MatImageGroup : public FiniteGroup {
public:
    MatImageGroup(const Rep& rep, bool projective);

    Elem order() const override { return static_cast<Elem>(mats_.size()); }
    Elem mul(Elem a, Elem b) const override;
    Elem inv(Elem a) const override;
    Elem identity() const override { return id_; }
    std::string label(Elem a) const override { return render_mat(field_, mats_[a]); }

    const Mat& mat(Elem a) const { return mats_[a]; }
    Elem index_of(const Mat& m) const; // -1 if absent
    bool projective() const { return projective_; }
    const Field& field() const { return field_; }
    const std::vector<Elem>& source_map() const { return source_map_; }
    Elem preimage(Elem a) const { return preimage_[a]; }

private:
    Field field_;
    bool projective_;
    std::vector<Mat> mats_;
    std::vector<Elem> preimage_; // one source element per image class
    GroupPtr source_;
    std::vector<Elem> source_map_; // source element -> image index
    std::unordered_map<std::string, Elem> index_;
    Elem id_ = 0;
};

struct MatImage {
    std::shared_ptr<const MatImageGroup> image;
    GroupHom hom; // source group -> image
};

MatImage rep_image(const Rep& r);
MatImage proj_image(const Rep& r);
Subgroup rep_kernel(const Rep& r);
/// {g : r(g) is scalar}, the kernel of the projectivized representation.
Subgroup proj_kernel(const Rep& r);

/// Induced representation as an n x n grid of m x m blocks over the
/// transversal T (T.reps[0] must be the identity): block (p,q) of rho(g) is
/// sigma(s_p g s_q^-1) when that element lies in H and zero otherwise.
struct BlockRep {
    GroupPtr G;
    Subgroup H;
    Transversal T;
    std::shared_ptr<const SubgroupGroup> Hgrp; // sigma's group
    Rep sigma; // on Hgrp
    Rep rho;   // on G, dimension n*m
    int n = 0, m = 0;
    CosetTable cosets;
    std::vector<Elem> coset_to_t; // coset ordinal -> transversal position

    /// The (p,q) m x m block of rho(g) (0-based block indices).
    Mat block(Elem g, int p, int q) const;
};

/// Throws NotNormal / DimCap; re-verifies rho is a homomorphism.
BlockRep induce(const Rep& sigma, const GroupPtr& g, const Transversal& t);

/// Checks the block-structure invariant for every g: one nonzero block per
/// block-row/column matching the sigma(s_p g s_q^-1) rule, and for h in H the
/// block-diagonal form diag(sigma(h), sigma(s_2 h s_2^-1), ...).
CheckResult verify_block_structure(const BlockRep& b);

/// First-block projection rho(H) -> pi(H), verified bijective homomorphism.
/// Requires sigma = pi|_H (throws NotRestriction).
GroupHom rho_H_image_iso(const BlockRep& b, const Rep& pi);

struct ExactSequence {
    MatImage rho_G;   // middle group
    MatImage rho_H;   // kernel (as image of H under rho)
    GroupPtr quotient; // G/H
    GroupHom gamma;   // rho(G) -> G/H
};

/// gamma(rho(h s_k)) = s_k H: verified well defined (the rho(H s_i) are
/// pairwise disjoint), surjective, kernel exactly rho(H), index n.
/// Throws DisjointnessFailure if well-definedness fails.
ExactSequence exact_sequence_gamma(const BlockRep& b);

/// Both sides of: rho(s_i)rho(s_j) = rho(s_k) iff (pi(s_i)pi(s_j) = pi(s_k)
/// and s_i s_j in s_k H). Requires sigma = pi|_H.
bool product_relation_check(const BlockRep& b, const Rep& pi, int i, int j, int k);
/// Sweeps all (i,j,k) triples; ok iff the biconditional holds everywhere.
CheckResult product_relation_sweep(const BlockRep& b, const Rep& pi);

/// Right-splitness of 1 -> rho(H) -> rho(G) -> G/H -> 1 by complement search
/// in rho(G); on success the witness transversal {s_i} of H in G with
/// {rho(s_i)} multiplicatively closed is recovered. In the cyclic case the
/// equivalence rho(s)^n = 1 iff sigma(s^n) = 1 is cross-checked over all
/// power transversals.
struct InducedSplit {
    SplitReport report;
    std::vector<Elem> witness_transversal; // elements of G, when split
    int cyclic_cross_check = 0;            // 0 = not cyclic, 1 = held, -1 = failed
};
InducedSplit induced_split_check(const BlockRep& b);

/// The H'-parameterized sequence 1 -> rho(H' meet H) -> rho(H') ->
/// H'/(H' meet H) -> 1 and its splitting, plus the subgroup-detection
/// biconditional (pi required for that part).
struct GeneralSequenceReport {
    bool exact = false;
    SplitVerdict split = SplitVerdict::NotApplicable;
    std::vector<Elem> witness; // elements of H' mapping to the complement
    bool containment_biconditional = false; // part (3)
    bool restricted_split_checked = false;  // part (4) applicable
    bool restricted_split = false;          // part (4) outcome
    std::string detail;
};
GeneralSequenceReport general_subgroup_sequence(const BlockRep& b, const Rep& pi,
                                                const Subgroup& h_prime);

} // namespace rsplit
