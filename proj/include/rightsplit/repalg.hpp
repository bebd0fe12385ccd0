#pragma once

#include "rightsplit/induce.hpp"
#include "rightsplit/matgrp.hpp"

namespace rsplit {

/// Block-diagonal sum of representations on a common group and field.
/// Throws GroupMismatch / DimCap (total dimension capped at 64).
Rep direct_sum(const std::vector<Rep>& reps);

/// Kronecker-product representation, row-major block convention, folded left
/// to right. Throws GroupMismatch / DimCap.
Rep tensor(const std::vector<Rep>& reps);

/// The projective image of the direct sum and of the tensor product, with the
/// map diag-class(g) -> tensor-class(g) verified to be a well-defined
/// bijective homomorphism. A failed check throws NotHomomorphism (it would
/// falsify the statement, not signal bad input).
struct TensorDsumIso {
    MatImage dsum_image;
    MatImage tensor_image;
    GroupHom iso;
};
TensorDsumIso tensor_directsum_image_iso(const std::vector<Rep>& reps);

/// The tensor projective image is isomorphic to the tuple group
/// {(pi1-class(g), ..., pin-class(g))} (the injective half of the proof);
/// holds for every family, including ones where the direct-sum side fails.
CheckResult tensor_tuple_iso_check(const std::vector<Rep>& reps);

/// Sampled property: A1 (x) A2 is scalar iff both factors are scalar.
/// Draws `samples` random invertible pairs plus forced scalar pairs.
CheckResult scalar_tensor_property(const Field& f, int dim1, int dim2, std::int64_t samples,
                                   std::uint64_t seed);

/// The graph group {(A(g), B(g)) : g in source} under componentwise
/// multiplication, with either side optionally projectivized.
class PairGroup : public FiniteGroup {
public:
    PairGroup(GroupPtr source, const Rep& a, bool proj_a, const Rep& b, bool proj_b);

    Elem order() const override { return static_cast<Elem>(pairs_.size()); }
    Elem mul(Elem x, Elem y) const override;
    Elem inv(Elem x) const override;
    Elem identity() const override { return id_; }
    std::string label(Elem x) const override;

    const Mat& first(Elem x) const { return pairs_[x].first; }
    const Mat& second(Elem x) const { return pairs_[x].second; }
    Elem from_source(Elem g) const { return source_map_[g]; }
    Elem preimage(Elem x) const { return preimage_[x]; }

private:
    Field field_;
    bool proj_a_, proj_b_;
    GroupPtr source_;
    std::vector<std::pair<Mat, Mat>> pairs_;
    std::vector<Elem> preimage_;
    std::vector<Elem> source_map_;
    std::unordered_map<std::string, Elem> index_;
    Elem id_ = 0;
};

/// L (or N when built over a subgroup's restrictions) with both coordinate
/// projections onto the matrix images.
struct PairGraph {
    std::shared_ptr<const PairGroup> graph;
    MatImage img_first;
    MatImage img_second;
    GroupHom first_proj;  // graph -> img_first
    GroupHom second_proj; // graph -> img_second
};
PairGraph pair_group(const Rep& a, const Rep& b, bool proj_a = false, bool proj_b = false);

/// Kernel analysis of the induced pair {(pi(g), rho(g))}: the second
/// projection is an isomorphism, the kernel of the first embeds into G/H
/// with image indexed by the cosets meeting ker(pi), and that kernel is
/// isomorphic to ker(pi)/(ker(pi) meet H). In the cyclic power-transversal
/// case the kernel matrices are compared against the circulant block form
/// with pi(s^-i) and pi(s^(n-i)) blocks. Throws NotInducedPair when
/// sigma != pi|_H.
struct PairKernelReport {
    bool second_proj_iso = false;
    Elem first_kernel_order = 0;
    bool coset_embedding_injective = false;
    bool j_set_matches = false;
    bool kernel_formula = false;
    int cyclic_matrix_formula = 0; // 0 = not applicable, 1 = held, -1 = failed
    std::string detail;
};
PairKernelReport pair_kernel_analysis(const Rep& pi, const BlockRep& b);

/// G' = {g : pi(g) in pi(H)}, the full preimage of pi(H); contains H.
Subgroup largest_equal_image_subgroup(const Rep& pi, const Subgroup& h);

/// Verifies that the first-projection kernel corresponds to G'/H under the
/// coset embedding, and the special case: full kernel iff pi(G) = pi(H).
struct LargestSubgroupReport {
    Subgroup g_prime;
    bool kernel_matches_preimage_cosets = false;
    bool full_kernel_iff_equal_images = false;
};
LargestSubgroupReport largest_subgroup_analysis(const Rep& pi, const BlockRep& b);

/// Right-splitness of 1 -> kernel -> graph -> pi(G) -> 1 under the
/// hypothesis pi(G) = pi(H), via the explicit section x -> (pi(h), rho(h))
/// with h in H. NotApplicable verdict when the hypothesis fails.
SplitReport graph_split_check(const Rep& pi, const BlockRep& b);

struct CorollaryOutcome {
    bool applicable = false;
    bool holds = false;
};
/// Cyclic case: if ker(pi) meets the coset H s of a generator, the sequence
/// splits (and pi(G) = pi(H)).
CorollaryOutcome graph_split_cyclic_criterion(const Rep& pi, const BlockRep& b);
/// If a multiplicatively closed {rho(s_i)} exists and gcd(n, |pi(G)|) = 1,
/// then every pi(s_i) = I and the sequence splits.
CorollaryOutcome graph_split_coprime_criterion(const Rep& pi, const BlockRep& b);

/// L-tilde is isomorphic to the projective image of pi iff the projective
/// kernel of pi lies inside H; both sides evaluated independently.
struct ProjectiveGraphIsoReport {
    bool ltilde_iso_pitilde = false;
    bool proj_kernel_in_h = false;
    bool biconditional() const { return ltilde_iso_pitilde == proj_kernel_in_h; }
};
ProjectiveGraphIsoReport projective_graph_iso_check(const Rep& pi, const BlockRep& b);

/// Surjection onto a verified-simple group: a normal subgroup of index
/// smaller than |S| must still surject. Throws PreconditionFailed naming the
/// failing clause.
bool simple_image_propagation(const GroupHom& onto_simple, const Subgroup& h);

/// The H'-parameterized pair-group analysis: projections, kernels,
/// largest subgroup and the two splitting statements.
struct SubgroupPairReport {
    bool second_projection_iso = false;
    bool coset_embedding = false;
    bool kernel_quotient_formula = false;
    bool projective_iso_biconditional = false;
    bool largest_subgroup_biconditional = false;
    bool intersection_split_applicable = false;
    bool intersection_split = false;
    bool containment_split_applicable = false;
    bool containment_split = false;
    std::string detail;
};
SubgroupPairReport subgroup_pair_analysis(const Rep& pi, const BlockRep& b, const Subgroup& h_prime);

/// Group-level PGL2/PSL2 results at a prime p in {5,7,11,13}:
/// the witness complement, non-directness over every complement, inner-ness
/// failures, the histogram separation from PSL2 x C2, and the inner-twist
/// models (twist by I and by an involution).
struct PglPslReport {
    Elem pgl_order = 0;
    Elem psl_order = 0;
    bool complement_found = false;
    std::string witness_label;
    Elem involution_count = 0; // involutions of PGL2 outside PSL2
    bool no_complement_centralizes = false;
    bool witness_not_inner = false;
    bool no_complement_inner = false;
    bool pgl_not_psl_x_c2 = false;
    bool twist_identity_direct = false;
    bool twist_identity_iso_product = false;
    bool twist_involution_not_direct = false;
    bool twist_involution_iso_product = false;
    bool twist_involution_not_pgl = false;
};
PglPslReport pgl_psl_analysis(std::int64_t p);

} // namespace rsplit
