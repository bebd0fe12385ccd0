#pragma once

#include "rightsplit/group.hpp"

namespace rsplit {

/// One factor of the construction: a group, a normal subgroup, and a
/// multiplicatively closed transversal aligned position-by-position with the
/// first factor's transversal (the alignment realizes the identification of
/// the common quotient).
struct SdpFactor {
    GroupPtr G;
    Subgroup H;
    Transversal T;
};

struct SdpData {
    std::vector<SdpFactor> factors;
};

/// Validates alignment: each H normal, equal indices, each T a transversal,
/// and the quotient-level multiplication tables of all transversals equal
/// position-wise (that is, position matching defines an isomorphism of the
/// quotients). Throws MisalignedTransversals / NotNormal. Returns the index n.
std::int64_t validate_sdp_alignment(const SdpData& data);

/// Alignment plus multiplicative closedness of every transversal (the
/// hypothesis of the twisted-product construction).
std::int64_t validate_sdp_closed(const SdpData& data);

/// Twisted product on (H_a x H_b) x T with
///   ((h1,h2),t_i) * ((k1,k2),t_j) = ((x_j^-1 h1 x_j k1, y_j^-1 h2 y_j k2), t_i t_j),
/// elements encoded mixed-radix as (h1*|H_b| + h2)*n + t.
class SdpGroup2 : public FiniteGroup {
public:
    SdpGroup2(SdpFactor a, SdpFactor b);

    Elem order() const override { return na_ * nb_ * n_; }
    Elem mul(Elem x, Elem y) const override;
    Elem inv(Elem x) const override;
    Elem identity() const override { return id_; }
    std::string label(Elem x) const override;

    Elem encode(Elem ha_local, Elem hb_local, Elem t) const { return (ha_local * nb_ + hb_local) * n_ + t; }
    struct Decoded {
        Elem ha, hb, t;
    };
    Decoded decode(Elem x) const {
        return {x / (nb_ * n_), (x / n_) % nb_, x % n_};
    }
    std::int64_t index_n() const { return n_; }
    const SdpFactor& factor_a() const { return a_; }
    const SdpFactor& factor_b() const { return b_; }

private:
    Elem conj_local(const SdpFactor& f, const std::vector<Elem>& to_local, Elem h_local,
                    Elem t) const;

    SdpFactor a_, b_;
    std::vector<Elem> a_local_, b_local_; // parent -> local H index (-1 outside)
    std::vector<Elem> tmul_;              // n x n transversal index table
    std::vector<Elem> tinv_;
    Elem na_, nb_, n_, id_;
};

/// (H_1 x ... x H_l) twisted by the common quotient; built by iterating the
/// two-factor construction, which makes the flat element encoding the
/// mixed-radix integer over (|H_1|, ..., |H_l|, n). Throws OrderCap above 1e5.
GroupPtr sdp_build(const SdpData& data);

/// The subgroup of G1 x G2 matching cosets position-wise:
/// union over i of (x_i H_1) x (y_i H_2). Returns the subgroup together with
/// its ambient product group.
struct FiberProduct {
    std::shared_ptr<const DirectProductGroup> product;
    Subgroup sub;
};
FiberProduct fiber_product(const SdpData& data);

/// The explicit bijection psi((x_i h1, y_i h2)) = ((h1,h2), t_i) from the
/// fiber product onto the two-factor twisted product, verified multiplicative
/// (exhaustively up to order 5000, otherwise generators x everything plus
/// `samples` random pairs). Throws NotHomomorphism if a check fails.
GroupHom fiber_iso_check(const SdpData& data, std::int64_t samples = 100000,
                       std::uint64_t seed = 42);

/// Checks that coset -> its T-representative is a homomorphic section of the
/// projection G -> G/H (requires T multiplicatively closed; throws
/// PreconditionFailed otherwise).
bool right_split_sequence_check(const GroupPtr& g, const Subgroup& h, const Transversal& t);

/// True iff the transversal's representative set is closed under
/// multiplication (equivalently, forms a subgroup).
bool transversal_multiplicatively_closed(const GroupPtr& g, const Transversal& t);

} // namespace rsplit
