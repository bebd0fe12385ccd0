#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rightsplit/error.hpp"

namespace rsplit {

using Elem = std::int64_t;

/// Abstract finite group on dense element indices 0..order-1 with a
/// multiplication oracle. Implementations are immutable after construction;
/// all queries are pure and safe for concurrent readers.
class FiniteGroup {
public:
    virtual ~FiniteGroup() = default;

    virtual Elem order() const = 0;
    virtual Elem mul(Elem a, Elem b) const = 0;
    virtual Elem inv(Elem a) const = 0;
    virtual Elem identity() const = 0;
    virtual std::string label(Elem a) const { return std::to_string(a); }
    /// True when backed by a dense multiplication table.
    virtual bool has_table() const { return false; }

    Elem conjugate(Elem g, Elem x) const { return mul(mul(inv(g), x), g); } // g^-1 x g
    Elem power(Elem x, std::int64_t e) const;
    std::int64_t element_order(Elem x) const;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Dense Cayley-table group; the backing used for orders <= 5000.
class TableGroup : public FiniteGroup {
public:
    TableGroup(std::vector<Elem> table, Elem order, std::vector<std::string> labels = {});
    static std::shared_ptr<TableGroup> from_group(const FiniteGroup& g);

    Elem order() const override { return n_; }
    Elem mul(Elem a, Elem b) const override { return table_[a * n_ + b]; }
    Elem inv(Elem a) const override { return inv_[a]; }
    Elem identity() const override { return id_; }
    std::string label(Elem a) const override;
    bool has_table() const override { return true; }

private:
    std::vector<Elem> table_;
    std::vector<Elem> inv_;
    std::vector<std::string> labels_;
    Elem n_;
    Elem id_;
};

/// Cyclic group of order n; element k is g^k.
class CyclicGroup : public FiniteGroup {
public:
    explicit CyclicGroup(Elem n) : n_(n) {
        if (n < 1) throw Error("IndexOutOfRange", "cyclic group order must be >= 1");
    }
    Elem order() const override { return n_; }
    Elem mul(Elem a, Elem b) const override { return (a + b) % n_; }
    Elem inv(Elem a) const override { return (n_ - a) % n_; }
    Elem identity() const override { return 0; }
    std::string label(Elem a) const override;

private:
    Elem n_;
};

/// Symmetric group S_n on {1..n}, elements in lexicographic order of the
/// permutation words, product (a*b)(i) = b[a[i]] (apply a, then b).
class PermGroup : public FiniteGroup {
public:
    explicit PermGroup(int n);
    Elem order() const override { return static_cast<Elem>(perms_.size()); }
    Elem mul(Elem a, Elem b) const override;
    Elem inv(Elem a) const override;
    Elem identity() const override { return 0; }
    std::string label(Elem a) const override;
    const std::vector<std::uint8_t>& perm(Elem a) const { return perms_[a]; }

private:
    Elem rank(const std::vector<std::uint8_t>& p) const;
    int n_;
    std::vector<std::vector<std::uint8_t>> perms_;
};

class DirectProductGroup : public FiniteGroup {
public:
    DirectProductGroup(GroupPtr a, GroupPtr b) : a_(std::move(a)), b_(std::move(b)) {}
    Elem order() const override { return a_->order() * b_->order(); }
    Elem mul(Elem x, Elem y) const override {
        const Elem nb = b_->order();
        return a_->mul(x / nb, y / nb) * nb + b_->mul(x % nb, y % nb);
    }
    Elem inv(Elem x) const override {
        const Elem nb = b_->order();
        return a_->inv(x / nb) * nb + b_->inv(x % nb);
    }
    Elem identity() const override { return a_->identity() * b_->order() + b_->identity(); }
    std::string label(Elem x) const override {
        return "(" + a_->label(x / b_->order()) + "," + b_->label(x % b_->order()) + ")";
    }
    Elem encode(Elem xa, Elem xb) const { return xa * b_->order() + xb; }
    std::pair<Elem, Elem> decode(Elem x) const { return {x / b_->order(), x % b_->order()}; }
    const GroupPtr& left() const { return a_; }
    const GroupPtr& right() const { return b_; }

private:
    GroupPtr a_, b_;
};

/// Oracle group defined by closures; used for ad-hoc constructions.
class FnGroup : public FiniteGroup {
public:
    FnGroup(Elem order, Elem id, std::function<Elem(Elem, Elem)> mul,
            std::function<Elem(Elem)> inv = nullptr,
            std::function<std::string(Elem)> label = nullptr)
        : n_(order), id_(id), mul_(std::move(mul)), inv_(std::move(inv)), label_(std::move(label)) {}
    Elem order() const override { return n_; }
    Elem mul(Elem a, Elem b) const override { return mul_(a, b); }
    Elem inv(Elem a) const override;
    Elem identity() const override { return id_; }
    std::string label(Elem a) const override { return label_ ? label_(a) : std::to_string(a); }

private:
    Elem n_, id_;
    std::function<Elem(Elem, Elem)> mul_;
    std::function<Elem(Elem)> inv_;
    std::function<std::string(Elem)> label_;
};

/// Subgroup as a sorted index subset of a parent group.
struct Subgroup {
    GroupPtr parent;
    std::vector<Elem> members;       // sorted ascending
    std::vector<std::uint8_t> mask;  // size parent->order()

    Subgroup() = default;
    Subgroup(GroupPtr parent_, std::vector<Elem> members_);

    Elem size() const { return static_cast<Elem>(members.size()); }
    bool contains(Elem e) const { return mask[e] != 0; }
    /// Position of a parent element inside `members`; -1 if absent.
    Elem local_index(Elem parent_elem) const;
};

/// A subgroup viewed as a group in its own right (local indices 0..|H|-1).
class SubgroupGroup : public FiniteGroup {
public:
    explicit SubgroupGroup(Subgroup sub);
    Elem order() const override { return static_cast<Elem>(sub_.members.size()); }
    Elem mul(Elem a, Elem b) const override {
        return to_local_[sub_.parent->mul(sub_.members[a], sub_.members[b])];
    }
    Elem inv(Elem a) const override { return to_local_[sub_.parent->inv(sub_.members[a])]; }
    Elem identity() const override { return id_; }
    std::string label(Elem a) const override { return sub_.parent->label(sub_.members[a]); }
    Elem to_parent(Elem local) const { return sub_.members[local]; }
    Elem to_local(Elem parent_elem) const { return to_local_[parent_elem]; }
    const Subgroup& subgroup() const { return sub_; }

private:
    Subgroup sub_;
    std::vector<Elem> to_local_; // parent index -> local index or -1
    Elem id_;
};

/// Ordered coset representatives (right cosets H\G), reps[0] in H.
struct Transversal {
    GroupPtr parent;
    Subgroup subgroup;
    std::vector<Elem> reps;
};

/// Right-coset partition of G by H: coset ordinal per element plus the
/// least-element representative of each coset, in ascending-rep order.
struct CosetTable {
    std::vector<Elem> coset_of; // element -> coset ordinal
    std::vector<Elem> reps;     // ordinal -> least element of the coset
    Elem index() const { return static_cast<Elem>(reps.size()); }
};

struct GroupHom {
    GroupPtr domain;
    GroupPtr codomain;
    std::vector<Elem> map; // domain index -> codomain index

    Elem operator()(Elem x) const { return map[x]; }
};

/// How thoroughly pair/triple sweeps are verified: exhaustive up to the cap,
/// deterministic sampling (fixed seed) above it.
struct VerifyPolicy {
    Elem exhaustive_cap = 512;
    std::int64_t samples = 100000;
    std::uint64_t seed = 42;
};

struct CheckResult {
    bool ok = true;
    std::string mode;    // "exhaustive" or "sampled"
    std::string detail;  // first failure, if any
};

// ---- algorithms ----

std::vector<Elem> closure(const FiniteGroup& g, std::vector<Elem> gens);
Subgroup subgroup_generated(const GroupPtr& g, const std::vector<Elem>& gens);
std::vector<Elem> generating_set(const FiniteGroup& g);
std::vector<Elem> normal_closure(const FiniteGroup& g, std::vector<Elem> gens,
                                 const std::vector<Elem>& g_gens);

/// Subgroup generated by all commutators (order <= 2048), or the normal
/// closure of generator commutators above that; equal to [G,G] either way.
Subgroup derived_subgroup(const GroupPtr& g);

bool is_normal(const FiniteGroup& g, const Subgroup& h, const std::vector<Elem>& g_gens);
bool is_normal(const FiniteGroup& g, const Subgroup& h);

CosetTable coset_table(const FiniteGroup& g, const Subgroup& h);

/// Canonical transversal: least element per right coset, H-coset first.
Transversal transversal_enumerate(const GroupPtr& g, const Subgroup& h);
/// Same but with reps[0] replaced by the identity (the form induction wants).
Transversal transversal_identity_first(const GroupPtr& g, const Subgroup& h);

/// Quotient by a normal subgroup: group on coset labels (least member is the
/// canonical label) plus the projection homomorphism. Throws NotNormal.
std::pair<GroupPtr, GroupHom> quotient(const GroupPtr& g, const Subgroup& n);

/// G/[G,G] with the abelianization map.
std::pair<GroupPtr, GroupHom> abelianization(const GroupPtr& g);

bool is_cyclic(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g);

/// The unique index-n normal subgroup with abelian (cyclic) quotient of a
/// group whose abelianization is cyclic: preimage of the n-th powers.
/// Throws AbelianizationNotCyclic, IndexDoesNotDivide.
Subgroup unique_abelian_index_n(const GroupPtr& g, std::int64_t n);

std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& g,
                                                 const std::vector<Elem>& g_gens);

/// Every normal subgroup of G, as joins of conjugacy-class closures
/// (complete: any normal subgroup is the join of the class closures it
/// contains). Sorted by order then members.
std::vector<Subgroup> normal_subgroups(const GroupPtr& g);

std::map<std::int64_t, Elem> order_histogram(const FiniteGroup& g);

struct IsoResult {
    enum class Verdict { Yes, No, Indeterminate };
    Verdict verdict = Verdict::Indeterminate;
    std::optional<GroupHom> witness;
    std::string detail;
    bool yes() const { return verdict == Verdict::Yes; }
    bool no() const { return verdict == Verdict::No; }
};

/// Order filter, element-order-histogram filter, then generator-image
/// backtracking (only when |G1| <= 512); above the cap a supplied candidate
/// map is verified instead, and Indeterminate is returned without one.
IsoResult is_isomorphic(const GroupPtr& g1, const GroupPtr& g2,
                        const std::optional<GroupHom>& candidate = std::nullopt);

CheckResult verify_hom(const GroupHom& hom, const VerifyPolicy& policy = {});
bool is_bijective(const GroupHom& hom);

CheckResult verify_group_axioms(const FiniteGroup& g, const VerifyPolicy& policy = {});
CheckResult verify_subgroup(const Subgroup& h, const VerifyPolicy& policy = {});
/// Checks the Transversal invariants (coset cover/disjointness, reps[0] in H).
CheckResult verify_transversal(const Transversal& t);

bool centralizes(const FiniteGroup& g, Elem x, const std::vector<Elem>& elems);

/// Plain-text multiplication table ("order=N" then one row per element).
std::string export_table(const FiniteGroup& g);
std::shared_ptr<TableGroup> parse_table(const std::string& text);

} // namespace rsplit
