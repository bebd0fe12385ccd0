#pragma once

#include <memory>

#include "rightsplit/ffield.hpp"
#include "rightsplit/group.hpp"

namespace rsplit {

/// Invertible 2x2 matrix over a field; entries are field codes. The field is
/// carried by context (every operation takes it explicitly).
struct Mat2 {
    std::int64_t a = 1, b = 0, c = 0, d = 1;
    bool operator==(const Mat2&) const = default;
};

Mat2 m2_mul(const Field& f, const Mat2& x, const Mat2& y);
Mat2 m2_inv(const Field& f, const Mat2& x);
std::int64_t m2_det(const Field& f, const Mat2& x);
bool m2_is_scalar(const Field& f, const Mat2& x);
/// Scales so the first nonzero entry in order (a,b,c,d) is 1 (idempotent).
Mat2 proj_normalize(const Field& f, const Mat2& x);
/// "[[a,b],[c,d]] over GF(q)"
std::string render_mat2(const Field& f, const Mat2& x);

/// GL_2(F_q) with elements enumerated in entry-lexicographic order on
/// (a,b,c,d), each entry in field-code order. Table-backed when the order is
/// at most 5000, oracle-backed otherwise.
class Gl2Group : public FiniteGroup {
public:
    explicit Gl2Group(Field f);

    Elem order() const override { return static_cast<Elem>(elems_.size()); }
    Elem mul(Elem x, Elem y) const override;
    Elem inv(Elem x) const override;
    Elem identity() const override { return id_; }
    std::string label(Elem x) const override { return render_mat2(field_, matrix_of(x)); }
    bool has_table() const override { return !table_.empty(); }

    const Field& field() const { return field_; }
    Mat2 matrix_of(Elem x) const;
    /// Index of an invertible matrix; -1 if the matrix is not invertible.
    Elem index_of(const Mat2& m) const;

private:
    std::int64_t pack(const Mat2& m) const;
    Mat2 unpack(std::int64_t v) const;

    Field field_;
    std::vector<std::int32_t> elems_;   // packed matrices, ascending
    std::vector<std::int32_t> idx_of_;  // packed value -> index or -1
    std::vector<std::int32_t> table_;   // optional dense multiplication table
    std::vector<std::int32_t> inv_idx_;
    Elem id_ = 0;
};

/// Throws FieldTooLarge above q = 31.
std::shared_ptr<const Gl2Group> gl2_group(const Field& f);

/// {x : det(x) is an n-th power in F_q^x}; requires q = 1 mod n.
Subgroup det_power_subgroup(const std::shared_ptr<const Gl2Group>& g, std::int64_t n);

/// SL_2 as the determinant kernel (the (q-1)-th-power criterion subgroup).
Subgroup sl2_subgroup(const std::shared_ptr<const Gl2Group>& g);

/// Group of scalar classes of a matrix group, plus the projection hom.
class ProjMatGroup : public FiniteGroup {
public:
    ProjMatGroup(Field f, const std::vector<Mat2>& matrices);

    Elem order() const override { return static_cast<Elem>(elems_.size()); }
    Elem mul(Elem x, Elem y) const override;
    Elem inv(Elem x) const override;
    Elem identity() const override { return id_; }
    std::string label(Elem x) const override { return render_mat2(field_, class_rep(x)); }
    bool has_table() const override { return !table_.empty(); }

    const Field& field() const { return field_; }
    Mat2 class_rep(Elem x) const;
    Elem class_of(const Mat2& m) const;

private:
    std::int64_t pack(const Mat2& m) const;
    Mat2 unpack(std::int64_t v) const;

    Field field_;
    std::vector<std::int32_t> elems_;
    std::vector<std::int32_t> idx_of_;
    std::vector<std::int32_t> table_;
    Elem id_ = 0;
};

struct ProjResult {
    std::shared_ptr<const ProjMatGroup> group;
    GroupHom hom; // domain = the input group
};

ProjResult projective_group(const std::shared_ptr<const Gl2Group>& g);
/// Projectivization of a matrix subgroup; the hom's domain is the subgroup
/// viewed as a group (SubgroupGroup over s.parent, which must be a Gl2Group).
ProjResult projective_group(const Subgroup& s);

/// PGL_2(F_q) and PSL_2(F_q) as ProjMatGroups.
std::shared_ptr<const ProjMatGroup> pgl2_group(const Field& f);
std::shared_ptr<const ProjMatGroup> psl2_group(const Field& f);

/// The matrix x = [[1, r+1], [-1, -1]] for the least non-square r != p-1
/// mod p: det(x) = r (a non-square) and x^2 is scalar, so the class of x has
/// order 2 in PGL_2 and {1, x-class} is a PSL_2-coset transversal.
Mat2 psl2_order2_witness(std::int64_t p);

/// Exhaustive simplicity check: normal subgroups are exactly the
/// multiplicatively closed unions of conjugacy classes containing the
/// identity class, so scan all class subsets (order-sum divisibility first).
bool is_simple_classes(const GroupPtr& g);

} // namespace rsplit
