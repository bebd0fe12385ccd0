#include "rightsplit/matgrp.hpp"

#include <algorithm>

namespace rsplit {

Mat2 m2_mul(const Field& f, const Mat2& x, const Mat2& y) {
    return Mat2{f.add(f.mul(x.a, y.a), f.mul(x.b, y.c)), f.add(f.mul(x.a, y.b), f.mul(x.b, y.d)),
                f.add(f.mul(x.c, y.a), f.mul(x.d, y.c)), f.add(f.mul(x.c, y.b), f.mul(x.d, y.d))};
}

std::int64_t m2_det(const Field& f, const Mat2& x) {
    return f.sub(f.mul(x.a, x.d), f.mul(x.b, x.c));
}

Mat2 m2_inv(const Field& f, const Mat2& x) {
    const std::int64_t di = f.inv(m2_det(f, x));
    return Mat2{f.mul(di, x.d), f.mul(di, f.neg(x.b)), f.mul(di, f.neg(x.c)), f.mul(di, x.a)};
}

bool m2_is_scalar(const Field&, const Mat2& x) {
    return x.b == 0 && x.c == 0 && x.a == x.d && x.a != 0;
}

Mat2 proj_normalize(const Field& f, const Mat2& x) {
    std::int64_t first = x.a ? x.a : x.b ? x.b : x.c ? x.c : x.d;
    const std::int64_t s = f.inv(first);
    return Mat2{f.mul(s, x.a), f.mul(s, x.b), f.mul(s, x.c), f.mul(s, x.d)};
}

std::string render_mat2(const Field& f, const Mat2& x) {
    return "[[" + f.render(x.a) + "," + f.render(x.b) + "],[" + f.render(x.c) + "," +
           f.render(x.d) + "]] over GF(" + std::to_string(f.q()) + ")";
}

// ---- Gl2Group ----

std::int64_t Gl2Group::pack(const Mat2& m) const {
    const std::int64_t q = field_.q();
    return ((m.a * q + m.b) * q + m.c) * q + m.d;
}

Mat2 Gl2Group::unpack(std::int64_t v) const {
    const std::int64_t q = field_.q();
    Mat2 m;
    m.d = v % q;
    v /= q;
    m.c = v % q;
    v /= q;
    m.b = v % q;
    m.a = v / q;
    return m;
}

Gl2Group::Gl2Group(Field f) : field_(std::move(f)) {
    const std::int64_t q = field_.q();
    if (q > 31) throw Error("FieldTooLarge", "GL2 enumeration capped at q = 31");
    const std::int64_t total = q * q * q * q;
    idx_of_.assign(total, -1);
    for (std::int64_t v = 0; v < total; ++v) {
        const Mat2 m = unpack(v);
        if (m2_det(field_, m) != 0) {
            idx_of_[v] = static_cast<std::int32_t>(elems_.size());
            elems_.push_back(static_cast<std::int32_t>(v));
        }
    }
    id_ = idx_of_[pack(Mat2{1, 0, 0, 1})];
    const Elem n = static_cast<Elem>(elems_.size());
    inv_idx_.resize(n);
    for (Elem i = 0; i < n; ++i)
        inv_idx_[i] = static_cast<std::int32_t>(idx_of_[pack(m2_inv(field_, unpack(elems_[i])))]);
    if (n <= 5000) {
        table_.resize(static_cast<size_t>(n) * n);
        for (Elem i = 0; i < n; ++i) {
            const Mat2 mi = unpack(elems_[i]);
            for (Elem j = 0; j < n; ++j)
                table_[i * n + j] =
                    static_cast<std::int32_t>(idx_of_[pack(m2_mul(field_, mi, unpack(elems_[j])))]);
        }
    }
}

Elem Gl2Group::mul(Elem x, Elem y) const {
    if (!table_.empty()) return table_[x * order() + y];
    return idx_of_[pack(m2_mul(field_, unpack(elems_[x]), unpack(elems_[y])))];
}

Elem Gl2Group::inv(Elem x) const { return inv_idx_[x]; }

Mat2 Gl2Group::matrix_of(Elem x) const { return unpack(elems_[x]); }

Elem Gl2Group::index_of(const Mat2& m) const { return idx_of_[pack(m)]; }

std::shared_ptr<const Gl2Group> gl2_group(const Field& f) {
    return std::make_shared<Gl2Group>(f);
}

Subgroup det_power_subgroup(const std::shared_ptr<const Gl2Group>& g, std::int64_t n) {
    const Field& f = g->field();
    if (n < 1 || (f.q() - 1) % n != 0)
        throw Error("CongruenceFailed", "det-power subgroup needs q = 1 mod n");
    std::vector<Elem> members;
    for (Elem i = 0; i < g->order(); ++i)
        if (f.is_nth_power(m2_det(f, g->matrix_of(i)), n)) members.push_back(i);
    return Subgroup(g, std::move(members));
}

Subgroup sl2_subgroup(const std::shared_ptr<const Gl2Group>& g) {
    std::vector<Elem> members;
    for (Elem i = 0; i < g->order(); ++i)
        if (m2_det(g->field(), g->matrix_of(i)) == 1) members.push_back(i);
    return Subgroup(g, std::move(members));
}

// ---- ProjMatGroup ----

std::int64_t ProjMatGroup::pack(const Mat2& m) const {
    const std::int64_t q = field_.q();
    return ((m.a * q + m.b) * q + m.c) * q + m.d;
}

Mat2 ProjMatGroup::unpack(std::int64_t v) const {
    const std::int64_t q = field_.q();
    Mat2 m;
    m.d = v % q;
    v /= q;
    m.c = v % q;
    v /= q;
    m.b = v % q;
    m.a = v / q;
    return m;
}

ProjMatGroup::ProjMatGroup(Field f, const std::vector<Mat2>& matrices) : field_(std::move(f)) {
    const std::int64_t q = field_.q();
    idx_of_.assign(q * q * q * q, -1);
    std::vector<std::int32_t> packed;
    packed.reserve(matrices.size());
    for (const Mat2& m : matrices)
        packed.push_back(static_cast<std::int32_t>(pack(proj_normalize(field_, m))));
    std::sort(packed.begin(), packed.end());
    packed.erase(std::unique(packed.begin(), packed.end()), packed.end());
    elems_ = std::move(packed);
    for (Elem i = 0; i < static_cast<Elem>(elems_.size()); ++i) idx_of_[elems_[i]] = static_cast<std::int32_t>(i);
    id_ = idx_of_[pack(Mat2{1, 0, 0, 1})];
    const Elem n = order();
    if (n <= 5000) {
        table_.resize(static_cast<size_t>(n) * n);
        for (Elem i = 0; i < n; ++i) {
            const Mat2 mi = unpack(elems_[i]);
            for (Elem j = 0; j < n; ++j)
                table_[i * n + j] = static_cast<std::int32_t>(
                    idx_of_[pack(proj_normalize(field_, m2_mul(field_, mi, unpack(elems_[j]))))]);
        }
    }
}

Elem ProjMatGroup::mul(Elem x, Elem y) const {
    if (!table_.empty()) return table_[x * order() + y];
    return idx_of_[pack(proj_normalize(field_, m2_mul(field_, unpack(elems_[x]), unpack(elems_[y]))))];
}

Elem ProjMatGroup::inv(Elem x) const {
    return idx_of_[pack(proj_normalize(field_, m2_inv(field_, unpack(elems_[x]))))];
}

Mat2 ProjMatGroup::class_rep(Elem x) const { return unpack(elems_[x]); }

Elem ProjMatGroup::class_of(const Mat2& m) const {
    return idx_of_[pack(proj_normalize(field_, m))];
}

ProjResult projective_group(const std::shared_ptr<const Gl2Group>& g) {
    std::vector<Mat2> mats;
    mats.reserve(g->order());
    for (Elem i = 0; i < g->order(); ++i) mats.push_back(g->matrix_of(i));
    auto proj = std::make_shared<ProjMatGroup>(g->field(), mats);
    std::vector<Elem> map(g->order());
    for (Elem i = 0; i < g->order(); ++i) map[i] = proj->class_of(g->matrix_of(i));
    return ProjResult{proj, GroupHom{g, proj, std::move(map)}};
}

ProjResult projective_group(const Subgroup& s) {
    auto gl2 = std::dynamic_pointer_cast<const Gl2Group>(s.parent);
    if (!gl2) throw Error("GroupMismatch", "projective_group needs a matrix group");
    std::vector<Mat2> mats;
    mats.reserve(s.members.size());
    for (Elem m : s.members) mats.push_back(gl2->matrix_of(m));
    auto proj = std::make_shared<ProjMatGroup>(gl2->field(), mats);
    auto sg = std::make_shared<SubgroupGroup>(s);
    std::vector<Elem> map(s.members.size());
    for (Elem i = 0; i < static_cast<Elem>(s.members.size()); ++i)
        map[i] = proj->class_of(gl2->matrix_of(s.members[i]));
    return ProjResult{proj, GroupHom{sg, proj, std::move(map)}};
}

std::shared_ptr<const ProjMatGroup> pgl2_group(const Field& f) {
    return projective_group(gl2_group(f)).group;
}

std::shared_ptr<const ProjMatGroup> psl2_group(const Field& f) {
    return projective_group(sl2_subgroup(gl2_group(f))).group;
}

Mat2 psl2_order2_witness(std::int64_t p) {
    if (p < 5 || !is_prime64(p)) throw Error("NoWitness", "requires a prime p >= 5");
    const Field f = Field::make(p, 1);
    std::int64_t r = -1;
    for (std::int64_t cand = 2; cand < p; ++cand) {
        if (cand == p - 1) continue;
        if (!f.is_nth_power(cand, 2)) {
            r = cand;
            break;
        }
    }
    if (r < 0) throw Error("NoWitness", "no admissible non-square found");
    const Mat2 x{1, f.add(r, 1), f.neg(1), f.neg(1)};
    if (m2_det(f, x) != r || f.is_nth_power(m2_det(f, x), 2))
        throw Error("NoWitness", "internal: determinant check failed");
    if (!m2_is_scalar(f, m2_mul(f, x, x)))
        throw Error("NoWitness", "internal: x^2 is not scalar");
    return x;
}

bool is_simple_classes(const GroupPtr& g) {
    const auto gens = generating_set(*g);
    const auto classes = conjugacy_classes(*g, gens);
    const size_t k = classes.size();
    if (k > 20) throw Error("BudgetExceeded", "too many conjugacy classes for subset scan");
    // identity class is the one containing identity()
    size_t id_cls = 0;
    for (size_t i = 0; i < k; ++i)
        if (std::binary_search(classes[i].begin(), classes[i].end(), g->identity())) id_cls = i;
    for (std::uint32_t massk = 0; massk < (1u << k); ++massk) {
        if (!(massk & (1u << id_cls))) continue;
        std::int64_t size = 0;
        for (size_t i = 0; i < k; ++i)
            if (massk & (1u << i)) size += static_cast<std::int64_t>(classes[i].size());
        if (size <= 1 || size >= g->order() || g->order() % size != 0) continue;
        // candidate normal subgroup: check closure under multiplication
        std::vector<Elem> members;
        for (size_t i = 0; i < k; ++i)
            if (massk & (1u << i)) members.insert(members.end(), classes[i].begin(), classes[i].end());
        std::vector<std::uint8_t> in(g->order(), 0);
        for (Elem m : members) in[m] = 1;
        bool closed = true;
        for (Elem a : members) {
            for (Elem b : members)
                if (!in[g->mul(a, b)]) {
                    closed = false;
                    break;
                }
            if (!closed) break;
        }
        if (closed) return false; // proper nontrivial normal subgroup found
    }
    return true;
}

} // namespace rsplit
