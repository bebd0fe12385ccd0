#include "rightsplit/group.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_map>

namespace rsplit {

Elem FiniteGroup::power(Elem x, std::int64_t e) const {
    if (e < 0) {
        x = inv(x);
        e = -e;
    }
    Elem acc = identity();
    while (e > 0) {
        if (e & 1) acc = mul(acc, x);
        x = mul(x, x);
        e >>= 1;
    }
    return acc;
}

std::int64_t FiniteGroup::element_order(Elem x) const {
    const Elem id = identity();
    Elem cur = x;
    std::int64_t k = 1;
    while (cur != id) {
        cur = mul(cur, x);
        ++k;
        if (k > order()) throw Error("IndexOutOfRange", "element order exceeded group order");
    }
    return k;
}

// ---- TableGroup ----

TableGroup::TableGroup(std::vector<Elem> table, Elem order, std::vector<std::string> labels)
    : table_(std::move(table)), labels_(std::move(labels)), n_(order) {
    if (static_cast<Elem>(table_.size()) != n_ * n_)
        throw Error("IndexOutOfRange", "table size != order^2");
    id_ = -1;
    for (Elem c = 0; c < n_ && id_ < 0; ++c) {
        bool ok = true;
        for (Elem a = 0; a < n_ && ok; ++a)
            if (table_[c * n_ + a] != a || table_[a * n_ + c] != a) ok = false;
        if (ok) id_ = c;
    }
    if (id_ < 0) throw Error("NotAGroup", "no identity element in table");
    inv_.assign(n_, -1);
    for (Elem a = 0; a < n_; ++a) {
        for (Elem b = 0; b < n_; ++b)
            if (table_[a * n_ + b] == id_ && table_[b * n_ + a] == id_) {
                inv_[a] = b;
                break;
            }
        if (inv_[a] < 0) throw Error("NotAGroup", "element without inverse in table");
    }
}

std::shared_ptr<TableGroup> TableGroup::from_group(const FiniteGroup& g) {
    const Elem n = g.order();
    std::vector<Elem> table(static_cast<size_t>(n) * n);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) table[a * n + b] = g.mul(a, b);
    std::vector<std::string> labels(n);
    for (Elem a = 0; a < n; ++a) labels[a] = g.label(a);
    return std::make_shared<TableGroup>(std::move(table), n, std::move(labels));
}

std::string TableGroup::label(Elem a) const {
    if (!labels_.empty()) return labels_[a];
    return std::to_string(a);
}

std::string CyclicGroup::label(Elem a) const {
    if (a == 0) return "1";
    if (a == 1) return "g";
    return "g^" + std::to_string(a);
}

// ---- PermGroup ----

PermGroup::PermGroup(int n) : n_(n) {
    if (n < 1 || n > 8) throw Error("IndexOutOfRange", "sym:n supported for 1 <= n <= 8");
    std::vector<std::uint8_t> p(n);
    for (int i = 0; i < n; ++i) p[i] = static_cast<std::uint8_t>(i);
    do {
        perms_.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
}

Elem PermGroup::rank(const std::vector<std::uint8_t>& p) const {
    // Lehmer code
    Elem r = 0;
    for (int i = 0; i < n_; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n_; ++j)
            if (p[j] < p[i]) ++smaller;
        Elem f = 1;
        for (int k = 2; k <= n_ - 1 - i; ++k) f *= k;
        r += smaller * f;
    }
    return r;
}

Elem PermGroup::mul(Elem a, Elem b) const {
    const auto& pa = perms_[a];
    const auto& pb = perms_[b];
    std::vector<std::uint8_t> c(n_);
    for (int i = 0; i < n_; ++i) c[i] = pb[pa[i]];
    return rank(c);
}

Elem PermGroup::inv(Elem a) const {
    const auto& pa = perms_[a];
    std::vector<std::uint8_t> c(n_);
    for (int i = 0; i < n_; ++i) c[pa[i]] = static_cast<std::uint8_t>(i);
    return rank(c);
}

std::string PermGroup::label(Elem a) const {
    const auto& p = perms_[a];
    std::string out;
    std::vector<bool> seen(n_, false);
    for (int i = 0; i < n_; ++i) {
        if (seen[i] || p[i] == i) continue;
        out += "(";
        int j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out += " ";
            out += std::to_string(j + 1);
            first = false;
            j = p[j];
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

Elem FnGroup::inv(Elem a) const {
    if (inv_) return inv_(a);
    if (a == id_) return id_;
    Elem prev = a, cur = mul_(a, a);
    while (cur != id_) {
        prev = cur;
        cur = mul_(cur, a);
    }
    return prev; // a^(k-1) where a^k = 1
}

// ---- Subgroup ----

Subgroup::Subgroup(GroupPtr parent_, std::vector<Elem> members_)
    : parent(std::move(parent_)), members(std::move(members_)) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    mask.assign(parent->order(), 0);
    for (Elem e : members) {
        if (e < 0 || e >= parent->order())
            throw Error("IndexOutOfRange", "subgroup member out of range");
        mask[e] = 1;
    }
}

Elem Subgroup::local_index(Elem parent_elem) const {
    auto it = std::lower_bound(members.begin(), members.end(), parent_elem);
    if (it == members.end() || *it != parent_elem) return -1;
    return static_cast<Elem>(it - members.begin());
}

SubgroupGroup::SubgroupGroup(Subgroup sub) : sub_(std::move(sub)) {
    to_local_.assign(sub_.parent->order(), -1);
    for (Elem i = 0; i < static_cast<Elem>(sub_.members.size()); ++i)
        to_local_[sub_.members[i]] = i;
    id_ = to_local_[sub_.parent->identity()];
    if (id_ < 0) throw Error("NotAGroup", "subgroup does not contain the identity");
}

// ---- closure / generation ----

std::vector<Elem> closure(const FiniteGroup& g, std::vector<Elem> gens) {
    std::vector<std::uint8_t> in(g.order(), 0);
    std::vector<Elem> elems;
    const Elem id = g.identity();
    in[id] = 1;
    elems.push_back(id);
    // make the generator set inverse-closed so BFS right-multiplication
    // reaches the full subgroup
    std::vector<Elem> gset;
    for (Elem x : gens) {
        if (x < 0 || x >= g.order()) throw Error("IndexOutOfRange", "generator out of range");
        gset.push_back(x);
        gset.push_back(g.inv(x));
    }
    std::sort(gset.begin(), gset.end());
    gset.erase(std::unique(gset.begin(), gset.end()), gset.end());
    for (size_t head = 0; head < elems.size(); ++head) {
        const Elem x = elems[head];
        for (Elem s : gset) {
            const Elem y = g.mul(x, s);
            if (!in[y]) {
                in[y] = 1;
                elems.push_back(y);
            }
        }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<Elem>& gens) {
    return Subgroup(g, closure(*g, gens));
}

std::vector<Elem> generating_set(const FiniteGroup& g) {
    std::vector<Elem> gens;
    std::vector<Elem> cur = {g.identity()};
    std::vector<std::uint8_t> in(g.order(), 0);
    in[g.identity()] = 1;
    while (static_cast<Elem>(cur.size()) < g.order()) {
        Elem next = -1;
        for (Elem x = 0; x < g.order(); ++x)
            if (!in[x]) {
                next = x;
                break;
            }
        gens.push_back(next);
        cur = closure(g, gens);
        for (Elem x : cur) in[x] = 1;
    }
    return gens;
}

std::vector<Elem> normal_closure(const FiniteGroup& g, std::vector<Elem> gens,
                                 const std::vector<Elem>& g_gens) {
    std::vector<Elem> cur = closure(g, gens);
    std::vector<std::uint8_t> in(g.order(), 0);
    for (Elem x : cur) in[x] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (Elem s : g_gens) {
            for (Elem x : cur) {
                const Elem c = g.conjugate(s, x);
                if (!in[c]) {
                    gens.push_back(c);
                    cur = closure(g, gens);
                    std::fill(in.begin(), in.end(), 0);
                    for (Elem y : cur) in[y] = 1;
                    changed = true;
                    break;
                }
            }
            if (changed) break;
        }
    }
    return cur;
}

Subgroup derived_subgroup(const GroupPtr& g) {
    const Elem n = g->order();
    if (n > 100000) throw Error("CommutatorTooLarge", "derived subgroup capped at order 10^5");
    if (n <= 2048) {
        std::vector<std::uint8_t> seen(n, 0);
        std::vector<Elem> comms;
        for (Elem a = 0; a < n; ++a) {
            const Elem ia = g->inv(a);
            for (Elem b = 0; b < n; ++b) {
                const Elem c = g->mul(g->mul(a, b), g->mul(ia, g->inv(b)));
                if (!seen[c]) {
                    seen[c] = 1;
                    comms.push_back(c);
                }
            }
        }
        return Subgroup(g, closure(*g, comms));
    }
    const auto gens = generating_set(*g);
    std::vector<Elem> comms;
    for (Elem a : gens)
        for (Elem b : gens)
            comms.push_back(g->mul(g->mul(a, b), g->mul(g->inv(a), g->inv(b))));
    return Subgroup(g, normal_closure(*g, comms, gens));
}

bool is_normal(const FiniteGroup& g, const Subgroup& h, const std::vector<Elem>& g_gens) {
    for (Elem s : g_gens)
        for (Elem x : h.members)
            if (!h.contains(g.conjugate(s, x))) return false;
    return true;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
    return is_normal(g, h, generating_set(g));
}

CosetTable coset_table(const FiniteGroup& g, const Subgroup& h) {
    CosetTable t;
    t.coset_of.assign(g.order(), -1);
    for (Elem x = 0; x < g.order(); ++x) {
        if (t.coset_of[x] >= 0) continue;
        const Elem ord = static_cast<Elem>(t.reps.size());
        t.reps.push_back(x);
        for (Elem m : h.members) t.coset_of[g.mul(m, x)] = ord; // right coset H*x
    }
    return t;
}

Transversal transversal_enumerate(const GroupPtr& g, const Subgroup& h) {
    CosetTable t = coset_table(*g, h);
    const Elem idc = t.coset_of[g->identity()];
    std::vector<Elem> reps;
    reps.push_back(t.reps[idc]);
    for (Elem c = 0; c < t.index(); ++c)
        if (c != idc) reps.push_back(t.reps[c]);
    return Transversal{g, h, std::move(reps)};
}

Transversal transversal_identity_first(const GroupPtr& g, const Subgroup& h) {
    Transversal t = transversal_enumerate(g, h);
    t.reps[0] = g->identity();
    return t;
}

std::pair<GroupPtr, GroupHom> quotient(const GroupPtr& g, const Subgroup& n) {
    if (!is_normal(*g, n)) throw Error("NotNormal", "quotient requires a normal subgroup");
    CosetTable t = coset_table(*g, n);
    const Elem k = t.index();
    std::vector<Elem> table(static_cast<size_t>(k) * k);
    for (Elem a = 0; a < k; ++a)
        for (Elem b = 0; b < k; ++b) table[a * k + b] = t.coset_of[g->mul(t.reps[a], t.reps[b])];
    std::vector<std::string> labels(k);
    for (Elem c = 0; c < k; ++c) labels[c] = "[" + g->label(t.reps[c]) + "]";
    auto q = std::make_shared<TableGroup>(std::move(table), k, std::move(labels));
    GroupHom hom{g, q, std::move(t.coset_of)};
    return {q, std::move(hom)};
}

std::pair<GroupPtr, GroupHom> abelianization(const GroupPtr& g) {
    return quotient(g, derived_subgroup(g));
}

bool is_cyclic(const FiniteGroup& g) {
    for (Elem x = 0; x < g.order(); ++x)
        if (g.element_order(x) == g.order()) return true;
    return false;
}

bool is_abelian(const FiniteGroup& g) {
    for (Elem a = 0; a < g.order(); ++a)
        for (Elem b = a + 1; b < g.order(); ++b)
            if (g.mul(a, b) != g.mul(b, a)) return false;
    return true;
}

Subgroup unique_abelian_index_n(const GroupPtr& g, std::int64_t n) {
    auto [ab, pi] = abelianization(g);
    if (!is_cyclic(*ab))
        throw Error("AbelianizationNotCyclic", "G/[G,G] is not cyclic");
    const Elem m = ab->order();
    if (n <= 0 || m % n != 0)
        throw Error("IndexDoesNotDivide", "n does not divide |G/[G,G]|");
    std::vector<std::uint8_t> nth_power(ab->order(), 0);
    for (Elem y = 0; y < ab->order(); ++y) nth_power[ab->power(y, n)] = 1;
    std::vector<Elem> members;
    for (Elem x = 0; x < g->order(); ++x)
        if (nth_power[pi(x)]) members.push_back(x);
    Subgroup h(g, std::move(members));
    // postconditions: normal, index n, cyclic quotient
    if (g->order() % h.size() != 0 || g->order() / h.size() != n)
        throw Error("IndexDoesNotDivide", "internal: wrong index");
    auto [q, proj] = quotient(g, h);
    (void)proj;
    if (!is_cyclic(*q)) throw Error("AbelianizationNotCyclic", "internal: quotient not cyclic");
    return h;
}

std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& g,
                                                 const std::vector<Elem>& g_gens) {
    std::vector<std::uint8_t> seen(g.order(), 0);
    std::vector<std::vector<Elem>> classes;
    for (Elem x = 0; x < g.order(); ++x) {
        if (seen[x]) continue;
        std::vector<Elem> cls = {x};
        seen[x] = 1;
        for (size_t head = 0; head < cls.size(); ++head) {
            for (Elem s : g_gens) {
                const Elem y = g.conjugate(s, cls[head]);
                if (!seen[y]) {
                    seen[y] = 1;
                    cls.push_back(y);
                }
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::vector<Subgroup> normal_subgroups(const GroupPtr& g) {
    const auto gens = generating_set(*g);
    const auto classes = conjugacy_classes(*g, gens);
    // start from single-class normal closures, then close under joins
    std::vector<std::vector<Elem>> found;
    auto add = [&](std::vector<Elem> memb) {
        for (const auto& f : found)
            if (f == memb) return false;
        found.push_back(std::move(memb));
        return true;
    };
    add({g->identity()});
    for (const auto& cls : classes) {
        add(closure(*g, cls)); // generated by a full class => normal
    }
    bool grew = true;
    while (grew) {
        grew = false;
        const size_t cnt = found.size();
        for (size_t i = 0; i < cnt && !grew; ++i)
            for (size_t j = i + 1; j < cnt && !grew; ++j) {
                std::vector<Elem> un = found[i];
                un.insert(un.end(), found[j].begin(), found[j].end());
                auto joined = closure(*g, un);
                if (add(std::move(joined))) grew = true;
            }
    }
    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (auto& memb : found) out.emplace_back(g, std::move(memb));
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.members < b.members;
    });
    return out;
}

std::map<std::int64_t, Elem> order_histogram(const FiniteGroup& g) {
    std::map<std::int64_t, Elem> h;
    for (Elem x = 0; x < g.order(); ++x) ++h[g.element_order(x)];
    return h;
}

// ---- isomorphism testing ----

namespace {

// Attempt to extend gen->image assignments to a homomorphism on the closure;
// returns false on contradiction. On success fills img for the closure.
bool try_partial(const FiniteGroup& g1, const FiniteGroup& g2, const std::vector<Elem>& gens,
                 const std::vector<Elem>& imgs, std::vector<Elem>& img_of,
                 std::vector<Elem>& closure_list, bool require_injective) {
    std::fill(img_of.begin(), img_of.end(), -1);
    closure_list.clear();
    img_of[g1.identity()] = g2.identity();
    closure_list.push_back(g1.identity());
    std::vector<std::uint8_t> used(g2.order(), 0);
    used[g2.identity()] = 1;
    for (size_t i = 0; i < gens.size(); ++i) {
        const Elem x = gens[i], y = imgs[i];
        if (img_of[x] < 0) {
            if (require_injective && used[y]) return false;
            img_of[x] = y;
            used[y] = 1;
            closure_list.push_back(x);
        } else if (img_of[x] != y) {
            return false;
        }
    }
    for (size_t head = 0; head < closure_list.size(); ++head) {
        const Elem x = closure_list[head];
        for (size_t i = 0; i < gens.size(); ++i) {
            const Elem y = g1.mul(x, gens[i]);
            const Elem iy = g2.mul(img_of[x], imgs[i]);
            if (img_of[y] < 0) {
                if (require_injective && used[iy]) return false;
                img_of[y] = iy;
                used[iy] = 1;
                closure_list.push_back(y);
            } else if (img_of[y] != iy) {
                return false;
            }
        }
    }
    return true;
}

bool backtrack_iso(const FiniteGroup& g1, const FiniteGroup& g2, std::vector<Elem>& gens,
                   std::vector<Elem>& imgs, std::vector<Elem>& img_of,
                   std::vector<Elem>& closure_list,
                   const std::vector<std::vector<Elem>>& candidates, size_t pos) {
    if (pos == gens.size()) {
        return try_partial(g1, g2, gens, imgs, img_of, closure_list, true) &&
               static_cast<Elem>(closure_list.size()) == g1.order();
    }
    for (Elem cand : candidates[pos]) {
        imgs[pos] = cand;
        std::vector<Elem> sub_gens(gens.begin(), gens.begin() + pos + 1);
        std::vector<Elem> sub_imgs(imgs.begin(), imgs.begin() + pos + 1);
        if (!try_partial(g1, g2, sub_gens, sub_imgs, img_of, closure_list, true)) continue;
        if (backtrack_iso(g1, g2, gens, imgs, img_of, closure_list, candidates, pos + 1))
            return true;
    }
    return false;
}

} // namespace

IsoResult is_isomorphic(const GroupPtr& g1, const GroupPtr& g2,
                        const std::optional<GroupHom>& candidate) {
    IsoResult res;
    if (g1->order() != g2->order()) {
        res.verdict = IsoResult::Verdict::No;
        res.detail = "order mismatch: " + std::to_string(g1->order()) + " vs " +
                     std::to_string(g2->order());
        return res;
    }
    const auto h1 = order_histogram(*g1);
    const auto h2 = order_histogram(*g2);
    if (h1 != h2) {
        // prefer an element order present on one side only, else the first
        // order whose count differs
        std::int64_t witness_order = 0;
        for (const auto& [ord, cnt] : h1)
            if (h2.find(ord) == h2.end()) {
                witness_order = ord;
                break;
            }
        if (witness_order == 0)
            for (const auto& [ord, cnt] : h2)
                if (h1.find(ord) == h1.end()) {
                    witness_order = ord;
                    break;
                }
        if (witness_order == 0)
            for (const auto& [ord, cnt] : h1)
                if (h2.at(ord) != cnt) {
                    witness_order = ord;
                    break;
                }
        res.verdict = IsoResult::Verdict::No;
        res.detail = "element-order histogram mismatch at order " + std::to_string(witness_order);
        return res;
    }
    if (candidate) {
        const auto chk = verify_hom(*candidate);
        if (chk.ok && is_bijective(*candidate)) {
            res.verdict = IsoResult::Verdict::Yes;
            res.witness = *candidate;
            res.detail = "candidate map verified (" + chk.mode + ")";
        } else {
            res.verdict = IsoResult::Verdict::No;
            res.detail = "candidate map rejected: " + chk.detail;
        }
        return res;
    }
    if (g1->order() > 512) {
        res.verdict = IsoResult::Verdict::Indeterminate;
        res.detail = "order above backtracking cap and no candidate map supplied";
        return res;
    }
    auto gens = generating_set(*g1);
    if (gens.empty()) { // trivial group
        GroupHom hom{g1, g2, {g2->identity()}};
        res.verdict = IsoResult::Verdict::Yes;
        res.witness = std::move(hom);
        return res;
    }
    std::vector<std::vector<Elem>> candidates(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) {
        const std::int64_t ord = g1->element_order(gens[i]);
        for (Elem y = 0; y < g2->order(); ++y)
            if (g2->element_order(y) == ord) candidates[i].push_back(y);
    }
    std::vector<Elem> imgs(gens.size(), -1);
    std::vector<Elem> img_of(g1->order(), -1), closure_list;
    if (backtrack_iso(*g1, *g2, gens, imgs, img_of, closure_list, candidates, 0)) {
        GroupHom hom{g1, g2, img_of};
        res.verdict = IsoResult::Verdict::Yes;
        res.witness = std::move(hom);
        res.detail = "backtracking found a generator-image isomorphism";
    } else {
        res.verdict = IsoResult::Verdict::No;
        res.detail = "backtracking exhausted all generator images";
    }
    return res;
}

// ---- verification ----

CheckResult verify_hom(const GroupHom& hom, const VerifyPolicy& policy) {
    CheckResult out;
    const auto& d = *hom.domain;
    const auto& c = *hom.codomain;
    if (static_cast<Elem>(hom.map.size()) != d.order())
        return {false, "structural", "map size != domain order"};
    if (hom.map[d.identity()] != c.identity())
        return {false, "structural", "identity not preserved"};
    if (d.order() <= policy.exhaustive_cap) {
        out.mode = "exhaustive";
        for (Elem a = 0; a < d.order(); ++a)
            for (Elem b = 0; b < d.order(); ++b)
                if (hom.map[d.mul(a, b)] != c.mul(hom.map[a], hom.map[b])) {
                    out.ok = false;
                    out.detail = "hom fails at (" + std::to_string(a) + "," + std::to_string(b) + ")";
                    return out;
                }
        return out;
    }
    out.mode = "sampled";
    std::mt19937_64 rng(policy.seed);
    std::uniform_int_distribution<Elem> dist(0, d.order() - 1);
    for (std::int64_t i = 0; i < policy.samples; ++i) {
        const Elem a = dist(rng), b = dist(rng);
        if (hom.map[d.mul(a, b)] != c.mul(hom.map[a], hom.map[b])) {
            out.ok = false;
            out.detail = "hom fails at sampled (" + std::to_string(a) + "," + std::to_string(b) + ")";
            return out;
        }
    }
    return out;
}

bool is_bijective(const GroupHom& hom) {
    if (hom.domain->order() != hom.codomain->order()) return false;
    std::vector<std::uint8_t> used(hom.codomain->order(), 0);
    for (Elem x : hom.map) {
        if (x < 0 || x >= hom.codomain->order() || used[x]) return false;
        used[x] = 1;
    }
    return true;
}

CheckResult verify_group_axioms(const FiniteGroup& g, const VerifyPolicy& policy) {
    CheckResult out;
    const Elem id = g.identity();
    for (Elem a = 0; a < g.order(); ++a) {
        if (g.mul(id, a) != a || g.mul(a, id) != a)
            return {false, "structural", "identity axiom fails at " + std::to_string(a)};
        if (g.mul(a, g.inv(a)) != id || g.mul(g.inv(a), a) != id)
            return {false, "structural", "inverse axiom fails at " + std::to_string(a)};
    }
    if (g.order() <= policy.exhaustive_cap) {
        out.mode = "exhaustive";
        for (Elem a = 0; a < g.order(); ++a)
            for (Elem b = 0; b < g.order(); ++b) {
                const Elem ab = g.mul(a, b);
                for (Elem c = 0; c < g.order(); ++c)
                    if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
                        return {false, "exhaustive", "associativity fails"};
            }
        return out;
    }
    out.mode = "sampled";
    std::mt19937_64 rng(policy.seed);
    std::uniform_int_distribution<Elem> dist(0, g.order() - 1);
    for (std::int64_t i = 0; i < policy.samples; ++i) {
        const Elem a = dist(rng), b = dist(rng), c = dist(rng);
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
            return {false, "sampled", "associativity fails"};
    }
    return out;
}

CheckResult verify_subgroup(const Subgroup& h, const VerifyPolicy& policy) {
    const auto& g = *h.parent;
    if (!h.contains(g.identity())) return {false, "structural", "missing identity"};
    if (static_cast<std::int64_t>(h.members.size()) * static_cast<std::int64_t>(h.members.size()) <=
        policy.exhaustive_cap * policy.exhaustive_cap) {
        for (Elem a : h.members) {
            if (!h.contains(g.inv(a))) return {false, "exhaustive", "not closed under inverse"};
            for (Elem b : h.members)
                if (!h.contains(g.mul(a, b))) return {false, "exhaustive", "not closed under product"};
        }
        return {true, "exhaustive", ""};
    }
    std::mt19937_64 rng(policy.seed);
    std::uniform_int_distribution<size_t> dist(0, h.members.size() - 1);
    for (Elem a : h.members)
        if (!h.contains(g.inv(a))) return {false, "sampled", "not closed under inverse"};
    for (std::int64_t i = 0; i < policy.samples; ++i) {
        const Elem a = h.members[dist(rng)], b = h.members[dist(rng)];
        if (!h.contains(g.mul(a, b))) return {false, "sampled", "not closed under product"};
    }
    return {true, "sampled", ""};
}

CheckResult verify_transversal(const Transversal& t) {
    const auto& g = *t.parent;
    if (t.reps.empty() || !t.subgroup.contains(t.reps[0]))
        return {false, "exhaustive", "reps[0] not in the subgroup"};
    if (static_cast<Elem>(t.reps.size()) * t.subgroup.size() != g.order())
        return {false, "exhaustive", "|reps| * |H| != |G|"};
    std::vector<std::uint8_t> covered(g.order(), 0);
    for (Elem r : t.reps)
        for (Elem m : t.subgroup.members) {
            const Elem x = g.mul(m, r);
            if (covered[x]) return {false, "exhaustive", "cosets overlap"};
            covered[x] = 1;
        }
    return {true, "exhaustive", ""};
}

bool centralizes(const FiniteGroup& g, Elem x, const std::vector<Elem>& elems) {
    for (Elem h : elems)
        if (g.mul(x, h) != g.mul(h, x)) return false;
    return true;
}

std::string export_table(const FiniteGroup& g) {
    std::ostringstream os;
    os << "order=" << g.order() << "\n";
    for (Elem a = 0; a < g.order(); ++a) {
        for (Elem b = 0; b < g.order(); ++b) {
            if (b) os << ' ';
            os << g.mul(a, b);
        }
        os << '\n';
    }
    return os.str();
}

std::shared_ptr<TableGroup> parse_table(const std::string& text) {
    std::istringstream is(text);
    std::string first;
    if (!std::getline(is, first) || first.rfind("order=", 0) != 0)
        throw Error("ParseError", "multiplication table must start with 'order=N'");
    const Elem n = std::stoll(first.substr(6));
    if (n < 1 || n > 5000) throw Error("OrderCap", "table order out of range [1,5000]");
    std::vector<Elem> table;
    table.reserve(static_cast<size_t>(n) * n);
    Elem v;
    while (is >> v) {
        if (v < 0 || v >= n) throw Error("ParseError", "table entry out of range");
        table.push_back(v);
    }
    if (static_cast<Elem>(table.size()) != n * n)
        throw Error("ParseError", "expected " + std::to_string(n * n) + " entries");
    return std::make_shared<TableGroup>(std::move(table), n);
}

} // namespace rsplit
