#include "rightsplit/sdp.hpp"

#include <algorithm>
#include <random>

namespace rsplit {

bool transversal_multiplicatively_closed(const GroupPtr& g, const Transversal& t) {
    std::vector<Elem> sorted = t.reps;
    std::sort(sorted.begin(), sorted.end());
    for (Elem a : t.reps)
        for (Elem b : t.reps)
            if (!std::binary_search(sorted.begin(), sorted.end(), g->mul(a, b))) return false;
    return true;
}

std::int64_t validate_sdp_alignment(const SdpData& data) {
    if (data.factors.empty()) throw Error("MisalignedTransversals", "no factors");
    const std::int64_t n = static_cast<std::int64_t>(data.factors[0].T.reps.size());
    std::vector<std::vector<Elem>> qtables;
    for (const auto& f : data.factors) {
        if (f.G->order() % f.H.size() != 0 || f.G->order() / f.H.size() != n)
            throw Error("MisalignedTransversals", "factor indices differ");
        if (!is_normal(*f.G, f.H)) throw Error("NotNormal", "factor subgroup not normal");
        const auto tv = verify_transversal(f.T);
        if (!tv.ok) throw Error("MisalignedTransversals", "invalid transversal: " + tv.detail);
        // quotient-level multiplication table on transversal positions
        const CosetTable ct = coset_table(*f.G, f.H);
        std::vector<Elem> pos_of_coset(ct.index(), -1);
        for (std::int64_t i = 0; i < n; ++i) pos_of_coset[ct.coset_of[f.T.reps[i]]] = i;
        std::vector<Elem> table(n * n);
        for (std::int64_t i = 0; i < n; ++i)
            for (std::int64_t j = 0; j < n; ++j)
                table[i * n + j] = pos_of_coset[ct.coset_of[f.G->mul(f.T.reps[i], f.T.reps[j])]];
        qtables.push_back(std::move(table));
    }
    for (size_t i = 1; i < qtables.size(); ++i)
        if (qtables[i] != qtables[0])
            throw Error("MisalignedTransversals",
                        "position matching is not a quotient isomorphism");
    return n;
}

std::int64_t validate_sdp_closed(const SdpData& data) {
    const std::int64_t n = validate_sdp_alignment(data);
    for (const auto& f : data.factors)
        if (!transversal_multiplicatively_closed(f.G, f.T))
            throw Error("MisalignedTransversals", "transversal not multiplicatively closed");
    return n;
}

// ---- SdpGroup2 ----

SdpGroup2::SdpGroup2(SdpFactor a, SdpFactor b) : a_(std::move(a)), b_(std::move(b)) {
    na_ = a_.H.size();
    nb_ = b_.H.size();
    n_ = static_cast<Elem>(a_.T.reps.size());
    if (static_cast<Elem>(b_.T.reps.size()) != n_)
        throw Error("MisalignedTransversals", "transversal lengths differ");
    a_local_.assign(a_.G->order(), -1);
    for (Elem i = 0; i < na_; ++i) a_local_[a_.H.members[i]] = i;
    b_local_.assign(b_.G->order(), -1);
    for (Elem i = 0; i < nb_; ++i) b_local_[b_.H.members[i]] = i;
    tmul_.assign(n_ * n_, -1);
    tinv_.assign(n_, -1);
    for (Elem i = 0; i < n_; ++i)
        for (Elem j = 0; j < n_; ++j) {
            const Elem prod = a_.G->mul(a_.T.reps[i], a_.T.reps[j]);
            for (Elem k = 0; k < n_; ++k)
                if (a_.T.reps[k] == prod) {
                    tmul_[i * n_ + j] = k;
                    break;
                }
            if (tmul_[i * n_ + j] < 0)
                throw Error("MisalignedTransversals", "transversal not multiplicatively closed");
        }
    Elem t0 = -1;
    for (Elem i = 0; i < n_; ++i)
        if (a_.T.reps[i] == a_.G->identity()) t0 = i;
    if (t0 < 0 || b_.T.reps[t0] != b_.G->identity())
        throw Error("MisalignedTransversals", "identity must be a representative in all factors");
    for (Elem i = 0; i < n_; ++i)
        for (Elem j = 0; j < n_; ++j)
            if (tmul_[i * n_ + j] == t0) tinv_[i] = j;
    id_ = encode(a_local_[a_.G->identity()], b_local_[b_.G->identity()], t0);
}

Elem SdpGroup2::conj_local(const SdpFactor& f, const std::vector<Elem>& to_local, Elem h_local,
                           Elem t) const {
    const Elem rep = f.T.reps[t];
    const Elem conj = f.G->mul(f.G->mul(f.G->inv(rep), f.H.members[h_local]), rep);
    return to_local[conj];
}

Elem SdpGroup2::mul(Elem x, Elem y) const {
    const Decoded dx = decode(x), dy = decode(y);
    // twist each h-part by the second operand's representative, then multiply
    const Elem ca = conj_local(a_, a_local_, dx.ha, dy.t);
    const Elem cb = conj_local(b_, b_local_, dx.hb, dy.t);
    const Elem ha = a_local_[a_.G->mul(a_.H.members[ca], a_.H.members[dy.ha])];
    const Elem hb = b_local_[b_.G->mul(b_.H.members[cb], b_.H.members[dy.hb])];
    return encode(ha, hb, tmul_[dx.t * n_ + dy.t]);
}

Elem SdpGroup2::inv(Elem x) const {
    const Decoded dx = decode(x);
    const Elem tj = tinv_[dx.t];
    const Elem rep_a = a_.T.reps[tj];
    const Elem rep_b = b_.T.reps[tj];
    const Elem ka = a_local_[a_.G->mul(a_.G->mul(a_.G->inv(rep_a), a_.G->inv(a_.H.members[dx.ha])), rep_a)];
    const Elem kb = b_local_[b_.G->mul(b_.G->mul(b_.G->inv(rep_b), b_.G->inv(b_.H.members[dx.hb])), rep_b)];
    return encode(ka, kb, tj);
}

std::string SdpGroup2::label(Elem x) const {
    const Decoded dx = decode(x);
    return "((" + a_.G->label(a_.H.members[dx.ha]) + "," + b_.G->label(b_.H.members[dx.hb]) +
           ")," + a_.G->label(a_.T.reps[dx.t]) + "H)";
}

GroupPtr sdp_build(const SdpData& data) {
    const std::int64_t n = validate_sdp_closed(data);
    std::int64_t total = n;
    for (const auto& f : data.factors) total *= f.H.size();
    if (total > 100000) throw Error("OrderCap", "semidirect product capped at order 1e5");

    if (data.factors.size() == 1) {
        // one-factor law: ((h), t_i)((k), t_j) = ((x_j^-1 h x_j k), t_i t_j)
        const SdpFactor f = data.factors[0];
        const Elem nt = static_cast<Elem>(f.T.reps.size());
        auto local = std::make_shared<std::vector<Elem>>(f.G->order(), -1);
        for (Elem i = 0; i < f.H.size(); ++i) (*local)[f.H.members[i]] = i;
        auto tmul = std::make_shared<std::vector<Elem>>(nt * nt, -1);
        Elem t0 = -1;
        for (Elem i = 0; i < nt; ++i) {
            if (f.T.reps[i] == f.G->identity()) t0 = i;
            for (Elem j = 0; j < nt; ++j) {
                const Elem prod = f.G->mul(f.T.reps[i], f.T.reps[j]);
                for (Elem k = 0; k < nt; ++k)
                    if (f.T.reps[k] == prod) (*tmul)[i * nt + j] = k;
            }
        }
        if (t0 < 0) throw Error("MisalignedTransversals", "identity must be a representative");
        auto mulfn = [f, local, tmul, nt](Elem x, Elem y) -> Elem {
            const Elem hx = x / nt, tx = x % nt, hy = y / nt, ty = y % nt;
            const Elem rep = f.T.reps[ty];
            const Elem conj = f.G->mul(f.G->mul(f.G->inv(rep), f.H.members[hx]), rep);
            const Elem h = (*local)[f.G->mul(conj, f.H.members[hy])];
            return h * nt + (*tmul)[tx * nt + ty];
        };
        auto labelfn = [f, nt](Elem x) {
            return "((" + f.G->label(f.H.members[x / nt]) + ")," + f.G->label(f.T.reps[x % nt]) +
                   "H)";
        };
        const Elem id = (*local)[f.G->identity()] * nt + t0;
        return std::make_shared<FnGroup>(f.H.size() * nt, id, mulfn, nullptr, labelfn);
    }

    std::shared_ptr<const SdpGroup2> cur =
        std::make_shared<SdpGroup2>(data.factors[0], data.factors[1]);
    for (size_t i = 2; i < data.factors.size(); ++i) {
        // wrap the current product: H = all ((h...), t0), T = ((1...), t)
        GroupPtr curg = cur;
        const Elem n_idx = cur->index_n();
        const Elem hsize = cur->order() / n_idx;
        const Elem t0 = cur->decode(cur->identity()).t;
        std::vector<Elem> hmembers;
        hmembers.reserve(hsize);
        for (Elem j = 0; j < hsize; ++j) hmembers.push_back(j * n_idx + t0);
        Subgroup hsub(curg, std::move(hmembers));
        std::vector<Elem> treps;
        const Elem id_h = cur->identity() / n_idx; // combined H-part of the identity
        for (Elem t = 0; t < n_idx; ++t) treps.push_back(id_h * n_idx + t);
        (void)t0; // identity sits at position t0 in every factor, including here
        Transversal tt{curg, hsub, std::move(treps)};
        SdpFactor wrapped{curg, hsub, tt};
        cur = std::make_shared<SdpGroup2>(wrapped, data.factors[i]);
    }
    return cur;
}

FiberProduct fiber_product(const SdpData& data) {
    if (data.factors.size() != 2)
        throw Error("MisalignedTransversals", "fiber product is defined for two factors");
    const std::int64_t n = validate_sdp_alignment(data);
    const auto& f1 = data.factors[0];
    const auto& f2 = data.factors[1];
    auto prod = std::make_shared<DirectProductGroup>(f1.G, f2.G);
    std::vector<Elem> members;
    members.reserve(n * f1.H.size() * f2.H.size());
    for (std::int64_t i = 0; i < n; ++i)
        for (Elem h1 : f1.H.members) {
            const Elem a = f1.G->mul(f1.T.reps[i], h1);
            for (Elem h2 : f2.H.members)
                members.push_back(prod->encode(a, f2.G->mul(f2.T.reps[i], h2)));
        }
    Subgroup sub(prod, std::move(members));
    if (sub.size() != n * f1.H.size() * f2.H.size())
        throw Error("MisalignedTransversals", "fiber cosets overlap");
    return FiberProduct{prod, std::move(sub)};
}

GroupHom fiber_iso_check(const SdpData& data, std::int64_t samples, std::uint64_t seed) {
    FiberProduct fp = fiber_product(data);
    auto sdpg = sdp_build(data);
    auto sdp2 = std::dynamic_pointer_cast<const SdpGroup2>(sdpg);
    auto fib = std::make_shared<SubgroupGroup>(fp.sub);
    const auto& f1 = data.factors[0];
    const auto& f2 = data.factors[1];
    const std::int64_t n = static_cast<std::int64_t>(f1.T.reps.size());

    // coset ordinal -> transversal position for factor 1
    const CosetTable ct1 = coset_table(*f1.G, f1.H);
    std::vector<Elem> coset_to_t(ct1.index(), -1);
    for (std::int64_t i = 0; i < n; ++i) coset_to_t[ct1.coset_of[f1.T.reps[i]]] = i;

    std::vector<Elem> a_local(f1.G->order(), -1), b_local(f2.G->order(), -1);
    for (Elem i = 0; i < f1.H.size(); ++i) a_local[f1.H.members[i]] = i;
    for (Elem i = 0; i < f2.H.size(); ++i) b_local[f2.H.members[i]] = i;

    std::vector<Elem> map(fib->order());
    for (Elem l = 0; l < fib->order(); ++l) {
        const auto [a, b] = fp.product->decode(fib->to_parent(l));
        const Elem t = coset_to_t[ct1.coset_of[a]];
        const Elem h1 = a_local[f1.G->mul(f1.G->inv(f1.T.reps[t]), a)];
        const Elem h2 = b_local[f2.G->mul(f2.G->inv(f2.T.reps[t]), b)];
        if (h1 < 0 || h2 < 0)
            throw Error("MisalignedTransversals", "element does not factor through the cosets");
        map[l] = sdp2->encode(h1, h2, t);
    }
    GroupHom psi{fib, sdpg, std::move(map)};
    if (!is_bijective(psi)) throw Error("NotHomomorphism", "psi is not bijective");

    const Elem N = fib->order();
    auto check_pair = [&](Elem x, Elem y) {
        if (psi.map[fib->mul(x, y)] != sdpg->mul(psi.map[x], psi.map[y]))
            throw Error("NotHomomorphism",
                        "psi fails at (" + std::to_string(x) + "," + std::to_string(y) + ")");
    };
    if (N <= 5000) {
        for (Elem x = 0; x < N; ++x)
            for (Elem y = 0; y < N; ++y) check_pair(x, y);
    } else {
        for (Elem gen : generating_set(*fib))
            for (Elem y = 0; y < N; ++y) check_pair(gen, y);
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<Elem> dist(0, N - 1);
        for (std::int64_t i = 0; i < samples; ++i) check_pair(dist(rng), dist(rng));
    }
    return psi;
}

bool right_split_sequence_check(const GroupPtr& g, const Subgroup& h, const Transversal& t) {
    if (!transversal_multiplicatively_closed(g, t))
        throw Error("PreconditionFailed", "transversal is not multiplicatively closed");
    const auto tv = verify_transversal(t);
    if (!tv.ok) throw Error("PreconditionFailed", "not a transversal: " + tv.detail);
    auto [q, pi] = quotient(g, h);
    // iota: coset -> its representative in T
    std::vector<Elem> iota(q->order(), -1);
    for (Elem rep : t.reps) iota[pi(rep)] = rep;
    for (Elem c = 0; c < q->order(); ++c) {
        if (iota[c] < 0) return false;
        if (pi(iota[c]) != c) return false; // pi o iota = id
    }
    for (Elem c1 = 0; c1 < q->order(); ++c1)
        for (Elem c2 = 0; c2 < q->order(); ++c2)
            if (g->mul(iota[c1], iota[c2]) != iota[q->mul(c1, c2)]) return false;
    return true;
}

} // namespace rsplit
