#include "rightsplit/split.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "rightsplit/ffield.hpp"

namespace rsplit {

std::string to_string(SplitVerdict v) {
    switch (v) {
        case SplitVerdict::SplitWithWitness: return "SplitWithWitness";
        case SplitVerdict::NoSplit: return "NoSplit";
        default: return "NotApplicable";
    }
}

SplitReport cyclic_transversal_search(const GroupPtr& g, const Subgroup& h) {
    const auto start = std::chrono::steady_clock::now();
    if (!is_normal(*g, h)) throw Error("NotNormal", "cyclic transversal search needs H normal");
    if (g->order() % h.size() != 0) throw Error("IndexMismatch", "|H| does not divide |G|");
    const std::int64_t n = g->order() / h.size();

    SplitReport rep;
    rep.n = n;
    // coprimality context: gcd(n, m/n) for cyclic abelianization of order m
    auto [ab, pi] = abelianization(g);
    (void)pi;
    if (is_cyclic(*ab) && ab->order() % n == 0) {
        rep.m = ab->order();
        rep.gcd_value = gcd64(n, rep.m / n);
    } else {
        rep.m = n;
        rep.gcd_value = 0;
    }

    const CosetTable cosets = coset_table(*g, h);
    std::vector<std::uint8_t> seen(cosets.index(), 0);
    rep.verdict = SplitVerdict::NoSplit;
    for (Elem x = 0; x < g->order(); ++x) {
        if (g->power(x, n) != g->identity()) continue;
        std::fill(seen.begin(), seen.end(), 0);
        Elem cur = g->identity();
        bool ok = true;
        std::vector<Elem> powers;
        for (std::int64_t k = 0; k < n; ++k) {
            const Elem c = cosets.coset_of[cur];
            if (seen[c]) {
                ok = false;
                break;
            }
            seen[c] = 1;
            powers.push_back(cur);
            cur = g->mul(cur, x);
        }
        if (ok) {
            rep.verdict = SplitVerdict::SplitWithWitness;
            rep.witness = x;
            rep.witness_powers = std::move(powers);
            rep.witness_label = g->label(x);
            break;
        }
    }
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return rep;
}

namespace {

// closure capped at `cap` elements; returns empty when the cap is exceeded
std::vector<Elem> closure_capped(const FiniteGroup& g, const std::vector<Elem>& gens, Elem cap) {
    std::vector<Elem> elems = {g.identity()};
    std::vector<Elem> gset;
    for (Elem x : gens) {
        gset.push_back(x);
        gset.push_back(g.inv(x));
    }
    std::sort(gset.begin(), gset.end());
    gset.erase(std::unique(gset.begin(), gset.end()), gset.end());
    std::vector<Elem> sorted = elems;
    for (size_t head = 0; head < elems.size(); ++head) {
        for (Elem s : gset) {
            const Elem y = g.mul(elems[head], s);
            if (!std::binary_search(sorted.begin(), sorted.end(), y)) {
                elems.push_back(y);
                sorted.insert(std::lower_bound(sorted.begin(), sorted.end(), y), y);
                if (static_cast<Elem>(elems.size()) > cap) return {};
            }
        }
    }
    return sorted;
}

std::optional<Transversal> complement_to_transversal(const GroupPtr& g, const Subgroup& h,
                                                     const std::vector<Elem>& t_members) {
    const std::int64_t n = g->order() / h.size();
    if (static_cast<std::int64_t>(t_members.size()) != n) return std::nullopt;
    for (Elem x : t_members)
        if (x != g->identity() && h.contains(x)) return std::nullopt;
    // order to match the canonical coset order
    const Transversal canon = transversal_enumerate(g, h);
    const CosetTable cosets = coset_table(*g, h);
    std::vector<Elem> ordered(n, -1);
    std::vector<Elem> pos_of_coset(cosets.index(), -1);
    for (std::int64_t i = 0; i < n; ++i) pos_of_coset[cosets.coset_of[canon.reps[i]]] = i;
    for (Elem x : t_members) {
        const Elem pos = pos_of_coset[cosets.coset_of[x]];
        if (ordered[pos] != -1) return std::nullopt; // two elements in one coset
        ordered[pos] = x;
    }
    for (Elem x : ordered)
        if (x < 0) return std::nullopt;
    return Transversal{g, h, std::move(ordered)};
}

} // namespace

std::optional<Transversal> multiplicative_transversal_search(const GroupPtr& g,
                                                             const Subgroup& h) {
    if (!is_normal(*g, h))
        throw Error("NotNormal", "complement search needs H normal");
    const std::int64_t n = g->order() / h.size();
    if (n > 8 && g->order() > 5000)
        throw Error("SearchBudgetExceeded", "complement search capped at index 8 or |G| <= 5000");
    if (n == 1) return Transversal{g, h, {g->identity()}};

    // candidate complement elements: outside H, order dividing n, cyclic part
    // meeting H trivially
    std::vector<Elem> cand;
    for (Elem x = 0; x < g->order(); ++x) {
        if (h.contains(x)) continue;
        const std::int64_t ord = g->element_order(x);
        if (n % ord != 0) continue;
        bool meets = false;
        Elem cur = x;
        for (std::int64_t k = 1; k < ord && !meets; ++k) {
            if (cur != g->identity() && h.contains(cur)) meets = true;
            cur = g->mul(cur, x);
        }
        if (!meets) cand.push_back(x);
    }

    // single generator first (cyclic complement, least witness)
    for (Elem x : cand) {
        if (g->element_order(x) != n) continue;
        std::vector<Elem> t;
        Elem cur = g->identity();
        for (std::int64_t k = 0; k < n; ++k) {
            t.push_back(cur);
            cur = g->mul(cur, x);
        }
        if (auto res = complement_to_transversal(g, h, t)) return res;
    }
    // generator subsets in ascending order, complete because a group of
    // order n is generated by at most log2(n) elements (every new generator
    // at least doubles the subgroup)
    int max_gens = 1;
    while ((std::int64_t{1} << max_gens) < n) ++max_gens;
    std::optional<Transversal> found;
    std::vector<Elem> gens;
    std::function<void(size_t)> extend = [&](size_t start) {
        if (found) return;
        const auto t = closure_capped(*g, gens, n);
        if (static_cast<std::int64_t>(t.size()) == n) {
            found = complement_to_transversal(g, h, t);
            if (found) return;
        }
        if (static_cast<int>(gens.size()) >= max_gens) return;
        for (size_t i = start; i < cand.size() && !found; ++i) {
            if (!t.empty() && std::binary_search(t.begin(), t.end(), cand[i])) continue;
            gens.push_back(cand[i]);
            extend(i + 1);
            gens.pop_back();
        }
    };
    for (size_t i = 0; i < cand.size() && !found; ++i) {
        gens = {cand[i]};
        extend(i + 1);
    }
    return found;
}

std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
    std::vector<std::int64_t> primes;
    if (limit < 2) return primes;
    std::vector<std::uint8_t> sieve(limit + 1, 1);
    sieve[0] = sieve[1] = 0;
    for (std::int64_t i = 2; i * i <= limit; ++i)
        if (sieve[i])
            for (std::int64_t j = i * i; j <= limit; j += i) sieve[j] = 0;
    for (std::int64_t i = 2; i <= limit; ++i)
        if (sieve[i]) primes.push_back(i);
    return primes;
}

std::vector<std::int64_t> dirichlet_condition_search(std::int64_t n, std::int64_t r,
                                                     std::int64_t limit) {
    if (n < 1 || r < 1) throw Error("GcdPrecondition", "n and r must be positive");
    if (gcd64(r, n) != 1) throw Error("GcdPrecondition", "requires gcd(r, n) = 1");
    if (limit > 10000000) throw Error("SearchBudgetExceeded", "limit capped at 10^7");
    std::vector<std::int64_t> out;
    const std::int64_t n2 = n * n;
    for (std::int64_t p : primes_up_to(limit)) {
        // (p^r - 1) mod n^2 determines both conditions:
        // t % n == 0 iff p^r = 1 mod n, and gcd(n, (p^r-1)/n) = gcd(n, t/n)
        const std::int64_t t = (pow_mod(p, r, n2) - 1 + n2) % n2;
        if (t % n != 0) continue;
        if (gcd64(n, t / n) != 1) continue;
        out.push_back(p);
    }
    return out;
}

} // namespace rsplit
