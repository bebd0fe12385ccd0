#include "rightsplit/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <future>
#include <thread>

#include "rightsplit/groupspec.hpp"
#include "rightsplit/repalg.hpp"
#include "rightsplit/sdp.hpp"
#include "rightsplit/split.hpp"

namespace rsplit {

json split_report_json(const SplitReport& rep, bool include_timing) {
    json out;
    out["m"] = rep.m;
    out["n"] = rep.n;
    out["gcd"] = rep.gcd_value;
    out["verdict"] = to_string(rep.verdict);
    if (rep.witness) {
        out["witness"] = {{"element", *rep.witness}, {"label", rep.witness_label}};
        if (!rep.witness_powers.empty()) out["witness"]["powers"] = rep.witness_powers;
    } else {
        out["witness"] = nullptr;
    }
    if (include_timing) out["elapsed_ms"] = rep.elapsed_ms;
    return out;
}

json VerificationReport::to_json(bool include_timing) const {
    json out;
    out["suite"] = suite;
    out["version"] = version;
    out["seed"] = seed;
    out["samples"] = samples;
    out["summary"] = {{"verified", verified},
                      {"falsified", falsified},
                      {"not_applicable", not_applicable},
                      {"indeterminate", indeterminate},
                      {"total", static_cast<std::int64_t>(cases.size())}};
    out["cases"] = json::array();
    for (const auto& c : cases) {
        json jc;
        jc["statement_id"] = c.statement_id;
        jc["parameters"] = c.parameters;
        jc["verdict"] = c.verdict;
        jc["witness"] = c.witness;
        if (include_timing) jc["elapsed_ms"] = c.elapsed_ms;
        out["cases"].push_back(std::move(jc));
    }
    return out;
}

namespace {

struct Case {
    std::string id;
    json parameters;
    std::function<std::pair<std::string, json>()> run; // verdict, witness
};

std::string verdict_of(bool ok) { return ok ? "verified" : "falsified"; }

// ---------- corpus helpers ----------

GroupPtr cyc(Elem n) { return std::make_shared<CyclicGroup>(n); }

Mat m1v(std::int64_t v) {
    Mat m(1);
    m.set(0, 0, v);
    return m;
}

Mat m2v(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    Mat m(2);
    m.set(0, 0, a);
    m.set(0, 1, b);
    m.set(1, 0, c);
    m.set(1, 1, d);
    return m;
}

Rep nat_rep_of_matrix_subgroup(const Subgroup& sub, const Field& f) {
    auto gl = std::dynamic_pointer_cast<const Gl2Group>(sub.parent);
    auto g = std::make_shared<SubgroupGroup>(sub);
    Rep pi{g, f, 2, {}};
    for (Elem i = 0; i < g->order(); ++i) {
        const Mat2 mm = gl->matrix_of(g->to_parent(i));
        pi.mats.push_back(m2v(mm.a, mm.b, mm.c, mm.d));
    }
    return pi;
}

RepInstance make_instance(std::string id, Rep pi, const Subgroup& h) {
    BlockRep b =
        induce(restrict_rep(pi, h), pi.group, transversal_identity_first(pi.group, h));
    return RepInstance{std::move(id), std::move(pi), std::move(b)};
}

} // namespace

std::vector<RepInstance> induced_corpus() {
    std::vector<RepInstance> out;
    const Field f5 = Field::make(5, 1);
    const Field f7 = Field::make(7, 1);

    // cyclic instances: faithful / intermediate / trivial kernels, n = 2..4
    {
        auto c4 = cyc(4);
        Subgroup h(c4, {0, 2});
        out.push_back(make_instance("c4-faithful", rep_from_images(c4, f5, 1, {{1, m1v(2)}}), h));
        out.push_back(make_instance("c4-kernel-h", rep_from_images(c4, f5, 1, {{1, m1v(4)}}), h));
        out.push_back(make_instance("c4-trivial", trivial_rep(c4, f5, 1), h));
    }
    {
        auto c6 = cyc(6);
        Subgroup h2(c6, {0, 2, 4});
        out.push_back(
            make_instance("c6-order3-over-g2", rep_from_images(c6, f7, 1, {{1, m1v(4)}}), h2));
        Subgroup h3(c6, {0, 3});
        out.push_back(
            make_instance("c6-kernel-h-over-g3", rep_from_images(c6, f7, 1, {{1, m1v(2)}}), h3));
        out.push_back(
            make_instance("c6-faithful-over-g3", rep_from_images(c6, f7, 1, {{1, m1v(3)}}), h3));
        // m = 2 diagonal representation, n = 3
        Rep diag2 = rep_from_images(c6, f7, 2, {{1, m2v(3, 0, 0, 5)}});
        out.push_back(make_instance("c6-diag2-over-g3", std::move(diag2), h3));
    }
    {
        auto c8 = cyc(8);
        Subgroup h(c8, {0, 4});
        out.push_back(make_instance("c8-kernel-h", rep_from_images(c8, f5, 1, {{1, m1v(2)}}), h));
        out.push_back(
            make_instance("c8-intermediate", rep_from_images(c8, f5, 1, {{1, m1v(4)}}), h));
    }
    {
        // non-cyclic G with cyclic quotient
        auto v4 = std::make_shared<DirectProductGroup>(cyc(2), cyc(2));
        Subgroup h(v4, {0, 2}); // first factor
        Rep chi = rep_from_images(v4, f5, 1, {{2, m1v(1)}, {1, m1v(4)}});
        out.push_back(make_instance("v4-character", std::move(chi), h));
    }
    {
        auto s3 = std::static_pointer_cast<const FiniteGroup>(std::make_shared<PermGroup>(3));
        Elem transposition = -1, threecycle = -1;
        for (Elem x = 0; x < 6; ++x) {
            if (s3->element_order(x) == 2 && transposition < 0) transposition = x;
            if (s3->element_order(x) == 3 && threecycle < 0) threecycle = x;
        }
        auto a3 = derived_subgroup(s3);
        out.push_back(make_instance(
            "s3-sign",
            rep_from_images(s3, f7, 1, {{transposition, m1v(6)}, {threecycle, m1v(1)}}), a3));
        out.push_back(make_instance(
            "s3-standard2",
            rep_from_images(s3, f7, 2,
                            {{transposition, m2v(0, 1, 1, 0)}, {threecycle, m2v(0, 6, 1, 6)}}),
            a3));
        out.push_back(make_instance("s3-trivial", trivial_rep(s3, f5, 1), a3));
    }
    {
        // SL2(F3) over its quaternion subgroup, natural representation, l = 3
        auto gl3 = gl2_group(Field::make(3, 1));
        auto sl2 = sl2_subgroup(gl3);
        Rep pi = nat_rep_of_matrix_subgroup(sl2, Field::make(3, 1));
        auto g = pi.group;
        std::vector<Elem> gens;
        for (Elem i = 0; i < g->order(); ++i)
            if (g->element_order(i) == 4) gens.push_back(i);
        Subgroup q8 = subgroup_generated(g, gens);
        out.push_back(make_instance("sl2f3-over-q8", std::move(pi), q8));
    }
    {
        // the scalar-times-SL2 model over F5: H = SL2(F5), G the index-2
        // det-square subgroup, natural representation, l = 5
        auto gl5 = gl2_group(f5);
        Subgroup zsl2 = det_power_subgroup(gl5, 2);
        Rep pi = nat_rep_of_matrix_subgroup(zsl2, f5);
        auto g = pi.group;
        auto zsl2_grp = std::static_pointer_cast<const SubgroupGroup>(g);
        std::vector<Elem> sl2_locals;
        for (Elem i = 0; i < g->order(); ++i) {
            auto gl = std::dynamic_pointer_cast<const Gl2Group>(zsl2.parent);
            if (m2_det(gl->field(), gl->matrix_of(zsl2_grp->to_parent(i))) == 1)
                sl2_locals.push_back(i);
        }
        Subgroup h(g, sl2_locals);
        out.push_back(make_instance("zsl2f5-over-sl2", std::move(pi), h));
    }
    return out;
}

namespace {

// ---------- section 2 cases ----------

void add_section2_cases(std::vector<Case>& cases, const SuiteOptions& opts) {
    // commutator subgroup of GL2 vs the determinant kernel
    for (std::int64_t q : {2, 3, 4, 5, 7, 9, 13}) {
        cases.push_back(Case{
            "gl2-commutator-equals-det-kernel (q=" + std::to_string(q) + ")",
            {{"q", q}},
            [q]() -> std::pair<std::string, json> {
                const auto [p, r] = split_prime_power(q);
                auto g = gl2_group(Field::make(p, r));
                const Subgroup der = derived_subgroup(g);
                const Subgroup sl2 = sl2_subgroup(g);
                const bool equal = der.members == sl2.members;
                json wit{{"derived_order", der.size()}, {"det_kernel_order", sl2.size()}};
                return {verdict_of(equal), wit};
            }});
    }
    // exhaustive normal-subgroup scan vs. the determinant criterion
    for (auto [q, ns] : std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>>{
             {5, {1, 2, 4}}, {7, {1, 2, 3, 6}}}) {
        for (std::int64_t n : ns) {
            cases.push_back(Case{
                "unique-abelian-index-subgroup-scan (q=" + std::to_string(q) +
                    ",n=" + std::to_string(n) + ")",
                {{"q", q}, {"n", n}},
                [q, n]() -> std::pair<std::string, json> {
                    auto g = gl2_group(Field::make(q, 1));
                    const Subgroup expected = det_power_subgroup(g, n);
                    std::int64_t hits = 0;
                    bool matches = false;
                    for (const auto& sub : normal_subgroups(g)) {
                        if (g->order() / sub.size() != n) continue;
                        auto [quot, proj] = quotient(g, sub);
                        (void)proj;
                        if (!is_abelian(*quot)) continue;
                        ++hits;
                        matches = (sub.members == expected.members);
                    }
                    json wit{{"index_n_abelian_quotient_count", hits}};
                    return {verdict_of(hits == 1 && matches), wit};
                }});
        }
    }
    // power-transversal existence iff gcd(n, m/n) = 1 (determinant section
    // always provides the split for GL2)
    struct TableRow {
        std::int64_t q, n;
        bool expect;
    };
    for (const TableRow row :
         {TableRow{5, 2, false}, {5, 4, true}, {7, 2, true}, {7, 3, true}, {7, 6, true},
          {13, 2, false}, {13, 3, true}, {13, 4, true}, {13, 12, true}, {9, 8, true}}) {
        cases.push_back(Case{
            "coprime-power-transversal (q=" + std::to_string(row.q) + ",n=" +
                std::to_string(row.n) + ")",
            {{"q", row.q}, {"n", row.n}, {"expected_witness", row.expect}},
            [row]() -> std::pair<std::string, json> {
                const auto [p, r] = split_prime_power(row.q);
                auto g = gl2_group(Field::make(p, r));
                const SplitReport rep = cyclic_transversal_search(g, det_power_subgroup(g, row.n));
                const bool found = rep.verdict == SplitVerdict::SplitWithWitness;
                const bool gcd_one = rep.gcd_value == 1;
                // the biconditional itself plus the expected verdict
                const bool ok = (found == gcd_one) && (found == row.expect);
                return {verdict_of(ok), split_report_json(rep, false)};
            }});
    }
    // determinant section: GL2 always splits over SL2
    for (std::int64_t q : {3, 5, 7, 9}) {
        cases.push_back(Case{
            "det-section-complement (q=" + std::to_string(q) + ")",
            {{"q", q}},
            [q]() -> std::pair<std::string, json> {
                const auto [p, r] = split_prime_power(q);
                auto g = gl2_group(Field::make(p, r));
                const Subgroup sl2 = sl2_subgroup(g);
                auto t = multiplicative_transversal_search(g, sl2);
                if (!t) return {"falsified", {{"complement", nullptr}}};
                const bool ok = right_split_sequence_check(g, sl2, *t);
                // a multiplicatively closed transversal is exactly a subgroup
                std::vector<Elem> sorted = t->reps;
                std::sort(sorted.begin(), sorted.end());
                const bool closed_iff_subgroup =
                    closure(*g, t->reps) == sorted;
                json wit;
                wit["representatives"] = json::array();
                for (Elem rep : t->reps) wit["representatives"].push_back(g->label(rep));
                return {verdict_of(ok && closed_iff_subgroup), wit};
            }});
    }
    // the p = 1 mod 4 obstruction
    for (std::int64_t p : {5, 13}) {
        cases.push_back(Case{
            "no-order2-coset-transversal (p=" + std::to_string(p) + ")",
            {{"p", p}},
            [p]() -> std::pair<std::string, json> {
                auto g = gl2_group(Field::make(p, 1));
                const SplitReport rep = cyclic_transversal_search(g, det_power_subgroup(g, 2));
                return {verdict_of(rep.verdict == SplitVerdict::NoSplit && rep.gcd_value == 2),
                        split_report_json(rep, false)};
            }});
    }
    // fiber product vs twisted product along psi
    struct PsiInstance {
        std::string id;
        std::function<SdpData()> data;
        std::int64_t expected_order;
    };
    std::vector<PsiInstance> psis;
    psis.push_back({"c4-full", [] {
                        auto c4 = cyc(4);
                        Subgroup full(c4, {0, 1, 2, 3});
                        Transversal t{c4, full, {0}};
                        return SdpData{{SdpFactor{c4, full, t}, SdpFactor{c4, full, t}}};
                    },
                    16});
    psis.push_back({"c6-over-g3", [] {
                        auto c6 = cyc(6);
                        Subgroup h(c6, {0, 3});
                        auto t = multiplicative_transversal_search(c6, h);
                        return SdpData{{SdpFactor{c6, h, *t}, SdpFactor{c6, h, *t}}};
                    },
                    12});
    psis.push_back({"s3-over-a3", [] {
                        auto s3 = std::static_pointer_cast<const FiniteGroup>(
                            std::make_shared<PermGroup>(3));
                        auto a3 = derived_subgroup(s3);
                        auto t = multiplicative_transversal_search(s3, a3);
                        return SdpData{{SdpFactor{s3, a3, *t}, SdpFactor{s3, a3, *t}}};
                    },
                    18});
    psis.push_back({"gl2f3-over-sl2", [] {
                        auto g = gl2_group(Field::make(3, 1));
                        auto h = sl2_subgroup(g);
                        auto t = multiplicative_transversal_search(g, h);
                        return SdpData{{SdpFactor{g, h, *t}, SdpFactor{g, h, *t}}};
                    },
                    1152});
    psis.push_back({"gl2f5-over-sl2", [] {
                        auto g = gl2_group(Field::make(5, 1));
                        auto h = sl2_subgroup(g);
                        auto t = multiplicative_transversal_search(g, h);
                        return SdpData{{SdpFactor{g, h, *t}, SdpFactor{g, h, *t}}};
                    },
                    57600});
    psis.push_back({"pgl2f5-over-psl2", [] {
                        const Field f = Field::make(5, 1);
                        auto pgl = std::static_pointer_cast<const FiniteGroup>(pgl2_group(f));
                        auto psl = psl2_group(f);
                        auto pglm = std::dynamic_pointer_cast<const ProjMatGroup>(pgl);
                        std::vector<Elem> members;
                        for (Elem i = 0; i < psl->order(); ++i)
                            members.push_back(pglm->class_of(psl->class_rep(i)));
                        Subgroup sub(pgl, members);
                        const Elem cls = pglm->class_of(psl2_order2_witness(5));
                        Transversal t{pgl, sub, {pgl->identity(), cls}};
                        return SdpData{{SdpFactor{pgl, sub, t}, SdpFactor{pgl, sub, t}}};
                    },
                    7200});
    for (const auto& inst : psis) {
        cases.push_back(Case{
            "fiber-twisted-iso-psi (" + inst.id + ")",
            {{"instance", inst.id}, {"expected_order", inst.expected_order}},
            [inst, opts]() -> std::pair<std::string, json> {
                const SdpData data = inst.data();
                const FiberProduct fp = fiber_product(data);
                if (fp.sub.size() != inst.expected_order)
                    return {"falsified", {{"fiber_order", fp.sub.size()}}};
                auto sdp = sdp_build(data);
                if (sdp->order() != inst.expected_order)
                    return {"falsified", {{"twisted_order", sdp->order()}}};
                const GroupHom psi = fiber_iso_check(data, 100000, opts.seed);
                json wit{{"order", fp.sub.size()},
                         {"mode", fp.sub.size() <= 5000 ? "exhaustive" : "generators+sampled"}};
                (void)psi;
                return {"verified", wit};
            }});
    }
    cases.push_back(Case{
        "psl2-squared-twisted-c2 (p=5): order 7200, non-abelian",
        {},
        []() -> std::pair<std::string, json> {
            const Field f = Field::make(5, 1);
            auto pgl = std::static_pointer_cast<const FiniteGroup>(pgl2_group(f));
            auto pglm = std::dynamic_pointer_cast<const ProjMatGroup>(pgl);
            auto psl = psl2_group(f);
            std::vector<Elem> members;
            for (Elem i = 0; i < psl->order(); ++i)
                members.push_back(pglm->class_of(psl->class_rep(i)));
            Subgroup sub(pgl, members);
            const Elem cls = pglm->class_of(psl2_order2_witness(5));
            Transversal t{pgl, sub, {pgl->identity(), cls}};
            SdpData data{{SdpFactor{pgl, sub, t}, SdpFactor{pgl, sub, t}}};
            auto sdp = sdp_build(data);
            bool abelian = true;
            for (Elem a = 0; a < 50 && abelian; ++a)
                for (Elem b = a + 1; b < 50 && abelian; ++b)
                    if (sdp->mul(a, b) != sdp->mul(b, a)) abelian = false;
            return {verdict_of(sdp->order() == 7200 && !abelian), {{"order", sdp->order()}}};
        }});
    // abelian factors give the direct product
    cases.push_back(Case{
        "abelian-twisted-product-is-direct (c6-over-g3)",
        {},
        []() -> std::pair<std::string, json> {
            auto c6 = cyc(6);
            Subgroup h(c6, {0, 3});
            auto t = multiplicative_transversal_search(c6, h);
            SdpData data{{SdpFactor{c6, h, *t}, SdpFactor{c6, h, *t}}};
            auto sdp = sdp_build(data);
            auto direct = std::make_shared<DirectProductGroup>(
                std::make_shared<DirectProductGroup>(cyc(2), cyc(2)), cyc(3));
            const auto iso = is_isomorphic(sdp, direct);
            json wit{{"order", sdp->order()}};
            if (iso.yes()) {
                json pairs = json::array();
                for (Elem i = 0; i < sdp->order(); ++i)
                    pairs.push_back({i, iso.witness->map[i]});
                wit["witness_map"] = std::move(pairs);
            }
            return {verdict_of(iso.yes()), wit};
        }});
    // twisted-product group axioms (sampled above the exhaustive cap)
    cases.push_back(Case{
        "twisted-product-associativity (gl2f5-over-sl2)",
        {},
        [opts]() -> std::pair<std::string, json> {
            auto g = gl2_group(Field::make(5, 1));
            auto h = sl2_subgroup(g);
            auto t = multiplicative_transversal_search(g, h);
            SdpData data{{SdpFactor{g, h, *t}, SdpFactor{g, h, *t}}};
            auto sdp = sdp_build(data);
            VerifyPolicy pol;
            pol.seed = opts.seed;
            pol.samples = 100000;
            const auto chk = verify_group_axioms(*sdp, pol);
            return {verdict_of(chk.ok), {{"mode", chk.mode}, {"order", sdp->order()}}};
        }});
    // the explicit order-2 witness matrix
    for (std::int64_t p : {5, 7, 11, 13}) {
        cases.push_back(Case{
            "order2-witness-matrix (p=" + std::to_string(p) + ")",
            {{"p", p}},
            [p]() -> std::pair<std::string, json> {
                const Field f = Field::make(p, 1);
                const Mat2 x = psl2_order2_witness(p);
                auto pgl = pgl2_group(f);
                auto psl = psl2_group(f);
                const Elem cls = pgl->class_of(x);
                std::vector<Elem> members;
                for (Elem i = 0; i < psl->order(); ++i)
                    members.push_back(pgl->class_of(psl->class_rep(i)));
                Subgroup sub(pgl, members);
                Transversal t{std::static_pointer_cast<const FiniteGroup>(pgl), sub,
                              {pgl->identity(), cls}};
                const bool ok = !f.is_nth_power(m2_det(f, x), 2) &&
                                m2_is_scalar(f, m2_mul(f, x, x)) &&
                                pgl->element_order(cls) == 2 && !sub.contains(cls) &&
                                right_split_sequence_check(
                                    std::static_pointer_cast<const FiniteGroup>(pgl), sub, t);
                return {verdict_of(ok), {{"matrix", render_mat2(f, x)}}};
            }});
    }
    // prime search with the two congruence conditions
    cases.push_back(Case{
        "prime-search-conditions (n=4,r=1)",
        {{"n", 4}, {"r", 1}, {"limit", 20000}},
        []() -> std::pair<std::string, json> {
            const auto got = dirichlet_condition_search(4, 1, 20000);
            std::vector<std::int64_t> expect;
            for (std::int64_t p : primes_up_to(20000))
                if (p % 8 == 5) expect.push_back(p);
            const bool first_four = got.size() >= 4 && got[0] == 5 && got[1] == 13 &&
                                    got[2] == 29 && got[3] == 37;
            json wit{{"count", got.size()}};
            return {verdict_of(first_four && got == expect), wit};
        }});
    cases.push_back(Case{
        "prime-search-conditions (n=2,r=1)",
        {{"n", 2}, {"r", 1}, {"limit", 12}},
        []() -> std::pair<std::string, json> {
            const auto got = dirichlet_condition_search(2, 1, 12);
            return {verdict_of(got == std::vector<std::int64_t>{3, 7, 11}), {{"primes", got}}};
        }});
}

// ---------- induce suite ----------

// independent oracle: exhaustive enumeration over all transversals with
// s_1 = 1, testing whether some {rho(s_i)} is multiplicatively closed
bool exhaustive_transversal_split(const BlockRep& b, std::int64_t budget = 2000000) {
    std::vector<std::vector<Elem>> cosets(b.n);
    for (Elem g = 0; g < b.G->order(); ++g) {
        const Elem t = b.coset_to_t[b.cosets.coset_of[g]];
        if (t > 0) cosets[t].push_back(g);
    }
    std::int64_t total = 1;
    for (int i = 1; i < b.n; ++i) {
        total *= static_cast<std::int64_t>(cosets[i].size());
        if (total > budget) throw Error("SearchBudgetExceeded", "transversal space too large");
    }
    std::vector<const Mat*> mats(b.n);
    mats[0] = &b.rho.mats[b.G->identity()];
    std::function<bool(int)> rec = [&](int pos) -> bool {
        if (pos == b.n) {
            // closure of the chosen images under multiplication
            std::vector<std::string> keys;
            for (int i = 0; i < b.n; ++i) keys.push_back(mat_key(*mats[i]));
            std::sort(keys.begin(), keys.end());
            keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
            if (static_cast<int>(keys.size()) != b.n) return false;
            for (int i = 0; i < b.n; ++i)
                for (int j = 0; j < b.n; ++j) {
                    const Mat prod = mat_mul(b.rho.field, *mats[i], *mats[j]);
                    if (!std::binary_search(keys.begin(), keys.end(), mat_key(prod)))
                        return false;
                }
            return true;
        }
        for (Elem g : cosets[pos]) {
            mats[pos] = &b.rho.mats[g];
            if (rec(pos + 1)) return true;
        }
        return false;
    };
    return rec(1);
}

void add_induce_cases(std::vector<Case>& cases,
                      const std::shared_ptr<std::vector<RepInstance>>& corpus) {
    for (size_t idx = 0; idx < corpus->size(); ++idx) {
        const std::string id = (*corpus)[idx].id;
        cases.push_back(Case{"induced-block-structure (" + id + ")",
                             {{"instance", id}},
                             [corpus, idx]() -> std::pair<std::string, json> {
                                 const auto& inst = (*corpus)[idx];
                                 const auto chk = verify_block_structure(inst.b);
                                 return {verdict_of(chk.ok), {{"detail", chk.detail}}};
                             }});
        cases.push_back(Case{
            "restriction-images-isomorphic (" + id + ")",
            {{"instance", id}},
            [corpus, idx]() -> std::pair<std::string, json> {
                const auto& inst = (*corpus)[idx];
                const GroupHom iso = rho_H_image_iso(inst.b, inst.pi);
                return {"verified", {{"image_order", iso.domain->order()}}};
            }});
        cases.push_back(Case{
            "induced-exact-sequence (" + id + ")",
            {{"instance", id}},
            [corpus, idx]() -> std::pair<std::string, json> {
                const auto& inst = (*corpus)[idx];
                const ExactSequence seq = exact_sequence_gamma(inst.b);
                json wit{{"rho_G", seq.rho_G.image->order()},
                         {"rho_H", seq.rho_H.image->order()},
                         {"quotient", seq.quotient->order()}};
                return {"verified", wit};
            }});
        cases.push_back(Case{
            "induced-product-relations (" + id + ")",
            {{"instance", id}},
            [corpus, idx]() -> std::pair<std::string, json> {
                const auto& inst = (*corpus)[idx];
                const auto chk = product_relation_sweep(inst.b, inst.pi);
                return {verdict_of(chk.ok), {{"detail", chk.detail}}};
            }});
        cases.push_back(Case{
            "induced-split-vs-exhaustive-search (" + id + ")",
            {{"instance", id}},
            [corpus, idx]() -> std::pair<std::string, json> {
                const auto& inst = (*corpus)[idx];
                const InducedSplit sp = induced_split_check(inst.b);
                const bool independent = exhaustive_transversal_split(inst.b);
                const bool agree =
                    independent == (sp.report.verdict == SplitVerdict::SplitWithWitness);
                const bool cyclic_ok = sp.cyclic_cross_check >= 0;
                json wit = split_report_json(sp.report, false);
                wit["independent_search"] = independent;
                wit["cyclic_power_criterion"] =
                    sp.cyclic_cross_check == 0
                        ? "not applicable"
                        : (sp.cyclic_cross_check == 1 ? "held" : "failed");
                return {verdict_of(agree && cyclic_ok), wit};
            }});
        cases.push_back(Case{
            "subgroup-sequences (" + id + ")",
            {{"instance", id}},
            [corpus, idx]() -> std::pair<std::string, json> {
                const auto& inst = (*corpus)[idx];
                // H' shapes: trivial, H itself, the full group
                std::vector<Subgroup> shapes;
                shapes.emplace_back(inst.b.G, std::vector<Elem>{inst.b.G->identity()});
                shapes.push_back(inst.b.H);
                std::vector<Elem> all(inst.b.G->order());
                for (Elem i = 0; i < inst.b.G->order(); ++i) all[i] = i;
                shapes.emplace_back(inst.b.G, all);
                for (Elem x = 0; x < inst.b.G->order(); ++x)
                    if (!inst.b.H.contains(x)) {
                        shapes.push_back(subgroup_generated(inst.b.G, {x}));
                        break;
                    }
                bool ok = true;
                json shape_results = json::array();
                for (const auto& hp : shapes) {
                    const auto rep = general_subgroup_sequence(inst.b, inst.pi, hp);
                    const bool this_ok = rep.exact && rep.containment_biconditional &&
                                         (!rep.restricted_split_checked || rep.restricted_split);
                    ok = ok && this_ok;
                    shape_results.push_back({{"order", hp.size()},
                                             {"exact", rep.exact},
                                             {"split", to_string(rep.split)}});
                }
                return {verdict_of(ok), {{"shapes", shape_results}}};
            }});
    }
}

// ---------- repalg suite ----------

void add_repalg_cases(std::vector<Case>& cases,
                      const std::shared_ptr<std::vector<RepInstance>>& corpus,
                      const SuiteOptions& opts) {
    // tensor vs direct sum on the aligned corpus families
    struct Family {
        std::string id;
        std::function<std::vector<Rep>()> reps;
    };
    auto sl2f3_nat = [] {
        auto gl3 = gl2_group(Field::make(3, 1));
        return nat_rep_of_matrix_subgroup(sl2_subgroup(gl3), Field::make(3, 1));
    };
    std::vector<Family> families;
    families.push_back({"trivial-pair", [] {
                            auto c4 = cyc(4);
                            const Field f5 = Field::make(5, 1);
                            return std::vector<Rep>{trivial_rep(c4, f5, 1), trivial_rep(c4, f5, 1)};
                        }});
    families.push_back({"c4-scalar-pair", [] {
                            auto c4 = cyc(4);
                            const Field f5 = Field::make(5, 1);
                            Rep r = rep_from_images(c4, f5, 1, {{1, m1v(2)}});
                            return std::vector<Rep>{r, r};
                        }});
    families.push_back({"sl2f3-natural-pair", [sl2f3_nat] {
                            Rep nat = sl2f3_nat();
                            return std::vector<Rep>{nat, nat};
                        }});
    families.push_back({"sl2f3-natural-triple", [sl2f3_nat] {
                            Rep nat = sl2f3_nat();
                            return std::vector<Rep>{nat, nat, nat};
                        }});
    families.push_back({"s3-standard-sign", [] {
                            auto s3 = std::static_pointer_cast<const FiniteGroup>(
                                std::make_shared<PermGroup>(3));
                            const Field f7 = Field::make(7, 1);
                            Elem tr = -1, tc = -1;
                            for (Elem x = 0; x < 6; ++x) {
                                if (s3->element_order(x) == 2 && tr < 0) tr = x;
                                if (s3->element_order(x) == 3 && tc < 0) tc = x;
                            }
                            Rep std2 = rep_from_images(
                                s3, f7, 2, {{tr, m2v(0, 1, 1, 0)}, {tc, m2v(0, 6, 1, 6)}});
                            Rep sign =
                                rep_from_images(s3, f7, 1, {{tr, m1v(6)}, {tc, m1v(1)}});
                            return std::vector<Rep>{std2, sign};
                        }});
    families.push_back({"c6-equal-characters", [] {
                            auto c6 = cyc(6);
                            const Field f7 = Field::make(7, 1);
                            Rep a = rep_from_images(c6, f7, 1, {{1, m1v(3)}});
                            return std::vector<Rep>{a, a};
                        }});
    for (const auto& fam : families) {
        cases.push_back(Case{
            "dsum-tensor-projective-iso (" + fam.id + ")",
            {{"family", fam.id}},
            [fam]() -> std::pair<std::string, json> {
                const auto reps = fam.reps();
                const TensorDsumIso iso = tensor_directsum_image_iso(reps);
                const auto tuple = tensor_tuple_iso_check(reps);
                json wit{{"image_order", iso.dsum_image.image->order()},
                         {"tuple_check", tuple.ok}};
                return {verdict_of(tuple.ok), wit};
            }});
    }
    // boundary families: direct-sum classes can be strictly finer than the
    // tuple group (so the two projective images differ), while the tensor
    // image always matches the tuple group
    cases.push_back(Case{
        "dsum-classes-strictly-finer (sl2f3-nat,trivial)",
        {},
        [sl2f3_nat]() -> std::pair<std::string, json> {
            Rep nat = sl2f3_nat();
            Rep triv = trivial_rep(nat.group, nat.field, 1);
            const Elem ds = proj_image(direct_sum({nat, triv})).image->order();
            const Elem tp = proj_image(tensor({nat, triv})).image->order();
            const auto tuple = tensor_tuple_iso_check({nat, triv});
            json wit{{"dsum_image", ds}, {"tensor_image", tp}};
            return {verdict_of(ds == 24 && tp == 12 && tuple.ok), wit};
        }});
    cases.push_back(Case{
        "dsum-classes-strictly-finer (c6-distinct-characters)",
        {},
        []() -> std::pair<std::string, json> {
            auto c6 = cyc(6);
            const Field f7 = Field::make(7, 1);
            Rep a = rep_from_images(c6, f7, 1, {{1, m1v(3)}});
            Rep b = rep_from_images(c6, f7, 1, {{1, m1v(2)}});
            // diag(3^k, 2^k) classes realize the image of the ratio character
            const Elem ds = proj_image(direct_sum({a, b})).image->order();
            const Elem tp = proj_image(tensor({a, b})).image->order();
            const auto tuple = tensor_tuple_iso_check({a, b});
            json wit{{"dsum_image", ds}, {"tensor_image", tp}};
            return {verdict_of(ds == 6 && tp == 1 && tuple.ok), wit};
        }});
    for (auto [q, d1, d2] : std::vector<std::tuple<std::int64_t, int, int>>{{5, 2, 2}, {7, 2, 3}}) {
        cases.push_back(Case{
            "scalar-tensor-detection (q=" + std::to_string(q) + "," + std::to_string(d1) + "x" +
                std::to_string(d2) + ")",
            {{"q", q}, {"samples", opts.samples}},
            [q, d1, d2, opts]() -> std::pair<std::string, json> {
                const auto chk = scalar_tensor_property(Field::make(q, 1), d1, d2,
                                                        std::max<std::int64_t>(opts.samples, 10000),
                                                        opts.seed);
                return {verdict_of(chk.ok), {{"mode", chk.mode}}};
            }});
    }
    // pair-group statements over the induced corpus
    for (size_t idx = 0; idx < corpus->size(); ++idx) {
        const std::string id = (*corpus)[idx].id;
        cases.push_back(Case{
            "pair-kernel-analysis (" + id + ")",
            {{"instance", id}},
            [corpus, idx]() -> std::pair<std::string, json> {
                const auto& inst = (*corpus)[idx];
                const auto rep = pair_kernel_analysis(inst.pi, inst.b);
                const bool ok = rep.second_proj_iso && rep.coset_embedding_injective && rep.j_set_matches &&
                                rep.kernel_formula && rep.cyclic_matrix_formula >= 0;
                json wit{{"first_kernel_order", rep.first_kernel_order},
                         {"cyclic_matrix_form", rep.cyclic_matrix_formula}};
                return {verdict_of(ok), wit};
            }});
        cases.push_back(Case{
            "largest-equal-image-subgroup (" + id + ")",
            {{"instance", id}},
            [corpus, idx]() -> std::pair<std::string, json> {
                const auto& inst = (*corpus)[idx];
                const auto rep = largest_subgroup_analysis(inst.pi, inst.b);
                const bool ok = rep.kernel_matches_preimage_cosets && rep.full_kernel_iff_equal_images;
                return {verdict_of(ok), {{"g_prime_order", rep.g_prime.size()}}};
            }});
        cases.push_back(Case{
            "graph-splits-when-images-equal (" + id + ")",
            {{"instance", id}},
            [corpus, idx]() -> std::pair<std::string, json> {
                const auto& inst = (*corpus)[idx];
                const MatImage ig = rep_image(inst.pi);
                const MatImage ih = rep_image(restrict_rep(inst.pi, inst.b.H));
                const bool hypothesis = ig.image->order() == ih.image->order();
                const SplitReport rep = graph_split_check(inst.pi, inst.b);
                const bool ok = hypothesis
                                    ? rep.verdict == SplitVerdict::SplitWithWitness
                                    : rep.verdict == SplitVerdict::NotApplicable;
                const auto cy = graph_split_cyclic_criterion(inst.pi, inst.b);
                const auto gc = graph_split_coprime_criterion(inst.pi, inst.b);
                const bool cor_ok = (!cy.applicable || cy.holds) && (!gc.applicable || gc.holds);
                json wit = split_report_json(rep, false);
                wit["cyclic_criterion"] = cy.applicable ? (cy.holds ? "held" : "failed") : "n/a";
                wit["coprime_criterion"] = gc.applicable ? (gc.holds ? "held" : "failed") : "n/a";
                return {verdict_of(ok && cor_ok), wit};
            }});
        cases.push_back(Case{
            "projective-graph-iso-iff-kernel-in-h (" + id + ")",
            {{"instance", id}},
            [corpus, idx]() -> std::pair<std::string, json> {
                const auto& inst = (*corpus)[idx];
                const auto rep = projective_graph_iso_check(inst.pi, inst.b);
                json wit{{"ltilde_iso", rep.ltilde_iso_pitilde},
                         {"kernel_in_h", rep.proj_kernel_in_h}};
                return {verdict_of(rep.biconditional()), wit};
            }});
        cases.push_back(Case{
            "pair-subgroup-sequences (" + id + ")",
            {{"instance", id}},
            [corpus, idx]() -> std::pair<std::string, json> {
                const auto& inst = (*corpus)[idx];
                std::vector<Subgroup> shapes;
                shapes.emplace_back(inst.b.G, std::vector<Elem>{inst.b.G->identity()});
                shapes.push_back(inst.b.H);
                std::vector<Elem> all(inst.b.G->order());
                for (Elem i = 0; i < inst.b.G->order(); ++i) all[i] = i;
                shapes.emplace_back(inst.b.G, all);
                for (Elem x = 0; x < inst.b.G->order(); ++x)
                    if (!inst.b.H.contains(x)) {
                        shapes.push_back(subgroup_generated(inst.b.G, {x}));
                        break;
                    }
                bool ok = true;
                for (const auto& hp : shapes) {
                    const auto rep = subgroup_pair_analysis(inst.pi, inst.b, hp);
                    ok = ok && rep.second_projection_iso && rep.coset_embedding &&
                         rep.kernel_quotient_formula && rep.projective_iso_biconditional &&
                         rep.largest_subgroup_biconditional && (!rep.intersection_split_applicable || rep.intersection_split) &&
                         (!rep.containment_split_applicable || rep.containment_split);
                }
                return {verdict_of(ok), {{"shape_count", shapes.size()}}};
            }});
    }
    // group-level PGL2/PSL2 statements
    for (std::int64_t p : {5, 7}) {
        cases.push_back(Case{
            "pgl-psl-analysis (p=" + std::to_string(p) + ")",
            {{"p", p}},
            [p]() -> std::pair<std::string, json> {
                const auto rep = pgl_psl_analysis(p);
                const bool ok = rep.complement_found && rep.no_complement_centralizes &&
                                rep.witness_not_inner && rep.no_complement_inner &&
                                rep.pgl_not_psl_x_c2 && rep.twist_identity_direct &&
                                rep.twist_identity_iso_product &&
                                rep.twist_involution_not_direct &&
                                rep.twist_involution_iso_product && rep.twist_involution_not_pgl;
                json wit{{"witness", rep.witness_label},
                         {"involutions_outside", rep.involution_count},
                         {"pgl_order", rep.pgl_order}};
                return {verdict_of(ok), wit};
            }});
    }
    // simple-image propagation models
    cases.push_back(Case{
        "simple-image-propagation (psl2f5 x c2)",
        {},
        []() -> std::pair<std::string, json> {
            auto psl = psl2_group(Field::make(5, 1));
            auto prod = std::make_shared<DirectProductGroup>(psl, cyc(2));
            std::vector<Elem> first(prod->order());
            for (Elem x = 0; x < prod->order(); ++x) first[x] = prod->decode(x).first;
            GroupHom proj{prod, psl, std::move(first)};
            std::vector<Elem> members;
            for (Elem a = 0; a < psl->order(); ++a) members.push_back(prod->encode(a, 0));
            const bool ok = simple_image_propagation(proj, Subgroup(prod, members));
            return {verdict_of(ok), {{"image_order", psl->order()}}};
        }});
    cases.push_back(Case{
        "simple-image-propagation (zsl2f5 model)",
        {},
        [corpus]() -> std::pair<std::string, json> {
            // the scalar-times-SL2 instance: projective image of pi is the
            // PSL2(F5)-shaped simple group, H = SL2 has index 2 < 60
            for (const auto& inst : *corpus) {
                if (inst.id != "zsl2f5-over-sl2") continue;
                const MatImage pt = proj_image(inst.pi);
                const bool ok = simple_image_propagation(pt.hom, inst.b.H);
                return {verdict_of(ok), {{"image_order", pt.image->order()}}};
            }
            return {"indeterminate", {{"error", "instance missing"}}};
        }});
    // the zywina-style model: image checks, splitting, inner conjugation,
    // non-isomorphism with PGL2
    cases.push_back(Case{
        "projective-model (zsl2f5): images, split, inner, not-pgl2",
        {},
        [corpus]() -> std::pair<std::string, json> {
            for (const auto& inst : *corpus) {
                if (inst.id != "zsl2f5-over-sl2") continue;
                const MatImage ptG = proj_image(inst.pi);
                const MatImage ptH = proj_image(restrict_rep(inst.pi, inst.b.H));
                if (ptG.image->order() != 60 || ptH.image->order() != 60)
                    return {"falsified", {{"pi_tilde_G", ptG.image->order()}}};
                // projective image of rho has order |M| * n and splits
                const MatImage rt = proj_image(inst.b.rho);
                if (rt.image->order() != 120)
                    return {"falsified", {{"rho_tilde_G", rt.image->order()}}};
                const InducedSplit sp = induced_split_check(inst.b);
                if (sp.report.verdict != SplitVerdict::SplitWithWitness)
                    return {"falsified", {{"split", "missing"}}};
                // conjugation by rho~(s) on rho~(H) is inner: pi~(s) = pi~(h')
                const Elem s = *sp.report.witness;
                Elem hprime = -1;
                for (Elem local = 0; local < inst.b.Hgrp->order(); ++local) {
                    const Elem h = inst.b.Hgrp->to_parent(local);
                    if (ptG.hom(h) == ptG.hom(s)) {
                        hprime = h;
                        break;
                    }
                }
                if (hprime < 0) return {"falsified", {{"inner", "no matching h'"}}};
                bool inner = true;
                for (Elem local = 0; local < inst.b.Hgrp->order(); ++local) {
                    const Elem h = inst.b.Hgrp->to_parent(local);
                    const Elem lhs = rt.hom(
                        inst.b.G->mul(inst.b.G->mul(s, h), inst.b.G->inv(s)));
                    const Elem rhs = rt.hom(
                        inst.b.G->mul(inst.b.G->mul(hprime, h), inst.b.G->inv(hprime)));
                    if (lhs != rhs) inner = false;
                }
                // direct iff pi~(s) = I: here pi~(s) != I, so rho~(s) must
                // not centralize rho~(H)
                bool centralizes_all = true;
                for (Elem local = 0; local < inst.b.Hgrp->order(); ++local) {
                    const Elem h = inst.b.Hgrp->to_parent(local);
                    if (rt.hom(inst.b.G->mul(s, h)) != rt.hom(inst.b.G->mul(h, s)))
                        centralizes_all = false;
                }
                const bool pit_s_trivial = ptG.hom(s) == ptG.hom(inst.b.G->identity());
                const bool direct_iff = (centralizes_all == pit_s_trivial);
                // the projective image group is not PGL2(F5)
                auto pgl = pgl2_group(Field::make(5, 1));
                Rep rt_rep{inst.b.rho.group, inst.b.rho.field, inst.b.rho.dim, inst.b.rho.mats};
                auto rt_img = proj_image(rt_rep);
                const auto iso = is_isomorphic(rt_img.image,
                                               std::static_pointer_cast<const FiniteGroup>(pgl));
                json wit{{"inner", inner},
                         {"direct_iff_scalar_witness", direct_iff},
                         {"not_pgl2", iso.no()},
                         {"detail", iso.detail}};
                return {verdict_of(inner && direct_iff && iso.no()), wit};
            }
            return {"indeterminate", {{"error", "instance missing"}}};
        }});
}

std::vector<Case> build_cases(const std::string& name, const SuiteOptions& opts) {
    std::vector<Case> cases;
    auto corpus = std::make_shared<std::vector<RepInstance>>();
    if (name == "induce" || name == "repalg" || name == "all") *corpus = induced_corpus();
    if (name == "section2" || name == "all") add_section2_cases(cases, opts);
    if (name == "induce" || name == "all") add_induce_cases(cases, corpus);
    if (name == "repalg" || name == "all") add_repalg_cases(cases, corpus, opts);
    if (cases.empty() && name != "section2" && name != "induce" && name != "repalg" &&
        name != "all")
        throw Error("UsageError", "unknown suite '" + name + "'");
    return cases;
}

} // namespace

std::vector<std::string> suite_names() { return {"section2", "induce", "repalg", "all"}; }

VerificationReport run_suite(const std::string& name, const SuiteOptions& opts) {
    VerificationReport report;
    report.suite = name;
    report.seed = opts.seed;
    report.samples = opts.samples;
    auto cases = build_cases(name, opts);
    if (!opts.filter.empty()) {
        std::vector<Case> kept;
        for (auto& c : cases)
            for (const auto& prefix : opts.filter)
                if (c.id.rfind(prefix, 0) == 0) {
                    kept.push_back(std::move(c));
                    break;
                }
        cases = std::move(kept);
    }
    std::sort(cases.begin(), cases.end(), [](const Case& a, const Case& b) { return a.id < b.id; });

    report.cases.resize(cases.size());
    const unsigned workers =
        std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    auto work = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= cases.size()) return;
            CaseOutcome out;
            out.statement_id = cases[i].id;
            out.parameters = cases[i].parameters;
            const auto start = std::chrono::steady_clock::now();
            try {
                auto [verdict, witness] = cases[i].run();
                out.verdict = verdict;
                out.witness = witness;
            } catch (const Error& e) {
                const bool falsifying =
                    e.code() == "NotHomomorphism" || e.code() == "DisjointnessFailure";
                out.verdict = falsifying ? "falsified" : "indeterminate";
                out.witness = {{"error", e.what()}};
            } catch (const std::exception& e) {
                out.verdict = "indeterminate";
                out.witness = {{"error", e.what()}};
            }
            out.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
            report.cases[i] = std::move(out);
        }
    };
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();

    for (const auto& c : report.cases) {
        if (c.verdict == "verified") ++report.verified;
        else if (c.verdict == "falsified") ++report.falsified;
        else if (c.verdict == "not-applicable") ++report.not_applicable;
        else ++report.indeterminate;
    }
    return report;
}

} // namespace rsplit
