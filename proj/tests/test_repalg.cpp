#include "doctest.h"
#include "rightsplit/repalg.hpp"

using namespace rsplit;

namespace {

GroupPtr cyc(Elem n) { return std::make_shared<CyclicGroup>(n); }

Mat m1(std::int64_t v) {
    Mat m(1);
    m.set(0, 0, v);
    return m;
}

Rep sl2f3_natural() {
    auto gl3 = gl2_group(Field::make(3, 1));
    auto sl2 = sl2_subgroup(gl3);
    auto g = std::make_shared<SubgroupGroup>(sl2);
    Rep pi{g, Field::make(3, 1), 2, {}};
    for (Elem i = 0; i < g->order(); ++i) {
        const Mat2 mm = gl3->matrix_of(g->to_parent(i));
        Mat m(2);
        m.set(0, 0, mm.a);
        m.set(0, 1, mm.b);
        m.set(1, 0, mm.c);
        m.set(1, 1, mm.d);
        pi.mats.push_back(std::move(m));
    }
    return pi;
}

struct Induced {
    Rep pi;
    BlockRep b;
};

Induced cyclic_induced(Elem order, Elem image, std::int64_t ell, std::vector<Elem> h_members) {
    auto g = cyc(order);
    const Field f = Field::make(ell, 1);
    Rep pi = rep_from_images(g, f, 1, {{1, m1(image)}});
    Subgroup h(g, std::move(h_members));
    BlockRep b = induce(restrict_rep(pi, h), g, transversal_identity_first(g, h));
    return {std::move(pi), std::move(b)};
}

} // namespace

TEST_CASE("direct sums") {
    auto c4 = cyc(4);
    const Field f5 = Field::make(5, 1);
    Rep triv = trivial_rep(c4, f5, 1);
    Rep ds = direct_sum({triv, triv});
    CHECK(ds.dim == 2);
    CHECK(proj_image(ds).image->order() == 1);

    Rep faithful = rep_from_images(c4, f5, 1, {{1, m1(2)}});
    Rep pair2 = direct_sum({faithful, faithful});
    CHECK(pair2.mats[1].at(0, 0) == 2);
    CHECK(pair2.mats[1].at(1, 1) == 2);
    CHECK(proj_image(pair2).image->order() == 1); // scalar classes collapse

    Rep nat = sl2f3_natural();
    Rep dsum = direct_sum({nat, nat});
    CHECK(dsum.dim == 4);
    CHECK(proj_image(dsum).image->order() == 12); // PSL2(F3)
    CHECK_THROWS_WITH_AS(direct_sum({faithful, trivial_rep(cyc(3), f5, 1)}),
                         doctest::Contains("GroupMismatch"), Error);
}

TEST_CASE("tensor products") {
    auto c4 = cyc(4);
    const Field f5 = Field::make(5, 1);
    Rep faithful = rep_from_images(c4, f5, 1, {{1, m1(2)}});
    Rep sq = tensor({faithful, faithful});
    CHECK(sq.mats[1].at(0, 0) == 4);

    Rep nat = sl2f3_natural();
    Rep t = tensor({nat, trivial_rep(nat.group, nat.field, 1)});
    for (Elem g = 0; g < nat.group->order(); ++g) CHECK(t.mats[g] == nat.mats[g]);

    Rep t2 = tensor({nat, nat});
    CHECK(t2.dim == 4);
    // -I lands in the kernel of the tensor square
    Elem minus_id = -1;
    for (Elem g = 0; g < nat.group->order(); ++g)
        if (mat_is_scalar(nat.mats[g]) && !mat_is_identity(nat.mats[g])) minus_id = g;
    REQUIRE(minus_id >= 0);
    CHECK(mat_is_identity(t2.mats[minus_id]));
}

TEST_CASE("tensor and direct sum have isomorphic projective images") {
    auto c4 = cyc(4);
    const Field f5 = Field::make(5, 1);
    Rep triv = trivial_rep(c4, f5, 1);
    auto iso0 = tensor_directsum_image_iso({triv, triv});
    CHECK(iso0.dsum_image.image->order() == 1);

    Rep nat = sl2f3_natural();
    auto iso1 = tensor_directsum_image_iso({nat, nat});
    CHECK(iso1.dsum_image.image->order() == 12);
    CHECK(iso1.tensor_image.image->order() == 12);
    CHECK(verify_hom(iso1.iso).ok);
    CHECK(is_bijective(iso1.iso));

    Rep faithful = rep_from_images(c4, f5, 1, {{1, m1(2)}});
    auto iso2 = tensor_directsum_image_iso({faithful, faithful});
    CHECK(iso2.dsum_image.image->order() == 1);

    // an equal-rep triple
    auto iso3 = tensor_directsum_image_iso({nat, nat, nat});
    CHECK(is_bijective(iso3.iso));
    CHECK(iso3.dsum_image.image->order() == 12);

    // boundary of the statement: for (nat, trivial) the direct-sum classes
    // are strictly finer (diag(-A, 1) and diag(A, 1) share no scalar), so the
    // two projective images cannot be isomorphic; the tensor side still
    // matches the tuple group
    Rep triv1 = trivial_rep(nat.group, nat.field, 1);
    CHECK(proj_image(direct_sum({nat, triv1})).image->order() == 24);
    CHECK(proj_image(tensor({nat, triv1})).image->order() == 12);
    CHECK_THROWS_WITH_AS(tensor_directsum_image_iso({nat, triv1}),
                         doctest::Contains("image orders differ"), Error);
    CHECK(tensor_tuple_iso_check({nat, triv1}).ok);
    CHECK(tensor_tuple_iso_check({nat, nat}).ok);
    CHECK(tensor_tuple_iso_check({nat, nat, nat}).ok);

    // S3-style pair over F7: the standard rep plus the sign character
    auto s3 = std::static_pointer_cast<const FiniteGroup>(std::make_shared<PermGroup>(3));
    const Field f7 = Field::make(7, 1);
    Elem transposition = -1, threecycle = -1;
    for (Elem x = 0; x < 6; ++x) {
        if (s3->element_order(x) == 2 && transposition < 0) transposition = x;
        if (s3->element_order(x) == 3 && threecycle < 0) threecycle = x;
    }
    Mat std_t(2), std_c(2);
    std_t.set(0, 0, 0); std_t.set(0, 1, 1); std_t.set(1, 0, 1); std_t.set(1, 1, 0);
    std_c.set(0, 0, 0); std_c.set(0, 1, 6); std_c.set(1, 0, 1); std_c.set(1, 1, 6);
    Rep std2 = rep_from_images(s3, f7, 2, {{transposition, std_t}, {threecycle, std_c}});
    Rep sign = rep_from_images(s3, f7, 1, {{transposition, m1(6)}, {threecycle, m1(1)}});
    auto iso4 = tensor_directsum_image_iso({std2, sign});
    CHECK(is_bijective(iso4.iso));
}

TEST_CASE("scalar tensor detection over F5 and F7") {
    CHECK(scalar_tensor_property(Field::make(5, 1), 2, 2, 10000, 42).ok);
    CHECK(scalar_tensor_property(Field::make(7, 1), 2, 3, 10000, 42).ok);
}

TEST_CASE("pair groups") {
    auto c4 = cyc(4);
    const Field f5 = Field::make(5, 1);
    Rep faithful = rep_from_images(c4, f5, 1, {{1, m1(2)}});
    // diagonal pair: both projections are isomorphisms
    auto diag = pair_group(faithful, faithful);
    CHECK(diag.graph->order() == 4);
    CHECK(is_bijective(diag.first_proj));
    CHECK(is_bijective(diag.second_proj));
    CHECK(verify_hom(diag.first_proj).ok);
    CHECK(verify_group_axioms(*diag.graph).ok);

    // trivial first side: L collapses onto the second image
    Subgroup h(c4, {0, 2});
    Rep triv = trivial_rep(c4, f5, 1);
    BlockRep b = induce(restrict_rep(triv, h), c4, transversal_identity_first(c4, h));
    auto L = pair_group(triv, b.rho);
    CHECK(L.graph->order() == L.img_second.image->order());
    CHECK(is_bijective(L.second_proj));
}

TEST_CASE("first-projection kernel matches ker(pi)/(ker(pi) meet H)") {
    // faithful pi: trivial kernel
    Induced a = cyclic_induced(4, 2, 5, {0, 2});
    auto ra = pair_kernel_analysis(a.pi, a.b);
    CHECK(ra.second_proj_iso);
    CHECK(ra.first_kernel_order == 1);
    CHECK(ra.coset_embedding_injective);
    CHECK(ra.j_set_matches);
    CHECK(ra.kernel_formula);
    CHECK(ra.cyclic_matrix_formula == 1);

    // ker(pi) = H: first-projection kernel still trivial
    Induced bcase = cyclic_induced(4, 4, 5, {0, 2});
    auto rb = pair_kernel_analysis(bcase.pi, bcase.b);
    CHECK(rb.first_kernel_order == 1);
    CHECK(rb.kernel_formula);
    CHECK(rb.cyclic_matrix_formula == 1);

    // trivial pi: first-projection kernel is all of G/H
    Induced ccase = cyclic_induced(4, 1, 5, {0, 2});
    auto rc = pair_kernel_analysis(ccase.pi, ccase.b);
    CHECK(rc.first_kernel_order == 2);
    CHECK(rc.coset_embedding_injective);
    CHECK(rc.j_set_matches);
    CHECK(rc.kernel_formula);
    CHECK(rc.cyclic_matrix_formula == 1);

    // intermediate: C6 with an order-3 image and H = <g^2>
    auto g6 = cyc(6);
    const Field f7 = Field::make(7, 1);
    Rep pi6 = rep_from_images(g6, f7, 1, {{1, m1(4)}});
    Subgroup h6(g6, {0, 2, 4});
    BlockRep b6 = induce(restrict_rep(pi6, h6), g6, transversal_identity_first(g6, h6));
    auto r6 = pair_kernel_analysis(pi6, b6);
    CHECK(r6.second_proj_iso);
    CHECK(r6.first_kernel_order == 2); // ker pi = <g^3> of order 2, meets H trivially
    CHECK(r6.kernel_formula);
}

TEST_CASE("largest subgroup with the same image") {
    // faithful: G' = H
    Induced a = cyclic_induced(4, 2, 5, {0, 2});
    CHECK(largest_equal_image_subgroup(a.pi, a.b.H).members == std::vector<Elem>{0, 2});
    auto ra = largest_subgroup_analysis(a.pi, a.b);
    CHECK(ra.kernel_matches_preimage_cosets);
    CHECK(ra.full_kernel_iff_equal_images);

    // trivial: G' = G
    Induced c = cyclic_induced(4, 1, 5, {0, 2});
    CHECK(largest_equal_image_subgroup(c.pi, c.b.H).size() == 4);
    auto rc = largest_subgroup_analysis(c.pi, c.b);
    CHECK(rc.kernel_matches_preimage_cosets);
    CHECK(rc.full_kernel_iff_equal_images);

    // S3 sign representation, H = A3: G' = A3
    auto s3 = std::static_pointer_cast<const FiniteGroup>(std::make_shared<PermGroup>(3));
    const Field f7 = Field::make(7, 1);
    Elem transposition = -1, threecycle = -1;
    for (Elem x = 0; x < 6; ++x) {
        if (s3->element_order(x) == 2 && transposition < 0) transposition = x;
        if (s3->element_order(x) == 3 && threecycle < 0) threecycle = x;
    }
    Rep sign = rep_from_images(s3, f7, 1, {{transposition, m1(6)}, {threecycle, m1(1)}});
    auto a3 = derived_subgroup(s3);
    CHECK(largest_equal_image_subgroup(sign, a3).members == a3.members);
}

TEST_CASE("L splits exactly under pi(G) = pi(H)") {
    // C4, pi(g) = 4, H = <g^2>: pi(H) = {1} != pi(G) -> NotApplicable
    Induced bcase = cyclic_induced(4, 4, 5, {0, 2});
    CHECK(graph_split_check(bcase.pi, bcase.b).verdict == SplitVerdict::NotApplicable);

    // C6, pi(g) = 4 (order 3), H = <g^2>: pi(G) = pi(H) = {1,2,4}
    auto g6 = cyc(6);
    const Field f7 = Field::make(7, 1);
    Rep pi6 = rep_from_images(g6, f7, 1, {{1, m1(4)}});
    Subgroup h6(g6, {0, 2, 4});
    BlockRep b6 = induce(restrict_rep(pi6, h6), g6, transversal_identity_first(g6, h6));
    auto rep = graph_split_check(pi6, b6);
    CHECK(rep.verdict == SplitVerdict::SplitWithWitness);
    CHECK(rep.m == 3);
    CHECK(rep.n == 2);

    // both corollaries fire on this instance
    auto cy = graph_split_cyclic_criterion(pi6, b6);
    CHECK(cy.applicable);
    CHECK(cy.holds);
    auto gc = graph_split_coprime_criterion(pi6, b6);
    CHECK(gc.applicable);
    CHECK(gc.holds);

    // trivial pi splits too
    Induced c = cyclic_induced(4, 1, 5, {0, 2});
    CHECK(graph_split_check(c.pi, c.b).verdict == SplitVerdict::SplitWithWitness);
}

TEST_CASE("L-tilde isomorphism iff the projective kernel lies in H") {
    // S3 standard rep (projectively faithful): kernel inside any H
    auto s3 = std::static_pointer_cast<const FiniteGroup>(std::make_shared<PermGroup>(3));
    const Field f7 = Field::make(7, 1);
    Elem transposition = -1, threecycle = -1;
    for (Elem x = 0; x < 6; ++x) {
        if (s3->element_order(x) == 2 && transposition < 0) transposition = x;
        if (s3->element_order(x) == 3 && threecycle < 0) threecycle = x;
    }
    Mat std_t(2), std_c(2);
    std_t.set(0, 0, 0); std_t.set(0, 1, 1); std_t.set(1, 0, 1); std_t.set(1, 1, 0);
    std_c.set(0, 0, 0); std_c.set(0, 1, 6); std_c.set(1, 0, 1); std_c.set(1, 1, 6);
    Rep std2 = rep_from_images(s3, f7, 2, {{transposition, std_t}, {threecycle, std_c}});
    auto a3 = derived_subgroup(s3);
    BlockRep b = induce(restrict_rep(std2, a3), s3, transversal_identity_first(s3, a3));
    auto r1 = projective_graph_iso_check(std2, b);
    CHECK(r1.proj_kernel_in_h);
    CHECK(r1.ltilde_iso_pitilde);
    CHECK(r1.biconditional());

    // C4 with scalar image: projective kernel is all of C4, not inside H
    Induced sc = cyclic_induced(4, 2, 5, {0, 2});
    auto r2 = projective_graph_iso_check(sc.pi, sc.b);
    CHECK_FALSE(r2.proj_kernel_in_h); // 1-dim reps are projectively trivial
    CHECK_FALSE(r2.ltilde_iso_pitilde);
    CHECK(r2.biconditional());
}

TEST_CASE("simple image propagation") {
    auto psl = psl2_group(Field::make(5, 1));
    auto c2 = cyc(2);
    auto prod = std::make_shared<DirectProductGroup>(psl, c2);
    std::vector<Elem> first(prod->order());
    for (Elem x = 0; x < prod->order(); ++x) first[x] = prod->decode(x).first;
    GroupHom proj{prod, psl, first};
    REQUIRE(verify_hom(proj).ok);

    // H = PSL2 x {1}, index 2 < 60
    std::vector<Elem> members;
    for (Elem a = 0; a < psl->order(); ++a) members.push_back(prod->encode(a, 0));
    Subgroup h(prod, members);
    CHECK(simple_image_propagation(proj, h));
    // H = G trivially works
    std::vector<Elem> all(prod->order());
    for (Elem x = 0; x < prod->order(); ++x) all[x] = x;
    CHECK(simple_image_propagation(proj, Subgroup(prod, all)));
    // index too large is rejected
    Subgroup tiny(prod, {prod->identity()});
    CHECK_THROWS_WITH_AS(simple_image_propagation(proj, tiny),
                         doctest::Contains("PreconditionFailed"), Error);
}

TEST_CASE("subgroup pair-group analysis over subgroup shapes") {
    // C6 instance: H = <g^2>, pi of order 3
    auto g6 = cyc(6);
    const Field f7 = Field::make(7, 1);
    Rep pi6 = rep_from_images(g6, f7, 1, {{1, m1(4)}});
    Subgroup h6(g6, {0, 2, 4});
    BlockRep b6 = induce(restrict_rep(pi6, h6), g6, transversal_identity_first(g6, h6));
    // H' shapes: not containing H, equal to H, full group
    for (auto members : {std::vector<Elem>{0, 3}, std::vector<Elem>{0, 2, 4},
                         std::vector<Elem>{0, 1, 2, 3, 4, 5}}) {
        Subgroup hp(g6, members);
        auto rep = subgroup_pair_analysis(pi6, b6, hp);
        CHECK(rep.second_projection_iso);
        CHECK(rep.coset_embedding);
        CHECK(rep.kernel_quotient_formula);
        CHECK(rep.projective_iso_biconditional);
        CHECK(rep.largest_subgroup_biconditional);
        if (rep.intersection_split_applicable) CHECK(rep.intersection_split);
        if (rep.containment_split_applicable) CHECK(rep.containment_split);
    }
    // on the full group with pi(G) = pi(H) both split statements must fire
    Subgroup full6(g6, {0, 1, 2, 3, 4, 5});
    auto repf = subgroup_pair_analysis(pi6, b6, full6);
    CHECK(repf.intersection_split_applicable);
    CHECK(repf.containment_split_applicable);

    // S3 sign-representation instance
    auto s3 = std::static_pointer_cast<const FiniteGroup>(std::make_shared<PermGroup>(3));
    Elem transposition = -1, threecycle = -1;
    for (Elem x = 0; x < 6; ++x) {
        if (s3->element_order(x) == 2 && transposition < 0) transposition = x;
        if (s3->element_order(x) == 3 && threecycle < 0) threecycle = x;
    }
    Rep sign = rep_from_images(s3, f7, 1, {{transposition, m1(6)}, {threecycle, m1(1)}});
    auto a3 = derived_subgroup(s3);
    BlockRep bs = induce(restrict_rep(sign, a3), s3, transversal_identity_first(s3, a3));
    for (auto gens : {std::vector<Elem>{transposition}, std::vector<Elem>{threecycle},
                      std::vector<Elem>{transposition, threecycle}}) {
        Subgroup hp = subgroup_generated(s3, gens);
        auto rep = subgroup_pair_analysis(sign, bs, hp);
        CHECK(rep.second_projection_iso);
        CHECK(rep.coset_embedding);
        CHECK(rep.kernel_quotient_formula);
        CHECK(rep.projective_iso_biconditional);
        CHECK(rep.largest_subgroup_biconditional);
        if (rep.intersection_split_applicable) CHECK(rep.intersection_split);
        if (rep.containment_split_applicable) CHECK(rep.containment_split);
    }
}

TEST_CASE("PGL2/PSL2 analysis at p = 5") {
    auto rep = pgl_psl_analysis(5);
    CHECK(rep.pgl_order == 120);
    CHECK(rep.psl_order == 60);
    CHECK(rep.complement_found);
    CHECK(rep.involution_count > 0);
    CHECK(rep.no_complement_centralizes);
    CHECK(rep.witness_not_inner);
    CHECK(rep.no_complement_inner);
    CHECK(rep.pgl_not_psl_x_c2);
    CHECK(rep.twist_identity_direct);
    CHECK(rep.twist_identity_iso_product);
    CHECK(rep.twist_involution_not_direct);
    CHECK(rep.twist_involution_iso_product);
    CHECK(rep.twist_involution_not_pgl);
    CHECK_THROWS_WITH_AS(pgl_psl_analysis(17), doctest::Contains("BudgetExceeded"), Error);
}
