#include <set>

#include "doctest.h"
#include "rightsplit/matgrp.hpp"

using namespace rsplit;

TEST_CASE("GL2 enumeration orders") {
    CHECK(gl2_group(Field::make(2, 1))->order() == 6);
    CHECK(gl2_group(Field::make(3, 1))->order() == 48);
    CHECK(gl2_group(Field::make(5, 1))->order() == 480);
    CHECK(gl2_group(Field::make(2, 2))->order() == 180);
    // (q^2-1)(q^2-q) for every admissible q
    for (auto [p, r] : {std::pair<std::int64_t, int>{7, 1}, {3, 2}, {11, 1}, {13, 1}}) {
        Field f = Field::make(p, r);
        const std::int64_t q = f.q();
        CHECK(gl2_group(f)->order() == (q * q - 1) * (q * q - q));
    }
    CHECK_THROWS_WITH_AS(gl2_group(Field::make(37, 1)), doctest::Contains("FieldTooLarge"), Error);
}

TEST_CASE("GL2(F2) is S3") {
    auto g = gl2_group(Field::make(2, 1));
    auto s3 = std::make_shared<PermGroup>(3);
    CHECK(is_isomorphic(g, s3).yes());
    CHECK(verify_group_axioms(*g).ok);
}

TEST_CASE("matrix indexing round trip and labels") {
    auto g = gl2_group(Field::make(5, 1));
    for (Elem i = 0; i < g->order(); i += 37) {
        CHECK(g->index_of(g->matrix_of(i)) == i);
    }
    CHECK(g->label(g->identity()) == "[[1,0],[0,1]] over GF(5)");
    CHECK(g->index_of(Mat2{1, 0, 0, 0}) == -1); // singular
}

TEST_CASE("det_power_subgroup") {
    auto g5 = gl2_group(Field::make(5, 1));
    CHECK(det_power_subgroup(g5, 1).size() == 480);
    CHECK(det_power_subgroup(g5, 2).size() == 240);
    CHECK(det_power_subgroup(g5, 4).size() == 120);
    CHECK(det_power_subgroup(g5, 4).members == sl2_subgroup(g5).members);
    CHECK_THROWS_WITH_AS(det_power_subgroup(g5, 3), doctest::Contains("CongruenceFailed"), Error);
}

TEST_CASE("derived subgroup of GL2 equals the determinant kernel (q >= 3)") {
    for (auto [p, r] : {std::pair<std::int64_t, int>{3, 1}, {2, 2}, {5, 1}}) {
        auto g = gl2_group(Field::make(p, r));
        CHECK(derived_subgroup(g).members == sl2_subgroup(g).members);
    }
    // q = 2 is the classical exception: GL2(F2) = SL2(F2) is S3, whose
    // commutator subgroup is the 3-cycle subgroup, not the full det-kernel
    auto g2 = gl2_group(Field::make(2, 1));
    CHECK(sl2_subgroup(g2).size() == 6);
    CHECK(derived_subgroup(g2).size() == 3);
}

TEST_CASE("det-criterion subgroup equals the unique abelian-quotient subgroup") {
    auto g5 = gl2_group(Field::make(5, 1));
    for (std::int64_t n : {1, 2, 4})
        CHECK(det_power_subgroup(g5, n).members == unique_abelian_index_n(g5, n).members);
    auto g7 = gl2_group(Field::make(7, 1));
    for (std::int64_t n : {1, 2, 3, 6})
        CHECK(det_power_subgroup(g7, n).members == unique_abelian_index_n(g7, n).members);
}

TEST_CASE("GL2/SL2 is cyclic of order q-1") {
    auto g5 = gl2_group(Field::make(5, 1));
    auto [q, pi] = quotient(g5, sl2_subgroup(g5));
    (void)pi;
    CHECK(q->order() == 4);
    CHECK(is_cyclic(*q));
}

TEST_CASE("projective groups") {
    auto g5 = gl2_group(Field::make(5, 1));
    auto pgl = projective_group(g5);
    CHECK(pgl.group->order() == 120); // q^3 - q
    CHECK(verify_hom(pgl.hom).ok);
    auto psl = projective_group(sl2_subgroup(g5));
    CHECK(psl.group->order() == 60);
    CHECK(verify_hom(psl.hom).ok);
    // trivial center over F2: PGL2(F2) = GL2(F2)
    auto g2 = gl2_group(Field::make(2, 1));
    CHECK(projective_group(g2).group->order() == 6);
}

TEST_CASE("projectivization commutes with taking images of subgroups") {
    auto g5 = gl2_group(Field::make(5, 1));
    auto pgl = projective_group(g5);
    auto sl2 = sl2_subgroup(g5);
    // image of SL2 under the GL2->PGL2 projection equals PSL2 as a class set
    std::set<Elem> via_pgl;
    for (Elem m : sl2.members) via_pgl.insert(pgl.hom(m));
    auto psl = projective_group(sl2);
    std::set<Elem> psl_as_pgl;
    auto pslg = psl.group;
    auto pglg = pgl.group;
    for (Elem i = 0; i < pslg->order(); ++i) psl_as_pgl.insert(pglg->class_of(pslg->class_rep(i)));
    CHECK(via_pgl == psl_as_pgl);
}

TEST_CASE("order-2 coset witness matrix") {
    {
        const Mat2 x = psl2_order2_witness(5);
        CHECK(x == Mat2{1, 3, 4, 4});
        Field f = Field::make(5, 1);
        CHECK(m2_det(f, x) == 2);
        CHECK_FALSE(f.is_nth_power(2, 2));
        CHECK(m2_is_scalar(f, m2_mul(f, x, x)));
    }
    {
        const Mat2 x = psl2_order2_witness(7);
        CHECK(x == Mat2{1, 4, 6, 6});
        Field f = Field::make(7, 1);
        CHECK(m2_det(f, x) == 3);
        CHECK(m2_mul(f, x, x) == Mat2{4, 0, 0, 4});
    }
    {
        const Mat2 x = psl2_order2_witness(11);
        Field f = Field::make(11, 1);
        CHECK(m2_det(f, x) == 2); // least non-square mod 11
    }
    CHECK_THROWS_AS(psl2_order2_witness(4), Error);
}

TEST_CASE("witness class gives a PSL2 coset transversal of order 2 in PGL2") {
    for (std::int64_t p : {5, 7, 11}) {
        Field f = Field::make(p, 1);
        auto pgl = pgl2_group(f);
        auto psl = psl2_group(f);
        const Mat2 x = psl2_order2_witness(p);
        const Elem cls = pgl->class_of(x);
        CHECK(pgl->element_order(cls) == 2);
        // class of x lies outside PSL2 (its det is a non-square)
        std::set<Elem> psl_in_pgl;
        for (Elem i = 0; i < psl->order(); ++i) psl_in_pgl.insert(pgl->class_of(psl->class_rep(i)));
        CHECK(psl_in_pgl.count(cls) == 0);
        CHECK(static_cast<Elem>(psl_in_pgl.size()) * 2 == pgl->order());
    }
}

TEST_CASE("simplicity by conjugacy-class scan") {
    CHECK(is_simple_classes(psl2_group(Field::make(5, 1))));
    CHECK(is_simple_classes(psl2_group(Field::make(7, 1))));
    CHECK(is_simple_classes(psl2_group(Field::make(11, 1))));
    CHECK(is_simple_classes(psl2_group(Field::make(13, 1))));
    CHECK_FALSE(is_simple_classes(std::make_shared<PermGroup>(3)));
    CHECK_FALSE(is_simple_classes(pgl2_group(Field::make(5, 1))));
    // SL2(F5) has the central subgroup {I, -I}
    auto g5 = gl2_group(Field::make(5, 1));
    auto sl2grp = std::make_shared<SubgroupGroup>(sl2_subgroup(g5));
    CHECK_FALSE(is_simple_classes(sl2grp));
}

TEST_CASE("PGL2(F5) is not PSL2(F5) x C2 (order-4 histogram witness)") {
    auto pgl = pgl2_group(Field::make(5, 1));
    auto psl = psl2_group(Field::make(5, 1));
    auto prod = std::make_shared<DirectProductGroup>(psl, std::make_shared<CyclicGroup>(2));
    auto r = is_isomorphic(pgl, prod);
    REQUIRE(r.no());
    CHECK(r.detail.find("order 4") != std::string::npos);
    CHECK(order_histogram(*pgl)[4] > 0);
    CHECK(order_histogram(*prod).count(4) == 0);
}

TEST_CASE("oracle-backed GL2 at the q = 31 cap") {
    auto g = gl2_group(Field::make(31, 1));
    CHECK(g->order() == (961 - 1) * (961 - 31));
    CHECK_FALSE(g->has_table());
    const Elem a = 12345 % g->order(), b = 678;
    CHECK(g->mul(g->mul(a, b), g->inv(b)) == a);
    CHECK(g->mul(g->identity(), a) == a);
    // determinant criterion still applies: index-2 subgroup exists (30 even)
    CHECK(det_power_subgroup(g, 2).size() * 2 == g->order());
}

TEST_CASE("exceptional isomorphisms with symmetric groups") {
    // PGL2(F3) is S4 and PSL2(F3) is A4
    auto s4 = std::make_shared<PermGroup>(4);
    CHECK(is_isomorphic(pgl2_group(Field::make(3, 1)), s4).yes());
    CHECK(is_isomorphic(psl2_group(Field::make(3, 1)),
                        std::make_shared<SubgroupGroup>(derived_subgroup(s4)))
              .yes());
    // PGL2(F5) is S5 and PSL2(F5) is A5
    auto s5 = std::make_shared<PermGroup>(5);
    CHECK(is_isomorphic(pgl2_group(Field::make(5, 1)), s5).yes());
    CHECK(is_isomorphic(psl2_group(Field::make(5, 1)),
                        std::make_shared<SubgroupGroup>(derived_subgroup(s5)))
              .yes());
}
