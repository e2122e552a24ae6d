#include <doctest.h>

#include "khicalc/error.hpp"
#include "khicalc/exact_couple.hpp"
#include "khicalc/knot.hpp"

using namespace khicalc;

static const Field Q = Field::rationals();

namespace {

// positive zig-zag on three generators: x1@1, y1@0, x2@-1
KhiProfile trefoil_profile()
{
    KhiProfile p(Q, 1, 1);
    p.set_piece(1, 1, 0, {"x1"});
    p.set_piece(0, 1, 1, {"y1"});
    p.set_piece(-1, 1, 0, {"x2"});
    Matrix unit = Matrix::identity(Q, 1);
    p.set_dplus_block(0, 1, unit);
    p.set_dminus_block(0, -1, unit);
    return p;
}

KhiProfile figure8_profile()
{
    return synthesize_genus_one_profile(1, GenusOneCase::two_a_plus_one, std::nullopt);
}

KhiProfile unknot_profile()
{
    KhiProfile p(Q, 0, 1);
    p.set_piece(0, 1, 0);
    return p;
}

} // namespace

TEST_CASE("bent complexes of the zero-differential profile have full homology")
{
    KhiProfile p(Q, 2, 1);
    p.set_piece(2, 1, 0);
    p.set_piece(0, 2, 1);
    p.set_piece(-2, 1, 0);
    for (int s = -3; s <= 3; ++s) {
        CHECK(build_bent(p, s).homology_dim() == 4);
        CHECK(build_dual_bent(p, s).homology_dim() == 4);
    }
}

TEST_CASE("trefoil bent complexes")
{
    KhiProfile p = trefoil_profile();
    SUBCASE("the pivot grading merges both differentials")
    {
        BentComplex a0 = build_bent(p, 0);
        CHECK(a0.total_dim() == 3);
        CHECK(a0.homology_dim() == 1);
    }
    SUBCASE("above the top grading only the lowering differential remains")
    {
        BentComplex high = build_bent(p, 2);
        CHECK(high.d == p.dminus_total());
        CHECK(high.homology_dim() == 1);
        BentComplex low = build_bent(p, -2);
        CHECK(low.d == p.dplus_total());
    }
    SUBCASE("one-sided bent complexes")
    {
        CHECK(build_bent(p, 1).homology_dim() == 1);
        CHECK(build_bent(p, -1).homology_dim() == 1);
    }
    SUBCASE("dual bent at the pivot drops both pivot arrows")
    {
        CHECK(build_dual_bent(p, 0).homology_dim() == 3);
        CHECK(build_dual_bent(p, 1).homology_dim() == 1);
        CHECK(build_dual_bent(p, -1).homology_dim() == 1);
    }
}

TEST_CASE("half complexes and projections")
{
    KhiProfile p = trefoil_profile();
    BentComplex bplus = build_half(p, 0, +1);
    CHECK(bplus.d == p.dplus_total());
    BentComplex bminus = build_half(p, 0, -1);
    CHECK(bminus.d == p.dminus_total());

    for (int s = -1; s <= 1; ++s) {
        BentComplex a = build_bent(p, s);
        for (int sign : {+1, -1}) {
            GradedMap pr = projection(p, s, sign);
            Matrix pm = pr.total();
            Matrix target_d = sign > 0 ? p.dplus_total() : p.dminus_total();
            // chain map: pr ∘ d_s = d_± ∘ pr
            CHECK(pm * a.d == target_d * pm);
        }
    }

    SUBCASE("the pivot piece is kept by both projections")
    {
        GradedMap plus = projection(p, 0, +1);
        CHECK(plus.block({0, 1}) == Matrix::identity(Q, 1));
        CHECK(plus.block({1, 0}) == Matrix::identity(Q, 1));
        CHECK(plus.block({-1, 0}).is_zero());
        GradedMap minus = projection(p, 0, -1);
        CHECK(minus.block({-1, 0}) == Matrix::identity(Q, 1));
        CHECK(minus.block({1, 0}).is_zero());
    }
}

TEST_CASE("large surgery dimensions")
{
    SUBCASE("zig-zag profile at the smallest large slope")
    {
        SurgeryDimReport rep = large_surgery_dims(trefoil_profile(), 3);
        CHECK(rep.s_min == -1);
        CHECK(rep.s_max == 1);
        CHECK(rep.class_dims == std::vector<std::size_t>{1, 1, 1});
        CHECK(rep.total == 3);
        SurgeryDimReport dual = large_surgery_dims(trefoil_profile(), -3);
        CHECK(dual.total == 5);
    }
    SUBCASE("thin three-dimensional middle gives total five")
    {
        SurgeryDimReport rep = large_surgery_dims(figure8_profile(), 3);
        CHECK(rep.total == 5);
        CHECK(large_surgery_dims(figure8_profile(), -3).total == 5);
    }
    SUBCASE("one generator, slope one")
    {
        SurgeryDimReport rep = large_surgery_dims(unknot_profile(), 1);
        CHECK(rep.total == 1);
        CHECK(rep.class_dims.size() == 1);
    }
    SUBCASE("small slopes are rejected")
    {
        CHECK_THROWS_AS(large_surgery_dims(trefoil_profile(), 2), Error);
        CHECK_THROWS_AS(large_surgery_dims(trefoil_profile(), 0), Error);
    }
    SUBCASE("redundant classes agree on wide slopes")
    {
        // n = 6 > 2g+1 leaves extra values of s; consistency is asserted inside
        SurgeryDimReport rep = large_surgery_dims(trefoil_profile(), 6);
        CHECK(rep.total == 6);
        for (std::size_t d : rep.class_dims)
            CHECK(d == 1);
    }
}

TEST_CASE("chain recognition")
{
    SUBCASE("single generator is both chains")
    {
        CHECK(is_positive_chain(unknot_profile(), 0));
        CHECK(is_negative_chain(unknot_profile(), 0));
    }
    SUBCASE("the zig-zag is positive but not negative")
    {
        CHECK(is_positive_chain(trefoil_profile(), 0));
        CHECK_FALSE(is_negative_chain(trefoil_profile(), 0));
        CHECK(is_negative_chain(trefoil_profile().mirror(), 0));
    }
    SUBCASE("a grading of dimension two is never a chain")
    {
        KhiProfile p(Q, 1, 1);
        p.set_piece(0, 2, 0);
        CHECK_FALSE(is_positive_chain(p, 0));
        CHECK_FALSE(is_negative_chain(p, 0));
    }
    SUBCASE("missing zig-zag arrows disqualify")
    {
        KhiProfile p(Q, 1, 1);
        p.set_piece(1, 1, 0);
        p.set_piece(0, 1, 1);
        p.set_piece(-1, 1, 0);
        p.set_dplus_block(0, 1, Matrix::identity(Q, 1)); // no lowering arrow
        CHECK_FALSE(is_positive_chain(p, 0));
    }
}

TEST_CASE("floer-simple detection")
{
    CHECK(floer_simple_check(unknot_profile()));
    CHECK_FALSE(floer_simple_check(trefoil_profile()));
    SUBCASE("one generator per class at q = 2")
    {
        KhiProfile p(Q, 0, 2);
        p.set_piece(0, 1, 0);
        p.set_piece(1, 1, 1);
        CHECK(floer_simple_check(p));
    }
}

TEST_CASE("duality against the mirror route")
{
    for (const KhiProfile& p : {trefoil_profile(), figure8_profile(), unknot_profile()}) {
        DualityReport rep = duality_check(p);
        CHECK(rep.all_equal);
    }
    SUBCASE("the thin profile is amphichiral: dual dims equal own dims")
    {
        KhiProfile p = figure8_profile();
        for (int s = -2; s <= 2; ++s)
            CHECK(build_dual_bent(p, s).homology_dim() == build_bent(p, -s).homology_dim());
    }
}

TEST_CASE("profile validation rejects broken data")
{
    SUBCASE("parity-preserving block")
    {
        KhiProfile p(Q, 1, 1);
        p.set_piece(1, 1, 0);
        p.set_piece(0, 1, 0);
        p.set_dplus_block(0, 1, Matrix::identity(Q, 1));
        CHECK_THROWS_AS(p.validate(), Error);
    }
    SUBCASE("grading outside the band")
    {
        KhiProfile p(Q, 1, 1);
        p.set_piece(2, 1, 0);
        CHECK_THROWS_AS(p.validate(), Error);
    }
    SUBCASE("non-square-zero raising differential")
    {
        KhiProfile p(Q, 2, 1);
        p.set_piece(2, 1, 0);
        p.set_piece(1, 1, 1);
        p.set_piece(0, 1, 0);
        p.set_dplus_block(0, 1, Matrix::identity(Q, 1));
        p.set_dplus_block(1, 2, Matrix::identity(Q, 1));
        CHECK_THROWS_AS(p.validate(), Error);
    }
    SUBCASE("class-breaking block at q = 2")
    {
        KhiProfile p(Q, 1, 2);
        p.set_piece(1, 1, 0);
        p.set_piece(0, 1, 1);
        p.set_dplus_block(0, 1, Matrix::identity(Q, 1));
        CHECK_THROWS_AS(p.validate(), Error);
    }
    SUBCASE("wrong direction is rejected immediately")
    {
        KhiProfile p(Q, 1, 1);
        p.set_piece(1, 1, 0);
        p.set_piece(0, 1, 1);
        CHECK_THROWS_AS(p.set_dplus_block(1, 0, Matrix::identity(Q, 1)), Error);
        CHECK_THROWS_AS(p.set_dminus_block(0, 1, Matrix::identity(Q, 1)), Error);
    }
}

TEST_CASE("bent homology in the saturated range matches the spectral-sequence limit")
{
    // H(A_s) for s at/above the top equals H(d_minus), computed independently
    // as the stable page of the lowering filtration
    KhiProfile p = figure8_profile();
    Matrix dm = p.dminus_total();
    std::vector<int> levels;
    for (const auto& [z, piece] : p.pieces())
        for (std::size_t i = 0; i < piece.dim; ++i)
            levels.push_back(-z); // d_minus raises -z
    FilteredComplex fc(dm, levels);
    UnrolledCouple couple = UnrolledCouple::from_filtered(fc);
    std::size_t einf_total = couple.page(couple.s2() - couple.s1() + 1).total_dim();
    CHECK(build_bent(p, p.top_z() + 1).homology_dim() == einf_total);

    Matrix dp = p.dplus_total();
    std::vector<int> plus_levels;
    for (const auto& [z, piece] : p.pieces())
        for (std::size_t i = 0; i < piece.dim; ++i)
            plus_levels.push_back(z);
    FilteredComplex fcp(dp, plus_levels);
    UnrolledCouple couple_p = UnrolledCouple::from_filtered(fcp);
    CHECK(build_bent(p, p.bottom_z() - 1).homology_dim() ==
          couple_p.page(couple_p.s2() - couple_p.s1() + 1).total_dim());
}
