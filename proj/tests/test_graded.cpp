#include <doctest.h>

#include "khicalc/error.hpp"
#include "khicalc/graded.hpp"

using namespace khicalc;

static const Field Q = Field::rationals();

namespace {

// the three-generator zig-zag space: x1 at (1,0), y1 at (0,1), x2 at (-1,0)
GradedSpace zigzag_space()
{
    GradedSpace s;
    s.add_piece(1, 0, 1, {"x1"});
    s.add_piece(0, 1, 1, {"y1"});
    s.add_piece(-1, 0, 1, {"x2"});
    return s;
}

GradedMap zigzag_dplus()
{
    GradedSpace s = zigzag_space();
    GradedMap d(s, s, 1, 1, Q);
    d.set_block({0, 1}, Matrix::identity(Q, 1));
    return d;
}

GradedMap zigzag_dminus()
{
    GradedSpace s = zigzag_space();
    GradedMap d(s, s, -1, 1, Q);
    d.set_block({0, 1}, Matrix::identity(Q, 1));
    return d;
}

} // namespace

TEST_CASE("shift moves pieces and composes to the identity")
{
    GradedSpace s;
    s.add_piece(2, 0, 3);
    SUBCASE("zero shift") { CHECK(shift(s, 0) == s); }
    SUBCASE("piece at 2 shifted by 3 sits at 5")
    {
        GradedSpace t = shift(s, 3);
        CHECK(t.piece_dim(5, 0) == 3);
        CHECK(t.piece_dim(2, 0) == 0);
    }
    SUBCASE("shifts invert") { CHECK(shift(shift(s, 1), -1) == s); }
}

TEST_CASE("verify_square_zero")
{
    GradedSpace s = zigzag_space();
    SUBCASE("zero map") { CHECK(verify_square_zero({GradedMap(s, s, 1, 1, Q)})); }
    SUBCASE("identity on a nonzero space is not square zero")
    {
        GradedSpace one;
        one.add_piece(0, 0, 2);
        GradedMap id(one, one, 0, 0, Q);
        id.set_block({0, 0}, Matrix::identity(Q, 2));
        CHECK_FALSE(verify_square_zero({id}));
    }
    SUBCASE("zig-zag differentials square to zero")
    {
        CHECK(verify_square_zero({zigzag_dplus()}));
        CHECK(verify_square_zero({zigzag_dplus(), zigzag_dminus()}));
    }
}

TEST_CASE("homology of simple complexes")
{
    SUBCASE("zero differential returns the space")
    {
        GradedSpace s = zigzag_space();
        Complex c(s, Matrix(Q, 3, 3));
        auto h = c.homology();
        CHECK(h.total == 3);
        REQUIRE(h.graded.has_value());
        CHECK(*h.graded == s);
    }
    SUBCASE("two-term complex with the identity is acyclic")
    {
        GradedSpace s;
        s.add_piece(0, 0, 1);
        s.add_piece(1, 1, 1);
        GradedMap d(s, s, 1, 1, Q);
        d.set_block({0, 0}, Matrix::identity(Q, 1));
        Complex c(s, MapSum{d});
        CHECK(c.homology().total == 0);
    }
    SUBCASE("bent zig-zag differential has one-dimensional homology")
    {
        GradedSpace s = zigzag_space();
        Complex c(s, MapSum{zigzag_dplus(), zigzag_dminus()});
        auto h = c.homology();
        CHECK(h.total == 1);
        REQUIRE(h.parity_split.has_value());
        CHECK(h.parity_split->first == 1);  // survivor x1 - x2 side
        CHECK(h.parity_split->second == 0);
    }
}

TEST_CASE("euler characteristic is preserved by homology for homogeneous differentials")
{
    GradedSpace s;
    s.add_piece(0, 0, 2);
    s.add_piece(1, 1, 2);
    GradedMap d(s, s, 1, 1, Q);
    d.set_block({0, 0}, Matrix::from_rows(Q, {{1, 0}, {0, 0}}));
    Complex c(s, MapSum{d});
    auto h = c.homology();
    REQUIRE(h.graded.has_value());
    auto chi = [](const GradedSpace& g) {
        long v = 0;
        for (const auto& [k, p] : g.pieces())
            v += (k.parity == 0 ? 1 : -1) * static_cast<long>(p.dim);
        return v;
    };
    CHECK(chi(s) == chi(*h.graded));
    CHECK(h.total <= s.total_dim());
}

TEST_CASE("mapping cones")
{
    GradedSpace x;
    x.add_piece(0, 0, 2);
    GradedSpace y;
    y.add_piece(0, 0, 1);

    SUBCASE("cone of an isomorphism is acyclic")
    {
        GradedMap f(x, x, 0, 0, Q);
        f.set_block({0, 0}, Matrix::identity(Q, 2));
        CHECK(mapping_cone(f).homology().total == 0);
    }
    SUBCASE("cone of zero is the direct sum with the flip")
    {
        GradedMap z(x, y, 0, 0, Q);
        Complex cone = mapping_cone(z);
        auto h = cone.homology();
        CHECK(h.total == 3);
        REQUIRE(h.graded.has_value());
        CHECK(h.graded->piece_dim(0, 0) == 1); // target
        CHECK(h.graded->piece_dim(0, 1) == 2); // flipped source
    }
    SUBCASE("cone of a surjection with kernel")
    {
        GradedMap f(x, y, 0, 0, Q);
        f.set_block({0, 0}, Matrix::from_rows(Q, {{1, 0}}));
        CHECK(mapping_cone(f).homology().total == 1);
    }
    SUBCASE("non-chain-maps are rejected")
    {
        GradedSpace two;
        two.add_piece(0, 0, 1);
        two.add_piece(1, 1, 1);
        GradedMap d(two, two, 1, 1, Q);
        d.set_block({0, 0}, Matrix::identity(Q, 1));
        Complex src(two, MapSum{d});
        Complex tgt(two, Matrix(Q, 2, 2));
        GradedMap f(two, two, 0, 0, Q);
        f.set_block({0, 0}, Matrix::identity(Q, 1));
        f.set_block({1, 1}, Matrix::identity(Q, 1));
        CHECK_THROWS_AS(mapping_cone(src, tgt, f), Error);
    }
}

TEST_CASE("equality up to a unit")
{
    Matrix a = Matrix::from_rows(Q, {{2, 0}, {0, 4}});
    Matrix b = Matrix::from_rows(Q, {{1, 0}, {0, 2}});
    CHECK(equal_up_to_unit(a, b));
    CHECK(equal_up_to_unit(Matrix(Q, 2, 2), Matrix(Q, 2, 2)));
    CHECK_FALSE(equal_up_to_unit(a, Matrix::identity(Q, 2)));
    CHECK_FALSE(equal_up_to_unit(a, Matrix(Q, 2, 2)));
}
