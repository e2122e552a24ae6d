#include <doctest.h>

#include <random>

#include "khicalc/error.hpp"
#include "khicalc/subspace.hpp"
#include "fixtures.hpp"

using namespace khicalc;

static const Field Q = Field::rationals();

TEST_CASE("scalar arithmetic is exact over the rationals")
{
    Scalar a = Q.parse("1/3"), b = Q.parse("7/2");
    CHECK((a + b).str() == "23/6");
    CHECK((a * b).str() == "7/6");
    CHECK((a - a).is_zero());
    CHECK(a.inverse().str() == "3");
    CHECK_THROWS_AS(Q.zero().inverse(), std::domain_error);
}

TEST_CASE("prime field arithmetic")
{
    Field fp = Field::prime(32003);
    Scalar a = fp.integer(-1);
    CHECK(a.str() == "32002");
    CHECK((a * a).str() == "1");
    Scalar half = fp.integer(2).inverse();
    CHECK((half + half).str() == "1");
    CHECK(fp.parse("1/2") == half);
    CHECK_THROWS_AS(Field::prime(32004), std::invalid_argument);
}

TEST_CASE("rank basics")
{
    CHECK(Matrix::identity(Q, 2).rank() == 2);
    CHECK(Matrix(Q, 3, 4).rank() == 0);
    CHECK(Matrix::from_rows(Q, {{1, 2}, {2, 4}}).rank() == 1);
}

TEST_CASE("kernel bases are canonical")
{
    CHECK(Matrix::identity(Q, 3).kernel_basis().cols() == 0);
    CHECK(Matrix(Q, 2, 3).kernel_basis() == Matrix::identity(Q, 3));
    // one relation x + y = 0, canonical basis (1, -1)
    Matrix k = Matrix::from_rows(Q, {{1, 1}}).kernel_basis();
    CHECK(k == Matrix::from_rows(Q, {{1}, {-1}}));
}

TEST_CASE("image bases")
{
    CHECK(Subspace::span(Matrix::identity(Q, 2)) == Subspace::full(Q, 2));
    CHECK(Subspace::span(Matrix(Q, 2, 2)) == Subspace::zero(Q, 2));
    Matrix col = Matrix::from_rows(Q, {{1}, {2}});
    CHECK(Subspace::span(col).basis() == col);
}

TEST_CASE("solve finds particular solutions and detects inconsistency")
{
    Matrix a = Matrix::from_rows(Q, {{1, 0}, {0, 0}});
    Matrix good = Matrix::from_rows(Q, {{5}, {0}});
    auto x = a.solve(good);
    REQUIRE(x.has_value());
    CHECK(a * *x == good);
    Matrix bad = Matrix::from_rows(Q, {{0}, {1}});
    CHECK_FALSE(a.solve(bad).has_value());
}

TEST_CASE("orthogonal complements")
{
    Subspace full2 = Subspace::full(Q, 2);
    Subspace e1 = Subspace::span(Matrix::from_rows(Q, {{1}, {0}}));
    SUBCASE("s = within gives zero")
    {
        CHECK(full2.orthogonal_complement_in(full2) == Subspace::zero(Q, 2));
    }
    SUBCASE("s = 0 gives within")
    {
        CHECK(Subspace::zero(Q, 2).orthogonal_complement_in(full2) == full2);
    }
    SUBCASE("standard basis")
    {
        CHECK(e1.orthogonal_complement_in(full2) ==
              Subspace::span(Matrix::from_rows(Q, {{0}, {1}})));
    }
    SUBCASE("containment is checked")
    {
        Subspace line = Subspace::span(Matrix::from_rows(Q, {{1}, {1}, {0}}));
        Subspace within = Subspace::span(Matrix::from_rows(Q, {{1}, {0}, {0}}));
        CHECK_THROWS_AS(line.orthogonal_complement_in(within), Error);
    }
}

TEST_CASE("preimages")
{
    Matrix id = Matrix::identity(Q, 2);
    CHECK(Subspace::preimage(id, Subspace::full(Q, 2)) == Subspace::full(Q, 2));
    Subspace e1 = Subspace::span(Matrix::from_rows(Q, {{1}, {0}}));
    CHECK(Subspace::preimage(id, e1) == e1);
    Matrix proj = Matrix::from_rows(Q, {{1, 0}, {0, 0}});
    CHECK(Subspace::preimage(proj, Subspace::zero(Q, 2)) ==
          Subspace::span(Matrix::from_rows(Q, {{0}, {1}})));
    CHECK_THROWS_AS(Subspace::preimage(proj, Subspace::zero(Q, 3)), Error);
}

TEST_CASE("rank-nullity and complement sum over random matrices")
{
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<std::size_t> d(1, 6);
        std::size_t r = d(rng), c = d(rng);
        Matrix m = fixtures::random_matrix(rng, Q, r, c);
        CHECK(m.rank() + m.kernel_basis().cols() == c);

        Subspace im = Subspace::span(m);
        Subspace within = Subspace::full(Q, r);
        Subspace comp = im.orthogonal_complement_in(within);
        CHECK(comp.dim() + im.dim() == r);
        CHECK(comp.intersect(im) == Subspace::zero(Q, r));
        CHECK(comp.sum(im) == within);
    }
}

TEST_CASE("prime field ranks agree with rational ranks on small integer matrices")
{
    std::mt19937_64 rng(7);
    Field fp = Field::prime(32003);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<std::size_t> d(1, 4);
        std::size_t r = d(rng), c = d(rng);
        Matrix mq(Q, r, c), mp(fp, r, c);
        std::uniform_int_distribution<long> entry(-2, 2);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                long v = entry(rng);
                mq.at(i, j) = Q.integer(v);
                mp.at(i, j) = fp.integer(v);
            }
        CHECK(mq.rank() == mp.rank());
    }
}

TEST_CASE("queries are deterministic")
{
    std::mt19937_64 rng(99);
    Matrix m = fixtures::random_matrix(rng, Q, 5, 7);
    CHECK(m.kernel_basis() == m.kernel_basis());
    CHECK(m.column_echelon() == m.column_echelon());
    CHECK(m.rref() == m.rref());
}

TEST_CASE("quotient presentations reduce against the chosen complement")
{
    // V = plane spanned by e1, e2; W = diagonal line
    Subspace v = Subspace::span(Matrix::from_rows(Q, {{1, 0}, {0, 1}, {0, 0}}));
    Subspace w = Subspace::span(Matrix::from_rows(Q, {{1}, {1}, {0}}));
    QuotientPres pres(w, v);
    CHECK(pres.dim() == 1);
    Matrix vec = Matrix::from_rows(Q, {{3}, {1}, {0}});
    Matrix coords = pres.reduce(vec);
    CHECK(coords.rows() == 1);
    // [vec] = coords * reps modulo W
    Matrix back = pres.reps() * coords;
    CHECK(w.contains(vec - back));
}
