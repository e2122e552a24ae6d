#include "khicalc/filtered_lift.hpp"

#include "khicalc/error.hpp"

namespace khicalc {

namespace {

// place a per-s subspace basis (in E^s coordinates) into global E coordinates
Matrix globalize(Field f, const Matrix& basis, std::size_t offset, std::size_t total)
{
    Matrix g(f, total, basis.cols());
    g.set_block(offset, 0, basis);
    return g;
}

} // namespace

LiftedComplex lift(const UnrolledCouple& couple)
{
    Field f = couple.field();
    int s1 = couple.s1(), s2 = couple.s2();
    int m = s2 - s1; // number of lifted differentials

    std::map<int, std::size_t> offsets, blocks;
    std::size_t total = 0;
    for (int s = s1; s <= s2; ++s) {
        offsets[s] = total;
        blocks[s] = couple.e_dim(s);
        total += couple.e_dim(s);
    }

    // global boundary and cycle subgroups B_p, Z_p for p = 1 .. m+1
    std::vector<Subspace> B, Z;
    for (int p = 1; p <= m + 1; ++p) {
        Matrix bb(f, total, 0), zz(f, total, 0);
        for (int s = s1; s <= s2; ++s) {
            bb = bb.hcat(globalize(f, couple.boundary_subgroup(p, s).basis(), offsets[s], total));
            zz = zz.hcat(globalize(f, couple.cycle_subgroup(p, s).basis(), offsets[s], total));
        }
        B.push_back(Subspace::span(bb));
        Z.push_back(Subspace::span(zz));
    }

    // splitting E = ⊕_p (B_p' ⊕ Z_p') ⊕ E_inf' by iterated complements
    std::vector<Subspace> Bp, Zp;
    for (int p = 1; p <= m; ++p) {
        Bp.push_back(B[static_cast<std::size_t>(p - 1)].complement_in(B[static_cast<std::size_t>(p)]));
        Zp.push_back(Z[static_cast<std::size_t>(p)].complement_in(Z[static_cast<std::size_t>(p - 1)]));
    }
    Subspace Einf = B.back().complement_in(Z.back());

    std::size_t split_dim = Einf.dim();
    for (int p = 0; p < m; ++p)
        split_dim += Bp[static_cast<std::size_t>(p)].dim() + Zp[static_cast<std::size_t>(p)].dim();
    if (split_dim != total)
        throw std::logic_error("lift: splitting dimensions do not add up");

    std::vector<Matrix> lifted;
    Matrix d(f, total, total);
    for (int r = 1; r <= m; ++r) {
        // representative subspace of E_r inside E and its complement in the splitting
        Matrix rep(f, total, 0), comp(f, total, 0);
        for (int p = 1; p <= m; ++p) {
            const Matrix& bb = Bp[static_cast<std::size_t>(p - 1)].basis();
            const Matrix& zz = Zp[static_cast<std::size_t>(p - 1)].basis();
            if (p >= r)
                rep = rep.hcat(bb).hcat(zz);
            else
                comp = comp.hcat(bb).hcat(zz);
        }
        rep = rep.hcat(Einf.basis());

        Page pg = couple.page(r);
        // image of each representative column under the page differential
        Matrix images(f, total, rep.cols());
        for (std::size_t c = 0; c < rep.cols(); ++c) {
            // every splitting basis vector lives in a single s block
            int s_home = s1;
            bool found = false;
            for (int s = s1; s <= s2; ++s) {
                for (std::size_t i = 0; i < blocks[s]; ++i)
                    if (!rep.at(offsets[s] + i, c).is_zero()) {
                        if (found && s_home != s)
                            throw std::logic_error("lift: splitting vector spans several s blocks");
                        s_home = s;
                        found = true;
                    }
            }
            if (!found)
                continue; // zero column cannot occur, but harmless
            if (s_home + r > s2)
                continue; // d_r lands in a vanishing block
            Matrix v = rep.block(offsets[s_home], c, blocks[s_home], 1);
            Matrix a = pg.components.at(s_home).reduce(v);
            Matrix b = pg.components.at(s_home + r).reps() * pg.d.at(s_home) * a;
            images.set_block(offsets[s_home + r], c, b);
        }

        // d_r' = I ∘ d_r ∘ P against the splitting
        auto proj = rep.hcat(comp).solve(Matrix::identity(f, total));
        if (!proj)
            throw std::logic_error("lift: splitting basis is not a basis");
        Matrix dr = images * proj->top_rows(rep.cols());
        lifted.push_back(dr);
        d = d + dr;
    }

    // d_{r1}' ∘ d_{r2}' = 0 for all pairs, hence d ∘ d = 0
    for (const Matrix& a : lifted)
        for (const Matrix& b : lifted)
            if (!(a * b).is_zero())
                throw std::logic_error("lift: lifted differentials do not annihilate each other");

    std::vector<int> levels;
    for (int s = s1; s <= s2; ++s)
        for (std::size_t i = 0; i < blocks[s]; ++i)
            levels.push_back(s);

    LiftedComplex out{FilteredComplex(std::move(d), std::move(levels)), std::move(lifted),
                      std::move(blocks)};

    // H(E, d) must have the stable page's total dimension
    Page einf_page = couple.page(m + 1);
    if (out.homology_dim() != einf_page.total_dim())
        throw std::logic_error("lift: homology of the lift disagrees with the stable page");
    return out;
}

RoundtripReport roundtrip_check(const UnrolledCouple& couple)
{
    RoundtripReport rep;
    LiftedComplex lc = lift(couple);
    if (lc.complex.dim() == 0) {
        // nothing to re-derive from an empty total space
        return rep;
    }
    UnrolledCouple rederived = UnrolledCouple::from_filtered(lc.complex);
    int m = couple.s2() - couple.s1();
    for (int r = 1; r <= m + 1; ++r) {
        Page a = couple.page(r);
        Page b = rederived.page(r);
        for (int s = couple.s1(); s <= couple.s2(); ++s) {
            if (a.dim(s) != b.dim(s)) {
                rep.ok = false;
                rep.mismatches.push_back("page r=" + std::to_string(r) + " s=" + std::to_string(s) +
                                         ": " + std::to_string(a.dim(s)) + " vs " +
                                         std::to_string(b.dim(s)));
            }
        }
    }
    return rep;
}

} // namespace khicalc
