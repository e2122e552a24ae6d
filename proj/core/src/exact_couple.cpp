#include "khicalc/exact_couple.hpp"

#include "khicalc/error.hpp"

namespace khicalc {

UnrolledCouple::UnrolledCouple(int s1, int s2, Field field, std::vector<std::size_t> a_dims,
                               std::vector<std::size_t> e_dims, std::vector<Matrix> i_maps,
                               std::vector<Matrix> j_maps, std::vector<Matrix> k_maps)
    : UnrolledCouple(unchecked, s1, s2, field, std::move(a_dims), std::move(e_dims),
                     std::move(i_maps), std::move(j_maps), std::move(k_maps))
{
    validate();
}

UnrolledCouple::UnrolledCouple(unchecked_t, int s1, int s2, Field field,
                               std::vector<std::size_t> a_dims, std::vector<std::size_t> e_dims,
                               std::vector<Matrix> i_maps, std::vector<Matrix> j_maps,
                               std::vector<Matrix> k_maps)
    : s1_(s1), s2_(s2), field_(field), a_dims_(std::move(a_dims)), e_dims_(std::move(e_dims)),
      i_(std::move(i_maps)), j_(std::move(j_maps)), k_(std::move(k_maps))
{
    std::size_t span = static_cast<std::size_t>(s2_ - s1_ + 1);
    if (s2_ < s1_ || a_dims_.size() != span + 2 || e_dims_.size() != span ||
        i_.size() != span + 1 || j_.size() != span || k_.size() != span)
        throw Error(Errc::shape_mismatch, "UnrolledCouple: storage sizes disagree with bounds");
    for (int s = s1_ - 1; s <= s2_; ++s) {
        const Matrix& m = i_[static_cast<std::size_t>(s - (s1_ - 1))];
        if (m.rows() != a_dim(s) || m.cols() != a_dim(s + 1))
            throw Error(Errc::shape_mismatch, "UnrolledCouple: i map shape");
    }
    for (int s = s1_; s <= s2_; ++s) {
        const Matrix& mj = j_[static_cast<std::size_t>(s - s1_)];
        const Matrix& mk = k_[static_cast<std::size_t>(s - s1_)];
        if (mj.rows() != e_dim(s) || mj.cols() != a_dim(s))
            throw Error(Errc::shape_mismatch, "UnrolledCouple: j map shape");
        if (mk.rows() != a_dim(s + 1) || mk.cols() != e_dim(s))
            throw Error(Errc::shape_mismatch, "UnrolledCouple: k map shape");
    }
}

void UnrolledCouple::validate() const
{
    // im = ker at the three spots of every stored triangle
    for (int s = s1_ - 1; s <= s2_; ++s) {
        Matrix mi = i_map(s);
        Matrix mj = j_map(s);
        Matrix mk = k_map(s);
        if (!(Subspace::span(mi) == Subspace::span(mj.kernel_basis())))
            throw std::invalid_argument("UnrolledCouple: triangle not exact at A^s, s=" +
                                        std::to_string(s));
        if (!(Subspace::span(mj) == Subspace::span(mk.kernel_basis())))
            throw std::invalid_argument("UnrolledCouple: triangle not exact at E^s, s=" +
                                        std::to_string(s));
        if (!(Subspace::span(mk) == Subspace::span(i_map(s).kernel_basis())))
            throw std::invalid_argument("UnrolledCouple: triangle not exact at A^{s+1}, s=" +
                                        std::to_string(s));
    }
}

std::size_t UnrolledCouple::a_dim(int s) const
{
    if (s < s1_ - 1)
        s = s1_ - 1;
    if (s > s2_ + 1)
        s = s2_ + 1;
    return a_dims_[static_cast<std::size_t>(s - (s1_ - 1))];
}

std::size_t UnrolledCouple::e_dim(int s) const
{
    if (s < s1_ || s > s2_)
        return 0;
    return e_dims_[static_cast<std::size_t>(s - s1_)];
}

Matrix UnrolledCouple::i_map(int s) const
{
    if (s < s1_ - 1 || s > s2_)
        return Matrix::identity(field_, a_dim(s));
    return i_[static_cast<std::size_t>(s - (s1_ - 1))];
}

Matrix UnrolledCouple::j_map(int s) const
{
    if (s < s1_ || s > s2_)
        return Matrix(field_, e_dim(s), a_dim(s));
    return j_[static_cast<std::size_t>(s - s1_)];
}

Matrix UnrolledCouple::k_map(int s) const
{
    if (s < s1_ || s > s2_)
        return Matrix(field_, a_dim(s + 1), e_dim(s));
    return k_[static_cast<std::size_t>(s - s1_)];
}

Matrix UnrolledCouple::iter_i(int r, int s) const
{
    Matrix m = Matrix::identity(field_, a_dim(s));
    // compose i(s-1), i(s-2), ..., i(s-r); factors outside the stored range
    // are identities and skipped
    for (int t = s - 1; t >= s - r; --t) {
        if (t < s1_ - 1)
            break;
        if (t > s2_)
            continue;
        m = i_map(t) * m;
    }
    return m;
}

Subspace UnrolledCouple::iter_kernel(int r, int s) const
{
    return Subspace::span(iter_i(r, s).kernel_basis());
}

Subspace UnrolledCouple::iter_image(int r, int s) const
{
    // image of i^{(r)}: A^{s+r} -> A^s
    return Subspace::span(iter_i(r, s + r));
}

Subspace UnrolledCouple::boundary_subgroup(int r, int s) const
{
    if (r < 1)
        throw Error(Errc::precondition_violated, "boundary_subgroup: r >= 1 required");
    return Subspace::span(j_map(s) * iter_kernel(r - 1, s).basis());
}

Subspace UnrolledCouple::cycle_subgroup(int r, int s) const
{
    if (r < 1)
        throw Error(Errc::precondition_violated, "cycle_subgroup: r >= 1 required");
    return Subspace::preimage(k_map(s), iter_image(r - 1, s + 1));
}

Page UnrolledCouple::page(int r) const
{
    if (r < 1)
        throw Error(Errc::precondition_violated, "page: r >= 1 required");
    Page pg;
    pg.r = r;
    for (int s = s1_; s <= s2_; ++s)
        pg.components.emplace(s, QuotientPres(boundary_subgroup(r, s), cycle_subgroup(r, s)));

    for (int s = s1_; s <= s2_; ++s) {
        const QuotientPres& src = pg.components.at(s);
        std::size_t tgt_dim = (s + r <= s2_) ? pg.components.at(s + r).dim() : 0;
        Matrix d(field_, tgt_dim, src.dim());
        if (tgt_dim != 0 && src.dim() != 0) {
            const QuotientPres& tgt = pg.components.at(s + r);
            // j ∘ (i^{(r-1)})^{-1} ∘ k on representatives
            Matrix w = k_map(s) * src.reps();
            auto lift = iter_i(r - 1, s + r).solve(w);
            if (!lift)
                throw Error(Errc::lift_failure,
                            "page: no i-preimage for a cycle representative (corrupt couple)");
            Matrix x = j_map(s + r) * *lift;
            if (!tgt.space().contains(x))
                throw Error(Errc::lift_failure, "page: image escapes the cycle subgroup");
            d = tgt.reduce(x);
        }
        pg.d.emplace(s, std::move(d));
    }

    // d_r ∘ d_r = 0 and the next-page dimension identity
    for (int s = s1_; s <= s2_; ++s) {
        if (s + r <= s2_) {
            Matrix sq = pg.d.at(s + r) * pg.d.at(s);
            if (!sq.is_zero())
                throw std::logic_error("page: d_r ∘ d_r != 0");
        }
        std::size_t ker = pg.dim(s) - pg.d.at(s).rank();
        std::size_t im_in = (s - r >= s1_) ? pg.d.at(s - r).rank() : 0;
        QuotientPres next(boundary_subgroup(r + 1, s), cycle_subgroup(r + 1, s));
        if (ker - im_in != next.dim())
            throw std::logic_error("page: homology of d_r disagrees with the next page");
    }
    return pg;
}

ConvergenceReport UnrolledCouple::converge() const
{
    ConvergenceReport rep;
    if (a_dim(s1_) == 0) {
        rep.direction = ConvergenceReport::Direction::upper;
        // limit G = A^{s2+1}, F^s G = ker^{s2+1-s} A^{s2+1}
        std::size_t prev = 0; // dim F^{s2+1} = ker^0 = 0
        std::vector<std::size_t> dims;
        for (int s = s2_; s >= s1_; --s)
            dims.push_back(iter_kernel(s2_ + 1 - s, s2_ + 1).dim());
        for (int s = s2_; s >= s1_; --s) {
            std::size_t cur = dims[static_cast<std::size_t>(s2_ - s)];
            rep.graded_dims[s] = cur - prev;
            prev = cur;
        }
        rep.total = a_dim(s2_ + 1);
        if (prev != rep.total)
            throw std::logic_error("converge: filtration is not exhaustive");
    } else if (a_dim(s2_ + 1) == 0) {
        rep.direction = ConvergenceReport::Direction::lower;
        // limit G = A^{s1}, F^s G = im^{s-s1} A^{s1}
        std::size_t prev = 0; // dim F^{s2+1} = image from A^{s2+1} = 0
        for (int s = s2_; s >= s1_; --s) {
            std::size_t cur = iter_image(s - s1_, s1_).dim();
            rep.graded_dims[s] = cur - prev;
            prev = cur;
        }
        rep.total = a_dim(s1_);
        if (prev != rep.total)
            throw std::logic_error("converge: filtration is not exhaustive");
    } else {
        throw Error(Errc::not_convergent_case,
                    "converge: neither A^{s1} nor A^{s2+1} vanishes");
    }

    // F^s G / F^{s+1} G must match the stable page
    Page einf = page(s2_ - s1_ + 1);
    for (int s = s1_; s <= s2_; ++s)
        if (rep.graded_dims.at(s) != einf.dim(s))
            throw std::logic_error("converge: graded limit disagrees with the stable page");
    return rep;
}

namespace {

// homology presentation of a coordinate-subspace subquotient complex
struct SubHomology {
    Subspace cycles;
    Subspace boundaries;
    QuotientPres pres;
    SubHomology(const Matrix& d)
        : cycles(Subspace::span(d.kernel_basis())), boundaries(Subspace::span(d.column_echelon())),
          pres(boundaries, cycles)
    {
    }
};

Matrix submatrix(const Matrix& m, const std::vector<std::size_t>& rows,
                 const std::vector<std::size_t>& cols)
{
    Matrix r(m.field(), rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            r.at(i, j) = m.at(rows[i], cols[j]);
    return r;
}

// 0/1 matrix embedding coordinates indexed by `inner` into coordinates
// indexed by `outer`; every inner index must occur in outer.
Matrix index_embedding(Field f, const std::vector<std::size_t>& inner,
                       const std::vector<std::size_t>& outer)
{
    Matrix e(f, outer.size(), inner.size());
    for (std::size_t j = 0; j < inner.size(); ++j) {
        bool found = false;
        for (std::size_t i = 0; i < outer.size(); ++i)
            if (outer[i] == inner[j]) {
                e.at(i, j) = f.one();
                found = true;
                break;
            }
        if (!found)
            throw std::logic_error("index_embedding: inner index missing from outer");
    }
    return e;
}

} // namespace

UnrolledCouple UnrolledCouple::from_filtered(const FilteredComplex& fc)
{
    if (fc.dim() == 0)
        throw Error(Errc::shape_mismatch, "from_filtered: empty complex");
    Field f = fc.field();
    int s1 = fc.min_level(), s2 = fc.max_level();

    // homology of every filtration stage F^s (in F^s coordinates)
    std::vector<std::vector<std::size_t>> idx(static_cast<std::size_t>(s2 - s1 + 2));
    std::vector<SubHomology> astage;
    astage.reserve(static_cast<std::size_t>(s2 - s1 + 2));
    for (int s = s1; s <= s2 + 1; ++s) {
        idx[static_cast<std::size_t>(s - s1)] = fc.filtration_indices(s);
        const auto& I = idx[static_cast<std::size_t>(s - s1)];
        astage.emplace_back(submatrix(fc.differential(), I, I));
    }
    auto stage = [&](int s) -> const SubHomology& { return astage[static_cast<std::size_t>(s - s1)]; };
    auto indices = [&](int s) -> const std::vector<std::size_t>& {
        return idx[static_cast<std::size_t>(s - s1)];
    };

    // homology of every graded quotient F^s/F^{s+1} (level-s coordinates)
    std::vector<std::vector<std::size_t>> gidx(static_cast<std::size_t>(s2 - s1 + 1));
    std::vector<SubHomology> estage;
    for (int s = s1; s <= s2; ++s) {
        std::vector<std::size_t> level_s;
        for (std::size_t i = 0; i < fc.dim(); ++i)
            if (fc.level(i) == s)
                level_s.push_back(i);
        gidx[static_cast<std::size_t>(s - s1)] = level_s;
        estage.emplace_back(submatrix(fc.differential(), level_s, level_s));
    }
    auto gstage = [&](int s) -> const SubHomology& { return estage[static_cast<std::size_t>(s - s1)]; };
    auto gindices = [&](int s) -> const std::vector<std::size_t>& {
        return gidx[static_cast<std::size_t>(s - s1)];
    };

    std::vector<std::size_t> a_dims;
    a_dims.push_back(stage(s1).pres.dim()); // A^{s1-1} = A^{s1}
    for (int s = s1; s <= s2 + 1; ++s)
        a_dims.push_back(stage(s).pres.dim());
    std::vector<std::size_t> e_dims;
    for (int s = s1; s <= s2; ++s)
        e_dims.push_back(gstage(s).pres.dim());

    std::vector<Matrix> i_maps, j_maps, k_maps;
    i_maps.push_back(Matrix::identity(f, stage(s1).pres.dim())); // i(s1-1)
    for (int s = s1; s <= s2; ++s) {
        // i(s): A^{s+1} -> A^s, induced by inclusion F^{s+1} ⊆ F^s
        Matrix emb = index_embedding(f, indices(s + 1), indices(s));
        i_maps.push_back(stage(s).pres.reduce(emb * stage(s + 1).pres.reps()));

        // j(s): A^s -> E^s, induced by projection to the level-s coordinates
        Matrix proj(f, gindices(s).size(), indices(s).size());
        for (std::size_t a = 0; a < gindices(s).size(); ++a)
            for (std::size_t b = 0; b < indices(s).size(); ++b)
                if (gindices(s)[a] == indices(s)[b])
                    proj.at(a, b) = f.one();
        j_maps.push_back(gstage(s).pres.reduce(proj * stage(s).pres.reps()));

        // k(s): E^s -> A^{s+1}, the connecting map: lift a quotient cycle to
        // F^s, apply the differential, land in F^{s+1}
        Matrix lifted = index_embedding(f, gindices(s), indices(s)) * gstage(s).pres.reps();
        Matrix image = submatrix(fc.differential(), indices(s + 1), indices(s)) * lifted;
        k_maps.push_back(stage(s + 1).pres.reduce(image));
    }

    return UnrolledCouple(s1, s2, f, std::move(a_dims), std::move(e_dims), std::move(i_maps),
                          std::move(j_maps), std::move(k_maps));
}

} // namespace khicalc
