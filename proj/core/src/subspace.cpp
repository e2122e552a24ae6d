#include "khicalc/subspace.hpp"

#include "khicalc/error.hpp"

namespace khicalc {

Subspace Subspace::zero(Field f, std::size_t ambient)
{
    return Subspace(ambient, Matrix(f, ambient, 0));
}

Subspace Subspace::full(Field f, std::size_t ambient)
{
    return Subspace(ambient, Matrix::identity(f, ambient));
}

Subspace Subspace::span(const Matrix& columns)
{
    return Subspace(columns.rows(), columns.column_echelon());
}

bool Subspace::contains(const Matrix& vectors) const
{
    if (vectors.rows() != ambient_)
        throw Error(Errc::dimension_mismatch, "Subspace::contains: ambient dimension disagrees");
    return basis_.solve(vectors).has_value();
}

bool Subspace::contains(const Subspace& other) const
{
    if (other.ambient_ != ambient_)
        throw Error(Errc::dimension_mismatch, "Subspace::contains: ambient dimension disagrees");
    return contains(other.basis_);
}

bool Subspace::operator==(const Subspace& o) const
{
    return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace Subspace::sum(const Subspace& o) const
{
    return span(basis_.hcat(o.basis_));
}

Subspace Subspace::intersect(const Subspace& o) const
{
    // kernel of [B | -C]: pairs (x, y) with Bx = Cy
    Matrix k = basis_.hcat(-o.basis_).kernel_basis();
    return span(basis_ * k.top_rows(basis_.cols()));
}

Subspace Subspace::orthogonal_complement_in(const Subspace& within) const
{
    if (!within.contains(*this))
        throw Error(Errc::not_contained, "orthogonal_complement: subspace not contained in ambient one");
    // w = within.basis * c with basis^T w = 0
    Matrix gram = basis_.transpose() * within.basis_;
    Subspace result = span(within.basis_ * gram.kernel_basis());
    if (result.dim() + dim() != within.dim() || !(result.intersect(*this) == zero(field(), ambient_)))
        throw Error(Errc::degenerate_pairing,
                    "orthogonal_complement: dot product degenerate on this subspace");
    return result;
}

Subspace Subspace::complement_in(const Subspace& within) const
{
    if (field().is_rational())
        return orthogonal_complement_in(within);
    if (!within.contains(*this))
        throw Error(Errc::not_contained, "complement_in: subspace not contained in ambient one");
    // greedy echelon extension, deterministic over any field
    Matrix acc = basis_;
    std::vector<std::size_t> chosen;
    for (std::size_t j = 0; j < within.dim(); ++j) {
        Matrix cand = acc.hcat(within.basis_.columns({j}));
        if (cand.rank() > acc.cols()) {
            acc = cand;
            chosen.push_back(j);
        }
    }
    return span(within.basis_.columns(chosen));
}

Subspace Subspace::preimage(const Matrix& m, const Subspace& target)
{
    if (target.ambient() != m.rows())
        throw Error(Errc::dimension_mismatch, "preimage: target ambient dimension disagrees with rows");
    // kernel of [m | -T]: pairs (v, c) with m v = T c
    Matrix k = m.hcat(-target.basis()).kernel_basis();
    return span(k.top_rows(m.cols()));
}

Matrix Subspace::coords(const Matrix& vectors) const
{
    auto x = basis_.solve(vectors);
    if (!x)
        throw std::logic_error("Subspace::coords: vector not contained");
    return *x;
}

QuotientPres::QuotientPres(const Subspace& sub, const Subspace& space)
    : sub_(sub), space_(space), reps_(sub.complement_in(space).basis())
{
}

Matrix QuotientPres::reduce(const Matrix& vectors) const
{
    // write v = reps * a + sub * b, return a
    auto x = reps_.hcat(sub_.basis()).solve(vectors);
    if (!x)
        throw std::logic_error("QuotientPres::reduce: vector not in the presented space");
    return x->top_rows(reps_.cols());
}

} // namespace khicalc
