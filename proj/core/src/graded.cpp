#include "khicalc/graded.hpp"

#include <algorithm>
#include <stdexcept>

#include "khicalc/error.hpp"

namespace khicalc {

void GradedSpace::add_piece(int z, int parity, std::size_t dim, std::vector<std::string> labels)
{
    if (parity != 0 && parity != 1)
        throw std::invalid_argument("GradedSpace: parity must be 0 or 1");
    if (dim == 0)
        return;
    Piece& p = pieces_[{z, parity}];
    if (!labels.empty() && labels.size() != dim)
        throw std::invalid_argument("GradedSpace: label count disagrees with dimension");
    p.dim += dim;
    for (auto& l : labels)
        p.labels.push_back(std::move(l));
}

std::size_t GradedSpace::total_dim() const
{
    std::size_t n = 0;
    for (const auto& [k, p] : pieces_)
        n += p.dim;
    return n;
}

std::size_t GradedSpace::piece_dim(int z, int parity) const
{
    auto it = pieces_.find({z, parity});
    return it == pieces_.end() ? 0 : it->second.dim;
}

std::size_t GradedSpace::dim_at_z(int z) const
{
    return piece_dim(z, 0) + piece_dim(z, 1);
}

bool GradedSpace::operator==(const GradedSpace& o) const
{
    if (pieces_.size() != o.pieces_.size())
        return false;
    auto it = o.pieces_.begin();
    for (const auto& [k, p] : pieces_) {
        if (it->first != k || it->second.dim != p.dim)
            return false;
        ++it;
    }
    return true;
}

std::size_t GradedSpace::offset(PieceKey key) const
{
    std::size_t off = 0;
    for (const auto& [k, p] : pieces_) {
        if (k == key)
            return off;
        off += p.dim;
    }
    throw std::logic_error("GradedSpace::offset: no such piece");
}

std::vector<std::pair<PieceKey, std::size_t>> GradedSpace::flat_layout() const
{
    std::vector<std::pair<PieceKey, std::size_t>> out;
    for (const auto& [k, p] : pieces_)
        out.emplace_back(k, p.dim);
    return out;
}

GradedSpace GradedSpace::shifted(int j) const
{
    GradedSpace s;
    for (const auto& [k, p] : pieces_)
        s.add_piece(k.z + j, k.parity, p.dim, p.labels);
    return s;
}

GradedSpace GradedSpace::parity_flipped() const
{
    GradedSpace s;
    for (const auto& [k, p] : pieces_)
        s.add_piece(k.z, 1 - k.parity, p.dim, p.labels);
    return s;
}

int GradedSpace::min_z() const
{
    if (pieces_.empty())
        throw std::logic_error("GradedSpace::min_z: empty space");
    return pieces_.begin()->first.z;
}

int GradedSpace::max_z() const
{
    if (pieces_.empty())
        throw std::logic_error("GradedSpace::max_z: empty space");
    return pieces_.rbegin()->first.z;
}

GradedSpace shift(const GradedSpace& s, int j) { return s.shifted(j); }

GradedMap::GradedMap(GradedSpace source, GradedSpace target, int z_shift, int parity_shift,
                     Field field)
    : source_(std::move(source)), target_(std::move(target)), z_shift_(z_shift),
      parity_shift_(parity_shift & 1), field_(field)
{
}

void GradedMap::set_block(PieceKey from, Matrix block)
{
    std::size_t sdim = source_.piece_dim(from.z, from.parity);
    if (sdim == 0)
        throw Error(Errc::shape_mismatch, "GradedMap::set_block: source piece absent");
    PieceKey to{from.z + z_shift_, (from.parity + parity_shift_) & 1};
    std::size_t tdim = target_.piece_dim(to.z, to.parity);
    if (block.cols() != sdim)
        throw Error(Errc::shape_mismatch, "GradedMap::set_block: column count disagrees");
    if (tdim == 0) {
        if (!block.is_zero())
            throw Error(Errc::shape_mismatch, "GradedMap::set_block: target piece absent");
        return; // zero into the zero piece
    }
    if (block.rows() != tdim)
        throw Error(Errc::shape_mismatch, "GradedMap::set_block: row count disagrees");
    blocks_.insert_or_assign(from, std::move(block));
}

Matrix GradedMap::block(PieceKey from) const
{
    auto it = blocks_.find(from);
    if (it != blocks_.end())
        return it->second;
    PieceKey to{from.z + z_shift_, (from.parity + parity_shift_) & 1};
    return Matrix(field_, target_.piece_dim(to.z, to.parity), source_.piece_dim(from.z, from.parity));
}

Matrix GradedMap::total() const
{
    Matrix m(field_, target_.total_dim(), source_.total_dim());
    for (const auto& [from, b] : blocks_) {
        PieceKey to{from.z + z_shift_, (from.parity + parity_shift_) & 1};
        m.set_block(target_.offset(to), source_.offset(from), b);
    }
    return m;
}

bool verify_square_zero(const MapSum& d)
{
    Matrix m = total_matrix(d);
    return (m * m).is_zero();
}

Matrix total_matrix(const MapSum& d)
{
    if (d.empty())
        throw std::invalid_argument("total_matrix: empty sum");
    const GradedSpace& space = d.front().source();
    for (const auto& f : d)
        if (!(f.source() == space) || !(f.target() == space))
            throw Error(Errc::shape_mismatch, "total_matrix: summands must share one endomorphism space");
    Matrix m = d.front().total();
    for (std::size_t i = 1; i < d.size(); ++i)
        m = m + d[i].total();
    return m;
}

Complex::Complex(GradedSpace space, const MapSum& differential)
    : space_(std::move(space)), d_(total_matrix(differential))
{
    if (!(d_ * d_).is_zero())
        throw std::invalid_argument("Complex: differential does not square to zero");
    detect_shifts();
}

Complex::Complex(GradedSpace space, Matrix flat)
    : space_(std::move(space)), d_(std::move(flat))
{
    if (d_.rows() != space_.total_dim() || d_.cols() != space_.total_dim())
        throw Error(Errc::shape_mismatch, "Complex: flat differential shape disagrees with space");
    if (!(d_ * d_).is_zero())
        throw std::invalid_argument("Complex: differential does not square to zero");
    detect_shifts();
}

void Complex::detect_shifts()
{
    auto layout = space_.flat_layout();
    std::size_t roff = 0;
    for (const auto& [tk, tdim] : layout) {
        std::size_t coff = 0;
        for (const auto& [sk, sdim] : layout) {
            bool nonzero = false;
            for (std::size_t i = 0; i < tdim && !nonzero; ++i)
                for (std::size_t j = 0; j < sdim && !nonzero; ++j)
                    nonzero = !d_.at(roff + i, coff + j).is_zero();
            if (nonzero) {
                std::pair<int, int> sh{tk.z - sk.z, (tk.parity - sk.parity) & 1};
                if (std::find(shifts_.begin(), shifts_.end(), sh) == shifts_.end())
                    shifts_.push_back(sh);
            }
            coff += sdim;
        }
        roff += tdim;
    }
}

Complex::Homology Complex::homology() const
{
    Homology h;
    std::size_t n = space_.total_dim();
    std::size_t r = d_.rank();
    h.total = n - 2 * r;

    if (shifts_.size() <= 1) {
        // homogeneous differential: refine per piece
        GradedSpace g;
        auto layout = space_.flat_layout();
        int dz = shifts_.empty() ? 0 : shifts_[0].first;
        int dp = shifts_.empty() ? 0 : shifts_[0].second;
        for (const auto& [k, dim] : layout) {
            if (dz == 0 && dp == 0) {
                Matrix b = d_.block(space_.offset(k), space_.offset(k), dim, dim);
                g.add_piece(k.z, k.parity, dim - 2 * b.rank());
                continue;
            }
            // block leaving this piece and block entering it
            PieceKey to{k.z + dz, (k.parity + dp) & 1};
            PieceKey from{k.z - dz, (k.parity - dp) & 1};
            std::size_t out_rank = 0, in_rank = 0;
            if (space_.piece_dim(to.z, to.parity) > 0) {
                Matrix b = d_.block(space_.offset(to), space_.offset(k),
                                    space_.piece_dim(to.z, to.parity), dim);
                out_rank = b.rank();
            }
            if (space_.piece_dim(from.z, from.parity) > 0) {
                Matrix b = d_.block(space_.offset(k), space_.offset(from), dim,
                                    space_.piece_dim(from.z, from.parity));
                in_rank = b.rank();
            }
            g.add_piece(k.z, k.parity, dim - out_rank - in_rank);
        }
        h.graded = g;
    }

    bool flips = !shifts_.empty();
    for (auto& s : shifts_)
        flips = flips && s.second == 1;
    if (flips) {
        // 2-periodic even/odd complex
        std::vector<std::size_t> even_idx, odd_idx;
        std::size_t off = 0;
        for (const auto& [k, dim] : space_.flat_layout()) {
            for (std::size_t i = 0; i < dim; ++i)
                (k.parity == 0 ? even_idx : odd_idx).push_back(off + i);
            off += dim;
        }
        auto sub = [&](const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
            Matrix m(d_.field(), rows.size(), cols.size());
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t j = 0; j < cols.size(); ++j)
                    m.at(i, j) = d_.at(rows[i], cols[j]);
            return m;
        };
        std::size_t r_eo = sub(odd_idx, even_idx).rank();  // d: even -> odd
        std::size_t r_oe = sub(even_idx, odd_idx).rank();  // d: odd -> even
        h.parity_split = std::make_pair(even_idx.size() - r_eo - r_oe,
                                        odd_idx.size() - r_oe - r_eo);
    }
    return h;
}

namespace {

// 0/1 embedding of `inner`'s flat coordinates into `outer`'s, where every
// piece of `inner` is a sub-block of the matching piece of `outer` placed at
// the given per-piece offsets.
Matrix piece_embedding(const GradedSpace& inner, const GradedSpace& outer,
                       const std::map<PieceKey, std::size_t>& piece_offsets, Field f)
{
    Matrix e(f, outer.total_dim(), inner.total_dim());
    for (const auto& [k, p] : inner.pieces()) {
        std::size_t shift = piece_offsets.count(k) ? piece_offsets.at(k) : 0;
        std::size_t src = inner.offset(k);
        std::size_t dst = outer.offset(k) + shift;
        for (std::size_t i = 0; i < p.dim; ++i)
            e.at(dst + i, src + i) = f.one();
    }
    return e;
}

} // namespace

Complex mapping_cone(const Complex& source, const Complex& target, const GradedMap& f)
{
    if (!(f.source() == source.space()) || !(f.target() == target.space()))
        throw Error(Errc::shape_mismatch, "mapping_cone: map endpoints disagree with complexes");
    Matrix ft = f.total();
    if (!(ft * source.differential() == target.differential() * ft))
        throw Error(Errc::not_chain_map, "mapping_cone: map does not commute with differentials");

    Field k = f.field();
    GradedSpace shifted_src = source.space().parity_flipped();
    GradedSpace cone = target.space();
    // remember where the target pieces end inside each merged cone piece
    std::map<PieceKey, std::size_t> src_piece_offsets;
    for (const auto& [key, p] : shifted_src.pieces()) {
        src_piece_offsets[key] = cone.piece_dim(key.z, key.parity);
        cone.add_piece(key.z, key.parity, p.dim, p.labels);
    }

    Matrix emb_t = piece_embedding(target.space(), cone, {}, k);
    Matrix emb_s = piece_embedding(shifted_src, cone, src_piece_offsets, k);
    // flat coordinates of source and its parity flip agree piecewise but the
    // flattened PIECE ORDER can differ; convert via per-piece identity
    Matrix flip = Matrix(k, shifted_src.total_dim(), source.space().total_dim());
    for (const auto& [key, p] : source.space().pieces()) {
        PieceKey fk{key.z, 1 - key.parity};
        std::size_t src_off = source.space().offset(key);
        std::size_t dst_off = shifted_src.offset(fk);
        for (std::size_t i = 0; i < p.dim; ++i)
            flip.at(dst_off + i, src_off + i) = k.one();
    }

    Matrix pt = emb_t.transpose();
    Matrix ps = emb_s.transpose();
    Matrix d = emb_t * target.differential() * pt
             + emb_t * ft * flip.transpose() * ps
             + emb_s * flip * (-source.differential()) * flip.transpose() * ps;
    return Complex(std::move(cone), std::move(d));
}

Complex mapping_cone(const GradedMap& f)
{
    Field k = f.field();
    Complex src(f.source(), Matrix(k, f.source().total_dim(), f.source().total_dim()));
    Complex tgt(f.target(), Matrix(k, f.target().total_dim(), f.target().total_dim()));
    return mapping_cone(src, tgt, f);
}

bool equal_up_to_unit(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (!b.at(i, j).is_zero()) {
                if (a.at(i, j).is_zero())
                    return false;
                Scalar unit = a.at(i, j) / b.at(i, j);
                return a == b.scaled(unit);
            }
    return a.is_zero();
}

} // namespace khicalc
