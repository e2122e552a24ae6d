#include "khicalc/bent.hpp"

#include <algorithm>
#include <cstdlib>

#include "khicalc/error.hpp"

namespace khicalc {

namespace {

long ceil_div(long a, long b)
{
    long q = a / b, r = a % b;
    return q + ((r != 0 && ((r > 0) == (b > 0))) ? 1 : 0);
}

bool same_class(int a, int b, std::uint32_t q)
{
    long diff = static_cast<long>(a) - b;
    return ((diff % static_cast<long>(q)) + q) % q == 0;
}

} // namespace

KhiProfile::KhiProfile(Field field, int genus, std::uint32_t q)
    : field_(field), genus_(genus), q_(q)
{
    if (q_ == 0)
        throw Error(Errc::invalid_profile, "KhiProfile: meridian class q must be positive");
    if (genus_ < 0)
        throw Error(Errc::invalid_profile, "KhiProfile: negative genus");
}

void KhiProfile::set_piece(int z, std::size_t dim, int parity, std::vector<std::string> labels)
{
    if (parity != 0 && parity != 1)
        throw Error(Errc::invalid_profile, "KhiProfile: parity must be 0 or 1");
    if (dim == 0) {
        pieces_.erase(z);
        return;
    }
    pieces_[z] = Piece{dim, parity, std::move(labels)};
}

void KhiProfile::set_dplus_block(int from_z, int to_z, Matrix block)
{
    if (to_z <= from_z)
        throw Error(Errc::invalid_profile, "KhiProfile: d_plus must raise the grading");
    dplus_.insert_or_assign({from_z, to_z}, std::move(block));
}

void KhiProfile::set_dminus_block(int from_z, int to_z, Matrix block)
{
    if (to_z >= from_z)
        throw Error(Errc::invalid_profile, "KhiProfile: d_minus must lower the grading");
    dminus_.insert_or_assign({from_z, to_z}, std::move(block));
}

void KhiProfile::validate() const
{
    long bound = ceil_div(static_cast<long>(q_) - 1, 2) + genus_;
    for (const auto& [z, p] : pieces_)
        if (std::abs(z) > bound)
            throw Error(Errc::invalid_profile,
                        "KhiProfile: grading " + std::to_string(z) + " outside the allowed band");
    for (const auto* blocks : {&dplus_, &dminus_})
        for (const auto& [ft, m] : *blocks) {
            auto [from, to] = ft;
            if (!pieces_.count(from) || !pieces_.count(to)) {
                if (m.is_zero())
                    continue;
                throw Error(Errc::invalid_profile, "KhiProfile: block on a missing piece");
            }
            if (m.rows() != dim_at(to) || m.cols() != dim_at(from))
                throw Error(Errc::invalid_profile, "KhiProfile: block shape disagrees with pieces");
            if (!m.is_zero() && parity_at(to) == parity_at(from))
                throw Error(Errc::invalid_profile, "KhiProfile: differential block preserves parity");
            if (!same_class(from, to, q_))
                throw Error(Errc::invalid_profile, "KhiProfile: block leaves its residue class");
        }
    Matrix dp = dplus_total(), dm = dminus_total();
    if (!(dp * dp).is_zero())
        throw Error(Errc::invalid_profile, "KhiProfile: d_plus does not square to zero");
    if (!(dm * dm).is_zero())
        throw Error(Errc::invalid_profile, "KhiProfile: d_minus does not square to zero");
}

std::size_t KhiProfile::dim_at(int z) const
{
    auto it = pieces_.find(z);
    return it == pieces_.end() ? 0 : it->second.dim;
}

int KhiProfile::parity_at(int z) const
{
    auto it = pieces_.find(z);
    if (it == pieces_.end())
        throw std::logic_error("KhiProfile::parity_at: no piece at grading " + std::to_string(z));
    return it->second.parity;
}

std::size_t KhiProfile::total_dim() const
{
    std::size_t n = 0;
    for (const auto& [z, p] : pieces_)
        n += p.dim;
    return n;
}

int KhiProfile::top_z() const
{
    if (pieces_.empty())
        throw std::logic_error("KhiProfile::top_z: empty profile");
    return pieces_.rbegin()->first;
}

int KhiProfile::bottom_z() const
{
    if (pieces_.empty())
        throw std::logic_error("KhiProfile::bottom_z: empty profile");
    return pieces_.begin()->first;
}

Matrix KhiProfile::flatten(const std::map<std::pair<int, int>, Matrix>& blocks) const
{
    std::map<int, std::size_t> off;
    std::size_t total = 0;
    for (const auto& [z, p] : pieces_) {
        off[z] = total;
        total += p.dim;
    }
    Matrix m(field_, total, total);
    for (const auto& [ft, b] : blocks) {
        auto [from, to] = ft;
        if (b.is_zero())
            continue;
        m.set_block(off.at(to), off.at(from), b);
    }
    return m;
}

Matrix KhiProfile::dplus_total() const { return flatten(dplus_); }
Matrix KhiProfile::dminus_total() const { return flatten(dminus_); }

GradedSpace KhiProfile::graded_space() const
{
    GradedSpace g;
    for (const auto& [z, p] : pieces_)
        g.add_piece(z, p.parity, p.dim, p.labels);
    return g;
}

KhiProfile KhiProfile::mirror() const
{
    KhiProfile m(field_, genus_, q_);
    for (const auto& [z, p] : pieces_)
        m.set_piece(-z, p.dim, p.parity, p.labels);
    for (const auto& [ft, b] : dplus_)
        m.set_dplus_block(-ft.second, -ft.first, b.transpose());
    for (const auto& [ft, b] : dminus_)
        m.set_dminus_block(-ft.second, -ft.first, b.transpose());
    return m;
}

namespace {

BentComplex assemble(const KhiProfile& p, int s, BentVariant variant)
{
    p.validate();
    std::vector<int> gradings;
    std::vector<std::size_t> dims, offsets;
    std::size_t total = 0;
    std::map<int, std::size_t> off;
    for (const auto& [z, piece] : p.pieces())
        if (same_class(z, s, p.q())) {
            gradings.push_back(z);
            dims.push_back(piece.dim);
            offsets.push_back(total);
            off[z] = total;
            total += piece.dim;
        }
    Matrix d(p.field(), total, total);

    auto include = [&](const std::map<std::pair<int, int>, Matrix>& blocks, auto&& keep) {
        for (const auto& [ft, b] : blocks) {
            auto [from, to] = ft;
            if (!off.count(from) || !off.count(to) || b.is_zero())
                continue;
            if (keep(from, to))
                d.set_block(off.at(to), off.at(from), b);
        }
    };
    switch (variant) {
    case BentVariant::bent:
        include(p.dplus_blocks(), [&](int from, int) { return from >= s; });
        include(p.dminus_blocks(), [&](int from, int) { return from <= s; });
        break;
    case BentVariant::dual_bent:
        include(p.dplus_blocks(), [&](int, int to) { return to <= s; });
        include(p.dminus_blocks(), [&](int, int to) { return to >= s; });
        break;
    case BentVariant::half_plus:
        include(p.dplus_blocks(), [](int, int) { return true; });
        break;
    case BentVariant::half_minus:
        include(p.dminus_blocks(), [](int, int) { return true; });
        break;
    }
    if (!(d * d).is_zero())
        throw Error(Errc::invalid_profile, "bent complex differential does not square to zero");
    return BentComplex{s, variant, std::move(gradings), std::move(dims), std::move(offsets),
                       std::move(d)};
}

} // namespace

std::size_t BentComplex::total_dim() const
{
    std::size_t n = 0;
    for (std::size_t d : dims)
        n += d;
    return n;
}

BentComplex build_bent(const KhiProfile& p, int s) { return assemble(p, s, BentVariant::bent); }

BentComplex build_dual_bent(const KhiProfile& p, int s)
{
    return assemble(p, s, BentVariant::dual_bent);
}

BentComplex build_half(const KhiProfile& p, int s, int sign)
{
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("build_half: sign must be +1 or -1");
    return assemble(p, s, sign > 0 ? BentVariant::half_plus : BentVariant::half_minus);
}

GradedMap projection(const KhiProfile& p, int s, int sign)
{
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("projection: sign must be +1 or -1");
    GradedSpace cls;
    for (const auto& [z, piece] : p.pieces())
        if (same_class(z, s, p.q()))
            cls.add_piece(z, piece.parity, piece.dim, piece.labels);
    GradedMap pr(cls, cls, 0, 0, p.field());
    for (const auto& [z, piece] : p.pieces()) {
        if (!same_class(z, s, p.q()))
            continue;
        bool keep = sign > 0 ? z >= s : z <= s;
        if (keep)
            pr.set_block({z, piece.parity}, Matrix::identity(p.field(), piece.dim));
    }
    return pr;
}

SurgeryDimReport large_surgery_dims(const KhiProfile& p, long n)
{
    p.validate();
    if (p.q() != 1)
        throw Error(Errc::not_large_surgery,
                    "large_surgery_dims: only meridian class q = 1 is supported");
    long g = p.genus();
    if (n == 0 || std::labs(n) < 2 * g + 1)
        throw Error(Errc::not_large_surgery, "large_surgery_dims: |n| >= 2g+1 required");

    SurgeryDimReport rep;
    rep.n = n;
    long absn = std::labs(n);
    rep.s_min = static_cast<int>(-absn + 1 + g);
    rep.s_max = static_cast<int>(absn - 1 - g);
    rep.class_dims.assign(static_cast<std::size_t>(absn), 0);
    std::vector<bool> seen(static_cast<std::size_t>(absn), false);

    for (long s = rep.s_min; s <= rep.s_max; ++s) {
        BentComplex bc = n > 0 ? build_bent(p, static_cast<int>(-s))
                               : build_dual_bent(p, static_cast<int>(-s));
        std::size_t dim = bc.homology_dim();
        std::size_t cls = static_cast<std::size_t>((s - rep.s_min) % absn);
        if (!seen[cls]) {
            seen[cls] = true;
            rep.class_dims[cls] = dim;
        } else if (rep.class_dims[cls] != dim) {
            throw Error(Errc::class_inconsistency,
                        "large_surgery_dims: redundant s values disagree in class " +
                            std::to_string(cls));
        }
    }
    for (std::size_t c = 0; c < rep.class_dims.size(); ++c)
        rep.total += rep.class_dims[c];
    return rep;
}

namespace {

// class members with nonzero dimension, strictly decreasing grading
std::vector<int> class_gradings_desc(const KhiProfile& p, int s_class)
{
    std::vector<int> g;
    for (const auto& [z, piece] : p.pieces())
        if (same_class(z, s_class, p.q()))
            g.push_back(z);
    std::sort(g.rbegin(), g.rend());
    return g;
}

bool chain_pattern(const KhiProfile& p, int s_class, bool positive)
{
    p.validate();
    std::vector<int> g = class_gradings_desc(p, s_class);
    std::size_t m = g.size();
    if (m == 0 || m % 2 == 0)
        return false;
    for (int z : g)
        if (p.dim_at(z) != 1)
            return false;

    // required unit entries: for a positive chain y_i = g[2i-1] (odd slots)
    // maps up to x_i and down to x_{i+1}; a negative chain sends the x's
    // (even slots) to the neighboring y's
    auto required = [&](bool plus, std::size_t slot) -> std::pair<int, int> {
        int from = g[slot];
        int to = plus ? g[slot - 1] : g[slot + 1];
        return {from, to};
    };
    std::map<std::pair<int, int>, bool> need_plus, need_minus;
    if (positive) {
        for (std::size_t slot = 1; slot < m; slot += 2) {
            need_plus[required(true, slot)] = true;
            need_minus[required(false, slot)] = true;
        }
    } else {
        for (std::size_t slot = 0; slot < m; slot += 2) {
            if (slot + 1 < m)
                need_minus[{g[slot], g[slot + 1]}] = true;
            if (slot >= 1)
                need_plus[{g[slot], g[slot - 1]}] = true;
        }
    }

    auto check = [&](const std::map<std::pair<int, int>, Matrix>& blocks,
                     const std::map<std::pair<int, int>, bool>& need) {
        for (const auto& [ft, want] : need) {
            auto it = blocks.find(ft);
            if (it == blocks.end() || it->second.is_zero())
                return false; // a required unit entry is missing
        }
        for (const auto& [ft, b] : blocks) {
            if (b.is_zero())
                continue;
            if (!same_class(ft.first, s_class, p.q()))
                continue; // other classes are not constrained here
            if (!need.count(ft))
                return false; // a forbidden block is present
        }
        return true;
    };
    return check(p.dplus_blocks(), need_plus) && check(p.dminus_blocks(), need_minus);
}

} // namespace

bool is_positive_chain(const KhiProfile& p, int s_class) { return chain_pattern(p, s_class, true); }

bool is_negative_chain(const KhiProfile& p, int s_class) { return chain_pattern(p, s_class, false); }

bool floer_simple_check(const KhiProfile& p)
{
    p.validate();
    bool chains = true, dims = true;
    for (std::uint32_t c = 0; c < p.q(); ++c) {
        int s_class = static_cast<int>(c);
        chains = chains && is_positive_chain(p, s_class) && is_negative_chain(p, s_class);
        std::size_t class_dim = 0;
        for (const auto& [z, piece] : p.pieces())
            if (same_class(z, s_class, p.q()))
                class_dim += piece.dim;
        dims = dims && class_dim == 1;
    }
    if (chains != dims)
        throw std::logic_error("floer_simple_check: chain and dimension characterizations disagree");
    return chains;
}

DualityReport duality_check(const KhiProfile& p)
{
    p.validate();
    DualityReport rep;
    KhiProfile m = p.mirror();
    int lo = p.pieces().empty() ? 0 : p.bottom_z() - 1;
    int hi = p.pieces().empty() ? 0 : p.top_z() + 1;
    for (int s = lo; s <= hi; ++s) {
        std::size_t dual = build_dual_bent(p, s).homology_dim();
        std::size_t mir = build_bent(m, -s).homology_dim();
        bool eq = dual == mir;
        rep.rows.push_back({s, dual, mir, eq});
        rep.all_equal = rep.all_equal && eq;
    }
    return rep;
}

} // namespace khicalc
