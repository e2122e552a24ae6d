#include "khicalc/octahedral.hpp"

#include "khicalc/error.hpp"

namespace khicalc {

namespace {

bool is_chain_map(const Matrix& m, const Matrix& d_src, const Matrix& d_tgt)
{
    return m * d_src == d_tgt * m;
}

} // namespace

OctahedralData build_octahedron(const Matrix& f, const Matrix& g)
{
    if (g.cols() != f.rows())
        throw Error(Errc::shape_mismatch, "build_octahedron: target(f) != source(g)");
    Field k = f.field();
    std::size_t nx = f.cols(), ny = f.rows(), nz = g.rows();
    Matrix gf = g * f;

    OctahedralData o{f, g,
                     Matrix(k, ny + nx, ny + nx), Matrix(k, nz + nx, nz + nx),
                     Matrix(k, nz + ny, nz + ny), Matrix(k, nz + nx + ny + nx, nz + nx + ny + nx),
                     Matrix(k, nz + nx, ny + nx), Matrix(k, nz + ny, nz + nx),
                     Matrix(k, nz + nx + ny + nx, nz + ny), Matrix(k, nz + ny, nz + nx + ny + nx),
                     Matrix(k, ny + nx, nz + ny), Matrix(k, nz + nx + ny + nx, nz + nx + ny + nx)};

    o.d_cone_f.set_block(0, ny, f);
    o.d_cone_gf.set_block(0, nz, gf);
    o.d_cone_g.set_block(0, nz, g);
    // d(z, x, y, x') = (gf x + g y, x', -f x', 0)
    o.d_cone_psi.set_block(0, nz, gf);
    o.d_cone_psi.set_block(0, nz + nx, g);
    o.d_cone_psi.set_block(nz, nz + nx + ny, Matrix::identity(k, nx));
    o.d_cone_psi.set_block(nz + nx, nz + nx + ny, -f);

    o.psi.set_block(0, 0, g);
    o.psi.set_block(nz, ny, Matrix::identity(k, nx));

    o.phi.set_block(0, 0, Matrix::identity(k, nz));
    o.phi.set_block(nz, nz, f);

    o.eta.set_block(0, 0, Matrix::identity(k, nz));
    o.eta.set_block(nz + nx, nz, Matrix::identity(k, ny));

    o.zeta.set_block(0, 0, Matrix::identity(k, nz));
    o.zeta.set_block(nz, nz, f);
    o.zeta.set_block(nz, nz + nx, Matrix::identity(k, ny));

    o.delta.set_block(0, nz, Matrix::identity(k, ny));

    // homotopy D(z, x, y, x') = (0, 0, 0, -x)
    o.homotopy.set_block(nz + nx + ny, nz, -Matrix::identity(k, nx));

    if (!is_chain_map(o.psi, o.d_cone_f, o.d_cone_gf))
        throw std::logic_error("build_octahedron: psi is not a chain map");
    if (!is_chain_map(o.phi, o.d_cone_gf, o.d_cone_g))
        throw std::logic_error("build_octahedron: phi is not a chain map");
    if (!is_chain_map(o.eta, o.d_cone_g, o.d_cone_psi))
        throw std::logic_error("build_octahedron: eta is not a chain map");
    if (!is_chain_map(o.zeta, o.d_cone_psi, o.d_cone_g))
        throw std::logic_error("build_octahedron: zeta is not a chain map");
    if (!(o.zeta * o.eta == Matrix::identity(k, nz + ny)))
        throw std::logic_error("build_octahedron: zeta ∘ eta != id");
    Matrix lhs = o.eta * o.zeta - Matrix::identity(k, nz + nx + ny + nx);
    Matrix rhs = o.d_cone_psi * o.homotopy + o.homotopy * o.d_cone_psi;
    if (!(lhs == rhs))
        throw std::logic_error("build_octahedron: homotopy equation fails");
    return o;
}

OctahedralData build_octahedron(const GradedMap& f, const GradedMap& g)
{
    if (!(f.target() == g.source()))
        throw Error(Errc::shape_mismatch, "build_octahedron: target(f) != source(g)");
    return build_octahedron(f.total(), g.total());
}

namespace {

struct HomPres {
    QuotientPres pres;
    explicit HomPres(const Matrix& d)
        : pres(Subspace::span(d.column_echelon()), Subspace::span(d.kernel_basis()))
    {
    }
    // matrix of the induced map on homology
    Matrix induced(const Matrix& chain_map, const HomPres& target) const
    {
        return target.pres.reduce(chain_map * pres.reps());
    }
};

} // namespace

bool fourth_sequence_exactness(const OctahedralData& o)
{
    HomPres hf(o.d_cone_f), hgf(o.d_cone_gf), hg(o.d_cone_g);
    Matrix psi_h = hf.induced(o.psi, hgf);
    Matrix phi_h = hgf.induced(o.phi, hg);
    Matrix delta_h = hg.induced(o.delta, hf);

    auto exact_at = [](const Matrix& in, const Matrix& out) {
        return Subspace::span(in.column_echelon()) == Subspace::span(out.kernel_basis());
    };
    return exact_at(psi_h, phi_h) && exact_at(phi_h, delta_h) && exact_at(delta_h, psi_h);
}

} // namespace khicalc
