#include "khicalc/knot.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "khicalc/error.hpp"

namespace khicalc {

namespace {

long ceil_div(long a, long b)
{
    long q = a / b, r = a % b;
    return q + ((r != 0 && ((r > 0) == (b > 0))) ? 1 : 0);
}

} // namespace

AlexanderPolynomial AlexanderPolynomial::normalized(const std::map<int, long>& raw)
{
    std::map<int, long> c;
    for (const auto& [e, v] : raw)
        if (v != 0)
            c[e] = v;
    if (c.empty())
        throw Error(Errc::unit_value_violation, "normalize: zero polynomial");

    int lo = c.begin()->first, hi = c.rbegin()->first;
    if (lo + hi != 0) {
        if ((lo + hi) % 2 != 0)
            throw Error(Errc::not_symmetrizable, "normalize: support cannot be centered");
        int shift = -(lo + hi) / 2;
        std::map<int, long> shifted;
        for (const auto& [e, v] : c)
            shifted[e + shift] = v;
        c = std::move(shifted);
    }
    for (const auto& [e, v] : c)
        if (v != (c.count(-e) ? c.at(-e) : 0))
            throw Error(Errc::not_symmetrizable, "normalize: coefficients are not symmetric");

    long at_one = 0;
    for (const auto& [e, v] : c)
        at_one += v;
    if (at_one != 1 && at_one != -1)
        throw Error(Errc::unit_value_violation,
                    "normalize: value at 1 is " + std::to_string(at_one) + ", must be a unit");
    if (at_one == -1)
        for (auto& [e, v] : c)
            v = -v;

    AlexanderPolynomial p;
    p.c_ = std::move(c);
    return p;
}

long AlexanderPolynomial::coeff(int e) const
{
    auto it = c_.find(e);
    return it == c_.end() ? 0 : it->second;
}

long AlexanderPolynomial::at_one() const
{
    long v = 0;
    for (const auto& [e, a] : c_)
        v += a;
    return v;
}

long AlexanderPolynomial::at_minus_one() const
{
    long v = 0;
    for (const auto& [e, a] : c_)
        v += (e % 2 == 0 ? a : -a);
    return v;
}

int AlexanderPolynomial::degree() const { return c_.empty() ? 0 : c_.rbegin()->first; }

std::string AlexanderPolynomial::str() const
{
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        long v = it->second;
        int e = it->first;
        if (first) {
            if (v < 0)
                os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        long av = std::labs(v);
        if (av != 1 || e == 0)
            os << av;
        if (e == 1)
            os << "t";
        else if (e == -1)
            os << "t^-1";
        else if (e != 0)
            os << "t^" << e;
    }
    return os.str();
}

AlexanderPolynomial LspaceForm::polynomial() const
{
    std::map<int, long> c;
    c[0] = (k % 2 == 0) ? 1 : -1;
    for (int j = 1; j <= k; ++j) {
        int n_j = gaps[static_cast<std::size_t>(k - j)];
        long sign = ((k - j) % 2 == 0) ? 1 : -1;
        c[n_j] = sign;
        c[-n_j] = sign;
    }
    return AlexanderPolynomial::normalized(c);
}

std::optional<LspaceForm> lspace_form_check(const AlexanderPolynomial& poly, int genus)
{
    std::vector<int> pos;
    for (const auto& [e, v] : poly.coeffs())
        if (e > 0)
            pos.push_back(e);
    std::sort(pos.rbegin(), pos.rend());
    int k = static_cast<int>(pos.size());

    // alternating +-1 pattern from the top, constant term (-1)^k
    for (int j = 0; j < k; ++j) {
        long want = (j % 2 == 0) ? 1 : -1;
        if (poly.coeff(pos[static_cast<std::size_t>(j)]) != want)
            return std::nullopt;
    }
    if (poly.coeff(0) != ((k % 2 == 0) ? 1 : -1))
        return std::nullopt;
    std::size_t support = poly.coeffs().size();
    if (support != static_cast<std::size_t>(2 * k + 1))
        return std::nullopt; // stray coefficients

    if (k == 0) {
        if (genus != 0)
            return std::nullopt;
        return LspaceForm{0, {0}};
    }
    if (genus != pos[0])
        return std::nullopt;
    int second = (k >= 2) ? pos[1] : 0;
    if (pos[0] != second + 1)
        return std::nullopt;

    LspaceForm f;
    f.k = k;
    f.gaps = pos;
    f.gaps.push_back(0);
    return f;
}

DeterminantBound determinant_bound_check(const AlexanderPolynomial& poly, int genus)
{
    DeterminantBound b;
    b.det = std::labs(poly.at_minus_one());
    b.bound = 2L * genus + 1;
    b.ok = b.det <= b.bound;
    return b;
}

KhiProfile lspace_profile(const LspaceForm& form, Field field)
{
    // gradings n_k > ... > n_1 > 0 > -n_1 > ... > -n_k, one generator each
    std::vector<int> gradings;
    for (std::size_t j = 0; j + 1 < form.gaps.size(); ++j)
        gradings.push_back(form.gaps[j]);
    gradings.push_back(0);
    for (std::size_t j = form.gaps.size() - 1; j-- > 0;)
        gradings.push_back(-form.gaps[j]);

    KhiProfile p(field, form.top(), 1);
    for (std::size_t t = 0; t < gradings.size(); ++t)
        p.set_piece(gradings[t], 1, static_cast<int>(t % 2));
    Matrix unit = Matrix::identity(field, 1);
    for (std::size_t t = 1; t < gradings.size(); t += 2) {
        p.set_dplus_block(gradings[t], gradings[t - 1], unit);
        p.set_dminus_block(gradings[t], gradings[t + 1], unit);
    }
    p.validate();
    return p;
}

ThinProfile thin_profile(const AlexanderPolynomial& poly)
{
    if (poly.degree() != 1)
        throw Error(Errc::not_genus_one, "thin_profile: polynomial degree is not one");
    long a1 = poly.coeff(1);
    long a0 = poly.coeff(0);
    ThinProfile t;
    t.a = std::labs(a1);
    t.case_tag = a1 < 0 ? GenusOneCase::two_a_plus_one : GenusOneCase::two_a_minus_one;
    t.dims = {static_cast<std::size_t>(std::labs(a1)), static_cast<std::size_t>(std::labs(a0)),
              static_cast<std::size_t>(std::labs(a1))};
    t.parities = {0, 1, 0};
    return t;
}

GradingBounds grading_bounds(int y, int g)
{
    if (y < 0)
        throw Error(Errc::precondition_violated, "grading_bounds: y >= 0 required");
    GradingBounds b;
    b.y = y;
    b.g = g;
    b.i_max = static_cast<int>(ceil_div(y - 1, 2)) + g;
    b.i_min = static_cast<int>(ceil_div(1 - y, 2)) - g;
    if (b.i_max - b.i_min != 2 * g + y - 1)
        throw std::logic_error("grading_bounds: width identity fails");
    return b;
}

bool jn_consistency(int q, int q0, int g, int n)
{
    if (q < 1 || (n - 1) * q < 2 * g)
        throw Error(Errc::precondition_violated, "jn_consistency: (n-1)q >= 2g and q >= 1 required");
    GradingBounds bn = grading_bounds(n * q - q0, g);
    GradingBounds bmu = grading_bounds(q, g);
    GradingBounds bsharp = grading_bounds((2 * n - 1) * q - 2 * q0, g);
    int via_min = bsharp.i_min - bn.i_min + bn.i_max - bmu.i_max;
    int via_max = bsharp.i_max - bn.i_max + bn.i_min - bmu.i_min;
    return via_min == via_max;
}

KhiProfile synthesize_genus_one_profile(long a, GenusOneCase c, std::optional<Subcase> sub,
                                        Field field)
{
    if (a < 1)
        throw Error(Errc::invalid_case, "synthesize_genus_one_profile: a >= 1 required");
    if (c == GenusOneCase::two_a_minus_one && !sub)
        throw Error(Errc::invalid_case, "synthesize_genus_one_profile: the 2a-1 case needs a subcase");

    std::size_t side = static_cast<std::size_t>(a);
    std::size_t mid =
        static_cast<std::size_t>(c == GenusOneCase::two_a_plus_one ? 2 * a + 1 : 2 * a - 1);
    // kernel of the two middle-to-side blocks (they coincide), and the rank
    // of the side-to-middle blocks
    std::size_t middle_rank, side_rank;
    if (c == GenusOneCase::two_a_plus_one) {
        middle_rank = side;     // kernel a+1
        side_rank = side;       // injective
    } else if (*sub == Subcase::a) {
        middle_rank = side - 1; // kernel a
        side_rank = side;       // injective
    } else {
        middle_rank = side;     // kernel a-1
        side_rank = side - 1;   // one-dimensional kernel
    }

    KhiProfile p(field, 1, 1);
    p.set_piece(1, side, 0);
    p.set_piece(0, mid, 1);
    p.set_piece(-1, side, 0);

    // middle -> side: e_i -> f_i for i < middle_rank
    Matrix down(field, side, mid);
    for (std::size_t i = 0; i < middle_rank; ++i)
        down.at(i, i) = field.one();
    // side -> middle: f_i -> e_{middle_rank + i}, landing inside the shared
    // kernel, with equal images for the two sides
    Matrix up(field, mid, side);
    for (std::size_t i = 0; i < side_rank; ++i)
        up.at(middle_rank + i, i) = field.one();

    p.set_dplus_block(0, 1, down);
    p.set_dminus_block(0, -1, down);
    p.set_dplus_block(-1, 0, up);
    p.set_dminus_block(1, 0, up);
    p.validate();
    return p;
}

GenusOnePipelineReport genus_one_pipeline(long a, GenusOneCase c, std::optional<Subcase> sub)
{
    GenusOnePipelineReport rep;
    rep.a = a;
    rep.case_tag = c;
    rep.subcase = sub;
    if (c == GenusOneCase::two_a_plus_one) {
        rep.nu_sharp = 0;
        rep.dim_h_a0 = static_cast<std::size_t>(2 * a + 1);
        rep.dim_isharp_minus3 = static_cast<std::size_t>(2 * a + 3);
        rep.dim_isharp_plus3 = static_cast<std::size_t>(2 * a + 3);
        sub = std::nullopt;
        rep.subcase = std::nullopt;
    } else {
        if (!sub)
            throw Error(Errc::invalid_case, "genus_one_pipeline: the 2a-1 case needs a subcase");
        if (*sub == Subcase::a) {
            rep.nu_sharp = 1;
            rep.dim_h_a0 = static_cast<std::size_t>(2 * a + 1);
            rep.dim_isharp_minus3 = static_cast<std::size_t>(2 * a + 3);
            rep.dim_isharp_plus3 = static_cast<std::size_t>(2 * a + 1);
        } else {
            rep.nu_sharp = -1;
            rep.dim_h_a0 = static_cast<std::size_t>(2 * a - 1);
            rep.dim_isharp_minus3 = static_cast<std::size_t>(2 * a + 1);
            rep.dim_isharp_plus3 = static_cast<std::size_t>(2 * a + 3);
        }
    }

    KhiProfile p = synthesize_genus_one_profile(a, c, c == GenusOneCase::two_a_plus_one
                                                           ? std::optional<Subcase>{}
                                                           : sub);
    rep.brute_h_a0 = build_bent(p, 0).homology_dim();
    rep.brute_minus3 = large_surgery_dims(p, 3).total;
    rep.brute_plus3 = large_surgery_dims(p, -3).total;
    if (rep.brute_h_a0 != rep.dim_h_a0 || rep.brute_minus3 != rep.dim_isharp_minus3 ||
        rep.brute_plus3 != rep.dim_isharp_plus3)
        throw std::logic_error("genus_one_pipeline: closed forms disagree with synthesized matrices");
    return rep;
}

long surgery_dim(GenusOneCase c, long a, long u, long v, int nu_sharp)
{
    if (v <= 0 || u == 0 || std::gcd(std::labs(u), v) != 1)
        throw Error(Errc::bad_slope, "surgery_dim: need coprime u/v with v > 0, u != 0");
    if (c == GenusOneCase::two_a_plus_one) {
        if (a < 0)
            throw Error(Errc::invalid_case, "surgery_dim: a >= 0 required");
        return 2 * a * v + std::labs(u);
    }
    if (a < 1)
        throw Error(Errc::invalid_case, "surgery_dim: a >= 1 required for the 2a-1 case");
    if (nu_sharp == 1)
        return (2 * a - 1) * v + std::labs(u - v);
    if (nu_sharp == -1)
        return (2 * a - 1) * v + std::labs(u + v);
    throw Error(Errc::invalid_case, "surgery_dim: the 2a-1 case needs nu_sharp = +-1");
}

GradedSpace connected_sum_profile(const KhiProfile& p1, const KhiProfile& p2)
{
    GradedSpace out;
    for (const auto& [z1, q1] : p1.pieces())
        for (const auto& [z2, q2] : p2.pieces())
            out.add_piece(z1 + z2, (q1.parity + q2.parity) % 2, q1.dim * q2.dim);
    return out;
}

Su2Verdict su2_verdict(const KnotRecord& rec)
{
    Su2Verdict v;
    auto form = lspace_form_check(rec.alexander, rec.genus);
    auto det = determinant_bound_check(rec.alexander, rec.genus);
    bool obstructed = false;
    if (!form) {
        obstructed = true;
        v.reasons.push_back("alexander_not_coherent_form");
    }
    if (!det.ok) {
        obstructed = true;
        v.reasons.push_back("determinant_exceeds_bound");
    }
    if (rec.flags.composite) {
        obstructed = true;
        v.reasons.push_back("composite");
    }
    if (obstructed) {
        v.verdict = Verdict::abundant;
        return v;
    }

    bool exceptional = rec.flags.t2_torus_n.has_value() || rec.flags.pretzel_n.has_value() ||
                       (rec.flags.k3_qp && rec.flags.k3_qp->first * rec.flags.k3_qp->second > 0);
    if (exceptional) {
        v.verdict = Verdict::known_lspace_knot;
        if (rec.flags.t2_torus_n)
            v.reasons.push_back("torus_two_strand");
        if (rec.flags.pretzel_n)
            v.reasons.push_back("exceptional_pretzel");
        if (rec.flags.k3_qp && rec.flags.k3_qp->first * rec.flags.k3_qp->second > 0)
            v.reasons.push_back("twisted_torus_closure");
        return v;
    }
    switch (rec.family) {
    case Family::alternating:
        v.verdict = Verdict::abundant;
        v.reasons.push_back("alternating_not_torus");
        return v;
    case Family::montesinos:
        v.verdict = Verdict::abundant;
        v.reasons.push_back("montesinos_not_exceptional");
        return v;
    case Family::three_braid:
        v.verdict = Verdict::abundant;
        v.reasons.push_back("three_braid_not_exceptional");
        return v;
    case Family::other:
        v.verdict = Verdict::not_determined;
        v.reasons.push_back("passes_all_obstructions");
        return v;
    }
    return v;
}

const char* family_name(Family f)
{
    switch (f) {
    case Family::alternating: return "alternating";
    case Family::montesinos: return "montesinos";
    case Family::three_braid: return "three_braid_closure";
    case Family::other: return "other";
    }
    return "other";
}

std::optional<Family> family_from_name(const std::string& s)
{
    if (s == "alternating")
        return Family::alternating;
    if (s == "montesinos")
        return Family::montesinos;
    if (s == "three_braid_closure" || s == "three_braid")
        return Family::three_braid;
    if (s == "other" || s.empty())
        return Family::other;
    return std::nullopt;
}

const char* verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::abundant: return "Abundant";
    case Verdict::not_determined: return "NotDetermined";
    case Verdict::known_lspace_knot: return "KnownLspaceKnot";
    }
    return "NotDetermined";
}

} // namespace khicalc
