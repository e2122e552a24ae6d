#include "khicalc/field.hpp"

#include <stdexcept>

#include "khicalc/error.hpp"

namespace khicalc {

namespace {

bool is_prime_u32(std::uint32_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::uint64_t fp_inverse(std::uint64_t a, std::uint32_t p)
{
    // extended Euclid on (a, p)
    std::int64_t t = 0, newt = 1;
    std::int64_t r = p, newr = static_cast<std::int64_t>(a % p);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1)
        throw std::domain_error("fp_inverse: element not invertible");
    if (t < 0)
        t += p;
    return static_cast<std::uint64_t>(t);
}

} // namespace

Field Field::prime(std::uint32_t p)
{
    if (!is_prime_u32(p))
        throw std::invalid_argument("Field::prime: modulus " + std::to_string(p) + " is not prime");
    return Field(p);
}

Scalar Field::zero() const { return integer(0); }
Scalar Field::one() const { return integer(1); }

Scalar Field::integer(long v) const
{
    if (is_rational())
        return Scalar(mpq_class(v));
    long r = v % static_cast<long>(p_);
    if (r < 0)
        r += p_;
    return Scalar(static_cast<std::uint64_t>(r), p_);
}

Scalar Field::parse(const std::string& s) const
{
    auto slash = s.find('/');
    if (is_rational()) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw std::invalid_argument("Field::parse: bad rational literal '" + s + "'");
        q.canonicalize();
        if (q.get_den() == 0)
            throw std::invalid_argument("Field::parse: zero denominator in '" + s + "'");
        return Scalar(q);
    }
    if (slash == std::string::npos)
        return integer(std::stol(s));
    Scalar num = integer(std::stol(s.substr(0, slash)));
    Scalar den = integer(std::stol(s.substr(slash + 1)));
    return num / den;
}

std::string Field::name() const
{
    return is_rational() ? "rational" : "prime:" + std::to_string(p_);
}

bool Scalar::is_zero() const
{
    if (v_.index() == 0)
        return std::get<0>(v_) == 0;
    return std::get<1>(v_).v == 0;
}

Field Scalar::field() const
{
    return v_.index() == 0 ? Field::rationals() : Field::prime(std::get<1>(v_).p);
}

namespace {
void check_same(const Scalar& a, const Scalar& b)
{
    if (a.is_rational_repr() != b.is_rational_repr())
        throw std::logic_error("Scalar: mixed-field arithmetic");
}
} // namespace

Scalar Scalar::operator+(const Scalar& o) const
{
    check_same(*this, o);
    if (v_.index() == 0)
        return Scalar(mpq_class(std::get<0>(v_) + std::get<0>(o.v_)));
    const auto& a = std::get<1>(v_);
    const auto& b = std::get<1>(o.v_);
    if (a.p != b.p)
        throw std::logic_error("Scalar: mixed moduli");
    return Scalar((a.v + b.v) % a.p, a.p);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const
{
    if (v_.index() == 0)
        return Scalar(mpq_class(-std::get<0>(v_)));
    const auto& a = std::get<1>(v_);
    return Scalar(a.v == 0 ? 0 : a.p - a.v, a.p);
}

Scalar Scalar::operator*(const Scalar& o) const
{
    check_same(*this, o);
    if (v_.index() == 0)
        return Scalar(mpq_class(std::get<0>(v_) * std::get<0>(o.v_)));
    const auto& a = std::get<1>(v_);
    const auto& b = std::get<1>(o.v_);
    if (a.p != b.p)
        throw std::logic_error("Scalar: mixed moduli");
    return Scalar((a.v * b.v) % a.p, a.p);
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw std::domain_error("Scalar::inverse: division by zero");
    if (v_.index() == 0)
        return Scalar(mpq_class(1 / std::get<0>(v_)));
    const auto& a = std::get<1>(v_);
    return Scalar(fp_inverse(a.v, a.p), a.p);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const { return v_ == o.v_; }

std::string Scalar::str() const
{
    if (v_.index() == 0)
        return std::get<0>(v_).get_str();
    return std::to_string(std::get<1>(v_).v);
}

const char* errc_name(Errc c)
{
    switch (c) {
    case Errc::not_contained: return "NotContained";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::not_chain_map: return "NotChainMap";
    case Errc::not_subcomplex: return "NotSubcomplex";
    case Errc::lift_failure: return "LiftFailure";
    case Errc::not_convergent_case: return "NotConvergentCase";
    case Errc::invalid_profile: return "InvalidProfile";
    case Errc::not_large_surgery: return "NotLargeSurgery";
    case Errc::class_inconsistency: return "ClassInconsistency";
    case Errc::not_symmetrizable: return "NotSymmetrizable";
    case Errc::unit_value_violation: return "UnitValueViolation";
    case Errc::not_genus_one: return "NotGenusOne";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::invalid_case: return "InvalidCase";
    case Errc::bad_slope: return "BadSlope";
    case Errc::unknown_knot: return "UnknownKnot";
    case Errc::not_applicable: return "NotApplicable";
    case Errc::io_error: return "IoError";
    case Errc::schema_error: return "SchemaError";
    case Errc::degenerate_pairing: return "DegeneratePairing";
    }
    return "Error";
}

} // namespace khicalc
