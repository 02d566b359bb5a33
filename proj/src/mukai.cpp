#include "orbhrr/mukai.hpp"

#include "orbhrr/errors.hpp"

#include <algorithm>
#include <sstream>

namespace orbhrr {

bool NSClass::is_zero() const
{
    return std::all_of(coords.begin(), coords.end(), [](std::int64_t x) { return x == 0; });
}

NSClass NSClass::operator-() const
{
    NSClass r = *this;
    for (auto& x : r.coords) x = -x;
    return r;
}

PicardLattice::PicardLattice(IntMatrix gram, std::vector<std::int64_t> ample)
    : gram_(std::move(gram)), ample_(std::move(ample))
{
    const std::size_t rho = gram_.size();
    for (std::size_t i = 0; i < rho; ++i) {
        if (gram_[i].size() != rho) {
            throw DimensionMismatchError("Gram matrix must be square");
        }
        if (gram_[i][i] % 2 != 0) {
            throw SchemaError("Gram matrix must have even diagonal");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (gram_[i][j] != gram_[j][i]) {
                throw SchemaError("Gram matrix must be symmetric");
            }
        }
    }
    if (ample_.size() != rho) {
        throw DimensionMismatchError("ample class has " + std::to_string(ample_.size()) + " coordinates, lattice rank is " +
                                     std::to_string(rho));
    }
    if (polarization_degree() <= 0) {
        throw SchemaError("ample class must have positive self-intersection");
    }
}

std::int64_t PicardLattice::polarization_degree() const { return intersect(*this, ample(), ample()); }

PicardLattice rank_one_lattice(std::int64_t degree) { return PicardLattice({{degree}}, {1}); }

PicardLattice elliptic_k3_lattice() { return PicardLattice({{-2, 1}, {1, 0}}, {1, 3}); }

std::string to_string(const MukaiVector& v)
{
    std::ostringstream os;
    os << '(' << v.r << ", [";
    for (std::size_t i = 0; i < v.c1.coords.size(); ++i) os << (i ? "," : "") << v.c1.coords[i];
    os << "], " << v.s << ')';
    return os.str();
}

std::int64_t intersect(const PicardLattice& lattice, const NSClass& a, const NSClass& b)
{
    if (a.coords.empty() || b.coords.empty()) {
        return 0;
    }
    const std::size_t rho = lattice.rank();
    if (a.coords.size() != rho || b.coords.size() != rho) {
        throw DimensionMismatchError("class dimension does not match lattice rank " + std::to_string(rho));
    }
    std::int64_t total = 0;
    for (std::size_t i = 0; i < rho; ++i)
        for (std::size_t j = 0; j < rho; ++j) total += a.coords[i] * lattice.gram()[i][j] * b.coords[j];
    return total;
}

std::int64_t mukai_pairing(const PicardLattice& lattice, const MukaiVector& v, const MukaiVector& w)
{
    return v.r * w.s - intersect(lattice, v.c1, w.c1) + v.s * w.r;
}

MukaiVector mukai_dual(const MukaiVector& v) { return {v.r, -v.c1, v.s}; }

namespace {

NSClass add_classes(const NSClass& a, const NSClass& b)
{
    if (a.coords.empty()) return b;
    if (b.coords.empty()) return a;
    if (a.coords.size() != b.coords.size()) {
        throw DimensionMismatchError("cannot add classes of different rank");
    }
    NSClass r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
    return r;
}

}  // namespace

MukaiVector operator+(const MukaiVector& a, const MukaiVector& b)
{
    return {a.r + b.r, add_classes(a.c1, b.c1), a.s + b.s};
}

MukaiVector operator*(std::int64_t k, const MukaiVector& v)
{
    MukaiVector r = v;
    r.r *= k;
    r.s *= k;
    for (auto& x : r.c1.coords) x *= k;
    return r;
}

bool is_numerical(const UniPoly& p)
{
    std::vector<Rational> diffs;
    for (long z = 0; z <= p.degree(); ++z) diffs.push_back(p.evaluate(Rational(z)));
    while (!diffs.empty()) {
        if (!diffs.front().is_integer()) return false;
        for (std::size_t i = 0; i + 1 < diffs.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
        diffs.pop_back();
    }
    return true;
}

NumericalPolynomial::NumericalPolynomial(UniPoly poly) : poly_(std::move(poly))
{
    if (!is_numerical(poly_)) {
        throw ExactnessError("polynomial " + poly_.to_string("z") + " is not numerical");
    }
}

NumericalPolynomial hilbert_polynomial(const PicardLattice& lattice, const MukaiVector& v)
{
    const std::int64_t h2 = lattice.polarization_degree();
    const std::int64_t d = intersect(lattice, v.c1, lattice.ample());
    return NumericalPolynomial(UniPoly({Rational(v.r + v.s), Rational(d), Rational(v.r * h2, 2)}));
}

UniPoly reduced_hilbert_polynomial(const NumericalPolynomial& p)
{
    if (p.poly().is_zero()) {
        throw DivisionByZeroError("reduced Hilbert polynomial of the zero polynomial");
    }
    return p.poly().make_monic();
}

DegreeSlope degree_and_slope(const PicardLattice& lattice, const MukaiVector& v)
{
    DegreeSlope out;
    out.degree = intersect(lattice, v.c1, lattice.ample());
    if (v.r != 0) out.slope = Rational(out.degree, v.r);
    return out;
}

bool is_primitive(const MukaiVector& v)
{
    std::int64_t g = gcd(v.r, v.s);
    for (auto x : v.c1.coords) g = gcd(g, x);
    return g == 1;
}

HypothesisReport check_hypotheses(std::int64_t r, const NSClass& c1, std::int64_t s, std::int64_t degree,
                                  bool generic_polarization)
{
    HypothesisReport rep;
    rep.rank_positive = r > 0;
    rep.primitive = is_primitive(MukaiVector{r, c1, s});
    rep.degree_positive = degree > 0;
    rep.rank_degree_coprime = gcd(r, degree) == 1;
    rep.rank_degree_s_coprime = gcd(gcd(r, degree), s) == 1;
    rep.generic_polarization = generic_polarization;
    rep.hilbert_deformation_type = rep.rank_positive && rep.primitive && generic_polarization &&
                                   (rep.degree_positive || rep.rank_degree_coprime);
    rep.smooth_projective = rep.rank_degree_s_coprime || (rep.primitive && generic_polarization);
    return rep;
}

HypothesisReport check_hypotheses(const PicardLattice& lattice, const MukaiVector& v, bool generic_polarization)
{
    return check_hypotheses(v.r, v.c1, v.s, intersect(lattice, v.c1, lattice.ample()), generic_polarization);
}

bool poly_leq_eventually(const UniPoly& p, const UniPoly& q)
{
    const UniPoly diff = q - p;
    return diff.is_zero() || diff.leading().sign() > 0;
}

}  // namespace orbhrr
