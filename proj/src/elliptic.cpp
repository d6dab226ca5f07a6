#include "dp1/elliptic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dp1 {

WeierstrassCurve WeierstrassCurve::mordell(long m) {
    return {Rational(0), Rational(-432) * Rational(m) * Rational(m)};
}

Rational WeierstrassCurve::discriminant() const {
    return Rational(-16) * (4 * a * a * a + 27 * b * b);
}

bool on_curve(ECPoint const& p, WeierstrassCurve const& c) {
    if (p.at_infinity) return true;
    return p.Y * p.Y == p.X * p.X * p.X + c.a * p.X + c.b;
}

ECPoint ec_neg(ECPoint const& p) {
    if (p.at_infinity) return p;
    return ECPoint::affine(p.X, -p.Y);
}

ECPoint ec_add(ECPoint const& p, ECPoint const& q, WeierstrassCurve const& c) {
    if (!on_curve(p, c) || !on_curve(q, c))
        throw std::invalid_argument("ec_add: point not on the curve");
    if (p.at_infinity) return q;
    if (q.at_infinity) return p;
    if (p.X == q.X && p.Y == -q.Y) return ECPoint::infinity();
    Rational lambda;
    if (p.X == q.X) {
        lambda = (3 * p.X * p.X + c.a) / (2 * p.Y);
    } else {
        lambda = (q.Y - p.Y) / (q.X - p.X);
    }
    Rational X3 = lambda * lambda - p.X - q.X;
    Rational Y3 = lambda * (p.X - X3) - p.Y;
    return ECPoint::affine(X3, Y3);
}

ECPoint ec_multiply(long n, ECPoint const& p, WeierstrassCurve const& c) {
    if (!on_curve(p, c)) throw std::invalid_argument("ec_multiply: point not on the curve");
    ECPoint base = n < 0 ? ec_neg(p) : p;
    unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    ECPoint acc = ECPoint::infinity();
    while (k > 0) {
        if (k & 1) acc = ec_add(acc, base, c);
        k >>= 1;
        if (k) base = ec_add(base, base, c);
    }
    return acc;
}

bool on_fermat_cubic(long m, FermatPoint const& p) {
    if (p.x == 0 && p.y == 0 && p.z == 0) return false;
    return p.x * p.x * p.x + p.y * p.y * p.y == Rational(m) * p.z * p.z * p.z;
}

ECPoint fermat_to_weierstrass(long m, FermatPoint const& p) {
    if (!on_fermat_cubic(m, p))
        throw std::invalid_argument("fermat_to_weierstrass: point not on the cubic");
    Rational s = p.x + p.y;
    if (s == 0) return ECPoint::infinity();
    if (p.z == 0)
        throw std::logic_error("fermat_to_weierstrass: z = 0 with x + y != 0 has no rational instance");
    Rational X = Rational(12 * m) * p.z / s;
    Rational Y = Rational(36 * m) * (p.y - p.x) / s;
    ECPoint out = ECPoint::affine(X, Y);
    if (!on_curve(out, WeierstrassCurve::mordell(m)))
        throw std::logic_error("fermat_to_weierstrass: image off the curve");
    return out;
}

FermatPoint weierstrass_to_fermat(long m, ECPoint const& p) {
    if (p.at_infinity) return {Rational(1), Rational(-1), Rational(0)};
    if (p.X == 0) throw std::invalid_argument("weierstrass_to_fermat: X = 0 has no preimage");
    Rational s = Rational(12 * m) / p.X;          // x + y
    Rational d = p.Y * s / Rational(36 * m);      // y - x
    Rational x = (s - d) / 2, y = (s + d) / 2, z(1);
    Integer den = lcm(lcm(x.get_den(), y.get_den()), z.get_den());
    Integer xi = Rational(x * Rational(den)).get_num();
    Integer yi = Rational(y * Rational(den)).get_num();
    Integer zi = den;
    Integer g = gcd(gcd(xi, yi), zi);
    xi /= g; yi /= g; zi /= g;
    if (zi < 0 || (zi == 0 && yi < 0) || (zi == 0 && yi == 0 && xi < 0)) {
        xi = -xi; yi = -yi; zi = -zi;
    }
    FermatPoint out{Rational(xi), Rational(yi), Rational(zi)};
    if (!on_fermat_cubic(m, out))
        throw std::logic_error("weierstrass_to_fermat: preimage off the cubic");
    return out;
}

namespace {

Rational rational_of(FieldElem const& c, char const* what) {
    if (!c.is_rational())
        throw std::invalid_argument(std::string(what) + ": expected rational coordinates");
    return c.a;
}

}  // namespace

FermatPoint e_to_fermat(EPoint const& q) {
    if (!on_parametrizing_cubic(q))
        throw std::invalid_argument("e_to_fermat: point not on the parametrizing cubic");
    Rational x0 = rational_of(q.x0, "e_to_fermat");
    Rational y0 = rational_of(q.y0, "e_to_fermat");
    Rational z0 = rational_of(q.z0, "e_to_fermat");
    FermatPoint out{x0, y0, -z0 / 7};
    if (!on_fermat_cubic(7, out)) throw std::logic_error("e_to_fermat: image off the cubic");
    return out;
}

EPoint fermat_to_e(FermatPoint const& p) {
    if (!on_fermat_cubic(7, p))
        throw std::invalid_argument("fermat_to_e: point not on x^3 + y^3 = 7 z^3");
    EPoint out{FieldElem(p.x), FieldElem(p.y), FieldElem(Rational(-7) * p.z)};
    if (!on_parametrizing_cubic(out)) throw std::logic_error("fermat_to_e: image off the cubic");
    return out;
}

std::vector<std::pair<int, ECPoint>> torsion_trace(ECPoint const& p, WeierstrassCurve const& c) {
    std::vector<std::pair<int, ECPoint>> out;
    ECPoint acc = ECPoint::infinity();
    for (int n = 1; n <= 12; ++n) {
        acc = ec_add(acc, p, c);
        if (n == 11) continue;  // 11 is not a rational torsion order
        out.emplace_back(n, acc);
    }
    return out;
}

bool is_torsion(ECPoint const& p, WeierstrassCurve const& c) {
    if (p.at_infinity) return true;
    for (auto const& [n, q] : torsion_trace(p, c))
        if (q.at_infinity) return true;
    return false;
}

std::optional<RankCertificate> rank_ge_one_certificate(long m, long search_bound) {
    if (m < 1) throw std::invalid_argument("rank_ge_one_certificate: m must be >= 1");
    WeierstrassCurve curve = WeierstrassCurve::mordell(m);
    for (long s = 1; s <= search_bound; ++s) {
        for (long x = s; x >= -s; --x)
            for (long y = s; y >= -s; --y)
                for (long z = s; z >= -s; --z) {
                    if (std::max({std::abs(x), std::abs(y), std::abs(z)}) != s) continue;
                    // one primitive representative per projective point
                    if (z < 0 || (z == 0 && y < 0) || (z == 0 && y == 0 && x < 0)) continue;
                    long g = std::gcd(std::gcd(std::abs(x), std::abs(y)), std::abs(z));
                    if (g != 1) continue;
                    if (x * x * x + y * y * y != m * z * z * z) continue;
                    FermatPoint fp{Rational(x), Rational(y), Rational(z)};
                    ECPoint wp = fermat_to_weierstrass(m, fp);
                    if (wp.at_infinity || is_torsion(wp, curve)) continue;
                    return RankCertificate{m, fp, wp, torsion_trace(wp, curve)};
                }
    }
    return std::nullopt;
}

std::vector<EPoint> family_parameters(int count) {
    if (count < 1) throw std::invalid_argument("family_parameters: count must be >= 1");
    auto cert = rank_ge_one_certificate(7, 10);
    if (!cert) throw std::logic_error("family_parameters: no generator within the default bound");
    WeierstrassCurve curve = WeierstrassCurve::mordell(7);
    std::vector<EPoint> out;
    ECPoint acc = ECPoint::infinity();
    for (int n = 1; n <= count; ++n) {
        acc = ec_add(acc, cert->weierstrass_gen, curve);
        if (acc.at_infinity || acc.X == 0) continue;  // no affine preimage; skip and continue
        out.push_back(fermat_to_e(weierstrass_to_fermat(7, acc)));
    }
    return out;
}

}  // namespace dp1
