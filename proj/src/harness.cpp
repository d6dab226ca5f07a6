#include "dp1/harness.hpp"
#include <array>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <set>
#include <thread>
#include <stdexcept>

#include "dp1/eisenstein.hpp"
#include "dp1/families.hpp"
#include "dp1/picard.hpp"
#include "dp1/upoly.hpp"

namespace dp1 {

namespace {

using i128 = __int128;

struct LPair {
    long a = 0;
    long b = 0;
};

long lnorm(LPair const& x) { return x.a * x.a - x.a * x.b + x.b * x.b; }

bool is_canonical_assoc(LPair const& x) { return x.a > x.b && x.b >= 0; }

// all nonzero Eisenstein integers with norm <= maxnorm, sorted
std::vector<LPair> eisenstein_ball(long maxnorm, bool canonical_only) {
    std::vector<LPair> out;
    long amax = static_cast<long>(std::floor(2.0 * std::sqrt(maxnorm / 3.0))) + 2;
    for (long a = -amax; a <= amax; ++a) {
        double disc = 4.0 * maxnorm - 3.0 * static_cast<double>(a) * a;
        if (disc < 0) continue;
        long s = static_cast<long>(std::floor(std::sqrt(disc)));
        long blo = (a - s) / 2 - 2, bhi = (a + s) / 2 + 2;
        for (long b = blo; b <= bhi; ++b) {
            if (a == 0 && b == 0) continue;
            LPair p{a, b};
            if (lnorm(p) > maxnorm) continue;
            if (canonical_only && !is_canonical_assoc(p)) continue;
            out.push_back(p);
        }
    }
    std::sort(out.begin(), out.end(), [](LPair const& x, LPair const& y) {
        long nx = lnorm(x), ny = lnorm(y);
        if (nx != ny) return nx < ny;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });
    return out;
}

struct E128 {
    i128 a = 0;
    i128 b = 0;
};

E128 emul(E128 const& x, E128 const& y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
}

bool isqrt128(i128 x, i128& r) {
    if (x < 0) return false;
    long double e = sqrtl(static_cast<long double>(x));
    r = static_cast<i128>(e);
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r * r == x;
}

std::array<bool, 64> const kSquareMod64 = [] {
    std::array<bool, 64> t{};
    for (unsigned i = 0; i < 64; ++i) t[(i * i) & 63] = true;
    return t;
}();

inline bool square_mod64(unsigned long long r) { return kSquareMod64[r & 63]; }

// square root of a + b*zeta in Z[zeta], via the quadratic for b^2
bool eisenstein_sqrt128(i128 u, i128 v, E128& w) {
    if (u == 0 && v == 0) {
        w = {0, 0};
        return true;
    }
    if (v == 0) {
        i128 s;
        if (u > 0 && isqrt128(u, s)) {
            w = {s, 0};
            return true;
        }
        if (u < 0 && (-u) % 3 == 0 && isqrt128((-u) / 3, s)) {
            w = {s, 2 * s};
            return true;
        }
        return false;
    }
    i128 t = 4 * u - 2 * v;
    i128 D = t * t + 12 * v * v;
    if (!square_mod64(static_cast<unsigned long long>(D))) return false;
    i128 sD;
    if (!isqrt128(D, sD)) return false;
    i128 num = -t + sD;
    if (num <= 0 || num % 6 != 0) return false;
    i128 B = num / 6;
    i128 b;
    if (!isqrt128(B, b) || b == 0) return false;
    if ((v + B) % (2 * b) != 0) return false;
    i128 a = (v + B) / (2 * b);
    if (a * a - b * b != u || 2 * a * b - b * b != v) return false;
    w = {a, b};
    return true;
}

EisensteinInt to_eis(LPair const& p) { return {Integer(p.a), Integer(p.b)}; }

FieldElem to_field(LPair const& p) { return {Rational(p.a), Rational(p.b)}; }

bool field_is_eisenstein(FieldElem const& c, EisensteinInt& out) {
    if (!is_integer(c.a) || !is_integer(c.b)) return false;
    out = {c.a.get_num(), c.b.get_num()};
    return true;
}

// weighted content of (x, y, z, w) is a unit: no non-unit lambda with
// lambda | x, lambda | y, lambda^2 | z, lambda^3 | w
bool content_is_unit(EisensteinInt const& x, EisensteinInt const& y, EisensteinInt const& z,
                     EisensteinInt const& w) {
    if (x.is_zero() && y.is_zero()) return true;  // only the base point lands here
    EisensteinInt g = y.is_zero() ? canonical_associate(x)
                                  : (x.is_zero() ? canonical_associate(y) : eisenstein_gcd(x, y));
    if (g.is_unit()) return true;
    long ng = static_cast<long>(g.norm().get_si());
    for (auto const& cand : eisenstein_ball(ng, true)) {
        if (lnorm(cand) <= 1) continue;
        EisensteinInt d = to_eis(cand);
        if (!divides(d, g)) continue;
        EisensteinInt d2 = d * d;
        if (!divides(d2, z)) continue;
        if (!divides(d2 * d, w)) continue;
        return false;
    }
    return true;
}

WPoint make_point(EisensteinInt const& x, EisensteinInt const& y, EisensteinInt const& z,
                  EisensteinInt const& w) {
    return WPoint({x.to_field(), y.to_field(), z.to_field(), w.to_field()}, {1, 1, 2, 3});
}

void sort_entries(std::vector<HeightEntry>& entries) {
    std::sort(entries.begin(), entries.end(), [](HeightEntry const& p, HeightEntry const& q) {
        if (p.height != q.height) return p.height < q.height;
        return point_key(p.point) < point_key(q.point);
    });
}

// normalized (x, y) representatives: x canonical (or 0 with y canonical)
template <typename F>
void for_each_pair(long maxnorm, F&& visit) {
    auto canon = eisenstein_ball(maxnorm, true);
    auto all = eisenstein_ball(maxnorm, false);
    for (auto const& y : canon) visit(LPair{0, 0}, y);
    for (auto const& x : canon) {
        visit(x, LPair{0, 0});
        for (auto const& y : all) visit(x, y);
    }
}

}  // namespace

double height(WPoint const& p) {
    if (p.coords.size() != 4 || p.weights != std::vector<unsigned>{1, 1, 2, 3})
        throw std::invalid_argument("height: expected a point of P(1,1,2,3)");
    EisensteinInt x, y;
    if (!field_is_eisenstein(p.coords[0], x) || !field_is_eisenstein(p.coords[1], y))
        throw std::invalid_argument("height: expected Eisenstein-integral coordinates");
    if (x.is_zero() && y.is_zero()) return 1.0;  // the anticanonical base point
    Integer n = std::max(x.norm(), y.norm());
    return n.get_d();
}

std::string point_key(WPoint const& p) {
    std::string key;
    for (auto const& c : p.coords) key += to_string(c) + ";";
    return key;
}

nlohmann::json entry_to_json(HeightEntry const& e) {
    nlohmann::json j;
    j["point"] = {to_string(e.point.coords[0]), to_string(e.point.coords[1]),
                  to_string(e.point.coords[2]), to_string(e.point.coords[3])};
    j["height"] = e.height;
    j["on_exceptional"] = e.on_exceptional;
    j["source"] = e.source == PointSource::curve_enumeration ? "curve-enumeration" : "brute-force";
    return j;
}

std::vector<HeightEntry> enumerate_curve_points(EPoint const& q, double T) {
    if (!on_parametrizing_cubic(q))
        throw std::invalid_argument("enumerate_curve_points: invalid parameter");
    if (q.z0.is_zero())
        throw std::invalid_argument("enumerate_curve_points: degenerate parameter (z0 = 0)");
    if (T < 1) return {};
    long maxnorm = static_cast<long>(std::floor(T));

    FieldElem c49(49);
    FieldElem cx = c49 * q.x0 * q.x0;
    FieldElem cy = c49 * q.y0 * q.y0;
    FieldElem inv_cz = (q.z0 * q.z0).inverse();

    std::vector<HeightEntry> out;
    for_each_pair(maxnorm, [&](LPair const& xp, LPair const& yp) {
        FieldElem x = to_field(xp), y = to_field(yp);
        FieldElem z = -(cx * x * x + cy * y * y) * inv_cz;
        EisensteinInt ze;
        if (!field_is_eisenstein(z, ze)) return;
        FieldElem rhs = z.pow(3) + c49 * x.pow(6) + c49 * y.pow(6);
        auto w = field_sqrt(rhs);
        if (!w) return;
        EisensteinInt we;
        if (!field_is_eisenstein(*w, we)) return;
        EisensteinInt xe = to_eis(xp), ye = to_eis(yp);
        if (!content_is_unit(xe, ye, ze, we)) return;
        double h = static_cast<double>(std::max(lnorm(xp), lnorm(yp)));
        out.push_back({make_point(xe, ye, ze, we), h, true, PointSource::curve_enumeration});
        if (!we.is_zero())
            out.push_back({make_point(xe, ye, ze, -we), h, true, PointSource::curve_enumeration});
    });
    sort_entries(out);
    return out;
}

std::vector<HeightEntry> enumerate_surface_points(Surface const& s, double T) {
    if (!s.A.is_rational() || !s.B.is_rational() || !is_integer(s.A.a) || !is_integer(s.B.a))
        throw std::invalid_argument("enumerate_surface_points: integer surface coefficients required");
    if (T < 1) return {};
    if (T > 4096)
        throw std::invalid_argument("enumerate_surface_points: height bound exceeds the fast range");
    long maxnorm = static_cast<long>(std::floor(T));
    i128 A = s.A.a.get_num().get_si(), B = s.B.a.get_num().get_si();

    // |z| <= (2 max(A,B) T^3)^(1/3) + 1
    double zr = std::cbrt(2.0 * std::max<double>(std::abs((long)A), std::abs((long)B)) * T * T * T) + 1.0;
    long zmaxnorm = static_cast<long>(std::floor(zr * zr));

    struct PairData {
        LPair x, y;
        long h;
    };
    std::vector<PairData> pairs;
    std::vector<E128> pair_r;  // hot array scanned in the inner loop
    for_each_pair(maxnorm, [&](LPair const& xp, LPair const& yp) {
        E128 x{xp.a, xp.b}, y{yp.a, yp.b};
        E128 x3 = emul(emul(x, x), x), y3 = emul(emul(y, y), y);
        E128 x6 = emul(x3, x3), y6 = emul(y3, y3);
        pairs.push_back({xp, yp, std::max(lnorm(xp), lnorm(yp))});
        pair_r.push_back({A * x6.a + B * y6.a, A * x6.b + B * y6.b});
    });

    std::vector<HeightEntry> out;
    // the base point x = y = 0, z^3 = w^2
    out.push_back({WPoint({FieldElem(0), FieldElem(0), FieldElem(1), FieldElem(1)}, {1, 1, 2, 3}),
                   1.0, false, PointSource::brute_force});

    std::vector<LPair> zs = eisenstein_ball(zmaxnorm, false);
    zs.push_back({0, 0});  // z = 0 is a legitimate coordinate

    auto scan = [&](size_t zlo, size_t zhi, std::vector<HeightEntry>& local) {
        size_t const npairs = pair_r.size();
        for (size_t zi = zlo; zi < zhi; ++zi) {
            E128 z{zs[zi].a, zs[zi].b};
            E128 z3 = emul(emul(z, z), z);
            for (size_t pi = 0; pi < npairs; ++pi) {
                i128 cu = z3.a + pair_r[pi].a, cv = z3.b + pair_r[pi].b;
                // discriminant filter mod 64, from the low words only
                if (cv != 0) {
                    unsigned long long tl = static_cast<unsigned long long>(4 * cu - 2 * cv);
                    unsigned long long vl = static_cast<unsigned long long>(cv);
                    if (!kSquareMod64[(tl * tl + 12 * vl * vl) & 63]) continue;
                }
                E128 w;
                if (!eisenstein_sqrt128(cu, cv, w)) continue;
                auto const& pd = pairs[pi];
                EisensteinInt xe = to_eis(pd.x), ye = to_eis(pd.y);
                EisensteinInt ze{Integer(zs[zi].a), Integer(zs[zi].b)};
                EisensteinInt we{Integer(static_cast<long>(w.a)),
                                 Integer(static_cast<long>(w.b))};
                if (!content_is_unit(xe, ye, ze, we)) continue;
                double h = static_cast<double>(pd.h);
                local.push_back({make_point(xe, ye, ze, we), h, false, PointSource::brute_force});
                if (!we.is_zero())
                    local.push_back(
                        {make_point(xe, ye, ze, -we), h, false, PointSource::brute_force});
            }
        }
    };

    unsigned nworkers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::vector<std::vector<HeightEntry>> results(nworkers);
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < nworkers; ++t) {
        size_t lo = zs.size() * t / nworkers, hi = zs.size() * (t + 1) / nworkers;
        workers.emplace_back(scan, lo, hi, std::ref(results[t]));
    }
    for (auto& th : workers) th.join();
    for (auto& r : results)
        for (auto& e : r) out.push_back(std::move(e));
    sort_entries(out);
    return out;
}

std::vector<FamilyCurveRef> family_orbit(int budget) {
    auto params = family_parameters(budget);
    FieldElem zeta = FieldElem::zeta();
    std::vector<FamilyCurveRef> out;
    std::set<std::string> seen;
    for (size_t i = 0; i < params.size(); ++i) {
        EPoint const& base = params[i];
        for (int sw = 0; sw < 2; ++sw) {
            FieldElem x0 = sw ? base.y0 : base.x0;
            FieldElem y0 = sw ? base.x0 : base.y0;
            FieldElem tw(1);
            for (int j = 0; j < 3; ++j) {
                EPoint q{x0, y0, base.z0 * tw};
                // projective normalization for dedup
                FieldElem lead = !q.x0.is_zero() ? q.x0 : (!q.y0.is_zero() ? q.y0 : q.z0);
                FieldElem inv = lead.inverse();
                std::string key = to_string(q.x0 * inv) + "|" + to_string(q.y0 * inv) + "|" +
                                  to_string(q.z0 * inv);
                if (seen.insert(key).second) {
                    std::string label = "n=" + std::to_string(i + 1);
                    if (sw) label += ",swap";
                    if (j) label += ",zeta^" + std::to_string(j);
                    out.push_back({static_cast<int>(i + 1), j, sw != 0, q, label});
                }
                tw = tw * zeta;
            }
        }
    }
    return out;
}

nlohmann::json count_report(std::vector<double> const& heights, int curve_budget) {
    std::vector<double> hs = heights;
    std::sort(hs.begin(), hs.end());
    nlohmann::json out;
    out["version"] = 1;
    out["curve_budget"] = curve_budget;
    out["heights"] = hs;
    out["height_function"] = "max(|x|,|y|)^2 at the complex place, content-1 Eisenstein coordinates";

    auto fmt = [](double t) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%g", t);
        return std::string(buf);
    };

    std::vector<FamilyCurveRef> curves =
        curve_budget > 0 ? family_orbit(curve_budget) : std::vector<FamilyCurveRef>{};

    std::map<std::string, std::vector<HeightEntry>> memo;
    auto curve_points = [&](FamilyCurveRef const& c, double T) -> std::vector<HeightEntry> const& {
        std::string key = c.label + "@" + fmt(T);
        auto it = memo.find(key);
        if (it == memo.end()) it = memo.emplace(key, enumerate_curve_points(c.q, T)).first;
        return it->second;
    };

    nlohmann::json jcurves = nlohmann::json::array();
    for (auto const& c : curves) {
        nlohmann::json jc;
        jc["label"] = c.label;
        jc["epoint"] = {to_string(c.q.x0), to_string(c.q.y0), to_string(c.q.z0)};
        nlohmann::json counts, ratios;
        for (double t : hs) {
            size_t nt = curve_points(c, t).size();
            size_t n2t = curve_points(c, 2 * t).size();
            counts[fmt(t)] = nt;
            ratios[fmt(t)] = nt ? nlohmann::json(static_cast<double>(n2t) / nt)
                                : nlohmann::json();
        }
        jc["counts"] = counts;
        jc["growth_ratio_2T_over_T"] = ratios;
        jcurves.push_back(jc);
    }
    out["curves"] = jcurves;

    nlohmann::json exceptional, distinct, surface_counts;
    for (double t : hs) {
        std::set<std::string> uni;
        int with_points = 0;
        for (auto const& c : curves) {
            auto const& pts = curve_points(c, t);
            if (!pts.empty()) ++with_points;
            for (auto const& e : pts) uni.insert(point_key(e.point));
        }
        exceptional[fmt(t)] = uni.size();
        distinct[fmt(t)] = with_points;
        surface_counts[fmt(t)] = enumerate_surface_points(Surface::base49(), t).size();
    }
    out["exceptional_counts"] = exceptional;
    out["curves_with_points"] = distinct;
    nlohmann::json jsurface;
    jsurface["counts"] = surface_counts;
    jsurface["z_box"] = "|z| <= (2*max(A,B)*T^3)^(1/3) + 1";
    out["surface"] = jsurface;
    return out;
}

namespace {

template <typename F>
Claim run_claim(std::string id, std::string paper, F&& body) {
    Claim c;
    c.id = std::move(id);
    c.paper = std::move(paper);
    c.status = "pass";
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (std::exception const& e) {
        c.status = "fail";
        c.details["error"] = e.what();
    }
    c.runtime_sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return c;
}

void require(Claim& c, bool ok, std::string const& what) {
    if (!ok) {
        c.status = "fail";
        c.details["failed_check"] = what;
    }
}

Claim claim_picard() {
    return run_claim("picard.rank1", "Picard rank of the surface over Q(zeta) is 1", [](Claim& c) {
        PicardRankResult r = picard_rank_check();
        c.details["rank"] = r.rank;
        nlohmann::json gen = nlohmann::json::array();
        for (auto const& g : r.generator) gen.push_back(to_string(g));
        c.details["generator"] = gen;
        require(c, r.rank == 1, "fixed subspace dimension is 1");
        require(c, r.is_anticanonical_direction, "generator is the anticanonical direction");
    });
}

Claim claim_identity() {
    return run_claim("identity.section", "section substitution yields a perfect square",
                     [](Claim& c) {
        require(c, adjunction_identity_check(), "four-variable identity");
        std::vector<std::string> all{"x0", "y0", "x", "y"};
        std::vector<std::string> base{"x0", "y0"};
        MPoly F = MPoly::parse("(2*x0^3*y0 + y0^4)*x^2 + (x0^4 + 2*x0*y0^3)*y^2", all);
        std::map<std::string, MPoly> assign{
            {"x0", MPoly::variable(base, "x0")},
            {"y0", MPoly::variable(base, "y0")},
            {"x", MPoly::parse("zeta*y0", base)},
            {"y", MPoly::variable(base, "x0")},
        };
        MPoly Fs = F.subst(assign);
        c.details["substituted_form"] = Fs.str();
        auto root = is_perfect_square(Fs);
        require(c, root.has_value(), "substituted form is a perfect square");
        if (root) {
            MPoly expected = MPoly::parse("x0^3 - zeta*y0^3", base);
            require(c, *root == expected || *root == -expected,
                    "square root is x0^3 - zeta*y0^3 up to sign");
            c.details["square_root"] = root->str();
        }
    });
}

Claim claim_family_bitangent() {
    return run_claim("family.bitangent20",
                     "restriction sextics of twenty family members are bitangent", [](Claim& c) {
        auto params = family_parameters(20);
        int checked = 0;
        for (auto const& q : params) {
            TangencyProfile p = tangency_profile(branch_sextic(family_plane(q), Surface::base49()));
            if (p.kind != Tangency::bitangent) {
                require(c, false, "parameter " + std::to_string(checked + 1) + " not bitangent");
                return;
            }
            ++checked;
        }
        c.details["parameters_checked"] = checked;
        c.details["profile"] = "{2,2,1,1}";
    });
}

Claim claim_rank() {
    return run_claim("elliptic.rank_ge1", "x^3 + y^3 = 7 z^3 has a non-torsion rational point",
                     [](Claim& c) {
        auto cert = rank_ge_one_certificate(7, 10);
        require(c, cert.has_value(), "certificate found within bound 10");
        if (!cert) return;
        c.details["fermat_generator"] = {to_string(cert->fermat_gen.x),
                                         to_string(cert->fermat_gen.y),
                                         to_string(cert->fermat_gen.z)};
        c.details["weierstrass_generator"] = {to_string(cert->weierstrass_gen.X),
                                              to_string(cert->weierstrass_gen.Y)};
        nlohmann::json trace = nlohmann::json::array();
        for (auto const& [n, p] : cert->trace) {
            require(c, !p.at_infinity, "multiple " + std::to_string(n) + " is not the identity");
            trace.push_back({{"n", n},
                             {"X", p.at_infinity ? "inf" : to_string(p.X)},
                             {"Y", p.at_infinity ? "inf" : to_string(p.Y)}});
        }
        c.details["torsion_trace"] = trace;
        c.details["curve"] = "Y^2 = X^3 - 21168";
    });
}

Claim claim_section_smooth() {
    return run_claim("section.smooth20", "sections of twenty family members are smooth points",
                     [](Claim& c) {
        auto params = family_parameters(20);
        int checked = 0;
        for (auto const& q : params) {
            WPoint p = section_point(q);
            bool ok = on_surface(p, Surface::base49()) &&
                      family_curve(q).plane_eq.eval(p.coords).is_zero() && curve_point_smooth(q, p);
            if (!ok) {
                require(c, false, "parameter " + std::to_string(checked + 1));
                return;
            }
            ++checked;
        }
        c.details["parameters_checked"] = checked;
        c.details["base_section_point"] = "(-zeta, 2, 4*zeta, 57)";
    });
}

Claim claim_involutions() {
    return run_claim("components.involutions",
                     "the four branch involutions have constant displacement direction",
                     [](Claim& c) {
        std::vector<std::array<FieldElem, 4>> expected{
            {FieldElem(0), FieldElem(1), FieldElem(0), FieldElem(0)},
            {FieldElem(1), FieldElem(0), FieldElem(-1), FieldElem(0)},
            {FieldElem(1), FieldElem(0), -(FieldElem::zeta() * FieldElem::zeta()), FieldElem(0)},
            {FieldElem(1), FieldElem(0), -FieldElem::zeta(), FieldElem(0)}};
        nlohmann::json dirs = nlohmann::json::array();
        for (int i = 3; i <= 6; ++i) {
            Involution io = involution(i);
            require(c, is_branch_involution(io, Surface::unit()),
                    io.name + " preserves the branch curve");
            auto d = fixed_direction(io);
            require(c, d.has_value(), io.name + " has a constant direction");
            if (d) {
                require(c, *d == expected[i - 3], io.name + " direction matches");
                dirs.push_back({to_string((*d)[0]), to_string((*d)[1]), to_string((*d)[2]),
                                to_string((*d)[3])});
            }
        }
        c.details["directions"] = dirs;
        c.details["plane_construction"] =
            "span of tangent line and fixed direction (inferred construction)";
    });
}

Claim claim_s3_exact() {
    return run_claim("components.s3_exact", "the first dual component contains every family plane",
                     [](Claim& c) {
        // symbolic containment of all iota3 planes for the unit surface
        std::vector<std::string> vars{"X0", "Z0", "W0"};
        DualComponent s3 = component_s(3);
        std::map<std::string, MPoly> assign{
            {"k", MPoly::parse("X0^2", vars)},
            {"l", MPoly(vars)},
            {"m", MPoly::parse("Z0^2", vars)},
            {"n", MPoly::parse("W0^2", vars)},
        };
        MPoly lhs = s3.sextic.subst(assign);
        MPoly A = MPoly::parse("X0^3", vars), B = MPoly::parse("Z0^3", vars),
              C = MPoly::parse("W0^3", vars);
        MPoly rhs = -((A + B + C) * (-A + B + C) * (A - B + C) * (A + B - C));
        require(c, lhs == rhs, "symbolic factorization over the unit surface");

        DualComponent scaled = scale_component(s3, Rational(49));
        c.details["scaled_sextic"] = scaled.sextic.str();
        require(c, component_membership(DualPlane{4, 0, 1, 1}, scaled),
                "(4,0,1,1) lies on the scaled component");
        int checked = 0;
        for (auto const& q : family_parameters(20)) {
            if (!component_membership(family_plane(q), scaled)) {
                require(c, false, "family plane " + std::to_string(checked + 1));
                return;
            }
            ++checked;
        }
        c.details["family_planes_checked"] = checked;
    });
}

Claim claim_sampling(int idx, std::uint64_t seed) {
    return run_claim("components.s" + std::to_string(idx) + "_sampling",
                     "seeded samples of dual component " + std::to_string(idx) +
                         " give bitangent planes",
                     [idx, seed](Claim& c) {
        std::uint64_t s = seed * 1000003ULL + static_cast<std::uint64_t>(idx);
        auto pts = sample_component_points(component_s(idx), 10, s);
        int hits = 0;
        nlohmann::json profiles = nlohmann::json::array();
        for (auto const& p : pts) {
            TangencyProfile prof = verify_bitangency_numeric(p, Surface::unit(), 1e-6);
            profiles.push_back(to_string(prof.kind));
            if (prof.kind == Tangency::bitangent) ++hits;
        }
        c.details["seed"] = s;
        c.details["samples"] = 10;
        c.details["bitangent_hits"] = hits;
        c.details["profiles"] = profiles;
        require(c, hits >= 9, "at least 9 of 10 samples bitangent");
    });
}

Claim note_intermediate_line() {
    Claim c = run_claim("note.intermediate_line",
                        "displayed intermediate line of the perfect-square computation",
                        [](Claim& c) {
        c.details["displayed"] = "x0^6 - 2*zeta*x0^3*y0^3 + zeta*y0^6";
        c.details["exact_expansion"] = "x0^6 - 2*zeta*x0^3*y0^3 + zeta^2*y0^6";
        c.details["note"] = "the displayed line differs from the exact expansion in the "
                            "y0^6 coefficient; the perfect-square conclusion is verified "
                            "against the exact expansion";
    });
    c.status = "flagged";
    return c;
}

Claim note_w_closed_form() {
    Claim c = run_claim("note.w_closed_form", "displayed closed form of the section w-coordinate",
                        [](Claim& c) {
        c.details["displayed_first_factor"] = "y0^3 - zeta^2*x0^3";
        c.details["derived_first_factor"] = "x0^3 - zeta^2*y0^3";
        int agreed = 0;
        for (auto const& q : family_parameters(20)) {
            WPoint p = section_point(q);
            FieldElem w = section_w_closed_form(q);
            if (p.coords[3] == w || p.coords[3] == -w) ++agreed;
        }
        c.details["derived_form_matches_exact_sqrt"] = agreed;
        c.details["note"] = "the implementation takes the exact square root as ground truth; "
                            "only the derived first factor reproduces it";
    });
    c.status = "flagged";
    return c;
}

}  // namespace

std::vector<Claim> verify_claims(std::string const& group, std::uint64_t seed) {
    std::vector<Claim> out;
    bool all = group == "all";
    if (all || group == "picard") out.push_back(claim_picard());
    if (all || group == "identity") out.push_back(claim_identity());
    if (all || group == "family") out.push_back(claim_family_bitangent());
    if (all || group == "rank") out.push_back(claim_rank());
    if (all || group == "section") out.push_back(claim_section_smooth());
    if (all || group == "family") {
        out.push_back(claim_involutions());
        out.push_back(claim_s3_exact());
        for (int i = 4; i <= 6; ++i) out.push_back(claim_sampling(i, seed));
    }
    if (all) {
        out.push_back(note_intermediate_line());
        out.push_back(note_w_closed_form());
    }
    if (out.empty()) throw std::invalid_argument("verify_claims: unknown group '" + group + "'");
    return out;
}

std::vector<Claim> verify_all(std::uint64_t seed) { return verify_claims("all", seed); }

nlohmann::json claims_to_json(std::vector<Claim> const& claims, std::uint64_t seed) {
    nlohmann::json out;
    out["version"] = 1;
    out["seed"] = seed;
    nlohmann::json arr = nlohmann::json::array();
    for (auto const& c : claims) {
        arr.push_back({{"id", c.id},
                       {"paper", c.paper},
                       {"status", c.status},
                       {"details", c.details},
                       {"runtime_sec", c.runtime_sec}});
    }
    out["claims"] = arr;
    return out;
}

int claims_exit_code(std::vector<Claim> const& claims) {
    for (auto const& c : claims)
        if (c.status == "fail") return 1;
    return 0;
}

}  // namespace dp1
