#include "monoscroll/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "monoscroll/chow.hpp"
#include "monoscroll/scroll.hpp"

namespace monoscroll {

namespace {

Verdict verdict_of(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }

std::string structure_tag(const SurfaceStructure& s) {
    return "m=" + std::to_string(s.m) + " ell=" + std::to_string(s.ell);
}

void add(CheckReport& r, std::string item, bool ok, std::string detail) {
    r.findings.push_back({std::move(item), verdict_of(ok), std::move(detail)});
}

void skip(CheckReport& r, std::string item, std::string detail) {
    r.findings.push_back({std::move(item), Verdict::NotApplicable, std::move(detail)});
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::NotApplicable: return "n/a";
    }
    return "?";
}

bool CheckReport::passed() const { return count(Verdict::Fail) == 0; }

int CheckReport::count(Verdict v) const {
    return static_cast<int>(
        std::count_if(findings.begin(), findings.end(), [v](const Finding& f) { return f.verdict == v; }));
}

int canonical_model_gonality(const CurveAnalysis& a) {
    const auto& exps = a.canonical_exponents;
    const int k = std::accumulate(exps.begin(), exps.end(), 0, [](int x, int y) { return std::gcd(x, y); });
    std::vector<int> reduced;
    for (int b : exps)
        if (b != 0) reduced.push_back(b / k);
    if (reduced.empty()) return 1;
    return gonality(MonomialCurve(std::move(reduced)));
}

SurfaceRecord surface_record(const MonomialCurve& curve) {
    const CurveAnalysis a = analyze(curve);
    SurfaceRecord r;
    r.g = a.g;
    r.g_prime = a.g_prime;
    r.eta = a.eta;
    r.mu = a.mu;
    r.gon = a.gonality;
    r.gon_cprime = canonical_model_gonality(a);
    r.kunz = a.flags.kunz;
    r.almost_gorenstein = a.flags.almost_gorenstein;
    r.non_gorenstein_points = a.non_gorenstein_points;
    if (a.canonical_exponents.size() >= 2)
        for (const auto& s : scroll_structures(a.canonical_exponents, 2))
            r.structures.push_back({s.type().m(), s.ell});
    return r;
}

CheckReport check_theorem21(const SurfaceRecord& r) {
    CheckReport out;
    if (r.eta == 0 || r.g < 4) {
        skip(out, "all", r.eta == 0 ? "curve is Gorenstein" : "genus below 4");
        return out;
    }
    if (r.structures.empty()) skip(out, "structures", "C' lies on no surface scroll");

    for (const auto& s : r.structures) {
        const std::string tag = structure_tag(s);
        const int bound = s.m > 0 ? 3 : 2;
        add(out, "(i)", s.ell <= bound, tag + ", bound " + std::to_string(bound));

        // Monomial curves are rational, so only C' ≅ P^1 for m > 0 carries content.
        if (s.ell == 1 && s.m > 0) add(out, "(iv)", r.g_prime == 0, tag + ", g'=" + std::to_string(r.g_prime));

        if (s.ell == 2 && s.m > 0) add(out, "(v)(a)", r.mu == 1, tag + ", mu=" + std::to_string(r.mu));
        if (s.ell == 2 && s.m == 0)
            add(out, "(v)(b)", r.g - r.g_prime <= 3 && r.mu == 1,
                tag + ", g-g'=" + std::to_string(r.g - r.g_prime) + ", mu=" + std::to_string(r.mu));

        if (s.ell == 3) {
            add(out, "(vi)(a)", r.almost_gorenstein == r.kunz,
                tag + (r.kunz ? ", Kunz" : ", not Kunz") +
                    (r.almost_gorenstein ? ", almost Gorenstein" : ", not almost Gorenstein"));
            const bool kunz_one = r.kunz && r.non_gorenstein_points == 1;
            const bool ok = 3 * s.m >= r.g - 3 && (3 * s.m != r.g - 3 || kunz_one);
            add(out, "(vi)(b)", ok, tag + ", 3m=" + std::to_string(3 * s.m) + " vs g-3=" + std::to_string(r.g - 3));
        }

        if (s.m > 0) {
            add(out, "(ix)", r.gon_cprime <= s.ell, tag + ", gon(C')=" + std::to_string(r.gon_cprime));
            const long long rhs = static_cast<long long>(s.ell - 1) *
                                  ((2LL - r.g) * s.ell + 2LL * (2 * r.g - r.eta - 3));
            add(out, "smooth genus identity", 2LL * r.g_prime == rhs,
                tag + ", 2g'=" + std::to_string(2 * r.g_prime) + " vs " + std::to_string(rhs));
        } else {
            const long long lhs = static_cast<long long>(s.ell - 1) * (r.g - 2);
            add(out, "cone ell bound", lhs <= r.g - r.eta,
                tag + ", (ell-1)(g-2)=" + std::to_string(lhs) + " vs g-eta=" + std::to_string(r.g - r.eta));
        }
    }

    add(out, "(viii)", r.gon <= r.gon_cprime + r.g - r.g_prime,
        "gon=" + std::to_string(r.gon) + ", gon(C')+g-g'=" + std::to_string(r.gon_cprime + r.g - r.g_prime));
    return out;
}

long long threefold_residual(const ThreefoldRecord& r, long long u, long long v) {
    return (u - 4) * (2LL * r.g - 2 - r.eta) + r.eta + 2LL * r.mu + r.ell * (v + r.g - 5);
}

CheckReport check_theorem41(const ThreefoldRecord& r, long long u, long long v) {
    CheckReport out;
    if (r.g < 6 || r.ell < 1) {
        skip(out, "all", "needs g >= 6 and ell >= 1");
        return out;
    }
    const long long g = r.g, eta = r.eta, mu = r.mu, ell = r.ell;
    const long long g_prime = g - eta - mu;
    const long long residual = threefold_residual(r, u, v);
    {
        std::string detail = "residual " + std::to_string(residual);
        if (residual != 0) {
            const Rational forced = Rational(-(g - 5)) - Rational((u - 4) * (2 * g - 2 - eta) + eta + 2 * mu, ell);
            detail += ", forced v=" + forced.str();
        }
        add(out, "residual", residual == 0, detail);
    }

    const long long numerator = (u - 4) * (2 * g - 2 - eta) + eta + 2 * mu;
    if (v == -(g - 5)) {
        add(out, "(i)", ell == 2 && g_prime == 1, "v=-(g-5) forces ell=2 and g'=1");
    } else {
        add(out, "(i)", Rational(numerator, 5 - g - v) == Rational(ell),
            "ell formula gives " + Rational(numerator, 5 - g - v).str());
    }

    switch (r.ell) {
        case 1:
            add(out, "(ii)", g_prime == 0 && ((mu == 1) == (v == 2)),
                "g'=" + std::to_string(g_prime) + ", mu=" + std::to_string(mu) + ", v=" + std::to_string(v));
            break;
        case 2:
            if (g_prime == 1) {
                skip(out, "(iii)", "C' elliptic");
            } else {
                const bool shape = (g_prime == 0 && v == -(g - 4)) || v > -(g - 5);
                add(out, "(iii)", shape && ((mu == 1) == (v == 3 - eta)),
                    "v=" + std::to_string(v) + ", eta=" + std::to_string(eta) + ", mu=" + std::to_string(mu));
            }
            break;
        case 3: {
            const Rational expected = Rational(-(g - 5)) - Rational(eta + 2 * mu, 3);
            add(out, "(iv)", Rational(v) == expected && ((eta == 1) == (v == -(g - 4))),
                "v=" + std::to_string(v) + ", expected " + expected.str());
            break;
        }
        case 4: {
            const Rational first = Rational(-(g - 5)) - Rational(eta + 2 * mu, 4);
            // The second branch solves the residual with u = 5.
            const Rational second = Rational(-(g - 5)) - Rational(g + mu - 1, 2);
            bool ok = Rational(v) == first || Rational(v) == second;
            std::string detail = "v=" + std::to_string(v) + ", candidates " + first.str() + ", " + second.str();
            if (Rational(v) == first) {
                ok = ok && eta != 1;
                if (r.m) {
                    ok = ok && Rational(16 * *r.m) >= Rational(4 * (g - 5) + eta + 2 * mu);
                    detail += ", m=" + std::to_string(*r.m);
                }
            }
            add(out, "(v)", ok, detail);
            break;
        }
        default: {
            if (!r.m) {
                skip(out, "(vi)", "m unknown");
                break;
            }
            const double bound =
                (ell * (g - 5.0) + (std::sqrt(2.0 * ell) - 4.0) * (2.0 * g - 2.0 - eta) + eta + 2.0 * mu) /
                (ell * (ell + 1.0));
            add(out, "(vi)", *r.m >= bound - 1e-9,
                "m=" + std::to_string(*r.m) + ", bound " + std::to_string(bound));
        }
    }
    return out;
}

}  // namespace monoscroll
