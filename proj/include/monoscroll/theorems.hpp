#ifndef MONOSCROLL_THEOREMS_HPP
#define MONOSCROLL_THEOREMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "monoscroll/curve.hpp"

namespace monoscroll {

enum class Verdict { Pass, Fail, NotApplicable };
std::string to_string(Verdict v);

struct Finding {
    std::string item;
    Verdict verdict = Verdict::NotApplicable;
    std::string detail;
};

struct CheckReport {
    std::vector<Finding> findings;

    bool passed() const;  ///< no Fail verdict
    int count(Verdict v) const;
};

/// One surface scroll carrying the canonical model: smallest dim m and ℓ.
struct SurfaceStructure {
    int m = 0;
    int ell = 1;
};

struct SurfaceRecord {
    int g = 0;
    int g_prime = 0;
    int eta = 0;
    int mu = 0;
    int gon = 0;
    int gon_cprime = 0;
    bool kunz = false;
    bool almost_gorenstein = false;
    int non_gorenstein_points = 0;
    std::vector<SurfaceStructure> structures;
};

/// Gonality of the canonical model C′, seen as the monomial curve on the
/// canonical exponents divided by their gcd.
int canonical_model_gonality(const CurveAnalysis& a);

/// Record for the surface checks, taking every d = 2 structure of C′.
SurfaceRecord surface_record(const MonomialCurve& curve);

/// Per-structure verdicts on the surface-scroll statements and the two
/// genus identities. Gorenstein input or g < 4 yields NotApplicable only.
CheckReport check_theorem21(const SurfaceRecord& r);

struct ThreefoldRecord {
    int g = 0;
    int eta = 0;
    int mu = 0;
    int ell = 1;
    std::optional<int> m;
};

/// (u − 4)(2g − 2 − η) + η + 2μ + ℓ(v + g − 5); zero for every (u, v)-type canonical model.
long long threefold_residual(const ThreefoldRecord& r, long long u, long long v);

CheckReport check_theorem41(const ThreefoldRecord& r, long long u, long long v);

}  // namespace monoscroll

#endif  // MONOSCROLL_THEOREMS_HPP
