#include "monoscroll/chow.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "monoscroll/error.hpp"

namespace monoscroll {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

Rational q(long long num, long long den = 1) { return Rational(num, den); }

Integer to_integer(const Rational& r, ErrorKind kind, const char* what) {
    if (denominator(r) != 1) throw Error(kind, std::string(what) + " is not an integer: " + r.str());
    return numerator(r);
}

Integer binomial(const Integer& n, int k) {
    if (k < 0 || n < k) return 0;
    Integer out = 1;
    for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
    return out;
}

void require_smooth(const Ambient& a) {
    if (!a.smooth()) throw Error(ErrorKind::InvalidArgument, a.to_string() + " is a cone");
}

void require_dimension(const Ambient& a, std::initializer_list<int> allowed) {
    if (std::find(allowed.begin(), allowed.end(), a.d()) == allowed.end())
        throw Error(ErrorKind::UnsupportedDimension, "closed form not available for d = " + std::to_string(a.d()),
                    a.d());
}

// t_n in x/(1 − e^{−x}) = Σ t_n x^n, i.e. (−1)^n B_n / n! with B_1 = −1/2.
std::vector<Rational> todd_series(int degree) {
    std::vector<Rational> bernoulli(static_cast<std::size_t>(degree + 1));
    bernoulli[0] = 1;
    for (int m = 1; m <= degree; ++m) {
        Rational acc = 0;
        for (int k = 0; k < m; ++k)
            acc += Rational(binomial(m + 1, k)) * bernoulli[static_cast<std::size_t>(k)];
        bernoulli[static_cast<std::size_t>(m)] = -acc / (m + 1);
    }
    std::vector<Rational> out;
    Integer factorial = 1;
    for (int n = 0; n <= degree; ++n) {
        if (n > 0) factorial *= n;
        Rational t = bernoulli[static_cast<std::size_t>(n)] / Rational(factorial);
        out.push_back(n % 2 ? -t : t);
    }
    return out;
}

ChowElement series_of(const ChowElement& x, const std::vector<Rational>& coeffs) {
    ChowElement out(x.d(), x.e());
    ChowElement power = ChowElement::one(x.d(), x.e());
    for (const auto& c : coeffs) {
        out = out + power * c;
        power = power * x;
    }
    return out;
}

// Σ_{|k| = total} max(0, offset + Σ k_i m_i + 1) over multi-indices k ≥ 0.
Integer pushforward_h0(const std::vector<int>& dims, std::size_t from, long long total, const Integer& offset) {
    if (from + 1 == dims.size()) {
        const Integer deg = offset + Integer(total) * dims[from];
        return deg >= -1 ? deg + 1 : Integer(0);
    }
    Integer sum = 0;
    for (long long k = 0; k <= total; ++k)
        sum += pushforward_h0(dims, from + 1, total - k, offset + Integer(k) * dims[from]);
    return sum;
}

}  // namespace

Ambient::Ambient(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw Error(ErrorKind::InvalidArgument, "a scroll needs at least one dimension");
    if (std::any_of(dims_.begin(), dims_.end(), [](int m) { return m < 0; }))
        throw Error(ErrorKind::InvalidArgument, "scroll dims must be non-negative");
    std::sort(dims_.begin(), dims_.end());
    e_ = std::accumulate(dims_.begin(), dims_.end(), 0);
}

Ambient Ambient::balanced(int d, int e) {
    if (d < 1 || e < 0) throw Error(ErrorKind::InvalidArgument, "need d >= 1 and e >= 0");
    std::vector<int> dims(static_cast<std::size_t>(d), e / d);
    for (int i = 0; i < e % d; ++i) ++dims[static_cast<std::size_t>(d - 1 - i)];
    return Ambient(std::move(dims));
}

std::string Ambient::to_string() const {
    std::ostringstream out;
    out << "S_{";
    for (std::size_t i = 0; i < dims_.size(); ++i) out << (i ? "," : "") << dims_[i];
    out << '}';
    return out.str();
}

ChowElement::ChowElement(int d, int e)
    : d_(d), e_(e), plain_(static_cast<std::size_t>(d)), fiber_(static_cast<std::size_t>(d)) {
    if (d < 1) throw Error(ErrorKind::InvalidArgument, "Chow ring needs d >= 1", d);
}

ChowElement ChowElement::one(int d, int e) {
    ChowElement x(d, e);
    x.plain_[0] = 1;
    return x;
}

ChowElement ChowElement::hyperplane(int d, int e) {
    ChowElement x(d, e);
    if (d >= 2)
        x.plain_[1] = 1;
    else
        x.fiber_[0] = e;  // H = e F on P^1
    return x;
}

ChowElement ChowElement::fiber(int d, int e) {
    ChowElement x(d, e);
    x.fiber_[0] = 1;
    return x;
}

ChowElement ChowElement::of(const Ambient& a, const DivisorClass& c) {
    return hyperplane(a.d(), a.e()) * Rational(c.h) + fiber(a.d(), a.e()) * Rational(c.f);
}

const Rational& ChowElement::coefficient(int i, bool fiber) const {
    return (fiber ? fiber_ : plain_).at(static_cast<std::size_t>(i));
}

ChowElement ChowElement::graded(int k) const {
    ChowElement out(d_, e_);
    if (k >= 0 && k < d_) out.plain_[static_cast<std::size_t>(k)] = plain_[static_cast<std::size_t>(k)];
    if (k >= 1 && k <= d_) out.fiber_[static_cast<std::size_t>(k - 1)] = fiber_[static_cast<std::size_t>(k - 1)];
    return out;
}

bool ChowElement::is_zero() const {
    auto zero = [](const Rational& r) { return r == 0; };
    return std::all_of(plain_.begin(), plain_.end(), zero) && std::all_of(fiber_.begin(), fiber_.end(), zero);
}

Rational ChowElement::top_degree() const {
    if (!(*this - graded(d_)).is_zero())
        throw Error(ErrorKind::NotTopDimensional, "class " + to_string() + " is not of codimension d");
    return top_part_degree();
}

void ChowElement::check_compatible(const ChowElement& o) const {
    if (d_ != o.d_ || e_ != o.e_) throw Error(ErrorKind::InvalidArgument, "Chow elements of different scrolls");
}

ChowElement ChowElement::operator+(const ChowElement& o) const {
    check_compatible(o);
    ChowElement out(*this);
    for (int i = 0; i < d_; ++i) {
        out.plain_[static_cast<std::size_t>(i)] += o.plain_[static_cast<std::size_t>(i)];
        out.fiber_[static_cast<std::size_t>(i)] += o.fiber_[static_cast<std::size_t>(i)];
    }
    return out;
}

ChowElement ChowElement::operator-(const ChowElement& o) const { return *this + o * Rational(-1); }

ChowElement ChowElement::operator*(const Rational& s) const {
    ChowElement out(*this);
    for (auto& c : out.plain_) c *= s;
    for (auto& c : out.fiber_) c *= s;
    return out;
}

ChowElement ChowElement::operator*(const ChowElement& o) const {
    check_compatible(o);
    ChowElement out(d_, e_);
    const auto d = static_cast<std::size_t>(d_);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            // H^i · H^k, using H^d = e H^{d−1} F
            const Rational pp = plain_[i] * o.plain_[k];
            if (pp != 0) {
                if (i + k < d)
                    out.plain_[i + k] += pp;
                else if (i + k == d)
                    out.fiber_[d - 1] += pp * e_;
            }
            // H^i · H^k F and H^i F · H^k; F² = 0, H^d F = 0
            const Rational pf = plain_[i] * o.fiber_[k] + fiber_[i] * o.plain_[k];
            if (pf != 0 && i + k < d) out.fiber_[i + k] += pf;
        }
    return out;
}

std::string ChowElement::to_string() const {
    std::ostringstream out;
    bool first = true;
    auto term = [&](const Rational& c, int i, bool f) {
        if (c == 0) return;
        out << (first ? "" : " + ") << c.str();
        if (i > 0) out << "*H^" << i;
        if (f) out << "*F";
        first = false;
    };
    for (int i = 0; i < d_; ++i) term(plain_[static_cast<std::size_t>(i)], i, false);
    for (int i = 0; i < d_; ++i) term(fiber_[static_cast<std::size_t>(i)], i, true);
    if (first) out << '0';
    return out.str();
}

ChowProduct chow_mul_degree(const Ambient& a, const ChowElement& x, const ChowElement& y) {
    require_smooth(a);
    ChowElement p = x * y;
    std::optional<Rational> degree;
    if ((p - p.graded(a.d())).is_zero()) degree = p.top_part_degree();
    return {std::move(p), degree};
}

Integer h0_closed_form(const Ambient& a, const DivisorClass& c) {
    return (c.f + 1) * binomial(c.h + a.d() - 1, a.d() - 1) + Integer(a.e()) * binomial(c.h + a.d() - 1, a.d());
}

H0Result h0_class(const Ambient& a, const DivisorClass& c) {
    require_smooth(a);
    if (c.h < 0) return {0, false};
    const Integer m1 = a.dims().front();
    const bool vanishing = c.f >= -(c.h * m1 + 1);
    if (vanishing) return {h0_closed_form(a, c), true};
    if (c.h > 100'000) throw Error(ErrorKind::BoundExceeded, "h too large for the push-forward sum");
    return {pushforward_h0(a.dims(), 0, static_cast<long long>(c.h), c.f), false};
}

DivisorClass canonical_class(const Ambient& a) {
    require_smooth(a);
    return {-a.d(), a.e() - 2};
}

Integer euler_characteristic(const Ambient& a, const DivisorClass& c) {
    require_dimension(a, {2, 3});
    const Rational h(c.h), f(c.f), e(a.e());
    Rational chi;
    if (a.d() == 2) {
        chi = 1 + h + f + h * f + h * e / 2 + h * h * e / 2;
    } else {
        chi = 1 + (2 * e + 9) / 6 * h + f + (e + 1) / 2 * h * h + q(3, 2) * h * f + e / 6 * h * h * h +
              q(1, 2) * h * h * f;
    }
    return to_integer(chi, ErrorKind::PathsDisagree, "Euler characteristic");
}

ChowElement tangent_c1(const Ambient& a) {
    require_dimension(a, {2, 3});
    return ChowElement::of(a, {a.d(), 2 - a.e()});
}

ChowElement tangent_c2(const Ambient& a) {
    require_dimension(a, {2, 3});
    const ChowElement h = ChowElement::hyperplane(a.d(), a.e());
    const ChowElement f = ChowElement::fiber(a.d(), a.e());
    if (a.d() == 2) return h * f * q(4);
    return h * h * q(3) + h * f * Rational(6 - 2 * a.e());
}

ChowElement tangent_total_chern(const Ambient& a) {
    const int d = a.d(), e = a.e();
    const ChowElement one = ChowElement::one(d, e);
    const ChowElement h = ChowElement::hyperplane(d, e);
    const ChowElement f = ChowElement::fiber(d, e);
    ChowElement total = one + f * q(2);
    for (int m : a.dims()) total = total * (one + h - f * Rational(m));
    return total;
}

ChowElement todd_class(const Ambient& a) {
    const int d = a.d(), e = a.e();
    const auto series = todd_series(d);
    const ChowElement h = ChowElement::hyperplane(d, e);
    const ChowElement f = ChowElement::fiber(d, e);
    ChowElement td = series_of(f * q(2), series);
    for (int m : a.dims()) td = td * series_of(h - f * Rational(m), series);
    return td;
}

Rational riemann_roch_chi(const Ambient& a, const DivisorClass& c) {
    require_smooth(a);
    const int d = a.d(), e = a.e();
    const ChowElement c1 = tangent_c1(a);
    const ChowElement c2 = tangent_c2(a);
    ChowElement td = ChowElement::one(d, e) + c1 * q(1, 2) + (c1 * c1 + c2) * q(1, 12);
    if (d == 3) td = td + c1 * c2 * q(1, 24);

    const ChowElement divisor = ChowElement::of(a, c);
    ChowElement ch(d, e);
    ChowElement power = ChowElement::one(d, e);
    Integer factorial = 1;
    for (int k = 0; k <= d; ++k) {
        if (k > 0) factorial *= k;
        ch = ch + power * (Rational(1) / Rational(factorial));
        power = power * divisor;
    }
    return (ch * td).top_part_degree();
}

Integer bundle_chi_dual(const Ambient& a, const RankTwoBundleClass& b) {
    require_dimension(a, {3});
    const Rational e(a.e()), u(b.u), v(b.v), w(b.w), z(b.z);
    const Rational chi = 2 - (2 * e + 9) / 6 * u - v - (e + 1) * w - q(3, 2) * z + (e + 1) / 2 * u * u +
                         q(3, 2) * u * v + e / 2 * u * w + q(1, 2) * u * z + q(1, 2) * v * w -
                         e / 6 * u * u * u - q(1, 2) * u * u * v;
    return to_integer(chi, ErrorKind::NonIntegralGenus, "chi(E^dual)");
}

PaPaths pa_paths(const Ambient& a, const RankTwoBundleClass& b) {
    require_dimension(a, {3});
    require_smooth(a);
    const Rational e(a.e()), u(b.u), v(b.v), w(b.w), z(b.z);
    PaPaths out;

    // χ(E^∨) is evaluated over Q here so non-integral input reaches the final check.
    const Rational chi_dual = 2 - (2 * e + 9) / 6 * u - v - (e + 1) * w - q(3, 2) * z + (e + 1) / 2 * u * u +
                              q(3, 2) * u * v + e / 2 * u * w + q(1, 2) * u * z + q(1, 2) * v * w -
                              e / 6 * u * u * u - q(1, 2) * u * u * v;
    const Rational chi_det = Rational(euler_characteristic(a, {-b.u, -b.v}));
    out.resolution = chi_dual - chi_det;

    out.closed_form = 1 + ((e * (u - 2) + v - 2) * w + (u - 3) * z) / 2;

    const Rational degree = w * e + z;
    const Rational n(a.ambient_dimension());
    out.linear_form = 1 + ((u - 3) * degree + w * (v + n - 4)) / 2;

    const int d = a.d(), ei = a.e();
    const ChowElement h = ChowElement::hyperplane(d, ei);
    const ChowElement f = ChowElement::fiber(d, ei);
    const ChowElement c2 = h * h * w + h * f * z;
    const DivisorClass k = canonical_class(a);
    const ChowElement k_plus_c1 = ChowElement::of(a, {k.h + b.u, k.f + b.v});
    out.chow_ring = 1 + (c2 * k_plus_c1).top_degree() / 2;
    return out;
}

Integer pa_from_bundle(const Ambient& a, const RankTwoBundleClass& b) {
    if (b.w < 1) throw Error(ErrorKind::InvalidArgument, "need w = ell >= 1");
    const PaPaths p = pa_paths(a, b);
    if (p.resolution != p.closed_form || p.closed_form != p.linear_form || p.linear_form != p.chow_ring)
        throw Error(ErrorKind::PathsDisagree, "p_a paths disagree: " + p.resolution.str() + ", " +
                                                  p.closed_form.str() + ", " + p.linear_form.str() + ", " +
                                                  p.chow_ring.str());
    return to_integer(p.closed_form, ErrorKind::NonIntegralGenus, "p_a");
}

Integer genus_on_surface(const Integer& deg, const Integer& n, const Integer& ell, SurfaceMode mode) {
    if (deg < 1 || n < 3) throw Error(ErrorKind::InvalidArgument, "need deg >= 1 and N >= 3");
    if (mode == SurfaceMode::Smooth) {
        if (ell < 1) throw Error(ErrorKind::InvalidArgument, "need ell >= 1 on a smooth scroll");
        const Integer twice = (2 * ell - 2) * deg - (n - 1) * ell * ell + (n - 3) * ell;
        if (twice % 2 != 0)
            throw Error(ErrorKind::NonIntegralGenus, "2p_a - 2 = " + twice.str() + " is odd");
        return twice / 2 + 1;
    }
    const Integer qv = (deg + n - 2) / (n - 1);  // ⌈deg/(N − 1)⌉
    return (qv - 1) * (deg - 1) - qv * (qv - 1) * (n - 1) / 2;
}

}  // namespace monoscroll
