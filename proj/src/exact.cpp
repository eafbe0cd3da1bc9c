#include "pinwheel/exact.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <sstream>

namespace pinwheel {

namespace {

// Largest exponent any realistic computation reaches; alignment of two
// operands can at most add exponents of the inputs.
constexpr unsigned kMaxCachedPow5 = 256;

}  // namespace

const BigInt& pow5(unsigned k) {
    static const std::vector<BigInt> table = [] {
        std::vector<BigInt> t(kMaxCachedPow5 + 1);
        t[0] = 1;
        for (unsigned i = 1; i <= kMaxCachedPow5; ++i) t[i] = t[i - 1] * 5;
        return t;
    }();
    if (k > kMaxCachedPow5) throw std::overflow_error("pow5: exponent too large");
    return table[k];
}

std::size_t hash_bigint(const BigInt& v) {
    // FNV-1a over the limbs plus the sign.
    const auto& b = v.backend();
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t word) {
        h ^= word;
        h *= 1099511628211ull;
    };
    mix(v.sign() < 0 ? 0x5a5a5a5a5a5a5a5aull : 0x1ull);
    const auto* limbs = b.limbs();
    for (unsigned i = 0; i < b.size(); ++i) mix(static_cast<std::uint64_t>(limbs[i]));
    return h;
}

ExactScalar ExactScalar::make(BigInt num, unsigned two_exp, unsigned five_exp) {
    ExactScalar r;
    if (num.is_zero()) return r;
    if (two_exp > 0) {
        unsigned v2 = static_cast<unsigned>(boost::multiprecision::lsb(num));
        unsigned cancel = std::min(v2, two_exp);
        if (cancel > 0) {
            num >>= cancel;
            two_exp -= cancel;
        }
    }
    while (five_exp > 0) {
        BigInt q, rem;
        boost::multiprecision::divide_qr(num, BigInt(5), q, rem);
        if (!rem.is_zero()) break;
        num = std::move(q);
        --five_exp;
    }
    r.num_ = std::move(num);
    r.two_ = two_exp;
    r.five_ = five_exp;
    return r;
}

ExactScalar ExactScalar::operator-() const {
    ExactScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
    const unsigned two = std::max(two_, o.two_);
    const unsigned five = std::max(five_, o.five_);
    BigInt a = num_;
    if (two > two_) a <<= (two - two_);
    if (five > five_) a *= pow5(five - five_);
    BigInt b = o.num_;
    if (two > o.two_) b <<= (two - o.two_);
    if (five > o.five_) b *= pow5(five - o.five_);
    return make(a + b, two, five);
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const { return *this + (-o); }

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
    return make(num_ * o.num_, two_ + o.two_, five_ + o.five_);
}

std::strong_ordering ExactScalar::operator<=>(const ExactScalar& o) const {
    // Compare a/(2^a2 5^a5) with b/(2^b2 5^b5) by aligning denominators.
    const unsigned two = std::max(two_, o.two_);
    const unsigned five = std::max(five_, o.five_);
    BigInt a = num_;
    if (two > two_) a <<= (two - two_);
    if (five > five_) a *= pow5(five - five_);
    BigInt b = o.num_;
    if (two > o.two_) b <<= (two - o.two_);
    if (five > o.five_) b *= pow5(five - o.five_);
    if (a < b) return std::strong_ordering::less;
    if (a > b) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

double ExactScalar::to_double() const {
    double v = num_.convert_to<double>();
    if (two_ > 0) v = std::ldexp(v, -static_cast<int>(two_));
    if (five_ > 0) {
        unsigned k = five_;
        // 5^22 < 2^53, so chunks of 22 divide exactly.
        while (k > 22) {
            v /= pow5(22).convert_to<double>();
            k -= 22;
        }
        v /= pow5(k).convert_to<double>();
    }
    return v;
}

std::string ExactScalar::token() const {
    return num_.str() + ":" + std::to_string(two_) + ":" + std::to_string(five_);
}

ExactScalar ExactScalar::parse(const std::string& token) {
    const auto c1 = token.find(':');
    const auto c2 = token.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::invalid_argument("ExactScalar token must be n:a:b, got '" + token + "'");
    BigInt num(token.substr(0, c1));
    const unsigned long a = std::stoul(token.substr(c1 + 1, c2 - c1 - 1));
    const unsigned long b = std::stoul(token.substr(c2 + 1));
    return make(std::move(num), static_cast<unsigned>(a), static_cast<unsigned>(b));
}

ExactScalar ExactScalar::from_double(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("from_double: non-finite value");
    if (v == 0.0) return ExactScalar();
    int e = 0;
    const double f = std::frexp(v, &e);
    const auto m = static_cast<long long>(std::ldexp(f, 53));  // exact: 53-bit mantissa
    const int shift = e - 53;
    BigInt num(m);
    if (shift >= 0) return make(num << shift, 0, 0);
    return make(std::move(num), static_cast<unsigned>(-shift), 0);
}

std::size_t ExactScalar::hash() const {
    std::size_t h = hash_bigint(num_);
    h ^= (static_cast<std::size_t>(two_) * 0x9e3779b97f4a7c15ull) + (h << 6) + (h >> 2);
    h ^= (static_cast<std::size_t>(five_) * 0xc2b2ae3d27d4eb4full) + (h << 6) + (h >> 2);
    return h;
}

ExactPoint ExactPoint::parse(const std::string& token) {
    const auto semi = token.find(';');
    if (semi == std::string::npos)
        throw std::invalid_argument("ExactPoint token must be x;y, got '" + token + "'");
    return {ExactScalar::parse(token.substr(0, semi)), ExactScalar::parse(token.substr(semi + 1))};
}

std::size_t ExactPoint::hash() const {
    std::size_t h = x.hash();
    h ^= y.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

bool DistanceKey::operator<(const DistanceKey& o) const {
    // s1/(5^l1 4^r1) < s2/(5^l2 4^r2)  iff  s1 * 5^l2 4^r2 < s2 * 5^l1 4^r1
    BigInt lhs = s * pow5(o.ell);
    lhs <<= 2 * o.res;
    BigInt rhs = o.s * pow5(ell);
    rhs <<= 2 * res;
    if (lhs != rhs) return lhs < rhs;
    // Normalized keys with equal value are identical; keep the order total anyway.
    if (ell != o.ell) return ell < o.ell;
    return res < o.res;
}

double DistanceKey::to_double() const {
    double v = s.convert_to<double>();
    v = std::ldexp(v, -2 * static_cast<int>(res));
    unsigned k = ell;
    while (k > 22) {
        v /= pow5(22).convert_to<double>();
        k -= 22;
    }
    v /= pow5(k).convert_to<double>();
    return v;
}

double DistanceKey::radius() const { return std::sqrt(to_double()); }

std::size_t DistanceKey::hash() const {
    std::size_t h = hash_bigint(s);
    h ^= (static_cast<std::size_t>(ell) * 0x9e3779b97f4a7c15ull) + (h << 6) + (h >> 2);
    h ^= (static_cast<std::size_t>(res) * 0xc2b2ae3d27d4eb4full) + (h << 6) + (h >> 2);
    return h;
}

DistanceKey DistanceKey::from_squared(const ExactScalar& squared) {
    if (squared.sign() < 0) throw std::invalid_argument("from_squared: negative value");
    DistanceKey k;
    if (squared.is_zero()) return k;
    k.s = squared.num();
    k.ell = squared.five_exp();
    const unsigned t2 = squared.two_exp();
    k.res = (t2 + 1) / 2;
    if (t2 % 2 == 1) k.s <<= 1;  // denominator 2^(2res-1): keep one factor 2 in s
    return k;
}

DistanceKey squared_distance(const ExactPoint& p, const ExactPoint& q) {
    return DistanceKey::from_squared((p - q).squared_norm());
}

namespace {

struct GaussianInt {
    BigInt re;
    BigInt im;
};

// z / (2+i) = z * (2-i) / 5 when exact; counts how many times it divides.
long valuation_two_plus_i(GaussianInt z) {
    long v = 0;
    for (;;) {
        BigInt re2 = 2 * z.re + z.im;
        BigInt im2 = 2 * z.im - z.re;
        if (!(re2 % 5).is_zero() || !(im2 % 5).is_zero()) return v;
        z.re = re2 / 5;
        z.im = im2 / 5;
        ++v;
    }
}

long valuation_two_minus_i(GaussianInt z) {
    long v = 0;
    for (;;) {
        BigInt re2 = 2 * z.re - z.im;
        BigInt im2 = 2 * z.im + z.re;
        if (!(re2 % 5).is_zero() || !(im2 % 5).is_zero()) return v;
        z.re = re2 / 5;
        z.im = im2 / 5;
        ++v;
    }
}

}  // namespace

GaussianValuation gaussian_valuations(const ExactPoint& p) {
    if (p.is_zero()) throw std::invalid_argument("gaussian_valuations: zero point");
    // Write p = (m + i n) / (2^A 5^B).  Powers of 2 are units at 2+-i,
    // and v(5^B) = B at each of the two primes.
    const unsigned a = std::max(p.x.two_exp(), p.y.two_exp());
    const unsigned b = std::max(p.x.five_exp(), p.y.five_exp());
    GaussianInt z;
    z.re = p.x.num() * pow5(b - p.x.five_exp());
    z.re <<= (a - p.x.two_exp());
    z.im = p.y.num() * pow5(b - p.y.five_exp());
    z.im <<= (a - p.y.two_exp());
    return {valuation_two_plus_i(z) - static_cast<long>(b),
            valuation_two_minus_i(z) - static_cast<long>(b)};
}

RotationMembership rotation_membership(const ExactPoint& p) {
    const GaussianValuation v = gaussian_valuations(p);
    RotationMembership result;
    if (v.v_plus + v.v_minus < 0) return result;
    for (long n = -v.v_minus; n <= v.v_plus; ++n) {
        ExactPoint q = p;
        for (long i = 0; i < std::labs(n); ++i)
            q = (n > 0) ? q.rotate_theta_inverse() : q.rotate_theta();
        if (q.x.is_integer() && q.y.is_integer()) result.witnesses.push_back(n);
    }
    result.member = !result.witnesses.empty();
    return result;
}

int orientation(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c) {
    return cross(b - a, c - a).sign();
}

Containment point_in_triangle(const ExactPoint& p, const ExactPoint& a,
                              const ExactPoint& b, const ExactPoint& c) {
    const int tri = orientation(a, b, c);
    if (tri == 0) throw std::invalid_argument("point_in_triangle: degenerate triangle");
    const int o1 = orientation(a, b, p) * tri;
    const int o2 = orientation(b, c, p) * tri;
    const int o3 = orientation(c, a, p) * tri;
    if (o1 < 0 || o2 < 0 || o3 < 0) return Containment::outside;
    if (o1 == 0 || o2 == 0 || o3 == 0) return Containment::boundary;
    return Containment::inside;
}

}  // namespace pinwheel
