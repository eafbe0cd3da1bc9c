#pragma once

// Exact arithmetic over the ring of rationals whose denominators are
// products of powers of 2 and 5, together with planar points, exact
// squared distances, and the Gaussian-integer valuations used for the
// rotated-lattice membership test.
//
// Every subdivision step of the pinwheel triangle introduces halves,
// fifths and tenths only, and control points introduce quarters, so
// this ring is closed under all geometry performed in this project.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pinwheel {

using BigInt = boost::multiprecision::cpp_int;

// Powers of 5 as BigInt, cached for exponent alignment.
const BigInt& pow5(unsigned k);

std::size_t hash_bigint(const BigInt& v);

// value = num / (2^two_exp * 5^five_exp)
//
// Normalized: two_exp > 0 implies num odd, five_exp > 0 implies 5 does
// not divide num, and zero is (0,0,0).
class ExactScalar {
public:
    ExactScalar() : num_(0), two_(0), five_(0) {}
    ExactScalar(long v) : num_(v), two_(0), five_(0) {}  // NOLINT: implicit by design
    ExactScalar(BigInt v) : num_(std::move(v)), two_(0), five_(0) {}

    static ExactScalar make(BigInt num, unsigned two_exp, unsigned five_exp);

    const BigInt& num() const { return num_; }
    unsigned two_exp() const { return two_; }
    unsigned five_exp() const { return five_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return two_ == 0 && five_ == 0; }
    int sign() const { return num_.sign(); }

    ExactScalar operator-() const;
    ExactScalar operator+(const ExactScalar& o) const;
    ExactScalar operator-(const ExactScalar& o) const;
    ExactScalar operator*(const ExactScalar& o) const;
    ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
    ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
    ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }

    // Division by the ring units 2 and 5 (and the powers thereof).
    ExactScalar div_pow2(unsigned k) const { return make(num_, two_ + k, five_); }
    ExactScalar div_pow5(unsigned k) const { return make(num_, two_, five_ + k); }
    ExactScalar half() const { return div_pow2(1); }

    bool operator==(const ExactScalar& o) const {
        return num_ == o.num_ && two_ == o.two_ && five_ == o.five_;
    }
    std::strong_ordering operator<=>(const ExactScalar& o) const;

    double to_double() const;

    // ASCII token "n:a:b" meaning n / (2^a * 5^b).
    std::string token() const;
    static ExactScalar parse(const std::string& token);

    // Exact conversion; every finite double is a dyadic rational.
    static ExactScalar from_double(double v);

    std::size_t hash() const;

private:
    BigInt num_;
    unsigned two_;
    unsigned five_;
};

inline ExactScalar operator*(long a, const ExactScalar& b) { return ExactScalar(a) * b; }

struct ExactPoint {
    ExactScalar x;
    ExactScalar y;

    ExactPoint() = default;
    ExactPoint(ExactScalar px, ExactScalar py) : x(std::move(px)), y(std::move(py)) {}

    bool operator==(const ExactPoint& o) const { return x == o.x && y == o.y; }

    ExactPoint operator+(const ExactPoint& o) const { return {x + o.x, y + o.y}; }
    ExactPoint operator-(const ExactPoint& o) const { return {x - o.x, y - o.y}; }
    ExactPoint operator-() const { return {-x, -y}; }

    ExactPoint div_pow2(unsigned k) const { return {x.div_pow2(k), y.div_pow2(k)}; }
    ExactPoint div_pow5(unsigned k) const { return {x.div_pow5(k), y.div_pow5(k)}; }

    bool is_zero() const { return x.is_zero() && y.is_zero(); }

    // Complex multiplication by 2+i: (x,y) -> (2x-y, x+2y).
    ExactPoint times_two_plus_i() const { return {2 * x - y, x + 2 * y}; }

    // R_theta for theta = 2*arctan(1/2): multiplication by (3+4i)/5.
    ExactPoint rotate_theta() const {
        return {(3 * x - 4 * y).div_pow5(1), (4 * x + 3 * y).div_pow5(1)};
    }
    ExactPoint rotate_theta_inverse() const {
        return {(3 * x + 4 * y).div_pow5(1), (3 * y - 4 * x).div_pow5(1)};
    }

    ExactScalar squared_norm() const { return x * x + y * y; }

    std::string token() const { return x.token() + ";" + y.token(); }
    static ExactPoint parse(const std::string& token);

    std::size_t hash() const;
};

inline ExactPoint operator*(long a, const ExactPoint& p) { return {a * p.x, a * p.y}; }

inline ExactScalar cross(const ExactPoint& a, const ExactPoint& b) {
    return a.x * b.y - a.y * b.x;
}
inline ExactScalar dot(const ExactPoint& a, const ExactPoint& b) {
    return a.x * b.x + a.y * b.y;
}

struct ExactPointHash {
    std::size_t operator()(const ExactPoint& p) const { return p.hash(); }
};

// Reduced squared distance s / (5^ell * 4^res).
//
// Normalized: 5 does not divide s when ell > 0, and s is not a multiple
// of 4 when res > 0 (an odd power of 2 in the reduced denominator keeps
// a single factor 2 in s instead).  The zero key is (0,0,0).
struct DistanceKey {
    BigInt s;
    unsigned ell = 0;
    unsigned res = 0;

    bool is_zero() const { return s.is_zero(); }

    bool operator==(const DistanceKey& o) const {
        return s == o.s && ell == o.ell && res == o.res;
    }
    // Orders by the represented rational value.
    bool operator<(const DistanceKey& o) const;

    double to_double() const;
    double radius() const;

    std::size_t hash() const;

    static DistanceKey from_squared(const ExactScalar& squared);
};

struct DistanceKeyHash {
    std::size_t operator()(const DistanceKey& k) const { return k.hash(); }
};

DistanceKey squared_distance(const ExactPoint& p, const ExactPoint& q);

// Signed valuations of a point, read as the complex number x+iy, at the
// conjugate Gaussian primes 2+i and 2-i.  Their sum is the 5-adic
// valuation of |p|^2.
struct GaussianValuation {
    long v_plus;
    long v_minus;
};

// Requires p != 0 and x,y free of powers of 2 in the denominator is NOT
// required; the valuations ignore the prime 1+i entirely.
GaussianValuation gaussian_valuations(const ExactPoint& p);

// All n with p in R_{n*theta} Z^2.  The candidate interval
// [-v_minus, v_plus] comes from the valuations; every candidate is
// verified by exact application of R_theta^{-n} before being returned.
struct RotationMembership {
    bool member = false;
    std::vector<long> witnesses;  // ascending; empty iff !member
};

RotationMembership rotation_membership(const ExactPoint& p);

// Sign of (b-a) x (c-a).
int orientation(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c);

enum class Containment { inside, boundary, outside };

// Exact classification via three orientation tests. Throws on a
// degenerate triangle.
Containment point_in_triangle(const ExactPoint& p, const ExactPoint& a,
                              const ExactPoint& b, const ExactPoint& c);

}  // namespace pinwheel

template <>
struct std::hash<pinwheel::ExactPoint> {
    std::size_t operator()(const pinwheel::ExactPoint& p) const { return p.hash(); }
};
