#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <iosfwd>
#include <string>

#include "ncborel/errors.hpp"

namespace ncborel {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Exact element of Q(i): re + im*i with arbitrary-precision rational parts.
///
/// cpp_rational keeps every component reduced with a positive denominator,
/// so equality is plain componentwise comparison and no separate
/// normalization step is ever needed.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long n) : re_(n), im_(0) {}  // implicit: integer literals
    GaussianRational(BigInt n) : re_(std::move(n)), im_(0) {}
    GaussianRational(BigRat re) : re_(std::move(re)), im_(0) {}
    GaussianRational(BigRat re, BigRat im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return GaussianRational(BigRat(0), BigRat(1)); }
    static GaussianRational ratio(long num, long den) {
        return GaussianRational(BigRat(num, den));
    }

    const BigRat& re() const { return re_; }
    const BigRat& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    /// Squared modulus re^2 + im^2 (a nonnegative rational).
    BigRat norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ * b.re_ - a.im_ * b.im_,
                                a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        if (b.is_zero()) throw DivisionError("division by zero in Q(i)");
        const BigRat n = b.norm();
        // a / b = a * conj(b) / |b|^2
        return GaussianRational((a.re_ * b.re_ + a.im_ * b.im_) / n,
                                (a.im_ * b.re_ - a.re_ * b.im_) / n);
    }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    bool operator==(const GaussianRational& o) const = default;

    /// Deterministic total order (lexicographic on (re, im)); used only to
    /// keep containers and printed output stable, it has no algebraic meaning.
    bool operator<(const GaussianRational& o) const {
        if (re_ != o.re_) return re_ < o.re_;
        return im_ < o.im_;
    }

    /// Render as parseable source text, e.g. "3", "-1/2", "i", "2*i", "1 + i".
    /// Mixed real/imaginary values are emitted as a sum and need enclosing
    /// parentheses when used as a factor; callers handle that.
    std::string str() const;

private:
    BigRat re_;
    BigRat im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& q);

/// n! as an exact integer.
BigInt factorial(unsigned n);

/// Binomial coefficient C(n, k) as an exact integer (0 when k > n).
BigInt binomial(unsigned n, unsigned k);

/// Falling factorial n * (n-1) * ... * (n-k+1), the number of ordered
/// k-selections from n items (0 when k > n).
BigInt falling_factorial(unsigned n, unsigned k);

}  // namespace ncborel
