#include "ncborel/rational.hpp"

#include <ostream>
#include <sstream>

namespace ncborel {

namespace {

std::string rat_str(const BigRat& q) {
    std::ostringstream os;
    os << q;  // cpp_rational prints "n" or "n/d" with reduced terms
    return os.str();
}

// Prints one pure component: the rational part alone, or q*i for the
// imaginary part (with the usual 1*i -> i and -1*i -> -i contractions).
std::string imag_str(const BigRat& q) {
    if (q == 1) return "i";
    if (q == -1) return "-i";
    return rat_str(q) + "*i";
}

}  // namespace

std::string GaussianRational::str() const {
    if (im_ == 0) return rat_str(re_);
    if (re_ == 0) return imag_str(im_);
    std::string s = rat_str(re_);
    if (im_ > 0)
        s += " + " + imag_str(im_);
    else
        s += " - " + imag_str(-im_);
    return s;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& q) {
    return os << q.str();
}

BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned j = 2; j <= n; ++j) r *= j;
    return r;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned j = 1; j <= k; ++j) {
        r *= n - k + j;
        r /= j;  // exact at every step: r is C(n-k+j, j)
    }
    return r;
}

BigInt falling_factorial(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (unsigned j = 0; j < k; ++j) r *= n - j;
    return r;
}

}  // namespace ncborel
