#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <sstream>
#include <string>

namespace slocc {

using Complex = std::complex<double>;
using Rational = boost::multiprecision::cpp_rational;

/// Exact complex number over the rationals. Field operations are exact;
/// magnitude-squared stays inside the field (no square roots).
class RationalComplex {
  public:
    RationalComplex() = default;
    RationalComplex(long v) : re_(v) {}  // NOLINT: implicit from integers is intended
    RationalComplex(Rational re, Rational im = Rational(0))
        : re_(std::move(re)), im_(std::move(im)) {}

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }

    RationalComplex conj() const { return {re_, -im_}; }
    Rational abs_sq() const { return re_ * re_ + im_ * im_; }

    RationalComplex operator-() const { return {-re_, -im_}; }

    RationalComplex& operator+=(const RationalComplex& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    RationalComplex& operator-=(const RationalComplex& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    RationalComplex& operator*=(const RationalComplex& o) {
        Rational re = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        return *this;
    }
    RationalComplex& operator/=(const RationalComplex& o) {
        Rational d = o.abs_sq();
        if (d == 0) {
            throw std::domain_error("RationalComplex: division by zero");
        }
        Rational re = (re_ * o.re_ + im_ * o.im_) / d;
        im_ = (im_ * o.re_ - re_ * o.im_) / d;
        re_ = std::move(re);
        return *this;
    }

    friend RationalComplex operator+(RationalComplex a, const RationalComplex& b) { return a += b; }
    friend RationalComplex operator-(RationalComplex a, const RationalComplex& b) { return a -= b; }
    friend RationalComplex operator*(RationalComplex a, const RationalComplex& b) { return a *= b; }
    friend RationalComplex operator/(RationalComplex a, const RationalComplex& b) { return a /= b; }

    friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const RationalComplex& a, const RationalComplex& b) { return !(a == b); }

    std::string str() const {
        std::ostringstream os;
        os << re_;
        if (im_ != 0) {
            os << (im_ < 0 ? " - " : " + ") << boost::multiprecision::abs(
                  boost::multiprecision::numerator(im_)) << "/"
           << boost::multiprecision::denominator(im_) << "i";
        }
        return os.str();
    }

  private:
    Rational re_{0};
    Rational im_{0};
};

/// Backend traits shared by all criterion code. Two backends exist:
/// std::complex<double> (float mode) and RationalComplex (exact mode).
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Complex> {
    static constexpr bool exact = false;
    using Real = double;

    static Complex conj(const Complex& x) { return std::conj(x); }
    static double abs_sq(const Complex& x) { return std::norm(x); }
    static Complex from_int(long v) { return Complex(static_cast<double>(v), 0.0); }
    static bool exactly_zero(const Complex& x) { return x.real() == 0.0 && x.imag() == 0.0; }
    static double magnitude(const Complex& x) { return std::abs(x); }
    static std::string str(const Complex& x) {
        std::ostringstream os;
        os.precision(17);
        os << x.real() << (x.imag() < 0 ? "" : "+") << x.imag() << "i";
        return os.str();
    }
};

template <>
struct ScalarTraits<RationalComplex> {
    static constexpr bool exact = true;
    using Real = Rational;

    static RationalComplex conj(const RationalComplex& x) { return x.conj(); }
    static Rational abs_sq(const RationalComplex& x) { return x.abs_sq(); }
    static RationalComplex from_int(long v) { return RationalComplex(v); }
    static bool exactly_zero(const RationalComplex& x) { return x.is_zero(); }
    static std::string str(const RationalComplex& x) { return x.str(); }
};

}  // namespace slocc
