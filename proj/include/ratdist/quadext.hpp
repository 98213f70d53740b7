#pragma once

#include <optional>
#include <string>

#include "ratdist/numeric.hpp"

namespace ratdist {

// Element a + b*sqrt(d) of a real quadratic field, d squarefree > 1.
// A rational value carries d = 0 so it composes with any field; arithmetic
// between two values with different nonzero d throws MixedFieldError.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), d_(0) {}
    QuadExt(const Rational& a) : a_(a), b_(0), d_(0) {}
    QuadExt(long long a) : a_(a), b_(0), d_(0) {}      
    QuadExt(const Rational& a, const Rational& b, long long d) : a_(a), b_(b), d_(d) {
        if (b_ == 0) d_ = 0;
        if (d_ < 0 || d_ == 1) throw Error("QuadExt: d must be 0 (rational) or squarefree > 1");
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    long long d() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    // The rational part when is_rational(); throws otherwise.
    const Rational& rational() const {
        if (!is_rational()) throw Error("QuadExt: value is irrational");
        return a_;
    }

    bool is_zero() const { return a_ == 0 && b_ == 0; }

    QuadExt conj() const { return QuadExt(a_, -b_, d_); }
    Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; } // a^2 - d b^2
    Rational trace() const { return 2 * a_; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        if (x.b_ == 0 && y.b_ == 0) return x.a_ == y.a_;
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    friend QuadExt operator-(const QuadExt& x) { return QuadExt(-x.a_, -x.b_, x.d_); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        long long d = joint_d(x, y);
        return QuadExt(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }

    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        long long d = joint_d(x, y);
        return QuadExt(x.a_ * y.a_ + Rational(d) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d);
    }

    QuadExt inverse() const {
        Rational n = norm();
        if (n == 0) throw Error("QuadExt: division by zero");
        return QuadExt(a_ / n, -b_ / n, d_);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }

    QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
    QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
    QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
    QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }

    // Sign of the real value a + b*sqrt(d) under the embedding sqrt(d) > 0.
    int sign() const {
        if (b_ == 0) return sign_of(a_);
        if (a_ == 0) return sign_of(b_);
        int sa = sign_of(a_), sb = sign_of(b_);
        if (sa == sb) return sa;
        // compare a^2 with d b^2; sign decided by the larger magnitude side
        int c = sign_of(a_ * a_ - Rational(d_) * b_ * b_);
        return c == 0 ? 0 : c * sa;
    }

    std::string str() const {
        if (b_ == 0) return to_string(a_);
        std::string s;
        if (a_ != 0) s += to_string(a_);
        if (b_ == 1) {
            if (!s.empty()) s += "+";
        } else if (b_ == -1) {
            s += "-";
        } else {
            if (!s.empty() && b_ > 0) s += "+";
            s += to_string(b_);
            s += "*";
        }
        s += "sqrt" + std::to_string(d_);
        return s;
    }

private:
    static long long joint_d(const QuadExt& x, const QuadExt& y) {
        if (x.d_ == 0) return y.d_;
        if (y.d_ == 0 || y.d_ == x.d_) return x.d_;
        throw MixedFieldError("QuadExt: mixed fields sqrt" + std::to_string(x.d_) + " and sqrt" +
                              std::to_string(y.d_));
    }

    Rational a_, b_;
    long long d_;
};

inline QuadExt operator*(const Rational& c, const QuadExt& x) { return QuadExt(c) * x; }

} // namespace ratdist
