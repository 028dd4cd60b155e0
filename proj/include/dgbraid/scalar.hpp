#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace dgbraid {

using Rational = mpq_class;

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Exact scalar: a rational, or a rational polynomial in the deformation
/// parameter h truncated at h^order (order 2 or 3). order == 0 means a plain
/// rational with no truncation in play.
class Scalar {
  public:
    Scalar() : order_(0) {}
    Scalar(const Rational& r) : order_(0) { c_[0] = r; }
    Scalar(long n) : order_(0) { c_[0] = n; }
    Scalar(long num, long den) : order_(0) {
        if (den == 0) throw Error("Scalar: zero denominator");
        c_[0] = Rational(num, den);
        c_[0].canonicalize();
    }

    /// h as an element of Q[h]/(h^order); order must be 2 or 3.
    static Scalar hbar(int order) {
        if (order != 2 && order != 3) throw Error("Scalar::hbar: order must be 2 or 3");
        Scalar s;
        s.order_ = order;
        s.c_[1] = 1;
        return s;
    }

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }

    int order() const { return order_; }
    const Rational& coeff(int k) const { return c_[k]; }

    bool isZero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0; }
    bool isPlain() const { return c_[1] == 0 && c_[2] == 0; }

    Scalar operator-() const {
        Scalar r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    Scalar operator+(const Scalar& o) const {
        Scalar r;
        r.order_ = combine(order_, o.order_);
        for (int k = 0; k < 3; ++k) r.c_[k] = c_[k] + o.c_[k];
        r.truncate();
        return r;
    }

    Scalar operator-(const Scalar& o) const { return *this + (-o); }

    Scalar operator*(const Scalar& o) const {
        Scalar r;
        r.order_ = combine(order_, o.order_);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j + i < 3; ++j)
                if (c_[i] != 0 && o.c_[j] != 0) r.c_[i + j] += c_[i] * o.c_[j];
        r.truncate();
        return r;
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    /// Division by a plain nonzero rational.
    Scalar dividedBy(const Rational& r) const {
        if (r == 0) throw Error("Scalar: division by zero");
        Scalar out(*this);
        for (auto& x : out.c_) x /= r;
        return out;
    }

    bool operator==(const Scalar& o) const {
        return c_[0] == o.c_[0] && c_[1] == o.c_[1] && c_[2] == o.c_[2];
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Coefficient of h^k as a plain scalar.
    Scalar hComponent(int k) const { return Scalar(c_[k]); }

    /// Number of nonzero h-coefficients.
    int support() const {
        int n = 0;
        for (const auto& x : c_)
            if (x != 0) ++n;
        return n;
    }

    std::string str() const;

  private:
    static int combine(int a, int b) {
        if (a == 0) return b;
        if (b == 0) return a;
        return a < b ? a : b;
    }
    void truncate() {
        if (order_ > 0)
            for (int k = order_; k < 3; ++k) c_[k] = 0;
    }

    std::array<Rational, 3> c_{};  // coefficients of h^0, h^1, h^2
    int order_;
};

inline Scalar operator*(const Rational& r, const Scalar& s) { return Scalar(r) * s; }

inline std::string ratStr(const Rational& r) { return r.get_str(); }

inline std::string Scalar::str() const {
    if (isPlain()) return ratStr(c_[0]);
    std::string out = "(";
    bool first = true;
    for (int k = 0; k < 3; ++k) {
        if (c_[k] == 0) continue;
        if (!first) out += " + ";
        first = false;
        if (k == 0)
            out += ratStr(c_[k]);
        else {
            if (c_[k] != 1) out += ratStr(c_[k]) + "*";
            out += (k == 1) ? "h" : "h^2";
        }
    }
    if (first) out += "0";
    return out + ")";
}

}  // namespace dgbraid
