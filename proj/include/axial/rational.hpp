#pragma once

// Exact rationals. Values that fit in int64 are kept inline; anything larger
// lives in a shared GMP rational. Every value is reduced with a positive
// denominator, and a value is never big when it would fit in the small form.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>

namespace axial {

class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n) {}
    Rational(int n) : num_(n) {}
    Rational(long long n, long long d) { assign128(n, d); }

    static Rational from_mpq(const mpq_class& q) {
        Rational r;
        r.set_big(q);
        return r;
    }

    // Accepts "p", "-p", "p/q".
    static Rational parse(const std::string& s) {
        try {
            mpq_class q(s, 10);
            if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
            q.canonicalize();
            return from_mpq(q);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("not a rational: '" + s + "'");
        }
    }

    bool is_big() const { return static_cast<bool>(big_); }
    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
    int sign() const {
        if (big_) return sgn(*big_);
        return (num_ > 0) - (num_ < 0);
    }

    mpq_class to_mpq() const {
        if (big_) return *big_;
        mpq_class q;
        mpz_class n, d;
        set_z(n, num_);
        set_z(d, den_);
        q.get_num() = n;
        q.get_den() = d;
        return q;
    }

    std::string numerator_str() const { return big_ ? big_->get_num().get_str() : std::to_string(num_); }
    std::string denominator_str() const { return big_ ? big_->get_den().get_str() : std::to_string(den_); }

    std::string str() const {
        if (is_integer()) return numerator_str();
        return numerator_str() + "/" + denominator_str();
    }

    // Only meaningful when the value is small.
    long long small_num() const { return num_; }
    long long small_den() const { return den_; }

    Rational operator-() const {
        if (big_) return from_mpq(-*big_);
        if (num_ == INT64_MIN) return from_mpq(-to_mpq());
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            if (a.den_ == 1 && b.den_ == 1) {
                long long s;
                if (!__builtin_add_overflow(a.num_, b.num_, &s)) return Rational(s);
            }
            __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
            __int128 d = static_cast<__int128>(a.den_) * b.den_;
            Rational r;
            r.assign128(n, d);
            return r;
        }
        return from_mpq(a.to_mpq() + b.to_mpq());
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    friend Rational operator*(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            if (a.num_ == 0 || b.num_ == 0) return Rational();
            if (a.den_ == 1 && b.den_ == 1) {
                long long p;
                if (!__builtin_mul_overflow(a.num_, b.num_, &p)) return Rational(p);
            }
            long long g1 = gcd64(a.num_, b.den_);
            long long g2 = gcd64(b.num_, a.den_);
            __int128 n = static_cast<__int128>(a.num_ / g1) * (b.num_ / g2);
            __int128 d = static_cast<__int128>(a.den_ / g2) * (b.den_ / g1);
            Rational r;
            r.assign_reduced128(n, d);
            return r;
        }
        return from_mpq(a.to_mpq() * b.to_mpq());
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("division by zero");
        return a * b.reciprocal();
    }

    Rational reciprocal() const {
        if (is_zero()) throw std::domain_error("division by zero");
        if (big_) return from_mpq(1 / *big_);
        Rational r;
        r.assign128(den_, num_);
        return r;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
        if (a.big_ && b.big_) return *a.big_ == *b.big_;
        return false;  // canonical: a big value never equals a small one
    }

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            if (a.den_ == b.den_) return a.num_ <=> b.num_;
            __int128 l = static_cast<__int128>(a.num_) * b.den_;
            __int128 r = static_cast<__int128>(b.num_) * a.den_;
            return l < r ? std::strong_ordering::less : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
        }
        int c = cmp(a.to_mpq(), b.to_mpq());
        return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    // Largest integer not exceeding the value.
    Rational floor() const {
        if (!big_) {
            long long q = num_ / den_;
            if (num_ % den_ != 0 && num_ < 0) --q;
            return Rational(q);
        }
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), big_->get_num_mpz_t(), big_->get_den_mpz_t());
        return from_mpq(mpq_class(f));
    }

    std::size_t hash() const {
        if (!big_) {
            std::size_t h = std::hash<long long>()(num_);
            return h ^ (std::hash<long long>()(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
        }
        return std::hash<std::string>()(big_->get_str());
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    long long num_ = 0;
    long long den_ = 1;
    std::shared_ptr<const mpq_class> big_;

    static long long gcd64(long long a, long long b) {
        unsigned long long x = a < 0 ? 0ULL - static_cast<unsigned long long>(a) : a;
        unsigned long long y = b < 0 ? 0ULL - static_cast<unsigned long long>(b) : b;
        while (y) {
            unsigned long long t = x % y;
            x = y;
            y = t;
        }
        return x == 0 ? 1 : static_cast<long long>(x);
    }

    static unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
        while (b) {
            unsigned __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static void set_z(mpz_class& z, __int128 v) {
        bool neg = v < 0;
        unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
        unsigned long hi = static_cast<unsigned long>(u >> 64);
        unsigned long lo = static_cast<unsigned long>(u);
        z = hi;
        z <<= 64;
        z += lo;
        if (neg) z = -z;
    }

    static bool fits(__int128 v) { return v >= INT64_MIN && v <= INT64_MAX; }

    void assign128(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        unsigned __int128 an = n < 0 ? -static_cast<unsigned __int128>(n) : static_cast<unsigned __int128>(n);
        unsigned __int128 g = gcd128(an, static_cast<unsigned __int128>(d));
        if (g > 1) {
            n /= static_cast<__int128>(g);
            d /= static_cast<__int128>(g);
        }
        assign_reduced128(n, d);
    }

    void assign_reduced128(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (fits(n) && fits(d)) {
            num_ = static_cast<long long>(n);
            den_ = static_cast<long long>(d);
            big_.reset();
            return;
        }
        mpz_class zn, zd;
        set_z(zn, n);
        set_z(zd, d);
        mpq_class q(zn, zd);
        q.canonicalize();
        set_big(q);
    }

    void set_big(const mpq_class& q) {
        if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
            num_ = q.get_num().get_si();
            den_ = q.get_den().get_si();
            big_.reset();
            return;
        }
        num_ = 0;
        den_ = 1;
        big_ = std::make_shared<const mpq_class>(q);
    }
};

}  // namespace axial

template <>
struct std::hash<axial::Rational> {
    std::size_t operator()(const axial::Rational& r) const { return r.hash(); }
};
