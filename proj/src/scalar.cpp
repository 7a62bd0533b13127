#include "hopfgal/scalar.hpp"

namespace hopfgal {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::int64_t p) {
    if (!is_prime(p)) throw Error("field characteristic must be prime, got " + std::to_string(p));
    return Field{Kind::prime, p};
}

std::string Field::str() const {
    if (kind == Kind::rationals) return "Q";
    return "F" + std::to_string(p);
}

Scalar::Scalar(const Field& f, BigInt num, BigInt den) : field_(f), num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw Error("zero denominator");
    canonicalize();
}

void Scalar::canonicalize() {
    if (field_.is_prime_field()) {
        const BigInt p = field_.p;
        num_ %= p;
        if (num_ < 0) num_ += p;
        if (den_ != 1) {
            BigInt d = den_ % p;
            if (d < 0) d += p;
            if (d == 0) throw Error("denominator vanishes in " + field_.str());
            // small prime: invert by Fermat
            Scalar inv(field_, 1);
            Scalar base(field_, d);
            std::int64_t e = field_.p - 2;
            while (e > 0) {
                if (e & 1) inv = inv * base;
                base = base * base;
                e >>= 1;
            }
            den_ = 1;
            num_ = (num_ * inv.num_) % p;
        }
        return;
    }
    if (den_ < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    BigInt g = gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

void Scalar::require_same_field(const Scalar& o) const {
    if (field_ != o.field_) throw Error("field mismatch: " + field_.str() + " vs " + o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(o);
    return Scalar(field_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_field(o);
    return Scalar(field_, num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(o);
    return Scalar(field_, num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    require_same_field(o);
    if (o.is_zero()) throw Error("division by zero");
    return Scalar(field_, num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::operator-() const { return Scalar(field_, -num_, den_); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("inverse of zero");
    return Scalar(field_, den_, num_);
}

bool Scalar::operator==(const Scalar& o) const {
    return field_ == o.field_ && num_ == o.num_ && den_ == o.den_;
}

std::string Scalar::str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
}

}  // namespace hopfgal
