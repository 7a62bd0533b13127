#pragma once

// Exact scalars: arbitrary-precision rationals and prime fields F_p.
// Every value is kept in canonical form (reduced fraction with positive
// denominator, or residue in [0,p)), so equality is bitwise and printing
// is reproducible.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hopfgal {

using BigInt = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct Field {
    enum class Kind { rationals, prime };

    Kind kind = Kind::rationals;
    std::int64_t p = 0;

    static Field rationals() { return Field{Kind::rationals, 0}; }
    static Field prime(std::int64_t p);

    bool is_prime_field() const { return kind == Kind::prime; }
    bool operator==(const Field& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string str() const;
};

class Scalar {
public:
    Scalar() : field_(Field::rationals()), num_(0), den_(1) {}
    Scalar(const Field& f, BigInt num, BigInt den = 1);

    static Scalar zero(const Field& f) { return Scalar(f, 0); }
    static Scalar one(const Field& f) { return Scalar(f, 1); }
    static Scalar of_int(const Field& f, std::int64_t n) { return Scalar(f, n); }

    const Field& field() const { return field_; }
    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

private:
    Field field_;
    BigInt num_;
    BigInt den_;  // 1 in prime fields; positive and coprime to num_ over Q

    void canonicalize();
    void require_same_field(const Scalar& o) const;
};

bool is_prime(std::int64_t n);

}  // namespace hopfgal
