#pragma once

#include <string>

namespace golod {

// Coefficient system for (co)homology: Z, Q, F_p (p prime) or Z/n (n >= 2).
class Coefficient {
  public:
    enum class Kind { Integers, Rationals, PrimeField, CyclicRing };

    static Coefficient integers() { return {Kind::Integers, 0}; }
    static Coefficient rationals() { return {Kind::Rationals, 0}; }
    static Coefficient prime_field(long p);
    static Coefficient cyclic(long n);

    // Accepts "int", "rat", "f:p", "mod:n".
    static Coefficient parse(const std::string& spec);

    Kind kind() const { return kind_; }
    // 0 for Z and Q, p for F_p, n for Z/n.
    long modulus() const { return n_; }
    bool is_field() const { return kind_ == Kind::Rationals || kind_ == Kind::PrimeField; }

    std::string to_string() const;

    bool operator==(const Coefficient&) const = default;
    bool operator<(const Coefficient& o) const {
        return kind_ != o.kind_ ? kind_ < o.kind_ : n_ < o.n_;
    }

  private:
    Coefficient(Kind k, long n) : kind_(k), n_(n) {}
    Kind kind_;
    long n_;
};

bool is_prime(long p);

}  // namespace golod
