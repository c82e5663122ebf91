#include "golod/coefficient.hpp"

#include "golod/errors.hpp"

namespace golod {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Coefficient Coefficient::prime_field(long p) {
    if (!is_prime(p)) throw Error("prime field characteristic " + std::to_string(p) + " is not prime");
    return {Kind::PrimeField, p};
}

Coefficient Coefficient::cyclic(long n) {
    if (n < 2) throw Error("cyclic ring modulus must be >= 2");
    return {Kind::CyclicRing, n};
}

Coefficient Coefficient::parse(const std::string& spec) {
    if (spec == "int" || spec == "Z") return integers();
    if (spec == "rat" || spec == "Q") return rationals();
    // the printed forms round-trip
    try {
        if (spec.rfind("F_", 0) == 0) return prime_field(std::stol(spec.substr(2)));
        if (spec.rfind("Z/", 0) == 0) return cyclic(std::stol(spec.substr(2)));
    } catch (const std::logic_error&) {
    }
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        const std::string head = spec.substr(0, colon), tail = spec.substr(colon + 1);
        try {
            long n = std::stol(tail);
            if (head == "f") return prime_field(n);
            if (head == "mod") return cyclic(n);
        } catch (const std::logic_error&) {
        }
    }
    throw Error("unrecognized coefficient '" + spec + "' (expected int|rat|f:p|mod:n)");
}

std::string Coefficient::to_string() const {
    switch (kind_) {
        case Kind::Integers:
            return "Z";
        case Kind::Rationals:
            return "Q";
        case Kind::PrimeField:
            return "F_" + std::to_string(n_);
        case Kind::CyclicRing:
            return "Z/" + std::to_string(n_);
    }
    return "?";
}

}  // namespace golod
