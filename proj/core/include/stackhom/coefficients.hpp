#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace stackhom {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Error type for all contract violations in the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

enum class CoeffKind { Integers, Rationals, PrimeField };

/// The coefficient ring: Z, Q, or F_p for a prime p.
/// Determines arithmetic semantics everywhere downstream.
class Coefficients {
public:
    static Coefficients integers() { return Coefficients(CoeffKind::Integers, 0); }
    static Coefficients rationals() { return Coefficients(CoeffKind::Rationals, 0); }
    static Coefficients prime_field(long p);

    CoeffKind kind() const { return kind_; }
    long prime() const;
    bool is_field() const { return kind_ != CoeffKind::Integers; }

    /// "Z", "Q", or "F<p>".
    std::string label() const;

    bool operator==(const Coefficients& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Coefficients& o) const { return !(*this == o); }

private:
    Coefficients(CoeffKind k, long p) : kind_(k), p_(p) {}
    CoeffKind kind_;
    long p_;
};

bool is_prime(long p);

} // namespace stackhom
