#pragma once

#include <string>
#include <utility>

#include "krull/intutil.hpp"

namespace krull {

enum class RingKind {
    Integers,           // ZZ
    Gaussian,           // ZZ[i]
    FiniteFieldPoly,    // GF(p)[t]
    LocalizedIntegers,  // Zloc(p)
    Rationals,          // QQ
};

/// Runtime handle naming one of the five supported PID instances.
/// The parameterized kinds carry a trial-division-verified prime.
class RingDescriptor {
public:
    static RingDescriptor integers() { return {RingKind::Integers, Int(0)}; }
    static RingDescriptor gaussian() { return {RingKind::Gaussian, Int(0)}; }
    static RingDescriptor rationals() { return {RingKind::Rationals, Int(0)}; }

    static RingDescriptor finite_field_poly(Int p) {
        verify_prime(p);
        return {RingKind::FiniteFieldPoly, std::move(p)};
    }

    static RingDescriptor localized_integers(Int p) {
        verify_prime(p);
        return {RingKind::LocalizedIntegers, std::move(p)};
    }

    /// Accepts exactly: ZZ, QQ, ZZ[i], GF(p)[t], Zloc(p).
    static RingDescriptor parse(const std::string& text) {
        std::string s;
        for (char c : text) {
            if (c != ' ' && c != '\t') s += c;
        }
        if (s == "ZZ") return integers();
        if (s == "QQ") return rationals();
        if (s == "ZZ[i]") return gaussian();
        if (s.rfind("GF(", 0) == 0 && s.size() > 7 && s.substr(s.size() - 4) == ")[t]")
            return finite_field_poly(parse_prime(s.substr(3, s.size() - 7)));
        if (s.rfind("Zloc(", 0) == 0 && s.back() == ')')
            return localized_integers(parse_prime(s.substr(5, s.size() - 6)));
        throw SyntaxError("unknown ring descriptor \"" + text +
                          "\"; expected ZZ, QQ, ZZ[i], GF(p)[t] or Zloc(p)");
    }

    RingKind kind() const { return kind_; }

    const Int& prime() const {
        if (kind_ != RingKind::FiniteFieldPoly && kind_ != RingKind::LocalizedIntegers)
            throw DomainError("ring descriptor " + to_string() + " carries no prime parameter");
        return prime_;
    }

    std::string to_string() const {
        switch (kind_) {
            case RingKind::Integers: return "ZZ";
            case RingKind::Gaussian: return "ZZ[i]";
            case RingKind::FiniteFieldPoly: return "GF(" + prime_.get_str() + ")[t]";
            case RingKind::LocalizedIntegers: return "Zloc(" + prime_.get_str() + ")";
            case RingKind::Rationals: return "QQ";
        }
        throw Error("corrupt ring descriptor");
    }

    bool operator==(const RingDescriptor&) const = default;

private:
    RingDescriptor(RingKind k, Int p) : kind_(k), prime_(std::move(p)) {}

    static void verify_prime(const Int& p) {
        if (!is_prime_trial(p) || p < 2)
            throw DomainError("ring parameter " + p.get_str() + " is not a prime");
    }

    static Int parse_prime(const std::string& digits) {
        if (digits.empty()) throw SyntaxError("empty prime in ring descriptor");
        for (char c : digits) {
            if (c < '0' || c > '9') throw SyntaxError("malformed prime in ring descriptor: " + digits);
        }
        Int p(digits, 10);
        verify_prime(p);
        return p;
    }

    RingKind kind_;
    Int prime_;
};

/// Guard used wherever two independently-parsed values meet.
inline void require_same_ring(const RingDescriptor& a, const RingDescriptor& b) {
    if (!(a == b))
        throw RingMismatch("ring mismatch: " + a.to_string() + " vs " + b.to_string());
}

} // namespace krull
