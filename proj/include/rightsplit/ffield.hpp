#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "rightsplit/error.hpp"

namespace rsplit {

/// Defining data of F_{p^r}: the prime, the exponent and the monic degree-r
/// modulus polynomial (r+1 little-endian coefficients, last one = 1).
struct FieldSpec {
    std::int64_t p = 0;
    int r = 0;
    std::vector<std::int64_t> modulus;
    std::int64_t q = 0;

    bool operator==(const FieldSpec&) const = default;
};

/// Exact arithmetic in F_{p^r}. Elements are encoded as integers in [0, q):
/// code = c0 + c1*p + ... + c_{r-1}*p^{r-1} for coefficients (c0..c_{r-1}) of
/// the residue class in the generator t. The code order is the canonical
/// coefficient-lex order used everywhere (element enumeration, matrix order,
/// least-witness tie breaking).
///
/// Immutable and cheap to copy; safe to share across threads.
class Field {
public:
    /// Builds F_{p^r} with the lexicographically smallest monic irreducible
    /// modulus of degree r mod p (for r = 1 the modulus is t - 0).
    /// Deterministic: identical inputs give identical FieldSpecs.
    /// Throws NotPrime, DegreeTooLarge, NoIrreducibleFound.
    static Field make(std::int64_t p, int r);

    const FieldSpec& spec() const { return *spec_; }
    std::int64_t p() const { return spec_->p; }
    int r() const { return spec_->r; }
    std::int64_t q() const { return spec_->q; }

    bool same(const Field& other) const { return *spec_ == *other.spec_; }

    std::int64_t zero() const { return 0; }
    std::int64_t one() const { return 1; }

    std::int64_t add(std::int64_t a, std::int64_t b) const;
    std::int64_t sub(std::int64_t a, std::int64_t b) const;
    std::int64_t neg(std::int64_t a) const;
    std::int64_t mul(std::int64_t a, std::int64_t b) const;
    /// Throws ZeroInverse on a = 0.
    std::int64_t inv(std::int64_t a) const;
    /// Square-and-multiply; e may be negative (inverts first).
    std::int64_t pow(std::int64_t a, std::int64_t e) const;

    /// Multiplicative order of a nonzero element (by factoring q-1).
    std::int64_t element_order(std::int64_t a) const;

    /// Least element (code order) of multiplicative order q-1.
    std::int64_t unit_generator() const;

    /// True iff x lies in the image of the n-th power map on F_q^x,
    /// decided by x^((q-1)/gcd(n,q-1)) = 1. Throws ZeroElement on x = 0.
    bool is_nth_power(std::int64_t x, std::int64_t n) const;

    std::vector<std::int64_t> coeffs(std::int64_t code) const;
    std::int64_t from_coeffs(const std::vector<std::int64_t>& c) const;

    /// Text form: decimal for r = 1, otherwise "c0+c1*t+..." with zero terms
    /// omitted and unit coefficients on t-powers left implicit ("0", "1",
    /// "t", "2+t", "2*t^2", ...).
    std::string render(std::int64_t code) const;

private:
    struct Impl;
    explicit Field(std::shared_ptr<const Impl> impl) : spec_impl_(std::move(impl)) { init(); }
    void init();

    std::shared_ptr<const Impl> spec_impl_;
    const FieldSpec* spec_ = nullptr; // points into *spec_impl_
};

/// Value-typed field element; carries its field for mismatch checking.
struct FqElem {
    Field field;
    std::int64_t code = 0;
};

FqElem fq_add(const FqElem& a, const FqElem& b);
FqElem fq_mul(const FqElem& a, const FqElem& b);
FqElem fq_inv(const FqElem& a);
FqElem fq_pow(const FqElem& a, std::int64_t e);

// small integer helpers used across the toolkit
std::int64_t gcd64(std::int64_t a, std::int64_t b);
bool is_prime64(std::int64_t n);
std::vector<std::int64_t> prime_factors(std::int64_t n); // distinct primes
std::int64_t pow_mod(std::int64_t base, std::int64_t e, std::int64_t mod);

} // namespace rsplit
