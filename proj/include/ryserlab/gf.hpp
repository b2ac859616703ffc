#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ryserlab/errors.hpp"

namespace ryserlab::gf {

// Description of GF(p^k). The modulus is the monic irreducible polynomial
// used for the extension, k+1 coefficients in [0,p), constant term first.
// For k=1 the modulus is x, i.e. plain residue arithmetic mod p.
struct FieldSpec {
    long long p = 0;
    int k = 0;
    std::vector<long long> modulus;

    long long order() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

using Field = std::shared_ptr<const FieldSpec>;

// Element of GF(p^k) in the polynomial basis: k coefficients in [0,p),
// constant term first. Immutable after construction.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(Field spec, std::vector<long long> coeffs);

    const Field& field() const { return spec_; }
    const std::vector<long long>& coeffs() const { return coeffs_; }

    // Integer encoding sum(coeffs[i] * p^i); elements enumerate as 0..q-1.
    long long value() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator<(const FieldElement& a, const FieldElement& b);

private:
    Field spec_;
    std::vector<long long> coeffs_;
};

// Canonical field of order q. The modulus is the least monic irreducible of
// degree k, comparing coefficient vectors constant-term-first, found by
// exhaustive search. Throws NotAPrimePower when q is not p^k. Orders are
// supported up to 2^20; everything plane-sized is tiny.
Field make_field(long long q);

FieldElement element_of(const Field& f, long long value);
FieldElement zero(const Field& f);
FieldElement one(const Field& f);

// All q elements in increasing value() order: 0 first, 1 second.
std::vector<FieldElement> elements(const Field& f);

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
FieldElement inv(const FieldElement& a);  // throws DivisionByZero on 0
bool is_zero(const FieldElement& a);

std::string to_string(const FieldElement& a);

}  // namespace ryserlab::gf
