#include "ryserlab/gf.hpp"

#include <algorithm>

namespace ryserlab::gf {

namespace {

constexpr long long kMaxOrder = 1LL << 20;

// Little-endian coefficient vectors over GF(p), constant term first.
using Poly = std::vector<long long>;

int degree(const Poly& a) {
    for (int i = (int)a.size() - 1; i >= 0; i--)
        if (a[i] != 0) return i;
    return -1;
}

// Remainder of a mod b, b monic, all arithmetic mod p.
Poly poly_rem(Poly a, const Poly& b, long long p) {
    int db = degree(b);
    for (int i = degree(a); i >= db && i >= 0; i = degree(a)) {
        long long c = a[i];  // nonzero, i is the degree
        int shift = i - db;
        for (int j = 0; j <= db; j++) {
            a[j + shift] = ((a[j + shift] - c * b[j]) % p + p) % p;
        }
    }
    a.resize(std::max(db, 1));
    return a;
}

// No monic divisor of degree 1..deg/2 divides it.
bool is_irreducible(const Poly& f, long long p) {
    int d = degree(f);
    for (int dd = 1; dd <= d / 2; dd++) {
        // odometer over the dd low coefficients of a monic divisor
        Poly g(dd + 1, 0);
        g[dd] = 1;
        while (true) {
            if (degree(poly_rem(f, g, p)) < 0) return false;
            int i = 0;
            while (i < dd && g[i] == p - 1) g[i++] = 0;
            if (i == dd) break;
            g[i]++;
        }
    }
    return true;
}

// Least monic irreducible of degree k, coefficients compared
// constant-term-first.
Poly canonical_modulus(long long p, int k) {
    Poly f(k + 1, 0);
    f[k] = 1;
    while (true) {
        if (is_irreducible(f, p)) return f;
        int i = k - 1;
        while (i >= 0 && f[i] == p - 1) f[i--] = 0;
        if (i < 0) break;  // cannot happen: irreducibles exist for every (p,k)
        f[i]++;
    }
    return f;
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (a.field() == b.field()) return;
    if (!a.field() || !b.field() || !(*a.field() == *b.field()))
        throw SpecMismatch();
}

Poly reduce_coeffs(const FieldSpec& s, Poly c) {
    for (auto& x : c) x = ((x % s.p) + s.p) % s.p;
    c.resize(s.k, 0);
    return c;
}

}  // namespace

long long FieldSpec::order() const {
    long long q = 1;
    for (int i = 0; i < k; i++) q *= p;
    return q;
}

FieldElement::FieldElement(Field spec, std::vector<long long> coeffs)
    : spec_(std::move(spec)) {
    coeffs_ = reduce_coeffs(*spec_, std::move(coeffs));
}

long long FieldElement::value() const {
    long long v = 0;
    for (int i = spec_->k - 1; i >= 0; i--) v = v * spec_->p + coeffs_[i];
    return v;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return a.coeffs_ == b.coeffs_;
}

bool operator<(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return a.value() < b.value();
}

Field make_field(long long q) {
    if (q < 2 || q > kMaxOrder) throw NotAPrimePower(q);
    long long p = 0, m = q;
    for (long long d = 2; d * d <= q; d++) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = q;  // q itself prime
    int k = 0;
    while (m % p == 0) {
        m /= p;
        k++;
    }
    if (m != 1) throw NotAPrimePower(q);
    auto spec = std::make_shared<FieldSpec>();
    spec->p = p;
    spec->k = k;
    spec->modulus = canonical_modulus(p, k);
    return spec;
}

FieldElement element_of(const Field& f, long long value) {
    if (value < 0 || value >= f->order())
        throw PreconditionViolated("element value out of range");
    std::vector<long long> c(f->k, 0);
    for (int i = 0; i < f->k; i++) {
        c[i] = value % f->p;
        value /= f->p;
    }
    return FieldElement(f, std::move(c));
}

FieldElement zero(const Field& f) { return element_of(f, 0); }
FieldElement one(const Field& f) { return element_of(f, 1); }

std::vector<FieldElement> elements(const Field& f) {
    std::vector<FieldElement> out;
    out.reserve(f->order());
    for (long long v = 0; v < f->order(); v++) out.push_back(element_of(f, v));
    return out;
}

FieldElement add(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    const auto& s = *a.field();
    Poly c(s.k);
    for (int i = 0; i < s.k; i++) c[i] = (a.coeffs()[i] + b.coeffs()[i]) % s.p;
    return FieldElement(a.field(), std::move(c));
}

FieldElement neg(const FieldElement& a) {
    const auto& s = *a.field();
    Poly c(s.k);
    for (int i = 0; i < s.k; i++) c[i] = (s.p - a.coeffs()[i]) % s.p;
    return FieldElement(a.field(), std::move(c));
}

FieldElement sub(const FieldElement& a, const FieldElement& b) {
    return add(a, neg(b));
}

FieldElement mul(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    const auto& s = *a.field();
    Poly prod(2 * s.k - 1, 0);
    for (int i = 0; i < s.k; i++) {
        if (a.coeffs()[i] == 0) continue;
        for (int j = 0; j < s.k; j++)
            prod[i + j] = (prod[i + j] + a.coeffs()[i] * b.coeffs()[j]) % s.p;
    }
    return FieldElement(a.field(), poly_rem(std::move(prod), s.modulus, s.p));
}

bool is_zero(const FieldElement& a) {
    for (long long c : a.coeffs())
        if (c != 0) return false;
    return true;
}

FieldElement inv(const FieldElement& a) {
    if (is_zero(a)) throw DivisionByZero();
    // a^(q-2)
    long long e = a.field()->order() - 2;
    FieldElement result = one(a.field());
    FieldElement base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::string to_string(const FieldElement& a) {
    return std::to_string(a.value());
}

}  // namespace ryserlab::gf
