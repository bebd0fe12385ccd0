#include "rightsplit/ffield.hpp"

#include <algorithm>
#include <numeric>

namespace rsplit {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

bool is_prime64(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t e, std::int64_t mod) {
    unsigned __int128 acc = 1, b = static_cast<unsigned __int128>(((base % mod) + mod) % mod);
    while (e > 0) {
        if (e & 1) acc = acc * b % static_cast<unsigned __int128>(mod);
        b = b * b % static_cast<unsigned __int128>(mod);
        e >>= 1;
    }
    return static_cast<std::int64_t>(acc);
}

namespace {

using Poly = std::vector<std::int64_t>; // little-endian, not normalized

Poly poly_mod(Poly a, const Poly& m, std::int64_t p) {
    // m monic of degree m.size()-1
    const int dm = static_cast<int>(m.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
        std::int64_t c = a[i] % p;
        if (c == 0) continue;
        for (int j = 0; j <= dm; ++j) {
            a[i - dm + j] = ((a[i - dm + j] - c * m[j]) % p + p) % p;
        }
    }
    a.resize(dm);
    for (auto& c : a) c = ((c % p) + p) % p;
    return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, std::int64_t p) {
    Poly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    return poly_mod(std::move(prod), m, p);
}

// true iff b divides a over F_p (b scaled monic first)
bool poly_divides(const Poly& b_in, Poly a, std::int64_t p) {
    Poly b = b_in;
    while (!b.empty() && b.back() % p == 0) b.pop_back();
    if (b.empty()) return false;
    // scale b monic
    std::int64_t lead = ((b.back() % p) + p) % p;
    std::int64_t lead_inv = pow_mod(lead, p - 2, p);
    for (auto& c : b) c = ((c % p) * lead_inv) % p;
    const int db = static_cast<int>(b.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        std::int64_t c = ((a[i] % p) + p) % p;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j)
            a[i - db + j] = ((a[i - db + j] - c * b[j]) % p + p) % p;
    }
    for (std::int64_t c : a)
        if (((c % p) + p) % p != 0) return false;
    return true;
}

bool is_irreducible(const Poly& f, std::int64_t p) {
    // trial factorization by all monic polynomials of degree 1..deg/2
    const int deg = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        std::int64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::int64_t v = 0; v < count; ++v) {
            Poly g(d + 1, 0);
            std::int64_t t = v;
            for (int i = 0; i < d; ++i) { g[i] = t % p; t /= p; }
            g[d] = 1;
            if (poly_divides(g, f, p)) return false;
        }
    }
    return true;
}

} // namespace

struct Field::Impl {
    FieldSpec spec;
    // tables for small fields (q <= 256): full add/mul, plus inverses
    std::vector<std::int32_t> add_table, mul_table, neg_table, inv_table;
    bool has_tables = false;

    std::int64_t raw_add(std::int64_t a, std::int64_t b) const {
        if (spec.r == 1) return (a + b) % spec.p;
        std::int64_t out = 0, base = 1;
        for (int i = 0; i < spec.r; ++i) {
            out += (a % spec.p + b % spec.p) % spec.p * base;
            a /= spec.p;
            b /= spec.p;
            base *= spec.p;
        }
        return out;
    }
    std::int64_t raw_neg(std::int64_t a) const {
        if (spec.r == 1) return (spec.p - a) % spec.p;
        std::int64_t out = 0, base = 1;
        for (int i = 0; i < spec.r; ++i) {
            out += (spec.p - a % spec.p) % spec.p * base;
            a /= spec.p;
            base *= spec.p;
        }
        return out;
    }
    std::int64_t raw_mul(std::int64_t a, std::int64_t b) const {
        if (spec.r == 1) return a * b % spec.p;
        Poly pa(spec.r), pb(spec.r);
        for (int i = 0; i < spec.r; ++i) { pa[i] = a % spec.p; a /= spec.p; }
        for (int i = 0; i < spec.r; ++i) { pb[i] = b % spec.p; b /= spec.p; }
        Poly pc = poly_mul_mod(pa, pb, spec.modulus, spec.p);
        std::int64_t out = 0;
        for (int i = spec.r - 1; i >= 0; --i) out = out * spec.p + pc[i];
        return out;
    }
};

void Field::init() { spec_ = &spec_impl_->spec; }

Field Field::make(std::int64_t p, int r) {
    if (!is_prime64(p)) throw Error("NotPrime", "p = " + std::to_string(p) + " is not prime");
    if (r < 1 || r > 6) throw Error("DegreeTooLarge", "require 1 <= r <= 6, got r = " + std::to_string(r));
    std::int64_t q = 1;
    for (int i = 0; i < r; ++i) {
        q *= p;
        if (q > 1000000) throw Error("DegreeTooLarge", "p^r exceeds 10^6");
    }

    auto impl = std::make_shared<Field::Impl>();
    impl->spec.p = p;
    impl->spec.r = r;
    impl->spec.q = q;

    if (r == 1) {
        impl->spec.modulus = {0, 1}; // t - 0
    } else {
        // smallest monic irreducible in ascending code order of the low coefficients
        std::int64_t lim = q; // p^r low-coefficient vectors
        bool found = false;
        for (std::int64_t v = 0; v < lim && !found; ++v) {
            Poly f(r + 1, 0);
            std::int64_t t = v;
            for (int i = 0; i < r; ++i) { f[i] = t % p; t /= p; }
            f[r] = 1;
            if (is_irreducible(f, p)) {
                impl->spec.modulus = f;
                found = true;
            }
        }
        if (!found) throw Error("NoIrreducibleFound", "internal error: no irreducible modulus");
    }

    if (q <= 256) {
        impl->has_tables = true;
        impl->add_table.resize(static_cast<size_t>(q) * q);
        impl->mul_table.resize(static_cast<size_t>(q) * q);
        impl->neg_table.resize(q);
        impl->inv_table.assign(q, 0);
        for (std::int64_t a = 0; a < q; ++a) {
            impl->neg_table[a] = static_cast<std::int32_t>(impl->raw_neg(a));
            for (std::int64_t b = 0; b < q; ++b) {
                impl->add_table[a * q + b] = static_cast<std::int32_t>(impl->raw_add(a, b));
                impl->mul_table[a * q + b] = static_cast<std::int32_t>(impl->raw_mul(a, b));
            }
        }
        for (std::int64_t a = 1; a < q; ++a)
            for (std::int64_t b = 1; b < q; ++b)
                if (impl->mul_table[a * q + b] == 1) { impl->inv_table[a] = static_cast<std::int32_t>(b); break; }
    }
    return Field(std::move(impl));
}

std::int64_t Field::add(std::int64_t a, std::int64_t b) const {
    if (spec_impl_->has_tables) return spec_impl_->add_table[a * q() + b];
    return spec_impl_->raw_add(a, b);
}

std::int64_t Field::neg(std::int64_t a) const {
    if (spec_impl_->has_tables) return spec_impl_->neg_table[a];
    return spec_impl_->raw_neg(a);
}

std::int64_t Field::sub(std::int64_t a, std::int64_t b) const { return add(a, neg(b)); }

std::int64_t Field::mul(std::int64_t a, std::int64_t b) const {
    if (spec_impl_->has_tables) return spec_impl_->mul_table[a * q() + b];
    return spec_impl_->raw_mul(a, b);
}

std::int64_t Field::inv(std::int64_t a) const {
    if (a == 0) throw Error("ZeroInverse", "inverse of zero in GF(" + std::to_string(q()) + ")");
    if (spec_impl_->has_tables) return spec_impl_->inv_table[a];
    return pow(a, q() - 2);
}

std::int64_t Field::pow(std::int64_t a, std::int64_t e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    std::int64_t acc = 1;
    while (e > 0) {
        if (e & 1) acc = mul(acc, a);
        a = mul(a, a);
        e >>= 1;
    }
    return acc;
}

std::int64_t Field::element_order(std::int64_t a) const {
    if (a == 0) throw Error("ZeroElement", "order of zero is undefined");
    std::int64_t ord = q() - 1;
    for (std::int64_t f : prime_factors(q() - 1)) {
        while (ord % f == 0 && pow(a, ord / f) == 1) ord /= f;
    }
    return ord;
}

std::int64_t Field::unit_generator() const {
    if (q() == 2) return 1;
    const auto factors = prime_factors(q() - 1);
    for (std::int64_t a = 1; a < q(); ++a) {
        bool gen = true;
        for (std::int64_t f : factors) {
            if (pow(a, (q() - 1) / f) == 1) { gen = false; break; }
        }
        if (gen) return a;
    }
    throw Error("NoIrreducibleFound", "internal error: unit group not cyclic");
}

bool Field::is_nth_power(std::int64_t x, std::int64_t n) const {
    if (x == 0) throw Error("ZeroElement", "is_nth_power requires a nonzero element");
    const std::int64_t g = gcd64(n, q() - 1);
    return pow(x, (q() - 1) / g) == 1;
}

std::vector<std::int64_t> Field::coeffs(std::int64_t code) const {
    std::vector<std::int64_t> c(r());
    for (int i = 0; i < r(); ++i) { c[i] = code % p(); code /= p(); }
    return c;
}

std::int64_t Field::from_coeffs(const std::vector<std::int64_t>& c) const {
    if (static_cast<int>(c.size()) != r())
        throw Error("FieldMismatch", "coefficient vector length != r");
    std::int64_t out = 0;
    for (int i = r() - 1; i >= 0; --i) {
        std::int64_t ci = ((c[i] % p()) + p()) % p();
        out = out * p() + ci;
    }
    return out;
}

std::string Field::render(std::int64_t code) const {
    if (r() == 1) return std::to_string(code);
    if (code == 0) return "0";
    auto c = coeffs(code);
    std::string out;
    for (int i = 0; i < r(); ++i) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c[i]);
        } else {
            if (c[i] != 1) out += std::to_string(c[i]) + "*";
            out += (i == 1) ? "t" : "t^" + std::to_string(i);
        }
    }
    return out;
}

namespace {
void check_same(const FqElem& a, const FqElem& b) {
    if (!a.field.same(b.field))
        throw Error("FieldMismatch", "operands belong to different fields");
}
} // namespace

// the arithmetic runs before the aggregate forms, so a throwing operation
// (inv of zero, mismatched fields) never unwinds a half-built return value
FqElem fq_add(const FqElem& a, const FqElem& b) {
    check_same(a, b);
    const std::int64_t code = a.field.add(a.code, b.code);
    return {a.field, code};
}
FqElem fq_mul(const FqElem& a, const FqElem& b) {
    check_same(a, b);
    const std::int64_t code = a.field.mul(a.code, b.code);
    return {a.field, code};
}
FqElem fq_inv(const FqElem& a) {
    const std::int64_t code = a.field.inv(a.code);
    return {a.field, code};
}
FqElem fq_pow(const FqElem& a, std::int64_t e) {
    const std::int64_t code = a.field.pow(a.code, e);
    return {a.field, code};
}

} // namespace rsplit
