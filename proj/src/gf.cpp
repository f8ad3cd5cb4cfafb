#include "eaqmds/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace eaqmds {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
    u64 x = powmod_u64(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while (!(d & 1)) {
        d >>= 1;
        ++s;
    }
    // Deterministic witness set for 64-bit integers.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

u64 pollard_rho(u64 n) {
    if (!(n & 1)) return 2;
    for (u64 c = 1;; ++c) {
        auto step = [&](u64 x) { return (mulmod_u64(x, x, n) + c) % n; };
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_large(u64 n, std::map<u64, int>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        ++out[n];
        return;
    }
    u64 d = pollard_rho(n);
    factor_large(d, out);
    factor_large(n / d, out);
}

std::map<u64, int> factor_map(u64 n) {
    std::map<u64, int> out;
    while (n % 2 == 0 && n > 1) {
        ++out[2];
        n /= 2;
    }
    for (u64 p = 3; p <= 99991 && p * p <= n; p += 2) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    factor_large(n, out);
    return out;
}

// ---------------------------------------------------------------------------
// Dense polynomials over GF(p), used only for modulus construction.
// Coefficients ascending; the zero polynomial is the empty vector.
// ---------------------------------------------------------------------------

using PolyP = std::vector<u64>;

void pp_norm(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyP pp_mul(const PolyP& a, const PolyP& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    PolyP r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = (r[i + j] + mulmod_u64(a[i], b[j], p)) % p;
        }
    }
    pp_norm(r);
    return r;
}

PolyP pp_mod(PolyP a, const PolyP& m, u64 p) {
    pp_norm(a);
    u64 lead_inv = powmod_u64(m.back(), p - 2, p);
    while (a.size() >= m.size()) {
        u64 c = mulmod_u64(a.back(), lead_inv, p);
        std::size_t off = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) {
            u64 sub = mulmod_u64(c, m[i], p);
            a[off + i] = (a[off + i] + p - sub) % p;
        }
        pp_norm(a);
        if (a.empty()) break;
    }
    return a;
}

PolyP pp_powmod(PolyP base, u64 e, const PolyP& m, u64 p) {
    PolyP r = {1};
    base = pp_mod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = pp_mod(pp_mul(r, base, p), m, p);
        base = pp_mod(pp_mul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

PolyP pp_gcd(PolyP a, PolyP b, u64 p) {
    pp_norm(a);
    pp_norm(b);
    while (!b.empty()) {
        a = pp_mod(std::move(a), b, p);
        std::swap(a, b);
    }
    if (!a.empty()) {
        u64 inv = powmod_u64(a.back(), p - 2, p);
        for (auto& c : a) c = mulmod_u64(c, inv, p);
    }
    return a;
}

// Rabin irreducibility test for a monic polynomial of degree t over GF(p).
bool pp_irreducible(const PolyP& f, u64 p) {
    std::size_t t = f.size() - 1;
    if (t == 1) return true;
    const PolyP y = {0, 1};
    auto frobenius = [&](PolyP z, std::size_t times) {
        for (std::size_t i = 0; i < times; ++i) z = pp_powmod(std::move(z), p, f, p);
        return z;
    };
    // x^(p^t) must equal x modulo f ...
    if (frobenius(y, t) != y) return false;
    // ... and x^(p^(t/l)) - x must be coprime to f for every prime l | t.
    std::size_t rest = t;
    for (std::size_t l = 2; l * l <= rest; ++l) {
        if (rest % l) continue;
        while (rest % l == 0) rest /= l;
        PolyP z = frobenius(y, t / l);
        PolyP diff = z;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        pp_norm(diff);
        PolyP g = pp_gcd(diff, f, p);
        if (g.size() != 1) return false;
    }
    if (rest > 1) {
        PolyP z = frobenius(y, t / rest);
        PolyP diff = z;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        pp_norm(diff);
        PolyP g = pp_gcd(diff, f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<u64> canonical_modulus(u64 p, std::uint32_t t) {
    if (t == 1) return {0, 1};  // the polynomial x
    for (u64 counter = 0;; ++counter) {
        PolyP f(t + 1, 0);
        f[t] = 1;
        u64 x = counter;
        for (std::uint32_t i = 0; i < t && x; ++i) {
            f[i] = x % p;
            x /= p;
        }
        if (x) break;  // exhausted all degree-t candidates (cannot happen)
        if (pp_irreducible(f, p)) return f;
    }
    throw Error("internal: no irreducible modulus found");
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldDescriptor
// ---------------------------------------------------------------------------

void FieldDescriptor::init(std::uint64_t p, std::uint32_t t) {
    p_ = p;
    t_ = t;
    order_ = 1;
    for (std::uint32_t i = 0; i < t; ++i) order_ *= p;  // checked by make_field
    modulus_ = canonical_modulus(p, t);
    if (p == 2) {
        modulus_bits_ = 0;
        for (std::size_t i = 0; i < modulus_.size(); ++i) {
            if (modulus_[i]) modulus_bits_ |= u64(1) << i;
        }
    }

    for (const auto& [prime, mult] : factor_map(order_ - 1)) {
        group_factors_.emplace_back(prime, mult);
    }

    if (order_ == 2) {
        generator_ = 1;
    } else {
        for (u64 cand = 2;; ++cand) {
            bool primitive = true;
            for (const auto& [prime, mult] : group_factors_) {
                (void)mult;
                if (pow_generic(cand, (order_ - 1) / prime) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                generator_ = cand;
                break;
            }
        }
    }

    if (order_ <= 65536) {
        tables_ = true;
        const u64 g = order_ - 1;  // group order
        exp_.resize(2 * g);
        log_.assign(order_, 0);
        u64 x = 1;
        for (u64 i = 0; i < g; ++i) {
            exp_[i] = x;
            exp_[i + g] = x;
            log_[x] = static_cast<std::uint32_t>(i);
            x = mul_generic(x, generator_);
        }
    }
}

std::uint64_t FieldDescriptor::mul_generic(std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    if (p_ == 2) {
        u64 r = 0;
        while (b) {
            if (b & 1) r ^= a;
            b >>= 1;
            a <<= 1;
            if ((a >> t_) & 1) a ^= modulus_bits_;
        }
        return r;
    }
    if (t_ == 1) return mulmod_u64(a, b, p_);

    u64 da[64] = {0}, db[64] = {0}, prod[128] = {0};
    u64 x = a;
    for (std::uint32_t i = 0; i < t_; ++i) {
        da[i] = x % p_;
        x /= p_;
    }
    x = b;
    for (std::uint32_t i = 0; i < t_; ++i) {
        db[i] = x % p_;
        x /= p_;
    }
    for (std::uint32_t i = 0; i < t_; ++i) {
        if (!da[i]) continue;
        for (std::uint32_t j = 0; j < t_; ++j) {
            if (!db[j]) continue;
            prod[i + j] = (prod[i + j] + mulmod_u64(da[i], db[j], p_)) % p_;
        }
    }
    for (std::uint32_t i = 2 * t_ - 2; i >= t_; --i) {
        u64 c = prod[i];
        if (c) {
            prod[i] = 0;
            for (std::uint32_t j = 0; j < t_; ++j) {
                if (!modulus_[j]) continue;
                u64 sub = mulmod_u64(c, modulus_[j], p_);
                prod[i - t_ + j] = (prod[i - t_ + j] + p_ - sub) % p_;
            }
        }
        if (i == t_) break;
    }
    u64 code = 0;
    for (std::uint32_t i = t_; i-- > 0;) code = code * p_ + prod[i];
    return code;
}

std::uint64_t FieldDescriptor::pow_generic(std::uint64_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    u64 r = 1;
    while (e) {
        if (e & 1) r = mul_generic(r, a);
        a = mul_generic(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t FieldDescriptor::add(std::uint64_t a, std::uint64_t b) const {
    if (p_ == 2) return a ^ b;
    if (t_ == 1) {
        u64 s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    u64 code = 0, scale = 1;
    for (std::uint32_t i = 0; i < t_; ++i) {
        u64 da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        u64 s = da + db;
        if (s >= p_) s -= p_;
        code += s * scale;
        scale *= p_;
    }
    return code;
}

std::uint64_t FieldDescriptor::neg(std::uint64_t a) const {
    if (p_ == 2) return a;
    if (t_ == 1) return a == 0 ? 0 : p_ - a;
    u64 code = 0, scale = 1;
    for (std::uint32_t i = 0; i < t_; ++i) {
        u64 d = a % p_;
        a /= p_;
        code += (d == 0 ? 0 : p_ - d) * scale;
        scale *= p_;
    }
    return code;
}

std::uint64_t FieldDescriptor::sub(std::uint64_t a, std::uint64_t b) const {
    return add(a, neg(b));
}

std::uint64_t FieldDescriptor::mul(std::uint64_t a, std::uint64_t b) const {
    if (tables_) {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + u64(log_[b])];
    }
    return mul_generic(a, b);
}

std::uint64_t FieldDescriptor::pow(std::uint64_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    if (tables_) {
        const u64 g = order_ - 1;
        return exp_[mulmod_u64(log_[a], e % g, g)];
    }
    return pow_generic(a, e);
}

std::uint64_t FieldDescriptor::inv(std::uint64_t a) const {
    if (a == 0) throw DivisionByZero("inverse of zero");
    if (tables_) {
        const u64 g = order_ - 1;
        return exp_[(g - log_[a]) % g];
    }
    return pow_generic(a, order_ - 2);
}

std::uint64_t FieldDescriptor::div(std::uint64_t a, std::uint64_t b) const {
    if (b == 0) throw DivisionByZero("division by zero");
    return mul(a, inv(b));
}

std::uint64_t FieldDescriptor::element_order(std::uint64_t a) const {
    if (a == 0) throw DivisionByZero("multiplicative order of zero");
    u64 e = order_ - 1;
    for (const auto& [prime, mult] : group_factors_) {
        for (int i = 0; i < mult; ++i) {
            if (e % prime == 0 && pow(a, e / prime) == 1) {
                e /= prime;
            } else {
                break;
            }
        }
    }
    return e;
}

std::vector<std::uint64_t> FieldDescriptor::digits(std::uint64_t code) const {
    std::vector<u64> ds(t_, 0);
    for (std::uint32_t i = 0; i < t_; ++i) {
        ds[i] = code % p_;
        code /= p_;
    }
    return ds;
}

std::uint64_t FieldDescriptor::from_digits(const std::vector<std::uint64_t>& ds) const {
    if (ds.size() > t_) {
        for (std::size_t i = t_; i < ds.size(); ++i) {
            if (ds[i] != 0) throw MagnitudeExceeded("digit vector longer than field degree");
        }
    }
    u64 code = 0;
    for (std::size_t i = std::min<std::size_t>(ds.size(), t_); i-- > 0;) {
        if (ds[i] >= p_) throw MagnitudeExceeded("digit out of range for characteristic");
        code = code * p_ + ds[i];
    }
    return code;
}

const FieldDescriptor* make_field(std::uint64_t p, std::uint32_t t) {
    if (t == 0) throw MagnitudeExceeded("extension degree must be at least 1");
    if (!is_prime_u64(p)) {
        throw NonPrimeCharacteristic("characteristic " + std::to_string(p) + " is not prime");
    }
    u128 order = 1;
    for (std::uint32_t i = 0; i < t; ++i) {
        order *= p;
        if (order >= (u128(1) << 63)) {
            throw MagnitudeExceeded("field order p^t reaches the 2^63 cap");
        }
    }

    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, std::uint32_t>, std::unique_ptr<FieldDescriptor>>
        registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, t);
    auto it = registry.find(key);
    if (it != registry.end()) return it->second.get();
    std::unique_ptr<FieldDescriptor> f(new FieldDescriptor());
    f->init(p, t);
    auto* raw = f.get();
    registry.emplace(key, std::move(f));
    return raw;
}

// ---------------------------------------------------------------------------
// FieldElement-level API
// ---------------------------------------------------------------------------

std::vector<std::uint64_t> FieldElement::coeffs() const {
    return field ? field->digits(code) : std::vector<std::uint64_t>{};
}

FieldElement element_from_code(const FieldDescriptor* f, std::uint64_t code) {
    if (!f) throw FieldMismatch("null field descriptor");
    if (code >= f->order()) throw MagnitudeExceeded("element code outside field");
    return FieldElement{f, code};
}

FieldElement element_from_digits(const FieldDescriptor* f, const std::vector<std::uint64_t>& ds) {
    if (!f) throw FieldMismatch("null field descriptor");
    return FieldElement{f, f->from_digits(ds)};
}

FieldElement field_zero(const FieldDescriptor* f) { return FieldElement{f, 0}; }
FieldElement field_one(const FieldDescriptor* f) { return FieldElement{f, 1}; }

FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithKind kind) {
    if (!a.field || a.field != b.field) {
        throw FieldMismatch("operands belong to different fields");
    }
    const FieldDescriptor* f = a.field;
    switch (kind) {
        case ArithKind::add: return {f, f->add(a.code, b.code)};
        case ArithKind::sub: return {f, f->sub(a.code, b.code)};
        case ArithKind::mul: return {f, f->mul(a.code, b.code)};
        case ArithKind::div: return {f, f->div(a.code, b.code)};
    }
    throw Error("internal: unknown arithmetic kind");
}

FieldElement field_pow(const FieldElement& a, std::uint64_t e) {
    if (!a.field) throw FieldMismatch("null field descriptor");
    return {a.field, a.field->pow(a.code, e)};
}

FieldElement conjugate(const FieldElement& a, std::uint64_t q) {
    if (!a.field) throw FieldMismatch("null field descriptor");
    if (q < 2 || q >= (u64(1) << 32) || q * q != a.field->order()) {
        throw NotAQuadraticExtension("field is not a quadratic extension of GF(q)");
    }
    return field_pow(a, q);
}

FieldElement element_of_order(const FieldDescriptor* f, std::uint64_t n) {
    if (!f) throw FieldMismatch("null field descriptor");
    if (n == 0 || (f->order() - 1) % n != 0) {
        throw OrderDoesNotDivide("requested order " + std::to_string(n) +
                                 " does not divide group order " + std::to_string(f->order() - 1));
    }
    return {f, f->pow(f->generator(), (f->order() - 1) / n)};
}

std::uint64_t multiplicative_order(const FieldElement& a) {
    if (!a.field) throw FieldMismatch("null field descriptor");
    return a.field->element_order(a.code);
}

// ---------------------------------------------------------------------------
// Polynomials over an arbitrary descriptor: just enough for root extraction.
// ---------------------------------------------------------------------------

namespace {

using PolyF = std::vector<u64>;  // codes, ascending; zero poly == empty

void pf_norm(PolyF& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyF pf_mul(const FieldDescriptor* F, const PolyF& a, const PolyF& b) {
    if (a.empty() || b.empty()) return {};
    PolyF r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = F->add(r[i + j], F->mul(a[i], b[j]));
        }
    }
    pf_norm(r);
    return r;
}

// Remainder of a modulo m (m nonzero).
PolyF pf_mod(const FieldDescriptor* F, PolyF a, const PolyF& m) {
    pf_norm(a);
    u64 lead_inv = F->inv(m.back());
    while (a.size() >= m.size()) {
        u64 c = F->mul(a.back(), lead_inv);
        std::size_t off = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) {
            a[off + i] = F->sub(a[off + i], F->mul(c, m[i]));
        }
        pf_norm(a);
        if (a.empty()) break;
    }
    return a;
}

// Quotient of a by monic m.
PolyF pf_div(const FieldDescriptor* F, PolyF a, const PolyF& m) {
    pf_norm(a);
    if (a.size() < m.size()) return {};
    PolyF q(a.size() - m.size() + 1, 0);
    while (a.size() >= m.size()) {
        u64 c = F->mul(a.back(), F->inv(m.back()));
        std::size_t off = a.size() - m.size();
        q[off] = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            a[off + i] = F->sub(a[off + i], F->mul(c, m[i]));
        }
        pf_norm(a);
        if (a.empty()) break;
    }
    pf_norm(q);
    return q;
}

PolyF pf_powmod(const FieldDescriptor* F, PolyF base, u64 e, const PolyF& m) {
    PolyF r = {1};
    base = pf_mod(F, std::move(base), m);
    while (e) {
        if (e & 1) r = pf_mod(F, pf_mul(F, r, base), m);
        base = pf_mod(F, pf_mul(F, base, base), m);
        e >>= 1;
    }
    return r;
}

PolyF pf_gcd(const FieldDescriptor* F, PolyF a, PolyF b) {
    pf_norm(a);
    pf_norm(b);
    while (!b.empty()) {
        a = pf_mod(F, std::move(a), b);
        std::swap(a, b);
    }
    if (!a.empty()) {
        u64 inv = F->inv(a.back());
        for (auto& c : a) c = F->mul(c, inv);
    }
    return a;
}

/**
 * All roots in F of a squarefree monic polynomial that splits completely
 * over F.  Deterministic: splitting candidates are tried in flat-code order,
 * so every run produces the same computation; the returned roots are sorted.
 */
std::vector<u64> pf_roots(const FieldDescriptor* F, PolyF f) {
    std::vector<u64> roots;
    std::vector<PolyF> work;
    work.push_back(std::move(f));
    const u64 Q = F->order();
    const bool char2 = F->characteristic() == 2;
    std::uint32_t bits = 0;
    if (char2) {
        u64 q = Q;
        while (q > 1) {
            q >>= 1;
            ++bits;
        }
    }
    while (!work.empty()) {
        PolyF h = std::move(work.back());
        work.pop_back();
        pf_norm(h);
        if (h.size() <= 1) continue;
        if (h.size() == 2) {
            // monic-normalize and read off the root of c1*y + c0
            roots.push_back(F->neg(F->div(h[0], h[1])));
            continue;
        }
        // Make h monic once per split round.
        {
            u64 inv = F->inv(h.back());
            for (auto& c : h) c = F->mul(c, inv);
        }
        bool split = false;
        for (u64 cand = 1; cand < Q && !split; ++cand) {
            PolyF g;
            if (char2) {
                // Trace polynomial of cand*y: sum_{i<bits} (cand*y)^(2^i) mod h.
                PolyF term = {0, cand};
                PolyF acc = term;
                for (std::uint32_t i = 1; i < bits; ++i) {
                    term = pf_mod(F, pf_mul(F, term, term), h);
                    if (acc.size() < term.size()) acc.resize(term.size(), 0);
                    for (std::size_t j = 0; j < term.size(); ++j) {
                        acc[j] = F->add(acc[j], term[j]);
                    }
                    pf_norm(acc);
                }
                g = pf_gcd(F, h, acc);
            } else {
                PolyF e = pf_powmod(F, PolyF{cand, 1}, (Q - 1) / 2, h);
                if (e.empty()) e = {0};
                e[0] = F->sub(e[0], 1);
                pf_norm(e);
                g = pf_gcd(F, h, e);
            }
            if (!g.empty() && g.size() > 1 && g.size() < h.size()) {
                work.push_back(pf_div(F, h, g));
                work.push_back(std::move(g));
                split = true;
            }
        }
        if (!split) throw Error("internal: equal-degree splitting failed");
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace

// ---------------------------------------------------------------------------
// Tower embeddings
// ---------------------------------------------------------------------------

TowerEmbedding build_embedding(const FieldDescriptor* sub, const FieldDescriptor* sup) {
    if (!sub || !sup) throw FieldMismatch("null field descriptor");
    if (sub->characteristic() != sup->characteristic() ||
        sup->degree() % sub->degree() != 0) {
        throw NoEmbedding("GF(" + std::to_string(sub->characteristic()) + "^" +
                          std::to_string(sub->degree()) + ") does not embed into GF(" +
                          std::to_string(sup->characteristic()) + "^" +
                          std::to_string(sup->degree()) + ")");
    }
    const u64 p = sub->characteristic();
    const std::uint32_t a = sub->degree();
    const std::uint32_t b = sup->degree();

    // Roots of the subfield modulus inside the superfield.  GF(p) constants
    // have identical flat codes in every field of characteristic p.
    PolyF f(sub->modulus().begin(), sub->modulus().end());
    std::vector<u64> roots = pf_roots(sup, f);
    if (roots.size() != a) throw NoEmbedding("internal: modulus does not split as expected");

    TowerEmbedding emb;
    emb.sub = sub;
    emb.sup = sup;
    emb.rho = roots.front();
    emb.rho_powers.resize(a);
    emb.rho_powers[0] = 1;
    for (std::uint32_t i = 1; i < a; ++i) {
        emb.rho_powers[i] = sup->mul(emb.rho_powers[i - 1], emb.rho);
    }

    // Gauss-Jordan over GF(p) on [M | I], where column i of the b x a matrix M
    // holds the digits of rho^i.  The recorded row operations solve M z = v.
    std::vector<std::vector<u64>> m(b, std::vector<u64>(a, 0));
    for (std::uint32_t i = 0; i < a; ++i) {
        auto ds = sup->digits(emb.rho_powers[i]);
        for (std::uint32_t r = 0; r < b; ++r) m[r][i] = ds[r];
    }
    std::vector<std::vector<u64>> e(b, std::vector<u64>(b, 0));
    for (std::uint32_t r = 0; r < b; ++r) e[r][r] = 1;

    std::uint32_t row = 0;
    for (std::uint32_t col = 0; col < a && row < b; ++col) {
        std::uint32_t piv = row;
        while (piv < b && m[piv][col] == 0) ++piv;
        if (piv == b) throw NoEmbedding("internal: embedding basis is singular");
        std::swap(m[piv], m[row]);
        std::swap(e[piv], e[row]);
        u64 inv = powmod_u64(m[row][col], p - 2, p);
        for (auto& x : m[row]) x = mulmod_u64(x, inv, p);
        for (auto& x : e[row]) x = mulmod_u64(x, inv, p);
        for (std::uint32_t r = 0; r < b; ++r) {
            if (r == row || m[r][col] == 0) continue;
            u64 c = m[r][col];
            for (std::uint32_t j = 0; j < a; ++j) {
                m[r][j] = (m[r][j] + p - mulmod_u64(c, m[row][j], p)) % p;
            }
            for (std::uint32_t j = 0; j < b; ++j) {
                e[r][j] = (e[r][j] + p - mulmod_u64(c, e[row][j], p)) % p;
            }
        }
        ++row;
    }
    if (row != a) throw NoEmbedding("internal: embedding basis has rank below degree");
    emb.proj_elim = std::move(e);

    emb.image_of_sub_generator =
        embed_element(emb, FieldElement{sub, sub->generator()});
    return emb;
}

FieldElement embed_element(const TowerEmbedding& emb, const FieldElement& a) {
    if (!emb.sub || a.field != emb.sub) throw FieldMismatch("element not in embedding subfield");
    auto ds = emb.sub->digits(a.code);
    u64 acc = 0;
    for (std::size_t i = ds.size(); i-- > 0;) {
        acc = emb.sup->add(emb.sup->mul(acc, emb.rho), ds[i]);
    }
    return {emb.sup, acc};
}

bool try_project_element(const TowerEmbedding& emb, const FieldElement& a, FieldElement* out) {
    if (!emb.sup || a.field != emb.sup) throw FieldMismatch("element not in embedding superfield");
    const u64 p = emb.sub->characteristic();
    const std::uint32_t adeg = emb.sub->degree();
    const std::uint32_t bdeg = emb.sup->degree();
    auto v = emb.sup->digits(a.code);
    std::vector<u64> z(bdeg, 0);
    for (std::uint32_t r = 0; r < bdeg; ++r) {
        u64 s = 0;
        for (std::uint32_t i = 0; i < bdeg; ++i) {
            if (emb.proj_elim[r][i] && v[i]) {
                s = (s + mulmod_u64(emb.proj_elim[r][i], v[i], p)) % p;
            }
        }
        z[r] = s;
    }
    for (std::uint32_t r = adeg; r < bdeg; ++r) {
        if (z[r] != 0) return false;
    }
    z.resize(adeg);
    if (out) *out = FieldElement{emb.sub, emb.sub->from_digits(z)};
    return true;
}

// ---------------------------------------------------------------------------
// Integer utilities
// ---------------------------------------------------------------------------

bool is_prime(std::uint64_t n) { return is_prime_u64(n); }

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> out;
    if (n <= 1) return out;
    for (auto& [p, e] : factor_map(n)) out.emplace_back(p, e);
    return out;
}

bool is_prime_power(std::uint64_t n, std::uint64_t* p_out, int* e_out) {
    if (n < 2) return false;
    auto f = factorize(n);
    if (f.size() != 1) return false;
    if (p_out) *p_out = f[0].first;
    if (e_out) *e_out = f[0].second;
    return true;
}

}  // namespace eaqmds
