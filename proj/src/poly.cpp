#include "eaqmds/poly.hpp"

#include <algorithm>

namespace eaqmds {
namespace {

void normalize(Poly& a) {
    while (!a.coeffs.empty() && a.coeffs.back() == 0) a.coeffs.pop_back();
}

const FieldDescriptor* common_field(const Poly& a, const Poly& b) {
    if (!a.field || a.field != b.field) {
        throw FieldMismatch("polynomials belong to different fields");
    }
    return a.field;
}

}  // namespace

Poly make_poly(const FieldDescriptor* f, std::vector<std::uint64_t> coeffs) {
    if (!f) throw FieldMismatch("null field descriptor");
    for (auto c : coeffs) {
        if (c >= f->order()) throw MagnitudeExceeded("coefficient code outside field");
    }
    Poly p{f, std::move(coeffs)};
    normalize(p);
    return p;
}

std::int64_t poly_degree(const Poly& a) {
    return static_cast<std::int64_t>(a.coeffs.size()) - 1;
}

Poly poly_add(const Poly& a, const Poly& b) {
    const auto* f = common_field(a, b);
    Poly r{f, {}};
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
        std::uint64_t x = i < a.coeffs.size() ? a.coeffs[i] : 0;
        std::uint64_t y = i < b.coeffs.size() ? b.coeffs[i] : 0;
        r.coeffs[i] = f->add(x, y);
    }
    normalize(r);
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    const auto* f = common_field(a, b);
    Poly r{f, {}};
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
        std::uint64_t x = i < a.coeffs.size() ? a.coeffs[i] : 0;
        std::uint64_t y = i < b.coeffs.size() ? b.coeffs[i] : 0;
        r.coeffs[i] = f->sub(x, y);
    }
    normalize(r);
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    const auto* f = common_field(a, b);
    if (a.coeffs.empty() || b.coeffs.empty()) return Poly{f, {}};
    Poly r{f, std::vector<std::uint64_t>(a.coeffs.size() + b.coeffs.size() - 1, 0)};
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (!a.coeffs[i]) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
            r.coeffs[i + j] = f->add(r.coeffs[i + j], f->mul(a.coeffs[i], b.coeffs[j]));
        }
    }
    normalize(r);
    return r;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    const auto* f = common_field(a, b);
    if (b.coeffs.empty()) {
        throw DivisionByZeroPolynomial("polynomial division by zero");
    }
    Poly rem = a;
    if (rem.coeffs.size() < b.coeffs.size()) return {Poly{f, {}}, rem};
    Poly quot{f, std::vector<std::uint64_t>(rem.coeffs.size() - b.coeffs.size() + 1, 0)};
    const std::uint64_t lead_inv = f->inv(b.coeffs.back());
    while (rem.coeffs.size() >= b.coeffs.size() && !rem.coeffs.empty()) {
        std::uint64_t c = f->mul(rem.coeffs.back(), lead_inv);
        std::size_t off = rem.coeffs.size() - b.coeffs.size();
        quot.coeffs[off] = c;
        for (std::size_t i = 0; i < b.coeffs.size(); ++i) {
            rem.coeffs[off + i] = f->sub(rem.coeffs[off + i], f->mul(c, b.coeffs[i]));
        }
        normalize(rem);
    }
    normalize(quot);
    return {std::move(quot), std::move(rem)};
}

Poly poly_from_roots(const FieldDescriptor* f, const std::vector<std::uint64_t>& roots) {
    if (!f) throw FieldMismatch("null field descriptor");
    Poly acc{f, {1}};
    for (auto r : roots) {
        if (r >= f->order()) throw MagnitudeExceeded("root code outside field");
        // acc *= (x - r), updated in place.
        acc.coeffs.push_back(0);
        const std::uint64_t neg_r = f->neg(r);
        for (std::size_t i = acc.coeffs.size(); i-- > 0;) {
            std::uint64_t shifted = i > 0 ? acc.coeffs[i - 1] : 0;
            acc.coeffs[i] = f->add(shifted, f->mul(acc.coeffs[i], neg_r));
        }
    }
    return acc;
}

std::uint64_t poly_eval(const Poly& a, std::uint64_t x) {
    if (!a.field) throw FieldMismatch("null field descriptor");
    const auto* f = a.field;
    std::uint64_t acc = 0;
    for (std::size_t i = a.coeffs.size(); i-- > 0;) {
        acc = f->add(f->mul(acc, x), a.coeffs[i]);
    }
    return acc;
}

Poly poly_embed(const TowerEmbedding& emb, const Poly& a) {
    if (a.field != emb.sub) throw FieldMismatch("polynomial not over embedding subfield");
    Poly r{emb.sup, {}};
    r.coeffs.reserve(a.coeffs.size());
    for (auto c : a.coeffs) {
        r.coeffs.push_back(embed_element(emb, {emb.sub, c}).code);
    }
    return r;
}

Poly poly_project(const TowerEmbedding& emb, const Poly& a) {
    if (a.field != emb.sup) throw FieldMismatch("polynomial not over embedding superfield");
    Poly r{emb.sub, {}};
    r.coeffs.reserve(a.coeffs.size());
    for (auto c : a.coeffs) {
        FieldElement down;
        if (!try_project_element(emb, {emb.sup, c}, &down)) {
            throw CoefficientOutsideSubfield(
                "polynomial coefficient does not lie in the subfield");
        }
        r.coeffs.push_back(down.code);
    }
    return r;
}

}  // namespace eaqmds
