#include "eaqmds/codes.hpp"

#include <algorithm>

namespace eaqmds {
namespace {

// Shared by build_code and hermitian_dual; performs every check except the
// rejection of the full defining set (the zero code is a valid dual).
ConstacyclicCode assemble(const CyclotomicSpace& sp, std::vector<std::uint64_t> zs) {
    ConstacyclicCode c;
    c.space = sp;
    for (auto& z : zs) {
        z %= sp.rn;
        position_of(sp, z);  // throws NotInAmbient
    }
    std::sort(zs.begin(), zs.end());
    zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
    c.defining_set = std::move(zs);

    std::uint64_t p = 0;
    int e = 0;
    is_prime_power(sp.q, &p, &e);  // make_space already validated q
    c.field = make_field(p, static_cast<std::uint32_t>(2 * e));
    c.splitting = make_field(p, static_cast<std::uint32_t>(2 * e) * sp.m);
    c.embedding = build_embedding(c.field, c.splitting);

    c.delta = element_of_order(c.splitting, sp.rn);
    FieldElement alpha_up = field_pow(c.delta, sp.n);
    if (!try_project_element(c.embedding, alpha_up, &c.alpha)) {
        throw CoefficientOutsideSubfield("delta^n does not lie in GF(q^2)");
    }

    std::vector<std::uint64_t> roots;
    roots.reserve(c.defining_set.size());
    for (auto z : c.defining_set) roots.push_back(field_pow(c.delta, z).code);
    Poly g_up = poly_from_roots(c.splitting, roots);
    c.generator = poly_project(c.embedding, g_up);

    c.n = sp.n;
    c.k = sp.n - c.defining_set.size();
    return c;
}

}  // namespace

ConstacyclicCode build_code(const CyclotomicSpace& sp, std::vector<std::uint64_t> zs) {
    ConstacyclicCode c = assemble(sp, std::move(zs));
    if (c.k == 0) {
        throw ZeroDimensional("defining set covers the whole ambient set");
    }
    return c;
}

Poly x_n_minus_alpha(const ConstacyclicCode& c) {
    std::vector<std::uint64_t> coeffs(c.n + 1, 0);
    coeffs[0] = c.field->neg(c.alpha.code);
    coeffs[c.n] = 1;
    return make_poly(c.field, std::move(coeffs));
}

bool check_divides(const ConstacyclicCode& c) {
    auto [quot, rem] = poly_divmod(x_n_minus_alpha(c), c.generator);
    (void)quot;
    return rem.coeffs.empty();
}

Matrix generator_matrix(const ConstacyclicCode& c) {
    if (c.k == 0) {
        throw ZeroDimensional("the zero code has no generator matrix");
    }
    Matrix g = mat_zero(c.field, c.k, c.n);
    for (std::size_t i = 0; i < c.k; ++i) {
        for (std::size_t j = 0; j < c.generator.coeffs.size(); ++j) {
            g.at(i, i + j) = c.generator.coeffs[j];
        }
    }
    return g;
}

Matrix parity_check_matrix(const ConstacyclicCode& c) {
    if (c.k == c.n) {
        throw FullCode("the full code has a trivial dual");
    }
    if (c.k == 0) return mat_identity(c.field, c.n);
    return null_space(generator_matrix(c));
}

ConstacyclicCode hermitian_dual(const ConstacyclicCode& c) {
    return assemble(c.space, dual_defining_set(c.space, c.defining_set));
}

}  // namespace eaqmds
