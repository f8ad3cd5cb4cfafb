#include "eaqmds/cosets.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace eaqmds {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 neg_q_of(const CyclotomicSpace& sp, u64 z) {
    u64 t = mulmod(sp.q % sp.rn, z, sp.rn);
    return t == 0 ? 0 : sp.rn - t;
}

}  // namespace

CyclotomicSpace make_space(std::uint64_t q, std::uint64_t n, SRule rule) {
    if (!is_prime_power(q)) {
        throw NonPrimeCharacteristic("q = " + std::to_string(q) + " is not a prime power");
    }
    if (n == 0 || std::gcd(q, n) != 1) {
        throw NonCoprimeLength("length " + std::to_string(n) +
                               " is not coprime to q = " + std::to_string(q));
    }
    CyclotomicSpace sp;
    sp.q = q;
    sp.n = n;
    sp.r = q + 1;
    sp.rn = sp.r * n;

    if (rule == SRule::odd_q) {
        if (q % 2 == 0) {
            throw SNotInAmbient("(q^2 + 1)/2 is not an integer for even q");
        }
        sp.s = ((q * q + 1) / 2) % sp.rn;
    } else {
        if (q % 2 != 0) {
            throw SNotInAmbient("base point (q^2 - q)/2 lands outside O for odd q");
        }
        sp.s = ((q * q - q) / 2) % sp.rn;
    }
    if (sp.s % sp.r != 1) {
        throw SNotInAmbient("base point " + std::to_string(sp.s) +
                            " is not congruent to 1 mod r");
    }

    const u64 q2 = mulmod(q % sp.rn, q % sp.rn, sp.rn);
    u64 x = q2 % sp.rn;
    sp.m = 1;
    while (x != 1) {
        x = mulmod(x, q2, sp.rn);
        ++sp.m;
        if (sp.m > sp.rn) {
            throw NonCoprimeLength("q^2 is not invertible mod rn");  // unreachable
        }
    }
    return sp;
}

std::uint64_t element_at(const CyclotomicSpace& sp, std::uint64_t j) {
    if (j >= sp.n) {
        throw NotInAmbient("position " + std::to_string(j) + " exceeds length " +
                           std::to_string(sp.n));
    }
    return 1 + sp.r * j;
}

std::uint64_t position_of(const CyclotomicSpace& sp, std::uint64_t z) {
    if (z >= sp.rn || z % sp.r != 1) {
        throw NotInAmbient(std::to_string(z) + " is not of the form 1 + r j mod rn");
    }
    return (z - 1) / sp.r;
}

std::vector<std::uint64_t> coset_of(const CyclotomicSpace& sp, std::uint64_t z) {
    z %= sp.rn;
    position_of(sp, z);  // membership check
    const u64 q2 = mulmod(sp.q % sp.rn, sp.q % sp.rn, sp.rn);
    std::vector<u64> out;
    u64 x = z;
    do {
        out.push_back(x);
        x = mulmod(x, q2, sp.rn);
    } while (x != z);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> neg_q_image(const CyclotomicSpace& sp,
                                       const std::vector<std::uint64_t>& zs) {
    std::vector<u64> out;
    out.reserve(zs.size());
    for (u64 z : zs) {
        position_of(sp, z % sp.rn);
        out.push_back(neg_q_of(sp, z % sp.rn));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_dual_containing(const CyclotomicSpace& sp, const std::vector<std::uint64_t>& zs) {
    std::vector<u64> sorted = zs;
    std::sort(sorted.begin(), sorted.end());
    for (u64 z : sorted) {
        if (std::binary_search(sorted.begin(), sorted.end(), neg_q_of(sp, z % sp.rn))) {
            return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> dual_defining_set(const CyclotomicSpace& sp,
                                             const std::vector<std::uint64_t>& zs) {
    std::vector<u64> image = neg_q_image(sp, zs);
    std::vector<u64> out;
    out.reserve(sp.n - image.size());
    for (u64 j = 0; j < sp.n; ++j) {
        const u64 z = 1 + sp.r * j;
        if (!std::binary_search(image.begin(), image.end(), z)) out.push_back(z);
    }
    return out;
}

DefiningSetDecomposition decompose(const CyclotomicSpace& sp,
                                   const std::vector<std::uint64_t>& zs) {
    std::vector<u64> sorted = zs;
    std::sort(sorted.begin(), sorted.end());
    std::vector<u64> image = neg_q_image(sp, sorted);
    DefiningSetDecomposition d;
    for (u64 z : sorted) {
        if (std::binary_search(image.begin(), image.end(), z)) {
            d.z1.push_back(z);
        } else {
            d.z2.push_back(z);
        }
    }
    return d;
}

std::uint64_t bch_designed_distance(const CyclotomicSpace& sp,
                                    const std::vector<std::uint64_t>& zs) {
    if (zs.empty()) return 1;
    std::vector<u64> pos;
    pos.reserve(zs.size());
    for (u64 z : zs) pos.push_back(position_of(sp, z % sp.rn));
    std::sort(pos.begin(), pos.end());
    pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
    if (pos.size() == sp.n) return sp.n + 1;  // full ambient set

    // Duplicate shifted by n so a run wrapping past n - 1 is seen once.
    std::vector<u64> ext = pos;
    for (u64 p : pos) ext.push_back(p + sp.n);
    u64 best = 1, run = 1;
    for (std::size_t i = 1; i < ext.size(); ++i) {
        run = (ext[i] == ext[i - 1] + 1) ? run + 1 : 1;
        best = std::max(best, run);
    }
    return std::min<u64>(best, sp.n) + 1;
}

}  // namespace eaqmds
