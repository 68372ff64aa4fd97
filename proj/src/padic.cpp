#include "iwasawa/padic.hpp"

#include "iwasawa/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace iwasawa {

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

mpz_class powmod(const mpz_class& base, const mpz_class& exp, const mpz_class& mod) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

mpz_class invmod(const mpz_class& a, const mpz_class& mod) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw precondition_error("invmod: element is not invertible");
    return r;
}

long long ipow_ll(long p, long e) {
    if (e < 0) throw precondition_error("ipow_ll: negative exponent");
    long long r = 1;
    for (long i = 0; i < e; ++i) {
        if (r > (1LL << 62) / p)
            throw resource_error("ipow_ll: p^" + std::to_string(e) + " exceeds 64 bits");
        r *= p;
    }
    return r;
}

namespace {

mpz_class mod_pos(const mpz_class& a, const mpz_class& m) {
    mpz_class r = a % m;
    if (r < 0) r += m;
    return r;
}

// Brent's cycle variant of the rho method, deterministic parameter sweep.
mpz_class rho_factor(const mpz_class& n) {
    for (long c = 1; c <= 40; ++c) {
        mpz_class x = 2, y = 2, d = 1;
        long limit = 1 << 22;
        for (long i = 0; i < limit && d == 1; ++i) {
            x = mod_pos(x * x + c, n);
            y = mod_pos(y * y + c, n);
            y = mod_pos(y * y + c, n);
            mpz_class diff = x - y;
            if (diff == 0) break; // cycle without factor; try next c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
    throw resource_error("factorize: no factor found for " + n.get_str() +
                         "; supply the factorization explicitly");
}

} // namespace

std::vector<std::pair<mpz_class, unsigned>> factorize(const mpz_class& n_in) {
    mpz_class n = abs(n_in);
    if (n == 0) throw precondition_error("factorize: zero has no factorization");
    std::map<mpz_class, unsigned> acc;
    for (long q : {2L, 3L, 5L}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
            acc[q]++;
            n /= q;
        }
    }
    for (long q = 7; q <= 1000000 && n > 1; q += 2) {
        if (mpz_class(q) * q > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
            acc[q]++;
            n /= q;
        }
    }
    std::vector<mpz_class> stack;
    if (n > 1) stack.push_back(n);
    while (!stack.empty()) {
        mpz_class m = stack.back();
        stack.pop_back();
        if (is_prime(m)) {
            acc[m]++;
            continue;
        }
        // perfect powers slip through rho
        if (mpz_perfect_square_p(m.get_mpz_t())) {
            mpz_class r;
            mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
            stack.push_back(r);
            stack.push_back(r);
            continue;
        }
        mpz_class d = rho_factor(m);
        stack.push_back(d);
        stack.push_back(m / d);
    }
    return {acc.begin(), acc.end()};
}

long vp(const mpz_class& x, const mpz_class& p) {
    if (x == 0) throw precondition_error("vp: valuation of zero is infinite");
    if (!is_prime(p)) throw precondition_error("vp: p must be prime");
    mpz_class rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

mpz_class mult_order(const mpz_class& a, const mpz_class& m) {
    if (m < 2) throw precondition_error("mult_order: modulus must be >= 2");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (g != 1) throw precondition_error("mult_order: arguments are not coprime");
    mpz_class base = mod_pos(a, m);
    mpz_class x = base, e = 1;
    const long long cap = 100000000LL;
    while (x != 1) {
        x = mod_pos(x * base, m);
        ++e;
        if (e > cap) throw resource_error("mult_order: order exceeds iteration cap");
    }
    return e;
}

SplittingProfile splitting_profile(long p, long ell) {
    if (!is_prime(mpz_class(p))) throw precondition_error("splitting_profile: p must be prime");
    if (!is_prime(mpz_class(ell))) throw precondition_error("splitting_profile: ell must be prime");
    if (ell == p) throw precondition_error("splitting_profile: ell must differ from p");
    SplittingProfile sp;
    sp.p = p;
    sp.ell = ell;
    sp.ell_mod_p = ell % p;
    sp.ell_mod_4 = ell % 4;
    if (p == 2) {
        mpz_class l(ell);
        sp.N = vp(l * l - 1, 2) - 3;
    } else {
        long d = mult_order(mpz_class(ell), mpz_class(p)).get_si();
        mpz_class t;
        mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(ell),
                      static_cast<unsigned long>(d));
        sp.N = vp(t - 1, p) - 1;
    }
    if (sp.N < 0) throw internal_error("splitting_profile: negative splitting level");
    sp.P = ipow_ll(p, sp.N);
    return sp;
}

long long splitting_orbit_count(long p, long ell, long n) {
    if (n < 0) throw precondition_error("splitting_orbit_count: level must be >= 0");
    splitting_profile(p, ell); // validate inputs
    long long M = (p == 2) ? ipow_ll(2, n + 2) : ipow_ll(p, n + 1);
    // torsion lift subgroup: the p-1 solutions of x^{p-1} = 1 (odd p), {+-1} for p=2
    std::vector<long long> torsion;
    if (p == 2) {
        torsion = {1, M - 1};
    } else {
        for (long long x = 1; x < M; ++x) {
            if (std::gcd(x, M) != 1) continue;
            if (powmod(x, p - 1, M) == 1) torsion.push_back(x);
        }
    }
    // canonical representative of each coset x*T
    std::vector<long long> canon(M, -1);
    for (long long x = 1; x < M; ++x) {
        if (std::gcd(x, M) != 1) continue;
        long long best = M;
        for (long long t : torsion) best = std::min(best, (x * t) % M);
        canon[x] = best;
    }
    long long lred = ((ell % M) + M) % M;
    std::vector<char> seen(M, 0);
    long long orbits = 0;
    for (long long x = 1; x < M; ++x) {
        if (canon[x] != x || seen[x]) continue;
        ++orbits;
        long long y = x;
        while (!seen[y]) {
            seen[y] = 1;
            y = canon[(y * lred) % M];
        }
    }
    return orbits;
}

mpz_class teichmuller(const mpz_class& a, long p, long k) {
    if (p == 2) throw precondition_error("teichmuller: p = 2 unsupported");
    if (!is_prime(mpz_class(p))) throw precondition_error("teichmuller: p must be prime");
    if (k < 1) throw precondition_error("teichmuller: precision must be >= 1");
    if (mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(p)))
        throw precondition_error("teichmuller: a must be coprime to p");
    mpz_class m;
    mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    mpz_class x = mod_pos(a, m);
    for (long i = 0; i < k + 4; ++i) {
        mpz_class y = powmod(x, p, m);
        if (y == x) return x;
        x = y;
    }
    throw internal_error("teichmuller: iteration did not stabilize");
}

mpz_class gamma_index(const mpz_class& a, long p, long n) {
    if (p == 2) throw precondition_error("gamma_index: p = 2 unsupported");
    if (!is_prime(mpz_class(p))) throw precondition_error("gamma_index: p must be prime");
    if (n < 0) throw precondition_error("gamma_index: level must be >= 0");
    if (mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(p)))
        throw precondition_error("gamma_index: a must be coprime to p");
    if (n == 0) return 0;
    mpz_class m;
    mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(n + 1));
    mpz_class w = teichmuller(a, p, n + 1);
    mpz_class u = mod_pos(a * invmod(w, m), m);
    mpz_class order;
    mpz_ui_pow_ui(order.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(n));
    mpz_class base = p + 1;
    if (order <= 729) {
        mpz_class x = 1;
        for (mpz_class g = 0; g < order; ++g) {
            if (x == u) return g;
            x = mod_pos(x * base, m);
        }
    } else {
        // baby-step / giant-step on the 1-unit group
        mpz_class s;
        mpz_sqrt(s.get_mpz_t(), order.get_mpz_t());
        s += 1;
        std::map<mpz_class, mpz_class> baby;
        mpz_class x = 1;
        for (mpz_class j = 0; j < s; ++j) {
            baby.emplace(x, j);
            x = mod_pos(x * base, m);
        }
        mpz_class giant = invmod(powmod(base, s, m), m);
        mpz_class y = u;
        for (mpz_class i = 0; i <= s; ++i) {
            auto it = baby.find(y);
            if (it != baby.end()) return mod_pos(i * s + it->second, order);
            y = mod_pos(y * giant, m);
        }
    }
    throw internal_error("gamma_index: no exponent found (argument not a 1-unit?)");
}

int kronecker_symbol(const mpz_class& a, const mpz_class& b) {
    return mpz_kronecker(a.get_mpz_t(), b.get_mpz_t());
}

bool is_fundamental_discriminant(const mpz_class& d) {
    if (d == 0 || d == 1) return false;
    auto squarefree = [](const mpz_class& n) {
        for (auto& [q, e] : factorize(n))
            if (e > 1) return false;
        return true;
    };
    mpz_class r4 = mod_pos(d, 4);
    if (r4 == 1) return squarefree(d);
    if (r4 == 0) {
        mpz_class m = d / 4;
        mpz_class m4 = mod_pos(m, 4);
        return (m4 == 2 || m4 == 3) && squarefree(m);
    }
    return false;
}

int kronecker(const mpz_class& d, const mpz_class& ell) {
    if (d >= 0 || !is_fundamental_discriminant(d))
        throw precondition_error("kronecker: d must be a negative fundamental discriminant");
    if (!is_prime(ell)) throw precondition_error("kronecker: ell must be prime");
    return kronecker_symbol(d, ell);
}

} // namespace iwasawa
