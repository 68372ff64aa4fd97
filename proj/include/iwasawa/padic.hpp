#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace iwasawa {

bool is_prime(const mpz_class& n);

mpz_class powmod(const mpz_class& base, const mpz_class& exp, const mpz_class& mod);
mpz_class invmod(const mpz_class& a, const mpz_class& mod);

// p^e as a checked 64-bit value.
long long ipow_ll(long p, long e);

/// Prime factorization of |n|, exponents collected, factors ascending.
/// Trial division up to 10^6 followed by Brent's rho; throws resource_error
/// if a composite cofactor survives.
std::vector<std::pair<mpz_class, unsigned>> factorize(const mpz_class& n);

/// Exponent of the prime p in x.  x = 0 is a domain error.
long vp(const mpz_class& x, const mpz_class& p);

/// Least e >= 1 with a^e = 1 (mod m).  Requires gcd(a, m) = 1.
mpz_class mult_order(const mpz_class& a, const mpz_class& m);

// Per-prime splitting invariants of the p-power cyclotomic tower over Q.
// P = p^N is the number of places of the tower above ell; N is the level at
// which ell stops splitting.
struct SplittingProfile {
    long p = 0;
    long ell = 0;
    long N = 0;
    long long P = 0;
    long ell_mod_p = 0;
    long ell_mod_4 = 0;
};

SplittingProfile splitting_profile(long p, long ell);

/// Brute-force count of places above ell at tower level n: orbits of
/// multiplication-by-ell on (Z/m)^x modulo its torsion lift, m = p^{n+1}
/// for odd p and 2^{n+2} for p = 2.  Independent oracle for P = p^min(n,N).
long long splitting_orbit_count(long p, long ell, long n);

/// Teichmuller lift: the unique (p-1)-th root of unity congruent to a mod p,
/// returned mod p^k.  Computed by iterated p-th powering; odd p only.
mpz_class teichmuller(const mpz_class& a, long p, long k);

/// gamma(a) in [0, p^n) with a * teichmuller(a)^-1 = (1+p)^gamma(a) mod p^{n+1}.
mpz_class gamma_index(const mpz_class& a, long p, long n);

// Raw Kronecker symbol (a/b), no validation.
int kronecker_symbol(const mpz_class& a, const mpz_class& b);

bool is_fundamental_discriminant(const mpz_class& d);

/// Kronecker symbol (d/ell) for a negative fundamental discriminant:
/// 1 = split, -1 = inert, 0 = ramified.
int kronecker(const mpz_class& d, const mpz_class& ell);

} // namespace iwasawa
