#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

namespace iwasawa {

// Sparse univariate polynomial over Q, exponent -> nonzero coefficient.
// The lcm machinery stores polynomials in the shifted variable x = 1 + T,
// where the tower-annihilator family is binomial; degree, gcd and lcm are
// invariant under the shift automorphism T -> x - 1.
struct QPoly {
    std::map<long long, mpq_class> c;

    static QPoly zero() { return {}; }
    static QPoly one();
    // x^e - a (monic binomial), or x^e + a via negate_const
    static QPoly binomial(long long e, const mpq_class& a, bool plus);

    bool is_zero() const { return c.empty(); }
    long long degree() const; // -1 for zero
    const mpq_class& lead() const;
    void trim();
    bool operator==(const QPoly& o) const { return c == o.c; }
};

QPoly qp_add(const QPoly& a, const QPoly& b);
QPoly qp_sub(const QPoly& a, const QPoly& b);
QPoly qp_mul(const QPoly& a, const QPoly& b);
QPoly qp_scale(const QPoly& a, const mpq_class& s);
QPoly qp_monic(const QPoly& a);
QPoly qp_rem(const QPoly& a, const QPoly& b);
QPoly qp_divexact(const QPoly& a, const QPoly& b); // throws internal_error on nonzero remainder
QPoly qp_gcd(QPoly a, QPoly b);                    // monic

/// Evaluate the shift x = T + 1, returning dense coefficients in T.
/// Intended for small degrees (tests of shift invariance).
std::vector<mpq_class> qp_unshift_dense(const QPoly& a);

// Iterated-lcm accumulator over a list of squarefree polynomials, kept as a
// pairwise-coprime factor basis so every gcd call sees one small factor.
class LcmAccumulator {
  public:
    void insert(QPoly f); // f must be squarefree
    long long degree() const;
    const std::vector<QPoly>& factors() const { return basis_; }

  private:
    std::vector<QPoly> basis_;
};

} // namespace iwasawa
