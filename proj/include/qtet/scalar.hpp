/**
 * @file scalar.hpp
 * @brief The coefficient field: rational functions in q, t, a, b, c.
 *
 * A Scalar is a pair num/den of Laurent polynomials in canonical form:
 * the denominator is a primitive integer polynomial with positive leading
 * coefficient and exponent floor zero, or exactly 1 whenever the fraction
 * reduces to a Laurent polynomial. Reduction uses content stripping,
 * monomial shifts and exact-division probes; no full multivariate gcd.
 * Equality is decided by cross multiplication, which is sound regardless
 * of any residual common polynomial factor.
 *
 * Also provides the q-combinatorics primitives ([n], [n]!, binomials,
 * Pochhammer products) and exact specialization at rational points.
 */
#pragma once

#include <map>
#include <string>

#include "qtet/laurent.hpp"

namespace qtet {

class Scalar {
  public:
    Scalar() : num_(), den_(Laurent::one()) {}
    Scalar(const Rat& r) : num_(Laurent(r)), den_(Laurent::one()) {}
    Scalar(long n) : num_(Laurent(Rat(n))), den_(Laurent::one()) {}
    Scalar(int n) : Scalar(static_cast<long>(n)) {}
    explicit Scalar(const Laurent& p) : num_(p), den_(Laurent::one()) {}
    Scalar(const Laurent& num, const Laurent& den);

    static Scalar variable(Var v, std::int64_t e = 1) {
        return Scalar(Laurent::variable(v, e));
    }

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    // Only meaningful for constants.
    Rat constant_value() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inv() const;
    Scalar pow(long e) const;

    // Exact equality of the represented rational functions.
    bool eq(const Scalar& o) const;
    bool operator==(const Scalar& o) const { return eq(o); }

    std::string str() const;

    friend Scalar operator*(const Rat& r, const Scalar& s) { return Scalar(r) * s; }

  private:
    void normalize();

    Laurent num_;
    Laurent den_;
};

// ---- q-combinatorics on an arbitrary deformation parameter ----

// [n] = (p^n - p^-n)/(p - p^-1), closed Laurent form when p is the
// indeterminate.
Scalar q_bracket(long n, const Scalar& p);
Scalar q_factorial(long n, const Scalar& p);
Scalar q_binomial(long n, long i, const Scalar& p);
// (base; step)_n = (1-base)(1-base*step)...(1-base*step^(n-1)).
Scalar q_pochhammer(const Scalar& base, const Scalar& step, long n);

inline Scalar sym_q() { return Scalar::variable(Var::q); }
inline Scalar sym_t() { return Scalar::variable(Var::t); }

// Convenience overloads on the indeterminate q.
inline Scalar q_bracket(long n) { return q_bracket(n, sym_q()); }
inline Scalar q_factorial(long n) { return q_factorial(n, sym_q()); }
inline Scalar q_binomial(long n, long i) { return q_binomial(n, i, sym_q()); }

// ---- specialization ----

struct degenerate_parameter : std::runtime_error {
    explicit degenerate_parameter(const std::string& what)
        : std::runtime_error(what) {}
};

/**
 * An assignment of exact rational values to indeterminates. The q value
 * must avoid {0, 1, -1} and the t value, when present, must be nonzero
 * and avoid {q^(d-2n+1) : 1 <= n <= d} for the working diameter.
 */
struct SpecPoint {
    std::map<Var, Rat> assignments;

    SpecPoint() = default;
    SpecPoint(std::initializer_list<std::pair<const Var, Rat>> init)
        : assignments(init) {}

    bool has(Var v) const { return assignments.count(v) != 0; }
    const Rat& at(Var v) const;

    // Throws degenerate_parameter when a guard fails. The diameter bounds
    // the excluded t locus; pass the largest diameter in play.
    void validate(int max_diameter) const;

    static SpecPoint default_point();
};

// Exact evaluation; throws degenerate_parameter when the denominator
// vanishes at the point, naming the offending factor.
Rat specialize(const Scalar& s, const SpecPoint& p);

// Parses the canonical serialization produced by Scalar::str().
Scalar parse_scalar(const std::string& text);

}  // namespace qtet
