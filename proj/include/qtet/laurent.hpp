/**
 * @file laurent.hpp
 * @brief Sparse multivariate Laurent polynomials over Rat.
 *
 * The indeterminate set is fixed to {q, t, a, b, c}. Terms are held in an
 * ordered map from exponent vectors (int64, possibly negative) to nonzero
 * coefficients; the map order is the canonical term order, so equal
 * polynomials have identical representation and serialization.
 */
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "qtet/rat.hpp"

namespace qtet {

enum class Var : int { q = 0, t = 1, a = 2, b = 3, c = 4 };

inline constexpr int kNumVars = 5;
inline constexpr std::array<const char*, kNumVars> kVarNames = {"q", "t", "a",
                                                                "b", "c"};

using Expo = std::array<std::int64_t, kNumVars>;

inline constexpr Expo kExpoZero = {0, 0, 0, 0, 0};

Expo expo_add(const Expo& x, const Expo& y);
Expo expo_sub(const Expo& x, const Expo& y);
Expo expo_min(const Expo& x, const Expo& y);
Expo expo_neg(const Expo& x);

class Laurent {
  public:
    using TermMap = std::map<Expo, Rat>;

    Laurent() = default;
    explicit Laurent(const Rat& constant);
    Laurent(const Rat& coeff, const Expo& e);

    static Laurent zero() { return Laurent(); }
    static Laurent one() { return Laurent(Rat(1)); }
    // The monomial v^e.
    static Laurent variable(Var v, std::int64_t e = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    // True when the polynomial has a single term.
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t num_terms() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Leading term under the canonical (lexicographic) order.
    const std::pair<const Expo, Rat>& leading() const;

    // Componentwise minimum of all exponent vectors; zero for the zero poly.
    Expo exponent_floor() const;

    bool depends_on(Var v) const;

    Laurent operator-() const;
    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);

    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const Laurent& o) const { return terms_ != o.terms_; }

    Laurent scaled(const Rat& r) const;
    // Multiplication by the monomial coeff * x^e.
    Laurent shifted(const Expo& e, const Rat& coeff = Rat(1)) const;

    // Exact division; nullopt when o does not divide *this.
    std::optional<Laurent> divided_exact(const Laurent& o) const;

    // Positive rational r with (*this)/r having coprime integer coefficients.
    Rat content() const;

    Rat evaluate(const std::array<Rat, kNumVars>& point) const;

    // Substitutes a variable by a rational constant, keeping the rest.
    Laurent substituted(Var v, const Rat& value) const;

    // Terms in descending canonical order, e.g. "3*q^-2*t^1 + -1".
    std::string str() const;

    void add_term(const Expo& e, const Rat& coeff);

  private:
    TermMap terms_;
};

}  // namespace qtet
