#include "qtet/laurent.hpp"

#include <sstream>

namespace qtet {

Expo expo_add(const Expo& x, const Expo& y) {
    Expo r;
    for (int i = 0; i < kNumVars; ++i) r[i] = x[i] + y[i];
    return r;
}

Expo expo_sub(const Expo& x, const Expo& y) {
    Expo r;
    for (int i = 0; i < kNumVars; ++i) r[i] = x[i] - y[i];
    return r;
}

Expo expo_min(const Expo& x, const Expo& y) {
    Expo r;
    for (int i = 0; i < kNumVars; ++i) r[i] = x[i] < y[i] ? x[i] : y[i];
    return r;
}

Expo expo_neg(const Expo& x) {
    Expo r;
    for (int i = 0; i < kNumVars; ++i) r[i] = -x[i];
    return r;
}

Laurent::Laurent(const Rat& constant) {
    if (constant != 0) terms_.emplace(kExpoZero, constant);
}

Laurent::Laurent(const Rat& coeff, const Expo& e) {
    if (coeff != 0) terms_.emplace(e, coeff);
}

Laurent Laurent::variable(Var v, std::int64_t e) {
    Expo ex = kExpoZero;
    ex[static_cast<int>(v)] = e;
    return Laurent(Rat(1), ex);
}

bool Laurent::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == kExpoZero &&
           terms_.begin()->second == 1;
}

bool Laurent::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == kExpoZero);
}

const std::pair<const Expo, Rat>& Laurent::leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero");
    return *terms_.rbegin();
}

Expo Laurent::exponent_floor() const {
    if (terms_.empty()) return kExpoZero;
    Expo m = terms_.begin()->first;
    for (const auto& [e, c] : terms_) m = expo_min(m, e);
    return m;
}

bool Laurent::depends_on(Var v) const {
    const int i = static_cast<int>(v);
    for (const auto& [e, c] : terms_)
        if (e[i] != 0) return true;
    return false;
}

void Laurent::add_term(const Expo& e, const Rat& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(e, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent r = *this;
    r += o;
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
    Laurent r = *this;
    r -= o;
    return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    if (terms_.empty() || o.terms_.empty()) return r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(expo_add(e1, e2), c1 * c2);
    return r;
}

Laurent Laurent::scaled(const Rat& r) const {
    Laurent out;
    if (r == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * r);
    return out;
}

Laurent Laurent::shifted(const Expo& e, const Rat& coeff) const {
    Laurent out;
    if (coeff == 0) return out;
    for (const auto& [te, tc] : terms_) out.terms_.emplace(expo_add(te, e), tc * coeff);
    return out;
}

std::optional<Laurent> Laurent::divided_exact(const Laurent& o) const {
    if (o.terms_.empty()) throw zero_divide("polynomial division by zero");
    if (terms_.empty()) return Laurent();
    // Shift both operands into the ordinary polynomial ring, divide there,
    // and shift the quotient back.
    const Expo sf = exponent_floor();
    const Expo sg = o.exponent_floor();
    Laurent f = shifted(expo_neg(sf));
    const Laurent g = o.shifted(expo_neg(sg));
    const auto& [ge, gc] = g.leading();

    Laurent quot;
    while (!f.is_zero()) {
        const auto& [fe, fc] = f.leading();
        Expo m = expo_sub(fe, ge);
        for (int i = 0; i < kNumVars; ++i)
            if (m[i] < 0) return std::nullopt;
        const Rat coeff = fc / gc;
        quot.add_term(m, coeff);
        f -= g.shifted(m, coeff);
    }
    return quot.shifted(expo_sub(sf, sg));
}

Rat Laurent::content() const {
    if (terms_.empty()) return Rat(1);
    Int num_gcd = 0;
    Int den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat r(num_gcd, den_lcm);
    r.canonicalize();
    return r;
}

Rat Laurent::evaluate(const std::array<Rat, kNumVars>& point) const {
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (int i = 0; i < kNumVars; ++i)
            if (e[i] != 0) term *= rat_pow(point[i], e[i]);
        acc += term;
    }
    return acc;
}

Laurent Laurent::substituted(Var v, const Rat& value) const {
    const int i = static_cast<int>(v);
    Laurent out;
    for (const auto& [e, c] : terms_) {
        Expo e2 = e;
        e2[i] = 0;
        out.add_term(e2, c * rat_pow(value, e[i]));
    }
    return out;
}

std::string Laurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << rat_str(it->second);
        for (int i = 0; i < kNumVars; ++i)
            if (it->first[i] != 0) os << "*" << kVarNames[i] << "^" << it->first[i];
    }
    return os.str();
}

}  // namespace qtet
