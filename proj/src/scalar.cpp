#include "qtet/scalar.hpp"

#include <sstream>

namespace qtet {

Scalar::Scalar(const Laurent& num, const Laurent& den) : num_(num), den_(den) {
    normalize();
}

void Scalar::normalize() {
    if (den_.is_zero()) throw zero_divide("scalar with zero denominator");
    if (num_.is_zero()) {
        den_ = Laurent::one();
        return;
    }
    for (int round = 0; round < 3; ++round) {
        if (den_.is_one()) return;
        if (den_.is_monomial()) {
            const auto& [e, c] = den_.leading();
            num_ = num_.shifted(expo_neg(e), Rat(1) / c);
            den_ = Laurent::one();
            return;
        }
        if (auto quot = num_.divided_exact(den_)) {
            num_ = *quot;
            den_ = Laurent::one();
            return;
        }
        if (num_.num_terms() <= den_.num_terms()) {
            if (auto quot = den_.divided_exact(num_)) {
                num_ = Laurent::one();
                den_ = *quot;
                continue;  // the quotient may itself be a monomial
            }
        }
        break;
    }
    // Shift the denominator into the ordinary polynomial ring.
    const Expo floor = den_.exponent_floor();
    if (floor != kExpoZero) {
        den_ = den_.shifted(expo_neg(floor));
        num_ = num_.shifted(expo_neg(floor));
    }
    // Primitive denominator with positive leading coefficient.
    Rat scale = den_.content();
    if (den_.leading().second < 0) scale = -scale;
    if (scale != 1) {
        den_ = den_.scaled(Rat(1) / scale);
        num_ = num_.scaled(Rat(1) / scale);
    }
}

Rat Scalar::constant_value() const {
    if (!is_constant()) throw std::logic_error("scalar is not constant");
    Rat n = num_.is_zero() ? Rat(0) : num_.leading().second;
    Rat d = den_.leading().second;
    return n / d;
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (den_ == o.den_) return Scalar(num_ + o.num_, den_);
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    if (den_ == o.den_) return Scalar(num_ - o.num_, den_);
    return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw zero_divide("zero divisor");
    return Scalar(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::inv() const {
    if (is_zero()) throw zero_divide("zero divisor");
    return Scalar(den_, num_);
}

Scalar Scalar::pow(long e) const {
    if (e == 0) return Scalar(1);
    const Scalar base = e < 0 ? inv() : *this;
    long n = e < 0 ? -e : e;
    Scalar acc(1);
    Scalar sq = base;
    while (n > 0) {
        if (n & 1) acc *= sq;
        n >>= 1;
        if (n) sq *= sq;
    }
    return acc;
}

bool Scalar::eq(const Scalar& o) const { return num_ * o.den_ == o.num_ * den_; }

std::string Scalar::str() const {
    if (den_.is_one()) return num_.str();
    return num_.str() + " / " + den_.str();
}

// ---- q-combinatorics ----

Scalar q_bracket(long n, const Scalar& p) {
    // (p^n - p^-n)/(p - p^-1); the division is exact.
    if (n == 0) return Scalar(0);
    return (p.pow(n) - p.pow(-n)) / (p - p.inv());
}

Scalar q_factorial(long n, const Scalar& p) {
    if (n < 0) throw std::domain_error("q_factorial of a negative integer");
    Scalar acc(1);
    for (long k = n; k >= 1; --k) acc *= q_bracket(k, p);
    return acc;
}

Scalar q_binomial(long n, long i, const Scalar& p) {
    if (n < 0 || i < 0 || i > n)
        throw std::domain_error("q_binomial requires 0 <= i <= n");
    return q_factorial(n, p) / (q_factorial(i, p) * q_factorial(n - i, p));
}

Scalar q_pochhammer(const Scalar& base, const Scalar& step, long n) {
    if (n < 0) throw std::domain_error("q_pochhammer with negative length");
    Scalar acc(1);
    Scalar factor = base;
    for (long k = 0; k < n; ++k) {
        acc *= Scalar(1) - factor;
        factor *= step;
    }
    return acc;
}

// ---- specialization ----

const Rat& SpecPoint::at(Var v) const {
    auto it = assignments.find(v);
    if (it == assignments.end())
        throw std::domain_error(std::string("no value assigned to ") +
                                kVarNames[static_cast<int>(v)]);
    return it->second;
}

void SpecPoint::validate(int max_diameter) const {
    if (has(Var::q)) {
        const Rat& q = at(Var::q);
        if (q == 0 || q == 1 || q == -1)
            throw degenerate_parameter("q must avoid {0, 1, -1}, got " + rat_str(q));
    }
    if (has(Var::t)) {
        const Rat& t = at(Var::t);
        if (t == 0) throw degenerate_parameter("t must be nonzero");
        if (has(Var::q)) {
            const Rat& q = at(Var::q);
            for (int n = 1; n <= max_diameter; ++n) {
                const long e = max_diameter - 2 * n + 1;
                if (t == rat_pow(q, e))
                    throw degenerate_parameter(
                        "t = q^" + std::to_string(e) + " is excluded for diameter " +
                        std::to_string(max_diameter));
            }
        }
    }
    for (Var v : {Var::a, Var::b, Var::c})
        if (has(v) && at(v) == 0)
            throw degenerate_parameter(std::string(kVarNames[static_cast<int>(v)]) +
                                       " must be nonzero");
}

SpecPoint SpecPoint::default_point() {
    return SpecPoint{{Var::q, rat(3, 2)},
                     {Var::t, rat(5, 7)},
                     {Var::a, rat(2, 3)},
                     {Var::b, rat(5, 2)},
                     {Var::c, rat(7, 4)}};
}

Rat specialize(const Scalar& s, const SpecPoint& p) {
    std::array<Rat, kNumVars> point;
    for (int i = 0; i < kNumVars; ++i) {
        const Var v = static_cast<Var>(i);
        if (s.num().depends_on(v) || s.den().depends_on(v)) point[i] = p.at(v);
        else point[i] = Rat(1);
    }
    const Rat dval = s.den().evaluate(point);
    if (dval == 0)
        throw degenerate_parameter("denominator vanishes at the point: " +
                                   s.den().str());
    return s.num().evaluate(point) / dval;
}

// ---- parsing of the canonical form ----

namespace {

Laurent parse_poly(const std::string& text) {
    Laurent out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(" + ", pos);
        const std::string term =
            text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        pos = end == std::string::npos ? text.size() : end + 3;

        Expo e = kExpoZero;
        std::size_t star = term.find('*');
        const std::string coeff = term.substr(0, star);
        std::size_t fpos = star == std::string::npos ? term.size() : star + 1;
        while (fpos < term.size()) {
            std::size_t fe = term.find('*', fpos);
            const std::string factor = term.substr(
                fpos, fe == std::string::npos ? std::string::npos : fe - fpos);
            fpos = fe == std::string::npos ? term.size() : fe + 1;
            std::size_t caret = factor.find('^');
            if (caret == std::string::npos)
                throw std::invalid_argument("malformed monomial factor: " + factor);
            const std::string name = factor.substr(0, caret);
            int vi = -1;
            for (int i = 0; i < kNumVars; ++i)
                if (name == kVarNames[i]) vi = i;
            if (vi < 0) throw std::invalid_argument("unknown indeterminate: " + name);
            e[vi] = std::stoll(factor.substr(caret + 1));
        }
        out.add_term(e, rat_parse(coeff));
    }
    return out;
}

}  // namespace

Scalar parse_scalar(const std::string& text) {
    const std::size_t slash = text.find(" / ");
    if (slash == std::string::npos) return Scalar(parse_poly(text));
    return Scalar(parse_poly(text.substr(0, slash)),
                  parse_poly(text.substr(slash + 3)));
}

}  // namespace qtet
