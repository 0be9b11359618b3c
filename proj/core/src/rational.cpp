#include "chebadj/rational.hpp"

#include <cctype>
#include <ostream>

namespace chebadj {

Rational::Rational(const BigInt& num, const BigInt& den) : q_(num, den) {
    if (sgn(den) == 0) throw DomainError("rational with zero denominator");
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero rational");
    q_ /= o.q_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

namespace {

bool valid_integer_token(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// mpz_set_str accepts '-' but not '+'
std::string_view strip_plus(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return s;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num_part = text.substr(0, slash);
    std::string_view den_part = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer_token(num_part) || !valid_integer_token(den_part))
        throw DomainError("malformed rational: '" + std::string(text) + "'");
    BigInt num(std::string(strip_plus(num_part)), 10);
    BigInt den(std::string(strip_plus(den_part)), 10);
    if (sgn(den) == 0) throw DomainError("malformed rational (zero denominator): '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string Rational::to_string() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational pow(const Rational& x, long e) {
    if (e < 0) {
        if (x.is_zero()) throw DomainError("zero raised to a negative power");
        return pow(Rational(1) / x, -e);
    }
    Rational acc(1);
    Rational base = x;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

} // namespace chebadj
