#include "primsplit/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace primsplit {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

Rational Rational::parse(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view num = text, den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!is_int(den)) throw std::invalid_argument("Rational: bad denominator in '" + std::string(text) + "'");
    }
    if (!is_int(num)) throw std::invalid_argument("Rational: bad literal '" + std::string(text) + "'");
    // mpz_set_str does not accept a leading '+'
    auto to_mpz = [](std::string_view s) {
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        return mpz_class(std::string(s), 10);
    };
    mpz_class d = den.empty() ? mpz_class(1) : to_mpz(den);
    return Rational(to_mpz(num), d);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace primsplit
