#include "ipr/rational.hpp"

#include "ipr/errors.hpp"

#include <cctype>
#include <ostream>

namespace ipr {

namespace {

mpq_class make_canonical(const mpz_class& num, const mpz_class& den) {
    if (den == 0) {
        throw InvalidArgument("rational with zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

} // namespace

Rational::Rational(long num, long den) : v_(make_canonical(mpz_class(num), mpz_class(den))) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(make_canonical(num, den)) {}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num_part = slash == std::string::npos ? text : text.substr(0, slash);
    const std::string den_part = slash == std::string::npos ? std::string("1") : text.substr(slash + 1);

    std::size_t num_digits_from = 0;
    if (!num_part.empty() && num_part[0] == '-') num_digits_from = 1;
    if (!all_digits(num_part, num_digits_from, num_part.size()) ||
        !all_digits(den_part, 0, den_part.size())) {
        throw ParseError("invalid rational literal '" + text + "'");
    }

    mpz_class num(num_part, 10);
    mpz_class den(den_part, 10);
    if (den == 0) {
        throw ParseError("rational literal '" + text + "' has zero denominator");
    }
    return Rational(num, den);
}

bool Rational::as_positive_int(std::uint64_t bound, std::uint64_t& out) const {
    if (!is_integer() || !is_positive()) return false;
    const mpz_class& n = v_.get_num();
    if (!n.fits_ulong_p()) return false;
    const std::uint64_t value = n.get_ui();
    if (value < 1 || value > bound) return false;
    out = value;
    return true;
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-v_));
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw InvalidArgument("rational division by zero");
    }
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace ipr
