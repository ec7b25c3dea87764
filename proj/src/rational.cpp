#include "effa/rational.hpp"

#include "effa/error.hpp"

#include <cctype>
#include <ostream>

namespace effa {

Rational::Rational(long n, long d) {
    if (d == 0) {
        throw InputError("zero denominator");
    }
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw InputError("division by zero");
    }
    q_ /= o.q_;
    return *this;
}

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) {
        ++i;
    }
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

std::string strip_plus(std::string_view s) {
    if (!s.empty() && s[0] == '+') {
        s.remove_prefix(1);
    }
    return std::string(s);
}

} // namespace

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    if (!valid_integer(num, true)) {
        throw InputError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class n(strip_plus(num));
    mpz_class d(1);
    if (slash != std::string_view::npos) {
        const std::string_view den = text.substr(slash + 1);
        if (!valid_integer(den, false)) {
            throw InputError("malformed rational '" + std::string(text) + "'");
        }
        d = mpz_class(std::string(den));
        if (d == 0) {
            throw InputError("zero denominator in '" + std::string(text) + "'");
        }
    }
    return Rational(mpq_class(n, d));
}

std::string Rational::str() const {
    if (q_.get_den() == 1) {
        return q_.get_num().get_str();
    }
    return q_.get_str();
}

std::string Rational::decimal(int digits) const {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class n = q_.get_num();
    const bool neg = n < 0;
    if (neg) {
        n = -n;
    }
    mpz_class scaled = n * scale / q_.get_den();
    mpz_class int_part = scaled / scale;
    mpz_class frac = scaled % scale;
    std::string out = (neg ? "-" : "") + int_part.get_str();
    if (digits > 0) {
        std::string f = frac.get_str();
        out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
    }
    return out;
}

Rational Rational::pow2_inv(unsigned n) {
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 2, n);
    return Rational(mpq_class(mpz_class(1), d));
}

std::size_t Rational::hash() const {
    const std::size_t a = std::hash<std::string>{}(q_.get_num().get_str(16));
    const std::size_t b = std::hash<std::string>{}(q_.get_den().get_str(16));
    return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace effa
