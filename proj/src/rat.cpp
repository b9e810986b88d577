#include "rectile/rat.hpp"

#include <cctype>

namespace rectile {

Rat::Rat(long n, long d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rat::Rat(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    v_ = mpq_class(n) / mpq_class(d);
    v_.canonicalize();
}

Rat Rat::operator/(const Rat& o) const {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    return Rat(mpq_class(v_ / o.v_));
}

Rat Rat::reciprocal() const {
    if (is_zero()) throw std::domain_error("Rat: reciprocal of zero");
    return Rat(den(), num());
}

mpz_class Rat::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

Rat Rat::frac() const {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return Rat(r, v_.get_den());
}

std::optional<Rat> Rat::parse(std::string_view s) {
    // Accepts "p" or "p/q" with optional leading sign; nothing else.
    if (s.empty()) return std::nullopt;
    size_t i = 0;
    auto read_int = [&](std::string& out) -> bool {
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) out.push_back(s[i++]);
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) out.push_back(s[i++]);
        return i > start;
    };
    std::string num_s, den_s;
    if (!read_int(num_s)) return std::nullopt;
    mpz_class n(num_s), d(1);
    if (i < s.size()) {
        if (s[i] != '/') return std::nullopt;
        ++i;
        if (!read_int(den_s) || i != s.size()) return std::nullopt;
        d = mpz_class(den_s);
        if (d == 0) return std::nullopt;
    }
    return Rat(n, d);
}

std::string Rat::str() const {
    std::string out = num().get_str();
    if (den() != 1) {
        out += '/';
        out += den().get_str();
    }
    return out;
}

Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
Rat rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

mpz_class lcm_den(const mpz_class& acc, const Rat& x) {
    mpz_class out;
    mpz_lcm(out.get_mpz_t(), acc.get_mpz_t(), x.den().get_mpz_t());
    return out;
}

} // namespace rectile
