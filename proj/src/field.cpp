#include "yoneda/field.hpp"

namespace yoneda {

namespace {
bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}
} // namespace

Field Field::prime(std::int64_t p) {
    if (p > (std::int64_t(1) << 30))
        throw input_error("prime modulus too large (must be < 2^30): " + std::to_string(p));
    if (!is_prime(p)) throw input_error("not a prime: " + std::to_string(p));
    Field f;
    f.p_ = p;
    return f;
}

Q Field::normalize(const Q& x) const {
    if (is_rational()) return x;
    Z num = boost::multiprecision::numerator(x);
    Z den = boost::multiprecision::denominator(x);
    Z p(p_);
    Z n = num % p;
    if (n < 0) n += p;
    Z d = den % p;
    if (d < 0) d += p;
    if (d == 0) throw input_error("denominator not invertible mod " + std::to_string(p_));
    // invert d mod p by Fermat (p prime)
    Z inv = 1, base = d, e = p - 2;
    while (e > 0) {
        if ((e & 1) != 0) inv = (inv * base) % p;
        base = (base * base) % p;
        e >>= 1;
    }
    return Q((n * inv) % p);
}

Q Field::parse(const std::string& s) const {
    try {
        auto slash = s.find('/');
        Q v = slash == std::string::npos ? Q(Z(s)) : Q(Z(s.substr(0, slash)), Z(s.substr(slash + 1)));
        return normalize(v);
    } catch (const std::exception&) {
        throw input_error("cannot parse scalar: '" + s + "'");
    }
}

std::string Field::format(const Q& x) const {
    Q v = normalize(x);
    return v.str();
}

std::string Field::name() const {
    return is_rational() ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

} // namespace yoneda
