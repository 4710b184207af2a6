#include "koszulkit/scalar.hpp"

#include <charconv>

namespace koszulkit {

CharacteristicMismatch::CharacteristicMismatch(std::uint32_t lhs, std::uint32_t rhs)
    : std::logic_error("characteristic mismatch: " + std::to_string(lhs) + " vs " +
                       std::to_string(rhs)) {}

namespace {

std::uint64_t reduce(long v, std::uint32_t p) {
    long r = v % static_cast<long>(p);
    if (r < 0) r += p;
    return static_cast<std::uint64_t>(r);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) acc = acc * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return acc;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Scalar::Scalar(std::uint32_t characteristic, long value) : p_(characteristic) {
    if (p_ == 0)
        q_ = value;
    else
        r_ = reduce(value, p_);
}

Scalar Scalar::rational(const mpq_class& q) {
    Scalar s;
    s.q_ = q;
    s.q_.canonicalize();
    return s;
}

Scalar Scalar::residue(std::uint32_t p, std::uint64_t r) {
    Scalar s;
    s.p_ = p;
    s.r_ = r % p;
    return s;
}

bool Scalar::is_zero() const noexcept { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }

bool Scalar::is_one() const noexcept { return p_ == 0 ? q_ == 1 : r_ == 1; }

void Scalar::check(const Scalar& o) const {
    if (p_ != o.p_) throw CharacteristicMismatch(p_, o.p_);
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (p_ == 0)
        s.q_ = -q_;
    else
        s.r_ = r_ == 0 ? 0 : p_ - r_;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check(o);
    if (p_ == 0)
        q_ += o.q_;
    else
        r_ = (r_ + o.r_) % p_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check(o);
    if (p_ == 0)
        q_ -= o.q_;
    else
        r_ = (r_ + p_ - o.r_) % p_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check(o);
    if (p_ == 0)
        q_ *= o.q_;
    else
        r_ = r_ * o.r_ % p_;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check(o);
    return *this *= o.inverse();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero scalar");
    Scalar s = *this;
    if (p_ == 0)
        s.q_ = 1 / q_;
    else
        s.r_ = pow_mod(r_, p_ - 2, p_);
    return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
    a.check(b);
    return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const {
    if (p_ != 0) return std::to_string(r_);
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Field::Field(std::uint32_t characteristic) : p_(characteristic) {
    if (p_ != 0 && !is_prime(p_))
        throw std::invalid_argument("characteristic must be 0 or a prime, got " +
                                    std::to_string(p_));
}

Scalar Field::parse(std::string_view text) const {
    auto bad = [&] { return ScalarParseError("malformed scalar '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    auto is_int = [](std::string_view s) {
        std::size_t i = (s.size() > 0 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!is_int(num) || (slash != std::string_view::npos && !is_int(den))) throw bad();
    std::string num_s(num.front() == '+' ? num.substr(1) : num);
    mpz_class n(num_s, 10);
    mpz_class d = 1;
    if (slash != std::string_view::npos) {
        std::string den_s(den.front() == '+' ? den.substr(1) : den);
        d = mpz_class(den_s, 10);
        if (d == 0) throw bad();
    }
    if (p_ == 0) return Scalar::rational(mpq_class(n, d));
    mpz_class pm = p_;
    mpz_class nr = n % pm;
    if (nr < 0) nr += pm;
    mpz_class dr = d % pm;
    if (dr < 0) dr += pm;
    if (dr == 0) throw ScalarParseError("denominator vanishes mod " + std::to_string(p_));
    Scalar a = Scalar::residue(p_, nr.get_ui());
    Scalar b = Scalar::residue(p_, dr.get_ui());
    return a / b;
}

} // namespace koszulkit
