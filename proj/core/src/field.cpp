#include "semicanon/field.hpp"

namespace semicanon {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    std::uint64_t s = a + b;  // no overflow: both < 2^63
    return s >= m ? s - m : s;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a >= b ? a - b : a + (m - b);
}

// Modular inverse by extended Euclid; requires gcd(a, m) = 1.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    if (a == 0) throw Error(errc::DivisionByZero, "inverse of zero");
    long long t = 0, nt = 1;
    long long r = static_cast<long long>(m), nr = static_cast<long long>(a);
    while (nr != 0) {
        long long quot = r / nr;
        long long tmp = t - quot * nt;
        t = nt;
        nt = tmp;
        tmp = r - quot * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw Error(errc::DivisionByZero, "element not invertible mod modulus");
    if (t < 0) t += static_cast<long long>(m);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_int(long long v, std::uint64_t m) {
    long long r = v % static_cast<long long>(m);
    if (r < 0) r += static_cast<long long>(m);
    return static_cast<std::uint64_t>(r);
}

// Reduce an arbitrary-precision integer mod m.
std::uint64_t reduce_mpz(const mpz_class& v, std::uint64_t m) {
    mpz_class mm(static_cast<unsigned long>(m));
    mpz_class r = v % mm;
    if (r < 0) r += mm;
    return mpz_get_ui(r.get_mpz_t());
}

}  // namespace

Field Field::prime(std::uint64_t modulus) {
    if (modulus < 2 || modulus >= (1ull << 63))
        throw Error(errc::InvalidParams, "modulus out of range");
    return Field(modulus);
}

Fe Field::zero() const { return from_int(0); }
Fe Field::one() const { return from_int(1); }

Fe Field::from_int(long long v) const {
    if (mod_ == 0) return Fe::rational(mpq_class(static_cast<long>(v)));
    return Fe::prime_element(reduce_int(v, mod_), mod_);
}

Fe Field::from_ratio(long long num, long long den) const {
    if (den == 0) throw Error(errc::DivisionByZero, "zero denominator");
    return from_int(num) / from_int(den);
}

Fe Field::from_rational(const mpq_class& v) const {
    if (mod_ == 0) return Fe::rational(v);
    std::uint64_t num = reduce_mpz(v.get_num(), mod_);
    std::uint64_t den = reduce_mpz(v.get_den(), mod_);
    if (den == 0) throw Error(errc::DivisionByZero, "denominator vanishes in prime field");
    return Fe::prime_element(mulmod(num, invmod(den, mod_), mod_), mod_);
}

Fe Field::parse(const std::string& text) const {
    if (text.empty()) throw Error(errc::ParseError, "empty scalar");
    auto check_digits = [](const std::string& s) {
        if (s.empty()) return false;
        size_t i = s[0] == '-' ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!check_digits(num) || !check_digits(den))
        throw Error(errc::ParseError, "bad scalar literal '" + text + "'");
    mpq_class v{mpz_class(num), mpz_class(den)};
    if (v.get_den() == 0) throw Error(errc::DivisionByZero, "zero denominator in '" + text + "'");
    v.canonicalize();
    return from_rational(v);
}

Fe Fe::rational(mpq_class v) {
    if (v.get_den() == 0) throw Error(errc::DivisionByZero, "zero denominator");
    Fe e;
    e.mod_ = 0;
    v.canonicalize();
    e.q_ = std::move(v);
    return e;
}

Fe Fe::prime_element(std::uint64_t v, std::uint64_t mod) {
    Fe e;
    e.mod_ = mod;
    e.z_ = v % mod;
    e.q_ = 0;
    return e;
}

void Fe::check_same(const Fe& o) const {
    if (mod_ != o.mod_) throw Error(errc::FieldMismatch, "mixing elements of different fields");
}

bool Fe::is_one() const { return mod_ == 0 ? q_ == 1 : z_ == 1; }

Fe Fe::operator+(const Fe& o) const {
    check_same(o);
    if (mod_ == 0) return rational(q_ + o.q_);
    return prime_element(addmod(z_, o.z_, mod_), mod_);
}

Fe Fe::operator-(const Fe& o) const {
    check_same(o);
    if (mod_ == 0) return rational(q_ - o.q_);
    return prime_element(submod(z_, o.z_, mod_), mod_);
}

Fe Fe::operator*(const Fe& o) const {
    check_same(o);
    if (mod_ == 0) return rational(q_ * o.q_);
    return prime_element(mulmod(z_, o.z_, mod_), mod_);
}

Fe Fe::operator/(const Fe& o) const {
    check_same(o);
    return *this * o.inverse();
}

Fe Fe::operator-() const {
    if (mod_ == 0) return rational(-q_);
    return prime_element(z_ == 0 ? 0 : mod_ - z_, mod_);
}

Fe Fe::inverse() const {
    if (is_zero()) throw Error(errc::DivisionByZero, "inverse of zero");
    if (mod_ == 0) return rational(1 / q_);
    return prime_element(invmod(z_, mod_), mod_);
}

Fe Fe::pow(long long e) const {
    Fe base = *this;
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    Fe acc = field().one();
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool Fe::operator==(const Fe& o) const {
    if (mod_ != o.mod_) return false;
    return mod_ == 0 ? q_ == o.q_ : z_ == o.z_;
}

std::string Fe::str() const {
    if (mod_ != 0) return std::to_string(z_);
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

}  // namespace semicanon
