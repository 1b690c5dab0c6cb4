#include "semicanon/rng.hpp"

#include <limits>

namespace semicanon {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw Error(errc::InvalidParams, "below(0)");
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t overhang = (kMax % n + 1) % n;  // 2^64 mod n
    for (;;) {
        std::uint64_t x = gen_();
        if (x <= kMax - overhang) return x % n;
    }
}

long long Rng::int_in(long long lo, long long hi) {
    if (lo > hi) throw Error(errc::InvalidParams, "empty integer range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(below(span));
}

Fe Rng::scalar(const Field& f) {
    if (f.is_rational()) return f.from_int(int_in(-(1 << 20), 1 << 20));
    return Fe::prime_element(below(f.modulus()), f.modulus());
}

Fe Rng::nonzero_scalar(const Field& f) {
    for (;;) {
        Fe v = scalar(f);
        if (!v.is_zero()) return v;
    }
}

}  // namespace semicanon
