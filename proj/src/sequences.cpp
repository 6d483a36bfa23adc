#include "fibcheb/sequences.hpp"

#include <utility>
#include <vector>

namespace fibcheb {

namespace {

constexpr SeqIndex kTableMax = 1024;

// (F_n, F_{n+1}) by index doubling:
//   F_{2m}   = F_m (2 F_{m+1} - F_m)
//   F_{2m+1} = F_m^2 + F_{m+1}^2
std::pair<Integer, Integer> fib_pair(unsigned long long n) {
    if (n == 0) return {Integer(0), Integer(1)};
    auto [a, b] = fib_pair(n >> 1);
    Integer c = a * (2 * b - a);
    Integer d = a * a + b * b;
    if (n & 1) return {d, c + d};
    return {c, d};
}

struct SeqTable {
    std::vector<Integer> fib, lucas;
    SeqTable() {
        fib.resize(kTableMax + 2);
        lucas.resize(kTableMax + 2);
        fib[0] = 0;
        fib[1] = 1;
        lucas[0] = 2;
        lucas[1] = 1;
        for (SeqIndex i = 2; i <= kTableMax + 1; ++i) {
            fib[i] = fib[i - 1] + fib[i - 2];
            lucas[i] = lucas[i - 1] + lucas[i - 2];
        }
    }
};

const SeqTable& table() {
    static const SeqTable t;
    return t;
}

}  // namespace

Integer fib(SeqIndex n) {
    if (n < 0) {
        Integer v = fib(-n);
        return (-n) % 2 == 0 ? Integer(-v) : v;
    }
    if (n <= kTableMax) return table().fib[static_cast<std::size_t>(n)];
    return fib_pair(static_cast<unsigned long long>(n)).first;
}

Integer lucas(SeqIndex n) {
    if (n < 0) {
        Integer v = lucas(-n);
        return (-n) % 2 == 0 ? v : Integer(-v);
    }
    if (n <= kTableMax) return table().lucas[static_cast<std::size_t>(n)];
    auto [f, f1] = fib_pair(static_cast<unsigned long long>(n));
    return 2 * f1 - f;  // L_n = F_{n-1} + F_{n+1}
}

Integer binom(long long n, long long k) {
    if (n < 0) throw UsageError("binom requires n >= 0");
    if (k < 0 || k > n) return Integer(0);
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Rational coeff_c(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) throw UsageError("coeff_c requires 0 <= k <= n");
    if (n == 0) return Rational(1);
    return make_rational(to_integer(n) * binom(n + k, n - k), to_integer(n + k));
}

Rational coeff_d(long long n, long long k) {
    if (n < 1 || k < 0 || k > n) throw UsageError("coeff_d requires n >= 1 and 0 <= k <= n");
    if (k == 0) return Rational(0);
    return make_rational(to_integer(k) * binom(n + k, n - k), to_integer(n + k));
}

}  // namespace fibcheb
