#include "sympow/bigint.hpp"

namespace sympow {

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    // r stays integral at every step: after i iterations r == C(n-k+i, i).
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

}  // namespace sympow
