#include "gop/pochhammer.hpp"

namespace gop {

Rat pochhammer(const Rat& t, unsigned long n)
{
    Rat acc = 1;
    for (unsigned long i = 0; i < n; ++i)
        acc *= t + i;
    return acc;
}

Int pochhammer_denominator(const Rat& t, unsigned long k)
{
    Int d = 1;
    Rat term = 1;
    for (unsigned long n = 1; n <= k; ++n) {
        term *= (t + (n - 1)) / Rat(n);
        term.canonicalize();
        d = lcm(d, term.get_den());
    }
    return d;
}

} // namespace gop
