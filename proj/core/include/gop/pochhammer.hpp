#pragma once

#include "gop/rational.hpp"

namespace gop {

/// Rising factorial t(t+1)...(t+n-1); 1 for n = 0.
Rat pochhammer(const Rat& t, unsigned long n);

/// lcm of the denominators of (t)_n / n! for n = 0..k.
Int pochhammer_denominator(const Rat& t, unsigned long k);

} // namespace gop
