#pragma once

// The six correction polynomials D_0..D_5(s, λ). This is the only
// transcription; the exact and floating-point paths both instantiate it.

namespace hilbert::detail {

template <class T>
T d_polynomial_impl(int index, const T& s, const T& l) {
    const T one(1);
    const T two(2);
    const T three(3);
    const T c720(720);
    const T c30240(720 * 42);

    const T sl = (s + one - l) * (s - l); // (s+1-λ)(s-λ)

    switch (index) {
    case 0:
        return one / (one + l) - one / two + l / T(12) - (l - one) * (l - two) * (l - three) / c720 +
               (l - two) * (l - three) * (l - T(4)) / c30240 * (sl + s * (s + one));
    case 1:
        return s / ((one + l) * (two + l)) - s / T(12) + three * s * l * (l - one) / c720 -
               s * (l - two) * (l - three) / c30240 *
                   (three * sl + two * (s + one) * (l - T(4)) + three * (s + one) * (s + two));
    case 2:
        return s * (s + one) / ((one + l) * (two + l) * (three + l)) - three * s * (s + one) * l / c720 +
               s * (s + one) * (l - two) / c30240 *
                   (three * sl + (l - three) * (l - T(4)) + T(6) * (s + two) * (l - three) +
                    three * (s + two) * (s + three));
    case 3:
        return s * (s + one) * (s + two) / ((one + l) * (two + l) * (three + l) * (T(4) + l)) +
               s * (s + one) * (s + two) / c720 -
               s * (s + one) * (s + two) / c30240 *
                   (three * sl + three * (l - two) * (l - three) + T(6) * (s + three) * (l - two) +
                    (s + three) * (s + T(4)));
    case 4:
        return s * (s + one) * (s + two) * (s + three) / ((one + l) * (two + l) * (three + l) * (T(4) + l) * (T(5) + l)) +
               s * (s + one) * (s + two) * (s + three) / c30240 * (three * (l - two) + two * (s + T(4)));
    case 5:
        return s * (s + one) * (s + two) * (s + three) * (s + T(4)) *
               (one / ((one + l) * (two + l) * (three + l) * (T(4) + l) * (T(5) + l) * (T(6) + l)) - one / c30240);
    default:
        return T(0);
    }
}

} // namespace hilbert::detail
