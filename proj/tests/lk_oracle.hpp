#pragma once

#include <map>
#include <utility>

#include "braidrep/matrix.hpp"

namespace braidrep::testing {

// Independent numeric oracle: the five action rules applied to ordered
// labels v_{ab}, a != b, with v_{ab} = v_{ba}.
inline RationalMatrix oracle_generator(int n, int i, const mpq_class& q, const mpq_class& t) {
    std::map<std::pair<int, int>, std::size_t> index;
    std::size_t next = 0;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) index[{a, b}] = next++;
    auto idx = [&](int a, int b) { return a < b ? index.at({a, b}) : index.at({b, a}); };
    RationalMatrix m(next, next, mpq_class(0));
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            const std::size_t c = idx(a, b);
            const bool touches = a == i || a == i + 1 || b == i || b == i + 1;
            if (a == i && b == i + 1) {
                m(c, c) = t * q * q;
            } else if (!touches) {
                m(c, c) = 1;
            } else {
                // Orient the label so the generator strand comes first.
                const int s = (a == i || a == i + 1) ? a : b;
                const int j = s == a ? b : a;
                if (s == i + 1) {
                    m(idx(i, j), c) = 1;
                } else if (i + 1 < j) {
                    m(idx(i, i + 1), c) += t * q * (q - 1);
                    m(idx(i, j), c) += 1 - q;
                    m(idx(i + 1, j), c) += q;
                } else {
                    m(idx(j, i), c) += 1 - q;
                    m(idx(j, i + 1), c) += q;
                    m(idx(i, i + 1), c) += q * (q - 1);
                }
            }
        }
    }
    return m;
}


}  // namespace braidrep::testing
