#pragma once

#include <vector>

#include "evolalg/errors.hpp"

namespace evolalg {

using Perm = std::vector<int>;

inline Perm identity_perm(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

inline bool is_permutation(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
        if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

/// (a * b)(x) = a(b(x)): apply b first.
inline Perm compose_perm(const Perm& a, const Perm& b) {
    if (a.size() != b.size())
        throw ValidationError("SizeMismatch: permutation degrees differ");
    Perm r(a.size());
    for (std::size_t x = 0; x < b.size(); ++x) r[x] = a[b[x]];
    return r;
}

inline Perm inverse_perm(const Perm& p) {
    Perm r(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) r[p[x]] = static_cast<int>(x);
    return r;
}

inline bool is_identity_perm(const Perm& p) {
    for (std::size_t x = 0; x < p.size(); ++x)
        if (p[x] != static_cast<int>(x)) return false;
    return true;
}

} // namespace evolalg
