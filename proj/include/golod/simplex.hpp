#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace golod {

// A simplex is a strictly increasing sequence of positive vertex labels.
// The empty sequence is the empty simplex.
using Simplex = std::vector<int>;

inline bool simplex_is_canonical(const Simplex& s) {
    for (size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] >= s[i + 1]) return false;
    return s.empty() || s.front() >= 1;
}

// Sorts and removes duplicate labels.
inline Simplex canonical_simplex(Simplex s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline bool simplex_subset(const Simplex& a, const Simplex& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline Simplex simplex_intersect(const Simplex& a, const Simplex& b) {
    Simplex out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Simplex simplex_union(const Simplex& a, const Simplex& b) {
    Simplex out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Simplex simplex_erase(const Simplex& s, int v) {
    Simplex out;
    out.reserve(s.size());
    for (int x : s)
        if (x != v) out.push_back(x);
    return out;
}

inline bool simplex_contains(const Simplex& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

inline std::string simplex_to_string(const Simplex& s) {
    if (s.empty()) return "{}";
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

}  // namespace golod
