#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "indlift/core/object.hpp"

namespace indlift {

using ObjId = int32_t;
using MorId = int32_t;
using ClassId = int32_t;

constexpr ObjId kNoObj = -1;
constexpr MorId kNoMor = -1;

// A morphism between interned objects, stored as a total table on the
// domain carrier: tab[i] is the image element of i in the codomain.
struct Mor {
    ObjId dom = kNoObj;
    ObjId cod = kNoObj;
    std::vector<int16_t> tab;

    bool operator==(const Mor& o) const {
        return dom == o.dom && cod == o.cod && tab == o.tab;
    }
};

inline std::vector<int16_t> compose_tabs(const std::vector<int16_t>& g,
                                         const std::vector<int16_t>& f) {
    std::vector<int16_t> r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = g[f[i]];
    return r;
}

inline bool injective_tab(const std::vector<int16_t>& tab, int cod_n) {
    std::vector<char> seen(cod_n, 0);
    for (auto v : tab) {
        if (seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

inline std::vector<int16_t> identity_tab(int n) {
    std::vector<int16_t> t(n);
    for (int i = 0; i < n; ++i) t[i] = int16_t(i);
    return t;
}

std::string tab_key(const std::vector<int16_t>& tab);

} // namespace indlift
