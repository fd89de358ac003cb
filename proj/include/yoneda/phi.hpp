#pragma once

#include "yoneda/field.hpp"

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace yoneda {

/// Finite set of cohomological degrees, 0 included, ascending.
struct PhiSet {
    std::vector<int> elems;

    bool contains(int d) const;
    int max() const { return elems.empty() ? 0 : elems.back(); }
    static PhiSet parse(const std::string& csv);
    static PhiSet range(int n); // {0, ..., n}
    void validate() const;      // 0 present, naturals, strictly ascending
};

/// Brute-force admissibility check: for i, j, k in the set with i+j+k in the
/// set, i+j lies in the set iff j+k does. Returns the first violating triple
/// in lexicographic order, or nullopt when admissible.
std::optional<std::array<int, 3>> admissibility_witness(const std::vector<int>& elems);

inline bool is_admissible(const PhiSet& phi) { return !admissibility_witness(phi.elems).has_value(); }

} // namespace yoneda
