#include "yoneda/phi.hpp"

#include <algorithm>
#include <sstream>

namespace yoneda {

bool PhiSet::contains(int d) const { return std::binary_search(elems.begin(), elems.end(), d); }

void PhiSet::validate() const {
    for (size_t i = 0; i < elems.size(); ++i) {
        if (elems[i] < 0) throw input_error("degree set must consist of natural numbers");
        if (i && elems[i] <= elems[i - 1]) throw input_error("degree set must be strictly ascending");
    }
    if (elems.empty() || elems.front() != 0) throw refusal("NonAdmissiblePhi", "0 must belong to the degree set");
}

PhiSet PhiSet::parse(const std::string& csv) {
    PhiSet out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            out.elems.push_back(std::stoi(tok));
        } catch (...) {
            throw input_error("cannot parse degree '" + tok + "'");
        }
    }
    std::sort(out.elems.begin(), out.elems.end());
    out.elems.erase(std::unique(out.elems.begin(), out.elems.end()), out.elems.end());
    out.validate();
    return out;
}

PhiSet PhiSet::range(int n) {
    PhiSet out;
    for (int i = 0; i <= n; ++i) out.elems.push_back(i);
    return out;
}

std::optional<std::array<int, 3>> admissibility_witness(const std::vector<int>& elems) {
    std::vector<int> sorted = elems;
    std::sort(sorted.begin(), sorted.end());
    auto in = [&](int x) { return std::binary_search(sorted.begin(), sorted.end(), x); };
    for (int i : sorted)
        for (int j : sorted)
            for (int k : sorted) {
                if (!in(i + j + k)) continue;
                if (in(i + j) != in(j + k)) return std::array<int, 3>{i, j, k};
            }
    return std::nullopt;
}

} // namespace yoneda
