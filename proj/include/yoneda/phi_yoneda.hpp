#pragma once

#include "yoneda/homology.hpp"
#include "yoneda/phi.hpp"
#include "yoneda/scalgebra.hpp"

namespace yoneda {

/// The perforated Yoneda algebra E^Phi(V) of V = (+)_s summands, as a
/// structure-constant algebra. Basis elements are labeled by
/// (source summand, target summand, degree, index); products are Yoneda
/// composites truncated to degrees in Phi.
struct PhiAlgebra {
    SCHandle alg;
    PhiSet phi;
    std::vector<std::string> summand_labels;
    std::vector<RepHandle> summands;
    struct Meta {
        int s = 0, t = 0, d = 0, idx = 0;
    };
    std::vector<Meta> meta;          // per basis index
    std::vector<ExtElement> elems;   // per basis index
    Matrix unit_parts;               // unit coordinates (identity class per summand)

    /// Basis indices of the (s, t, d) block, ascending.
    std::vector<int> block(int s, int t, int d) const;
    /// Coordinates of the idempotent sum of identities over the summands.
    Matrix idempotent(const std::vector<int>& summand_idxs) const;
    int summand_index(const std::string& label) const;
};

/// Throws refusal("NonAdmissiblePhi") unless allow_non_admissible (the
/// diagnostic mode used to exhibit associativity failures).
PhiAlgebra build_phi_yoneda(ExtEngine& eng, const std::vector<std::string>& labels,
                            const std::vector<RepHandle>& summands, const PhiSet& phi,
                            bool allow_non_admissible = false);

/// The natural left module E^Phi(V, Z) = (+)_d Ext^d(V, Z).
struct PhiModule {
    SCModule mod;
    RepHandle z;
    struct Meta {
        int s = 0, d = 0, idx = 0;
    };
    std::vector<Meta> meta;
    std::vector<ExtElement> elems;

    std::vector<int> block(int s, int d) const;
};

PhiModule build_phi_module(ExtEngine& eng, const PhiAlgebra& pa, const RepHandle& z);

/// Matrix of the right-multiplication map mu(x): E^Phi(V, Zs) -> E^Phi(V, Zt)
/// for x in Ext^xdeg(Zs, Zt) (the module-category realization of morphisms
/// between the natural projectives).
Matrix mu_matrix(ExtEngine& eng, const PhiAlgebra& pa, const PhiModule& ms, const PhiModule& mt,
                 const ExtElement& x);

} // namespace yoneda
