#pragma once

#include "yoneda/rep.hpp"

#include <memory>
#include <mutex>
#include <tuple>

namespace yoneda {

/// Minimal projective resolution ... -> P_1 -> P_0 -> M -> 0, extended on
/// demand. terms[i] covers the i-th syzygy; diffs[i]: P_{i+1} -> P_i.
struct Resolution {
    RepHandle module;
    std::vector<ProjSum> terms;
    std::vector<RepMap> diffs; // diffs[i] = d_{i+1}: P_{i+1} -> P_i
    RepMap aug;                // P_0 -> module
    std::vector<RepHandle> omega;    // omega[k] = k-th syzygy (omega[0] = module)
    std::vector<RepMap> incl_cache;  // omega[k+1] -> terms[k].rep
};

/// Basis data for Ext^i(M, N) computed from Hom(P_.(M), N). Cochains are
/// coordinate vectors in C^i = (+)_g N_{v_g} (one block per generator of
/// P_i(M)); the basis is the canonical rref complement of the coboundaries.
struct ExtSpaceData {
    RepHandle M, N;
    int deg = 0;
    int cdim = 0;
    std::vector<int> gen_off;          // block offset per generator of P_i(M)
    Subspace cobound;                  // coboundary subspace of C^i
    Matrix basis_rows;                 // dim x cdim, canonical representatives
    std::vector<int> basis_pivot;      // leading column per basis row
    int dim = 0;

    Matrix basis_cvec(int k) const;            // k-th basis cocycle as column
    Matrix class_coords(const Matrix& cvec) const; // dim x 1 coordinates
};

struct LiftState;

/// An extension class: a cocycle P_deg(M) -> N recorded by its generator
/// values, with lazily cached lifts to chain maps P_{deg+j}(M) -> P_j(N).
struct ExtElement {
    RepHandle M, N;
    int deg = 0;
    Matrix cvec; // cdim x 1
    std::shared_ptr<LiftState> lifts;

    ExtElement() = default;
    ExtElement(RepHandle m, RepHandle n, int d, Matrix v);
};

/// Shared homological workspace; resolutions and Ext bases are cached and
/// access is internally synchronized.
class ExtEngine {
public:
    /// Resolution of m with terms 0..upto available.
    const Resolution& resolution(const RepHandle& m, int upto);
    std::shared_ptr<const ExtSpaceData> ext_space(const RepHandle& m, const RepHandle& n, int i);
    int ext_dim(const RepHandle& m, const RepHandle& n, int i);

    /// Paper-order Yoneda product fg = "f then shifted g".
    ExtElement yoneda(const ExtElement& f, const ExtElement& g);
    ExtElement add(const ExtElement& f, const ExtElement& g);
    ExtElement scale(const Q& c, const ExtElement& f);
    ExtElement zero_class(const RepHandle& m, const RepHandle& n, int deg);

    /// Degree-0 classes <-> module maps.
    ExtElement class_of_map(const RepMap& f);
    RepMap map_of_class(const ExtElement& e);
    ExtElement identity_class(const RepHandle& m);

    /// Matrix of Ext^i(f, N): Ext^i(X', N) -> Ext^i(X, N) for f: X -> X'.
    Matrix functorial_left(const RepMap& f, const RepHandle& n, int i);
    /// Matrix of Ext^i(M, g): Ext^i(M, N) -> Ext^i(M, N') for g: N -> N'.
    Matrix functorial_right(const RepHandle& m, const RepMap& g, int i);

    /// Matrix of (a . -): Ext^v(B, C) -> Ext^{u+v}(A, C), a in Ext^u(A, B).
    Matrix lmul_matrix(const ExtElement& a, const RepHandle& c, int v);
    /// Matrix of (- . b): Ext^u(A, B) -> Ext^{u+v}(A, C), b in Ext^v(B, C).
    Matrix rmul_matrix(const RepHandle& a, const ExtElement& b, int u);

    /// Connecting class of 0 -> X -> E -> W -> 0 pulled back along g: S -> W.
    ExtElement connecting_class(const RepMap& alpha, const RepMap& beta, const RepMap& g);

    /// Evaluate the cocycle of e on a fiber vector of P_deg(M) at vertex v.
    Matrix eval_cocycle(const ExtElement& e, int vertex, const Matrix& local_vec);

    void ensure_lift(const ExtElement& e, int depth);
    /// Generator images of the depth-j lift P_{deg+j}(M) -> P_j(N).
    std::vector<Matrix> lift_gen_images(const ExtElement& e, int j);

private:
    struct ResState {
        Resolution res;
    };
    std::mutex mu_;
    std::map<const Rep*, std::shared_ptr<ResState>> res_;
    std::map<std::tuple<const Rep*, const Rep*, int>, std::shared_ptr<const ExtSpaceData>> ext_;

    Resolution& res_locked(const RepHandle& m, int upto);
    Matrix delta_matrix(const RepHandle& m, const RepHandle& n, int i); // C^i -> C^{i+1}
};

struct DomDim {
    bool at_least = false; // true: value is a lower bound (", >= bound")
    int value = 0;
};

/// Dominant dimension of the path algebra, decided up to the given bound.
DomDim domdim_bounded(ExtEngine& eng, const AlgebraHandle& a, int bound);

/// Regular module A = (+)_v P(v).
RepHandle regular_rep(const AlgebraHandle& a);

} // namespace yoneda
