#pragma once

#include "yoneda/path_algebra.hpp"

#include <optional>

namespace yoneda {

struct Rep;
using RepHandle = std::shared_ptr<const Rep>;

struct PathActionCache;

/// A left A-module as a quiver representation. Fiber at vertex v is e_v M;
/// the matrix act[a] of the arrow a: u -> v maps the fiber at v into the
/// fiber at u (left action, left-to-right path composition).
struct Rep {
    AlgebraHandle alg;
    std::vector<int> dims;
    std::vector<Matrix> act; // per arrow; shape dims[src(a)] x dims[tgt(a)]
    std::shared_ptr<PathActionCache> cache; // set by make_rep

    int total_dim() const;
    int offset(int v) const; // start of fiber v in global coordinates
    bool is_zero() const { return total_dim() == 0; }

    /// Matrix of the action of a basis path, fiber(tgt) -> fiber(src).
    Matrix path_action(int basis_idx) const;
    /// Global-coordinate action of an algebra element (block diagonal pieces).
    Matrix act_global(const Matrix& elem) const;

    void check_valid() const; // relations act as zero, shapes consistent
};

RepHandle make_rep(Rep r);
RepHandle zero_rep(const AlgebraHandle& a);

struct RepMap {
    RepHandle src, tgt;
    std::vector<Matrix> comp; // per vertex: dims_tgt[v] x dims_src[v]

    bool is_zero() const;
    bool is_injective() const;
    bool is_surjective() const;
    void check_intertwines() const;
    Matrix global() const; // block-diagonal matrix on global coordinates
};

RepMap id_map(const RepHandle& m);
RepMap zero_map(const RepHandle& src, const RepHandle& tgt);
/// "first then second" (the composite written fg in left-to-right order).
RepMap compose(const RepMap& first, const RepMap& second);
RepMap map_add(const RepMap& a, const RepMap& b);
RepMap map_scale(const Q& c, const RepMap& a);

/// Basis of Hom_A(m, n) (intertwiner solve); deterministic order.
std::vector<RepMap> hom_basis(const RepHandle& m, const RepHandle& n);
int hom_dim(const RepHandle& m, const RepHandle& n);
/// Coordinates of f in the basis returned by hom_basis.
Matrix hom_coords(const std::vector<RepMap>& basis, const RepMap& f);

enum class StandardKind { Simple, Projective, Injective };
RepHandle standard_module(const AlgebraHandle& a, StandardKind kind, int vertex);

/// Direct sums with the canonical injections/projections.
struct SumRep {
    RepHandle rep;
    std::vector<RepMap> inj;
    std::vector<RepMap> proj;
};
SumRep direct_sum(const AlgebraHandle& a, const std::vector<RepHandle>& parts);

/// Submodule spanned by the given per-vertex columns (closed under the
/// action; closure is taken if needed). Returns the submodule and inclusion.
struct SubRep {
    RepHandle rep;
    RepMap incl;
};
SubRep sub_rep(const RepHandle& m, const std::vector<Matrix>& spans);

struct QuotRep {
    RepHandle rep;
    RepMap proj;
};
QuotRep quotient_rep(const RepHandle& m, const std::vector<Matrix>& sub_spans);

SubRep kernel_rep(const RepMap& f);
SubRep image_rep(const RepMap& f);
QuotRep cokernel_rep(const RepMap& f);

SubRep radical_rep(const RepHandle& m);
SubRep socle_rep(const RepHandle& m);
QuotRep top_rep(const RepHandle& m);
/// Quotient of m by the v-isotypic component of its socle.
QuotRep quotient_socle_component(const RepHandle& m, int vertex);

/// Duality D = Hom_k(-, k): a module over the opposite algebra.
RepHandle dual_rep(const RepHandle& m);
RepMap dual_map(const RepMap& f); // D(f): D(tgt) -> D(src)

/// Standard projectives with generator bookkeeping: P = (+)_g P(v_g).
struct ProjSum {
    RepHandle rep;
    std::vector<int> gen_vertex;
    // fiber coordinate w,k  ->  (copy g, algebra basis path index p: w -> v_g)
    std::vector<std::vector<std::pair<int, int>>> fiber_paths;
    std::vector<int> gen_coord; // global coordinate of the generator e_{v_g}

    int gens() const { return static_cast<int>(gen_vertex.size()); }
};
ProjSum projective_sum(const AlgebraHandle& a, const std::vector<int>& vertices);

/// The hom P -> N with the given generator images (n_g in fiber v_g of N,
/// stacked as one column per generator).
RepMap hom_from_gens(const ProjSum& p, const RepHandle& n, const std::vector<Matrix>& gen_images);
std::vector<Matrix> gens_of_hom(const ProjSum& p, const RepMap& f);

struct Cover {
    ProjSum proj;
    RepMap epi;
};
/// Minimal projective cover (kernel lies in the radical; checked).
Cover projective_cover(const RepHandle& m);

RepHandle syzygy(const RepHandle& m, int n = 1);
RepHandle cosyzygy(const RepHandle& m, int n = 1);
/// Injective hull via duality; returns the embedding m -> I.
struct Hull {
    RepHandle inj;
    RepMap embed;
};
Hull injective_hull(const RepHandle& m);

bool is_projective(const RepHandle& m);

/// Transpose Tr(m) over the opposite algebra (cokernel of the dualized
/// minimal presentation); and the Auslander-Reiten translate D Tr.
RepHandle transpose_rep(const RepHandle& m);
RepHandle dtr(const RepHandle& m);

/// dim of Hom(m, n) modulo maps factoring through a projective.
int stable_hom_dim(const RepHandle& m, const RepHandle& n);

/// Search for an isomorphism (small-field exhaustive / small integer combos).
std::optional<RepMap> find_iso(const RepHandle& m, const RepHandle& n, int budget = 1 << 16);

} // namespace yoneda
