#include "yoneda/homology.hpp"

#include <algorithm>

namespace yoneda {

struct LiftState {
    std::mutex mu;
    // gen_images[j][h]: image of generator h of P_{deg+j}(M) in the fiber of
    // P_j(N) at the generator's vertex (local fiber coordinates)
    std::vector<std::vector<Matrix>> gen_images;
};

ExtElement::ExtElement(RepHandle m, RepHandle n, int d, Matrix v)
    : M(std::move(m)), N(std::move(n)), deg(d), cvec(std::move(v)), lifts(std::make_shared<LiftState>()) {}

Matrix ExtSpaceData::basis_cvec(int k) const {
    Matrix v(M->alg->field(), cdim, 1);
    for (int j = 0; j < cdim; ++j) v.set(j, 0, basis_rows.get(k, j));
    return v;
}

Matrix ExtSpaceData::class_coords(const Matrix& cvec) const {
    Matrix r = cobound.reduce(cvec);
    Matrix coords(M->alg->field(), dim, 1);
    for (int k = 0; k < dim; ++k) coords.set(k, 0, r.get(basis_pivot[static_cast<size_t>(k)], 0));
    // the remainder must vanish: r == sum coords_k * basis_row_k
    for (int k = 0; k < dim; ++k) {
        Q c = coords.get(k, 0);
        if (c == 0) continue;
        for (int j = 0; j < cdim; ++j) r.set(j, 0, r.get(j, 0) - c * basis_rows.get(k, j));
    }
    if (!r.is_zero()) throw internal_error("class_coords: vector is not a cocycle for this space");
    return coords;
}

Resolution& ExtEngine::res_locked(const RepHandle& m, int upto) {
    auto it = res_.find(m.get());
    std::shared_ptr<ResState> st;
    if (it == res_.end()) {
        st = std::make_shared<ResState>();
        st->res.module = m;
        st->res.omega.push_back(m);
        res_.emplace(m.get(), st);
    } else {
        st = it->second;
    }
    Resolution& r = st->res;
    while (static_cast<int>(r.terms.size()) <= upto) {
        int k = static_cast<int>(r.terms.size());
        RepHandle om = r.omega[static_cast<size_t>(k)];
        Cover c = projective_cover(om);
        if (k == 0) {
            r.aug = c.epi;
        } else {
            // d_k = (cover epi onto omega_k) then (inclusion into P_{k-1})
            r.diffs.push_back(compose(c.epi, r.incl_cache.back()));
        }
        r.terms.push_back(c.proj);
        auto ker = kernel_rep(c.epi);
        r.omega.push_back(ker.rep);
        r.incl_cache.push_back(ker.incl);
    }
    return r;
}

const Resolution& ExtEngine::resolution(const RepHandle& m, int upto) {
    std::lock_guard<std::mutex> lock(mu_);
    return res_locked(m, upto);
}

Matrix ExtEngine::delta_matrix(const RepHandle& m, const RepHandle& n, int i) {
    const Resolution& r = res_locked(m, i + 1);
    const ProjSum& Pi = r.terms[static_cast<size_t>(i)];
    const ProjSum& Pi1 = r.terms[static_cast<size_t>(i) + 1];
    const RepMap& d = r.diffs[static_cast<size_t>(i)]; // P_{i+1} -> P_i
    Field f = m->alg->field();
    auto block_dims = [&](const ProjSum& p) {
        std::vector<int> off(1, 0);
        for (int g = 0; g < p.gens(); ++g)
            off.push_back(off.back() + n->dims[static_cast<size_t>(p.gen_vertex[static_cast<size_t>(g)])]);
        return off;
    };
    std::vector<int> coff = block_dims(Pi);
    std::vector<int> roff = block_dims(Pi1);
    Matrix delta(f, roff.back(), coff.back());
    for (int h = 0; h < Pi1.gens(); ++h) {
        int vh = Pi1.gen_vertex[static_cast<size_t>(h)];
        int local = Pi1.gen_coord[static_cast<size_t>(h)] - Pi1.rep->offset(vh);
        Matrix img = d.comp[static_cast<size_t>(vh)].col(local); // in fiber vh of P_i
        const auto& fib = Pi.fiber_paths[static_cast<size_t>(vh)];
        for (size_t k = 0; k < fib.size(); ++k) {
            Q c = img.get(static_cast<int>(k), 0);
            if (c == 0) continue;
            auto [g, path] = fib[k];
            Matrix pa = n->path_action(path); // N_{vh} x N_{v_g}
            for (int rr = 0; rr < pa.rows(); ++rr)
                for (int cc = 0; cc < pa.cols(); ++cc) {
                    Q v = pa.get(rr, cc);
                    if (v == 0) continue;
                    int row = roff[static_cast<size_t>(h)] + rr;
                    int col = coff[static_cast<size_t>(g)] + cc;
                    delta.set(row, col, delta.get(row, col) + c * v);
                }
        }
    }
    return delta;
}

std::shared_ptr<const ExtSpaceData> ExtEngine::ext_space(const RepHandle& m, const RepHandle& n, int i) {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_tuple(m.get(), n.get(), i);
    auto it = ext_.find(key);
    if (it != ext_.end()) return it->second;

    Field f = m->alg->field();
    auto data = std::make_shared<ExtSpaceData>();
    data->M = m;
    data->N = n;
    data->deg = i;
    const Resolution& r = res_locked(m, i + 1);
    const ProjSum& Pi = r.terms[static_cast<size_t>(i)];
    data->gen_off.assign(1, 0);
    for (int g = 0; g < Pi.gens(); ++g)
        data->gen_off.push_back(data->gen_off.back() + n->dims[static_cast<size_t>(Pi.gen_vertex[static_cast<size_t>(g)])]);
    data->cdim = data->gen_off.back();

    Matrix di = delta_matrix(m, n, i);
    Matrix zker = di.kernel(); // cocycles
    Matrix bgens(f, data->cdim, 0);
    if (i > 0) {
        Matrix dprev = delta_matrix(m, n, i - 1);
        bgens = dprev; // its columns span the coboundaries
    }
    data->cobound = Subspace::from_columns(bgens);
    // canonical complement: rows of rref(Z^T) whose pivot is not a pivot of B
    auto ez = zker.transposed().rref();
    std::vector<bool> bpiv(static_cast<size_t>(data->cdim), false);
    for (int p : data->cobound.pivots()) bpiv[static_cast<size_t>(p)] = true;
    std::vector<int> keep;
    for (int rrow = 0; rrow < ez.rank; ++rrow)
        if (!bpiv[static_cast<size_t>(ez.pivots[static_cast<size_t>(rrow)])]) keep.push_back(rrow);
    data->dim = static_cast<int>(keep.size());
    data->basis_rows = Matrix(f, data->dim, data->cdim);
    for (int k = 0; k < data->dim; ++k) {
        data->basis_pivot.push_back(ez.pivots[static_cast<size_t>(keep[static_cast<size_t>(k)])]);
        for (int j = 0; j < data->cdim; ++j)
            data->basis_rows.set(k, j, ez.reduced.get(keep[static_cast<size_t>(k)], j));
    }
    ext_.emplace(key, data);
    return data;
}

int ExtEngine::ext_dim(const RepHandle& m, const RepHandle& n, int i) { return ext_space(m, n, i)->dim; }

Matrix ExtEngine::eval_cocycle(const ExtElement& e, int vertex, const Matrix& local_vec) {
    const Resolution& r = resolution(e.M, e.deg);
    const ProjSum& Pi = r.terms[static_cast<size_t>(e.deg)];
    auto sp = ext_space(e.M, e.N, e.deg);
    Field f = e.M->alg->field();
    Matrix out(f, e.N->dims[static_cast<size_t>(vertex)], 1);
    const auto& fib = Pi.fiber_paths[static_cast<size_t>(vertex)];
    for (size_t k = 0; k < fib.size(); ++k) {
        Q c = local_vec.get(static_cast<int>(k), 0);
        if (c == 0) continue;
        auto [g, path] = fib[k];
        int voff = sp->gen_off[static_cast<size_t>(g)];
        int gdim = sp->gen_off[static_cast<size_t>(g) + 1] - voff;
        Matrix ng(f, gdim, 1);
        for (int j = 0; j < gdim; ++j) ng.set(j, 0, e.cvec.get(voff + j, 0));
        Matrix val = e.N->path_action(path) * ng;
        out = out + val.scaled(c);
    }
    return out;
}

void ExtEngine::ensure_lift(const ExtElement& e, int depth) {
    std::lock_guard<std::mutex> lock(e.lifts->mu);
    auto& L = e.lifts->gen_images;
    const Resolution& rM = resolution(e.M, e.deg + depth);
    const Resolution& rN = resolution(e.N, depth);
    auto sp = ext_space(e.M, e.N, e.deg);
    Field f = e.M->alg->field();
    while (static_cast<int>(L.size()) <= depth) {
        int j = static_cast<int>(L.size());
        const ProjSum& Psrc = rM.terms[static_cast<size_t>(e.deg + j)];
        const ProjSum& Ptgt = rN.terms[static_cast<size_t>(j)];
        std::vector<Matrix> imgs;
        for (int h = 0; h < Psrc.gens(); ++h) {
            int vh = Psrc.gen_vertex[static_cast<size_t>(h)];
            Matrix rhs(f, 0, 0);
            Matrix lhs(f, 0, 0);
            if (j == 0) {
                // lift the cocycle value through the augmentation of P_.(N)
                int off = sp->gen_off[static_cast<size_t>(h)];
                int gdim = sp->gen_off[static_cast<size_t>(h) + 1] - off;
                rhs = Matrix(f, gdim, 1);
                for (int t = 0; t < gdim; ++t) rhs.set(t, 0, e.cvec.get(off + t, 0));
                lhs = rN.aug.comp[static_cast<size_t>(vh)];
            } else {
                // d_{deg+j}(gen) evaluated through the previous lift
                const RepMap& d = rM.diffs[static_cast<size_t>(e.deg + j - 1)];
                int local = Psrc.gen_coord[static_cast<size_t>(h)] - Psrc.rep->offset(vh);
                Matrix w = d.comp[static_cast<size_t>(vh)].col(local); // fiber of P_{deg+j-1}(M)
                const ProjSum& Pprev = rM.terms[static_cast<size_t>(e.deg + j - 1)];
                const ProjSum& Nprev = rN.terms[static_cast<size_t>(j - 1)];
                Matrix y(f, Nprev.rep->dims[static_cast<size_t>(vh)], 1);
                const auto& fib = Pprev.fiber_paths[static_cast<size_t>(vh)];
                for (size_t k = 0; k < fib.size(); ++k) {
                    Q c = w.get(static_cast<int>(k), 0);
                    if (c == 0) continue;
                    auto [g, path] = fib[k];
                    Matrix val = Nprev.rep->path_action(path) * L[static_cast<size_t>(j - 1)][static_cast<size_t>(g)];
                    y = y + val.scaled(c);
                }
                rhs = y;
                lhs = rN.diffs[static_cast<size_t>(j - 1)].comp[static_cast<size_t>(vh)];
            }
            auto x = lhs.solve_right(rhs);
            if (!x) throw internal_error("chain lift failed (projectivity violated?)");
            imgs.push_back(std::move(*x));
        }
        L.push_back(std::move(imgs));
    }
}

std::vector<Matrix> ExtEngine::lift_gen_images(const ExtElement& e, int j) {
    ensure_lift(e, j);
    std::lock_guard<std::mutex> lock(e.lifts->mu);
    return e.lifts->gen_images[static_cast<size_t>(j)];
}

ExtElement ExtEngine::yoneda(const ExtElement& f, const ExtElement& g) {
    if (f.N.get() != g.M.get()) throw internal_error("yoneda: middle modules differ");
    int i = f.deg, j = g.deg;
    auto imgs = lift_gen_images(f, j); // P_{i+j}(M) -> P_j(N) generator images
    const Resolution& rM = resolution(f.M, i + j);
    const ProjSum& Psrc = rM.terms[static_cast<size_t>(i + j)];
    auto sp = ext_space(f.M, g.N, i + j);
    Field fld = f.M->alg->field();
    Matrix cvec(fld, sp->cdim, 1);
    for (int h = 0; h < Psrc.gens(); ++h) {
        int vh = Psrc.gen_vertex[static_cast<size_t>(h)];
        Matrix val = eval_cocycle(g, vh, imgs[static_cast<size_t>(h)]);
        int off = sp->gen_off[static_cast<size_t>(h)];
        for (int t = 0; t < val.rows(); ++t) cvec.set(off + t, 0, val.get(t, 0));
    }
    return ExtElement(f.M, g.N, i + j, std::move(cvec));
}

ExtElement ExtEngine::add(const ExtElement& f, const ExtElement& g) {
    if (f.deg != g.deg || f.M.get() != g.M.get() || f.N.get() != g.N.get())
        throw internal_error("ext add: spaces differ");
    return ExtElement(f.M, f.N, f.deg, f.cvec + g.cvec);
}

ExtElement ExtEngine::scale(const Q& c, const ExtElement& f) {
    return ExtElement(f.M, f.N, f.deg, f.cvec.scaled(c));
}

ExtElement ExtEngine::zero_class(const RepHandle& m, const RepHandle& n, int deg) {
    auto sp = ext_space(m, n, deg);
    return ExtElement(m, n, deg, Matrix(m->alg->field(), sp->cdim, 1));
}

ExtElement ExtEngine::class_of_map(const RepMap& f) {
    const Resolution& r = resolution(f.src, 1);
    RepMap c = compose(r.aug, f); // P_0 -> tgt
    auto imgs = gens_of_hom(r.terms[0], c);
    auto sp = ext_space(f.src, f.tgt, 0);
    Matrix cvec(f.src->alg->field(), sp->cdim, 1);
    for (size_t h = 0; h < imgs.size(); ++h) {
        int off = sp->gen_off[h];
        for (int t = 0; t < imgs[h].rows(); ++t) cvec.set(off + t, 0, imgs[h].get(t, 0));
    }
    return ExtElement(f.src, f.tgt, 0, std::move(cvec));
}

RepMap ExtEngine::map_of_class(const ExtElement& e) {
    if (e.deg != 0) throw internal_error("map_of_class: degree must be 0");
    const Resolution& r = resolution(e.M, 1);
    const ProjSum& P0 = r.terms[0];
    auto sp = ext_space(e.M, e.N, 0);
    Field f = e.M->alg->field();
    RepMap out{e.M, e.N, {}};
    for (int v = 0; v < e.M->alg->num_vertices(); ++v) {
        // F_v * aug_v = c_v  solved via transposes
        Matrix cv(f, e.N->dims[static_cast<size_t>(v)], P0.rep->dims[static_cast<size_t>(v)]);
        const auto& fib = P0.fiber_paths[static_cast<size_t>(v)];
        for (size_t k = 0; k < fib.size(); ++k) {
            auto [g, path] = fib[k];
            int off = sp->gen_off[static_cast<size_t>(g)];
            int gdim = sp->gen_off[static_cast<size_t>(g) + 1] - off;
            Matrix ng(f, gdim, 1);
            for (int t = 0; t < gdim; ++t) ng.set(t, 0, e.cvec.get(off + t, 0));
            Matrix val = e.N->path_action(path) * ng;
            for (int t = 0; t < val.rows(); ++t) cv.set(t, static_cast<int>(k), val.get(t, 0));
        }
        auto x = r.aug.comp[static_cast<size_t>(v)].transposed().solve_right(cv.transposed());
        if (!x) throw internal_error("map_of_class: cocycle does not descend");
        out.comp.push_back(x->transposed());
    }
    return out;
}

ExtElement ExtEngine::identity_class(const RepHandle& m) { return class_of_map(id_map(m)); }

Matrix ExtEngine::functorial_left(const RepMap& f, const RepHandle& n, int i) {
    const RepHandle& X = f.src;
    const RepHandle& Xp = f.tgt;
    const Resolution& rX = resolution(X, i);
    const Resolution& rXp = resolution(Xp, i);
    Field fld = X->alg->field();
    // chain lift phi_j: P_j(X) -> P_j(X') over f, recorded on generators
    std::vector<std::vector<Matrix>> phi;
    for (int j = 0; j <= i; ++j) {
        const ProjSum& Psrc = rX.terms[static_cast<size_t>(j)];
        std::vector<Matrix> imgs;
        for (int h = 0; h < Psrc.gens(); ++h) {
            int vh = Psrc.gen_vertex[static_cast<size_t>(h)];
            Matrix rhs(fld, 0, 0), lhs(fld, 0, 0);
            if (j == 0) {
                int local = Psrc.gen_coord[static_cast<size_t>(h)] - Psrc.rep->offset(vh);
                Matrix val = f.comp[static_cast<size_t>(vh)] * rX.aug.comp[static_cast<size_t>(vh)].col(local);
                rhs = val;
                lhs = rXp.aug.comp[static_cast<size_t>(vh)];
            } else {
                const RepMap& d = rX.diffs[static_cast<size_t>(j - 1)];
                int local = Psrc.gen_coord[static_cast<size_t>(h)] - Psrc.rep->offset(vh);
                Matrix w = d.comp[static_cast<size_t>(vh)].col(local);
                const ProjSum& Pprev = rX.terms[static_cast<size_t>(j - 1)];
                const ProjSum& PprevT = rXp.terms[static_cast<size_t>(j - 1)];
                Matrix y(fld, PprevT.rep->dims[static_cast<size_t>(vh)], 1);
                const auto& fib = Pprev.fiber_paths[static_cast<size_t>(vh)];
                for (size_t k = 0; k < fib.size(); ++k) {
                    Q c = w.get(static_cast<int>(k), 0);
                    if (c == 0) continue;
                    auto [g, path] = fib[k];
                    y = y + (PprevT.rep->path_action(path) * phi[static_cast<size_t>(j - 1)][static_cast<size_t>(g)]).scaled(c);
                }
                rhs = y;
                lhs = rXp.diffs[static_cast<size_t>(j - 1)].comp[static_cast<size_t>(vh)];
            }
            auto x = lhs.solve_right(rhs);
            if (!x) throw internal_error("functorial_left: lift failed");
            imgs.push_back(std::move(*x));
        }
        phi.push_back(std::move(imgs));
    }
    auto spX = ext_space(X, n, i);
    auto spXp = ext_space(Xp, n, i);
    Matrix out(fld, spX->dim, spXp->dim);
    const ProjSum& PiX = rX.terms[static_cast<size_t>(i)];
    for (int b = 0; b < spXp->dim; ++b) {
        ExtElement eb(Xp, n, i, spXp->basis_cvec(b));
        Matrix cvec(fld, spX->cdim, 1);
        for (int h = 0; h < PiX.gens(); ++h) {
            int vh = PiX.gen_vertex[static_cast<size_t>(h)];
            Matrix val = eval_cocycle(eb, vh, phi[static_cast<size_t>(i)][static_cast<size_t>(h)]);
            int off = spX->gen_off[static_cast<size_t>(h)];
            for (int t = 0; t < val.rows(); ++t) cvec.set(off + t, 0, val.get(t, 0));
        }
        Matrix coords = spX->class_coords(cvec);
        for (int r = 0; r < spX->dim; ++r) out.set(r, b, coords.get(r, 0));
    }
    return out;
}

Matrix ExtEngine::functorial_right(const RepHandle& m, const RepMap& g, int i) {
    auto spN = ext_space(m, g.src, i);
    auto spNp = ext_space(m, g.tgt, i);
    Field fld = m->alg->field();
    const Resolution& r = resolution(m, i);
    const ProjSum& Pi = r.terms[static_cast<size_t>(i)];
    Matrix out(fld, spNp->dim, spN->dim);
    for (int b = 0; b < spN->dim; ++b) {
        Matrix cv = spN->basis_cvec(b);
        Matrix cvec(fld, spNp->cdim, 1);
        for (int h = 0; h < Pi.gens(); ++h) {
            int vh = Pi.gen_vertex[static_cast<size_t>(h)];
            int off = spN->gen_off[static_cast<size_t>(h)];
            int gdim = spN->gen_off[static_cast<size_t>(h) + 1] - off;
            Matrix ng(fld, gdim, 1);
            for (int t = 0; t < gdim; ++t) ng.set(t, 0, cv.get(off + t, 0));
            Matrix val = g.comp[static_cast<size_t>(vh)] * ng;
            int offp = spNp->gen_off[static_cast<size_t>(h)];
            for (int t = 0; t < val.rows(); ++t) cvec.set(offp + t, 0, val.get(t, 0));
        }
        Matrix coords = spNp->class_coords(cvec);
        for (int rr = 0; rr < spNp->dim; ++rr) out.set(rr, b, coords.get(rr, 0));
    }
    return out;
}

Matrix ExtEngine::lmul_matrix(const ExtElement& a, const RepHandle& c, int v) {
    auto spB = ext_space(a.N, c, v);
    auto spOut = ext_space(a.M, c, a.deg + v);
    Field fld = a.M->alg->field();
    Matrix out(fld, spOut->dim, spB->dim);
    for (int b = 0; b < spB->dim; ++b) {
        ExtElement eb(a.N, c, v, spB->basis_cvec(b));
        ExtElement prod = yoneda(a, eb);
        Matrix coords = spOut->class_coords(prod.cvec);
        for (int r = 0; r < spOut->dim; ++r) out.set(r, b, coords.get(r, 0));
    }
    return out;
}

Matrix ExtEngine::rmul_matrix(const RepHandle& a, const ExtElement& b, int u) {
    auto spA = ext_space(a, b.M, u);
    auto spOut = ext_space(a, b.N, u + b.deg);
    Field fld = a->alg->field();
    Matrix out(fld, spOut->dim, spA->dim);
    for (int k = 0; k < spA->dim; ++k) {
        ExtElement ea(a, b.M, u, spA->basis_cvec(k));
        ExtElement prod = yoneda(ea, b);
        Matrix coords = spOut->class_coords(prod.cvec);
        for (int r = 0; r < spOut->dim; ++r) out.set(r, k, coords.get(r, 0));
    }
    return out;
}

ExtElement ExtEngine::connecting_class(const RepMap& alpha, const RepMap& beta, const RepMap& g) {
    // 0 -> X --alpha--> E --beta--> W -> 0, g: S -> W; result in Ext^1(S, X)
    const RepHandle& S = g.src;
    const RepHandle& X = alpha.src;
    const Resolution& r = resolution(S, 2);
    const ProjSum& P0 = r.terms[0];
    const ProjSum& P1 = r.terms[1];
    Field f = S->alg->field();
    // lift (aug then g) through beta on generators of P_0
    std::vector<Matrix> lam;
    for (int h = 0; h < P0.gens(); ++h) {
        int vh = P0.gen_vertex[static_cast<size_t>(h)];
        int local = P0.gen_coord[static_cast<size_t>(h)] - P0.rep->offset(vh);
        Matrix val = g.comp[static_cast<size_t>(vh)] * r.aug.comp[static_cast<size_t>(vh)].col(local);
        auto x = beta.comp[static_cast<size_t>(vh)].solve_right(val);
        if (!x) throw internal_error("connecting_class: beta not surjective");
        lam.push_back(std::move(*x));
    }
    RepMap lambda = hom_from_gens(P0, alpha.tgt, lam);
    RepMap dlam = compose(r.diffs[0], lambda); // P_1 -> E, lands in ker beta = im alpha
    auto sp = ext_space(S, X, 1);
    Matrix cvec(f, sp->cdim, 1);
    for (int h = 0; h < P1.gens(); ++h) {
        int vh = P1.gen_vertex[static_cast<size_t>(h)];
        int local = P1.gen_coord[static_cast<size_t>(h)] - P1.rep->offset(vh);
        Matrix val = dlam.comp[static_cast<size_t>(vh)].col(local);
        auto x = alpha.comp[static_cast<size_t>(vh)].solve_right(val);
        if (!x) throw internal_error("connecting_class: value outside the image of alpha");
        int off = sp->gen_off[static_cast<size_t>(h)];
        for (int t = 0; t < x->rows(); ++t) cvec.set(off + t, 0, x->get(t, 0));
    }
    return ExtElement(S, X, 1, std::move(cvec));
}

RepHandle regular_rep(const AlgebraHandle& a) {
    std::vector<int> all;
    for (int v = 0; v < a->num_vertices(); ++v) all.push_back(v);
    return projective_sum(a, all).rep;
}

DomDim domdim_bounded(ExtEngine&, const AlgebraHandle& a, int bound) {
    if (bound < 1) throw input_error("domdim bound must be >= 1");
    RepHandle c = regular_rep(a);
    int n = 0;
    while (n < bound) {
        if (c->is_zero()) return DomDim{true, bound}; // resolution ended inside projectives
        Hull h = injective_hull(c);
        if (!is_projective(h.inj)) return DomDim{false, n};
        ++n;
        c = cokernel_rep(h.embed).rep;
    }
    return DomDim{true, bound};
}

} // namespace yoneda
