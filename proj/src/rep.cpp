#include "yoneda/rep.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace yoneda {

struct PathActionCache {
    std::mutex mu;
    std::map<int, Matrix> map;
};

namespace {

/// canonical column basis of the span of the given columns
Matrix column_basis(const Matrix& cols) {
    auto e = cols.transposed().rref();
    return e.reduced.submatrix(0, e.rank, 0, cols.rows()).transposed();
}

Matrix flatten_map(const RepMap& f) {
    int total = 0;
    for (const auto& c : f.comp) total += c.rows() * c.cols();
    Matrix out(f.src->alg->field(), total, 1);
    int pos = 0;
    for (const auto& c : f.comp)
        for (int i = 0; i < c.rows(); ++i)
            for (int j = 0; j < c.cols(); ++j) out.set(pos++, 0, c.get(i, j));
    return out;
}

} // namespace

int Rep::total_dim() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
}

int Rep::offset(int v) const {
    int t = 0;
    for (int i = 0; i < v; ++i) t += dims[static_cast<size_t>(i)];
    return t;
}

Matrix Rep::path_action(int basis_idx) const {
    const auto& p = alg->basis()[static_cast<size_t>(basis_idx)];
    if (p.length() == 0) return Matrix::identity(alg->field(), dims[static_cast<size_t>(p.src)]);
    if (p.length() == 1) return act[static_cast<size_t>(p.word[0])];
    if (cache) {
        std::lock_guard<std::mutex> lock(cache->mu);
        auto it = cache->map.find(basis_idx);
        if (it != cache->map.end()) return it->second;
    }
    Matrix m = act[static_cast<size_t>(p.word[0])];
    for (size_t i = 1; i < p.word.size(); ++i) m = m * act[static_cast<size_t>(p.word[i])];
    if (cache) {
        std::lock_guard<std::mutex> lock(cache->mu);
        cache->map.emplace(basis_idx, m);
    }
    return m;
}

Matrix Rep::act_global(const Matrix& elem) const {
    int n = total_dim();
    Matrix out(alg->field(), n, n);
    for (int i = 0; i < alg->dim(); ++i) {
        Q c = elem.get(i, 0);
        if (c == 0) continue;
        const auto& p = alg->basis()[static_cast<size_t>(i)];
        Matrix pa = path_action(i).scaled(c);
        int ro = offset(p.src), co = offset(p.tgt);
        for (int r = 0; r < pa.rows(); ++r)
            for (int cc = 0; cc < pa.cols(); ++cc)
                out.set(ro + r, co + cc, out.get(ro + r, co + cc) + pa.get(r, cc));
    }
    return out;
}

void Rep::check_valid() const {
    if (static_cast<int>(dims.size()) != alg->num_vertices()) throw internal_error("rep dims size");
    if (static_cast<int>(act.size()) != alg->num_arrows()) throw internal_error("rep act size");
    for (int a = 0; a < alg->num_arrows(); ++a) {
        const auto& ar = alg->quiver().arrows[static_cast<size_t>(a)];
        if (act[static_cast<size_t>(a)].rows() != dims[static_cast<size_t>(ar.src)] ||
            act[static_cast<size_t>(a)].cols() != dims[static_cast<size_t>(ar.tgt)])
            throw internal_error("rep arrow matrix shape");
    }
    for (const auto& rel : alg->relations()) {
        if (rel.empty()) continue;
        int s = alg->quiver().arrows[static_cast<size_t>(rel[0].word.front())].src;
        int t = alg->quiver().arrows[static_cast<size_t>(rel[0].word.back())].tgt;
        Matrix sum(alg->field(), dims[static_cast<size_t>(s)], dims[static_cast<size_t>(t)]);
        for (const auto& term : rel) {
            Matrix m = act[static_cast<size_t>(term.word[0])];
            for (size_t i = 1; i < term.word.size(); ++i) m = m * act[static_cast<size_t>(term.word[i])];
            sum = sum + m.scaled(term.coeff);
        }
        if (!sum.is_zero()) throw input_error("module data violates an algebra relation");
    }
}

RepHandle make_rep(Rep r) {
    r.cache = std::make_shared<PathActionCache>();
    return std::make_shared<const Rep>(std::move(r));
}

RepHandle zero_rep(const AlgebraHandle& a) {
    Rep r;
    r.alg = a;
    r.dims.assign(static_cast<size_t>(a->num_vertices()), 0);
    for (int i = 0; i < a->num_arrows(); ++i) r.act.emplace_back(a->field(), 0, 0);
    return make_rep(std::move(r));
}

bool RepMap::is_zero() const {
    for (const auto& c : comp)
        if (!c.is_zero()) return false;
    return true;
}

bool RepMap::is_injective() const {
    for (const auto& c : comp)
        if (c.rank() != c.cols()) return false;
    return true;
}

bool RepMap::is_surjective() const {
    for (const auto& c : comp)
        if (c.rank() != c.rows()) return false;
    return true;
}

Matrix RepMap::global() const {
    int rn = tgt->total_dim(), cn = src->total_dim();
    Matrix out(src->alg->field(), rn, cn);
    for (size_t v = 0; v < comp.size(); ++v) {
        int ro = tgt->offset(static_cast<int>(v)), co = src->offset(static_cast<int>(v));
        for (int i = 0; i < comp[v].rows(); ++i)
            for (int j = 0; j < comp[v].cols(); ++j) out.set(ro + i, co + j, comp[v].get(i, j));
    }
    return out;
}

void RepMap::check_intertwines() const {
    const auto& alg = src->alg;
    for (int a = 0; a < alg->num_arrows(); ++a) {
        const auto& ar = alg->quiver().arrows[static_cast<size_t>(a)];
        Matrix lhs = comp[static_cast<size_t>(ar.src)] * src->act[static_cast<size_t>(a)];
        Matrix rhs = tgt->act[static_cast<size_t>(a)] * comp[static_cast<size_t>(ar.tgt)];
        if (!(lhs == rhs)) throw internal_error("RepMap does not intertwine the action");
    }
}

RepMap id_map(const RepHandle& m) {
    RepMap f{m, m, {}};
    for (int v = 0; v < m->alg->num_vertices(); ++v)
        f.comp.push_back(Matrix::identity(m->alg->field(), m->dims[static_cast<size_t>(v)]));
    return f;
}

RepMap zero_map(const RepHandle& src, const RepHandle& tgt) {
    RepMap f{src, tgt, {}};
    for (int v = 0; v < src->alg->num_vertices(); ++v)
        f.comp.emplace_back(src->alg->field(), tgt->dims[static_cast<size_t>(v)], src->dims[static_cast<size_t>(v)]);
    return f;
}

RepMap compose(const RepMap& first, const RepMap& second) {
    RepMap f{first.src, second.tgt, {}};
    for (size_t v = 0; v < first.comp.size(); ++v) f.comp.push_back(second.comp[v] * first.comp[v]);
    return f;
}

RepMap map_add(const RepMap& a, const RepMap& b) {
    RepMap f{a.src, a.tgt, {}};
    for (size_t v = 0; v < a.comp.size(); ++v) f.comp.push_back(a.comp[v] + b.comp[v]);
    return f;
}

RepMap map_scale(const Q& c, const RepMap& a) {
    RepMap f{a.src, a.tgt, {}};
    for (const auto& m : a.comp) f.comp.push_back(m.scaled(c));
    return f;
}

std::vector<RepMap> hom_basis(const RepHandle& m, const RepHandle& n) {
    if (m->alg != n->alg) throw input_error("hom_basis: modules over different algebras");
    const auto& alg = m->alg;
    Field f = alg->field();
    int nv = alg->num_vertices();
    std::vector<int> var_off(static_cast<size_t>(nv) + 1, 0);
    for (int v = 0; v < nv; ++v)
        var_off[static_cast<size_t>(v) + 1] =
            var_off[static_cast<size_t>(v)] + n->dims[static_cast<size_t>(v)] * m->dims[static_cast<size_t>(v)];
    int nvars = var_off[static_cast<size_t>(nv)];

    int neq = 0;
    for (int a = 0; a < alg->num_arrows(); ++a) {
        const auto& ar = alg->quiver().arrows[static_cast<size_t>(a)];
        neq += n->dims[static_cast<size_t>(ar.src)] * m->dims[static_cast<size_t>(ar.tgt)];
    }
    Matrix sys(f, neq, nvars);
    int row = 0;
    for (int a = 0; a < alg->num_arrows(); ++a) {
        const auto& ar = alg->quiver().arrows[static_cast<size_t>(a)];
        int u = ar.src, w = ar.tgt;
        const Matrix& Am = m->act[static_cast<size_t>(a)];
        const Matrix& An = n->act[static_cast<size_t>(a)];
        for (int r = 0; r < n->dims[static_cast<size_t>(u)]; ++r)
            for (int c = 0; c < m->dims[static_cast<size_t>(w)]; ++c) {
                // F_u[r,k] * Am[k,c]  -  An[r,l] * F_w[l,c]  = 0
                for (int k = 0; k < m->dims[static_cast<size_t>(u)]; ++k) {
                    Q coef = Am.get(k, c);
                    if (coef != 0)
                        sys.set(row, var_off[static_cast<size_t>(u)] + r * m->dims[static_cast<size_t>(u)] + k,
                                sys.get(row, var_off[static_cast<size_t>(u)] + r * m->dims[static_cast<size_t>(u)] + k) + coef);
                }
                for (int l = 0; l < n->dims[static_cast<size_t>(w)]; ++l) {
                    Q coef = An.get(r, l);
                    if (coef != 0)
                        sys.set(row, var_off[static_cast<size_t>(w)] + l * m->dims[static_cast<size_t>(w)] + c,
                                sys.get(row, var_off[static_cast<size_t>(w)] + l * m->dims[static_cast<size_t>(w)] + c) - coef);
                }
                ++row;
            }
    }
    Matrix ker = sys.kernel();
    std::vector<RepMap> out;
    for (int j = 0; j < ker.cols(); ++j) {
        RepMap g{m, n, {}};
        for (int v = 0; v < nv; ++v) {
            Matrix comp(f, n->dims[static_cast<size_t>(v)], m->dims[static_cast<size_t>(v)]);
            for (int r = 0; r < comp.rows(); ++r)
                for (int c = 0; c < comp.cols(); ++c)
                    comp.set(r, c, ker.get(var_off[static_cast<size_t>(v)] + r * comp.cols() + c, j));
            g.comp.push_back(std::move(comp));
        }
        out.push_back(std::move(g));
    }
    return out;
}

int hom_dim(const RepHandle& m, const RepHandle& n) { return static_cast<int>(hom_basis(m, n).size()); }

Matrix hom_coords(const std::vector<RepMap>& basis, const RepMap& f) {
    if (basis.empty()) {
        if (!f.is_zero()) throw internal_error("hom_coords: nonzero map, empty basis");
        return Matrix(f.src->alg->field(), 0, 1);
    }
    Matrix cols = flatten_map(basis[0]);
    for (size_t i = 1; i < basis.size(); ++i) cols = cols.hstack(flatten_map(basis[i]));
    auto sol = cols.solve_right(flatten_map(f));
    if (!sol) throw internal_error("hom_coords: map not in span of basis");
    return *sol;
}

ProjSum projective_sum(const AlgebraHandle& a, const std::vector<int>& vertices) {
    ProjSum ps;
    ps.gen_vertex = vertices;
    int nv = a->num_vertices();
    ps.fiber_paths.assign(static_cast<size_t>(nv), {});
    for (int w = 0; w < nv; ++w)
        for (size_t g = 0; g < vertices.size(); ++g)
            for (int bi = 0; bi < a->dim(); ++bi) {
                const auto& p = a->basis()[static_cast<size_t>(bi)];
                if (p.src == w && p.tgt == vertices[g]) ps.fiber_paths[static_cast<size_t>(w)].emplace_back(static_cast<int>(g), bi);
            }
    Rep r;
    r.alg = a;
    for (int w = 0; w < nv; ++w) r.dims.push_back(static_cast<int>(ps.fiber_paths[static_cast<size_t>(w)].size()));
    // arrow action: a_: u -> w maps fiber w to fiber u by left multiplication
    for (int ai = 0; ai < a->num_arrows(); ++ai) {
        const auto& ar = a->quiver().arrows[static_cast<size_t>(ai)];
        Matrix m(a->field(), r.dims[static_cast<size_t>(ar.src)], r.dims[static_cast<size_t>(ar.tgt)]);
        const auto& src_fib = ps.fiber_paths[static_cast<size_t>(ar.src)];
        const auto& tgt_fib = ps.fiber_paths[static_cast<size_t>(ar.tgt)];
        int api = a->arrow_path_index(ai);
        for (size_t c = 0; c < tgt_fib.size(); ++c) {
            auto [g, p] = tgt_fib[c];
            for (const auto& [k, coef] : a->table(api, p)) {
                // locate (g, k) in the source fiber
                for (size_t rr = 0; rr < src_fib.size(); ++rr)
                    if (src_fib[rr].first == g && src_fib[rr].second == k) {
                        m.set(static_cast<int>(rr), static_cast<int>(c), coef);
                        break;
                    }
            }
        }
        r.act.push_back(std::move(m));
    }
    ps.rep = make_rep(std::move(r));
    for (size_t g = 0; g < vertices.size(); ++g) {
        int v = vertices[g];
        int e_idx = a->trivial_path_index(v);
        const auto& fib = ps.fiber_paths[static_cast<size_t>(v)];
        int local = -1;
        for (size_t k = 0; k < fib.size(); ++k)
            if (fib[k].first == static_cast<int>(g) && fib[k].second == e_idx) local = static_cast<int>(k);
        if (local < 0) throw internal_error("projective_sum: generator not found");
        ps.gen_coord.push_back(ps.rep->offset(v) + local);
    }
    return ps;
}

RepMap hom_from_gens(const ProjSum& p, const RepHandle& n, const std::vector<Matrix>& gen_images) {
    const auto& a = p.rep->alg;
    RepMap f{p.rep, n, {}};
    for (int w = 0; w < a->num_vertices(); ++w) {
        const auto& fib = p.fiber_paths[static_cast<size_t>(w)];
        Matrix comp(a->field(), n->dims[static_cast<size_t>(w)], static_cast<int>(fib.size()));
        for (size_t c = 0; c < fib.size(); ++c) {
            auto [g, path] = fib[c];
            Matrix img = n->path_action(path) * gen_images[static_cast<size_t>(g)];
            for (int r = 0; r < comp.rows(); ++r) comp.set(r, static_cast<int>(c), img.get(r, 0));
        }
        f.comp.push_back(std::move(comp));
    }
    return f;
}

std::vector<Matrix> gens_of_hom(const ProjSum& p, const RepMap& f) {
    std::vector<Matrix> out;
    for (int g = 0; g < p.gens(); ++g) {
        int v = p.gen_vertex[static_cast<size_t>(g)];
        int local = p.gen_coord[static_cast<size_t>(g)] - p.rep->offset(v);
        out.push_back(f.comp[static_cast<size_t>(v)].col(local));
    }
    return out;
}

RepHandle standard_module(const AlgebraHandle& a, StandardKind kind, int vertex) {
    if (vertex < 0 || vertex >= a->num_vertices()) throw input_error("unknown vertex index");
    switch (kind) {
    case StandardKind::Simple: {
        Rep r;
        r.alg = a;
        r.dims.assign(static_cast<size_t>(a->num_vertices()), 0);
        r.dims[static_cast<size_t>(vertex)] = 1;
        for (int ai = 0; ai < a->num_arrows(); ++ai) {
            const auto& ar = a->quiver().arrows[static_cast<size_t>(ai)];
            r.act.emplace_back(a->field(), r.dims[static_cast<size_t>(ar.src)], r.dims[static_cast<size_t>(ar.tgt)]);
        }
        return make_rep(std::move(r));
    }
    case StandardKind::Projective:
        return projective_sum(a, {vertex}).rep;
    case StandardKind::Injective: {
        auto op = opposite(a);
        return dual_rep(projective_sum(op, {vertex}).rep);
    }
    }
    throw internal_error("unreachable");
}

SumRep direct_sum(const AlgebraHandle& a, const std::vector<RepHandle>& parts) {
    Field f = a->field();
    Rep r;
    r.alg = a;
    int nv = a->num_vertices();
    r.dims.assign(static_cast<size_t>(nv), 0);
    for (const auto& p : parts)
        for (int v = 0; v < nv; ++v) r.dims[static_cast<size_t>(v)] += p->dims[static_cast<size_t>(v)];
    for (int ai = 0; ai < a->num_arrows(); ++ai) {
        const auto& ar = a->quiver().arrows[static_cast<size_t>(ai)];
        Matrix m(f, r.dims[static_cast<size_t>(ar.src)], r.dims[static_cast<size_t>(ar.tgt)]);
        int ro = 0, co = 0;
        for (const auto& p : parts) {
            const Matrix& pm = p->act[static_cast<size_t>(ai)];
            for (int i = 0; i < pm.rows(); ++i)
                for (int j = 0; j < pm.cols(); ++j) m.set(ro + i, co + j, pm.get(i, j));
            ro += p->dims[static_cast<size_t>(ar.src)];
            co += p->dims[static_cast<size_t>(ar.tgt)];
        }
        r.act.push_back(std::move(m));
    }
    SumRep out;
    out.rep = make_rep(std::move(r));
    std::vector<int> off(static_cast<size_t>(nv), 0);
    for (const auto& p : parts) {
        RepMap inj{p, out.rep, {}}, proj{out.rep, p, {}};
        for (int v = 0; v < nv; ++v) {
            Matrix mi(f, out.rep->dims[static_cast<size_t>(v)], p->dims[static_cast<size_t>(v)]);
            Matrix mp(f, p->dims[static_cast<size_t>(v)], out.rep->dims[static_cast<size_t>(v)]);
            for (int j = 0; j < p->dims[static_cast<size_t>(v)]; ++j) {
                mi.set(off[static_cast<size_t>(v)] + j, j, Q(1));
                mp.set(j, off[static_cast<size_t>(v)] + j, Q(1));
            }
            inj.comp.push_back(std::move(mi));
            proj.comp.push_back(std::move(mp));
        }
        out.inj.push_back(std::move(inj));
        out.proj.push_back(std::move(proj));
        for (int v = 0; v < nv; ++v) off[static_cast<size_t>(v)] += p->dims[static_cast<size_t>(v)];
    }
    return out;
}

SubRep sub_rep(const RepHandle& m, const std::vector<Matrix>& spans) {
    const auto& a = m->alg;
    Field f = a->field();
    int nv = a->num_vertices();
    std::vector<Matrix> bases;
    for (int v = 0; v < nv; ++v) bases.push_back(column_basis(spans[static_cast<size_t>(v)]));
    // close under the arrow actions
    bool grew = true;
    while (grew) {
        grew = false;
        for (int ai = 0; ai < a->num_arrows(); ++ai) {
            const auto& ar = a->quiver().arrows[static_cast<size_t>(ai)];
            Matrix img = m->act[static_cast<size_t>(ai)] * bases[static_cast<size_t>(ar.tgt)];
            Matrix joint = bases[static_cast<size_t>(ar.src)].hstack(img);
            Matrix nb = column_basis(joint);
            if (nb.cols() != bases[static_cast<size_t>(ar.src)].cols()) {
                bases[static_cast<size_t>(ar.src)] = nb;
                grew = true;
            }
        }
    }
    Rep s;
    s.alg = a;
    for (int v = 0; v < nv; ++v) s.dims.push_back(bases[static_cast<size_t>(v)].cols());
    for (int ai = 0; ai < a->num_arrows(); ++ai) {
        const auto& ar = a->quiver().arrows[static_cast<size_t>(ai)];
        Matrix rhs = m->act[static_cast<size_t>(ai)] * bases[static_cast<size_t>(ar.tgt)];
        auto x = bases[static_cast<size_t>(ar.src)].solve_right(rhs);
        if (!x) throw internal_error("sub_rep: span not closed after closure");
        s.act.push_back(std::move(*x));
    }
    SubRep out;
    out.rep = make_rep(std::move(s));
    out.incl = RepMap{out.rep, m, bases};
    return out;
}

QuotRep quotient_rep(const RepHandle& m, const std::vector<Matrix>& sub_spans) {
    const auto& a = m->alg;
    Field f = a->field();
    int nv = a->num_vertices();
    SubRep closed = sub_rep(m, sub_spans); // canonical closed bases
    std::vector<Subspace> subs;
    std::vector<std::vector<int>> freecoords;
    for (int v = 0; v < nv; ++v) {
        subs.push_back(Subspace::from_columns(closed.incl.comp[static_cast<size_t>(v)]));
        std::vector<bool> piv(static_cast<size_t>(m->dims[static_cast<size_t>(v)]), false);
        for (int p : subs.back().pivots()) piv[static_cast<size_t>(p)] = true;
        std::vector<int> fc;
        for (int j = 0; j < m->dims[static_cast<size_t>(v)]; ++j)
            if (!piv[static_cast<size_t>(j)]) fc.push_back(j);
        freecoords.push_back(std::move(fc));
    }
    // projection: reduce then restrict to the free coordinates; section: embed
    std::vector<Matrix> projs, sects;
    for (int v = 0; v < nv; ++v) {
        int md = m->dims[static_cast<size_t>(v)];
        int qd = static_cast<int>(freecoords[static_cast<size_t>(v)].size());
        Matrix pr(f, qd, md), se(f, md, qd);
        for (int j = 0; j < md; ++j) {
            Matrix e(f, md, 1);
            e.set(j, 0, Q(1));
            Matrix r = subs[static_cast<size_t>(v)].reduce(e);
            for (int k = 0; k < qd; ++k) pr.set(k, j, r.get(freecoords[static_cast<size_t>(v)][static_cast<size_t>(k)], 0));
        }
        for (int k = 0; k < qd; ++k) se.set(freecoords[static_cast<size_t>(v)][static_cast<size_t>(k)], k, Q(1));
        projs.push_back(std::move(pr));
        sects.push_back(std::move(se));
    }
    Rep qr;
    qr.alg = a;
    for (int v = 0; v < nv; ++v) qr.dims.push_back(static_cast<int>(freecoords[static_cast<size_t>(v)].size()));
    for (int ai = 0; ai < a->num_arrows(); ++ai) {
        const auto& ar = a->quiver().arrows[static_cast<size_t>(ai)];
        qr.act.push_back(projs[static_cast<size_t>(ar.src)] * m->act[static_cast<size_t>(ai)] * sects[static_cast<size_t>(ar.tgt)]);
    }
    QuotRep out;
    out.rep = make_rep(std::move(qr));
    out.proj = RepMap{m, out.rep, projs};
    return out;
}

SubRep kernel_rep(const RepMap& f) {
    std::vector<Matrix> spans;
    for (const auto& c : f.comp) spans.push_back(c.kernel());
    return sub_rep(f.src, spans);
}

SubRep image_rep(const RepMap& f) {
    std::vector<Matrix> spans(f.comp.begin(), f.comp.end());
    return sub_rep(f.tgt, spans);
}

QuotRep cokernel_rep(const RepMap& f) {
    std::vector<Matrix> spans(f.comp.begin(), f.comp.end());
    return quotient_rep(f.tgt, spans);
}

SubRep radical_rep(const RepHandle& m) {
    const auto& a = m->alg;
    int nv = a->num_vertices();
    std::vector<Matrix> spans;
    for (int v = 0; v < nv; ++v) spans.emplace_back(a->field(), m->dims[static_cast<size_t>(v)], 0);
    for (int ai = 0; ai < a->num_arrows(); ++ai) {
        const auto& ar = a->quiver().arrows[static_cast<size_t>(ai)];
        spans[static_cast<size_t>(ar.src)] = spans[static_cast<size_t>(ar.src)].hstack(m->act[static_cast<size_t>(ai)]);
    }
    return sub_rep(m, spans);
}

SubRep socle_rep(const RepHandle& m) {
    const auto& a = m->alg;
    int nv = a->num_vertices();
    std::vector<Matrix> spans;
    for (int v = 0; v < nv; ++v) {
        Matrix stacked(a->field(), 0, m->dims[static_cast<size_t>(v)]);
        for (int ai = 0; ai < a->num_arrows(); ++ai)
            if (a->quiver().arrows[static_cast<size_t>(ai)].tgt == v) stacked = stacked.vstack(m->act[static_cast<size_t>(ai)]);
        spans.push_back(stacked.rows() == 0 ? Matrix::identity(a->field(), m->dims[static_cast<size_t>(v)])
                                            : stacked.kernel());
    }
    return sub_rep(m, spans);
}

QuotRep top_rep(const RepHandle& m) {
    auto rad = radical_rep(m);
    return quotient_rep(m, std::vector<Matrix>(rad.incl.comp.begin(), rad.incl.comp.end()));
}

QuotRep quotient_socle_component(const RepHandle& m, int vertex) {
    auto soc = socle_rep(m);
    std::vector<Matrix> spans;
    for (int v = 0; v < m->alg->num_vertices(); ++v)
        spans.push_back(v == vertex ? soc.incl.comp[static_cast<size_t>(v)]
                                    : Matrix(m->alg->field(), m->dims[static_cast<size_t>(v)], 0));
    return quotient_rep(m, spans);
}

RepHandle dual_rep(const RepHandle& m) {
    auto op = opposite(m->alg);
    Rep r;
    r.alg = op;
    r.dims = m->dims;
    for (const auto& a : m->act) r.act.push_back(a.transposed());
    return make_rep(std::move(r));
}

RepMap dual_map(const RepMap& f) {
    RepMap g{dual_rep(f.tgt), dual_rep(f.src), {}};
    for (const auto& c : f.comp) g.comp.push_back(c.transposed());
    return g;
}

Cover projective_cover(const RepHandle& m) {
    if (m->is_zero()) {
        Cover c;
        c.proj = projective_sum(m->alg, {});
        c.epi = zero_map(c.proj.rep, m);
        return c;
    }
    auto rad = radical_rep(m);
    std::vector<int> verts;
    std::vector<Matrix> gens;
    for (int v = 0; v < m->alg->num_vertices(); ++v) {
        Subspace s = Subspace::from_columns(rad.incl.comp[static_cast<size_t>(v)]);
        std::vector<bool> piv(static_cast<size_t>(m->dims[static_cast<size_t>(v)]), false);
        for (int p : s.pivots()) piv[static_cast<size_t>(p)] = true;
        for (int j = 0; j < m->dims[static_cast<size_t>(v)]; ++j)
            if (!piv[static_cast<size_t>(j)]) {
                verts.push_back(v);
                Matrix e(m->alg->field(), m->dims[static_cast<size_t>(v)], 1);
                e.set(j, 0, Q(1));
                gens.push_back(std::move(e));
            }
    }
    Cover c;
    c.proj = projective_sum(m->alg, verts);
    c.epi = hom_from_gens(c.proj, m, gens);
    if (!c.epi.is_surjective()) throw internal_error("projective cover is not surjective");
    // minimality: the kernel must lie inside rad(P)
    auto radP = radical_rep(c.proj.rep);
    for (int v = 0; v < m->alg->num_vertices(); ++v) {
        Subspace rs = Subspace::from_columns(radP.incl.comp[static_cast<size_t>(v)]);
        Matrix kv = c.epi.comp[static_cast<size_t>(v)].kernel();
        for (int j = 0; j < kv.cols(); ++j)
            if (!rs.contains(kv.col(j))) throw internal_error("projective cover kernel not in radical");
    }
    return c;
}

RepHandle syzygy(const RepHandle& m, int n) {
    RepHandle cur = m;
    for (int i = 0; i < n; ++i) {
        if (cur->is_zero()) return cur;
        auto c = projective_cover(cur);
        cur = kernel_rep(c.epi).rep;
    }
    return cur;
}

Hull injective_hull(const RepHandle& m) {
    auto dm = dual_rep(m);
    auto c = projective_cover(dm);
    Hull h;
    h.inj = dual_rep(c.proj.rep);
    h.embed = RepMap{m, h.inj, {}};
    for (const auto& cm : c.epi.comp) h.embed.comp.push_back(cm.transposed());
    return h;
}

RepHandle cosyzygy(const RepHandle& m, int n) {
    RepHandle cur = m;
    for (int i = 0; i < n; ++i) {
        if (cur->is_zero()) return cur;
        auto h = injective_hull(cur);
        cur = cokernel_rep(h.embed).rep;
    }
    return cur;
}

bool is_projective(const RepHandle& m) {
    if (m->is_zero()) return true;
    auto c = projective_cover(m);
    for (const auto& comp : c.epi.comp)
        if (comp.rank() != comp.cols()) return false;
    return true;
}

RepHandle transpose_rep(const RepHandle& m) {
    auto a = m->alg;
    auto op = opposite(a);
    if (m->is_zero()) return zero_rep(op);
    auto c0 = projective_cover(m);
    auto om = kernel_rep(c0.epi);
    auto c1 = projective_cover(om.rep);
    RepMap d1 = compose(c1.epi, om.incl); // P1 -> P0
    const auto& P0 = c0.proj;
    const auto& P1 = c1.proj;
    auto imgs = gens_of_hom(P1, d1); // per P1-generator, a vector in P0's fiber at w_j
    ProjSum O0 = projective_sum(op, P0.gen_vertex);
    ProjSum O1 = projective_sum(op, P1.gen_vertex);
    const Matrix& rev = a->reversal_matrix();
    std::vector<Matrix> ogen_images;
    for (int i = 0; i < O0.gens(); ++i)
        ogen_images.emplace_back(op->field(), O1.rep->dims[static_cast<size_t>(O0.gen_vertex[static_cast<size_t>(i)])], 1);
    for (int j = 0; j < P1.gens(); ++j) {
        int wj = P1.gen_vertex[static_cast<size_t>(j)];
        const Matrix& img = imgs[static_cast<size_t>(j)]; // in P0 fiber at wj
        const auto& fib = P0.fiber_paths[static_cast<size_t>(wj)];
        for (size_t k = 0; k < fib.size(); ++k) {
            Q coef = img.get(static_cast<int>(k), 0);
            if (coef == 0) continue;
            auto [i, path] = fib[k];
            // reversed path lives in O1's copy j, fiber v_i
            int vi = P0.gen_vertex[static_cast<size_t>(i)];
            Matrix rcol = rev.col(path); // coordinates in the opposite algebra
            const auto& ofib = O1.fiber_paths[static_cast<size_t>(vi)];
            for (size_t r = 0; r < ofib.size(); ++r) {
                auto [og, opath] = ofib[r];
                if (og != j) continue;
                Q v = rcol.get(opath, 0);
                if (v == 0) continue;
                int row = static_cast<int>(r);
                ogen_images[static_cast<size_t>(i)].set(row, 0,
                    ogen_images[static_cast<size_t>(i)].get(row, 0) + coef * v);
            }
        }
    }
    RepMap od = hom_from_gens(O0, O1.rep, ogen_images);
    return cokernel_rep(od).rep;
}

RepHandle dtr(const RepHandle& m) { return dual_rep(transpose_rep(m)); }

int stable_hom_dim(const RepHandle& m, const RepHandle& n) {
    auto homs = hom_basis(m, n);
    if (homs.empty()) return 0;
    auto c = projective_cover(n);
    auto lifts = hom_basis(m, c.proj.rep);
    int total = static_cast<int>(homs.size());
    if (lifts.empty()) return total;
    Matrix cols(m->alg->field(), flatten_map(homs[0]).rows(), 0);
    for (const auto& l : lifts) cols = cols.hstack(flatten_map(compose(l, c.epi)));
    return total - cols.rank();
}

std::optional<RepMap> find_iso(const RepHandle& m, const RepHandle& n, int budget) {
    if (m->dims != n->dims) return std::nullopt;
    auto basis = hom_basis(m, n);
    if (basis.empty()) return m->total_dim() == 0 ? std::optional<RepMap>(zero_map(m, n)) : std::nullopt;
    auto invertible = [&](const RepMap& f) {
        for (const auto& c : f.comp)
            if (c.rank() != c.rows()) return false;
        return true;
    };
    Field f = m->alg->field();
    size_t k = basis.size();
    if (!f.is_rational()) {
        std::int64_t p = f.p();
        double combos = 1;
        for (size_t i = 0; i < k; ++i) combos *= static_cast<double>(p);
        if (combos <= static_cast<double>(budget)) {
            std::vector<std::int64_t> c(k, 0);
            while (true) {
                size_t i = 0;
                while (i < k && ++c[i] == p) c[i++] = 0;
                if (i == k) break;
                RepMap g = zero_map(m, n);
                for (size_t j = 0; j < k; ++j)
                    if (c[j]) g = map_add(g, map_scale(Q(c[j]), basis[j]));
                if (invertible(g)) return g;
            }
            return std::nullopt;
        }
    }
    // fall back to single elements and small signed pair sums
    for (const auto& b : basis)
        if (invertible(b)) return b;
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j)
            for (int s : {1, -1}) {
                RepMap g = map_add(basis[i], map_scale(Q(s), basis[j]));
                if (invertible(g)) return g;
            }
    return std::nullopt;
}

} // namespace yoneda
