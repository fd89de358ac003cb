#include "yoneda/phi_yoneda.hpp"

namespace yoneda {

std::vector<int> PhiAlgebra::block(int s, int t, int d) const {
    std::vector<int> out;
    for (size_t i = 0; i < meta.size(); ++i)
        if (meta[i].s == s && meta[i].t == t && meta[i].d == d) out.push_back(static_cast<int>(i));
    return out;
}

Matrix PhiAlgebra::idempotent(const std::vector<int>& summand_idxs) const {
    Matrix e(alg->f, alg->dim, 1);
    for (int s : summand_idxs)
        for (size_t i = 0; i < meta.size(); ++i)
            if (meta[i].s == s && meta[i].t == s && meta[i].d == 0)
                e.set(static_cast<int>(i), 0, unit_parts.get(static_cast<int>(i), 0));
    return e;
}

int PhiAlgebra::summand_index(const std::string& label) const {
    for (size_t i = 0; i < summand_labels.size(); ++i)
        if (summand_labels[i] == label) return static_cast<int>(i);
    throw input_error("unknown summand label: " + label);
}

PhiAlgebra build_phi_yoneda(ExtEngine& eng, const std::vector<std::string>& labels,
                            const std::vector<RepHandle>& summands, const PhiSet& phi,
                            bool allow_non_admissible) {
    phi.validate();
    if (auto w = admissibility_witness(phi.elems); w && !allow_non_admissible)
        throw refusal("NonAdmissiblePhi", "witness (" + std::to_string((*w)[0]) + "," +
                                              std::to_string((*w)[1]) + "," + std::to_string((*w)[2]) + ")");
    if (summands.empty()) throw input_error("perforated Yoneda algebra needs at least one summand");
    for (const auto& s : summands)
        if (s->total_dim() == 0) throw input_error("zero summand in perforated Yoneda algebra");

    PhiAlgebra pa;
    pa.phi = phi;
    pa.summand_labels = labels;
    pa.summands = summands;
    Field f = summands[0]->alg->field();
    int ns = static_cast<int>(summands.size());

    for (int d : phi.elems)
        for (int s = 0; s < ns; ++s)
            for (int t = 0; t < ns; ++t) {
                auto sp = eng.ext_space(summands[static_cast<size_t>(s)], summands[static_cast<size_t>(t)], d);
                for (int k = 0; k < sp->dim; ++k) {
                    pa.meta.push_back(PhiAlgebra::Meta{s, t, d, k});
                    pa.elems.emplace_back(summands[static_cast<size_t>(s)], summands[static_cast<size_t>(t)], d,
                                          sp->basis_cvec(k));
                }
            }

    SCAlgebra sc;
    sc.f = f;
    sc.dim = static_cast<int>(pa.meta.size());
    for (size_t i = 0; i < pa.meta.size(); ++i) {
        const auto& m = pa.meta[i];
        sc.labels.push_back(labels[static_cast<size_t>(m.s)] + "->" + labels[static_cast<size_t>(m.t)] +
                            ":d" + std::to_string(m.d) + "#" + std::to_string(m.idx));
        sc.grading.push_back(m.d);
    }
    for (int i = 0; i < sc.dim; ++i) sc.lmul.emplace_back(f, sc.dim, sc.dim);

    for (int i = 0; i < sc.dim; ++i) {
        const auto& mi = pa.meta[static_cast<size_t>(i)];
        for (int j = 0; j < sc.dim; ++j) {
            const auto& mj = pa.meta[static_cast<size_t>(j)];
            if (mi.t != mj.s) continue;
            int d = mi.d + mj.d;
            if (!phi.contains(d)) continue; // truncated product
            ExtElement prod = eng.yoneda(pa.elems[static_cast<size_t>(i)], pa.elems[static_cast<size_t>(j)]);
            auto sp = eng.ext_space(prod.M, prod.N, d);
            Matrix coords = sp->class_coords(prod.cvec);
            auto blk = pa.block(mi.s, mj.t, d);
            for (size_t k = 0; k < blk.size(); ++k)
                sc.lmul[static_cast<size_t>(i)].set(blk[k], j, coords.get(static_cast<int>(k), 0));
        }
    }

    sc.unit = Matrix(f, sc.dim, 1);
    for (int s = 0; s < ns; ++s) {
        ExtElement id = eng.identity_class(summands[static_cast<size_t>(s)]);
        auto sp = eng.ext_space(summands[static_cast<size_t>(s)], summands[static_cast<size_t>(s)], 0);
        Matrix coords = sp->class_coords(id.cvec);
        auto blk = pa.block(s, s, 0);
        for (size_t k = 0; k < blk.size(); ++k) sc.unit.set(blk[k], 0, coords.get(static_cast<int>(k), 0));
    }
    pa.unit_parts = sc.unit;
    pa.alg = make_sc(std::move(sc));
    return pa;
}

PhiModule build_phi_module(ExtEngine& eng, const PhiAlgebra& pa, const RepHandle& z) {
    PhiModule pm;
    pm.z = z;
    Field f = pa.alg->f;
    int ns = static_cast<int>(pa.summands.size());
    for (int d : pa.phi.elems)
        for (int s = 0; s < ns; ++s) {
            auto sp = eng.ext_space(pa.summands[static_cast<size_t>(s)], z, d);
            for (int k = 0; k < sp->dim; ++k) {
                pm.meta.push_back(PhiModule::Meta{s, d, k});
                pm.elems.emplace_back(pa.summands[static_cast<size_t>(s)], z, d, sp->basis_cvec(k));
            }
        }
    pm.mod.alg = pa.alg;
    pm.mod.dim = static_cast<int>(pm.meta.size());
    for (int a = 0; a < pa.alg->dim; ++a) {
        const auto& ma = pa.meta[static_cast<size_t>(a)];
        Matrix m(f, pm.mod.dim, pm.mod.dim);
        for (int j = 0; j < pm.mod.dim; ++j) {
            const auto& mj = pm.meta[static_cast<size_t>(j)];
            if (ma.t != mj.s) continue;
            int d = ma.d + mj.d;
            if (!pa.phi.contains(d)) continue;
            ExtElement prod = eng.yoneda(pa.elems[static_cast<size_t>(a)], pm.elems[static_cast<size_t>(j)]);
            auto sp = eng.ext_space(prod.M, prod.N, d);
            Matrix coords = sp->class_coords(prod.cvec);
            auto blk = pm.block(ma.s, d);
            for (size_t k = 0; k < blk.size(); ++k) m.set(blk[k], j, coords.get(static_cast<int>(k), 0));
        }
        pm.mod.act.push_back(std::move(m));
    }
    return pm;
}

std::vector<int> PhiModule::block(int s, int d) const {
    std::vector<int> out;
    for (size_t i = 0; i < meta.size(); ++i)
        if (meta[i].s == s && meta[i].d == d) out.push_back(static_cast<int>(i));
    return out;
}

Matrix mu_matrix(ExtEngine& eng, const PhiAlgebra& pa, const PhiModule& ms, const PhiModule& mt,
                 const ExtElement& x) {
    Field f = pa.alg->f;
    Matrix out(f, mt.mod.dim, ms.mod.dim);
    for (int j = 0; j < ms.mod.dim; ++j) {
        const auto& mj = ms.meta[static_cast<size_t>(j)];
        int d = mj.d + x.deg;
        if (!pa.phi.contains(d)) continue;
        ExtElement prod = eng.yoneda(ms.elems[static_cast<size_t>(j)], x);
        auto sp = eng.ext_space(prod.M, prod.N, d);
        Matrix coords = sp->class_coords(prod.cvec);
        auto blk = mt.block(mj.s, d);
        for (size_t k = 0; k < blk.size(); ++k) out.set(blk[k], j, coords.get(static_cast<int>(k), 0));
    }
    return out;
}

} // namespace yoneda
