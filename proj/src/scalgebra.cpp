#include "yoneda/scalgebra.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace yoneda {

Matrix SCAlgebra::mult(const Matrix& x, const Matrix& y) const {
    Matrix out(f, dim, 1);
    for (int a = 0; a < dim; ++a) {
        Q xa = x.get(a, 0);
        if (xa == 0) continue;
        out = out + (lmul[static_cast<size_t>(a)] * y).scaled(xa);
    }
    return out;
}

Matrix SCAlgebra::lmul_of(const Matrix& x) const {
    Matrix out(f, dim, dim);
    for (int a = 0; a < dim; ++a) {
        Q xa = x.get(a, 0);
        if (xa == 0) continue;
        out = out + lmul[static_cast<size_t>(a)].scaled(xa);
    }
    return out;
}

Matrix SCAlgebra::rmul_of(const Matrix& y) const {
    Matrix out(f, dim, dim);
    for (int a = 0; a < dim; ++a) {
        Matrix col = lmul[static_cast<size_t>(a)] * y; // a * y
        for (int r = 0; r < dim; ++r) out.set(r, a, col.get(r, 0));
    }
    return out;
}

Matrix SCAlgebra::basis_vec(int i) const {
    Matrix v(f, dim, 1);
    v.set(i, 0, Q(1));
    return v;
}

void SCAlgebra::check_consistent() const {
    for (int i = 0; i < dim; ++i) {
        if (!(mult(unit, basis_vec(i)) == basis_vec(i)) || !(mult(basis_vec(i), unit) == basis_vec(i)))
            throw internal_error("structure constants: unit fails at basis " + std::to_string(i));
    }
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) {
                Matrix lhs = mult(mult(basis_vec(i), basis_vec(j)), basis_vec(k));
                Matrix rhs = mult(basis_vec(i), mult(basis_vec(j), basis_vec(k)));
                if (!(lhs == rhs))
                    throw internal_error("structure constants not associative at triple (" + std::to_string(i) +
                                         "," + std::to_string(j) + "," + std::to_string(k) + ")");
            }
}

SCHandle make_sc(SCAlgebra a) { return std::make_shared<const SCAlgebra>(std::move(a)); }

SCHandle sc_opposite(const SCHandle& a) {
    SCAlgebra op;
    op.f = a->f;
    op.dim = a->dim;
    op.labels = a->labels;
    op.grading = a->grading;
    op.unit = a->unit;
    // (x *op y) = y * x, so lmul_op[a] = rmul_of(basis a)
    for (int i = 0; i < a->dim; ++i) op.lmul.push_back(a->rmul_of(a->basis_vec(i)));
    return make_sc(std::move(op));
}

SCQuotient sc_quotient(const SCHandle& a, const Matrix& ideal_cols) {
    Field f = a->f;
    Subspace s = Subspace::from_columns(ideal_cols);
    for (int i = 0; i < a->dim; ++i)
        for (int j = 0; j < s.dim(); ++j) {
            Matrix v(f, a->dim, 1);
            for (int c = 0; c < a->dim; ++c) v.set(c, 0, s.row_basis().get(j, c));
            if (!s.contains(a->mult(a->basis_vec(i), v)) || !s.contains(a->mult(v, a->basis_vec(i))))
                throw internal_error("sc_quotient: span is not a two-sided ideal");
        }
    std::vector<int> freec;
    {
        std::vector<bool> piv(static_cast<size_t>(a->dim), false);
        for (int p : s.pivots()) piv[static_cast<size_t>(p)] = true;
        for (int c = 0; c < a->dim; ++c)
            if (!piv[static_cast<size_t>(c)]) freec.push_back(c);
    }
    int qd = static_cast<int>(freec.size());
    Matrix proj(f, qd, a->dim), sect(f, a->dim, qd);
    for (int c = 0; c < a->dim; ++c) {
        Matrix e(f, a->dim, 1);
        e.set(c, 0, Q(1));
        Matrix r = s.reduce(e);
        for (int k = 0; k < qd; ++k) proj.set(k, c, r.get(freec[static_cast<size_t>(k)], 0));
    }
    for (int k = 0; k < qd; ++k) sect.set(freec[static_cast<size_t>(k)], k, Q(1));
    SCAlgebra quo;
    quo.f = f;
    quo.dim = qd;
    for (int k = 0; k < qd; ++k) {
        quo.labels.push_back(a->labels[static_cast<size_t>(freec[static_cast<size_t>(k)])]);
        quo.grading.push_back(a->grading[static_cast<size_t>(freec[static_cast<size_t>(k)])]);
    }
    for (int k = 0; k < qd; ++k) quo.lmul.push_back(proj * a->lmul_of(sect.col(k)) * sect);
    quo.unit = proj * a->unit;
    SCQuotient out;
    out.quo = make_sc(std::move(quo));
    out.proj = proj;
    out.sect = sect;
    return out;
}

SCHandle sc_from_path_algebra(const AlgebraHandle& a) {
    SCAlgebra sc;
    sc.f = a->field();
    sc.dim = a->dim();
    for (int i = 0; i < a->dim(); ++i) {
        sc.labels.push_back(a->path_string(i));
        sc.grading.push_back(0);
    }
    for (int i = 0; i < a->dim(); ++i) {
        Matrix L(sc.f, sc.dim, sc.dim);
        for (int j = 0; j < a->dim(); ++j)
            for (const auto& [k, c] : a->table(i, j)) L.set(k, j, c);
        sc.lmul.push_back(std::move(L));
    }
    sc.unit = a->unit();
    return make_sc(std::move(sc));
}

EndAlgebra end_scalgebra(const RepHandle& m) {
    EndAlgebra out;
    out.basis = hom_basis(m, m);
    SCAlgebra sc;
    sc.f = m->alg->field();
    sc.dim = static_cast<int>(out.basis.size());
    for (int i = 0; i < sc.dim; ++i) {
        sc.labels.push_back("f" + std::to_string(i));
        sc.grading.push_back(0);
    }
    for (int i = 0; i < sc.dim; ++i) {
        Matrix L(sc.f, sc.dim, sc.dim);
        for (int j = 0; j < sc.dim; ++j) {
            // product fi fj = "fi then fj"
            Matrix coords = hom_coords(out.basis, compose(out.basis[static_cast<size_t>(i)],
                                                          out.basis[static_cast<size_t>(j)]));
            for (int r = 0; r < sc.dim; ++r) L.set(r, j, coords.get(r, 0));
        }
        sc.lmul.push_back(std::move(L));
    }
    sc.unit = m->total_dim() == 0 ? Matrix(sc.f, sc.dim, 1) : hom_coords(out.basis, id_map(m));
    out.alg = make_sc(std::move(sc));
    return out;
}

std::string sc_to_json(const SCAlgebra& a) {
    nlohmann::ordered_json j;
    j["field"] = a.f.is_rational() ? nlohmann::ordered_json{{"kind", "rational"}}
                                   : nlohmann::ordered_json{{"kind", "prime"}, {"p", a.f.p()}};
    j["dim"] = a.dim;
    j["basis"] = a.labels;
    j["grading"] = a.grading;
    std::vector<std::string> unit;
    for (int i = 0; i < a.dim; ++i) unit.push_back(a.f.format(a.unit.get(i, 0)));
    j["unit"] = unit;
    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    for (int x = 0; x < a.dim; ++x)
        for (int y = 0; y < a.dim; ++y) {
            Matrix prod = a.lmul[static_cast<size_t>(x)].col(y);
            for (int z = 0; z < a.dim; ++z) {
                Q c = prod.get(z, 0);
                if (c != 0) table.push_back({x, y, z, a.f.format(c)});
            }
        }
    j["table"] = std::move(table);
    return j.dump(2) + "\n";
}

SCHandle sc_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw input_error(std::string("bad algebra JSON: ") + e.what());
    }
    try {
        SCAlgebra a;
        if (j.contains("field")) {
            std::string kind = j.at("field").at("kind").get<std::string>();
            a.f = kind == "rational" ? Field::rationals() : Field::prime(j.at("field").at("p").get<std::int64_t>());
        } else {
            a.f = Field::rationals();
        }
        a.dim = j.at("dim").get<int>();
        for (const auto& l : j.at("basis")) a.labels.push_back(l.get<std::string>());
        for (const auto& g : j.at("grading")) a.grading.push_back(g.get<int>());
        if (static_cast<int>(a.labels.size()) != a.dim || static_cast<int>(a.grading.size()) != a.dim)
            throw input_error("SCAlgebra JSON: basis/grading length mismatch");
        a.unit = Matrix(a.f, a.dim, 1);
        const auto& u = j.at("unit");
        for (int i = 0; i < a.dim; ++i) a.unit.set(i, 0, a.f.parse(u[static_cast<size_t>(i)].get<std::string>()));
        for (int i = 0; i < a.dim; ++i) a.lmul.emplace_back(a.f, a.dim, a.dim);
        for (const auto& t : j.at("table")) {
            int x = t[0].get<int>(), y = t[1].get<int>(), z = t[2].get<int>();
            if (x < 0 || x >= a.dim || y < 0 || y >= a.dim || z < 0 || z >= a.dim)
                throw input_error("SCAlgebra JSON: table index out of range");
            a.lmul[static_cast<size_t>(x)].set(z, y, a.f.parse(t[3].get<std::string>()));
        }
        a.check_consistent();
        return make_sc(std::move(a));
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("bad SCAlgebra JSON: ") + e.what());
    }
}

SCHandle sc_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return sc_from_json(ss.str());
}

void sc_write_file(const SCAlgebra& a, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write file: " + path);
    out << sc_to_json(a);
}

Matrix SCModule::act_of(const Matrix& elem) const {
    Matrix out(alg->f, dim, dim);
    for (int a = 0; a < alg->dim; ++a) {
        Q c = elem.get(a, 0);
        if (c == 0) continue;
        out = out + act[static_cast<size_t>(a)].scaled(c);
    }
    return out;
}

void SCModule::check_consistent() const {
    if (!(act_of(alg->unit) == Matrix::identity(alg->f, dim)))
        throw internal_error("SCModule: unit does not act as the identity");
    for (int i = 0; i < alg->dim; ++i)
        for (int j = 0; j < alg->dim; ++j) {
            Matrix lhs = act_of(alg->mult(alg->basis_vec(i), alg->basis_vec(j)));
            Matrix rhs = act[static_cast<size_t>(i)] * act[static_cast<size_t>(j)];
            if (!(lhs == rhs)) throw internal_error("SCModule: action not multiplicative");
        }
}

SCModule sc_regular(const SCHandle& a) {
    SCModule m;
    m.alg = a;
    m.dim = a->dim;
    m.act = a->lmul;
    return m;
}

SCModule sc_module_dual(const SCModule& m) {
    SCModule d;
    d.alg = sc_opposite(m.alg);
    d.dim = m.dim;
    for (const auto& a : m.act) d.act.push_back(a.transposed());
    return d;
}

SCSub sc_submodule(const SCModule& m, const Matrix& spans) {
    auto colbasis = [&](const Matrix& cols) {
        auto e = cols.transposed().rref();
        return e.reduced.submatrix(0, e.rank, 0, cols.rows()).transposed();
    };
    Matrix basis = colbasis(spans);
    bool grew = true;
    while (grew) {
        grew = false;
        for (int a = 0; a < m.alg->dim; ++a) {
            Matrix joint = basis.hstack(m.act[static_cast<size_t>(a)] * basis);
            Matrix nb = colbasis(joint);
            if (nb.cols() != basis.cols()) {
                basis = nb;
                grew = true;
            }
        }
    }
    SCSub out;
    out.incl = basis;
    out.mod.alg = m.alg;
    out.mod.dim = basis.cols();
    for (int a = 0; a < m.alg->dim; ++a) {
        auto x = basis.solve_right(m.act[static_cast<size_t>(a)] * basis);
        if (!x) throw internal_error("sc_submodule: closure failed");
        out.mod.act.push_back(std::move(*x));
    }
    return out;
}

SCQuotMod sc_quotient_module(const SCModule& m, const Matrix& sub_cols) {
    Field f = m.alg->f;
    SCSub closed = sc_submodule(m, sub_cols);
    Subspace s = Subspace::from_columns(closed.incl);
    std::vector<int> freec;
    {
        std::vector<bool> piv(static_cast<size_t>(m.dim), false);
        for (int p : s.pivots()) piv[static_cast<size_t>(p)] = true;
        for (int c = 0; c < m.dim; ++c)
            if (!piv[static_cast<size_t>(c)]) freec.push_back(c);
    }
    int qd = static_cast<int>(freec.size());
    Matrix proj(f, qd, m.dim), sect(f, m.dim, qd);
    for (int c = 0; c < m.dim; ++c) {
        Matrix e(f, m.dim, 1);
        e.set(c, 0, Q(1));
        Matrix r = s.reduce(e);
        for (int k = 0; k < qd; ++k) proj.set(k, c, r.get(freec[static_cast<size_t>(k)], 0));
    }
    for (int k = 0; k < qd; ++k) sect.set(freec[static_cast<size_t>(k)], k, Q(1));
    SCQuotMod out;
    out.proj = proj;
    out.mod.alg = m.alg;
    out.mod.dim = qd;
    for (int a = 0; a < m.alg->dim; ++a) out.mod.act.push_back(proj * m.act[static_cast<size_t>(a)] * sect);
    return out;
}

std::vector<Matrix> sc_hom(const SCModule& m, const SCModule& n) {
    Field f = m.alg->f;
    int vars = n.dim * m.dim;
    int eqs = m.alg->dim * n.dim * m.dim;
    Matrix sys(f, eqs, vars);
    int row = 0;
    for (int a = 0; a < m.alg->dim; ++a) {
        const Matrix& Am = m.act[static_cast<size_t>(a)];
        const Matrix& An = n.act[static_cast<size_t>(a)];
        for (int r = 0; r < n.dim; ++r)
            for (int c = 0; c < m.dim; ++c) {
                for (int k = 0; k < m.dim; ++k) {
                    Q v = Am.get(k, c);
                    if (v != 0) sys.set(row, r * m.dim + k, sys.get(row, r * m.dim + k) + v);
                }
                for (int l = 0; l < n.dim; ++l) {
                    Q v = An.get(r, l);
                    if (v != 0) sys.set(row, l * m.dim + c, sys.get(row, l * m.dim + c) - v);
                }
                ++row;
            }
    }
    Matrix ker = sys.kernel();
    std::vector<Matrix> out;
    for (int j = 0; j < ker.cols(); ++j) {
        Matrix g(f, n.dim, m.dim);
        for (int r = 0; r < n.dim; ++r)
            for (int c = 0; c < m.dim; ++c) g.set(r, c, ker.get(r * m.dim + c, j));
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace yoneda
