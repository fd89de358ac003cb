#include "yoneda/expr.hpp"

#include "json.hpp"

#include <cctype>

namespace yoneda {

namespace {

struct Parser {
    const AlgebraHandle& alg;
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw input_error("module expression: expected '" + std::string(1, c) + "' at position " + std::to_string(pos) + " in '" + s + "'");
    }
    std::string word() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
        if (start == pos) throw input_error("module expression: expected a name at position " + std::to_string(pos) + " in '" + s + "'");
        return s.substr(start, pos - start);
    }
    int integer() {
        std::string w = word();
        try {
            return std::stoi(w);
        } catch (...) {
            throw input_error("module expression: expected an integer, got '" + w + "'");
        }
    }
    int vertex() { return alg->quiver().vertex_index(word()); }

    RepHandle literal() {
        // embedded JSON object; find the balanced extent
        skip_ws();
        size_t start = pos;
        int depth = 0;
        while (pos < s.size()) {
            if (s[pos] == '{') ++depth;
            if (s[pos] == '}') {
                --depth;
                if (depth == 0) {
                    ++pos;
                    break;
                }
            }
            ++pos;
        }
        if (depth != 0) throw input_error("module literal: unbalanced braces");
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(s.substr(start, pos - start));
        } catch (const std::exception& e) {
            throw input_error(std::string("module literal: ") + e.what());
        }
        Rep r;
        r.alg = alg;
        r.dims.assign(static_cast<size_t>(alg->num_vertices()), 0);
        for (auto it = j.at("dims").begin(); it != j.at("dims").end(); ++it)
            r.dims[static_cast<size_t>(alg->quiver().vertex_index(it.key()))] = it.value().get<int>();
        for (int a = 0; a < alg->num_arrows(); ++a) {
            const auto& ar = alg->quiver().arrows[static_cast<size_t>(a)];
            Matrix m(alg->field(), r.dims[static_cast<size_t>(ar.src)], r.dims[static_cast<size_t>(ar.tgt)]);
            if (j.contains("arrows") && j.at("arrows").contains(ar.name)) {
                const auto& rows = j.at("arrows").at(ar.name);
                if (static_cast<int>(rows.size()) != m.rows()) throw input_error("module literal: matrix rows for arrow " + ar.name);
                for (int i = 0; i < m.rows(); ++i) {
                    if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != m.cols())
                        throw input_error("module literal: matrix cols for arrow " + ar.name);
                    for (int c = 0; c < m.cols(); ++c) {
                        const auto& cell = rows[static_cast<size_t>(i)][static_cast<size_t>(c)];
                        m.set(i, c, cell.is_string() ? alg->field().parse(cell.get<std::string>())
                                                     : alg->field().parse(std::to_string(cell.get<long long>())));
                    }
                }
            }
            r.act.push_back(std::move(m));
        }
        RepHandle h = make_rep(std::move(r));
        h->check_valid();
        return h;
    }

    RepHandle atom() {
        skip_ws();
        if (pos < s.size() && s[pos] == '{') return literal();
        std::string w = word();
        if (w == "S" || w == "P" || w == "I") {
            expect('(');
            int v = vertex();
            expect(')');
            StandardKind k = w == "S" ? StandardKind::Simple
                                      : (w == "P" ? StandardKind::Projective : StandardKind::Injective);
            return standard_module(alg, k, v);
        }
        if (w == "omega") {
            expect('(');
            int n = integer();
            expect(',');
            RepHandle e = atom();
            expect(')');
            if (n < 0) throw input_error("omega: n must be >= 0");
            return syzygy(e, n);
        }
        if (w == "cosyzygy") {
            expect('(');
            int n = integer();
            expect(',');
            RepHandle e = atom();
            expect(')');
            if (n < 0) throw input_error("cosyzygy: n must be >= 0");
            return cosyzygy(e, n);
        }
        if (w == "dual") {
            expect('(');
            RepHandle e = atom();
            expect(')');
            return dual_rep(e);
        }
        if (w == "transpose") {
            expect('(');
            RepHandle e = atom();
            expect(')');
            return transpose_rep(e);
        }
        if (w == "dtr") {
            expect('(');
            RepHandle e = atom();
            expect(')');
            return dtr(e);
        }
        if (w == "quotient") {
            expect('(');
            RepHandle e = atom();
            expect(',');
            std::string kw = word();
            if (kw != "socle_component") throw input_error("quotient: expected 'socle_component v'");
            bool paren = eat('(');
            int v = vertex();
            if (paren) expect(')');
            expect(')');
            return quotient_socle_component(e, v).rep;
        }
        if (w == "sum") throw input_error("sum(...) is only allowed at the top level of an expression");
        throw input_error("module expression: unknown operation '" + w + "'");
    }
};

} // namespace

ModuleAtoms eval_module_expr(const AlgebraHandle& a, const std::string& expr) {
    ModuleAtoms out;
    out.alg = a;
    Parser p{a, expr};
    p.skip_ws();
    // top-level sum?
    size_t save = p.pos;
    bool is_sum = false;
    if (p.pos < expr.size() && std::isalpha(static_cast<unsigned char>(expr[p.pos]))) {
        std::string w = p.word();
        if (w == "sum") {
            is_sum = true;
            p.expect('(');
        } else {
            p.pos = save;
        }
    }
    if (is_sum) {
        while (true) {
            size_t start = p.pos;
            RepHandle e = p.atom();
            size_t end = p.pos;
            std::string label = expr.substr(start, end - start);
            while (!label.empty() && std::isspace(static_cast<unsigned char>(label.front()))) label.erase(label.begin());
            while (!label.empty() && std::isspace(static_cast<unsigned char>(label.back()))) label.pop_back();
            out.labels.push_back(label);
            out.reps.push_back(e);
            if (!p.eat(',')) break;
        }
        p.expect(')');
    } else {
        RepHandle e = p.atom();
        std::string label = expr;
        out.labels.push_back(label);
        out.reps.push_back(e);
    }
    p.skip_ws();
    if (p.pos != expr.size()) throw input_error("module expression: trailing input in '" + expr + "'");
    // dual/transpose may move over the opposite algebra
    for (const auto& r : out.reps)
        if (r->alg != out.reps[0]->alg) throw input_error("summands live over different algebras");
    out.alg = out.reps[0]->alg;
    return out;
}

RepHandle eval_module_single(const AlgebraHandle& a, const std::string& expr) {
    ModuleAtoms atoms = eval_module_expr(a, expr);
    if (atoms.reps.size() == 1) return atoms.reps[0];
    return direct_sum(atoms.alg, atoms.reps).rep;
}

} // namespace yoneda
