#include "yoneda/path_algebra.hpp"

#include "json.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

namespace yoneda {

namespace {

// length-then-lex order on words (arrow declaration order breaks ties)
bool word_less(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

struct WordOrder {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        return word_less(a, b);
    }
};

using Poly = std::map<std::vector<int>, Q, WordOrder>; // all terms parallel paths

void poly_add(Poly& p, const std::vector<int>& w, const Q& c, const Field& f) {
    auto it = p.find(w);
    if (it == p.end()) {
        Q n = f.normalize(c);
        if (n != 0) p.emplace(w, n);
    } else {
        it->second = f.normalize(it->second + c);
        if (it->second == 0) p.erase(it);
    }
}

} // namespace

int Quiver::vertex_index(const std::string& label) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == label) return static_cast<int>(i);
    throw input_error("unknown vertex: '" + label + "'");
}

int Quiver::arrow_index(const std::string& name) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name) return static_cast<int>(i);
    throw input_error("unknown arrow: '" + name + "'");
}

AlgebraHandle build_algebra(const Quiver& q, const std::vector<Relation>& rels, Field f,
                            int max_len) {
    auto alg = std::shared_ptr<PathAlgebra>(new PathAlgebra());
    alg->f_ = f;
    alg->q_ = q;
    alg->rels_ = rels;
    if (max_len < 0) max_len = 2 * static_cast<int>(q.arrows.size()) + 2;
    alg->max_len_ = max_len;

    {
        std::map<std::string, int> seen;
        for (size_t i = 0; i < q.vertices.size(); ++i)
            if (!seen.emplace(q.vertices[i], 1).second)
                throw input_error("duplicate vertex label: " + q.vertices[i]);
        std::map<std::string, int> aseen;
        for (const auto& a : q.arrows) {
            if (!aseen.emplace(a.name, 1).second) throw input_error("duplicate arrow name: " + a.name);
            if (a.src < 0 || a.src >= alg->num_vertices() || a.tgt < 0 || a.tgt >= alg->num_vertices())
                throw input_error("arrow endpoint out of range: " + a.name);
        }
    }

    auto word_src = [&](const std::vector<int>& w) { return q.arrows[static_cast<size_t>(w.front())].src; };
    auto word_tgt = [&](const std::vector<int>& w) { return q.arrows[static_cast<size_t>(w.back())].tgt; };
    auto composable = [&](const std::vector<int>& w) {
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (q.arrows[static_cast<size_t>(w[i])].tgt != q.arrows[static_cast<size_t>(w[i + 1])].src) return false;
        return true;
    };

    // validate relations and seed the rule worklist
    std::deque<Poly> work;
    for (const auto& rel : rels) {
        if (rel.empty()) continue;
        Poly p;
        int s = -1, t = -1;
        for (const auto& term : rel) {
            if (term.word.size() < 2) throw input_error("relation term of length < 2 (ideal not admissible)");
            if (!composable(term.word)) throw input_error("relation term is not a composable path");
            int ts = word_src(term.word), tt = word_tgt(term.word);
            if (s == -1) { s = ts; t = tt; }
            if (ts != s || tt != t) throw input_error("relation terms are not parallel paths");
            poly_add(p, term.word, term.coeff, f);
        }
        if (!p.empty()) work.push_back(std::move(p));
    }

    const int cap = 2 * max_len + 2;
    auto& rules = alg->rules_;

    auto reduce_full = [&](Poly p) -> Poly {
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto it = p.rbegin(); it != p.rend() && !changed; ++it) {
                const auto& w = it->first;
                for (size_t ri = 0; ri < rules.size() && !changed; ++ri) {
                    const auto& lm = rules[ri].lm;
                    if (lm.size() > w.size()) continue;
                    for (size_t pos = 0; pos + lm.size() <= w.size(); ++pos) {
                        if (!std::equal(lm.begin(), lm.end(), w.begin() + static_cast<long>(pos))) continue;
                        Q c = it->second;
                        std::vector<int> pre(w.begin(), w.begin() + static_cast<long>(pos));
                        std::vector<int> post(w.begin() + static_cast<long>(pos + lm.size()), w.end());
                        Poly repl;
                        poly_add(repl, w, -c, f);
                        for (const auto& [tc, tw] : rules[ri].tail) {
                            std::vector<int> nw = pre;
                            nw.insert(nw.end(), tw.begin(), tw.end());
                            nw.insert(nw.end(), post.begin(), post.end());
                            poly_add(repl, nw, c * tc, f);
                        }
                        for (const auto& [rw, rc] : repl) poly_add(p, rw, rc, f);
                        changed = true;
                        break;
                    }
                }
            }
        }
        return p;
    };

    auto add_overlaps = [&](size_t gi, size_t hi) {
        const auto& g = rules[gi];
        const auto& h = rules[hi];
        size_t maxo = std::min(g.lm.size(), h.lm.size()) - 1;
        for (size_t l = 1; l <= maxo; ++l) {
            if (!std::equal(g.lm.end() - static_cast<long>(l), g.lm.end(), h.lm.begin())) continue;
            if (g.lm.size() + h.lm.size() - l > static_cast<size_t>(cap)) continue;
            // ambiguity word: g.lm glued with h.lm over length l
            std::vector<int> right(h.lm.begin() + static_cast<long>(l), h.lm.end());
            std::vector<int> left(g.lm.begin(), g.lm.end() - static_cast<long>(l));
            Poly s;
            for (const auto& [tc, tw] : g.tail) {
                std::vector<int> w = tw;
                w.insert(w.end(), right.begin(), right.end());
                poly_add(s, w, tc, f);
            }
            for (const auto& [tc, tw] : h.tail) {
                std::vector<int> w = left;
                w.insert(w.end(), tw.begin(), tw.end());
                poly_add(s, w, -tc, f);
            }
            if (!s.empty()) work.push_back(std::move(s));
        }
    };

    while (!work.empty()) {
        Poly p = reduce_full(std::move(work.front()));
        work.pop_front();
        if (p.empty()) continue;
        // monic rule from the leading (largest) term
        auto lead = std::prev(p.end());
        PathAlgebra::Rule r;
        r.lm = lead->first;
        Q lc = lead->second;
        for (auto it = p.begin(); it != lead; ++it) r.tail.emplace_back(f.normalize(-it->second / lc), it->first);
        // retire rules whose leading word is now reducible; requeue their content
        std::vector<PathAlgebra::Rule> kept;
        for (auto& old : rules) {
            bool contains = false;
            if (r.lm.size() <= old.lm.size())
                for (size_t pos = 0; pos + r.lm.size() <= old.lm.size(); ++pos)
                    if (std::equal(r.lm.begin(), r.lm.end(), old.lm.begin() + static_cast<long>(pos))) {
                        contains = true;
                        break;
                    }
            if (!contains) {
                kept.push_back(std::move(old));
            } else {
                Poly back;
                poly_add(back, old.lm, Q(1), f);
                for (const auto& [tc, tw] : old.tail) poly_add(back, tw, -tc, f);
                work.push_back(std::move(back));
            }
        }
        rules = std::move(kept);
        rules.push_back(std::move(r));
        size_t ni = rules.size() - 1;
        for (size_t i = 0; i < rules.size(); ++i) {
            add_overlaps(i, ni);
            if (i != ni) add_overlaps(ni, i);
        }
    }

    // enumerate irreducible paths breadth-first
    auto irreducible_tip = [&](const std::vector<int>& w) {
        for (const auto& r : rules) {
            if (r.lm.size() > w.size()) continue;
            if (std::equal(r.lm.begin(), r.lm.end(), w.end() - static_cast<long>(r.lm.size()))) return false;
        }
        return true;
    };
    std::vector<BasisPath> frontier;
    for (int v = 0; v < alg->num_vertices(); ++v) frontier.push_back(BasisPath{v, v, {}});
    std::vector<BasisPath> basis = frontier;
    for (int len = 1; len <= max_len; ++len) {
        std::vector<BasisPath> next;
        for (const auto& p : frontier)
            for (int a = 0; a < alg->num_arrows(); ++a) {
                if (q.arrows[static_cast<size_t>(a)].src != p.tgt) continue;
                BasisPath np{p.src, q.arrows[static_cast<size_t>(a)].tgt, p.word};
                np.word.push_back(a);
                if (irreducible_tip(np.word)) next.push_back(std::move(np));
            }
        if (next.empty()) break;
        if (len == max_len)
            throw refusal("NotProvenFiniteDimensional",
                          "an irreducible path of length " + std::to_string(max_len) +
                              " survives; raise max_path_length or check the relations");
        for (auto& p : next) basis.push_back(p);
        frontier = std::move(next);
    }
    std::sort(basis.begin(), basis.end(), [](const BasisPath& a, const BasisPath& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        if (a.length() == 0) return a.src < b.src;
        return a.word < b.word;
    });
    alg->basis_ = std::move(basis);
    alg->trivial_.assign(static_cast<size_t>(alg->num_vertices()), -1);
    alg->arrow_path_.assign(static_cast<size_t>(alg->num_arrows()), -1);
    for (size_t i = 0; i < alg->basis_.size(); ++i) {
        const auto& p = alg->basis_[i];
        if (p.length() == 0)
            alg->trivial_[static_cast<size_t>(p.src)] = static_cast<int>(i);
        else
            alg->word_index_[p.word] = static_cast<int>(i);
        if (p.length() == 1) alg->arrow_path_[static_cast<size_t>(p.word[0])] = static_cast<int>(i);
    }
    for (int a = 0; a < alg->num_arrows(); ++a)
        if (alg->arrow_path_[static_cast<size_t>(a)] < 0)
            throw internal_error("arrow reduced away; ideal not admissible");

    alg->build_table();
    return alg;
}

SparseElem PathAlgebra::reduce_word(const std::vector<int>& word) const {
    Poly p;
    poly_add(p, word, Q(1), f_);
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = p.rbegin(); it != p.rend() && !changed; ++it) {
            const auto& w = it->first;
            for (const auto& r : rules_) {
                const auto& lm = r.lm;
                if (lm.size() > w.size()) continue;
                bool done = false;
                for (size_t pos = 0; pos + lm.size() <= w.size(); ++pos) {
                    if (!std::equal(lm.begin(), lm.end(), w.begin() + static_cast<long>(pos))) continue;
                    Q c = it->second;
                    std::vector<int> pre(w.begin(), w.begin() + static_cast<long>(pos));
                    std::vector<int> post(w.begin() + static_cast<long>(pos + lm.size()), w.end());
                    Poly repl;
                    poly_add(repl, w, -c, f_);
                    for (const auto& [tc, tw] : r.tail) {
                        std::vector<int> nw = pre;
                        nw.insert(nw.end(), tw.begin(), tw.end());
                        nw.insert(nw.end(), post.begin(), post.end());
                        poly_add(repl, nw, c * tc, f_);
                    }
                    for (const auto& [rw, rc] : repl) poly_add(p, rw, rc, f_);
                    changed = true;
                    done = true;
                    break;
                }
                if (done) break;
            }
        }
    }
    SparseElem out;
    for (const auto& [w, c] : p) {
        auto it = word_index_.find(w);
        if (it == word_index_.end()) throw internal_error("normal form left the basis");
        out.emplace_back(it->second, c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

SparseElem PathAlgebra::normal_form(const std::vector<int>& word) const {
    if (word.empty()) throw internal_error("normal_form of empty word needs a vertex");
    for (size_t i = 0; i + 1 < word.size(); ++i)
        if (q_.arrows[static_cast<size_t>(word[i])].tgt != q_.arrows[static_cast<size_t>(word[i + 1])].src)
            return {};
    return reduce_word(word);
}

void PathAlgebra::build_table() {
    size_t n = basis_.size();
    table_.assign(n * n, {});
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const auto& p = basis_[i];
            const auto& qq = basis_[j];
            if (p.tgt != qq.src) continue;
            if (p.length() == 0 && qq.length() == 0) {
                table_[i * n + j] = {{static_cast<int>(i), Q(1)}};
                continue;
            }
            std::vector<int> w = p.word;
            w.insert(w.end(), qq.word.begin(), qq.word.end());
            table_[i * n + j] = reduce_word(w);
        }
}

Matrix PathAlgebra::multiply(const Matrix& x, const Matrix& y) const {
    if (x.rows() != dim() || y.rows() != dim() || x.cols() != 1 || y.cols() != 1)
        throw input_error("algebra element has wrong dimension (algebra mismatch?)");
    Matrix out(f_, dim(), 1);
    for (int i = 0; i < dim(); ++i) {
        Q xi = x.get(i, 0);
        if (xi == 0) continue;
        for (int j = 0; j < dim(); ++j) {
            Q yj = y.get(j, 0);
            if (yj == 0) continue;
            for (const auto& [k, c] : table(i, j)) out.set(k, 0, out.get(k, 0) + xi * yj * c);
        }
    }
    return out;
}

Matrix PathAlgebra::unit() const {
    Matrix u(f_, dim(), 1);
    for (int v = 0; v < num_vertices(); ++v) u.set(trivial_[static_cast<size_t>(v)], 0, Q(1));
    return u;
}

Matrix PathAlgebra::elem(int basis_idx) const {
    Matrix e(f_, dim(), 1);
    e.set(basis_idx, 0, Q(1));
    return e;
}

std::string PathAlgebra::path_string(int idx) const {
    const auto& p = basis_[static_cast<size_t>(idx)];
    if (p.length() == 0) return "e_" + q_.vertices[static_cast<size_t>(p.src)];
    std::string s;
    for (size_t i = 0; i < p.word.size(); ++i) {
        if (i) s += "*";
        s += q_.arrows[static_cast<size_t>(p.word[i])].name;
    }
    return s;
}

AlgebraHandle opposite(const AlgebraHandle& a) {
    std::lock_guard<std::mutex> lock(a->opp_mutex_);
    if (a->opp_) return a->opp_;
    Quiver oq;
    oq.vertices = a->q_.vertices;
    for (const auto& ar : a->q_.arrows) oq.arrows.push_back(Arrow{ar.name, ar.tgt, ar.src});
    std::vector<Relation> orels;
    for (const auto& rel : a->rels_) {
        Relation r;
        for (const auto& t : rel) {
            RelTerm nt{t.coeff, t.word};
            std::reverse(nt.word.begin(), nt.word.end());
            r.push_back(std::move(nt));
        }
        orels.push_back(std::move(r));
    }
    AlgebraHandle op = build_algebra(oq, orels, a->f_, a->max_len_);
    {
        std::lock_guard<std::mutex> lock2(op->opp_mutex_);
        op->opp_ = a;
    }
    a->opp_ = op;
    return op;
}

const Matrix& PathAlgebra::reversal_matrix() const {
    std::lock_guard<std::mutex> lock(opp_mutex_);
    if (!opp_) throw internal_error("reversal_matrix: opposite not built yet");
    if (rev_.rows() == dim()) return rev_;
    Matrix rev(f_, dim(), dim());
    for (int i = 0; i < dim(); ++i) {
        const auto& p = basis_[static_cast<size_t>(i)];
        if (p.length() == 0) {
            rev.set(opp_->trivial_path_index(p.src), i, Q(1));
            continue;
        }
        std::vector<int> w = p.word;
        std::reverse(w.begin(), w.end());
        for (const auto& [k, c] : opp_->reduce_word(w)) rev.set(k, i, c);
    }
    rev_ = std::move(rev);
    return rev_;
}

namespace {

AlgebraHandle algebra_from_parsed(const nlohmann::json& j) {
    Field f;
    {
        const auto& jf = j.at("field");
        std::string kind = jf.at("kind").get<std::string>();
        if (kind == "prime")
            f = Field::prime(jf.at("p").get<std::int64_t>());
        else if (kind == "rational")
            f = Field::rationals();
        else
            throw input_error("unknown field kind: " + kind);
    }
    Quiver q;
    for (const auto& v : j.at("quiver").at("vertices")) q.vertices.push_back(v.get<std::string>());
    for (const auto& a : j.at("quiver").at("arrows")) {
        Arrow ar;
        ar.name = a.at("name").get<std::string>();
        ar.src = q.vertex_index(a.at("from").get<std::string>());
        ar.tgt = q.vertex_index(a.at("to").get<std::string>());
        q.arrows.push_back(ar);
    }
    std::vector<Relation> rels;
    if (j.contains("relations"))
        for (const auto& jr : j.at("relations")) {
            Relation rel;
            for (const auto& jt : jr) {
                RelTerm t;
                t.coeff = f.parse(jt.at("coeff").get<std::string>());
                for (const auto& an : jt.at("path")) t.word.push_back(q.arrow_index(an.get<std::string>()));
                rel.push_back(std::move(t));
            }
            rels.push_back(std::move(rel));
        }
    int max_len = j.value("max_path_length", -1);
    return build_algebra(q, rels, f, max_len);
}

} // namespace

AlgebraHandle algebra_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const std::exception& e) {
        throw input_error(std::string("bad algebra JSON: ") + e.what());
    }
    try {
        return algebra_from_parsed(j);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("bad algebra JSON: ") + e.what());
    }
}

AlgebraHandle algebra_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open algebra file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return algebra_from_json(ss.str());
}

} // namespace yoneda
