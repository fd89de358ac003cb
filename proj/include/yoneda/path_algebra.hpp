#pragma once

#include "yoneda/matrix.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace yoneda {

struct Arrow {
    std::string name;
    int src = 0, tgt = 0;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int vertex_index(const std::string& label) const;
    int arrow_index(const std::string& name) const;
};

/// One relation: a linear combination of parallel paths, each a left-to-right
/// composable arrow-name sequence of length >= 2.
struct RelTerm {
    Q coeff;
    std::vector<int> word; // arrow indices
};
using Relation = std::vector<RelTerm>;

/// A path in normal form. Trivial paths have an empty word and carry src.
struct BasisPath {
    int src = 0, tgt = 0;
    std::vector<int> word;
    int length() const { return static_cast<int>(word.size()); }
};

/// Sparse algebra element in the path basis.
using SparseElem = std::vector<std::pair<int, Q>>;

class PathAlgebra;
using AlgebraHandle = std::shared_ptr<const PathAlgebra>;

/// Finite-dimensional quotient A = kQ/I with a normal-form path basis.
///
/// Conventions fixed system-wide: paths compose left to right (pq = "p then
/// q"), and a left module has fibers M_v = e_v M, so the arrow a: u -> v acts
/// by a matrix from the fiber at v to the fiber at u. With these choices
/// P(v) = Ae_v is spanned by the paths ending at v and Hom(P(v), M) = M_v.
class PathAlgebra {
public:
    const Field& field() const { return f_; }
    const Quiver& quiver() const { return q_; }
    int num_vertices() const { return static_cast<int>(q_.vertices.size()); }
    int num_arrows() const { return static_cast<int>(q_.arrows.size()); }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<BasisPath>& basis() const { return basis_; }
    const std::vector<Relation>& relations() const { return rels_; }
    int max_len() const { return max_len_; }

    int trivial_path_index(int vertex) const { return trivial_[static_cast<size_t>(vertex)]; }
    int arrow_path_index(int arrow) const { return arrow_path_[static_cast<size_t>(arrow)]; }
    std::string path_string(int idx) const;

    /// Normal form of an arbitrary composable word.
    SparseElem normal_form(const std::vector<int>& word) const;
    /// Product of two basis elements, expanded in the basis.
    const SparseElem& table(int i, int j) const { return table_[static_cast<size_t>(i) * basis_.size() + j]; }

    /// Bilinear product of dense coordinate vectors (dim x 1 matrices).
    Matrix multiply(const Matrix& x, const Matrix& y) const;
    Matrix unit() const;
    Matrix elem(int basis_idx) const;

    friend AlgebraHandle build_algebra(const Quiver& q, const std::vector<Relation>& rels,
                                       Field f, int max_len);
    friend AlgebraHandle opposite(const AlgebraHandle& a);

    /// Coordinate change A -> A^op reversing paths (an anti-isomorphism).
    const Matrix& reversal_matrix() const;

private:
    PathAlgebra() = default;
    void build_table();

    Field f_;
    Quiver q_;
    std::vector<Relation> rels_;
    int max_len_ = 0;
    std::vector<BasisPath> basis_;
    std::vector<int> trivial_;    // vertex -> basis index of e_v
    std::vector<int> arrow_path_; // arrow -> basis index (arrows survive: admissible ideal)
    std::map<std::vector<int>, int> word_index_;
    std::vector<SparseElem> table_;
    // completed rewriting rules (monic leading word -> lower terms)
    struct Rule {
        std::vector<int> lm;
        std::vector<std::pair<Q, std::vector<int>>> tail;
    };
    std::vector<Rule> rules_;

    mutable std::mutex opp_mutex_;
    mutable AlgebraHandle opp_;
    mutable Matrix rev_; // basis path i -> coordinates of reversed path in opposite algebra

    SparseElem reduce_word(const std::vector<int>& word) const;
};

/// Completion-based constructor; throws refusal("NotProvenFiniteDimensional")
/// if an irreducible path of length max_len survives.
AlgebraHandle build_algebra(const Quiver& q, const std::vector<Relation>& rels, Field f,
                            int max_len = -1);

/// Opposite algebra (cached; opposite(opposite(a)) == a as a handle).
AlgebraHandle opposite(const AlgebraHandle& a);

/// Parse the algebra input JSON document (see README for the schema).
AlgebraHandle algebra_from_json(const std::string& json_text);
AlgebraHandle algebra_from_file(const std::string& path);

} // namespace yoneda
