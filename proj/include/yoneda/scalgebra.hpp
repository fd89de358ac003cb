#pragma once

#include "yoneda/rep.hpp"

#include <memory>
#include <string>
#include <vector>

namespace yoneda {

/// Finite-dimensional algebra by labeled basis and structure constants.
/// lmul[a] is the left-multiplication matrix of the a-th basis element, so
/// the product of coordinate vectors is x * y = sum_a x_a (lmul[a] y).
struct SCAlgebra {
    Field f;
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<int> grading;
    std::vector<Matrix> lmul;
    Matrix unit;

    Matrix mult(const Matrix& x, const Matrix& y) const;
    Matrix lmul_of(const Matrix& x) const; // matrix of y -> x*y
    Matrix rmul_of(const Matrix& y) const; // matrix of x -> x*y
    Matrix basis_vec(int i) const;

    /// Throws internal_error if the unit or associativity fails on a triple.
    void check_consistent() const;
};

using SCHandle = std::shared_ptr<const SCAlgebra>;

SCHandle make_sc(SCAlgebra a);
SCHandle sc_opposite(const SCHandle& a);

struct SCQuotient {
    SCHandle quo;
    Matrix proj; // qdim x dim
    Matrix sect; // dim x qdim (canonical coset representatives)
};
/// Quotient by the span of the given columns (verified to be an ideal).
SCQuotient sc_quotient(const SCHandle& a, const Matrix& ideal_cols);

/// The path algebra as a structure-constant algebra (oracle bridge).
SCHandle sc_from_path_algebra(const AlgebraHandle& a);

/// End_A(m) with its composition table; basis[i] matches algebra index i.
struct EndAlgebra {
    SCHandle alg;
    std::vector<RepMap> basis;
};
EndAlgebra end_scalgebra(const RepHandle& m);

std::string sc_to_json(const SCAlgebra& a);
SCHandle sc_from_json(const std::string& text);
SCHandle sc_from_file(const std::string& path);
void sc_write_file(const SCAlgebra& a, const std::string& path);

/// Left module over a structure-constant algebra; act[a] is the action of
/// the a-th basis element, so act(x*y) = act(x) act(y).
struct SCModule {
    SCHandle alg;
    int dim = 0;
    std::vector<Matrix> act;

    Matrix act_of(const Matrix& elem) const;
    void check_consistent() const;
};

SCModule sc_regular(const SCHandle& a);
SCModule sc_module_dual(const SCModule& m); // over the opposite algebra
/// Submodule spanned by the given columns (closure taken); basis returned.
struct SCSub {
    SCModule mod;
    Matrix incl; // ambient_dim x sub_dim
};
SCSub sc_submodule(const SCModule& m, const Matrix& spans);
struct SCQuotMod {
    SCModule mod;
    Matrix proj;
};
SCQuotMod sc_quotient_module(const SCModule& m, const Matrix& sub_cols);

/// Module maps f: dim_n x dim_m with f act_m(a) = act_n(a) f for all a.
std::vector<Matrix> sc_hom(const SCModule& m, const SCModule& n);

} // namespace yoneda
