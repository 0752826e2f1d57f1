// Finite-dimensional modules of the universal DAHA of type (C1v, C1):
// construction, verification, extraction of the Leonard pairs on the
// t0-eigenspaces, and the linked relation between Leonard pairs.
#pragma once

#include "hq/leonard.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hq {

struct DahaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class XType { DS, DDa, DDb, SSa, SSb };

std::string to_string(XType t);
std::optional<XType> parse_xtype(const std::string& s);
inline bool is_D(XType t) { return t == XType::DS || t == XType::DDa || t == XType::DDb; }

using KParams = std::array<FieldElement, 4>;

struct HqParams {
    FieldElement q;
    int n = 0;
    KParams k;
};

struct Check {
    std::string name;
    bool pass = true;
    std::optional<ExactMatrix> residual;
};

struct Report {
    std::vector<Check> checks;
    void add(const std::string& name, bool pass) { checks.push_back({name, pass, std::nullopt}); }
    // records lhs - rhs on failure
    void add_eq(const std::string& name, const ExactMatrix& lhs, const ExactMatrix& rhs);
    void merge(const Report& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
    bool ok() const;
    std::size_t failures() const;
    std::vector<std::string> failed_names() const;
};

struct Validation {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
    std::string first() const { return violations.empty() ? std::string() : violations.front(); }
};

Validation validate_params(XType t, int n, const KParams& k, const FieldElement& q);

// mu_r from the type's formula; valid for any r >= 0.
FieldElement ladder_value(XType t, int r, const KParams& k, const FieldElement& q);
Seq eigenvalue_ladder(XType t, int n, const KParams& k, const FieldElement& q);

struct HqModule {
    HqParams params;
    std::optional<XType> xtype;
    std::array<ExactMatrix, 4> t;
    std::array<ExactMatrix, 4> tinv;
    Seq mu;

    std::size_t dim() const { return t[0].rows(); }
    FieldContext context() const;
};

HqModule build_module(XType t, int n, const KParams& k, const FieldElement& q);
// Module from explicit generator matrices; inverses by T_i - t_i. The ladder
// is filled in when the type and parameters are valid.
HqModule module_from_matrices(const HqParams& p, std::optional<XType> t, const std::array<ExactMatrix, 4>& gens);

Report verify_hq_relations(const HqModule& m);

struct Derived {
    ExactMatrix X, Xinv, Y, Yinv, A, B, C;
    std::array<ExactMatrix, 4> G;
    std::optional<ExactMatrix> Fplus, Fminus;
};

// G(L, s, t) for L = lambda + lambda^{-1}
FieldElement G_scalar(const FieldElement& lambda, const FieldElement& s, const FieldElement& t);
ExactMatrix G_matrix(const ExactMatrix& L, const FieldElement& s, const FieldElement& t);

Derived derived_elements(const HqModule& m, Report* identities = nullptr);

enum class Bond { Single, Double };

struct XDiagram {
    struct Edge {
        std::size_t i, j;
        Bond bond;
    };
    std::vector<Edge> edges;
    std::vector<std::pair<std::size_t, Bond>> loops;
    std::vector<std::size_t> path;  // vertex order along the reduced diagram
    std::string pattern;            // "DS", "DD" or "SS"
};

XDiagram x_diagram(const Seq& mu, const FieldElement& q);

struct Feasibility {
    bool feasible = false;
    bool x_diagonalizable = false;
    bool y_table = false;   // inequality table
    bool y_direct = false;  // eigenspace dimensions
    bool t0_two_eigenvalues = false;
    std::string failed_clause;
};

Feasibility is_feasible(const HqModule& m);

// Y spectrum predicted from the type; duplicates possible when Y is not
// diagonalizable.
Seq predicted_y_spectrum(const HqModule& m);
Seq beta_sequence(const HqModule& m);
Seq e_sequence(const HqModule& m);

struct UBasis {
    ExactMatrix U;       // columns u_0..u_n
    ExactMatrix Uprime;  // columns u'_0..u'_n
    Seq beta, e;
    Report checks;
};

UBasis u_basis(const HqModule& m);

struct T0Split {
    Subspace plus, minus;  // V(k0), V(k0^{-1}) in the u-derived bases
    int d = 0, dprime = 0;
};

// expected (d, d') for the type
std::pair<int, int> eigenspace_diameters(XType t, int n);
T0Split t0_split(const HqModule& m);

struct RestrictedPair {
    LeonardPair pair;
    StandardOrderings orderings;
    HuangData generic;  // via split sequences
    HuangData closed;   // closed form from the parameters
};

struct Extraction {
    RestrictedPair plus, minus;
    Report checks;
};

Seq predicted_A_diagonal(const HqModule& m, bool plus);
Seq predicted_B_diagonal(const HqModule& m, bool plus);
HuangData closed_form_huang(const HqModule& m, bool plus);

Extraction restricted_leonard_pairs(const HqModule& m);

enum class Twist { Rho, Sigma };
HqModule twist(const HqModule& m, Twist which, Report* checks = nullptr);

struct LinkCase {
    int case_id = 0;                     // 1..7 for (i)..(vii)
    std::array<int, 3> variant{1, 1, 1};   // inversion pattern on (a,b,c) of the first input
    std::array<int, 3> variant2{1, 1, 1};  // same for the second input
    HuangData h, h2;                     // the Huang data after inversion
};

std::string case_name(int id);

std::vector<LinkCase> link_check(const HuangData& h, const HuangData& h2, const FieldElement& q);

enum class RootSign { Default, Plus, Minus };

struct LinkResult {
    LinkCase used;
    XType xtype;
    HqModule module;
    Extraction extraction;
    bool exchanged = false;
};

LinkResult link_construct(const HuangData& h, const HuangData& h2, const FieldElement& q,
                          RootSign sign = RootSign::Default);

}  // namespace hq
