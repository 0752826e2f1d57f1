// Leonard pairs of q-Racah type: recognition, split sequences, parameter
// arrays, Huang data and the Askey-Wilson third element.
#pragma once

#include "hq/matrix.hpp"

#include <array>
#include <optional>
#include <vector>

namespace hq {

struct LeonardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Seq = std::vector<FieldElement>;

struct LeonardPair {
    ExactMatrix A, Astar;
    std::size_t diameter() const { return A.rows() - 1; }
};

struct StandardOrderings {
    Seq theta, theta_star;
};

struct ParameterArray {
    Seq theta, theta_star, phi, phi2;
    bool operator==(const ParameterArray&) const = default;
};

struct HuangData {
    FieldElement a, b, c;
    int d = 0;
};

Seq reversed(const Seq& s);
// Lexicographic in the real order of the entries; the serialized order when
// the field is imaginary.
bool seq_less(const Seq& a, const Seq& b);

// Distinct eigenvalues with one-dimensional eigenspaces spanning the space,
// or empty. Candidates, when given, replace characteristic-polynomial roots.
std::optional<Seq> multiplicity_free_spectrum(const ExactMatrix& m, const std::optional<Seq>& candidates = std::nullopt);

std::optional<StandardOrderings> recognize_leonard_pair(const ExactMatrix& A, const ExactMatrix& Astar,
                                                        const std::optional<Seq>& cand_A = std::nullopt,
                                                        const std::optional<Seq>& cand_Astar = std::nullopt);

Seq split_sequence(const LeonardPair& p, const Seq& theta, const Seq& theta_star);

std::array<ParameterArray, 4> parameter_arrays(const LeonardPair& p, const StandardOrderings& ord);
std::array<ParameterArray, 4> parameter_arrays(const LeonardPair& p);

std::optional<FieldElement> qracah_parameter(const Seq& theta, const FieldElement& q);

// theta_r = a q^{2r-d} + a^{-1} q^{d-2r}
Seq qracah_ladder(const FieldElement& a, int d, const FieldElement& q);
Seq huang_phi(const HuangData& h, const FieldElement& q);
Seq huang_phi2(const HuangData& h, const FieldElement& q);

std::optional<HuangData> huang_data_from_array(const ParameterArray& pa, const FieldElement& q);
bool check_huang_admissible(const HuangData& h, const FieldElement& q);
bool huang_equivalent(const HuangData& h1, const HuangData& h2);

LeonardPair build_pair_from_huang(const HuangData& h, const FieldElement& q);

// The scalars on the right of the three equitable relations.
std::array<FieldElement, 3> aw_scalars(const HuangData& h, const FieldElement& q);
// Which of the three relations hold for (A, A*, A^eps).
std::array<bool, 3> aw_relations_hold(const ExactMatrix& A, const ExactMatrix& As, const ExactMatrix& Ae,
                                      const HuangData& h, const FieldElement& q);
ExactMatrix askey_wilson_third(const LeonardPair& p, const HuangData& h, const FieldElement& q);

}  // namespace hq
