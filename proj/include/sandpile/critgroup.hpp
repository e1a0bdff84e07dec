#pragma once

#include "sandpile/graph.hpp"
#include "sandpile/matrix.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace sandpile {

/// Finite abelian group Z_{t_1} + ... + Z_{t_k} stored as its invariant
/// factors: each t_i >= 2 and t_i | t_{i+1}. The trivial group has no factors.
class AbelianGroup {
public:
    AbelianGroup() = default;

    /// Builds the group Z_{d_1} + ... + Z_{d_k} from any positive cyclic orders
    /// (ones allowed), normalizing them to the invariant-factor chain.
    static AbelianGroup from_cyclic_orders(std::vector<Integer> orders);

    const std::vector<Integer>& invariant_factors() const { return factors_; }
    Integer order() const;
    bool is_trivial() const { return factors_.empty(); }

    /// e.g. "Z_19^2 + Z_779 + Z_15580"; "0" for the trivial group.
    std::string to_string() const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

private:
    std::vector<Integer> factors_;
};

/// Coefficients expressing layer i of C4 x Cn through layers 0 and 1.
struct ReductionCoeffs {
    std::uint64_t index = 0;
    Integer a, b, c;

    friend bool operator==(const ReductionCoeffs&, const ReductionCoeffs&) = default;
};

/// Closed form: 4a = i + f_i + 2e_i, 4b = i - f_i, 4c = i + f_i - 2e_i.
ReductionCoeffs coeffs(std::uint64_t i);

/// coeffs(0..count-1) by the three-term recurrence
/// a' = 4a - 2b - a_prev, b' = 4b - (a + c) - b_prev, c' = 4c - 2b - c_prev.
std::vector<ReductionCoeffs> coeffs_by_recurrence(std::size_t count);

/// 4x4 block with rows (a b c b), (b a b c), (c b a b), (b c b a).
IntegerMatrix coefficient_block(const ReductionCoeffs& k);

/// The 8x8 relations matrix M - I on generators (x^1_0..x^1_3, x^0_0..x^0_3),
/// M = [[A_{n+1}, -A_n], [A_n, -A_{n-1}]].
IntegerMatrix relations_matrix(std::size_t n);

/// Critical group of C4 x Cn from the SNF of the 8x8 relations matrix.
AbelianGroup group_via_relations(std::size_t n);

/// Critical group of a connected multigraph from the SNF of its Laplacian.
/// Throws std::domain_error if the graph is disconnected.
AbelianGroup group_of_graph(const Multigraph& g);

struct ClosedFormTuple {
    std::array<Integer, 7> cyclic_orders;
    /// Whether the seven orders already formed a divisibility chain as listed.
    bool already_chain = false;
};

/// The seven cyclic orders for K(C4 x Cn), in the listed order, per parity case.
ClosedFormTuple closed_form_tuple(std::size_t n);
AbelianGroup closed_form_group(std::size_t n);

/// True iff each invariant factor of K(C4 x C_{n1}) divides the matching
/// factor of K(C4 x C_{n2}), chains aligned at the large end.
bool subgroup_check(std::size_t n1, std::size_t n2);

/// Integer coefficient vector over the generators x^0_0..x^0_3, x^1_0..x^1_3
/// (that order: index 4*layer + j).
using GeneratorVector = std::array<Integer, 8>;

/// Coefficient vectors of x^i_j for layers 0..last_layer, propagated with
/// x^{i+1}_j = 4x^i_j - x^i_{j+1} - x^i_{j-1} - x^{i-1}_j.
std::vector<std::array<GeneratorVector, 4>> layer_expansion(std::size_t last_layer);

/// Checks every propagated layer 1..n against the pattern built from coeffs(i), coeffs(i-1).
bool verify_layer_expansion(std::size_t n);

} // namespace sandpile
