#pragma once

// The Lawrence-Krammer representation of B_n on the span of v_{ij},
// 1 <= i < j <= n, over Z[q^{±1}, t^{±1}].

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "braidrep/braid.hpp"
#include "braidrep/laurent.hpp"
#include "braidrep/matrix.hpp"
#include "braidrep/report.hpp"

namespace braidrep {

/// Basis label (i, j) with i < j.
struct PairIndex {
    int i;
    int j;

    PairIndex(int a, int b);
    auto operator<=>(const PairIndex&) const = default;
};

/// All pairs in lexicographic order; position in this list is the row and
/// column index used by every representation matrix.
std::vector<PairIndex> pair_basis(int n);
std::size_t pair_position(int n, PairIndex p);
std::size_t pair_count(int n);
std::string to_string(PairIndex p);

const VarList& lk_vars();

/// Matrix of sigma_i; column c holds the image of basis vector c.
RingMatrix lk_generator(int n, int i);
RingMatrix lk_generator_inverse(int n, int i);

/// Generator matrices and their inverses for one strand count.
class LkRepresentation {
public:
    explicit LkRepresentation(int n);

    int strands() const { return n_; }
    std::size_t dim() const { return pair_count(n_); }
    /// Matrix for a signed letter.
    const RingMatrix& letter(int g) const;

    /// Left-to-right product of the letter matrices; identity for the empty word.
    RingMatrix evaluate(const BraidWord& w) const;

private:
    int n_;
    std::vector<RingMatrix> gens_;
    std::vector<RingMatrix> invs_;
};

/// The same product specialised at a rational point.
class NumericLkRepresentation {
public:
    NumericLkRepresentation(const LkRepresentation& symbolic, const RationalPoint& pt);

    const RationalMatrix& letter(int g) const;
    RationalMatrix evaluate(const BraidWord& w) const;

private:
    int n_;
    std::vector<RationalMatrix> gens_;
    std::vector<RationalMatrix> invs_;
};

RingMatrix lk_evaluate(const BraidWord& w);
RationalMatrix lk_evaluate_numeric(const BraidWord& w, const RationalPoint& pt);

/// Far commutation and the braid relation for every admissible index pair.
CheckReport check_braid_relations(int n, const std::function<RingMatrix(int)>& generator,
                                  const std::string& label);

}  // namespace braidrep
