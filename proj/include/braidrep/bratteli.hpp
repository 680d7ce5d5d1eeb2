#pragma once

// Young diagrams and the Bratteli diagram of the Brauer / BMW tower, where
// level n carries the diagrams with n, n-2, ... boxes.

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "braidrep/report.hpp"

namespace braidrep {

class YoungDiagram {
public:
    YoungDiagram() = default;
    /// Rows must be positive and weakly decreasing.
    explicit YoungDiagram(std::vector<int> rows);

    const std::vector<int>& rows() const { return rows_; }
    int size() const;
    bool empty() const { return rows_.empty(); }
    YoungDiagram transpose() const;

    /// Diagrams reachable by adding / removing a single box.
    std::vector<YoungDiagram> add_box() const;
    std::vector<YoungDiagram> remove_box() const;

    auto operator<=>(const YoungDiagram&) const = default;

private:
    std::vector<int> rows_;
};

/// "(2,1)"; the empty diagram prints as "()".
std::string to_string(const YoungDiagram& y);

/// Partitions of k, largest first in lexicographic order.
std::vector<YoungDiagram> partitions(int k);

/// Number of standard Young tableaux, |y|! / prod(hook lengths).
mpz_class hook_length_dim(const YoungDiagram& y);

struct BratteliEdge {
    int level;  // of `upper`; `lower` sits at level - 1
    YoungDiagram lower;
    YoungDiagram upper;
};

class BratteliGraph {
public:
    int max_level() const { return static_cast<int>(levels_.size()) - 1; }
    /// Nodes at `level`, sorted by (size desc, rows lexicographic desc).
    const std::vector<YoungDiagram>& level(int n) const;
    const mpz_class& dim(int level, const YoungDiagram& y) const;
    bool contains(int level, const YoungDiagram& y) const;
    /// Level-(n-1) neighbours of a level-n node.
    std::vector<YoungDiagram> lower_neighbours(int level, const YoungDiagram& y) const;
    const std::vector<BratteliEdge>& edges() const { return edges_; }

    std::string to_dot() const;
    nlohmann::json to_json() const;
    std::string to_table() const;

    friend BratteliGraph build_bratteli(int max_level);

private:
    std::vector<std::vector<YoungDiagram>> levels_;  // index 0 unused
    std::map<std::pair<int, YoungDiagram>, mpz_class> dims_;
    std::vector<BratteliEdge> edges_;
};

BratteliGraph build_bratteli(int max_level);

/// The single-row node with n-2 boxes at level n has dimension C(n,2), fed
/// by (n-1) [dim 1], (n-2,1) [dim n-2] and (n-3) [dim C(n-1,2)].
CheckReport dimension_theorem_check(int n);
CheckReport dimension_theorem_check(const BratteliGraph& g, int n);

/// Level-n path counts agree with the hook length formula on every
/// partition of n.
CheckReport hecke_dimension_check(const BratteliGraph& g, int n);

/// Sum of squared level-n dimensions equals (2n-1)!!.
CheckReport level_dimension_identity(int n);
CheckReport level_dimension_identity(const BratteliGraph& g, int n);

mpz_class binomial(int n, int k);
mpz_class double_factorial_odd(int n);

}  // namespace braidrep
