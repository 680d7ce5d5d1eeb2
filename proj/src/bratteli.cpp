#include "braidrep/bratteli.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace braidrep {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (rows_[k] < 1) throw std::invalid_argument("Young diagram rows must be positive");
        if (k > 0 && rows_[k] > rows_[k - 1])
            throw std::invalid_argument("Young diagram rows must be weakly decreasing");
    }
}

int YoungDiagram::size() const {
    int s = 0;
    for (int r : rows_) s += r;
    return s;
}

YoungDiagram YoungDiagram::transpose() const {
    std::vector<int> cols;
    if (!rows_.empty()) {
        cols.assign(static_cast<std::size_t>(rows_[0]), 0);
        for (int r : rows_)
            for (int c = 0; c < r; ++c) ++cols[static_cast<std::size_t>(c)];
    }
    return YoungDiagram(std::move(cols));
}

std::vector<YoungDiagram> YoungDiagram::add_box() const {
    std::vector<YoungDiagram> out;
    for (std::size_t k = 0; k <= rows_.size(); ++k) {
        if (k == rows_.size()) {
            auto r = rows_;
            r.push_back(1);
            out.emplace_back(std::move(r));
        } else if (k == 0 || rows_[k] < rows_[k - 1]) {
            auto r = rows_;
            ++r[k];
            out.emplace_back(std::move(r));
        }
    }
    return out;
}

std::vector<YoungDiagram> YoungDiagram::remove_box() const {
    std::vector<YoungDiagram> out;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (k + 1 < rows_.size() && rows_[k + 1] == rows_[k]) continue;
        auto r = rows_;
        if (--r[k] == 0) r.pop_back();
        out.emplace_back(std::move(r));
    }
    return out;
}

std::string to_string(const YoungDiagram& y) {
    std::string out = "(";
    for (std::size_t k = 0; k < y.rows().size(); ++k) {
        if (k > 0) out += ',';
        out += std::to_string(y.rows()[k]);
    }
    return out + ")";
}

std::vector<YoungDiagram> partitions(int k) {
    if (k < 0) throw std::invalid_argument("negative partition size");
    std::vector<YoungDiagram> out;
    std::vector<int> rows;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(rows);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            rows.push_back(part);
            rec(remaining - part, part);
            rows.pop_back();
        }
    };
    rec(k, k);
    return out;
}

mpz_class hook_length_dim(const YoungDiagram& y) {
    if (y.empty()) throw std::invalid_argument("hook length formula needs a nonempty diagram");
    const auto& rows = y.rows();
    const auto cols = y.transpose().rows();
    mpz_class hooks = 1;
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < rows[r]; ++c)
            hooks *= (rows[r] - c - 1) + (cols[static_cast<std::size_t>(c)] - static_cast<int>(r) - 1) + 1;
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(y.size()));
    return fact / hooks;
}

mpz_class binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

mpz_class double_factorial_odd(int n) {
    mpz_class p = 1;
    for (int k = 2 * n - 1; k > 1; k -= 2) p *= k;
    return p;
}

// ------------------------------------------------------------------ graph

BratteliGraph build_bratteli(int max_level) {
    if (max_level < 1) throw std::invalid_argument("Bratteli diagram needs at least one level");
    BratteliGraph g;
    g.levels_.resize(static_cast<std::size_t>(max_level) + 1);
    const YoungDiagram box({1});
    g.levels_[1] = {box};
    g.dims_[{1, box}] = 1;

    for (int n = 2; n <= max_level; ++n) {
        auto& nodes = g.levels_[static_cast<std::size_t>(n)];
        for (int boxes = n; boxes >= 0; boxes -= 2)
            for (auto& y : partitions(boxes)) nodes.push_back(std::move(y));
        for (const auto& y : nodes) {
            mpz_class d = 0;
            for (const auto& lower : g.lower_neighbours(n, y)) {
                d += g.dims_.at({n - 1, lower});
                g.edges_.push_back({n, lower, y});
            }
            g.dims_[{n, y}] = d;
        }
    }
    return g;
}

const std::vector<YoungDiagram>& BratteliGraph::level(int n) const {
    if (n < 1 || n > max_level()) throw std::out_of_range("level " + std::to_string(n) + " not built");
    return levels_[static_cast<std::size_t>(n)];
}

bool BratteliGraph::contains(int level, const YoungDiagram& y) const {
    return dims_.count({level, y}) > 0;
}

const mpz_class& BratteliGraph::dim(int level, const YoungDiagram& y) const {
    auto it = dims_.find({level, y});
    if (it == dims_.end())
        throw std::out_of_range("no node " + to_string(y) + " at level " + std::to_string(level));
    return it->second;
}

std::vector<YoungDiagram> BratteliGraph::lower_neighbours(int level, const YoungDiagram& y) const {
    // Removing a box, or adding one when the diagram is short of `level` boxes.
    std::vector<YoungDiagram> out;
    for (auto& r : y.remove_box())
        if (contains(level - 1, r)) out.push_back(std::move(r));
    if (y.size() < level)
        for (auto& a : y.add_box())
            if (contains(level - 1, a)) out.push_back(std::move(a));
    std::sort(out.begin(), out.end(), [](const YoungDiagram& a, const YoungDiagram& b) {
        return a.size() != b.size() ? a.size() > b.size() : a > b;
    });
    return out;
}

namespace {

nlohmann::json dim_json(const mpz_class& d) {
    if (d.fits_ulong_p()) return d.get_ui();
    return d.get_str();
}

std::string dot_id(int level, const YoungDiagram& y) {
    std::string id = "L" + std::to_string(level);
    if (y.empty()) return id + "_e";
    for (int r : y.rows()) id += "_" + std::to_string(r);
    return id;
}

}  // namespace

std::string BratteliGraph::to_dot() const {
    std::ostringstream os;
    os << "digraph bratteli {\n  rankdir=TB;\n";
    for (int n = 1; n <= max_level(); ++n) {
        os << "  { rank=same;";
        for (const auto& y : level(n)) os << ' ' << dot_id(n, y) << ';';
        os << " }\n";
        for (const auto& y : level(n))
            os << "  " << dot_id(n, y) << " [label=\"" << to_string(y) << "\\n" << dim(n, y).get_str()
               << "\"];\n";
    }
    for (const auto& e : edges_)
        os << "  " << dot_id(e.level - 1, e.lower) << " -> " << dot_id(e.level, e.upper) << ";\n";
    os << "}\n";
    return os.str();
}

nlohmann::json BratteliGraph::to_json() const {
    nlohmann::json nodes = nlohmann::json::array();
    for (int n = 1; n <= max_level(); ++n)
        for (const auto& y : level(n))
            nodes.push_back({{"level", n}, {"rows", y.rows()}, {"dim", dim_json(dim(n, y))}});
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : edges_)
        edges.push_back({{"from", {{"level", e.level - 1}, {"rows", e.lower.rows()}}},
                         {"to", {{"level", e.level}, {"rows", e.upper.rows()}}}});
    return {{"levels", max_level()}, {"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

std::string BratteliGraph::to_table() const {
    std::ostringstream os;
    for (int n = 1; n <= max_level(); ++n) {
        os << "level " << n << ":";
        for (const auto& y : level(n)) os << ' ' << to_string(y) << '=' << dim(n, y).get_str();
        os << '\n';
    }
    return os.str();
}

// ----------------------------------------------------------------- checks

CheckReport dimension_theorem_check(int n) {
    if (n < 3) throw std::invalid_argument("dimension theorem needs n >= 3");
    return dimension_theorem_check(build_bratteli(n), n);
}

CheckReport dimension_theorem_check(const BratteliGraph& g, int n) {
    if (n < 3) throw std::invalid_argument("dimension theorem needs n >= 3");
    CheckReport report{"bratteli", n, {}};
    const YoungDiagram row({n - 2});
    const mpz_class d = g.dim(n, row);
    const mpz_class expected = binomial(n, 2);
    report.add("dim" + to_string(row) + "@" + std::to_string(n) + "=C(n,2)", d == expected,
               "path count " + d.get_str() + ", C(" + std::to_string(n) + ",2)=" + expected.get_str());

    // (n-1) with dim 1, (n-2,1) with dim n-2, (n-3) with dim C(n-1,2).
    const YoungDiagram longer({n - 1});
    const YoungDiagram hook({n - 2, 1});
    const YoungDiagram shorter = n == 3 ? YoungDiagram() : YoungDiagram({n - 3});
    std::vector<YoungDiagram> expected_nbrs{longer, hook, shorter};
    auto nbrs = g.lower_neighbours(n, row);
    std::sort(expected_nbrs.begin(), expected_nbrs.end());
    std::sort(nbrs.begin(), nbrs.end());
    std::string found;
    for (const auto& y : nbrs) found += (found.empty() ? "" : " ") + to_string(y);
    report.add("neighbours of" + to_string(row) + "@" + std::to_string(n), nbrs == expected_nbrs, found);
    if (nbrs != expected_nbrs) return report;

    const mpz_class d_long = g.dim(n - 1, longer);
    const mpz_class d_hook = g.dim(n - 1, hook);
    const mpz_class d_short = g.dim(n - 1, shorter);
    report.add("dim" + to_string(longer) + "=1", d_long == 1, d_long.get_str());
    report.add("dim" + to_string(hook) + "=n-2", d_hook == n - 2, d_hook.get_str());
    report.add("dim" + to_string(shorter) + "=C(n-1,2)", d_short == binomial(n - 1, 2), d_short.get_str());
    report.add("C(n-1,2)+(n-2)+1=C(n,2)", d_short + d_hook + d_long == expected,
               d_short.get_str() + "+" + d_hook.get_str() + "+" + d_long.get_str());
    return report;
}

CheckReport hecke_dimension_check(const BratteliGraph& g, int n) {
    CheckReport report{"hecke", n, {}};
    for (const auto& y : partitions(n)) {
        const mpz_class paths = g.dim(n, y);
        const mpz_class hooks = hook_length_dim(y);
        report.add("paths" + to_string(y) + "=hook" + to_string(y), paths == hooks,
                   paths.get_str() + " vs " + hooks.get_str());
    }
    return report;
}

CheckReport level_dimension_identity(int n) { return level_dimension_identity(build_bratteli(n), n); }

CheckReport level_dimension_identity(const BratteliGraph& g, int n) {
    CheckReport report{"level-identity", n, {}};
    mpz_class sum = 0;
    for (const auto& y : g.level(n)) {
        const mpz_class& d = g.dim(n, y);
        sum += d * d;
    }
    const mpz_class expected = double_factorial_odd(n);
    report.add("sum dim^2@" + std::to_string(n) + "=(2n-1)!!", sum == expected,
               sum.get_str() + " vs " + expected.get_str());
    return report;
}

}  // namespace braidrep
