#include "braidrep/lk.hpp"

#include <cstdlib>
#include <stdexcept>

namespace braidrep {

PairIndex::PairIndex(int a, int b) : i(a), j(b) {
    if (a < 1 || b <= a) throw std::invalid_argument("pair index requires 1 <= i < j");
}

std::size_t pair_count(int n) { return n < 2 ? 0 : static_cast<std::size_t>(n) * (n - 1) / 2; }

std::vector<PairIndex> pair_basis(int n) {
    std::vector<PairIndex> basis;
    basis.reserve(pair_count(n));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) basis.emplace_back(i, j);
    return basis;
}

std::size_t pair_position(int n, PairIndex p) {
    if (p.j > n) throw std::invalid_argument("pair index out of range");
    // Pairs (a, *) with a < i come first: (n-1) + (n-2) + ... + (n-i+1).
    const std::size_t before = static_cast<std::size_t>(p.i - 1) * (2 * n - p.i) / 2;
    return before + static_cast<std::size_t>(p.j - p.i - 1);
}

std::string to_string(PairIndex p) { return std::to_string(p.i) + "," + std::to_string(p.j); }

const VarList& lk_vars() {
    static const VarList vars{"q", "t"};
    return vars;
}

namespace {

void require_generator(int n, int i) {
    if (n < 2) throw std::invalid_argument("representation needs n >= 2");
    if (i < 1 || i > n - 1)
        throw std::invalid_argument("generator index " + std::to_string(i) + " out of range for n=" +
                                    std::to_string(n));
}

PairIndex unordered(int a, int b) { return a < b ? PairIndex(a, b) : PairIndex(b, a); }

}  // namespace

RingMatrix lk_generator(int n, int i) {
    require_generator(n, i);
    const VarList& v = lk_vars();
    const LaurentPoly one = LaurentPoly::constant(v, 1);
    const LaurentPoly q = LaurentPoly::variable(v, "q");
    const LaurentPoly t = LaurentPoly::variable(v, "t");

    RingMatrix m(pair_count(n), pair_count(n), LaurentPoly(v));
    for (const PairIndex& col : pair_basis(n)) {
        const std::size_t c = pair_position(n, col);
        auto put = [&](PairIndex row, const LaurentPoly& coeff) { m(pair_position(n, row), c) += coeff; };
        const int a = col.i, b = col.j;
        if (a == i && b == i + 1) {
            put(col, t * q * q);
        } else if (a != i && a != i + 1 && b != i && b != i + 1) {
            put(col, one);
        } else if (a == i + 1 || b == i + 1) {
            // v_{i+1,j} -> v_{ij}, whichever side j lies on.
            const int other = a == i + 1 ? b : a;
            put(unordered(i, other), one);
        } else if (a == i) {
            // i + 1 < j
            put(PairIndex(i, i + 1), t * q * (q - one));
            put(col, one - q);
            put(PairIndex(i + 1, b), q);
        } else {
            // b == i, j < i
            put(col, one - q);
            put(PairIndex(a, i + 1), q);
            put(PairIndex(i, i + 1), q * (q - one));
        }
    }
    return m;
}

RingMatrix lk_generator_inverse(int n, int i) { return inverse(lk_generator(n, i)); }

LkRepresentation::LkRepresentation(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("representation needs n >= 2");
    for (int i = 1; i < n; ++i) {
        gens_.push_back(lk_generator(n, i));
        invs_.push_back(inverse(gens_.back()));
    }
}

const RingMatrix& LkRepresentation::letter(int g) const {
    require_generator(n_, std::abs(g));
    const std::size_t k = static_cast<std::size_t>(std::abs(g) - 1);
    return g > 0 ? gens_[k] : invs_[k];
}

RingMatrix LkRepresentation::evaluate(const BraidWord& w) const {
    if (w.strands() != n_) throw std::invalid_argument("braid word strand count mismatch");
    RingMatrix acc = ring_identity(dim(), lk_vars());
    for (int g : w.letters()) acc = acc * letter(g);
    return acc;
}

NumericLkRepresentation::NumericLkRepresentation(const LkRepresentation& symbolic,
                                                 const RationalPoint& pt)
    : n_(symbolic.strands()) {
    for (const char* name : {"q", "t"}) {
        const mpq_class* x = pt.find(name);
        if (!x) throw std::invalid_argument(std::string("no value assigned to ") + name);
        if (sgn(*x) == 0) throw std::domain_error(std::string("zero assigned to ") + name);
    }
    for (int i = 1; i < n_; ++i) {
        gens_.push_back(braidrep::evaluate(symbolic.letter(i), pt));
        invs_.push_back(braidrep::evaluate(symbolic.letter(-i), pt));
    }
}

const RationalMatrix& NumericLkRepresentation::letter(int g) const {
    require_generator(n_, std::abs(g));
    const std::size_t k = static_cast<std::size_t>(std::abs(g) - 1);
    return g > 0 ? gens_[k] : invs_[k];
}

RationalMatrix NumericLkRepresentation::evaluate(const BraidWord& w) const {
    if (w.strands() != n_) throw std::invalid_argument("braid word strand count mismatch");
    RationalMatrix acc = rational_identity(pair_count(n_));
    for (int g : w.letters()) acc = acc * letter(g);
    return acc;
}

RingMatrix lk_evaluate(const BraidWord& w) { return LkRepresentation(w.strands()).evaluate(w); }

RationalMatrix lk_evaluate_numeric(const BraidWord& w, const RationalPoint& pt) {
    return NumericLkRepresentation(LkRepresentation(w.strands()), pt).evaluate(w);
}

CheckReport check_braid_relations(int n, const std::function<RingMatrix(int)>& generator,
                                  const std::string& label) {
    CheckReport report{"braid", n, {}};
    std::vector<RingMatrix> m;
    for (int i = 1; i < n; ++i) m.push_back(generator(i));
    auto describe = [](const RingMatrix& lhs, const RingMatrix& rhs) -> std::string {
        auto d = first_difference(lhs, rhs);
        if (!d) return {};
        return "entry (" + std::to_string(d->first) + "," + std::to_string(d->second) +
               "): " + to_string(lhs(d->first, d->second)) + " vs " +
               to_string(rhs(d->first, d->second));
    };
    for (int i = 1; i < n; ++i) {
        for (int j = i + 2; j < n; ++j) {
            const RingMatrix lhs = m[i - 1] * m[j - 1];
            const RingMatrix rhs = m[j - 1] * m[i - 1];
            report.add(label + " s" + std::to_string(i) + "s" + std::to_string(j) + "=s" +
                           std::to_string(j) + "s" + std::to_string(i),
                       lhs == rhs, describe(lhs, rhs));
        }
    }
    for (int i = 1; i + 1 < n; ++i) {
        const RingMatrix& a = m[i - 1];
        const RingMatrix& b = m[i];
        const RingMatrix lhs = a * b * a;
        const RingMatrix rhs = b * a * b;
        const std::string s = std::to_string(i), s1 = std::to_string(i + 1);
        report.add(label + " s" + s + "s" + s1 + "s" + s + "=s" + s1 + "s" + s + "s" + s1, lhs == rhs,
                   describe(lhs, rhs));
    }
    return report;
}

}  // namespace braidrep
