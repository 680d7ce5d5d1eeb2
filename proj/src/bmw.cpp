#include "braidrep/bmw.hpp"

#include <cstdlib>
#include <stdexcept>

#include "braidrep/lk.hpp"

namespace braidrep {

BmwParams::BmwParams(LaurentPoly kappa_, LaurentPoly m_, LaurentPoly l_inv_)
    : kappa(std::move(kappa_)), m(std::move(m_)), l_inv(std::move(l_inv_)) {
    if (!(kappa.vars() == m.vars()) || !(kappa.vars() == l_inv.vars()))
        throw std::invalid_argument("BMW parameters live in different rings");
    if (!kappa.is_unit()) throw std::invalid_argument("kappa must be a unit");
    if (!l_inv.is_unit()) throw std::invalid_argument("l^{-1} must be a unit");
}

const VarList& kappa_t_vars() {
    static const VarList vars{"kappa", "t"};
    return vars;
}

LaurentPoly q_in_kappa() { return -LaurentPoly::variable(kappa_t_vars(), "kappa", -2); }

BmwParams BmwParams::identified() {
    const VarList& v = kappa_t_vars();
    LaurentPoly kappa = LaurentPoly::variable(v, "kappa");
    LaurentPoly m = kappa + LaurentPoly::variable(v, "kappa", -1);
    LaurentPoly l_inv = LaurentPoly::variable(v, "t") * LaurentPoly::variable(v, "kappa", -3);
    return BmwParams(std::move(kappa), std::move(m), std::move(l_inv));
}

BmwParams BmwParams::generic() {
    static const VarList v{"kappa", "m", "l"};
    return BmwParams(LaurentPoly::variable(v, "kappa"), LaurentPoly::variable(v, "m"),
                     LaurentPoly::variable(v, "l", -1));
}

RingMatrix bmw_generator(int n, int i, const BmwParams& p) {
    if (n < 2) throw std::invalid_argument("representation needs n >= 2");
    if (i < 1 || i > n - 1)
        throw std::invalid_argument("generator index " + std::to_string(i) + " out of range for n=" +
                                    std::to_string(n));
    const VarList& v = p.vars();
    const LaurentPoly one = LaurentPoly::constant(v, 1);
    const LaurentPoly kinv = p.kappa.unit_inverse();

    RingMatrix g(pair_count(n), pair_count(n), LaurentPoly(v));
    for (const PairIndex& col : pair_basis(n)) {
        const std::size_t c = pair_position(n, col);
        auto put = [&](PairIndex row, const LaurentPoly& coeff) { g(pair_position(n, row), c) += coeff; };
        const int a = col.i, b = col.j;
        if (a == i && b == i + 1) {
            // A
            put(col, kinv * p.l_inv);
        } else if (a != i && a != i + 1 && b != i && b != i + 1) {
            // B
            put(col, one);
        } else if (a == i + 1) {
            // C, i+1 < j
            put(PairIndex(i, b), kinv);
        } else if (b == i + 1) {
            // C, j < i
            put(PairIndex(a, i), kinv);
        } else if (a == i) {
            // D, i+1 < j
            put(col, p.m * kinv);
            put(PairIndex(i + 1, b), -kinv);
            put(PairIndex(i, i + 1), p.m * p.l_inv * p.kappa.pow(i - b + 1));
        } else {
            // D, j < i
            put(col, p.m * kinv);
            put(PairIndex(a, i + 1), -kinv);
            put(PairIndex(i, i + 1), p.m * p.kappa.pow(i - a - 2));
        }
    }
    return g;
}

namespace {

std::string entry_mismatch(int n, const RingMatrix& lhs, const RingMatrix& rhs,
                           const char* lhs_name, const char* rhs_name) {
    auto d = first_difference(lhs, rhs);
    if (!d) return {};
    const auto basis = pair_basis(n);
    return "row T_{" + to_string(basis[d->first]) + "} col T_{" + to_string(basis[d->second]) +
           "}: " + lhs_name + " " + to_string(lhs(d->first, d->second)) + " vs " + rhs_name + " " +
           to_string(rhs(d->first, d->second));
}

}  // namespace

CheckReport theorem3_check(int n, int k_shift) {
    if (n < 2) throw std::invalid_argument("theorem check needs n >= 2");
    const VarList& v = kappa_t_vars();
    const BmwParams params = BmwParams::identified();
    const LaurentPoly q = q_in_kappa();

    // T-coordinates = D * v-coordinates with D = diag(kappa^{i+j+k}).
    const auto basis = pair_basis(n);
    RingMatrix d(basis.size(), basis.size(), LaurentPoly(v));
    RingMatrix d_inv = d;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const int e = basis[k].i + basis[k].j + k_shift;
        d(k, k) = LaurentPoly::variable(v, "kappa", e);
        d_inv(k, k) = LaurentPoly::variable(v, "kappa", -e);
    }

    CheckReport report{"theorem3", n, {}};
    for (int i = 1; i < n; ++i) {
        const RingMatrix lk = d * substitute(lk_generator(n, i), "q", q) * d_inv;
        const RingMatrix bmw = bmw_generator(n, i, params);
        report.add("sigma" + std::to_string(i) + " k_shift=" + std::to_string(k_shift), lk == bmw,
                   entry_mismatch(n, lk, bmw, "lk", "bmw"));
    }
    return report;
}

CheckReport bmw_relation_suite(int n) {
    if (n < 3) throw std::invalid_argument("relation suite needs n >= 3");
    const BmwParams params = BmwParams::identified();
    const VarList& v = params.vars();
    const LaurentPoly& m = params.m;
    const LaurentPoly& l_inv = params.l_inv;
    const LaurentPoly l = l_inv.unit_inverse();
    const std::size_t dim = pair_count(n);
    const RingMatrix id = ring_identity(dim, v);

    // 1-based: g[i], g_inv[i], f[i] = m * E_i.
    std::vector<RingMatrix> g{id}, g_inv{id}, f{id};
    for (int i = 1; i < n; ++i) {
        g.push_back(bmw_generator(n, i, params).scaled(params.kappa));
        g_inv.push_back(inverse(g.back()));
        f.push_back(g.back() + g_inv.back() - id.scaled(m));
    }

    CheckReport report{"bmw", n, {}};
    auto check = [&](const std::string& name, const RingMatrix& lhs, const RingMatrix& rhs) {
        report.add(name, lhs == rhs, entry_mismatch(n, lhs, rhs, "lhs", "rhs"));
    };
    const LaurentPoly m2 = m * m;
    auto s = [](int i) { return std::to_string(i); };

    for (int i = 1; i < n; ++i) {
        check("G" + s(i) + "*G" + s(i) + "^-1=1", g[i] * g_inv[i], id);
        report.add("E" + s(i) + "!=0", !f[i].is_zero_matrix());
        check("G" + s(i) + "E" + s(i) + "=l^-1E" + s(i), g[i] * f[i], f[i].scaled(l_inv));
        check("E" + s(i) + "G" + s(i) + "=l^-1E" + s(i), f[i] * g[i], f[i].scaled(l_inv));
        check("E" + s(i) + "^2=(m^-1(l+l^-1)-1)E" + s(i), f[i] * f[i], f[i].scaled(l + l_inv - m));
        check("G" + s(i) + "^2=m(G" + s(i) + "+l^-1E" + s(i) + ")-1", g[i] * g[i],
              g[i].scaled(m) + f[i].scaled(l_inv) - id);
    }

    for (int i = 1; i < n; ++i) {
        for (int j : {i - 1, i + 1}) {
            if (j < 1 || j >= n) continue;
            const std::string si = s(i), sj = s(j);
            check("E" + si + "E" + sj + "E" + si + "=E" + si, f[i] * f[j] * f[i], f[i].scaled(m2));
            check("G" + sj + "G" + si + "E" + sj + "=E" + si + "E" + sj,
                  (g[j] * g[i] * f[j]).scaled(m), f[i] * f[j]);
            check("E" + si + "G" + sj + "G" + si + "=E" + si + "E" + sj,
                  (f[i] * g[j] * g[i]).scaled(m), f[i] * f[j]);
            check("G" + sj + "E" + si + "G" + sj + "=G" + si + "^-1E" + sj + "G" + si + "^-1",
                  g[j] * f[i] * g[j], g_inv[i] * f[j] * g_inv[i]);
            check("G" + sj + "E" + si + "E" + sj + "=G" + si + "^-1E" + sj, g[j] * f[i] * f[j],
                  (g_inv[i] * f[j]).scaled(m));
            check("E" + sj + "E" + si + "G" + sj + "=E" + sj + "G" + si + "^-1", f[j] * f[i] * g[j],
                  (f[j] * g_inv[i]).scaled(m));
            check("E" + si + "G" + sj + "E" + si + "=lE" + si, f[i] * g[j] * f[i],
                  f[i].scaled(l * m));
        }
    }

    for (int i = 1; i + 1 < n; ++i) {
        check("E" + s(i) + "G" + s(i + 1) + "=E" + s(i) + "E" + s(i + 1) + "G" + s(i) + "^-1",
              (f[i] * g[i + 1]).scaled(m), f[i] * f[i + 1] * g_inv[i]);
    }
    for (int i = 3; i < n; ++i) {
        check("E" + s(i - 2) + "G" + s(i) + "E" + s(i - 1) + "E" + s(i) + "=E" + s(i - 2) + "E" +
                  s(i - 1) + "G" + s(i - 2) + "E" + s(i),
              f[i - 2] * g[i] * f[i - 1] * f[i], f[i - 2] * f[i - 1] * g[i - 2] * f[i]);
    }

    for (int i = 1; i < n; ++i) {
        for (int j = 1; j < n; ++j) {
            if (std::abs(i - j) < 2) continue;
            check("far E" + s(i) + "G" + s(j) + "=G" + s(j) + "E" + s(i), f[i] * g[j], g[j] * f[i]);
            if (i < j) check("far E" + s(i) + "E" + s(j) + "=E" + s(j) + "E" + s(i), f[i] * f[j], f[j] * f[i]);
        }
    }
    return report;
}

CheckReport eigen_structure_check(int n) {
    if (n < 2) throw std::invalid_argument("cubic check needs n >= 2");
    const VarList& v = lk_vars();
    const LaurentPoly q = LaurentPoly::variable(v, "q");
    const LaurentPoly t = LaurentPoly::variable(v, "t");
    const RingMatrix id = ring_identity(pair_count(n), v);

    CheckReport report{"cubic", n, {}};
    for (int i = 1; i < n; ++i) {
        const RingMatrix gen = lk_generator(n, i);
        const RingMatrix product = (gen - id) * (gen + id.scaled(q)) * (gen - id.scaled(t * q * q));
        report.add("(s" + std::to_string(i) + "-1)(s" + std::to_string(i) + "+q)(s" + std::to_string(i) +
                       "-tq^2)=0",
                   product.is_zero_matrix());
    }
    return report;
}

}  // namespace braidrep
