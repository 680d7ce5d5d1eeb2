#include "braidrep/matrix.hpp"

#include <utility>

namespace braidrep {

RingMatrix ring_identity(std::size_t n, const VarList& vars) {
    return RingMatrix::identity(n, LaurentPoly(vars), LaurentPoly::constant(vars, 1));
}

RationalMatrix rational_identity(std::size_t n) {
    return RationalMatrix::identity(n, mpq_class(0), mpq_class(1));
}

RingMatrix substitute(const RingMatrix& m, std::string_view var, const LaurentPoly& value) {
    return m.map([&](const LaurentPoly& p) { return substitute(p, var, value); });
}

RationalMatrix evaluate(const RingMatrix& m, const RationalPoint& pt) {
    return m.map([&](const LaurentPoly& p) -> mpq_class { return evaluate(p, pt); });
}

namespace {

void swap_rows(RingMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void scale_row(RingMatrix& m, std::size_t r, const LaurentPoly& s) {
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!m(r, c).is_zero()) m(r, c) = s * m(r, c);
}

// row[target] -= factor * row[source]
void subtract_row(RingMatrix& m, std::size_t target, std::size_t source, const LaurentPoly& factor) {
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!m(source, c).is_zero()) m(target, c) -= factor * m(source, c);
}

LaurentPoly trace(const RingMatrix& m) {
    LaurentPoly t = m.zero();
    for (std::size_t k = 0; k < m.rows(); ++k) t += m(k, k);
    return t;
}

void require_square(const RingMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
}

}  // namespace

std::optional<RingMatrix> invert_by_unit_pivots(const RingMatrix& m) {
    require_square(m);
    const std::size_t n = m.rows();
    RingMatrix a = m;
    RingMatrix x = ring_identity(n, m.zero().vars());
    for (std::size_t c = 0; c < n; ++c) {
        std::optional<std::size_t> pivot;
        for (std::size_t r = c; r < n && !pivot; ++r)
            if (a(r, c).is_unit()) pivot = r;
        if (!pivot) return std::nullopt;
        swap_rows(a, c, *pivot);
        swap_rows(x, c, *pivot);
        const LaurentPoly inv = a(c, c).unit_inverse();
        scale_row(a, c, inv);
        scale_row(x, c, inv);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a(r, c).is_zero()) continue;
            const LaurentPoly factor = a(r, c);
            subtract_row(a, r, c, factor);
            subtract_row(x, r, c, factor);
        }
    }
    return x;
}

RingMatrix invert_by_characteristic_polynomial(const RingMatrix& m) {
    require_square(m);
    const std::size_t n = m.rows();
    const VarList& vars = m.zero().vars();
    const RingMatrix id = ring_identity(n, vars);

    // adj accumulates M_k; coeff is c_{n-k} of det(xI - A).
    RingMatrix adj(n, n, m.zero());
    LaurentPoly coeff = LaurentPoly::constant(vars, 1);
    for (std::size_t k = 1; k <= n; ++k) {
        adj = m * adj + id.scaled(coeff);
        coeff = (-trace(m * adj)).divide_exact(mpz_class(static_cast<unsigned long>(k)));
    }
    // A * M_n = -c_0 * I.
    if (!coeff.is_unit())
        throw std::domain_error("determinant is not a unit: " + to_string(coeff));
    return adj.scaled(-coeff.unit_inverse());
}

RingMatrix inverse(const RingMatrix& m) {
    require_square(m);
    std::optional<RingMatrix> x = invert_by_unit_pivots(m);
    if (!x) x = invert_by_characteristic_polynomial(m);
    const RingMatrix id = ring_identity(m.rows(), m.zero().vars());
    if (!(m * *x == id) || !(*x * m == id))
        throw std::logic_error("computed inverse failed verification");
    return *x;
}

std::optional<std::pair<std::size_t, std::size_t>> first_difference(const RingMatrix& a,
                                                                    const RingMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (!(a(r, c) == b(r, c))) return std::make_pair(r, c);
    return std::nullopt;
}

namespace {

template <class T, class Cell>
nlohmann::json matrix_json(const Matrix<T>& m, Cell cell) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(cell(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class T, class Cell>
std::string matrix_latex(const Matrix<T>& m, Cell cell) {
    std::string out = "\\begin{pmatrix}\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c > 0) out += " & ";
            out += cell(m(r, c));
        }
        out += r + 1 < m.rows() ? " \\\\\n" : "\n";
    }
    out += "\\end{pmatrix}\n";
    return out;
}

std::string rational_latex(const mpq_class& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    std::string sign = sgn(x) < 0 ? "-" : "";
    mpz_class num = abs(x.get_num());
    return sign + "\\frac{" + num.get_str() + "}{" + x.get_den().get_str() + "}";
}

}  // namespace

nlohmann::json to_json(const RingMatrix& m) {
    return matrix_json(m, [](const LaurentPoly& p) { return terms_to_json(p); });
}

nlohmann::json to_json(const RationalMatrix& m) {
    return matrix_json(m, [](const mpq_class& x) { return nlohmann::json(to_string(x)); });
}

std::string to_latex(const RingMatrix& m) {
    return matrix_latex(m, [](const LaurentPoly& p) { return to_latex(p); });
}

std::string to_latex(const RationalMatrix& m) { return matrix_latex(m, rational_latex); }

}  // namespace braidrep
