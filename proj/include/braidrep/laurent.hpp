#pragma once

// Multivariate Laurent polynomials with arbitrary-precision integer
// coefficients, and exact evaluation at rational points.

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace braidrep {

/// Ordered list of variable names shared by every polynomial of one ring.
class VarList {
public:
    VarList();
    VarList(std::initializer_list<std::string> names);
    explicit VarList(std::vector<std::string> names);

    std::size_t size() const { return names_->size(); }
    const std::vector<std::string>& names() const { return *names_; }
    const std::string& operator[](std::size_t k) const { return (*names_)[k]; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const VarList& a, const VarList& b);

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

using Exponents = std::vector<int>;

/// Element of Z[x_1^{±1}, ..., x_k^{±1}].
///
/// Terms are kept in a map keyed by exponent vector, so iteration order is
/// lexicographic by exponents and no stored coefficient is zero.
class LaurentPoly {
public:
    using TermMap = std::map<Exponents, mpz_class>;

    LaurentPoly() = default;
    explicit LaurentPoly(VarList vars);

    static LaurentPoly constant(const VarList& vars, const mpz_class& c);
    static LaurentPoly monomial(const VarList& vars, Exponents exps, const mpz_class& c = 1);
    /// The single variable `name` raised to `power`.
    static LaurentPoly variable(const VarList& vars, std::string_view name, int power = 1);

    const VarList& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// A single term with coefficient ±1; exactly the units of the ring.
    bool is_unit() const;
    LaurentPoly unit_inverse() const;
    LaurentPoly pow(int e) const;
    /// Divides every coefficient by `d`; throws unless each division is exact.
    LaurentPoly divide_exact(const mpz_class& d) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

private:
    void require_same_ring(const LaurentPoly& o) const;
    void add_term(const Exponents& e, const mpz_class& c);

    VarList vars_;
    TermMap terms_;
};

bool is_zero(const LaurentPoly& p);

/// Ring homomorphism sending `var` to `value`; every other variable of `p`
/// is sent to the variable of the same name in `value`'s ring.
LaurentPoly substitute(const LaurentPoly& p, std::string_view var, const LaurentPoly& value);

/// Exact rational assignment of variables.
struct RationalPoint {
    std::map<std::string, mpq_class, std::less<>> values;

    RationalPoint& set(std::string name, mpq_class value);
    const mpq_class* find(std::string_view name) const;
};

/// Exact value of `p` at `pt`. Only variables that occur in some term need
/// to be assigned.
mpq_class evaluate(const LaurentPoly& p, const RationalPoint& pt);

/// Parses "p", "-p" or "p/r" into a canonical rational.
mpq_class parse_rational(std::string_view text);
std::string to_string(const mpq_class& r);

/// Plain text such as "2*q^-1 - t*q^2 + 1"; terms follow storage order.
std::string to_string(const LaurentPoly& p);
std::string to_latex(const LaurentPoly& p);
/// Inverse of to_string over the given ring.
LaurentPoly parse_poly(std::string_view text, const VarList& vars);

/// Term list [{"e":[...],"c":"..."}, ...] without the variable names.
nlohmann::json terms_to_json(const LaurentPoly& p);
LaurentPoly terms_from_json(const nlohmann::json& j, const VarList& vars);
/// {"vars":[...],"terms":[...]}.
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

}  // namespace braidrep
