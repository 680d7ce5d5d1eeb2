#include "braidrep/laurent.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace braidrep {

// ---------------------------------------------------------------- VarList

VarList::VarList() : names_(std::make_shared<const std::vector<std::string>>()) {}

VarList::VarList(std::initializer_list<std::string> names)
    : VarList(std::vector<std::string>(names)) {}

VarList::VarList(std::vector<std::string> names) {
    for (std::size_t a = 0; a < names.size(); ++a) {
        if (names[a].empty())
            throw std::invalid_argument("empty variable name");
        for (std::size_t b = 0; b < a; ++b)
            if (names[a] == names[b])
                throw std::invalid_argument("duplicate variable name: " + names[a]);
    }
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> VarList::index_of(std::string_view name) const {
    for (std::size_t k = 0; k < names_->size(); ++k)
        if ((*names_)[k] == name) return k;
    return std::nullopt;
}

bool operator==(const VarList& a, const VarList& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
}

// ------------------------------------------------------------ LaurentPoly

LaurentPoly::LaurentPoly(VarList vars) : vars_(std::move(vars)) {}

LaurentPoly LaurentPoly::constant(const VarList& vars, const mpz_class& c) {
    return monomial(vars, Exponents(vars.size(), 0), c);
}

LaurentPoly LaurentPoly::monomial(const VarList& vars, Exponents exps, const mpz_class& c) {
    if (exps.size() != vars.size())
        throw std::invalid_argument("exponent vector length does not match variable list");
    LaurentPoly p(vars);
    if (c != 0) p.terms_.emplace(std::move(exps), c);
    return p;
}

LaurentPoly LaurentPoly::variable(const VarList& vars, std::string_view name, int power) {
    auto k = vars.index_of(name);
    if (!k) throw std::invalid_argument("unknown variable: " + std::string(name));
    Exponents e(vars.size(), 0);
    e[*k] = power;
    return monomial(vars, std::move(e));
}

bool LaurentPoly::is_one() const {
    if (terms_.size() != 1) return false;
    const auto& [e, c] = *terms_.begin();
    if (c != 1) return false;
    for (int x : e)
        if (x != 0) return false;
    return true;
}

bool LaurentPoly::is_unit() const {
    if (terms_.size() != 1) return false;
    const auto& c = terms_.begin()->second;
    return c == 1 || c == -1;
}

LaurentPoly LaurentPoly::unit_inverse() const {
    if (!is_unit()) throw std::domain_error("not a unit: " + to_string(*this));
    const auto& [e, c] = *terms_.begin();
    Exponents inv(e.size());
    for (std::size_t k = 0; k < e.size(); ++k) inv[k] = -e[k];
    return monomial(vars_, std::move(inv), c);
}

LaurentPoly LaurentPoly::pow(int e) const {
    if (e < 0) return unit_inverse().pow(-e);
    LaurentPoly result = constant(vars_, 1);
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

LaurentPoly LaurentPoly::divide_exact(const mpz_class& d) const {
    if (d == 0) throw std::domain_error("division by zero");
    LaurentPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
            throw std::domain_error("inexact integer division");
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        out.terms_.emplace_hint(out.terms_.end(), e, std::move(q));
    }
    return out;
}

void LaurentPoly::require_same_ring(const LaurentPoly& o) const {
    if (!(vars_ == o.vars_)) throw std::invalid_argument("variable list mismatch");
}

void LaurentPoly::add_term(const Exponents& e, const mpz_class& c) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    require_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    require_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.require_same_ring(b);
    LaurentPoly out(a.vars_);
    Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

bool is_zero(const LaurentPoly& p) { return p.is_zero(); }

// ------------------------------------------------------------ substitution

LaurentPoly substitute(const LaurentPoly& p, std::string_view var, const LaurentPoly& value) {
    const VarList& src = p.vars();
    const VarList& dst = value.vars();
    auto subst_index = src.index_of(var);

    // Where each untouched source variable lands in the target ring.
    std::vector<std::optional<std::size_t>> target(src.size());
    for (std::size_t k = 0; k < src.size(); ++k) {
        if (subst_index && k == *subst_index) continue;
        target[k] = dst.index_of(src[k]);
    }

    std::map<int, LaurentPoly> powers;
    auto power_of_value = [&](int e) -> const LaurentPoly& {
        auto it = powers.find(e);
        if (it != powers.end()) return it->second;
        if (e < 0 && !value.is_unit())
            throw std::domain_error("cannot substitute non-unit " + to_string(value) +
                                    " into a negative power of " + std::string(var));
        return powers.emplace(e, value.pow(e)).first->second;
    };

    LaurentPoly out(dst);
    for (const auto& [e, c] : p.terms()) {
        Exponents mono(dst.size(), 0);
        for (std::size_t k = 0; k < src.size(); ++k) {
            if ((subst_index && k == *subst_index) || e[k] == 0) continue;
            if (!target[k])
                throw std::invalid_argument("variable " + src[k] + " has no image in target ring");
            mono[*target[k]] += e[k];
        }
        LaurentPoly term = LaurentPoly::monomial(dst, std::move(mono), c);
        if (subst_index && e[*subst_index] != 0) term *= power_of_value(e[*subst_index]);
        out += term;
    }
    return out;
}

// ------------------------------------------------------------- evaluation

RationalPoint& RationalPoint::set(std::string name, mpq_class value) {
    value.canonicalize();
    values.insert_or_assign(std::move(name), std::move(value));
    return *this;
}

const mpq_class* RationalPoint::find(std::string_view name) const {
    auto it = values.find(name);
    return it == values.end() ? nullptr : &it->second;
}

namespace {

mpq_class rational_pow(const mpq_class& x, int e, std::string_view name) {
    if (e < 0 && x == 0)
        throw std::domain_error("zero assigned to " + std::string(name) +
                                " which occurs with a negative exponent");
    unsigned long k = static_cast<unsigned long>(e < 0 ? -static_cast<long>(e) : e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), k);
    mpq_class r = e < 0 ? mpq_class(den, num) : mpq_class(num, den);
    r.canonicalize();
    return r;
}

}  // namespace

mpq_class evaluate(const LaurentPoly& p, const RationalPoint& pt) {
    const VarList& vars = p.vars();
    std::vector<const mpq_class*> assigned(vars.size(), nullptr);
    mpq_class total = 0;
    for (const auto& [e, c] : p.terms()) {
        mpq_class term(c);
        for (std::size_t k = 0; k < vars.size(); ++k) {
            if (e[k] == 0) continue;
            if (!assigned[k]) {
                assigned[k] = pt.find(vars[k]);
                if (!assigned[k]) throw std::invalid_argument("unassigned variable: " + vars[k]);
            }
            term *= rational_pow(*assigned[k], e[k], vars[k]);
        }
        total += term;
    }
    return total;
}

mpq_class parse_rational(std::string_view text) {
    std::string s(text);
    auto bad = [&] { return std::invalid_argument("malformed rational: '" + s + "'"); };
    auto valid_int = [](std::string_view t, bool allow_sign) {
        if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
        if (t.empty()) return false;
        for (char ch : t)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false)) throw bad();
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    mpq_class r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const mpq_class& r) { return r.get_str(); }

// -------------------------------------------------------------- formatting

namespace {

std::string monomial_text(const VarList& vars, const Exponents& e) {
    std::string out;
    for (std::size_t k = 0; k < vars.size(); ++k) {
        if (e[k] == 0) continue;
        if (!out.empty()) out += '*';
        out += vars[k];
        if (e[k] != 1) out += "^" + std::to_string(e[k]);
    }
    return out;
}

std::string latex_symbol(const std::string& name) {
    static const char* greek[] = {"alpha", "beta", "gamma", "delta", "kappa",
                                  "lambda", "mu", "nu", "sigma", "tau"};
    for (const char* g : greek)
        if (name == g) return std::string("\\") + g;
    return name;
}

std::string monomial_latex(const VarList& vars, const Exponents& e) {
    std::string out;
    for (std::size_t k = 0; k < vars.size(); ++k) {
        if (e[k] == 0) continue;
        if (!out.empty()) out += ' ';
        out += latex_symbol(vars[k]);
        if (e[k] != 1) out += "^{" + std::to_string(e[k]) + "}";
    }
    return out;
}

template <class MonomialFn>
std::string join_terms(const LaurentPoly& p, MonomialFn monomial, const char* times) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool negative = c < 0;
        mpz_class mag = abs(c);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        std::string mono = monomial(p.vars(), e);
        if (mono.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.get_str() + times + mono;
    }
    return out;
}

}  // namespace

std::string to_string(const LaurentPoly& p) { return join_terms(p, monomial_text, "*"); }

std::string to_latex(const LaurentPoly& p) { return join_terms(p, monomial_latex, " "); }

// ----------------------------------------------------------------- parsing

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const VarList& vars) : text_(text), vars_(vars) {}

    LaurentPoly parse() {
        LaurentPoly result(vars_);
        skip_space();
        if (at_end()) throw error("empty polynomial");
        bool negative = false;
        if (peek() == '-' || peek() == '+') negative = take() == '-';
        result += signed_term(negative);
        for (skip_space(); !at_end(); skip_space()) {
            char op = take();
            if (op != '+' && op != '-') throw error("expected '+' or '-'");
            result += signed_term(op == '-');
        }
        return result;
    }

private:
    LaurentPoly signed_term(bool negative) {
        mpz_class coeff = 1;
        Exponents e(vars_.size(), 0);
        bool any = false;
        do {
            skip_space();
            if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff *= mpz_class(digits());
            } else if (!at_end() && (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
                std::string name = identifier();
                auto k = vars_.index_of(name);
                if (!k) throw error("unknown variable '" + name + "'");
                int power = 1;
                skip_space();
                if (!at_end() && peek() == '^') {
                    take();
                    skip_space();
                    bool neg = false;
                    if (!at_end() && (peek() == '-' || peek() == '+')) neg = take() == '-';
                    std::string d = digits();
                    power = std::stoi(d) * (neg ? -1 : 1);
                }
                e[*k] += power;
            } else {
                throw error("expected coefficient or variable");
            }
            any = true;
            skip_space();
        } while (!at_end() && peek() == '*' && take());
        if (!any) throw error("empty term");
        return LaurentPoly::monomial(vars_, std::move(e), negative ? mpz_class(-coeff) : coeff);
    }

    std::string digits() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) throw error("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string identifier() {
        std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char take() { return text_[pos_++]; }

    std::invalid_argument error(const std::string& what) const {
        std::ostringstream os;
        os << "polynomial parse error at offset " << pos_ << ": " << what << " in '" << text_ << "'";
        return std::invalid_argument(os.str());
    }

    std::string_view text_;
    const VarList& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text, const VarList& vars) {
    return PolyParser(text, vars).parse();
}

// -------------------------------------------------------------------- JSON

nlohmann::json terms_to_json(const LaurentPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) arr.push_back({{"e", e}, {"c", c.get_str()}});
    return arr;
}

LaurentPoly terms_from_json(const nlohmann::json& j, const VarList& vars) {
    if (!j.is_array()) throw std::invalid_argument("polynomial terms must be a JSON array");
    LaurentPoly p(vars);
    for (const auto& t : j) {
        auto e = t.at("e").get<Exponents>();
        mpz_class c(t.at("c").get<std::string>());
        p += LaurentPoly::monomial(vars, std::move(e), c);
    }
    return p;
}

nlohmann::json to_json(const LaurentPoly& p) {
    return {{"vars", p.vars().names()}, {"terms", terms_to_json(p)}};
}

LaurentPoly poly_from_json(const nlohmann::json& j) {
    VarList vars(j.at("vars").get<std::vector<std::string>>());
    return terms_from_json(j.at("terms"), vars);
}

}  // namespace braidrep
