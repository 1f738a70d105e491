#include "polyred/render.hpp"

#include <algorithm>
#include <cctype>

#include <json.hpp>

#include "polyred/errors.hpp"

namespace polyred {

using nlohmann::json;

namespace {

struct FactorRun {
    Generator gen;
    int power;
};

std::vector<FactorRun> runs(const Monomial& m) {
    std::vector<FactorRun> out;
    for (const auto& g : m.factors()) {
        if (!out.empty() && out.back().gen == g) {
            ++out.back().power;
        } else {
            out.push_back({g, 1});
        }
    }
    return out;
}

std::string text_factor(const FactorRun& f) {
    std::string s = f.gen.is_zeta() ? "z(" + std::to_string(f.gen.first()) + ")"
                                    : "k(" + std::to_string(f.gen.first()) + "," + std::to_string(f.gen.second()) + ")";
    if (f.power > 1) {
        s += "^" + std::to_string(f.power);
    }
    return s;
}

std::string latex_factor(const FactorRun& f) {
    std::string s = f.gen.is_zeta()
                        ? "\\zeta(" + std::to_string(f.gen.first()) + ")"
                        : "\\kappa_{" + std::to_string(f.gen.first()) + "," + std::to_string(f.gen.second()) + "}";
    if (f.power > 1) {
        s += "^{" + std::to_string(f.power) + "}";
    }
    return s;
}

std::string latex_number(const Rational& q) {
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string render_text(const ZetaExpr& e) {
    const auto terms = display_terms(e);
    if (terms.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        const bool negative = c < 0;
        const Rational mag = abs(c);
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string body;
        if (m.is_one() || mag != 1) {
            body = to_string(mag);
        }
        for (const auto& f : runs(m)) {
            if (!body.empty()) {
                body += "*";
            }
            body += text_factor(f);
        }
        out += body;
    }
    return out;
}

std::string render_latex(const ZetaExpr& e) {
    const auto terms = display_terms(e);
    if (terms.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        const Rational mag = abs(c);
        if (c < 0) {
            out += "-";
        } else if (!first) {
            out += "+";
        }
        first = false;
        if (m.is_one() || mag != 1) {
            out += latex_number(mag);
        }
        for (const auto& f : runs(m)) {
            out += latex_factor(f);
        }
    }
    return out;
}

std::string render_json(const ZetaExpr& e) {
    json terms = json::array();
    for (const auto& [m, c] : display_terms(e)) {
        json mono = json::array();
        for (const auto& g : m.factors()) {
            if (g.is_zeta()) {
                mono.push_back(json::array({"zeta", g.first()}));
            } else {
                mono.push_back(json::array({"kappa", g.first(), g.second()}));
            }
        }
        terms.push_back(json{{"coeff", to_string(c)}, {"mono", mono}});
    }
    return json{{"terms", terms}}.dump();
}

class TextParser {
public:
    explicit TextParser(std::string_view s) : s_(s) {}

    ZetaExpr parse() {
        skip_ws();
        if (at_end()) {
            throw ParseError("empty expression", pos_);
        }
        ZetaExpr out;
        int sign = 1;
        if (peek() == '-' || peek() == '+') {
            sign = take() == '-' ? -1 : 1;
        }
        out += parse_term() * Rational(sign);
        while (true) {
            skip_ws();
            if (at_end()) {
                break;
            }
            const char op = take();
            if (op != '+' && op != '-') {
                throw ParseError(std::string("expected '+' or '-', found '") + op + "'", pos_ - 1);
            }
            out += parse_term() * Rational(op == '-' ? -1 : 1);
        }
        return out;
    }

private:
    ZetaExpr parse_term() {
        ZetaExpr term = parse_factor();
        while (true) {
            skip_ws();
            if (at_end() || peek() != '*') {
                return term;
            }
            ++pos_;
            term = term * parse_factor();
        }
    }

    ZetaExpr parse_factor() {
        skip_ws();
        if (at_end()) {
            throw ParseError("unexpected end of expression", pos_);
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            const std::size_t start = pos_;
            Integer num(read_digits());
            Integer den = 1;
            skip_ws();
            if (!at_end() && peek() == '/') {
                ++pos_;
                skip_ws();
                den = Integer(read_digits());
                if (den == 0) {
                    throw ParseError("zero denominator", start);
                }
            }
            return ZetaExpr(make_rational(num, den));
        }
        const std::size_t start = pos_;
        std::string name;
        while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) {
            name += take();
        }
        ZetaExpr base;
        if (name == "z" || name == "zeta") {
            expect('(');
            const int n = read_int();
            expect(')');
            try {
                base = ZetaExpr::zeta(n);
            } catch (const DomainError& err) {
                throw ParseError(err.what(), start);
            }
        } else if (name == "k" || name == "kappa") {
            expect('(');
            const int r = read_int();
            expect(',');
            const int q = read_int();
            expect(')');
            try {
                base = ZetaExpr::kappa(r, q);
            } catch (const DomainError& err) {
                throw ParseError(err.what(), start);
            }
        } else {
            throw ParseError("unknown symbol '" + name + "'", start);
        }
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            const int power = read_int();
            if (power < 1) {
                throw ParseError("exponent must be positive", pos_);
            }
            ZetaExpr out = base;
            for (int i = 1; i < power; ++i) {
                out = out * base;
            }
            return out;
        }
        return base;
    }

    std::string read_digits() {
        skip_ws();
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            digits += take();
        }
        if (digits.empty()) {
            throw ParseError("expected digits", pos_);
        }
        return digits;
    }

    int read_int() {
        skip_ws();
        bool negative = false;
        if (!at_end() && peek() == '-') {
            negative = true;
            ++pos_;
        }
        const std::size_t start = pos_;
        const std::string digits = read_digits();
        if (digits.size() > 9) {
            throw ParseError("integer too large", start);
        }
        const int v = std::stoi(digits);
        return negative ? -v : v;
    }

    void expect(char c) {
        skip_ws();
        if (at_end() || peek() != c) {
            throw ParseError(std::string("expected '") + c + "'", pos_);
        }
        ++pos_;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
    }

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    char take() { return s_[pos_++]; }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Format parse_format(std::string_view name) {
    if (name == "text") {
        return Format::Text;
    }
    if (name == "latex") {
        return Format::Latex;
    }
    if (name == "json") {
        return Format::Json;
    }
    throw DomainError("unknown format '" + std::string(name) + "' (text|latex|json)");
}

std::vector<std::pair<Monomial, Rational>> display_terms(const ZetaExpr& e) {
    std::vector<std::pair<Monomial, Rational>> out(e.terms().begin(), e.terms().end());
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        const int wa = a.first.weight();
        const int wb = b.first.weight();
        if (wa != wb) {
            return wa > wb;
        }
        return a.first < b.first;
    });
    std::stable_partition(out.begin(), out.end(), [](const auto& t) { return t.second > 0; });
    return out;
}

std::string render_expr(const ZetaExpr& e, Format format) {
    switch (format) {
        case Format::Text:
            return render_text(e);
        case Format::Latex:
            return render_latex(e);
        case Format::Json:
            return render_json(e);
    }
    return {};
}

ZetaExpr parse_expr(std::string_view text) { return TextParser(text).parse(); }

ZetaExpr parse_expr_json(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& err) {
        throw ParseError(std::string("invalid JSON: ") + err.what(), err.byte);
    }
    if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array()) {
        throw ParseError("expected an object with a \"terms\" array", 0);
    }
    ZetaExpr out;
    for (const auto& term : doc["terms"]) {
        if (!term.contains("coeff") || !term["coeff"].is_string() || !term.contains("mono") ||
            !term["mono"].is_array()) {
            throw ParseError("term needs string \"coeff\" and array \"mono\"", 0);
        }
        Rational c;
        try {
            c = parse_rational(term["coeff"].get<std::string>());
        } catch (const DomainError& err) {
            throw ParseError(err.what(), 0);
        }
        std::vector<Generator> factors;
        for (const auto& f : term["mono"]) {
            if (!f.is_array() || f.empty() || !f[0].is_string()) {
                throw ParseError("malformed factor " + f.dump(), 0);
            }
            const auto kind = f[0].get<std::string>();
            try {
                if (kind == "zeta" && f.size() == 2 && f[1].is_number_integer()) {
                    factors.push_back(Generator::zeta(f[1].get<int>()));
                } else if (kind == "kappa" && f.size() == 3 && f[1].is_number_integer() && f[2].is_number_integer()) {
                    factors.push_back(Generator::kappa(f[1].get<int>(), f[2].get<int>()));
                } else {
                    throw ParseError("malformed factor " + f.dump(), 0);
                }
            } catch (const DomainError& err) {
                throw ParseError(err.what(), 0);
            }
        }
        out.add_term(Monomial(std::move(factors)), c);
    }
    return out;
}

}  // namespace polyred
