#include "polyred/query.hpp"

#include <cctype>
#include <vector>

namespace polyred {

namespace {

struct Argument {
    int value;
    int power;  // exponent written as "a^b"; 0 when absent
    std::size_t position;
};

class TargetParser {
public:
    explicit TargetParser(std::string_view s) : s_(s) {}

    Target parse() {
        skip_ws();
        const std::size_t name_pos = pos_;
        std::string name;
        while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) {
            name += s_[pos_++];
        }
        if (name.empty()) {
            throw ParseError("expected a target name", name_pos);
        }
        expect('(');
        std::vector<Argument> args;
        args.push_back(read_arg());
        while (true) {
            skip_ws();
            if (at_end()) {
                throw ParseError("expected ',' or ')'", pos_);
            }
            if (peek() == ')') {
                ++pos_;
                break;
            }
            expect(',');
            args.push_back(read_arg());
        }
        skip_ws();
        if (!at_end()) {
            throw ParseError("trailing input", pos_);
        }
        return build(name, name_pos, args);
    }

private:
    Target build(const std::string& name, std::size_t name_pos, const std::vector<Argument>& a) {
        auto arity = [&](std::size_t n) {
            if (a.size() != n) {
                throw ParseError(name + " takes " + std::to_string(n) + " arguments, got " + std::to_string(a.size()),
                                 name_pos);
            }
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i].power != 0 && !(name == "S" && i == 0)) {
                    throw ParseError("exponent not allowed here", a[i].position);
                }
            }
        };
        if (name == "J") {
            arity(3);
            return IntegralSpec::J(a[0].value, a[1].value, a[2].value);
        }
        if (name == "J0") {
            arity(2);
            return IntegralSpec::J0(a[0].value, a[1].value);
        }
        if (name == "K") {
            arity(3);
            return IntegralSpec::K(a[0].value, a[1].value, a[2].value);
        }
        if (name == "L") {
            arity(3);
            return IntegralSpec::L(a[0].value, a[1].value, a[2].value);
        }
        if (name == "multi") {
            arity(2);
            return IntegralSpec::Multi(a[0].value, a[1].value);
        }
        if (name == "S") {
            arity(2);
            if (a[0].power == 0 || a[0].power == 1) {
                return EulerSumSpec::linear(a[0].value, a[1].value);
            }
            if (a[0].value == 1 && a[0].power == 2) {
                return EulerSumSpec::quadratic(a[1].value);
            }
            throw DomainError("S(r^p,q): only p = 1, or r = 1 with p = 2, is supported");
        }
        if (name == "R") {
            arity(1);
            if (a[0].value < 0) {
                throw DomainError("R(q): q >= 0 required");
            }
            return ResidueTarget{a[0].value};
        }
        if (name == "kappa") {
            arity(2);
            if (a[0].value < 1 || a[1].value < 2) {
                throw DomainError("kappa(r,q): r >= 1 and q >= 2 required");
            }
            return KappaTarget{a[0].value, a[1].value};
        }
        throw ParseError("unknown target '" + name + "'", name_pos);
    }

    Argument read_arg() {
        skip_ws();
        const std::size_t start = pos_;
        Argument arg{read_int(), 0, start};
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            arg.power = read_int();
        }
        return arg;
    }

    int read_int() {
        skip_ws();
        const std::size_t start = pos_;
        bool negative = false;
        if (!at_end() && (peek() == '-' || peek() == '+')) {
            negative = s_[pos_++] == '-';
            skip_ws();
        }
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            digits += s_[pos_++];
        }
        if (digits.empty()) {
            throw ParseError("expected an integer", pos_);
        }
        if (digits.size() > 6) {
            throw ParseError("integer out of range", start);
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

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Target parse_target(std::string_view text) { return TargetParser(text).parse(); }

Query parse_query(std::string_view text, QueryKind kind, QueryOptions options) {
    return Query{kind, parse_target(text), options};
}

std::string to_string(const Target& target) {
    struct Visitor {
        std::string operator()(const IntegralSpec& s) const { return to_string(s); }
        std::string operator()(const EulerSumSpec& s) const { return to_string(s); }
        std::string operator()(const ResidueTarget& r) const { return "R(" + std::to_string(r.q) + ")"; }
        std::string operator()(const KappaTarget& k) const {
            return "kappa(" + std::to_string(k.r) + "," + std::to_string(k.q) + ")";
        }
    };
    return std::visit(Visitor{}, target);
}

}  // namespace polyred
