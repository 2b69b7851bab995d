#include "contclose/parser.hpp"

#include <cctype>

namespace contclose {

namespace {

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& vars)
        : text_(text), vars_(vars) {}

    Polynomial parse_expr() {
        Polynomial result(vars_.size());
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = (take() == '-');
        Polynomial t = parse_term();
        result = negate ? -t : t;
        skip_ws();
        while (peek() == '+' || peek() == '-') {
            bool minus = (take() == '-');
            Polynomial next = parse_term();
            result = minus ? result - next : result + next;
            skip_ws();
        }
        return result;
    }

    std::vector<Polynomial> parse_list() {
        std::vector<Polynomial> out;
        out.push_back(parse_expr());
        skip_ws();
        while (peek() == ',') {
            take();
            out.push_back(parse_expr());
            skip_ws();
        }
        expect_end();
        return out;
    }

    Polynomial parse_single() {
        Polynomial p = parse_expr();
        expect_end();
        return p;
    }

private:
    Polynomial parse_term() {
        Polynomial result = parse_factor();
        skip_ws();
        while (peek() == '*') {
            take();
            result = result * parse_factor();
            skip_ws();
        }
        return result;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_base();
        skip_ws();
        if (peek() == '^') {
            std::size_t caret = pos_;
            take();
            skip_ws();
            if (peek() == '-') throw ParseError("negative exponent", pos_);
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected nonnegative integer exponent", caret + 1);
            std::uint64_t n = parse_uint();
            return base.pow(n);
        }
        return base;
    }

    Polynomial parse_base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            take();
            Polynomial inner = parse_expr();
            skip_ws();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            take();
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_variable();
        if (c == '\0') throw ParseError("unexpected end of input", pos_);
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    Polynomial parse_rational() {
        Integer num = parse_integer();
        skip_ws();
        if (peek() == '/') {
            std::size_t slash = pos_;
            take();
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected denominator", slash + 1);
            Integer den = parse_integer();
            if (den == 0) throw ParseError("zero denominator", slash + 1);
            return Polynomial::constant(vars_.size(), make_rational(num, den));
        }
        return Polynomial::constant(vars_.size(), Rational(num));
    }

    Polynomial parse_variable() {
        std::size_t start = pos_;
        std::string name = take_identifier();
        for (std::size_t j = 0; j < vars_.size(); ++j)
            if (vars_[j] == name)
                return Polynomial::monomial(ExponentVector::axis(vars_.size(), j));
        throw ParseError("unknown variable '" + name + "'", start);
    }

    Integer parse_integer() {
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits += take();
        return Integer(digits);
    }

    std::uint64_t parse_uint() {
        Integer n = parse_integer();
        if (n > Integer(1) << 32) throw ParseError("exponent too large", pos_);
        return n.convert_to<std::uint64_t>();
    }

    std::string take_identifier() {
        std::string s;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') s += take();
        return s;
    }

    void expect_end() {
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }

    const std::string& text_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars) {
    if (vars.empty()) throw std::invalid_argument("need at least one variable name");
    return Parser(text, vars).parse_single();
}

std::vector<Polynomial> parse_polynomial_list(const std::string& text,
                                              const std::vector<std::string>& vars) {
    if (vars.empty()) throw std::invalid_argument("need at least one variable name");
    return Parser(text, vars).parse_list();
}

std::vector<std::string> scan_variables(const std::vector<std::string>& texts) {
    std::vector<std::string> vars;
    for (const auto& text : texts) {
        std::size_t i = 0;
        while (i < text.size()) {
            char c = text[i];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string name;
                while (i < text.size() &&
                       (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                    name += text[i++];
                bool known = false;
                for (const auto& v : vars) known = known || v == name;
                if (!known) vars.push_back(name);
            } else {
                ++i;
            }
        }
    }
    return vars;
}

}  // namespace contclose
