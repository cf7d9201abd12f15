#include "hermcode/formtext.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace hermcode {

namespace {

class Parser {
public:
    Parser(const std::string& text, int n, int h, const FieldSpec& field)
        : s_(text), n_(n), h_(h), f_(field) {}

    Form run() {
        MonomialBasis basis(n_, h_);
        Form out{n_, h_, std::vector<Felt>(basis.size(), 0)};
        bool negate = false;
        skip();
        if (pos_ < s_.size() && s_[pos_] == '0') {
            const std::size_t save = pos_++;
            if (peek() == '\0') return out;
            pos_ = save;
        }
        if (peek() == '-') {
            negate = true;
            ++pos_;
        }
        while (true) {
            term(out, basis, negate);
            skip();
            if (pos_ == s_.size()) break;
            const char c = s_[pos_];
            if (c != '+' && c != '-') fail("expected '+' or '-' between terms");
            negate = c == '-';
            ++pos_;
        }
        return out;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("form parse error at offset " + std::to_string(pos_) +
                                    ": " + why);
    }

    std::uint64_t integer() {
        skip();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected a number");
        std::uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            v = v * 10 + (s_[pos_++] - '0');
        return v;
    }

    std::uint64_t optional_power() {
        if (peek() == '^') {
            ++pos_;
            return integer();
        }
        return 1;
    }

    Felt generator_factor() {
        const char c = s_[pos_++];
        Felt base;
        if (c == 'a') {
            base = f_.alpha();
        } else {
            if (f_.extension_exponent() == 1)
                fail("'b' needs a non-prime subfield");
            base = static_cast<Felt>(f_.characteristic());
        }
        return f_.pow(base, optional_power());
    }

    // Scalars only; variables are not allowed inside parentheses.
    Felt scalar_expr() {
        Felt acc = 0;
        bool negate = peek() == '-';
        if (negate) ++pos_;
        while (true) {
            Felt v = scalar_term();
            acc = f_.add(acc, negate ? f_.neg(v) : v);
            const char c = peek();
            if (c != '+' && c != '-') return acc;
            negate = c == '-';
            ++pos_;
        }
    }

    Felt scalar_term() {
        Felt v = scalar_factor();
        while (peek() == '*') {
            ++pos_;
            v = f_.mul(v, scalar_factor());
        }
        return v;
    }

    Felt scalar_factor() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Felt v = scalar_expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return v;
        }
        if (c == 'a' || c == 'b') return generator_factor();
        if (std::isdigit(static_cast<unsigned char>(c)))
            return f_.from_int(integer());
        fail("expected a scalar factor");
    }

    void term(Form& out, const MonomialBasis& basis, bool negate) {
        Felt coeff = 1;
        std::vector<std::uint8_t> exps(n_ + 1, 0);
        while (true) {
            const char c = peek();
            if (c == 'x') {
                ++pos_;
                const std::uint64_t var = integer();
                if (var > static_cast<std::uint64_t>(n_)) fail("variable index out of range");
                const std::uint64_t e = optional_power();
                exps[var] = static_cast<std::uint8_t>(exps[var] + e);
            } else {
                coeff = f_.mul(coeff, scalar_factor());
            }
            if (peek() != '*') break;
            ++pos_;
        }
        const unsigned total = std::accumulate(exps.begin(), exps.end(), 0u);
        if (total != static_cast<unsigned>(h_))
            fail("term degree " + std::to_string(total) + ", expected " + std::to_string(h_));
        if (negate) coeff = f_.neg(coeff);
        Felt& slot = out.coeffs[basis.index_of(exps)];
        slot = f_.add(slot, coeff);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int n_, h_;
    const FieldSpec& f_;
};

}  // namespace

Form parse_form(const std::string& text, int n, int h, const FieldSpec& field) {
    return Parser(text, n, h, field).run();
}

std::string form_to_string(const Form& f, const FieldSpec& field) {
    MonomialBasis basis(f.n, f.h);
    if (f.coeffs.size() != basis.size())
        throw std::invalid_argument("form does not match its stated parameters");
    std::string out;
    for (std::size_t m = 0; m < basis.size(); ++m) {
        const Felt c = f.coeffs[m];
        if (c == 0) continue;
        std::string name = field.element_name(c);
        if (name.find('+') != std::string::npos) name = "(" + name + ")";
        std::string mono;
        auto exps = basis.exponents(m);
        for (std::size_t j = 0; j < exps.size(); ++j) {
            if (!exps[j]) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(j);
            if (exps[j] > 1) mono += "^" + std::to_string(exps[j]);
        }
        std::string term = (name == "1") ? mono : name + "*" + mono;
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out.empty() ? "0" : out;
}

}  // namespace hermcode
