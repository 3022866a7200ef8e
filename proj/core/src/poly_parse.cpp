#include "bizeta/poly_parse.hpp"

#include <cctype>
#include <limits>
#include <map>

#include "bizeta/error.hpp"

namespace bizeta {

namespace {

class PolyParser {
  public:
    PolyParser(std::string_view text, char var, std::size_t line, std::size_t offset)
        : s_(text), var_(var), line_(line), offset_(offset) {}

    std::vector<Integer> run() {
        std::map<unsigned, Integer> terms;
        skipSpace();
        if (pos_ == s_.size()) fail("empty polynomial");
        bool first = true;
        while (pos_ < s_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skipSpace();
            } else if (!first) {
                fail(std::string("expected '+' or '-', found '") + peek() + "'");
            }
            auto [coef, exp] = term();
            terms[exp] += sign * coef;
            first = false;
            skipSpace();
        }
        unsigned top = terms.empty() ? 0 : terms.rbegin()->first;
        std::vector<Integer> out(top + 1);
        for (auto& [e, c] : terms) out[e] = c;
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    }

  private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    void skipSpace() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("line " + std::to_string(line_) + ", column " + std::to_string(offset_ + pos_ + 1) + ": " +
                         msg);
    }

    Integer number() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    std::pair<Integer, unsigned> term() {
        Integer coef = 1;
        bool haveCoef = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coef = number();
            haveCoef = true;
            skipSpace();
            if (peek() == '*') {
                ++pos_;
                skipSpace();
                if (peek() != var_) fail(std::string("expected '") + var_ + "' after '*'");
            }
        }
        if (peek() != var_) {
            if (!haveCoef) {
                if (pos_ == s_.size()) fail("unexpected end of input");
                fail(std::string("unexpected character '") + peek() + "'");
            }
            return {coef, 0};
        }
        ++pos_;
        skipSpace();
        unsigned exp = 1;
        if (peek() == '^') {
            ++pos_;
            skipSpace();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a nonnegative exponent");
            const Integer e = number();
            if (e > 4096) fail("exponent too large");
            exp = static_cast<unsigned>(e.get_ui());
        }
        return {coef, exp};
    }

    std::string_view s_;
    char var_;
    std::size_t line_;
    std::size_t offset_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<Integer> parseIntegerPoly(std::string_view text, char var, std::size_t line, std::size_t columnOffset) {
    return PolyParser(text, var, line, columnOffset).run();
}

}  // namespace bizeta
