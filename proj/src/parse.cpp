#include "dgbraid/parse.hpp"

#include <algorithm>
#include <cctype>

namespace dgbraid {

namespace {

class Parser {
  public:
    Parser(const std::string& text, const AlgebraPtr& alg) : s_(text), alg_(alg) {
        // Generator names sorted longest-first for longest-match lexing.
        names_.reserve(alg->size());
        for (int i = 0; i < alg->size(); ++i) names_.push_back(i);
        std::sort(names_.begin(), names_.end(), [&](int a, int b) {
            return alg->gen(a).name.size() > alg->gen(b).name.size();
        });
    }

    GradedPoly run() {
        GradedPoly p = parseSum();
        skipWs();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skipWs() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }

    bool eat(char c) {
        skipWs();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skipWs();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    GradedPoly parseSum() {
        bool neg = false;
        skipWs();
        if (eat('-'))
            neg = true;
        else
            eat('+');
        GradedPoly p = parseTerm();
        if (neg) p = -p;
        while (true) {
            skipWs();
            if (eat('+'))
                p += parseTerm();
            else if (eat('-'))
                p -= parseTerm();
            else
                break;
        }
        return p;
    }

    GradedPoly parseTerm() {
        GradedPoly p = parseFactor();
        while (eat('*')) p = p * parseFactor();
        return p;
    }

    GradedPoly parseFactor() {
        GradedPoly p = parseAtom();
        if (eat('^')) {
            skipWs();
            size_t start = pos_;
            long e = parseInteger();
            if (e <= 0) throw ParseError("exponent must be a positive integer", start);
            p = p.pow((int)e);
        }
        return p;
    }

    long parseInteger() {
        skipWs();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
        if (pos_ == start) fail("expected integer");
        return std::stol(s_.substr(start, pos_ - start));
    }

    GradedPoly parseAtom() {
        skipWs();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            GradedPoly p = parseSum();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit((unsigned char)c)) return parseRational();
        if (c == '\'') return parseQuotedName();
        if (std::isalpha((unsigned char)c) || c == '_') return parseName();
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    GradedPoly parseRational() {
        long num = parseInteger();
        if (eat('/')) {
            skipWs();
            size_t start = pos_;
            long den = parseInteger();
            if (den == 0) throw ParseError("rational literal with zero denominator", start);
            return GradedPoly::constant(alg_, Scalar(num, den));
        }
        return GradedPoly::constant(alg_, Scalar(num));
    }

    GradedPoly parseQuotedName() {
        size_t start = pos_;
        ++pos_;  // opening quote
        size_t nameStart = pos_;
        while (pos_ < s_.size() && s_[pos_] != '\'') ++pos_;
        if (pos_ == s_.size()) throw ParseError("unterminated quoted name", start);
        std::string name = s_.substr(nameStart, pos_ - nameStart);
        ++pos_;  // closing quote
        int id = alg_->find(name);
        if (id < 0) throw ParseError("unknown symbol '" + name + "'", start);
        return GradedPoly::gen(alg_, id);
    }

    GradedPoly parseName() {
        // Longest match against the declared generator names; this lets
        // names like th+ or s3d(x-) lex as single tokens.
        size_t start = pos_;
        for (int id : names_) {
            const std::string& n = alg_->gen(id).name;
            if (s_.compare(pos_, n.size(), n) == 0) {
                pos_ += n.size();
                return GradedPoly::gen(alg_, id);
            }
        }
        size_t end = pos_;
        while (end < s_.size() &&
               (std::isalnum((unsigned char)s_[end]) || s_[end] == '_'))
            ++end;
        throw ParseError("unknown symbol '" + s_.substr(start, std::max<size_t>(end - start, 1)) + "'",
                         start);
    }

    const std::string& s_;
    AlgebraPtr alg_;
    std::vector<int> names_;
    size_t pos_ = 0;
};

}  // namespace

GradedPoly parsePoly(const std::string& text, const AlgebraPtr& alg) {
    return Parser(text, alg).run();
}

}  // namespace dgbraid
