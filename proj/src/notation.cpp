#include "nsurf/notation.hpp"

#include <cctype>

namespace nsurf {

bool operator==(const WordExpr& a, const WordExpr& b) {
    if (a.kind != b.kind || a.genus != b.genus) return false;
    switch (a.kind) {
        case WordExpr::Kind::Letter:
            return a.letter == b.letter;
        case WordExpr::Kind::Power:
            if (a.exponent != b.exponent) break;
            [[fallthrough]];
        case WordExpr::Kind::Sequence:
            return a.children == b.children;
    }
    return false;
}

namespace {

class Parser {
  public:
    Parser(std::string_view text, int genus) : text_(text), genus_(genus) {}

    WordExpr parse_all() {
        WordExpr seq = parse_sequence();
        skip_ws();
        if (pos_ < text_.size()) {
            throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
        }
        return seq;
    }

  private:
    std::string_view text_;
    int genus_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    WordExpr parse_sequence() {
        WordExpr seq;
        seq.kind = WordExpr::Kind::Sequence;
        seq.genus = genus_;
        for (;;) {
            skip_ws();
            if (pos_ >= text_.size() || peek() == ')') break;
            parse_term(seq.children);
        }
        return seq;
    }

    void parse_term(std::vector<WordExpr>& out) {
        char c = peek();
        if (c == '(') {
            std::size_t open = pos_;
            ++pos_;
            WordExpr inner = parse_sequence();
            skip_ws();
            if (peek() != ')') throw ParseError("unclosed '('", open);
            ++pos_;
            WordExpr pw;
            pw.kind = WordExpr::Kind::Power;
            pw.genus = genus_;
            pw.children.push_back(std::move(inner));
            skip_ws();
            if (peek() == '^') {
                ++pos_;
                pw.exponent = parse_int();
            } else {
                pw.exponent = 1;
            }
            out.push_back(std::move(pw));
            return;
        }
        if (c == 'i') {
            // "id": the empty word; contributes nothing to the sequence.
            if (text_.substr(pos_, 2) != "id") {
                throw ParseError("expected 'id'", pos_);
            }
            pos_ += 2;
            return;
        }
        GenLetter letter;
        std::size_t at = pos_;
        if (c == 'y') {
            letter = slide_letter();
            ++pos_;
        } else if (c == 'b') {
            letter = beta_letter();
            ++pos_;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            if (c == '0') throw ParseError("twist indices start at 1", pos_);
            letter = twist_letter(c - '0');
            ++pos_;
        } else {
            throw ParseError(c == '\0' ? std::string("unexpected end of input")
                                       : "unexpected character '" + std::string(1, c) + "'",
                             pos_);
        }
        if (peek() == '\'') {
            letter.sign = -1;
            ++pos_;
        }
        if (!is_admissible(letter, genus_)) {
            throw ParseError("letter '" + print_letter(letter) + "' is not defined at genus " +
                                 std::to_string(genus_),
                             at);
        }
        WordExpr le;
        le.kind = WordExpr::Kind::Letter;
        le.genus = genus_;
        le.letter = letter;
        out.push_back(std::move(le));
    }

    int parse_int() {
        skip_ws();
        std::size_t at = pos_;
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            throw ParseError("expected integer exponent", at);
        }
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            if (v > 1000000) throw ParseError("exponent out of range", at);
            ++pos_;
        }
        return static_cast<int>(neg ? -v : v);
    }
};

void expand_into(const WordExpr& e, std::vector<GenLetter>& out) {
    switch (e.kind) {
        case WordExpr::Kind::Letter:
            out.push_back(e.letter);
            return;
        case WordExpr::Kind::Sequence:
            for (const WordExpr& c : e.children) expand_into(c, out);
            return;
        case WordExpr::Kind::Power: {
            std::vector<GenLetter> base;
            expand_into(e.children.front(), base);
            int n = e.exponent;
            if (n < 0) {
                std::vector<GenLetter> inv(base.rbegin(), base.rend());
                for (GenLetter& l : inv) l = inverse(l);
                base = std::move(inv);
                n = -n;
            }
            for (int i = 0; i < n; ++i) out.insert(out.end(), base.begin(), base.end());
            return;
        }
    }
}

}  // namespace

WordExpr parse(std::string_view text, int genus) {
    if (genus < 2) throw ParseError("genus must be at least 2", 0);
    return Parser(text, genus).parse_all();
}

GeneratorWord expand(const WordExpr& e) {
    GeneratorWord w{e.genus, {}};
    expand_into(e, w.letters);
    return w;
}

std::string print(const WordExpr& e) {
    switch (e.kind) {
        case WordExpr::Kind::Letter:
            return print_letter(e.letter);
        case WordExpr::Kind::Power:
            return "(" + print(e.children.front()) + ")^" + std::to_string(e.exponent);
        case WordExpr::Kind::Sequence: {
            if (e.children.empty()) return "id";
            std::string out;
            for (const WordExpr& c : e.children) out += print(c);
            return out;
        }
    }
    return {};
}

GeneratorWord parse_word(std::string_view text, int genus) { return expand(parse(text, genus)); }

}  // namespace nsurf
