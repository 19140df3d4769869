// Parser and printer for the compact generator-word notation:
//   expr := term+        term := atom ["'"] | "(" expr ")" "^" int
//   atom := digit | "y" | "b" | "id"
// Whitespace is insignificant.  Parsing preserves the expression tree
// (powers are not unrolled); expand() flattens to a GeneratorWord.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nsurf/words.hpp"

namespace nsurf {

struct ParseError : std::runtime_error {
    std::size_t offset;  // byte offset of the offending character
    ParseError(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " (at offset " + std::to_string(off) + ")"), offset(off) {}
};

struct WordExpr {
    enum class Kind { Sequence, Letter, Power };

    Kind kind = Kind::Sequence;
    int genus = 2;
    GenLetter letter{};               // Kind::Letter
    std::vector<WordExpr> children;   // Sequence: n-ary; Power: exactly one
    int exponent = 1;                 // Kind::Power

    friend bool operator==(const WordExpr& a, const WordExpr& b);
};

// Parses `text` at the given genus.  Letters outside the admissible
// alphabet for that genus are rejected with a ParseError.
WordExpr parse(std::string_view text, int genus);

// Unrolls powers and sequences into a flat word.  Performs no free
// reduction: expand(parse("11'")) has two letters.
GeneratorWord expand(const WordExpr& e);

// Canonical printing; parse(print(e)) == e for parser-produced trees.
std::string print(const WordExpr& e);

// Convenience: parse then expand.
GeneratorWord parse_word(std::string_view text, int genus);

}  // namespace nsurf
