#include "nsurf/words.hpp"

#include <stdexcept>

namespace nsurf {

GenLetter twist_letter(int index, int sign) { return GenLetter{GenKind::Twist, index, sign}; }
GenLetter beta_letter(int sign) { return GenLetter{GenKind::BetaTwist, 0, sign}; }
GenLetter slide_letter(int sign) { return GenLetter{GenKind::CrosscapSlide, 0, sign}; }

GenLetter inverse(const GenLetter& l) { return GenLetter{l.kind, l.index, -l.sign}; }

bool is_admissible(const GenLetter& l, int genus) {
    if (genus < 2) return false;
    switch (l.kind) {
        case GenKind::Twist:
            return l.index >= 1 && l.index <= genus - 1;
        case GenKind::BetaTwist:
            return genus >= 4;
        case GenKind::CrosscapSlide:
            return true;
    }
    return false;
}

std::string print_letter(const GenLetter& l) {
    std::string base;
    switch (l.kind) {
        case GenKind::Twist: base = std::to_string(l.index); break;
        case GenKind::BetaTwist: base = "b"; break;
        case GenKind::CrosscapSlide: base = "y"; break;
    }
    if (l.sign < 0) base += "'";
    return base;
}

GeneratorWord reduce(const GeneratorWord& w) {
    GeneratorWord out{w.genus, {}};
    out.letters.reserve(w.letters.size());
    for (const GenLetter& l : w.letters) {
        if (!out.letters.empty() && out.letters.back() == inverse(l)) {
            out.letters.pop_back();
        } else {
            out.letters.push_back(l);
        }
    }
    return out;
}

GeneratorWord invert(const GeneratorWord& w) {
    GeneratorWord out{w.genus, {}};
    out.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        out.letters.push_back(inverse(*it));
    }
    return out;
}

GeneratorWord concat(const GeneratorWord& u, const GeneratorWord& v) {
    if (u.genus != v.genus) {
        throw std::invalid_argument("concat: genus mismatch");
    }
    GeneratorWord out{u.genus, u.letters};
    out.letters.insert(out.letters.end(), v.letters.begin(), v.letters.end());
    return out;
}

GeneratorWord conjugate(const GeneratorWord& w, const GeneratorWord& c) {
    return reduce(concat(concat(c, w), invert(c)));
}

std::string print_word(const GeneratorWord& w) {
    if (w.letters.empty()) return "id";
    std::string out;
    for (const GenLetter& l : w.letters) out += print_letter(l);
    return out;
}

}  // namespace nsurf
