// Generator alphabet of M(N_g) and free-word algebra over it.
// Words here are free: no mapping-class relations are ever applied
// (relation-aware equality lives in the action module).
#pragma once

#include <string>
#include <vector>

namespace nsurf {

enum class GenKind { Twist, BetaTwist, CrosscapSlide };

// One signed generator letter: a Dehn twist t_{alpha_i} (Twist, index i),
// the twist t_beta (BetaTwist), or the crosscap slide y (CrosscapSlide).
struct GenLetter {
    GenKind kind = GenKind::Twist;
    int index = 0;  // twist index 1..g-1; unused for the other kinds
    int sign = +1;  // +1 as written, -1 for the primed (inverse) letter

    friend bool operator==(const GenLetter&, const GenLetter&) = default;
};

GenLetter twist_letter(int index, int sign = +1);
GenLetter beta_letter(int sign = +1);
GenLetter slide_letter(int sign = +1);

GenLetter inverse(const GenLetter& l);
bool is_admissible(const GenLetter& l, int genus);
std::string print_letter(const GenLetter& l);

// A flat generator word at a fixed genus, written left to right; the
// RIGHTMOST letter acts first under evaluation (composition convention).
struct GeneratorWord {
    int genus = 2;
    std::vector<GenLetter> letters;

    friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;
};

// Free reduction: cancel adjacent letter/inverse pairs until none remain.
GeneratorWord reduce(const GeneratorWord& w);
GeneratorWord invert(const GeneratorWord& w);
GeneratorWord concat(const GeneratorWord& u, const GeneratorWord& v);
// reduce(c . w . invert(c))
GeneratorWord conjugate(const GeneratorWord& w, const GeneratorWord& c);
std::string print_word(const GeneratorWord& w);

}  // namespace nsurf
