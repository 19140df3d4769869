// Outer action of mapping classes on pi1(N_g): generator automorphisms,
// evaluation of generator words, inner-ness decisions, homology matrices,
// and the action on free-homotopy classes of named curves.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsurf/pi1.hpp"
#include "nsurf/words.hpp"

namespace nsurf {

class Automorphism {
  public:
    static Automorphism identity(const SurfaceGroup& G);
    // Cached, validated generator images for the pinned twist directions.
    static const Automorphism& generator(const SurfaceGroup& G, const GenLetter& l);

    const SurfaceGroup& group() const { return *G_; }
    const Word& image(int i) const;          // image of x_i, 1 <= i <= g
    const Word& inverse_image(int i) const;  // image of x_i under the inverse

    Word apply(const Word& w) const;
    Word apply_inverse(const Word& w) const;

    // Composition (*this) o rhs: rhs acts first.  Images are pi1-reduced.
    Automorphism after(const Automorphism& rhs) const;
    Automorphism inverse() const;

    // Image of the surface relator is freely conjugate to relator^{+-1}.
    bool relator_well_defined() const;
    // phi o phi^{-1} and phi^{-1} o phi fix every generator (exact, via NF).
    bool inverse_exact() const;

    friend bool operator==(const Automorphism& a, const Automorphism& b);

  private:
    Automorphism(const SurfaceGroup& G, std::vector<Word> img, std::vector<Word> inv);
    const SurfaceGroup* G_;
    std::vector<Word> img_, inv_;
};

// Evaluates a generator word: rightmost letter acts first.
Automorphism evaluate(const SurfaceGroup& G, const GeneratorWord& w);

struct InnerResult {
    Tri verdict = Tri::Inconclusive;
    Word conjugator;        // verdict Yes: c with phi(x) = c x c^{-1} for all x
    std::string invariant;  // verdict No: separating invariant
};

// Is phi an inner automorphism?  "No" only ever comes from abelianised
// invariants (or the exact genus-2 normal form); an exhausted search is
// reported Inconclusive.
InnerResult is_inner(const Automorphism& phi, int power_bound = 8);

// Do two generator words induce the same mapping class (equal outer
// automorphisms)?  Evaluates u . v^{-1} and tests inner-ness.
Tri outer_equal(const SurfaceGroup& G, const GeneratorWord& u, const GeneratorWord& v,
                int power_bound = 8);
Tri is_involution(const SurfaceGroup& G, const GeneratorWord& w, int power_bound = 8);

// Induced matrices on H_1(N_g).
std::vector<std::vector<long long>> homology_matrix_z(const Automorphism& phi);
std::vector<std::vector<int>> homology_matrix_z2(const Automorphism& phi);
// Identity as an endomorphism of Z^g / (2,...,2): every column differs from
// the unit column by an integer multiple of (2,...,2).
bool z_matrix_is_identity(const std::vector<std::vector<long long>>& m);
bool z2_matrix_is_identity(const std::vector<std::vector<int>>& m);
std::vector<std::vector<int>> z2_matrix_square(const std::vector<std::vector<int>>& m);

// Genus-2 mapping-class invariants: (twist count mod 2, slide count mod 2)
// classifies M(N_2) = Z/2 x Z/2.
std::pair<int, int> genus2_class(const GeneratorWord& w);

// Named one-sided/two-sided curve classes: gamma_S = x_{i1}...x_{il} for a
// nonempty increasing index set S, with mu_i = gamma_{i}, alpha_i =
// gamma_{i,i+1}, beta = gamma_{1,2,3,4}.
struct CurveClass {
    std::vector<int> indices;  // strictly increasing, within 1..g

    Word word() const;
    std::string name() const;       // mu1 / a2 / b / g134 spelling
    int sides(int genus) const;     // 1 = one-sided, 2 = two-sided

    static CurveClass mu(int i);
    static CurveClass alpha(int i);
    static CurveClass beta();
    static std::optional<CurveClass> parse(std::string_view text, int genus);

    friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

// pi1-reduced image of the curve's class under phi.
Word apply_to_class(const Automorphism& phi, const CurveClass& c);

// Does phi send `curve` to `target` (inverted if requested) up to free
// homotopy, i.e. conjugacy in pi1?  Returns the conjugacy verdict/witness.
ConjugacyResult class_image_is(const Automorphism& phi, const CurveClass& curve,
                               const CurveClass& target, bool inverted, int bound = 16);

// Searches all named curve classes gamma_S (and their inverses) for one
// conjugate to `w`; returns e.g. "g134" / "g2^-1" when found.
std::optional<std::string> identify_class(const SurfaceGroup& G, const Word& w, int bound = 16);

}  // namespace nsurf
