// Word problem, normal forms, conjugacy and homology for
// pi1(N_g) = < x_1..x_g | x_1^2 ... x_g^2 >,  2 <= g <= 5.
//
// Engines by genus:
//   g >= 4  one-relator small-cancellation rewriting (Dehn reduction plus
//           a length-preserving half-relator swap closure for canonical
//           geodesic normal forms, and the cyclic Dehn triviality test).
//   g == 3  orientation parity plus rewriting into the index-2 orientable
//           cover pi1(Sigma_2), which is handled by the g>=4 machinery.
//   g == 2  Klein-bottle normal form t^m s^n with t = x1 x2, s = x1.
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace nsurf {

// A word in pi1(N_g): letter +i means x_i, -i means x_i^{-1} (1-based).
using Word = std::vector<int>;

Word freduce(const Word& w);
Word winv(const Word& w);
Word wcat(const Word& a, const Word& b);   // freely reduced concatenation
Word wconj(const Word& u, const Word& w);  // u . w . u^{-1}, freely reduced
Word wpow(const Word& w, int n);
Word cyc_reduce(const Word& w);
Word ng_relator(int g);  // (1, 1, 2, 2, ..., g, g)
std::string word_str(const Word& w);
Word word_from_str(std::string_view s);  // inverse of word_str (for data files)

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

// Z-homology class in Z^g / (2,...,2); canonical representative keeps the
// last coordinate in {0,1}.
struct HomologyClassZ {
    std::vector<long long> v;
    friend bool operator==(const HomologyClassZ&, const HomologyClassZ&) = default;
    std::string str() const;
};

enum class Tri { Yes, No, Inconclusive };
std::string tri_name(Tri t);

struct ConjugacyResult {
    Tri verdict = Tri::Inconclusive;
    Word witness;           // verdict Yes: c with  c u c^{-1} = v  (verified)
    std::string invariant;  // verdict No: name of the separating invariant
};

// Canonical normal-form value; equal words get equal values and the
// encoding is comparable/hashable.  Layout by genus:
//   g >= 4: {0, letters...}         geodesic shortlex-least word
//   g == 3: {1, parity, cover...}   parity plus cover normal form
//   g == 2: {2, m, n}               Klein exponents
using NormalForm = std::vector<long long>;

namespace detail {

// Rewriting engine for one quadratic relator satisfying C'(1/6) (used
// directly for N_g with g >= 4 and for the genus-2 orientable cover).
class SCEngine {
  public:
    SCEngine(int nletters, Word relator);

    Word dehn(Word w) const;                 // greedy length reduction
    Word nf(Word w) const;                   // shortlex-least geodesic
    bool is_trivial_cyclic(const Word& w) const;  // cyclic Dehn decision
    int half() const { return half_; }
    const Word& relator() const { return r_; }

  private:
    int n_ = 0;
    Word r_;
    int rlen_ = 0;
    int half_ = 0;
    std::unordered_map<Word, Word, WordHash> over_;   // > half: strictly shortening
    std::unordered_map<Word, Word, WordHash> swap_;   // == half: length preserving
};

}  // namespace detail

class SurfaceGroup {
  public:
    static const SurfaceGroup& get(int g);  // cached; g in 2..5

    explicit SurfaceGroup(int g);
    int genus() const { return g_; }

    NormalForm nf(const Word& w) const;
    std::string nf_str(const Word& w) const;
    bool is_identity(const Word& w) const;
    bool eq(const Word& u, const Word& v) const;

    // Shortening by the genus-own relator only (no canonicalisation);
    // safe to interleave with automorphism application.
    Word pi1_reduce(Word w) const;

    // Greedy conjugacy reduction: returns (d, core) with w = d.core.d^{-1}.
    std::pair<Word, Word> conj_reduce(const Word& w) const;

    // Tri-state conjugacy with verified witnesses.  "No" is only ever
    // reported from invariants (homology, orientation character, Klein
    // normal form, cyclic geodesic length where valid); a failed bounded
    // search yields Inconclusive.
    ConjugacyResult is_conjugate(const Word& u, const Word& v, int bound = 16) const;

    HomologyClassZ abelianize_z(const Word& w) const;
    std::vector<int> abelianize_z2(const Word& w) const;
    int orientation_character(const Word& w) const;  // exponent-sum parity

    // Klein-bottle normal form (g == 2 only): w = t^m s^n.
    std::pair<long long, long long> klein_nf(const Word& w) const;

    // g == 3 only: rewrite an even word into the orientable-cover alphabet.
    Word cover_tokens(const Word& w) const;
    const detail::SCEngine& cover_engine() const;

  private:
    int g_;
    std::optional<detail::SCEngine> own_;    // g >= 4
    std::optional<detail::SCEngine> cover_;  // g == 3
    std::unordered_map<Word, Word, WordHash> own_subs_;  // genus-own Dehn table
    int own_rlen_ = 0;

    bool dehn_step(Word& w) const;  // first applicable own-relator shortening
};

// Oracle: all words of length <= max_len (over x_1..x_g) that are trivial
// in pi1(N_g), computed by relator-insertion saturation up to insert_cap.
std::set<Word> trivial_set(int g, int max_len, int insert_cap);

// Shortlex order used by normal forms: shorter first, then by letter with
// 1 < -1 < 2 < -2 < ...
bool shortlex_less(const Word& a, const Word& b);

}  // namespace nsurf
