// NEC signatures of involution quotient orbifolds, Z/2-epimorphism records
// (NSK maps), their topological-conjugacy classification, fixed-point-set
// profiles, and the blowup moves between genus g and g+1 data.
#pragma once

#include <string>
#include <vector>

namespace nsurf {

enum class Orient : char { Plus = '+', Minus = '-' };

// Signature (h, sign, r, k): quotient orbifold of underlying genus h
// (orientable for +, non-orientable for -), r cone points of order 2 and
// k boundary reflection circles (each with empty period data).
struct NecSignature {
    int h = 0;
    Orient sign = Orient::Plus;
    int r = 0;
    int k = 0;

    friend bool operator==(const NecSignature&, const NecSignature&) = default;
    std::string str() const;  // e.g. (1,-,[2^2],{()^1})
};

// Genus of the double cover described by the signature (Riemann-Hurwitz
// for the index-2 smooth action).
int surface_genus(const NecSignature& s);

// Fixed-point data of the involution: isolated points, one-sided circles,
// two-sided circles.
struct FixedPointProfile {
    int isolated = 0;
    int one_sided = 0;
    int two_sided = 0;

    friend bool operator==(const FixedPointProfile&, const FixedPointProfile&) = default;
    std::string str() const;
};

enum class Z2 : char { One = '1', Gen = 'X' };  // values of the order-2 epimorphism

// An epimorphism from the NEC group of `sig` onto Z/2 that is injective on
// the canonical finite subgroups, recorded by generator images:
//   sign +: a_1 b_1 .. a_h b_h   (ab, stored pairwise)
//   sign -: d_1 .. d_h
//   always: x_1 .. x_r (cone), e_1 .. e_k (boundary connectors),
//           c_1 .. c_k (reflections).
// Cone generators and reflections are forced to the generator X.
struct NskMap {
    NecSignature sig;
    std::vector<Z2> ab;  // size 2h when sign is +
    std::vector<Z2> d;   // size h when sign is -
    std::vector<Z2> e;   // size k

    friend bool operator==(const NskMap&, const NskMap&) = default;
    std::string str() const;
};

// Structural soundness plus surjectivity plus the requirement that the
// kernel surface (the double cover) is non-orientable.
bool nsk_valid(const NskMap& m, std::string* why = nullptr);

// n = number of boundary connectors e_j mapped to X.
int n_count(const NskMap& m);
// m = number of d_j mapped to X; only defined when sign is -.
int m_count(const NskMap& m);

// Topological conjugacy of two maps with equal signatures:
//  (1) n counts agree, and
//  (2) if r = n = 0 and sign is -: m parities agree and m vanishes jointly.
bool topologically_conjugate(const NskMap& a, const NskMap& b);

// (isolated, one_sided, two_sided) = (r, n, k - n).
FixedPointProfile fixed_point_profile(const NskMap& m);

// Signature-level blowup N_g -> N_{g+1}.
enum class BlowupKind { Isolated, OnReflectionCurve };
NecSignature blowup(const NecSignature& s, BlowupKind kind);

// Profile-level blowup, splitting the curve case by the side count of the
// fixed circle met by the added crosscap.
enum class RefinedBlowupKind { Isolated, OnOneSided, OnTwoSided };
std::string refined_blowup_name(RefinedBlowupKind k);
FixedPointProfile refined_blowup(const FixedPointProfile& p, RefinedBlowupKind kind);
BlowupKind signature_kind(RefinedBlowupKind k);

// One row of the classification table: a signature plus generator-image
// tokens ('1', 'X', or the wildcard '*' meaning either value).
struct NskTableRow {
    int genus = 0;
    std::string row_id;  // e.g. "2,1" in "theta_{4;2,1}"
    NecSignature sig;
    std::string name;
    // Token order: a_1 b_1 .. a_h b_h (sign +) or d_1 .. d_h (sign -),
    // then x_1..x_r, e_1..e_k, c_1..c_k.  Cone and reflection tokens are
    // always 'X'; the others are '1', 'X', or the wildcard '*'.
    std::vector<std::string> tokens;
};

const std::vector<NskTableRow>& nsk_table();           // embedded copy
std::string nsk_table_text();                          // canonical text form
std::vector<NskTableRow> parse_nsk_table(std::string_view text);

// All valid maps matching a row (wildcards expanded, validity-filtered).
std::vector<NskMap> expand_row(const NskTableRow& row);

// Partition into topological-conjugacy classes; returns member indices.
std::vector<std::vector<std::size_t>> classify(const std::vector<NskMap>& maps);

// The named conjugacy classes at one genus, derived from the table:
// row names give labels, with a row splitting into several classes where
// the classifier says so (suffix ",1", ",2", ... by m count).
struct NamedClass {
    std::string label;  // e.g. "4;8,2"
    NecSignature sig;
    FixedPointProfile profile;
    NskMap representative;
};
std::vector<NamedClass> class_directory(int genus);

// Blowup flow: which genus-(g+1) class each refined blowup move lands on,
// computed by matching signature and profile in the target directory.
struct FlowEdge {
    std::string source;
    RefinedBlowupKind kind;
    std::string target;
};
std::vector<FlowEdge> blowup_flow(int source_genus);

}  // namespace nsurf
