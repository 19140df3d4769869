#include "nsurf/nec.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace nsurf {

std::string NecSignature::str() const {
    std::ostringstream os;
    os << '(' << h << ',' << static_cast<char>(sign) << ",[";
    if (r > 0) os << "2^" << r;
    os << "],{";
    if (k > 0) os << "()^" << k;
    os << "})";
    return os.str();
}

int surface_genus(const NecSignature& s) {
    if (s.sign == Orient::Plus) return 4 * s.h + 2 * s.k + s.r - 2;
    return 2 * s.h + 2 * s.k + s.r - 2;
}

std::string FixedPointProfile::str() const {
    std::ostringstream os;
    os << '(' << isolated << ',' << one_sided << ',' << two_sided << ')';
    return os.str();
}

namespace {
char z2c(Z2 v) { return static_cast<char>(v); }
}  // namespace

std::string NskMap::str() const {
    std::ostringstream os;
    os << sig.str() << " ";
    if (sig.sign == Orient::Plus) {
        for (Z2 v : ab) os << z2c(v);
    } else {
        for (Z2 v : d) os << z2c(v);
    }
    os << '|';
    for (int i = 0; i < sig.r; ++i) os << 'X';
    os << '|';
    for (Z2 v : e) os << z2c(v);
    os << '|';
    for (int i = 0; i < sig.k; ++i) os << 'X';
    return os.str();
}

bool nsk_valid(const NskMap& m, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const NecSignature& s = m.sig;
    if (s.h < 0 || s.r < 0 || s.k < 0) return fail("negative signature entry");
    if (s.sign == Orient::Minus && s.h < 1) return fail("sign - requires h >= 1");
    if (s.sign == Orient::Plus) {
        if (m.ab.size() != static_cast<std::size_t>(2 * s.h)) return fail("ab size mismatch");
        if (!m.d.empty()) return fail("d entries on an orientable signature");
    } else {
        if (m.d.size() != static_cast<std::size_t>(s.h)) return fail("d size mismatch");
        if (!m.ab.empty()) return fail("ab entries on a non-orientable signature");
    }
    if (m.e.size() != static_cast<std::size_t>(s.k)) return fail("e size mismatch");

    // Long relation x_1..x_r e_1..e_k (commutators / squares) maps to
    // r + n times the generator; it must vanish in Z/2.
    int n = 0;
    for (Z2 v : m.e) {
        if (v == Z2::Gen) ++n;
    }
    if ((s.r + n) % 2 != 0) return fail("long relation not respected");

    // Surjectivity: cone points and reflections already map to X.
    bool surjective = s.r > 0 || s.k > 0;
    for (Z2 v : m.ab) surjective = surjective || v == Z2::Gen;
    for (Z2 v : m.d) surjective = surjective || v == Z2::Gen;
    if (!surjective) return fail("not surjective onto Z/2");

    // The kernel surface must be non-orientable: some orientation-reversing
    // element of the NEC group has to survive into the kernel.  That holds
    // exactly when r >= 1, or some e_j maps to X, or some d_j maps to 1, or
    // (sign +) some handle generator maps to X.
    bool nonorientable_kernel = s.r > 0 || n > 0;
    for (Z2 v : m.d) nonorientable_kernel = nonorientable_kernel || v == Z2::One;
    for (Z2 v : m.ab) nonorientable_kernel = nonorientable_kernel || v == Z2::Gen;
    if (!nonorientable_kernel) return fail("kernel surface is orientable");
    return true;
}

int n_count(const NskMap& m) {
    int n = 0;
    for (Z2 v : m.e) {
        if (v == Z2::Gen) ++n;
    }
    return n;
}

int m_count(const NskMap& m) {
    if (m.sig.sign != Orient::Minus) {
        throw std::domain_error("m count is only defined for sign - signatures");
    }
    int c = 0;
    for (Z2 v : m.d) {
        if (v == Z2::Gen) ++c;
    }
    return c;
}

bool topologically_conjugate(const NskMap& a, const NskMap& b) {
    if (!(a.sig == b.sig)) return false;
    if (n_count(a) != n_count(b)) return false;
    if (a.sig.r == 0 && n_count(a) == 0 && a.sig.sign == Orient::Minus) {
        const int ma = m_count(a), mb = m_count(b);
        if (ma % 2 != mb % 2) return false;
        if ((ma == 0) != (mb == 0)) return false;
    }
    return true;
}

FixedPointProfile fixed_point_profile(const NskMap& m) {
    const int n = n_count(m);
    return FixedPointProfile{m.sig.r, n, m.sig.k - n};
}

NecSignature blowup(const NecSignature& s, BlowupKind kind) {
    if (kind == BlowupKind::Isolated) {
        if (s.r < 1) throw std::domain_error("isolated blowup needs a cone point");
        return NecSignature{s.h, s.sign, s.r - 1, s.k + 1};
    }
    if (s.k < 1) throw std::domain_error("curve blowup needs a reflection circle");
    return NecSignature{s.h, s.sign, s.r + 1, s.k};
}

std::string refined_blowup_name(RefinedBlowupKind k) {
    switch (k) {
        case RefinedBlowupKind::Isolated: return "isolated";
        case RefinedBlowupKind::OnOneSided: return "one_sided";
        case RefinedBlowupKind::OnTwoSided: return "two_sided";
    }
    return "?";
}

BlowupKind signature_kind(RefinedBlowupKind k) {
    return k == RefinedBlowupKind::Isolated ? BlowupKind::Isolated : BlowupKind::OnReflectionCurve;
}

FixedPointProfile refined_blowup(const FixedPointProfile& p, RefinedBlowupKind kind) {
    switch (kind) {
        case RefinedBlowupKind::Isolated:
            if (p.isolated < 1) throw std::domain_error("no isolated fixed point to blow up");
            return {p.isolated - 1, p.one_sided + 1, p.two_sided};
        case RefinedBlowupKind::OnOneSided:
            if (p.one_sided < 1) throw std::domain_error("no one-sided fixed circle");
            return {p.isolated + 1, p.one_sided - 1, p.two_sided + 1};
        case RefinedBlowupKind::OnTwoSided:
            if (p.two_sided < 1) throw std::domain_error("no two-sided fixed circle");
            return {p.isolated + 1, p.one_sided + 1, p.two_sided - 1};
    }
    throw std::domain_error("unknown blowup kind");
}

// ----------------------------------------------------------------- the table

namespace {
constexpr const char* kTableText = R"(# Z/2 epimorphism classes by quotient signature.
# genus | row | h sign r k | generator tokens ([ab|d] x e c; * = 1 or X)
2 | 1   | 0 + 2 1 | X X 1 X
2 | 2   | 0 + 0 2 | X X X X
2 | 3   | 1 - 2 0 | * X X
2 | 4   | 1 - 0 1 | 1 1 X
2 | 5   | 2 - 0 0 | 1 X
3 | 1   | 0 + 3 1 | X X X X X
3 | 2   | 0 + 1 2 | X X 1 X X
3 | 3   | 1 - 1 1 | * X X X
4 | 1   | 0 + 4 1 | X X X X 1 X
4 | 2,1 | 0 + 2 2 | X X 1 1 X X
4 | 2,2 | 0 + 2 2 | X X X X X X
4 | 3   | 0 + 0 3 | X X 1 X X X
4 | 4   | 1 - 4 0 | * X X X X
4 | 5   | 1 - 2 1 | * X X 1 X
4 | 6,1 | 1 - 0 2 | * X X X X
4 | 6,2 | 1 - 0 2 | 1 1 1 X X
4 | 7   | 2 - 2 0 | * * X X
4 | 8   | 2 - 0 1 | 1 * 1 X
4 | 9,1 | 3 - 0 0 | X 1 1
4 | 9,3 | 3 - 0 0 | X 1 X
4 | 10  | 1 + 0 1 | X * 1 X
5 | 1   | 0 + 5 1 | X X X X X X X
5 | 2   | 0 + 3 2 | X X X X 1 X X
5 | 3,1 | 0 + 1 3 | X X X X X X X
5 | 3,2 | 0 + 1 3 | X X 1 1 X X X
5 | 4   | 1 - 3 1 | * X X X X X
5 | 5   | 1 - 1 2 | * X X 1 X X
5 | 6   | 2 - 1 1 | * * X X X
5 | 7   | 1 + 1 1 | * * X X X
)";

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == '|') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    fields.push_back(cur);
    return fields;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return {};
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

}  // namespace

std::string nsk_table_text() { return kTableText; }

std::vector<NskTableRow> parse_nsk_table(std::string_view text) {
    std::vector<NskTableRow> rows;
    std::istringstream is{std::string(text)};
    std::string line;
    while (std::getline(is, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_fields(line);
        if (fields.size() != 4) throw std::runtime_error("table row needs 4 fields: " + line);
        NskTableRow row;
        row.genus = std::stoi(trim(fields[0]));
        row.row_id = trim(fields[1]);
        auto sig = split_ws(fields[2]);
        if (sig.size() != 4) throw std::runtime_error("bad signature field: " + line);
        row.sig.h = std::stoi(sig[0]);
        if (sig[1] != "+" && sig[1] != "-") throw std::runtime_error("bad sign: " + line);
        row.sig.sign = sig[1] == "+" ? Orient::Plus : Orient::Minus;
        row.sig.r = std::stoi(sig[2]);
        row.sig.k = std::stoi(sig[3]);
        row.name = "theta_{" + std::to_string(row.genus) + ";" + row.row_id + "}";
        row.tokens = split_ws(fields[3]);
        const int lead = row.sig.sign == Orient::Plus ? 2 * row.sig.h : row.sig.h;
        const std::size_t expect =
            static_cast<std::size_t>(lead + row.sig.r + 2 * row.sig.k);
        if (row.tokens.size() != expect) {
            throw std::runtime_error("token count mismatch in row " + row.name);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

const std::vector<NskTableRow>& nsk_table() {
    static const std::vector<NskTableRow> rows = parse_nsk_table(kTableText);
    return rows;
}

std::vector<NskMap> expand_row(const NskTableRow& row) {
    const int lead = row.sig.sign == Orient::Plus ? 2 * row.sig.h : row.sig.h;
    // Fixed positions must carry the forced values.
    for (int i = 0; i < row.sig.r; ++i) {
        if (row.tokens[static_cast<std::size_t>(lead + i)] != "X") {
            throw std::runtime_error("cone token must be X in " + row.name);
        }
    }
    for (int i = 0; i < row.sig.k; ++i) {
        if (row.tokens[static_cast<std::size_t>(lead + row.sig.r + row.sig.k + i)] != "X") {
            throw std::runtime_error("reflection token must be X in " + row.name);
        }
    }
    std::vector<std::size_t> wild;
    for (std::size_t i = 0; i < static_cast<std::size_t>(lead + row.sig.r + row.sig.k); ++i) {
        if (row.tokens[i] == "*") wild.push_back(i);
    }
    std::vector<NskMap> out;
    for (std::size_t mask = 0; mask < (static_cast<std::size_t>(1) << wild.size()); ++mask) {
        std::vector<Z2> lead_vals, e_vals;
        auto value_at = [&](std::size_t i) {
            const std::string& tok = row.tokens[i];
            if (tok == "1") return Z2::One;
            if (tok == "X") return Z2::Gen;
            if (tok == "*") {
                auto w = std::find(wild.begin(), wild.end(), i) - wild.begin();
                return (mask >> w) & 1 ? Z2::Gen : Z2::One;
            }
            throw std::runtime_error("bad token '" + tok + "' in " + row.name);
        };
        for (int i = 0; i < lead; ++i) lead_vals.push_back(value_at(static_cast<std::size_t>(i)));
        for (int i = 0; i < row.sig.k; ++i) {
            e_vals.push_back(value_at(static_cast<std::size_t>(lead + row.sig.r + i)));
        }
        NskMap m;
        m.sig = row.sig;
        if (row.sig.sign == Orient::Plus) {
            m.ab = std::move(lead_vals);
        } else {
            m.d = std::move(lead_vals);
        }
        m.e = std::move(e_vals);
        if (nsk_valid(m)) out.push_back(std::move(m));
    }
    return out;
}

std::vector<std::vector<std::size_t>> classify(const std::vector<NskMap>& maps) {
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < maps.size(); ++i) {
        bool placed = false;
        for (auto& cls : classes) {
            if (topologically_conjugate(maps[cls.front()], maps[i])) {
                cls.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({i});
    }
    return classes;
}

std::vector<NamedClass> class_directory(int genus) {
    std::vector<NamedClass> out;
    for (const NskTableRow& row : nsk_table()) {
        if (row.genus != genus) continue;
        std::vector<NskMap> maps = expand_row(row);
        if (maps.empty()) throw std::runtime_error("row expands to no valid map: " + row.name);
        auto classes = classify(maps);
        // Deterministic order: by m count of the representative (the only
        // splitting invariant used by the table).
        std::sort(classes.begin(), classes.end(),
                  [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
                      const NskMap& ma = maps[a.front()];
                      const NskMap& mb = maps[b.front()];
                      const int ka = ma.sig.sign == Orient::Minus ? m_count(ma) : 0;
                      const int kb = mb.sig.sign == Orient::Minus ? m_count(mb) : 0;
                      return ka < kb;
                  });
        for (std::size_t c = 0; c < classes.size(); ++c) {
            NamedClass nc;
            nc.label = std::to_string(genus) + ";" + row.row_id;
            if (classes.size() > 1) nc.label += "," + std::to_string(c + 1);
            nc.sig = row.sig;
            nc.representative = maps[classes[c].front()];
            nc.profile = fixed_point_profile(nc.representative);
            out.push_back(std::move(nc));
        }
    }
    return out;
}

std::vector<FlowEdge> blowup_flow(int source_genus) {
    if (source_genus != 2 && source_genus != 4) {
        throw std::domain_error("blowup flow is tabulated from genus 2 and 4");
    }
    const auto src = class_directory(source_genus);
    const auto dst = class_directory(source_genus + 1);
    std::vector<FlowEdge> edges;
    for (const NamedClass& s : src) {
        for (RefinedBlowupKind kind : {RefinedBlowupKind::Isolated, RefinedBlowupKind::OnOneSided,
                                       RefinedBlowupKind::OnTwoSided}) {
            bool applicable = (kind == RefinedBlowupKind::Isolated && s.profile.isolated > 0) ||
                              (kind == RefinedBlowupKind::OnOneSided && s.profile.one_sided > 0) ||
                              (kind == RefinedBlowupKind::OnTwoSided && s.profile.two_sided > 0);
            if (!applicable) continue;
            const NecSignature sig2 = blowup(s.sig, signature_kind(kind));
            const FixedPointProfile prof2 = refined_blowup(s.profile, kind);
            const NamedClass* target = nullptr;
            for (const NamedClass& t : dst) {
                if (t.sig == sig2 && t.profile == prof2) {
                    if (target) throw std::runtime_error("ambiguous blowup target from " + s.label);
                    target = &t;
                }
            }
            if (!target) throw std::runtime_error("no blowup target from " + s.label);
            edges.push_back(FlowEdge{s.label, kind, target->label});
        }
    }
    return edges;
}

}  // namespace nsurf
