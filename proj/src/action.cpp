#include "nsurf/action.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace nsurf {

namespace {

bool freely_conjugate(const Word& a, const Word& b) {
    Word ca = cyc_reduce(a), cb = cyc_reduce(b);
    if (ca.size() != cb.size()) return false;
    if (ca.empty()) return true;
    Word dbl = ca;
    dbl.insert(dbl.end(), ca.begin(), ca.end());
    for (std::size_t s = 0; s < ca.size(); ++s) {
        if (std::equal(cb.begin(), cb.end(), dbl.begin() + static_cast<long>(s))) return true;
    }
    return false;
}

// Pinned generator images.  For the twist t_i about alpha_i = x_i x_{i+1}
// and the slide y = Y_{mu_1, alpha_1}, the positive letter is the twist
// direction fixed throughout the catalog; the beta twist images are given
// at genus >= 4 and fix x_j for j >= 5.
std::vector<Word> twist_images(int g, int i, int sign) {
    std::vector<Word> img(static_cast<std::size_t>(g));
    for (int j = 1; j <= g; ++j) img[static_cast<std::size_t>(j - 1)] = {j};
    if (sign > 0) {
        img[static_cast<std::size_t>(i - 1)] = {i, -(i + 1), -i};
        img[static_cast<std::size_t>(i)] = {i, i + 1, i + 1};
    } else {
        img[static_cast<std::size_t>(i - 1)] = {i, i, i + 1};
        img[static_cast<std::size_t>(i)] = {-(i + 1), -i, i + 1};
    }
    return img;
}

std::vector<Word> slide_images(int g, int sign) {
    std::vector<Word> img(static_cast<std::size_t>(g));
    for (int j = 1; j <= g; ++j) img[static_cast<std::size_t>(j - 1)] = {j};
    if (sign > 0) {
        img[0] = {1, 1, 2, -1, -2, -1, -1};
        img[1] = {1, 1, 2};
    } else {
        img[0] = {-2, -1, 2};
        img[1] = {-2, 1, 1, 2, 2};
    }
    return img;
}

std::vector<Word> beta_images(int g, int sign) {
    std::vector<Word> img(static_cast<std::size_t>(g));
    for (int j = 1; j <= g; ++j) img[static_cast<std::size_t>(j - 1)] = {j};
    if (sign > 0) {
        img[0] = {1, -4, -3, -2, -1};
        img[1] = {1, 2, 3, 4, 2, 3, 4, 1, 2, -4, -3, -2, -1};
        img[2] = {1, 2, 3, 4, -2, -1, -4, -4, -3, -2, -1};
        img[3] = {1, 2, 3, 4, 4};
    } else {
        img[0] = {1, 1, 2, 3, 4};
        img[1] = {-4, -3, -2, -1, -1, -4, -3, 1, 2, 3, 4};
        img[2] = {-4, -3, -2, -1, 3, 4, 1, 2, 3, 1, 2, 3, 4};
        img[3] = {-4, -3, -2, -1, 4};
    }
    return img;
}

std::vector<long long> raw_ab(const Word& w, int g) {
    std::vector<long long> v(static_cast<std::size_t>(g), 0);
    for (int c : w) v[static_cast<std::size_t>(std::abs(c) - 1)] += c > 0 ? 1 : -1;
    return v;
}

}  // namespace

Automorphism::Automorphism(const SurfaceGroup& G, std::vector<Word> img, std::vector<Word> inv)
    : G_(&G), img_(std::move(img)), inv_(std::move(inv)) {}

Automorphism Automorphism::identity(const SurfaceGroup& G) {
    std::vector<Word> img(static_cast<std::size_t>(G.genus()));
    for (int j = 1; j <= G.genus(); ++j) img[static_cast<std::size_t>(j - 1)] = {j};
    return Automorphism(G, img, img);
}

const Automorphism& Automorphism::generator(const SurfaceGroup& G, const GenLetter& l) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int, int>, Automorphism> cache;
    if (!is_admissible(l, G.genus())) {
        throw std::invalid_argument("letter '" + print_letter(l) + "' is not defined at genus " +
                                    std::to_string(G.genus()));
    }
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(G.genus(), static_cast<int>(l.kind), l.index, l.sign);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const int g = G.genus();
    std::vector<Word> img, inv;
    switch (l.kind) {
        case GenKind::Twist:
            img = twist_images(g, l.index, l.sign);
            inv = twist_images(g, l.index, -l.sign);
            break;
        case GenKind::CrosscapSlide:
            img = slide_images(g, l.sign);
            inv = slide_images(g, -l.sign);
            break;
        case GenKind::BetaTwist:
            img = beta_images(g, l.sign);
            inv = beta_images(g, -l.sign);
            break;
    }
    Automorphism a(G, std::move(img), std::move(inv));
    if (!a.relator_well_defined() || !a.inverse_exact()) {
        throw std::logic_error("generator image table failed validation");
    }
    return cache.emplace(key, std::move(a)).first->second;
}

const Word& Automorphism::image(int i) const { return img_.at(static_cast<std::size_t>(i - 1)); }
const Word& Automorphism::inverse_image(int i) const {
    return inv_.at(static_cast<std::size_t>(i - 1));
}

namespace {
Word map_word(const std::vector<Word>& images, const Word& w) {
    Word out;
    for (int c : w) {
        const Word& im = images.at(static_cast<std::size_t>(std::abs(c) - 1));
        if (c > 0) {
            out.insert(out.end(), im.begin(), im.end());
        } else {
            for (auto it = im.rbegin(); it != im.rend(); ++it) out.push_back(-*it);
        }
    }
    return freduce(out);
}
}  // namespace

Word Automorphism::apply(const Word& w) const { return map_word(img_, w); }
Word Automorphism::apply_inverse(const Word& w) const { return map_word(inv_, w); }

Automorphism Automorphism::after(const Automorphism& rhs) const {
    if (G_ != rhs.G_) throw std::invalid_argument("composition across groups");
    const int g = G_->genus();
    std::vector<Word> img(static_cast<std::size_t>(g)), inv(static_cast<std::size_t>(g));
    for (int i = 1; i <= g; ++i) {
        img[static_cast<std::size_t>(i - 1)] = G_->pi1_reduce(apply(rhs.image(i)));
        inv[static_cast<std::size_t>(i - 1)] =
            G_->pi1_reduce(rhs.apply_inverse(inverse_image(i)));
    }
    return Automorphism(*G_, std::move(img), std::move(inv));
}

Automorphism Automorphism::inverse() const { return Automorphism(*G_, inv_, img_); }

bool Automorphism::relator_well_defined() const {
    const Word r = ng_relator(G_->genus());
    const Word image = apply(r);
    return freely_conjugate(image, r) || freely_conjugate(image, winv(r));
}

bool Automorphism::inverse_exact() const {
    for (int i = 1; i <= G_->genus(); ++i) {
        if (!G_->eq(apply(inverse_image(i)), Word{i})) return false;
        if (!G_->eq(apply_inverse(image(i)), Word{i})) return false;
    }
    return true;
}

bool operator==(const Automorphism& a, const Automorphism& b) {
    if (a.G_->genus() != b.G_->genus()) return false;
    for (int i = 1; i <= a.G_->genus(); ++i) {
        if (!a.G_->eq(a.image(i), b.image(i))) return false;
    }
    return true;
}

Automorphism evaluate(const SurfaceGroup& G, const GeneratorWord& w) {
    if (w.genus != G.genus()) throw std::invalid_argument("word/group genus mismatch");
    Automorphism acc = Automorphism::identity(G);
    for (const GenLetter& l : w.letters) {
        acc = acc.after(Automorphism::generator(G, l));
    }
    return acc;
}

std::vector<std::vector<long long>> homology_matrix_z(const Automorphism& phi) {
    const int g = phi.group().genus();
    std::vector<std::vector<long long>> m(static_cast<std::size_t>(g),
                                          std::vector<long long>(static_cast<std::size_t>(g), 0));
    for (int j = 1; j <= g; ++j) {
        auto col = raw_ab(phi.image(j), g);
        for (int i = 0; i < g; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] =
            col[static_cast<std::size_t>(i)];
    }
    return m;
}

std::vector<std::vector<int>> homology_matrix_z2(const Automorphism& phi) {
    auto mz = homology_matrix_z(phi);
    std::vector<std::vector<int>> m(mz.size(), std::vector<int>(mz.size(), 0));
    for (std::size_t i = 0; i < mz.size(); ++i) {
        for (std::size_t j = 0; j < mz.size(); ++j) {
            m[i][j] = static_cast<int>(((mz[i][j] % 2) + 2) % 2);
        }
    }
    return m;
}

bool z_matrix_is_identity(const std::vector<std::vector<long long>>& m) {
    const std::size_t g = m.size();
    for (std::size_t j = 0; j < g; ++j) {
        long long d0 = m[0][j] - (j == 0 ? 1 : 0);
        if (((d0 % 2) + 2) % 2 != 0) return false;
        for (std::size_t i = 1; i < g; ++i) {
            long long d = m[i][j] - (i == j ? 1 : 0);
            if (d != d0) return false;
        }
    }
    return true;
}

bool z2_matrix_is_identity(const std::vector<std::vector<int>>& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (m[i][j] % 2 != (i == j ? 1 : 0)) return false;
        }
    }
    return true;
}

std::vector<std::vector<int>> z2_matrix_square(const std::vector<std::vector<int>>& m) {
    const std::size_t g = m.size();
    std::vector<std::vector<int>> out(g, std::vector<int>(g, 0));
    for (std::size_t i = 0; i < g; ++i) {
        for (std::size_t j = 0; j < g; ++j) {
            int s = 0;
            for (std::size_t k = 0; k < g; ++k) s ^= (m[i][k] & m[k][j] & 1);
            out[i][j] = s;
        }
    }
    return out;
}

namespace {

InnerResult inner_klein(const Automorphism& phi) {
    const SurfaceGroup& G = phi.group();
    auto [m1, n1] = G.klein_nf(phi.image(1));
    if (n1 != 1 || ((m1 % 2) + 2) % 2 != 0) return {Tri::No, {}, "klein_normal_form"};
    auto [mt, nt] = G.klein_nf(wcat(phi.image(1), phi.image(2)));
    if (nt != 0 || (mt != 1 && mt != -1)) return {Tri::No, {}, "klein_normal_form"};
    // phi(s) = t^{m1} s and phi(t) = t^{mt}: the conjugator is t^{m1/2} s^d
    // with d = 1 exactly when t is inverted.
    Word c = wpow(Word{1, 2}, static_cast<int>(m1 / 2));
    if (mt == -1) c = wcat(c, Word{1});
    for (int i = 1; i <= 2; ++i) {
        if (!G.eq(phi.image(i), wconj(c, Word{i}))) {
            throw std::logic_error("genus-2 inner witness failed verification");
        }
    }
    return {Tri::Yes, c, {}};
}

}  // namespace

InnerResult is_inner(const Automorphism& phi, int power_bound) {
    const SurfaceGroup& G = phi.group();
    const int g = G.genus();
    if (g == 2) return inner_klein(phi);

    if (!z_matrix_is_identity(homology_matrix_z(phi))) return {Tri::No, {}, "homology_z"};

    std::vector<Word> candidates;
    auto [d, core] = G.conj_reduce(phi.image(1));
    if (core == Word{1}) candidates.push_back(d);

    if (candidates.empty() && g == 3) {
        // Bounded conjugator search on the x1 image.
        std::vector<Word> level{{}};
        for (int depth = 0; depth < 5 && candidates.empty(); ++depth) {
            std::vector<Word> next;
            for (const Word& c : level) {
                for (int l : {1, -1, 2, -2, 3, -3}) {
                    Word c2 = c;
                    c2.push_back(l);
                    c2 = freduce(c2);
                    if (c2.size() != c.size() + 1) continue;
                    next.push_back(c2);
                }
            }
            for (const Word& c : next) {
                if (G.eq(phi.image(1), wconj(c, Word{1}))) candidates.push_back(c);
            }
            level = std::move(next);
        }
    }

    for (const Word& c : candidates) {
        for (int k = -power_bound; k <= power_bound; ++k) {
            Word cc = wcat(c, wpow(Word{1}, k));
            bool ok = true;
            for (int j = 1; j <= g && ok; ++j) {
                ok = G.eq(phi.image(j), wconj(cc, Word{j}));
            }
            if (ok) return {Tri::Yes, G.pi1_reduce(cc), {}};
        }
    }
    return {Tri::Inconclusive, {}, {}};
}

Tri outer_equal(const SurfaceGroup& G, const GeneratorWord& u, const GeneratorWord& v,
                int power_bound) {
    return is_inner(evaluate(G, concat(u, invert(v))), power_bound).verdict;
}

Tri is_involution(const SurfaceGroup& G, const GeneratorWord& w, int power_bound) {
    return is_inner(evaluate(G, concat(w, w)), power_bound).verdict;
}

std::pair<int, int> genus2_class(const GeneratorWord& w) {
    int t = 0, y = 0;
    for (const GenLetter& l : w.letters) {
        if (l.kind == GenKind::Twist) ++t;
        if (l.kind == GenKind::CrosscapSlide) ++y;
    }
    return {t % 2, y % 2};
}

// ------------------------------------------------------------------ curves

Word CurveClass::word() const {
    Word w;
    for (int i : indices) w.push_back(i);
    return w;
}

std::string CurveClass::name() const {
    if (indices.size() == 1) return "m" + std::to_string(indices[0]);
    if (indices.size() == 2 && indices[1] == indices[0] + 1) return "a" + std::to_string(indices[0]);
    if (indices == std::vector<int>{1, 2, 3, 4}) return "b";
    std::string s = "g";
    for (int i : indices) s += std::to_string(i);
    return s;
}

int CurveClass::sides(int) const { return indices.size() % 2 == 1 ? 1 : 2; }

CurveClass CurveClass::mu(int i) { return CurveClass{{i}}; }
CurveClass CurveClass::alpha(int i) { return CurveClass{{i, i + 1}}; }
CurveClass CurveClass::beta() { return CurveClass{{1, 2, 3, 4}}; }

std::optional<CurveClass> CurveClass::parse(std::string_view text, int genus) {
    if (text.empty()) return std::nullopt;
    auto digits_of = [&](std::string_view d) -> std::optional<std::vector<int>> {
        std::vector<int> out;
        for (char ch : d) {
            if (!std::isdigit(static_cast<unsigned char>(ch)) || ch == '0') return std::nullopt;
            out.push_back(ch - '0');
        }
        return out;
    };
    CurveClass c;
    if (text == "b") {
        c = beta();
    } else if (text[0] == 'm' || text[0] == 'a' || text[0] == 'g') {
        auto idx = digits_of(text.substr(1));
        if (!idx || idx->empty()) return std::nullopt;
        if (text[0] == 'm') {
            if (idx->size() != 1) return std::nullopt;
            c = mu((*idx)[0]);
        } else if (text[0] == 'a') {
            if (idx->size() != 1) return std::nullopt;
            c = alpha((*idx)[0]);
        } else {
            c = CurveClass{*idx};
        }
    } else {
        return std::nullopt;
    }
    for (std::size_t i = 0; i < c.indices.size(); ++i) {
        if (c.indices[i] < 1 || c.indices[i] > genus) return std::nullopt;
        if (i > 0 && c.indices[i] <= c.indices[i - 1]) return std::nullopt;
    }
    return c;
}

Word apply_to_class(const Automorphism& phi, const CurveClass& c) {
    return phi.group().pi1_reduce(phi.apply(c.word()));
}

ConjugacyResult class_image_is(const Automorphism& phi, const CurveClass& curve,
                               const CurveClass& target, bool inverted, int bound) {
    Word img = apply_to_class(phi, curve);
    Word t = target.word();
    if (inverted) t = winv(t);
    return phi.group().is_conjugate(img, t, bound);
}

std::optional<std::string> identify_class(const SurfaceGroup& G, const Word& w, int bound) {
    const int g = G.genus();
    std::vector<std::vector<int>> subsets;
    for (int mask = 1; mask < (1 << g); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < g; ++i) {
            if (mask & (1 << i)) s.push_back(i + 1);
        }
        subsets.push_back(std::move(s));
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    for (const auto& s : subsets) {
        CurveClass c{s};
        Word t = c.word();
        if (G.is_conjugate(w, t, bound).verdict == Tri::Yes) return c.name();
        if (G.is_conjugate(w, winv(t), bound).verdict == Tri::Yes) return c.name() + "^-1";
    }
    return std::nullopt;
}

}  // namespace nsurf
