#include "nsurf/pi1.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace nsurf {

// ---------------------------------------------------------------- free words

Word freduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (int c : w) {
        if (!out.empty() && out.back() == -c) {
            out.pop_back();
        } else {
            out.push_back(c);
        }
    }
    return out;
}

Word winv(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

Word wcat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return freduce(out);
}

Word wconj(const Word& u, const Word& w) { return wcat(wcat(u, w), winv(u)); }

Word wpow(const Word& w, int n) {
    Word base = n < 0 ? winv(w) : w;
    int k = n < 0 ? -n : n;
    Word out;
    for (int i = 0; i < k; ++i) out.insert(out.end(), base.begin(), base.end());
    return freduce(out);
}

Word cyc_reduce(const Word& w) {
    Word v = freduce(w);
    std::size_t a = 0, b = v.size();
    while (b - a >= 2 && v[a] == -v[b - 1]) {
        ++a;
        --b;
    }
    return Word(v.begin() + static_cast<long>(a), v.begin() + static_cast<long>(b));
}

Word ng_relator(int g) {
    Word r;
    for (int i = 1; i <= g; ++i) {
        r.push_back(i);
        r.push_back(i);
    }
    return r;
}

std::string word_str(const Word& w) {
    if (w.empty()) return "e";
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ' ';
        os << w[i];
    }
    return os.str();
}

Word word_from_str(std::string_view s) {
    Word out;
    std::istringstream is{std::string(s)};
    std::string tok;
    while (is >> tok) {
        if (tok == "e") continue;
        out.push_back(std::stoi(tok));
    }
    return out;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int c : w) {
        h ^= static_cast<std::size_t>(static_cast<unsigned int>(c));
        h *= 1099511628211ull;
    }
    return h;
}

std::string HomologyClassZ::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

std::string tri_name(Tri t) {
    switch (t) {
        case Tri::Yes: return "yes";
        case Tri::No: return "no";
        case Tri::Inconclusive: return "inconclusive";
    }
    return "?";
}

bool shortlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        int ka = std::abs(a[i]) * 2 + (a[i] < 0 ? 1 : 0);
        int kb = std::abs(b[i]) * 2 + (b[i] < 0 ? 1 : 0);
        if (ka != kb) return ka < kb;
    }
    return false;
}

namespace {

std::vector<Word> rotations(const Word& w) {
    std::vector<Word> out;
    for (std::size_t r = 0; r < w.size(); ++r) {
        Word rot(w.begin() + static_cast<long>(r), w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(r));
        out.push_back(std::move(rot));
    }
    return out;
}

}  // namespace

// ------------------------------------------------------------------ SCEngine

namespace detail {

SCEngine::SCEngine(int nletters, Word relator) : n_(nletters), r_(std::move(relator)) {
    rlen_ = static_cast<int>(r_.size());
    if (rlen_ % 2 != 0) throw std::invalid_argument("relator length must be even");
    half_ = rlen_ / 2;
    for (const Word& rel : {r_, winv(r_)}) {
        for (const Word& rot : rotations(rel)) {
            for (int L = half_; L <= rlen_; ++L) {
                Word piece(rot.begin(), rot.begin() + L);
                Word rest = winv(Word(rot.begin() + L, rot.end()));
                if (L > half_) {
                    auto it = over_.find(piece);
                    if (it == over_.end() || rest.size() < it->second.size()) {
                        over_[piece] = rest;
                    }
                } else {
                    swap_.emplace(std::move(piece), std::move(rest));
                }
            }
        }
    }
}

Word SCEngine::dehn(Word w) const {
    w = freduce(w);
    bool changed = true;
    while (changed) {
        changed = false;
        const int len = static_cast<int>(w.size());
        for (int s = 0; s < len && !changed; ++s) {
            const int max_l = std::min(rlen_, len - s);
            for (int L = max_l; L > half_; --L) {
                Word piece(w.begin() + s, w.begin() + s + L);
                auto it = over_.find(piece);
                if (it != over_.end()) {
                    Word next(w.begin(), w.begin() + s);
                    next.insert(next.end(), it->second.begin(), it->second.end());
                    next.insert(next.end(), w.begin() + s + L, w.end());
                    w = freduce(next);
                    changed = true;
                    break;
                }
            }
        }
    }
    return w;
}

Word SCEngine::nf(Word w) const {
    w = dehn(std::move(w));
    for (;;) {
        // Explore the closure of `w` under length-preserving half-relator
        // swaps; if any swap exposes a shortening, restart from the shorter
        // word, otherwise return the shortlex-least element of the closure.
        std::set<Word, bool (*)(const Word&, const Word&)> seen(shortlex_less);
        seen.insert(w);
        std::deque<Word> frontier{w};
        std::optional<Word> shorter;
        while (!frontier.empty() && !shorter) {
            Word u = std::move(frontier.front());
            frontier.pop_front();
            const int len = static_cast<int>(u.size());
            for (int s = 0; s + half_ <= len && !shorter; ++s) {
                Word piece(u.begin() + s, u.begin() + s + half_);
                auto it = swap_.find(piece);
                if (it == swap_.end()) continue;
                Word v(u.begin(), u.begin() + s);
                v.insert(v.end(), it->second.begin(), it->second.end());
                v.insert(v.end(), u.begin() + s + half_, u.end());
                v = freduce(v);
                if (v.size() < u.size()) {
                    shorter = dehn(std::move(v));
                    break;
                }
                v = dehn(std::move(v));
                if (v.size() < u.size()) {
                    shorter = std::move(v);
                    break;
                }
                if (seen.insert(v).second) frontier.push_back(std::move(v));
            }
        }
        if (!shorter) return *seen.begin();
        w = std::move(*shorter);
    }
}

bool SCEngine::is_trivial_cyclic(const Word& word) const {
    Word w = dehn(word);
    while (!w.empty()) {
        w = cyc_reduce(w);
        if (w.empty()) return true;
        const int n = static_cast<int>(w.size());
        Word dbl = w;
        dbl.insert(dbl.end(), w.begin(), w.end());
        bool hit = false;
        for (int s = 0; s < n && !hit; ++s) {
            const int max_l = std::min(rlen_, n);
            for (int L = max_l; L > half_; --L) {
                Word piece(dbl.begin() + s, dbl.begin() + s + L);
                auto it = over_.find(piece);
                if (it != over_.end()) {
                    Word next = it->second;
                    next.insert(next.end(), dbl.begin() + s + L, dbl.begin() + s + n);
                    w = freduce(next);
                    hit = true;
                    break;
                }
            }
        }
        if (!hit) return false;
        w = dehn(std::move(w));
    }
    return true;
}

}  // namespace detail

// -------------------------------------------------------------- SurfaceGroup

const SurfaceGroup& SurfaceGroup::get(int g) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<SurfaceGroup>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(g);
    if (it == cache.end()) {
        it = cache.emplace(g, std::make_unique<SurfaceGroup>(g)).first;
    }
    return *it->second;
}

SurfaceGroup::SurfaceGroup(int g) : g_(g) {
    if (g < 2 || g > 5) throw std::invalid_argument("genus must be in 2..5");
    const Word r = ng_relator(g);
    own_rlen_ = static_cast<int>(r.size());
    const int half = own_rlen_ / 2;
    for (const Word& rel : {r, winv(r)}) {
        for (const Word& rot : rotations(rel)) {
            for (int L = half + 1; L <= own_rlen_; ++L) {
                Word piece(rot.begin(), rot.begin() + L);
                Word rest = winv(Word(rot.begin() + L, rot.end()));
                auto it = own_subs_.find(piece);
                if (it == own_subs_.end() || rest.size() < it->second.size()) {
                    own_subs_[piece] = rest;
                }
            }
        }
    }
    if (g >= 4) {
        own_.emplace(g, r);
    } else if (g == 3) {
        // pi1 of the orientable double cover Sigma_2, with the deck data
        // folded into cover_tokens().
        cover_.emplace(4, Word{-3, -4, -1, -2, 1, 2, 3, 4});
    }
}

const detail::SCEngine& SurfaceGroup::cover_engine() const {
    if (!cover_) throw std::logic_error("cover engine only exists at genus 3");
    return *cover_;
}

Word SurfaceGroup::cover_tokens(const Word& word) const {
    // Rewrites an even-length word in pi1(N_3) into the cover alphabet
    // p=1, q=2, s=3, t=4 via the two coset states of the index-2 subgroup.
    if (!cover_) throw std::logic_error("cover_tokens only exists at genus 3");
    static const Word kV1 = {-3, -4, -1, -2};
    static const Word kV1i = winv(kV1);
    Word out;
    int state = 0;
    for (int c : word) {
        const int i = std::abs(c);
        if (c > 0) {
            if (state == 0) {
                if (i == 2) out.push_back(1);
                else if (i == 3) out.push_back(3);
                state = 1;
            } else {
                if (i == 1) out.insert(out.end(), kV1.begin(), kV1.end());
                else if (i == 2) out.push_back(2);
                else out.push_back(4);
                state = 0;
            }
        } else {
            if (state == 0) {
                if (i == 1) out.insert(out.end(), kV1i.begin(), kV1i.end());
                else if (i == 2) out.push_back(-2);
                else out.push_back(-4);
                state = 1;
            } else {
                if (i == 2) out.push_back(-1);
                else if (i == 3) out.push_back(-3);
                state = 0;
            }
        }
    }
    if (state != 0) throw std::logic_error("cover_tokens expects an even word");
    return freduce(out);
}

std::pair<long long, long long> SurfaceGroup::klein_nf(const Word& word) const {
    // Normal form t^m s^n in pi1(N_2) with t = x1 x2 and s = x1, using
    // s t s^{-1} = t^{-1}.
    if (g_ != 2) throw std::logic_error("klein_nf only exists at genus 2");
    long long m = 0, n = 0;
    auto even = [](long long x) { return ((x % 2) + 2) % 2 == 0; };
    for (int c : word) {
        switch (c) {
            case 1: n += 1; break;
            case -1: n -= 1; break;
            case 2:
                n -= 1;
                m += even(n) ? 1 : -1;
                break;
            case -2:
                m -= even(n) ? 1 : -1;
                n += 1;
                break;
            default:
                throw std::invalid_argument("letter out of range at genus 2");
        }
    }
    return {m, n};
}

NormalForm SurfaceGroup::nf(const Word& word) const {
    Word w = freduce(word);
    if (g_ == 2) {
        auto [m, n] = klein_nf(w);
        return {2, m, n};
    }
    if (g_ == 3) {
        const long long parity = static_cast<long long>(w.size() % 2);
        Word even = w;
        if (parity) {
            even.insert(even.begin(), -1);
            even = freduce(even);
        }
        Word core = cover_->nf(cover_tokens(even));
        NormalForm out{1, parity};
        for (int c : core) out.push_back(c);
        return out;
    }
    Word core = own_->nf(w);
    NormalForm out{0};
    for (int c : core) out.push_back(c);
    return out;
}

std::string SurfaceGroup::nf_str(const Word& w) const {
    NormalForm f = nf(w);
    std::ostringstream os;
    if (g_ == 2) {
        os << "t^" << f[1] << " s^" << f[2];
    } else if (g_ == 3) {
        os << (f[1] ? "odd:" : "even:");
        for (std::size_t i = 2; i < f.size(); ++i) os << ' ' << f[i];
    } else {
        for (std::size_t i = 1; i < f.size(); ++i) os << (i > 1 ? " " : "") << f[i];
    }
    return os.str();
}

bool SurfaceGroup::is_identity(const Word& word) const {
    Word w = freduce(word);
    if (w.empty()) return true;
    if (g_ == 2) {
        auto [m, n] = klein_nf(w);
        return m == 0 && n == 0;
    }
    if (g_ == 3) {
        if (w.size() % 2 != 0) return false;
        return cover_->is_trivial_cyclic(cover_tokens(w));
    }
    return own_->is_trivial_cyclic(w);
}

bool SurfaceGroup::eq(const Word& u, const Word& v) const { return is_identity(wcat(u, winv(v))); }

Word SurfaceGroup::pi1_reduce(Word w) const {
    w = freduce(w);
    const int n = own_rlen_;
    int s = 0;
    while (s < static_cast<int>(w.size())) {
        bool hit = false;
        const int max_l = std::min(n, static_cast<int>(w.size()) - s);
        for (int L = max_l; L > n / 2; --L) {
            Word piece(w.begin() + s, w.begin() + s + L);
            auto it = own_subs_.find(piece);
            if (it != own_subs_.end()) {
                const int old = static_cast<int>(w.size());
                Word next(w.begin(), w.begin() + s);
                next.insert(next.end(), it->second.begin(), it->second.end());
                next.insert(next.end(), w.begin() + s + L, w.end());
                w = freduce(next);
                s = std::max(0, s - n - (old - static_cast<int>(w.size())));
                hit = true;
                break;
            }
        }
        if (!hit) ++s;
    }
    return w;
}

bool SurfaceGroup::dehn_step(Word& w) const {
    const int len = static_cast<int>(w.size());
    for (int s = 0; s < len; ++s) {
        const int max_l = std::min(own_rlen_, len - s);
        for (int L = max_l; L > own_rlen_ / 2; --L) {
            Word piece(w.begin() + s, w.begin() + s + L);
            auto it = own_subs_.find(piece);
            if (it != own_subs_.end()) {
                Word next(w.begin(), w.begin() + s);
                next.insert(next.end(), it->second.begin(), it->second.end());
                next.insert(next.end(), w.begin() + s + L, w.end());
                w = freduce(next);
                return true;
            }
        }
    }
    return false;
}

std::pair<Word, Word> SurfaceGroup::conj_reduce(const Word& word) const {
    Word d;
    Word v = freduce(word);
    bool progress = true;
    while (progress) {
        progress = false;
        while (v.size() >= 2 && v.front() == -v.back()) {
            d.push_back(v.front());
            v.erase(v.begin());
            v.pop_back();
            progress = true;
        }
        Word step = v;
        if (dehn_step(step)) {
            v = std::move(step);
            progress = true;
            continue;
        }
        for (std::size_t r = 1; r < v.size(); ++r) {
            Word rot(v.begin() + static_cast<long>(r), v.end());
            rot.insert(rot.end(), v.begin(), v.begin() + static_cast<long>(r));
            if (dehn_step(rot)) {
                Word pre(v.begin(), v.begin() + static_cast<long>(r));
                d = wcat(d, pre);
                v = std::move(rot);
                progress = true;
                break;
            }
        }
    }
    return {freduce(d), v};
}

HomologyClassZ SurfaceGroup::abelianize_z(const Word& w) const {
    std::vector<long long> v(static_cast<std::size_t>(g_), 0);
    for (int c : w) {
        const int i = std::abs(c);
        if (i < 1 || i > g_) throw std::invalid_argument("letter out of range");
        v[static_cast<std::size_t>(i - 1)] += c > 0 ? 1 : -1;
    }
    // Canonical representative modulo (2,2,...,2).
    long long last = v.back();
    long long rem = ((last % 2) + 2) % 2;
    long long k = (last - rem) / 2;
    for (auto& x : v) x -= 2 * k;
    return HomologyClassZ{std::move(v)};
}

std::vector<int> SurfaceGroup::abelianize_z2(const Word& w) const {
    HomologyClassZ h = abelianize_z(w);
    std::vector<int> out;
    out.reserve(h.v.size());
    for (long long x : h.v) out.push_back(static_cast<int>(((x % 2) + 2) % 2));
    return out;
}

int SurfaceGroup::orientation_character(const Word& w) const {
    long long s = 0;
    for (int c : w) s += c > 0 ? 1 : -1;
    return static_cast<int>(((s % 2) + 2) % 2);
}

namespace {

// Full cyclic Dehn reduction: shrinks until no over-half piece appears in
// any rotation.  Conjugation-invariant; at g >= 4 the final length is a
// conjugacy invariant of C'(1/6) one-relator groups.
Word cyclic_geodesic(const detail::SCEngine& eng, Word w) {
    w = eng.dehn(std::move(w));
    for (;;) {
        w = cyc_reduce(w);
        if (w.empty()) return w;
        const int n = static_cast<int>(w.size());
        Word dbl = w;
        dbl.insert(dbl.end(), w.begin(), w.end());
        bool hit = false;
        for (int s = 0; s < n && !hit; ++s) {
            Word rot(dbl.begin() + s, dbl.begin() + s + n);
            Word reduced = eng.dehn(rot);
            if (reduced.size() < rot.size()) {
                w = std::move(reduced);
                hit = true;
            }
        }
        if (!hit) return w;
    }
}

struct SearchSide {
    std::deque<std::pair<Word, Word>> frontier;  // (current word, prefix p)
    std::unordered_map<Word, Word, WordHash> seen;  // nf key (as Word) -> prefix
    int depth = 0;
};

Word nf_key(const SurfaceGroup& G, const Word& w) {
    NormalForm f = G.nf(w);
    Word k;
    k.reserve(f.size());
    for (long long c : f) k.push_back(static_cast<int>(c));
    return k;
}

}  // namespace

ConjugacyResult SurfaceGroup::is_conjugate(const Word& uu, const Word& vv, int bound) const {
    Word u = freduce(uu), v = freduce(vv);
    auto verified = [&](Word c) -> ConjugacyResult {
        c = pi1_reduce(std::move(c));
        if (!eq(wconj(c, u), v)) throw std::logic_error("conjugacy witness failed verification");
        return ConjugacyResult{Tri::Yes, std::move(c), {}};
    };
    const bool tu = is_identity(u), tv = is_identity(v);
    if (tu != tv) return {Tri::No, {}, "word_problem_triviality"};
    if (tu && tv) return verified({});

    if (g_ == 2) {
        auto [m1, n1] = klein_nf(u);
        auto [m2, n2] = klein_nf(v);
        auto even = [](long long x) { return ((x % 2) + 2) % 2 == 0; };
        if (n1 != n2) return {Tri::No, {}, "klein_normal_form"};
        const Word t = {1, 2}, s = {1};
        if (!even(n1)) {
            if (!even(m1 - m2)) return {Tri::No, {}, "klein_normal_form"};
            return verified(wpow(t, static_cast<int>((m2 - m1) / 2)));
        }
        if (m1 == m2) return verified({});
        if (m1 == -m2) return verified(s);
        return {Tri::No, {}, "klein_normal_form"};
    }

    if (eq(u, v)) return verified({});
    if (!(abelianize_z(u) == abelianize_z(v))) return {Tri::No, {}, "homology_z"};
    if (g_ >= 4) {
        Word cu = cyclic_geodesic(*own_, u);
        Word cv = cyclic_geodesic(*own_, v);
        if (cu.size() != cv.size()) return {Tri::No, {}, "cyclic_geodesic_length"};
    }

    auto [du, core_u] = conj_reduce(u);
    auto [dv, core_v] = conj_reduce(v);
    if (eq(core_u, core_v)) return verified(wcat(dv, winv(du)));

    // Bidirectional search over conjugates z = p . core . p^{-1}, meeting on
    // canonical normal forms.  Side A starts from core_u, side B from core_v;
    // a meet with prefixes (pa, pb) gives pb^{-1} pa conjugating core_u to
    // core_v.
    const std::size_t len_cap =
        std::max(core_u.size(), core_v.size()) + 6;
    const std::size_t node_cap = 400000;
    SearchSide A, B;
    A.frontier.emplace_back(pi1_reduce(core_u), Word{});
    B.frontier.emplace_back(pi1_reduce(core_v), Word{});
    A.seen.emplace(nf_key(*this, core_u), Word{});
    B.seen.emplace(nf_key(*this, core_v), Word{});
    std::size_t total_nodes = 2;

    auto finish = [&](const Word& pa, const Word& pb) {
        Word c0 = wcat(winv(pb), pa);
        return verified(wcat(wcat(dv, c0), winv(du)));
    };
    {
        auto it = B.seen.find(nf_key(*this, core_u));
        if (it != B.seen.end()) return finish(Word{}, it->second);
    }

    std::vector<int> letters;
    for (int i = 1; i <= g_; ++i) {
        letters.push_back(i);
        letters.push_back(-i);
    }
    while ((!A.frontier.empty() || !B.frontier.empty()) && total_nodes < node_cap) {
        SearchSide* side;
        SearchSide* other;
        if (B.frontier.empty() ||
            (!A.frontier.empty() && A.frontier.size() <= B.frontier.size())) {
            side = &A;
            other = &B;
        } else {
            side = &B;
            other = &A;
        }
        if (side->depth + other->depth >= bound) break;
        side->depth += 1;
        std::deque<std::pair<Word, Word>> next;
        for (auto& [z, p] : side->frontier) {
            for (int l : letters) {
                Word z2 = pi1_reduce(wconj(Word{l}, z));
                if (z2.size() > len_cap) continue;
                Word p2 = freduce([&] {
                    Word t{l};
                    t.insert(t.end(), p.begin(), p.end());
                    return t;
                }());
                Word key = nf_key(*this, z2);
                auto hit = other->seen.find(key);
                if (hit != other->seen.end()) {
                    const Word& pa = (side == &A) ? p2 : hit->second;
                    const Word& pb = (side == &A) ? hit->second : p2;
                    return finish(pa, pb);
                }
                if (side->seen.emplace(std::move(key), p2).second) {
                    next.emplace_back(std::move(z2), std::move(p2));
                    ++total_nodes;
                }
            }
        }
        side->frontier = std::move(next);
    }
    return {Tri::Inconclusive, {}, {}};
}

std::set<Word> trivial_set(int g, int max_len, int insert_cap) {
    std::vector<Word> rots;
    const Word r = ng_relator(g);
    for (const Word& rel : {r, winv(r)}) {
        for (Word& rot : rotations(rel)) rots.push_back(std::move(rot));
    }
    std::set<Word> seen{Word{}};
    std::vector<Word> frontier{Word{}};
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const Word& w : frontier) {
            for (const Word& rot : rots) {
                for (std::size_t pos = 0; pos <= w.size(); ++pos) {
                    Word v(w.begin(), w.begin() + static_cast<long>(pos));
                    v.insert(v.end(), rot.begin(), rot.end());
                    v.insert(v.end(), w.begin() + static_cast<long>(pos), w.end());
                    v = freduce(v);
                    if (static_cast<int>(v.size()) <= insert_cap && seen.insert(v).second) {
                        next.push_back(std::move(v));
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    std::set<Word> out;
    for (const Word& w : seen) {
        if (static_cast<int>(w.size()) <= max_len) out.insert(w);
    }
    return out;
}

}  // namespace nsurf
