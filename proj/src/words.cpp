#include "raagtc/words.hpp"

#include <random>
#include <sstream>

#include "raagtc/tc_solver.hpp"

namespace raagtc {

namespace {

void validate_word(const Graph& g, const Word& w) {
    for (const Letter& l : w.letters) {
        if (l.generator < 0 || l.generator >= g.vertex_count())
            throw argument_error("letter generator " + std::to_string(l.generator) +
                                 " outside the graph's vertex range");
        if (l.sign != 1 && l.sign != -1)
            throw argument_error("letter sign must be +1 or -1");
    }
}

// +1 sorts before -1.
int sign_rank(int sign) { return sign == 1 ? 0 : 1; }

bool letter_less(const Letter& a, const Letter& b) {
    if (a.generator != b.generator) return a.generator < b.generator;
    return sign_rank(a.sign) < sign_rank(b.sign);
}

// One pass of the geodesic criterion: a pair x ... x^{-1} cancels iff every
// letter between them commutes with x, i.e. has an adjacent generator. A
// separator with the same generator, or a non-adjacent one, blocks the scan
// past it. Returns true when a cancellation was applied.
bool cancel_once(const Graph& g, std::vector<Letter>& ls) {
    const int len = static_cast<int>(ls.size());
    for (int i = 0; i < len; ++i) {
        for (int j = i + 1; j < len; ++j) {
            if (ls[j].generator == ls[i].generator) {
                if (ls[j].sign != ls[i].sign) {
                    ls.erase(ls.begin() + j);
                    ls.erase(ls.begin() + i);
                    return true;
                }
                break;
            }
            if (!g.adjacent(ls[i].generator, ls[j].generator)) break;
        }
    }
    return false;
}

// Lexicographically least commutation-equivalent shuffle of a geodesic.
// A letter is available when every unused letter before it commutes with
// it; two letters with the same generator are never simultaneously
// available, so the minimum is unique.
std::vector<Letter> lex_least_shuffle(const Graph& g, const std::vector<Letter>& ls) {
    const int len = static_cast<int>(ls.size());
    std::vector<bool> used(ls.size(), false);
    std::vector<Letter> out;
    out.reserve(ls.size());
    for (int step = 0; step < len; ++step) {
        int best = -1;
        for (int p = 0; p < len; ++p) {
            if (used[p]) continue;
            bool available = true;
            for (int q = 0; q < p; ++q) {
                if (used[q]) continue;
                if (ls[q].generator == ls[p].generator ||
                    !g.adjacent(ls[q].generator, ls[p].generator)) {
                    available = false;
                    break;
                }
            }
            if (available && (best < 0 || letter_less(ls[p], ls[best]))) best = p;
        }
        out.push_back(ls[best]);
        used[best] = true;
    }
    return out;
}

} // namespace

Word inverse_word(const Word& w) {
    Word r;
    r.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r.letters.push_back({it->generator, -it->sign});
    return r;
}

Word normal_form(const Graph& g, const Word& w) {
    validate_word(g, w);
    std::vector<Letter> ls = w.letters;
    while (cancel_once(g, ls)) {
    }
    return Word{lex_least_shuffle(g, ls)};
}

Word multiply(const Graph& g, const Word& u, const Word& v) {
    Word cat;
    cat.letters.reserve(u.letters.size() + v.letters.size());
    cat.letters.insert(cat.letters.end(), u.letters.begin(), u.letters.end());
    cat.letters.insert(cat.letters.end(), v.letters.begin(), v.letters.end());
    return normal_form(g, cat);
}

Word project(const Graph& g, const VertexSet& a, const Word& w) {
    g.check_vertex_set(a);
    validate_word(g, w);
    Word kept;
    for (const Letter& l : w.letters)
        if (a.contains(l.generator)) kept.letters.push_back(l);
    return normal_form(g, kept);
}

bool in_special_subgroup(const Graph& g, const VertexSet& a, const Word& w) {
    return project(g, a, w) == normal_form(g, w);
}

std::string format_word(const Graph& g, const Word& w) {
    validate_word(g, w);
    if (w.empty()) return "1";
    std::ostringstream out;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out << ' ';
        out << g.label(w.letters[i].generator);
        if (w.letters[i].sign < 0) out << "^-1";
    }
    return out.str();
}

Word parse_word(const Graph& g, const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    // A lone "1" is the empty word, unless "1" is an actual vertex label.
    if (tokens.size() == 1 && tokens[0] == "1" && g.index_of("1") < 0) return Word{};
    Word w;
    for (const std::string& t : tokens) {
        int sign = 1;
        std::string base = t;
        if (t.size() > 3 && t.compare(t.size() - 3, 3, "^-1") == 0) {
            sign = -1;
            base = t.substr(0, t.size() - 3);
        }
        int v = g.index_of(base);
        if (v < 0)
            throw argument_error("unknown generator '" + base + "' in word token '" +
                                 t + "'");
        w.letters.push_back({v, sign});
    }
    return w;
}

namespace {

// Raw modulo keeps the stream identical across standard libraries; the bias
// is irrelevant for test sampling.
struct SampleRng {
    std::mt19937_64 eng;

    explicit SampleRng(std::uint64_t seed) : eng(seed) {}

    std::uint64_t next(std::uint64_t bound) { return bound ? eng() % bound : 0; }
};

Word random_word(SampleRng& rng, int n, int max_len) {
    Word w;
    if (n == 0) return w;
    int len = static_cast<int>(rng.next(static_cast<std::uint64_t>(max_len) + 1));
    w.letters.reserve(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) {
        int gen = static_cast<int>(rng.next(static_cast<std::uint64_t>(n)));
        int sign = rng.next(2) ? 1 : -1;
        w.letters.push_back({gen, sign});
    }
    return w;
}

VertexSet random_subset(SampleRng& rng, int n) {
    VertexSet s;
    for (int v = 0; v < n; ++v)
        if (rng.next(2)) s.add(v);
    return s;
}

std::string subset_text(const Graph& g, const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    for (int v : s.indices()) {
        if (!first) out += ",";
        out += g.label(v);
        first = false;
    }
    return out + "}";
}

void record_failure(LemmaCheck& check, const std::string& detail) {
    ++check.fail;
    if (check.counterexample.empty()) check.counterexample = detail;
}

} // namespace

LemmaReport verify_lemmas(const Graph& g, long long samples, std::uint64_t seed,
                          const VerifyOptions& opts) {
    if (samples < 1) throw argument_error("samples must be at least 1");
    if (opts.max_word_length < 0)
        throw argument_error("max word length must be nonnegative");
    if (opts.min_r < 2 || opts.max_r < opts.min_r)
        throw argument_error("witness range requires 2 <= min_r <= max_r");

    const int n = g.vertex_count();
    LemmaReport report;
    SampleRng rng(seed);

    // Fixed witnesses, one per r; each is a clique sequence with empty total
    // intersection, so the composed projections must kill every word.
    std::vector<CliqueSequence> witnesses;
    if (n > 0)
        for (int r = opts.min_r; r <= opts.max_r; ++r)
            witnesses.push_back(z_r_exact(g, r).witness);

    for (long long s = 0; s < samples; ++s) {
        VertexSet a = random_subset(rng, n);
        VertexSet b = random_subset(rng, n);
        Word w = random_word(rng, n, opts.max_word_length);
        VertexSet ab = a.intersect(b);

        // Composing the two projections in either order equals projecting to
        // the intersection.
        Word fa_fb = project(g, a, project(g, b, w));
        Word fb_fa = project(g, b, project(g, a, w));
        Word fab = project(g, ab, w);
        if (fa_fb == fab && fb_fa == fab) {
            ++report.composition.pass;
        } else {
            std::ostringstream detail;
            detail << "sample " << s << ": A=" << subset_text(g, a)
                   << " B=" << subset_text(g, b) << " w=" << format_word(g, w)
                   << " f_A(f_B(w))=" << format_word(g, fa_fb)
                   << " f_B(f_A(w))=" << format_word(g, fb_fa)
                   << " f_{A int B}(w)=" << format_word(g, fab);
            record_failure(report.composition, detail.str());
        }

        // Membership biconditional, tested on the raw word and on its
        // projection into [A] so the left side is actually exercised.
        bool ok = true;
        std::string bad_word;
        for (const Word* cand : {&w, &fa_fb}) {
            bool in_a = in_special_subgroup(g, a, *cand);
            bool in_b = in_special_subgroup(g, b, *cand);
            bool in_ab = in_special_subgroup(g, ab, *cand);
            if ((in_a && in_b) != in_ab) {
                ok = false;
                bad_word = format_word(g, *cand);
                break;
            }
        }
        if (ok) {
            ++report.intersection.pass;
        } else {
            std::ostringstream detail;
            detail << "sample " << s << ": A=" << subset_text(g, a)
                   << " B=" << subset_text(g, b) << " w=" << bad_word;
            record_failure(report.intersection, detail.str());
        }

        // Project along a z_r witness; the cliques have empty intersection,
        // so the composite is the trivial map.
        if (witnesses.empty()) {
            ++report.annihilation.vacuous;
        } else {
            const CliqueSequence& wit =
                witnesses[static_cast<size_t>(s) % witnesses.size()];
            Word u = w;
            for (auto it = wit.cliques.rbegin(); it != wit.cliques.rend(); ++it)
                u = project(g, *it, u);
            if (u.empty()) {
                ++report.annihilation.pass;
            } else {
                std::ostringstream detail;
                detail << "sample " << s << ": r=" << wit.cliques.size()
                       << " w=" << format_word(g, w)
                       << " image=" << format_word(g, u);
                record_failure(report.annihilation, detail.str());
            }
        }
    }
    return report;
}

namespace {

void append_check(std::ostringstream& out, const char* name, const LemmaCheck& c) {
    out << name << ": pass=" << c.pass << " fail=" << c.fail;
    if (c.vacuous > 0) out << " vacuous=" << c.vacuous;
    out << '\n';
    if (!c.counterexample.empty())
        out << "  counterexample: " << c.counterexample << '\n';
}

} // namespace

std::string format_lemma_report(const LemmaReport& report) {
    std::ostringstream out;
    append_check(out, "projection-composition", report.composition);
    append_check(out, "subgroup-intersection", report.intersection);
    append_check(out, "witness-annihilation", report.annihilation);
    out << (report.all_passed() ? "all checks passed" : "CHECKS FAILED") << '\n';
    return out.str();
}

} // namespace raagtc
