#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "raagtc/graph.hpp"

namespace raagtc {

// One signed generator occurrence.
struct Letter {
    int generator = 0;
    int sign = 1; // +1 or -1

    bool operator==(const Letter& o) const = default;
};

// Element of H_Gamma as a word in the generators. Two words represent the
// same group element iff their normal forms are identical.
struct Word {
    std::vector<Letter> letters;

    bool empty() const { return letters.empty(); }
    int size() const { return static_cast<int>(letters.size()); }
    bool operator==(const Word& o) const = default;
};

Word inverse_word(const Word& w);

// Canonical representative: cancel letter pairs separated only by letters
// commuting with them until none remain (minimal length), then take the
// lexicographically least shuffle among commutation-equivalent words,
// ordered by (generator index, sign) with +1 before -1. Idempotent.
Word normal_form(const Graph& g, const Word& w);

// normal_form of the concatenation.
Word multiply(const Graph& g, const Word& u, const Word& v);

// The projection homomorphism determined by A: generators in A are fixed,
// the rest map to 1. Deletes letters outside A, then normalizes.
Word project(const Graph& g, const VertexSet& a, const Word& w);

// Membership in the special subgroup [A]: w is in [A] iff the projection
// fixes it.
bool in_special_subgroup(const Graph& g, const VertexSet& a, const Word& w);

// Tokens "a" and "a^-1" with vertex labels, whitespace-separated; the empty
// word serializes to "1".
std::string format_word(const Graph& g, const Word& w);
Word parse_word(const Graph& g, const std::string& text);

struct LemmaCheck {
    long long pass = 0;
    long long fail = 0;
    long long vacuous = 0;
    std::string counterexample; // first failure, reproducible description
};

struct LemmaReport {
    LemmaCheck composition;  // f_A(f_B(w)) = f_{A int B}(w) = f_B(f_A(w))
    LemmaCheck intersection; // w in [A] and w in [B]  iff  w in [A int B]
    LemmaCheck annihilation; // composing projections along a z_r witness kills every word

    bool all_passed() const {
        return composition.fail == 0 && intersection.fail == 0 &&
               annihilation.fail == 0;
    }
};

struct VerifyOptions {
    int max_word_length = 12;
    int min_r = 2; // witness range for the annihilation check
    int max_r = 4;
};

// Randomized harness for the projection lemmas. Deterministic for a fixed
// seed. Each sample draws fresh subsets and a fresh word; the intersection
// check additionally tests the projected word so membership actually
// occurs. Failures carry a reproducing counterexample in the report.
LemmaReport verify_lemmas(const Graph& g, long long samples, std::uint64_t seed,
                          const VerifyOptions& opts = {});

std::string format_lemma_report(const LemmaReport& report);

} // namespace raagtc
