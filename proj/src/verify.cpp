#include "perfcode/verify.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <unordered_set>

#include "perfcode/components.hpp"
#include "perfcode/family.hpp"

namespace perfcode {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

unsigned long long space_size(const FieldSpec& f, int n, const char* what) {
    auto qn = checked_pow(static_cast<unsigned long long>(f.q), n);
    if (!qn) throw std::overflow_error(std::string(what) + ": q^n exceeds the addressable range");
    return *qn;
}

// number of vectors within distance one of a fixed vector
unsigned long long ball_size(int q, int n) {
    return 1ull + static_cast<unsigned long long>(n) * (q - 1);
}

}  // namespace

std::string VerifyReport::to_line() const {
    std::string line = property;
    line += exhaustive ? " exhaustive" : " sampled";
    line += pass ? " pass" : " fail";
    line += exhaustive ? " -" : ' ' + std::to_string(seed);
    line += ' ' + std::to_string(samples);
    line += ' ' + std::to_string(static_cast<long long>(std::llround(time_ms)));
    if (counterexample) line += ' ' + digit_line(*counterexample);
    return line;
}

PerfectCodeOracle oracle_from_hamming(const HammingCode& code) {
    auto shared = std::make_shared<HammingCode>(code);
    PerfectCodeOracle oracle;
    oracle.field = shared->field;
    oracle.n = shared->n;
    oracle.provenance = Provenance::LinearHamming;
    try {
        oracle.size = shared->codeword_count();
    } catch (const std::overflow_error&) {
        oracle.size = 0;
    }
    oracle.contains = [shared](const FqVector& x) { return is_codeword(*shared, x); };
    oracle.for_each = [shared](const std::function<void(const FqVector&)>& fn) {
        CodewordStream stream(*shared);
        FqVector c;
        while (stream.next(c)) fn(c);
    };
    return oracle;
}

PerfectCodeOracle oracle_from_list(const FieldSpec& f, int n, std::vector<FqVector> words,
                                   Provenance provenance) {
    space_size(f, n, "oracle_from_list");  // packing must be addressable
    auto packed = std::make_shared<std::unordered_set<unsigned long long>>();
    auto list = std::make_shared<std::vector<FqVector>>(std::move(words));
    for (const FqVector& w : *list) {
        if (w.size() != n) throw std::invalid_argument("word length does not match n");
        packed->insert(pack_value(w));
    }
    if (packed->size() != list->size()) throw std::invalid_argument("duplicate words in explicit code");

    PerfectCodeOracle oracle;
    oracle.field = &f;
    oracle.n = n;
    oracle.provenance = provenance;
    oracle.size = list->size();
    oracle.contains = [packed](const FqVector& x) { return packed->count(pack_value(x)) != 0; };
    oracle.for_each = [list](const std::function<void(const FqVector&)>& fn) {
        for (const FqVector& w : *list) fn(w);
    };
    return oracle;
}

namespace {

// exhaustive perfectness via covering counts: every codeword marks its
// radius-one ball, then every vector must be covered exactly once
VerifyReport perfect_by_counting(const PerfectCodeOracle& oracle, unsigned long long qn,
                                 Clock::time_point start) {
    const FieldSpec& f = *oracle.field;
    int n = oracle.n;
    std::vector<uint8_t> counts(qn, 0);
    std::vector<unsigned long long> place(n);  // place value of each coordinate
    {
        unsigned long long p = 1;
        for (int i = n - 1; i >= 0; --i) {
            place[i] = p;
            p *= f.q;
        }
    }
    auto bump = [&counts](unsigned long long v) {
        if (counts[v] != 255) ++counts[v];
    };
    oracle.for_each([&](const FqVector& c) {
        unsigned long long base = pack_value(c);
        bump(base);
        for (int i = 0; i < n; ++i) {
            long long delta = -static_cast<long long>(c[i]) * static_cast<long long>(place[i]);
            for (int d = 0; d < f.q; ++d) {
                if (d == c[i]) continue;
                bump(base + delta + static_cast<long long>(d) * place[i]);
            }
        }
    });
    VerifyReport rep;
    rep.property = "perfect";
    rep.exhaustive = true;
    rep.samples = qn;
    for (unsigned long long v = 0; v < qn; ++v) {
        if (counts[v] != 1) {
            rep.pass = false;
            rep.counterexample = unpack_value(f, n, v);
            rep.detail = counts[v] == 0 ? "vector has no codeword within distance one"
                                        : "vector has several codewords within distance one";
            rep.time_ms = ms_since(start);
            return rep;
        }
    }
    rep.pass = true;
    rep.time_ms = ms_since(start);
    return rep;
}

// count members in the radius-one ball around x through the membership
// predicate only
int ball_members(const PerfectCodeOracle& oracle, FqVector& x) {
    const FieldSpec& f = *oracle.field;
    int count = oracle.contains(x) ? 1 : 0;
    for (int i = 0; i < x.size() && count < 2; ++i) {
        uint8_t original = x[i];
        for (int d = 0; d < f.q && count < 2; ++d) {
            if (d == original) continue;
            x[i] = static_cast<uint8_t>(d);
            if (oracle.contains(x)) ++count;
        }
        x[i] = original;
    }
    return count;
}

}  // namespace

VerifyReport is_perfect(const PerfectCodeOracle& oracle, const ScanMode& mode, unsigned long long cap) {
    auto start = Clock::now();
    const FieldSpec& f = *oracle.field;
    unsigned long long qn = space_size(f, oracle.n, "is_perfect");

    if (mode.exhaustive) {
        if (qn > cap)
            throw CapExceeded("exhaustive scan needs q^n = " + std::to_string(qn) + " > cap " +
                              std::to_string(cap) + "; use sampled mode");
        if (oracle.for_each) return perfect_by_counting(oracle, qn, start);
        VerifyReport rep;
        rep.property = "perfect";
        rep.exhaustive = true;
        rep.samples = qn;
        for (unsigned long long v = 0; v < qn; ++v) {
            FqVector x = unpack_value(f, oracle.n, v);
            if (ball_members(oracle, x) != 1) {
                rep.pass = false;
                rep.counterexample = unpack_value(f, oracle.n, v);
                rep.time_ms = ms_since(start);
                return rep;
            }
        }
        rep.pass = true;
        rep.time_ms = ms_since(start);
        return rep;
    }

    VerifyReport rep;
    rep.property = "perfect";
    rep.exhaustive = false;
    rep.seed = mode.seed;
    std::mt19937_64 rng(mode.seed);
    std::uniform_int_distribution<unsigned long long> dist(0, qn - 1);
    for (unsigned long long s = 0; s < mode.samples; ++s) {
        FqVector x = unpack_value(f, oracle.n, dist(rng));
        if (ball_members(oracle, x) != 1) {
            rep.pass = false;
            rep.samples = s + 1;
            rep.counterexample = std::move(x);
            rep.time_ms = ms_since(start);
            return rep;
        }
    }
    rep.pass = true;
    rep.samples = mode.samples;
    rep.time_ms = ms_since(start);
    return rep;
}

namespace {

// two-bit packing turns distance into popcount; only valid for q <= 4, n <= 32
int min_distance_packed(const std::vector<FqVector>& words) {
    size_t count = words.size();
    int n = words[0].size();
    std::vector<uint64_t> packed(count);
    for (size_t i = 0; i < count; ++i) {
        uint64_t p = 0;
        for (int j = 0; j < n; ++j) p |= static_cast<uint64_t>(words[i][j]) << (2 * j);
        packed[i] = p;
    }
    const uint64_t low_bits = 0x5555555555555555ull;
    int best = n + 1;
    for (size_t i = 0; i < count; ++i) {
        uint64_t a = packed[i];
        for (size_t j = i + 1; j < count; ++j) {
            uint64_t z = a ^ packed[j];
            int d = __builtin_popcountll((z | (z >> 1)) & low_bits);
            if (d < best) {
                best = d;
                if (best == 0) return 0;
            }
        }
    }
    return best;
}

}  // namespace

int min_distance(const std::vector<FqVector>& words) {
    if (words.size() < 2) throw std::invalid_argument("min_distance needs at least two words");
    int n = words[0].size();
    const FieldSpec& f = *words[0].field;
    for (const FqVector& w : words)
        if (w.size() != n || w.field->q != f.q) throw std::invalid_argument("mixed word shapes");
    if (f.q <= 4 && n <= 32) return min_distance_packed(words);

    int best = n + 1;
    for (size_t i = 0; i < words.size(); ++i) {
        for (size_t j = i + 1; j < words.size(); ++j) {
            // early exit once the running count reaches the best known
            int d = 0;
            for (int t = 0; t < n && d < best; ++t) d += (words[i][t] != words[j][t]);
            if (d < best) {
                best = d;
                if (best == 0) return 0;
            }
        }
    }
    return best;
}

int min_distance(const PerfectCodeOracle& oracle, unsigned long long cap) {
    if (!oracle.for_each)
        throw std::invalid_argument("min_distance needs an enumerable code");
    if (oracle.provenance == Provenance::LinearHamming) {
        // a subspace's minimum distance is its minimum nonzero weight
        int best = oracle.n + 1;
        oracle.for_each([&](const FqVector& c) {
            int w = weight(c);
            if (w != 0 && w < best) best = w;
        });
        return best;
    }
    if (oracle.size != 0 && oracle.size > cap)
        throw CapExceeded("min_distance would materialize " + std::to_string(oracle.size) +
                          " words, cap is " + std::to_string(cap));
    std::vector<FqVector> words;
    if (oracle.size != 0) words.reserve(oracle.size);
    oracle.for_each([&](const FqVector& c) { words.push_back(c); });
    return min_distance(words);
}

VerifyReport cosets_disjoint(const Component& a, const Component& b, const ScanMode& mode,
                             unsigned long long cap) {
    auto start = Clock::now();
    const FieldSpec& f = *a.rep.field;
    if (a.rep.size() != b.rep.size() || f.q != b.rep.field->q)
        throw std::invalid_argument("cosets_disjoint: shape mismatch");

    VerifyReport rep;
    rep.property = "cosets-disjoint";
    rep.exhaustive = mode.exhaustive;

    if (mode.exhaustive) {
        auto size_a = checked_pow(f.q, a.span.dim());
        auto size_b = checked_pow(f.q, b.span.dim());
        if (!size_a || !size_b || *size_a > cap || *size_b > cap)
            throw CapExceeded("coset enumeration exceeds cap " + std::to_string(cap) +
                              "; use sampled mode");
        // materialize the smaller coset, stream the other one against it
        const Component& small = *size_a <= *size_b ? a : b;
        const Component& large = *size_a <= *size_b ? b : a;
        std::unordered_set<unsigned long long> members;
        members.reserve(static_cast<size_t>(std::min(*size_a, *size_b)) * 2);
        SpanStream fill(f, small.rep.size(), small.span.rows(), small.rep);
        FqVector v;
        while (fill.next(v)) members.insert(pack_value(v));
        SpanStream probe(f, large.rep.size(), large.span.rows(), large.rep);
        unsigned long long scanned = members.size();
        while (probe.next(v)) {
            ++scanned;
            if (members.count(pack_value(v))) {
                rep.pass = false;
                rep.samples = scanned;
                rep.counterexample = v;
                rep.detail = "vector lies in both components";
                rep.time_ms = ms_since(start);
                return rep;
            }
        }
        rep.pass = true;
        rep.samples = scanned;
        rep.time_ms = ms_since(start);
        return rep;
    }

    rep.seed = mode.seed;
    std::mt19937_64 rng(mode.seed);
    std::uniform_int_distribution<int> digit(0, f.q - 1);
    for (unsigned long long s = 0; s < mode.samples; ++s) {
        FqVector x = a.rep;
        for (const FqVector& row : a.span.rows())
            add_scaled_inplace(x, row, static_cast<uint8_t>(digit(rng)));
        if (in_component(b, x)) {
            rep.pass = false;
            rep.samples = s + 1;
            rep.counterexample = std::move(x);
            rep.detail = "vector lies in both components";
            rep.time_ms = ms_since(start);
            return rep;
        }
    }
    rep.pass = true;
    rep.samples = mode.samples;
    rep.time_ms = ms_since(start);
    return rep;
}

bool sphere_packing_ok(const PerfectCodeOracle& oracle) {
    unsigned long long qn = space_size(*oracle.field, oracle.n, "sphere_packing_ok");
    unsigned long long size = oracle.size;
    if (size == 0) {
        if (!oracle.for_each)
            throw std::invalid_argument("sphere_packing_ok needs a size or an enumerator");
        oracle.for_each([&](const FqVector&) { ++size; });
    }
    unsigned long long ball = ball_size(oracle.field->q, oracle.n);
    return qn % ball == 0 && qn / ball == size;
}

EmbeddingReport embedding_check(const LambdaCode& lam, const ColumnChoice& choice,
                                const PerfectCodeOracle& oracle, bool strong, unsigned long long cap) {
    auto start = Clock::now();
    EmbeddingReport out;
    std::vector<FqVector> images = padded(lam, choice, oracle.n);

    out.weak.property = "embed-weak";
    out.weak.exhaustive = true;
    out.weak.pass = true;
    out.weak.samples = images.size();
    for (size_t i = 0; i < images.size(); ++i) {
        if (!oracle.contains(images[i])) {
            out.weak.pass = false;
            out.weak.counterexample = images[i];
            out.weak.detail = i + 1 == images.size()
                                  ? "zero word is not a member"
                                  : "short-code word " + digit_line(lam.vectors[i]) + " pads to a non-member";
            break;
        }
    }
    out.weak.time_ms = ms_since(start);
    if (!strong) return out;

    auto strong_start = Clock::now();
    VerifyReport sr;
    sr.property = "embed-strong";
    sr.exhaustive = true;
    sr.pass = true;
    auto prefixes = checked_pow(static_cast<unsigned long long>(lam.field->q), lam.length);
    if (!prefixes || *prefixes > cap)
        throw CapExceeded("strong embedding scan needs q^len prefixes above cap " + std::to_string(cap));
    sr.samples = *prefixes;

    std::unordered_set<unsigned long long> short_words;
    for (const FqVector& v : lam.vectors) short_words.insert(pack_value(v));
    short_words.insert(0);

    std::vector<int> cols = choice.all();
    for (unsigned long long value = 0; value < *prefixes; ++value) {
        FqVector p = unpack_value(*lam.field, lam.length, value);
        FqVector x = zero_vector(*lam.field, oracle.n);
        for (size_t j = 0; j < cols.size(); ++j) x[cols[j] - 1] = p[static_cast<int>(j)];
        bool member = oracle.contains(x);
        bool listed = short_words.count(value) != 0;
        if (member != listed) {
            sr.pass = false;
            sr.counterexample = x;
            sr.detail = member ? "member prefix " + digit_line(p) + " is not a short-code word"
                               : "short-code word " + digit_line(p) + " pads to a non-member";
            break;
        }
    }
    sr.time_ms = ms_since(strong_start);
    out.strong = std::move(sr);
    return out;
}

VerifyReport switch_bijection_audit(const SwitchFamily& fam, uint64_t seed, unsigned long long samples) {
    auto start = Clock::now();
    const HammingCode& code = *fam.code;
    const FieldSpec& f = *code.field;
    std::vector<FqVector> basis = codeword_basis(code);

    VerifyReport rep;
    rep.property = "switch-bijection";
    rep.exhaustive = false;
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> digit(0, f.q - 1);

    auto fail = [&](FqVector cex, std::string why, unsigned long long done) {
        rep.pass = false;
        rep.samples = done;
        rep.counterexample = std::move(cex);
        rep.detail = std::move(why);
        rep.time_ms = ms_since(start);
        return rep;
    };

    for (unsigned long long s = 0; s < samples; ++s) {
        FqVector c = zero_vector(f, code.n);
        for (const FqVector& b : basis) add_scaled_inplace(c, b, static_cast<uint8_t>(digit(rng)));

        // forward: at most one component may claim c
        int matches = 0;
        for (const FamilyEntry& e : fam.entries) matches += in_component(e.comp, c) ? 1 : 0;
        if (matches > 1) return fail(c, "codeword claimed by several components", s + 1);

        auto [image, moved] = map_through_switch(fam, c);

        // backward: recover c from the image alone
        FqVector back = image;
        FqVector syn = syndrome(code, image);
        if (moved == 0) {
            if (!syn.is_zero()) return fail(c, "untouched codeword left the parent code", s + 1);
        } else {
            if (syn.is_zero()) return fail(c, "moved codeword still parses as a parent codeword", s + 1);
            auto [i, mu] = locate_syndrome(code, syn);
            if (i != fam.entries[moved - 1].anchor || mu != fam.entries[moved - 1].mu)
                return fail(c, "image syndrome does not name its own coset", s + 1);
            back[i - 1] = f.sub(back[i - 1], mu);
            if (!in_component(fam.entries[moved - 1].comp, back))
                return fail(c, "image does not map back into its coset", s + 1);
        }
        if (back != c) return fail(c, "round trip lost the codeword", s + 1);
    }
    rep.pass = true;
    rep.samples = samples;
    rep.time_ms = ms_since(start);
    return rep;
}

}  // namespace perfcode
