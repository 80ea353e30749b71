#pragma once

#include <functional>
#include <optional>
#include <string>

#include "perfcode/hamming.hpp"

namespace perfcode {

struct Component;     // components.hpp
struct LambdaCode;    // family.hpp
struct ColumnChoice;  // family.hpp
struct SwitchFamily;  // family.hpp

enum class Provenance { LinearHamming, Switched, ExplicitList };

// A code under test: a membership predicate plus, when available, an
// enumerator that visits every codeword exactly once. The callables own
// copies of whatever they need except where noted by the producer.
struct PerfectCodeOracle {
    const FieldSpec* field = nullptr;
    int n = 0;
    Provenance provenance = Provenance::ExplicitList;
    std::function<bool(const FqVector&)> contains;
    std::function<void(const std::function<void(const FqVector&)>&)> for_each;  // may be empty
    unsigned long long size = 0;  // codeword count when known, else 0
};

PerfectCodeOracle oracle_from_hamming(const HammingCode& code);
PerfectCodeOracle oracle_from_list(const FieldSpec& f, int n, std::vector<FqVector> words,
                                   Provenance provenance = Provenance::ExplicitList);

struct ScanMode {
    bool exhaustive = true;
    uint64_t seed = 0;                   // sampled mode
    unsigned long long samples = 100000;  // sampled mode
};
inline ScanMode exhaustive_scan() { return {true, 0, 0}; }
inline ScanMode sampled_scan(uint64_t seed, unsigned long long samples) { return {false, seed, samples}; }

// Outcome of one verification run. Serializes to the single line
//   property mode result seed samples time_ms counterexample?
// with '-' for fields that do not apply and the counterexample as a digit
// string; field order is fixed so runs diff cleanly.
struct VerifyReport {
    std::string property;
    bool exhaustive = true;
    bool pass = false;
    uint64_t seed = 0;
    unsigned long long samples = 0;  // vectors scanned
    std::string generator = "mt19937_64";  // sampled mode RNG identity
    double time_ms = 0.0;
    std::optional<FqVector> counterexample;
    std::string detail;  // free-form failure note, not part of the line

    std::string to_line() const;
};

// Every vector of GF(q)^n has exactly one codeword within distance one.
// Exhaustive mode scans the whole space in base-q value order (requires
// q^n <= cap) and reports the smallest offending vector; sampled mode draws
// `samples` vectors from the recorded seed.
VerifyReport is_perfect(const PerfectCodeOracle& oracle, const ScanMode& mode,
                        unsigned long long cap = default_cap());

// Smallest pairwise distance. The oracle overload enumerates (within cap);
// linear provenance uses the minimum nonzero weight, which agrees with the
// pairwise definition for subspaces.
int min_distance(const std::vector<FqVector>& words);
int min_distance(const PerfectCodeOracle& oracle, unsigned long long cap = default_cap());

// Whether two components intersect. Exhaustive mode materializes the smaller
// coset and probes the other; sampled mode draws random members of the first.
VerifyReport cosets_disjoint(const Component& a, const Component& b, const ScanMode& mode,
                             unsigned long long cap = default_cap());

// |C| * (1 + n(q-1)) == q^n, on exact integers.
bool sphere_packing_ok(const PerfectCodeOracle& oracle);

// Weak: every word of the short code, written into the chosen columns and
// zero-padded, is a member; so is the zero vector. Strong: additionally every
// member supported inside the chosen columns truncates back into the short
// code (scans all q^len prefixes, cap permitting).
struct EmbeddingReport {
    VerifyReport weak;
    std::optional<VerifyReport> strong;
};
EmbeddingReport embedding_check(const LambdaCode& lam, const ColumnChoice& choice,
                                const PerfectCodeOracle& oracle, bool strong,
                                unsigned long long cap = default_cap());

// Audits that switching permutes the parent code bijectively: sampled parent
// codewords must map to members, match at most one coset, and invert back.
VerifyReport switch_bijection_audit(const SwitchFamily& fam, uint64_t seed,
                                    unsigned long long samples);

}  // namespace perfcode
