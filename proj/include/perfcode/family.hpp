#pragma once

#include <iosfwd>
#include <memory>

#include "perfcode/components.hpp"
#include "perfcode/verify.hpp"

namespace perfcode {

// The three supported recipes for turning a short code into a component
// family. They differ in the weight/distance bounds demanded of the short
// code and in how the chosen columns look:
//   GeneralQ:       any supported q, weights >= 3, pairwise distance >= 5
//   Ternary:        q = 3, weights >= 3, pairwise distance >= 3
//   BinaryExtended: q = 2, length m + k, k extra columns each a sum of two
//                   base columns, weights and distances >= 3k + 3
enum class LambdaFlavor { GeneralQ, Ternary, BinaryExtended };

std::string flavor_token(LambdaFlavor flavor);        // "general" | "ternary" | "binext"
LambdaFlavor parse_flavor(const std::string& token);

// The user-supplied short code. The zero word is implicit and never listed.
struct LambdaCode {
    const FieldSpec* field = nullptr;
    int length = 0;  // m, or m + k for BinaryExtended
    int k = 0;       // extra-column count, BinaryExtended only
    LambdaFlavor flavor = LambdaFlavor::GeneralQ;
    std::vector<FqVector> vectors;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};
// Checks every flavor rule and reports all violations, naming the vectors.
ValidationReport validate_lambda(const LambdaCode& lam);

// Which columns of H carry the short code's digits: m linearly independent
// base columns plus, for BinaryExtended, k columns that are each the sum of
// two distinct base columns.
struct ColumnChoice {
    std::vector<int> base;
    std::vector<int> extra;
    std::vector<int> all() const;  // base then extra
};

// base = the unit columns e_1..e_m; extra = e_1+e_2, e_1+e_3, ... until k
// columns are chosen.
ColumnChoice default_choice(const HammingCode& code, int k = 0);
void validate_choice(const HammingCode& code, const ColumnChoice& choice);  // throws

// One short-code word pushed through the chosen columns: the combination
// v = sum lambda_j h_{c_j} normalizes to mu * h_anchor, and u is the codeword
// carrying lambda's digits at the chosen columns and -mu at the anchor.
struct Lift {
    int anchor = 0;
    uint8_t mu = 0;
    FqVector u;
};
Lift lift(const HammingCode& code, const ColumnChoice& choice, const FqVector& lambda);

struct FamilyEntry {
    int anchor = 0;
    uint8_t mu = 0;
    FqVector u;      // coset representative
    Component comp;  // R_anchor + u
};

// Holds pointers into the parent code; the code must stay alive at a stable
// address for as long as the family or any oracle derived from it is used.
struct SwitchFamily {
    const HammingCode* code = nullptr;
    ColumnChoice choice;
    int k = 0;
    std::vector<FamilyEntry> entries;
    std::shared_ptr<ComponentCache> cache;  // shared R_i / joint-span store
};

// Validates (unless force), lifts every word, and verifies that each
// representative lies outside its own component span; that last failure is
// surfaced loudly even under force. Anchors may repeat across entries.
SwitchFamily build_family(const HammingCode& code, const ColumnChoice& choice, const LambdaCode& lam,
                          bool force = false);

struct AdmissibilityResult {
    bool ok = true;
    int r = 0, s = 0;  // 1-based indices of the first violating entry pair
    std::string detail;
};
// Pairwise disjointness of the components, decided by span membership of the
// representative difference: within R_i for a shared anchor, within
// R_i + R_j otherwise. This is exact, not merely sufficient.
AdmissibilityResult check_admissible(const SwitchFamily& fam);

// Image of a parent codeword under switching, plus the 1-based index of the
// entry that moved it (0 when untouched). c must be a codeword.
std::pair<FqVector, int> map_through_switch(const SwitchFamily& fam, const FqVector& c);

// Membership oracle (and enumerator, cap permitting) for the switched code:
// members of a family coset move by mu at the anchor, the rest of the parent
// code stays. Admissibility is re-verified here and failure throws.
PerfectCodeOracle switched_code(const SwitchFamily& fam);

// The short code's words written into the chosen columns of a length-n
// vector, zero elsewhere; the zero vector rides along as the last element.
std::vector<FqVector> padded(const LambdaCode& lam, const ColumnChoice& choice, int n);

// ---- file formats ----
// Short-code file: header "q len t flavor", then t digit lines.
void write_lambda_file(std::ostream& out, const LambdaCode& lam);
LambdaCode read_lambda_file(std::istream& in);  // k is left 0; derive from context

// Family file: header "q m n t k", then per entry "anchor mu <u digits>".
void write_family_file(std::ostream& out, const SwitchFamily& fam);
SwitchFamily read_family_file(std::istream& in, const HammingCode& code);

}  // namespace perfcode
