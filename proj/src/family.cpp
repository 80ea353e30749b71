#include "perfcode/family.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace perfcode {

std::string flavor_token(LambdaFlavor flavor) {
    switch (flavor) {
        case LambdaFlavor::GeneralQ: return "general";
        case LambdaFlavor::Ternary: return "ternary";
        case LambdaFlavor::BinaryExtended: return "binext";
    }
    throw std::logic_error("unknown flavor");
}

LambdaFlavor parse_flavor(const std::string& token) {
    if (token == "general") return LambdaFlavor::GeneralQ;
    if (token == "ternary") return LambdaFlavor::Ternary;
    if (token == "binext") return LambdaFlavor::BinaryExtended;
    throw std::invalid_argument("unknown short-code flavor '" + token +
                                "' (expected general, ternary or binext)");
}

std::string ValidationReport::to_string() const {
    std::string s;
    for (const auto& v : violations) {
        s += v;
        s += '\n';
    }
    return s;
}

ValidationReport validate_lambda(const LambdaCode& lam) {
    ValidationReport rep;
    auto word = [&](size_t i) {
        return "word " + std::to_string(i + 1) + " (" + digit_line(lam.vectors[i]) + ")";
    };

    int min_weight = 3;
    int min_distance = 3;
    switch (lam.flavor) {
        case LambdaFlavor::GeneralQ:
            min_distance = 5;
            break;
        case LambdaFlavor::Ternary:
            if (lam.field->q != 3)
                rep.violations.push_back("ternary flavor requires q=3, got q=" + std::to_string(lam.field->q));
            break;
        case LambdaFlavor::BinaryExtended:
            if (lam.field->q != 2)
                rep.violations.push_back("binext flavor requires q=2, got q=" + std::to_string(lam.field->q));
            if (lam.k < 0 || lam.k >= lam.length)
                rep.violations.push_back("binext flavor needs 0 <= k < length, got k=" + std::to_string(lam.k));
            min_weight = min_distance = 3 * lam.k + 3;
            break;
    }

    for (size_t i = 0; i < lam.vectors.size(); ++i) {
        const FqVector& v = lam.vectors[i];
        if (v.size() != lam.length) {
            rep.violations.push_back(word(i) + " has length " + std::to_string(v.size()) +
                                     ", expected " + std::to_string(lam.length));
            continue;
        }
        if (v.is_zero()) {
            rep.violations.push_back(word(i) + " is the zero word, which is implicit and must not be listed");
            continue;
        }
        if (weight(v) < min_weight)
            rep.violations.push_back(word(i) + " has weight " + std::to_string(weight(v)) +
                                     ", need >= " + std::to_string(min_weight));
    }
    for (size_t i = 0; i < lam.vectors.size(); ++i) {
        for (size_t j = i + 1; j < lam.vectors.size(); ++j) {
            if (lam.vectors[i].size() != lam.vectors[j].size()) continue;
            int d = hamming_distance(lam.vectors[i], lam.vectors[j]);
            if (d == 0)
                rep.violations.push_back(word(i) + " and " + word(j) + " are duplicates");
            else if (d < min_distance)
                rep.violations.push_back(word(i) + " and " + word(j) + " are at distance " +
                                         std::to_string(d) + ", need >= " + std::to_string(min_distance));
        }
    }
    return rep;
}

std::vector<int> ColumnChoice::all() const {
    std::vector<int> v = base;
    v.insert(v.end(), extra.begin(), extra.end());
    return v;
}

ColumnChoice default_choice(const HammingCode& code, int k) {
    const FieldSpec& f = *code.field;
    ColumnChoice choice;
    for (int j = 0; j < code.m; ++j) {
        FqVector e = zero_vector(f, code.m);
        e[j] = 1;
        choice.base.push_back(code.column_index(e));
    }
    if (k < 0) throw std::invalid_argument("negative extra-column count");
    for (int a = 0; a < code.m && static_cast<int>(choice.extra.size()) < k; ++a) {
        for (int b = a + 1; b < code.m && static_cast<int>(choice.extra.size()) < k; ++b) {
            FqVector e = zero_vector(f, code.m);
            e[a] = 1;
            e[b] = 1;
            choice.extra.push_back(code.column_index(e));
        }
    }
    if (static_cast<int>(choice.extra.size()) != k)
        throw std::invalid_argument("cannot pick " + std::to_string(k) + " extra columns with m=" +
                                    std::to_string(code.m));
    return choice;
}

void validate_choice(const HammingCode& code, const ColumnChoice& choice) {
    if (static_cast<int>(choice.base.size()) != code.m)
        throw std::invalid_argument("need exactly m=" + std::to_string(code.m) + " base columns, got " +
                                    std::to_string(choice.base.size()));
    std::vector<int> all = choice.all();
    std::vector<int> sorted = all;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("chosen columns must be distinct");
    for (int i : all)
        if (i < 1 || i > code.n)
            throw std::invalid_argument("chosen column " + std::to_string(i) + " out of 1.." +
                                        std::to_string(code.n));

    std::vector<FqVector> base_cols;
    for (int i : choice.base) base_cols.push_back(code.column(i));
    if (rank(matrix_from_rows(base_cols)) != code.m)
        throw std::invalid_argument("base columns are not linearly independent");

    for (int e : choice.extra) {
        FqVector he = code.column(e);
        bool is_pair_sum = false;
        for (size_t a = 0; a < base_cols.size() && !is_pair_sum; ++a)
            for (size_t b = a + 1; b < base_cols.size() && !is_pair_sum; ++b)
                if (add(base_cols[a], base_cols[b]) == he) is_pair_sum = true;
        if (!is_pair_sum)
            throw std::invalid_argument("extra column " + std::to_string(e) +
                                        " is not a sum of two distinct base columns");
    }
}

Lift lift(const HammingCode& code, const ColumnChoice& choice, const FqVector& lambda) {
    const FieldSpec& f = *code.field;
    std::vector<int> cols = choice.all();
    if (lambda.size() != static_cast<int>(cols.size()))
        throw std::invalid_argument("short-code word length " + std::to_string(lambda.size()) +
                                    " does not match the " + std::to_string(cols.size()) + " chosen columns");

    FqVector v = zero_vector(f, code.m);
    for (size_t j = 0; j < cols.size(); ++j) add_scaled_inplace(v, code.column(cols[j]), lambda[static_cast<int>(j)]);
    if (v.is_zero())
        throw std::invalid_argument("short-code word " + digit_line(lambda) +
                                    " combines the chosen columns to zero");

    auto [w, mu] = normalize_point(v);
    int anchor = code.column_index(w);
    if (std::find(cols.begin(), cols.end(), anchor) != cols.end())
        throw std::invalid_argument("anchor column " + std::to_string(anchor) +
                                    " collides with a chosen column for word " + digit_line(lambda));

    FqVector u = zero_vector(f, code.n);
    for (size_t j = 0; j < cols.size(); ++j) u[cols[j] - 1] = lambda[static_cast<int>(j)];
    u[anchor - 1] = f.neg(mu);
    assert(is_codeword(code, u));
    return {anchor, mu, std::move(u)};
}

SwitchFamily build_family(const HammingCode& code, const ColumnChoice& choice, const LambdaCode& lam,
                          bool force) {
    if (lam.field->q != code.q())
        throw std::invalid_argument("short code is over GF(" + std::to_string(lam.field->q) +
                                    ") but the long code is over GF(" + std::to_string(code.q()) + ")");
    validate_choice(code, choice);
    int expected_extra = lam.flavor == LambdaFlavor::BinaryExtended ? lam.k : 0;
    if (static_cast<int>(choice.extra.size()) != expected_extra)
        throw std::invalid_argument("flavor " + flavor_token(lam.flavor) + " expects " +
                                    std::to_string(expected_extra) + " extra columns, choice has " +
                                    std::to_string(choice.extra.size()));
    if (!force) {
        ValidationReport rep = validate_lambda(lam);
        if (!rep.ok())
            throw std::invalid_argument("short code failed validation:\n" + rep.to_string());
    }

    SwitchFamily fam;
    fam.code = &code;
    fam.choice = choice;
    fam.k = lam.k;
    fam.cache = std::make_shared<ComponentCache>(code);
    for (size_t s = 0; s < lam.vectors.size(); ++s) {
        Lift lifted = lift(code, choice, lam.vectors[s]);
        const Component& span = fam.cache->component(lifted.anchor);
        // the representative must not be absorbed by its own span, or the
        // coset would contain 0 and switching could not preserve the code
        if (span.span.contains(lifted.u))
            throw std::runtime_error("entry " + std::to_string(s + 1) + " (word " +
                                     digit_line(lam.vectors[s]) +
                                     "): representative lies inside its component span");
        FamilyEntry entry{lifted.anchor, lifted.mu, lifted.u, component_with_rep(span, lifted.u)};
        fam.entries.push_back(std::move(entry));
    }
    return fam;
}

AdmissibilityResult check_admissible(const SwitchFamily& fam) {
    for (size_t r = 0; r < fam.entries.size(); ++r) {
        for (size_t s = r + 1; s < fam.entries.size(); ++s) {
            const FamilyEntry& er = fam.entries[r];
            const FamilyEntry& es = fam.entries[s];
            FqVector diff = sub(er.u, es.u);
            bool overlap;
            if (er.anchor == es.anchor) {
                overlap = fam.cache->component(er.anchor).span.contains(diff);
            } else {
                overlap = fam.cache->joint(er.anchor, es.anchor).contains(diff);
            }
            if (overlap) {
                std::string detail = "components of entries " + std::to_string(r + 1) + " and " +
                                     std::to_string(s + 1) + " intersect (anchors " +
                                     std::to_string(er.anchor) + ", " + std::to_string(es.anchor) + ")";
                return {false, static_cast<int>(r + 1), static_cast<int>(s + 1), std::move(detail)};
            }
        }
    }
    return {true, 0, 0, ""};
}

std::pair<FqVector, int> map_through_switch(const SwitchFamily& fam, const FqVector& c) {
    const FieldSpec& f = *fam.code->field;
    for (size_t s = 0; s < fam.entries.size(); ++s) {
        const FamilyEntry& e = fam.entries[s];
        if (in_component(e.comp, c)) {
            FqVector moved = c;
            moved[e.anchor - 1] = f.add(moved[e.anchor - 1], e.mu);
            return {std::move(moved), static_cast<int>(s + 1)};
        }
    }
    return {c, 0};
}

PerfectCodeOracle switched_code(const SwitchFamily& fam) {
    AdmissibilityResult adm = check_admissible(fam);
    if (!adm.ok)
        throw std::invalid_argument("family is not admissible: " + adm.detail);

    PerfectCodeOracle oracle;
    oracle.field = fam.code->field;
    oracle.n = fam.code->n;
    oracle.provenance = Provenance::Switched;
    try {
        oracle.size = fam.code->codeword_count();  // switching permutes the parent code
    } catch (const std::overflow_error&) {
        oracle.size = 0;
    }
    oracle.contains = [fam](const FqVector& x) {
        const HammingCode& code = *fam.code;
        FqVector s = syndrome(code, x);
        if (s.is_zero()) {
            for (const FamilyEntry& e : fam.entries)
                if (in_component(e.comp, x)) return false;  // moved away
            return true;
        }
        auto [i, c] = locate_syndrome(code, s);
        for (const FamilyEntry& e : fam.entries) {
            if (e.anchor != i || e.mu != c) continue;
            FqVector back = x;
            back[i - 1] = code.field->sub(back[i - 1], c);
            if (in_component(e.comp, back)) return true;  // moved here
        }
        return false;
    };
    oracle.for_each = [fam](const std::function<void(const FqVector&)>& fn) {
        CodewordStream stream(*fam.code);
        FqVector c;
        while (stream.next(c)) fn(map_through_switch(fam, c).first);
    };
    return oracle;
}

std::vector<FqVector> padded(const LambdaCode& lam, const ColumnChoice& choice, int n) {
    std::vector<int> cols = choice.all();
    std::vector<FqVector> out;
    for (const FqVector& v : lam.vectors) {
        if (v.size() != static_cast<int>(cols.size()))
            throw std::invalid_argument("short-code word length does not match the chosen columns");
        FqVector x = zero_vector(*lam.field, n);
        for (size_t j = 0; j < cols.size(); ++j) x[cols[j] - 1] = v[static_cast<int>(j)];
        out.push_back(std::move(x));
    }
    out.push_back(zero_vector(*lam.field, n));
    return out;
}

void write_lambda_file(std::ostream& out, const LambdaCode& lam) {
    out << lam.field->q << ' ' << lam.length << ' ' << lam.vectors.size() << ' '
        << flavor_token(lam.flavor) << '\n';
    for (const FqVector& v : lam.vectors) out << digit_line(v) << '\n';
}

LambdaCode read_lambda_file(std::istream& in) {
    std::string line;
    LambdaCode lam;
    bool have_header = false;
    long long t = -1;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!have_header) {
            std::istringstream hs(line);
            int q = 0;
            std::string token;
            if (!(hs >> q >> lam.length >> t >> token))
                throw std::invalid_argument("malformed short-code header: " + line);
            lam.field = &field(q);
            lam.flavor = parse_flavor(token);
            have_header = true;
        } else {
            lam.vectors.push_back(parse_digit_line(*lam.field, line, lam.length));
        }
    }
    if (!have_header) throw std::invalid_argument("missing short-code header line");
    if (static_cast<long long>(lam.vectors.size()) != t)
        throw std::invalid_argument("short-code file announces " + std::to_string(t) + " words but has " +
                                    std::to_string(lam.vectors.size()));
    return lam;
}

void write_family_file(std::ostream& out, const SwitchFamily& fam) {
    const HammingCode& code = *fam.code;
    out << code.q() << ' ' << code.m << ' ' << code.n << ' ' << fam.entries.size() << ' ' << fam.k << '\n';
    for (const FamilyEntry& e : fam.entries)
        out << e.anchor << ' ' << static_cast<int>(e.mu) << ' ' << digit_line(e.u) << '\n';
}

SwitchFamily read_family_file(std::istream& in, const HammingCode& code) {
    std::string line;
    bool have_header = false;
    long long t = -1;
    SwitchFamily fam;
    fam.code = &code;
    fam.cache = std::make_shared<ComponentCache>(code);
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!have_header) {
            std::istringstream hs(line);
            int q = 0, m = 0, n = 0;
            if (!(hs >> q >> m >> n >> t >> fam.k))
                throw std::invalid_argument("malformed family header: " + line);
            if (q != code.q() || m != code.m || n != code.n)
                throw std::invalid_argument("family file is for q=" + std::to_string(q) + ", m=" +
                                            std::to_string(m) + ", not this code");
            fam.choice = default_choice(code, fam.k);
            have_header = true;
            continue;
        }
        std::istringstream es(line);
        int anchor = 0, mu = 0;
        std::string digits;
        if (!(es >> anchor >> mu >> digits))
            throw std::invalid_argument("malformed family entry: " + line);
        if (anchor < 1 || anchor > code.n)
            throw std::invalid_argument("family entry anchor " + std::to_string(anchor) + " out of range");
        if (mu < 1 || mu >= code.q())
            throw std::invalid_argument("family entry shift " + std::to_string(mu) + " out of range");
        FqVector u = parse_digit_line(*code.field, digits, code.n);
        if (!is_codeword(code, u))
            throw std::invalid_argument("family entry representative is not a codeword: " + digits);
        const Component& span = fam.cache->component(anchor);
        fam.entries.push_back(FamilyEntry{anchor, static_cast<uint8_t>(mu), u,
                                          component_with_rep(span, u)});
    }
    if (!have_header) throw std::invalid_argument("missing family header line");
    if (static_cast<long long>(fam.entries.size()) != t)
        throw std::invalid_argument("family file announces " + std::to_string(t) + " entries but has " +
                                    std::to_string(fam.entries.size()));
    return fam;
}

}  // namespace perfcode
