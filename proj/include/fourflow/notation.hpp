#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fourflow/common.hpp"

namespace fourflow::notation {

constexpr int kDegreeMax = 99; // stand-in for "unbounded"

/** Closed integer range of admissible vertex degrees. */
struct DegreeSpec {
    int lo = 5;
    int hi = kDegreeMax;

    static DegreeSpec exact(int d) { return {d, d}; }
    static DegreeSpec atLeast(int d) { return {d, kDegreeMax}; }
    static DegreeSpec minor() { return {5, 6}; }
    static DegreeSpec major() { return {7, kDegreeMax}; }
    static DegreeSpec any() { return {5, kDegreeMax}; }

    bool isExact() const { return lo == hi; }
    bool contains(int d) const { return lo <= d && d <= hi; }
    bool subsumes(const DegreeSpec& o) const { return lo <= o.lo && o.hi <= hi; }
    std::optional<DegreeSpec> meet(const DegreeSpec& o) const {
        DegreeSpec r{std::max(lo, o.lo), std::min(hi, o.hi)};
        if (r.lo > r.hi) return std::nullopt;
        return r;
    }
    bool operator==(const DegreeSpec& o) const = default;
};

/** One vertex-producing token of a cluster body. */
struct Token {
    enum class Kind {
        First,   // neighbour of the hub
        Cap,     // attached outside an edge between specified vertices
        SemiCap, // ((d)): attached to the preceding specified vertex only
        Slot,    // x/X/B: boundary-ring placeholder in the hub cycle
    };
    Kind kind = Kind::First;
    DegreeSpec spec = DegreeSpec::any();
    char letter = 0;        // original letter for m/M/x/X/B/C/E/L/R/T, else 0
    bool capDigit = false;  // cap written in abbreviated digit form 0-3
    bool shared = false;    // hyphen-delimited shared vertex of a two-hub form
    bool dashed = false;    // annotation: drawn dashed (documentation only)

    // capDigit is presentation only and does not affect equality
    bool operator==(const Token& o) const {
        return kind == o.kind && spec == o.spec && letter == o.letter &&
               shared == o.shared && dashed == o.dashed;
    }
};

/** One alternative inside a brace group: a run of tokens with a multiplicity. */
struct BraceItem {
    std::vector<Token> seq;   // tokens placed together, e.g. "60506" or "LR"
    int copies = 1;           // ^k multiplicity in the permuted multiset

    bool operator==(const BraceItem& o) const = default;
};

/** Body element: a (possibly powered) token or a brace permutation group. */
struct Element {
    Token token;
    int power = 1;                 // token repeated `power` times consecutively
    bool brace = false;            // true: this is a {..} group, `group` is used
    std::vector<BraceItem> group;  // multiset of alternatives inside the braces

    bool operator==(const Element& o) const = default;
};

/** Parsed cluster-configuration expression. */
struct ClusterExpr {
    std::optional<int> prefix;      // declared interior-vertex count
    std::vector<DegreeSpec> hubs;   // one or two hub degree specs
    std::vector<char> hubLetters;   // original hub letters (0 for digits)
    std::vector<Element> body;
    std::optional<int> ringSuffix;  // declared boundary-circuit size

    bool twoHub() const { return hubs.size() == 2; }
    /** True if no brace groups, powers or minor (m) families remain. */
    bool isExpanded() const;
    bool operator==(const ClusterExpr& o) const = default;
};

/** Parse a cluster string; throws DataError with position info on bad input. */
ClusterExpr parse(const std::string& text);

enum class CapStyle { Digits, Parens };

/** Render an expression back to the notation; inverse of parse. */
std::string print(const ClusterExpr& e, CapStyle style = CapStyle::Digits);

struct ExpandOptions {
    long long guard = 1000000; // abort if the family would exceed this size
};

/**
 * Resolve powers, brace permutation groups and minor (m) vertices into the
 * set of member expressions, deduplicated up to rotation (complete hub
 * cycles only) and reflection of the neighbour cycle.
 */
std::vector<ClusterExpr> expand(const ClusterExpr& e, const ExpandOptions& opt = {});

} // namespace fourflow::notation
