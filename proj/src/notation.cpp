#include "fourflow/notation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace fourflow::notation {

namespace {

[[noreturn]] void fail(const std::string& text, size_t pos, const std::string& why) {
    throw DataError("notation: " + why + " at position " + std::to_string(pos) +
                    " in \"" + text + "\"");
}

bool letterSpec(char c, DegreeSpec& spec, Token::Kind& kind) {
    switch (c) {
        case 'm': spec = DegreeSpec::minor(); kind = Token::Kind::First; return true;
        case 'M': spec = DegreeSpec::major(); kind = Token::Kind::First; return true;
        case 'C': spec = DegreeSpec::major(); kind = Token::Kind::First; return true;
        case 'E': spec = DegreeSpec::atLeast(8); kind = Token::Kind::First; return true;
        case '*': spec = DegreeSpec::atLeast(6); kind = Token::Kind::First; return true;
        case 'L': spec = DegreeSpec::any(); kind = Token::Kind::First; return true;
        case 'R': spec = DegreeSpec::any(); kind = Token::Kind::First; return true;
        case 'x': spec = DegreeSpec::any(); kind = Token::Kind::Slot; return true;
        case 'X': spec = DegreeSpec::major(); kind = Token::Kind::Slot; return true;
        case 'B': spec = DegreeSpec::major(); kind = Token::Kind::Slot; return true;
        default: return false;
    }
}

// Spec allowed inside a cap: a digit, or one of the letters m M T * x.
DegreeSpec capInner(const std::string& text, size_t& i, char& letter) {
    char c = text[i];
    if (c >= '5' && c <= '9') {
        ++i;
        return DegreeSpec::exact(c - '0');
    }
    DegreeSpec spec;
    Token::Kind kind;
    if (c == 'T') {
        ++i;
        letter = 'T';
        return DegreeSpec::major();
    }
    if (letterSpec(c, spec, kind) && kind == Token::Kind::First) {
        ++i;
        letter = c;
        return spec;
    }
    fail(text, i, std::string("bad cap degree '") + c + "'");
}

int parseInt(const std::string& text, size_t& i) {
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) fail(text, start, "expected a number");
    return std::stoi(text.substr(start, i - start));
}

Token parseVertexToken(const std::string& text, size_t& i) {
    Token t;
    char c = text[i];
    if (c >= '5' && c <= '9') {
        t.kind = Token::Kind::First;
        t.spec = DegreeSpec::exact(c - '0');
        ++i;
        return t;
    }
    if (c >= '0' && c <= '3') {
        t.kind = Token::Kind::Cap;
        t.spec = DegreeSpec::exact(5 + (c - '0'));
        t.capDigit = true;
        ++i;
        return t;
    }
    if (c == '4') fail(text, i, "cap digit outside 0-3");
    if (c == '(') {
        bool semi = i + 1 < text.size() && text[i + 1] == '(';
        i += semi ? 2 : 1;
        char letter = 0;
        if (i >= text.size()) fail(text, i, "unbalanced cap");
        t.spec = capInner(text, i, letter);
        t.letter = letter;
        t.kind = semi ? Token::Kind::SemiCap : Token::Kind::Cap;
        if (semi) {
            // ((d)) is a dash-attached vertex with minimum degree d.
            if (t.spec.isExact()) t.spec = DegreeSpec::atLeast(t.spec.lo);
            t.dashed = true;
        }
        size_t need = semi ? 2 : 1;
        for (size_t k = 0; k < need; ++k) {
            if (i >= text.size() || text[i] != ')') fail(text, i, "unbalanced cap");
            ++i;
        }
        return t;
    }
    DegreeSpec spec;
    Token::Kind kind;
    if (letterSpec(c, spec, kind)) {
        t.kind = kind;
        t.spec = spec;
        t.letter = c;
        ++i;
        return t;
    }
    fail(text, i, std::string("bad degree char '") + c + "'");
}

int parsePower(const std::string& text, size_t& i) {
    if (i < text.size() && text[i] == '^') {
        ++i;
        int p = parseInt(text, i);
        if (p < 1) fail(text, i, "power must be positive");
        return p;
    }
    return 1;
}

} // namespace

bool ClusterExpr::isExpanded() const {
    for (const auto& h : hubs)
        if (h == DegreeSpec::minor()) return false;
    for (const auto& el : body) {
        if (el.brace || el.power != 1) return false;
        if (el.token.spec == DegreeSpec::minor() && el.token.letter == 'm') return false;
    }
    return true;
}

ClusterExpr parse(const std::string& raw) {
    std::string text;
    for (size_t p = 0; p < raw.size(); ++p) {
        unsigned char c = raw[p];
        if (std::isspace(c)) continue;
        // Unicode degree symbols map onto their ASCII letters.
        if (c == 0xE2 && p + 2 < raw.size()) {
            unsigned char b = raw[p + 1], d = raw[p + 2];
            if (b == 0x88 && d == 0x97) { text += '*'; p += 2; continue; } // ∗
            if (b == 0x8A && d == 0x82) { text += 'C'; p += 2; continue; } // ⊂
            if (b == 0x8A && d == 0x8F) { text += 'E'; p += 2; continue; } // ⊏
        }
        text += static_cast<char>(c);
    }
    ClusterExpr e;
    size_t lb = text.find('[');
    if (lb == std::string::npos) fail(text, 0, "missing '['");
    std::string header = text.substr(0, lb);
    size_t dash = header.rfind('-');
    std::string hubStr = header;
    if (dash != std::string::npos) {
        size_t j = 0;
        e.prefix = parseInt(header, j);
        if (j != dash) fail(text, j, "bad prefix");
        hubStr = header.substr(dash + 1);
    }
    if (hubStr.empty()) fail(text, 0, "missing hub degree");

    bool twoHub = hubStr.size() == 2 && hubStr[0] >= '5' && hubStr[0] <= '9' &&
                  hubStr[1] >= '5' && hubStr[1] <= '9';
    if (twoHub) {
        e.hubs = {DegreeSpec::exact(hubStr[0] - '0'), DegreeSpec::exact(hubStr[1] - '0')};
        e.hubLetters = {0, 0};
    } else if (std::isdigit(static_cast<unsigned char>(hubStr[0]))) {
        size_t j = 0;
        int d = parseInt(hubStr, j);
        if (j != hubStr.size() || d < 5) fail(text, 0, "bad hub degree");
        e.hubs = {DegreeSpec::exact(d)};
        e.hubLetters = {0};
    } else {
        DegreeSpec spec;
        Token::Kind kind;
        if (hubStr.size() != 1 || !letterSpec(hubStr[0], spec, kind) ||
            kind != Token::Kind::First)
            fail(text, 0, "bad hub degree");
        e.hubs = {spec};
        e.hubLetters = {hubStr[0]};
    }

    size_t i = lb + 1;
    int sharedCount = 0;
    while (i < text.size() && text[i] != ']') {
        char c = text[i];
        if (c == '-') {
            ++i;
            Token t = parseVertexToken(text, i);
            if (t.kind != Token::Kind::First)
                fail(text, i, "shared vertex must be a plain neighbour");
            if (i >= text.size() || text[i] != '-') fail(text, i, "unterminated shared vertex");
            ++i;
            t.shared = true;
            ++sharedCount;
            e.body.push_back({t, 1, false, {}});
            continue;
        }
        if (c == '{') {
            ++i;
            Element g;
            g.brace = true;
            while (true) {
                BraceItem item;
                while (i < text.size() && text[i] != ',' && text[i] != '}' &&
                       text[i] != '^') {
                    Token t = parseVertexToken(text, i);
                    if (t.shared) fail(text, i, "shared vertex inside braces");
                    item.seq.push_back(t);
                }
                if (item.seq.empty()) fail(text, i, "empty brace alternative");
                if (i < text.size() && text[i] == '^') {
                    if (item.seq.size() != 1)
                        fail(text, i, "power after a multi-vertex brace alternative");
                    item.copies = 0;
                    ++i;
                    item.copies = parseInt(text, i);
                    if (item.copies < 1) fail(text, i, "power must be positive");
                }
                g.group.push_back(std::move(item));
                if (i < text.size() && text[i] == ',') { ++i; continue; }
                break;
            }
            if (i >= text.size() || text[i] != '}') fail(text, i, "unbalanced brace");
            ++i;
            e.body.push_back(g);
            continue;
        }
        Token t = parseVertexToken(text, i);
        int p = parsePower(text, i);
        e.body.push_back({t, p, false, {}});
    }
    if (i >= text.size()) fail(text, i, "missing ']'");
    ++i; // ']'
    if (i < text.size()) {
        if (text[i] != '-') fail(text, i, "junk after ']'");
        ++i;
        e.ringSuffix = parseInt(text, i);
        if (i != text.size()) fail(text, i, "junk after ring size");
    }

    if (twoHub) {
        if (sharedCount != 1) fail(text, 0, "two-hub form needs exactly one shared vertex");
    } else if (sharedCount != 0) {
        fail(text, 0, "shared vertex outside a two-hub form");
    }

    // Degree sanity: the hub cycle cannot hold more members than the degree.
    long long cycleMin = 0;
    auto cycleMember = [](const Token& t) {
        return t.kind == Token::Kind::First || t.kind == Token::Kind::Slot;
    };
    for (const auto& el : e.body) {
        if (el.brace) {
            for (const auto& g : el.group) {
                int inCycle = 0;
                for (const auto& t : g.seq) inCycle += cycleMember(t) ? 1 : 0;
                cycleMin += static_cast<long long>(g.copies) * inCycle;
            }
        } else if (cycleMember(el.token)) {
            cycleMin += el.power;
        }
    }
    if (!twoHub) {
        if (cycleMin < 2) fail(text, 0, "underdetermined");
        if (e.hubs[0].isExact() && cycleMin > e.hubs[0].lo)
            fail(text, 0, "more neighbours than the hub degree admits");
    }
    return e;
}

namespace {

std::string tokenText(const Token& t, CapStyle style, bool loneCap) {
    auto inner = [&]() -> std::string {
        if (t.letter) return std::string(1, t.letter == 'C' ? 'M' : t.letter);
        if (t.spec.isExact()) return std::to_string(t.spec.lo);
        return "?";
    };
    switch (t.kind) {
        case Token::Kind::SemiCap:
            if (!t.letter) return "((" + std::to_string(t.spec.lo) + "))";
            return "((" + inner() + "))";
        case Token::Kind::Cap: {
            bool digitForm = t.spec.isExact() && t.spec.lo >= 5 && t.spec.lo <= 8 &&
                             !t.letter && (t.capDigit || loneCap);
            if (style == CapStyle::Digits && digitForm)
                return std::string(1, static_cast<char>('0' + (t.spec.lo - 5)));
            return "(" + inner() + ")";
        }
        default: {
            std::string s = t.letter ? std::string(1, t.letter)
                                     : std::to_string(t.spec.lo);
            if (t.shared) return "-" + s + "-";
            return s;
        }
    }
}

} // namespace

std::string print(const ClusterExpr& e, CapStyle style) {
    std::string out;
    if (e.prefix) out += std::to_string(*e.prefix) + "-";
    for (size_t h = 0; h < e.hubs.size(); ++h) {
        if (e.hubLetters[h])
            out += e.hubLetters[h];
        else
            out += std::to_string(e.hubs[h].lo);
    }
    out += "[";
    // Identify lone caps (single-cap pockets) for digit-style normalization.
    std::vector<bool> lone(e.body.size(), false);
    for (size_t k = 0; k < e.body.size(); ++k) {
        const Element& el = e.body[k];
        if (el.brace || el.power != 1) continue;
        if (el.token.kind != Token::Kind::Cap) continue;
        auto isCap = [&](size_t j) {
            return !e.body[j].brace && e.body[j].power == 1 &&
                   (e.body[j].token.kind == Token::Kind::Cap ||
                    e.body[j].token.kind == Token::Kind::SemiCap);
        };
        bool prevCap = k > 0 && isCap(k - 1);
        bool nextCap = k + 1 < e.body.size() && isCap(k + 1);
        lone[k] = !prevCap && !nextCap;
    }
    for (size_t k = 0; k < e.body.size(); ++k) {
        const Element& el = e.body[k];
        if (el.brace) {
            out += "{";
            for (size_t j = 0; j < el.group.size(); ++j) {
                if (j) out += ",";
                for (const auto& t : el.group[j].seq) out += tokenText(t, style, false);
                if (el.group[j].copies != 1)
                    out += "^" + std::to_string(el.group[j].copies);
            }
            out += "}";
            continue;
        }
        out += tokenText(el.token, style, lone[k]);
        if (el.power != 1) out += "^" + std::to_string(el.power);
    }
    out += "]";
    if (e.ringSuffix) out += "-" + std::to_string(*e.ringSuffix);
    return out;
}

namespace {

/** Ordering key used to sort brace multisets for permutation enumeration. */
std::string tokenKey(const Token& t) {
    std::string k;
    k += static_cast<char>('A' + static_cast<int>(t.kind));
    k += static_cast<char>('0' + t.spec.lo % 10);
    k += t.spec.hi >= kDegreeMax ? 'z' : static_cast<char>('0' + t.spec.hi % 10);
    k += t.letter ? t.letter : '.';
    k += t.shared ? 's' : '.';
    return k;
}

long long permutationCount(std::vector<std::string> keys) {
    std::sort(keys.begin(), keys.end());
    long long num = 1, i = 1;
    long long dup = 1, run = 1;
    for (size_t k = 1; k <= keys.size(); ++k) {
        num *= i++;
        if (num < 0 || num > (1LL << 62)) return 1LL << 62;
        if (k < keys.size() && keys[k] == keys[k - 1]) {
            ++run;
            dup *= run;
        } else {
            run = 1;
        }
    }
    // num = n!, dup = product of multiplicities factorial (accumulated per run)
    return num / std::max(dup, 1LL);
}

/** Body as a flat token list (powers resolved, braces resolved by caller). */
using TokenList = std::vector<Token>;

bool cyclicBody(const ClusterExpr& e, const TokenList& toks) {
    if (e.hubs.size() != 1 || !e.hubs[0].isExact()) return false;
    int members = 0;
    for (const auto& t : toks)
        if (t.kind == Token::Kind::First || t.kind == Token::Kind::Slot) ++members;
    return members == e.hubs[0].lo;
}

std::string listKey(const TokenList& toks) {
    std::string s;
    for (const auto& t : toks) s += tokenKey(t);
    return s;
}

/** Move every SemiCap to follow the token it attaches to after a reversal. */
void fixSemiCaps(TokenList& toks) {
    for (size_t i = 0; i + 1 < toks.size(); ++i) {
        if (toks[i].kind == Token::Kind::SemiCap &&
            toks[i + 1].kind != Token::Kind::SemiCap) {
            std::swap(toks[i], toks[i + 1]);
        }
    }
}

TokenList canonicalList(const ClusterExpr& e, const TokenList& toks, bool* reflectedOut) {
    std::vector<TokenList> candidates;
    bool cyc = cyclicBody(e, toks);
    auto addRotations = [&](const TokenList& base) {
        if (!cyc) {
            candidates.push_back(base);
            return;
        }
        size_t n = base.size();
        for (size_t s = 0; s < n; ++s) {
            if (base[s].kind != Token::Kind::First && base[s].kind != Token::Kind::Slot)
                continue;
            TokenList rot;
            rot.reserve(n);
            for (size_t k = 0; k < n; ++k) rot.push_back(base[(s + k) % n]);
            candidates.push_back(std::move(rot));
        }
    };
    addRotations(toks);
    size_t direct = candidates.size();
    bool reflectable = e.hubs.size() == 1 || e.hubs[0] == e.hubs[1];
    if (reflectable) {
        TokenList rev(toks.rbegin(), toks.rend());
        fixSemiCaps(rev);
        addRotations(rev);
    }
    size_t best = 0;
    std::string bestKey = listKey(candidates[0]);
    for (size_t k = 1; k < candidates.size(); ++k) {
        std::string key = listKey(candidates[k]);
        if (key < bestKey) {
            bestKey = key;
            best = k;
        }
    }
    if (reflectedOut) *reflectedOut = best >= direct;
    return candidates[best];
}

} // namespace

std::vector<ClusterExpr> expand(const ClusterExpr& e, const ExpandOptions& opt) {
    // 1. Count the family size before enumerating.
    long long count = 1;
    auto bump = [&](long long f) {
        count *= f;
        if (count > opt.guard)
            throw DataError("notation: expansion exceeds guard of " +
                            std::to_string(opt.guard));
    };
    for (const auto& h : e.hubs)
        if (h == DegreeSpec::minor()) bump(2);
    auto isMinorToken = [](const Token& t) {
        return t.spec == DegreeSpec::minor() && t.letter == 'm';
    };
    for (const auto& el : e.body) {
        if (el.brace) {
            std::vector<std::string> keys;
            for (const auto& g : el.group) {
                std::string ik;
                int minors = 0;
                for (const auto& t : g.seq) {
                    ik += tokenKey(t);
                    minors += isMinorToken(t) ? 1 : 0;
                }
                for (int k = 0; k < g.copies; ++k) {
                    keys.push_back(ik);
                    for (int j = 0; j < minors; ++j) bump(2);
                }
            }
            bump(permutationCount(keys));
        } else if (isMinorToken(el.token)) {
            for (int k = 0; k < el.power; ++k) bump(2);
        }
    }

    // 2. Enumerate: brace permutations x minor assignments.
    std::vector<TokenList> lists{{}};
    for (const auto& el : e.body) {
        if (!el.brace) {
            for (auto& l : lists)
                for (int k = 0; k < el.power; ++k) l.push_back(el.token);
            continue;
        }
        auto itemKey = [](const BraceItem& it) {
            std::string s;
            for (const auto& t : it.seq) s += tokenKey(t);
            return s;
        };
        auto itemLess = [&](const BraceItem& a, const BraceItem& b) {
            return itemKey(a) < itemKey(b);
        };
        std::vector<BraceItem> multiset;
        for (const auto& g : el.group)
            for (int k = 0; k < g.copies; ++k) multiset.push_back({g.seq, 1});
        std::sort(multiset.begin(), multiset.end(), itemLess);
        std::vector<TokenList> next;
        do {
            for (const auto& l : lists) {
                TokenList nl = l;
                for (const auto& it : multiset)
                    nl.insert(nl.end(), it.seq.begin(), it.seq.end());
                next.push_back(std::move(nl));
            }
        } while (std::next_permutation(multiset.begin(), multiset.end(), itemLess));
        lists = std::move(next);
    }
    // minor vertices in the body
    {
        std::vector<TokenList> done;
        for (auto& l : lists) {
            std::vector<size_t> minors;
            for (size_t k = 0; k < l.size(); ++k)
                if (l[k].spec == DegreeSpec::minor() && l[k].letter == 'm') minors.push_back(k);
            if (minors.size() > 40) throw DataError("notation: too many minor vertices");
            for (long long mask = 0; mask < (1LL << minors.size()); ++mask) {
                TokenList v = l;
                for (size_t b = 0; b < minors.size(); ++b) {
                    v[minors[b]].spec = DegreeSpec::exact((mask >> b) & 1 ? 6 : 5);
                    v[minors[b]].letter = 0;
                }
                done.push_back(std::move(v));
            }
        }
        lists = std::move(done);
    }
    // minor hubs
    std::vector<std::vector<DegreeSpec>> hubChoices{{}};
    for (size_t h = 0; h < e.hubs.size(); ++h) {
        std::vector<std::vector<DegreeSpec>> next;
        std::vector<DegreeSpec> options;
        if (e.hubs[h] == DegreeSpec::minor())
            options = {DegreeSpec::exact(5), DegreeSpec::exact(6)};
        else
            options = {e.hubs[h]};
        for (const auto& base : hubChoices)
            for (const auto& o : options) {
                auto v = base;
                v.push_back(o);
                next.push_back(v);
            }
        hubChoices = std::move(next);
    }

    // 3. Deduplicate up to rotation/reflection and emit.
    std::vector<ClusterExpr> out;
    std::set<std::string> seen;
    for (const auto& hubs : hubChoices) {
        for (const auto& l : lists) {
            ClusterExpr m = e;
            m.hubs = hubs;
            for (size_t h = 0; h < m.hubs.size(); ++h)
                if (m.hubLetters[h] == 'm') m.hubLetters[h] = 0;
            TokenList canon = canonicalList(m, l, nullptr);
            std::string key;
            for (const auto& h : hubs)
                key += std::to_string(h.lo) + ":" + std::to_string(h.hi) + ";";
            key += listKey(canon);
            if (!seen.insert(key).second) continue;
            m.body.clear();
            for (const auto& t : canon) m.body.push_back({t, 1, false, {}});
            out.push_back(std::move(m));
        }
    }
    return out;
}

} // namespace fourflow::notation
