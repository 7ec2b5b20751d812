#include "qlucas/witness.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qlucas {

namespace {

struct TableRow {
    i64 b;
    Family family;
    int b_class;
    std::vector<u64> primes;
    std::vector<std::string> equations; // empty: decompositions shared with another b
};

// Verbatim transcription, typos included; the checker has to find them.
const std::vector<TableRow>& reference_rows()
{
    static const std::vector<TableRow> rows{
        {1, Family::I, 1, {281, 41, 29, 109, 61, 521, 89},
         {"241=(-6)^2+5\\cdot (-7)^2=5^2+16^2", "41=(-6)+5\\cdot 1^2=5^2+4^2",
          "29=(-3)^2+5\\cdot 2^2=5^2+2^2", "109=8^2++5\\dot (-3)^2=(-3)^2+10^2", "61=4^2+5\\cdot (-3)^2",
          "521=21^2+5\\cdot 4^2=(-11)^2+20^2", "89=(-3)^2+5\\cdot 4^2=5^2+8^2"}},
        {3, Family::I, 2, {113, 17, 53, 181, 29, 433, 233},
         {"113=10^2+13\\cdot 1^2=(-7)^2+8^2", "17=2^2+13\\cdot 1^2=1^2+4^2", "53=1^2+13\\cdot 2^2=(-7)^2+2^2",
          "181=8^2+13\\cdot (-3)^2", "29=4^2+13\\cdot 1^2", "433=(-15)^2+13\\cdot 4^2=17^2+(-12)^2",
          "233=5^2+13\\cdot 4^2=13^2+8^2"}},
        {4, Family::I, 3, {281, 41, 29, 109, 61, 521, 89}, {}},
        {2, Family::II, 1, {73, 17, 113, 41},
         {"73=(-7)^2+2\\cdot (-6)^2=(-3)^2+8^2", "17=(-3)^2+2\\cdot 2^2=1^2+4^2", "113=9^2+2\\cdot 4^2=(-7)^2+8^2",
          "41=(-3)^2+2\\cdot 4^2=5^2+4^2"}},
        {6, Family::II, 2, {89, 41, 281, 241},
         {"89=(-7)^2+10\\cdot 2^2=5^2+8^2", "41=1^2+10\\cdot 2^2=5^2+4^2", "281=(-11)^2+10\\cdot 4^2=5^2+16^2",
          "241=9^2+10\\cdot 4^2=(-15)^2+4^2"}},
        {10, Family::II, 3, {113, 1297, 1889, 641},
         {"113=(-3)^2+26\\cdot 2^2=(-7)^2+8^2", "1297=(-19)^2+26\\cdot (-6)^2=1^2+(-36)^2",
          "1889=(-15)^2+26\\cdot 8^2=17^2+40^2", "641=(-15)^2+26\\cdot 4^2=25^2+4^2"}},
        {14, Family::II, 4, {281, 641, 881, 809},
         {"281=(-3)^2+50\\cdot 2^2=5^2+16^2", "641=21^2+50\\cdot 2^2=25^2+4^2", "881=9^2+50\\cdot 4^2=25^2+16^2",
          "809=(-3)^2+50\\cdot 4^2=5^2+28^2"}},
        {8, Family::III, 2, {53, 141, 593, 409, 1361, 281},
         {"53=(-6)^2+17\\cdot 1^2=(-7)^2+2^2", "141=9^2+17\\cdot 2^2", "593=(-24)^2+17\\cdot 1^2=(-23)^2+8^2",
          "409=16^2+17\\cdot (-3)^2=(-3)^2+20^2", "1361=(-33)^2+17\\cdot 4^2=(-31)^2+20^2",
          "281=(-3)^2+17\\cdot 4^2=5^2+16^2"}},
        {16, Family::III, 1, {101, 269, 1361, 601, 5009, 1049},
         {"101=(-6)^2+65\\cdot 1^2", "269=(-3)^2+65\\cdot 2^2=13^2+10^2", "1361=36^2+65\\cdot 1^2=(-31)^2+20^2",
          "601=4^2+65\\cdot (-3)^2=5^2+24^2", "5009=(-63)^2+65\\cdot 4^2=65^2+(-28)^2",
          "1049=(-3)^2+65\\cdot 4^2=5^2+32^2"}},
    };
    return rows;
}

i64 parse_int(const std::string& s, const std::string& context)
{
    if (s.empty()) throw ConfigError("empty number in '" + context + "'");
    std::size_t used = 0;
    i64 v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw ConfigError("bad number '" + s + "' in '" + context + "'");
    }
    if (used != s.size()) throw ConfigError("bad number '" + s + "' in '" + context + "'");
    return v;
}

PrintedTerm parse_term(const std::string& term, const std::string& context)
{
    PrintedTerm t;
    std::string rest = term;
    if (auto star = rest.find('*'); star != std::string::npos) {
        t.coefficient = parse_int(rest.substr(0, star), context);
        rest = rest.substr(star + 1);
    }
    t.squared = rest.size() >= 2 && rest.compare(rest.size() - 2, 2, "^2") == 0;
    if (t.squared) rest.resize(rest.size() - 2);
    if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
    t.base = parse_int(rest, context);
    return t;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// Splits a sum on '+', noting empty summands.
std::vector<std::string> summands(const std::string& side, PrintedEquation& eq)
{
    std::vector<std::string> out;
    for (std::string& s : split(side, '+')) {
        if (s.empty())
            eq.typography.push_back("doubled '+'");
        else
            out.push_back(std::move(s));
    }
    return out;
}

i128 term_value(const PrintedTerm& t, bool force_square)
{
    const i128 base = (t.squared || force_square) ? static_cast<i128>(t.base) * t.base : t.base;
    return static_cast<i128>(t.coefficient) * base;
}

std::string to_text(const PrintedTerm& t)
{
    std::string base = t.base < 0 ? "(" + std::to_string(t.base) + ")" : std::to_string(t.base);
    std::string out = t.coefficient == 1 ? "" : std::to_string(t.coefficient) + "*";
    return out + base + (t.squared ? "^2" : "");
}

std::string i128_text(i128 v)
{
    return std::to_string(static_cast<long long>(v));
}

std::string square(i64 n)
{
    return (n < 0 ? "(" + std::to_string(n) + ")" : std::to_string(n)) + "^2";
}

std::string decomposition(const NormalizedRep& r)
{
    return std::to_string(r.p) + " = " + square(r.x) + "+" + std::to_string(r.d) + "*" + square(r.y) + " = "
           + square(r.u) + "+" + square(r.v);
}

u64 smallest_factor(u64 n)
{
    for (u64 q = 2; q * q <= n; ++q)
        if (n % q == 0) return q;
    return n;
}

void check_printed(WitnessEntry& e, const PrintedEquation& eq, i64 d)
{
    const i128 xy_value = term_value(eq.x, true) + term_value(eq.dy, true);
    const i128 literal = term_value(eq.x, false) + term_value(eq.dy, false);

    for (const std::string& note : eq.typography)
        e.errata.push_back({ErratumKind::typography, "'" + eq.text + "': " + note});
    if (eq.dy.coefficient != d)
        e.errata.push_back({ErratumKind::wrong_coefficient, "coefficient " + std::to_string(eq.dy.coefficient)
                                                                + " should be d = " + std::to_string(d)});
    if (!eq.x.squared || !eq.dy.squared) {
        const PrintedTerm& bad = eq.x.squared ? eq.dy : eq.x;
        e.errata.push_back({ErratumKind::missing_square, "term '" + to_text(bad) + "' lacks its square: literal value "
                                                             + i128_text(literal) + ", with the square "
                                                             + i128_text(xy_value)});
    }

    if (!is_prime(e.listed)) {
        const u64 q = smallest_factor(e.listed);
        std::string msg = std::to_string(e.listed) + " = " + std::to_string(q) + "*" + std::to_string(e.listed / q)
                          + " is not prime";
        if (xy_value > 0 && is_prime(static_cast<u64>(xy_value))) {
            e.used = static_cast<u64>(xy_value);
            msg += "; the printed decomposition gives " + std::to_string(e.used) + ", used instead";
        }
        e.errata.push_back({ErratumKind::not_prime, msg});
    }
    if (eq.label != e.listed)
        e.errata.push_back({ErratumKind::label, "equation labelled " + std::to_string(eq.label)
                                                    + " but the listed prime is " + std::to_string(e.listed)
                                                    + "; the printed x, y give " + i128_text(xy_value)});
    if (xy_value != static_cast<i128>(e.used))
        e.errata.push_back({ErratumKind::wrong_value, "x^2 + d*y^2 = " + i128_text(xy_value) + ", not "
                                                          + std::to_string(e.used)});
    if (eq.u && eq.v) {
        e.uv_printed = true;
        const i128 uv_value = term_value(*eq.u, true) + term_value(*eq.v, true);
        if (uv_value != static_cast<i128>(e.used))
            e.errata.push_back({ErratumKind::wrong_value, "u^2 + v^2 = " + i128_text(uv_value) + ", not "
                                                              + std::to_string(e.used)});
    }
}

bool same_up_to_sign(const PrintedEquation& eq, const NormalizedRep& rep)
{
    if (abs64(eq.x.base) != abs64(rep.x) || abs64(eq.dy.base) != abs64(rep.y)) return false;
    if (!eq.u || !eq.v) return true;
    const i64 pu = abs64(eq.u->base), pv = abs64(eq.v->base);
    const i64 ru = abs64(rep.u), rv = abs64(rep.v);
    return (pu == ru && pv == rv) || (pu == rv && pv == ru);
}

} // namespace

std::string_view to_string(ErratumKind k) noexcept
{
    switch (k) {
    case ErratumKind::label: return "label";
    case ErratumKind::not_prime: return "not-prime";
    case ErratumKind::missing_square: return "missing-square";
    case ErratumKind::wrong_coefficient: return "wrong-coefficient";
    case ErratumKind::wrong_value: return "wrong-value";
    case ErratumKind::mismatch_decomposition: return "decomposition";
    case ErratumKind::typography: return "typography";
    }
    return "?";
}

PrintedEquation parse_printed_equation(const std::string& text)
{
    PrintedEquation eq;
    eq.text = text;
    std::string s;
    for (std::size_t i = 0; i < text.size();) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
        } else if (text.compare(i, 5, "\\cdot") == 0) {
            s += '*';
            i += 5;
        } else if (text.compare(i, 4, "\\dot") == 0) {
            s += '*';
            i += 4;
            eq.typography.push_back("\\dot written for \\cdot");
        } else {
            s += text[i++];
        }
    }
    const std::vector<std::string> sides = split(s, '=');
    if (sides.size() != 2 && sides.size() != 3) throw ConfigError("expected 'p=...' or 'p=...=...': " + text);
    const i64 label = parse_int(sides[0], text);
    if (label <= 0) throw ConfigError("nonpositive label in " + text);
    eq.label = static_cast<u64>(label);

    const std::vector<std::string> xy = summands(sides[1], eq);
    if (xy.size() != 2) throw ConfigError("expected two summands in '" + sides[1] + "'");
    eq.x = parse_term(xy[0], text);
    eq.dy = parse_term(xy[1], text);
    if (sides.size() == 3) {
        const std::vector<std::string> uv = summands(sides[2], eq);
        if (uv.size() != 2) throw ConfigError("expected two summands in '" + sides[2] + "'");
        eq.u = parse_term(uv[0], text);
        eq.v = parse_term(uv[1], text);
    }
    return eq;
}

bool WitnessReport::all_land() const noexcept
{
    for (const WitnessEntry& e : entries)
        if (!e.lands) return false;
    return !entries.empty();
}

bool WitnessReport::all_match() const noexcept
{
    for (const WitnessEntry& e : entries)
        if (e.status != Status::match) return false;
    return !entries.empty();
}

std::size_t WitnessReport::errata_count() const noexcept
{
    std::size_t n = 0;
    for (const WitnessEntry& e : entries) n += e.errata.size();
    return n;
}

WitnessReport witness_table()
{
    WitnessReport report;
    for (const TableRow& row : reference_rows()) {
        const i64 d = discriminant_d(row.b);
        for (std::size_t i = 0; i < row.primes.size(); ++i) {
            WitnessEntry e;
            e.b = row.b;
            e.listed = e.used = row.primes[i];
            e.intended = CaseId{row.family, row.b_class, static_cast<char>('a' + i)};
            if (!row.equations.empty()) {
                e.printed = parse_printed_equation(row.equations[i]);
                check_printed(e, *e.printed, d);
            }
            const VerifyRecord r = verify_one(e.b, e.used);
            if (r.rep)
                for (Erratum& err : e.errata)
                    if (err.kind != ErratumKind::typography) err.message += "; verified " + decomposition(*r.rep);
            e.status = r.status;
            e.rep = r.rep;
            e.actual = r.case_id;
            e.lands = e.actual && *e.actual == e.intended;
            if (e.actual && is_valid_case(*e.actual)) report.covered.insert(*e.actual);
            if (e.printed && e.rep) {
                e.printed_matches = same_up_to_sign(*e.printed, *e.rep);
                const bool already = std::any_of(e.errata.begin(), e.errata.end(), [](const Erratum& err) {
                    return err.kind == ErratumKind::wrong_value;
                });
                if (!e.printed_matches && !already)
                    e.errata.push_back({ErratumKind::mismatch_decomposition,
                                        "printed decomposition differs from the computed one"});
            }
            report.entries.push_back(std::move(e));
        }
    }
    for (const CaseId& id : all_case_ids())
        if (!report.covered.count(id)) report.missing.push_back(id);
    return report;
}

std::string describe(const WitnessReport& report)
{
    std::ostringstream out;
    for (const WitnessEntry& e : report.entries) {
        out << "b=" << e.b << " p=" << e.used;
        if (e.used != e.listed) out << " (listed " << e.listed << ")";
        out << " intended " << e.intended.to_string() << " actual "
            << (e.actual ? e.actual->to_string() : std::string("-")) << (e.lands ? " ok" : " MISPLACED") << ' '
            << to_string(e.status);
        if (e.rep) out << "  " << decomposition(*e.rep);
        if (e.printed && !e.uv_printed) out << "  [u, v not printed]";
        out << '\n';
        for (const Erratum& err : e.errata) out << "  erratum (" << to_string(err.kind) << "): " << err.message << '\n';
    }
    out << "covered " << report.covered.size() << "/" << all_case_ids().size() << " cases";
    if (!report.missing.empty()) {
        out << "; missing:";
        for (const CaseId& id : report.missing) out << ' ' << id.to_string();
    }
    out << "\nerrata: " << report.errata_count() << '\n';
    return out.str();
}

} // namespace qlucas
