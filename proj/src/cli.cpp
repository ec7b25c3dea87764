#include "effa/cli.hpp"

#include "effa/convexgame.hpp"
#include "effa/error.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace effa {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string t; in >> t;) {
        out.push_back(t);
    }
    return out;
}

struct Line {
    std::size_t no = 0;
    std::string body;
    std::vector<std::string> tok;

    /// Text after the `->` token.
    std::string rhs() const {
        const auto arrow = std::find(tok.begin(), tok.end(), "->");
        if (arrow == tok.end()) {
            throw ParseError(no, "expected '->'");
        }
        std::string s;
        for (auto it = std::next(arrow); it != tok.end(); ++it) {
            s += " " + *it;
        }
        return s;
    }
};

[[noreturn]] void fail(std::size_t line, const std::string& what) { throw ParseError(line, what); }

class Doc {
public:
    Doc(const std::string& text, std::set<std::string> single, std::set<std::string> repeated) {
        std::istringstream in(text);
        std::string raw;
        std::size_t no = 0;
        while (std::getline(in, raw)) {
            ++no;
            const auto hash = raw.find('#');
            Line l{no, trim(raw.substr(0, hash)), {}};
            if (l.body.empty()) {
                continue;
            }
            l.tok = split_ws(l.body);
            const auto& key = l.tok[0];
            if (single.count(key)) {
                if (singles_.count(key)) {
                    fail(no, "duplicate '" + key + "' declaration");
                }
                singles_.emplace(key, l);
            } else if (repeated.count(key)) {
                multi_[key].push_back(l);
            } else {
                fail(no, "unknown keyword '" + key + "'");
            }
            last_ = no;
        }
    }

    const Line* get(const std::string& key) const {
        auto it = singles_.find(key);
        return it == singles_.end() ? nullptr : &it->second;
    }
    const Line& need(const std::string& key) const {
        const Line* l = get(key);
        if (!l) {
            fail(last_ + 1, "missing '" + key + "' declaration");
        }
        return *l;
    }
    const std::vector<Line>& all(const std::string& key) const {
        static const std::vector<Line> none;
        auto it = multi_.find(key);
        return it == multi_.end() ? none : it->second;
    }
    std::size_t last() const { return last_; }

private:
    std::map<std::string, Line> singles_;
    std::map<std::string, std::vector<Line>> multi_;
    std::size_t last_ = 0;
};

Carrier declared(const Line& l, bool allow_empty = false) {
    std::vector<std::string> names(l.tok.begin() + 1, l.tok.end());
    if (names.empty() && !allow_empty) {
        fail(l.no, "'" + l.tok[0] + "' declares nothing");
    }
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (!seen.insert(n).second) {
            fail(l.no, "'" + n + "' declared twice");
        }
        if (n.find_first_of(":|*=") != std::string::npos || n == "->") {
            fail(l.no, "bad name '" + n + "'");
        }
    }
    return Carrier(std::move(names));
}

Index lookup(const Carrier& c, const std::string& name, std::size_t line, const char* what) {
    const auto i = c.find(name);
    if (!i) {
        fail(line, std::string("undeclared ") + what + " '" + name + "'");
    }
    return *i;
}

struct Header {
    Monad monad;
    OutputKind kind = OutputKind::unit_interval;
    Carrier alphabet;
};

Header header(const Doc& d) {
    Header h;
    const Line& m = d.need("monad");
    const auto& t = m.tok;
    if (t.size() == 2 && t[1] == "dist") {
        h.monad = Monad::dist();
    } else if (t.size() == 2 && t[1] == "convex") {
        h.monad = Monad::convex();
    } else if (t.size() == 3 && t[1] == "weighted") {
        try {
            h.monad = Monad::weighted(semiring_builtin(t[2]));
        } catch (const Error& e) {
            fail(m.no, e.what());
        }
    } else {
        fail(m.no, "expected 'monad dist', 'monad weighted <semiring>' or 'monad convex'");
    }
    h.kind = default_kind(h.monad);
    if (const Line* s = d.get("semantics")) {
        if (h.monad.kind != MonadKind::convex) {
            fail(s->no, "semantics apply to convex automata only");
        }
        if (s->tok.size() != 2) {
            fail(s->no, "expected 'semantics max|min|interval'");
        }
        if (s->tok[1] == "max") {
            h.kind = OutputKind::max;
        } else if (s->tok[1] == "min") {
            h.kind = OutputKind::min;
        } else if (s->tok[1] == "interval") {
            h.kind = OutputKind::interval;
        } else {
            fail(s->no, "unknown semantics '" + s->tok[1] + "'");
        }
    }
    h.alphabet = declared(d.need("alphabet"));
    return h;
}

std::vector<std::pair<Index, std::string>> entries(const Carrier& c, const std::string& text, std::size_t line,
                                                   const char* what) {
    std::vector<std::pair<Index, std::string>> out;
    std::set<Index> seen;
    for (const auto& tok : split_ws(text)) {
        const auto colon = tok.find(':');
        if (colon == std::string::npos) {
            fail(line, "expected name:value, got '" + tok + "'");
        }
        const Index i = lookup(c, tok.substr(0, colon), line, what);
        if (!seen.insert(i).second) {
            fail(line, "'" + c.name(i) + "' listed twice");
        }
        out.emplace_back(i, tok.substr(colon + 1));
    }
    return out;
}

Rational number(const std::string& s, std::size_t line) {
    try {
        return Rational::parse(s);
    } catch (const Error& e) {
        fail(line, e.what());
    }
}

Dist parse_dist(const Carrier& c, const std::string& text, std::size_t line, const char* what) {
    Support s;
    for (const auto& [i, v] : entries(c, text, line, what)) {
        s.emplace(i, number(v, line));
    }
    try {
        return Dist(std::move(s));
    } catch (const Error& e) {
        fail(line, e.what());
    }
}

Effect parse_effect(const Monad& m, const Carrier& c, const std::string& text, std::size_t line,
                    const char* what) {
    switch (m.kind) {
    case MonadKind::dist:
        return parse_dist(c, text, line, what);
    case MonadKind::weighted: {
        WeightedVec v(m.semiring);
        for (const auto& [i, s] : entries(c, text, line, what)) {
            try {
                v.add(i, m.semiring->parse(s));
            } catch (const Error& e) {
                fail(line, e.what());
            }
        }
        return v;
    }
    case MonadKind::convex: {
        std::vector<Dist> gens;
        std::istringstream in(text);
        for (std::string part; std::getline(in, part, '|');) {
            gens.push_back(parse_dist(c, part, line, what));
        }
        if (gens.empty()) {
            fail(line, "a convex set needs at least one distribution");
        }
        return ConvexSet(std::move(gens));
    }
    }
    fail(line, "unknown monad");
}

OutputValue parse_output(const Header& h, const std::string& s, std::size_t line) {
    if (h.monad.kind == MonadKind::weighted) {
        try {
            return h.monad.semiring->parse(s);
        } catch (const Error& e) {
            fail(line, e.what());
        }
    }
    auto unit_range = [&](const Rational& r) {
        if (r.sign() < 0 || Rational(1) < r) {
            fail(line, "output " + r.str() + " is not a probability");
        }
        return r;
    };
    if (!s.empty() && s.front() == '[') {
        const auto comma = s.find(',');
        if (h.kind != OutputKind::interval || s.back() != ']' || comma == std::string::npos) {
            fail(line, "interval outputs need 'semantics interval' and the form [lo,hi]");
        }
        Interval iv{unit_range(number(s.substr(1, comma - 1), line)),
                    unit_range(number(s.substr(comma + 1, s.size() - comma - 2), line))};
        if (iv.hi < iv.lo) {
            fail(line, "empty interval " + s);
        }
        return iv;
    }
    return Weight(unit_range(number(s, line)));
}

std::vector<OutputValue> parse_outputs(const Header& h, const Carrier& c, const Line& l, const char* what) {
    std::vector<std::optional<OutputValue>> got(c.size());
    for (const auto& [i, s] : entries(c, l.body.substr(l.tok[0].size()), l.no, what)) {
        got[i] = parse_output(h, s, l.no);
    }
    std::vector<OutputValue> out;
    for (Index i = 0; i < c.size(); ++i) {
        if (got[i]) {
            out.push_back(*got[i]);
        } else if (h.monad.kind == MonadKind::weighted) {
            out.push_back(h.monad.semiring->zero);
        } else {
            fail(l.no, std::string("no value for ") + what + " '" + c.name(i) + "'");
        }
    }
    return out;
}

/// Table of effects indexed by (row, letter) from lines `key row letter -> ...`.
std::vector<Effect> effect_table(const Doc& d, const std::string& key, const Monad& m, const Carrier& rows,
                                 const Carrier& letters, const Carrier& cod, const char* row_what,
                                 const char* letter_what, const char* cod_what) {
    std::vector<std::optional<Effect>> t(rows.size() * letters.size());
    for (const Line& l : d.all(key)) {
        if (l.tok.size() < 4 || l.tok[3] != "->") {
            fail(l.no, "expected '" + key + " <" + row_what + "> <" + letter_what + "> -> ...'");
        }
        const Index r = lookup(rows, l.tok[1], l.no, row_what);
        const Index x = lookup(letters, l.tok[2], l.no, letter_what);
        auto& slot = t[r * letters.size() + x];
        if (slot) {
            fail(l.no, "duplicate " + key + " line");
        }
        slot = parse_effect(m, cod, l.rhs(), l.no, cod_what);
    }
    std::vector<Effect> out;
    for (Index r = 0; r < rows.size(); ++r) {
        for (Index x = 0; x < letters.size(); ++x) {
            auto& slot = t[r * letters.size() + x];
            if (slot) {
                out.push_back(std::move(*slot));
            } else if (m.kind == MonadKind::weighted) {
                out.push_back(WeightedVec(m.semiring));
            } else {
                fail(d.last() + 1, "missing " + key + " for " + rows.name(r) + " " + letters.name(x));
            }
        }
    }
    return out;
}

std::string print_effect(const Effect& e, const Carrier& c) {
    auto dist = [&](const Dist& d) {
        std::string s;
        for (const auto& [i, p] : d.weights()) {
            s += (s.empty() ? "" : " ") + c.name(i) + ":" + p.str();
        }
        return s;
    };
    if (const auto* d = std::get_if<Dist>(&e)) {
        return dist(*d);
    }
    if (const auto* v = std::get_if<WeightedVec>(&e)) {
        std::string s;
        for (const auto& [i, w] : v->weights()) {
            s += (s.empty() ? "" : " ") + c.name(i) + ":" + w.str();
        }
        return s;
    }
    std::string s;
    for (const auto& g : std::get<ConvexSet>(e).generators()) {
        s += (s.empty() ? "" : " | ") + dist(g);
    }
    return s;
}

std::string names(const Carrier& c) {
    std::string s;
    for (const auto& n : c.names()) {
        s += " " + n;
    }
    return s;
}

std::string print_header(const Monad& m, OutputKind kind, const Carrier& alphabet) {
    std::string s = "monad " + (m.kind == MonadKind::weighted ? "weighted " + m.semiring->name : m.name()) + "\n";
    if (m.kind == MonadKind::convex) {
        s += "semantics " + to_string(kind) + "\n";
    }
    return s + "alphabet" + names(alphabet) + "\n";
}

std::string print_values(const std::string& key, const Carrier& c, const std::vector<OutputValue>& v) {
    std::string s = key;
    for (Index i = 0; i < c.size(); ++i) {
        s += " " + c.name(i) + ":" + to_string(v[i]);
    }
    return s + "\n";
}

template <class F>
auto wrap_validate(std::size_t line, F&& f) {
    try {
        return f();
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        fail(line, e.what());
    }
}

} // namespace

EffAutomaton parse_automaton(const std::string& text) {
    const Doc d(text, {"monad", "semantics", "alphabet", "states", "init", "output"}, {"trans"});
    const Header h = header(d);
    EffAutomaton a;
    a.monad = h.monad;
    a.kind = h.kind;
    a.alphabet = h.alphabet;
    a.states = declared(d.need("states"));
    const Line& init = d.need("init");
    a.init = parse_effect(a.monad, a.states, init.body.substr(4), init.no, "state");
    a.trans = effect_table(d, "trans", a.monad, a.states, a.alphabet, a.states, "state", "letter", "state");
    a.outputs = parse_outputs(h, a.states, d.need("output"), "state");
    wrap_validate(d.last(), [&] {
        a.validate();
        return 0;
    });
    return a;
}

std::string print_automaton(const EffAutomaton& a) {
    std::string s = print_header(a.monad, a.kind, a.alphabet);
    s += "states" + names(a.states) + "\n";
    s += "init " + print_effect(a.init, a.states) + "\n";
    for (Index q = 0; q < a.states.size(); ++q) {
        for (Index x = 0; x < a.alphabet.size(); ++x) {
            const std::string rhs = print_effect(a.delta(q, x), a.states);
            s += "trans " + a.states.name(q) + " " + a.alphabet.name(x) + " ->" + (rhs.empty() ? "" : " " + rhs) + "\n";
        }
    }
    return s + print_values("output", a.states, a.outputs);
}

EffRecognizer parse_recognizer(const std::string& text) {
    const Doc d(text, {"monad", "semantics", "alphabet", "monoid", "unit", "pred"}, {"table", "hom"});
    const Header h = header(d);
    const Carrier m = declared(d.need("monoid"));
    const Line& u = d.need("unit");
    if (u.tok.size() != 2) {
        fail(u.no, "expected 'unit <element>'");
    }
    const Index e = lookup(m, u.tok[1], u.no, "element");
    std::vector<std::optional<Index>> table(m.size() * m.size());
    for (const Line& l : d.all("table")) {
        const std::string row = l.body.substr(5);
        const auto star = row.find('*');
        const auto eq = row.find('=');
        if (star == std::string::npos || eq == std::string::npos || eq < star) {
            fail(l.no, "expected 'table x*y=z'");
        }
        const Index x = lookup(m, trim(row.substr(0, star)), l.no, "element");
        const Index y = lookup(m, trim(row.substr(star + 1, eq - star - 1)), l.no, "element");
        const Index z = lookup(m, trim(row.substr(eq + 1)), l.no, "element");
        auto& slot = table[x * m.size() + y];
        if (slot) {
            fail(l.no, "duplicate table entry");
        }
        slot = z;
    }
    std::vector<Index> flat;
    for (Index i = 0; i < table.size(); ++i) {
        if (!table[i]) {
            fail(d.last() + 1, "missing table entry " + m.name(i / m.size()) + "*" + m.name(i % m.size()));
        }
        flat.push_back(*table[i]);
    }
    EffRecognizer r;
    r.kind = h.kind;
    r.morphism.monad = h.monad;
    r.morphism.alphabet = h.alphabet;
    r.morphism.target = wrap_validate(d.need("monoid").no, [&] {
        return std::make_shared<const FinMonoid>(m, flat, e);
    });
    std::vector<std::optional<Effect>> hom(h.alphabet.size());
    for (const Line& l : d.all("hom")) {
        if (l.tok.size() < 3 || l.tok[2] != "->") {
            fail(l.no, "expected 'hom <letter> -> ...'");
        }
        auto& slot = hom[lookup(h.alphabet, l.tok[1], l.no, "letter")];
        if (slot) {
            fail(l.no, "duplicate hom line");
        }
        slot = parse_effect(h.monad, m, l.rhs(), l.no, "element");
    }
    for (Index x = 0; x < hom.size(); ++x) {
        if (!hom[x]) {
            fail(d.last() + 1, "missing hom for " + h.alphabet.name(x));
        }
        r.morphism.letters.push_back(std::move(*hom[x]));
    }
    r.predicate = parse_outputs(h, m, d.need("pred"), "element");
    wrap_validate(d.last(), [&] {
        r.validate();
        return 0;
    });
    return r;
}

std::string print_recognizer(const EffRecognizer& r) {
    const auto& h = r.morphism;
    const auto& m = *h.target;
    std::string s = print_header(h.monad, r.kind, h.alphabet);
    s += "monoid" + names(m.elements()) + "\n";
    s += "unit " + m.elements().name(m.unit()) + "\n";
    for (Index x = 0; x < m.size(); ++x) {
        for (Index y = 0; y < m.size(); ++y) {
            s += "table " + m.elements().name(x) + "*" + m.elements().name(y) + "=" +
                 m.elements().name(m.mul(x, y)) + "\n";
        }
    }
    for (Index a = 0; a < h.alphabet.size(); ++a) {
        const std::string rhs = print_effect(h.letters[a], m.elements());
        s += "hom " + h.alphabet.name(a) + " ->" + (rhs.empty() ? "" : " " + rhs) + "\n";
    }
    return s + print_values("pred", m.elements(), r.predicate);
}

BialgRecognizer parse_bialgebra(const std::string& text) {
    const Doc d(text, {"monad", "semantics", "alphabet", "states", "generators", "init", "output"},
                {"gen", "letter"});
    const Header h = header(d);
    BialgRecognizer b;
    b.monad = h.monad;
    b.kind = h.kind;
    b.alphabet = h.alphabet;
    b.states = declared(d.need("states"));
    b.generators = declared(d.need("generators"));
    const auto gens = effect_table(d, "gen", b.monad, b.generators, b.states, b.states, "generator", "state", "state");
    for (Index g = 0; g < b.generators.size(); ++g) {
        std::vector<Effect> rows(gens.begin() + static_cast<long>(g * b.states.size()),
                                 gens.begin() + static_cast<long>((g + 1) * b.states.size()));
        b.gen_images.emplace_back(b.monad, b.states, b.states, std::move(rows));
    }
    const auto lets = effect_table(d, "letter", b.monad, b.alphabet, b.states, b.states, "letter", "state", "state");
    for (Index x = 0; x < b.alphabet.size(); ++x) {
        std::vector<Effect> rows(lets.begin() + static_cast<long>(x * b.states.size()),
                                 lets.begin() + static_cast<long>((x + 1) * b.states.size()));
        b.letters.emplace_back(b.monad, b.states, b.states, std::move(rows));
    }
    const Line& init = d.need("init");
    b.init = parse_effect(b.monad, b.states, init.body.substr(4), init.no, "state");
    b.outputs = parse_outputs(h, b.states, d.need("output"), "state");
    wrap_validate(d.last(), [&] {
        b.validate();
        return 0;
    });
    return b;
}

std::string print_bialgebra(const BialgRecognizer& b) {
    std::string s = print_header(b.monad, b.kind, b.alphabet);
    s += "states" + names(b.states) + "\n";
    s += "generators" + names(b.generators) + "\n";
    auto rows = [&](const std::string& key, const std::string& head, const Channel& c) {
        for (Index q = 0; q < b.states.size(); ++q) {
            const std::string rhs = print_effect(c(q), b.states);
            s += key + " " + head + " " + b.states.name(q) + " ->" + (rhs.empty() ? "" : " " + rhs) + "\n";
        }
    };
    for (Index g = 0; g < b.generators.size(); ++g) {
        rows("gen", b.generators.name(g), b.gen_images[g]);
    }
    for (Index x = 0; x < b.alphabet.size(); ++x) {
        rows("letter", b.alphabet.name(x), b.letters[x]);
    }
    s += "init " + print_effect(b.init, b.states) + "\n";
    return s + print_values("output", b.states, b.outputs);
}

FormalCombo parse_combo(const Carrier& alphabet, const std::string& text) {
    FormalCombo c;
    std::istringstream in(text);
    for (std::string term; std::getline(in, term, '+');) {
        term = trim(term);
        const auto star = term.find('*');
        if (star == std::string::npos) {
            throw InputError("expected weight*word, got '" + term + "'");
        }
        c[parse_word(alphabet, trim(term.substr(star + 1)))] += Rational::parse(trim(term.substr(0, star)));
    }
    validate_combo(c);
    return c;
}

// ---- command line ----------------------------------------------------------

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

EffAutomaton load_automaton(const std::string& path) {
    try {
        return parse_automaton(slurp(path));
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

bool is_bialgebra_text(const std::string& text) {
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) {
        const auto t = split_ws(l.substr(0, l.find('#')));
        if (!t.empty() && t[0] == "generators") {
            return true;
        }
    }
    return false;
}

struct Formatter {
    int digits = -1;

    std::string num(const Rational& r) const { return digits < 0 ? r.str() : r.decimal(digits); }
    std::string value(const OutputValue& v) const {
        if (const auto* w = std::get_if<Weight>(&v)) {
            return w->finite() ? num(w->value()) : w->str();
        }
        const auto& iv = std::get<Interval>(v);
        return "[" + num(iv.lo) + "," + num(iv.hi) + "]";
    }
    std::string vec(const RVec& v) const {
        std::string s;
        for (const auto& x : v) {
            s += (s.empty() ? "" : " ") + num(x);
        }
        return s;
    }
};

template <class V>
std::string report(const std::vector<V>& violations, const Carrier& alphabet, const Formatter& f,
                   std::size_t maxlen) {
    if (violations.empty()) {
        return "ok: recognized on all words up to length " + std::to_string(maxlen) + "\n";
    }
    std::string s;
    for (const auto& v : violations) {
        s += word_to_string(alphabet, v.word) + ": automaton " + f.value(v.automaton) + ", recognizer " +
             f.value(v.recognizer) + "\n";
    }
    return s;
}

} // namespace

CommandResult run_command(const std::vector<std::string>& args) {
    CommandResult res;
    std::ostringstream out;
    CLI::App app{"Effectful finite automata: evaluation, algebraic recognizers, syntactic congruence"};
    app.require_subcommand(1);
    app.fallthrough();
    Formatter fmt;
    app.add_option("--decimal", fmt.digits, "Render numbers with K decimal digits");

    std::string file, file2, c1, c2, position;
    std::vector<std::string> words;
    std::size_t maxlen = 6;

    auto* eval = app.add_subcommand("eval", "Evaluate words (a.b.c, eps for the empty word)");
    eval->add_option("file", file)->required();
    eval->add_option("words", words)->required();
    auto* to_monoid = app.add_subcommand("to-monoid", "Recognizer over the witness monoid");
    to_monoid->add_option("file", file)->required();
    auto* from_monoid = app.add_subcommand("from-monoid", "Automaton of a recognizer file");
    from_monoid->add_option("file", file)->required();
    auto* to_bialg = app.add_subcommand("to-bialgebra", "Channel-represented recognizer");
    to_bialg->add_option("file", file)->required();
    auto* from_bialg = app.add_subcommand("from-bialgebra", "Automaton over the generators");
    from_bialg->add_option("file", file)->required();
    auto* verify = app.add_subcommand("verify", "Compare an automaton with a recognizer");
    verify->add_option("file", file)->required();
    verify->add_option("recognizer", file2)->required();
    verify->add_option("--max-len", maxlen);
    auto* equiv = app.add_subcommand("equiv", "Compare two automata on all short words");
    equiv->add_option("file1", file)->required();
    equiv->add_option("file2", file2)->required();
    equiv->add_option("--max-len", maxlen);
    auto* minim = app.add_subcommand("minimize", "Minimal linear representation");
    minim->add_option("file", file)->required();
    auto* syn = app.add_subcommand("syncong", "Syntactic congruence of two word combinations");
    syn->add_option("file", file)->required();
    syn->add_option("combo1", c1)->required();
    syn->add_option("combo2", c2)->required();
    auto* comm = app.add_subcommand("commutative", "Whether the syntactic monoid is commutative");
    comm->add_option("file", file)->required();
    auto* game = app.add_subcommand("game", "Solve a position of the rewriting game (1/3*0 + 2/3*2)");
    game->add_option("position", position)->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        res.out = app.help();
        return res;
    } catch (const CLI::CallForAllHelp&) {
        res.out = app.help("", CLI::AppFormatMode::All);
        return res;
    } catch (const CLI::ParseError& e) {
        res.status = 2;
        res.err = std::string(e.what()) + "\n";
        return res;
    }

    try {
        if (*eval) {
            const auto a = load_automaton(file);
            for (const auto& w : words) {
                out << fmt.value(eval_word(a, parse_word(a.alphabet, w))) << "\n";
            }
        } else if (*to_monoid) {
            out << print_recognizer(automaton_to_recognizer(load_automaton(file)));
        } else if (*from_monoid) {
            EffRecognizer r;
            try {
                r = parse_recognizer(slurp(file));
            } catch (const ParseError& e) {
                throw InputError(file + ": " + e.what());
            }
            out << print_automaton(recognizer_to_automaton(r));
        } else if (*to_bialg) {
            out << print_bialgebra(automaton_to_bialgebra(load_automaton(file)));
        } else if (*from_bialg) {
            BialgRecognizer b;
            try {
                b = parse_bialgebra(slurp(file));
            } catch (const ParseError& e) {
                throw InputError(file + ": " + e.what());
            }
            out << print_automaton(bialgebra_to_automaton(b));
        } else if (*verify) {
            const auto a = load_automaton(file);
            const std::string text = slurp(file2);
            try {
                if (is_bialgebra_text(text)) {
                    const auto v = verify_recognition(a, parse_bialgebra(text), maxlen);
                    out << report(v, a.alphabet, fmt, maxlen);
                    res.status = v.empty() ? 0 : 1;
                } else {
                    const auto v = verify_recognition(a, parse_recognizer(text), maxlen);
                    out << report(v, a.alphabet, fmt, maxlen);
                    res.status = v.empty() ? 0 : 1;
                }
            } catch (const ParseError& e) {
                throw InputError(file2 + ": " + e.what());
            }
        } else if (*equiv) {
            const auto a = load_automaton(file);
            const auto b = load_automaton(file2);
            if (!(a.alphabet == b.alphabet)) {
                throw InputError("the automata have different alphabets");
            }
            if (const auto w = language_difference(a, b, maxlen)) {
                out << "differ on " << word_to_string(a.alphabet, *w) << ": " << fmt.value(eval_word(a, *w))
                    << " vs " << fmt.value(eval_word(b, *w)) << "\n";
                res.status = 1;
            } else {
                out << "equivalent on all words up to length " << maxlen << "\n";
            }
        } else if (*minim) {
            const auto a = load_automaton(file);
            const auto m = minimize(to_linear(a));
            out << "dimension " << m.n << "\n";
            out << "initial " << fmt.vec(m.initial) << "\n";
            for (Index x = 0; x < m.letters.size(); ++x) {
                out << "letter " << a.alphabet.name(x) << "\n";
                for (std::size_t i = 0; i < m.n; ++i) {
                    out << "  " << fmt.vec(m.letters[x].row(i)) << "\n";
                }
            }
            out << "final " << fmt.vec(m.final) << "\n";
        } else if (*syn) {
            const auto a = load_automaton(file);
            const auto rep = minimize(to_linear(a));
            const bool same = syn_congruent(rep, parse_combo(a.alphabet, c1), parse_combo(a.alphabet, c2));
            out << (same ? "true" : "false") << "\n";
            res.status = same ? 0 : 1;
        } else if (*comm) {
            const bool c = is_commutative(minimize(to_linear(load_automaton(file))));
            out << (c ? "true" : "false") << "\n";
            res.status = c ? 0 : 1;
        } else if (*game) {
            const auto p = parse_position(position);
            const auto [q, trace] = solve(p);
            for (const auto& m : trace) {
                out << (m.dir == Move::Dir::split ? "split " : "merge ") << m.n << " " << fmt.num(m.lambda) << "\n";
            }
            std::string fin;
            for (const auto& [n, r] : q) {
                fin += (fin.empty() ? "" : " + ") + fmt.num(r) + "*" + std::to_string(n);
            }
            out << "final " << fin << "\n";
        }
    } catch (const std::exception& e) {
        res.status = 2;
        res.err = std::string("error: ") + e.what() + "\n";
        return res;
    }
    res.out = out.str();
    return res;
}

} // namespace effa
