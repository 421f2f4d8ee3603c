#include "genstab/catalog.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace genstab {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(' || c == '{') ++depth;
        if (c == ')' || c == '}') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

int min_rank(char series) {
    switch (series) {
        case 'B': return 2;
        case 'C': return 2;
        case 'D': return 4;
        default: return 1;
    }
}

class ExprParser {
public:
    ExprParser(const std::string& s, long l, long p) : s_(s), l_(l), p_(p) {}

    long parse() {
        long v = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    const std::string& s_;
    long l_, p_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("expression '" + s_ + "': " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    long expr() {
        long v = term();
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }
    long term() {
        long v = unary();
        while (eat('*')) v *= unary();
        return v;
    }
    long unary() {
        if (eat('-')) return -unary();
        return atom();
    }
    long atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        if (eat('(')) {
            long v = expr();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            long v = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) v = 10 * v + (s_[pos_++] - '0');
            return v;
        }
        std::string name;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) name += s_[pos_++];
        if (name == "l") return l_;
        if (name == "p") return p_;
        if (name == "div" || name == "eq" || name == "gcd") {
            if (!eat('(')) fail("missing '(' after " + name);
            long a = expr();
            if (!eat(',')) fail("missing ','");
            long b = expr();
            if (!eat(')')) fail("missing ')'");
            if (name == "div") return a != 0 && b % a == 0 ? 1 : 0;
            if (name == "eq") return a == b ? 1 : 0;
            return std::gcd(a, b);
        }
        fail("unknown token '" + name + "'");
    }
};

int group_dim_cached(char series, int rank) {
    static std::mutex mu;
    static std::map<std::pair<char, int>, int> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(series, rank);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    int d = group_dim(series, rank);
    cache.emplace(key, d);
    return d;
}

const RootSystem& root_system_cached(char series, int rank) {
    static std::mutex mu;
    static std::map<std::pair<char, int>, std::unique_ptr<RootSystem>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{series, rank}];
    if (!slot) slot = std::make_unique<RootSystem>(build_root_system(series, rank));
    return *slot;
}

struct StabAcc {
    int unipotent = 0;
    int torus = 0;
    std::vector<std::pair<char, int>> simple;
    std::vector<std::string> finite;
    std::optional<std::vector<int>> parabolic;
    bool semi = false;

    void scale(int m) {
        unipotent *= m;
        torus *= m;
        auto s = simple;
        for (int i = 1; i < m; ++i) simple.insert(simple.end(), s.begin(), s.end());
    }
    void absorb(const StabAcc& o) {
        unipotent += o.unipotent;
        torus += o.torus;
        simple.insert(simple.end(), o.simple.begin(), o.simple.end());
        finite.insert(finite.end(), o.finite.begin(), o.finite.end());
        if (o.parabolic) parabolic = o.parabolic;
        semi = semi || o.semi;
    }
};

class StabParser {
public:
    StabParser(const std::string& s, int l, const KValue& k) : s_(s), l_(l), k_(k) {}

    StabAcc parse() {
        StabAcc a = sequence();
        if (pos_ != s_.size()) fail("unbalanced ')'");
        return a;
    }

private:
    const std::string& s_;
    int l_;
    KValue k_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("stabilizer '" + s_ + "': " + what);
    }
    bool at(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

    std::string bracketed(char open, char close) {
        ++pos_;
        std::size_t start = pos_;
        int depth = 1;
        while (pos_ < s_.size()) {
            if (s_[pos_] == open) ++depth;
            if (s_[pos_] == close && --depth == 0) break;
            ++pos_;
        }
        if (pos_ >= s_.size()) fail("missing '" + std::string(1, close) + "'");
        return s_.substr(start, pos_++ - start);
    }
    std::string subscript() {
        if (!at('_')) fail("expected '_'");
        ++pos_;
        if (at('{')) return bracketed('{', '}');
        if (at('(')) return "(" + bracketed('(', ')') + ")";
        std::string out;
        if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) return std::string(1, s_[pos_++]);
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) out += s_[pos_++];
        if (out.empty()) fail("empty subscript");
        return out;
    }
    int value(const std::string& e) const {
        if (e == "k") return k_.k;
        return static_cast<int>(eval_expression(e, l_, 0));
    }
    std::optional<int> exponent() {
        if (!at('^')) return std::nullopt;
        ++pos_;
        if (at('(')) return value(bracketed('(', ')'));
        if (at('{')) return value(bracketed('{', '}'));
        std::string out;
        if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) out = s_[pos_++];
        else
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) out += s_[pos_++];
        if (out.empty()) fail("empty exponent");
        return value(out);
    }

    StabAcc sequence() {
        StabAcc acc;
        while (pos_ < s_.size() && !at(')')) {
            char c = s_[pos_];
            if (c == '.' || std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
                continue;
            }
            StabAcc f;
            if (s_.compare(pos_, 3, "(*)") == 0) {
                pos_ += 3;
                acc.semi = true;
                continue;
            }
            if (c == '(') {
                ++pos_;
                f = sequence();
                if (!at(')')) fail("missing ')'");
                ++pos_;
            } else if (s_.compare(pos_, 4, "Alt(") == 0 || s_.compare(pos_, 4, "Sym(") == 0) {
                std::string name = s_.substr(pos_, 3);
                pos_ += 3;
                f.finite.push_back(name + "(" + bracketed('(', ')') + ")");
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string out;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) out += s_[pos_++];
                f.finite.push_back(out);
            } else if (c == 'U' || c == 'T') {
                ++pos_;
                int v = value(subscript());
                (c == 'U' ? f.unipotent : f.torus) = v;
            } else if (c == 'Z') {
                ++pos_;
                f.finite.push_back("Z_" + subscript());
            } else if (c == 'P') {
                ++pos_;
                std::string sub = subscript();
                std::vector<int> nodes;
                if (sub == "k") {
                    nodes.push_back(k_.component == 2 ? k_.k - 1 : k_.k);
                } else {
                    for (const auto& part : split(sub, ',')) nodes.push_back(value(part));
                }
                f.parabolic = nodes;
            } else if (c >= 'A' && c <= 'G') {
                ++pos_;
                int r = value(subscript());
                if (c == 'F' && r != 4) f.finite.push_back("F_" + std::to_string(r));
                else f.simple.emplace_back(c, r);
            } else {
                fail(std::string("unexpected '") + c + "'");
            }
            if (auto m = exponent()) f.scale(*m);
            acc.absorb(f);
        }
        return acc;
    }
};

}  // namespace

std::string KValue::to_string() const {
    return std::to_string(k) + (component == 1 ? "'" : component == 2 ? "''" : "");
}

KValue parse_k(const std::string& s) {
    KValue v;
    std::size_t i = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v.k = 10 * v.k + (s[i++] - '0');
    if (i == 0) throw std::invalid_argument("bad k value '" + s + "'");
    std::string rest = s.substr(i);
    if (rest == "'") v.component = 1;
    else if (rest == "''") v.component = 2;
    else if (!rest.empty()) throw std::invalid_argument("bad k value '" + s + "'");
    return v;
}

int grass_dim(int n, const KValue& kv, FormKind form, std::optional<int> d_special_rank) {
    int k = kv.k;
    if (k < 1 || 2 * k > n) throw std::invalid_argument("grass_dim: k out of range");
    if (form == FormKind::Symplectic && n % 2 != 0) throw std::invalid_argument("grass_dim: symplectic needs even n");
    if (kv.component != 0 && (form != FormKind::Orthogonal || 2 * k != n))
        throw std::invalid_argument("grass_dim: components exist only for orthogonal k = n/2");
    if (d_special_rank) {
        int l = *d_special_rank;
        if (form != FormKind::Orthogonal || n != 2 * l || k != l - 1 || l < 4)
            throw std::invalid_argument("grass_dim: D special case needs n = 2l, k = l-1");
        const RootSystem& rs = root_system_cached('D', l);
        return group_dim_cached('D', l) - parabolic_dim(rs, {l - 2, l - 1});
    }
    if (form == FormKind::Symplectic) return k * n + (k - 3 * k * k) / 2;
    return k * n - (k + 3 * k * k) / 2;
}

long eval_expression(const std::string& expr, long l, long p) { return ExprParser(expr, l, p).parse(); }

bool rank_condition_holds(const std::string& cond, int l) {
    for (const auto& atom : split(cond, ',')) {
        if (atom.empty()) throw std::invalid_argument("empty rank condition");
        if (starts_with(atom, ">=")) {
            if (l < std::stoi(atom.substr(2))) return false;
        } else if (atom == "odd") {
            if (l % 2 == 0) return false;
        } else if (atom == "even") {
            if (l % 2 != 0) return false;
        } else if (auto m = atom.find("MOD"); m != std::string::npos) {
            bool neg = atom[0] == '!';
            int a = std::stoi(atom.substr(neg ? 1 : 0, m - (neg ? 1 : 0)));
            int b = std::stoi(atom.substr(m + 3));
            if ((l % b == a) == neg) return false;
        } else {
            std::size_t used = 0;
            int v = std::stoi(atom, &used);
            if (used != atom.size()) throw std::invalid_argument("bad rank condition '" + atom + "'");
            if (l != v) return false;
        }
    }
    return true;
}

bool char_condition_holds(const std::string& cond, long p, int l) {
    for (const auto& atom : split(cond, ',')) {
        if (atom == "any") continue;
        if (atom == "<inf") {
            if (p == 0) return false;
        } else if (starts_with(atom, "!=")) {
            if (p == std::stol(atom.substr(2))) return false;
        } else if (starts_with(atom, "=")) {
            if (p != std::stol(atom.substr(1))) return false;
        } else if (starts_with(atom, ">")) {
            if (p != 0 && p <= std::stol(atom.substr(1))) return false;
        } else if (starts_with(atom, "!|")) {
            if (p != 0 && eval_expression(atom.substr(2), l, p) % p == 0) return false;
        } else if (starts_with(atom, "|")) {
            if (p == 0 || eval_expression(atom.substr(1), l, p) % p != 0) return false;
        } else {
            throw std::invalid_argument("bad characteristic condition '" + atom + "'");
        }
    }
    return true;
}

HighestWeight parse_weight(const std::string& text, int rank) {
    HighestWeight w;
    w.coeffs.assign(static_cast<std::size_t>(rank), 0);
    for (std::string term : split(text, '+')) {
        if (!term.empty() && term[0] == 'F') {
            w.twisted = true;
            term = term.substr(1);
        }
        int c = 1;
        if (auto star = term.find('*'); star != std::string::npos) {
            c = std::stoi(term.substr(0, star));
            term = term.substr(star + 1);
        }
        int i = static_cast<int>(eval_expression(term, rank, 0));
        if (i < 1 || i > rank) throw std::invalid_argument("weight index out of range in '" + text + "'");
        w.coeffs[static_cast<std::size_t>(i - 1)] += c;
    }
    return w;
}

std::string ModuleRecord::describe() const {
    std::string ks;
    for (std::size_t i = 0; i < k.size(); ++i) ks += (i ? "," : "") + k[i];
    return std::string(1, series) + "[" + rank + "] weight " + weight + " p " + p + " k " + ks;
}

StabilizerStructure parse_stabilizer(const std::string& text, int l, const KValue& k) {
    StabAcc a = StabParser(text, l, k).parse();
    StabilizerStructure s;
    s.text = text;
    s.unipotent = a.unipotent;
    s.torus = a.torus;
    s.simple = a.simple;
    s.finite = a.finite;
    s.parabolic = a.parabolic;
    s.semi_generic = a.semi;
    return s;
}

int stabilizer_dim(const StabilizerStructure& s, const RootSystem* ambient) {
    int d = s.unipotent + s.torus;
    for (auto [series, rank] : s.simple) d += group_dim_cached(series, rank);
    if (s.parabolic) {
        if (!ambient) throw std::invalid_argument("stabilizer_dim: parabolic needs an ambient root system");
        std::vector<int> removed;
        for (int node : *s.parabolic) {
            if (node < 1 || node > ambient->rank()) throw std::invalid_argument("stabilizer_dim: node out of range");
            removed.push_back(node - 1);
        }
        d += parabolic_dim(*ambient, removed);
    }
    return d;
}

std::vector<const ModuleRecord*> Catalog::table(int t) const {
    std::vector<const ModuleRecord*> out;
    for (const auto& r : records)
        if (r.table == t) out.push_back(&r);
    return out;
}

Catalog parse_catalog(std::string_view text) {
    Catalog c;
    std::istringstream is{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::map<std::string, std::string> kv;
        std::string tok;
        while (ls >> tok) {
            auto eq = tok.find('=');
            if (eq == std::string::npos || eq == 0)
                throw std::invalid_argument("catalog line " + std::to_string(lineno) + ": bad field '" + tok + "'");
            if (!kv.emplace(tok.substr(0, eq), tok.substr(eq + 1)).second)
                throw std::invalid_argument("catalog line " + std::to_string(lineno) + ": repeated field");
        }
        if (kv.empty()) continue;
        auto get = [&](const std::string& key) {
            auto it = kv.find(key);
            if (it == kv.end())
                throw std::invalid_argument("catalog line " + std::to_string(lineno) + ": missing " + key);
            std::string v = it->second;
            kv.erase(it);
            return v;
        };
        ModuleRecord r;
        r.line = lineno;
        std::string table = get("table");
        if (table.size() != 1 || table[0] < '1' || table[0] > '4')
            throw std::invalid_argument("catalog line " + std::to_string(lineno) + ": table must be 1 to 4");
        r.table = table[0] - '0';
        std::string series = get("series");
        if (series.size() != 1 || series[0] < 'A' || series[0] > 'G')
            throw std::invalid_argument("catalog line " + std::to_string(lineno) + ": bad series");
        r.series = series[0];
        r.rank = get("rank");
        r.weight = get("weight");
        r.p = get("p");
        r.dim = get("dim");
        r.form = parse_form_kind(get("form"));
        r.k = split(get("k"), ',');
        QuadrupleRow row;
        if (r.table == 1) {
            row.stab = get("stab");
            std::string dense = get("dense");
            if (dense != "yes" && dense != "no")
                throw std::invalid_argument("catalog line " + std::to_string(lineno) + ": dense must be yes or no");
            row.dense = dense == "yes";
        }
        if (!kv.empty())
            throw std::invalid_argument("catalog line " + std::to_string(lineno) + ": unknown field " + kv.begin()->first);
        c.records.push_back(r);
        if (r.table == 1) {
            row.module = r;
            c.rows.push_back(row);
        }
    }
    return c;
}

Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_catalog(ss.str());
}

const Catalog& default_catalog() {
    static const Catalog c = [] {
        if (const char* env = std::getenv("GENSTAB_CATALOG"); env && *env) return load_catalog(env);
        return parse_catalog(embedded_catalog());
    }();
    return c;
}

std::string Instance::describe() const {
    std::string s = std::string(1, record->series) + std::to_string(rank) + " weight " + record->weight;
    s += p == 0 ? " char 0" : " p=" + std::to_string(p);
    return s + " k=" + k.to_string() + " dim " + std::to_string(dim);
}

const std::vector<long>& sample_characteristics() {
    static const std::vector<long> s{0, 2, 3, 5, 7, 11, 13};
    return s;
}

std::vector<int> expand_ranks(const ModuleRecord& r, int max_rank) {
    std::vector<int> out;
    for (int l = min_rank(r.series); l <= max_rank; ++l)
        if (rank_condition_holds(r.rank, l)) out.push_back(l);
    return out;
}

std::vector<KValue> expand_k(const ModuleRecord& r, int l, int n) {
    std::vector<KValue> all;
    int half = n / 2;
    bool split_top = r.form == FormKind::Orthogonal && n % 2 == 0;
    for (int k = 1; k <= half; ++k) {
        if (k == half && split_top) {
            all.push_back({k, 1});
            all.push_back({k, 2});
        } else {
            all.push_back({k, 0});
        }
    }
    std::vector<KValue> out;
    for (const auto& tok : r.k) {
        if (tok == "any") {
            out.insert(out.end(), all.begin(), all.end());
        } else if (tok == "l-1") {
            out.push_back({l - 1, 0});
        } else if (tok == "!=l-1") {
            for (const auto& kv : all)
                if (kv.k != l - 1) out.push_back(kv);
        } else {
            out.push_back(parse_k(tok));
        }
    }
    return out;
}

std::vector<Instance> expand(const ModuleRecord& r, int max_rank) {
    std::vector<Instance> out;
    for (int l : expand_ranks(r, max_rank)) {
        int gd = group_dim_cached(r.series, l);
        for (long p : sample_characteristics()) {
            if (!char_condition_holds(r.p, p, l)) continue;
            int n = static_cast<int>(eval_expression(r.dim, l, p));
            if (n <= 0) throw std::invalid_argument("non-positive dimension for " + r.describe());
            for (const auto& k : expand_k(r, l, n)) out.push_back({&r, l, p, k, n, gd});
        }
    }
    return out;
}

bool is_small_quadruple(const ModuleRecord& r, int l, long p, const KValue& k) {
    int n = static_cast<int>(eval_expression(r.dim, l, p));
    return group_dim_cached(r.series, l) >= grass_dim(n, k, r.form);
}

FormKind form_type(const ModuleRecord& r, int l, long p, bool* from_catalog) {
    if (from_catalog) *from_catalog = p == 2;
    if (p == 2) return r.form;
    HighestWeight w = parse_weight(r.weight, l);
    std::vector<int> t = root_system_cached(r.series, l).two_rho_check();
    long s = 0;
    for (std::size_t i = 0; i < t.size(); ++i) s += static_cast<long>(w.coeffs[i]) * t[i];
    return s % 2 == 0 ? FormKind::Orthogonal : FormKind::Symplectic;
}

VerificationReport table1_consistency(const Catalog& c, int max_rank) {
    VerificationReport rep;
    rep.case_id = "TABLE1";
    for (const auto& row : c.rows) {
        const ModuleRecord& r = row.module;
        auto instances = expand(r, max_rank);
        std::string first_bad;
        std::string sample;
        for (const auto& inst : instances) {
            bool special = r.series == 'D' && r.weight == "1" && inst.k.k == inst.rank - 1 && inst.k.component == 0;
            int target = inst.group_dim - grass_dim(inst.dim, inst.k, r.form,
                                                    special ? std::optional<int>(inst.rank) : std::nullopt);
            StabilizerStructure s = parse_stabilizer(row.stab, inst.rank, inst.k);
            const RootSystem* amb = s.parabolic ? &root_system_cached(r.series, inst.rank) : nullptr;
            int sd = stabilizer_dim(s, amb);
            bool ok = sd >= target && row.dense == (sd == target);
            std::string msg = inst.describe() + ": stabilizer " + std::to_string(sd) + ", dim G - dim S " +
                              std::to_string(target);
            if (sample.empty()) sample = msg;
            if (!ok && first_bad.empty()) first_bad = msg;
        }
        std::string check = r.describe() + " stab " + row.stab;
        std::string expected = row.dense ? "dense: stabilizer = dim G - dim S" : "no dense orbit: stabilizer > dim G - dim S";
        if (instances.empty()) {
            rep.add(check, expected, "no instances", false);
        } else if (first_bad.empty()) {
            rep.add(check, expected, std::to_string(instances.size()) + " instances ok, e.g. " + sample, true);
        } else {
            rep.add(check, expected, "violated at " + first_bad, false);
        }
    }
    return rep;
}

}  // namespace genstab

namespace genstab {

VerificationReport grass_dim_crosscheck(int max_module_dim) {
    VerificationReport r;
    r.case_id = "GRASS_DIM";
    auto check = [&](const std::string& name, int formula, char series, int rank, std::vector<int> removed) {
        const RootSystem& rs = root_system_cached(series, rank);
        r.expect_equal(name, group_dim_cached(series, rank) - parabolic_dim(rs, removed), formula);
    };
    auto label = [](char s, int l, int n, const KValue& k) {
        return std::string(1, s) + std::to_string(l) + " n=" + std::to_string(n) + " k=" + k.to_string();
    };
    if (max_module_dim >= 2) check(label('C', 1, 2, {1, 0}), grass_dim(2, {1, 0}, FormKind::Symplectic), 'A', 1, {0});
    for (int l = 2; 2 * l <= max_module_dim; ++l)
        for (int k = 1; k <= l; ++k)
            check(label('C', l, 2 * l, {k, 0}), grass_dim(2 * l, {k, 0}, FormKind::Symplectic), 'C', l, {k - 1});
    for (int l = 2; 2 * l + 1 <= max_module_dim; ++l)
        for (int k = 1; k <= l; ++k)
            check(label('B', l, 2 * l + 1, {k, 0}), grass_dim(2 * l + 1, {k, 0}, FormKind::Orthogonal), 'B', l, {k - 1});
    if (max_module_dim >= 6) {
        // D3 = A3: points, lines and the two plane families of the Klein quadric
        check(label('D', 3, 6, {1, 0}), grass_dim(6, {1, 0}, FormKind::Orthogonal), 'A', 3, {1});
        check(label('D', 3, 6, {2, 0}), grass_dim(6, {2, 0}, FormKind::Orthogonal), 'A', 3, {0, 2});
        check(label('D', 3, 6, {3, 1}), grass_dim(6, {3, 1}, FormKind::Orthogonal), 'A', 3, {0});
        check(label('D', 3, 6, {3, 2}), grass_dim(6, {3, 2}, FormKind::Orthogonal), 'A', 3, {2});
    }
    for (int l = 4; 2 * l <= max_module_dim; ++l) {
        int n = 2 * l;
        for (int k = 1; k <= l - 2; ++k)
            check(label('D', l, n, {k, 0}), grass_dim(n, {k, 0}, FormKind::Orthogonal), 'D', l, {k - 1});
        check(label('D', l, n, {l - 1, 0}), grass_dim(n, {l - 1, 0}, FormKind::Orthogonal), 'D', l, {l - 2, l - 1});
        check(label('D', l, n, {l - 1, 0}) + " (D special)", grass_dim(n, {l - 1, 0}, FormKind::Orthogonal, l), 'D', l,
              {l - 2, l - 1});
        check(label('D', l, n, {l, 1}), grass_dim(n, {l, 1}, FormKind::Orthogonal), 'D', l, {l - 1});
        check(label('D', l, n, {l, 2}), grass_dim(n, {l, 2}, FormKind::Orthogonal), 'D', l, {l - 2});
    }
    return r;
}

}  // namespace genstab
