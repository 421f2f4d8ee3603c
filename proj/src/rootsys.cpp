#include "genstab/rootsys.hpp"

#include <algorithm>
#include <functional>
#include <gmpxx.h>
#include <numeric>
#include <set>
#include <stdexcept>

namespace genstab {

namespace {

std::vector<std::vector<int>> bourbaki_gram(char type, int n) {
    std::vector<std::vector<int>> g(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    auto set = [&](int i, int j, int v) {
        g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
        g[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
    };
    auto len = [&](int i, int v) { g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = v; };
    switch (type) {
    case 'A':
        for (int i = 0; i < n; ++i) len(i, 2);
        for (int i = 0; i + 1 < n; ++i) set(i, i + 1, -1);
        break;
    case 'B':
        for (int i = 0; i < n; ++i) len(i, i + 1 < n ? 4 : 2);
        for (int i = 0; i + 1 < n; ++i) set(i, i + 1, -2);
        break;
    case 'C':
        for (int i = 0; i < n; ++i) len(i, i + 1 < n ? 2 : 4);
        for (int i = 0; i + 2 < n; ++i) set(i, i + 1, -1);
        set(n - 2, n - 1, -2);
        break;
    case 'D':
        for (int i = 0; i < n; ++i) len(i, 2);
        for (int i = 0; i + 2 < n; ++i) set(i, i + 1, -1);
        set(n - 3, n - 1, -1);
        break;
    case 'E':
        for (int i = 0; i < n; ++i) len(i, 2);
        set(0, 2, -1);
        set(1, 3, -1);
        for (int i = 2; i + 1 < n; ++i) set(i, i + 1, -1);
        break;
    case 'F':
        len(0, 4), len(1, 4), len(2, 2), len(3, 2);
        set(0, 1, -2), set(1, 2, -2), set(2, 3, -1);
        break;
    case 'G':
        len(0, 2), len(1, 6);
        set(0, 1, -3);
        break;
    default: throw std::invalid_argument(std::string("unknown Lie type ") + type);
    }
    return g;
}

void validate(char type, int rank) {
    bool ok = false;
    switch (type) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 3; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: break;
    }
    if (!ok) throw std::invalid_argument("invalid root system " + std::string(1, type) + std::to_string(rank));
}

}  // namespace

RootSystem::RootSystem(char type, int rank) : type_(type), rank_(rank) {
    validate(type, rank);
    gram_ = bourbaki_gram(type, rank);
    build_roots();
}

RootSystem build_root_system(char type, int rank) { return RootSystem(type, rank); }

int group_dim(char type, int rank) {
    validate(type, rank);
    switch (type) {
    case 'A': return rank * (rank + 2);
    case 'B':
    case 'C': return rank * (2 * rank + 1);
    case 'D': return rank * (2 * rank - 1);
    case 'E': return rank == 6 ? 78 : rank == 7 ? 133 : 248;
    case 'F': return 52;
    default: return 14;
    }
}

int RootSystem::inner(const Root& a, const Root& b) const {
    int s = 0;
    for (int i = 0; i < rank_; ++i) {
        if (a[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < rank_; ++j)
            s += a[static_cast<std::size_t>(i)] * gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                 b[static_cast<std::size_t>(j)];
    }
    return s;
}

int RootSystem::pairing(int i, int j) const { return 2 * inner(i, j) / inner(j, j); }

int RootSystem::index(const Root& r) const {
    auto it = index_.find(r);
    return it == index_.end() ? -1 : it->second;
}

int RootSystem::height(int i) const {
    const Root& r = root(i);
    return std::accumulate(r.begin(), r.end(), 0);
}

void RootSystem::build_roots() {
    std::set<Root> pos;
    std::vector<Root> layer;
    for (int i = 0; i < rank_; ++i) {
        Root r(static_cast<std::size_t>(rank_), 0);
        r[static_cast<std::size_t>(i)] = 1;
        layer.push_back(r);
        pos.insert(r);
    }
    auto simple_root = [&](int i) {
        Root r(static_cast<std::size_t>(rank_), 0);
        r[static_cast<std::size_t>(i)] = 1;
        return r;
    };
    while (!layer.empty()) {
        std::vector<Root> next;
        for (const Root& r : layer) {
            for (int i = 0; i < rank_; ++i) {
                Root a = simple_root(i);
                if (r == a) continue;
                // p = length of the alpha_i string below r
                int p = 0;
                Root down = r;
                while (true) {
                    down[static_cast<std::size_t>(i)] -= 1;
                    if (!pos.count(down)) break;
                    ++p;
                }
                int q = p - 2 * inner(r, a) / inner(a, a);
                if (q > 0) {
                    Root up = r;
                    up[static_cast<std::size_t>(i)] += 1;
                    if (pos.insert(up).second) next.push_back(up);
                }
            }
        }
        layer = std::move(next);
    }
    std::vector<Root> sorted(pos.begin(), pos.end());
    std::sort(sorted.begin(), sorted.end(), [](const Root& a, const Root& b) {
        int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
        if (ha != hb) return ha < hb;
        return a > b;
    });
    roots_ = sorted;
    for (const Root& r : sorted) {
        Root n = r;
        for (int& x : n) x = -x;
        roots_.push_back(n);
    }
    for (int i = 0; i < num_roots(); ++i) index_[roots_[static_cast<std::size_t>(i)]] = i;
}

int RootSystem::sum_index(int i, int j) const {
    Root s = root(i);
    const Root& b = root(j);
    for (int k = 0; k < rank_; ++k) s[static_cast<std::size_t>(k)] += b[static_cast<std::size_t>(k)];
    return index(s);
}

int RootSystem::string_down(int i, int j) const {
    Root r = root(j);
    const Root& a = root(i);
    int p = 0;
    while (true) {
        for (int k = 0; k < rank_; ++k) r[static_cast<std::size_t>(k)] -= a[static_cast<std::size_t>(k)];
        if (index(r) < 0) break;
        ++p;
    }
    return p;
}

std::pair<int, int> RootSystem::extraspecial_pair(int xi) const {
    if (!is_positive(xi) || height(xi) == 1) throw std::invalid_argument("extraspecial pair needs a non-simple positive root");
    Root nx = root(xi);
    for (int a = 0; a < num_positive(); ++a) {
        Root b = root(xi);
        for (int k = 0; k < rank_; ++k) b[static_cast<std::size_t>(k)] -= root(a)[static_cast<std::size_t>(k)];
        int bi = index(b);
        if (bi >= 0 && is_positive(bi)) return {a, bi};
    }
    throw std::logic_error("no extraspecial pair");
}

std::vector<int> RootSystem::build_structure_constants() const {
    int n = num_roots();
    const int unset = 1 << 30;
    std::vector<int> memo(static_cast<std::size_t>(n * n), unset);
    auto len = [&](int i) { return inner(i, i); };

    std::function<int(int, int)> N;
    std::function<int(int, int)> P = [&](int a, int b) -> int {
        // a, b positive with a + b a root
        int& slot = memo[static_cast<std::size_t>(a * n + b)];
        if (slot != unset) return slot;
        if (a > b) return slot = -P(b, a);
        int xi = sum_index(a, b);
        auto [g, d] = extraspecial_pair(xi);
        if (g == a) return slot = string_down(a, b) + 1;
        int ngd = P(g, d);
        mpq_class bracket = 0;
        int bg = sum_index(b, negative(g));
        if (bg >= 0) bracket += mpq_class(N(b, negative(g)) * N(a, negative(d))) / len(bg);
        int ag = sum_index(a, negative(g));
        if (ag >= 0) bracket += mpq_class(N(negative(g), a) * N(b, negative(d))) / len(ag);
        mpq_class v = mpq_class(len(xi)) / ngd * bracket;
        if (v.get_den() != 1) throw std::logic_error("non-integral structure constant");
        return slot = static_cast<int>(v.get_num().get_si());
    };
    N = [&](int a, int b) -> int {
        int c = sum_index(a, b);
        if (c < 0) return 0;
        bool pa = is_positive(a), pb = is_positive(b);
        if (pa && pb) return P(a, b);
        if (!pa && !pb) return -P(negative(a), negative(b));
        int g = negative(c);
        // a + b + g = 0: N_{a,b}/(g,g) = N_{b,g}/(a,a) = N_{g,a}/(b,b)
        mpq_class v;
        if (is_positive(g) == pb)
            v = mpq_class(len(g) * N(b, g)) / len(a);
        else
            v = mpq_class(len(g) * N(g, a)) / len(b);
        return static_cast<int>(v.get_num().get_si());
    };
    std::vector<int> table(static_cast<std::size_t>(n * n), 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a * n + b)] = N(a, b);
    return table;
}

int RootSystem::structure_constant(int i, int j) const {
    std::call_once(structure_->once, [this] { structure_->table = build_structure_constants(); });
    return structure_->table[static_cast<std::size_t>(i * num_roots() + j)];
}

int RootSystem::reflect(int i, int k) const {
    Root r = root(i);
    int c = pairing(i, k);
    r[static_cast<std::size_t>(k)] -= c;
    return index(r);
}

int RootSystem::apply_word(const std::vector<int>& word, int i) const {
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it < 0 || *it >= rank_) throw std::invalid_argument("Weyl word letter out of range");
        i = reflect(i, *it);
    }
    return i;
}

std::vector<int> RootSystem::two_rho_check() const {
    std::vector<int> c(static_cast<std::size_t>(rank_), 0);
    for (int r = 0; r < num_positive(); ++r) {
        int l = inner(r, r);
        for (int i = 0; i < rank_; ++i)
            c[static_cast<std::size_t>(i)] += root(r)[static_cast<std::size_t>(i)] * gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] / l;
    }
    return c;
}

std::vector<int> parse_weyl_word(const std::string& text) {
    std::vector<int> w;
    std::string digits;
    auto flush = [&] {
        if (!digits.empty()) w.push_back(std::stoi(digits) - 1);
        digits.clear();
    };
    for (char ch : text) {
        if (ch >= '0' && ch <= '9')
            digits += ch;
        else if (ch == 'n' || ch == 's' || ch == ',' || ch == ' ' || ch == '.')
            flush();
        else
            throw std::invalid_argument("bad Weyl word '" + text + "'");
    }
    flush();
    return w;
}

std::vector<int> parabolic_roots(const RootSystem& rs, const std::vector<int>& removed) {
    std::vector<int> out;
    for (int i = 0; i < rs.num_roots(); ++i) {
        bool in = rs.is_positive(i);
        if (!in) {
            in = true;
            for (int k : removed) in = in && rs.root(i)[static_cast<std::size_t>(k)] == 0;
        }
        if (in) out.push_back(i);
    }
    return out;
}

int parabolic_dim(const RootSystem& rs, const std::vector<int>& removed) {
    return rs.rank() + static_cast<int>(parabolic_roots(rs, removed).size());
}

std::string subsystem_type(const RootSystem& rs, const std::vector<int>& roots) {
    std::set<int> all(roots.begin(), roots.end());
    std::vector<int> pos;
    for (int r : roots)
        if (rs.is_positive(r)) pos.push_back(r);
    std::vector<int> simple;
    for (int r : pos) {
        bool decomposable = false;
        for (int a : pos) {
            Root b = rs.root(r);
            for (int k = 0; k < rs.rank(); ++k) b[static_cast<std::size_t>(k)] -= rs.root(a)[static_cast<std::size_t>(k)];
            int bi = rs.index(b);
            if (bi >= 0 && rs.is_positive(bi) && all.count(bi)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simple.push_back(r);
    }
    // connected components of the simple system
    std::vector<int> comp(simple.size(), -1);
    int ncomp = 0;
    for (std::size_t i = 0; i < simple.size(); ++i) {
        if (comp[i] >= 0) continue;
        std::vector<std::size_t> stack{i};
        comp[i] = ncomp;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v = 0; v < simple.size(); ++v)
                if (comp[v] < 0 && rs.inner(simple[u], simple[v]) != 0) {
                    comp[v] = ncomp;
                    stack.push_back(v);
                }
        }
        ++ncomp;
    }
    std::vector<std::pair<int, std::string>> parts;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> gens;
        for (std::size_t i = 0; i < simple.size(); ++i)
            if (comp[i] == c) gens.push_back(simple[i]);
        // close under reflections in the component's simple roots
        std::set<int> sub;
        std::vector<int> frontier = gens;
        for (int g : gens) sub.insert(g);
        while (!frontier.empty()) {
            int r = frontier.back();
            frontier.pop_back();
            for (int g : gens) {
                Root img = rs.root(r);
                int cc = rs.pairing(r, g);
                for (int k = 0; k < rs.rank(); ++k) img[static_cast<std::size_t>(k)] -= cc * rs.root(g)[static_cast<std::size_t>(k)];
                int ii = rs.index(img);
                if (ii >= 0 && sub.insert(ii).second) frontier.push_back(ii);
            }
        }
        int r = static_cast<int>(gens.size());
        int n = static_cast<int>(sub.size());
        int maxlen = 0, minlen = 1 << 20;
        for (int x : sub) {
            maxlen = std::max(maxlen, rs.inner(x, x));
            minlen = std::min(minlen, rs.inner(x, x));
        }
        int nshort = 0;
        for (int x : sub) nshort += rs.inner(x, x) == minlen;
        std::string t;
        if (maxlen == minlen) {
            if (n == r * (r + 1)) t = "A";
            else if (n == 2 * r * (r - 1)) t = "D";
            else t = "E";
        } else if (n == 12 && r == 2) {
            t = "G";
        } else if (n == 48 && r == 4) {
            t = "F";
        } else {
            t = (nshort == 2 * r) ? "B" : "C";
        }
        parts.emplace_back(r, t + std::to_string(r));
    }
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    std::string out;
    for (auto& p : parts) out += p.second;
    return out;
}

ParabolicIntersection parabolic_common_roots(const RootSystem& rs, const std::vector<int>& removed,
                                             const std::vector<int>& word) {
    std::vector<int> pr = parabolic_roots(rs, removed);
    std::set<int> pset(pr.begin(), pr.end());
    std::vector<int> inv(word.rbegin(), word.rend());
    ParabolicIntersection out;
    for (int r : pr)
        if (pset.count(rs.apply_word(inv, r))) out.roots.push_back(r);
    std::set<int> common(out.roots.begin(), out.roots.end());
    std::vector<int> reductive;
    for (int r : out.roots) {
        if (common.count(rs.negative(r)))
            reductive.push_back(r);
        else
            ++out.unipotent_dim;
    }
    out.levi = reductive.empty() ? "" : subsystem_type(rs, reductive);
    // semisimple rank = number of simple roots of the reductive part
    int ss_rank = 0;
    {
        int count = 0;
        std::string digits;
        for (std::size_t i = 0; i <= out.levi.size(); ++i) {
            char ch = i < out.levi.size() ? out.levi[i] : 'X';
            if (ch >= '0' && ch <= '9') {
                digits += ch;
            } else {
                if (!digits.empty()) count += std::stoi(digits);
                digits.clear();
            }
        }
        ss_rank = count;
    }
    out.torus_rank = rs.rank() - ss_rank;
    out.shape = (out.unipotent_dim ? "U" + std::to_string(out.unipotent_dim) : std::string()) + out.levi +
                (out.torus_rank ? "T" + std::to_string(out.torus_rank) : std::string());
    return out;
}

}  // namespace genstab
