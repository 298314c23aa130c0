#include "fpq/fpq_tree.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fpq {

Tree Tree::null_tree() {
    Tree t;
    t.null = true;
    return t;
}

Tree Tree::star(Kind k, const std::vector<int>& labels) {
    Tree t;
    int h = t.add_node(labels.size() <= 2 ? Kind::P : k);
    for (int l : labels) t.link(h, t.add_node(Kind::Leaf, l));
    t.root_hint = h;
    return t;
}

int Tree::add_node(Kind k, int label) {
    Node nd;
    nd.kind = k;
    nd.label = label;
    nodes.push_back(nd);
    return (int)nodes.size() - 1;
}

void Tree::link(int a, int b) {
    nodes[a].adj.push_back(b);
    nodes[b].adj.push_back(a);
}

void Tree::replace_adj(int x, int old_nb, int new_nb) {
    for (int& y : nodes[x].adj)
        if (y == old_nb) {
            y = new_nb;
            return;
        }
    throw std::logic_error("replace_adj: not adjacent");
}

std::vector<int> Tree::leaves() const {
    std::vector<int> out;
    for (auto& nd : nodes)
        if (nd.alive && nd.kind == Kind::Leaf) out.push_back(nd.label);
    std::sort(out.begin(), out.end());
    return out;
}

int Tree::leaf_count() const {
    int c = 0;
    for (auto& nd : nodes) c += nd.alive && nd.kind == Kind::Leaf;
    return c;
}

int Tree::leaf_node(int label) const {
    for (int i = 0; i < (int)nodes.size(); ++i)
        if (nodes[i].alive && nodes[i].kind == Kind::Leaf && nodes[i].label == label) return i;
    return -1;
}

std::vector<int> Tree::alive_nodes() const {
    std::vector<int> out;
    for (int i = 0; i < (int)nodes.size(); ++i)
        if (nodes[i].alive) out.push_back(i);
    return out;
}

std::vector<int> Tree::internal_nodes() const {
    std::vector<int> out;
    for (int i = 0; i < (int)nodes.size(); ++i)
        if (nodes[i].alive && nodes[i].kind != Kind::Leaf) out.push_back(i);
    return out;
}

int Tree::any_internal() const {
    if (root_hint >= 0 && root_hint < (int)nodes.size() && nodes[root_hint].alive &&
        nodes[root_hint].kind != Kind::Leaf)
        return root_hint;
    for (int i = 0; i < (int)nodes.size(); ++i)
        if (nodes[i].alive && nodes[i].kind != Kind::Leaf) return i;
    return -1;
}

std::vector<int> Tree::side(int x, int y) const {
    std::vector<int> out;
    std::vector<std::pair<int, int>> st{{y, x}};
    while (!st.empty()) {
        auto [a, from] = st.back();
        st.pop_back();
        if (nodes[a].kind == Kind::Leaf) out.push_back(nodes[a].label);
        for (int b : nodes[a].adj)
            if (b != from) st.push_back({b, a});
    }
    std::sort(out.begin(), out.end());
    return out;
}

void Tree::validate() const {
    if (null) return;
    int nl = leaf_count();
    std::set<int> labels;
    int alive = 0, edges = 0;
    for (int i = 0; i < (int)nodes.size(); ++i) {
        auto& nd = nodes[i];
        if (!nd.alive) continue;
        ++alive;
        edges += (int)nd.adj.size();
        for (int y : nd.adj) {
            if (y < 0 || y >= (int)nodes.size() || !nodes[y].alive) throw std::logic_error("dangling adjacency");
            if (std::count(nodes[y].adj.begin(), nodes[y].adj.end(), i) != 1) throw std::logic_error("asymmetric");
        }
        if (nd.kind == Kind::Leaf) {
            if (nd.adj.size() != 1) throw std::logic_error("leaf degree");
            if (!labels.insert(nd.label).second) throw std::logic_error("duplicate leaf");
        } else if (nl > 2 && nd.adj.size() < 3) {
            throw std::logic_error("internal node of degree < 3");
        }
    }
    if (edges / 2 != alive - 1) throw std::logic_error("not a tree");
}

// ---------------------------------------------------------------- io

int Labels::get(const std::string& s) {
    auto it = id.find(s);
    if (it != id.end()) return it->second;
    if (!grow) throw std::invalid_argument("unknown leaf '" + s + "'");
    int v = (int)name.size();
    name.push_back(s);
    id[s] = v;
    return v;
}

std::string Labels::str(int l) const {
    if (l >= 0 && l < (int)name.size()) return name[l];
    return std::to_string(l);
}

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;
    Labels& labels;
    Tree t;

    void ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    std::string token() {
        ws();
        size_t j = i;
        while (i < s.size() && !std::isspace((unsigned char)s[i]) && s[i] != '(' && s[i] != ')') ++i;
        if (j == i) throw std::invalid_argument("expected token at offset " + std::to_string(j));
        return s.substr(j, i - j);
    }
    // returns node id; parent linked by caller
    int parse() {
        ws();
        if (i >= s.size()) throw std::invalid_argument("unexpected end of tree");
        if (s[i] == ')') throw std::invalid_argument("unexpected ')'");
        if (s[i] != '(') return t.add_node(Kind::Leaf, labels.get(token()));
        ++i;
        std::string k = token();
        Kind kind;
        if (k == "P") kind = Kind::P;
        else if (k == "Q") kind = Kind::Q;
        else if (k == "F") kind = Kind::F;
        else throw std::invalid_argument("bad node kind '" + k + "'");
        int x = t.add_node(kind);
        int kids = 0;
        while (true) {
            ws();
            if (i >= s.size()) throw std::invalid_argument("missing ')'");
            if (s[i] == ')') {
                ++i;
                break;
            }
            int c = parse();
            t.link(x, c);
            ++kids;
        }
        if (kids < 2) throw std::invalid_argument("node with fewer than 2 children");
        return x;
    }
};

}  // namespace

void suppress_degree2(Tree& t);

Tree parse_tree(const std::string& s, Labels& labels) {
    Parser p{s, 0, labels, Tree{}};
    int r = p.parse();
    p.ws();
    if (p.i != s.size()) throw std::invalid_argument("trailing input after tree");
    Tree t = std::move(p.t);
    auto lv = t.leaves();
    if (std::adjacent_find(lv.begin(), lv.end()) != lv.end()) throw std::invalid_argument("repeated leaf");
    if (t.nodes[r].kind == Kind::Leaf) {
        int h = t.add_node(Kind::P);
        t.link(h, r);
        r = h;
    }
    t.root_hint = r;
    normalize(t);
    return t;
}

namespace {

// children of x in rotation order, starting after `parent` (or the whole
// rotation when parent < 0)
std::vector<int> kids_of(const Tree& t, int x, int parent) {
    const auto& a = t.nodes[x].adj;
    if (parent < 0) return a;
    auto it = std::find(a.begin(), a.end(), parent);
    std::vector<int> out;
    size_t p = it - a.begin();
    for (size_t k = 1; k < a.size(); ++k) out.push_back(a[(p + k) % a.size()]);
    return out;
}

std::string kind_char(Kind k) {
    switch (k) {
        case Kind::P: return "P";
        case Kind::Q: return "Q";
        case Kind::F: return "F";
        default: return "?";
    }
}

void sexpr_rec(const Tree& t, int x, int parent, const Labels* L, std::ostringstream& os) {
    auto& nd = t.nodes[x];
    if (nd.kind == Kind::Leaf) {
        os << (L ? L->str(nd.label) : std::to_string(nd.label));
        return;
    }
    os << "(" << kind_char(nd.kind);
    for (int c : kids_of(t, x, parent)) {
        os << " ";
        sexpr_rec(t, c, x, L, os);
    }
    os << ")";
}

}  // namespace

std::string to_sexpr(const Tree& t, const Labels* labels) {
    if (t.null) return "NULL";
    int r = t.any_internal();
    if (r < 0) return "";
    if (t.leaf_count() == 1) {
        std::ostringstream os;
        sexpr_rec(t, t.nodes[r].adj[0], r, labels, os);
        return os.str();
    }
    std::ostringstream os;
    sexpr_rec(t, r, -1, labels, os);
    return os.str();
}

// ---------------------------------------------------------------- shape normalization


void suppress_degree2(Tree& t) {
    if (t.leaf_count() <= 2) {
        // rebuild as hub, dropping internal structure
        auto lv = t.leaves();
        std::vector<int> lnodes;
        for (int l : lv) lnodes.push_back(t.leaf_node(l));
        int hub = -1;
        for (int i : t.internal_nodes()) {
            if (hub < 0) hub = i;
            else t.nodes[i].alive = false;
        }
        if (hub < 0) hub = t.add_node(Kind::P);
        t.nodes[hub].kind = Kind::P;
        t.nodes[hub].adj = lnodes;
        for (int l : lnodes) t.nodes[l].adj = {hub};
        t.root_hint = hub;
        return;
    }
    bool again = true;
    while (again) {
        again = false;
        for (int x = 0; x < (int)t.nodes.size(); ++x) {
            auto& nd = t.nodes[x];
            if (!nd.alive || nd.kind == Kind::Leaf || nd.adj.size() != 2) continue;
            int a = nd.adj[0], b = nd.adj[1];
            t.replace_adj(a, x, b);
            t.replace_adj(b, x, a);
            nd.alive = false;
            nd.adj.clear();
            if (t.root_hint == x) t.root_hint = t.is_leaf(a) ? b : a;
            again = true;
        }
    }
}

namespace {

void merge_ff(Tree& t) {
    // adjacent F-nodes fix each other's rotation, so they collapse
    bool again = true;
    while (again) {
        again = false;
        for (int x : t.internal_nodes()) {
            if (!t.nodes[x].alive || t.nodes[x].kind != Kind::F) continue;
            for (int y : t.nodes[x].adj) {
                if (t.nodes[y].kind != Kind::F) continue;
                auto yk = kids_of(t, y, x);
                auto& xa = t.nodes[x].adj;
                auto it = std::find(xa.begin(), xa.end(), y);
                size_t p = it - xa.begin();
                xa.erase(it);
                xa.insert(xa.begin() + p, yk.begin(), yk.end());
                for (int z : yk) t.replace_adj(z, y, x);
                t.nodes[y].alive = false;
                t.nodes[y].adj.clear();
                if (t.root_hint == y) t.root_hint = x;
                again = true;
                break;
            }
            if (again) break;
        }
    }
}

void canon_inplace(Tree& t) {
    normalize(t);
    if (t.leaf_count() <= 2) return;
    for (int x : t.internal_nodes())
        if (t.nodes[x].kind == Kind::Q && t.nodes[x].adj.size() == 3) t.nodes[x].kind = Kind::P;
}

}  // namespace

void normalize(Tree& t) {
    suppress_degree2(t);
    if (t.leaf_count() > 2) merge_ff(t);
}

Tree canonicalize(const Tree& t) {
    if (t.null) return t;
    Tree c = t;
    canon_inplace(c);
    return c;
}

Tree mirror(const Tree& t) {
    Tree m = t;
    for (auto& nd : m.nodes) std::reverse(nd.adj.begin(), nd.adj.end());
    return m;
}

Tree compact(const Tree& t) {
    if (t.null) return t;
    Tree c;
    std::vector<int> id(t.nodes.size(), -1);
    for (int i : t.alive_nodes()) id[i] = c.add_node(t.nodes[i].kind, t.nodes[i].label);
    for (int i : t.alive_nodes())
        for (int y : t.nodes[i].adj) c.nodes[id[i]].adj.push_back(id[y]);
    int r = t.any_internal();
    c.root_hint = r >= 0 ? id[r] : -1;
    return c;
}

namespace {

std::string canon_rec(const Tree& t, int x, int parent, const Labels* L) {
    auto& nd = t.nodes[x];
    if (nd.kind == Kind::Leaf) return L ? L->str(nd.label) : std::to_string(nd.label);
    auto ks = kids_of(t, x, parent);
    std::vector<std::string> parts;
    for (int c : ks) parts.push_back(canon_rec(t, c, x, L));
    auto join = [&](const std::vector<std::string>& v) {
        std::string s = "(" + kind_char(nd.kind);
        for (auto& p : v) s += " " + p;
        return s + ")";
    };
    if (nd.kind == Kind::P) {
        std::sort(parts.begin(), parts.end());
        return join(parts);
    }
    if (nd.kind == Kind::F) return join(parts);
    auto rev = parts;
    std::reverse(rev.begin(), rev.end());
    return std::min(join(parts), join(rev));
}

}  // namespace

std::string canonical_string(const Tree& t0, const Labels* L) {
    if (t0.null) return "NULL";
    Tree t = canonicalize(t0);
    auto lv = t.leaves();
    if (lv.size() <= 2) {
        std::vector<std::string> parts;
        for (int l : lv) parts.push_back(L ? L->str(l) : std::to_string(l));
        std::sort(parts.begin(), parts.end());
        if (parts.size() == 1) return parts[0];
        std::string s = "(P";
        for (auto& p : parts) s += " " + p;
        return s + ")";
    }
    int m = t.leaf_node(lv[0]);
    int r = t.nodes[m].adj[0];
    auto& nd = t.nodes[r];
    if (nd.kind == Kind::P) return canon_rec(t, r, -1, L);
    // Q/F root: read the rotation starting at the smallest leaf
    auto ks = kids_of(t, r, m);
    std::vector<std::string> parts{canon_rec(t, m, r, L)};
    for (int c : ks) parts.push_back(canon_rec(t, c, r, L));
    auto join = [&](const std::vector<std::string>& v) {
        std::string s = "(" + kind_char(nd.kind);
        for (auto& p : v) s += " " + p;
        return s + ")";
    };
    if (nd.kind == Kind::F) return join(parts);
    std::vector<std::string> rev{parts[0]};
    for (size_t i = parts.size() - 1; i >= 1; --i) rev.push_back(parts[i]);
    return std::min(join(parts), join(rev));
}

// ---------------------------------------------------------------- orders

namespace {

void check_ground(const Tree& t, const Order& sigma) {
    auto a = t.leaves();
    auto b = sigma;
    std::sort(b.begin(), b.end());
    if (a != b) throw std::invalid_argument("ground-set mismatch");
}

}  // namespace

std::optional<std::map<int, int>> match(const Tree& t, const Order& sigma) {
    if (t.null) return std::nullopt;
    check_ground(t, sigma);
    std::map<int, int> orient;
    int n = (int)sigma.size();
    if (n <= 2) return orient;
    std::vector<int> pos(t.nodes.size(), -1);
    for (int i = 0; i < n; ++i) pos[t.leaf_node(sigma[i])] = i;
    int r = t.leaf_node(sigma[0]);
    // iterative dfs, children before parents
    std::vector<int> par(t.nodes.size(), -1), order;
    std::vector<int> st{r};
    par[r] = r;
    while (!st.empty()) {
        int x = st.back();
        st.pop_back();
        order.push_back(x);
        for (int y : t.nodes[x].adj)
            if (y != par[x]) par[y] = x, st.push_back(y);
    }
    std::vector<int> lo(t.nodes.size(), n), hi(t.nodes.size(), -1), cnt(t.nodes.size(), 0);
    for (int k = (int)order.size() - 1; k >= 1; --k) {
        int x = order[k];
        if (t.is_leaf(x)) lo[x] = hi[x] = pos[x], cnt[x] = 1;
        if (hi[x] - lo[x] + 1 != cnt[x]) return std::nullopt;
        int p = par[x];
        lo[p] = std::min(lo[p], lo[x]);
        hi[p] = std::max(hi[p], hi[x]);
        cnt[p] += cnt[x];
    }
    for (int k = 1; k < (int)order.size(); ++k) {
        int x = order[k];
        auto& nd = t.nodes[x];
        if (nd.kind == Kind::Leaf || nd.kind == Kind::P) continue;
        auto ks = kids_of(t, x, par[x]);
        std::sort(ks.begin(), ks.end(), [&](int a, int b) { return lo[a] < lo[b]; });
        auto dflt = kids_of(t, x, par[x]);
        if (ks == dflt) {
            orient[x] = 0;
            continue;
        }
        std::reverse(dflt.begin(), dflt.end());
        if (ks == dflt && nd.kind == Kind::Q) {
            orient[x] = 1;
            continue;
        }
        return std::nullopt;
    }
    return orient;
}

bool represents(const Tree& t, const Order& sigma) { return match(t, sigma).has_value(); }

namespace {

double count_rec(const Tree& t, int x, int parent) {
    auto& nd = t.nodes[x];
    if (nd.kind == Kind::Leaf) return 1;
    auto ks = kids_of(t, x, parent);
    double c = 1;
    for (int y : ks) c *= count_rec(t, y, x);
    if (nd.kind == Kind::P)
        for (int i = 2; i <= (int)ks.size(); ++i) c *= i;
    else if (nd.kind == Kind::Q && ks.size() >= 2)
        c *= 2;
    return c;
}

void frontiers(const Tree& t, int x, int parent, std::vector<Order>& out) {
    auto& nd = t.nodes[x];
    if (nd.kind == Kind::Leaf) {
        out = {{nd.label}};
        return;
    }
    auto ks = kids_of(t, x, parent);
    std::vector<std::vector<Order>> sub(ks.size());
    for (size_t i = 0; i < ks.size(); ++i) frontiers(t, ks[i], x, sub[i]);
    std::vector<std::vector<int>> perms;
    std::vector<int> idx(ks.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = (int)i;
    if (nd.kind == Kind::P) {
        do perms.push_back(idx);
        while (std::next_permutation(idx.begin(), idx.end()));
    } else {
        perms.push_back(idx);
        if (nd.kind == Kind::Q) {
            std::reverse(idx.begin(), idx.end());
            perms.push_back(idx);
        }
    }
    out.clear();
    for (auto& p : perms) {
        std::vector<Order> acc{{}};
        for (int i : p) {
            std::vector<Order> nxt;
            for (auto& a : acc)
                for (auto& s : sub[i]) {
                    Order o = a;
                    o.insert(o.end(), s.begin(), s.end());
                    nxt.push_back(std::move(o));
                }
            acc = std::move(nxt);
        }
        for (auto& a : acc) out.push_back(std::move(a));
    }
}

}  // namespace

double count_orders(const Tree& t) {
    if (t.null) return 0;
    auto lv = t.leaves();
    if (lv.size() <= 2) return 1;
    int r = t.leaf_node(lv[0]);
    return count_rec(t, t.nodes[r].adj[0], r);
}

std::vector<Order> enumerate_orders(const Tree& t, double cap) {
    if (t.null) return {};
    auto lv = t.leaves();
    if (lv.size() <= 2) return {lv};
    if (count_orders(t) > cap) throw std::length_error("enumeration cap exceeded");
    int r = t.leaf_node(lv[0]);
    std::vector<Order> fr;
    frontiers(t, t.nodes[r].adj[0], r, fr);
    for (auto& o : fr) o.insert(o.begin(), lv[0]);
    std::sort(fr.begin(), fr.end());
    return fr;
}

Order normalize_cyclic(const Order& o) {
    if (o.empty()) return o;
    auto it = std::min_element(o.begin(), o.end());
    Order r(it, o.end());
    r.insert(r.end(), o.begin(), it);
    return r;
}

Order first_order(const Tree& t) {
    if (t.null) return {};
    auto lv = t.leaves();
    if (lv.size() <= 2) return lv;
    int r = t.leaf_node(lv[0]);
    Order out;
    std::function<void(int, int)> go = [&](int x, int p) {
        if (t.is_leaf(x)) {
            out.push_back(t.nodes[x].label);
            return;
        }
        for (int y : kids_of(t, x, p)) go(y, x);
    };
    out.push_back(lv[0]);
    go(t.nodes[r].adj[0], r);
    return out;
}

// ---------------------------------------------------------------- reduction

namespace {

enum St { EMPTY = 0, PART = 1, FULL = 2 };

struct Seq {
    std::vector<int> items;
    bool f = false;          // locked orientation
    bool full_right = true;  // fulls at the end of items
};

}  // namespace

bool reduce(Tree& t, const std::vector<int>& s0) {
    if (t.null) return false;
    std::vector<int> S = s0;
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());
    int n = t.leaf_count();
    int k = (int)S.size();
    if (k <= 1 || k >= n - 1) return true;

    int N = (int)t.nodes.size();
    std::vector<char> in(N, 0);
    int r = -1;
    for (int i : t.alive_nodes()) {
        if (!t.is_leaf(i)) continue;
        if (std::binary_search(S.begin(), S.end(), t.nodes[i].label)) in[i] = 1;
        else if (r < 0 || t.nodes[i].label < t.nodes[r].label) r = i;
    }
    // rooted view hanging from leaf r; kids in frontier order
    std::vector<int> par(N, -1), order;
    std::vector<std::vector<int>> kids(N);
    {
        std::vector<int> st{r};
        par[r] = -2;
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            order.push_back(x);
            kids[x] = kids_of(t, x, par[x] < 0 ? -1 : par[x]);
            for (int y : kids[x]) par[y] = x, st.push_back(y);
        }
    }
    std::vector<int> cnt(N, 0), tot(N, 0);
    for (int i = (int)order.size() - 1; i >= 0; --i) {
        int x = order[i];
        if (t.is_leaf(x)) cnt[x] = in[x], tot[x] = 1;
        else
            for (int y : kids[x]) cnt[x] += cnt[y], tot[x] += tot[y];
    }
    auto st = [&](int x) { return cnt[x] == 0 ? EMPTY : cnt[x] == tot[x] ? FULL : PART; };

    int R = kids[r][0];
    while (true) {
        int nx = -1;
        for (int y : kids[R])
            if (cnt[y] == k) nx = y;
        if (nx < 0) break;
        R = nx;
    }
    if (st(R) == FULL) return true;

    auto new_node = [&](Kind kd, const std::vector<int>& ks) {
        int z = t.add_node(kd);
        par.push_back(-1);
        kids.push_back(ks);
        cnt.push_back(0);
        tot.push_back(0);
        for (int c : ks) par[c] = z;
        return z;
    };
    auto group = [&](const std::vector<int>& v) -> int {
        if (v.empty()) return -1;
        if (v.size() == 1) return v[0];
        return new_node(Kind::P, v);
    };
    auto push = [](std::vector<int>& out, int x) {
        if (x >= 0) out.push_back(x);
    };

    // partial nodes strictly below R, children first
    std::vector<int> partial;
    {
        std::function<void(int)> go = [&](int x) {
            for (int y : kids[x])
                if (st(y) == PART) go(y);
            if (x != R) partial.push_back(x);
        };
        go(R);
    }
    std::map<int, Seq> info;
    auto oriented = [&](int c, bool want_full_right) {
        Seq& q = info.at(c);
        std::vector<int> v = q.items;
        if (q.full_right != want_full_right) std::reverse(v.begin(), v.end());
        return v;
    };

    for (int y : partial) {
        std::vector<int> E, Fu, Pa;
        for (int c : kids[y]) (st(c) == EMPTY ? E : st(c) == FULL ? Fu : Pa).push_back(c);
        if (Pa.size() > 1) return false;
        Seq out;
        Kind ky = t.nodes[y].kind;
        if (ky == Kind::P) {
            int ge = group(E), gf = group(Fu);
            if (Pa.empty()) {
                out.items = {ge, gf};
            } else {
                Seq& q = info.at(Pa[0]);
                out.f = q.f;
                if (q.f && !q.full_right) {
                    push(out.items, gf);
                    out.items.insert(out.items.end(), q.items.begin(), q.items.end());
                    push(out.items, ge);
                    out.full_right = false;
                } else {
                    push(out.items, ge);
                    auto v = oriented(Pa[0], true);
                    out.items.insert(out.items.end(), v.begin(), v.end());
                    push(out.items, gf);
                }
            }
        } else {
            std::vector<int> ks = kids[y];
            auto fits = [&](bool e_first) {
                int last = -1, parts = 0;
                for (int c : ks) {
                    int s = st(c);
                    int rk = s == PART ? 1 : ((s == EMPTY) == e_first ? 0 : 2);
                    if (rk < last) return false;
                    last = rk;
                    parts += s == PART;
                }
                return parts <= 1;
            };
            bool d;  // true: empties first
            if (fits(true)) d = true;
            else if (fits(false)) d = false;
            else return false;
            bool locked = ky == Kind::F;
            if (!Pa.empty() && info.at(Pa[0]).f && info.at(Pa[0]).full_right != d) {
                if (locked) return false;
                std::reverse(ks.begin(), ks.end());
                d = !d;
            }
            for (int c : ks) {
                if (st(c) == PART) {
                    auto v = oriented(c, d);
                    out.items.insert(out.items.end(), v.begin(), v.end());
                    locked |= info.at(c).f;
                } else {
                    out.items.push_back(c);
                }
            }
            out.f = locked;
            out.full_right = d;
        }
        if (!out.f && !out.full_right) {
            std::reverse(out.items.begin(), out.items.end());
            out.full_right = true;
        }
        for (int c : Pa) t.nodes[c].alive = false, t.nodes[c].adj.clear();
        info[y] = out;
    }

    // pertinent root
    std::vector<int> newkids;
    Kind newkind = t.nodes[R].kind;
    std::vector<int> E, Fu, Pa;
    for (int c : kids[R]) (st(c) == EMPTY ? E : st(c) == FULL ? Fu : Pa).push_back(c);
    if (Pa.size() > 2) return false;
    if (t.nodes[R].kind == Kind::P) {
        if (Pa.empty()) {
            newkids = E;
            newkids.push_back(group(Fu));
        } else {
            std::vector<int> z;
            bool zf = false;
            int gf = group(Fu);
            auto can = [&](int c, bool fr) { return !info.at(c).f || info.at(c).full_right == fr; };
            if (Pa.size() == 1) {
                int p = Pa[0];
                if (can(p, true)) {
                    z = oriented(p, true);
                    push(z, gf);
                } else {
                    push(z, gf);
                    auto v = oriented(p, false);
                    z.insert(z.end(), v.begin(), v.end());
                }
                zf = info.at(p).f;
            } else {
                int a = Pa[0], b = Pa[1];
                if (!(can(a, true) && can(b, false))) std::swap(a, b);
                if (!(can(a, true) && can(b, false))) return false;
                z = oriented(a, true);
                push(z, gf);
                auto v = oriented(b, false);
                z.insert(z.end(), v.begin(), v.end());
                zf = info.at(a).f || info.at(b).f;
            }
            if (E.empty()) {
                newkids = z;
                newkind = zf ? Kind::F : Kind::Q;
            } else {
                newkids = E;
                newkids.push_back(new_node(zf ? Kind::F : Kind::Q, z));
            }
        }
    } else {
        bool locked = t.nodes[R].kind == Kind::F;
        bool done = false;
        for (int flip = 0; flip < (locked ? 1 : 2) && !done; ++flip) {
            std::vector<int> ks = kids[R];
            if (flip) std::reverse(ks.begin(), ks.end());
            // E* [X] F* [Y] E*
            size_t i = 0;
            int X = -1, Y = -1;
            while (i < ks.size() && st(ks[i]) == EMPTY) ++i;
            if (i < ks.size() && st(ks[i]) == PART) X = ks[i++];
            while (i < ks.size() && st(ks[i]) == FULL) ++i;
            if (i < ks.size() && st(ks[i]) == PART) Y = ks[i++];
            while (i < ks.size() && st(ks[i]) == EMPTY) ++i;
            if (i != ks.size()) continue;
            if (X >= 0 && info.at(X).f && !info.at(X).full_right) continue;
            if (Y >= 0 && info.at(Y).f && info.at(Y).full_right) continue;
            bool f = locked;
            newkids.clear();
            for (int c : ks) {
                if (c == X || c == Y) {
                    auto v = oriented(c, c == X);
                    newkids.insert(newkids.end(), v.begin(), v.end());
                    f |= info.at(c).f;
                } else {
                    newkids.push_back(c);
                }
            }
            newkind = f ? Kind::F : Kind::Q;
            done = true;
        }
        if (!done) return false;
    }
    for (int c : Pa) t.nodes[c].alive = false, t.nodes[c].adj.clear();
    kids[R] = newkids;
    t.nodes[R].kind = newkind;
    for (int c : newkids) par[c] = R;

    // write the rooted view back into rotations
    for (int x = 0; x < (int)t.nodes.size(); ++x) {
        if (!t.nodes[x].alive) continue;
        if (x == r) {
            t.nodes[x].adj = kids[x];
            continue;
        }
        std::vector<int> a{par[x]};
        if (!t.is_leaf(x)) a.insert(a.end(), kids[x].begin(), kids[x].end());
        t.nodes[x].adj = a;
    }
    if (t.root_hint >= 0 && !t.nodes[t.root_hint].alive) t.root_hint = R;
    normalize(t);
    return true;
}

Median median(const Tree& t, int a, int b, int c) {
    int la = t.leaf_node(a), lb = t.leaf_node(b), lc = t.leaf_node(c);
    if (la < 0 || lb < 0 || lc < 0) throw std::invalid_argument("median: unknown leaf");
    int N = (int)t.nodes.size();
    std::vector<int> par(N, -1), dep(N, 0);
    std::vector<int> st{la};
    par[la] = la;
    while (!st.empty()) {
        int x = st.back();
        st.pop_back();
        for (int y : t.nodes[x].adj)
            if (y != par[x]) par[y] = x, dep[y] = dep[x] + 1, st.push_back(y);
    }
    // lca of b and c with root a; also remember the child toward each
    int x = lb, y = lc, px = -1, py = -1;
    while (dep[x] > dep[y]) px = x, x = par[x];
    while (dep[y] > dep[x]) py = y, y = par[y];
    while (x != y) px = x, x = par[x], py = y, y = par[y];
    Median m;
    m.node = x;
    m.na = par[x];
    m.nb = px;
    m.nc = py;
    const auto& adj = t.nodes[x].adj;
    int d = (int)adj.size();
    auto at = [&](int z) { return (int)(std::find(adj.begin(), adj.end(), z) - adj.begin()); };
    int ia = at(m.na), ib = at(m.nb), ic = at(m.nc);
    m.ord = ((ib - ia + d) % d) < ((ic - ia + d) % d) ? 0 : 1;
    return m;
}

bool lock_triple(Tree& t, int a, int b, int c) {
    if (t.null) return false;
    Median m = median(t, a, b, c);
    auto& nd = t.nodes[m.node];
    if (nd.kind == Kind::F) return m.ord == 0;
    if (nd.kind == Kind::P && nd.adj.size() > 3) throw std::logic_error("lock_triple on a wide P-node");
    if (m.ord == 1) std::reverse(nd.adj.begin(), nd.adj.end());
    nd.kind = Kind::F;
    return true;
}

Tree intersect(const Tree& t1, const Tree& t2) {
    if (t1.null || t2.null) return Tree::null_tree();
    if (t1.leaves() != t2.leaves()) throw std::invalid_argument("ground-set mismatch");
    Tree r = t1;
    auto fail = [] { return Tree::null_tree(); };
    for (int x : t2.internal_nodes())
        for (int y : t2.nodes[x].adj)
            if (x < y && !t2.is_leaf(y))
                if (!reduce(r, t2.side(x, y))) return fail();
    for (int x : t2.internal_nodes()) {
        auto& nd = t2.nodes[x];
        int d = (int)nd.adj.size();
        if (nd.kind == Kind::P || d < 4) continue;
        for (int i = 0; i < d; ++i) {
            auto s = t2.side(x, nd.adj[i]);
            auto s2 = t2.side(x, nd.adj[(i + 1) % d]);
            s.insert(s.end(), s2.begin(), s2.end());
            if (!reduce(r, s)) return fail();
        }
    }
    for (int x : t2.internal_nodes()) {
        auto& nd = t2.nodes[x];
        if (nd.kind != Kind::F || nd.adj.size() < 3) continue;
        int a = t2.side(x, nd.adj[0])[0], b = t2.side(x, nd.adj[1])[0], c = t2.side(x, nd.adj[2])[0];
        if (!lock_triple(r, a, b, c)) return fail();
    }
    canon_inplace(r);
    return r;
}

// ---------------------------------------------------------------- boundaries

namespace {

struct ArcInfo {
    // for arc x->y (y = adj[x][i]): number of leaves on y's side, and of L-leaves
    std::vector<std::vector<int>> tot, inL;
};

ArcInfo arc_counts(const Tree& t, const std::vector<char>& inL) {
    int N = (int)t.nodes.size();
    int root = t.any_internal();
    std::vector<int> par(N, -1), order;
    std::vector<int> st{root};
    par[root] = root;
    while (!st.empty()) {
        int x = st.back();
        st.pop_back();
        order.push_back(x);
        for (int y : t.nodes[x].adj)
            if (y != par[x]) par[y] = x, st.push_back(y);
    }
    std::vector<int> sub(N, 0), subL(N, 0);
    for (int i = (int)order.size() - 1; i >= 0; --i) {
        int x = order[i];
        if (t.is_leaf(x)) sub[x] = 1, subL[x] = inL[x];
        if (x != root) sub[par[x]] += sub[x], subL[par[x]] += subL[x];
    }
    ArcInfo a;
    a.tot.assign(N, {});
    a.inL.assign(N, {});
    for (int x : order)
        for (int y : t.nodes[x].adj) {
            if (par[y] == x && y != root) {
                a.tot[x].push_back(sub[y]);
                a.inL[x].push_back(subL[y]);
            } else {
                a.tot[x].push_back(sub[root] - sub[x]);
                a.inL[x].push_back(subL[root] - subL[x]);
            }
        }
    return a;
}

std::optional<Boundary> find_boundary(const Tree& t, const std::vector<int>& L0) {
    std::vector<int> L = L0;
    std::sort(L.begin(), L.end());
    L.erase(std::unique(L.begin(), L.end()), L.end());
    int n = t.leaf_count();
    if (L.empty() || (int)L.size() >= n) throw std::invalid_argument("leaf set empty or not proper");
    std::vector<char> in(t.nodes.size(), 0);
    for (int l : L) {
        int x = t.leaf_node(l);
        if (x < 0) throw std::invalid_argument("unknown leaf in set");
        in[x] = 1;
    }
    if (n <= 2) {
        Boundary b;
        int x = t.leaf_node(L[0]);
        b.x = t.nodes[x].adj[0];
        b.y = x;
        return b;
    }
    auto ac = arc_counts(t, in);
    auto split = [&](int x, int i) { return ac.tot[x][i] == ac.inL[x][i]; };
    std::vector<std::pair<int, int>> S;  // (x, index of y in adj[x])
    for (int x : t.alive_nodes()) {
        auto& adj = t.nodes[x].adj;
        for (int i = 0; i < (int)adj.size(); ++i) {
            if (!split(x, i)) continue;
            int y = adj[i];
            bool maximal = true;
            // a bigger split arc z->x would swallow x->y
            for (int j = 0; j < (int)adj.size() && maximal; ++j) {
                int z = adj[j];
                if (z == y) continue;
                auto& za = t.nodes[z].adj;
                int jx = (int)(std::find(za.begin(), za.end(), x) - za.begin());
                if (split(z, jx)) maximal = false;
            }
            if (maximal) S.push_back({x, i});
        }
    }
    Boundary b;
    if (S.size() == 1) {
        b.x = S[0].first;
        b.y = t.nodes[b.x].adj[S[0].second];
        return b;
    }
    int chi = S[0].first;
    for (auto& [x, i] : S)
        if (x != chi) return std::nullopt;
    auto& nd = t.nodes[chi];
    if (nd.kind == Kind::P) return std::nullopt;
    int d = (int)nd.adj.size();
    if ((int)S.size() > d - 2) return std::nullopt;
    std::vector<char> mark(d, 0);
    for (auto& [x, i] : S) mark[i] = 1;
    // marked positions must form one cyclic run
    int starts = 0, first = -1;
    for (int i = 0; i < d; ++i)
        if (mark[i] && !mark[(i + d - 1) % d]) ++starts, first = i;
    if (starts != 1) return std::nullopt;
    b.is_edge = false;
    b.node = chi;
    for (int i = 0; i < (int)S.size(); ++i) b.split_nbrs.push_back(nd.adj[(first + i) % d]);
    return b;
}

void kill_side(Tree& t, int x, int y) {
    std::vector<std::pair<int, int>> st{{y, x}};
    while (!st.empty()) {
        auto [a, from] = st.back();
        st.pop_back();
        for (int b : t.nodes[a].adj)
            if (b != from) st.push_back({b, a});
        t.nodes[a].alive = false;
        t.nodes[a].adj.clear();
    }
}

}  // namespace

bool is_consecutive(const Tree& t, const std::vector<int>& L) { return find_boundary(t, L).has_value(); }

Boundary boundary(const Tree& t, const std::vector<int>& L) {
    auto b = find_boundary(t, L);
    if (!b) throw std::invalid_argument("leaf set not consecutive");
    return *b;
}

int contract_block(Tree& t, const std::vector<int>& block, int label) {
    Boundary b = boundary(t, block);
    int leaf = t.add_node(Kind::Leaf, label);
    if (b.is_edge) {
        int x = b.x, y = b.y;
        t.replace_adj(x, y, leaf);
        kill_side(t, x, y);
        t.nodes[leaf].adj = {x};
    } else {
        int chi = b.node;
        for (int y : b.split_nbrs) kill_side(t, chi, y);
        auto& adj = t.nodes[chi].adj;
        auto it = std::find(adj.begin(), adj.end(), b.split_nbrs[0]);
        size_t p = it - adj.begin();
        std::set<int> gone(b.split_nbrs.begin(), b.split_nbrs.end());
        std::vector<int> na;
        size_t d = adj.size();
        // rotation read from the run start, run replaced by the new leaf
        for (size_t i = 0; i < d; ++i) {
            int z = adj[(p + i) % d];
            if (i == 0) na.push_back(leaf);
            if (!gone.count(z)) na.push_back(z);
        }
        adj = na;
        t.nodes[leaf].adj = {chi};
    }
    if (t.leaf_count() <= 2 || t.nodes[t.nodes[leaf].adj[0]].kind == Kind::Leaf) {
        normalize(t);
        return t.leaf_node(label);
    }
    if (t.root_hint >= 0 && !t.nodes[t.root_hint].alive) t.root_hint = t.nodes[leaf].adj[0];
    return leaf;
}

Tree project(const Tree& t, const std::vector<int>& L, int ell) {
    std::vector<int> lv = t.leaves(), comp, Ls = L;
    std::sort(Ls.begin(), Ls.end());
    std::set_difference(lv.begin(), lv.end(), Ls.begin(), Ls.end(), std::back_inserter(comp));
    Tree r = t;
    if (comp.empty()) throw std::invalid_argument("project: nothing to contract");
    contract_block(r, comp, ell);
    return r;
}

Tree contract_blocks(const Tree& t, const std::vector<std::pair<std::vector<int>, int>>& blocks) {
    Tree r = t;
    for (auto& [blk, lab] : blocks) contract_block(r, blk, lab);
    return r;
}

Orientation orientation_of(const Tree& t, const std::vector<int>& L, const Order& sigma_prime, int ell) {
    Tree pert = project(t, L, ell);
    auto m = match(pert, sigma_prime);
    if (!m) return Orientation::None;
    Boundary b = boundary(t, L);
    if (b.is_edge) return Orientation::Both;
    auto it = m->find(b.node);
    if (it == m->end()) throw std::logic_error("boundary node lost in projection");
    return it->second ? Orientation::Ccw : Orientation::Cw;
}

std::optional<Order> extension_exists(const Tree& t,
                                      const std::vector<std::pair<std::vector<int>, Order>>& assigned,
                                      int ell) {
    auto lv = t.leaves();
    std::vector<int> all;
    for (auto& [blk, sig] : assigned) all.insert(all.end(), blk.begin(), blk.end());
    std::sort(all.begin(), all.end());
    if (all != lv) throw std::invalid_argument("blocks do not partition the leaves");
    Tree r = t;
    for (auto& [blk, sig] : assigned) {
        if (blk.size() < 2) continue;
        std::vector<int> b = blk, comp;
        std::sort(b.begin(), b.end());
        std::set_difference(lv.begin(), lv.end(), b.begin(), b.end(), std::back_inserter(comp));
        // F over sigma with ell expanded to a free bundle
        Tree c;
        int f = c.add_node(Kind::F);
        for (int l : sig) {
            if (l != ell) {
                c.link(f, c.add_node(Kind::Leaf, l));
            } else if (comp.size() == 1) {
                c.link(f, c.add_node(Kind::Leaf, comp[0]));
            } else {
                int p = c.add_node(Kind::P);
                c.link(f, p);
                for (int z : comp) c.link(p, c.add_node(Kind::Leaf, z));
            }
        }
        c.root_hint = f;
        r = intersect(r, c);
        if (r.null) return std::nullopt;
    }
    return first_order(r);
}

std::vector<Triple> orientation_triples(const Tree& t) {
    std::vector<Triple> out;
    for (int x : t.internal_nodes()) {
        auto& nd = t.nodes[x];
        if (nd.kind == Kind::P || nd.adj.size() < 3) continue;
        out.push_back({x, t.side(x, nd.adj[0])[0], t.side(x, nd.adj[1])[0], t.side(x, nd.adj[2])[0]});
    }
    return out;
}

}  // namespace fpq
