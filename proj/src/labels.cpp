#include "labels.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "util.hpp"

namespace lab {

namespace {
struct Pool {
    // ids 0..9 are digit leaves
    struct Node {
        int left, right, card, maxd;
        std::string text;
    };
    std::vector<Node> nodes;
    std::map<std::pair<int, int>, int> index;
    std::mutex mu;

    Pool() {
        for (int i = 0; i < 10; i++)
            nodes.push_back({-1, -1, 1, i, std::to_string(i)});
    }
    int intern(int l, int r) {
        std::lock_guard<std::mutex> lk(mu);
        auto it = index.find({l, r});
        if (it != index.end()) return it->second;
        auto wrap = [&](int c) {
            return c < 10 ? nodes[c].text : "(" + nodes[c].text + ")";
        };
        Node n{l, r, nodes[l].card + nodes[r].card,
               std::max(nodes[l].maxd, nodes[r].maxd), wrap(l) + wrap(r)};
        int id = (int)nodes.size();
        nodes.push_back(n);
        index.emplace(std::make_pair(l, r), id);
        return id;
    }
};
Pool &pool() {
    static Pool p;
    return p;
}
}  // namespace

MN mn_leaf(int digit) {
    check(digit >= 0 && digit <= 9, "digit out of range");
    return digit;
}
MN mn_node(MN l, MN r) { return pool().intern(l, r); }
bool mn_is_leaf(MN m) { return m < 10; }
int mn_digit(MN m) {
    check(mn_is_leaf(m), "not a leaf");
    return m;
}
MN mn_left(MN m) {
    check(!mn_is_leaf(m), "leaf has no children");
    return pool().nodes[m].left;
}
MN mn_right(MN m) {
    check(!mn_is_leaf(m), "leaf has no children");
    return pool().nodes[m].right;
}
int mn_card(MN m) { return pool().nodes[m].card; }
int mn_maxdigit(MN m) { return pool().nodes[m].maxd; }
std::string mn_str(MN m) { return pool().nodes[m].text; }

namespace {
MN parse_item(const std::string &s, size_t &pos, int d);

MN parse_top(const std::string &s, size_t &pos, size_t end, int d) {
    MN a = parse_item(s, pos, d);
    if (pos == end) return a;  // single digit
    MN b = parse_item(s, pos, d);
    if (pos != end) throw std::runtime_error("multinumber has more than two parts: " + s);
    return mn_node(a, b);
}

MN parse_item(const std::string &s, size_t &pos, int d) {
    if (pos >= s.size()) throw std::runtime_error("truncated multinumber: " + s);
    char c = s[pos];
    if (c >= '0' && c <= '9') {
        pos++;
        int dig = c - '0';
        if (dig > d) throw std::runtime_error("digit exceeds d: " + s);
        return mn_leaf(dig);
    }
    if (c == '(') {
        int depth = 0;
        size_t close = pos;
        for (; close < s.size(); close++) {
            if (s[close] == '(') depth++;
            if (s[close] == ')' && --depth == 0) break;
        }
        if (close >= s.size()) throw std::runtime_error("unbalanced parentheses: " + s);
        size_t inner = pos + 1;
        MN m = parse_top(s, inner, close, d);
        if (mn_is_leaf(m)) throw std::runtime_error("redundant parentheses: " + s);
        pos = close + 1;
        return m;
    }
    throw std::runtime_error("bad character in multinumber: " + s);
}
}  // namespace

MN mn_parse(const std::string &text, int d) {
    if (text.empty()) throw std::runtime_error("empty multinumber");
    size_t pos = 0;
    return parse_top(text, pos, text.size(), d);
}

Str str_parse(const std::string &text, int d) {
    Str s;
    for (char c : text) {
        if (c < '0' || c > '9') throw std::runtime_error("bad string: " + text);
        int dig = c - '0';
        if (dig > d) throw std::runtime_error("digit exceeds d: " + text);
        s.push_back(dig);
    }
    return s;
}

std::string str_str(const Str &s) {
    std::string out;
    for (int v : s) out += char('0' + v);
    return out;
}

int inversions(const Str &s) {
    int inv = 0;
    for (size_t i = 0; i < s.size(); i++)
        for (size_t j = i + 1; j < s.size(); j++)
            if (s[i] > s[j]) inv++;
    return inv;
}

std::vector<int> content_of(const Str &s, int d) {
    std::vector<int> c(d + 1, 0);
    for (int v : s) {
        check(v <= d, "digit exceeds d");
        c[v]++;
    }
    return c;
}

Str omega_of_content(const std::vector<int> &content) {
    Str s;
    for (size_t v = 0; v < content.size(); v++)
        for (int k = 0; k < content[v]; k++) s.push_back((int)v);
    return s;
}

std::vector<Str> strings_of_content(const std::vector<int> &content) {
    Str s = omega_of_content(content);
    std::vector<Str> out;
    do out.push_back(s);
    while (std::next_permutation(s.begin(), s.end()));
    return out;
}

Str reversed(const Str &s) { return Str(s.rbegin(), s.rend()); }

Str complemented(const Str &s, int d) {
    Str out;
    for (int v : s) out.push_back(d - v);
    return out;
}

bool bruhat_leq(const Str &a, const Str &b) {
    check(a.size() == b.size(), "bruhat_leq: length mismatch");
    int maxd = 0;
    for (int v : a) maxd = std::max(maxd, v);
    for (int v : b) maxd = std::max(maxd, v);
    // b covers a iff every prefix of b has at least as many entries >= v
    std::vector<int> ca(maxd + 1, 0), cb(maxd + 1, 0);
    for (size_t k = 0; k < a.size(); k++) {
        ca[a[k]]++;
        cb[b[k]]++;
        int sa = 0, sb = 0;
        for (int v = maxd; v >= 1; v--) {
            sa += ca[v];
            sb += cb[v];
            if (sb < sa) return false;
        }
    }
    return true;
}

std::vector<int> occurrence_map(const Str &from, const Str &to) {
    check(from.size() == to.size(), "occurrence_map: length mismatch");
    int maxd = 0;
    for (int v : from) maxd = std::max(maxd, v);
    std::vector<std::vector<int>> positions(maxd + 1);
    for (size_t j = 0; j < to.size(); j++) {
        check(to[j] <= maxd, "occurrence_map: content mismatch");
        positions[to[j]].push_back((int)j);
    }
    std::vector<int> taken(maxd + 1, 0), out(from.size());
    for (size_t i = 0; i < from.size(); i++) {
        int v = from[i];
        check(taken[v] < (int)positions[v].size(), "occurrence_map: content mismatch");
        out[i] = positions[v][taken[v]++];
    }
    return out;
}

std::vector<int> min_lift(const Str &s) {
    int maxd = 0;
    for (int v : s) maxd = std::max(maxd, v);
    std::vector<int> cnt(maxd + 1, 0);
    for (int v : s) cnt[v]++;
    Str omega = omega_of_content(cnt);
    return occurrence_map(omega, s);
}

int perm_inversions(const std::vector<int> &p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); i++)
        for (size_t j = i + 1; j < p.size(); j++)
            if (p[i] > p[j]) inv++;
    return inv;
}

Str refine(const Str &coarse, const std::vector<std::vector<int>> &split_counts) {
    // fine digits are numbered consecutively across coarse classes
    std::vector<int> base(split_counts.size() + 1, 0);
    for (size_t c = 0; c < split_counts.size(); c++)
        base[c + 1] = base[c] + (int)split_counts[c].size();
    // within a coarse class, deal fine digits weakly increasing
    std::vector<std::vector<int>> deal(split_counts.size());
    for (size_t c = 0; c < split_counts.size(); c++)
        for (size_t k = 0; k < split_counts[c].size(); k++)
            for (int r = 0; r < split_counts[c][k]; r++) deal[c].push_back(base[c] + (int)k);
    std::vector<int> used(split_counts.size(), 0);
    Str out;
    for (int c : coarse) {
        check(c < (int)split_counts.size(), "refine: coarse digit out of range");
        check(used[c] < (int)deal[c].size(), "refine: split smaller than class");
        out.push_back(deal[c][used[c]++]);
    }
    for (size_t c = 0; c < split_counts.size(); c++)
        check(used[c] == (int)deal[c].size(), "refine: split larger than class");
    return out;
}

}  // namespace lab
