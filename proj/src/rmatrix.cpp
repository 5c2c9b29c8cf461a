#include "rmatrix.hpp"

#include "util.hpp"

#include <map>
#include <sstream>

namespace rmx {

using lab::MN;
using ring::Laurent;
using ring::RatFunc;

namespace {

// One row per nonzero entry: "inv sw se ne nw code".  Codes: "1" is the
// constant 1; "u1" and "u2" stand for (1-q^2)u_i/(u1-q^2 u2) with an optional
// *q^k / /q^k monomial shift; "x" is the crossing weight q(u1-u2)/(u1-q^2 u2).
const char *CROSS_DATA = R"(
0 0 0 0 0 1
0 10 0 10 0 1
0 20 0 20 0 1
0 (21)0 0 (21)0 0 1
0 0 1 0 1 1
0 1 1 1 1 1
0 21 1 21 1 1
2 (21)0 1 (21)0 1 1
0 0 2 0 2 1
0 1 2 1 2 1
0 2 2 2 2 1
0 10 2 10 2 1
0 1 10 1 10 1
2 10 10 10 10 1
2 (21)0 10 (21)0 10 1
0 2(10) 10 2(10) 10 1
0 2 20 2 20 1
2 10 20 10 20 1
2 20 20 20 20 1
2 2(10) 20 2(10) 20 1
0 0 21 0 21 1
0 2 21 2 21 1
2 20 21 20 21 1
2 21 21 21 21 1
2 20 (21)0 20 (21)0 1
0 21 (21)0 21 (21)0 1
4 (21)0 (21)0 (21)0 (21)0 1
2 2(10) (21)0 2(10) (21)0 1
2 1 2(10) 1 2(10) 1
0 2 2(10) 2 2(10) 1
2 21 2(10) 21 2(10) 1
4 2(10) 2(10) 2(10) 2(10) 1
2 (21)0 (21)0 0 21 u1/q2
1 (21)0 1 10 2 u1/q
1 2 2(10) 10 10 u1/q
3 (21)0 (21)0 10 20 u1/q
1 1 2(10) 0 21 u1/q
1 10 20 0 21 u1/q
3 2(10) 2(10) 20 21 u1/q
3 (21)0 (21)0 1 2(10) u1/q
0 1 10 0 0 u1
0 2 20 0 0 u1
0 21 (21)0 0 0 u1
0 2 21 10 0 u1
0 2(10) 10 20 0 u1
0 2 2(10) 0 1 u1
0 2 21 1 1 u1
0 10 0 1 1 u1
0 20 0 21 1 u1
0 2(10) 10 21 1 u1
0 (21)0 0 1 2 u1
0 20 0 2 2 u1
0 21 1 2 2 u1
0 2(10) 10 2 2 u1
2 2(10) 2(10) 10 2 u1
0 2 20 1 10 u1
0 21 (21)0 1 10 u1
2 20 (21)0 10 10 u1
2 20 20 (21)0 10 u1
2 21 2(10) (21)0 10 u1
0 21 (21)0 2 20 u1
2 2(10) 20 21 21 u1
2 10 20 1 2(10) u1
2 20 20 21 2(10) u1
1 2(10) (21)0 10 0 u1*q
1 21 21 (21)0 0 u1*q
1 2(10) 20 (21)0 0 u1*q
1 10 10 0 1 u1*q
1 20 (21)0 0 1 u1*q
1 2(10) (21)0 1 1 u1*q
3 2(10) 2(10) (21)0 1 u1*q
1 20 20 0 2 u1*q
1 21 2(10) 0 2 u1*q
1 (21)0 10 0 2 u1*q
1 21 21 1 2 u1*q
1 2(10) 20 1 2 u1*q
1 20 21 10 2 u1*q
1 2(10) (21)0 2 21 u1*q
1 20 (21)0 2 2(10) u1*q
2 20 21 (21)0 1 u1*q2
2 (21)0 1 20 21 u2/q2
1 0 1 10 10 u2/q
1 0 2 (21)0 10 u2/q
1 0 2 20 20 u2/q
1 1 2 2(10) 20 u2/q
1 (21)0 0 2(10) 20 u2/q
1 10 2 20 21 u2/q
1 1 2 21 21 u2/q
1 (21)0 0 21 21 u2/q
1 0 1 20 (21)0 u2/q
1 2 2(10) 20 (21)0 u2/q
1 1 1 2(10) (21)0 u2/q
1 2 21 2(10) (21)0 u2/q
1 10 0 2(10) (21)0 u2/q
1 0 2 21 2(10) u2/q
3 (21)0 1 2(10) 2(10) u2/q
0 1 1 10 0 u2
0 2 2 20 0 u2
0 21 1 20 0 u2
0 1 2 (21)0 0 u2
0 2 2 21 1 u2
0 0 0 1 10 u2
0 2 2 2(10) 10 u2
0 20 0 2(10) 10 u2
0 21 1 2(10) 10 u2
0 0 0 2 20 u2
0 1 10 2 20 u2
2 1 2(10) 10 20 u2
2 21 2(10) 20 20 u2
2 (21)0 10 20 20 u2
2 21 21 2(10) 20 u2
0 1 1 2 21 u2
0 10 0 2 21 u2
2 10 10 20 (21)0 u2
0 0 0 21 (21)0 u2
0 1 10 21 (21)0 u2
0 2 20 21 (21)0 u2
0 0 1 2 2(10) u2
2 (21)0 10 21 2(10) u2
2 10 2 2(10) 2(10) u2
1 10 2 (21)0 1 u2*q
1 0 21 10 20 u2*q
3 1 2(10) (21)0 (21)0 u2*q
3 10 20 (21)0 (21)0 u2*q
1 0 21 1 2(10) u2*q
1 10 10 2 2(10) u2*q
3 20 21 2(10) 2(10) u2*q
2 0 21 (21)0 (21)0 u2*q2
-1 1 0 1 0 x
-1 2 0 2 0 x
-1 21 0 21 0 x
-1 2(10) 0 2(10) 0 x
-1 2 1 2 1 x
1 10 1 10 1 x
1 20 1 20 1 x
1 2(10) 1 2(10) 1 x
1 20 2 20 2 x
1 21 2 21 2 x
1 (21)0 2 (21)0 2 x
1 2(10) 2 2(10) 2 x
1 0 10 0 10 x
-1 2 10 2 10 x
1 20 10 20 10 x
-1 21 10 21 10 x
1 0 20 0 20 x
1 1 20 1 20 x
1 21 20 21 20 x
3 (21)0 20 (21)0 20 x
1 1 21 1 21 x
1 10 21 10 21 x
3 (21)0 21 (21)0 21 x
3 2(10) 21 2(10) 21 x
1 0 (21)0 0 (21)0 x
1 1 (21)0 1 (21)0 x
-1 2 (21)0 2 (21)0 x
3 10 (21)0 10 (21)0 x
1 0 2(10) 0 2(10) x
3 10 2(10) 10 2(10) x
3 20 2(10) 20 2(10) x
5 (21)0 2(10) (21)0 2(10) x
)";

// "inv x0 x1 x2 code"; codes are signed monomials in q
const char *UP_DATA = R"(
1 10 10 10 -1/q
1 10 20 (21)0 -1/q
1 20 20 20 -1/q
1 20 21 2(10) -1/q
1 21 2(10) 20 -1/q
1 21 21 21 -1/q
1 (21)0 10 20 -1/q
1 (21)0 1 2(10) -1/q
1 2(10) 20 21 -1/q
0 0 0 0 1
0 0 1 10 1
0 0 2 20 1
0 0 21 (21)0 1
0 1 10 0 1
0 1 1 1 1
0 1 2 21 1
0 2 20 0 1
0 2 21 1 1
0 2 2 2 1
0 2 2(10) 10 1
0 10 0 1 1
0 10 2 2(10) 1
0 20 0 2 1
0 21 (21)0 0 1
0 21 1 2 1
0 (21)0 0 21 1
0 2(10) 10 2 1
2 2(10) 2(10) 2(10) 1
1 1 2(10) (21)0 -q
1 20 (21)0 10 -q
1 2(10) (21)0 1 -q
2 (21)0 (21)0 (21)0 q2
)";

const char *DOWN_DATA = R"(
2 (21)0 (21)0 (21)0 1/q2
1 1 2(10) (21)0 -1/q
1 2(10) (21)0 1 -1/q
1 20 (21)0 10 -1/q
0 2 2(10) 10 1
2 2(10) 2(10) 2(10) 1
0 2 20 0 1
0 21 (21)0 0 1
0 2 21 1 1
0 0 21 (21)0 1
0 1 1 1 1
0 21 1 2 1
0 0 1 10 1
0 1 10 0 1
0 2(10) 10 2 1
0 2 2 2 1
0 0 2 20 1
0 1 2 21 1
0 10 2 2(10) 1
0 0 0 0 1
0 10 0 1 1
0 20 0 2 1
0 (21)0 0 21 1
1 21 2(10) 20 -q
1 20 20 20 -q
1 2(10) 20 21 -q
1 10 20 (21)0 -q
1 21 21 21 -q
1 20 21 2(10) -q
1 (21)0 1 2(10) -q
1 10 10 10 -q
1 (21)0 10 20 -q
)";

Laurent qpow(int k) { return Laurent::var("q", k); }

RatFunc cross_value(const std::string &code) {
    Laurent q = Laurent::var("q");
    Laurent u1 = Laurent::var("u1");
    Laurent u2 = Laurent::var("u2");
    Laurent den = u1 - q * q * u2;
    if (code == "1") return RatFunc(Laurent(1));
    if (code == "x") return {q * (u1 - u2), den};
    Laurent u = code.substr(0, 2) == "u1" ? u1 : u2;
    int shift = 0;
    if (code.size() > 2) {
        std::string suf = code.substr(2);
        if (suf == "*q") shift = 1;
        else if (suf == "*q2") shift = 2;
        else if (suf == "/q") shift = -1;
        else if (suf == "/q2") shift = -2;
        else check(false, "bad cross value code " + code);
    }
    return {qpow(shift) * (Laurent(1) - q * q) * u, den};
}

Laurent tri_value(const std::string &code) {
    if (code == "1") return Laurent(1);
    if (code == "-1/q") return qpow(-1) * Rat(-1);
    if (code == "-q") return qpow(1) * Rat(-1);
    if (code == "q2") return qpow(2);
    if (code == "1/q2") return qpow(-2);
    check(false, "bad triangle value code " + code);
    return Laurent();
}

std::vector<CrossEntry> parse_cross() {
    std::vector<CrossEntry> out;
    std::istringstream in(CROSS_DATA);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int inv;
        std::string sw, se, ne, nw, code;
        ls >> inv >> sw >> se >> ne >> nw >> code;
        out.push_back({inv, lab::mn_parse(sw, 2), lab::mn_parse(se, 2), lab::mn_parse(ne, 2),
                       lab::mn_parse(nw, 2), cross_value(code)});
    }
    check((int)out.size() == 160, "cross table size");
    return out;
}

std::vector<TriWeight> parse_tri(const char *data, int want) {
    std::vector<TriWeight> out;
    std::istringstream in(data);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int inv;
        std::string a, b, c, code;
        ls >> inv >> a >> b >> c >> code;
        out.push_back({inv, lab::mn_parse(a, 2), lab::mn_parse(b, 2), lab::mn_parse(c, 2),
                       tri_value(code)});
    }
    check((int)out.size() == want, "triangle table size");
    return out;
}

}  // namespace

const std::vector<CrossEntry> &cross_table() {
    static const std::vector<CrossEntry> t = parse_cross();
    return t;
}

const std::vector<TriWeight> &up_table() {
    static const std::vector<TriWeight> t = parse_tri(UP_DATA, 32);
    return t;
}

const std::vector<TriWeight> &down_table() {
    static const std::vector<TriWeight> t = parse_tri(DOWN_DATA, 32);
    return t;
}

const CrossEntry *cross_find(MN sw, MN se, MN ne, MN nw) {
    static const std::map<std::array<MN, 4>, const CrossEntry *> idx = [] {
        std::map<std::array<MN, 4>, const CrossEntry *> m;
        for (const CrossEntry &e : cross_table()) {
            bool fresh = m.emplace(std::array<MN, 4>{e.sw, e.se, e.ne, e.nw}, &e).second;
            check(fresh, "duplicate cross entry");
        }
        return m;
    }();
    auto it = idx.find({sw, se, ne, nw});
    return it == idx.end() ? nullptr : it->second;
}

RatFunc single_cross(int sw, int se, int ne, int nw) {
    Laurent q = Laurent::var("q");
    Laurent u1 = Laurent::var("u1");
    Laurent u2 = Laurent::var("u2");
    Laurent den = u2 - q * q * u1;
    if (ne == sw && nw == se) {
        if (sw == se) return RatFunc(Laurent(1));
        return {(Laurent(1) - q * q) * (sw < se ? u2 : u1), den};
    }
    if (ne == se && nw == sw && sw != se) return {q * (u1 - u2), q * q * u1 - u2};
    return RatFunc(Laurent(0));
}

RatFunc nil_cross(int sw, int se, int ne, int nw) {
    Laurent u1 = Laurent::var("u1");
    Laurent u2 = Laurent::var("u2");
    if (ne == sw && nw == se) {
        if (sw <= se) return RatFunc(Laurent(1));
        return {u1, u2};
    }
    if (ne == se && nw == sw && sw < se) return {u2 - u1, u2};
    return RatFunc(Laurent(0));
}

}  // namespace rmx
