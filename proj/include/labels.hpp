#pragma once

#include <string>
#include <vector>

namespace lab {

// Multinumber: a planar binary tree with digit leaves, e.g. "3(21)" =
// Node(3, Node(2,1)).  Values are indices into a global interned pool, so
// equality is integer comparison.  Ids 0..9 are reserved for digit leaves.
using MN = int;

MN mn_leaf(int digit);
MN mn_node(MN left, MN right);
bool mn_is_leaf(MN m);
int mn_digit(MN m);   // leaves only
MN mn_left(MN m);     // nodes only
MN mn_right(MN m);
int mn_card(MN m);     // number of digit leaves
int mn_maxdigit(MN m); // maximum digit = leftmost digit for catalog labels
std::string mn_str(MN m);
// Grammar: top := item item | digit; item := digit | '(' top ')'.
// Throws std::runtime_error on malformed input or digit > d.
MN mn_parse(const std::string &text, int d);

// Single-number strings (one digit per position).
using Str = std::vector<int>;

Str str_parse(const std::string &text, int d);
std::string str_str(const Str &s);
int inversions(const Str &s);
std::vector<int> content_of(const Str &s, int d);
Str omega_of_content(const std::vector<int> &content);  // weakly increasing
std::vector<Str> strings_of_content(const std::vector<int> &content);  // lex order
Str reversed(const Str &s);
Str complemented(const Str &s, int d);  // i -> d-i

// Bruhat order on same-content strings (dominance on prefix counts;
// larger = more inversions).
bool bruhat_leq(const Str &a, const Str &b);

// For same-content strings: the position map sending the k-th occurrence of
// each digit in `from` to its k-th occurrence in `to`; 0-based positions.
std::vector<int> occurrence_map(const Str &from, const Str &to);

// Minimal-length permutation lift of a string: occurrence_map(omega, s).
// inversions(lift) == inversions(s).
std::vector<int> min_lift(const Str &s);
int perm_inversions(const std::vector<int> &p);

// Refinement: each coarse digit c splits into new consecutive digits with the
// given multiplicities; within each coarse class the fine digits are placed
// weakly increasing left to right (this is the unique inversion-preserving
// refinement).
Str refine(const Str &coarse, const std::vector<std::vector<int>> &split_counts);

struct Shape {
    int d;
    std::vector<int> content;  // counts per digit 0..d

    int n() const {
        int s = 0;
        for (int c : content) s += c;
        return s;
    }
    int dim() const {  // number of inversions of the reverse-sorted string
        int s = 0;
        for (size_t i = 0; i < content.size(); i++)
            for (size_t j = i + 1; j < content.size(); j++) s += content[i] * content[j];
        return s;
    }
};

}  // namespace lab
