#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline std::string rat_str(const Rat &r) { return r.str(); }

inline Rat rat_parse(const std::string &s) { return Rat(s); }
