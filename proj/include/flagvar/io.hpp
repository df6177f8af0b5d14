#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "flagvar/padic.hpp"

namespace flagvar {

/// Prime-field elements print as one integer, others as the comma-separated
/// coefficient list, constant term first ("1,1" is 1+x).
std::string format_scalar(const Field& f, Elem a);
/// Accepts either form; shorter coefficient lists are zero-padded.
Elem parse_scalar(const Field& f, std::string_view text);

/// "p,m,k".
Field parse_field(std::string_view text);

std::string format_partition(const Partition& lambda);
Partition parse_partition(std::string_view text);
std::string format_perm(const Perm& w);
/// "2,1,4,3"; a comma-free string of single digits is also accepted.
Perm parse_perm(std::string_view text);
/// Rows separated by ';', e.g. "1,3;2,4".
std::string format_tableau(const Tableau& t);
Tableau parse_tableau(std::string_view text);

/// Header "rows cols p m k", then one line per row of space-separated scalars.
std::string format_matrix(const Mat& m);
Mat read_matrix(std::istream& in);
Mat read_matrix_file(const std::string& path);

/// r blocks of d rows each, separated by blank lines, A_0 first. Entries
/// are read over `f`; d is taken from the first block.
TruncatedSeriesMat read_series(std::istream& in, const Field& f);
TruncatedSeriesMat read_series_file(const std::string& path, const Field& f);
std::string format_series(const TruncatedSeriesMat& a);

/// JSON array with one entry per V_1..V_n: the RREF basis rows as arrays of
/// scalar strings.
std::string flag_to_json(const Flag& f);

}  // namespace flagvar
