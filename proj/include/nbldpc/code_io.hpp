#pragma once

#include <iosfwd>
#include <string>
#include <utility>

#include "nbldpc/matrix.hpp"

namespace nbldpc {

/// Extended-alist code file:
///
///   p l n_rows
///   max_col_deg max_row_deg
///   <l column degrees>
///   <n_rows row degrees>
///   <n_rows lines of col:val pairs, columns 1-based, val in 1..p-1>
///   perm <l entries, 0-based codeword-position -> column map>
///   G
///   <m lines of l-m parity residues>
///   crc32 <8 hex digits over every preceding byte>
///
/// Round trips are bit-exact. Loading verifies the checksum but does not
/// check the null-space relation; callers validate separately.
void save_code(const GeneratorMatrix& g, const CheckMatrix& h, const std::string& path);
std::pair<GeneratorMatrix, CheckMatrix> load_code(const std::string& path);

/// Stream variants used by the file API and by tests.
void write_code(std::ostream& out, const GeneratorMatrix& g, const CheckMatrix& h);
std::pair<GeneratorMatrix, CheckMatrix> read_code(std::istream& in);

}  // namespace nbldpc
