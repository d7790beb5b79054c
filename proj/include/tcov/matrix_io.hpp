#pragma once

#include <iosfwd>
#include <string>

#include "tcov/matrix.hpp"

namespace tcov {

// Covariance matrix formats.
//   CSV:    first line "p", then p comma-separated rows (%.17g, lossless).
//   Binary: magic "TCOV", u64 p, then p*p little-endian f64, row-major.
// Data matrix formats use the same conventions with header "n,p" / magic
// "TDAT", u64 n, u64 p. All round-trip bit-exactly for finite values.

void write_matrix_csv(std::ostream& os, const CovMatrix& m);
CovMatrix read_matrix_csv(std::istream& is);

void write_matrix_bin(std::ostream& os, const CovMatrix& m);
CovMatrix read_matrix_bin(std::istream& is);

void write_data_csv(std::ostream& os, const DataMatrix& m);
DataMatrix read_data_csv(std::istream& is);

void write_data_bin(std::ostream& os, const DataMatrix& m);
DataMatrix read_data_bin(std::istream& is);

// Path helpers; format from `format` ("csv" or "bin").
void save_matrix(const std::string& path, const CovMatrix& m, const std::string& format);
CovMatrix load_matrix(const std::string& path);   // sniffs format from content
void save_data(const std::string& path, const DataMatrix& m, const std::string& format);
DataMatrix load_data(const std::string& path);

}  // namespace tcov
