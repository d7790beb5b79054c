#include "tcov/matrix_io.hpp"

#include <array>
#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tcov {

namespace {

void write_u64_le(std::ostream& os, std::uint64_t x) {
    std::array<unsigned char, 8> b;
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((x >> (8 * i)) & 0xff);
    os.write(reinterpret_cast<const char*>(b.data()), 8);
}

std::uint64_t read_u64_le(std::istream& is) {
    std::array<unsigned char, 8> b;
    is.read(reinterpret_cast<char*>(b.data()), 8);
    if (!is) throw std::runtime_error("matrix_io: truncated binary header");
    std::uint64_t x = 0;
    for (int i = 0; i < 8; ++i) x |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return x;
}

void write_f64_le(std::ostream& os, const double* v, std::size_t count) {
    if constexpr (std::endian::native == std::endian::little) {
        os.write(reinterpret_cast<const char*>(v), static_cast<std::streamsize>(count * 8));
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            std::uint64_t bits;
            std::memcpy(&bits, v + i, 8);
            write_u64_le(os, bits);
        }
    }
}

void read_f64_le(std::istream& is, double* v, std::size_t count) {
    if constexpr (std::endian::native == std::endian::little) {
        is.read(reinterpret_cast<char*>(v), static_cast<std::streamsize>(count * 8));
        if (!is) throw std::runtime_error("matrix_io: truncated binary payload");
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            const std::uint64_t bits = read_u64_le(is);
            std::memcpy(v + i, &bits, 8);
        }
    }
}

void write_csv_values(std::ostream& os, const double* v, std::int64_t rows, std::int64_t cols) {
    char buf[40];
    for (std::int64_t i = 0; i < rows; ++i) {
        for (std::int64_t j = 0; j < cols; ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", v[i * cols + j]);
            if (j) os << ',';
            os << buf;
        }
        os << '\n';
    }
}

std::vector<double> read_csv_values(std::istream& is, std::int64_t rows, std::int64_t cols) {
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    std::string line;
    for (std::int64_t i = 0; i < rows; ++i) {
        if (!std::getline(is, line)) throw std::runtime_error("matrix_io: truncated CSV");
        std::stringstream ss(line);
        std::string cell;
        std::int64_t j = 0;
        while (std::getline(ss, cell, ',')) {
            v.push_back(std::stod(cell));
            ++j;
        }
        if (j != cols) throw std::runtime_error("matrix_io: wrong CSV column count");
    }
    return v;
}

std::int64_t parse_dim(const std::string& s, const char* what) {
    try {
        const long long x = std::stoll(s);
        if (x < 1) throw std::runtime_error("");
        return x;
    } catch (...) {
        throw std::runtime_error(std::string("matrix_io: bad ") + what + " header");
    }
}

}  // namespace

void write_matrix_csv(std::ostream& os, const CovMatrix& m) {
    os << m.dim() << '\n';
    write_csv_values(os, m.data(), m.dim(), m.dim());
}

CovMatrix read_matrix_csv(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw std::runtime_error("matrix_io: empty CSV");
    const std::int64_t p = parse_dim(header, "matrix CSV");
    return CovMatrix::from_data(p, read_csv_values(is, p, p));
}

void write_matrix_bin(std::ostream& os, const CovMatrix& m) {
    os.write("TCOV", 4);
    write_u64_le(os, static_cast<std::uint64_t>(m.dim()));
    write_f64_le(os, m.data(), m.values().size());
}

CovMatrix read_matrix_bin(std::istream& is) {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "TCOV", 4) != 0)
        throw std::runtime_error("matrix_io: bad matrix magic");
    const auto p = static_cast<std::int64_t>(read_u64_le(is));
    if (p < 1 || p > (1 << 20)) throw std::runtime_error("matrix_io: implausible matrix dimension");
    std::vector<double> v(static_cast<std::size_t>(p) * static_cast<std::size_t>(p));
    read_f64_le(is, v.data(), v.size());
    return CovMatrix::from_data(p, std::move(v));
}

void write_data_csv(std::ostream& os, const DataMatrix& m) {
    os << m.n() << ',' << m.p() << '\n';
    write_csv_values(os, m.data(), m.n(), m.p());
}

DataMatrix read_data_csv(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw std::runtime_error("matrix_io: empty CSV");
    const auto comma = header.find(',');
    if (comma == std::string::npos) throw std::runtime_error("matrix_io: bad data CSV header");
    const std::int64_t n = parse_dim(header.substr(0, comma), "data CSV");
    const std::int64_t p = parse_dim(header.substr(comma + 1), "data CSV");
    return DataMatrix::from_rows(n, p, read_csv_values(is, n, p));
}

void write_data_bin(std::ostream& os, const DataMatrix& m) {
    os.write("TDAT", 4);
    write_u64_le(os, static_cast<std::uint64_t>(m.n()));
    write_u64_le(os, static_cast<std::uint64_t>(m.p()));
    write_f64_le(os, m.data(), static_cast<std::size_t>(m.n()) * static_cast<std::size_t>(m.p()));
}

DataMatrix read_data_bin(std::istream& is) {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "TDAT", 4) != 0)
        throw std::runtime_error("matrix_io: bad data magic");
    const auto n = static_cast<std::int64_t>(read_u64_le(is));
    const auto p = static_cast<std::int64_t>(read_u64_le(is));
    if (n < 0 || p < 1 || p > (1 << 20)) throw std::runtime_error("matrix_io: implausible data shape");
    std::vector<double> v(static_cast<std::size_t>(n) * static_cast<std::size_t>(p));
    read_f64_le(is, v.data(), v.size());
    return DataMatrix::from_rows(n, p, std::move(v));
}

namespace {

std::ofstream open_out(const std::string& path, bool binary) {
    std::ofstream os(path, binary ? std::ios::binary : std::ios::out);
    if (!os) throw std::runtime_error("matrix_io: cannot open for writing: " + path);
    return os;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("matrix_io: cannot open for reading: " + path);
    return is;
}

bool looks_binary(std::istream& is, const char* magic) {
    char head[4] = {0, 0, 0, 0};
    is.read(head, 4);
    is.clear();
    is.seekg(0);
    return std::memcmp(head, magic, 4) == 0;
}

}  // namespace

void save_matrix(const std::string& path, const CovMatrix& m, const std::string& format) {
    if (format == "csv") {
        auto os = open_out(path, false);
        write_matrix_csv(os, m);
    } else if (format == "bin") {
        auto os = open_out(path, true);
        write_matrix_bin(os, m);
    } else {
        throw std::runtime_error("matrix_io: unknown format: " + format);
    }
}

CovMatrix load_matrix(const std::string& path) {
    auto is = open_in(path);
    return looks_binary(is, "TCOV") ? read_matrix_bin(is) : read_matrix_csv(is);
}

void save_data(const std::string& path, const DataMatrix& m, const std::string& format) {
    if (format == "csv") {
        auto os = open_out(path, false);
        write_data_csv(os, m);
    } else if (format == "bin") {
        auto os = open_out(path, true);
        write_data_bin(os, m);
    } else {
        throw std::runtime_error("matrix_io: unknown format: " + format);
    }
}

DataMatrix load_data(const std::string& path) {
    auto is = open_in(path);
    return looks_binary(is, "TDAT") ? read_data_bin(is) : read_data_csv(is);
}

}  // namespace tcov
