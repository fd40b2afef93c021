// Copyright 2026 The symf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "symf/matrix_io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "symf/error.h"

namespace symf {

namespace {

[[noreturn]] void malformed(int line, const std::string &what) {
    std::ostringstream msg;
    msg << "line " << line << ": " << what;
    throw SymfError(ErrorCode::MalformedInput, msg.str());
}

bool parse_double(const std::string &tok, double &out) {
    if (tok.empty()) {
        return false;
    }
    size_t used = 0;
    try {
        out = std::stod(tok, &used);
    } catch (const std::exception &) {
        return false;
    }
    return used == tok.size() && std::isfinite(out);
}

bool parse_int(const std::string &tok, std::int64_t &out) {
    if (tok.empty()) {
        return false;
    }
    size_t used = 0;
    try {
        out = std::stoll(tok, &used);
    } catch (const std::exception &) {
        return false;
    }
    return used == tok.size();
}

std::string format_double(double v) {
    if (v == 0.0) {
        return "0";
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Next non-comment line; false at end of input.
bool next_line(std::istream &in, std::string &line, int &lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        return true;
    }
    return false;
}

}  // namespace

MatrixFile MatrixFile::of(RealMatrix m) {
    MatrixFile f;
    f.kind = Kind::Real;
    f.real = std::move(m);
    return f;
}

MatrixFile MatrixFile::of(IntMatrix m) {
    MatrixFile f;
    f.kind = Kind::Int;
    f.integer = std::move(m);
    return f;
}

MatrixFile MatrixFile::of(ComplexMatrix m) {
    MatrixFile f;
    f.kind = Kind::Complex;
    f.complex = std::move(m);
    return f;
}

Eigen::Index MatrixFile::rows() const {
    switch (kind) {
        case Kind::Real: return real.rows();
        case Kind::Int: return integer.rows();
        case Kind::Complex: return complex.rows();
    }
    return 0;
}

Eigen::Index MatrixFile::cols() const {
    switch (kind) {
        case Kind::Real: return real.cols();
        case Kind::Int: return integer.cols();
        case Kind::Complex: return complex.cols();
    }
    return 0;
}

RealMatrix MatrixFile::as_real() const {
    switch (kind) {
        case Kind::Real: return real;
        case Kind::Int: return integer.cast<double>();
        case Kind::Complex: break;
    }
    throw SymfError(ErrorCode::MalformedInput, "expected a real or int matrix, got complex");
}

IntMatrix MatrixFile::as_int() const {
    if (kind == Kind::Int) {
        return integer;
    }
    IntMatrix out;
    if (kind == Kind::Real && round_to_int(real, 0.0, out)) {
        return out;
    }
    throw SymfError(ErrorCode::MalformedInput, "expected an integer matrix");
}

ComplexMatrix MatrixFile::as_complex() const {
    switch (kind) {
        case Kind::Real: return real.cast<std::complex<double>>();
        case Kind::Int: return integer.cast<double>().cast<std::complex<double>>();
        case Kind::Complex: return complex;
    }
    return complex;
}

std::string_view kind_name(MatrixFile::Kind kind) {
    switch (kind) {
        case MatrixFile::Kind::Real: return "real";
        case MatrixFile::Kind::Int: return "int";
        case MatrixFile::Kind::Complex: return "complex";
    }
    return "real";
}

MatrixFile read_matrix(std::istream &in) {
    std::string line;
    int lineno = 0;
    if (!next_line(in, line, lineno)) {
        malformed(lineno, "missing header");
    }
    std::istringstream header(line);
    std::string magic, kind, extra;
    long long rows = -1, cols = -1;
    if (!(header >> magic >> kind >> rows >> cols) || magic != "symf" || (header >> extra)) {
        malformed(lineno, "header must be 'symf <real|int|complex> <rows> <cols>'");
    }
    if (rows < 1 || cols < 1 || rows > 100000 || cols > 100000) {
        malformed(lineno, "dimensions out of range");
    }

    MatrixFile f;
    if (kind == "real") {
        f.kind = MatrixFile::Kind::Real;
        f.real.resize(rows, cols);
    } else if (kind == "int") {
        f.kind = MatrixFile::Kind::Int;
        f.integer.resize(rows, cols);
    } else if (kind == "complex") {
        f.kind = MatrixFile::Kind::Complex;
        f.complex.resize(rows, cols);
    } else {
        malformed(lineno, "unknown kind '" + kind + "'");
    }

    for (long long r = 0; r < rows; ++r) {
        if (!next_line(in, line, lineno)) {
            malformed(lineno, "expected " + std::to_string(rows) + " rows");
        }
        std::istringstream row(line);
        std::string tok;
        long long c = 0;
        while (row >> tok) {
            if (c >= cols) {
                malformed(lineno, "too many entries");
            }
            bool ok = false;
            if (f.kind == MatrixFile::Kind::Real) {
                ok = parse_double(tok, f.real(r, c));
            } else if (f.kind == MatrixFile::Kind::Int) {
                ok = parse_int(tok, f.integer(r, c));
            } else {
                size_t comma = tok.find(',');
                double re = 0.0, im = 0.0;
                ok = comma != std::string::npos && parse_double(tok.substr(0, comma), re) &&
                     parse_double(tok.substr(comma + 1), im);
                f.complex(r, c) = {re, im};
            }
            if (!ok) {
                malformed(lineno, "bad entry '" + tok + "'");
            }
            ++c;
        }
        if (c != cols) {
            malformed(lineno, "expected " + std::to_string(cols) + " entries");
        }
    }
    if (next_line(in, line, lineno)) {
        malformed(lineno, "trailing data after the last row");
    }
    return f;
}

MatrixFile read_matrix_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw SymfError(ErrorCode::IoError, "cannot open '" + path + "'");
    }
    return read_matrix(in);
}

void write_matrix(std::ostream &out, const MatrixFile &m) {
    out << "symf " << kind_name(m.kind) << ' ' << m.rows() << ' ' << m.cols() << '\n';
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c > 0) {
                out << ' ';
            }
            switch (m.kind) {
                case MatrixFile::Kind::Real: out << format_double(m.real(r, c)); break;
                case MatrixFile::Kind::Int: out << m.integer(r, c); break;
                case MatrixFile::Kind::Complex:
                    out << format_double(m.complex(r, c).real()) << ',' << format_double(m.complex(r, c).imag());
                    break;
            }
        }
        out << '\n';
    }
}

void write_matrix_file(const std::string &path, const MatrixFile &m) {
    std::ofstream out(path);
    if (!out) {
        throw SymfError(ErrorCode::IoError, "cannot write '" + path + "'");
    }
    write_matrix(out, m);
    if (!out.flush()) {
        throw SymfError(ErrorCode::IoError, "write to '" + path + "' failed");
    }
}

}  // namespace symf
