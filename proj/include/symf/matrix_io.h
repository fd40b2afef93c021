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

#ifndef SYMF_MATRIX_IO_H
#define SYMF_MATRIX_IO_H

#include <iosfwd>
#include <string>
#include <string_view>

#include "symf/matcore.h"

namespace symf {

/// Text matrix file:
///   symf <real|int|complex> <rows> <cols>
///   one line of whitespace-separated entries per row, complex as re,im.
/// Lines starting with '#' are ignored. Reals are written with 17 significant digits.
struct MatrixFile {
    enum class Kind { Real, Int, Complex };

    Kind kind = Kind::Real;
    RealMatrix real;
    IntMatrix integer;
    ComplexMatrix complex;

    static MatrixFile of(RealMatrix m);
    static MatrixFile of(IntMatrix m);
    static MatrixFile of(ComplexMatrix m);

    Eigen::Index rows() const;
    Eigen::Index cols() const;

    /// Real view; integer payloads are widened. Throws MalformedInput for complex payloads.
    RealMatrix as_real() const;
    /// Integer view; real payloads must be integral. Throws MalformedInput otherwise.
    IntMatrix as_int() const;
    /// Complex view of any payload.
    ComplexMatrix as_complex() const;
};

std::string_view kind_name(MatrixFile::Kind kind);

/// Throws MalformedInput on any syntax or shape error.
MatrixFile read_matrix(std::istream &in);
/// Throws IoError if the file cannot be opened.
MatrixFile read_matrix_file(const std::string &path);

void write_matrix(std::ostream &out, const MatrixFile &m);
/// Throws IoError if the file cannot be written.
void write_matrix_file(const std::string &path, const MatrixFile &m);

}  // namespace symf

#endif
