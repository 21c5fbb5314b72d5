// code_io.hpp
// JSON code files and the 0/1 matrix export.
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>

#include "oospc/code.hpp"

namespace oospc {

struct CodeMetadata {
    std::string construction;
    std::optional<std::pair<int, int>> regularity;
};

struct CodeFile {
    Code code;
    CodeMetadata metadata;
};

/// {"m","n","lambda_a","lambda_c","codewords":[[[x,y],[x,y],[x,y]],...],
///  "metadata":{"construction","regularity":[s,t]}}
std::string to_json_text(const Code& code, const CodeMetadata& meta = {});

/// Throws std::invalid_argument on malformed input or unreduced elements.
/// Validity is never read from the file.
CodeFile from_json_text(const std::string& text);

void save_code(const std::filesystem::path& path, const Code& code, const CodeMetadata& meta = {});
CodeFile load_code(const std::filesystem::path& path);

/// One m x n block of '0'/'1' per codeword (row x, column y), blocks separated
/// by a blank line.
std::string matrix_export(const Code& code);

}  // namespace oospc
