#pragma once

#include "dlk/design.hpp"
#include "dlk/generators.hpp"

#include <string>

namespace dlk {

// JSON serialization (schema version "v": 1). Decode validates structure
// (labels, pattern kinds, block arity) with positional diagnostics in the
// thrown std::runtime_error; design validity is a separate concern
// (verify_design / verify_downlink).

std::string encode_design(const Design& d);
std::string encode_certificate(const DownLinkCertificate& c);
std::string encode_fixture(const Fixture& f);

Design decode_design(const std::string& text);
DownLinkCertificate decode_certificate(const std::string& text);
// Auto-detects design vs certificate (a certificate carries "map").
Fixture decode_document(const std::string& text);

// write-then-rename
void write_file_atomic(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

} // namespace dlk
