#pragma once

#include <string>
#include <vector>

#include "spb/certificate.hpp"
#include "spb/instance.hpp"
#include "spb/sefe.hpp"
#include "spb/solve.hpp"

namespace spb::io {

// All parsers throw ParseError with the offending field named; all writers
// emit a stable field order so identical inputs give identical bytes.

StreamedInstance parse_instance(const std::string& text);
std::string instance_json(const StreamedInstance& i);

SefeInstance parse_family(const std::string& text);
std::string family_json(const SefeInstance& s);

// The rotation is read against the instance's non-trivial backbone
// component; key shapes other than "stream:<index>" / "vertex:<label>"
// throw MalformedCertificate.
DrawingCertificate parse_certificate(const std::string& text, const StreamedInstance& i);
std::string certificate_json(const DrawingCertificate& c);

// Multi-piece witness: {"pieces": [{"instance": ..., "certificate": ...}]}.
bool is_composite_witness(const std::string& text);
std::string witness_json(const std::vector<PieceWitness>& pieces);
std::vector<PieceWitness> parse_composite_witness(const std::string& text);

// Schematic export: backbone solid, stream dashed and labelled with its
// position.
std::string instance_dot(const StreamedInstance& i);

std::string read_file(const std::string& path);

// Writes to a temp file in the same directory, then renames; a crashed run
// never leaves a half-written artifact behind.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace spb::io
