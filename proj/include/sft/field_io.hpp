#pragma once

#include <iosfwd>
#include <string>

#include "sft/multivector.hpp"
#include "sft/slicefield.hpp"

namespace sft {

/// CSV schema: '#' metadata lines (format tag, m, c, grid), a header row
///   x0,r,part,blade,re,im
/// then one row per (node, part, blade), node-major (x0 outer, r inner),
/// part f1 before f2, blades ascending. Only blades that are nonzero
/// somewhere in the field are listed; absent blades read back as zero.
/// Floating values use shortest round-trip decimal form, so
/// write -> read -> write is byte-identical.
void write_field_csv(const SliceField& f, std::ostream& os);
SliceField read_field_csv(std::istream& is);

/// JSON alternative carrying the same content:
/// { schema, m, c, grid{L,N0,R,Nr}, blades[], f1[N0][Nr][nblades][2], f2 }.
void write_field_json(const SliceField& f, std::ostream& os);
SliceField read_field_json(std::istream& is);

/// Dispatch on the file extension (.json vs anything else = CSV).
SliceField load_field(const std::string& path);
void save_field(const SliceField& f, const std::string& path);

/// Shortest decimal representation that round-trips at double precision.
std::string format_double(double v);

/// "1" -> 0, "e0e2" -> 0b101; inverse of blade_label.
unsigned parse_blade_label(const std::string& label);

}  // namespace sft
