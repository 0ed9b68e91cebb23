#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lsketch/params.hpp"
#include "lsketch/sketch_basic.hpp"
#include "lsketch/sketch_s2.hpp"

namespace lsketch {

enum class Algo : std::uint8_t { basic = 0, improved = 1 };

// A stored sketch: parameters, provenance, and all replicas of one
// algorithm. Exactly one of the replica vectors is populated, matching
// `algo`.
struct SketchFile {
  SketchParams params;
  Algo algo = Algo::basic;
  std::uint64_t master_seed = 0;
  std::uint64_t n = 0;
  std::vector<BasicSketch> basic_replicas;
  std::vector<ImprovedSketch> improved_replicas;
};

// Abstract size of a sketch. A "record" is one stored edge or one sample
// draw (a coalesced sample of multiplicity m counts m); degree-table
// entries are priced in bits only. Ids cost ceil(log2 n) bits, weights a
// 32-bit mantissa, multiplicities ceil(log2 budget) + 1 bits.
struct SizeReport {
  std::uint64_t stored_edge_records = 0;
  std::uint64_t sample_draws = 0;
  std::uint64_t sample_records_distinct = 0;
  std::uint64_t degree_entries = 0;
  std::uint32_t id_bits_per_vertex = 0;
  std::uint64_t stored_edge_bits = 0;
  std::uint64_t sample_bits = 0;
  std::uint64_t degree_table_bits = 0;
  std::uint64_t records() const { return stored_edge_records + sample_draws; }
  std::uint64_t total_bits() const { return stored_edge_bits + sample_bits + degree_table_bits; }
};

SizeReport size_report(const BasicSketch& sk);
SizeReport size_report(const ImprovedSketch& sk);
SizeReport size_report(const SketchFile& file);  // summed over replicas

// Binary format: "LSK1" magic, explicit little-endian fields, length-
// prefixed replica sections, and a record/bit-count footer that is
// re-verified on load. Identical inputs produce identical bytes.
std::vector<std::uint8_t> serialize_sketch_file(const SketchFile& file);
SketchFile deserialize_sketch_file(const std::vector<std::uint8_t>& bytes);

void write_sketch_file(const SketchFile& file, const std::string& path);
SketchFile read_sketch_file(const std::string& path);

}  // namespace lsketch
