#ifndef OCTAVIC_DATABASE_HPP
#define OCTAVIC_DATABASE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "octavic/relations.hpp"
#include "octavic/weighted_point.hpp"

namespace octavic {

struct PipelineCounts {
    Int enumerated;                     // |A| = prod(2*floor(h^i)+1) - 1
    std::uint64_t syzygy_pass = 0;      // |B|
    std::uint64_t disc_pass = 0;        // |C|
    std::uint64_t minimal = 0;          // |D| (image of C under minimal_tuple)
    std::uint64_t normalized_unique = 0;

    std::string to_json() const;
};

struct DatabaseRecord {
    std::array<Int, 7> tuple;  // normalized absolute minimal
    HeightValue height;
    Rat disc_value;            // P(tuple), nonzero
    std::uint64_t source_count = 0;
    bool tie_flagged = false;
};

/// Streaming enumeration of the integer box |x_i| <= floor(h^i), i = 2..8,
/// skipping the all-zero tuple. Odometer order: x2 is the most significant
/// digit, x8 the least; the first tuple is (-b2,...,-b8).
class TupleEnumerator {
public:
    explicit TupleEnumerator(const Rat& h);

    const std::array<std::int64_t, 7>& bounds() const { return bounds_; }
    /// Box size including the all-zero tuple.
    Int box_size() const;
    /// Number of enumerated tuples: box_size() - 1.
    Int tuple_count() const { return box_size() - 1; }

    /// Positions the cursor at a raw box index (0-based, zero tuple included).
    void seek(const Int& index);
    /// Next tuple, skipping the all-zero one. False when exhausted.
    bool next(std::array<std::int64_t, 7>& out);

private:
    std::array<std::int64_t, 7> bounds_;
    std::array<std::int64_t, 7> radix_;
    Int cursor_;
    Int total_;
};

enum class EmitFormat { csv, jsonl };

struct BuildOptions {
    Rat h;
    int workers = 1;
    EmitFormat format = EmitFormat::csv;
    std::string out_path;
    std::string expect_hash;   // refuse to run when nonempty and different
    std::string tool_version = "0.1.0";
};

/// The five-step pipeline: enumerate, syzygy filter, discriminant filter,
/// minimal reduction, normalization + dedup. Output is byte-identical for
/// any worker count.
PipelineCounts build_database(const RelationSet& rel, const BuildOptions& opt,
                              std::vector<DatabaseRecord>* records_out = nullptr);

/// Writes finalized records; both formats carry a metadata block with the
/// height bound, relation hash and tool version.
void emit_records(const std::vector<DatabaseRecord>& records, EmitFormat format,
                  const std::string& path, const Rat& h, const std::string& relation_hash,
                  const std::string& tool_version);

std::vector<DatabaseRecord> parse_jsonl(const std::string& path);

}  // namespace octavic

#endif
