#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "asq/experiments.hpp"

namespace asq {

inline constexpr std::string_view kArtifactVersion = "0.1.0";

// Everything needed to rerun a scan: command, parameters, seed, RNG
// algorithm, artifact version and a timestamp.
struct RunManifest {
    std::string command;
    std::map<std::string, std::string> parameters;
    std::uint64_t seed = 0;
    std::string rng_algorithm = std::string(kRngAlgorithm);
    std::string version = std::string(kArtifactVersion);
    std::string timestamp;

    std::string to_json() const;
};

// 15-significant-digit, locale-independent formatting used for all CSV
// numeric fields.
std::string format_double(double v);

// One header row, then one row per record. Column set:
// experiment,index,params...,eig1..eigN,as_lhs,classification,rank,prob_plus,skipped.
// Param and eigenvalue columns come from the first record; all records of
// one scan must share the same shape.
void write_csv(const std::vector<ScanRecord>& records, std::ostream& os);
void write_csv_file(const std::vector<ScanRecord>& records, const std::string& path);

void write_manifest_file(const RunManifest& manifest, const std::string& path);

// Matrix exchange format: {"dims": [dA, dB], "re": [...], "im": [...]}
// with row-major entry arrays.
ComplexMatrix load_matrix_json(const std::string& path, BipartiteDims& dims_out);
void save_matrix_json(const ComplexMatrix& m, const BipartiteDims& dims, const std::string& path);

// Validated wrappers; throw InvalidStateError on inputs that are not a
// density matrix (Hermitian, unit trace within 1e-8) or not unitary.
DensityMatrix load_density_matrix(const std::string& path);
UnitaryMatrix load_unitary(const std::string& path);

}  // namespace asq
