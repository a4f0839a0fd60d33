#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace ppdt {

inline constexpr const char* kLibraryVersion = "0.1.0";

/// FNV-1a 64-bit digest, rendered as 16 hex digits; used as the output
/// checksum in run manifests.
std::uint64_t fnv1a64(const std::string& bytes);
std::string fnv1a64_hex(const std::string& bytes);
std::string file_checksum(const std::string& path);

/// Metadata written next to every CLI output file. Reruns with an equal
/// parameter set produce byte-identical data files; wall time naturally
/// varies and lives only here.
struct RunManifest {
    std::string subcommand;
    std::map<std::string, std::string> parameters;  // flag -> rendered value
    std::string library_version = kLibraryVersion;
    double wall_time_s = 0.0;
    std::map<std::string, std::string> output_checksums;  // file -> fnv1a64 hex

    std::string to_json() const;
    void write(const std::string& path) const;
};

}  // namespace ppdt
