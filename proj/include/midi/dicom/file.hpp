#ifndef MIDI_DICOM_FILE_HPP
#define MIDI_DICOM_FILE_HPP

#include "midi/dicom/dataset.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace midi::dicom {

namespace uids {
inline constexpr const char* implicit_vr_le = "1.2.840.10008.1.2";
inline constexpr const char* explicit_vr_le = "1.2.840.10008.1.2.1";

inline constexpr const char* cr_storage = "1.2.840.10008.5.1.4.1.1.1";
inline constexpr const char* dx_storage = "1.2.840.10008.5.1.4.1.1.1.1";
inline constexpr const char* mg_storage = "1.2.840.10008.5.1.4.1.1.1.2";
inline constexpr const char* ct_storage = "1.2.840.10008.5.1.4.1.1.2";
inline constexpr const char* mr_storage = "1.2.840.10008.5.1.4.1.1.4";
inline constexpr const char* us_storage = "1.2.840.10008.5.1.4.1.1.6.1";
inline constexpr const char* pt_storage = "1.2.840.10008.5.1.4.1.1.128";
inline constexpr const char* sr_basic_text = "1.2.840.10008.5.1.4.1.1.88.11";

// Implementation identity written into emitted file meta.
inline constexpr const char* implementation_class = "1.9.900.3.7700.1";
inline constexpr const char* implementation_version = "MIDIKIT_10";
}  // namespace uids

struct parse_options {
    /// Accept a raw explicit-VR little-endian dataset without preamble/DICM.
    bool lenient_raw = false;
};

/// A parsed DICOM Part-10 file: group-0002 file meta plus the main dataset.
struct dicom_file {
    data_set meta;
    data_set dataset;
    std::string transfer_syntax;
    std::string source_path;

    std::string sop_class_uid() const;
    std::string sop_instance_uid() const;
    std::string study_uid() const;
    std::string series_uid() const;
    std::string patient_id() const;
    std::string modality() const;
};

/// Parses preamble + "DICM" + file meta + dataset. Only explicit and implicit
/// VR little endian, uncompressed, are supported. Throws parse_error.
dicom_file parse_file(std::span<const uint8_t> bytes, const parse_options& opts = {});
dicom_file parse_file_at(const std::string& path, const parse_options& opts = {});

/// Canonical encoding: 128-byte zero preamble, "DICM", explicit VR little
/// endian, defined lengths throughout. Deterministic for equal inputs.
/// When `file.meta` is empty a fresh file meta group is synthesized from the
/// dataset's SOP identifiers. Throws serialize_error.
std::vector<uint8_t> serialize_file(const dicom_file& file);
void write_file_at(const dicom_file& file, const std::string& path);

/// Builds the canonical file meta group for a dataset.
data_set make_file_meta(const data_set& dataset);

}  // namespace midi::dicom

#endif
