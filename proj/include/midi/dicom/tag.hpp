#ifndef MIDI_DICOM_TAG_HPP
#define MIDI_DICOM_TAG_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace midi::dicom {

/// One DICOM attribute tag (group, element).
struct tag {
    uint16_t group = 0;
    uint16_t element = 0;

    constexpr auto operator<=>(const tag&) const = default;

    /// Odd groups are reserved for private elements.
    constexpr bool is_private() const { return (group & 1u) != 0; }

    /// Canonical rendering "(GGGG,EEEE)", uppercase hex, zero padded.
    std::string to_string() const;

    /// Parses "(GGGG,EEEE)" (case-insensitive hex). Returns nullopt otherwise.
    static std::optional<tag> parse(std::string_view s);
};

// Tags the toolkit addresses by name.
namespace tags {
inline constexpr tag file_meta_group_length{0x0002, 0x0000};
inline constexpr tag file_meta_version{0x0002, 0x0001};
inline constexpr tag media_storage_sop_class_uid{0x0002, 0x0002};
inline constexpr tag media_storage_sop_instance_uid{0x0002, 0x0003};
inline constexpr tag transfer_syntax_uid{0x0002, 0x0010};
inline constexpr tag implementation_class_uid{0x0002, 0x0012};
inline constexpr tag implementation_version_name{0x0002, 0x0013};

inline constexpr tag specific_character_set{0x0008, 0x0005};
inline constexpr tag image_type{0x0008, 0x0008};
inline constexpr tag sop_class_uid{0x0008, 0x0016};
inline constexpr tag sop_instance_uid{0x0008, 0x0018};
inline constexpr tag study_date{0x0008, 0x0020};
inline constexpr tag series_date{0x0008, 0x0021};
inline constexpr tag acquisition_date{0x0008, 0x0022};
inline constexpr tag content_date{0x0008, 0x0023};
inline constexpr tag study_time{0x0008, 0x0030};
inline constexpr tag accession_number{0x0008, 0x0050};
inline constexpr tag modality{0x0008, 0x0060};
inline constexpr tag manufacturer{0x0008, 0x0070};
inline constexpr tag institution_name{0x0008, 0x0080};
inline constexpr tag institution_address{0x0008, 0x0081};
inline constexpr tag referring_physician_name{0x0008, 0x0090};
inline constexpr tag referring_physician_address{0x0008, 0x0092};
inline constexpr tag referring_physician_phone{0x0008, 0x0094};
inline constexpr tag station_name{0x0008, 0x1010};
inline constexpr tag study_description{0x0008, 0x1030};
inline constexpr tag series_description{0x0008, 0x103E};
inline constexpr tag institutional_department_name{0x0008, 0x1040};
inline constexpr tag performing_physician_name{0x0008, 0x1050};
inline constexpr tag operators_name{0x0008, 0x1070};
inline constexpr tag referenced_sop_class_uid{0x0008, 0x1150};
inline constexpr tag referenced_sop_instance_uid{0x0008, 0x1155};

inline constexpr tag patient_name{0x0010, 0x0010};
inline constexpr tag patient_id{0x0010, 0x0020};
inline constexpr tag patient_birth_date{0x0010, 0x0030};
inline constexpr tag patient_sex{0x0010, 0x0040};
inline constexpr tag other_patient_ids{0x0010, 0x1000};
inline constexpr tag patient_age{0x0010, 0x1010};
inline constexpr tag patient_address{0x0010, 0x1040};
inline constexpr tag patient_phone{0x0010, 0x2154};
inline constexpr tag patient_comments{0x0010, 0x4000};

inline constexpr tag device_serial_number{0x0018, 0x1000};
inline constexpr tag software_versions{0x0018, 0x1020};
inline constexpr tag protocol_name{0x0018, 0x1030};

inline constexpr tag study_instance_uid{0x0020, 0x000D};
inline constexpr tag series_instance_uid{0x0020, 0x000E};
inline constexpr tag study_id{0x0020, 0x0010};
inline constexpr tag series_number{0x0020, 0x0011};
inline constexpr tag instance_number{0x0020, 0x0013};
inline constexpr tag frame_of_reference_uid{0x0020, 0x0052};
inline constexpr tag image_laterality{0x0020, 0x0062};
inline constexpr tag image_comments{0x0020, 0x4000};

inline constexpr tag samples_per_pixel{0x0028, 0x0002};
inline constexpr tag photometric_interpretation{0x0028, 0x0004};
inline constexpr tag rows{0x0028, 0x0010};
inline constexpr tag columns{0x0028, 0x0011};
inline constexpr tag bits_allocated{0x0028, 0x0100};
inline constexpr tag bits_stored{0x0028, 0x0101};
inline constexpr tag high_bit{0x0028, 0x0102};
inline constexpr tag pixel_representation{0x0028, 0x0103};
inline constexpr tag burned_in_annotation{0x0028, 0x0301};

inline constexpr tag request_attributes_sequence{0x0040, 0x0275};
inline constexpr tag performed_procedure_step_description{0x0040, 0x0254};

inline constexpr tag pixel_data{0x7FE0, 0x0010};

inline constexpr tag item{0xFFFE, 0xE000};
inline constexpr tag item_delimitation{0xFFFE, 0xE00D};
inline constexpr tag sequence_delimitation{0xFFFE, 0xE0DD};
}  // namespace tags

}  // namespace midi::dicom

#endif
