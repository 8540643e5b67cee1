#ifndef MIDI_DICOM_ELEMENT_HPP
#define MIDI_DICOM_ELEMENT_HPP

#include "midi/dicom/tag.hpp"
#include "midi/dicom/vr.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace midi::dicom {

class data_set;

/// One data element. Leaf payloads are kept as encoded bytes so unknown and
/// private content round-trips verbatim; text is decoded on access. SQ
/// elements hold parsed item datasets instead.
class data_element {
public:
    data_element() = default;
    data_element(tag t, vr v) : tag_(t), vr_(v) {}

    static data_element text(tag t, vr v, std::string_view value);
    static data_element binary(tag t, vr v, std::vector<uint8_t> bytes);
    static data_element sequence(tag t, std::vector<data_set> items);
    static data_element uint16(tag t, vr v, uint16_t value);

    tag element_tag() const { return tag_; }
    vr value_repr() const { return vr_; }
    bool is_sequence() const { return vr_ == vr::SQ; }

    /// True for a present element with zero-length value (and no items).
    bool empty_value() const;

    /// Decoded text with trailing pad (space/NUL) stripped. Empty for binary
    /// payloads that are not text VRs.
    std::string as_text() const;

    /// Backslash-separated multi-value split of as_text().
    std::vector<std::string> as_texts() const;

    /// Raw payload bytes (leaf elements).
    const std::vector<uint8_t>& bytes() const { return bytes_; }
    std::vector<uint8_t>& bytes() { return bytes_; }

    const std::vector<data_set>& items() const { return items_; }
    std::vector<data_set>& items() { return items_; }

    /// Little-endian unsigned read of US/UL/SS/SL payloads (first value).
    std::optional<uint64_t> as_uint() const;

    /// Replaces the payload with text, padded to even length per VR rules.
    void set_text(std::string_view value);

private:
    tag tag_;
    vr vr_ = vr::UN;
    std::vector<uint8_t> bytes_;
    std::vector<data_set> items_;
};

}  // namespace midi::dicom

#endif
