#ifndef MIDI_DICOM_DICTIONARY_HPP
#define MIDI_DICOM_DICTIONARY_HPP

#include "midi/dicom/tag.hpp"
#include "midi/dicom/vr.hpp"

#include <optional>
#include <string_view>

namespace midi::dicom {

struct dictionary_entry {
    tag t;
    vr value_repr;
    std::string_view name;
};

/// Looks up a standard-dictionary entry. Private and unknown tags return
/// nullopt; callers fall back to UN / empty name.
const dictionary_entry* dictionary_lookup(tag t);

/// VR for implicit little-endian parsing: dictionary VR, UN when unknown.
vr implicit_vr_for(tag t);

/// Human-readable attribute name; "" when unknown.
std::string_view tag_name(tag t);

}  // namespace midi::dicom

#endif
