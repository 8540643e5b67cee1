#ifndef MIDI_DICOM_VR_HPP
#define MIDI_DICOM_VR_HPP

#include <cstdint>
#include <optional>
#include <string_view>

namespace midi::dicom {

/// Two-letter DICOM value representations.
enum class vr : uint8_t {
    AE, AS, AT, CS, DA, DS, DT, FL, FD, IS, LO, LT, OB, OD, OF, OL, OV,
    OW, PN, SH, SL, SQ, SS, ST, SV, TM, UC, UI, UL, UN, UR, US, UT, UV,
};

std::string_view vr_name(vr v);
std::optional<vr> vr_from_chars(char a, char b);

/// VRs encoded with a 2-byte reserved field and 32-bit length in explicit VR
/// transfer syntaxes.
bool vr_uses_long_length(vr v);

/// VRs whose payload is character data.
bool vr_is_text(vr v);

/// Pad byte used to even out text payloads (NUL for UI, space otherwise).
char vr_pad_char(vr v);

}  // namespace midi::dicom

#endif
