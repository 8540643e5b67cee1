#include "midi/dicom/vr.hpp"

#include <array>

namespace midi::dicom {

namespace {
constexpr std::array<const char*, 34> names = {
    "AE", "AS", "AT", "CS", "DA", "DS", "DT", "FL", "FD", "IS", "LO", "LT",
    "OB", "OD", "OF", "OL", "OV", "OW", "PN", "SH", "SL", "SQ", "SS", "ST",
    "SV", "TM", "UC", "UI", "UL", "UN", "UR", "US", "UT", "UV",
};
}

std::string_view vr_name(vr v) {
    return names[static_cast<size_t>(v)];
}

std::optional<vr> vr_from_chars(char a, char b) {
    for (size_t i = 0; i < names.size(); ++i) {
        if (names[i][0] == a && names[i][1] == b) return static_cast<vr>(i);
    }
    return std::nullopt;
}

bool vr_uses_long_length(vr v) {
    switch (v) {
        case vr::OB: case vr::OD: case vr::OF: case vr::OL: case vr::OV:
        case vr::OW: case vr::SQ: case vr::SV: case vr::UC: case vr::UN:
        case vr::UR: case vr::UT: case vr::UV:
            return true;
        default:
            return false;
    }
}

bool vr_is_text(vr v) {
    switch (v) {
        case vr::AE: case vr::AS: case vr::CS: case vr::DA: case vr::DS:
        case vr::DT: case vr::IS: case vr::LO: case vr::LT: case vr::PN:
        case vr::SH: case vr::ST: case vr::TM: case vr::UC: case vr::UI:
        case vr::UR: case vr::UT:
            return true;
        default:
            return false;
    }
}

char vr_pad_char(vr v) {
    return v == vr::UI ? '\0' : ' ';
}

}  // namespace midi::dicom
