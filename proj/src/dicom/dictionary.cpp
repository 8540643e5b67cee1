#include "midi/dicom/dictionary.hpp"

#include <algorithm>
#include <array>

namespace midi::dicom {

namespace {

// Sorted by (group, element). Subset of PS3.6 covering the attributes this
// toolkit reads, writes, or validates.
constexpr std::array entries = {
    dictionary_entry{{0x0002, 0x0000}, vr::UL, "File Meta Information Group Length"},
    dictionary_entry{{0x0002, 0x0001}, vr::OB, "File Meta Information Version"},
    dictionary_entry{{0x0002, 0x0002}, vr::UI, "Media Storage SOP Class UID"},
    dictionary_entry{{0x0002, 0x0003}, vr::UI, "Media Storage SOP Instance UID"},
    dictionary_entry{{0x0002, 0x0010}, vr::UI, "Transfer Syntax UID"},
    dictionary_entry{{0x0002, 0x0012}, vr::UI, "Implementation Class UID"},
    dictionary_entry{{0x0002, 0x0013}, vr::SH, "Implementation Version Name"},
    dictionary_entry{{0x0008, 0x0005}, vr::CS, "Specific Character Set"},
    dictionary_entry{{0x0008, 0x0008}, vr::CS, "Image Type"},
    dictionary_entry{{0x0008, 0x0012}, vr::DA, "Instance Creation Date"},
    dictionary_entry{{0x0008, 0x0013}, vr::TM, "Instance Creation Time"},
    dictionary_entry{{0x0008, 0x0016}, vr::UI, "SOP Class UID"},
    dictionary_entry{{0x0008, 0x0018}, vr::UI, "SOP Instance UID"},
    dictionary_entry{{0x0008, 0x0020}, vr::DA, "Study Date"},
    dictionary_entry{{0x0008, 0x0021}, vr::DA, "Series Date"},
    dictionary_entry{{0x0008, 0x0022}, vr::DA, "Acquisition Date"},
    dictionary_entry{{0x0008, 0x0023}, vr::DA, "Content Date"},
    dictionary_entry{{0x0008, 0x0030}, vr::TM, "Study Time"},
    dictionary_entry{{0x0008, 0x0031}, vr::TM, "Series Time"},
    dictionary_entry{{0x0008, 0x0032}, vr::TM, "Acquisition Time"},
    dictionary_entry{{0x0008, 0x0033}, vr::TM, "Content Time"},
    dictionary_entry{{0x0008, 0x0050}, vr::SH, "Accession Number"},
    dictionary_entry{{0x0008, 0x0060}, vr::CS, "Modality"},
    dictionary_entry{{0x0008, 0x0064}, vr::CS, "Conversion Type"},
    dictionary_entry{{0x0008, 0x0068}, vr::CS, "Presentation Intent Type"},
    dictionary_entry{{0x0008, 0x0070}, vr::LO, "Manufacturer"},
    dictionary_entry{{0x0008, 0x0080}, vr::LO, "Institution Name"},
    dictionary_entry{{0x0008, 0x0081}, vr::ST, "Institution Address"},
    dictionary_entry{{0x0008, 0x0090}, vr::PN, "Referring Physician's Name"},
    dictionary_entry{{0x0008, 0x0092}, vr::ST, "Referring Physician's Address"},
    dictionary_entry{{0x0008, 0x0094}, vr::SH, "Referring Physician's Telephone Numbers"},
    dictionary_entry{{0x0008, 0x1010}, vr::SH, "Station Name"},
    dictionary_entry{{0x0008, 0x1030}, vr::LO, "Study Description"},
    dictionary_entry{{0x0008, 0x103E}, vr::LO, "Series Description"},
    dictionary_entry{{0x0008, 0x1040}, vr::LO, "Institutional Department Name"},
    dictionary_entry{{0x0008, 0x1048}, vr::PN, "Physician(s) of Record"},
    dictionary_entry{{0x0008, 0x1050}, vr::PN, "Performing Physician's Name"},
    dictionary_entry{{0x0008, 0x1060}, vr::PN, "Name of Physician(s) Reading Study"},
    dictionary_entry{{0x0008, 0x1070}, vr::PN, "Operators' Name"},
    dictionary_entry{{0x0008, 0x1090}, vr::LO, "Manufacturer's Model Name"},
    dictionary_entry{{0x0008, 0x1110}, vr::SQ, "Referenced Study Sequence"},
    dictionary_entry{{0x0008, 0x1140}, vr::SQ, "Referenced Image Sequence"},
    dictionary_entry{{0x0008, 0x1150}, vr::UI, "Referenced SOP Class UID"},
    dictionary_entry{{0x0008, 0x1155}, vr::UI, "Referenced SOP Instance UID"},
    dictionary_entry{{0x0008, 0x2111}, vr::ST, "Derivation Description"},
    dictionary_entry{{0x0008, 0x2218}, vr::SQ, "Anatomic Region Sequence"},
    dictionary_entry{{0x0010, 0x0010}, vr::PN, "Patient's Name"},
    dictionary_entry{{0x0010, 0x0020}, vr::LO, "Patient ID"},
    dictionary_entry{{0x0010, 0x0030}, vr::DA, "Patient's Birth Date"},
    dictionary_entry{{0x0010, 0x0040}, vr::CS, "Patient's Sex"},
    dictionary_entry{{0x0010, 0x1000}, vr::LO, "Other Patient IDs"},
    dictionary_entry{{0x0010, 0x1001}, vr::PN, "Other Patient Names"},
    dictionary_entry{{0x0010, 0x1010}, vr::AS, "Patient's Age"},
    dictionary_entry{{0x0010, 0x1020}, vr::DS, "Patient's Size"},
    dictionary_entry{{0x0010, 0x1030}, vr::DS, "Patient's Weight"},
    dictionary_entry{{0x0010, 0x1040}, vr::LO, "Patient's Address"},
    dictionary_entry{{0x0010, 0x2150}, vr::LO, "Country of Residence"},
    dictionary_entry{{0x0010, 0x2154}, vr::SH, "Patient's Telephone Numbers"},
    dictionary_entry{{0x0010, 0x2160}, vr::SH, "Ethnic Group"},
    dictionary_entry{{0x0010, 0x21B0}, vr::LT, "Additional Patient History"},
    dictionary_entry{{0x0010, 0x4000}, vr::LT, "Patient Comments"},
    dictionary_entry{{0x0018, 0x0015}, vr::CS, "Body Part Examined"},
    dictionary_entry{{0x0018, 0x0050}, vr::DS, "Slice Thickness"},
    dictionary_entry{{0x0018, 0x0060}, vr::DS, "KVP"},
    dictionary_entry{{0x0018, 0x0080}, vr::DS, "Repetition Time"},
    dictionary_entry{{0x0018, 0x0081}, vr::DS, "Echo Time"},
    dictionary_entry{{0x0018, 0x0088}, vr::DS, "Spacing Between Slices"},
    dictionary_entry{{0x0018, 0x1000}, vr::LO, "Device Serial Number"},
    dictionary_entry{{0x0018, 0x1016}, vr::LO, "Secondary Capture Device Manufacturer"},
    dictionary_entry{{0x0018, 0x1020}, vr::LO, "Software Versions"},
    dictionary_entry{{0x0018, 0x1030}, vr::LO, "Protocol Name"},
    dictionary_entry{{0x0018, 0x1164}, vr::DS, "Imager Pixel Spacing"},
    dictionary_entry{{0x0018, 0x1200}, vr::DA, "Date of Last Calibration"},
    dictionary_entry{{0x0018, 0x1201}, vr::TM, "Time of Last Calibration"},
    dictionary_entry{{0x0018, 0x5100}, vr::CS, "Patient Position"},
    dictionary_entry{{0x0018, 0x5101}, vr::CS, "View Position"},
    dictionary_entry{{0x0018, 0x6011}, vr::SQ, "Sequence of Ultrasound Regions"},
    dictionary_entry{{0x0018, 0x7004}, vr::CS, "Detector Type"},
    dictionary_entry{{0x0020, 0x000D}, vr::UI, "Study Instance UID"},
    dictionary_entry{{0x0020, 0x000E}, vr::UI, "Series Instance UID"},
    dictionary_entry{{0x0020, 0x0010}, vr::SH, "Study ID"},
    dictionary_entry{{0x0020, 0x0011}, vr::IS, "Series Number"},
    dictionary_entry{{0x0020, 0x0013}, vr::IS, "Instance Number"},
    dictionary_entry{{0x0020, 0x0020}, vr::CS, "Patient Orientation"},
    dictionary_entry{{0x0020, 0x0032}, vr::DS, "Image Position (Patient)"},
    dictionary_entry{{0x0020, 0x0037}, vr::DS, "Image Orientation (Patient)"},
    dictionary_entry{{0x0020, 0x0052}, vr::UI, "Frame of Reference UID"},
    dictionary_entry{{0x0020, 0x0060}, vr::CS, "Laterality"},
    dictionary_entry{{0x0020, 0x0062}, vr::CS, "Image Laterality"},
    dictionary_entry{{0x0020, 0x1040}, vr::LO, "Position Reference Indicator"},
    dictionary_entry{{0x0020, 0x4000}, vr::LT, "Image Comments"},
    dictionary_entry{{0x0028, 0x0002}, vr::US, "Samples per Pixel"},
    dictionary_entry{{0x0028, 0x0004}, vr::CS, "Photometric Interpretation"},
    dictionary_entry{{0x0028, 0x0010}, vr::US, "Rows"},
    dictionary_entry{{0x0028, 0x0011}, vr::US, "Columns"},
    dictionary_entry{{0x0028, 0x0030}, vr::DS, "Pixel Spacing"},
    dictionary_entry{{0x0028, 0x0100}, vr::US, "Bits Allocated"},
    dictionary_entry{{0x0028, 0x0101}, vr::US, "Bits Stored"},
    dictionary_entry{{0x0028, 0x0102}, vr::US, "High Bit"},
    dictionary_entry{{0x0028, 0x0103}, vr::US, "Pixel Representation"},
    dictionary_entry{{0x0028, 0x0301}, vr::CS, "Burned In Annotation"},
    dictionary_entry{{0x0028, 0x1050}, vr::DS, "Window Center"},
    dictionary_entry{{0x0028, 0x1051}, vr::DS, "Window Width"},
    dictionary_entry{{0x0032, 0x1060}, vr::LO, "Requested Procedure Description"},
    dictionary_entry{{0x0040, 0x0244}, vr::DA, "Performed Procedure Step Start Date"},
    dictionary_entry{{0x0040, 0x0254}, vr::LO, "Performed Procedure Step Description"},
    dictionary_entry{{0x0040, 0x0275}, vr::SQ, "Request Attributes Sequence"},
    dictionary_entry{{0x0040, 0x1001}, vr::SH, "Requested Procedure ID"},
    dictionary_entry{{0x0040, 0x2016}, vr::LO, "Placer Order Number / Imaging Service Request"},
    dictionary_entry{{0x0040, 0xA040}, vr::CS, "Value Type"},
    dictionary_entry{{0x0040, 0xA043}, vr::SQ, "Concept Name Code Sequence"},
    dictionary_entry{{0x0040, 0xA160}, vr::UT, "Text Value"},
    dictionary_entry{{0x0040, 0xA730}, vr::SQ, "Content Sequence"},
    dictionary_entry{{0x0054, 0x0016}, vr::SQ, "Radiopharmaceutical Information Sequence"},
    dictionary_entry{{0x0054, 0x1001}, vr::CS, "Units"},
    dictionary_entry{{0x7FE0, 0x0010}, vr::OW, "Pixel Data"},
};

}  // namespace

const dictionary_entry* dictionary_lookup(tag t) {
    auto it = std::lower_bound(entries.begin(), entries.end(), t,
                               [](const dictionary_entry& e, tag tt) { return e.t < tt; });
    if (it != entries.end() && it->t == t) return &*it;
    return nullptr;
}

vr implicit_vr_for(tag t) {
    if (const auto* e = dictionary_lookup(t)) return e->value_repr;
    return vr::UN;
}

std::string_view tag_name(tag t) {
    if (const auto* e = dictionary_lookup(t)) return e->name;
    return {};
}

}  // namespace midi::dicom
