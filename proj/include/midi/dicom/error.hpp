#ifndef MIDI_DICOM_ERROR_HPP
#define MIDI_DICOM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace midi::dicom {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct serialize_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct path_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct pixel_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace midi::dicom

#endif
