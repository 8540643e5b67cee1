#ifndef MIDI_DICOM_PIXEL_HPP
#define MIDI_DICOM_PIXEL_HPP

#include "midi/dicom/file.hpp"

#include <cstdint>
#include <vector>

namespace midi::dicom {

/// Decoded single-sample-per-pixel image. Samples are stored widened to
/// uint16_t regardless of bits allocated; every sample fits bits-allocated.
struct pixel_buffer {
    uint32_t rows = 0;
    uint32_t columns = 0;
    uint32_t bits_allocated = 8;  // 8 or 16
    bool signed_samples = false;
    std::vector<uint16_t> samples;  // row-major, rows * columns entries

    uint16_t at(uint32_t y, uint32_t x) const { return samples[y * columns + x]; }
    uint16_t& at(uint32_t y, uint32_t x) { return samples[y * columns + x]; }

    /// Largest representable intensity (0x7FFF for signed 16-bit).
    uint16_t max_intensity() const;
};

/// Reads Rows/Columns/BitsAllocated/PixelRepresentation and the pixel data
/// payload. Throws pixel_error on absent pixel module, compressed syntax,
/// or declared-size/data-length mismatch.
pixel_buffer decode_pixels(const dicom_file& file);

/// Writes the buffer back into (7FE0,0010) and updates the image pixel module
/// geometry attributes.
void encode_pixels(dicom_file& file, const pixel_buffer& buf);

}  // namespace midi::dicom

#endif
