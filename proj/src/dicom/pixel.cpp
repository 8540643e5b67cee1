#include "midi/dicom/pixel.hpp"

#include "midi/dicom/error.hpp"

namespace midi::dicom {

uint16_t pixel_buffer::max_intensity() const {
    if (bits_allocated == 8) return 0xFF;
    return signed_samples ? 0x7FFF : 0xFFFF;
}

pixel_buffer decode_pixels(const dicom_file& file) {
    const data_element* pd = file.dataset.find(tags::pixel_data);
    if (!pd) {
        throw pixel_error("absent pixel module: no (7FE0,0010)");
    }
    auto rows = file.dataset.find(tags::rows);
    auto cols = file.dataset.find(tags::columns);
    auto bits = file.dataset.find(tags::bits_allocated);
    if (!rows || !cols || !bits) {
        throw pixel_error("absent pixel module: missing geometry attributes");
    }
    auto spp = file.dataset.find(tags::samples_per_pixel);
    if (spp && spp->as_uint().value_or(1) != 1) {
        throw pixel_error("unsupported samples per pixel");
    }

    pixel_buffer buf;
    buf.rows = static_cast<uint32_t>(rows->as_uint().value_or(0));
    buf.columns = static_cast<uint32_t>(cols->as_uint().value_or(0));
    buf.bits_allocated = static_cast<uint32_t>(bits->as_uint().value_or(0));
    if (buf.bits_allocated != 8 && buf.bits_allocated != 16) {
        throw pixel_error("unsupported bits allocated: " + std::to_string(buf.bits_allocated));
    }
    auto pr = file.dataset.find(tags::pixel_representation);
    buf.signed_samples = pr && pr->as_uint().value_or(0) == 1;

    const auto& raw = pd->bytes();
    size_t n = static_cast<size_t>(buf.rows) * buf.columns;
    size_t expected = n * (buf.bits_allocated / 8);
    // Even-length padding may add one trailing byte for 8-bit data.
    if (raw.size() != expected && raw.size() != expected + 1) {
        throw pixel_error("geometry mismatch: declared " + std::to_string(expected) +
                          " bytes, payload has " + std::to_string(raw.size()));
    }

    buf.samples.resize(n);
    if (buf.bits_allocated == 8) {
        for (size_t i = 0; i < n; ++i) buf.samples[i] = raw[i];
    } else {
        for (size_t i = 0; i < n; ++i) {
            buf.samples[i] = static_cast<uint16_t>(raw[2 * i] | (raw[2 * i + 1] << 8));
        }
    }
    return buf;
}

void encode_pixels(dicom_file& file, const pixel_buffer& buf) {
    size_t n = static_cast<size_t>(buf.rows) * buf.columns;
    if (buf.samples.size() != n) {
        throw pixel_error("buffer size does not match rows*columns");
    }
    std::vector<uint8_t> raw;
    if (buf.bits_allocated == 8) {
        raw.resize(n + (n % 2));
        for (size_t i = 0; i < n; ++i) raw[i] = static_cast<uint8_t>(buf.samples[i] & 0xFF);
    } else if (buf.bits_allocated == 16) {
        raw.resize(n * 2);
        for (size_t i = 0; i < n; ++i) {
            raw[2 * i] = static_cast<uint8_t>(buf.samples[i] & 0xFF);
            raw[2 * i + 1] = static_cast<uint8_t>(buf.samples[i] >> 8);
        }
    } else {
        throw pixel_error("unsupported bits allocated: " + std::to_string(buf.bits_allocated));
    }

    auto& ds = file.dataset;
    ds.put(data_element::uint16(tags::rows, vr::US, static_cast<uint16_t>(buf.rows)));
    ds.put(data_element::uint16(tags::columns, vr::US, static_cast<uint16_t>(buf.columns)));
    ds.put(data_element::uint16(tags::bits_allocated, vr::US,
                                static_cast<uint16_t>(buf.bits_allocated)));
    ds.put(data_element::uint16(tags::bits_stored, vr::US,
                                static_cast<uint16_t>(buf.bits_allocated)));
    ds.put(data_element::uint16(tags::high_bit, vr::US,
                                static_cast<uint16_t>(buf.bits_allocated - 1)));
    ds.put(data_element::uint16(tags::pixel_representation, vr::US,
                                buf.signed_samples ? 1 : 0));
    ds.put(data_element::uint16(tags::samples_per_pixel, vr::US, 1));
    ds.put(data_element::binary(tags::pixel_data,
                                buf.bits_allocated == 8 ? vr::OB : vr::OW, std::move(raw)));
}

}  // namespace midi::dicom
