#ifndef MIDI_PIXEL_BURNIN_HPP
#define MIDI_PIXEL_BURNIN_HPP

#include "midi/dicom/pixel.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace midi::pixel {

/// Geometry and content of one burned-in text block, as recorded in the
/// answer key and sidecar files.
struct burn_in_record {
    std::string text;
    uint32_t x = 0;       // column offset of the bounding box
    uint32_t y = 0;       // row offset
    uint32_t width = 0;
    uint32_t height = 0;
    uint32_t font_size = 14;  // glyph height in pixels

    std::string to_json() const;
    static std::optional<burn_in_record> from_json(const std::string& s);
};

/// Content hash of a rectangular region that must remain untouched.
struct region_digest {
    uint32_t x = 0;
    uint32_t y = 0;
    uint32_t width = 0;
    uint32_t height = 0;
    uint64_t digest = 0;

    std::string to_json() const;
    static std::optional<region_digest> from_json(const std::string& s);
};

/// Pixel extent the record's text occupies when rendered. Returns nullopt if
/// any glyph is unsupported.
std::optional<std::pair<uint32_t, uint32_t>> rendered_extent(const std::string& text,
                                                             uint32_t font_size);

/// Renders the record's text at maximum intensity inside its bounding box.
/// Pixels outside the box (and non-glyph pixels inside it) are untouched.
/// Throws pixel_error on unsupported glyphs, text that does not fit the box,
/// or a box that leaves the image.
dicom::pixel_buffer burn_text(dicom::pixel_buffer buf, const burn_in_record& rec);

/// Default detector: re-renders rec.text at rec.font_size and scores the
/// region by normalized cross-correlation after per-region normalization.
/// Returns a score in [0,1]; a constant region scores 0. Throws pixel_error
/// when the geometry leaves the buffer.
double detect_text(const dicom::pixel_buffer& buf, const burn_in_record& rec);

inline constexpr double default_detection_threshold = 0.60;

/// Pluggable detector interface. The default is the correlation detector;
/// an OCR engine can be adapted by returning recognized tokens, in which case
/// "text present" means any answer-text token was recognized.
class text_detector {
public:
    virtual ~text_detector() = default;
    virtual double score(const dicom::pixel_buffer& buf, const burn_in_record& rec) const = 0;
};

class correlation_detector final : public text_detector {
public:
    double score(const dicom::pixel_buffer& buf, const burn_in_record& rec) const override {
        return detect_text(buf, rec);
    }
};

class ocr_adapter final : public text_detector {
public:
    /// Callback receives the buffer and region, returns recognized tokens.
    using recognize_fn = std::function<std::vector<std::string>(
        const dicom::pixel_buffer&, uint32_t x, uint32_t y, uint32_t w, uint32_t h)>;

    explicit ocr_adapter(recognize_fn fn) : fn_(std::move(fn)) {}
    double score(const dicom::pixel_buffer& buf, const burn_in_record& rec) const override;

private:
    recognize_fn fn_;
};

/// Stable 64-bit hash over the row-major samples of a region.
/// Throws pixel_error for out-of-bounds or zero-area regions.
region_digest digest_region(const dicom::pixel_buffer& buf, uint32_t x, uint32_t y,
                            uint32_t w, uint32_t h);

}  // namespace midi::pixel

#endif
