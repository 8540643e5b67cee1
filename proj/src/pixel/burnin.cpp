#include "midi/pixel/burnin.hpp"

#include "midi/dicom/error.hpp"
#include "midi/pixel/font.hpp"
#include "midi/util/rng.hpp"
#include "midi/util/text.hpp"
#include "midi/validation/tokenize.hpp"

#include "json.hpp"

#include <cmath>

namespace midi::pixel {

using dicom::pixel_buffer;
using dicom::pixel_error;

std::string burn_in_record::to_json() const {
    nlohmann::json j{{"text", text}, {"x", x},      {"y", y},
                     {"width", width}, {"height", height}, {"font_size", font_size}};
    return j.dump();
}

std::optional<burn_in_record> burn_in_record::from_json(const std::string& s) {
    auto j = nlohmann::json::parse(s, nullptr, /*allow_exceptions=*/false);
    if (!j.is_object() || !j.contains("text") || !j.contains("x")) return std::nullopt;
    burn_in_record r;
    r.text = j.value("text", "");
    r.x = j.value("x", 0u);
    r.y = j.value("y", 0u);
    r.width = j.value("width", 0u);
    r.height = j.value("height", 0u);
    r.font_size = j.value("font_size", 14u);
    return r;
}

std::string region_digest::to_json() const {
    nlohmann::json j{{"x", x}, {"y", y}, {"width", width}, {"height", height},
                     {"digest", util::format("%016llx", static_cast<unsigned long long>(digest))}};
    return j.dump();
}

std::optional<region_digest> region_digest::from_json(const std::string& s) {
    auto j = nlohmann::json::parse(s, nullptr, /*allow_exceptions=*/false);
    if (!j.is_object() || !j.contains("digest") || j.contains("text")) return std::nullopt;
    region_digest r;
    r.x = j.value("x", 0u);
    r.y = j.value("y", 0u);
    r.width = j.value("width", 0u);
    r.height = j.value("height", 0u);
    std::string hex = j.value("digest", "");
    if (hex.size() != 16) return std::nullopt;
    r.digest = std::strtoull(hex.c_str(), nullptr, 16);
    return r;
}

namespace {

uint32_t scale_for(uint32_t font_size) {
    uint32_t s = font_size / glyph_rows;
    return s == 0 ? 1 : s;
}

void check_box(const pixel_buffer& buf, uint32_t x, uint32_t y, uint32_t w, uint32_t h) {
    if (w == 0 || h == 0) {
        throw pixel_error("zero-area region");
    }
    if (x + w > buf.columns || y + h > buf.rows) {
        throw pixel_error(util::format("region (%u,%u %ux%u) out of bounds for %ux%u image",
                                       x, y, w, h, buf.columns, buf.rows));
    }
}

/// Renders text as a binary mask of exactly (extent_w x extent_h).
std::vector<uint8_t> render_mask(const std::string& text, uint32_t font_size,
                                 uint32_t& out_w, uint32_t& out_h) {
    auto extent = rendered_extent(text, font_size);
    if (!extent) {
        throw pixel_error("unsupported glyph in burn-in text: " + text);
    }
    out_w = extent->first;
    out_h = extent->second;
    std::vector<uint8_t> mask(static_cast<size_t>(out_w) * out_h, 0);
    uint32_t s = scale_for(font_size);
    uint32_t pen_x = 0;
    for (char c : text) {
        glyph g = *font_glyph(c);
        for (int gy = 0; gy < glyph_rows; ++gy) {
            for (int gx = 0; gx < glyph_cols; ++gx) {
                if (!(g.rows[static_cast<size_t>(gy)] & (1u << (glyph_cols - 1 - gx)))) continue;
                for (uint32_t sy = 0; sy < s; ++sy) {
                    for (uint32_t sx = 0; sx < s; ++sx) {
                        uint32_t px = pen_x + static_cast<uint32_t>(gx) * s + sx;
                        uint32_t py = static_cast<uint32_t>(gy) * s + sy;
                        mask[static_cast<size_t>(py) * out_w + px] = 1;
                    }
                }
            }
        }
        pen_x += static_cast<uint32_t>(glyph_advance) * s;
    }
    return mask;
}

}  // namespace

std::optional<std::pair<uint32_t, uint32_t>> rendered_extent(const std::string& text,
                                                             uint32_t font_size) {
    for (char c : text) {
        if (!font_glyph(c)) return std::nullopt;
    }
    uint32_t s = scale_for(font_size);
    if (text.empty()) return std::make_pair(0u, 0u);
    uint32_t w = static_cast<uint32_t>(text.size()) * glyph_advance * s - s;
    uint32_t h = glyph_rows * s;
    return std::make_pair(w, h);
}

pixel_buffer burn_text(pixel_buffer buf, const burn_in_record& rec) {
    if (rec.text.empty()) return buf;
    check_box(buf, rec.x, rec.y, rec.width, rec.height);

    uint32_t mask_w = 0;
    uint32_t mask_h = 0;
    auto mask = render_mask(rec.text, rec.font_size, mask_w, mask_h);
    if (mask_w > rec.width || mask_h > rec.height) {
        throw pixel_error(util::format("text overflow: rendered %ux%u exceeds box %ux%u",
                                       mask_w, mask_h, rec.width, rec.height));
    }

    uint16_t ink = buf.max_intensity();
    for (uint32_t my = 0; my < mask_h; ++my) {
        for (uint32_t mx = 0; mx < mask_w; ++mx) {
            if (mask[static_cast<size_t>(my) * mask_w + mx]) {
                buf.at(rec.y + my, rec.x + mx) = ink;
            }
        }
    }
    return buf;
}

double detect_text(const pixel_buffer& buf, const burn_in_record& rec) {
    check_box(buf, rec.x, rec.y, rec.width, rec.height);
    if (rec.text.empty()) return 0.0;

    uint32_t mask_w = 0;
    uint32_t mask_h = 0;
    auto mask = render_mask(rec.text, rec.font_size, mask_w, mask_h);
    uint32_t w = std::min(mask_w, rec.width);
    uint32_t h = std::min(mask_h, rec.height);
    if (w == 0 || h == 0) return 0.0;

    // Normalized cross-correlation between the region and the rendered
    // template over the template extent.
    double n = static_cast<double>(w) * h;
    double sum_r = 0, sum_t = 0;
    for (uint32_t yy = 0; yy < h; ++yy) {
        for (uint32_t xx = 0; xx < w; ++xx) {
            sum_r += buf.at(rec.y + yy, rec.x + xx);
            sum_t += mask[static_cast<size_t>(yy) * mask_w + xx];
        }
    }
    double mean_r = sum_r / n;
    double mean_t = sum_t / n;
    double num = 0, var_r = 0, var_t = 0;
    for (uint32_t yy = 0; yy < h; ++yy) {
        for (uint32_t xx = 0; xx < w; ++xx) {
            double dr = buf.at(rec.y + yy, rec.x + xx) - mean_r;
            double dt = mask[static_cast<size_t>(yy) * mask_w + xx] - mean_t;
            num += dr * dt;
            var_r += dr * dr;
            var_t += dt * dt;
        }
    }
    if (var_r <= 0.0 || var_t <= 0.0) return 0.0;
    double ncc = num / (std::sqrt(var_r) * std::sqrt(var_t));
    return std::clamp(ncc, 0.0, 1.0);
}

double ocr_adapter::score(const pixel_buffer& buf, const burn_in_record& rec) const {
    check_box(buf, rec.x, rec.y, rec.width, rec.height);
    auto recognized = fn_(buf, rec.x, rec.y, rec.width, rec.height);
    auto wanted = validation::tokenize(rec.text);
    for (const auto& tok : recognized) {
        for (const auto& want : wanted) {
            if (util::to_upper(tok) == want) return 1.0;
        }
    }
    return 0.0;
}

region_digest digest_region(const pixel_buffer& buf, uint32_t x, uint32_t y,
                            uint32_t w, uint32_t h) {
    check_box(buf, x, y, w, h);
    uint64_t hash = util::fnv1a64(&w, sizeof(w));
    hash = util::fnv1a64(&h, sizeof(h), hash);
    for (uint32_t yy = 0; yy < h; ++yy) {
        for (uint32_t xx = 0; xx < w; ++xx) {
            uint16_t v = buf.at(y + yy, x + xx);
            uint8_t le[2] = {static_cast<uint8_t>(v & 0xFF), static_cast<uint8_t>(v >> 8)};
            hash = util::fnv1a64(le, 2, hash);
        }
    }
    return region_digest{x, y, w, h, hash};
}

}  // namespace midi::pixel
