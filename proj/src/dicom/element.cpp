#include "midi/dicom/element.hpp"

#include "midi/dicom/dataset.hpp"
#include "midi/util/text.hpp"

namespace midi::dicom {

data_element data_element::text(tag t, vr v, std::string_view value) {
    data_element el(t, v);
    el.set_text(value);
    return el;
}

data_element data_element::binary(tag t, vr v, std::vector<uint8_t> bytes) {
    data_element el(t, v);
    el.bytes_ = std::move(bytes);
    return el;
}

data_element data_element::sequence(tag t, std::vector<data_set> items) {
    data_element el(t, vr::SQ);
    el.items_ = std::move(items);
    return el;
}

data_element data_element::uint16(tag t, vr v, uint16_t value) {
    data_element el(t, v);
    el.bytes_ = {static_cast<uint8_t>(value & 0xFF), static_cast<uint8_t>(value >> 8)};
    return el;
}

bool data_element::empty_value() const {
    return is_sequence() ? items_.empty() : bytes_.empty();
}

std::string data_element::as_text() const {
    if (is_sequence() || !vr_is_text(vr_)) return {};
    std::string s(bytes_.begin(), bytes_.end());
    while (!s.empty() && (s.back() == '\0' || s.back() == ' ')) s.pop_back();
    return s;
}

std::vector<std::string> data_element::as_texts() const {
    std::string s = as_text();
    if (s.empty()) return {};
    return util::split(s, '\\');
}

std::optional<uint64_t> data_element::as_uint() const {
    switch (vr_) {
        case vr::US:
        case vr::SS:
            if (bytes_.size() < 2) return std::nullopt;
            return static_cast<uint64_t>(bytes_[0]) | (static_cast<uint64_t>(bytes_[1]) << 8);
        case vr::UL:
        case vr::SL:
            if (bytes_.size() < 4) return std::nullopt;
            return static_cast<uint64_t>(bytes_[0]) | (static_cast<uint64_t>(bytes_[1]) << 8) |
                   (static_cast<uint64_t>(bytes_[2]) << 16) | (static_cast<uint64_t>(bytes_[3]) << 24);
        case vr::IS: {
            auto t = as_text();
            if (t.empty()) return std::nullopt;
            try {
                return static_cast<uint64_t>(std::stoll(t));
            } catch (...) {
                return std::nullopt;
            }
        }
        default:
            return std::nullopt;
    }
}

void data_element::set_text(std::string_view value) {
    bytes_.assign(value.begin(), value.end());
    if (bytes_.size() % 2 != 0) {
        bytes_.push_back(static_cast<uint8_t>(vr_pad_char(vr_)));
    }
    items_.clear();
}

}  // namespace midi::dicom
