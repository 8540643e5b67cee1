#ifndef MIDI_DICOM_TAG_PATH_HPP
#define MIDI_DICOM_TAG_PATH_HPP

#include "midi/dicom/tag.hpp"

#include <optional>
#include <string>
#include <vector>

namespace midi::dicom {

/// One step of a nested-element address. Non-terminal segments descend into a
/// sequence and therefore carry a zero-based item index; the terminal segment
/// addresses a leaf (or sequence) element directly.
struct tag_path_segment {
    tag t;
    std::optional<uint32_t> item;

    bool operator==(const tag_path_segment&) const = default;
};

struct tag_path {
    std::vector<tag_path_segment> segments;

    tag_path() = default;
    explicit tag_path(tag t) : segments{{t, std::nullopt}} {}

    bool operator==(const tag_path&) const = default;

    bool empty() const { return segments.empty(); }
    const tag_path_segment& leaf() const { return segments.back(); }

    /// Appends a sequence traversal step.
    tag_path& into(tag t, uint32_t item);
    /// Appends the terminal step.
    tag_path& then(tag t);

    /// "(GGGG,EEEE)" for flat paths, "(GGGG,EEEE)[i]/(GGGG,EEEE)" nested.
    std::string to_string() const;

    /// Parses the rendering above. Returns nullopt on malformed syntax,
    /// an empty path, or item indices on the terminal segment.
    static std::optional<tag_path> parse(std::string_view s);
};

}  // namespace midi::dicom

#endif
