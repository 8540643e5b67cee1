#ifndef MIDI_DICOM_DATASET_HPP
#define MIDI_DICOM_DATASET_HPP

#include "midi/dicom/element.hpp"
#include "midi/dicom/tag_path.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace midi::dicom {

/// Tag-ordered element collection. No duplicate tags at one level; insertion
/// keeps the (group, element) ordering invariant.
class data_set {
public:
    using const_iterator = std::vector<data_element>::const_iterator;

    bool empty() const { return elements_.empty(); }
    size_t size() const { return elements_.size(); }
    const_iterator begin() const { return elements_.begin(); }
    const_iterator end() const { return elements_.end(); }

    /// Flat lookup at this level.
    const data_element* find(tag t) const;
    data_element* find(tag t);
    bool contains(tag t) const { return find(t) != nullptr; }

    /// Inserts or replaces; ordering preserved.
    void put(data_element el);
    void put_text(tag t, vr v, std::string_view value);

    /// Removes at this level. No-op when absent.
    void erase(tag t);

    /// Convenience: text of a flat element, empty string when absent.
    std::string text_of(tag t) const;

private:
    std::vector<data_element> elements_;
};

/// Resolves a nested path. Never creates elements; absence is a null result.
const data_element* get_element(const data_set& ds, const tag_path& path);
data_element* get_element(data_set& ds, const tag_path& path);

/// Places `el` at `path`. Non-terminal segments must resolve to existing
/// sequence items unless `create_intermediate` is set, in which case missing
/// sequences/items are created (items are appended up to the needed index).
/// Throws path_error when unresolvable.
void set_element(data_set& ds, const tag_path& path, data_element el,
                 bool create_intermediate = false);

/// Removes the element at `path` (entire subtree for sequences). Idempotent.
void remove_element(data_set& ds, const tag_path& path);

/// Depth-first, tag-ordered traversal. Sequence elements are visited before
/// their contents; the callback receives the full path of every element.
void walk_elements(const data_set& ds,
                   const std::function<void(const tag_path&, const data_element&)>& fn);

/// walk_elements variant collecting into a vector.
std::vector<std::pair<tag_path, const data_element*>> list_elements(const data_set& ds);

}  // namespace midi::dicom

#endif
