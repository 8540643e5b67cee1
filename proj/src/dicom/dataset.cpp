#include "midi/dicom/dataset.hpp"

#include "midi/dicom/error.hpp"

#include <algorithm>

namespace midi::dicom {

namespace {

auto lower_bound_tag(std::vector<data_element>& v, tag t) {
    return std::lower_bound(v.begin(), v.end(), t, [](const data_element& el, tag tt) {
        return el.element_tag() < tt;
    });
}

auto lower_bound_tag(const std::vector<data_element>& v, tag t) {
    return std::lower_bound(v.begin(), v.end(), t, [](const data_element& el, tag tt) {
        return el.element_tag() < tt;
    });
}

}  // namespace

const data_element* data_set::find(tag t) const {
    auto it = lower_bound_tag(elements_, t);
    if (it != elements_.end() && it->element_tag() == t) return &*it;
    return nullptr;
}

data_element* data_set::find(tag t) {
    auto it = lower_bound_tag(elements_, t);
    if (it != elements_.end() && it->element_tag() == t) return &*it;
    return nullptr;
}

void data_set::put(data_element el) {
    auto it = lower_bound_tag(elements_, el.element_tag());
    if (it != elements_.end() && it->element_tag() == el.element_tag()) {
        *it = std::move(el);
    } else {
        elements_.insert(it, std::move(el));
    }
}

void data_set::put_text(tag t, vr v, std::string_view value) {
    put(data_element::text(t, v, value));
}

void data_set::erase(tag t) {
    auto it = lower_bound_tag(elements_, t);
    if (it != elements_.end() && it->element_tag() == t) {
        elements_.erase(it);
    }
}

std::string data_set::text_of(tag t) const {
    const data_element* el = find(t);
    return el ? el->as_text() : std::string{};
}

const data_element* get_element(const data_set& ds, const tag_path& path) {
    const data_set* cur = &ds;
    for (size_t i = 0; i < path.segments.size(); ++i) {
        const auto& seg = path.segments[i];
        const data_element* el = cur->find(seg.t);
        if (!el) return nullptr;
        if (i + 1 == path.segments.size()) return el;
        if (!el->is_sequence() || !seg.item || *seg.item >= el->items().size()) {
            return nullptr;
        }
        cur = &el->items()[*seg.item];
    }
    return nullptr;
}

data_element* get_element(data_set& ds, const tag_path& path) {
    return const_cast<data_element*>(
        get_element(static_cast<const data_set&>(ds), path));
}

void set_element(data_set& ds, const tag_path& path, data_element el,
                 bool create_intermediate) {
    if (path.empty()) throw path_error("set_element: empty path");
    data_set* cur = &ds;
    for (size_t i = 0; i + 1 < path.segments.size(); ++i) {
        const auto& seg = path.segments[i];
        if (!seg.item) throw path_error("set_element: non-terminal segment without item index");
        data_element* seq = cur->find(seg.t);
        if (!seq) {
            if (!create_intermediate) {
                throw path_error("set_element: missing sequence " + seg.t.to_string());
            }
            cur->put(data_element::sequence(seg.t, {}));
            seq = cur->find(seg.t);
        }
        if (!seq->is_sequence()) {
            throw path_error("set_element: " + seg.t.to_string() + " is not a sequence");
        }
        if (*seg.item >= seq->items().size()) {
            if (!create_intermediate) {
                throw path_error("set_element: item index out of range at " + seg.t.to_string());
            }
            seq->items().resize(*seg.item + 1);
        }
        cur = &seq->items()[*seg.item];
    }
    cur->put(std::move(el));
}

void remove_element(data_set& ds, const tag_path& path) {
    if (path.empty()) return;
    data_set* cur = &ds;
    for (size_t i = 0; i + 1 < path.segments.size(); ++i) {
        const auto& seg = path.segments[i];
        data_element* seq = cur->find(seg.t);
        if (!seq || !seq->is_sequence() || !seg.item || *seg.item >= seq->items().size()) {
            return;
        }
        cur = &seq->items()[*seg.item];
    }
    cur->erase(path.leaf().t);
}

namespace {

void walk_impl(const data_set& ds, tag_path& prefix,
               const std::function<void(const tag_path&, const data_element&)>& fn) {
    for (const auto& el : ds) {
        prefix.then(el.element_tag());
        fn(prefix, el);
        prefix.segments.pop_back();
        if (el.is_sequence()) {
            for (uint32_t i = 0; i < el.items().size(); ++i) {
                prefix.into(el.element_tag(), i);
                walk_impl(el.items()[i], prefix, fn);
                prefix.segments.pop_back();
            }
        }
    }
}

}  // namespace

void walk_elements(const data_set& ds,
                   const std::function<void(const tag_path&, const data_element&)>& fn) {
    tag_path prefix;
    walk_impl(ds, prefix, fn);
}

std::vector<std::pair<tag_path, const data_element*>> list_elements(const data_set& ds) {
    std::vector<std::pair<tag_path, const data_element*>> out;
    walk_elements(ds, [&](const tag_path& p, const data_element& el) {
        out.emplace_back(p, &el);
    });
    return out;
}

}  // namespace midi::dicom
