#include "midi/dicom/file.hpp"

#include "midi/dicom/dictionary.hpp"
#include "midi/dicom/error.hpp"
#include "midi/util/csv.hpp"

#include <cstring>
#include <fstream>

namespace midi::dicom {

namespace {

constexpr uint32_t kUndefinedLength = 0xFFFFFFFFu;

class reader {
public:
    reader(std::span<const uint8_t> data, size_t pos, size_t end)
        : data_(data), pos_(pos), end_(end) {}

    size_t pos() const { return pos_; }
    size_t end() const { return end_; }
    bool at_end() const { return pos_ >= end_; }
    size_t remaining() const { return end_ - pos_; }

    uint16_t u16() {
        need(2);
        uint16_t v = static_cast<uint16_t>(data_[pos_] | (data_[pos_ + 1] << 8));
        pos_ += 2;
        return v;
    }

    uint32_t u32() {
        need(4);
        uint32_t v = static_cast<uint32_t>(data_[pos_]) |
                     (static_cast<uint32_t>(data_[pos_ + 1]) << 8) |
                     (static_cast<uint32_t>(data_[pos_ + 2]) << 16) |
                     (static_cast<uint32_t>(data_[pos_ + 3]) << 24);
        pos_ += 4;
        return v;
    }

    tag read_tag() {
        uint16_t g = u16();
        uint16_t e = u16();
        return tag{g, e};
    }

    tag peek_tag() {
        need(4);
        return tag{static_cast<uint16_t>(data_[pos_] | (data_[pos_ + 1] << 8)),
                   static_cast<uint16_t>(data_[pos_ + 2] | (data_[pos_ + 3] << 8))};
    }

    std::vector<uint8_t> take(size_t n) {
        need(n);
        std::vector<uint8_t> out(data_.begin() + static_cast<ptrdiff_t>(pos_),
                                 data_.begin() + static_cast<ptrdiff_t>(pos_ + n));
        pos_ += n;
        return out;
    }

    reader sub(size_t n) {
        need(n);
        reader r(data_, pos_, pos_ + n);
        pos_ += n;
        return r;
    }

private:
    void need(size_t n) {
        if (pos_ + n > end_) {
            throw parse_error("truncated element at offset " + std::to_string(pos_));
        }
    }

    std::span<const uint8_t> data_;
    size_t pos_;
    size_t end_;
};

class writer {
public:
    void u16(uint16_t v) {
        out_.push_back(static_cast<uint8_t>(v & 0xFF));
        out_.push_back(static_cast<uint8_t>(v >> 8));
    }
    void u32(uint32_t v) {
        out_.push_back(static_cast<uint8_t>(v & 0xFF));
        out_.push_back(static_cast<uint8_t>((v >> 8) & 0xFF));
        out_.push_back(static_cast<uint8_t>((v >> 16) & 0xFF));
        out_.push_back(static_cast<uint8_t>((v >> 24) & 0xFF));
    }
    void write_tag(tag t) {
        u16(t.group);
        u16(t.element);
    }
    void raw(const std::vector<uint8_t>& b) { out_.insert(out_.end(), b.begin(), b.end()); }
    void raw(const uint8_t* p, size_t n) { out_.insert(out_.end(), p, p + n); }

    std::vector<uint8_t> take() { return std::move(out_); }
    size_t size() const { return out_.size(); }

private:
    std::vector<uint8_t> out_;
};

data_set parse_dataset(reader& r, bool explicit_vr, bool stop_at_item_delim);

data_element parse_sequence_items(reader& r, tag t, vr v, uint32_t length, bool explicit_vr) {
    std::vector<data_set> items;
    if (length == kUndefinedLength) {
        while (true) {
            tag it = r.read_tag();
            if (it == tags::sequence_delimitation) {
                r.u32();  // zero length
                break;
            }
            if (it != tags::item) {
                throw parse_error("expected item tag inside sequence, got " + it.to_string());
            }
            uint32_t item_len = r.u32();
            if (item_len == kUndefinedLength) {
                items.push_back(parse_dataset(r, explicit_vr, /*stop_at_item_delim=*/true));
            } else {
                reader sub = r.sub(item_len);
                items.push_back(parse_dataset(sub, explicit_vr, false));
            }
        }
    } else {
        reader bound = r.sub(length);
        while (!bound.at_end()) {
            tag it = bound.read_tag();
            if (it != tags::item) {
                throw parse_error("expected item tag inside sequence, got " + it.to_string());
            }
            uint32_t item_len = bound.u32();
            if (item_len == kUndefinedLength) {
                items.push_back(parse_dataset(bound, explicit_vr, /*stop_at_item_delim=*/true));
            } else {
                reader sub = bound.sub(item_len);
                items.push_back(parse_dataset(sub, explicit_vr, false));
            }
        }
    }
    auto el = data_element::sequence(t, std::move(items));
    (void)v;
    return el;
}

data_set parse_dataset(reader& r, bool explicit_vr, bool stop_at_item_delim) {
    data_set ds;
    while (!r.at_end()) {
        tag t = r.read_tag();
        if (t == tags::item_delimitation) {
            r.u32();
            if (stop_at_item_delim) return ds;
            throw parse_error("unexpected item delimitation");
        }
        if (t == tags::sequence_delimitation) {
            throw parse_error("unexpected sequence delimitation");
        }

        if (!explicit_vr) {
            uint32_t length = r.u32();
            vr v = implicit_vr_for(t);
            if (length == kUndefinedLength || v == vr::SQ) {
                ds.put(parse_sequence_items(r, t, vr::SQ, length, explicit_vr));
            } else {
                ds.put(data_element::binary(t, v, r.take(length)));
            }
            continue;
        }

        char c0 = static_cast<char>(r.take(1)[0]);
        char c1 = static_cast<char>(r.take(1)[0]);
        auto v = vr_from_chars(c0, c1);
        if (!v) {
            throw parse_error("invalid VR bytes for " + t.to_string());
        }
        uint32_t length;
        if (vr_uses_long_length(*v)) {
            r.u16();  // reserved
            length = r.u32();
        } else {
            length = r.u16();
        }
        if (*v == vr::SQ) {
            ds.put(parse_sequence_items(r, t, *v, length, explicit_vr));
        } else if (length == kUndefinedLength) {
            if (*v == vr::UN) {
                // Undefined-length UN is encoded like an implicit-VR sequence.
                ds.put(parse_sequence_items(r, t, vr::SQ, length, /*explicit_vr=*/false));
            } else {
                throw parse_error("undefined length on non-sequence " + t.to_string() +
                                  " (encapsulated pixel data is not supported)");
            }
        } else {
            ds.put(data_element::binary(t, *v, r.take(length)));
        }
    }
    if (stop_at_item_delim) {
        throw parse_error("missing item delimitation");
    }
    return ds;
}

void serialize_dataset(const data_set& ds, writer& w);

void serialize_element(const data_element& el, writer& w) {
    w.write_tag(el.element_tag());
    vr v = el.value_repr();
    std::string_view vn = vr_name(v);
    w.raw(reinterpret_cast<const uint8_t*>(vn.data()), 2);

    if (el.is_sequence()) {
        writer body;
        for (const auto& item : el.items()) {
            writer item_body;
            serialize_dataset(item, item_body);
            body.write_tag(tags::item);
            body.u32(static_cast<uint32_t>(item_body.size()));
            auto bytes = item_body.take();
            body.raw(bytes);
        }
        w.u16(0);  // reserved
        auto bytes = body.take();
        w.u32(static_cast<uint32_t>(bytes.size()));
        w.raw(bytes);
        return;
    }

    const auto& bytes = el.bytes();
    if (vr_uses_long_length(v)) {
        w.u16(0);
        if (bytes.size() > 0xFFFFFFFEull) {
            throw serialize_error("value length overflow at " + el.element_tag().to_string());
        }
        w.u32(static_cast<uint32_t>(bytes.size()));
    } else {
        if (bytes.size() > 0xFFFF) {
            throw serialize_error("value length overflow at " + el.element_tag().to_string() +
                                  " (" + std::to_string(bytes.size()) + " bytes in short-form VR)");
        }
        w.u16(static_cast<uint16_t>(bytes.size()));
    }
    w.raw(bytes);
}

void serialize_dataset(const data_set& ds, writer& w) {
    for (const auto& el : ds) {
        serialize_element(el, w);
    }
}

data_set parse_file_meta(reader& r) {
    data_set meta;
    // Group 0002 is always explicit VR little endian. Read elements while the
    // next tag is in group 0002; the group length element, when present,
    // bounds the group but files in the wild occasionally get it wrong, so
    // tag peeking decides.
    while (!r.at_end()) {
        tag t = r.peek_tag();
        if (t.group != 0x0002) break;
        t = r.read_tag();
        char c0 = static_cast<char>(r.take(1)[0]);
        char c1 = static_cast<char>(r.take(1)[0]);
        auto v = vr_from_chars(c0, c1);
        if (!v) throw parse_error("invalid VR in file meta at " + t.to_string());
        uint32_t length;
        if (vr_uses_long_length(*v)) {
            r.u16();
            length = r.u32();
        } else {
            length = r.u16();
        }
        if (length == kUndefinedLength) {
            throw parse_error("undefined length in file meta");
        }
        meta.put(data_element::binary(t, *v, r.take(length)));
    }
    return meta;
}

}  // namespace

std::string dicom_file::sop_class_uid() const { return dataset.text_of(tags::sop_class_uid); }
std::string dicom_file::sop_instance_uid() const { return dataset.text_of(tags::sop_instance_uid); }
std::string dicom_file::study_uid() const { return dataset.text_of(tags::study_instance_uid); }
std::string dicom_file::series_uid() const { return dataset.text_of(tags::series_instance_uid); }
std::string dicom_file::patient_id() const { return dataset.text_of(tags::patient_id); }
std::string dicom_file::modality() const { return dataset.text_of(tags::modality); }

dicom_file parse_file(std::span<const uint8_t> bytes, const parse_options& opts) {
    dicom_file file;
    bool has_preamble = bytes.size() >= 132 && std::memcmp(bytes.data() + 128, "DICM", 4) == 0;

    if (!has_preamble) {
        if (!opts.lenient_raw) {
            throw parse_error("malformed preamble: missing DICM magic");
        }
        reader r(bytes, 0, bytes.size());
        file.dataset = parse_dataset(r, /*explicit_vr=*/true, false);
        file.transfer_syntax = uids::explicit_vr_le;
        return file;
    }

    reader r(bytes, 132, bytes.size());
    file.meta = parse_file_meta(r);
    file.transfer_syntax = file.meta.text_of(tags::transfer_syntax_uid);
    if (file.transfer_syntax.empty()) {
        file.transfer_syntax = uids::explicit_vr_le;
    }

    bool explicit_vr;
    if (file.transfer_syntax == uids::explicit_vr_le) {
        explicit_vr = true;
    } else if (file.transfer_syntax == uids::implicit_vr_le) {
        explicit_vr = false;
    } else {
        throw parse_error("unsupported transfer syntax: " + file.transfer_syntax);
    }

    file.dataset = parse_dataset(r, explicit_vr, false);
    return file;
}

dicom_file parse_file_at(const std::string& path, const parse_options& opts) {
    std::string content = util::read_file(path);
    auto* p = reinterpret_cast<const uint8_t*>(content.data());
    dicom_file f = parse_file(std::span<const uint8_t>(p, content.size()), opts);
    f.source_path = path;
    return f;
}

data_set make_file_meta(const data_set& dataset) {
    data_set meta;
    meta.put(data_element::binary(tags::file_meta_version, vr::OB, {0x00, 0x01}));
    meta.put_text(tags::media_storage_sop_class_uid, vr::UI, dataset.text_of(tags::sop_class_uid));
    meta.put_text(tags::media_storage_sop_instance_uid, vr::UI,
                  dataset.text_of(tags::sop_instance_uid));
    meta.put_text(tags::transfer_syntax_uid, vr::UI, uids::explicit_vr_le);
    meta.put_text(tags::implementation_class_uid, vr::UI, uids::implementation_class);
    meta.put_text(tags::implementation_version_name, vr::SH, uids::implementation_version);
    return meta;
}

std::vector<uint8_t> serialize_file(const dicom_file& file) {
    data_set meta = file.meta.empty() ? make_file_meta(file.dataset) : file.meta;
    meta.erase(tags::file_meta_group_length);
    meta.put_text(tags::transfer_syntax_uid, vr::UI, uids::explicit_vr_le);

    writer meta_body;
    serialize_dataset(meta, meta_body);
    auto meta_bytes = meta_body.take();

    writer w;
    std::vector<uint8_t> preamble(128, 0);
    w.raw(preamble);
    w.raw(reinterpret_cast<const uint8_t*>("DICM"), 4);

    // Group length covers everything after its own value field.
    w.write_tag(tags::file_meta_group_length);
    w.raw(reinterpret_cast<const uint8_t*>("UL"), 2);
    w.u16(4);
    w.u32(static_cast<uint32_t>(meta_bytes.size()));
    w.raw(meta_bytes);

    serialize_dataset(file.dataset, w);
    return w.take();
}

void write_file_at(const dicom_file& file, const std::string& path) {
    auto bytes = serialize_file(file);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw serialize_error("cannot write " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw serialize_error("short write " + path);
}

}  // namespace midi::dicom
