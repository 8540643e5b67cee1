#include "doctest.h"

#include "midi/dicom/dataset.hpp"
#include "midi/dicom/dictionary.hpp"
#include "midi/dicom/error.hpp"
#include "midi/dicom/file.hpp"
#include "midi/dicom/pixel.hpp"
#include "midi/util/rng.hpp"

#include <cstring>

using namespace midi;
using namespace midi::dicom;

namespace {

void push_bytes(std::vector<uint8_t>& v, std::initializer_list<uint8_t> b) {
    v.insert(v.end(), b.begin(), b.end());
}

void push_text(std::vector<uint8_t>& v, const char* s) {
    v.insert(v.end(), s, s + std::strlen(s));
}

// Hand-assembled Part-10 file: minimal meta (transfer syntax only) and a
// single Patient's Name element. Kept independent of the serializer so it can
// vouch for it.
std::vector<uint8_t> hand_encoded_file() {
    std::vector<uint8_t> b(128, 0);
    push_text(b, "DICM");
    // (0002,0000) UL 4, value 28 = length of the one meta element below
    push_bytes(b, {0x02, 0x00, 0x00, 0x00, 'U', 'L', 0x04, 0x00, 0x1C, 0x00, 0x00, 0x00});
    // (0002,0010) UI 20 "1.2.840.10008.1.2.1" + NUL pad
    push_bytes(b, {0x02, 0x00, 0x10, 0x00, 'U', 'I', 0x14, 0x00});
    push_text(b, "1.2.840.10008.1.2.1");
    b.push_back(0x00);
    // (0010,0010) PN 12 "SANCHEZ^TIM " (space padded)
    push_bytes(b, {0x10, 0x00, 0x10, 0x00, 'P', 'N', 0x0C, 0x00});
    push_text(b, "SANCHEZ^TIM ");
    return b;
}

tag_path path_of(const char* s) {
    auto p = tag_path::parse(s);
    REQUIRE(p.has_value());
    return *p;
}

}  // namespace

TEST_CASE("tag renders canonically and classifies private groups") {
    CHECK(tag{0x0010, 0x0010}.to_string() == "(0010,0010)");
    CHECK(tag{0x7FE0, 0x0010}.to_string() == "(7FE0,0010)");
    CHECK(tag{0x0009, 0x0001}.is_private());
    CHECK_FALSE(tag{0x0010, 0x0010}.is_private());
    CHECK(tag::parse("(0008,0050)") == tag{0x0008, 0x0050});
    CHECK(tag::parse("(0008,0050") == std::nullopt);
    CHECK(tag::parse("0008,0050)") == std::nullopt);
}

TEST_CASE("tag_path parse/render round trip") {
    CHECK(path_of("(0010,0010)").to_string() == "(0010,0010)");
    CHECK(path_of("(0040,0275)[0]/(0008,0050)").to_string() == "(0040,0275)[0]/(0008,0050)");
    CHECK(tag_path::parse("") == std::nullopt);
    // Non-terminal segment must carry an item index; terminal must not.
    CHECK(tag_path::parse("(0040,0275)/(0008,0050)") == std::nullopt);
    CHECK(tag_path::parse("(0040,0275)[1]") == std::nullopt);
}

TEST_CASE("parse_file reads the hand-encoded patient name") {
    auto bytes = hand_encoded_file();
    dicom_file f = parse_file(bytes);
    const data_element* el = f.dataset.find(tags::patient_name);
    REQUIRE(el != nullptr);
    CHECK(el->value_repr() == vr::PN);
    CHECK(el->as_text() == "SANCHEZ^TIM");
    CHECK(f.transfer_syntax == uids::explicit_vr_le);
}

TEST_CASE("parse_file accepts an empty dataset after the preamble") {
    std::vector<uint8_t> b(128, 0);
    push_text(b, "DICM");
    push_bytes(b, {0x02, 0x00, 0x00, 0x00, 'U', 'L', 0x04, 0x00, 0x1C, 0x00, 0x00, 0x00});
    push_bytes(b, {0x02, 0x00, 0x10, 0x00, 'U', 'I', 0x14, 0x00});
    push_text(b, "1.2.840.10008.1.2.1");
    b.push_back(0x00);
    dicom_file f = parse_file(b);
    CHECK(f.dataset.empty());
}

TEST_CASE("parse_file rejects missing magic unless lenient") {
    std::vector<uint8_t> junk(200, 0x41);
    CHECK_THROWS_AS(parse_file(junk), parse_error);

    // Raw dataset, explicit VR LE, no preamble.
    std::vector<uint8_t> raw;
    push_bytes(raw, {0x10, 0x00, 0x10, 0x00, 'P', 'N', 0x0C, 0x00});
    push_text(raw, "SANCHEZ^TIM ");
    parse_options lenient;
    lenient.lenient_raw = true;
    dicom_file f = parse_file(raw, lenient);
    CHECK(f.dataset.text_of(tags::patient_name) == "SANCHEZ^TIM");
}

TEST_CASE("parse_file rejects unsupported transfer syntax") {
    std::vector<uint8_t> b(128, 0);
    push_text(b, "DICM");
    // (0002,0010) UI 20 "1.2.840.10008.1.2.2" (big endian, unsupported)
    push_bytes(b, {0x02, 0x00, 0x10, 0x00, 'U', 'I', 0x14, 0x00});
    push_text(b, "1.2.840.10008.1.2.2");
    b.push_back(0x00);
    CHECK_THROWS_WITH_AS(parse_file(b), doctest::Contains("unsupported transfer syntax"),
                         parse_error);
}

TEST_CASE("parse_file reports truncation") {
    auto bytes = hand_encoded_file();
    bytes.resize(bytes.size() - 5);
    CHECK_THROWS_AS(parse_file(bytes), parse_error);
}

TEST_CASE("serialize_file round-trips the hand-encoded bytes") {
    auto bytes = hand_encoded_file();
    dicom_file f = parse_file(bytes);
    CHECK(serialize_file(f) == bytes);
}

TEST_CASE("serialize_file writes zero-length short-VR element as 8 bytes") {
    dicom_file f;
    f.dataset.put_text(tags::patient_name, vr::PN, "");
    auto out = serialize_file(f);
    // Locate the dataset element after preamble + magic + meta.
    const uint8_t pattern[] = {0x10, 0x00, 0x10, 0x00, 'P', 'N', 0x00, 0x00};
    auto it = std::search(out.begin(), out.end(), std::begin(pattern), std::end(pattern));
    CHECK(it != out.end());
    CHECK(static_cast<size_t>(out.end() - it) == 8);  // nothing after the empty element
}

TEST_CASE("serialize_file is deterministic") {
    dicom_file f;
    f.dataset.put_text(tags::sop_class_uid, vr::UI, uids::ct_storage);
    f.dataset.put_text(tags::sop_instance_uid, vr::UI, "1.2.3.4");
    f.dataset.put_text(tags::patient_name, vr::PN, "TURNER^PAUL");
    CHECK(serialize_file(f) == serialize_file(f));
}

TEST_CASE("implicit VR little endian parsing uses the dictionary") {
    std::vector<uint8_t> b(128, 0);
    push_text(b, "DICM");
    push_bytes(b, {0x02, 0x00, 0x10, 0x00, 'U', 'I', 0x12, 0x00});
    push_text(b, "1.2.840.10008.1.2");
    b.push_back(0x00);
    // (0010,0010) implicit, 4-byte length
    push_bytes(b, {0x10, 0x00, 0x10, 0x00, 0x0C, 0x00, 0x00, 0x00});
    push_text(b, "SANCHEZ^TIM ");
    dicom_file f = parse_file(b);
    const data_element* el = f.dataset.find(tags::patient_name);
    REQUIRE(el != nullptr);
    CHECK(el->value_repr() == vr::PN);
    CHECK(el->as_text() == "SANCHEZ^TIM");
}

TEST_CASE("get_element resolves flat and nested paths") {
    data_set ds;
    ds.put_text(tags::accession_number, vr::SH, "20180805E673674");

    data_set item;
    item.put_text(tags::accession_number, vr::SH, "NESTED123");
    ds.put(data_element::sequence(tags::request_attributes_sequence, {item}));

    const data_element* flat = get_element(ds, path_of("(0008,0050)"));
    REQUIRE(flat != nullptr);
    CHECK(flat->as_text() == "20180805E673674");

    CHECK(get_element(ds, path_of("(0010,0010)")) == nullptr);

    const data_element* nested = get_element(ds, path_of("(0040,0275)[0]/(0008,0050)"));
    REQUIRE(nested != nullptr);
    CHECK(nested->as_text() == "NESTED123");

    CHECK(get_element(ds, path_of("(0040,0275)[1]/(0008,0050)")) == nullptr);
}

TEST_CASE("set_element then get_element returns the value") {
    data_set ds;
    set_element(ds, path_of("(0010,0030)"), data_element::text(tags::patient_birth_date, vr::DA, "19720701"));
    const data_element* el = get_element(ds, path_of("(0010,0030)"));
    REQUIRE(el != nullptr);
    CHECK(el->as_text() == "19720701");

    // Overwrite keeps a single element.
    set_element(ds, path_of("(0010,0030)"), data_element::text(tags::patient_birth_date, vr::DA, "19800101"));
    CHECK(ds.size() == 1);
    CHECK(ds.text_of(tags::patient_birth_date) == "19800101");
}

TEST_CASE("set_element inside a middle sequence item leaves siblings unchanged") {
    data_set ds;
    std::vector<data_set> items(3);
    for (int i = 0; i < 3; ++i) {
        items[i].put_text(tags::accession_number, vr::SH, "ORIG" + std::to_string(i));
    }
    ds.put(data_element::sequence(tags::request_attributes_sequence, items));

    set_element(ds, path_of("(0040,0275)[1]/(0008,0050)"),
                data_element::text(tags::accession_number, vr::SH, "CHANGED"));

    auto* seq = ds.find(tags::request_attributes_sequence);
    REQUIRE(seq != nullptr);
    CHECK(seq->items()[0].text_of(tags::accession_number) == "ORIG0");
    CHECK(seq->items()[1].text_of(tags::accession_number) == "CHANGED");
    CHECK(seq->items()[2].text_of(tags::accession_number) == "ORIG2");
}

TEST_CASE("set_element without create_intermediate rejects unresolvable paths") {
    data_set ds;
    CHECK_THROWS_AS(set_element(ds, path_of("(0040,0275)[0]/(0008,0050)"),
                                data_element::text(tags::accession_number, vr::SH, "X")),
                    path_error);
    set_element(ds, path_of("(0040,0275)[0]/(0008,0050)"),
                data_element::text(tags::accession_number, vr::SH, "X"),
                /*create_intermediate=*/true);
    CHECK(get_element(ds, path_of("(0040,0275)[0]/(0008,0050)")) != nullptr);
}

TEST_CASE("remove_element is idempotent and removes subtrees") {
    data_set ds;
    ds.put_text(tags::patient_name, vr::PN, "SANCHEZ^TIM");
    data_set item;
    item.put_text(tags::accession_number, vr::SH, "A");
    item.put_text(tags::study_description, vr::LO, "B");
    ds.put(data_element::sequence(tags::request_attributes_sequence, {item, item}));

    remove_element(ds, path_of("(0010,0010)"));
    CHECK(get_element(ds, path_of("(0010,0010)")) == nullptr);
    remove_element(ds, path_of("(0010,0010)"));  // no-op
    CHECK(ds.size() == 1);

    // Removing the sequence drops 1 SQ + 2 items x 2 leaves from the walk.
    size_t before = list_elements(ds).size();
    CHECK(before == 5);
    remove_element(ds, path_of("(0040,0275)"));
    CHECK(list_elements(ds).empty());
}

TEST_CASE("walk_elements visits flat elements in tag order") {
    data_set ds;
    // Insert in scrambled order; walk must come back sorted.
    ds.put_text(tags::patient_id, vr::LO, "1");
    ds.put_text(tags::sop_class_uid, vr::UI, "1.2");
    ds.put_text(tags::modality, vr::CS, "CT");
    ds.put_text(tags::patient_name, vr::PN, "X");
    ds.put_text(tags::accession_number, vr::SH, "A");
    ds.put_text(tags::study_date, vr::DA, "20180805");
    ds.put_text(tags::study_instance_uid, vr::UI, "1.3");
    ds.put_text(tags::series_instance_uid, vr::UI, "1.4");
    ds.put_text(tags::rows, vr::CS, "R");
    ds.put_text(tags::columns, vr::CS, "C");

    auto all = list_elements(ds);
    CHECK(all.size() == 10);
    for (size_t i = 1; i < all.size(); ++i) {
        CHECK(all[i - 1].second->element_tag() < all[i].second->element_tag());
    }
}

TEST_CASE("walk_elements counts sequences and leaves exactly once") {
    data_set ds;
    data_set item;
    item.put_text(tags::accession_number, vr::SH, "A");
    item.put_text(tags::study_description, vr::LO, "B");
    item.put_text(tags::series_description, vr::LO, "C");
    ds.put(data_element::sequence(tags::request_attributes_sequence, {item, item}));
    // 1 SQ entry + 2 items x 3 leaves = 7
    CHECK(list_elements(ds).size() == 7);

    data_set empty;
    CHECK(list_elements(empty).empty());
}

TEST_CASE("decode_pixels handles 8-bit and 16-bit data") {
    dicom_file f;
    pixel_buffer zeros;
    zeros.rows = 4;
    zeros.columns = 4;
    zeros.bits_allocated = 8;
    zeros.samples.assign(16, 0);
    encode_pixels(f, zeros);
    pixel_buffer got = decode_pixels(f);
    CHECK(got.samples == std::vector<uint16_t>(16, 0));

    // 2x3 16-bit ramp, hand-encoded little endian payload.
    dicom_file g;
    g.dataset.put(data_element::uint16(tags::rows, vr::US, 2));
    g.dataset.put(data_element::uint16(tags::columns, vr::US, 3));
    g.dataset.put(data_element::uint16(tags::bits_allocated, vr::US, 16));
    g.dataset.put(data_element::binary(
        tags::pixel_data, vr::OW,
        {0x00, 0x00, 0x01, 0x00, 0x02, 0x00, 0x03, 0x00, 0x04, 0x00, 0x05, 0x00}));
    pixel_buffer ramp = decode_pixels(g);
    CHECK(ramp.samples == std::vector<uint16_t>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("decode_pixels signals absent pixel module and geometry mismatch") {
    dicom_file f;
    CHECK_THROWS_WITH_AS(decode_pixels(f), doctest::Contains("absent pixel module"), pixel_error);

    dicom_file g;
    g.dataset.put(data_element::uint16(tags::rows, vr::US, 4));
    g.dataset.put(data_element::uint16(tags::columns, vr::US, 4));
    g.dataset.put(data_element::uint16(tags::bits_allocated, vr::US, 8));
    g.dataset.put(data_element::binary(tags::pixel_data, vr::OB, {1, 2, 3}));
    CHECK_THROWS_WITH_AS(decode_pixels(g), doctest::Contains("geometry mismatch"), pixel_error);
}

TEST_CASE("private elements survive parse/serialize byte-exactly") {
    dicom_file f;
    f.dataset.put_text(tags::sop_class_uid, vr::UI, uids::ct_storage);
    f.dataset.put_text(tags::sop_instance_uid, vr::UI, "1.2.3.4");
    f.dataset.put(data_element::binary(tag{0x0009, 0x0010}, vr::UN, {0xDE, 0xAD, 0xBE, 0xEF}));
    f.dataset.put_text(tag{0x0009, 0x1001}, vr::LO, "PRIVATE PAYLOAD");

    auto bytes = serialize_file(f);
    dicom_file back = parse_file(bytes);
    const data_element* p = back.dataset.find(tag{0x0009, 0x0010});
    REQUIRE(p != nullptr);
    CHECK(p->bytes() == std::vector<uint8_t>{0xDE, 0xAD, 0xBE, 0xEF});
    CHECK(serialize_file(back) == bytes);
}

TEST_CASE("property: randomized datasets round-trip byte-exactly") {
    util::rng_stream rng(20240809);
    const std::vector<std::string> words = {"ALPHA", "BRAVO", "CHARLIE^DELTA", "1.2.840.99",
                                            "20180805", "X", ""};

    for (int iter = 0; iter < 60; ++iter) {
        dicom_file f;
        f.dataset.put_text(tags::sop_class_uid, vr::UI, uids::mr_storage);
        f.dataset.put_text(tags::sop_instance_uid, vr::UI, "1.2.3." + std::to_string(iter));

        size_t n = 1 + rng.bounded(12);
        size_t inserted_leaves = 2;
        for (size_t i = 0; i < n; ++i) {
            tag t{static_cast<uint16_t>(0x0008 + 2 * rng.bounded(40)),
                  static_cast<uint16_t>(1 + rng.bounded(0x4000))};
            switch (rng.bounded(4)) {
                case 0:
                    f.dataset.put(data_element::text(t, vr::LO, rng.pick(words)));
                    break;
                case 1: {
                    std::vector<uint8_t> blob(rng.bounded(40) * 2, 0);
                    for (auto& b : blob) b = static_cast<uint8_t>(rng.bounded(256));
                    f.dataset.put(data_element::binary(t, vr::OB, std::move(blob)));
                    break;
                }
                case 2:
                    f.dataset.put(data_element::text(tag{0x0011, static_cast<uint16_t>(1 + rng.bounded(0xFF))},
                                                     vr::SH, rng.pick(words)));
                    break;
                default: {
                    data_set item;
                    item.put_text(tags::accession_number, vr::SH, rng.pick(words));
                    std::vector<data_set> items(1 + rng.bounded(3), item);
                    f.dataset.put(data_element::sequence(t, std::move(items)));
                }
            }
        }
        (void)inserted_leaves;

        auto bytes = serialize_file(f);
        dicom_file back = parse_file(bytes);
        auto bytes2 = serialize_file(back);
        REQUIRE(bytes == bytes2);
    }
}

TEST_CASE("dictionary answers names used in reports") {
    CHECK(tag_name(tags::patient_name) == "Patient's Name");
    CHECK(tag_name(tags::accession_number) == "Accession Number");
    CHECK(tag_name(tag{0x0009, 0x0001}).empty());
    CHECK(implicit_vr_for(tags::pixel_data) == vr::OW);
    CHECK(implicit_vr_for(tag{0x0009, 0x0001}) == vr::UN);
}
