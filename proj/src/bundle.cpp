#include "tagix/bundle.hpp"

#include <fstream>
#include <iterator>

#include "tagix/error.hpp"

namespace tagix {
namespace {

class Writer {
 public:
  void u8(std::uint8_t v) { out_.push_back(static_cast<char>(v)); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void i64(std::int64_t v) { u64(static_cast<std::uint64_t>(v)); }
  void bytes(std::string_view s) { out_.append(s); }
  void str(std::string_view s) {
    u32(static_cast<std::uint32_t>(s.size()));
    bytes(s);
  }
  std::string take() { return std::move(out_); }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view data, std::string context) : data_(data), context_(std::move(context)) {}

  std::uint8_t u8() {
    need(1);
    return static_cast<std::uint8_t>(data_[pos_++]);
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<std::uint8_t>(data_[pos_++])) << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(data_[pos_++])) << (8 * i);
    return v;
  }
  std::int64_t i64() { return static_cast<std::int64_t>(u64()); }
  std::string_view bytes(std::uint64_t len) {
    need(len);
    const auto out = data_.substr(pos_, len);
    pos_ += len;
    return out;
  }
  std::string str() { return std::string(bytes(u32())); }
  bool done() const { return pos_ == data_.size(); }
  void expect_done() const {
    if (!done()) throw FormatError(context_ + ": trailing bytes");
  }

 private:
  void need(std::uint64_t len) const {
    if (len > data_.size() - pos_) throw FormatError(context_ + ": truncated");
  }

  std::string_view data_;
  std::size_t pos_ = 0;
  std::string context_;
};

void put_u32s(Writer& w, const std::vector<std::uint32_t>& v) {
  for (const auto x : v) w.u32(x);
}

std::vector<std::uint32_t> get_u32s(Reader& r, std::size_t n) {
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = r.u32();
  r.expect_done();
  return v;
}

void put_strings(Writer& w, const std::vector<std::string>& v) {
  w.u64(v.size());
  for (const auto& s : v) w.str(s);
}

std::vector<std::string> get_strings(Reader& r) {
  const std::uint64_t count = r.u64();
  std::vector<std::string> v;
  for (std::uint64_t i = 0; i < count; ++i) v.push_back(r.str());
  r.expect_done();
  return v;
}

}  // namespace

IndexBundle build_bundle(Corpus corpus, const std::vector<TagScheme>& schemes) {
  IndexBundle b{std::move(corpus), {}, {}, {}};
  b.index = SuffixIndex::build(b.corpus);
  for (const auto& scheme : schemes) {
    const std::string name(scheme_name(scheme.kind));
    const auto tags = assign_tags(b.corpus, scheme, &b.index);
    b.tag_arrays.insert_or_assign(name, RunLengthTagArray::encode(to_bwt_order(b.index, tags).values));
    if (scheme.kind == SchemeKind::kLabel) {
      b.tag_codes.insert_or_assign(name, label_codes(b.corpus.labels()).names);
    } else if (scheme.kind == SchemeKind::kLeafRank) {
      b.tag_codes.insert_or_assign(name, b.corpus.tree().leaves_in_order());
    }
  }
  return b;
}

std::string serialize_bundle(const IndexBundle& bundle) {
  const Corpus& c = bundle.corpus;
  std::vector<std::pair<std::string, std::string>> sections;
  auto add = [&](std::string name, auto&& fill) {
    Writer w;
    fill(w);
    sections.emplace_back(std::move(name), w.take());
  };

  add("META", [&](Writer& w) {
    w.u64(c.size());
    w.u64(c.doc_count());
    w.u8(static_cast<std::uint8_t>(c.sentinels().separator));
    w.u8(static_cast<std::uint8_t>(c.sentinels().terminator));
    w.u64(c.alignment_width());
  });
  add("TEXT", [&](Writer& w) { w.bytes(c.text()); });
  add("DOCS", [&](Writer& w) {
    for (const auto s : c.doc_starts()) w.u64(s);
  });
  add("NAMES", [&](Writer& w) { put_strings(w, c.doc_names()); });
  if (c.has_columns()) add("COLUMNS", [&](Writer& w) { put_u32s(w, c.column_of()); });
  if (c.has_labels()) add("LABELS", [&](Writer& w) { put_strings(w, c.labels()); });
  if (c.has_tree()) add("TREE", [&](Writer& w) { w.bytes(c.tree().to_newick()); });
  add("SA", [&](Writer& w) { put_u32s(w, bundle.index.sa()); });
  add("LCP", [&](Writer& w) { put_u32s(w, bundle.index.lcp()); });
  add("DA", [&](Writer& w) { put_u32s(w, bundle.index.da()); });
  for (const auto& [name, rle] : bundle.tag_arrays) {
    add("TAG:" + name, [&](Writer& w) {
      w.u64(rle.run_count());
      for (const auto& run : rle.runs()) {
        w.i64(run.value);
        w.u32(run.length);
      }
    });
  }
  for (const auto& [name, codes] : bundle.tag_codes) {
    add("CODES:" + name, [&](Writer& w) { put_strings(w, codes); });
  }

  Writer out;
  out.bytes(kBundleMagic);
  out.u8(kBundleVersion);
  out.u32(static_cast<std::uint32_t>(sections.size()));
  for (const auto& [name, payload] : sections) {
    out.str(name);
    out.u64(payload.size());
    out.bytes(payload);
  }
  return out.take();
}

IndexBundle deserialize_bundle(std::string_view bytes) {
  Reader r(bytes, "bundle");
  if (r.bytes(kBundleMagic.size()) != kBundleMagic) throw FormatError("bundle: bad magic");
  if (const auto v = r.u8(); v != kBundleVersion) {
    throw FormatError("bundle: unsupported version " + std::to_string(v));
  }
  const std::uint32_t count = r.u32();
  std::map<std::string, std::string_view> sections;
  for (std::uint32_t i = 0; i < count; ++i) {
    const std::string name = r.str();
    const auto payload = r.bytes(r.u64());
    if (!sections.emplace(name, payload).second) throw FormatError("bundle: duplicate section " + name);
  }
  r.expect_done();

  auto section = [&](const std::string& name) -> std::string_view {
    const auto it = sections.find(name);
    if (it == sections.end()) throw FormatError("bundle: missing section " + name);
    return it->second;
  };

  Reader meta(section("META"), "META");
  const std::uint64_t n = meta.u64();
  const std::uint64_t docs = meta.u64();
  SentinelConfig sentinels{static_cast<char>(meta.u8()), static_cast<char>(meta.u8())};
  const std::uint64_t width = meta.u64();
  meta.expect_done();

  std::string text(section("TEXT"));
  if (text.size() != n) throw FormatError("bundle: TEXT length disagrees with META");
  Reader doc_reader(section("DOCS"), "DOCS");
  std::vector<std::size_t> starts(docs);
  for (auto& s : starts) s = doc_reader.u64();
  doc_reader.expect_done();
  Reader names_reader(section("NAMES"), "NAMES");
  auto names = get_strings(names_reader);

  std::optional<std::vector<std::uint32_t>> columns;
  if (sections.count("COLUMNS")) {
    Reader cr(section("COLUMNS"), "COLUMNS");
    columns = get_u32s(cr, n);
  }
  IndexBundle b{Corpus::from_parts(std::move(text), std::move(starts), std::move(names), sentinels,
                                   std::move(columns), width),
                {}, {}, {}};
  if (sections.count("LABELS")) {
    Reader lr(section("LABELS"), "LABELS");
    b.corpus.set_labels(get_strings(lr));
  }
  if (sections.count("TREE")) b.corpus.set_tree(PhyloTree::parse_newick(section("TREE")));

  Reader sa_reader(section("SA"), "SA");
  Reader lcp_reader(section("LCP"), "LCP");
  auto sa = get_u32s(sa_reader, n);
  auto lcp = get_u32s(lcp_reader, n);
  const auto da_bytes = section("DA");
  Reader da_reader(da_bytes, "DA");
  auto da = get_u32s(da_reader, da_bytes.size() / 4);
  b.index = SuffixIndex::from_arrays(b.corpus.text(), std::move(sa), std::move(lcp), std::move(da));

  for (const auto& [name, payload] : sections) {
    if (name.rfind("TAG:", 0) == 0) {
      Reader tr(payload, name);
      const std::uint64_t runs = tr.u64();
      std::vector<Run> list;
      for (std::uint64_t i = 0; i < runs; ++i) {
        const Tag value = tr.i64();
        list.push_back(Run{value, tr.u32()});
      }
      tr.expect_done();
      auto rle = RunLengthTagArray::from_runs(std::move(list));
      if (rle.size() != n) throw IntegrityError("bundle: " + name + " length disagrees with text length");
      b.tag_arrays.emplace(name.substr(4), std::move(rle));
    } else if (name.rfind("CODES:", 0) == 0) {
      Reader cr(payload, name);
      b.tag_codes.emplace(name.substr(6), get_strings(cr));
    } else if (name != "META" && name != "TEXT" && name != "DOCS" && name != "NAMES" && name != "COLUMNS" &&
               name != "LABELS" && name != "TREE" && name != "SA" && name != "LCP" && name != "DA") {
      throw FormatError("bundle: unknown section " + name);
    }
  }
  return b;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void save_bundle(const IndexBundle& bundle, const std::filesystem::path& path) {
  const std::string bytes = serialize_bundle(bundle);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

IndexBundle load_bundle(const std::filesystem::path& path) { return deserialize_bundle(read_file(path)); }

}  // namespace tagix
