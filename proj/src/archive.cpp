#include "orsti/archive.hpp"

#include <cstddef>
#include <fstream>
#include <iterator>
#include <stdexcept>
#include <utility>

namespace orsti {

namespace {

constexpr char kMagic[5] = {'O', 'R', 'S', 'T', 'I'};
constexpr std::uint8_t kVersion = 1;
constexpr std::uint8_t kWideFlag = 1;
constexpr std::uint64_t kNarrowMax = 0xffffffffull;

void put_u8(std::string& out, std::uint8_t v) {
  out.push_back(static_cast<char>(v));
}

void put_u32(std::string& out, std::uint32_t v) {
  for (int b = 0; b < 4; ++b)
    out.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
}

void put_u64(std::string& out, std::uint64_t v) {
  for (int b = 0; b < 8; ++b)
    out.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
}

void put_blob(std::string& out, const std::string& bytes) {
  put_u64(out, bytes.size());
  out += bytes;
}

template <class T>
void put_array(std::string& out, const std::vector<T>& vals, bool wide) {
  put_u64(out, vals.size());
  for (const T v : vals) {
    if (v < 0) throw std::invalid_argument("archive: negative value");
    const std::uint64_t u = static_cast<std::uint64_t>(v);
    if (wide)
      put_u64(out, u);
    else
      put_u32(out, static_cast<std::uint32_t>(u));
  }
}

template <class T>
bool over_narrow(const std::vector<T>& vals) {
  for (const T v : vals)
    if (v >= 0 && static_cast<std::uint64_t>(v) > kNarrowMax) return true;
  return false;
}

struct Cursor {
  const std::string& bytes;
  std::size_t at = 0;

  void need(std::size_t n) const {
    if (bytes.size() - at < n)
      throw std::invalid_argument("archive: truncated");
  }
  std::uint8_t u8() {
    need(1);
    return static_cast<std::uint8_t>(bytes[at++]);
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int b = 0; b < 4; ++b)
      v |= static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[at++]))
           << (8 * b);
    return v;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int b = 0; b < 8; ++b)
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[at++]))
           << (8 * b);
    return v;
  }
  std::string blob() {
    const std::uint64_t n = u64();
    need(n);
    std::string out = bytes.substr(at, n);
    at += n;
    return out;
  }
  std::uint64_t count_of(std::uint64_t entry_size) {
    const std::uint64_t n = u64();
    if (n > (bytes.size() - at) / entry_size)
      throw std::invalid_argument("archive: truncated");
    return n;
  }
  std::vector<index_t> narrow_array(bool wide) {
    const std::uint64_t n = count_of(wide ? 8 : 4);
    std::vector<index_t> out;
    out.reserve(n);
    for (std::uint64_t h = 0; h < n; ++h) {
      const std::uint64_t v = wide ? u64() : u32();
      if (v > 0x7fffffffull)
        throw std::invalid_argument("archive: value out of range");
      out.push_back(static_cast<index_t>(v));
    }
    return out;
  }
  std::vector<std::int64_t> wide_array(bool wide) {
    const std::uint64_t n = count_of(wide ? 8 : 4);
    std::vector<std::int64_t> out;
    out.reserve(n);
    for (std::uint64_t h = 0; h < n; ++h) {
      const std::uint64_t v = wide ? u64() : u32();
      if (v > 0x7fffffffffffffffull)
        throw std::invalid_argument("archive: value out of range");
      out.push_back(static_cast<std::int64_t>(v));
    }
    return out;
  }
};

}  // namespace

std::string encode_archive(const Archive& a) {
  const std::uint8_t kind = static_cast<std::uint8_t>(a.kind);
  if (kind < 1 || kind > 10)
    throw std::invalid_argument("archive: unknown kind");
  if (a.gap < 0) throw std::invalid_argument("archive: negative value");

  const bool wide = over_narrow(a.weight);
  std::string out;
  out.append(kMagic, 5);
  put_u8(out, kVersion);
  put_u8(out, kind);
  put_u8(out, wide ? kWideFlag : 0);

  switch (a.kind) {
    case ArchiveKind::sa:
      put_blob(out, a.text);
      put_array(out, a.sa, wide);
      break;
    case ArchiveKind::docs:
    case ArchiveKind::topk:
      put_u64(out, a.documents.size());
      for (const std::string& d : a.documents) put_blob(out, d);
      break;
    case ArchiveKind::one_error:
    case ArchiveKind::scq:
    case ArchiveKind::restricted:
      put_blob(out, a.text);
      break;
    case ArchiveKind::gap:
      put_u64(out, static_cast<std::uint64_t>(a.gap));
      put_blob(out, a.text);
      break;
    case ArchiveKind::lz:
      put_blob(out, a.text);
      put_u64(out, static_cast<std::uint64_t>(a.parse.source_length));
      put_u64(out, a.parse.phrases.size());
      for (const LzPhrase& ph : a.parse.phrases) {
        if (ph.f < 0 || ph.l < 0)
          throw std::invalid_argument("archive: negative value");
        put_u32(out, static_cast<std::uint32_t>(ph.f));
        put_u32(out, static_cast<std::uint32_t>(ph.l));
        put_u8(out, ph.has_c ? 1 : 0);
        put_u8(out, static_cast<std::uint8_t>(ph.c));
      }
      break;
    case ArchiveKind::wanc:
      put_array(out, a.parent, wide);
      put_array(out, a.weight, wide);
      break;
    case ArchiveKind::geo: {
      std::vector<index_t> xs, ys, labels;
      xs.reserve(a.points.size());
      ys.reserve(a.points.size());
      labels.reserve(a.points.size());
      for (const Point2& p : a.points) {
        xs.push_back(p.x);
        ys.push_back(p.y);
        labels.push_back(p.label);
      }
      put_array(out, xs, wide);
      put_array(out, ys, wide);
      put_array(out, labels, wide);
      break;
    }
  }
  return out;
}

Archive decode_archive(const std::string& bytes) {
  Cursor in{bytes};
  in.need(8);
  for (int b = 0; b < 5; ++b)
    if (bytes[b] != kMagic[b])
      throw std::invalid_argument("archive: bad magic");
  in.at = 5;
  if (in.u8() != kVersion)
    throw std::invalid_argument("archive: unsupported version");
  const std::uint8_t kind = in.u8();
  if (kind < 1 || kind > 10)
    throw std::invalid_argument("archive: unknown kind");
  const std::uint8_t flags = in.u8();
  if (flags & ~kWideFlag)
    throw std::invalid_argument("archive: unknown flags");
  const bool wide = flags & kWideFlag;

  Archive a;
  a.kind = static_cast<ArchiveKind>(kind);
  switch (a.kind) {
    case ArchiveKind::sa:
      a.text = in.blob();
      a.sa = in.narrow_array(wide);
      break;
    case ArchiveKind::docs:
    case ArchiveKind::topk: {
      const std::uint64_t count = in.count_of(8);
      a.documents.reserve(count);
      for (std::uint64_t h = 0; h < count; ++h)
        a.documents.push_back(in.blob());
      break;
    }
    case ArchiveKind::one_error:
    case ArchiveKind::scq:
    case ArchiveKind::restricted:
      a.text = in.blob();
      break;
    case ArchiveKind::gap: {
      const std::uint64_t gap = in.u64();
      if (gap > 0x7fffffffull)
        throw std::invalid_argument("archive: value out of range");
      a.gap = static_cast<std::int64_t>(gap);
      a.text = in.blob();
      break;
    }
    case ArchiveKind::lz: {
      a.text = in.blob();
      const std::uint64_t source = in.u64();
      if (source > 0x7fffffffull)
        throw std::invalid_argument("archive: value out of range");
      a.parse.source_length = static_cast<index_t>(source);
      const std::uint64_t count = in.count_of(10);
      a.parse.phrases.reserve(count);
      for (std::uint64_t h = 0; h < count; ++h) {
        LzPhrase ph;
        ph.f = static_cast<index_t>(in.u32());
        ph.l = static_cast<index_t>(in.u32());
        ph.has_c = in.u8() != 0;
        ph.c = static_cast<char>(in.u8());
        a.parse.phrases.push_back(ph);
      }
      break;
    }
    case ArchiveKind::wanc:
      a.parent = in.narrow_array(wide);
      a.weight = in.wide_array(wide);
      break;
    case ArchiveKind::geo: {
      const std::vector<index_t> xs = in.narrow_array(wide);
      const std::vector<index_t> ys = in.narrow_array(wide);
      const std::vector<index_t> labels = in.narrow_array(wide);
      if (xs.size() != ys.size() || xs.size() != labels.size())
        throw std::invalid_argument("archive: point arrays disagree");
      a.points.reserve(xs.size());
      for (std::size_t h = 0; h < xs.size(); ++h)
        a.points.push_back({xs[h], ys[h], labels[h]});
      break;
    }
  }
  if (in.at != bytes.size())
    throw std::invalid_argument("archive: trailing bytes");
  return a;
}

void save_archive(const Archive& a, const std::string& path) {
  const std::string bytes = encode_archive(a);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("archive: cannot write " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) throw std::runtime_error("archive: write failed for " + path);
}

Archive load_archive(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("archive: cannot read " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  if (in.bad()) throw std::runtime_error("archive: read failed for " + path);
  return decode_archive(bytes);
}

namespace {

void expect_kind(const Archive& a, ArchiveKind want) {
  if (a.kind != want) throw std::invalid_argument("archive: kind mismatch");
}

void check_suffix_array(const Archive& a, const SuffixIndex& idx) {
  const index_t n = idx.size();
  if (static_cast<index_t>(a.sa.size()) != n)
    throw std::invalid_argument("archive: suffix array mismatch");
  for (index_t h = 1; h <= n; ++h)
    if (a.sa[h - 1] != idx.sa()[h])
      throw std::invalid_argument("archive: suffix array mismatch");
}

std::vector<Text> archive_documents(const Archive& a) {
  std::vector<Text> docs;
  docs.reserve(a.documents.size());
  for (const std::string& d : a.documents) docs.emplace_back(d);
  return docs;
}

}  // namespace

SuffixIndex open_sa(const Archive& a) {
  expect_kind(a, ArchiveKind::sa);
  SuffixIndex idx{Text(a.text)};
  check_suffix_array(a, idx);
  return idx;
}

DocumentIndex open_docs(const Archive& a) {
  expect_kind(a, ArchiveKind::docs);
  return DocumentIndex(archive_documents(a));
}

TopKIndex open_topk(const Archive& a) {
  expect_kind(a, ArchiveKind::topk);
  return TopKIndex(archive_documents(a), {});
}

OneErrorIndex open_one_error(const Archive& a) {
  expect_kind(a, ArchiveKind::one_error);
  return OneErrorIndex{Text(a.text)};
}

Lz77Index open_lz(const Archive& a) {
  expect_kind(a, ArchiveKind::lz);
  Lz77Index idx{Text(a.text)};
  if (!(a.parse == idx.parse()))
    throw std::invalid_argument("archive: phrase records mismatch");
  return idx;
}

ScqIndex open_scq(const Archive& a) {
  expect_kind(a, ArchiveKind::scq);
  return ScqIndex{Text(a.text)};
}

RestrictedIndex open_restricted(const Archive& a) {
  expect_kind(a, ArchiveKind::restricted);
  return RestrictedIndex{Text(a.text)};
}

WeightedTree open_wanc(const Archive& a) {
  expect_kind(a, ArchiveKind::wanc);
  if (a.parent.size() != a.weight.size())
    throw std::invalid_argument("archive: tree arrays disagree");
  std::vector<index_t> parent(1, 0);
  parent.insert(parent.end(), a.parent.begin(), a.parent.end());
  std::vector<std::int64_t> weight(1, 0);
  weight.insert(weight.end(), a.weight.begin(), a.weight.end());
  return WeightedTree::build(parent, weight);
}

GapIndex open_gap(const Archive& a) {
  expect_kind(a, ArchiveKind::gap);
  return GapIndex(Text(a.text), static_cast<index_t>(a.gap));
}

GeoTextIndex open_geo(const Archive& a) {
  expect_kind(a, ArchiveKind::geo);
  return GeoTextIndex(a.points);
}

LocusIndex open_locus(const Archive& a) {
  expect_kind(a, ArchiveKind::sa);
  LocusIndex idx{Text(a.text)};
  check_suffix_array(a, idx.suffix_index());
  return idx;
}

}  // namespace orsti
