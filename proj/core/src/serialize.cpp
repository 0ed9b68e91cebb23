#include "lsketch/serialize.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace lsketch {
namespace {

constexpr char kMagic[4] = {'L', 'S', 'K', '1'};
constexpr std::uint32_t kVersion = 1;

std::uint32_t id_bits(std::uint64_t n) {
  std::uint32_t b = 1;
  while ((std::uint64_t{1} << b) < n) ++b;
  return b;
}

std::uint32_t mult_bits(std::uint64_t budget) {
  std::uint32_t b = 0;
  while ((std::uint64_t{1} << b) < budget) ++b;
  return b + 1;
}

struct Writer {
  std::vector<std::uint8_t> bytes;
  void u8(std::uint8_t x) { bytes.push_back(x); }
  void u32(std::uint32_t x) {
    for (int i = 0; i < 4; ++i) bytes.push_back(static_cast<std::uint8_t>(x >> (8 * i)));
  }
  void u64(std::uint64_t x) {
    for (int i = 0; i < 8; ++i) bytes.push_back(static_cast<std::uint8_t>(x >> (8 * i)));
  }
  void i32(std::int32_t x) { u32(static_cast<std::uint32_t>(x)); }
  void f64(double x) { u64(std::bit_cast<std::uint64_t>(x)); }
};

struct Reader {
  const std::vector<std::uint8_t>& bytes;
  std::size_t pos = 0;
  void need(std::size_t k) const {
    if (pos + k > bytes.size()) throw std::runtime_error("sketch file truncated");
  }
  std::uint8_t u8() {
    need(1);
    return bytes[pos++];
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t x = 0;
    for (int i = 0; i < 4; ++i) x |= static_cast<std::uint32_t>(bytes[pos++]) << (8 * i);
    return x;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t x = 0;
    for (int i = 0; i < 8; ++i) x |= static_cast<std::uint64_t>(bytes[pos++]) << (8 * i);
    return x;
  }
  std::int32_t i32() { return static_cast<std::int32_t>(u32()); }
  double f64() { return std::bit_cast<double>(u64()); }
};

void put_edges(Writer& w, const std::vector<Edge>& edges) {
  w.u64(edges.size());
  for (const Edge& e : edges) {
    w.u32(e.u);
    w.u32(e.v);
    w.f64(e.w);
  }
}

std::vector<Edge> get_edges(Reader& r) {
  const std::uint64_t k = r.u64();
  std::vector<Edge> edges(k);
  for (Edge& e : edges) {
    e.u = r.u32();
    e.v = r.u32();
    e.w = r.f64();
  }
  return edges;
}

void put_graph(Writer& w, const WeightedGraph& g) {
  w.u64(g.n);
  put_edges(w, g.edges);
}

WeightedGraph get_graph(Reader& r) {
  WeightedGraph g;
  g.n = static_cast<std::uint32_t>(r.u64());
  g.edges = get_edges(r);
  return g;
}

void put_arcs(Writer& w, const std::vector<Arc>& arcs) {
  w.u64(arcs.size());
  for (const Arc& a : arcs) {
    w.u32(a.tail);
    w.u32(a.head);
    w.f64(a.w);
  }
}

std::vector<Arc> get_arcs(Reader& r) {
  const std::uint64_t k = r.u64();
  std::vector<Arc> arcs(k);
  for (Arc& a : arcs) {
    a.tail = r.u32();
    a.head = r.u32();
    a.w = r.f64();
  }
  return arcs;
}

void put_records(Writer& w, const std::vector<SampleRecord>& recs) {
  w.u32(static_cast<std::uint32_t>(recs.size()));
  for (const SampleRecord& rec : recs) {
    w.u32(rec.u);
    w.u32(rec.v);
    w.f64(rec.weight);
    w.u32(rec.multiplicity);
  }
}

std::vector<SampleRecord> get_records(Reader& r) {
  const std::uint32_t k = r.u32();
  std::vector<SampleRecord> recs(k);
  for (SampleRecord& rec : recs) {
    rec.u = r.u32();
    rec.v = r.u32();
    rec.weight = r.f64();
    rec.multiplicity = r.u32();
  }
  return recs;
}

template <class T>
void put_vec_u32(Writer& w, const std::vector<T>& v) {
  w.u64(v.size());
  for (const T x : v) w.u32(static_cast<std::uint32_t>(x));
}

std::vector<std::uint32_t> get_vec_u32(Reader& r) {
  const std::uint64_t k = r.u64();
  std::vector<std::uint32_t> v(k);
  for (auto& x : v) x = r.u32();
  return v;
}

void put_vec_f64(Writer& w, const std::vector<double>& v) {
  w.u64(v.size());
  for (const double x : v) w.f64(x);
}

std::vector<double> get_vec_f64(Reader& r) {
  const std::uint64_t k = r.u64();
  std::vector<double> v(k);
  for (auto& x : v) x = r.f64();
  return v;
}

void put_basic(Writer& w, const BasicSketch& sk) {
  w.u64(sk.n);
  w.u32(static_cast<std::uint32_t>(sk.classes.size()));
  for (const BasicClassSketch& cls : sk.classes) {
    w.i32(cls.class_index);
    w.f64(cls.gamma);
    put_graph(w, cls.q);
    w.u32(static_cast<std::uint32_t>(cls.components.size()));
    for (const S1ComponentSketch& c : cls.components) {
      w.f64(c.gamma);
      put_vec_u32(w, c.vertices);
      put_vec_f64(w, c.delta);
      put_edges(w, c.light_edges);
      put_vec_u32(w, c.heavy);
      put_vec_f64(w, c.heavy_marginal);
      for (const auto& recs : c.samples) put_records(w, recs);
    }
  }
}

BasicSketch get_basic(Reader& r) {
  BasicSketch sk;
  sk.n = r.u64();
  const std::uint32_t nc = r.u32();
  for (std::uint32_t i = 0; i < nc; ++i) {
    BasicClassSketch cls;
    cls.class_index = r.i32();
    cls.gamma = r.f64();
    cls.q = get_graph(r);
    const std::uint32_t k = r.u32();
    for (std::uint32_t j = 0; j < k; ++j) {
      S1ComponentSketch c;
      c.gamma = r.f64();
      c.vertices = get_vec_u32(r);
      c.delta = get_vec_f64(r);
      c.light_edges = get_edges(r);
      c.heavy = get_vec_u32(r);
      c.heavy_marginal = get_vec_f64(r);
      c.samples.resize(c.heavy.size());
      for (auto& recs : c.samples) recs = get_records(r);
      cls.components.push_back(std::move(c));
    }
    sk.classes.push_back(std::move(cls));
  }
  return sk;
}

void put_stratum(Writer& w, const Stratum& st) {
  w.u8(static_cast<std::uint8_t>(st.kind));
  w.i32(st.weight_class_j);
  w.f64(st.gamma);
  w.i32(st.kappa);
  w.i32(st.level);
  put_arcs(w, st.arcs);
}

Stratum get_stratum(Reader& r) {
  Stratum st;
  const std::uint8_t kind = r.u8();
  if (kind > 2) throw std::runtime_error("sketch file has an unknown stratum kind");
  st.kind = static_cast<Stratum::Kind>(kind);
  st.weight_class_j = r.i32();
  st.gamma = r.f64();
  st.kappa = r.i32();
  st.level = r.i32();
  st.arcs = get_arcs(r);
  return st;
}

void put_improved(Writer& w, const ImprovedSketch& sk) {
  w.u64(sk.n);
  w.u32(static_cast<std::uint32_t>(sk.stored_strata.size()));
  for (const Stratum& st : sk.stored_strata) put_stratum(w, st);
  w.u32(static_cast<std::uint32_t>(sk.s2_strata.size()));
  for (const S2StratumSketch& st : sk.s2_strata) {
    w.i32(st.weight_class_j);
    w.f64(st.gamma);
    w.i32(st.kappa);
    put_graph(w, st.q);
    w.u64(st.removed_arcs);
    w.u64(st.halved_tails);
    w.u64(st.support_size);
    w.u32(static_cast<std::uint32_t>(st.components.size()));
    for (const S2ComponentSketch& c : st.components) {
      w.f64(c.gamma);
      w.i32(c.kappa);
      put_vec_u32(w, c.vertices);
      put_vec_f64(w, c.delta);
      put_vec_f64(w, c.delta_in_heavy);
      put_arcs(w, c.s_arcs);
      for (const auto& recs : c.samples) put_records(w, recs);
    }
  }
}

ImprovedSketch get_improved(Reader& r) {
  ImprovedSketch sk;
  sk.n = r.u64();
  const std::uint32_t ns = r.u32();
  for (std::uint32_t i = 0; i < ns; ++i) sk.stored_strata.push_back(get_stratum(r));
  const std::uint32_t n2 = r.u32();
  for (std::uint32_t i = 0; i < n2; ++i) {
    S2StratumSketch st;
    st.weight_class_j = r.i32();
    st.gamma = r.f64();
    st.kappa = r.i32();
    st.q = get_graph(r);
    st.removed_arcs = r.u64();
    st.halved_tails = r.u64();
    st.support_size = r.u64();
    const std::uint32_t k = r.u32();
    for (std::uint32_t j = 0; j < k; ++j) {
      S2ComponentSketch c;
      c.gamma = r.f64();
      c.kappa = r.i32();
      c.vertices = get_vec_u32(r);
      c.delta = get_vec_f64(r);
      c.delta_in_heavy = get_vec_f64(r);
      c.s_arcs = get_arcs(r);
      c.samples.resize(c.vertices.size());
      for (auto& recs : c.samples) recs = get_records(r);
      st.components.push_back(std::move(c));
    }
    sk.s2_strata.push_back(std::move(st));
  }
  return sk;
}

void add_sample_block(SizeReport& rep, const std::vector<std::vector<SampleRecord>>& samples,
                      std::uint32_t ids) {
  for (const auto& recs : samples) {
    if (recs.empty()) continue;
    std::uint64_t draws = 0;
    for (const SampleRecord& rec : recs) draws += rec.multiplicity;
    rep.sample_draws += draws;
    rep.sample_records_distinct += recs.size();
    rep.sample_bits += recs.size() * (2ull * ids + 32ull + mult_bits(draws));
  }
}

}  // namespace

SizeReport size_report(const BasicSketch& sk) {
  SizeReport rep;
  rep.id_bits_per_vertex = id_bits(std::max<std::uint64_t>(sk.n, 2));
  const std::uint32_t ids = rep.id_bits_per_vertex;
  for (const BasicClassSketch& cls : sk.classes) {
    rep.stored_edge_records += cls.q.edges.size();
    for (const S1ComponentSketch& c : cls.components) {
      rep.stored_edge_records += c.light_edges.size();
      rep.degree_entries += c.vertices.size() + c.heavy.size();
      add_sample_block(rep, c.samples, ids);
    }
  }
  rep.stored_edge_bits = rep.stored_edge_records * (2ull * ids + 32ull);
  rep.degree_table_bits = rep.degree_entries * (ids + 32ull);
  return rep;
}

SizeReport size_report(const ImprovedSketch& sk) {
  SizeReport rep;
  rep.id_bits_per_vertex = id_bits(std::max<std::uint64_t>(sk.n, 2));
  const std::uint32_t ids = rep.id_bits_per_vertex;
  for (const Stratum& st : sk.stored_strata) rep.stored_edge_records += st.arcs.size();
  for (const S2StratumSketch& st : sk.s2_strata) {
    rep.stored_edge_records += st.q.edges.size();
    for (const S2ComponentSketch& c : st.components) {
      rep.stored_edge_records += c.s_arcs.size();
      rep.degree_entries += c.vertices.size();
      for (const double d : c.delta_in_heavy)
        if (d > 0.0) ++rep.degree_entries;
      add_sample_block(rep, c.samples, ids);
    }
  }
  rep.stored_edge_bits = rep.stored_edge_records * (2ull * ids + 32ull);
  rep.degree_table_bits = rep.degree_entries * (ids + 32ull);
  return rep;
}

SizeReport size_report(const SketchFile& file) {
  SizeReport rep;
  rep.id_bits_per_vertex = id_bits(std::max<std::uint64_t>(file.n, 2));
  auto fold = [&rep](const SizeReport& one) {
    rep.stored_edge_records += one.stored_edge_records;
    rep.sample_draws += one.sample_draws;
    rep.sample_records_distinct += one.sample_records_distinct;
    rep.degree_entries += one.degree_entries;
    rep.stored_edge_bits += one.stored_edge_bits;
    rep.sample_bits += one.sample_bits;
    rep.degree_table_bits += one.degree_table_bits;
  };
  for (const BasicSketch& sk : file.basic_replicas) fold(size_report(sk));
  for (const ImprovedSketch& sk : file.improved_replicas) fold(size_report(sk));
  return rep;
}

std::vector<std::uint8_t> serialize_sketch_file(const SketchFile& file) {
  Writer w;
  w.bytes.insert(w.bytes.end(), kMagic, kMagic + 4);
  w.u32(kVersion);
  w.u8(static_cast<std::uint8_t>(file.algo));
  w.f64(file.params.eps);
  w.f64(file.params.delta);
  w.f64(file.params.c_alpha);
  w.f64(file.params.c_beta);
  w.f64(file.params.c_med);
  w.f64(file.params.c_sparsify);
  w.f64(file.params.h_override.value_or(std::numeric_limits<double>::quiet_NaN()));
  w.u64(file.master_seed);
  w.u64(file.n);

  const bool basic = file.algo == Algo::basic;
  const std::uint32_t nrep = static_cast<std::uint32_t>(
      basic ? file.basic_replicas.size() : file.improved_replicas.size());
  w.u32(nrep);
  for (std::uint32_t i = 0; i < nrep; ++i) {
    Writer section;
    if (basic)
      put_basic(section, file.basic_replicas[i]);
    else
      put_improved(section, file.improved_replicas[i]);
    w.u64(section.bytes.size());
    w.bytes.insert(w.bytes.end(), section.bytes.begin(), section.bytes.end());
  }

  const SizeReport rep = size_report(file);
  w.u64(rep.stored_edge_records);
  w.u64(rep.sample_draws);
  w.u64(rep.total_bits());
  return w.bytes;
}

SketchFile deserialize_sketch_file(const std::vector<std::uint8_t>& bytes) {
  Reader r{bytes};
  r.need(4);
  if (std::memcmp(bytes.data(), kMagic, 4) != 0)
    throw std::runtime_error("not a sketch file (bad magic)");
  r.pos = 4;
  if (r.u32() != kVersion) throw std::runtime_error("unsupported sketch file version");
  SketchFile file;
  const std::uint8_t algo = r.u8();
  if (algo > 1) throw std::runtime_error("sketch file has an unknown algorithm tag");
  file.algo = static_cast<Algo>(algo);
  file.params.eps = r.f64();
  file.params.delta = r.f64();
  file.params.c_alpha = r.f64();
  file.params.c_beta = r.f64();
  file.params.c_med = r.f64();
  file.params.c_sparsify = r.f64();
  const double h = r.f64();
  if (!std::isnan(h)) file.params.h_override = h;
  file.master_seed = r.u64();
  file.n = r.u64();

  const std::uint32_t nrep = r.u32();
  for (std::uint32_t i = 0; i < nrep; ++i) {
    const std::uint64_t len = r.u64();
    r.need(len);
    const std::size_t end = r.pos + len;
    if (file.algo == Algo::basic)
      file.basic_replicas.push_back(get_basic(r));
    else
      file.improved_replicas.push_back(get_improved(r));
    if (r.pos != end) throw std::runtime_error("sketch file replica section is misaligned");
  }

  const std::uint64_t stored = r.u64();
  const std::uint64_t draws = r.u64();
  const std::uint64_t bits = r.u64();
  if (r.pos != bytes.size()) throw std::runtime_error("sketch file has trailing bytes");
  const SizeReport rep = size_report(file);
  if (stored != rep.stored_edge_records || draws != rep.sample_draws || bits != rep.total_bits())
    throw std::runtime_error("sketch file footer does not match its contents");
  return file;
}

void write_sketch_file(const SketchFile& file, const std::string& path) {
  const std::vector<std::uint8_t> bytes = serialize_sketch_file(file);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("failed writing " + path);
}

SketchFile read_sketch_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  if (!in) throw std::runtime_error("cannot open " + path);
  const std::streamsize size = in.tellg();
  in.seekg(0);
  std::vector<std::uint8_t> bytes(static_cast<std::size_t>(size));
  if (size > 0) in.read(reinterpret_cast<char*>(bytes.data()), size);
  if (!in) throw std::runtime_error("failed reading " + path);
  return deserialize_sketch_file(bytes);
}

}  // namespace lsketch
