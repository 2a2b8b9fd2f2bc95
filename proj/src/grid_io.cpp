#include "wigner/grid_io.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace wigner {

namespace {

std::filesystem::path with_ext(const std::filesystem::path& stem, const char* ext) {
  return std::filesystem::path(stem.string() + ext);
}

void put_le(std::vector<unsigned char>& out, double v) {
  auto bits = std::bit_cast<std::uint64_t>(v);
  for (int k = 0; k < 8; ++k) out.push_back(static_cast<unsigned char>(bits >> (8 * k)));
}

double get_le(const unsigned char* in) {
  std::uint64_t bits = 0;
  for (int k = 0; k < 8; ++k) bits |= static_cast<std::uint64_t>(in[k]) << (8 * k);
  return std::bit_cast<double>(bits);
}

}  // namespace

void write_grid(const std::filesystem::path& stem, const WignerField& w, RasterKind kind) {
  const PhaseSpaceGrid& g = w.grid;
  nlohmann::ordered_json meta;
  meta["schema"] = "wigner-grid/1";
  meta["x_min"] = g.x_min;
  meta["x_max"] = g.x_max;
  meta["p_min"] = g.p_min;
  meta["p_max"] = g.p_max;
  meta["nx"] = g.nx;
  meta["np"] = g.np;
  meta["label"] = w.label;
  meta["kind"] = kind == RasterKind::real ? "real" : "complex";
  {
    std::ofstream f(with_ext(stem, ".json"));
    if (!f) throw std::runtime_error("cannot write " + with_ext(stem, ".json").string());
    f << meta.dump(2) << "\n";
  }
  std::vector<unsigned char> raw;
  raw.reserve(w.values.size() * (kind == RasterKind::real ? 8 : 16));
  for (const cplx& v : w.values) {
    put_le(raw, v.real());
    if (kind == RasterKind::complex) put_le(raw, v.imag());
  }
  std::ofstream f(with_ext(stem, ".f64"), std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + with_ext(stem, ".f64").string());
  f.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
}

WignerField read_grid(const std::filesystem::path& stem) {
  std::ifstream mf(with_ext(stem, ".json"));
  if (!mf) throw std::runtime_error("cannot read " + with_ext(stem, ".json").string());
  const nlohmann::json meta = nlohmann::json::parse(mf);
  if (meta.at("schema") != "wigner-grid/1") throw std::runtime_error("unsupported grid schema");
  PhaseSpaceGrid g{meta.at("x_min"), meta.at("x_max"), meta.at("p_min"), meta.at("p_max"), meta.at("nx"), meta.at("np")};
  g.validate();
  const bool complex = meta.at("kind") == "complex";
  WignerField w(g, meta.at("label").get<std::string>());

  std::ifstream rf(with_ext(stem, ".f64"), std::ios::binary);
  std::vector<unsigned char> raw((std::istreambuf_iterator<char>(rf)), std::istreambuf_iterator<char>());
  const size_t width = complex ? 16 : 8;
  if (raw.size() != g.size() * width) throw std::runtime_error("raster size does not match metadata");
  for (size_t k = 0; k < g.size(); ++k) {
    const unsigned char* at = raw.data() + k * width;
    w.values[k] = complex ? cplx(get_le(at), get_le(at + 8)) : cplx(get_le(at), 0.0);
  }
  return w;
}

void write_csv(const std::filesystem::path& file, const WignerField& w) {
  std::FILE* f = std::fopen(file.string().c_str(), "w");
  if (!f) throw std::runtime_error("cannot write " + file.string());
  std::fputs("x,p,value\n", f);
  for (int j = 0; j < w.grid.np; ++j)
    for (int i = 0; i < w.grid.nx; ++i)
      std::fprintf(f, "%.17g,%.17g,%.17g\n", w.grid.x(i), w.grid.p(j), w.at(i, j).real());
  std::fclose(f);
}

}  // namespace wigner
