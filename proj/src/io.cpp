#include "elsim/io.hpp"

#include <json.hpp>

#include <bit>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace elsim {

using nlohmann::json;

static_assert(std::endian::native == std::endian::little,
              "snapshot payloads are little-endian");

const char* const kEnergyCsvHeader =
    "t,kinetic,frank_k1,frank_k2,frank_k3,frank_k4,frank_k5,penalty,"
    "reg_delta,total,mu1_term,mu4_term,aniso_term,q_term,cross_term,"
    "power_in,energy_eq_residual,norm_L2,norm_Linf,defect_total";

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_energy_csv(const std::string& path,
                      const std::vector<DiagRow>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << kEnergyCsvHeader << "\n";
  for (const DiagRow& r : rows) {
    const double cols[20] = {r.t,
                             r.energy.kinetic,
                             r.energy.frank_k[0],
                             r.energy.frank_k[1],
                             r.energy.frank_k[2],
                             r.energy.frank_k[3],
                             r.energy.frank_k[4],
                             r.energy.penalty,
                             r.energy.reg_delta,
                             r.energy.total,
                             r.diss.mu1_term,
                             r.diss.mu4_term,
                             r.diss.aniso_term,
                             r.diss.q_term,
                             r.diss.cross_term,
                             r.diss.power_in,
                             r.energy_eq_residual,
                             r.norm_l2,
                             r.norm_linf,
                             r.defect_total};
    for (int i = 0; i < 20; ++i) {
      if (i) out << ',';
      out << format_double(cols[i]);
    }
    out << "\n";
  }
}

void write_snapshot(const std::string& base, const SpecVec& field,
                    const std::string& name, double time) {
  const TorusGrid& g = field.g;
  const PhysVec p = to_phys(field);
  const std::size_t n = g.phys_size();

  std::vector<double> payload(3 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 v = p.vec_at(i);
    payload[3 * i + 0] = v[0];
    payload[3 * i + 1] = v[1];
    payload[3 * i + 2] = v[2];
  }
  {
    std::ofstream bin(base + ".bin", std::ios::binary);
    if (!bin) throw std::runtime_error("cannot write " + base + ".bin");
    bin.write(reinterpret_cast<const char*>(payload.data()),
              static_cast<std::streamsize>(payload.size() * sizeof(double)));
  }
  json h;
  h["format_version"] = 1;
  h["field"] = name;
  h["time"] = time;
  h["N"] = g.N;
  h["L"] = g.L;
  h["shape"] = {g.N, g.N, g.N, 3};
  h["dtype"] = "float64";
  h["byte_order"] = "little";
  h["order"] = "C (x,y,z,component)";
  h["payload_bytes"] = payload.size() * sizeof(double);
  write_text_file(base + ".json", h.dump(2) + "\n");
}

SpecVec read_snapshot(const std::string& base, const TorusGrid& g) {
  const json h = json::parse(read_text_file(base + ".json"));
  if (h.at("format_version").get<int>() != 1)
    throw std::runtime_error("unsupported snapshot format version");
  if (h.at("N").get<int>() != g.N)
    throw std::runtime_error("snapshot resolution does not match grid");
  const std::size_t expect = h.at("payload_bytes").get<std::size_t>();

  std::ifstream bin(base + ".bin", std::ios::binary | std::ios::ate);
  if (!bin) throw std::runtime_error("cannot read " + base + ".bin");
  const std::size_t size = static_cast<std::size_t>(bin.tellg());
  if (size != expect)
    throw std::runtime_error("snapshot payload length mismatch");
  bin.seekg(0);
  std::vector<double> payload(size / sizeof(double));
  bin.read(reinterpret_cast<char*>(payload.data()),
           static_cast<std::streamsize>(size));

  PhysVec p(g);
  const std::size_t n = g.phys_size();
  if (payload.size() != 3 * n)
    throw std::runtime_error("snapshot payload shape mismatch");
  for (std::size_t i = 0; i < n; ++i)
    p.set_vec(i, Vec3(payload[3 * i], payload[3 * i + 1], payload[3 * i + 2]));
  SpecVec out = to_spec(p);
  hermitian_fix(out);
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace elsim
