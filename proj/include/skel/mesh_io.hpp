#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "skel/core.hpp"
#include "skel/halfedge_mesh.hpp"

namespace skel {

struct MeshData {
  std::vector<Vec3> positions;
  std::vector<std::array<int, 3>> faces;
  std::vector<Vec3> normals; // optional, may be empty
};

namespace detail {

inline int parse_obj_index(const std::string& tok, int nVerts) {
  // "7", "7/2", "7//3" all give 7; negative indices count from the end
  std::size_t slash = tok.find('/');
  int idx = std::stoi(slash == std::string::npos ? tok : tok.substr(0, slash));
  if (idx < 0) idx = nVerts + idx + 1;
  return idx - 1;
}

}  // namespace detail

inline MeshData read_obj(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open OBJ file: " + path);
  MeshData data;
  std::string line;
  while (std::getline(in, line)) {
    if (line.size() >= 2 && line[0] == 'v' && (line[1] == ' ' || line[1] == '\t')) {
      std::istringstream ls(line.substr(2));
      Vec3 p;
      ls >> p.x() >> p.y() >> p.z();
      data.positions.push_back(p);
    } else if (line.size() >= 2 && line[0] == 'f' && (line[1] == ' ' || line[1] == '\t')) {
      std::istringstream ls(line.substr(2));
      std::vector<int> idx;
      std::string tok;
      while (ls >> tok)
        idx.push_back(detail::parse_obj_index(tok, static_cast<int>(data.positions.size())));
      if (idx.size() != 3)
        throw IoError("read_obj: non-triangular face in " + path);
      data.faces.push_back({idx[0], idx[1], idx[2]});
    }
  }
  if (data.positions.empty()) throw IoError("read_obj: no vertices in " + path);
  return data;
}

// Full-precision OBJ so that a write/read round trip is bit exact.
inline void write_obj(const std::string& path, const MeshData& data) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write OBJ file: " + path);
  char buf[128];
  for (const Vec3& p : data.positions) {
    std::snprintf(buf, sizeof(buf), "v %.17g %.17g %.17g\n", p.x(), p.y(), p.z());
    out << buf;
  }
  for (const auto& f : data.faces)
    out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
}

// Skeleton graphs and separator polylines are stored as OBJ v/l elements.
inline void write_obj_lines(const std::string& path, const std::vector<Vec3>& points,
                            const std::vector<std::array<int, 2>>& segments) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write OBJ file: " + path);
  char buf[128];
  for (const Vec3& p : points) {
    std::snprintf(buf, sizeof(buf), "v %.17g %.17g %.17g\n", p.x(), p.y(), p.z());
    out << buf;
  }
  for (const auto& s : segments) out << "l " << s[0] + 1 << ' ' << s[1] + 1 << '\n';
}

struct CloudData {
  std::vector<Vec3> positions;
  std::vector<Vec3> normals; // may be empty
};

// Whitespace separated "x y z [nx ny nz]" per line; '#' comments allowed.
inline CloudData read_xyz(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open XYZ file: " + path);
  CloudData data;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    Vec3 p, n;
    if (!(ls >> p.x() >> p.y() >> p.z())) continue;
    data.positions.push_back(p);
    if (ls >> n.x() >> n.y() >> n.z()) data.normals.push_back(n);
  }
  if (data.positions.empty()) throw IoError("read_xyz: no points in " + path);
  if (!data.normals.empty() && data.normals.size() != data.positions.size())
    throw IoError("read_xyz: partial normals in " + path);
  return data;
}

inline void write_xyz(const std::string& path, const CloudData& data) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write XYZ file: " + path);
  char buf[256];
  for (std::size_t i = 0; i < data.positions.size(); ++i) {
    const Vec3& p = data.positions[i];
    if (data.normals.empty()) {
      std::snprintf(buf, sizeof(buf), "%.17g %.17g %.17g\n", p.x(), p.y(), p.z());
    } else {
      const Vec3& n = data.normals[i];
      std::snprintf(buf, sizeof(buf), "%.17g %.17g %.17g %.17g %.17g %.17g\n",
                    p.x(), p.y(), p.z(), n.x(), n.y(), n.z());
    }
    out << buf;
  }
}

// --- PLY ------------------------------------------------------------------
// Minimal reader: ascii or binary_little_endian 1.0, vertex properties
// x/y/z (+ optional nx/ny/nz), face lists. Anything else is skipped.

struct PlyData {
  std::vector<Vec3> positions;
  std::vector<Vec3> normals;
  std::vector<std::array<int, 3>> faces;
  bool hasFaces = false;
};

namespace detail {

struct PlyProperty {
  std::string name;
  std::string type;
  bool isList = false;
  std::string countType;
};

inline int ply_type_size(const std::string& t) {
  if (t == "char" || t == "uchar" || t == "int8" || t == "uint8") return 1;
  if (t == "short" || t == "ushort" || t == "int16" || t == "uint16") return 2;
  if (t == "int" || t == "uint" || t == "int32" || t == "uint32" || t == "float" ||
      t == "float32")
    return 4;
  if (t == "double" || t == "float64") return 8;
  throw IoError("ply: unknown type " + t);
}

inline double ply_read_binary_value(std::istream& in, const std::string& t) {
  unsigned char buf[8];
  int n = ply_type_size(t);
  in.read(reinterpret_cast<char*>(buf), n);
  if (t == "float" || t == "float32") {
    float f;
    std::memcpy(&f, buf, 4);
    return f;
  }
  if (t == "double" || t == "float64") {
    double d;
    std::memcpy(&d, buf, 8);
    return d;
  }
  std::int64_t v = 0;
  bool neg = (t[0] != 'u') && (buf[n - 1] & 0x80);
  for (int i = n - 1; i >= 0; --i) v = (v << 8) | buf[i];
  if (neg) v -= (std::int64_t(1) << (8 * n));
  return static_cast<double>(v);
}

}  // namespace detail

inline PlyData read_ply(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open PLY file: " + path);
  std::string line;
  std::getline(in, line);
  if (line.rfind("ply", 0) != 0) throw IoError("not a PLY file: " + path);

  bool binary = false;
  struct Element {
    std::string name;
    long count = 0;
    std::vector<detail::PlyProperty> props;
  };
  std::vector<Element> elements;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "format") {
      std::string fmt;
      ls >> fmt;
      if (fmt == "binary_little_endian") binary = true;
      else if (fmt != "ascii") throw IoError("ply: unsupported format " + fmt);
    } else if (word == "element") {
      Element e;
      ls >> e.name >> e.count;
      elements.push_back(e);
    } else if (word == "property") {
      detail::PlyProperty p;
      std::string t;
      ls >> t;
      if (t == "list") {
        p.isList = true;
        ls >> p.countType >> p.type >> p.name;
      } else {
        p.type = t;
        ls >> p.name;
      }
      if (elements.empty()) throw IoError("ply: property before element");
      elements.back().props.push_back(p);
    } else if (word == "end_header") {
      break;
    }
  }

  PlyData data;
  for (const Element& e : elements) {
    bool isVertex = (e.name == "vertex");
    bool isFace = (e.name == "face");
    for (long i = 0; i < e.count; ++i) {
      double x = 0, y = 0, z = 0, nx = 0, ny = 0, nz = 0;
      bool hasN = false;
      std::vector<long> faceIdx;
      std::istringstream ls;
      if (!binary) {
        std::getline(in, line);
        ls.str(line);
      }
      for (const auto& p : e.props) {
        if (p.isList) {
          long cnt;
          if (binary) cnt = static_cast<long>(detail::ply_read_binary_value(in, p.countType));
          else { ls >> cnt; }
          for (long k = 0; k < cnt; ++k) {
            double v;
            if (binary) v = detail::ply_read_binary_value(in, p.type);
            else ls >> v;
            if (isFace && p.name == "vertex_indices") faceIdx.push_back(static_cast<long>(v));
            if (isFace && p.name == "vertex_index") faceIdx.push_back(static_cast<long>(v));
          }
        } else {
          double v;
          if (binary) v = detail::ply_read_binary_value(in, p.type);
          else ls >> v;
          if (isVertex) {
            if (p.name == "x") x = v;
            else if (p.name == "y") y = v;
            else if (p.name == "z") z = v;
            else if (p.name == "nx") { nx = v; hasN = true; }
            else if (p.name == "ny") { ny = v; hasN = true; }
            else if (p.name == "nz") { nz = v; hasN = true; }
          }
        }
      }
      if (isVertex) {
        data.positions.emplace_back(x, y, z);
        if (hasN) data.normals.emplace_back(nx, ny, nz);
      } else if (isFace && !faceIdx.empty()) {
        if (faceIdx.size() != 3) throw IoError("read_ply: non-triangular face in " + path);
        data.faces.push_back({static_cast<int>(faceIdx[0]), static_cast<int>(faceIdx[1]),
                              static_cast<int>(faceIdx[2])});
      }
    }
    if (e.name == "face") data.hasFaces = e.count > 0;
  }
  if (data.positions.empty()) throw IoError("read_ply: no vertices in " + path);
  return data;
}

// ASCII PLY with one integer region label per vertex (segmentation export).
inline void write_ply_labels(const std::string& path, const std::vector<Vec3>& positions,
                             const std::vector<int>& labels) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write PLY file: " + path);
  out << "ply\nformat ascii 1.0\n";
  out << "element vertex " << positions.size() << "\n";
  out << "property double x\nproperty double y\nproperty double z\n";
  out << "property int region\nend_header\n";
  char buf[160];
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const Vec3& p = positions[i];
    std::snprintf(buf, sizeof(buf), "%.17g %.17g %.17g %d\n", p.x(), p.y(), p.z(),
                  labels[i]);
    out << buf;
  }
}

// Debug export of a scalar field as grayscale vertex colors.
inline void write_ply_field(const std::string& path, const std::vector<Vec3>& positions,
                            const std::vector<double>& values) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write PLY file: " + path);
  double lo = kInf, hi = -kInf;
  for (double v : values)
    if (std::isfinite(v)) { lo = std::min(lo, v); hi = std::max(hi, v); }
  if (!(hi > lo)) { lo = 0; hi = 1; }
  out << "ply\nformat ascii 1.0\n";
  out << "element vertex " << positions.size() << "\n";
  out << "property double x\nproperty double y\nproperty double z\n";
  out << "property uchar red\nproperty uchar green\nproperty uchar blue\nend_header\n";
  char buf[200];
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const Vec3& p = positions[i];
    int g = std::isfinite(values[i])
                ? static_cast<int>(255.0 * (values[i] - lo) / (hi - lo))
                : 255;
    std::snprintf(buf, sizeof(buf), "%.17g %.17g %.17g %d %d %d\n", p.x(), p.y(), p.z(),
                  g, g, 255 - g);
    out << buf;
  }
}

}  // namespace skel
