#include "geokernel/obj_io.hpp"

#include <charconv>
#include <fstream>
#include <string>
#include <string_view>
#include <system_error>

#include "geokernel/error.hpp"

namespace geokernel {
namespace {

std::string_view trim_left(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

std::string_view next_token(std::string_view& s) {
  s = trim_left(s);
  std::size_t end = 0;
  while (end < s.size() && s[end] != ' ' && s[end] != '\t' && s[end] != '\r') ++end;
  std::string_view tok = s.substr(0, end);
  s.remove_prefix(end);
  return tok;
}

[[noreturn]] void parse_error(const std::filesystem::path& path, std::size_t line, const std::string& msg) {
  throw Error(path.string() + ":" + std::to_string(line) + ": " + msg);
}

double parse_double(std::string_view tok, const std::filesystem::path& path, std::size_t line) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    parse_error(path, line, "malformed coordinate '" + std::string(tok) + "'");
  }
  return value;
}

VertexId parse_index(std::string_view tok, std::size_t vertex_count, const std::filesystem::path& path,
                     std::size_t line) {
  // Only the position index matters: "7", "7/2", "7//3", "7/2/3".
  const std::size_t slash = tok.find('/');
  std::string_view head = tok.substr(0, slash);
  long long raw = 0;
  auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), raw);
  if (ec != std::errc() || ptr != head.data() + head.size()) {
    parse_error(path, line, "malformed face index '" + std::string(tok) + "'");
  }
  long long resolved = 0;
  if (raw > 0) {
    resolved = raw - 1;
  } else if (raw < 0) {
    resolved = static_cast<long long>(vertex_count) + raw;
  } else {
    parse_error(path, line, "face index 0 is invalid (OBJ indices are 1-based)");
  }
  if (resolved < 0 || resolved >= static_cast<long long>(vertex_count)) {
    parse_error(path, line, "face index " + std::to_string(raw) + " out of range (" +
                                std::to_string(vertex_count) + " vertices defined so far)");
  }
  return static_cast<VertexId>(resolved);
}

void append_double(std::string& out, double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  out.append(buf, ptr);
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

void append_vertices(std::string& text, std::span<const Vec3> points) {
  for (const Vec3& p : points) {
    text += "v ";
    append_double(text, p.x);
    text += ' ';
    append_double(text, p.y);
    text += ' ';
    append_double(text, p.z);
    text += '\n';
  }
}

}  // namespace

TriMesh load_mesh(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open mesh file '" + path.string() + "'");

  TriMesh mesh;
  mesh.name = path.stem().string();
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    std::string_view tag = next_token(line);
    if (tag == "v") {
      Vec3 p;
      p.x = parse_double(next_token(line), path, line_no);
      p.y = parse_double(next_token(line), path, line_no);
      p.z = parse_double(next_token(line), path, line_no);
      mesh.vertices.push_back(p);
    } else if (tag == "f") {
      Face face{};
      int corners = 0;
      for (std::string_view tok = next_token(line); !tok.empty(); tok = next_token(line)) {
        if (corners == 3) parse_error(path, line_no, "polygonal face (more than 3 vertices) is not supported");
        face[corners++] = parse_index(tok, mesh.vertices.size(), path, line_no);
      }
      if (corners < 3) parse_error(path, line_no, "face with fewer than 3 vertices");
      mesh.faces.push_back(face);
    }
  }
  validate(mesh);
  return mesh;
}

void save_mesh(const TriMesh& mesh, const std::filesystem::path& path) {
  if (mesh.vertex_count() == 0) throw Error("refusing to save a mesh with no vertices");
  validate(mesh);
  std::string text;
  text.reserve(mesh.vertex_count() * 48 + mesh.face_count() * 24);
  append_vertices(text, mesh.vertices);
  for (const Face& f : mesh.faces) {
    text += "f ";
    text += std::to_string(f[0] + 1);
    text += ' ';
    text += std::to_string(f[1] + 1);
    text += ' ';
    text += std::to_string(f[2] + 1);
    text += '\n';
  }
  write_file(path, text);
}

void save_points(std::span<const Vec3> points, const std::filesystem::path& path) {
  if (points.empty()) throw Error("refusing to save an empty point cloud");
  std::string text;
  append_vertices(text, points);
  write_file(path, text);
}

}  // namespace geokernel
