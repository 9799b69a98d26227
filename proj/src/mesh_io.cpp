// Copyright 2026 The rsimp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rsimp/mesh_io.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "rsimp/error.hpp"

namespace rsimp {

namespace {

// --- little-endian primitives -------------------------------------------

void put_u32(std::ostream& out, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                          static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
    out.write(reinterpret_cast<const char*>(b), 4);
}

void put_u64(std::ostream& out, std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i)
        b[i] = static_cast<unsigned char>(v >> (8 * i));
    out.write(reinterpret_cast<const char*>(b), 8);
}

void put_i32(std::ostream& out, std::int32_t v) { put_u32(out, static_cast<std::uint32_t>(v)); }

void put_f64(std::ostream& out, double v) { put_u64(out, std::bit_cast<std::uint64_t>(v)); }

[[noreturn]] void truncated(const std::istream& in) {
    throw Error(ErrorKind::parse, "unexpected end of data at byte offset " +
                                      std::to_string(static_cast<long long>(in.gcount())));
}

std::uint32_t get_u32(std::istream& in) {
    unsigned char b[4];
    if (!in.read(reinterpret_cast<char*>(b), 4))
        truncated(in);
    return std::uint32_t(b[0]) | std::uint32_t(b[1]) << 8 | std::uint32_t(b[2]) << 16 |
           std::uint32_t(b[3]) << 24;
}

std::uint64_t get_u64(std::istream& in) {
    unsigned char b[8];
    if (!in.read(reinterpret_cast<char*>(b), 8))
        truncated(in);
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i)
        v = v << 8 | b[i];
    return v;
}

std::int32_t get_i32(std::istream& in) { return static_cast<std::int32_t>(get_u32(in)); }

double get_f64(std::istream& in) { return std::bit_cast<double>(get_u64(in)); }

// --- atomic file writing --------------------------------------------------

template <typename WriteBody>
void write_file_atomically(const std::string& path, bool binary, WriteBody&& body) {
    std::filesystem::path target(path);
    std::filesystem::path temp = target;
    temp += ".tmp";
    {
        std::ofstream out(temp, binary ? std::ios::binary | std::ios::trunc : std::ios::trunc);
        if (!out)
            throw Error(ErrorKind::io, "cannot open " + temp.string() + " for writing");
        body(out);
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(temp, ec);
            throw Error(ErrorKind::io, "write to " + temp.string() + " failed");
        }
    }
    std::error_code ec;
    std::filesystem::rename(temp, target, ec);
    if (ec) {
        std::filesystem::remove(temp, ec);
        throw Error(ErrorKind::io, "cannot move " + temp.string() + " to " + path);
    }
}

// --- OBJ ------------------------------------------------------------------

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
    throw Error(ErrorKind::parse, "line " + std::to_string(line) + ": " + what);
}

Mesh read_obj(std::istream& in) {
    std::vector<Vec3> positions;
    std::vector<std::array<VertexId, 3>> faces;

    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::istringstream tokens(line);
        std::string keyword;
        if (!(tokens >> keyword) || keyword[0] == '#')
            continue;

        if (keyword == "v") {
            Vec3 p;
            if (!(tokens >> p.x >> p.y >> p.z))
                parse_fail(line_number, "vertex needs three coordinates");
            positions.push_back(p);
        } else if (keyword == "f") {
            std::vector<VertexId> corners;
            std::string ref;
            while (tokens >> ref) {
                // "i", "i/t", "i//n", "i/t/n"; only the vertex index is used.
                std::size_t slash = ref.find('/');
                std::string index_text = slash == std::string::npos ? ref : ref.substr(0, slash);
                long idx = 0;
                try {
                    idx = std::stol(index_text);
                } catch (const std::exception&) {
                    parse_fail(line_number, "bad face index '" + ref + "'");
                }
                if (idx < 0)
                    idx = static_cast<long>(positions.size()) + idx; // relative reference
                else
                    idx -= 1; // OBJ is 1-indexed
                if (idx < 0 || idx >= static_cast<long>(positions.size()))
                    parse_fail(line_number, "face index " + index_text + " out of range");
                corners.push_back(static_cast<VertexId>(idx));
            }
            if (corners.size() < 3)
                parse_fail(line_number, "face needs at least three corners");
            for (std::size_t k = 1; k + 1 < corners.size(); ++k)
                faces.push_back({corners[0], corners[k], corners[k + 1]});
        }
        // vn/vt/usemtl/o/g/s/mtllib are intentionally ignored.
    }
    if (faces.empty())
        throw Error(ErrorKind::parse, "no faces found in OBJ input");
    return build_mesh(std::move(positions), std::move(faces));
}

void write_obj(MeshView mesh, std::ostream& out) {
    char buffer[96];
    for (const Vec3& v : mesh.vertices) {
        std::snprintf(buffer, sizeof buffer, "v %.17g %.17g %.17g\n", v.x, v.y, v.z);
        out << buffer;
    }
    for (const auto& f : mesh.faces)
        out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
}

// --- PLY ------------------------------------------------------------------

enum class PlyType { i8, u8, i16, u16, i32, u32, f32, f64 };

std::size_t ply_type_size(PlyType t) {
    switch (t) {
    case PlyType::i8: case PlyType::u8: return 1;
    case PlyType::i16: case PlyType::u16: return 2;
    case PlyType::i32: case PlyType::u32: case PlyType::f32: return 4;
    case PlyType::f64: return 8;
    }
    return 0;
}

PlyType ply_type_from_name(const std::string& name, std::size_t line) {
    if (name == "char" || name == "int8") return PlyType::i8;
    if (name == "uchar" || name == "uint8") return PlyType::u8;
    if (name == "short" || name == "int16") return PlyType::i16;
    if (name == "ushort" || name == "uint16") return PlyType::u16;
    if (name == "int" || name == "int32") return PlyType::i32;
    if (name == "uint" || name == "uint32") return PlyType::u32;
    if (name == "float" || name == "float32") return PlyType::f32;
    if (name == "double" || name == "float64") return PlyType::f64;
    parse_fail(line, "unknown PLY type '" + name + "'");
}

struct PlyProperty {
    std::string name;
    PlyType type = PlyType::f32;
    bool is_list = false;
    PlyType count_type = PlyType::u8;
};

struct PlyElement {
    std::string name;
    std::size_t count = 0;
    std::vector<PlyProperty> properties;
};

double read_ply_scalar_binary(std::istream& in, PlyType t) {
    unsigned char b[8];
    std::size_t size = ply_type_size(t);
    if (!in.read(reinterpret_cast<char*>(b), static_cast<std::streamsize>(size)))
        throw Error(ErrorKind::parse, "truncated binary PLY payload");
    std::uint64_t bits = 0;
    for (std::size_t i = size; i-- > 0;)
        bits = bits << 8 | b[i];
    switch (t) {
    case PlyType::i8: return static_cast<double>(static_cast<std::int8_t>(bits));
    case PlyType::u8: return static_cast<double>(static_cast<std::uint8_t>(bits));
    case PlyType::i16: return static_cast<double>(static_cast<std::int16_t>(bits));
    case PlyType::u16: return static_cast<double>(static_cast<std::uint16_t>(bits));
    case PlyType::i32: return static_cast<double>(static_cast<std::int32_t>(bits));
    case PlyType::u32: return static_cast<double>(static_cast<std::uint32_t>(bits));
    case PlyType::f32: return std::bit_cast<float>(static_cast<std::uint32_t>(bits));
    case PlyType::f64: return std::bit_cast<double>(bits);
    }
    return 0.0;
}

Mesh read_ply(std::istream& in, std::vector<std::string>* warnings) {
    auto warn = [warnings](const std::string& message) {
        if (warnings)
            warnings->push_back(message);
    };

    std::string line;
    std::size_t line_number = 0;
    auto next_line = [&]() -> std::string& {
        if (!std::getline(in, line))
            parse_fail(line_number, "unexpected end of PLY header");
        ++line_number;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        return line;
    };

    if (next_line() != "ply")
        parse_fail(line_number, "not a PLY file (missing 'ply' magic)");

    bool binary = false;
    bool format_seen = false;
    std::vector<PlyElement> elements;

    for (;;) {
        std::istringstream tokens(next_line());
        std::string keyword;
        tokens >> keyword;
        if (keyword == "comment" || keyword == "obj_info" || keyword.empty())
            continue;
        if (keyword == "format") {
            std::string kind, version;
            tokens >> kind >> version;
            if (kind == "ascii")
                binary = false;
            else if (kind == "binary_little_endian")
                binary = true;
            else
                parse_fail(line_number, "unsupported PLY format '" + kind + "'");
            format_seen = true;
        } else if (keyword == "element") {
            PlyElement element;
            if (!(tokens >> element.name >> element.count))
                parse_fail(line_number, "malformed element declaration");
            elements.push_back(std::move(element));
        } else if (keyword == "property") {
            if (elements.empty())
                parse_fail(line_number, "property before any element");
            PlyProperty property;
            std::string type_name;
            tokens >> type_name;
            if (type_name == "list") {
                std::string count_name, item_name;
                if (!(tokens >> count_name >> item_name >> property.name))
                    parse_fail(line_number, "malformed list property");
                property.is_list = true;
                property.count_type = ply_type_from_name(count_name, line_number);
                property.type = ply_type_from_name(item_name, line_number);
            } else {
                if (!(tokens >> property.name))
                    parse_fail(line_number, "malformed property");
                property.type = ply_type_from_name(type_name, line_number);
            }
            elements.back().properties.push_back(std::move(property));
        } else if (keyword == "end_header") {
            break;
        } else {
            parse_fail(line_number, "unknown header keyword '" + keyword + "'");
        }
    }
    if (!format_seen)
        parse_fail(line_number, "PLY header has no format line");

    std::vector<Vec3> positions;
    std::vector<std::array<VertexId, 3>> faces;

    auto next_ascii_token = [&](const char* what) -> double {
        double value;
        if (!(in >> value))
            throw Error(ErrorKind::parse, std::string("expected ") + what + " value in PLY body");
        return value;
    };

    for (const PlyElement& element : elements) {
        const bool is_vertex = element.name == "vertex";
        const bool is_face = element.name == "face";
        if (!is_vertex && !is_face && element.count > 0)
            warn("ignoring PLY element '" + element.name + "'");

        int x_at = -1, y_at = -1, z_at = -1, indices_at = -1;
        for (std::size_t p = 0; p < element.properties.size(); ++p) {
            const PlyProperty& property = element.properties[p];
            if (is_vertex && !property.is_list) {
                if (property.name == "x") x_at = static_cast<int>(p);
                else if (property.name == "y") y_at = static_cast<int>(p);
                else if (property.name == "z") z_at = static_cast<int>(p);
                else warn("ignoring vertex property '" + property.name + "'");
            } else if (is_face && property.is_list &&
                       (property.name == "vertex_indices" || property.name == "vertex_index")) {
                indices_at = static_cast<int>(p);
            } else if (is_vertex || is_face) {
                warn("ignoring " + element.name + " property '" + property.name + "'");
            }
        }
        if (is_vertex && (x_at < 0 || y_at < 0 || z_at < 0))
            throw Error(ErrorKind::parse, "PLY vertex element lacks x/y/z properties");
        if (is_face && indices_at < 0 && element.count > 0)
            throw Error(ErrorKind::parse, "PLY face element lacks a vertex index list");

        if (is_vertex)
            positions.reserve(positions.size() + element.count);

        for (std::size_t i = 0; i < element.count; ++i) {
            Vec3 p{};
            std::vector<long> corners;
            for (std::size_t pr = 0; pr < element.properties.size(); ++pr) {
                const PlyProperty& property = element.properties[pr];
                if (property.is_list) {
                    double count_value = binary
                                             ? read_ply_scalar_binary(in, property.count_type)
                                             : next_ascii_token("list count");
                    auto n = static_cast<long>(count_value);
                    if (n < 0)
                        throw Error(ErrorKind::parse, "negative PLY list count");
                    for (long k = 0; k < n; ++k) {
                        double item = binary ? read_ply_scalar_binary(in, property.type)
                                             : next_ascii_token("list item");
                        if (static_cast<int>(pr) == indices_at)
                            corners.push_back(static_cast<long>(item));
                    }
                } else {
                    double value = binary ? read_ply_scalar_binary(in, property.type)
                                          : next_ascii_token(property.name.c_str());
                    if (static_cast<int>(pr) == x_at) p.x = value;
                    else if (static_cast<int>(pr) == y_at) p.y = value;
                    else if (static_cast<int>(pr) == z_at) p.z = value;
                }
            }
            if (is_vertex)
                positions.push_back(p);
            if (is_face) {
                if (corners.size() < 3)
                    throw Error(ErrorKind::parse, "PLY face with fewer than 3 indices");
                for (long c : corners)
                    if (c < 0 || c >= static_cast<long>(positions.size()))
                        throw Error(ErrorKind::parse,
                                    "PLY face index " + std::to_string(c) + " out of range");
                for (std::size_t k = 1; k + 1 < corners.size(); ++k)
                    faces.push_back({static_cast<VertexId>(corners[0]),
                                     static_cast<VertexId>(corners[k]),
                                     static_cast<VertexId>(corners[k + 1])});
            }
        }
    }

    if (faces.empty())
        throw Error(ErrorKind::parse, "no faces found in PLY input");
    return build_mesh(std::move(positions), std::move(faces));
}

void write_ply(MeshView mesh, std::ostream& out, bool binary) {
    out << "ply\n";
    out << (binary ? "format binary_little_endian 1.0\n" : "format ascii 1.0\n");
    out << "element vertex " << mesh.vertices.size() << "\n";
    out << "property double x\nproperty double y\nproperty double z\n";
    out << "element face " << mesh.faces.size() << "\n";
    out << "property list uchar int vertex_indices\n";
    out << "end_header\n";

    if (binary) {
        for (const Vec3& v : mesh.vertices) {
            put_f64(out, v.x);
            put_f64(out, v.y);
            put_f64(out, v.z);
        }
        for (const auto& f : mesh.faces) {
            out.put(3);
            put_i32(out, f[0]);
            put_i32(out, f[1]);
            put_i32(out, f[2]);
        }
    } else {
        char buffer[96];
        for (const Vec3& v : mesh.vertices) {
            std::snprintf(buffer, sizeof buffer, "%.17g %.17g %.17g\n", v.x, v.y, v.z);
            out << buffer;
        }
        for (const auto& f : mesh.faces)
            out << "3 " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
    }
}

} // namespace

MeshFormat format_from_path(const std::string& path) {
    std::string ext = std::filesystem::path(path).extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return ext == ".ply" ? MeshFormat::ply : MeshFormat::obj;
}

Mesh read_mesh(std::istream& in, MeshFormat format, std::vector<std::string>* warnings) {
    return format == MeshFormat::obj ? read_obj(in) : read_ply(in, warnings);
}

Mesh read_mesh(const std::string& path, std::vector<std::string>* warnings) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::io, "cannot open " + path);
    return read_mesh(in, format_from_path(path), warnings);
}

void write_mesh(MeshView mesh, std::ostream& out, MeshEncoding encoding) {
    switch (encoding) {
    case MeshEncoding::obj: write_obj(mesh, out); break;
    case MeshEncoding::ply_ascii: write_ply(mesh, out, false); break;
    case MeshEncoding::ply_binary: write_ply(mesh, out, true); break;
    }
}

void write_mesh(MeshView mesh, const std::string& path, MeshEncoding encoding) {
    write_file_atomically(path, encoding != MeshEncoding::obj,
                          [&](std::ostream& out) { write_mesh(mesh, out, encoding); });
}

void write_mesh(MeshView mesh, const std::string& path) {
    write_mesh(mesh, path,
               format_from_path(path) == MeshFormat::ply ? MeshEncoding::ply_binary
                                                         : MeshEncoding::obj);
}

void write_text_file(const std::string& path, const std::string& contents) {
    write_file_atomically(path, false, [&](std::ostream& out) { out << contents; });
}

// --- checkpoints ------------------------------------------------------------

namespace {

constexpr char kCheckpointMagic[4] = {'R', 'S', 'M', 'P'};
constexpr std::uint32_t kCheckpointVersion = 1;

void digest_bytes(std::uint64_t& hash, const void* data, std::size_t size) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < size; ++i) {
        hash ^= bytes[i];
        hash *= 0x100000001b3ull; // FNV-1a
    }
}

void digest_u64(std::uint64_t& hash, std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i)
        b[i] = static_cast<unsigned char>(v >> (8 * i));
    digest_bytes(hash, b, 8);
}

} // namespace

std::uint64_t mesh_digest(const Mesh& mesh) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    digest_u64(hash, mesh.vertex_count());
    for (const Vec3& v : mesh.vertices) {
        digest_u64(hash, std::bit_cast<std::uint64_t>(v.x));
        digest_u64(hash, std::bit_cast<std::uint64_t>(v.y));
        digest_u64(hash, std::bit_cast<std::uint64_t>(v.z));
    }
    digest_u64(hash, mesh.face_count());
    for (const auto& f : mesh.faces)
        for (VertexId v : f)
            digest_u64(hash, static_cast<std::uint64_t>(static_cast<std::uint32_t>(v)));
    return hash;
}

void save_checkpoint(const SimplificationState& state, const Mesh& mesh, std::ostream& out) {
    out.write(kCheckpointMagic, 4);
    put_u32(out, kCheckpointVersion);
    put_u64(out, mesh_digest(mesh));
    put_i32(out, state.next_cluster_id);
    put_u64(out, state.elapsed_splits);

    put_u64(out, state.clusters.size());
    for (const auto& [id, cluster] : state.clusters) {
        put_i32(out, id);
        out.put(cluster.splittable ? 1 : 0);
        put_f64(out, cluster.mean_normal.x);
        put_f64(out, cluster.mean_normal.y);
        put_f64(out, cluster.mean_normal.z);
        put_f64(out, cluster.mean_vertex.x);
        put_f64(out, cluster.mean_vertex.y);
        put_f64(out, cluster.mean_vertex.z);
        put_f64(out, cluster.normal_variation);
        put_f64(out, cluster.area);
        put_u64(out, cluster.vertices.size());
        for (VertexId v : cluster.vertices)
            put_i32(out, v);
        put_u64(out, cluster.faces.size());
        for (FaceId f : cluster.faces)
            put_i32(out, f);
    }

    std::vector<ClusterId> order = state.queue_order();
    put_u64(out, order.size());
    for (ClusterId id : order)
        put_i32(out, id);
}

void save_checkpoint(const SimplificationState& state, const Mesh& mesh,
                     const std::string& path) {
    write_file_atomically(path, true,
                          [&](std::ostream& out) { save_checkpoint(state, mesh, out); });
}

SimplificationState load_checkpoint(std::istream& in, const Mesh& mesh) {
    char magic[4];
    if (!in.read(magic, 4) || std::memcmp(magic, kCheckpointMagic, 4) != 0)
        throw Error(ErrorKind::checkpoint, "not a checkpoint file (bad magic)");
    std::uint32_t version = get_u32(in);
    if (version != kCheckpointVersion)
        throw Error(ErrorKind::checkpoint,
                    "unsupported checkpoint version " + std::to_string(version));
    std::uint64_t digest = get_u64(in);
    if (digest != mesh_digest(mesh))
        throw Error(ErrorKind::checkpoint, "checkpoint was created for a different mesh");

    SimplificationState state;
    state.next_cluster_id = get_i32(in);
    state.elapsed_splits = get_u64(in);

    const auto vertex_count = static_cast<VertexId>(mesh.vertex_count());
    const auto face_count = static_cast<FaceId>(mesh.face_count());
    std::vector<std::uint8_t> vertex_owned(mesh.vertex_count(), 0);

    std::uint64_t cluster_count = get_u64(in);
    for (std::uint64_t c = 0; c < cluster_count; ++c) {
        Cluster cluster;
        cluster.id = get_i32(in);
        int flag = in.get();
        if (flag < 0)
            truncated(in);
        cluster.splittable = flag != 0;
        cluster.mean_normal = {get_f64(in), get_f64(in), get_f64(in)};
        cluster.mean_vertex = {get_f64(in), get_f64(in), get_f64(in)};
        cluster.normal_variation = get_f64(in);
        cluster.area = get_f64(in);

        std::uint64_t n_vertices = get_u64(in);
        cluster.vertices.reserve(n_vertices);
        for (std::uint64_t i = 0; i < n_vertices; ++i) {
            VertexId v = get_i32(in);
            if (v < 0 || v >= vertex_count)
                throw Error(ErrorKind::checkpoint, "checkpoint vertex index out of range");
            if (vertex_owned[v]++)
                throw Error(ErrorKind::checkpoint,
                            "checkpoint clusters overlap at vertex " + std::to_string(v));
            cluster.vertices.push_back(v);
        }
        if (cluster.vertices.empty())
            throw Error(ErrorKind::checkpoint, "checkpoint contains an empty cluster");

        std::uint64_t n_faces = get_u64(in);
        cluster.faces.reserve(n_faces);
        for (std::uint64_t i = 0; i < n_faces; ++i) {
            FaceId f = get_i32(in);
            if (f < 0 || f >= face_count)
                throw Error(ErrorKind::checkpoint, "checkpoint face index out of range");
            cluster.faces.push_back(f);
        }

        if (cluster.id < 0 || cluster.id >= state.next_cluster_id)
            throw Error(ErrorKind::checkpoint, "checkpoint cluster id out of range");
        if (!state.clusters.emplace(cluster.id, std::move(cluster)).second)
            throw Error(ErrorKind::checkpoint, "duplicate cluster id in checkpoint");
    }

    for (std::size_t v = 0; v < mesh.vertex_count(); ++v)
        if (!vertex_owned[v])
            throw Error(ErrorKind::checkpoint,
                        "checkpoint does not cover vertex " + std::to_string(v));

    std::uint64_t queue_size = get_u64(in);
    std::size_t splittable_count = 0;
    for (const auto& [id, cluster] : state.clusters)
        splittable_count += cluster.splittable ? 1 : 0;
    if (queue_size != splittable_count)
        throw Error(ErrorKind::checkpoint, "checkpoint queue does not match splittable clusters");
    std::vector<std::uint8_t> queued(static_cast<std::size_t>(state.next_cluster_id), 0);
    for (std::uint64_t i = 0; i < queue_size; ++i) {
        ClusterId id = get_i32(in);
        auto it = state.clusters.find(id);
        if (it == state.clusters.end() || !it->second.splittable)
            throw Error(ErrorKind::checkpoint, "checkpoint queue references a bad cluster");
        if (queued[id]++)
            throw Error(ErrorKind::checkpoint, "checkpoint queue lists a cluster twice");
        state.queue_push(id);
    }

    return state;
}

SimplificationState load_checkpoint(const std::string& path, const Mesh& mesh) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::io, "cannot open " + path);
    return load_checkpoint(in, mesh);
}

} // namespace rsimp
