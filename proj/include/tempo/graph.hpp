#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace tempo {

// A directed arc usable exactly at one time step. tail != head, 1 <= time <= T.
struct TimeArc {
    int32_t tail;
    int32_t head;
    int32_t time;
    bool operator==(const TimeArc&) const = default;
};

// A vertex at a time step. time == 0 only ever denotes the conventional
// start appearance of a per-source computation.
struct VertexAppearance {
    int32_t vertex;
    int32_t time;
    bool operator==(const VertexAppearance&) const = default;
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(const std::string& msg, int line_no)
        : std::runtime_error(msg), line(line_no) {}
};

// Immutable temporal graph: interned vertices, time-arcs sorted by
// (time, tail, head), lifetime T. Safe to share across threads once built.
class TemporalGraph {
public:
    // Edge-list text: "tail head time" per line, '#' comments, blank lines
    // ignored, optional "# T=<int>" directive.
    static TemporalGraph parse(std::istream& in);
    static TemporalGraph parse_file(const std::string& path);
    static TemporalGraph from_triples(
        const std::vector<std::tuple<std::string, std::string, int>>& triples,
        int declared_lifetime = 0);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    int lifetime() const { return lifetime_; }
    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::string& vertex_name(int v) const { return names_[static_cast<size_t>(v)]; }
    int vertex_index(std::string_view name) const;  // -1 if unknown
    const std::vector<TimeArc>& arcs() const { return arcs_; }

    // Appearance table: one entry per distinct (head, time) pair of some arc.
    // Entries are grouped by vertex, ascending time within a vertex.
    int appearance_count() const { return static_cast<int>(app_time_.size()); }
    int appearance_id(int vertex, int time) const;  // -1 if absent
    int appearance_vertex(int id) const { return app_vertex_[static_cast<size_t>(id)]; }
    int appearance_time(int id) const { return app_time_[static_cast<size_t>(id)]; }
    int app_begin(int v) const { return app_offset_[static_cast<size_t>(v)]; }
    int app_end(int v) const { return app_offset_[static_cast<size_t>(v) + 1]; }
    int arc_head_app(int arc_index) const { return arc_head_app_[static_cast<size_t>(arc_index)]; }

    // Arcs with a given tail, as indices into arcs(), ascending time.
    const std::vector<int32_t>& arcs_from(int v) const { return arcs_from_[static_cast<size_t>(v)]; }

    // Writes a form that parses back to an identical graph (same vertex
    // interning order).
    void serialize(std::ostream& out) const;

    bool operator==(const TemporalGraph& o) const {
        return names_ == o.names_ && arcs_ == o.arcs_ && lifetime_ == o.lifetime_;
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    std::vector<TimeArc> arcs_;
    int lifetime_ = 1;

    std::vector<int32_t> app_time_;
    std::vector<int32_t> app_vertex_;
    std::vector<int32_t> app_offset_;
    std::vector<int32_t> arc_head_app_;
    std::vector<std::vector<int32_t>> arcs_from_;

    struct RawArc {
        int tail, head, time, line;
    };
    static TemporalGraph build(std::vector<std::string> names,
                               std::unordered_map<std::string, int> index,
                               std::vector<RawArc> raw, int declared_t, int declared_line);
    void build_appearance_index();
};

}  // namespace tempo
