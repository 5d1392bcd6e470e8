#include "tempo/graph.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace tempo {

namespace {

std::string_view trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool parse_int(std::string_view s, int& out) {
    auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

}  // namespace

int TemporalGraph::vertex_index(std::string_view name) const {
    auto it = index_.find(std::string(name));
    return it == index_.end() ? -1 : it->second;
}

int TemporalGraph::appearance_id(int vertex, int time) const {
    int lo = app_begin(vertex), hi = app_end(vertex);
    while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        if (app_time_[static_cast<size_t>(mid)] < time)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < app_end(vertex) && app_time_[static_cast<size_t>(lo)] == time) return lo;
    return -1;
}

TemporalGraph TemporalGraph::parse(std::istream& in) {
    std::vector<std::string> names;
    std::unordered_map<std::string, int> index;
    std::vector<RawArc> raw;
    int declared_t = 0;
    int declared_line = 0;

    auto intern = [&](const std::string& name) {
        auto it = index.find(name);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(names.size());
        names.push_back(name);
        index.emplace(name, id);
        return id;
    };

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view body = trim(line);
        if (body.empty()) continue;
        if (body[0] == '#') {
            std::string_view rest = trim(body.substr(1));
            if (rest.size() >= 2 && rest[0] == 'T' && rest[1] == '=') {
                int t;
                if (!parse_int(trim(rest.substr(2)), t) || t <= 0)
                    throw ParseError("invalid T directive", line_no);
                if (declared_t != 0) throw ParseError("duplicate T directive", line_no);
                declared_t = t;
                declared_line = line_no;
            }
            continue;
        }
        std::istringstream fields{std::string(body)};
        std::string tail, head, time_str, extra;
        if (!(fields >> tail >> head >> time_str))
            throw ParseError("malformed line: expected 'tail head time'", line_no);
        if (fields >> extra)
            throw ParseError("malformed line: expected exactly three fields", line_no);
        int time;
        if (!parse_int(time_str, time)) throw ParseError("non-integer time", line_no);
        if (time <= 0) throw ParseError("time must be positive", line_no);
        if (tail == head) throw ParseError("self-loop", line_no);
        int u = intern(tail);
        int v = intern(head);
        raw.push_back({u, v, time, line_no});
    }
    return build(std::move(names), std::move(index), std::move(raw), declared_t, declared_line);
}

TemporalGraph TemporalGraph::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse(in);
}

TemporalGraph TemporalGraph::from_triples(
    const std::vector<std::tuple<std::string, std::string, int>>& triples, int declared_lifetime) {
    std::ostringstream text;
    if (declared_lifetime > 0) text << "# T=" << declared_lifetime << "\n";
    for (const auto& [tail, head, time] : triples) text << tail << " " << head << " " << time << "\n";
    std::istringstream in(text.str());
    return parse(in);
}

TemporalGraph TemporalGraph::build(std::vector<std::string> names,
                                   std::unordered_map<std::string, int> index,
                                   std::vector<RawArc> raw, int declared_t, int declared_line) {
    std::set<std::tuple<int, int, int>> seen;
    int max_time = 0;
    for (const RawArc& a : raw) {
        if (!seen.insert({a.time, a.tail, a.head}).second)
            throw ParseError("duplicate time-arc", a.line);
        max_time = std::max(max_time, a.time);
    }
    if (declared_t != 0 && declared_t < max_time) {
        for (const RawArc& a : raw) {
            if (a.time > declared_t)
                throw ParseError("arc time " + std::to_string(a.time) +
                                     " exceeds declared T=" + std::to_string(declared_t),
                                 a.line);
        }
    }
    (void)declared_line;

    TemporalGraph g;
    g.names_ = std::move(names);
    g.index_ = std::move(index);
    g.lifetime_ = declared_t != 0 ? declared_t : std::max(max_time, 1);
    g.arcs_.reserve(raw.size());
    for (const RawArc& a : raw) g.arcs_.push_back({a.tail, a.head, a.time});
    std::sort(g.arcs_.begin(), g.arcs_.end(), [](const TimeArc& a, const TimeArc& b) {
        return std::tie(a.time, a.tail, a.head) < std::tie(b.time, b.tail, b.head);
    });
    g.build_appearance_index();
    return g;
}

void TemporalGraph::build_appearance_index() {
    int n = vertex_count();
    std::vector<std::vector<int32_t>> in_times(static_cast<size_t>(n));
    for (const TimeArc& a : arcs_) in_times[static_cast<size_t>(a.head)].push_back(a.time);
    app_offset_.assign(static_cast<size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v) {
        auto& ts = in_times[static_cast<size_t>(v)];
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        app_offset_[static_cast<size_t>(v) + 1] =
            app_offset_[static_cast<size_t>(v)] + static_cast<int32_t>(ts.size());
        for (int32_t t : ts) {
            app_time_.push_back(t);
            app_vertex_.push_back(v);
        }
    }
    arc_head_app_.resize(arcs_.size());
    arcs_from_.assign(static_cast<size_t>(n), {});
    for (size_t i = 0; i < arcs_.size(); ++i) {
        arc_head_app_[i] = appearance_id(arcs_[i].head, arcs_[i].time);
        assert(arc_head_app_[i] >= 0);
        arcs_from_[static_cast<size_t>(arcs_[i].tail)].push_back(static_cast<int32_t>(i));
    }
}

void TemporalGraph::serialize(std::ostream& out) const {
    out << "# T=" << lifetime_ << "\n";
    // Emit arcs so that vertex first appearances replay the interning order.
    int n = vertex_count();
    std::vector<uint8_t> introduced(static_cast<size_t>(n), 0);
    std::vector<uint8_t> emitted(arcs_.size(), 0);
    auto emit = [&](size_t i) {
        const TimeArc& a = arcs_[i];
        out << names_[static_cast<size_t>(a.tail)] << " " << names_[static_cast<size_t>(a.head)]
            << " " << a.time << "\n";
        emitted[i] = 1;
        introduced[static_cast<size_t>(a.tail)] = 1;
        introduced[static_cast<size_t>(a.head)] = 1;
    };
    for (int k = 0; k < n; ++k) {
        if (introduced[static_cast<size_t>(k)]) continue;
        bool found = false;
        for (size_t i = 0; i < arcs_.size() && !found; ++i) {
            if (emitted[i]) continue;
            const TimeArc& a = arcs_[i];
            // the arc may introduce k (tail known, or k is the tail and the
            // head is either known or the very next vertex in intern order)
            if ((a.head == k && introduced[static_cast<size_t>(a.tail)]) ||
                (a.tail == k &&
                 (introduced[static_cast<size_t>(a.head)] || a.head == k + 1))) {
                emit(i);
                found = true;
            }
        }
        assert(found && "vertex order not realizable from the arc set");
    }
    for (size_t i = 0; i < arcs_.size(); ++i)
        if (!emitted[i]) emit(i);
}

}  // namespace tempo
