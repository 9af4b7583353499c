#include "gordian/tangle.hpp"

#include <stdexcept>

namespace gordian {

TangleBuilder::TangleBuilder(PlanarGraph& g, int top, int first_id)
    : g_(g), top_(top), next_id_(first_id), top_ends_(top), top_pair_(top, -1) {
    for (int i = 0; i < top; ++i) cur_.push_back({{}, i});
}

void TangleBuilder::attach(const Open& o, Dart d) {
    if (o.dart.valid())
        g_.link(o.dart, d);
    else
        top_ends_[o.boundary].dart = d;
}

std::vector<Dart> TangleBuilder::open_darts() const {
    std::vector<Dart> out;
    for (const auto& o : cur_) out.push_back(o.dart);
    return out;
}

int TangleBuilder::cross(int p, bool left_over, int id) {
    if (p < 0 || p + 1 >= width()) throw std::out_of_range("tangle crossing outside the strands");
    // slots counterclockwise: top-left, bottom-left, bottom-right, top-right
    int v = g_.add_crossing(id > 0 ? id : next_id_++, left_over ? 0 : 1);
    vertices_.push_back(v);
    attach(cur_[p], {v, 0});
    attach(cur_[p + 1], {v, 3});
    cur_[p] = {{v, 1}, -1};
    cur_[p + 1] = {{v, 2}, -1};
    return g_.vs[v].id;
}

void TangleBuilder::cup(int p) {
    if (p < 0 || p > width()) throw std::out_of_range("tangle cup outside the strands");
    int b = g_.add_bead();
    vertices_.push_back(b);
    cur_.insert(cur_.begin() + p, {{b, 1}, -1});
    cur_.insert(cur_.begin() + p, {{b, 0}, -1});
}

void TangleBuilder::cap(int p) {
    if (p < 0 || p + 1 >= width()) throw std::out_of_range("tangle cap outside the strands");
    Open a = cur_[p], b = cur_[p + 1];
    if (a.dart.valid() && b.dart.valid()) {
        g_.link(a.dart, b.dart);
    } else if (a.dart.valid()) {
        top_ends_[b.boundary].dart = a.dart;
    } else if (b.dart.valid()) {
        top_ends_[a.boundary].dart = b.dart;
    } else {
        top_pair_[a.boundary] = b.boundary;
        top_pair_[b.boundary] = a.boundary;
    }
    cur_.erase(cur_.begin() + p, cur_.begin() + p + 2);
}

std::vector<PlanarGraph::TangleEnd> TangleBuilder::finish() {
    const int bottom = width();
    auto ccw_top = [&](int i) { return top_ - 1 - i; };
    std::vector<PlanarGraph::TangleEnd> ends(top_ + bottom);
    for (int i = 0; i < top_; ++i) {
        if (top_ends_[i].dart.valid())
            ends[ccw_top(i)].dart = top_ends_[i].dart;
        else if (top_pair_[i] >= 0)
            ends[ccw_top(i)].to = ccw_top(top_pair_[i]);
    }
    for (int k = 0; k < bottom; ++k) {
        const Open& o = cur_[k];
        if (o.dart.valid()) {
            ends[top_ + k].dart = o.dart;
        } else {
            ends[top_ + k].to = ccw_top(o.boundary);
            ends[ccw_top(o.boundary)].to = top_ + k;
        }
    }
    return ends;
}

}  // namespace gordian
