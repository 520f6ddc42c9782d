#include "tricub/weighted_matching.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <map>
#include <utility>

namespace tricub {
namespace {

// Primal-dual blossom algorithm. Dual variables are stored doubled so that
// integer weights keep every slack integral and every type-3 delta even.
// Endpoints are numbered 2k (edges[k].u) and 2k+1 (edges[k].v).
class Blossom {
 public:
  Blossom(int n, const std::vector<WeightedEdge>& edges, bool max_cardinality)
      : n_(n), edges_(edges), max_cardinality_(max_cardinality) {}

  std::vector<int> solve();

 private:
  int n_;
  const std::vector<WeightedEdge>& edges_;
  bool max_cardinality_;

  std::vector<int> endpoint_;
  std::vector<std::vector<int>> neighbend_;
  std::vector<int> mate_;
  std::vector<int> label_;
  std::vector<int> labelend_;
  std::vector<int> inblossom_;
  std::vector<int> blossomparent_;
  std::vector<std::vector<int>> blossomchilds_;
  std::vector<int> blossombase_;
  std::vector<std::vector<int>> blossomendps_;
  std::vector<int> bestedge_;
  std::vector<std::vector<int>> blossombestedges_;
  std::vector<bool> has_bestedges_;
  std::vector<int> unusedblossoms_;
  std::vector<std::int64_t> dualvar_;
  std::vector<bool> allowedge_;
  std::vector<int> queue_;

  std::int64_t slack(int k) const {
    const auto& e = edges_[static_cast<size_t>(k)];
    return dualvar_[static_cast<size_t>(e.u)] + dualvar_[static_cast<size_t>(e.v)] - 2 * e.weight;
  }

  void leaves(int b, std::vector<int>& out) const {
    if (b < n_) {
      out.push_back(b);
      return;
    }
    for (int t : blossomchilds_[static_cast<size_t>(b)]) leaves(t, out);
  }

  std::vector<int> leaves(int b) const {
    std::vector<int> out;
    leaves(b, out);
    return out;
  }

  void assign_label(int w, int t, int p);
  int scan_blossom(int v, int w);
  void add_blossom(int base, int k);
  void expand_blossom(int b, bool endstage);
  void augment_blossom(int b, int v);
  void augment_matching(int k);
};

void Blossom::assign_label(int w, int t, int p) {
  const int b = inblossom_[static_cast<size_t>(w)];
  label_[static_cast<size_t>(w)] = label_[static_cast<size_t>(b)] = t;
  labelend_[static_cast<size_t>(w)] = labelend_[static_cast<size_t>(b)] = p;
  bestedge_[static_cast<size_t>(w)] = bestedge_[static_cast<size_t>(b)] = -1;
  if (t == 1) {
    leaves(b, queue_);
  } else if (t == 2) {
    const int base = blossombase_[static_cast<size_t>(b)];
    const int m = mate_[static_cast<size_t>(base)];
    assign_label(endpoint_[static_cast<size_t>(m)], 1, m ^ 1);
  }
}

int Blossom::scan_blossom(int v, int w) {
  std::vector<int> path;
  int base = -1;
  while (v != -1 || w != -1) {
    int b = inblossom_[static_cast<size_t>(v)];
    if (label_[static_cast<size_t>(b)] & 4) {
      base = blossombase_[static_cast<size_t>(b)];
      break;
    }
    path.push_back(b);
    label_[static_cast<size_t>(b)] = 5;
    if (labelend_[static_cast<size_t>(b)] == -1) {
      v = -1;
    } else {
      v = endpoint_[static_cast<size_t>(labelend_[static_cast<size_t>(b)])];
      b = inblossom_[static_cast<size_t>(v)];
      v = endpoint_[static_cast<size_t>(labelend_[static_cast<size_t>(b)])];
    }
    if (w != -1) std::swap(v, w);
  }
  for (int b : path) label_[static_cast<size_t>(b)] = 1;
  return base;
}

void Blossom::add_blossom(int base, int k) {
  int v = edges_[static_cast<size_t>(k)].u;
  int w = edges_[static_cast<size_t>(k)].v;
  const int bb = inblossom_[static_cast<size_t>(base)];
  int bv = inblossom_[static_cast<size_t>(v)];
  int bw = inblossom_[static_cast<size_t>(w)];
  const int b = unusedblossoms_.back();
  unusedblossoms_.pop_back();
  const auto bi = static_cast<size_t>(b);
  blossombase_[bi] = base;
  blossomparent_[bi] = -1;
  blossomparent_[static_cast<size_t>(bb)] = b;
  std::vector<int> path;
  std::vector<int> endps;
  while (bv != bb) {
    blossomparent_[static_cast<size_t>(bv)] = b;
    path.push_back(bv);
    endps.push_back(labelend_[static_cast<size_t>(bv)]);
    v = endpoint_[static_cast<size_t>(labelend_[static_cast<size_t>(bv)])];
    bv = inblossom_[static_cast<size_t>(v)];
  }
  path.push_back(bb);
  std::reverse(path.begin(), path.end());
  std::reverse(endps.begin(), endps.end());
  endps.push_back(2 * k);
  while (bw != bb) {
    blossomparent_[static_cast<size_t>(bw)] = b;
    path.push_back(bw);
    endps.push_back(labelend_[static_cast<size_t>(bw)] ^ 1);
    w = endpoint_[static_cast<size_t>(labelend_[static_cast<size_t>(bw)])];
    bw = inblossom_[static_cast<size_t>(w)];
  }
  blossomchilds_[bi] = path;
  blossomendps_[bi] = endps;
  label_[bi] = 1;
  labelend_[bi] = labelend_[static_cast<size_t>(bb)];
  dualvar_[bi] = 0;
  for (int leaf : leaves(b)) {
    if (label_[static_cast<size_t>(inblossom_[static_cast<size_t>(leaf)])] == 2) queue_.push_back(leaf);
    inblossom_[static_cast<size_t>(leaf)] = b;
  }
  std::vector<int> bestedgeto(static_cast<size_t>(2 * n_), -1);
  for (int sub : path) {
    const auto si = static_cast<size_t>(sub);
    std::vector<std::vector<int>> nblists;
    if (!has_bestedges_[si]) {
      for (int leaf : leaves(sub)) {
        std::vector<int> lst;
        for (int p : neighbend_[static_cast<size_t>(leaf)]) lst.push_back(p / 2);
        nblists.push_back(std::move(lst));
      }
    } else {
      nblists.push_back(blossombestedges_[si]);
    }
    for (const auto& lst : nblists) {
      for (int kk : lst) {
        int i = edges_[static_cast<size_t>(kk)].u;
        int j = edges_[static_cast<size_t>(kk)].v;
        if (inblossom_[static_cast<size_t>(j)] == b) std::swap(i, j);
        const int bj = inblossom_[static_cast<size_t>(j)];
        const auto bji = static_cast<size_t>(bj);
        if (bj != b && label_[bji] == 1 &&
            (bestedgeto[bji] == -1 || slack(kk) < slack(bestedgeto[bji]))) {
          bestedgeto[bji] = kk;
        }
      }
    }
    blossombestedges_[si].clear();
    has_bestedges_[si] = false;
    bestedge_[si] = -1;
  }
  blossombestedges_[bi].clear();
  for (int kk : bestedgeto) {
    if (kk != -1) blossombestedges_[bi].push_back(kk);
  }
  has_bestedges_[bi] = true;
  bestedge_[bi] = -1;
  for (int kk : blossombestedges_[bi]) {
    if (bestedge_[bi] == -1 || slack(kk) < slack(bestedge_[bi])) bestedge_[bi] = kk;
  }
}

void Blossom::expand_blossom(int b, bool endstage) {
  const auto bi = static_cast<size_t>(b);
  const std::vector<int> childs = blossomchilds_[bi];
  for (int s : childs) {
    blossomparent_[static_cast<size_t>(s)] = -1;
    if (s < n_) {
      inblossom_[static_cast<size_t>(s)] = s;
    } else if (endstage && dualvar_[static_cast<size_t>(s)] == 0) {
      expand_blossom(s, endstage);
    } else {
      for (int leaf : leaves(s)) inblossom_[static_cast<size_t>(leaf)] = s;
    }
  }
  if (!endstage && label_[bi] == 2) {
    const auto& ch = blossomchilds_[bi];
    const auto& ep = blossomendps_[bi];
    const int size = static_cast<int>(ch.size());
    auto at = [size](const std::vector<int>& vec, int idx) {
      return vec[static_cast<size_t>(((idx % size) + size) % size)];
    };
    const int entrychild = inblossom_[static_cast<size_t>(endpoint_[static_cast<size_t>(labelend_[bi] ^ 1)])];
    int j = static_cast<int>(std::find(ch.begin(), ch.end(), entrychild) - ch.begin());
    int jstep;
    int endptrick;
    if (j & 1) {
      j -= size;
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    int p = labelend_[bi];
    while (j != 0) {
      label_[static_cast<size_t>(endpoint_[static_cast<size_t>(p ^ 1)])] = 0;
      label_[static_cast<size_t>(endpoint_[static_cast<size_t>(at(ep, j - endptrick) ^ endptrick ^ 1)])] = 0;
      assign_label(endpoint_[static_cast<size_t>(p ^ 1)], 2, p);
      allowedge_[static_cast<size_t>(at(ep, j - endptrick) / 2)] = true;
      j += jstep;
      p = at(ep, j - endptrick) ^ endptrick;
      allowedge_[static_cast<size_t>(p / 2)] = true;
      j += jstep;
    }
    int bv = at(ch, j);
    label_[static_cast<size_t>(endpoint_[static_cast<size_t>(p ^ 1)])] = label_[static_cast<size_t>(bv)] = 2;
    labelend_[static_cast<size_t>(endpoint_[static_cast<size_t>(p ^ 1)])] = labelend_[static_cast<size_t>(bv)] = p;
    bestedge_[static_cast<size_t>(bv)] = -1;
    j += jstep;
    while (at(ch, j) != entrychild) {
      bv = at(ch, j);
      if (label_[static_cast<size_t>(bv)] == 1) {
        j += jstep;
        continue;
      }
      int found = -1;
      for (int leaf : leaves(bv)) {
        if (label_[static_cast<size_t>(leaf)] != 0) {
          found = leaf;
          break;
        }
      }
      if (found != -1) {
        label_[static_cast<size_t>(found)] = 0;
        label_[static_cast<size_t>(endpoint_[static_cast<size_t>(mate_[static_cast<size_t>(blossombase_[static_cast<size_t>(bv)])])])] = 0;
        assign_label(found, 2, labelend_[static_cast<size_t>(found)]);
      }
      j += jstep;
    }
  }
  label_[bi] = labelend_[bi] = -1;
  blossomchilds_[bi].clear();
  blossomendps_[bi].clear();
  blossombase_[bi] = -1;
  blossombestedges_[bi].clear();
  has_bestedges_[bi] = false;
  bestedge_[bi] = -1;
  unusedblossoms_.push_back(b);
}

void Blossom::augment_blossom(int b, int v) {
  const auto bi = static_cast<size_t>(b);
  int t = v;
  while (blossomparent_[static_cast<size_t>(t)] != b) t = blossomparent_[static_cast<size_t>(t)];
  if (t >= n_) augment_blossom(t, v);
  auto& ch = blossomchilds_[bi];
  auto& ep = blossomendps_[bi];
  const int size = static_cast<int>(ch.size());
  auto idx = [size](int x) { return static_cast<size_t>(((x % size) + size) % size); };
  const int i = static_cast<int>(std::find(ch.begin(), ch.end(), t) - ch.begin());
  int j = i;
  int jstep;
  int endptrick;
  if (i & 1) {
    j -= size;
    jstep = 1;
    endptrick = 0;
  } else {
    jstep = -1;
    endptrick = 1;
  }
  while (j != 0) {
    j += jstep;
    t = ch[idx(j)];
    const int p = ep[idx(j - endptrick)] ^ endptrick;
    if (t >= n_) augment_blossom(t, endpoint_[static_cast<size_t>(p)]);
    j += jstep;
    t = ch[idx(j)];
    if (t >= n_) augment_blossom(t, endpoint_[static_cast<size_t>(p ^ 1)]);
    mate_[static_cast<size_t>(endpoint_[static_cast<size_t>(p)])] = p ^ 1;
    mate_[static_cast<size_t>(endpoint_[static_cast<size_t>(p ^ 1)])] = p;
  }
  std::rotate(ch.begin(), ch.begin() + i, ch.end());
  std::rotate(ep.begin(), ep.begin() + i, ep.end());
  blossombase_[bi] = blossombase_[static_cast<size_t>(ch[0])];
}

void Blossom::augment_matching(int k) {
  const int v = edges_[static_cast<size_t>(k)].u;
  const int w = edges_[static_cast<size_t>(k)].v;
  const std::pair<int, int> starts[2] = {{v, 2 * k + 1}, {w, 2 * k}};
  for (auto [s, p] : starts) {
    while (true) {
      const int bs = inblossom_[static_cast<size_t>(s)];
      if (bs >= n_) augment_blossom(bs, s);
      mate_[static_cast<size_t>(s)] = p;
      if (labelend_[static_cast<size_t>(bs)] == -1) break;
      const int t = endpoint_[static_cast<size_t>(labelend_[static_cast<size_t>(bs)])];
      const int bt = inblossom_[static_cast<size_t>(t)];
      s = endpoint_[static_cast<size_t>(labelend_[static_cast<size_t>(bt)])];
      const int j = endpoint_[static_cast<size_t>(labelend_[static_cast<size_t>(bt)] ^ 1)];
      if (bt >= n_) augment_blossom(bt, j);
      mate_[static_cast<size_t>(j)] = labelend_[static_cast<size_t>(bt)];
      p = labelend_[static_cast<size_t>(bt)] ^ 1;
    }
  }
}

std::vector<int> Blossom::solve() {
  const int nedge = static_cast<int>(edges_.size());
  if (n_ == 0 || nedge == 0) return std::vector<int>(static_cast<size_t>(n_), -1);
  std::int64_t maxweight = 0;
  for (const auto& e : edges_) maxweight = std::max(maxweight, e.weight);
  const auto n2 = static_cast<size_t>(2 * n_);
  endpoint_.resize(static_cast<size_t>(2 * nedge));
  neighbend_.assign(static_cast<size_t>(n_), {});
  for (int k = 0; k < nedge; ++k) {
    const auto& e = edges_[static_cast<size_t>(k)];
    endpoint_[static_cast<size_t>(2 * k)] = e.u;
    endpoint_[static_cast<size_t>(2 * k + 1)] = e.v;
    neighbend_[static_cast<size_t>(e.u)].push_back(2 * k + 1);
    neighbend_[static_cast<size_t>(e.v)].push_back(2 * k);
  }
  mate_.assign(static_cast<size_t>(n_), -1);
  label_.assign(n2, 0);
  labelend_.assign(n2, -1);
  inblossom_.resize(static_cast<size_t>(n_));
  for (int i = 0; i < n_; ++i) inblossom_[static_cast<size_t>(i)] = i;
  blossomparent_.assign(n2, -1);
  blossomchilds_.assign(n2, {});
  blossombase_.assign(n2, -1);
  for (int i = 0; i < n_; ++i) blossombase_[static_cast<size_t>(i)] = i;
  blossomendps_.assign(n2, {});
  bestedge_.assign(n2, -1);
  blossombestedges_.assign(n2, {});
  has_bestedges_.assign(n2, false);
  unusedblossoms_.clear();
  for (int i = n_; i < 2 * n_; ++i) unusedblossoms_.push_back(i);
  dualvar_.assign(n2, 0);
  for (int i = 0; i < n_; ++i) dualvar_[static_cast<size_t>(i)] = maxweight;
  allowedge_.assign(static_cast<size_t>(nedge), false);

  for (int stage = 0; stage < n_; ++stage) {
    std::fill(label_.begin(), label_.end(), 0);
    std::fill(bestedge_.begin(), bestedge_.end(), -1);
    for (size_t b = static_cast<size_t>(n_); b < n2; ++b) {
      blossombestedges_[b].clear();
      has_bestedges_[b] = false;
    }
    std::fill(allowedge_.begin(), allowedge_.end(), false);
    queue_.clear();
    for (int v = 0; v < n_; ++v) {
      if (mate_[static_cast<size_t>(v)] == -1 &&
          label_[static_cast<size_t>(inblossom_[static_cast<size_t>(v)])] == 0) {
        assign_label(v, 1, -1);
      }
    }
    bool augmented = false;
    while (true) {
      while (!queue_.empty() && !augmented) {
        const int v = queue_.back();
        queue_.pop_back();
        for (int p : neighbend_[static_cast<size_t>(v)]) {
          const int k = p / 2;
          const int w = endpoint_[static_cast<size_t>(p)];
          const auto ku = static_cast<size_t>(k);
          if (inblossom_[static_cast<size_t>(v)] == inblossom_[static_cast<size_t>(w)]) continue;
          std::int64_t kslack = 0;
          if (!allowedge_[ku]) {
            kslack = slack(k);
            if (kslack <= 0) allowedge_[ku] = true;
          }
          const int bw = inblossom_[static_cast<size_t>(w)];
          if (allowedge_[ku]) {
            if (label_[static_cast<size_t>(bw)] == 0) {
              assign_label(w, 2, p ^ 1);
            } else if (label_[static_cast<size_t>(bw)] == 1) {
              const int base = scan_blossom(v, w);
              if (base >= 0) {
                add_blossom(base, k);
              } else {
                augment_matching(k);
                augmented = true;
                break;
              }
            } else if (label_[static_cast<size_t>(w)] == 0) {
              label_[static_cast<size_t>(w)] = 2;
              labelend_[static_cast<size_t>(w)] = p ^ 1;
            }
          } else if (label_[static_cast<size_t>(bw)] == 1) {
            const int b = inblossom_[static_cast<size_t>(v)];
            if (bestedge_[static_cast<size_t>(b)] == -1 || kslack < slack(bestedge_[static_cast<size_t>(b)])) {
              bestedge_[static_cast<size_t>(b)] = k;
            }
          } else if (label_[static_cast<size_t>(w)] == 0) {
            if (bestedge_[static_cast<size_t>(w)] == -1 || kslack < slack(bestedge_[static_cast<size_t>(w)])) {
              bestedge_[static_cast<size_t>(w)] = k;
            }
          }
        }
      }
      if (augmented) break;

      int deltatype = -1;
      std::int64_t delta = 0;
      int deltaedge = -1;
      int deltablossom = -1;
      if (!max_cardinality_) {
        deltatype = 1;
        delta = *std::min_element(dualvar_.begin(), dualvar_.begin() + n_);
      }
      for (int v = 0; v < n_; ++v) {
        if (label_[static_cast<size_t>(inblossom_[static_cast<size_t>(v)])] == 0 &&
            bestedge_[static_cast<size_t>(v)] != -1) {
          const std::int64_t d = slack(bestedge_[static_cast<size_t>(v)]);
          if (deltatype == -1 || d < delta) {
            delta = d;
            deltatype = 2;
            deltaedge = bestedge_[static_cast<size_t>(v)];
          }
        }
      }
      for (int b = 0; b < 2 * n_; ++b) {
        const auto bi = static_cast<size_t>(b);
        if (blossomparent_[bi] == -1 && label_[bi] == 1 && bestedge_[bi] != -1) {
          const std::int64_t kslack = slack(bestedge_[bi]);
          assert(kslack % 2 == 0);
          const std::int64_t d = kslack / 2;
          if (deltatype == -1 || d < delta) {
            delta = d;
            deltatype = 3;
            deltaedge = bestedge_[bi];
          }
        }
      }
      for (int b = n_; b < 2 * n_; ++b) {
        const auto bi = static_cast<size_t>(b);
        if (blossombase_[bi] >= 0 && blossomparent_[bi] == -1 && label_[bi] == 2 &&
            (deltatype == -1 || dualvar_[bi] < delta)) {
          delta = dualvar_[bi];
          deltatype = 4;
          deltablossom = b;
        }
      }
      if (deltatype == -1) {
        deltatype = 1;
        delta = std::max<std::int64_t>(0, *std::min_element(dualvar_.begin(), dualvar_.begin() + n_));
      }
      for (int v = 0; v < n_; ++v) {
        const int lb = label_[static_cast<size_t>(inblossom_[static_cast<size_t>(v)])];
        if (lb == 1) {
          dualvar_[static_cast<size_t>(v)] -= delta;
        } else if (lb == 2) {
          dualvar_[static_cast<size_t>(v)] += delta;
        }
      }
      for (int b = n_; b < 2 * n_; ++b) {
        const auto bi = static_cast<size_t>(b);
        if (blossombase_[bi] >= 0 && blossomparent_[bi] == -1) {
          if (label_[bi] == 1) {
            dualvar_[bi] += delta;
          } else if (label_[bi] == 2) {
            dualvar_[bi] -= delta;
          }
        }
      }
      if (deltatype == 1) {
        break;
      } else if (deltatype == 2) {
        allowedge_[static_cast<size_t>(deltaedge)] = true;
        int i = edges_[static_cast<size_t>(deltaedge)].u;
        int j = edges_[static_cast<size_t>(deltaedge)].v;
        if (label_[static_cast<size_t>(inblossom_[static_cast<size_t>(i)])] == 0) std::swap(i, j);
        queue_.push_back(i);
      } else if (deltatype == 3) {
        allowedge_[static_cast<size_t>(deltaedge)] = true;
        queue_.push_back(edges_[static_cast<size_t>(deltaedge)].u);
      } else {
        expand_blossom(deltablossom, false);
      }
    }
    if (!augmented) break;
    for (int b = n_; b < 2 * n_; ++b) {
      const auto bi = static_cast<size_t>(b);
      if (blossomparent_[bi] == -1 && blossombase_[bi] >= 0 && label_[bi] == 1 && dualvar_[bi] == 0) {
        expand_blossom(b, true);
      }
    }
  }
  std::vector<int> result(static_cast<size_t>(n_), -1);
  for (int v = 0; v < n_; ++v) {
    if (mate_[static_cast<size_t>(v)] >= 0) {
      result[static_cast<size_t>(v)] = endpoint_[static_cast<size_t>(mate_[static_cast<size_t>(v)])];
    }
  }
  return result;
}

}  // namespace

std::vector<int> max_weight_matching(int vertex_count, const std::vector<WeightedEdge>& edges,
                                     bool max_cardinality) {
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count || e.u == e.v) {
      throw std::invalid_argument("max_weight_matching: bad edge");
    }
  }
  Blossom b(vertex_count, edges, max_cardinality);
  return b.solve();
}

std::optional<std::vector<int>> min_weight_perfect_matching(int vertex_count,
                                                            const std::vector<WeightedEdge>& edges) {
  if (vertex_count % 2 != 0) return std::nullopt;
  if (vertex_count == 0) return std::vector<int>{};
  // Keep only the lightest copy of each pair; the blossom reports vertex
  // mates, so parallel copies must be resolved up front.
  std::map<std::pair<int, int>, int> best;
  for (int k = 0; k < static_cast<int>(edges.size()); ++k) {
    const auto& e = edges[static_cast<size_t>(k)];
    auto key = std::minmax(e.u, e.v);
    auto it = best.find(key);
    if (it == best.end() || e.weight < edges[static_cast<size_t>(it->second)].weight) best[key] = k;
  }
  std::int64_t maxw = 0;
  for (const auto& [key, k] : best) maxw = std::max(maxw, edges[static_cast<size_t>(k)].weight);
  std::vector<WeightedEdge> flipped;
  std::vector<int> origin;
  for (const auto& [key, k] : best) {
    flipped.push_back({key.first, key.second, maxw + 1 - edges[static_cast<size_t>(k)].weight});
    origin.push_back(k);
  }
  auto mate = max_weight_matching(vertex_count, flipped, true);
  std::vector<int> chosen;
  for (int v = 0; v < vertex_count; ++v) {
    const int w = mate[static_cast<size_t>(v)];
    if (w < 0) return std::nullopt;
    if (v < w) {
      auto it = best.find(std::minmax(v, w));
      chosen.push_back(it->second);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  (void)origin;
  return chosen;
}

}  // namespace tricub
