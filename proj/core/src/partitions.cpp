#include "dt4/partitions.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "dt4/error.hpp"

namespace dt4 {

SolidPartition::SolidPartition(std::vector<Box> boxes) : boxes_(std::move(boxes)) {
  std::sort(boxes_.begin(), boxes_.end());
}

bool SolidPartition::contains(const Box& b) const {
  return std::binary_search(boxes_.begin(), boxes_.end(), b);
}

bool SolidPartition::downward_closed() const {
  for (const Box& b : boxes_)
    for (int i = 0; i < 4; ++i) {
      if (b[static_cast<std::size_t>(i)] == 0) continue;
      Box p = b;
      p[static_cast<std::size_t>(i)] -= 1;
      if (!contains(p)) return false;
    }
  return true;
}

int SolidPartition::diagonal_pairs() const {
  int n = 0;
  for (const Box& b : boxes_)
    if (b[0] == b[1] && b[1] == b[2] && b[0] < b[3]) ++n;
  return n;
}

std::string SolidPartition::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < boxes_.size(); ++i) {
    if (i) os << ";";
    os << boxes_[i][0] << "," << boxes_[i][1] << "," << boxes_[i][2] << "," << boxes_[i][3];
  }
  return os.str();
}

SolidPartition SolidPartition::parse(const std::string& line) {
  std::vector<Box> boxes;
  if (line.empty()) return SolidPartition(std::move(boxes));
  std::stringstream ss(line);
  std::string part;
  while (std::getline(ss, part, ';')) {
    Box b{};
    std::stringstream bs(part);
    std::string coord;
    for (int i = 0; i < 4; ++i) {
      if (!std::getline(bs, coord, ',')) fail(errc::bad_input, "malformed partition line");
      b[static_cast<std::size_t>(i)] = static_cast<int16_t>(std::stoi(coord));
    }
    boxes.push_back(b);
  }
  return SolidPartition(std::move(boxes));
}

// --------------------------------------------------------------------------

GroupAction::GroupAction(std::string spec, std::vector<int> orders,
                         std::vector<std::array<int, 4>> weights)
    : spec_(std::move(spec)), orders_(std::move(orders)), weights_(std::move(weights)) {
  nchars_ = 1;
  for (int r : orders_) {
    if (r < 1) fail(errc::bad_input, "group order must be positive");
    nchars_ *= r;
  }
  if (orders_.size() != weights_.size()) fail(errc::bad_input, "orders/weights shape mismatch");
  if (!su4_condition_holds())
    fail(errc::not_su4, "weight matrix violates the SU(4) condition for " + spec_);
  char_names_.resize(static_cast<std::size_t>(nchars_));
  for (int c = 0; c < nchars_; ++c) {
    std::vector<int> t = char_tuple(c);
    std::string nm;
    for (int d : t) nm += std::to_string(d);
    char_names_[static_cast<std::size_t>(c)] = nm;
  }
}

bool GroupAction::su4_condition_holds() const {
  for (std::size_t a = 0; a < orders_.size(); ++a) {
    int s = 0;
    for (int i = 0; i < 4; ++i) s += weights_[a][static_cast<std::size_t>(i)];
    if (((s % orders_[a]) + orders_[a]) % orders_[a] != 0) return false;
  }
  return true;
}

GroupAction GroupAction::trivial() { return GroupAction("trivial", {}, {}); }

GroupAction GroupAction::zr(int r) {
  if (r < 1) fail(errc::bad_input, "zr:R needs R >= 1");
  if (r == 1) return GroupAction("zr:1", {1}, {{{0, 0, 0, 0}}});
  return GroupAction("zr:" + std::to_string(r), {r}, {{{1, r - 1, 0, 0}}});
}

GroupAction GroupAction::z2z2() {
  // generator order chosen so that the coordinate colours are labelled
  // 10, 01, 11 for the x1, x2, x3 directions
  return GroupAction("z2z2", {2, 2}, {{{1, 0, 1, 0}}, {{0, 1, 1, 0}}});
}

GroupAction GroupAction::z3age2() { return GroupAction("z3age2", {3}, {{{1, 1, 1, 0}}}); }

GroupAction GroupAction::parse(const std::string& spec) {
  if (spec == "trivial") return trivial();
  if (spec == "z2z2") return z2z2();
  if (spec == "z3age2") return z3age2();
  if (spec.rfind("zr:", 0) == 0) {
    int r = std::stoi(spec.substr(3));
    return zr(r);
  }
  if (spec.rfind("custom:", 0) == 0) {
    std::string body = spec.substr(7);
    auto wpos = body.find(";W=");
    if (body.rfind("orders=", 0) != 0 || wpos == std::string::npos)
      fail(errc::bad_input, "custom group spec: custom:orders=r1,r2;W=a,b,c,d;e,f,g,h");
    std::vector<int> orders;
    {
      std::stringstream ss(body.substr(7, wpos - 7));
      std::string tok;
      while (std::getline(ss, tok, ',')) orders.push_back(std::stoi(tok));
    }
    std::vector<std::array<int, 4>> rows;
    {
      std::stringstream ss(body.substr(wpos + 3));
      std::string row;
      while (std::getline(ss, row, ';')) {
        std::array<int, 4> w{};
        std::stringstream rs(row);
        std::string tok;
        for (int i = 0; i < 4; ++i) {
          if (!std::getline(rs, tok, ',')) fail(errc::bad_input, "custom weight row needs 4 entries");
          w[static_cast<std::size_t>(i)] = std::stoi(tok);
        }
        rows.push_back(w);
      }
    }
    return GroupAction(spec, std::move(orders), std::move(rows));
  }
  fail(errc::bad_input, "unknown group spec: " + spec);
}

int GroupAction::char_index(const std::vector<int>& tuple) const {
  int idx = 0;
  for (std::size_t a = 0; a < orders_.size(); ++a) {
    int v = ((tuple[a] % orders_[a]) + orders_[a]) % orders_[a];
    idx = idx * orders_[a] + v;
  }
  return idx;
}

std::vector<int> GroupAction::char_tuple(int index) const {
  std::vector<int> t(orders_.size(), 0);
  for (std::size_t a = orders_.size(); a-- > 0;) {
    t[a] = index % orders_[a];
    index /= orders_[a];
  }
  return t;
}

int GroupAction::char_index_by_name(const std::string& nm) const {
  for (int c = 0; c < nchars_; ++c)
    if (char_names_[static_cast<std::size_t>(c)] == nm) return c;
  fail(errc::bad_input, "unknown character name " + nm);
}

int GroupAction::color_of(const Box& b) const {
  std::vector<int> t(orders_.size());
  for (std::size_t a = 0; a < orders_.size(); ++a) {
    long s = 0;
    for (int i = 0; i < 4; ++i)
      s += static_cast<long>(weights_[a][static_cast<std::size_t>(i)]) * b[static_cast<std::size_t>(i)];
    t[a] = static_cast<int>(((s % orders_[a]) + orders_[a]) % orders_[a]);
  }
  return char_index(t);
}

int GroupAction::color_of_texp(const std::array<int64_t, 4>& e) const {
  std::vector<int> t(orders_.size());
  for (std::size_t a = 0; a < orders_.size(); ++a) {
    long s = 0;
    for (int i = 0; i < 4; ++i)
      s += static_cast<long>(weights_[a][static_cast<std::size_t>(i)]) * e[static_cast<std::size_t>(i)];
    t[a] = static_cast<int>(((s % orders_[a]) + orders_[a]) % orders_[a]);
  }
  return char_index(t);
}

std::vector<std::string> GroupAction::series_var_names() const {
  if (is_trivial()) return {"q"};
  std::vector<std::string> v;
  v.reserve(static_cast<std::size_t>(nchars_));
  for (int c = 0; c < nchars_; ++c) v.push_back("q" + char_names_[static_cast<std::size_t>(c)]);
  return v;
}

// --------------------------------------------------------------------------

ColorProfile color_counts(const SolidPartition& pi, const GroupAction& g) {
  ColorProfile p(static_cast<std::size_t>(g.num_chars()), 0);
  for (const Box& b : pi.boxes()) ++p[static_cast<std::size_t>(g.color_of(b))];
  return p;
}

int sign_exponent(const SolidPartition& pi, const GroupAction* g) {
  int base;
  if (g == nullptr || g->is_trivial()) {
    base = static_cast<int>(pi.size());
  } else {
    base = 0;
    for (const Box& b : pi.boxes())
      if (g->color_of(b) == 0) ++base;
  }
  return base + pi.diagonal_pairs();
}

// --------------------------------------------------------------------------

namespace {

// lexicographic successor scan: a box may be appended if it is larger than
// the last box and all its predecessors are present
void dfs(std::vector<Box>& cur, std::set<Box>& have, int remaining, int bound,
         const std::function<void(const SolidPartition&)>& fn, const ColorProfile* target,
         ColorProfile* counts, const GroupAction* g) {
  if (remaining == 0) {
    fn(SolidPartition(cur));
    return;
  }
  Box start{};
  if (!cur.empty()) {
    start = cur.back();
    // successor in lexicographic order
    for (std::size_t i = 4; i-- > 0;) {
      if (start[i] + 1 < bound || i == 0) {
        start[i] += 1;
        break;
      }
      start[i] = 0;
    }
  }
  auto try_box = [&](const Box& c) {
    for (int i = 0; i < 4; ++i) {
      if (c[static_cast<std::size_t>(i)] == 0) continue;
      Box p = c;
      p[static_cast<std::size_t>(i)] -= 1;
      if (!have.count(p)) return;
    }
    int col = 0;
    if (target) {
      col = g->color_of(c);
      if ((*counts)[static_cast<std::size_t>(col)] + 1 > (*target)[static_cast<std::size_t>(col)])
        return;
    }
    cur.push_back(c);
    have.insert(c);
    if (target) ++(*counts)[static_cast<std::size_t>(col)];
    dfs(cur, have, remaining - 1, bound, fn, target, counts, g);
    if (target) --(*counts)[static_cast<std::size_t>(col)];
    have.erase(c);
    cur.pop_back();
  };

  if (cur.empty()) {
    try_box(Box{0, 0, 0, 0});
    return;
  }
  Box c = start;
  for (;;) {
    bool valid = true;
    for (int i = 0; i < 4; ++i)
      if (c[static_cast<std::size_t>(i)] >= bound) valid = false;
    if (valid) try_box(c);
    // advance c lexicographically within [0,bound)^4
    std::size_t i = 4;
    while (i-- > 0) {
      if (c[i] + 1 < bound) {
        c[i] += 1;
        std::fill(c.begin() + static_cast<long>(i) + 1, c.end(), static_cast<int16_t>(0));
        break;
      }
      if (i == 0) return;
    }
  }
}

}  // namespace

void for_each_partition(int n, const std::function<void(const SolidPartition&)>& fn) {
  if (n < 0) fail(errc::bad_input, "negative partition size");
  if (n == 0) {
    fn(SolidPartition{});
    return;
  }
  std::vector<Box> cur;
  std::set<Box> have;
  dfs(cur, have, n, n, fn, nullptr, nullptr, nullptr);
}

std::vector<SolidPartition> enumerate_solid_partitions(int n, const std::string& cache_dir) {
  if (!cache_dir.empty()) {
    if (auto cached = read_cache(cache_dir, n)) return *cached;
  }
  std::vector<SolidPartition> out;
  for_each_partition(n, [&](const SolidPartition& p) { out.push_back(p); });
  if (!cache_dir.empty()) write_cache(cache_dir, n, out);
  return out;
}

std::vector<SolidPartition> enumerate_colored(const ColorProfile& profile, const GroupAction& g) {
  if (static_cast<int>(profile.size()) != g.num_chars())
    fail(errc::bad_input, "profile length does not match the character count");
  int n = 0;
  for (int32_t c : profile) {
    if (c < 0) fail(errc::bad_input, "negative colour count");
    n += c;
  }
  std::vector<SolidPartition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<Box> cur;
  std::set<Box> have;
  ColorProfile counts(profile.size(), 0);
  dfs(cur, have, n, n, [&](const SolidPartition& p) { out.push_back(p); }, &profile, &counts, &g);
  return out;
}

// --------------------------------------------------------------------------

std::string cache_file(const std::string& dir, int n) {
  return dir + "/partitions/n" + std::to_string(n) + ".txt";
}

void write_cache(const std::string& dir, int n, const std::vector<SolidPartition>& ps) {
  std::filesystem::create_directories(dir + "/partitions");
  std::ofstream os(cache_file(dir, n));
  os << "# n=" << n << " count=" << ps.size() << "\n";
  for (auto& p : ps) os << p.str() << "\n";
}

std::optional<std::vector<SolidPartition>> read_cache(const std::string& dir, int n) {
  std::ifstream is(cache_file(dir, n));
  if (!is) return std::nullopt;
  std::string header;
  if (!std::getline(is, header)) return std::nullopt;
  std::size_t count = 0;
  {
    auto pos = header.find("count=");
    if (pos == std::string::npos) return std::nullopt;
    count = std::stoul(header.substr(pos + 6));
  }
  std::vector<SolidPartition> out;
  out.reserve(count);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    out.push_back(SolidPartition::parse(line));
  }
  if (out.size() != count) return std::nullopt;  // stale or truncated cache
  return out;
}

}  // namespace dt4
