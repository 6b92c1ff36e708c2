#include "tfc/fixtures.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "tfc/patterns.hpp"

namespace tfc {

ColorSet parse_colors(const std::string& digits) {
  ColorSet s;
  for (char c : digits) {
    if (c < '1' || c > '9') throw std::invalid_argument("bad color digit");
    s.push_back(c - '0');
  }
  std::sort(s.begin(), s.end());
  return s;
}

namespace {

SetColoring from_strings(const std::vector<std::string>& labels) {
  SetColoring f{8, 3, {}};
  for (const auto& l : labels) f.sets.push_back(parse_colors(l));
  return f;
}

// Order: b0 b1 b2 b3 T Bt e1 e2.
const std::vector<std::vector<std::string>>& r_labels() {
  static const std::vector<std::vector<std::string>> t = {
      {"123", "456", "178", "234", "567", "567", "234"},
      {"123", "456", "178", "234", "567", "567", "234", "178"},
      {"123", "456", "178", "234", "678", "578", "235", "146"},
      {"123", "456", "178", "234", "567", "567", "234"},
      {"123", "456", "178", "234", "567", "567", "348", "127"},
      {"123", "456", "378", "124", "578", "568", "246", "137"},
      {"123", "456", "378", "124", "578", "568", "246", "137"},
      {"123", "456", "378", "124", "567", "568", "124", "123"},
  };
  return t;
}

struct LEntry {
  std::vector<std::string> f1, f2;
};

// make_L vertex order; f2 differs from f1 only where the drawing gives a
// bracketed label.
const std::map<std::vector<int>, LEntry>& l_labels() {
  static const std::map<std::vector<int>, LEntry> t = {
      {{1},
       {{"123", "456", "378", "124", "567", "678", "238", "145"},
        {"123", "456", "378", "124", "567", "568", "128", "347"}}},
      {{2},
       {{"123", "456", "378", "124", "567", "578", "348", "127", "346", "125"},
        {"123", "456", "378", "124", "567", "578", "348", "127", "348", "125"}}},
      {{1, 2},
       {{"123", "456", "378", "124", "567", "678", "238", "145", "123", "567", "124", "678"},
        {"123", "456", "378", "124", "567", "568", "128", "347", "138", "567", "148", "256"}}},
      {{1, 2, 1},
       {{"123", "456", "378", "124", "567", "568", "128", "347", "124", "567", "123", "568", "378", "456"},
        {"123", "456", "378", "124", "567", "568", "128", "347", "247", "356", "248", "156", "138", "567"}}},
      {{2, 1, 2},
       {{"123", "456", "378", "124", "567", "578", "348", "127", "346", "125", "167", "258", "128", "345", "126",
         "347"},
        {"123", "456", "378", "124", "567", "578", "348", "127", "346", "125", "167", "258", "128", "345", "128",
         "347"}}},
      {{1, 2, 1, 2},
       {{"123", "456", "378", "124", "567", "678", "138", "245", "148", "567", "248", "367", "237", "156", "123",
         "468", "125", "478"},
        {"123", "456", "378", "124", "567", "568", "128", "347", "124", "567", "123", "568", "356", "478", "378",
         "124", "357", "126"}}},
  };
  return t;
}

SetColoring transported(const std::vector<int>& seq, LVariant variant) {
  LInfo info;
  Graph target = make_L(seq, &info);
  for (const auto& [known, entry] : l_labels()) {
    if (known.size() != seq.size()) continue;
    SetColoring src = from_strings(variant == LVariant::F1 ? entry.f1 : entry.f2);
    for (const auto& m : find_embeddings(make_L(known), target, true)) {
      SetColoring f{8, 3, std::vector<ColorSet>(target.n())};
      for (int p = 0; p < target.n(); ++p) f.sets[m[p]] = src.sets[p];
      if (l_end_patterns(info, f, variant)) return f;
    }
  }
  throw std::logic_error("no stored L table transports to this sequence");
}

}  // namespace

SetColoring r_table(int i) {
  if (i < 0 || i > 7) throw std::invalid_argument("R index must be in 0..7");
  return from_strings(r_labels()[i]);
}

bool l_table_stored(const std::vector<int>& seq) { return l_labels().count(seq) > 0; }

const std::vector<ColorSet>& l_block_colors() {
  static const std::vector<ColorSet> b = [] {
    std::vector<ColorSet> v;
    for (const char* s : {"345", "128", "347", "126", "127", "568", "128", "346", "125", "347", "456", "378"})
      v.push_back(parse_colors(s));
    return v;
  }();
  return b;
}

SetColoring l_table(const std::vector<int>& seq, LVariant variant) {
  if (seq.empty()) throw std::invalid_argument("L_0 has no (8:3)-coloring table");
  for (size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] != 1 && seq[i] != 2) throw std::invalid_argument("L sequence values must be 1 or 2");
    if (i > 0 && seq[i] == seq[i - 1]) throw std::invalid_argument("L table needs an alternating sequence");
  }
  auto it = l_labels().find(seq);
  if (it != l_labels().end()) return from_strings(variant == LVariant::F1 ? it->second.f1 : it->second.f2);
  if (seq.size() <= 4) return transported(seq, variant);

  // Cut the block out right after the first adjacent pair is created.
  const int i = seq[0] == 2 ? 0 : 1;
  std::vector<int> reduced(seq.begin(), seq.begin() + i);
  reduced.insert(reduced.end(), seq.begin() + i + 4, seq.end());
  SetColoring base = l_table(reduced, variant);
  const int pre = l_order({seq.begin(), seq.begin() + i});
  const int u = i == 0 ? 1 : 6, v = i == 0 ? 2 : 7;

  // Color map sending 456 -> f(u), 378 -> f(v), 12 -> the rest.
  std::vector<int> sigma(9, 0);
  const ColorSet &fu = base.sets[u], &fv = base.sets[v];
  ColorSet rest;
  for (int c = 1; c <= 8; ++c)
    if (!std::binary_search(fu.begin(), fu.end(), c) && !std::binary_search(fv.begin(), fv.end(), c)) rest.push_back(c);
  if (fu.size() != 3 || fv.size() != 3 || rest.size() != 2) throw std::logic_error("block pair is not disjoint");
  sigma[4] = fu[0], sigma[5] = fu[1], sigma[6] = fu[2];
  sigma[3] = fv[0], sigma[7] = fv[1], sigma[8] = fv[2];
  sigma[1] = rest[0], sigma[2] = rest[1];

  SetColoring f{8, 3, {}};
  for (int x = 0; x < pre; ++x) f.sets.push_back(base.sets[x]);
  for (const auto& s : l_block_colors()) {
    ColorSet t;
    for (int c : s) t.push_back(sigma[c]);
    std::sort(t.begin(), t.end());
    f.sets.push_back(t);
  }
  for (int x = pre; x < static_cast<int>(base.sets.size()); ++x) f.sets.push_back(base.sets[x]);
  return f;
}

bool l_end_patterns(const LInfo& info, const SetColoring& f, LVariant variant, std::string* why) {
  auto meet = [&](int a, int b) { return static_cast<int>(set_intersection(f.sets[a], f.sets[b]).size()); };
  int wy = meet(info.w, info.y), xz = meet(info.x, info.z);
  bool ok = wy == 0 && (variant == LVariant::F1 ? xz == 0 : (xz >= 1 && xz <= 2));
  if (!ok && why)
    *why = "|f(w)∩f(y)| = " + std::to_string(wy) + ", |f(x)∩f(z)| = " + std::to_string(xz);
  return ok;
}

}  // namespace tfc
