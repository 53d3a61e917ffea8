#include "planedyn/correspondence.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "planedyn/k_promotion.hpp"

namespace planedyn {

const char* to_string(Orientation o) {
  switch (o) {
    case Orientation::identity: return "identity";
    case Orientation::rotate180: return "rotate180";
    case Orientation::complement: return "complement";
    case Orientation::rotate180_complement: return "rotate180_complement";
  }
  return "unknown";
}

const char* to_string(Sweep s) { return s == Sweep::descending ? "descending" : "ascending"; }

std::array<Convention, 8> candidate_conventions() {
  std::array<Convention, 8> out{};
  std::size_t n = 0;
  for (auto o : {Orientation::identity, Orientation::rotate180, Orientation::complement,
                 Orientation::rotate180_complement}) {
    for (auto s : {Sweep::descending, Sweep::ascending}) out[n++] = {o, s};
  }
  return out;
}

namespace {

struct Coord {
  int i, j, k;
};

Coord coord_of(BoxDims d, int x) {
  return {x / (d.b * d.c) + 1, (x / d.c) % d.b + 1, x % d.c + 1};
}

// Toggle words: element order in which the operator toggles.
std::vector<int> rowmotion_word(BoxDims d) {
  std::vector<int> word(static_cast<std::size_t>(d.a * d.b * d.c));
  std::iota(word.begin(), word.end(), 0);
  std::stable_sort(word.begin(), word.end(), [&](int x, int y) {
    const auto p = coord_of(d, x);
    const auto q = coord_of(d, y);
    return p.i + p.j + p.k > q.i + q.j + q.k;
  });
  return word;
}

std::vector<int> promotion_word(BoxDims d, Sweep sweep) {
  std::vector<int> word(static_cast<std::size_t>(d.a * d.b * d.c));
  std::iota(word.begin(), word.end(), 0);
  std::stable_sort(word.begin(), word.end(), [&](int x, int y) {
    const auto p = coord_of(d, x);
    const auto q = coord_of(d, y);
    const int lp = p.i + p.j - p.k;
    const int lq = q.i + q.j - q.k;
    return sweep == Sweep::descending ? lp > lq : lp < lq;
  });
  return word;
}

// Toggle of element (i,j,k) acting on a heights grid (row-major, 0-based).
void toggle_heights(BoxDims d, std::vector<int>& h, int x) {
  const auto [i, j, k] = coord_of(d, x);
  auto at = [&](int r, int s) -> int& { return h[static_cast<std::size_t>((r - 1) * d.b + (s - 1))]; };
  int& cell = at(i, j);
  if (cell == k) {
    const bool below_free = (i == d.a || at(i + 1, j) < k) && (j == d.b || at(i, j + 1) < k);
    if (below_free) cell = k - 1;
  } else if (cell == k - 1) {
    const bool supported = (i == 1 || at(i - 1, j) >= k) && (j == 1 || at(i, j - 1) >= k);
    if (supported) cell = k;
  }
}

}  // namespace

OrderIdeal hyperplane_promotion(const FinitePoset& box, const OrderIdeal& ideal, Sweep sweep) {
  if (!box.box_dims()) throw std::invalid_argument("poset is not a box poset");
  OrderIdeal cur = ideal;
  for (int x : promotion_word(*box.box_dims(), sweep)) cur = toggle(box, cur, x);
  return cur;
}

std::vector<int> rowmotion_conjugator(BoxDims d, Sweep sweep) {
  if (d.a < 1 || d.b < 1 || d.c < 1) return {};
  const int n = d.a * d.b * d.c;
  const auto from = rowmotion_word(d);
  const auto to = promotion_word(d, sweep);
  std::vector<int> pos_from(static_cast<std::size_t>(n));
  std::vector<int> pos_to(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    pos_from[static_cast<std::size_t>(from[static_cast<std::size_t>(p)])] = p;
    pos_to[static_cast<std::size_t>(to[static_cast<std::size_t>(p)])] = p;
  }
  std::vector<std::vector<int>> adjacent(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    const auto [i, j, k] = coord_of(d, x);
    auto link = [&](int y) {
      adjacent[static_cast<std::size_t>(x)].push_back(y);
      adjacent[static_cast<std::size_t>(y)].push_back(x);
    };
    if (i < d.a) link(box_element(d, i + 1, j, k));
    if (j < d.b) link(box_element(d, i, j + 1, k));
    if (k < d.c) link(box_element(d, i, j, k + 1));
  }

  // flips(u) - flips(w) is 1 exactly when the edge u-w must reverse, with u
  // the endpoint toggled first in the rowmotion word.
  constexpr int kUnset = std::numeric_limits<int>::min();
  std::vector<int> flips(static_cast<std::size_t>(n), kUnset);
  std::vector<int> stack = {0};
  flips[0] = 0;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : adjacent[static_cast<std::size_t>(u)]) {
      const auto su = static_cast<std::size_t>(u);
      const auto sw = static_cast<std::size_t>(w);
      const bool reverses = (pos_from[su] < pos_from[sw]) != (pos_to[su] < pos_to[sw]);
      int delta = reverses ? 1 : 0;
      if (pos_from[su] > pos_from[sw]) delta = -delta;
      const int want = flips[su] - delta;
      if (flips[sw] == kUnset) {
        flips[sw] = want;
        stack.push_back(w);
      } else if (flips[sw] != want) {
        throw std::logic_error("toggle words are not conjugate by source flips");
      }
    }
  }
  const int lowest = *std::min_element(flips.begin(), flips.end());
  for (int& f : flips) f -= lowest;

  std::vector<int> word = from;
  std::vector<int> sequence;
  for (;;) {
    const int most = *std::max_element(flips.begin(), flips.end());
    if (most == 0) break;
    auto it = std::find_if(word.begin(), word.end(),
                           [&](int x) { return flips[static_cast<std::size_t>(x)] == most; });
    const int u = *it;
    word.erase(it);
    word.push_back(u);
    --flips[static_cast<std::size_t>(u)];
    sequence.push_back(u);
  }

  std::vector<int> pos_now(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) pos_now[static_cast<std::size_t>(word[static_cast<std::size_t>(p)])] = p;
  for (int x = 0; x < n; ++x) {
    for (int y : adjacent[static_cast<std::size_t>(x)]) {
      const auto sx = static_cast<std::size_t>(x);
      const auto sy = static_cast<std::size_t>(y);
      if ((pos_now[sx] < pos_now[sy]) != (pos_to[sx] < pos_to[sy])) {
        throw std::logic_error("source flips did not reach the promotion word");
      }
    }
  }
  return sequence;
}

BoxCorrespondence::BoxCorrespondence(int a, int b, int c)
    : BoxCorrespondence(a, b, c, calibrated_convention()) {}

BoxCorrespondence::BoxCorrespondence(int a, int b, int c, Convention convention)
    : dims_{a, b, c}, convention_(convention) {
  if (a < 1 || b < 1 || c < 0) throw std::invalid_argument("box needs a, b >= 1 and c >= 0");
  if (a + b + c - 1 > kMaxCeiling) throw std::invalid_argument("box too large for byte-packed tableaux");
  flips_ = rowmotion_conjugator(dims_, convention.sweep);
}

IncreasingTableau BoxCorrespondence::to_tableau(const PlanePartition& pp) const {
  if (!(pp.dims() == dims_)) throw std::invalid_argument("plane partition does not fit this box");
  std::vector<int> h = pp.heights();
  for (int x : flips_) toggle_heights(dims_, h, x);

  const bool rotate = convention_.orientation == Orientation::rotate180 ||
                      convention_.orientation == Orientation::rotate180_complement;
  const bool complement = convention_.orientation == Orientation::complement ||
                          convention_.orientation == Orientation::rotate180_complement;
  Grid rows(static_cast<std::size_t>(dims_.a), std::vector<int>(static_cast<std::size_t>(dims_.b)));
  for (int i = 1; i <= dims_.a; ++i) {
    for (int j = 1; j <= dims_.b; ++j) {
      const int si = rotate ? dims_.a + 1 - i : i;
      const int sj = rotate ? dims_.b + 1 - j : j;
      int pi = h[static_cast<std::size_t>((si - 1) * dims_.b + (sj - 1))];
      if (complement) pi = dims_.c - pi;
      rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = i + j - 1 + pi;
    }
  }
  return IncreasingTableau::from_rows(rows, ceiling());
}

PlanePartition BoxCorrespondence::to_plane_partition(const IncreasingTableau& t) const {
  if (t.shape() != Shape(dims_.a, dims_.b) || t.ceiling() != ceiling()) {
    throw std::invalid_argument("tableau does not match this box");
  }
  const bool rotate = convention_.orientation == Orientation::rotate180 ||
                      convention_.orientation == Orientation::rotate180_complement;
  const bool complement = convention_.orientation == Orientation::complement ||
                          convention_.orientation == Orientation::rotate180_complement;
  std::vector<int> h(static_cast<std::size_t>(dims_.a * dims_.b));
  for (int i = 1; i <= dims_.a; ++i) {
    for (int j = 1; j <= dims_.b; ++j) {
      int pi = t(i, j) - (i + j - 1);
      if (complement) pi = dims_.c - pi;
      const int si = rotate ? dims_.a + 1 - i : i;
      const int sj = rotate ? dims_.b + 1 - j : j;
      h[static_cast<std::size_t>((si - 1) * dims_.b + (sj - 1))] = pi;
    }
  }
  // Validate before the toggles run on it.
  (void)PlanePartition(dims_, h);
  for (auto it = flips_.rbegin(); it != flips_.rend(); ++it) toggle_heights(dims_, h, *it);
  return {dims_, std::move(h)};
}

namespace {

const std::array<BoxDims, 4> kCalibrationBoxes = {{{1, 1, 1}, {2, 2, 1}, {2, 2, 2}, {2, 3, 2}}};

}  // namespace

const Convention& calibrated_convention() {
  static const Convention convention = [] {
    for (const Convention& candidate : candidate_conventions()) {
      bool ok = true;
      for (BoxDims d : kCalibrationBoxes) {
        ok = check_equivariance(d.a, d.b, d.c, candidate).pass;
        if (!ok) break;
      }
      if (ok) return candidate;
    }
    throw std::logic_error("no candidate convention is equivariant on the calibration boxes");
  }();
  return convention;
}

IncreasingTableau pp_to_tableau(const PlanePartition& pp) {
  const BoxDims d = pp.dims();
  return BoxCorrespondence(d.a, d.b, d.c).to_tableau(pp);
}

PlanePartition tableau_to_pp(const IncreasingTableau& t, int c) {
  if (c < 0) throw std::invalid_argument("box height c must be non-negative");
  const Shape s = t.shape();
  if (t.ceiling() != s.rows + s.cols + c - 1) {
    throw std::invalid_argument("tableau ceiling must equal a + b + c - 1");
  }
  return BoxCorrespondence(s.rows, s.cols, c).to_plane_partition(t);
}

PlanePartition rowmotion(const PlanePartition& pp) {
  const BoxDims d = pp.dims();
  if (d.c == 0) return pp;
  const auto box = box_poset(d.a, d.b, d.c);
  return ideal_to_plane_partition(box, rowmotion(box, plane_partition_to_ideal(box, pp)));
}

EquivarianceReport check_equivariance(int a, int b, int c) {
  return check_equivariance(a, b, c, calibrated_convention());
}

EquivarianceReport check_equivariance(int a, int b, int c, Convention convention) {
  const BoxCorrespondence corr(a, b, c, convention);
  EquivarianceReport report{{a, b, c}, 0, true, std::nullopt};
  if (c == 0) {
    // J of the empty poset is {empty}; its image must be the fixed point M.
    const auto pp = PlanePartition::empty(report.box);
    report.states = 1;
    const auto t = corr.to_tableau(pp);
    report.pass = promote(t) == t;
    if (!report.pass) report.counterexample = pp;
    return report;
  }
  const auto box = box_poset(a, b, c);
  Promoter promoter({a, b}, corr.ceiling());
  for_each_plane_partition(report.box, [&](const PlanePartition& pp) {
    ++report.states;
    if (!report.pass) return;
    const auto next = ideal_to_plane_partition(box, rowmotion(box, plane_partition_to_ideal(box, pp)));
    bool ok = false;
    try {
      const auto t = corr.to_tableau(pp);
      std::vector<std::uint8_t> cells(t.cells().begin(), t.cells().end());
      promoter.promote(cells);
      const auto image = corr.to_tableau(next);
      ok = std::equal(cells.begin(), cells.end(), image.cells().begin(), image.cells().end());
    } catch (const InvalidTableau&) {
      // this convention does not even land in Inc^q
    }
    if (!ok) {
      report.pass = false;
      report.counterexample = pp;
    }
  });
  return report;
}

namespace {

u128 checked_mul(u128 x, u128 y) {
  u128 out = 0;
  if (__builtin_mul_overflow(x, y, &out)) throw std::overflow_error("count exceeds 128 bits");
  return out;
}

u128 gcd128(u128 x, u128 y) {
  while (y != 0) {
    const u128 r = x % y;
    x = y;
    y = r;
  }
  return x;
}

}  // namespace

u128 macmahon_count(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("box dimensions must be non-negative");
  // prod_{i,j} (i+j+c-1)/(i+j-1) after telescoping over k; kept reduced.
  u128 num = 1;
  u128 den = 1;
  for (int i = 1; i <= a; ++i) {
    for (int j = 1; j <= b; ++j) {
      u128 n = static_cast<u128>(i + j + c - 1);
      u128 d = static_cast<u128>(i + j - 1);
      const u128 g0 = gcd128(n, d);
      n /= g0;
      d /= g0;
      const u128 g1 = gcd128(num, d);
      const u128 g2 = gcd128(n, den);
      num /= g1;
      d /= g1;
      n /= g2;
      den /= g2;
      num = checked_mul(num, n);
      den = checked_mul(den, d);
    }
  }
  if (den != 1) throw std::logic_error("box count did not reduce to an integer");
  return num;
}

std::string to_string(u128 value) {
  if (value == 0) return "0";
  std::string out;
  while (value != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  return {out.rbegin(), out.rend()};
}

}  // namespace planedyn
