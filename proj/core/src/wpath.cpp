#include "pcp/wpath.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <thread>

#include "pcp/error.hpp"
#include "pcp/limits.hpp"

namespace pcp {

std::vector<int> WeightedDyckPath::heights() const {
  std::vector<int> h(steps.size() + 1, 0);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    h[i + 1] = h[i] + (steps[i].direction == Direction::Up ? 1 : -1);
  }
  return h;
}

std::string to_string(const WeightedDyckPath& path) {
  std::string out;
  for (const WeightedStep& s : path.steps) {
    if (!out.empty()) out += ' ';
    out += s.direction == Direction::Up ? 'U' : 'D';
    out += std::to_string(s.weight);
  }
  return out;
}

WeightedDyckPath parse_path(std::string_view text) {
  WeightedDyckPath path;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!path.steps.empty()) {
      if (text[i] != ' ') throw Error(ErrorCode::ParseError, "expected single space", i);
      ++i;
    }
    if (i >= text.size() || (text[i] != 'U' && text[i] != 'D')) {
      throw Error(ErrorCode::ParseError, "expected U or D", i);
    }
    const Direction dir = text[i] == 'U' ? Direction::Up : Direction::Down;
    ++i;
    if (i >= text.size() || text[i] < '0' || text[i] > '9') {
      throw Error(ErrorCode::ParseError, "expected weight digits", i);
    }
    int weight = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), weight);
    if (ec != std::errc{}) throw Error(ErrorCode::ParseError, "weight out of range", i);
    i = static_cast<std::size_t>(ptr - text.data());
    path.steps.push_back({dir, weight});
  }
  return path;
}

std::string_view constraint_id(Constraint c) {
  switch (c) {
    case Constraint::UpWeightAboveStart: return "C1";
    case Constraint::DownWeightAboveEnd: return "C2";
    case Constraint::RisesDecreasing: return "C3";
    case Constraint::DescentsIncreasing: return "C4";
    case Constraint::PeakTooHeavy: return "C5";
    case Constraint::ValleyTooLight: return "C6";
    case Constraint::NotDyck: return "dyck";
  }
  return "?";
}

ValidationReport validate_weighted_path(const WeightedDyckPath& path) {
  ValidationReport report;
  const auto add = [&](Constraint c, std::size_t i) { report.violations.push_back({c, i}); };
  const auto& s = path.steps;
  const std::vector<int> h = path.heights();

  for (std::size_t i = 0; i < s.size(); ++i) {
    if (h[i + 1] < 0) add(Constraint::NotDyck, i);
  }
  if (h.back() != 0) add(Constraint::NotDyck, s.size());

  for (std::size_t i = 0; i < s.size(); ++i) {
    const WeightedStep cur = s[i];
    if (cur.direction == Direction::Up) {
      if (cur.weight < 0 || cur.weight > h[i]) add(Constraint::UpWeightAboveStart, i);
    } else {
      if (cur.weight < 0 || cur.weight > h[i + 1]) add(Constraint::DownWeightAboveEnd, i);
    }
    if (i == 0) continue;
    const WeightedStep prev = s[i - 1];
    if (prev.direction == Direction::Up && cur.direction == Direction::Up) {
      if (cur.weight < prev.weight) add(Constraint::RisesDecreasing, i);
    } else if (prev.direction == Direction::Down && cur.direction == Direction::Down) {
      if (cur.weight > prev.weight) add(Constraint::DescentsIncreasing, i);
    } else if (prev.direction == Direction::Up) {
      if (prev.weight + cur.weight > h[i]) add(Constraint::PeakTooHeavy, i);
    } else {
      if (prev.weight + cur.weight < h[i]) add(Constraint::ValleyTooLight, i);
    }
  }
  return report;
}

MoveSequence moves_from_path(const WeightedDyckPath& path) {
  MoveSequence moves;
  moves.reserve(path.steps.size());
  int width = 1;
  for (const WeightedStep& s : path.steps) {
    if (s.direction == Direction::Up) {
      moves.push_back(coproduct_at(s.weight));
      ++width;
    } else {
      moves.push_back(product_at(width - 2 - s.weight));
      --width;
    }
  }
  return moves;
}

WeightedDyckPath path_from_moves(std::span<const Move> moves) {
  WeightedDyckPath path;
  path.steps.reserve(moves.size());
  int width = 1;
  for (const Move& m : moves) {
    if (m.kind == OperatorKind::Coproduct) {
      path.steps.push_back(up(m.slot));
      ++width;
    } else {
      path.steps.push_back(down(width - 2 - m.slot));
      --width;
    }
  }
  return path;
}

WeightedDyckPath dw(const Prograph& p) { return path_from_moves(p.canonical_moves()); }

Prograph dw_inverse(const WeightedDyckPath& path) {
  const ValidationReport report = validate_weighted_path(path);
  if (!report.ok()) {
    const Violation& v = report.violations.front();
    throw Error(ErrorCode::InvalidPath,
                "constraint " + std::string(constraint_id(v.constraint)) + " violated by '" +
                    to_string(path) + "'",
                v.step);
  }
  return apply_moves(moves_from_path(path));
}

namespace {

struct PathSearch {
  int n;
  int stop_at;  // visit prefixes of this many steps (2n for full paths)
  const std::function<void(const WeightedDyckPath&)>& visit;
  WeightedDyckPath path;

  // `ups` up-steps used so far, `height` current height.
  void extend(int ups, int height) {
    if (static_cast<int>(path.steps.size()) == stop_at) {
      visit(path);
      return;
    }
    const bool has_prev = !path.steps.empty();
    const WeightedStep prev = has_prev ? path.steps.back() : WeightedStep{};

    if (height > 0) {
      int hi = height - 1;                                                              // C2
      if (has_prev && prev.direction == Direction::Down) hi = std::min(hi, prev.weight);  // C4
      if (has_prev && prev.direction == Direction::Up) {
        hi = std::min(hi, height - prev.weight);                                        // C5
      }
      for (int e = 0; e <= hi; ++e) {
        path.steps.push_back(down(e));
        extend(ups, height - 1);
        path.steps.pop_back();
      }
    }
    if (ups < n) {
      int lo = 0;
      if (has_prev && prev.direction == Direction::Up) lo = prev.weight;                 // C3
      if (has_prev && prev.direction == Direction::Down) {
        lo = std::max(0, height - prev.weight);                                         // C6
      }
      for (int d = lo; d <= height; ++d) {                                              // C1
        path.steps.push_back(up(d));
        extend(ups + 1, height + 1);
        path.steps.pop_back();
      }
    }
  }

  void resume(WeightedDyckPath prefix) {
    int ups = 0;
    for (const WeightedStep& s : prefix.steps) ups += s.direction == Direction::Up;
    const int height = 2 * ups - static_cast<int>(prefix.steps.size());
    path = std::move(prefix);
    path.steps.reserve(stop_at);
    extend(ups, height);
  }
};

}  // namespace

void for_each_constrained_path(int n, const std::function<void(const WeightedDyckPath&)>& visit) {
  check_size(n, "for_each_constrained_path");
  PathSearch search{n, 2 * n, visit, {}};
  search.resume({});
}

std::uint64_t count_constrained_paths(int n) {
  std::uint64_t count = 0;
  for_each_constrained_path(n, [&](const WeightedDyckPath&) { ++count; });
  return count;
}

std::vector<WeightedDyckPath> enumerate_constrained_paths(int n, unsigned threads) {
  check_size(n, "enumerate_constrained_paths");
  std::vector<WeightedDyckPath> out;
  if (threads <= 1) {
    for_each_constrained_path(n, [&](const WeightedDyckPath& p) { out.push_back(p); });
    return out;
  }

  // Prefixes come out of the search in lexicographic order, so joining the
  // per-prefix results in prefix order keeps the output sorted.
  std::vector<WeightedDyckPath> prefixes;
  const std::function<void(const WeightedDyckPath&)> collect =
      [&prefixes](const WeightedDyckPath& p) { prefixes.push_back(p); };
  PathSearch cut{n, std::min(2 * n, 6), collect, {}};
  cut.resume({});

  std::vector<std::vector<WeightedDyckPath>> results(prefixes.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < prefixes.size(); i = next++) {
      auto& bucket = results[i];
      const std::function<void(const WeightedDyckPath&)> keep =
          [&bucket](const WeightedDyckPath& p) { bucket.push_back(p); };
      PathSearch search{n, 2 * n, keep, {}};
      search.resume(prefixes[i]);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (auto& bucket : results) {
    std::move(bucket.begin(), bucket.end(), std::back_inserter(out));
  }
  return out;
}

std::vector<Prograph> enumerate_prographs(int n, unsigned threads) {
  const std::vector<WeightedDyckPath> paths = enumerate_constrained_paths(n, threads);
  std::vector<Prograph> out(paths.size());
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, paths.size() / 256));
  {
    // Contiguous slices; each thread writes only its own range.
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        const std::size_t lo = paths.size() * t / workers;
        const std::size_t hi = paths.size() * (t + 1) / workers;
        for (std::size_t i = lo; i < hi; ++i) out[i] = dw_inverse(paths[i]);
      });
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_primitive(const WeightedDyckPath& path) {
  if (path.steps.empty()) return false;
  const std::vector<int> h = path.heights();
  return std::all_of(h.begin() + 1, h.end() - 1, [](int x) { return x > 0; });
}

std::vector<WeightedDyckPath> primitive_factors(const WeightedDyckPath& path) {
  std::vector<WeightedDyckPath> factors;
  WeightedDyckPath current;
  int height = 0;
  for (const WeightedStep& s : path.steps) {
    current.steps.push_back(s);
    height += s.direction == Direction::Up ? 1 : -1;
    if (height == 0) {
      factors.push_back(std::move(current));
      current = {};
    }
  }
  if (!current.steps.empty()) factors.push_back(std::move(current));
  return factors;
}

}  // namespace pcp
