#include "mixtau/region.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <thread>
#include <unordered_map>

#include "mixtau/error.hpp"

namespace mixtau {

Box::Box(std::vector<Rational> l) : upper(std::move(l)) {
  if (upper.empty()) throw PreconditionError("box must have at least one coordinate");
  for (const auto& v : upper) {
    if (v <= Rational(0)) throw PreconditionError("box side lengths must be positive, got " + v.to_string());
  }
}

std::vector<std::size_t> Box::grid_shape(std::uint64_t p, unsigned k) const {
  const auto scale = static_cast<std::int64_t>(checked_pow(p, k));
  std::vector<std::size_t> shape;
  shape.reserve(upper.size());
  for (const auto& v : upper) {
    const Rational n = v * Rational(scale);
    if (!n.is_integer()) {
      throw PreconditionError("box side " + v.to_string() + " is not a multiple of 1/" + std::to_string(scale));
    }
    shape.push_back(static_cast<std::size_t>(n.num()) + 1);
  }
  return shape;
}

std::size_t grid_cell_count(const std::vector<std::size_t>& shape) {
  std::size_t n = 1;
  for (auto s : shape) {
    if (s != 0 && n > std::numeric_limits<std::size_t>::max() / s) throw ResourceLimitError("grid too large");
    n *= s;
  }
  return n;
}

std::vector<std::size_t> grid_unflatten(std::size_t flat, const std::vector<std::size_t>& shape) {
  std::vector<std::size_t> idx(shape.size());
  for (std::size_t i = shape.size(); i-- > 0;) {
    idx[i] = flat % shape[i];
    flat /= shape[i];
  }
  return idx;
}

ParamPoint grid_point(const std::vector<std::size_t>& index, std::uint64_t p, unsigned k) {
  const auto den = static_cast<std::int64_t>(checked_pow(p, k));
  ParamPoint c;
  c.coords.reserve(index.size());
  for (auto i : index) c.coords.emplace_back(static_cast<std::int64_t>(i), den);
  return c;
}

namespace {

std::size_t flatten(const std::vector<std::size_t>& idx, const std::vector<std::size_t>& shape) {
  std::size_t flat = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) flat = flat * shape[i] + idx[i];
  return flat;
}

}  // namespace

GridFunction::GridFunction(Box box, std::uint64_t p, unsigned k, std::vector<Rational> values)
    : box_(std::move(box)), p_(p), k_(k), shape_(box_.grid_shape(p, k)), values_(std::move(values)) {
  if (values_.size() != grid_cell_count(shape_)) {
    throw PreconditionError("grid function has " + std::to_string(values_.size()) + " values, expected " +
                            std::to_string(grid_cell_count(shape_)));
  }
}

Rational GridFunction::at(const std::vector<std::uint64_t>& index) const {
  if (index.size() != shape_.size()) throw PreconditionError("grid index has the wrong arity");
  std::size_t flat = 0;
  for (std::size_t i = 0; i < shape_.size(); ++i) {
    if (index[i] >= shape_[i]) return Rational(0);
    flat = flat * shape_[i] + static_cast<std::size_t>(index[i]);
  }
  return values_[flat];
}

std::uint64_t GridFunction::fingerprint() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  for (auto s : shape_) mix(s);
  for (const auto& v : values_) {
    mix(static_cast<std::uint64_t>(v.num()));
    mix(static_cast<std::uint64_t>(v.den()));
  }
  return h;
}

TauEvaluator::TauEvaluator(IdealFamily fam, TauConfig cfg) : fam_(std::move(fam)), cfg_(cfg) { cfg_.validate(); }

IdealGens TauEvaluator::tau(const ParamPoint& c) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(c);
    if (it != cache_.end()) return it->second;
  }
  IdealGens t = tau_mixed(fam_, c, cfg_);
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.emplace(c, std::move(t)).first->second;
}

int chi(const IdealFamily& fam, const IdealGens& I, const ParamPoint& c, const TauConfig& cfg) {
  return ideal_contains(buchberger(I, cfg.limits), tau_mixed(fam, c, cfg)) ? 0 : 1;
}

int chi(const TauEvaluator& eval, const ReducedGB& I, const ParamPoint& c) {
  return ideal_contains(I, eval.tau(c)) ? 0 : 1;
}

int chi_uncached(const TauEvaluator& eval, const ReducedGB& I, const ParamPoint& c) {
  return ideal_contains(I, eval.tau_uncached(c)) ? 0 : 1;
}

GridFunction sample_chi(const TauEvaluator& eval, const ReducedGB& I, const Box& box, unsigned k) {
  const std::uint64_t p = eval.family().ring()->characteristic();
  const auto shape = box.grid_shape(p, k);
  const std::size_t n = grid_cell_count(shape);
  std::vector<Rational> values;
  values.reserve(n);
  for (std::size_t flat = 0; flat < n; ++flat) {
    values.emplace_back(chi(eval, I, grid_point(grid_unflatten(flat, shape), p, k)));
  }
  return GridFunction(box, p, k, std::move(values));
}

std::uint32_t RegionRaster::at(const std::vector<std::size_t>& index) const {
  if (index.size() != shape.size()) throw PreconditionError("raster index has the wrong arity");
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (index[i] >= shape[i]) throw PreconditionError("raster index out of range");
  }
  return cells[flatten(index, shape)];
}

RegionRaster rasterize(const IdealFamily& fam, const Box& box, unsigned k, const TauConfig& cfg, unsigned threads) {
  cfg.validate();
  if (box.size() != fam.size()) {
    throw PreconditionError("box has " + std::to_string(box.size()) + " coordinates, family has " +
                            std::to_string(fam.size()) + " ideals");
  }
  const std::uint64_t p = fam.ring()->characteristic();
  const auto shape = box.grid_shape(p, k);
  const std::size_t n = grid_cell_count(shape);

  std::vector<IdealKey> keys(n);
  std::mutex ideals_mu;
  std::map<IdealKey, IdealGens> ideals;
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_failure{n};
  std::mutex failure_mu;
  std::map<std::size_t, std::exception_ptr> failures;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n || i >= first_failure.load()) return;
      const auto idx = grid_unflatten(i, shape);
      try {
        const ParamPoint c = grid_point(idx, p, k);
        ReducedGB gb = [&] {
          try {
            return buchberger(tau_mixed(fam, c, cfg), cfg.limits);
          } catch (const NotStabilizedError& e) {
            throw NotStabilizedError(e.e_max(), "cell " + c.to_string());
          }
        }();
        keys[i] = ideal_key(gb);
        std::lock_guard<std::mutex> lock(ideals_mu);
        ideals.try_emplace(keys[i], gb.as_ideal());
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        failures.emplace(i, std::current_exception());
        std::size_t cur = first_failure.load();
        while (i < cur && !first_failure.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::size_t>(n, 256))));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (!failures.empty()) std::rethrow_exception(failures.begin()->second);

  RegionRaster raster{box, p, k, shape, std::vector<std::uint32_t>(n), {}, {}};
  std::map<IdealKey, std::uint32_t> index_of;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, fresh] = index_of.try_emplace(keys[i], static_cast<std::uint32_t>(raster.palette.size()));
    if (fresh) {
      raster.palette.push_back(keys[i]);
      raster.palette_ideals.push_back(ideals.at(keys[i]));
    }
    raster.cells[i] = it->second;
  }
  return raster;
}

bool region_membership(const TauEvaluator& eval, const ParamPoint& c, const std::vector<IdealGens>& others,
                       const IdealGens& J) {
  const IdealGens t = eval.tau(c);
  const auto& limits = eval.config().limits;
  for (const auto& I : others) {
    if (ideal_contains(buchberger(I, limits), t)) return false;
  }
  return ideal_contains(buchberger(J, limits), t);
}

std::vector<DigitPoint> staircase_boundary(unsigned depth) {
  if (depth > 20) throw ResourceLimitError("staircase depth " + std::to_string(depth) + " exceeds 20");
  std::vector<DigitPoint> level{DigitPoint{{"1", "2"}}};
  for (unsigned d = 0; d < depth; ++d) {
    std::vector<DigitPoint> next;
    next.reserve(level.size() * 2);
    for (const auto& pt : level) {
      const std::string a = pt.digits[0].substr(0, pt.digits[0].size() - 1);
      const std::string b = pt.digits[1].substr(0, pt.digits[1].size() - 1);
      next.push_back(DigitPoint{{a + "01", b + "22"}});
      next.push_back(DigitPoint{{a + "21", b + "12"}});
    }
    level = std::move(next);
  }
  return level;
}

ParamPoint DigitPoint::value(std::uint64_t p) const {
  ParamPoint c;
  for (const auto& s : digits) {
    std::int64_t num = 0;
    for (char ch : s) {
      const int d = ch >= '0' && ch <= '9' ? ch - '0' : ch - 'a' + 10;
      if (d < 0 || static_cast<std::uint64_t>(d) >= p) throw PreconditionError("invalid base-p digit in " + s);
      num = num * static_cast<std::int64_t>(p) + d;
    }
    c.coords.emplace_back(num, static_cast<std::int64_t>(checked_pow(p, static_cast<unsigned>(s.size()))));
  }
  return c;
}

std::vector<std::string> DigitPoint::to_strings() const {
  std::vector<std::string> out;
  out.reserve(digits.size());
  for (const auto& s : digits) out.push_back("0." + s);
  return out;
}

}  // namespace mixtau
