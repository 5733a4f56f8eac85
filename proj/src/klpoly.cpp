#include "klimm/klpoly.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unistd.h>

namespace klimm {

namespace {

/// w * s_i: swaps the entries in positions i and i+1.
Permutation times_simple(const Permutation &w, int i) {
  std::vector<int> word(w.word().begin(), w.word().end());
  std::swap(word[static_cast<std::size_t>(i - 1)], word[static_cast<std::size_t>(i)]);
  return Permutation(std::move(word));
}

bool has_right_descent(const Permutation &w, int i) { return w(i) > w(i + 1); }

int first_right_descent(const Permutation &w) {
  for (int i = 1; i < w.size(); ++i)
    if (has_right_descent(w, i))
      return i;
  return 0;
}

} // namespace

void KLCache::bind_size(int n) {
  if (n_ == 0)
    n_ = n;
  if (n_ != n)
    throw SizeMismatch("KLCache is bound to S_" + std::to_string(n_) +
                       ", got a permutation of size " + std::to_string(n));
  if (elements_.empty())
    elements_ = all_permutations(n_);
}

IntPolynomial KLCache::lookup_unlocked(const Permutation &x, const Permutation &y) const {
  auto it = table_.find(PermPair{x, y});
  return it == table_.end() ? IntPolynomial{} : it->second;
}

IntPolynomial KLCache::get(const Permutation &x, const Permutation &y) {
  if (x.size() != y.size())
    throw SizeMismatch("kl_polynomial: permutations of different sizes");
  {
    std::shared_lock lock(mutex_);
    if (done_.contains(y)) {
      ++hits_;
      return lookup_unlocked(x, y);
    }
  }
  std::unique_lock lock(mutex_);
  ++misses_;
  bind_size(y.size());
  compute_column(y);
  return lookup_unlocked(x, y);
}

void KLCache::precompute(int n) {
  std::unique_lock lock(mutex_);
  bind_size(n);
  for (const auto &w : elements_)
    compute_column(w);
}

std::size_t KLCache::entries() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

std::size_t KLCache::columns() const {
  std::shared_lock lock(mutex_);
  return done_.size();
}

// Right-descent recursion. For s = s_i with ws < w and v = ws:
//   P_{x,w} = q^{1-c} P_{xs,v} + q^c P_{x,v}
//             - sum_{z : zs < z} mu(z,v) q^{(l(w)-l(z))/2} P_{x,z},
// where c = 1 if xs < x and 0 otherwise.
void KLCache::compute_column(const Permutation &w) {
  if (done_.contains(w))
    return;
  const int i = first_right_descent(w);
  if (i == 0) {
    table_[PermPair{w, w}] = IntPolynomial::constant(1);
    done_.insert(w);
    return;
  }
  const Permutation v = times_simple(w, i);
  compute_column(v);
  const int len_v = v.length();
  const int len_w = len_v + 1;

  struct MuTerm {
    Permutation z;
    BigInt mu;
    int shift;
  };
  std::vector<MuTerm> mu_terms;
  for (const auto &z : elements_) {
    if (z == v || !has_right_descent(z, i))
      continue;
    const int gap = len_v - z.length();
    if (gap <= 0 || gap % 2 == 0)
      continue;
    const IntPolynomial p = lookup_unlocked(z, v);
    if (p.is_zero())
      continue;
    BigInt mu = p.coeff((gap - 1) / 2);
    if (mu == 0)
      continue;
    compute_column(z);
    mu_terms.push_back({z, mu, (len_w - z.length()) / 2});
  }

  for (const auto &x : elements_) {
    if (!bruhat_leq(x, w))
      continue;
    const Permutation xs = times_simple(x, i);
    const int c = has_right_descent(x, i) ? 1 : 0;
    IntPolynomial p = lookup_unlocked(xs, v).shifted(1 - c);
    p += lookup_unlocked(x, v).shifted(c);
    for (const auto &term : mu_terms) {
      const IntPolynomial pxz = lookup_unlocked(x, term.z);
      if (!pxz.is_zero())
        p -= term.mu * pxz.shifted(term.shift);
    }
    if (p.is_zero() || p.coeff(0) != 1)
      throw std::logic_error("KL recursion produced a polynomial without constant term 1 at " +
                             x.str() + "|" + w.str());
    for (const auto &coef : p.coeffs())
      if (coef < 0)
        throw std::logic_error("KL recursion produced a negative coefficient at " + x.str() +
                               "|" + w.str());
    table_[PermPair{x, w}] = std::move(p);
  }
  done_.insert(w);
}

IntPolynomial kl_polynomial(const Permutation &x, const Permutation &y, KLCache &cache) {
  return cache.get(x, y);
}

BigInt kl_at_one(const Permutation &x, const Permutation &y, KLCache &cache) {
  return cache.get(x, y).at_one();
}

namespace {

nlohmann::json coeffs_to_json(const IntPolynomial &p) {
  auto arr = nlohmann::json::array();
  for (const auto &c : p.coeffs()) {
    if (c.fits_slong_p())
      arr.push_back(c.get_si());
    else
      arr.push_back(c.get_str());
  }
  return arr;
}

IntPolynomial coeffs_from_json(const nlohmann::json &arr) {
  std::vector<BigInt> cs;
  for (const auto &c : arr) {
    if (c.is_string())
      cs.emplace_back(c.get<std::string>());
    else
      cs.emplace_back(c.get<long>());
  }
  return IntPolynomial(std::move(cs));
}

} // namespace

void KLCache::save(const std::filesystem::path &path) const {
  nlohmann::json doc;
  {
    std::shared_lock lock(mutex_);
    doc["format_version"] = kFormatVersion;
    doc["n"] = n_;
    std::vector<std::string> cols;
    for (const auto &y : done_)
      cols.push_back(y.str());
    std::sort(cols.begin(), cols.end());
    doc["columns"] = cols;
    std::map<std::string, nlohmann::json> sorted;
    for (const auto &[key, poly] : table_)
      sorted[key.x.str() + "|" + key.y.str()] = coeffs_to_json(poly);
    doc["entries"] = sorted;
  }
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp);
    if (!out)
      throw std::runtime_error("cannot write KL cache: " + tmp.string());
    out << doc.dump() << '\n';
    if (!out)
      throw std::runtime_error("failed writing KL cache: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void KLCache::load(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot read KL cache: " + path.string());
  const auto doc = nlohmann::json::parse(in);
  if (doc.at("format_version").get<int>() != kFormatVersion)
    throw std::runtime_error("unsupported KL cache format version");
  const int n = doc.at("n").get<int>();
  std::unique_lock lock(mutex_);
  if (n == 0)
    return;
  bind_size(n);
  for (const auto &[key, coeffs] : doc.at("entries").items()) {
    const auto bar = key.find('|');
    if (bar == std::string::npos)
      throw std::runtime_error("malformed KL cache key: " + key);
    auto x = Permutation::parse(key.substr(0, bar));
    auto y = Permutation::parse(key.substr(bar + 1));
    if (x.size() != n || y.size() != n)
      throw SizeMismatch("KL cache entry size disagrees with header");
    table_[PermPair{std::move(x), std::move(y)}] = coeffs_from_json(coeffs);
  }
  for (const auto &col : doc.at("columns"))
    done_.insert(Permutation::parse(col.get<std::string>()));
}

RPolynomialKL::RPolynomialKL(int n) : n_(n), elements_(all_permutations(n)) {}

IntPolynomial RPolynomialKL::r_polynomial(const Permutation &x, const Permutation &w) {
  if (!bruhat_leq(x, w))
    return {};
  if (x == w)
    return IntPolynomial::constant(1);
  const PermPair key{x, w};
  if (auto it = r_memo_.find(key); it != r_memo_.end())
    return it->second;
  const int i = first_right_descent(w);
  const Permutation ws = times_simple(w, i);
  const Permutation xs = times_simple(x, i);
  IntPolynomial r;
  if (has_right_descent(x, i)) {
    r = r_polynomial(xs, ws);
  } else {
    const IntPolynomial q_minus_one({BigInt(-1), BigInt(1)});
    r = q_minus_one * r_polynomial(x, ws) + r_polynomial(xs, ws).shifted(1);
  }
  r_memo_.emplace(key, r);
  return r;
}

IntPolynomial RPolynomialKL::kl_polynomial(const Permutation &x, const Permutation &w) {
  if (x.size() != n_ || w.size() != n_)
    throw SizeMismatch("RPolynomialKL: wrong permutation size");
  if (!bruhat_leq(x, w))
    return {};
  if (x == w)
    return IntPolynomial::constant(1);
  const PermPair key{x, w};
  if (auto it = p_memo_.find(key); it != p_memo_.end())
    return it->second;
  IntPolynomial rhs;
  for (const auto &y : elements_) {
    if (y == x || !bruhat_leq(x, y) || !bruhat_leq(y, w))
      continue;
    rhs += r_polynomial(x, y) * kl_polynomial(y, w);
  }
  const int d = w.length() - x.length();
  IntPolynomial p = -rhs.truncated((d - 1) / 2);
  p_memo_.emplace(key, p);
  return p;
}

std::filesystem::path resolve_cache_path(const std::filesystem::path &flag_value) {
  if (const char *env = std::getenv("KLIMM_CACHE"); env != nullptr && *env != '\0')
    return env;
  return flag_value;
}

std::filesystem::path KLCacheSet::file_for(int n) const {
  return dir_ / ("s" + std::to_string(n) + ".json");
}

KLCache &KLCacheSet::for_size(int n) {
  std::lock_guard lock(mutex_);
  auto &slot = caches_[n];
  if (!slot) {
    slot = std::make_unique<KLCache>();
    if (!dir_.empty() && std::filesystem::exists(file_for(n)))
      slot->load(file_for(n));
  }
  return *slot;
}

void KLCacheSet::precompute(int max_n) {
  for (int n = 1; n <= max_n; ++n)
    for_size(n).precompute(n);
}

void KLCacheSet::save() const {
  if (dir_.empty())
    return;
  std::lock_guard lock(mutex_);
  std::filesystem::create_directories(dir_);
  for (const auto &[n, cache] : caches_)
    if (cache->entries() > 0)
      cache->save(file_for(n));
}

} // namespace klimm
