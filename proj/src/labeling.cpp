#include "magicdist/labeling.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace magicdist {

Labeling::Labeling(std::vector<int> values) : values_(std::move(values)) {
  int n = static_cast<int>(values_.size());
  if (n == 0) throw std::invalid_argument("labeling must be nonempty");
  std::vector<char> seen(n + 1, 0);
  for (int v : values_) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("labeling is not a permutation of 1..n");
    seen[v] = 1;
  }
}

ModularLabeling::ModularLabeling(int p, std::vector<int> values)
    : p_(p), values_(std::move(values)) {
  if (p_ < 1) throw std::invalid_argument("modulus must be positive");
  int n = static_cast<int>(values_.size());
  if (n == 0) throw std::invalid_argument("labeling must be nonempty");
  std::vector<long long> count(p_ + 1, 0);
  for (int v : values_) {
    if (v < 1 || v > p_) throw std::invalid_argument("modular label out of range 1..p");
    ++count[v];
  }
  for (int v = 1; v <= p_; ++v) {
    long long want = v <= n ? (n - v) / p_ + 1 : 0;
    if (count[v] != want)
      throw std::invalid_argument("modular labeling does not realize the multiset {1..n} mod p");
  }
}

std::vector<long long> weights(const Graph& g, const Labeling& f) {
  if (f.size() != g.order()) throw std::invalid_argument("labeling length differs from graph order");
  std::vector<long long> w(g.order());
  for (int v = 1; v <= g.order(); ++v) {
    long long s = 0;
    for (int u : g.neighbors(v)) s += f(u);
    w[v - 1] = s;
  }
  return w;
}

std::vector<long long> weights(const Graph& g, const ModularLabeling& f) {
  if (f.size() != g.order()) throw std::invalid_argument("labeling length differs from graph order");
  std::vector<long long> w(g.order());
  for (int v = 1; v <= g.order(); ++v) {
    long long s = 0;
    for (int u : g.neighbors(v)) s += f(u);
    w[v - 1] = s % f.modulus();
  }
  return w;
}

namespace {

VerifyResult verdict_from_weights(std::vector<long long> w, bool modular, int p, bool degenerate) {
  VerifyResult r;
  for (size_t i = 1; i < w.size(); ++i) {
    if (w[i] != w[0]) {
      r.failure = VerifyFailure{1, static_cast<int>(i + 1), w[0], w[i]};
      return r;
    }
  }
  r.certificate = MagicCertificate{modular, p, w[0], std::move(w), degenerate};
  return r;
}

}  // namespace

VerifyResult verify_distance_magic(const Graph& g, const Labeling& f) {
  return verdict_from_weights(weights(g, f), false, 0, g.edge_count() == 0);
}

VerifyResult verify_p_distance_magic(const Graph& g, const ModularLabeling& f) {
  return verdict_from_weights(weights(g, f), true, f.modulus(), g.edge_count() == 0);
}

ModularLabeling reduce_mod_p(const Labeling& f, int p) {
  if (p < 1) throw std::invalid_argument("modulus must be positive");
  std::vector<int> values(f.values());
  for (int& v : values) {
    v %= p;
    if (v == 0) v = p;
  }
  return ModularLabeling(p, std::move(values));
}

std::optional<int> modulo_regularity(const Graph& g, int p) {
  if (p < 1) throw std::invalid_argument("modulus must be positive");
  int r = g.degree(1) % p;
  for (int v = 2; v <= g.order(); ++v)
    if (g.degree(v) % p != r) return std::nullopt;
  return r;
}

ShiftResult shift_labeling(const Graph& g, const ModularLabeling& f, int i) {
  int p = f.modulus();
  auto r = modulo_regularity(g, p);
  if (!r) throw std::domain_error("shift requires all degrees congruent mod p");
  VerifyResult base = verify_p_distance_magic(g, f);
  if (!base.ok()) throw std::domain_error("shift requires a verified modular labeling");

  std::vector<int> values(f.values());
  for (int& v : values) v = (v + i % p + p - 1) % p + 1;
  ShiftResult out{ModularLabeling(p, std::move(values)),
                  static_cast<int>(((base.certificate->k + static_cast<long long>(i % p) * *r) % p + p) % p)};

  VerifyResult check = verify_p_distance_magic(g, out.labeling);
  if (!check.ok() || check.certificate->k != out.constant)
    throw std::logic_error("shifted labeling failed to verify with the predicted constant");
  return out;
}

double magic_constant_bound(int n) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  return (static_cast<double>(n) * n - 1) / 2;
}

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string_view tok(text.data() + pos, (comma == std::string::npos ? text.size() : comma) - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("labeling: bad integer '" + std::string(tok) + "'");
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

Labeling parse_labeling(const std::string& text) { return Labeling(parse_int_list(text)); }

ModularLabeling parse_modular_labeling(const std::string& text) {
  if (text.rfind("p=", 0) != 0) throw std::invalid_argument("modular labeling must start with 'p='");
  size_t colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("modular labeling missing ':'");
  int p = 0;
  auto [ptr, ec] = std::from_chars(text.data() + 2, text.data() + colon, p);
  if (ec != std::errc() || ptr != text.data() + colon)
    throw std::invalid_argument("modular labeling: bad modulus");
  return ModularLabeling(p, parse_int_list(text.substr(colon + 1)));
}

std::string format_labeling(const Labeling& f) {
  std::ostringstream out;
  for (int i = 0; i < f.size(); ++i) out << (i ? "," : "") << f.values()[i];
  return out.str();
}

std::string format_labeling(const ModularLabeling& f) {
  std::ostringstream out;
  out << "p=" << f.modulus() << ':';
  for (int i = 0; i < f.size(); ++i) out << (i ? "," : "") << f.values()[i];
  return out.str();
}

}  // namespace magicdist
