// Distance magic labelings: a bijection f : V -> {1..n} is distance magic
// when every vertex has the same weight w(v) = sum of f over the open
// neighborhood N(v). The modular variant labels V by the multiset
// {1..n} mod p (residue 0 written as p, multiplicities kept) and asks for a
// constant weight residue mod p.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "magicdist/graph.hpp"

namespace magicdist {

// Permutation of 1..n; the constructor rejects anything else.
class Labeling {
 public:
  explicit Labeling(std::vector<int> values);
  const std::vector<int>& values() const { return values_; }
  int operator()(int v) const { return values_[v - 1]; }
  int size() const { return static_cast<int>(values_.size()); }
  bool operator==(const Labeling& o) const { return values_ == o.values_; }
  bool operator<(const Labeling& o) const { return values_ < o.values_; }

 private:
  std::vector<int> values_;
};

// Values in {1..p} realizing exactly the multiset {1..n} mod p, where n is
// the length: value v must appear floor((n-v)/p)+1 times (0 for v > n).
class ModularLabeling {
 public:
  ModularLabeling(int p, std::vector<int> values);
  int modulus() const { return p_; }
  const std::vector<int>& values() const { return values_; }
  int operator()(int v) const { return values_[v - 1]; }
  int size() const { return static_cast<int>(values_.size()); }
  bool operator==(const ModularLabeling& o) const { return p_ == o.p_ && values_ == o.values_; }
  bool operator<(const ModularLabeling& o) const { return values_ < o.values_; }

 private:
  int p_ = 0;
  std::vector<int> values_;
};

struct MagicCertificate {
  bool modular = false;
  int p = 0;                       // modulus when modular
  long long k = 0;                 // magic constant (residue in 0..p-1 when modular)
  std::vector<long long> weights;  // per-vertex, reduced mod p when modular
  bool degenerate = false;         // edgeless graph: all weights vacuously 0
};

struct VerifyFailure {
  int u = 0, v = 0;  // first witness pair in vertex order
  long long wu = 0, wv = 0;
};

struct VerifyResult {
  std::optional<MagicCertificate> certificate;
  std::optional<VerifyFailure> failure;
  bool ok() const { return certificate.has_value(); }
};

std::vector<long long> weights(const Graph& g, const Labeling& f);
std::vector<long long> weights(const Graph& g, const ModularLabeling& f);

VerifyResult verify_distance_magic(const Graph& g, const Labeling& f);
VerifyResult verify_p_distance_magic(const Graph& g, const ModularLabeling& f);

// Reduces an ordinary labeling mod p (residue 0 becomes p). A distance magic
// labeling always reduces to a p-distance magic one with constant k mod p.
ModularLabeling reduce_mod_p(const Labeling& f, int p);

// The common residue of all degrees mod p, when there is one.
std::optional<int> modulo_regularity(const Graph& g, int p);

struct ShiftResult {
  ModularLabeling labeling;
  int constant = 0;  // (k + i*r) mod p
};

// Adds i to every label mod p. Requires g to have constant degree residue r
// mod p and f to verify; the shifted labeling then verifies with constant
// (k + i*r) mod p.
ShiftResult shift_labeling(const Graph& g, const ModularLabeling& f, int i);

// Largest possible magic constant for order n: (n^2 - 1) / 2.
double magic_constant_bound(int n);

// "1,3,2" for ordinary labelings, "p=2:1,2,2,1" for modular ones.
Labeling parse_labeling(const std::string& text);
ModularLabeling parse_modular_labeling(const std::string& text);
std::string format_labeling(const Labeling& f);
std::string format_labeling(const ModularLabeling& f);

}  // namespace magicdist
