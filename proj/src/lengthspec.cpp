#include "zal/lengthspec.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "zal/parallel.hpp"

namespace zal::lengthspec {

namespace {

std::int64_t isqrt(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::int64_t mod(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

// Legendre symbol (a / p) for odd prime p.
int legendre(std::int64_t a, std::int64_t p) {
  a = mod(a, p);
  if (a == 0) return 0;
  std::int64_t r = 1, base = a, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t g = p, x = 0, x1 = 1, r = mod(a, p);
  while (r != 0) {
    std::int64_t q = g / r;
    std::tie(g, r) = std::make_pair(r, g - q * r);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  return mod(x, p);
}

// Right action of PSL2(Z) on the cosets of the group, as labels 0..size-1.
struct CosetModel {
  int size = 1;
  std::function<int(int, const Mat2&)> act;
};

CosetModel coset_model(const GroupSpec& spec) {
  CosetModel model;
  switch (spec.kind) {
    case GroupKind::Full:
      model.size = 1;
      model.act = [](int, const Mat2&) { return 0; };
      break;
    case GroupKind::Principal2: {
      // SL2(Z/2), label = 4-bit code of (a, b, c, d) mod 2
      std::vector<int> codes;
      for (int code = 0; code < 16; ++code) {
        int a = code >> 3 & 1, b = code >> 2 & 1, c = code >> 1 & 1, d = code & 1;
        if (((a * d - b * c) & 1) == 1) codes.push_back(code);
      }
      model.size = static_cast<int>(codes.size());
      model.act = [codes](int label, const Mat2& m) {
        int code = codes[static_cast<std::size_t>(label)];
        Mat2 x{code >> 3 & 1, code >> 2 & 1, code >> 1 & 1, code & 1};
        Mat2 y = x * m;
        int out = static_cast<int>(mod(y.a, 2) << 3 | mod(y.b, 2) << 2 | mod(y.c, 2) << 1 | mod(y.d, 2));
        return static_cast<int>(std::find(codes.begin(), codes.end(), out) - codes.begin());
      };
      break;
    }
    case GroupKind::Gamma0: {
      // P^1(F_p) via bottom rows (c : d); label d/c for c != 0, p for (0 : 1)
      const std::int64_t p = spec.p;
      model.size = static_cast<int>(p + 1);
      model.act = [p](int label, const Mat2& m) {
        std::int64_t c = label == p ? 0 : 1, d = label == p ? 1 : label;
        std::int64_t c2 = mod(c * mod(m.a, p) + d * mod(m.c, p), p);
        std::int64_t d2 = mod(c * mod(m.b, p) + d * mod(m.d, p), p);
        if (c2 == 0) return static_cast<int>(p);
        return static_cast<int>(d2 * inverse_mod(c2, p) % p);
      };
      break;
    }
    case GroupKind::Gamma1: {
      // nonzero bottom rows (c, d) mod p up to sign
      const std::int64_t p = spec.p;
      auto canon = [p](std::int64_t c, std::int64_t d) {
        std::int64_t k1 = c * p + d, k2 = mod(-c, p) * p + mod(-d, p);
        return std::min(k1, k2);
      };
      std::vector<std::int64_t> keys;
      for (std::int64_t c = 0; c < p; ++c)
        for (std::int64_t d = 0; d < p; ++d)
          if (c != 0 || d != 0) keys.push_back(canon(c, d));
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      model.size = static_cast<int>(keys.size());
      model.act = [p, keys, canon](int label, const Mat2& m) {
        std::int64_t key = keys[static_cast<std::size_t>(label)];
        std::int64_t c = key / p, d = key % p;
        std::int64_t c2 = mod(c * mod(m.a, p) + d * mod(m.c, p), p);
        std::int64_t d2 = mod(c * mod(m.b, p) + d * mod(m.d, p), p);
        return static_cast<int>(std::lower_bound(keys.begin(), keys.end(), canon(c2, d2)) - keys.begin());
      };
      break;
    }
  }
  return model;
}

// Primitive ambient classes of trace t, one matrix per class.
std::vector<Mat2> primitive_ambient(std::int64_t t) {
  std::vector<Mat2> out;
  auto all = [](const Mat2&) { return true; };
  for (const auto& cycle : reduced_cycles(t * t - 4)) {
    Mat2 m = form_matrix(cycle.front(), t);
    if (!is_proper_power(m, all)) out.push_back(m);
  }
  return out;
}

LengthSpectrum assemble(const GroupSpec& spec, std::int64_t max_trace, const std::map<std::int64_t, std::int64_t>& counts) {
  LengthSpectrum s;
  s.group = spec;
  s.max_trace = max_trace;
  s.has_torsion = !group_invariants(spec).torsion_free();
  for (const auto& [t, mult] : counts) {
    if (mult > 0) s.entries.push_back({t, geodesic_length(t), mult});
  }
  return s;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void GroupSpec::validate() const {
  if (kind == GroupKind::Gamma0 || kind == GroupKind::Gamma1) {
    if (!is_prime(p) || p < 11) throw std::invalid_argument("GroupSpec: level must be a prime >= 11");
    if (p > 100000) throw std::invalid_argument("GroupSpec: level too large");
  }
}

std::string GroupSpec::name() const {
  switch (kind) {
    case GroupKind::Full:
      return "full";
    case GroupKind::Principal2:
      return "gamma2";
    case GroupKind::Gamma0:
      return "gamma0(" + std::to_string(p) + ")";
    case GroupKind::Gamma1:
      return "gamma1(" + std::to_string(p) + ")";
  }
  return "?";
}

GroupInvariants group_invariants(const GroupSpec& spec) {
  spec.validate();
  GroupInvariants inv;
  switch (spec.kind) {
    case GroupKind::Full:
      inv = {0, 1, 1, 1, 1};
      break;
    case GroupKind::Principal2:
      inv = {0, 3, 6, 0, 0};
      break;
    case GroupKind::Gamma0: {
      inv.m = spec.p + 1;
      inv.n = 2;
      inv.e2 = 1 + legendre(-1, spec.p);
      inv.e3 = 1 + legendre(-3, spec.p);
      // g = 1 + m/12 - e2/4 - e3/3 - n/2, computed over 12
      int twelve_g = 12 + inv.m - 3 * inv.e2 - 4 * inv.e3 - 6 * inv.n;
      inv.g = twelve_g / 12;
      break;
    }
    case GroupKind::Gamma1: {
      inv.m = (spec.p * spec.p - 1) / 2;
      inv.n = spec.p - 1;
      int twelve_g = 12 + inv.m - 6 * inv.n;
      inv.g = twelve_g / 12;
      break;
    }
  }
  return inv;
}

bool in_group(const GroupSpec& spec, const Mat2& x) {
  switch (spec.kind) {
    case GroupKind::Full:
      return true;
    case GroupKind::Principal2:
      return mod(x.b, 2) == 0 && mod(x.c, 2) == 0;
    case GroupKind::Gamma0:
      return mod(x.c, spec.p) == 0;
    case GroupKind::Gamma1: {
      std::int64_t a = mod(x.a, spec.p);
      return mod(x.c, spec.p) == 0 && (a == 1 || a == spec.p - 1) && mod(x.a - x.d, spec.p) == 0;
    }
  }
  return false;
}

std::vector<QuadForm> reduced_forms(std::int64_t D) {
  std::vector<QuadForm> out;
  const std::int64_t s = isqrt(D);
  for (std::int64_t b = 1; b * b < D; ++b) {
    if (mod(b - D, 2) != 0) continue;
    for (std::int64_t a = 1; 2 * a < s + b + 2; ++a) {
      // sqrt(D) - b < 2a  and  2a < sqrt(D) + b
      if (!(D < (2 * a + b) * (2 * a + b))) continue;
      if (!(2 * a - b < 0 || (2 * a - b) * (2 * a - b) < D)) continue;
      for (std::int64_t sa : {a, -a}) {
        std::int64_t num = b * b - D;
        if (num % (4 * sa) == 0) out.push_back({sa, b, num / (4 * sa)});
      }
    }
  }
  return out;
}

QuadForm rho(const QuadForm& f) {
  const std::int64_t D = f.disc();
  const std::int64_t s = isqrt(D);
  const std::int64_t c2 = 2 * std::abs(f.c);
  // largest b' = -b (mod 2|c|) with b' <= floor(sqrt(D))
  std::int64_t bp = s - mod(s + f.b, c2);
  return {f.c, bp, (bp * bp - D) / (4 * f.c)};
}

std::vector<std::vector<QuadForm>> reduced_cycles(std::int64_t D) {
  std::vector<QuadForm> forms = reduced_forms(D);
  std::vector<bool> seen(forms.size(), false);
  auto index_of = [&](const QuadForm& f) {
    auto it = std::find(forms.begin(), forms.end(), f);
    if (it == forms.end()) throw std::logic_error("reduced_cycles: rho left the reduced set");
    return static_cast<std::size_t>(it - forms.begin());
  };
  std::vector<std::vector<QuadForm>> cycles;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (seen[i]) continue;
    std::vector<QuadForm> cycle;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      cycle.push_back(forms[j]);
      j = index_of(rho(forms[j]));
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

std::int64_t class_number_indefinite(std::int64_t D) {
  if (D <= 0) throw std::invalid_argument("class_number_indefinite: D must be positive");
  std::int64_t s = isqrt(D);
  if (s * s == D) throw std::invalid_argument("class_number_indefinite: D must not be a square");
  if (mod(D, 4) != 0 && mod(D, 4) != 1) throw std::invalid_argument("class_number_indefinite: D must be 0 or 1 mod 4");
  return static_cast<std::int64_t>(reduced_cycles(D).size());
}

Mat2 form_matrix(const QuadForm& f, std::int64_t t) { return {(t - f.b) / 2, -f.c, f.a, (t + f.b) / 2}; }

std::int64_t power_trace(std::int64_t t, int k) {
  constexpr __int128 kCap = INT64_MAX / 4;
  if (k == 0) return 2;
  __int128 v0 = 2, v1 = t;
  for (int j = 2; j <= k; ++j) {
    __int128 v2 = t * v1 - v0;
    v0 = v1;
    v1 = v2;
    if (v1 > kCap) return static_cast<std::int64_t>(kCap);  // saturate; traces grow for t >= 3
    if (v1 < -kCap) throw std::overflow_error("power_trace: overflow");
  }
  return static_cast<std::int64_t>(v1);
}

bool is_proper_power(const Mat2& x, const std::function<bool(const Mat2&)>& member) {
  Mat2 m = x.trace() < 0 ? -x : x;
  const std::int64_t t = m.trace();
  if (t <= 2) return false;
  // Y^k = U_{k-1}(tau) Y - U_{k-2}(tau) I, so Y = (M + U_{k-2} I) / U_{k-1}
  for (int k = 2; power_trace(3, k) <= t; ++k) {
    for (std::int64_t tau = 3; power_trace(tau, k) <= t; ++tau) {
      if (power_trace(tau, k) != t) continue;
      std::int64_t u_km2 = 0, u_km1 = 1;
      for (int j = 1; j < k; ++j) {
        std::int64_t next = tau * u_km1 - u_km2;
        u_km2 = u_km1;
        u_km1 = next;
      }
      Mat2 z{m.a + u_km2, m.b, m.c, m.d + u_km2};
      if (z.a % u_km1 || z.b % u_km1 || z.c % u_km1 || z.d % u_km1) continue;
      Mat2 y{z.a / u_km1, z.b / u_km1, z.c / u_km1, z.d / u_km1};
      if (y.det() == 1 && member(y)) return true;
    }
  }
  return false;
}

double geodesic_length(std::int64_t trace) {
  double t = static_cast<double>(trace);
  return 2.0 * std::acosh(t / 2.0);
}

LengthSpectrum LengthSpectrum::filtered(std::int64_t t) const {
  LengthSpectrum out = *this;
  out.max_trace = std::min(max_trace, t);
  std::erase_if(out.entries, [t](const GeodesicClass& e) { return e.trace > t; });
  return out;
}

std::int64_t LengthSpectrum::counting(double L) const {
  std::int64_t total = 0;
  for (const auto& e : entries)
    if (e.length <= L) total += e.multiplicity;
  return total;
}

double LengthSpectrum::max_length() const { return max_trace >= 3 ? geodesic_length(max_trace) : 0.0; }

LengthSpectrum modular_spectrum(std::int64_t max_trace) { return subgroup_spectrum(GroupSpec::full(), max_trace); }

LengthSpectrum subgroup_spectrum(const GroupSpec& spec, std::int64_t max_trace) {
  spec.validate();
  std::map<std::int64_t, std::int64_t> counts;
  if (max_trace < 3) return assemble(spec, max_trace, counts);
  if (max_trace > 3'000'000) throw std::invalid_argument("subgroup_spectrum: max_trace too large");
  const CosetModel model = coset_model(spec);
  if (model.size != group_invariants(spec).m) throw std::logic_error("subgroup_spectrum: coset count mismatch");

  // per ambient trace: list of (subgroup trace, count)
  auto per_trace = parallel_map<std::vector<std::pair<std::int64_t, std::int64_t>>>(
      static_cast<std::size_t>(max_trace - 2), [&](std::size_t i) {
        const std::int64_t t = static_cast<std::int64_t>(i) + 3;
        std::vector<std::pair<std::int64_t, std::int64_t>> out;
        for (const Mat2& m : primitive_ambient(t)) {
          std::vector<bool> seen(static_cast<std::size_t>(model.size), false);
          for (int start = 0; start < model.size; ++start) {
            if (seen[static_cast<std::size_t>(start)]) continue;
            int k = 0, x = start;
            do {
              seen[static_cast<std::size_t>(x)] = true;
              x = model.act(x, m);
              ++k;
            } while (x != start);
            std::int64_t tk = power_trace(t, k);
            if (tk <= max_trace) out.emplace_back(tk, 1);
          }
        }
        return out;
      });
  for (const auto& list : per_trace)
    for (const auto& [tk, c] : list) counts[tk] += c;
  return assemble(spec, max_trace, counts);
}

std::string to_csv(const LengthSpectrum& s) {
  std::string out = "trace,length,multiplicity\n";
  char buf[64];
  for (const auto& e : s.entries) {
    std::snprintf(buf, sizeof buf, "%.17g", e.length);
    out += std::to_string(e.trace) + "," + buf + "," + std::to_string(e.multiplicity) + "\n";
  }
  return out;
}

void write_csv(const LengthSpectrum& s, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("write_csv: cannot open " + path);
  f << to_csv(s);
}

}  // namespace zal::lengthspec
