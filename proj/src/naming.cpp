#include "dynkin/naming.hpp"

#include <algorithm>
#include <numeric>

namespace dynkin {

namespace {

std::string cn(int n) { return "C^" + std::to_string(n); }

std::vector<int> ints(const Weight& w) {
  std::vector<int> out;
  for (const auto& c : w.coeffs) out.push_back(static_cast<int>(c.get_num().get_si()));
  return out;
}

bool is_zero(const std::vector<int>& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

// Index (1-based) of the single fundamental weight with coefficient 1, else 0.
int fundamental(const std::vector<int>& a) {
  int idx = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (a[i] != 1 || idx) return 0;
    idx = static_cast<int>(i) + 1;
  }
  return idx;
}

std::string fallback(const std::vector<int>& a) {
  std::string s = "V(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

bool spin_weight(const SimpleType& t, const std::vector<int>& a) {
  const int f = fundamental(a);
  if (t.family == Family::B) return f == t.rank;
  if (t.family == Family::D) return f >= t.rank - 1;
  return false;
}

std::string tensor(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : " (x) ") + p;
  return s;
}

}  // namespace

std::string group_name(const SimpleType& t, const Weight& w) {
  const int r = t.rank;
  const auto a = ints(w);
  switch (t.family) {
    case Family::A: return "SL_" + std::to_string(r + 1);
    case Family::B: return (spin_weight(t, a) ? "Spin_" : "SO_") + std::to_string(2 * r + 1);
    case Family::C: return "Sp_" + std::to_string(r);
    case Family::D: return (spin_weight(t, a) ? "Spin_" : "SO_") + std::to_string(2 * r);
    default: return t.name();
  }
}

std::string rep_name(const SimpleType& t, const Weight& w) {
  const auto a = ints(w);
  const int r = t.rank;
  if (is_zero(a)) return "C";
  const int f = fundamental(a);
  switch (t.family) {
    case Family::A: {
      const int n = r + 1;
      if (f == 1) return cn(n);
      if (f == r) return "(" + cn(n) + ")*";
      if (f) return "Lambda^" + std::to_string(f) + " " + cn(n);
      if (a[0] > 1 && std::all_of(a.begin() + 1, a.end(), [](int x) { return x == 0; }))
        return "S^" + std::to_string(a[0]) + " " + cn(n);
      if (a.back() > 1 && std::all_of(a.begin(), a.end() - 1, [](int x) { return x == 0; }))
        return "S^" + std::to_string(a.back()) + " (" + cn(n) + ")*";
      break;
    }
    case Family::B:
      if (f == 1) return cn(2 * r + 1);
      if (f == r) return "S";
      break;
    case Family::C:
      if (f == 1) return cn(2 * r);
      if (f == 3 && r == 3) return "Lambda^3_0 C^6";
      break;
    case Family::D:
      if (f == 1) return cn(2 * r);
      if (f == r) return "S+";
      if (f == r - 1) return "S-";
      break;
    case Family::E:
      if (r == 6 && (f == 1 || f == 6)) return f == 1 ? "C^27" : "(C^27)*";
      if (r == 7 && f == 7) return "C^56";
      if (r == 8 && f == 8) return "C^248";
      break;
    case Family::F:
      if (f == 4) return "C^26";
      break;
    case Family::G:
      if (f == 1) return "C^7";
      break;
  }
  return fallback(a);
}

PvsName pvs_name(const LeviData& ld) {
  const auto& comps = ld.components();
  // Prefer an A factor acting by its vector representation (or dual).
  std::size_t gl = comps.size();
  for (int pass = 0; pass < 2 && gl == comps.size(); ++pass)
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (comps[c].type.family != Family::A) continue;
      const auto a = ints(comps[c].weight);
      const int f = fundamental(a);
      if (pass == 0 ? (f == 1 || f == comps[c].type.rank) : !is_zero(a)) {
        gl = c;
        break;
      }
    }
  std::vector<std::string> groups, spaces;
  if (gl == comps.size()) {
    groups.push_back("GL_1");
    spaces.push_back("C");
  }
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const auto& comp = comps[c];
    groups.push_back(c == gl ? "GL_" + std::to_string(comp.type.rank + 1) : group_name(comp.type, comp.weight));
    const auto rn = rep_name(comp.type, comp.weight);
    if (rn != "C") spaces.push_back(rn);
  }
  std::string g;
  for (const auto& s : groups) g += (g.empty() ? "" : " x ") + s;
  return {g, spaces.empty() ? "C" : tensor(spaces)};
}

std::string gln_module_name(int n, const Weight& w, int degree) {
  if (static_cast<int>(w.coeffs.size()) != n - 1) throw ShapeError("weight length must be n-1");
  const auto a = ints(w);
  int weighted = 0;
  for (int i = 0; i < n - 1; ++i) weighted += (i + 1) * a[i];
  if (degree < weighted || (degree - weighted) % n)
    throw DomainError("degree " + std::to_string(degree) + " is incompatible with weight " + to_string(w));
  const int t = (degree - weighted) / n;

  // Partition with columns a_i of height i, i.e. lambda_j = sum_{i >= j} a_i.
  std::vector<int> lambda;
  for (int j = 0; j < n - 1; ++j) {
    const int v = std::accumulate(a.begin() + j, a.end(), 0);
    if (v) lambda.push_back(v);
  }
  std::vector<std::string> parts;
  if (!lambda.empty()) {
    if (std::all_of(lambda.begin(), lambda.end(), [](int x) { return x == 1; })) {
      const int k = static_cast<int>(lambda.size());
      parts.push_back(k == 1 ? cn(n) : "Lambda^" + std::to_string(k) + " " + cn(n));
    } else if (lambda.size() == 1) {
      parts.push_back("S^" + std::to_string(lambda[0]) + " " + cn(n));
    } else {
      std::string s = "S_(";
      for (std::size_t i = 0; i < lambda.size(); ++i) s += (i ? "," : "") + std::to_string(lambda[i]);
      parts.push_back(s + ") " + cn(n));
    }
  }
  if (t > 0) {
    const std::string det = n == 1 ? "C" : "Lambda^" + std::to_string(n) + " " + cn(n);
    parts.push_back(t == 1 ? det : "(" + det + ")^" + std::to_string(t));
  }
  return parts.empty() ? "C" : tensor(parts);
}

}  // namespace dynkin
