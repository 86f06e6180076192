#include "dynkin/augment.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace dynkin {

AugmentedMatrix build_augmented_matrix(const AugmentationInput& in) {
  const auto& d = in.diagram0;
  const int r = d.rank();
  const auto& comps = d.components();
  if (static_cast<int>(in.omega.coeffs.size()) != r)
    throw ShapeError("omega has " + std::to_string(in.omega.coeffs.size()) + " entries, diagram " + d.name() +
                     " has rank " + std::to_string(r));
  if (in.nu.size() != comps.size())
    throw ShapeError("nu has " + std::to_string(in.nu.size()) + " entries, diagram " + d.name() + " has " +
                     std::to_string(comps.size()) + " components");
  if (!is_dominant_integral(in.omega)) throw DomainError("omega " + to_string(in.omega) + " is not dominant integral");

  AugmentedMatrix am;
  am.matrix = IntMatrix(r + 1, r + 1);
  const auto base = d.cartan();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) am.matrix(i + 1, j + 1) = base(i, j);
  am.matrix(0, 0) = 2;

  for (std::size_t c = 0; c < comps.size(); ++c) {
    const int off = d.offset(static_cast<int>(c));
    int attach = -1;
    for (int t = 0; t < comps[c].rank; ++t) {
      if (in.omega.coeffs[off + t] == 0) continue;
      if (attach >= 0)
        throw CycleError("omega is nonzero on two nodes (" + std::to_string(attach - off + 1) + " and " +
                         std::to_string(t + 1) + ") of component " + comps[c].name());
      attach = off + t;
    }
    const int a = in.nu[c];
    if (a < 0 || a > 3) throw NuPatternError("nu entry " + std::to_string(a) + " outside 0..3");
    if ((attach < 0) != (a == 0))
      throw NuPatternError("nu entry for component " + comps[c].name() + " is " + std::to_string(a) + " but omega is " +
                           (attach < 0 ? "zero" : "nonzero") + " there");
    am.attachments.push_back(attach);
    if (attach < 0) continue;
    am.matrix(0, attach + 1) = -static_cast<int>(in.omega.coeffs[attach].get_num().get_si());
    am.matrix(attach + 1, 0) = -a;
  }
  return am;
}

bool ValidationReport::valid() const {
  return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.pass; });
}

ValidationReport validate(const IntMatrix& m) {
  ValidationReport rep;
  const int n = static_cast<int>(m.rows());

  ValidationCheck zero{"zero_pattern", true, ""};
  for (int i = 0; i < n && zero.pass; ++i)
    for (int j = 0; j < n; ++j)
      if ((m(i, j) == 0) != (m(j, i) == 0)) {
        zero.pass = false;
        zero.detail = "entries (" + std::to_string(i) + "," + std::to_string(j) + ") and (" + std::to_string(j) + "," +
                      std::to_string(i) + ") disagree";
        break;
      }
  rep.checks.push_back(zero);

  ValidationCheck entries{"cartan_entries", true, ""};
  for (int i = 0; i < n && entries.pass; ++i)
    for (int j = 0; j < n; ++j) {
      const int v = m(i, j);
      const bool ok = i == j ? v == 2 : (v <= 0 && v >= -3);
      if (!ok) {
        entries.pass = false;
        entries.detail = "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + std::to_string(v);
        break;
      }
    }
  rep.checks.push_back(entries);

  ValidationCheck sym{"symmetrizable", false, ""};
  if (zero.pass && entries.pass) {
    sym.pass = CartanMatrix(m).symmetrizer().has_value();
  } else {
    sym.detail = "requires a valid zero pattern and entries";
  }
  if (zero.pass && entries.pass && !sym.pass) sym.detail = "no positive diagonal symmetrizer";
  rep.checks.push_back(sym);

  ValidationCheck minors{"principal_minors", principal_minors_positive(m), ""};
  if (!minors.pass) {
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<std::size_t> idx;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) idx.push_back(i);
      const Integer det = determinant(m.principal(idx));
      if (det <= 0) {
        std::string nodes;
        for (auto i : idx) nodes += (nodes.empty() ? "" : ",") + std::to_string(i);
        minors.detail = "minor on {" + nodes + "} = " + det.get_str();
        break;
      }
    }
  }
  rep.checks.push_back(minors);
  return rep;
}

ValidationReport validate(const AugmentedMatrix& am) { return validate(am.matrix); }

Ambient identify_ambient(const AugmentationInput& in) {
  const auto am = build_augmented_matrix(in);
  const auto rep = validate(am);
  if (!rep.valid()) {
    std::string why;
    for (const auto& c : rep.checks)
      if (!c.pass) why += (why.empty() ? "" : "; ") + c.name + (c.detail.empty() ? "" : ": " + c.detail);
    throw ValidationFailed("augmented matrix is not of finite type (" + why + ")");
  }
  const auto id = identify_cartan_type(CartanMatrix(am.matrix));
  return {id.diagram, id.permutation[0]};
}

std::vector<Augmentation> enumerate_augmentations(const DynkinDiagram& diagram0) {
  struct Option {
    int node;  // diagram0 index, -1 for detached
    int omega;
    int nu;
  };
  static const int kBonds[][2] = {{1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}};
  const auto& comps = diagram0.components();
  std::vector<std::vector<Option>> options(comps.size());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    options[c].push_back({-1, 0, 0});
    const int off = diagram0.offset(static_cast<int>(c));
    for (int t = 0; t < comps[c].rank; ++t)
      for (const auto& b : kBonds) options[c].push_back({off + t, b[0], b[1]});
  }

  std::vector<Augmentation> out;
  std::vector<Option> pick(comps.size());
  std::function<void(std::size_t, int, int)> go = [&](std::size_t c, int degree, int multiple) {
    if (c == comps.size()) {
      AugmentationInput in{diagram0, Weight{std::vector<Rational>(diagram0.rank())}, std::vector<int>(comps.size())};
      for (std::size_t k = 0; k < comps.size(); ++k) {
        if (pick[k].node < 0) continue;
        in.omega.coeffs[pick[k].node] = pick[k].omega;
        in.nu[k] = pick[k].nu;
      }
      if (!validate(build_augmented_matrix(in)).valid()) return;
      out.push_back({in, identify_ambient(in)});
      return;
    }
    for (const auto& o : options[c]) {
      const int deg = degree + (o.node >= 0);
      const int mult = multiple + (o.node >= 0 && o.omega * o.nu > 1);
      // Finite-type diagrams have no node of degree four and at most one multiple bond.
      if (deg > 3 || mult > 1) continue;
      pick[c] = o;
      go(c + 1, deg, mult);
    }
  };
  go(0, 0, 0);
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) throw ParseError("empty entry in integer list '" + text + "'");
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw ParseError("bad integer '" + item + "'");
    } catch (const std::logic_error&) {
      throw ParseError("bad integer '" + item + "'");
    }
  }
  return out;
}

Weight parse_component_weight(const DynkinDiagram& d, const std::string& text) {
  Weight w;
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) parts.push_back(part);
  if (parts.size() != d.components().size())
    throw ShapeError("weight has " + std::to_string(parts.size()) + " component(s), diagram " + d.name() + " has " +
                     std::to_string(d.components().size()));
  for (std::size_t c = 0; c < parts.size(); ++c) {
    const auto xs = parse_int_list(parts[c]);
    if (static_cast<int>(xs.size()) != d.components()[c].rank)
      throw ShapeError("weight component " + std::to_string(c + 1) + " has the wrong length");
    for (int x : xs) w.coeffs.emplace_back(x);
  }
  return w;
}

}  // namespace dynkin
