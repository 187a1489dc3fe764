#include "monodromy/monodromy.hpp"

#include "exactalg/sl2z.hpp"
#include "exactalg/smith.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace monodromy {

using exactalg::Int;

std::string rep_to_string(const MappingClassRep& rep) {
  if (std::holds_alternative<IdentityClass>(rep)) return "identity";
  if (const auto* t = std::get_if<TorusLinear>(&rep)) return "torus_linear " + t->m.to_string();
  const auto& h = std::get<HomologyPermutation>(rep);
  std::ostringstream os;
  os << "homology_permutation perm=[";
  for (std::size_t i = 0; i < h.perm.size(); ++i) os << (i ? "," : "") << h.perm[i];
  os << "] h1=" << h.h1.to_string();
  return os.str();
}

std::string Verdict::to_string() const {
  switch (kind_) {
    case Kind::Equivalent: return "Equivalent";
    case Kind::Distinct: return detail_.empty() ? "Distinct" : "Distinct (" + detail_ + ")";
    case Kind::Undecided: return "Undecided (" + detail_ + ")";
  }
  return "?";
}

IntMatrix intersection_form(int genus) {
  std::size_t g = static_cast<std::size_t>(genus);
  IntMatrix j(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    j.at(i, g + i) = 1;
    j.at(g + i, i) = -1;
  }
  return j;
}

bool preserves_intersection_form(const IntMatrix& m, int genus) {
  std::size_t n = 2 * static_cast<std::size_t>(genus);
  if (m.rows() != n || m.cols() != n) return false;
  IntMatrix j = intersection_form(genus);
  return m.transpose() * j * m == j;
}

std::vector<std::string> rep_violations(const MappingClassRep& rep, const LabeledSurface& surface) {
  std::vector<std::string> out;
  if (surface.genus < 0) out.push_back("surface genus is negative");
  if (std::holds_alternative<IdentityClass>(rep)) return out;
  if (const auto* t = std::get_if<TorusLinear>(&rep)) {
    if (surface.genus != 1 || !surface.labels.empty())
      out.push_back("torus_linear rep requires genus 1 and no marked points");
    if (t->m.rows() != 2 || t->m.cols() != 2)
      out.push_back("torus_linear matrix must be 2x2");
    else if (t->m.det() != 1)
      out.push_back("torus_linear matrix must have determinant 1");
    return out;
  }
  const auto& h = std::get<HomologyPermutation>(rep);
  std::size_t k = surface.marked_points();
  if (h.perm.size() != k) {
    out.push_back("permutation size does not match the marked points");
  } else {
    std::vector<bool> seen(k, false);
    bool ok = true;
    for (std::size_t i = 0; i < k; ++i) {
      if (h.perm[i] >= k || seen[h.perm[i]]) {
        ok = false;
        break;
      }
      seen[h.perm[i]] = true;
    }
    if (!ok) {
      out.push_back("perm is not a permutation");
    } else {
      const auto& labels = surface.labels.classes();
      for (std::size_t i = 0; i < k; ++i)
        if (labels[i] != labels[h.perm[i]]) {
          out.push_back("perm does not preserve labels");
          break;
        }
    }
  }
  if (!preserves_intersection_form(h.h1, surface.genus))
    out.push_back("h1 does not preserve the intersection form");
  return out;
}

namespace {

void require_valid(const MappingClassRep& rep, const LabeledSurface& surface) {
  auto violations = rep_violations(rep, surface);
  if (!violations.empty()) {
    std::string what = "mapping-class rep does not fit the surface:";
    for (const auto& v : violations) what += " " + v + ";";
    throw RepSurfaceMismatchError(what);
  }
}

HomologyPermutation as_general(const MappingClassRep& rep, const LabeledSurface& surface) {
  if (const auto* h = std::get_if<HomologyPermutation>(&rep)) return *h;
  std::vector<std::size_t> id_perm(surface.marked_points());
  for (std::size_t i = 0; i < id_perm.size(); ++i) id_perm[i] = i;
  if (std::holds_alternative<IdentityClass>(rep))
    return HomologyPermutation{id_perm, IntMatrix::identity(2 * surface.genus)};
  return HomologyPermutation{id_perm, std::get<TorusLinear>(rep).m};
}

// cycle lengths of the permutation within each label group, sorted
std::map<seifert::CoprimeResidueClass, std::vector<std::size_t>> label_cycle_type(
    const HomologyPermutation& h, const LabeledSurface& surface) {
  std::map<seifert::CoprimeResidueClass, std::vector<std::size_t>> out;
  std::vector<bool> visited(h.perm.size(), false);
  const auto& labels = surface.labels.classes();
  for (std::size_t i = 0; i < h.perm.size(); ++i) {
    if (visited[i]) continue;
    std::size_t len = 0, j = i;
    do {
      visited[j] = true;
      ++len;
      j = h.perm[j];
    } while (j != i);
    out[labels[i]].push_back(len);
  }
  for (auto& [label, cycles] : out) std::sort(cycles.begin(), cycles.end());
  return out;
}

std::string poly_string(const std::vector<Int>& coeffs) {
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) s += (i ? "," : "") + coeffs[i].str();
  return s + "]";
}

}  // namespace

IntMatrix induced_h1(const MappingClassRep& rep, const LabeledSurface& surface) {
  require_valid(rep, surface);
  return as_general(rep, surface).h1;
}

Verdict conjugacy_verdict(const MappingClassRep& alpha, const MappingClassRep& beta,
                          const LabeledSurface& surface) {
  require_valid(alpha, surface);
  require_valid(beta, surface);

  // genus 1 without marked points: SL2(Z) conjugacy is decidable, complete
  if (surface.genus == 1 && surface.labels.empty()) {
    auto form_a = exactalg::sl2z_canonical_form(as_general(alpha, surface).h1);
    auto form_b = exactalg::sl2z_canonical_form(as_general(beta, surface).h1);
    if (form_a == form_b) return Verdict::equivalent();
    return Verdict::distinct("SL2(Z) canonical forms differ: " + exactalg::to_string(form_a) +
                             " vs " + exactalg::to_string(form_b));
  }

  HomologyPermutation a = as_general(alpha, surface);
  HomologyPermutation b = as_general(beta, surface);

  auto cycles_a = label_cycle_type(a, surface);
  auto cycles_b = label_cycle_type(b, surface);
  if (cycles_a != cycles_b) return Verdict::distinct("per-label cycle types of the permutations differ");

  auto poly_a = exactalg::char_poly(a.h1);
  auto poly_b = exactalg::char_poly(b.h1);
  if (poly_a != poly_b)
    return Verdict::distinct("characteristic polynomials differ: " + poly_string(poly_a) + " vs " +
                             poly_string(poly_b));

  for (long long lambda : {-1, 0, 1}) {
    IntMatrix sa = a.h1, sb = b.h1;
    for (std::size_t i = 0; i < sa.rows(); ++i) {
      sa.at(i, i) -= lambda;
      sb.at(i, i) -= lambda;
    }
    if (exactalg::smith_normal_form(sa).diagonal() != exactalg::smith_normal_form(sb).diagonal())
      return Verdict::distinct("Smith structures of h1 - (" + std::to_string(lambda) +
                               ")I differ");
  }

  if (a == b) return Verdict::equivalent();
  return Verdict::undecided(
      "general mapping-class conjugacy outside the decidable fragment (genus >= 2 or labeled "
      "points); necessary invariants all agree");
}

}  // namespace monodromy
