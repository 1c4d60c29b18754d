#include "gbds/summary.hpp"

#include "gbds/groupoid.hpp"

namespace gbds {

std::string boundary_summary(const System& sys, std::size_t depth) {
  BoundarySpace sp(sys);
  PartialAction pa(sp);
  Groupoids gr(pa);
  auto join = [](const std::vector<std::string>& items) {
    std::string s = "{";
    for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + items[i];
    return s + "}";
  };

  std::string out;
  const bool finite = sp.boundary_is_finite();
  const auto paths = finite ? sp.exact_boundary() : sp.paths(depth);
  std::vector<std::string> names;
  for (const auto& p : paths) names.push_back(sp.format(p));
  if (finite) {
    out += "∂E: " + join(names) + "\n";
  } else {
    out += "∂E (depth ≤ " + std::to_string(depth) + "): " + std::to_string(paths.size()) + " paths\n";
  }

  names.clear();
  for (AtomId v : sp.singular_vertices()) names.push_back(sp.format_vertex(v));
  out += "singular vertices: " + join(names) + "\n";

  names.clear();
  for (const Word& w : sys.wstar(depth)) names.push_back(sys.format_word(w));
  out += "W* (|α| ≤ " + std::to_string(depth) + "): " + join(names) + "\n";

  out += "|G| (|t| ≤ " + std::to_string(depth) + "): " + std::to_string(gr.g_pool(paths, depth).size()) + "\n";

  const auto elems = sys.algebra().elements();
  for (LabelId l = 0; l < sys.label_count(); ++l) {
    const Element b = sys.ideal_gen(l);
    const std::string s = "S_{" + sys.label_name(l) + "," + sys.format(b) + "}";
    Bisection x = pa.partial_isometry(Word::single(l), b);
    Bisection xx = pa.mul(x, pa.star(x));
    std::string rhs = "(ε, " + sp.format(xx.source) + ")";
    for (const auto& a : elems) {
      if (pa.equal(pa.projection(a), xx)) {
        rhs = "P_{" + sys.format(a) + "}";
        break;
      }
    }
    out += s + "·" + s + "* = " + rhs + "\n";
  }
  return out;
}

}  // namespace gbds
