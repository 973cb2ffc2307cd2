#include "eqmot/tables/bidegree.hpp"

namespace eqmot {

namespace {

std::string rep(int x, int y) {
  if (y == 0) return std::to_string(x);
  std::string s = y == 1 ? "σ" : y == -1 ? "-σ" : std::to_string(y) + "σ";
  if (x == 0) return s;
  return std::to_string(x) + (y > 0 ? "+" : "") + s;
}

Reduction redirect(TargetTable table, int a, int p, std::string rule, std::string citation) {
  Reduction r;
  r.kind = ReductionKind::redirect;
  r.table = table;
  r.a = a;
  r.p = p;
  r.rule = std::move(rule);
  r.citation = std::move(citation);
  return r;
}

Reduction reduce_field(const Bidegree& bd) {
  if (bd.b + bd.q < 0 && bd.b < 0) {
    Reduction r;
    r.kind = ReductionKind::zero;
    r.rule = "vanishing below the weight line";
    r.citation = "vanishing: $b+q<0,\\ b<0\\Rightarrow H^{a+p\\sigma,b+q\\sigma}_{C_2}(X,\\mathbb{Z})=0$";
    return r;
  }
  if (bd.b + bd.q == 0 && bd.b <= 0) {
    if (bd.q == 0) return redirect(TargetTable::weight0, bd.a, bd.p, "weight 0", "");
    return redirect(TargetTable::weight0, bd.a + 2 * bd.q, bd.p - 2 * bd.q, "weight -q+qσ to weight 0",
                    "weight shift: $H^{a+p\\sigma,-q+q\\sigma}_{C_2}(k,\\mathbb{Z})="
                    "H^{a+2q+(p-2q)\\sigma,0}_{C_2}(k,\\mathbb{Z})$");
  }
  if (bd.b == 1 && bd.q == 0) return redirect(TargetTable::weight1, bd.a, bd.p, "weight 1", "");
  if (bd.b == 0 && bd.q == 1) return redirect(TargetTable::weight_sigma, bd.a, bd.p, "weight σ", "");
  Reduction r;
  r.rule = "no implemented table for weight " + rep(bd.b, bd.q);
  return r;
}

Reduction reduce_borel(const Bidegree& bd) {
  const std::string base = "Borel comparison: $H^{a+p\\sigma,";
  if (bd.b == 0 && bd.q == 0)
    return redirect(TargetTable::weight0, bd.a, bd.p, "Borel weight 0 equals weight 0 over k",
                    base + "0}_{C_2}(\\mathbf{E}C_2,A)=H^{a+p\\sigma,0}_{C_2}(k,A)$");
  if (bd.b == 0 && bd.q == 1)
    return redirect(TargetTable::weight_sigma, bd.a, bd.p, "Borel weight σ equals weight σ over k",
                    base + "\\sigma}_{C_2}(\\mathbf{E}C_2,A)=H^{a+p\\sigma,\\sigma}_{C_2}(k,A)$");
  if (bd.b == 1 && bd.q == 0) {
    if (bd.a == 2 || bd.a == 3)
      return redirect(TargetTable::weight_sigma, bd.a - 2, bd.p + 2, "Borel weight 1 in degrees a = 2, 3",
                      base + "1}_{C_2}(\\mathbf{E}C_2,A)=H^{a-2+(p+2)\\sigma,\\sigma}_{C_2}(k,A),\\ a=2,3$");
    return redirect(TargetTable::weight1, bd.a, bd.p, "Borel weight 1 away from a = 2, 3",
                    base + "1}_{C_2}(\\mathbf{E}C_2,A)=H^{a+p\\sigma,1}_{C_2}(k,A),\\ a\\neq 2,3$");
  }
  Reduction r;
  r.rule = "no Borel identity for weight " + rep(bd.b, bd.q);
  return r;
}

}  // namespace

std::string Bidegree::to_string() const { return "H^{" + rep(a, p) + "," + rep(b, q) + "}"; }

std::string target_name(TargetTable t) {
  switch (t) {
    case TargetTable::weight0: return "weight0";
    case TargetTable::weight1: return "weight1";
    case TargetTable::weight_sigma: return "sigma";
  }
  return "?";
}

std::string Reduction::to_string() const {
  switch (kind) {
    case ReductionKind::zero: return "0 (" + rule + ")";
    case ReductionKind::redirect:
      return target_name(table) + " at (a=" + std::to_string(a) + ", p=" + std::to_string(p) + ") (" + rule + ")";
    case ReductionKind::not_reducible: return "not reducible (" + rule + ")";
  }
  return "?";
}

Reduction reduce_bidegree(const Bidegree& bd, Space space) {
  return space == Space::field ? reduce_field(bd) : reduce_borel(bd);
}

}  // namespace eqmot
