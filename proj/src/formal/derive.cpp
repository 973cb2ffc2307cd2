#include "eqmot/formal/derive.hpp"

namespace eqmot {

Weight parse_weight(const std::string& text) {
  if (text == "1") return Weight::one;
  if (text == "sigma" || text == "σ") return Weight::sigma;
  throw std::invalid_argument("unknown weight '" + text + "', expected 1 or sigma");
}

std::string weight_name(Weight w) { return w == Weight::one ? "1" : "sigma"; }

bool cone_admissible(Weight, Cone cone, ProfileKind kind) {
  if (kind == ProfileKind::quadratically_closed || kind == ProfileKind::euclidean) return true;
  return cone == Cone::negative && kind == ProfileKind::formally_real;
}

bool DerivedTables::has_column(int p) const { return integral.count({p, a_min}) > 0; }

std::vector<int> DerivedTables::columns() const {
  std::vector<int> out;
  for (const auto& [key, fact] : integral)
    if (out.empty() || out.back() != key.first) out.push_back(key.first);
  return out;
}

const Fact* DerivedTables::integral_at(int a, int p) const {
  auto it = integral.find({p, a});
  return it == integral.end() ? nullptr : &it->second;
}

std::optional<Fact> DerivedTables::mod2_at(int a, int p) const {
  const Fact* here = integral_at(a, p);
  const Fact* next = integral_at(a + 1, p);
  if (!here || !next) return std::nullopt;
  Fact out{universal_coeff(here->value, next->value, FieldProfile::get(profile)), here->trail};
  out.trail.insert(next->trail.begin(), next->trail.end());
  out.trail.insert("B-uc");
  return out;
}

std::optional<Fact> DerivedTables::at(int a, int p, Coeff coeff) const {
  if (coeff == Coeff::Z2) return mod2_at(a, p);
  const Fact* f = integral_at(a, p);
  return f ? std::optional<Fact>(*f) : std::nullopt;
}

namespace {

std::string node_name(int a, int p) { return "H(" + std::to_string(a) + "," + std::to_string(p) + ")"; }

Trail with(Trail t, const std::string& id) {
  t.insert(id);
  return t;
}

class Deriver {
 public:
  Deriver(Weight weight, const FieldProfile& profile, int n_max) : profile_(profile) {
    if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
    out_.weight = weight;
    out_.profile = profile.kind();
    out_.n_max = n_max;
    out_.a_min = -n_max - 3;
    out_.a_max = n_max + 3;
  }

  DerivedTables run() {
    if (out_.weight == Weight::one) run_weight1();
    else run_weight_sigma();
    return std::move(out_);
  }

 private:
  // the sequence relating columns p and p + 1:
  //   H(a,p) -> H(a,p+1) -> M(a+p+1) -> H(a+1,p) -> ...
  struct Layout {
    int a_min;
    std::size_t g_low(int a) const { return 1 + 3 * static_cast<std::size_t>(a - a_min); }
    std::size_t g_high(int a) const { return g_low(a) + 1; }
    std::size_t motive(int a) const { return g_low(a) + 2; }  // M(a+p+1)
  };

  Fact motivic(int t) const {
    return {MotivicOracle().value(t, 1, Coeff::Z), {"B-mot"}};
  }

  void seed_column(int p, const std::map<int, FormalGroup>& values, const std::string& id) {
    for (int a = out_.a_min; a <= out_.a_max; ++a) {
      auto it = values.find(a);
      FormalGroup v = it == values.end() ? FormalGroup{} : it->second;
      out_.integral[{p, a}] = Fact{normalize(v, profile_), {id}};
    }
  }

  std::optional<Fact> known(int a, int p) const {
    if (a < out_.a_min || a > out_.a_max) return std::nullopt;
    const Fact* f = out_.integral_at(a, p);
    return f ? std::optional<Fact>(*f) : std::nullopt;
  }

  // arrows of the step window touching M(1)
  static std::size_t delta_arrow(const Layout& l, int p) { return l.g_high(-p); }
  static std::size_t pi_arrow(const Layout& l, int p) { return l.motive(-p); }

  // Solves the sequence relating columns p, p + 1, filling whichever is missing.
  bool step(int p, const std::vector<std::pair<bool, ArrowTag>>& tags) {
    Layout l{out_.a_min};
    LesWindow w;
    w.add_node("M(" + std::to_string(out_.a_min + p) + ")", motivic(out_.a_min + p));
    for (int a = out_.a_min; a <= out_.a_max; ++a) {
      w.add_node(node_name(a, p), known(a, p));
      w.add_node(node_name(a, p + 1), known(a, p + 1));
      w.add_node("M(" + std::to_string(a + p + 1) + ")", motivic(a + p + 1));
    }
    StepRecord rec;
    rec.p = p;
    rec.solved_column = out_.has_column(p) ? (out_.has_column(p + 1) ? p : p + 1) : p;
    for (const auto& [on_delta, tag] : tags) {
      w.tag(on_delta ? delta_arrow(l, p) : pi_arrow(l, p), tag);
      rec.tags.push_back((on_delta ? "delta: " : "pi: ") + tag.to_string());
    }

    WindowSolution s = solve_window(w, profile_, &AxiomBook::standard());
    if (!s.ok()) {
      rec.ok = false;
      rec.note = s.contradiction->constraint + ": " + s.contradiction->detail;
      out_.findings.push_back("step " + std::to_string(p) + " -> " + std::to_string(p + 1) + ": " + rec.note);
      out_.steps.push_back(rec);
      return false;
    }
    delta_[p] = s.arrows[delta_arrow(l, p)];
    pi_[p] = s.arrows[pi_arrow(l, p)];

    int col = rec.solved_column;
    if (!out_.has_column(col)) {
      std::vector<std::string> unresolved;
      for (int a = out_.a_min; a <= out_.a_max; ++a) {
        const auto& v = s.nodes[col == p ? l.g_low(a) : l.g_high(a)];
        if (v) out_.integral[{col, a}] = *v;
        else unresolved.push_back(node_name(a, col));
      }
      if (!unresolved.empty()) {
        for (int a = out_.a_min; a <= out_.a_max; ++a) out_.integral.erase({col, a});
        rec.ok = false;
        rec.note = "unresolved:";
        for (const auto& u : unresolved) rec.note += " " + u;
        out_.findings.push_back("step " + std::to_string(p) + " -> " + std::to_string(p + 1) + ": " + rec.note);
      }
    }
    out_.steps.push_back(rec);
    return rec.ok;
  }

  // Picks the tag for the arrow between M(1) and X. The composite through M(1) is
  // multiplication by 2; when the neighbouring arrow is an isomorphism so is this one up
  // to identification, otherwise the cone-specific vanishing axiom applies.
  std::optional<ArrowTag> choose(const FormalGroup& x, const std::optional<ArrowState>& neighbour,
                                 const std::string& zero_axiom, std::string& failure) {
    if (x.is_zero()) return std::nullopt;
    if (neighbour && neighbour->is_iso()) {
      try {
        return ArrowTag::known(mult2(x), with(neighbour->iso_trail(), "A-comp"));
      } catch (const FormalError& e) {
        failure = e.what();
        return std::nullopt;
      }
    }
    if (x.is_two_torsion()) {
      if (!AxiomBook::standard().holds(zero_axiom, profile_.kind())) {
        failure = zero_axiom + " does not hold under " + profile_.name();
        return std::nullopt;
      }
      return ArrowTag::zero({zero_axiom});
    }
    failure = "no axiom determines the map between M(1) and " + x.to_string();
    return std::nullopt;
  }

  void climb(int p_start, int p_last) {
    for (int p = p_start; p <= p_last; ++p) {
      auto x = known(1 - p, p);
      std::optional<ArrowState> prev;
      if (delta_.count(p - 1)) prev = delta_[p - 1];
      std::string failure;
      auto tag = choose(x->value, prev, "A-alpha", failure);
      if (!failure.empty()) return fail(p, failure);
      std::vector<std::pair<bool, ArrowTag>> tags;
      if (tag) tags.emplace_back(false, *tag);
      if (!step(p, tags)) return;
    }
  }

  void descend(int p_start, int p_last, const std::string& zero_axiom) {
    for (int p = p_start; p >= p_last; --p) {
      auto x = known(-p, p + 1);
      std::optional<ArrowState> next;
      if (pi_.count(p + 1)) next = pi_[p + 1];
      std::string failure;
      auto tag = choose(x->value, next, zero_axiom, failure);
      if (!failure.empty()) return fail(p, failure);
      std::vector<std::pair<bool, ArrowTag>> tags;
      if (tag) tags.emplace_back(true, *tag);
      if (!step(p, tags)) return;
    }
  }

  void fail(int p, const std::string& why) {
    out_.findings.push_back("step " + std::to_string(p) + " -> " + std::to_string(p + 1) + ": " + why);
  }

  void skip(Cone cone) {
    out_.skipped.push_back(std::string(cone == Cone::positive ? "positive" : "negative") + " cone in weight " +
                           weight_name(out_.weight) + " is outside the theorem hypotheses for " + profile_.name());
  }

  void run_weight1() {
    using K = AtomKind;
    seed_column(-1, {}, "A-EC2");
    seed_column(0, {{1, {K::Kstar}}}, "B-mot");
    seed_column(1, {{0, {K::Z2}}, {1, {K::KmodSq}}}, "B-prop");
    if (!step(-1, {}) || !step(0, {})) return;
    if (cone_admissible(Weight::one, Cone::positive, profile_.kind())) climb(1, out_.n_max - 1);
    else skip(Cone::positive);
    if (cone_admissible(Weight::one, Cone::negative, profile_.kind())) descend(-2, -out_.n_max, "A-alpha1");
    else skip(Cone::negative);
  }

  void run_weight_sigma() {
    using K = AtomKind;
    std::map<int, FormalGroup> diagonal;
    for (int a = out_.a_min; a <= out_.a_max; ++a) diagonal[a] = nie_decompose(a, 1, 0, Coeff::Z);
    seed_column(2, diagonal, "B-nie");
    seed_column(1, {{0, {K::Z2}}}, "B-sigma");
    if (!step(1, {})) return;

    KnownMap plus_minus_one{"inclusion of ±1", {K::Z2}, {K::Kstar}, {}, {K::Z2}, {K::Ksq}};
    KnownMap squares{"inclusion of squares", {K::Ksq}, {K::Kstar}, {}, {K::Ksq}, {K::KmodSq}};
    bool down_ok = step(0, {{true, ArrowTag::known(plus_minus_one, {"A-delta-sq"})}}) &&
              step(-1, {{true, ArrowTag::known(squares, {"A-EC2"})}});

    if (cone_admissible(Weight::sigma, Cone::positive, profile_.kind())) climb(2, out_.n_max - 1);
    else skip(Cone::positive);
    if (!cone_admissible(Weight::sigma, Cone::negative, profile_.kind())) skip(Cone::negative);
    else if (down_ok) descend(-2, -out_.n_max, "A-tau");
  }

  const FieldProfile& profile_;
  DerivedTables out_;
  std::map<int, ArrowState> delta_;
  std::map<int, ArrowState> pi_;
};

}  // namespace

DerivedTables derive_weight1(const FieldProfile& profile, int n_max) {
  return Deriver(Weight::one, profile, n_max).run();
}

DerivedTables derive_weight_sigma(const FieldProfile& profile, int n_max) {
  return Deriver(Weight::sigma, profile, n_max).run();
}

DerivedTables derive(Weight weight, const FieldProfile& profile, int n_max) {
  return Deriver(weight, profile, n_max).run();
}

}  // namespace eqmot
