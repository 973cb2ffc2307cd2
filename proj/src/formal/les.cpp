#include "eqmot/formal/les.hpp"

#include "eqmot/formal/axioms.hpp"

namespace eqmot {

namespace {

Trail join(const Trail& a, const Trail& b) {
  Trail out = a;
  out.insert(b.begin(), b.end());
  return out;
}

FormalGroup elementary(std::size_t count) { return FormalGroup(std::vector<Atom>(count, AtomKind::Z2)); }

struct Conflict {
  Contradiction report;
};

class Solver {
 public:
  Solver(const LesWindow& w, const FieldProfile& profile) : w_(w), profile_(profile) {
    nodes_.resize(w.node_count());
    images_.resize(w.arrow_count());
    for (std::size_t i = 0; i < w.node_count(); ++i)
      if (w.value(i)) set_node(i, w.value(i)->value, w.value(i)->trail);
  }

  WindowSolution run() {
    WindowSolution out;
    try {
      while (changed_) {
        changed_ = false;
        for (std::size_t j = 0; j < w_.arrow_count(); ++j) arrow_rules(j);
        for (std::size_t i = 0; i < w_.node_count(); ++i) node_rules(i);
      }
      validate();
    } catch (const Conflict& c) {
      out.contradiction = c.report;
    }
    out.nodes = nodes_;
    out.arrows.resize(w_.arrow_count());
    for (std::size_t j = 0; j < w_.arrow_count(); ++j) out.arrows[j] = state(j);
    for (std::size_t i = 0; i < w_.node_count(); ++i)
      if (!nodes_[i]) out.unknown.push_back(i);
    return out;
  }

 private:
  bool interior(std::size_t i) const { return i > 0 && i + 1 < w_.node_count(); }
  const std::string& label(std::size_t i) const { return w_.label(i); }

  std::string arrow_label(std::size_t j) const { return label(j) + " -> " + label(j + 1); }

  static bool is_zero(const std::optional<Fact>& f) { return f && f->value.is_zero(); }

  void assign(std::optional<Fact>& slot, const FormalGroup& value, const Trail& trail, const std::string& what) {
    FormalGroup v = normalize(value, profile_);
    if (!slot) {
      slot = Fact{v, trail};
      changed_ = true;
      return;
    }
    if (slot->value != v)
      throw Conflict{{what, "forced to be both " + slot->value.to_string() + " and " + v.to_string(),
                      join(slot->trail, trail)}};
  }

  void set_node(std::size_t i, const FormalGroup& value, const Trail& trail) {
    assign(nodes_[i], value, trail, "value of node " + label(i));
  }

  void set_image(std::size_t j, const FormalGroup& value, const Trail& trail) {
    assign(images_[j], value, trail, "image of " + arrow_label(j));
  }

  void arrow_rules(std::size_t j) {
    if (is_zero(nodes_[j])) set_image(j, {}, nodes_[j]->trail);
    if (is_zero(nodes_[j + 1])) set_image(j, {}, nodes_[j + 1]->trail);
    for (const auto& tag : w_.tags(j)) {
      const Trail& t = tag.trail;
      bool inj = tag.property == ArrowProperty::injective || tag.property == ArrowProperty::iso;
      bool surj = tag.property == ArrowProperty::surjective || tag.property == ArrowProperty::iso;
      switch (tag.property) {
        case ArrowProperty::zero:
          set_image(j, {}, t);
          break;
        case ArrowProperty::known: {
          const KnownMap& m = *tag.map;
          set_node(j, m.source, t);
          set_node(j + 1, m.target, t);
          set_image(j, m.image, t);
          if (interior(j)) set_image(j - 1, m.kernel, t);
          if (interior(j + 1)) set_image(j + 1, m.cokernel, t);
          break;
        }
        default:
          break;
      }
      if (inj) {
        if (interior(j)) set_image(j - 1, {}, t);
        if (nodes_[j]) set_image(j, nodes_[j]->value, join(t, nodes_[j]->trail));
        if (images_[j]) set_node(j, images_[j]->value, join(t, images_[j]->trail));
      }
      if (surj) {
        if (interior(j + 1)) set_image(j + 1, {}, t);
        if (nodes_[j + 1]) set_image(j, nodes_[j + 1]->value, join(t, nodes_[j + 1]->trail));
        if (images_[j]) set_node(j + 1, images_[j]->value, join(t, images_[j]->trail));
      }
    }
  }

  // exactness at node i: 0 -> L -> N -> R -> 0 with L = image in, R = image out
  void node_rules(std::size_t i) {
    if (!interior(i)) return;
    auto& n = nodes_[i];
    auto& l = images_[i - 1];
    auto& r = images_[i];
    if (is_zero(n)) {
      set_image(i - 1, {}, n->trail);
      set_image(i, {}, n->trail);
    }
    if (is_zero(l)) {
      if (n) set_image(i, n->value, join(n->trail, l->trail));
      if (r) set_node(i, r->value, join(r->trail, l->trail));
    }
    if (is_zero(r)) {
      if (n) set_image(i - 1, n->value, join(n->trail, r->trail));
      if (l) set_node(i, l->value, join(l->trail, r->trail));
    }
    if (n && n->value.is_finite_elementary()) {
      std::size_t total = n->value.size();
      if (l && !r && l->value.is_finite_elementary()) {
        if (l->value.size() > total) conflict_at(i, "incoming image larger than the group");
        set_image(i, elementary(total - l->value.size()), join(n->trail, l->trail));
      }
      if (r && !l && r->value.is_finite_elementary()) {
        if (r->value.size() > total) conflict_at(i, "outgoing image larger than the group");
        set_image(i - 1, elementary(total - r->value.size()), join(n->trail, r->trail));
      }
    }
  }

  [[noreturn]] void conflict_at(std::size_t i, const std::string& detail) {
    Trail t;
    for (const auto* f : {&nodes_[i], &images_[i - 1], &images_[i]})
      if (*f) t = join(t, (*f)->trail);
    throw Conflict{{"exactness at node " + label(i), detail, t}};
  }

  void validate() {
    for (std::size_t i = 1; i + 1 < w_.node_count(); ++i) {
      const auto& n = nodes_[i];
      const auto& l = images_[i - 1];
      const auto& r = images_[i];
      if (!n || !l || !r) continue;
      if (l->value.is_zero() && n->value != r->value)
        conflict_at(i, "kernel is 0 but " + n->value.to_string() + " is not isomorphic to the image " +
                           r->value.to_string());
      if (r->value.is_zero() && n->value != l->value)
        conflict_at(i, "outgoing map is 0 but the incoming image " + l->value.to_string() + " is not " +
                           n->value.to_string());
      if (n->value.is_finite_elementary() && l->value.is_finite_elementary() && r->value.is_finite_elementary() &&
          l->value.size() + r->value.size() != n->value.size())
        conflict_at(i, "orders do not multiply: " + l->value.to_string() + ", " + n->value.to_string() + ", " +
                           r->value.to_string());
    }
  }

  ArrowState state(std::size_t j) const {
    ArrowState s;
    s.image = images_[j];
    if (is_zero(nodes_[j])) s.injective = nodes_[j]->trail;
    else if (interior(j) && is_zero(images_[j - 1])) s.injective = images_[j - 1]->trail;
    if (is_zero(nodes_[j + 1])) s.surjective = nodes_[j + 1]->trail;
    else if (interior(j + 1) && is_zero(images_[j + 1])) s.surjective = images_[j + 1]->trail;
    for (const auto& tag : w_.tags(j)) {
      bool inj = tag.property == ArrowProperty::injective || tag.property == ArrowProperty::iso ||
                 (tag.property == ArrowProperty::known && normalize(tag.map->kernel, profile_).is_zero());
      bool surj = tag.property == ArrowProperty::surjective || tag.property == ArrowProperty::iso ||
                  (tag.property == ArrowProperty::known && normalize(tag.map->cokernel, profile_).is_zero());
      if (inj && !s.injective) s.injective = tag.trail;
      if (surj && !s.surjective) s.surjective = tag.trail;
    }
    return s;
  }

  const LesWindow& w_;
  const FieldProfile& profile_;
  std::vector<std::optional<Fact>> nodes_;
  std::vector<std::optional<Fact>> images_;
  bool changed_ = true;
};

std::string property_name(ArrowProperty p) {
  switch (p) {
    case ArrowProperty::zero: return "zero";
    case ArrowProperty::injective: return "injective";
    case ArrowProperty::surjective: return "surjective";
    case ArrowProperty::iso: return "iso";
    case ArrowProperty::known: return "known";
  }
  return "?";
}

std::string trail_string(const Trail& t) {
  std::string out;
  for (const auto& id : t) out += (out.empty() ? "" : ",") + id;
  return out;
}

}  // namespace

KnownMap mult2(const FormalGroup& g) {
  KnownMap m;
  m.name = "mult2(" + g.to_string() + ")";
  m.source = g;
  m.target = g;
  std::vector<Atom> kernel, image, cokernel;
  for (const auto& a : g.atoms()) {
    if (a.is_two_torsion()) {
      kernel.push_back(a);
      cokernel.push_back(a);
    } else if (a.kind == AtomKind::Z) {
      image.push_back(a);
      cokernel.emplace_back(AtomKind::Z2);
    } else if (a.kind == AtomKind::Kstar) {
      kernel.emplace_back(AtomKind::Tors2K);
      image.emplace_back(AtomKind::Ksq);
      cokernel.emplace_back(AtomKind::KmodSq);
    } else {
      throw FormalError("no rule for multiplication by 2 on " + a.to_string());
    }
  }
  m.kernel = FormalGroup(std::move(kernel));
  m.image = FormalGroup(std::move(image));
  m.cokernel = FormalGroup(std::move(cokernel));
  return m;
}

std::string ArrowTag::to_string() const {
  std::string out = property == ArrowProperty::known ? map->name : property_name(property);
  if (!trail.empty()) out += " [" + trail_string(trail) + "]";
  return out;
}

Trail ArrowState::iso_trail() const {
  Trail t;
  if (injective) t = join(t, *injective);
  if (surjective) t = join(t, *surjective);
  return t;
}

std::size_t LesWindow::add_node(std::string label, std::optional<Fact> value) {
  labels_.push_back(std::move(label));
  values_.push_back(std::move(value));
  if (labels_.size() > 1) tags_.emplace_back();
  return labels_.size() - 1;
}

void LesWindow::tag(std::size_t arrow, ArrowTag tag) {
  if (arrow >= tags_.size()) throw std::out_of_range("arrow index out of range");
  if (tag.property == ArrowProperty::known && !tag.map) throw std::invalid_argument("known tag without a map");
  tags_[arrow].push_back(std::move(tag));
}

std::string LesWindow::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) {
      out += " -";
      for (const auto& t : tags_[i - 1]) out += "{" + t.to_string() + "}";
      out += "-> ";
    }
    out += labels_[i];
    if (values_[i]) out += "=" + values_[i]->value.to_string();
  }
  return out;
}

WindowSolution solve_window(const LesWindow& window, const FieldProfile& profile, const AxiomBook* axioms) {
  if (axioms) {
    auto check = [&](const Trail& trail, const std::string& where) -> std::optional<Contradiction> {
      for (const auto& id : trail) {
        if (!axioms->contains(id)) return Contradiction{"axiom " + id, "unknown axiom used at " + where, {id}};
        if (!axioms->holds(id, profile.kind()))
          return Contradiction{"axiom " + id, "hypothesis fails under " + profile.name() + " at " + where, {id}};
      }
      return std::nullopt;
    };
    std::optional<Contradiction> bad;
    for (std::size_t i = 0; i < window.node_count() && !bad; ++i)
      if (window.value(i)) bad = check(window.value(i)->trail, window.label(i));
    for (std::size_t j = 0; j < window.arrow_count() && !bad; ++j)
      for (const auto& t : window.tags(j))
        if (!bad) bad = check(t.trail, window.label(j) + " -> " + window.label(j + 1));
    if (bad) {
      WindowSolution out;
      out.contradiction = bad;
      return out;
    }
  }
  try {
    return Solver(window, profile).run();
  } catch (const Conflict& c) {
    WindowSolution out;
    out.contradiction = c.report;
    return out;
  }
}

}  // namespace eqmot
