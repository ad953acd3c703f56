#include "digraph_edit.hpp"

#include <deque>

#include "arboreal/error.hpp"

namespace arboreal::detail {

DigraphEdit DigraphEdit::from(const Network& n) {
  DigraphEdit e(n.taxa());
  for (VertexId v = 0; v < n.vertex_count(); ++v) {
    e.add_vertex(n.name(v));
    e.v_[v].taxon = n.taxon_of(v);
  }
  for (const auto& a : n.arcs()) e.add_arc(a.tail, a.head);
  return e;
}

VertexId DigraphEdit::add_vertex(std::string name) {
  v_.emplace_back();
  v_.back().name = std::move(name);
  return v_.size() - 1;
}

void DigraphEdit::add_arc(VertexId a, VertexId b) {
  v_.at(a).children.insert(b);
  v_.at(b).parents.insert(a);
}

void DigraphEdit::remove_arc(VertexId a, VertexId b) {
  v_.at(a).children.erase(b);
  v_.at(b).parents.erase(a);
}

void DigraphEdit::remove_vertex(VertexId x) {
  auto& vx = v_.at(x);
  for (VertexId c : vx.children) v_[c].parents.erase(x);
  for (VertexId p : vx.parents) v_[p].children.erase(x);
  vx.children.clear();
  vx.parents.clear();
  vx.alive = false;
}

void DigraphEdit::suppress(VertexId x) {
  auto& vx = v_.at(x);
  if (vx.parents.size() != 1 || vx.children.size() != 1) {
    throw Error(ErrorCode::InvalidArgument, "only indegree-1 outdegree-1 vertices can be suppressed");
  }
  const VertexId p = *vx.parents.begin();
  const VertexId c = *vx.children.begin();
  remove_vertex(x);
  add_arc(p, c);
}

void DigraphEdit::contract(VertexId u, VertexId w) {
  const std::set<VertexId> kids = v_.at(w).children;
  const std::set<VertexId> others = v_.at(w).parents;
  remove_vertex(w);
  for (VertexId c : kids) add_arc(u, c);
  for (VertexId p : others) {
    if (p != u) add_arc(p, u);
  }
}

void DigraphEdit::cleanup(const std::function<bool(VertexId)>& keep) {
  std::deque<VertexId> work;
  for (VertexId x = 0; x < v_.size(); ++x) {
    if (v_[x].alive) work.push_back(x);
  }
  while (!work.empty()) {
    const VertexId x = work.front();
    work.pop_front();
    if (!v_[x].alive) continue;
    const auto& vx = v_[x];
    const std::size_t in = vx.parents.size();
    const std::size_t out = vx.children.size();
    if (out == 0 && !keep(x)) {
      work.insert(work.end(), vx.parents.begin(), vx.parents.end());
      remove_vertex(x);
    } else if (in == 0 && out == 1) {
      work.push_back(*vx.children.begin());
      remove_vertex(x);
    } else if (in == 1 && out == 1) {
      const VertexId p = *vx.parents.begin();
      const VertexId c = *vx.children.begin();
      suppress(x);
      work.push_back(p);
      work.push_back(c);
    }
  }
}

DigraphEdit::Built DigraphEdit::build(std::optional<TaxonSet> taxa) const {
  std::vector<std::optional<VertexId>> new_id(v_.size());
  std::size_t count = 0;
  bool named = false;
  TaxonSubset present;
  for (VertexId x = 0; x < v_.size(); ++x) {
    if (!v_[x].alive) continue;
    new_id[x] = count++;
    named = named || !v_[x].name.empty();
  }
  std::vector<Arc> arcs;
  std::map<VertexId, std::string> leaves;
  std::vector<std::string> names;
  for (VertexId x = 0; x < v_.size(); ++x) {
    if (!new_id[x]) continue;
    for (VertexId c : v_[x].children) arcs.push_back({*new_id[x], *new_id[c]});
    if (v_[x].children.empty() && v_[x].taxon) {
      leaves[*new_id[x]] = taxa_.name(*v_[x].taxon);
      present = present.with(*v_[x].taxon);
    }
    names.push_back(v_[x].name);
  }
  if (!taxa && !present.empty()) taxa = taxa_.restricted(present);
  Network net = Network::validate(count, std::move(arcs), leaves, std::move(taxa));
  if (named) net = net.with_names(std::move(names));
  return {std::move(net), std::move(new_id)};
}

}  // namespace arboreal::detail
