//! Finite simple graphs, their independence complexes, whiskering and
//! chordality.

use std::collections::HashMap;
use std::fmt;

use crate::bits::{VertexSet, HARD_VERTEX_LIMIT};
use crate::complex::SimplicialComplex;
use crate::decomp::Decider;
use crate::error::{Error, Result};
use crate::label::{check_label, label_cmp};

/// A finite simple graph stored as adjacency bitsets over canonically
/// ordered labels.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<VertexSet>,
}

/// Outcome of evaluating the whiskered-graph criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhiskerCondition {
    pub vd: bool,
    /// First independent `μ ⊆ S` whose restricted link fails, if any.
    pub witness: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from declared vertices and edges. Edge endpoints are
    /// added to the vertex set; repeated edges collapse; loops are rejected.
    pub fn new<V, S, E, A, B>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: AsRef<str>,
        E: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let edges: Vec<(String, String)> = edges
            .into_iter()
            .map(|(a, b)| (a.as_ref().to_owned(), b.as_ref().to_owned()))
            .collect();
        let mut labels: Vec<String> = vertices
            .into_iter()
            .map(|s| s.as_ref().to_owned())
            .collect();
        labels.extend(edges.iter().flat_map(|(a, b)| [a.clone(), b.clone()]));
        labels.sort_by(|a, b| label_cmp(a, b));
        labels.dedup();
        if let Some(bad) = labels.iter().find(|l| !check_label(l)) {
            return Err(Error::Document(format!("invalid vertex label `{bad}`")));
        }
        if labels.len() > HARD_VERTEX_LIMIT {
            return Err(Error::Capacity {
                count: labels.len(),
                limit: HARD_VERTEX_LIMIT,
            });
        }
        let index: HashMap<&str, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let mut adj = vec![VertexSet::EMPTY; labels.len()];
        for (a, b) in &edges {
            if a == b {
                return Err(Error::Document(format!("loop at `{a}`")));
            }
            let (u, v) = (index[a.as_str()], index[b.as_str()]);
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { labels, adj })
    }

    /// The cycle `x1 - x2 - ... - xn - x1`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let labels: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let edges: Vec<(String, String)> = (0..n)
            .map(|i| (labels[i].clone(), labels[(i + 1) % n].clone()))
            .collect();
        Graph::new(&labels, edges).expect("cycle labels are valid")
    }

    /// Builds directly from canonical labels and symmetric adjacency.
    pub(crate) fn from_raw(labels: Vec<String>, adj: Vec<VertexSet>) -> Self {
        debug_assert_eq!(labels.len(), adj.len());
        Graph { labels, adj }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.labels.len())
    }

    pub fn id(&self, label: &str) -> Option<usize> {
        self.labels.binary_search_by(|l| label_cmp(l, label)).ok()
    }

    pub fn set_of<I, S>(&self, labels: I) -> Result<VertexSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        labels
            .into_iter()
            .map(|l| {
                self.id(l.as_ref())
                    .ok_or_else(|| Error::UnknownVertex(l.as_ref().to_owned()))
            })
            .collect()
    }

    pub fn labels_of(&self, set: VertexSet) -> Vec<&str> {
        set.iter().map(|v| self.labels[v].as_str()).collect()
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.adj.len())
            .flat_map(|u| {
                self.adj[u]
                    .iter()
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
    }

    /// The complex of independent sets over the same vertices. Facets are
    /// the maximal independent sets.
    pub fn independence_complex(&self) -> SimplicialComplex {
        let mut facets = Vec::new();
        self.maximal_independent(
            VertexSet::EMPTY,
            self.vertex_set(),
            VertexSet::EMPTY,
            &mut facets,
        );
        SimplicialComplex::from_raw(self.labels.clone(), facets)
    }

    /// Bron–Kerbosch with pivoting, run on non-adjacency: `chosen` is
    /// independent, `open` can still extend it, `closed` already has.
    fn maximal_independent(
        &self,
        chosen: VertexSet,
        open: VertexSet,
        closed: VertexSet,
        out: &mut Vec<VertexSet>,
    ) {
        if open.is_empty() {
            if closed.is_empty() {
                out.push(chosen);
            }
            return;
        }
        // Pivot maximizing |open ∖ N[u]|, the vertices compatible with u.
        let pivot = open
            .union(closed)
            .iter()
            .max_by_key(|&u| open.difference(self.adj[u]).without(u).len())
            .expect("open is non-empty");
        let branch = open.intersection(self.adj[pivot].with(pivot));
        let (mut open, mut closed) = (open, closed);
        for v in branch {
            let keep = self.adj[v].with(v);
            self.maximal_independent(
                chosen.with(v),
                open.difference(keep),
                closed.difference(keep),
                out,
            );
            open.remove(v);
            closed.insert(v);
        }
    }

    /// Adds a pendant vertex `y_i` on the `i`-th vertex of `s`, in canonical
    /// label order.
    pub fn add_whiskers(&self, s: VertexSet) -> Result<Graph> {
        if !s.is_subset(self.vertex_set()) {
            return Err(Error::NotASubset(format!("{s:?}")));
        }
        let whiskers: Vec<String> = (1..=s.len()).map(|i| format!("y{i}")).collect();
        if let Some(w) = whiskers.iter().find(|w| self.id(w).is_some()) {
            return Err(Error::OverlappingVertices(w.clone()));
        }
        let vertices = self.labels.iter().chain(&whiskers);
        let mut edges: Vec<(&str, &str)> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (self.label(u), self.label(v)))
            .collect();
        for (x, y) in s.iter().zip(&whiskers) {
            edges.push((self.label(x), y));
        }
        Graph::new(vertices, edges)
    }

    /// Label-level [`add_whiskers`](Self::add_whiskers); labels outside the
    /// graph are a domain error.
    pub fn add_whiskers_to<I, S>(&self, labels: I) -> Result<Graph>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let s = self.subset_of(labels)?;
        self.add_whiskers(s)
    }

    fn subset_of<I, S>(&self, labels: I) -> Result<VertexSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut set = VertexSet::EMPTY;
        for l in labels {
            match self.id(l.as_ref()) {
                Some(v) => set.insert(v),
                None => return Err(Error::NotASubset(format!("`{}`", l.as_ref()))),
            }
        }
        Ok(set)
    }

    /// The graph on `w` with every edge inside `w`.
    pub fn induced_subgraph(&self, w: VertexSet) -> Result<Graph> {
        if !w.is_subset(self.vertex_set()) {
            return Err(Error::NotASubset(format!("{w:?}")));
        }
        let mut new_id = vec![usize::MAX; self.labels.len()];
        for (i, v) in w.iter().enumerate() {
            new_id[v] = i;
        }
        let labels = w.iter().map(|v| self.labels[v].clone()).collect();
        let adj = w
            .iter()
            .map(|v| {
                self.adj[v]
                    .intersection(w)
                    .iter()
                    .map(|u| new_id[u])
                    .collect()
            })
            .collect();
        Ok(Graph::from_raw(labels, adj))
    }

    pub fn induced_subgraph_on<I, S>(&self, labels: I) -> Result<Graph>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let w = self.subset_of(labels)?;
        self.induced_subgraph(w)
    }

    /// Removes the vertices of `mu` and their incident edges.
    pub fn delete_vertices(&self, mu: VertexSet) -> Result<Graph> {
        if !mu.is_subset(self.vertex_set()) {
            return Err(Error::NotASubset(format!("{mu:?}")));
        }
        self.induced_subgraph(self.vertex_set().difference(mu))
    }

    /// Vertices of `mu` together with all their neighbours.
    pub fn closed_neighborhood(&self, mu: VertexSet) -> VertexSet {
        mu.iter().fold(mu, |acc, v| acc.union(self.adj[v]))
    }

    /// Removes the closed neighbourhood of `mu`. For independent `mu`, the
    /// independence complex of the result is the link of `mu` in the
    /// independence complex (up to the removed vertices).
    pub fn delete_closed_neighborhood(&self, mu: VertexSet) -> Result<Graph> {
        if !mu.is_subset(self.vertex_set()) {
            return Err(Error::NotASubset(format!("{mu:?}")));
        }
        self.induced_subgraph(self.vertex_set().difference(self.closed_neighborhood(mu)))
    }

    /// Chordality by maximum cardinality search followed by a perfect
    /// elimination check. Debug builds cross-check small graphs against the
    /// induced-cycle definition.
    pub fn is_chordal(&self) -> bool {
        let answer = self.is_chordal_mcs();
        #[cfg(debug_assertions)]
        if self.vertex_count() <= 12 {
            debug_assert_eq!(answer, self.is_chordal_by_cycles(), "chordality mismatch");
        }
        answer
    }

    /// Visit order of a maximum cardinality search, ties broken by id.
    pub fn mcs_order(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut weight = vec![0usize; n];
        let mut visited = VertexSet::EMPTY;
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = self
                .vertex_set()
                .difference(visited)
                .iter()
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
                .expect("unvisited vertex remains");
            for u in self.adj[v].difference(visited) {
                weight[u] += 1;
            }
            visited.insert(v);
            order.push(v);
        }
        order
    }

    /// Whether the reverse of `order` is a perfect elimination ordering: for
    /// each vertex, its neighbours earlier in `order` form a clique. Checked
    /// in the usual way, against the latest such neighbour only.
    pub fn is_reverse_peo(&self, order: &[usize]) -> bool {
        let mut position = vec![0; self.vertex_count()];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let mut earlier = VertexSet::EMPTY;
        for &v in order {
            let back = self.adj[v].intersection(earlier);
            if let Some(parent) = back.iter().max_by_key(|&u| position[u]) {
                if !back.without(parent).is_subset(self.adj[parent]) {
                    return false;
                }
            }
            earlier.insert(v);
        }
        true
    }

    fn is_chordal_mcs(&self) -> bool {
        self.is_reverse_peo(&self.mcs_order())
    }

    /// Chordality straight from the definition: no induced cycle of length at
    /// least four. Exponential; meant for small graphs and cross-checks.
    pub fn is_chordal_by_cycles(&self) -> bool {
        self.vertex_set()
            .subsets()
            .filter(|s| s.len() >= 4)
            .all(|s| !self.induces_cycle(s))
    }

    /// Whether the subgraph induced on `s` is a single cycle.
    pub fn induces_cycle(&self, s: VertexSet) -> bool {
        if s.len() < 3 || s.iter().any(|v| self.adj[v].intersection(s).len() != 2) {
            return false;
        }
        let start = s.first().expect("non-empty");
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = frontier
                .iter()
                .fold(VertexSet::EMPTY, |acc, v| {
                    acc.union(self.adj[v].intersection(s))
                })
                .difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen == s
    }

    /// Whether the whole graph is one cycle.
    pub fn is_cycle(&self) -> bool {
        self.induces_cycle(self.vertex_set())
    }

    /// Whether the graph is a cycle on five vertices.
    pub fn is_five_cycle(&self) -> bool {
        self.vertex_count() == 5 && self.is_cycle()
    }

    /// Evaluates the criterion for `Ind(G ∪ W(S))` to be vertex
    /// decomposable: for every independent `μ ⊆ S`, the independence complex
    /// of what survives in `V ∖ S` after removing the closed neighbourhood of
    /// `μ` must be vertex decomposable. Reports the first failing `μ` in
    /// order of size, then lexicographically.
    pub fn whiskered_vd_condition(
        &self,
        s: VertexSet,
        decider: &Decider,
    ) -> Result<WhiskerCondition> {
        if !s.is_subset(self.vertex_set()) {
            return Err(Error::NotASubset(format!("{s:?}")));
        }
        let outside = self.vertex_set().difference(s);
        let mut mus: Vec<VertexSet> = s.subsets().filter(|m| self.is_independent(*m)).collect();
        mus.sort_by(|a, b| a.len().cmp(&b.len()).then(a.lex_cmp(*b)));
        for mu in mus {
            let keep = outside.difference(self.closed_neighborhood(mu));
            let complex = self.induced_subgraph(keep)?.independence_complex();
            if !decider.is_vertex_decomposable(&complex)? {
                return Ok(WhiskerCondition {
                    vd: false,
                    witness: Some(self.labels_of(mu).into_iter().map(str::to_owned).collect()),
                });
            }
        }
        Ok(WhiskerCondition {
            vd: true,
            witness: None,
        })
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(u, v)| format!("{}-{}", self.labels[u], self.labels[v]))
            .collect();
        write!(f, "G({}; {})", self.labels.join(" "), edges.join(" "))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::PartialColoring;
    use crate::decomp::is_vertex_decomposable;

    fn graph(vertices: &[&str], edges: &[(&str, &str)]) -> Graph {
        Graph::new(vertices, edges.iter().copied()).unwrap()
    }

    fn cx(facets: &[&str]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets.iter().map(|f| f.split_whitespace())).unwrap()
    }

    #[test]
    fn independence_complex_examples() {
        let c5 = Graph::cycle(5);
        assert_eq!(
            c5.independence_complex(),
            cx(&["x1 x3", "x1 x4", "x2 x4", "x2 x5", "x3 x5"])
        );
        let empty = graph(&["x1", "x2"], &[]);
        assert_eq!(empty.independence_complex(), cx(&["x1 x2"]));
        let edge = graph(&[], &[("x1", "x2")]);
        assert_eq!(edge.independence_complex(), cx(&["x1", "x2"]));
        let none = graph(&[], &[]);
        assert_eq!(none.independence_complex(), SimplicialComplex::empty_face());
    }

    #[test]
    fn whisker_examples() {
        let p = graph(&[], &[("x1", "x2")]);
        let w = p.add_whiskers_to(["x1"]).unwrap();
        assert_eq!(w, graph(&[], &[("x1", "x2"), ("x1", "y1")]));
        assert_eq!(p.add_whiskers(VertexSet::EMPTY).unwrap(), p);
        let c5 = Graph::cycle(5);
        let w = c5.add_whiskers(c5.vertex_set()).unwrap();
        assert_eq!((w.vertex_count(), w.edge_count()), (10, 10));
        assert!(matches!(
            p.add_whiskers_to(["x7"]),
            Err(Error::NotASubset(_))
        ));
    }

    #[test]
    fn whiskers_follow_label_order() {
        let g = graph(&[], &[("x10", "x2"), ("x2", "x1")]);
        let w = g.add_whiskers_to(["x10", "x1"]).unwrap();
        assert!(w.has_edge(w.id("x1").unwrap(), w.id("y1").unwrap()));
        assert!(w.has_edge(w.id("x10").unwrap(), w.id("y2").unwrap()));
    }

    #[test]
    fn subgraph_examples() {
        let c5 = Graph::cycle(5);
        let p = c5.induced_subgraph_on(["x1", "x2", "x3"]).unwrap();
        assert_eq!(p, graph(&[], &[("x1", "x2"), ("x2", "x3")]));
        assert_eq!(
            c5.induced_subgraph(VertexSet::EMPTY)
                .unwrap()
                .vertex_count(),
            0
        );
        assert_eq!(c5.induced_subgraph(c5.vertex_set()).unwrap(), c5);
        assert!(c5.induced_subgraph_on(["x9"]).is_err());
    }

    #[test]
    fn delete_vertices_examples() {
        let c5 = Graph::cycle(5);
        let p = c5.delete_vertices(c5.set_of(["x1"]).unwrap()).unwrap();
        assert_eq!(p, graph(&[], &[("x2", "x3"), ("x3", "x4"), ("x4", "x5")]));
        assert_eq!(c5.delete_vertices(VertexSet::EMPTY).unwrap(), c5);
        let e = graph(&[], &[("x1", "x2")]);
        let r = e.delete_vertices(e.set_of(["x2"]).unwrap()).unwrap();
        assert_eq!(r, graph(&["x1"], &[]));
    }

    #[test]
    fn chordal_examples() {
        assert!(!Graph::cycle(4).is_chordal());
        assert!(!Graph::cycle(5).is_chordal());
        assert!(Graph::cycle(3).is_chordal());
        let tree = graph(
            &[],
            &[("a", "b"), ("a", "c"), ("c", "d"), ("c", "e"), ("e", "f")],
        );
        assert!(tree.is_chordal());
        assert!(tree.is_chordal_by_cycles());
        // C4 with one chord.
        let chorded = graph(
            &[],
            &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("a", "c")],
        );
        assert!(chorded.is_chordal());
        assert!(graph(&[], &[]).is_chordal());
        assert!(Graph::cycle(5).is_five_cycle());
    }

    #[test]
    fn closed_neighborhood_link_identity() {
        let g = graph(
            &[],
            &[
                ("x1", "x2"),
                ("x2", "x3"),
                ("x3", "x4"),
                ("x4", "x5"),
                ("x5", "x1"),
                ("x2", "x5"),
                ("x1", "x6"),
            ],
        );
        let ind = g.independence_complex();
        for mu in ind.faces() {
            let lk = ind.link(mu).unwrap();
            let rest = g
                .delete_closed_neighborhood(mu)
                .unwrap()
                .independence_complex();
            let keep = g.vertex_set().difference(g.closed_neighborhood(mu));
            let lk_on_keep = lk.restriction_to(rest.labels()).unwrap();
            assert_eq!(lk_on_keep, rest, "μ = {}", ind.face_string(mu));
            // Everything the link touches lies in the kept vertices.
            assert!(lk
                .labels_of(lk.support())
                .iter()
                .all(|l| keep.contains(g.id(l).unwrap())));
        }
    }

    #[test]
    fn open_deletion_does_not_give_links() {
        // C4 on a,b,c,d with a pendant u on a, and S = {x} with x ~ u.
        // Deleting only μ = {x} leaves G|_{V∖S} for every μ, whose
        // independence complex is decomposable, yet the whiskered graph is
        // not: the link of x sees the bare 4-cycle.
        let g = graph(
            &[],
            &[
                ("a", "b"),
                ("b", "c"),
                ("c", "d"),
                ("d", "a"),
                ("a", "u"),
                ("u", "x"),
            ],
        );
        let s = g.set_of(["x"]).unwrap();
        let outside = g.vertex_set().difference(s);
        let naive = g.induced_subgraph(outside).unwrap().independence_complex();
        assert!(is_vertex_decomposable(&naive).unwrap());
        for mu in s.subsets() {
            let literal = g.delete_vertices(mu).unwrap();
            let lit_outside = literal.set_of(g.labels_of(outside)).unwrap();
            assert_eq!(
                literal
                    .induced_subgraph(lit_outside)
                    .unwrap()
                    .independence_complex(),
                naive
            );
        }
        let whiskered = g.add_whiskers(s).unwrap().independence_complex();
        assert!(!is_vertex_decomposable(&whiskered).unwrap());
        let cond = g.whiskered_vd_condition(s, &Decider::default()).unwrap();
        assert!(!cond.vd);
        assert_eq!(cond.witness, Some(vec!["x".to_owned()]));
    }

    #[test]
    fn whiskered_condition_examples() {
        let d = Decider::default();
        // G ∖ S chordal.
        let g = graph(
            &[],
            &[("x1", "x2"), ("x2", "x3"), ("x3", "x1"), ("x3", "x4")],
        );
        let s = g.set_of(["x4"]).unwrap();
        assert!(g.whiskered_vd_condition(s, &d).unwrap().vd);
        // G ∖ S = C5.
        let mut edges: Vec<(String, String)> = Graph::cycle(5)
            .edges()
            .into_iter()
            .map(|(u, v)| (format!("x{}", u + 1), format!("x{}", v + 1)))
            .collect();
        edges.push(("x1".into(), "x6".into()));
        edges.push(("x3".into(), "x6".into()));
        let g = Graph::new(Vec::<&str>::new(), edges).unwrap();
        let s = g.set_of(["x6"]).unwrap();
        assert!(g.whiskered_vd_condition(s, &d).unwrap().vd);
        // Two edges x1x2, x4x5 joined through x3, S = {x3}.
        let g = graph(
            &[],
            &[("x1", "x2"), ("x4", "x5"), ("x2", "x3"), ("x3", "x4")],
        );
        let s = g.set_of(["x3"]).unwrap();
        let cond = g.whiskered_vd_condition(s, &d).unwrap();
        let direct =
            is_vertex_decomposable(&g.add_whiskers(s).unwrap().independence_complex()).unwrap();
        assert_eq!(cond.vd, direct);
        assert!(cond.vd);
        assert_eq!(cond.witness, None);
    }

    #[test]
    fn whiskered_graph_matches_coloring() {
        let g = graph(
            &[],
            &[
                ("x1", "x2"),
                ("x2", "x3"),
                ("x3", "x4"),
                ("x4", "x1"),
                ("x1", "x5"),
            ],
        );
        let s = ["x1", "x3"];
        let lhs = g.add_whiskers_to(s).unwrap().independence_complex();
        let chi = PartialColoring::singletons(s).unwrap();
        let rhs = chi.whisker(&g.independence_complex()).unwrap();
        assert_eq!(lhs, rhs);
    }
}
