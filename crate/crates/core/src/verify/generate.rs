//! Deterministic instance generators.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::bits::VertexSet;
use crate::coloring::PartialColoring;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::{InstanceSpec, Mode};

/// Largest vertex count for exhaustive complex enumeration.
pub const EXHAUSTIVE_COMPLEX_LIMIT: usize = 5;
/// Largest vertex count for exhaustive graph enumeration.
pub const EXHAUSTIVE_GRAPH_LIMIT: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Complex(SimplicialComplex),
    Graph(Graph),
}

pub fn x_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

fn complex_on(labels: &[String], faces: Vec<VertexSet>) -> SimplicialComplex {
    let faces: Vec<Vec<&str>> = faces
        .iter()
        .map(|f| f.iter().map(|v| labels[v].as_str()).collect())
        .collect();
    SimplicialComplex::with_vertices(labels.iter().cloned(), faces)
        .expect("generated labels are valid")
}

/// Every antichain of subsets of `{0, ..., n-1}`, including the empty
/// antichain (the void complex) and `{∅}`.
pub fn antichains(n: usize) -> Vec<Vec<VertexSet>> {
    let mut subsets: Vec<VertexSet> = VertexSet::full(n).subsets().collect();
    subsets.sort_by(|a, b| b.len().cmp(&a.len()).then(a.lex_cmp(*b)));
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn walk(
        i: usize,
        subsets: &[VertexSet],
        chosen: &mut Vec<VertexSet>,
        out: &mut Vec<Vec<VertexSet>>,
    ) {
        if i == subsets.len() {
            out.push(chosen.clone());
            return;
        }
        walk(i + 1, subsets, chosen, out);
        let s = subsets[i];
        // Earlier subsets are no smaller, so only containment in them matters.
        if !chosen.iter().any(|c| s.is_subset(*c)) {
            chosen.push(s);
            walk(i + 1, subsets, chosen, out);
            chosen.pop();
        }
    }
    walk(0, &subsets, &mut chosen, &mut out);
    out
}

/// All complexes with vertex set `{x1, ..., xn}`, void included.
pub fn all_complexes(n: usize) -> Vec<SimplicialComplex> {
    let labels = x_labels(n);
    antichains(n)
        .into_iter()
        .map(|a| complex_on(&labels, a))
        .collect()
}

/// All labelled graphs on `{x1, ..., xn}`.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let labels = x_labels(n);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &(u, v))| (labels[u].as_str(), labels[v].as_str()));
            Graph::new(&labels, edges).expect("generated labels are valid")
        })
        .collect()
}

/// A random complex on `n` vertices with at most `facet_budget` generating
/// faces of dimension at most `max_dim`.
///
/// Generating faces have a common target size (usually 2 or 3) or one less, so the result is
/// close to pure. Faces of freely mixed sizes mostly collapse into a few
/// large facets, and such complexes are almost always decomposable.
pub fn random_complex(
    rng: &mut ChaCha8Rng,
    n: usize,
    max_dim: usize,
    facet_budget: usize,
) -> SimplicialComplex {
    random_complex_labeled(rng, &x_labels(n), max_dim, facet_budget)
}

pub fn random_complex_labeled(
    rng: &mut ChaCha8Rng,
    labels: &[String],
    max_dim: usize,
    facet_budget: usize,
) -> SimplicialComplex {
    let n = labels.len();
    if n == 0 || facet_budget == 0 {
        return complex_on(labels, vec![VertexSet::EMPTY]);
    }
    let count = rng.gen_range(1..=facet_budget);
    let max_size = (max_dim + 1).min(n);
    // Low dimensions are where non-decomposable complexes are common.
    let target = if max_size >= 2 && rng.gen_bool(0.7) {
        rng.gen_range(2..=max_size.min(3))
    } else {
        rng.gen_range(1..=max_size)
    };
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(rng);
    // Sometimes draw the faces from two disjoint blocks: disconnected
    // complexes of positive dimension are the typical failures.
    let blocks: Vec<&[usize]> = if n >= 2 * target && target >= 2 && rng.gen_bool(0.35) {
        let cut = rng.gen_range(target..=n - target);
        vec![&ids[..cut], &ids[cut..]]
    } else {
        vec![&ids[..]]
    };
    let faces = (0..count)
        .map(|i| {
            let block = blocks[i % blocks.len()];
            let size = if target > 1 && rng.gen_bool(0.25) {
                target - 1
            } else {
                target
            };
            block
                .choose_multiple(rng, size.min(block.len()))
                .copied()
                .collect()
        })
        .collect();
    complex_on(labels, faces)
}

/// Pairs of vertices sharing a facet.
fn conflicts(complex: &SimplicialComplex) -> Vec<VertexSet> {
    let mut adj = vec![VertexSet::EMPTY; complex.vertex_count()];
    for f in complex.facets() {
        for v in *f {
            adj[v] = adj[v].union(f.without(v));
        }
    }
    adj
}

/// A random valid coloring of `w`: vertices join a random compatible class
/// or open a new one. Sometimes one empty class is added; class order is
/// shuffled.
pub fn random_coloring(
    rng: &mut ChaCha8Rng,
    complex: &SimplicialComplex,
    w: VertexSet,
) -> PartialColoring {
    let adj = conflicts(complex);
    let mut order: Vec<usize> = w.iter().collect();
    order.shuffle(rng);
    let mut classes: Vec<VertexSet> = Vec::new();
    for v in order {
        let open: Vec<usize> = (0..classes.len())
            .filter(|&j| classes[j].is_disjoint(adj[v]))
            .collect();
        let pick = rng.gen_range(0..=open.len());
        if pick == open.len() {
            classes.push(VertexSet::singleton(v));
        } else {
            classes[open[pick]].insert(v);
        }
    }
    if rng.gen_bool(0.2) {
        classes.push(VertexSet::EMPTY);
    }
    classes.shuffle(rng);
    to_coloring(complex, &classes)
}

/// A random valid coloring of the whole vertex set.
pub fn random_full_coloring(rng: &mut ChaCha8Rng, complex: &SimplicialComplex) -> PartialColoring {
    let mut c = random_coloring(rng, complex, complex.vertex_set());
    // Full colorings partition V exactly; an extra empty class is harmless
    // but keep them out so `s` counts real classes.
    let classes: Vec<Vec<String>> = c
        .classes()
        .iter()
        .filter(|k| !k.is_empty())
        .map(|k| k.members().to_vec())
        .collect();
    if classes.len() != c.len() {
        c = PartialColoring::new(classes).expect("valid classes");
    }
    c
}

pub fn to_coloring(complex: &SimplicialComplex, classes: &[VertexSet]) -> PartialColoring {
    PartialColoring::new(classes.iter().map(|c| complex.labels_of(*c)))
        .expect("generated classes are disjoint")
}

/// All valid colorings of `w` up to class order, each also with one extra
/// empty class appended.
pub fn all_colorings(complex: &SimplicialComplex, w: VertexSet) -> Vec<PartialColoring> {
    let adj = conflicts(complex);
    let mut out = Vec::new();
    let mut classes: Vec<VertexSet> = Vec::new();
    fn walk(
        rest: &[usize],
        adj: &[VertexSet],
        classes: &mut Vec<VertexSet>,
        out: &mut Vec<Vec<VertexSet>>,
    ) {
        let Some((&v, rest)) = rest.split_first() else {
            out.push(classes.clone());
            return;
        };
        for j in 0..classes.len() {
            if classes[j].is_disjoint(adj[v]) {
                classes[j].insert(v);
                walk(rest, adj, classes, out);
                classes[j].remove(v);
            }
        }
        classes.push(VertexSet::singleton(v));
        walk(rest, adj, classes, out);
        classes.pop();
    }
    let order: Vec<usize> = w.iter().collect();
    let mut partitions = Vec::new();
    walk(&order, &adj, &mut classes, &mut partitions);
    for p in partitions {
        out.push(to_coloring(complex, &p));
        let mut padded = p;
        padded.push(VertexSet::EMPTY);
        out.push(to_coloring(complex, &padded));
    }
    out
}

/// A random graph on `{x1, ..., xn}` with a random edge density.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let labels = x_labels(n);
    let p: f64 = rng.gen_range(0.15..0.65);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((labels[u].as_str(), labels[v].as_str()));
            }
        }
    }
    Graph::new(&labels, edges).expect("generated labels are valid")
}

/// A random chordal graph: each new vertex is joined to a random clique.
pub fn random_chordal_graph(rng: &mut ChaCha8Rng, labels: &[String]) -> Graph {
    let n = labels.len();
    let mut adj = vec![VertexSet::EMPTY; n];
    for v in 1..n {
        if rng.gen_bool(0.15) {
            continue;
        }
        let u = rng.gen_range(0..v);
        let mut clique = VertexSet::singleton(u);
        let mut pool: Vec<usize> = adj[u].iter().filter(|&w| w < v).collect();
        pool.shuffle(rng);
        for w in pool {
            if rng.gen_bool(0.6) && clique.is_subset(adj[w].with(w)) {
                clique.insert(w);
            }
        }
        for w in clique {
            adj[v].insert(w);
            adj[w].insert(v);
        }
    }
    let edges: Vec<(&str, &str)> = (0..n)
        .flat_map(|u| adj[u].iter().filter(move |&w| w > u).map(move |w| (u, w)))
        .map(|(u, w)| (labels[u].as_str(), labels[w].as_str()))
        .collect();
    Graph::new(labels, edges).expect("generated labels are valid")
}

/// A graph whose part outside `S` is chordal or a five-cycle, with the
/// vertices of `S` (labelled `s1, s2, ...`) attached at random.
pub fn random_filtered_graph(rng: &mut ChaCha8Rng, n: usize) -> (Graph, VertexSet) {
    let s_count = rng.gen_range(1..=3.min(n.saturating_sub(1)).max(1));
    let outside = n - s_count;
    let base_labels = x_labels(outside);
    let base = if outside == 5 && rng.gen_bool(0.4) {
        Graph::cycle(5)
    } else {
        random_chordal_graph(rng, &base_labels)
    };
    let s_labels: Vec<String> = (1..=s_count).map(|i| format!("s{i}")).collect();
    let mut edges: Vec<(String, String)> = base
        .edges()
        .into_iter()
        .map(|(u, v)| (base.label(u).to_owned(), base.label(v).to_owned()))
        .collect();
    let all: Vec<String> = base_labels.iter().chain(&s_labels).cloned().collect();
    for (i, s) in s_labels.iter().enumerate() {
        for other in all.iter().take(outside + i) {
            if rng.gen_bool(0.4) {
                edges.push((s.clone(), other.clone()));
            }
        }
    }
    let g = Graph::new(&all, edges).expect("generated labels are valid");
    let s = g.set_of(&s_labels).expect("s labels present");
    (g, s)
}

pub(crate) fn check_spec(spec: &InstanceSpec) -> Result<()> {
    if spec.n_vertices > 0 && spec.facet_budget == 0 && spec.mode == Mode::RandomComplex {
        return Err(Error::InfeasibleSpec(
            "facet budget 0 with a nonzero vertex count".into(),
        ));
    }
    if spec.min_vertices > spec.n_vertices {
        return Err(Error::InfeasibleSpec(format!(
            "min_vertices {} exceeds n_vertices {}",
            spec.min_vertices, spec.n_vertices
        )));
    }
    if spec.mode == Mode::ExhaustiveSmall
        && spec.n_vertices > EXHAUSTIVE_COMPLEX_LIMIT.max(EXHAUSTIVE_GRAPH_LIMIT)
    {
        return Err(Error::InfeasibleSpec(format!(
            "exhaustive enumeration is capped at {} vertices",
            EXHAUSTIVE_GRAPH_LIMIT
        )));
    }
    Ok(())
}

/// The instance stream for `spec`.
///
/// Exhaustive mode yields every complex on up to `min(n, 5)` vertices and
/// then every graph on up to `min(n, 6)` vertices. Random modes yield
/// `spec.instances` complexes or graphs with vertex counts drawn from
/// `min_vertices..=n_vertices`.
pub fn generate(spec: &InstanceSpec) -> Result<impl Iterator<Item = Instance>> {
    check_spec(spec)?;
    let spec = spec.clone();
    let mut rng = spec.rng();
    let items: Box<dyn Iterator<Item = Instance>> = match spec.mode {
        Mode::ExhaustiveSmall => {
            let nc = spec.n_vertices.min(EXHAUSTIVE_COMPLEX_LIMIT);
            let ng = spec.n_vertices.min(EXHAUSTIVE_GRAPH_LIMIT);
            Box::new(
                (0..=nc)
                    .flat_map(|n| all_complexes(n).into_iter().map(Instance::Complex))
                    .chain((0..=ng).flat_map(|n| all_graphs(n).into_iter().map(Instance::Graph))),
            )
        }
        Mode::RandomComplex => Box::new((0..spec.instances).map(move |_| {
            let n = rng.gen_range(spec.min_vertices..=spec.n_vertices);
            Instance::Complex(random_complex(&mut rng, n, spec.max_dim, spec.facet_budget))
        })),
        Mode::RandomGraph => Box::new((0..spec.instances).map(move |_| {
            let n = rng.gen_range(spec.min_vertices..=spec.n_vertices);
            Instance::Graph(random_graph(&mut rng, n))
        })),
    };
    Ok(items)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(mode: Mode) -> InstanceSpec {
        InstanceSpec {
            seed: 7,
            n_vertices: 6,
            min_vertices: 1,
            max_dim: 3,
            facet_budget: 6,
            mode,
            instances: 50,
        }
    }

    #[test]
    fn antichain_counts() {
        // Dedekind numbers count antichains including the empty one.
        let counts: Vec<usize> = (0..=4).map(|n| antichains(n).len()).collect();
        assert_eq!(counts, vec![2, 3, 6, 20, 168]);
        let nonvoid = all_complexes(3).iter().filter(|c| !c.is_void()).count();
        assert_eq!(nonvoid, 19);
    }

    #[test]
    fn zero_vertices() {
        let all = all_complexes(0);
        assert_eq!(all.len(), 2);
        assert!(all.contains(&SimplicialComplex::void()));
        assert!(all.contains(&SimplicialComplex::empty_face()));
    }

    #[test]
    fn graph_counts() {
        assert_eq!(all_graphs(4).len(), 64);
        assert_eq!(all_graphs(0).len(), 1);
    }

    #[test]
    fn generation_is_deterministic() {
        for mode in [Mode::RandomComplex, Mode::RandomGraph] {
            let a: Vec<Instance> = generate(&spec(mode)).unwrap().collect();
            let b: Vec<Instance> = generate(&spec(mode)).unwrap().collect();
            assert_eq!(a, b);
            assert_eq!(a.len(), 50);
        }
        let mut other = spec(Mode::RandomComplex);
        other.seed = 8;
        let a: Vec<Instance> = generate(&spec(Mode::RandomComplex)).unwrap().collect();
        let b: Vec<Instance> = generate(&other).unwrap().collect();
        assert_ne!(a, b);
    }

    #[test]
    fn infeasible_specs() {
        let mut s = spec(Mode::RandomComplex);
        s.facet_budget = 0;
        assert!(matches!(generate(&s), Err(Error::InfeasibleSpec(_))));
        let mut s = spec(Mode::ExhaustiveSmall);
        s.n_vertices = 9;
        assert!(matches!(generate(&s), Err(Error::InfeasibleSpec(_))));
    }

    #[test]
    fn generated_complexes_are_antichains() {
        for inst in generate(&spec(Mode::RandomComplex)).unwrap() {
            let Instance::Complex(c) = inst else {
                unreachable!()
            };
            let fs = c.facets();
            for (i, a) in fs.iter().enumerate() {
                for (j, b) in fs.iter().enumerate() {
                    assert!(i == j || !a.is_subset(*b));
                }
            }
        }
    }

    #[test]
    fn random_colorings_are_valid() {
        let mut rng = spec(Mode::RandomComplex).rng();
        for _ in 0..200 {
            let c = random_complex(&mut rng, 6, 3, 6);
            let w: VertexSet = c
                .vertex_set()
                .iter()
                .filter(|_| rng.gen_bool(0.6))
                .collect();
            let chi = random_coloring(&mut rng, &c, w);
            assert!(chi.validate(&c).unwrap());
            assert_eq!(chi.colored_set(&c).unwrap(), w);
            let full = random_full_coloring(&mut rng, &c);
            assert!(full.is_full(&c).unwrap() && full.validate(&c).unwrap());
        }
    }

    #[test]
    fn exhaustive_colorings() {
        let c = SimplicialComplex::from_facets([["x1", "x2"], ["x2", "x3"]]).unwrap();
        let all = all_colorings(&c, c.vertex_set());
        // Partitions of {x1,x2,x3} avoiding x1~x2, x2~x3: {1}{2}{3} and {13}{2}.
        assert_eq!(all.len(), 4);
        assert!(all.iter().all(|k| k.validate(&c).unwrap()));
        assert_eq!(all_colorings(&c, VertexSet::EMPTY).len(), 2);
    }

    #[test]
    fn chordal_generator_is_chordal() {
        let mut rng = spec(Mode::RandomGraph).rng();
        for n in 0..9 {
            for _ in 0..30 {
                assert!(random_chordal_graph(&mut rng, &x_labels(n)).is_chordal_by_cycles());
            }
        }
        for _ in 0..30 {
            let (g, s) = random_filtered_graph(&mut rng, 8);
            let rest = g.delete_vertices(s).unwrap();
            assert!(rest.is_chordal() || rest.is_five_cycle());
        }
    }
}
