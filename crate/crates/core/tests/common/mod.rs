//! Reference implementations that share no code with the decider or the
//! whisker construction beyond complex-level link and deletion.

#![allow(dead_code)]

use std::collections::BTreeSet;

use vdcore::{PartialColoring, SimplicialComplex, VertexSet};

/// Vertex decomposability straight from the definition: at most one facet,
/// or some vertex whose link and deletion are decomposable and share no
/// facet. No memo, no cone stripping, every vertex tried.
pub fn naive_vd(c: &SimplicialComplex) -> bool {
    if c.facets().len() <= 1 {
        return true;
    }
    c.support().iter().any(|v| {
        let link = c.link(VertexSet::singleton(v)).expect("vertex is a face");
        let del = c.deletion(VertexSet::singleton(v));
        let link_facets: BTreeSet<Vec<&str>> = link.facet_labels().into_iter().collect();
        let shared = del
            .facet_labels()
            .into_iter()
            .any(|f| link_facets.contains(&f));
        !shared && naive_vd(&link) && naive_vd(&del)
    })
}

/// All faces of `c` as sorted label lists.
pub fn face_labels(c: &SimplicialComplex) -> BTreeSet<Vec<String>> {
    c.faces()
        .into_iter()
        .map(|f| c.labels_of(f).into_iter().map(str::to_owned).collect())
        .collect()
}

/// Faces of the whiskered complex by brute force: `σ ∪ T` for every face
/// `σ` and every set `T` of whisker vertices whose classes `σ` misses.
pub fn whisker_faces(c: &SimplicialComplex, chi: &PartialColoring) -> BTreeSet<Vec<String>> {
    let mut out = BTreeSet::new();
    for sigma in c.faces() {
        let labels: Vec<&str> = c.labels_of(sigma);
        let free: Vec<&str> = chi
            .classes()
            .iter()
            .filter(|k| !labels.iter().any(|l| k.contains(l)))
            .map(|k| k.whisker_label())
            .collect();
        for mask in 0u32..1 << free.len() {
            let mut face: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
            face.extend(
                (0..free.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| free[i].to_owned()),
            );
            face.sort_by(|a, b| vdcore::label::label_cmp(a, b));
            out.insert(face);
        }
    }
    out
}

/// Induced cycles of length at least four, by checking every vertex subset.
pub fn has_chordless_cycle(g: &vdcore::Graph) -> bool {
    let n = g.vertex_count();
    (0u128..1 << n).any(|bits| {
        let s = VertexSet::from_bits(bits);
        s.len() >= 4
            && s.iter().all(|v| g.neighbors(v).intersection(s).len() == 2)
            && connected(g, s)
    })
}

fn connected(g: &vdcore::Graph, s: VertexSet) -> bool {
    let Some(start) = s.first() else { return true };
    let mut seen = VertexSet::singleton(start);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for w in g.neighbors(v).intersection(s) {
            if !seen.contains(w) {
                seen.insert(w);
                stack.push(w);
            }
        }
    }
    seen == s
}
