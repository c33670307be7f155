//! The simplicial complex value type and its face-level operations.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::bits::{maximal_sets, VertexSet, HARD_VERTEX_LIMIT};
use crate::error::{Error, Result};
use crate::label::{check_label, label_cmp};

/// A finite simplicial complex stored by its facets.
///
/// Vertex ids are dense indices into the label list, which is kept in
/// canonical label order. Facets form an antichain in canonical order, so two
/// complexes are equal exactly when they have the same labelled vertex set and
/// the same labelled facets.
///
/// The vertex set may contain vertices that lie in no facet (links and
/// restrictions keep them). The void complex has no facets at all, while
/// `⟨∅⟩` has the single empty facet.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    facets: Vec<VertexSet>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Properties {
    /// Largest facet dimension; `-1` for `⟨∅⟩` and for the void complex.
    pub dimension: isize,
    pub is_pure: bool,
    pub is_simplex: bool,
    pub face_count: u128,
}

impl SimplicialComplex {
    /// The complex generated by `faces`. Non-maximal faces are absorbed and the
    /// vertex set is the union of all given faces.
    pub fn from_facets<I, F, S>(faces: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let faces: Vec<Vec<String>> = faces
            .into_iter()
            .map(|f| f.into_iter().map(|s| s.as_ref().to_owned()).collect())
            .collect();
        let mut seen = BTreeSet::new();
        let mut labels = Vec::new();
        for l in faces.iter().flatten() {
            if seen.insert(l.as_str()) {
                labels.push(l.clone());
            }
        }
        Self::with_vertices(labels, faces)
    }

    /// Like [`from_facets`](Self::from_facets), with an explicit vertex list.
    /// Every face label must be declared; declared vertices need not lie in
    /// any face.
    pub fn with_vertices<V, S, I, F, T>(vertices: V, faces: I) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = T>,
        T: AsRef<str>,
    {
        let mut labels: Vec<String> = vertices.into_iter().map(Into::into).collect();
        for l in &labels {
            if !check_label(l) {
                return Err(Error::Document(format!("invalid vertex label `{l}`")));
            }
        }
        if labels.len() > HARD_VERTEX_LIMIT {
            return Err(Error::Capacity {
                count: labels.len(),
                limit: HARD_VERTEX_LIMIT,
            });
        }
        labels.sort_by(|a, b| label_cmp(a, b));
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateLabel(w[0].clone()));
        }
        let index: HashMap<&str, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let mut sets = Vec::new();
        for face in faces {
            let mut s = VertexSet::EMPTY;
            for l in face {
                let l = l.as_ref();
                let &v = index
                    .get(l)
                    .ok_or_else(|| Error::UnknownVertex(l.to_owned()))?;
                if s.contains(v) {
                    return Err(Error::DuplicateLabel(l.to_owned()));
                }
                s.insert(v);
            }
            sets.push(s);
        }
        Ok(SimplicialComplex {
            labels,
            facets: maximal_sets(sets),
        })
    }

    /// Assembles a complex from labels in canonical order and arbitrary
    /// generating faces over those ids.
    pub(crate) fn from_raw(labels: Vec<String>, faces: Vec<VertexSet>) -> Self {
        debug_assert!(labels.windows(2).all(|w| label_cmp(&w[0], &w[1]).is_lt()));
        SimplicialComplex {
            labels,
            facets: maximal_sets(faces),
        }
    }

    /// Builds from labels in any order, remapping the faces accordingly.
    pub(crate) fn from_unsorted(labels: Vec<String>, faces: Vec<VertexSet>) -> Result<Self> {
        if labels.len() > HARD_VERTEX_LIMIT {
            return Err(Error::Capacity {
                count: labels.len(),
                limit: HARD_VERTEX_LIMIT,
            });
        }
        let mut order: Vec<usize> = (0..labels.len()).collect();
        order.sort_by(|&a, &b| label_cmp(&labels[a], &labels[b]));
        if let Some(w) = order.windows(2).find(|w| labels[w[0]] == labels[w[1]]) {
            return Err(Error::DuplicateLabel(labels[w[0]].clone()));
        }
        let mut new_id = vec![0; labels.len()];
        for (new, &old) in order.iter().enumerate() {
            new_id[old] = new;
        }
        let faces = faces
            .into_iter()
            .map(|f| f.iter().map(|v| new_id[v]).collect())
            .collect();
        let sorted = order.iter().map(|&i| labels[i].clone()).collect();
        Ok(Self::from_raw(sorted, faces))
    }

    /// The void complex on no vertices.
    pub fn void() -> Self {
        SimplicialComplex {
            labels: Vec::new(),
            facets: Vec::new(),
        }
    }

    /// `⟨∅⟩`, the complex whose only face is the empty set.
    pub fn empty_face() -> Self {
        SimplicialComplex {
            labels: Vec::new(),
            facets: vec![VertexSet::EMPTY],
        }
    }

    /// The full simplex on the given labels.
    pub fn simplex<S: AsRef<str>>(labels: &[S]) -> Result<Self> {
        Self::from_facets([labels.iter().map(|s| s.as_ref())])
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

    /// Vertices lying in at least one facet.
    pub fn support(&self) -> VertexSet {
        self.facets
            .iter()
            .fold(VertexSet::EMPTY, |acc, f| acc.union(*f))
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn id(&self, label: &str) -> Option<usize> {
        self.labels.binary_search_by(|l| label_cmp(l, label)).ok()
    }

    /// Resolves labels to a vertex set; unknown labels are an input error.
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

    pub fn facet_labels(&self) -> Vec<Vec<&str>> {
        self.facets.iter().map(|f| self.labels_of(*f)).collect()
    }

    /// Formats a face as `{x1 x2}`, or `∅`.
    pub fn face_string(&self, face: VertexSet) -> String {
        if face.is_empty() {
            "∅".to_owned()
        } else {
            format!("{{{}}}", self.labels_of(face).join(" "))
        }
    }

    pub fn is_face(&self, sigma: VertexSet) -> bool {
        self.facets.iter().any(|f| sigma.is_subset(*f))
    }

    /// Every face, in canonical order. Exponential in the facet sizes.
    pub fn faces(&self) -> Vec<VertexSet> {
        let mut all: BTreeSet<VertexSet> = BTreeSet::new();
        for f in &self.facets {
            all.extend(f.subsets());
        }
        let mut out: Vec<VertexSet> = all.into_iter().collect();
        out.sort_by(|a, b| a.lex_cmp(*b));
        out
    }

    /// Keeps only the vertices in `keep`, renumbering densely. Faces must lie
    /// inside `keep`.
    fn compact(&self, keep: VertexSet, faces: Vec<VertexSet>) -> Self {
        if keep == self.vertex_set() {
            return Self::from_raw(self.labels.clone(), faces);
        }
        let mut new_id = vec![usize::MAX; self.labels.len()];
        let mut labels = Vec::with_capacity(keep.len());
        for (i, v) in keep.iter().enumerate() {
            new_id[v] = i;
            labels.push(self.labels[v].clone());
        }
        let faces = faces
            .into_iter()
            .map(|f| {
                debug_assert!(f.is_subset(keep));
                f.iter().map(|v| new_id[v]).collect()
            })
            .collect();
        Self::from_raw(labels, faces)
    }

    /// Faces not containing `sigma`. Deleting a single vertex also removes it
    /// from the vertex set; deleting `∅` leaves the void complex.
    pub fn deletion(&self, sigma: VertexSet) -> Self {
        let faces = deletion_faces(&self.facets, sigma);
        if sigma.len() == 1 {
            self.compact(self.vertex_set().difference(sigma), faces)
        } else {
            Self::from_raw(self.labels.clone(), faces)
        }
    }

    /// Faces disjoint from `sigma` whose union with `sigma` is a face, over
    /// the vertex set minus `sigma`.
    pub fn link(&self, sigma: VertexSet) -> Result<Self> {
        if !sigma.is_subset(self.vertex_set()) || !self.is_face(sigma) {
            return Err(Error::NotAFace(self.describe_set(sigma)));
        }
        let faces = self
            .facets
            .iter()
            .filter(|f| sigma.is_subset(**f))
            .map(|f| f.difference(sigma))
            .collect();
        Ok(self.compact(self.vertex_set().difference(sigma), faces))
    }

    /// The induced subcomplex on `w`, whose vertex set is `w`.
    pub fn restriction(&self, w: VertexSet) -> Result<Self> {
        if !w.is_subset(self.vertex_set()) {
            return Err(Error::NotASubset(format!("{w:?}")));
        }
        let faces = self.facets.iter().map(|f| f.intersection(w)).collect();
        Ok(self.compact(w, faces))
    }

    /// Label-level restriction; labels outside the vertex set are a domain
    /// error.
    pub fn restriction_to<I, S>(&self, labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut w = VertexSet::EMPTY;
        for l in labels {
            match self.id(l.as_ref()) {
                Some(v) => w.insert(v),
                None => return Err(Error::NotASubset(format!("`{}`", l.as_ref()))),
            }
        }
        self.restriction(w)
    }

    /// The join over the disjoint union of the two vertex sets.
    pub fn join(&self, other: &Self) -> Result<Self> {
        if let Some(l) = self.labels.iter().find(|l| other.id(l).is_some()) {
            return Err(Error::OverlappingVertices(l.clone()));
        }
        let n = self.labels.len();
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let mut faces = Vec::with_capacity(self.facets.len() * other.facets.len());
        for f in &self.facets {
            for g in &other.facets {
                faces.push(f.union(VertexSet::from_bits(g.bits() << n)));
            }
        }
        if labels.len() > HARD_VERTEX_LIMIT {
            return Err(Error::Capacity {
                count: labels.len(),
                limit: HARD_VERTEX_LIMIT,
            });
        }
        Self::from_unsorted(labels, faces)
    }

    pub fn properties(&self) -> Properties {
        let dims: Vec<isize> = self.facets.iter().map(|f| f.len() as isize - 1).collect();
        let dimension = dims.iter().copied().max().unwrap_or(-1);
        Properties {
            dimension,
            is_pure: dims.windows(2).all(|w| w[0] == w[1]),
            is_simplex: self.facets.len() == 1 && self.facets[0] == self.vertex_set(),
            face_count: count_faces(&self.facets),
        }
    }

    fn describe_set(&self, s: VertexSet) -> String {
        let known = s.intersection(self.vertex_set());
        let mut names: Vec<String> = self
            .labels_of(known)
            .iter()
            .map(|l| l.to_string())
            .collect();
        names.extend(s.difference(known).iter().map(|v| format!("#{v}")));
        if names.is_empty() {
            "∅".to_owned()
        } else {
            format!("{{{}}}", names.join(" "))
        }
    }
}

/// Facets of the deletion of `sigma`, given facets of the complex.
pub(crate) fn deletion_faces(facets: &[VertexSet], sigma: VertexSet) -> Vec<VertexSet> {
    let mut out = Vec::with_capacity(facets.len());
    for &f in facets {
        if sigma.is_subset(f) {
            for v in sigma {
                out.push(f.without(v));
            }
        } else {
            out.push(f);
        }
    }
    out
}

/// Number of faces (including ∅) by inclusion-exclusion over the facets,
/// falling back to enumeration when there are many facets.
fn count_faces(facets: &[VertexSet]) -> u128 {
    if facets.is_empty() {
        return 0;
    }
    if facets.len() <= 16 {
        let mut total: i128 = 0;
        for mask in 1u32..(1 << facets.len()) {
            let inter = (0..facets.len())
                .filter(|i| mask >> i & 1 == 1)
                .fold(VertexSet::full(HARD_VERTEX_LIMIT), |acc, i| {
                    acc.intersection(facets[i])
                });
            let term = 1i128 << inter.len().min(126);
            if mask.count_ones() % 2 == 1 {
                total += term;
            } else {
                total -= term;
            }
        }
        total as u128
    } else {
        let mut all = std::collections::HashSet::new();
        for f in facets {
            all.extend(f.subsets());
        }
        all.len() as u128
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.facets.is_empty() {
            return f.write_str("void");
        }
        f.write_str("⟨")?;
        for (i, facet) in self.facets.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            if facet.is_empty() {
                f.write_str("∅")?;
            } else {
                f.write_str(&self.labels_of(*facet).join(" "))?;
            }
        }
        f.write_str("⟩")?;
        let ghosts = self.vertex_set().difference(self.support());
        if !ghosts.is_empty() {
            write!(f, " + {{{}}}", self.labels_of(ghosts).join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
