//! Partial colorings and the whiskered complex they induce.
//!
//! A partial coloring is an ordered list of disjoint classes `W_1, ..., W_s`
//! over some of the vertices of a complex. Whiskering adjoins one new vertex
//! per class; the new vertex `y_j` may be added to a face exactly when the
//! face misses `W_j`.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::VertexSet;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::label::{check_label, label_cmp};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColorClass {
    members: Vec<String>,
    whisker: String,
}

impl ColorClass {
    pub fn members(&self) -> &[String] {
        &self.members
    }

    /// Label of the vertex this class contributes when whiskering.
    pub fn whisker_label(&self) -> &str {
        &self.whisker
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, label: &str) -> bool {
        self.members
            .binary_search_by(|m| label_cmp(m, label))
            .is_ok()
    }
}

/// An ordered partition `W = W_1 ∪ ... ∪ W_s` of a set of vertex labels.
///
/// Empty classes are allowed. Each class carries the label of its whisker
/// vertex, `y1, ..., ys` in class order unless chosen explicitly; derived
/// colorings keep the labels of the classes they retain.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialColoring {
    classes: Vec<ColorClass>,
}

/// Structured coloring document: `classes` plus an informational
/// `uncolored` list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringDocument {
    pub classes: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub uncolored: Vec<String>,
}

impl PartialColoring {
    /// Classes in order, with whisker labels `y1, ..., ys`.
    pub fn new<I, C, S>(classes: I) -> Result<Self>
    where
        I: IntoIterator<Item = C>,
        C: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let classes: Vec<Vec<String>> = classes
            .into_iter()
            .map(|c| c.into_iter().map(|s| s.as_ref().to_owned()).collect())
            .collect();
        let whiskers = (1..=classes.len()).map(|j| format!("y{j}")).collect();
        Self::with_whisker_labels(classes, whiskers)
    }

    pub fn with_whisker_labels(classes: Vec<Vec<String>>, whiskers: Vec<String>) -> Result<Self> {
        if classes.len() != whiskers.len() {
            return Err(Error::InvalidColoring(format!(
                "{} classes but {} whisker labels",
                classes.len(),
                whiskers.len()
            )));
        }
        let mut seen = HashSet::new();
        let mut wseen = HashSet::new();
        let mut out = Vec::with_capacity(classes.len());
        for (mut members, whisker) in classes.into_iter().zip(whiskers) {
            for m in &members {
                if !check_label(m) {
                    return Err(Error::Document(format!("invalid vertex label `{m}`")));
                }
                if !seen.insert(m.clone()) {
                    return Err(Error::InvalidColoring(format!(
                        "vertex `{m}` appears in more than one class"
                    )));
                }
            }
            if !check_label(&whisker) || !wseen.insert(whisker.clone()) {
                return Err(Error::InvalidColoring(format!(
                    "bad or repeated whisker label `{whisker}`"
                )));
            }
            members.sort_by(|a, b| label_cmp(a, b));
            out.push(ColorClass { members, whisker });
        }
        Ok(PartialColoring { classes: out })
    }

    /// Parses the command-line form `x3|x1,x4`: classes separated by `|`,
    /// members by `,`. Each `|` separates two classes, so `x1|` has an empty
    /// second class and the empty string is a single empty class.
    pub fn parse(spec: &str) -> Result<Self> {
        let classes: Vec<Vec<&str>> = spec
            .split('|')
            .map(|c| {
                c.split(',')
                    .map(str::trim)
                    .filter(|m| !m.is_empty())
                    .collect()
            })
            .collect();
        Self::new(classes)
    }

    /// One singleton class per label, in canonical label order.
    pub fn singletons<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut labels: Vec<String> = labels.into_iter().map(|s| s.as_ref().to_owned()).collect();
        labels.sort_by(|a, b| label_cmp(a, b));
        Self::new(labels.into_iter().map(|l| [l]))
    }

    pub fn from_document(doc: &ColoringDocument) -> Result<Self> {
        Self::new(&doc.classes)
    }

    pub fn to_document(&self, complex: Option<&SimplicialComplex>) -> ColoringDocument {
        let uncolored = complex
            .map(|c| {
                c.labels()
                    .iter()
                    .filter(|l| self.class_of(l).is_none())
                    .cloned()
                    .collect()
            })
            .unwrap_or_default();
        ColoringDocument {
            classes: self.classes.iter().map(|c| c.members.clone()).collect(),
            uncolored,
        }
    }

    pub fn classes(&self) -> &[ColorClass] {
        &self.classes
    }

    /// Number of classes, `s`.
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Index of the class containing `label`.
    pub fn class_of(&self, label: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(label))
    }

    /// All colored labels.
    pub fn colored(&self) -> impl Iterator<Item = &str> {
        self.classes
            .iter()
            .flat_map(|c| c.members.iter().map(String::as_str))
    }

    /// Classes as vertex sets of `complex`; unknown labels are an input error.
    pub fn class_sets(&self, complex: &SimplicialComplex) -> Result<Vec<VertexSet>> {
        self.classes
            .iter()
            .map(|c| complex.set_of(&c.members))
            .collect()
    }

    /// The colored set `W` as a vertex set of `complex`.
    pub fn colored_set(&self, complex: &SimplicialComplex) -> Result<VertexSet> {
        complex.set_of(self.colored())
    }

    /// The uncolored vertices `V ∖ W`.
    pub fn complement(&self, complex: &SimplicialComplex) -> Result<VertexSet> {
        Ok(complex.vertex_set().difference(self.colored_set(complex)?))
    }

    /// Whether every facet of the restriction to `W` meets each class at
    /// most once. Equivalently, whether no facet of the complex contains two
    /// vertices of one class.
    pub fn validate(&self, complex: &SimplicialComplex) -> Result<bool> {
        let sets = self.class_sets(complex)?;
        Ok(valid_classes(complex.facets(), &sets))
    }

    /// True when every vertex of `complex` is colored.
    pub fn is_full(&self, complex: &SimplicialComplex) -> Result<bool> {
        Ok(self.colored_set(complex)? == complex.vertex_set())
    }

    /// The whiskered complex `Δ_χ` on the vertices of `complex` plus one
    /// whisker vertex per class.
    pub fn whisker(&self, complex: &SimplicialComplex) -> Result<SimplicialComplex> {
        let sets = self.class_sets(complex)?;
        if !valid_classes(complex.facets(), &sets) {
            return Err(Error::InvalidColoring(format!(
                "some facet of {complex} meets a class twice"
            )));
        }
        if let Some(c) = self
            .classes
            .iter()
            .find(|c| complex.id(&c.whisker).is_some())
        {
            return Err(Error::OverlappingVertices(c.whisker.clone()));
        }
        let n = complex.vertex_count();
        let mut labels = complex.labels().to_vec();
        labels.extend(self.classes.iter().map(|c| c.whisker.clone()));
        if labels.len() > crate::bits::HARD_VERTEX_LIMIT {
            return Err(Error::Capacity {
                count: labels.len(),
                limit: crate::bits::HARD_VERTEX_LIMIT,
            });
        }
        let faces = whisker_facets(complex.facets(), &sets, n);
        SimplicialComplex::from_unsorted(labels, faces)
    }

    /// `χ′`: the coloring of `Δ ∖ w` obtained by removing `w` from its
    /// class. The class is kept even when it becomes empty.
    pub fn induced_after_vertex_deletion(&self, w: &str) -> Result<Self> {
        let j = self
            .class_of(w)
            .ok_or_else(|| Error::Uncolored(w.to_owned()))?;
        let mut out = self.clone();
        out.classes[j].members.retain(|m| m != w);
        Ok(out)
    }

    /// `χ″`: the coloring of `link_Δ(w)` by the remaining classes, each cut
    /// down to the vertices that occur in the link. The class of `w` is
    /// dropped.
    pub fn induced_on_link(&self, complex: &SimplicialComplex, w: &str) -> Result<Self> {
        let j = self
            .class_of(w)
            .ok_or_else(|| Error::Uncolored(w.to_owned()))?;
        let v = complex
            .id(w)
            .ok_or_else(|| Error::UnknownVertex(w.to_owned()))?;
        let link = complex.link(VertexSet::singleton(v))?;
        let support = link.support();
        let classes = self
            .classes
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != j)
            .map(|(_, c)| ColorClass {
                members: c
                    .members
                    .iter()
                    .filter(|m| link.id(m).is_some_and(|u| support.contains(u)))
                    .cloned()
                    .collect(),
                whisker: c.whisker.clone(),
            })
            .collect();
        Ok(PartialColoring { classes })
    }

    /// For a full coloring `V_1 ∪ ... ∪ V_s`, the `s` partial colorings that
    /// each leave out one class.
    pub fn drop_one_class(&self) -> Vec<Self> {
        (0..self.classes.len())
            .map(|i| {
                let mut classes = self.classes.clone();
                classes.remove(i);
                PartialColoring { classes }
            })
            .collect()
    }
}

impl fmt::Display for PartialColoring {
    /// The command-line form, `x3|x1,x4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.classes.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            f.write_str(&c.members.join(","))?;
        }
        Ok(())
    }
}

pub(crate) fn valid_classes(facets: &[VertexSet], classes: &[VertexSet]) -> bool {
    facets
        .iter()
        .all(|f| classes.iter().all(|c| f.intersection(*c).len() <= 1))
}

/// Facet generators of `Δ_χ`, with whisker vertex `j` at id `offset + j`.
///
/// A facet of `Δ_χ` has the form `σ ∪ {y_j : σ ∩ W_j = ∅}`. Within a facet
/// `F` of `Δ`, only the largest `σ ⊆ F` meeting a given subset of the classes
/// can contribute, so it suffices to range over subsets of the classes that
/// `F` meets.
pub(crate) fn whisker_facets(
    facets: &[VertexSet],
    classes: &[VertexSet],
    offset: usize,
) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for &f in facets {
        let met: Vec<usize> = (0..classes.len())
            .filter(|&j| !f.is_disjoint(classes[j]))
            .collect();
        let mut base = f;
        for (j, _) in classes.iter().enumerate() {
            if !met.contains(&j) {
                base.insert(offset + j);
            }
        }
        for mask in 0u64..(1u64 << met.len()) {
            let mut face = base;
            for (k, &j) in met.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    face = face.difference(classes[j]).with(offset + j);
                }
            }
            out.push(face);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(facets: &[&str]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets.iter().map(|f| f.split_whitespace())).unwrap()
    }

    #[test]
    fn validate_examples() {
        let d = cx(&["x1 x2 x3", "x3 x4 x5"]);
        assert!(PartialColoring::parse("x3").unwrap().validate(&d).unwrap());
        let d = cx(&["x1 x2 x3"]);
        assert!(!PartialColoring::parse("x1,x2")
            .unwrap()
            .validate(&d)
            .unwrap());
        let d = cx(&["x1 x2 x3 x4", "x2 x5"]);
        let full = PartialColoring::singletons(d.labels()).unwrap();
        assert!(full.validate(&d).unwrap());
        assert!(full.is_full(&d).unwrap());
        assert_eq!(
            PartialColoring::parse("x9").unwrap().validate(&d),
            Err(Error::UnknownVertex("x9".into()))
        );
    }

    #[test]
    fn parse_forms() {
        let c = PartialColoring::parse("x3|x1,x4").unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.classes()[1].members(), &["x1", "x4"]);
        assert_eq!(c.classes()[1].whisker_label(), "y2");
        assert_eq!(c.to_string(), "x3|x1,x4");
        let c = PartialColoring::parse("x1|").unwrap();
        assert_eq!(c.len(), 2);
        assert!(c.classes()[1].is_empty());
        assert!(matches!(
            PartialColoring::parse("x1|x1"),
            Err(Error::InvalidColoring(_))
        ));
    }

    #[test]
    fn whisker_example_sharp_bound() {
        let d = cx(&["x1 x2 x3", "x3 x4 x5"]);
        let chi = PartialColoring::parse("x3").unwrap();
        let w = chi.whisker(&d).unwrap();
        assert_eq!(w, cx(&["x4 x5 y1", "x1 x2 y1", "x3 x4 x5", "x1 x2 x3"]));
    }

    #[test]
    fn whisker_of_empty_face() {
        let d = SimplicialComplex::empty_face();
        let chi = PartialColoring::parse("|").unwrap();
        assert_eq!(chi.whisker(&d).unwrap(), cx(&["y1 y2"]));
    }

    #[test]
    fn whisker_uncolored_is_join() {
        let d = cx(&["x1 x2", "x2 x3", "x4"]);
        let chi = PartialColoring::new(vec![Vec::<&str>::new(); 3]).unwrap();
        let expected = d.join(&cx(&["y1 y2 y3"])).unwrap();
        assert_eq!(chi.whisker(&d).unwrap(), expected);
    }

    #[test]
    fn whisker_rejects_invalid_and_clashing() {
        let d = cx(&["x1 x2 x3"]);
        assert!(matches!(
            PartialColoring::parse("x1,x2").unwrap().whisker(&d),
            Err(Error::InvalidColoring(_))
        ));
        let d = cx(&["x1 y1"]);
        assert_eq!(
            PartialColoring::parse("x1").unwrap().whisker(&d),
            Err(Error::OverlappingVertices("y1".into()))
        );
    }

    #[test]
    fn deletion_induced_examples() {
        let c = PartialColoring::parse("x1,x4|x2").unwrap();
        let d = c.induced_after_vertex_deletion("x1").unwrap();
        assert_eq!(d.to_string(), "x4|x2");
        let c = PartialColoring::parse("x1").unwrap();
        let d = c.induced_after_vertex_deletion("x1").unwrap();
        assert_eq!(d.len(), 1);
        assert!(d.classes()[0].is_empty());
        let c = PartialColoring::parse("x1|x2").unwrap();
        assert_eq!(
            c.induced_after_vertex_deletion("x2").unwrap().to_string(),
            "x1|"
        );
        assert_eq!(
            c.induced_after_vertex_deletion("x3"),
            Err(Error::Uncolored("x3".into()))
        );
    }

    #[test]
    fn link_induced_examples() {
        let d = cx(&["x1 x2", "x1 x3"]);
        let c = PartialColoring::parse("x1|x2|x3").unwrap();
        let l = c.induced_on_link(&d, "x1").unwrap();
        assert_eq!(l.to_string(), "x2|x3");
        assert_eq!(l.classes()[0].whisker_label(), "y2");
        assert!(l.class_of("x1").is_none());

        let d = cx(&["x1 x2", "x3 x4"]);
        let c = PartialColoring::parse("x1|x3|x2").unwrap();
        let l = c.induced_on_link(&d, "x1").unwrap();
        assert_eq!(l.len(), 2);
        assert!(l.classes()[0].is_empty());
        assert_eq!(l.to_string(), "|x2");
        assert_eq!(
            c.induced_on_link(&d, "x4"),
            Err(Error::Uncolored("x4".into()))
        );
    }

    #[test]
    fn drop_one_class_examples() {
        let c = PartialColoring::parse("x1|x2|x3").unwrap();
        let drops = c.drop_one_class();
        assert_eq!(drops.len(), 3);
        assert!(drops.iter().all(|d| d.len() == 2));
        assert_eq!(drops[0].to_string(), "x2|x3");

        let c = PartialColoring::parse("x1,x2").unwrap();
        let drops = c.drop_one_class();
        assert_eq!(drops.len(), 1);
        assert_eq!(drops[0].colored().count(), 0);

        let d = cx(&["x1 x2", "x2 x3"]);
        let c = PartialColoring::parse("x1,x3|x2").unwrap();
        assert!(c.validate(&d).unwrap());
        let s: Vec<String> = c.drop_one_class().iter().map(|d| d.to_string()).collect();
        assert_eq!(s, vec!["x2", "x1,x3"]);
    }

    #[test]
    fn document_round_trip() {
        let d = cx(&["x1 x2 x3", "x3 x4 x5"]);
        let c = PartialColoring::parse("x3|x1").unwrap();
        let doc = c.to_document(Some(&d));
        assert_eq!(doc.uncolored, vec!["x2", "x4", "x5"]);
        let json = serde_json::to_string(&doc).unwrap();
        let back: ColoringDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(PartialColoring::from_document(&back).unwrap(), c);
    }
}
