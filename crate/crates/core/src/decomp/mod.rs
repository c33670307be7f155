//! Exact decision procedure for (non-pure) vertex decomposability.
//!
//! A complex is vertex decomposable when it has at most one facet, or when
//! some vertex `v` of its support has a link and a deletion that are both
//! vertex decomposable and share no facet.
//!
//! The search works on raw facet lists over the ids of the top-level complex.
//! Cone points are stripped first (a cone `v · L` is decomposable exactly
//! when `L` is), candidates are tried in order of increasing facet degree,
//! and decided subproblems go to a bounded memo table.

mod certificate;
mod memo;

use rayon::prelude::*;

use crate::bits::{VertexSet, DEFAULT_VERTEX_LIMIT, HARD_VERTEX_LIMIT};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

pub use certificate::{verify_certificate, FailureReason, VdCertificate, VertexFailure};
pub use memo::{MemoStats, MemoTable, DEFAULT_MEMO_CAPACITY};

/// Recursion depth below which sibling candidates are tried in parallel.
const PARALLEL_DEPTH: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeciderConfig {
    /// Complexes with more vertices are rejected with a capacity error.
    pub max_vertices: usize,
    /// Memo entries; 0 disables memoization.
    pub memo_capacity: usize,
    pub parallel: bool,
    pub strip_cones: bool,
}

impl Default for DeciderConfig {
    fn default() -> Self {
        DeciderConfig {
            max_vertices: DEFAULT_VERTEX_LIMIT,
            memo_capacity: DEFAULT_MEMO_CAPACITY,
            parallel: true,
            strip_cones: true,
        }
    }
}

impl DeciderConfig {
    pub fn single_threaded() -> Self {
        DeciderConfig {
            parallel: false,
            ..Self::default()
        }
    }

    /// Reads `VD_MAX_VERTICES` into `max_vertices`, capped at the hard limit.
    pub fn with_env_overrides(mut self) -> Result<Self> {
        if let Ok(raw) = std::env::var("VD_MAX_VERTICES") {
            let n: usize = raw.trim().parse().map_err(|_| {
                Error::Document(format!("VD_MAX_VERTICES must be an integer, got `{raw}`"))
            })?;
            if n > HARD_VERTEX_LIMIT {
                return Err(Error::Capacity {
                    count: n,
                    limit: HARD_VERTEX_LIMIT,
                });
            }
            self.max_vertices = n;
        }
        Ok(self)
    }
}

/// Decides vertex decomposability, sharing one memo table across queries.
///
/// The answer for a facet list depends on nothing but the list itself, so
/// one decider may serve unrelated complexes.
pub struct Decider {
    config: DeciderConfig,
    memo: MemoTable,
}

impl Default for Decider {
    fn default() -> Self {
        Self::new(DeciderConfig::default())
    }
}

impl Decider {
    pub fn new(config: DeciderConfig) -> Self {
        Decider {
            memo: MemoTable::new(config.memo_capacity),
            config,
        }
    }

    pub fn config(&self) -> &DeciderConfig {
        &self.config
    }

    pub fn memo(&self) -> &MemoTable {
        &self.memo
    }

    fn check_capacity(&self, complex: &SimplicialComplex) -> Result<()> {
        let count = complex.vertex_count();
        if count > self.config.max_vertices {
            return Err(Error::Capacity {
                count,
                limit: self.config.max_vertices,
            });
        }
        Ok(())
    }

    pub fn is_vertex_decomposable(&self, complex: &SimplicialComplex) -> Result<bool> {
        self.check_capacity(complex)?;
        Ok(self.decide(complex.facets().to_vec(), 0))
    }

    /// Builds a certificate whose replay reproduces the answer.
    ///
    /// Refutations are exhaustive: every support vertex gets a reason, and a
    /// refuted branch carries its own refutation, so refutation certificates
    /// can be large.
    pub fn certify(&self, complex: &SimplicialComplex) -> Result<VdCertificate> {
        self.check_capacity(complex)?;
        Ok(self.certify_facets(complex, complex.facets().to_vec()))
    }

    fn decide(&self, facets: Vec<VertexSet>, depth: usize) -> bool {
        if facets.len() <= 1 {
            return true;
        }
        let mut facets = facets;
        if self.config.strip_cones {
            let cone = facets.iter().fold(facets[0], |acc, f| acc.intersection(*f));
            if !cone.is_empty() {
                for f in &mut facets {
                    *f = f.difference(cone);
                }
            }
        }
        facets.sort_unstable();
        if let Some(known) = self.memo.get(&facets) {
            return known;
        }
        let candidates = candidates(&facets);
        let attempt = |v: usize| match split(&facets, v) {
            Some((link, del)) => self.decide(link, depth + 1) && self.decide(del, depth + 1),
            None => false,
        };
        let answer = if self.config.parallel && depth < PARALLEL_DEPTH && candidates.len() > 1 {
            candidates.par_iter().any(|&v| attempt(v))
        } else {
            candidates.iter().any(|&v| attempt(v))
        };
        self.memo.insert(&facets, answer);
        answer
    }

    fn certify_facets(&self, complex: &SimplicialComplex, facets: Vec<VertexSet>) -> VdCertificate {
        if facets.len() <= 1 {
            return VdCertificate::SimplexLeaf;
        }
        if self.decide(facets.clone(), 0) {
            for v in candidates(&facets) {
                if let Some((link, del)) = split(&facets, v) {
                    if self.decide(link.clone(), 0) && self.decide(del.clone(), 0) {
                        return VdCertificate::ShedNode {
                            shed_vertex: complex.label(v).to_owned(),
                            deletion: Box::new(self.certify_facets(complex, del)),
                            link: Box::new(self.certify_facets(complex, link)),
                        };
                    }
                }
            }
            unreachable!("decided vertex decomposable but no shedding vertex replays");
        }
        let support = facets.iter().fold(VertexSet::EMPTY, |a, f| a.union(*f));
        let failures = support
            .iter()
            .map(|v| {
                let reason = match split(&facets, v) {
                    None => FailureReason::SharedFacet {
                        facet: labels(complex, shared_link_facet(&facets, v)),
                    },
                    Some((link, del)) => {
                        if !self.decide(link.clone(), 0) {
                            FailureReason::LinkRefuted {
                                certificate: Box::new(self.certify_facets(complex, link)),
                            }
                        } else {
                            debug_assert!(!self.decide(del.clone(), 0));
                            FailureReason::DeletionRefuted {
                                certificate: Box::new(self.certify_facets(complex, del)),
                            }
                        }
                    }
                };
                VertexFailure {
                    vertex: complex.label(v).to_owned(),
                    reason,
                }
            })
            .collect();
        VdCertificate::Refuted { failures }
    }
}

/// Support vertices ordered by facet degree, then id.
fn candidates(facets: &[VertexSet]) -> Vec<usize> {
    let support = facets.iter().fold(VertexSet::EMPTY, |a, f| a.union(*f));
    let mut vs: Vec<(usize, usize)> = support
        .iter()
        .map(|v| (facets.iter().filter(|f| f.contains(v)).count(), v))
        .collect();
    vs.sort_unstable();
    vs.into_iter().map(|(_, v)| v).collect()
}

/// Link and deletion facets of `v` when `v` is a shedding vertex.
///
/// The link's facets are `F ∖ v` for the facets `F ∋ v`. Such a set is a
/// facet of the deletion exactly when no facet avoiding `v` contains it, so
/// `v` sheds iff every `F ∖ v` lies in some facet avoiding `v`; the deletion
/// is then just the facets avoiding `v`.
fn split(facets: &[VertexSet], v: usize) -> Option<(Vec<VertexSet>, Vec<VertexSet>)> {
    let (with, without): (Vec<VertexSet>, Vec<VertexSet>) =
        facets.iter().partition(|f| f.contains(v));
    let link: Vec<VertexSet> = with.iter().map(|f| f.without(v)).collect();
    let sheds = link.iter().all(|l| without.iter().any(|g| l.is_subset(*g)));
    sheds.then_some((link, without))
}

/// A facet of the link of `v` that is also a facet of the deletion.
fn shared_link_facet(facets: &[VertexSet], v: usize) -> VertexSet {
    let without: Vec<VertexSet> = facets.iter().copied().filter(|f| !f.contains(v)).collect();
    facets
        .iter()
        .filter(|f| f.contains(v))
        .map(|f| f.without(v))
        .find(|l| !without.iter().any(|g| l.is_subset(*g)))
        .expect("non-shedding vertex has a shared facet")
}

fn labels(complex: &SimplicialComplex, set: VertexSet) -> Vec<String> {
    complex
        .labels_of(set)
        .into_iter()
        .map(str::to_owned)
        .collect()
}

/// Whether no facet of `link(v)` is a facet of `Δ ∖ v`. Only the facet
/// condition is checked, not decomposability of the two branches.
pub fn is_shedding_vertex(complex: &SimplicialComplex, v: usize) -> Result<bool> {
    if !complex.support().contains(v) {
        let name = if v < complex.vertex_count() {
            complex.label(v).to_owned()
        } else {
            format!("#{v}")
        };
        return Err(Error::NotInSupport(name));
    }
    Ok(split(complex.facets(), v).is_some())
}

/// Convenience wrapper with a fresh default [`Decider`].
pub fn is_vertex_decomposable(complex: &SimplicialComplex) -> Result<bool> {
    Decider::default().is_vertex_decomposable(complex)
}

pub fn certify(complex: &SimplicialComplex) -> Result<VdCertificate> {
    Decider::default().certify(complex)
}
