//! Decomposition certificates and their independent replay.

use serde::{Deserialize, Serialize};

use crate::bits::VertexSet;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// A record of why a complex is, or is not, vertex decomposable.
///
/// Certificates name vertices by label, so a certificate built for a complex
/// also applies to every subcomplex reached by deleting or linking the
/// vertices it mentions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum VdCertificate {
    /// At most one facet. Covers `⟨∅⟩` and, by convention, the void complex.
    SimplexLeaf,
    /// `shed_vertex` is a shedding vertex; the children certify the deletion
    /// and the link.
    ShedNode {
        shed_vertex: String,
        deletion: Box<VdCertificate>,
        link: Box<VdCertificate>,
    },
    /// Every vertex of the support fails.
    Refuted { failures: Vec<VertexFailure> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexFailure {
    pub vertex: String,
    #[serde(flatten)]
    pub reason: FailureReason,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "kebab-case")]
pub enum FailureReason {
    /// `facet` is a facet of both the link and the deletion.
    SharedFacet { facet: Vec<String> },
    /// The link is not vertex decomposable.
    LinkRefuted { certificate: Box<VdCertificate> },
    /// The deletion is not vertex decomposable.
    DeletionRefuted { certificate: Box<VdCertificate> },
}

impl VdCertificate {
    /// Whether the certificate claims vertex decomposability.
    pub fn is_decomposable(&self) -> bool {
        !matches!(self, VdCertificate::Refuted { .. })
    }

    /// Number of nodes, counting nested refutations.
    pub fn size(&self) -> usize {
        match self {
            VdCertificate::SimplexLeaf => 1,
            VdCertificate::ShedNode { deletion, link, .. } => 1 + deletion.size() + link.size(),
            VdCertificate::Refuted { failures } => {
                1 + failures
                    .iter()
                    .map(|f| match &f.reason {
                        FailureReason::SharedFacet { .. } => 0,
                        FailureReason::LinkRefuted { certificate }
                        | FailureReason::DeletionRefuted { certificate } => certificate.size(),
                    })
                    .sum::<usize>()
            }
        }
    }

    /// Shedding order along the deletion spine, for display.
    pub fn shedding_sequence(&self) -> Vec<&str> {
        let mut out = Vec::new();
        let mut node = self;
        while let VdCertificate::ShedNode {
            shed_vertex,
            deletion,
            ..
        } = node
        {
            out.push(shed_vertex.as_str());
            node = deletion;
        }
        out
    }
}

/// Replays `cert` against `complex`, recomputing every link and deletion.
///
/// Returns `Ok(false)` when a claim does not hold, and an error when the
/// certificate names a label the complex does not have.
pub fn verify_certificate(complex: &SimplicialComplex, cert: &VdCertificate) -> Result<bool> {
    match cert {
        VdCertificate::SimplexLeaf => Ok(complex.facets().len() <= 1),
        VdCertificate::ShedNode {
            shed_vertex,
            deletion,
            link,
        } => {
            let v = lookup(complex, shed_vertex)?;
            if !complex.support().contains(v) {
                return Ok(false);
            }
            let (lk, del) = branches(complex, v);
            if shared_facet(&lk, &del).is_some() {
                return Ok(false);
            }
            Ok(verify_certificate(&del, deletion)? && verify_certificate(&lk, link)?)
        }
        VdCertificate::Refuted { failures } => {
            if complex.facets().len() <= 1 {
                return Ok(false);
            }
            let mut listed = VertexSet::EMPTY;
            for f in failures {
                let v = lookup(complex, &f.vertex)?;
                if listed.contains(v) {
                    return Ok(false);
                }
                listed.insert(v);
            }
            if listed != complex.support() {
                return Ok(false);
            }
            for f in failures {
                let v = lookup(complex, &f.vertex)?;
                let (lk, del) = branches(complex, v);
                let ok = match &f.reason {
                    FailureReason::SharedFacet { facet } => {
                        let Some(s) = lk.id_set(facet) else {
                            return Err(Error::MalformedCertificate(format!(
                                "shared facet of `{}` names unknown vertices",
                                f.vertex
                            )));
                        };
                        lk.facets().contains(&s) && del.facets().contains(&s)
                    }
                    FailureReason::LinkRefuted { certificate } => {
                        !certificate.is_decomposable() && verify_certificate(&lk, certificate)?
                    }
                    FailureReason::DeletionRefuted { certificate } => {
                        !certificate.is_decomposable() && verify_certificate(&del, certificate)?
                    }
                };
                if !ok {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

fn lookup(complex: &SimplicialComplex, label: &str) -> Result<usize> {
    complex
        .id(label)
        .ok_or_else(|| Error::MalformedCertificate(format!("unknown vertex `{label}`")))
}

/// Link and deletion of a single vertex; both live on the same vertex set.
fn branches(complex: &SimplicialComplex, v: usize) -> (SimplicialComplex, SimplicialComplex) {
    let s = VertexSet::singleton(v);
    let lk = complex.link(s).expect("support vertex is a face");
    (lk, complex.deletion(s))
}

pub(crate) fn shared_facet(link: &SimplicialComplex, del: &SimplicialComplex) -> Option<VertexSet> {
    debug_assert_eq!(link.labels(), del.labels());
    link.facets()
        .iter()
        .copied()
        .find(|f| del.facets().contains(f))
}

impl SimplicialComplex {
    fn id_set(&self, labels: &[String]) -> Option<VertexSet> {
        labels.iter().map(|l| self.id(l)).collect()
    }
}
