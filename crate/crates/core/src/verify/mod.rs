//! Characterization oracles over generated instances.
//!
//! Each `check_*` function generates instances from an [`InstanceSpec`],
//! evaluates both sides of a characterization on every instance, and returns
//! a [`VerificationReport`] listing any counterexamples. Fixed reference
//! instances run as controls alongside the generated ones. Counterexamples
//! are stored in the text formats of [`crate::io`] and can be replayed from
//! the report alone.

mod generate;
mod theorems;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Error;

pub use generate::{
    all_colorings, all_complexes, all_graphs, antichains, generate, random_chordal_graph,
    random_coloring, random_complex, random_complex_labeled, random_filtered_graph,
    random_full_coloring, random_graph, x_labels, Instance, EXHAUSTIVE_COMPLEX_LIMIT,
    EXHAUSTIVE_GRAPH_LIMIT,
};
pub use theorems::{
    check_chordality, check_corollary_3_5, check_corollary_3_7, check_joins_and_links,
    check_section_4, check_theorem_3_3, link_condition, run, LinkCondition,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    RandomComplex,
    RandomGraph,
    ExhaustiveSmall,
}

/// Parameters of a deterministic instance stream.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub seed: u64,
    /// Largest vertex count.
    pub n_vertices: usize,
    /// Smallest vertex count for random modes.
    pub min_vertices: usize,
    /// Largest dimension of a random generating face.
    pub max_dim: usize,
    /// Largest number of random generating faces.
    pub facet_budget: usize,
    pub mode: Mode,
    /// Number of random instances.
    pub instances: usize,
}

impl InstanceSpec {
    pub fn random_complexes(seed: u64, n_vertices: usize, instances: usize) -> Self {
        InstanceSpec {
            seed,
            n_vertices,
            min_vertices: n_vertices.div_ceil(2).min(3),
            max_dim: n_vertices.saturating_sub(1),
            facet_budget: 10,
            mode: Mode::RandomComplex,
            instances,
        }
    }

    pub fn random_graphs(
        seed: u64,
        min_vertices: usize,
        n_vertices: usize,
        instances: usize,
    ) -> Self {
        InstanceSpec {
            seed,
            n_vertices,
            min_vertices,
            max_dim: 0,
            facet_budget: 0,
            mode: Mode::RandomGraph,
            instances,
        }
    }

    pub fn exhaustive(n_vertices: usize) -> Self {
        InstanceSpec {
            seed: 0,
            n_vertices,
            min_vertices: 0,
            max_dim: n_vertices.saturating_sub(1),
            facet_budget: 0,
            mode: Mode::ExhaustiveSmall,
            instances: 0,
        }
    }

    /// The default stream for `theorem`: random tiers use 7 vertices and
    /// 10 generating faces for complexes (6 for full colorings, joins and
    /// links) and 6–8 vertices for graphs; exhaustive tiers use every
    /// complex on up to 4 vertices and every graph on up to 5 (6 for
    /// chordality).
    pub fn standard(theorem: Theorem, exhaustive: bool, seed: u64, instances: usize) -> Self {
        let n = match theorem {
            Theorem::WhiskerEquivalence | Theorem::UncoloredBound => 7,
            Theorem::DropOneClass | Theorem::JoinsAndLinks => 6,
            Theorem::Graphs => 8,
            Theorem::Chordality => 7,
        };
        if exhaustive {
            let n = match theorem {
                Theorem::Graphs => 5,
                Theorem::Chordality => 6,
                _ => 4,
            };
            return InstanceSpec {
                seed,
                ..InstanceSpec::exhaustive(n)
            };
        }
        match theorem {
            Theorem::Graphs => InstanceSpec::random_graphs(seed, 6, n, instances),
            Theorem::Chordality => InstanceSpec::random_graphs(seed, 1, n, instances),
            _ => InstanceSpec::random_complexes(seed, n, instances),
        }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Theorem {
    #[serde(rename = "3.3")]
    WhiskerEquivalence,
    #[serde(rename = "3.5")]
    UncoloredBound,
    #[serde(rename = "3.7")]
    DropOneClass,
    #[serde(rename = "joins-links")]
    JoinsAndLinks,
    #[serde(rename = "section4")]
    Graphs,
    #[serde(rename = "chordal")]
    Chordality,
}

impl Theorem {
    pub const ALL: [Theorem; 6] = [
        Theorem::WhiskerEquivalence,
        Theorem::UncoloredBound,
        Theorem::DropOneClass,
        Theorem::JoinsAndLinks,
        Theorem::Graphs,
        Theorem::Chordality,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::WhiskerEquivalence => "3.3",
            Theorem::UncoloredBound => "3.5",
            Theorem::DropOneClass => "3.7",
            Theorem::JoinsAndLinks => "joins-links",
            Theorem::Graphs => "section4",
            Theorem::Chordality => "chordal",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| Error::Document(format!("unknown theorem `{s}`")))
    }
}

/// The individual property a counterexample violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    /// Whiskered complex decomposable iff every restricted link is.
    WhiskerEquivalence,
    /// At most three uncolored vertices force decomposability.
    UncoloredBound,
    /// Dropping one class of a full coloring forces decomposability.
    DropOneClass,
    /// A join is decomposable iff both factors are.
    JoinProduct,
    /// Links of decomposable complexes are decomposable.
    LinkHeredity,
    /// Whiskering a graph whiskers its independence complex.
    GraphWhiskering,
    /// Link of an independent set, restricted off `S`, is an independence
    /// complex.
    GraphLinkIdentity,
    /// Whiskered-graph criterion.
    WhiskeredGraphEquivalence,
    /// `G ∖ S` chordal or a five-cycle forces decomposability.
    ChordalOrFiveCycle,
    /// Chordal graphs have decomposable independence complexes.
    ChordalIndependence,
    /// Maximum cardinality search agrees with the induced-cycle definition.
    ChordalityOracle,
}

/// A replayable failing instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// Position in the generated stream.
    pub index: usize,
    pub property: Property,
    /// Complex in the text facet format.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complex: Option<String>,
    /// Second complex, for joins.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub other: Option<String>,
    /// Coloring classes.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<Vec<String>>>,
    /// Graph in the text edge format.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<String>,
    /// The vertex subset `S` of a graph instance.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subset: Option<Vec<String>>,
    /// The face (`μ` or `σ`) at which the property failed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub face: Option<Vec<String>>,
    pub detail: String,
}

/// A fixed reference instance with a known outcome.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ControlCheck {
    pub name: String,
    pub expected: String,
    pub observed: String,
    pub passed: bool,
}

impl ControlCheck {
    pub fn new(
        name: impl Into<String>,
        expected: impl fmt::Debug,
        observed: impl fmt::Debug,
    ) -> Self {
        let expected = format!("{expected:?}");
        let observed = format!("{observed:?}");
        ControlCheck {
            name: name.into(),
            passed: expected == observed,
            expected,
            observed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem_id: String,
    pub spec: InstanceSpec,
    pub instances_checked: usize,
    pub counterexamples: Vec<Counterexample>,
    pub controls: Vec<ControlCheck>,
    /// Per-instance errors (for example capacity errors); logged, not fatal.
    pub errors: Vec<String>,
    /// Named counters, such as how many instances passed a filter.
    pub stats: BTreeMap<String, usize>,
    pub elapsed_secs: f64,
}

impl VerificationReport {
    /// No counterexamples, no instance errors, and every control as
    /// expected.
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
            && self.errors.is_empty()
            && self.controls.iter().all(|c| c.passed)
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} instances, {} counterexamples, {}/{} controls, {} errors, {:.2}s",
            self.theorem_id,
            self.instances_checked,
            self.counterexamples.len(),
            self.controls.iter().filter(|c| c.passed).count(),
            self.controls.len(),
            self.errors.len(),
            self.elapsed_secs
        )
    }
}
