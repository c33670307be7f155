//! The oracles themselves: per-property evaluators shared by the sweeps and
//! by counterexample replay.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bits::VertexSet;
use crate::coloring::PartialColoring;
use crate::complex::SimplicialComplex;
use crate::decomp::{Decider, DeciderConfig};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{parse_complex, parse_graph, write_complex, write_graph};

use super::generate::{
    all_colorings, all_complexes, all_graphs, check_spec, random_chordal_graph, random_coloring,
    random_complex, random_complex_labeled, random_filtered_graph, random_full_coloring,
    random_graph, x_labels, EXHAUSTIVE_COMPLEX_LIMIT, EXHAUSTIVE_GRAPH_LIMIT,
};
use super::{
    ControlCheck, Counterexample, InstanceSpec, Mode, Property, Theorem, VerificationReport,
};

/// Memo entries for oracle runs; instances are small.
const ORACLE_MEMO_CAPACITY: usize = 1 << 18;

fn oracle_decider() -> Decider {
    Decider::new(DeciderConfig {
        parallel: false,
        memo_capacity: ORACLE_MEMO_CAPACITY,
        ..DeciderConfig::default()
    })
}

fn owned(labels: Vec<&str>) -> Vec<String> {
    labels.into_iter().map(str::to_owned).collect()
}

fn cx(facets: &[&str]) -> SimplicialComplex {
    SimplicialComplex::from_facets(facets.iter().map(|f| f.split_whitespace()))
        .expect("fixed complex")
}

fn six_vertex_complex() -> SimplicialComplex {
    cx(&[
        "x1 x2 x3 x4",
        "x1 x3 x4 x5",
        "x1 x3 x5 x6",
        "x1 x2 x5 x6",
        "x2 x3 x6",
    ])
}

fn two_triangles() -> SimplicialComplex {
    cx(&["x1 x2 x3", "x3 x4 x5"])
}

fn coloring(spec: &str) -> PartialColoring {
    PartialColoring::parse(spec).expect("fixed coloring")
}

fn classes_of(chi: &PartialColoring) -> Vec<Vec<String>> {
    chi.classes().iter().map(|c| c.members().to_vec()).collect()
}

/// The link side of the whiskering criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkCondition {
    /// Every face `μ ⊆ W` has a decomposable `link(μ)|_{V∖W}`.
    pub holds: bool,
    /// First failing `μ`, by size then lexicographically.
    pub witness: Option<Vec<String>>,
}

/// Evaluates, for every face `μ` of `Δ` inside the colored set `W`, whether
/// `link_Δ(μ)` restricted to the uncolored vertices is vertex decomposable.
pub fn link_condition(
    decider: &Decider,
    complex: &SimplicialComplex,
    chi: &PartialColoring,
) -> Result<LinkCondition> {
    if !chi.validate(complex)? {
        return Err(Error::InvalidColoring(chi.to_string()));
    }
    let w = chi.colored_set(complex)?;
    let uncolored = complex.labels_of(chi.complement(complex)?);
    let mut mus: Vec<VertexSet> = complex
        .faces()
        .into_iter()
        .filter(|m| m.is_subset(w))
        .collect();
    mus.sort_by(|a, b| a.len().cmp(&b.len()).then(a.lex_cmp(*b)));
    for mu in mus {
        let restricted = complex.link(mu)?.restriction_to(&uncolored)?;
        if !decider.is_vertex_decomposable(&restricted)? {
            return Ok(LinkCondition {
                holds: false,
                witness: Some(owned(complex.labels_of(mu))),
            });
        }
    }
    Ok(LinkCondition {
        holds: true,
        witness: None,
    })
}

// Evaluators return `Some(detail)` when the property is violated.

fn eval_whisker_equivalence(
    d: &Decider,
    c: &SimplicialComplex,
    chi: &PartialColoring,
) -> Result<Option<String>> {
    let left = link_condition(d, c, chi)?;
    let right = d.is_vertex_decomposable(&chi.whisker(c)?)?;
    Ok((left.holds != right).then(|| {
        format!(
            "link condition {} (witness {:?}) but whiskered complex decomposable = {right}",
            left.holds, left.witness
        )
    }))
}

fn eval_uncolored_bound(
    d: &Decider,
    c: &SimplicialComplex,
    chi: &PartialColoring,
) -> Result<Option<String>> {
    let uncolored = chi.complement(c)?.len();
    if uncolored > 3 {
        return Ok(None);
    }
    let vd = d.is_vertex_decomposable(&chi.whisker(c)?)?;
    Ok((!vd)
        .then(|| format!("{uncolored} uncolored vertices but whiskered complex not decomposable")))
}

fn eval_drop_one_class(
    d: &Decider,
    c: &SimplicialComplex,
    chi: &PartialColoring,
) -> Result<Option<String>> {
    if !chi.is_full(c)? {
        return Ok(None);
    }
    let mut failed = Vec::new();
    for (i, sub) in chi.drop_one_class().into_iter().enumerate() {
        if !d.is_vertex_decomposable(&sub.whisker(c)?)? {
            failed.push(i + 1);
        }
    }
    Ok((!failed.is_empty())
        .then(|| format!("dropping class(es) {failed:?} gives a non-decomposable complex")))
}

fn eval_join(d: &Decider, a: &SimplicialComplex, b: &SimplicialComplex) -> Result<Option<String>> {
    let (va, vb) = (d.is_vertex_decomposable(a)?, d.is_vertex_decomposable(b)?);
    let vj = d.is_vertex_decomposable(&a.join(b)?)?;
    Ok((vj != (va && vb)).then(|| format!("factors decomposable = ({va}, {vb}) but join = {vj}")))
}

/// Checks the given face, or every face when `face` is `None`; returns the
/// first failing face.
fn eval_link_heredity(
    d: &Decider,
    c: &SimplicialComplex,
    face: Option<VertexSet>,
) -> Result<Option<(VertexSet, String)>> {
    if !d.is_vertex_decomposable(c)? {
        return Ok(None);
    }
    let faces = match face {
        Some(f) => vec![f],
        None => c.faces(),
    };
    for sigma in faces {
        if !d.is_vertex_decomposable(&c.link(sigma)?)? {
            return Ok(Some((
                sigma,
                format!(
                    "complex decomposable but link of {} is not",
                    c.face_string(sigma)
                ),
            )));
        }
    }
    Ok(None)
}

fn eval_graph_whiskering(g: &Graph, s: VertexSet) -> Result<Option<String>> {
    let direct = g.add_whiskers(s)?.independence_complex();
    let chi = PartialColoring::singletons(g.labels_of(s))?;
    let via = chi.whisker(&g.independence_complex())?;
    Ok((direct != via)
        .then(|| format!("independence complex {direct} but whiskered complex {via}")))
}

/// `link(μ)|_{V∖S}` in `Ind(G)` against `Ind` of what survives outside `S`
/// once `N[μ]` is removed, compared as facet lists.
fn eval_graph_link(g: &Graph, s: VertexSet, mu: VertexSet) -> Result<Option<String>> {
    let outside = g.vertex_set().difference(s);
    let link = g
        .independence_complex()
        .link(mu)?
        .restriction_to(g.labels_of(outside))?;
    let keep = outside.difference(g.closed_neighborhood(mu));
    let ind = g.induced_subgraph(keep)?.independence_complex();
    Ok((link.facet_labels() != ind.facet_labels())
        .then(|| format!("restricted link {link} but independence complex {ind}")))
}

fn eval_graph_equivalence(d: &Decider, g: &Graph, s: VertexSet) -> Result<Option<String>> {
    let cond = g.whiskered_vd_condition(s, d)?;
    let vd = d.is_vertex_decomposable(&g.add_whiskers(s)?.independence_complex())?;
    Ok((cond.vd != vd).then(|| {
        format!(
            "criterion {} (witness {:?}) but whiskered independence complex decomposable = {vd}",
            cond.vd, cond.witness
        )
    }))
}

fn chordal_or_five_cycle(g: &Graph, s: VertexSet) -> Result<bool> {
    let rest = g.delete_vertices(s)?;
    Ok(rest.is_chordal() || rest.is_five_cycle())
}

fn eval_chordal_or_five_cycle(d: &Decider, g: &Graph, s: VertexSet) -> Result<Option<String>> {
    if !chordal_or_five_cycle(g, s)? {
        return Ok(None);
    }
    let vd = d.is_vertex_decomposable(&g.add_whiskers(s)?.independence_complex())?;
    Ok((!vd).then(|| {
        "remainder chordal or a five-cycle but whiskered complex not decomposable".to_owned()
    }))
}

fn eval_chordal_independence(d: &Decider, g: &Graph) -> Result<Option<String>> {
    if !g.is_chordal() {
        return Ok(None);
    }
    let vd = d.is_vertex_decomposable(&g.independence_complex())?;
    Ok((!vd).then(|| "chordal graph with non-decomposable independence complex".to_owned()))
}

fn eval_chordality(g: &Graph) -> Option<String> {
    let fast = g.is_reverse_peo(&g.mcs_order());
    let slow = g.is_chordal_by_cycles();
    if fast != slow {
        return Some(format!(
            "search says {fast}, induced-cycle scan says {slow}"
        ));
    }
    if slow {
        for v in 0..g.vertex_count() {
            let sub = g
                .delete_vertices(VertexSet::singleton(v))
                .expect("vertex present");
            if !sub.is_chordal_by_cycles() || !sub.is_reverse_peo(&sub.mcs_order()) {
                return Some(format!("chordal, but not after deleting {}", g.label(v)));
            }
        }
    }
    None
}

impl Counterexample {
    fn complex_case(
        index: usize,
        property: Property,
        c: &SimplicialComplex,
        detail: String,
    ) -> Self {
        Counterexample {
            index,
            property,
            complex: Some(write_complex(c)),
            other: None,
            classes: None,
            graph: None,
            subset: None,
            face: None,
            detail,
        }
    }

    fn graph_case(
        index: usize,
        property: Property,
        g: &Graph,
        s: Option<VertexSet>,
        detail: String,
    ) -> Self {
        Counterexample {
            index,
            property,
            complex: None,
            other: None,
            classes: None,
            graph: Some(write_graph(g)),
            subset: s.map(|s| owned(g.labels_of(s))),
            face: None,
            detail,
        }
    }

    fn stored_complex(&self, other: bool) -> Result<SimplicialComplex> {
        let text = if other { &self.other } else { &self.complex };
        parse_complex(text.as_deref().ok_or_else(|| missing("complex"))?)
    }

    fn stored_coloring(&self) -> Result<PartialColoring> {
        PartialColoring::new(self.classes.clone().ok_or_else(|| missing("classes"))?)
    }

    fn stored_graph(&self) -> Result<(Graph, VertexSet)> {
        let g = parse_graph(self.graph.as_deref().ok_or_else(|| missing("graph"))?)?;
        let s = g.set_of(self.subset.iter().flatten())?;
        Ok((g, s))
    }

    /// Re-evaluates the violated property from the stored instance alone.
    /// Returns `true` when the discrepancy reproduces.
    pub fn replay(&self) -> Result<bool> {
        let d = oracle_decider();
        let found = match self.property {
            Property::WhiskerEquivalence => eval_whisker_equivalence(
                &d,
                &self.stored_complex(false)?,
                &self.stored_coloring()?,
            )?
            .is_some(),
            Property::UncoloredBound => {
                eval_uncolored_bound(&d, &self.stored_complex(false)?, &self.stored_coloring()?)?
                    .is_some()
            }
            Property::DropOneClass => {
                eval_drop_one_class(&d, &self.stored_complex(false)?, &self.stored_coloring()?)?
                    .is_some()
            }
            Property::JoinProduct => eval_join(
                &d,
                &self.stored_complex(false)?,
                &self.stored_complex(true)?,
            )?
            .is_some(),
            Property::LinkHeredity => {
                let c = self.stored_complex(false)?;
                let face = match &self.face {
                    Some(f) => Some(c.set_of(f)?),
                    None => None,
                };
                eval_link_heredity(&d, &c, face)?.is_some()
            }
            Property::GraphWhiskering => {
                let (g, s) = self.stored_graph()?;
                eval_graph_whiskering(&g, s)?.is_some()
            }
            Property::GraphLinkIdentity => {
                let (g, s) = self.stored_graph()?;
                let mu = g.set_of(self.face.as_ref().ok_or_else(|| missing("face"))?)?;
                eval_graph_link(&g, s, mu)?.is_some()
            }
            Property::WhiskeredGraphEquivalence => {
                let (g, s) = self.stored_graph()?;
                eval_graph_equivalence(&d, &g, s)?.is_some()
            }
            Property::ChordalOrFiveCycle => {
                let (g, s) = self.stored_graph()?;
                eval_chordal_or_five_cycle(&d, &g, s)?.is_some()
            }
            Property::ChordalIndependence => {
                let (g, _) = self.stored_graph()?;
                eval_chordal_independence(&d, &g)?.is_some()
            }
            Property::ChordalityOracle => {
                let (g, _) = self.stored_graph()?;
                eval_chordality(&g).is_some()
            }
        };
        Ok(found)
    }
}

fn missing(field: &str) -> Error {
    Error::MalformedCertificate(format!("counterexample lacks `{field}`"))
}

/// What one instance contributed to a report.
#[derive(Default)]
struct Outcome {
    counterexamples: Vec<Counterexample>,
    errors: Vec<String>,
    stats: BTreeMap<String, usize>,
}

impl Outcome {
    fn count(&mut self, key: &str) {
        *self.stats.entry(key.to_owned()).or_default() += 1;
    }

    fn error(&mut self, index: usize, e: Error) {
        self.errors.push(format!("instance {index}: {e}"));
    }
}

struct Run {
    theorem: Theorem,
    spec: InstanceSpec,
    start: Instant,
    controls: Vec<ControlCheck>,
}

impl Run {
    fn new(theorem: Theorem, spec: &InstanceSpec) -> Result<Self> {
        check_spec(spec)?;
        Ok(Run {
            theorem,
            spec: spec.clone(),
            start: Instant::now(),
            controls: Vec::new(),
        })
    }

    fn control(
        &mut self,
        name: &str,
        expected: impl std::fmt::Debug,
        observed: Result<impl std::fmt::Debug>,
    ) {
        let check = match observed {
            Ok(o) => ControlCheck::new(name, expected, o),
            Err(e) => ControlCheck::new(name, expected, format!("error: {e}")),
        };
        self.controls.push(check);
    }

    /// Evaluates `cases` in parallel and merges outcomes in index order.
    fn finish<T: Sync>(
        self,
        cases: &[T],
        eval: impl Fn(usize, &T) -> Outcome + Sync,
    ) -> VerificationReport {
        let outcomes: Vec<Outcome> = cases
            .par_iter()
            .enumerate()
            .map(|(i, case)| eval(i, case))
            .collect();
        let mut report = VerificationReport {
            theorem_id: self.theorem.id().to_owned(),
            spec: self.spec,
            instances_checked: cases.len(),
            counterexamples: Vec::new(),
            controls: self.controls,
            errors: Vec::new(),
            stats: BTreeMap::new(),
            elapsed_secs: 0.0,
        };
        for o in outcomes {
            report.counterexamples.extend(o.counterexamples);
            report.errors.extend(o.errors);
            for (k, v) in o.stats {
                *report.stats.entry(k).or_default() += v;
            }
        }
        report.elapsed_secs = self.start.elapsed().as_secs_f64();
        report
    }
}

fn require_mode(spec: &InstanceSpec, allowed: &[Mode], theorem: Theorem) -> Result<()> {
    if allowed.contains(&spec.mode) {
        Ok(())
    } else {
        Err(Error::InfeasibleSpec(format!(
            "mode {:?} does not apply to {theorem}",
            spec.mode
        )))
    }
}

fn random_vertex_count(rng: &mut ChaCha8Rng, spec: &InstanceSpec) -> usize {
    rng.gen_range(spec.min_vertices..=spec.n_vertices)
}

fn random_subset_of_size(rng: &mut ChaCha8Rng, set: VertexSet, size: usize) -> VertexSet {
    let ids: Vec<usize> = set.iter().collect();
    ids.choose_multiple(rng, size).copied().collect()
}

/// Every (complex, coloring) pair on up to `n` vertices, over all colored
/// sets `W` accepted by `keep`.
fn exhaustive_colored(
    n: usize,
    keep: impl Fn(&SimplicialComplex, VertexSet) -> bool,
) -> Vec<(SimplicialComplex, PartialColoring)> {
    let mut out = Vec::new();
    for m in 0..=n {
        for c in all_complexes(m) {
            for w in c.vertex_set().subsets() {
                if keep(&c, w) {
                    for chi in all_colorings(&c, w) {
                        out.push((c.clone(), chi));
                    }
                }
            }
        }
    }
    out
}

fn colored_case(
    index: usize,
    property: Property,
    c: &SimplicialComplex,
    chi: &PartialColoring,
    result: Result<Option<String>>,
) -> Outcome {
    let mut o = Outcome::default();
    match result {
        Ok(Some(detail)) => {
            let mut ce = Counterexample::complex_case(index, property, c, detail);
            ce.classes = Some(classes_of(chi));
            o.counterexamples.push(ce);
        }
        Ok(None) => {}
        Err(e) => o.error(index, e),
    }
    o
}

/// Whiskered complex decomposable iff every `link(μ)|_{V∖W}` is, over
/// `μ ⊆ W`. The two reference instances and the `⟨∅⟩` base case are always
/// evaluated first.
pub fn check_theorem_3_3(spec: &InstanceSpec) -> Result<VerificationReport> {
    let theorem = Theorem::WhiskerEquivalence;
    require_mode(spec, &[Mode::RandomComplex, Mode::ExhaustiveSmall], theorem)?;
    let mut run = Run::new(theorem, spec)?;
    let d = oracle_decider();
    let fixed = [
        (six_vertex_complex(), coloring("x1|x2")),
        (two_triangles(), coloring("x3")),
        (SimplicialComplex::empty_face(), coloring("|")),
    ];
    let expected = [
        (false, Some(vec!["x1", "x2"]), false),
        (false, Some(vec![]), false),
        (true, None, true),
    ];
    for ((c, chi), (l, w, r)) in fixed.iter().zip(expected) {
        let name = format!("{c} colored {chi}");
        let observed = link_condition(&d, c, chi).and_then(|lc| {
            Ok((
                lc.holds,
                lc.witness,
                d.is_vertex_decomposable(&chi.whisker(c)?)?,
            ))
        });
        run.control(&name, (l, w.map(|w| owned(w)), r), observed);
    }
    let mut cases: Vec<(SimplicialComplex, PartialColoring)> = fixed.to_vec();
    match spec.mode {
        Mode::ExhaustiveSmall => cases.extend(exhaustive_colored(
            spec.n_vertices.min(EXHAUSTIVE_COMPLEX_LIMIT),
            |_, _| true,
        )),
        _ => {
            let mut rng = spec.rng();
            for _ in 0..spec.instances {
                let n = random_vertex_count(&mut rng, spec);
                let c = random_complex(&mut rng, n, spec.max_dim, spec.facet_budget);
                // At most three uncolored vertices always gives a
                // decomposable complex, so most draws leave four or more.
                let k = if rng.gen_bool(0.7) {
                    rng.gen_range(n.min(4)..=n)
                } else {
                    rng.gen_range(0..=n)
                };
                let w = random_subset_of_size(&mut rng, c.vertex_set(), n - k);
                let chi = random_coloring(&mut rng, &c, w);
                cases.push((c, chi));
            }
        }
    }
    Ok(run.finish(&cases, |i, (c, chi)| {
        let mut o = colored_case(
            i,
            Property::WhiskerEquivalence,
            c,
            chi,
            eval_whisker_equivalence(&d, c, chi),
        );
        if chi
            .whisker(c)
            .and_then(|w| d.is_vertex_decomposable(&w))
            .unwrap_or(false)
        {
            o.count("whiskered_decomposable");
        }
        o
    }))
}

/// At most three uncolored vertices force a decomposable whiskered complex.
/// The two-triangle instance with four uncolored vertices is the sharpness
/// control and must not be decomposable.
pub fn check_corollary_3_5(spec: &InstanceSpec) -> Result<VerificationReport> {
    let theorem = Theorem::UncoloredBound;
    require_mode(spec, &[Mode::RandomComplex, Mode::ExhaustiveSmall], theorem)?;
    let mut run = Run::new(theorem, spec)?;
    let d = oracle_decider();
    let (t, chi) = (two_triangles(), coloring("x3"));
    run.control(
        "four uncolored vertices: two triangles colored x3",
        (4, false),
        chi.whisker(&t)
            .and_then(|w| Ok((chi.complement(&t)?.len(), d.is_vertex_decomposable(&w)?))),
    );
    let r = six_vertex_complex();
    let full = PartialColoring::singletons(r.labels()).expect("labels");
    run.control(
        "no uncolored vertices: full singleton coloring",
        true,
        full.whisker(&r).and_then(|w| d.is_vertex_decomposable(&w)),
    );
    let cases: Vec<(SimplicialComplex, PartialColoring)> = match spec.mode {
        Mode::ExhaustiveSmall => {
            exhaustive_colored(spec.n_vertices.min(EXHAUSTIVE_COMPLEX_LIMIT), |c, w| {
                c.vertex_count() - w.len() <= 3
            })
        }
        _ => {
            let mut rng = spec.rng();
            (0..spec.instances)
                .map(|_| {
                    let n = random_vertex_count(&mut rng, spec);
                    let c = random_complex(&mut rng, n, spec.max_dim, spec.facet_budget);
                    let k = rng.gen_range(0..=3.min(n));
                    let w = random_subset_of_size(&mut rng, c.vertex_set(), n - k);
                    let chi = random_coloring(&mut rng, &c, w);
                    (c, chi)
                })
                .collect()
        }
    };
    Ok(run.finish(&cases, |i, (c, chi)| {
        colored_case(
            i,
            Property::UncoloredBound,
            c,
            chi,
            eval_uncolored_bound(&d, c, chi),
        )
    }))
}

/// For a full coloring, each coloring obtained by dropping one class gives a
/// decomposable whiskered complex.
pub fn check_corollary_3_7(spec: &InstanceSpec) -> Result<VerificationReport> {
    let theorem = Theorem::DropOneClass;
    require_mode(spec, &[Mode::RandomComplex, Mode::ExhaustiveSmall], theorem)?;
    let mut run = Run::new(theorem, spec)?;
    let d = oracle_decider();
    let r = six_vertex_complex();
    for (name, chi) in [
        (
            "singleton coloring",
            PartialColoring::singletons(r.labels()).expect("labels"),
        ),
        ("coloring x4,x6|x1|x2|x3|x5", coloring("x4,x6|x1|x2|x3|x5")),
    ] {
        let observed: Result<Vec<bool>> = chi
            .drop_one_class()
            .iter()
            .map(|sub| d.is_vertex_decomposable(&sub.whisker(&r)?))
            .collect();
        run.control(name, vec![true; chi.len()], observed);
    }
    let cases: Vec<(SimplicialComplex, PartialColoring)> = match spec.mode {
        Mode::ExhaustiveSmall => {
            let n = spec.n_vertices.min(EXHAUSTIVE_COMPLEX_LIMIT);
            (0..=n)
                .flat_map(all_complexes)
                .flat_map(|c| {
                    all_colorings(&c, c.vertex_set())
                        .into_iter()
                        .filter(|chi| chi.classes().iter().all(|k| !k.is_empty()))
                        .map(move |chi| (c.clone(), chi))
                        .collect::<Vec<_>>()
                })
                .collect()
        }
        _ => {
            let mut rng = spec.rng();
            (0..spec.instances)
                .map(|_| {
                    let n = random_vertex_count(&mut rng, spec);
                    let c = random_complex(&mut rng, n, spec.max_dim, spec.facet_budget);
                    let chi = random_full_coloring(&mut rng, &c);
                    (c, chi)
                })
                .collect()
        }
    };
    Ok(run.finish(&cases, |i, (c, chi)| {
        let mut o = colored_case(
            i,
            Property::DropOneClass,
            c,
            chi,
            eval_drop_one_class(&d, c, chi),
        );
        o.stats.insert("drop_one_whiskerings".into(), chi.len());
        o
    }))
}

fn relabel(c: &SimplicialComplex, prefix: &str) -> SimplicialComplex {
    let map = |l: &str| format!("{prefix}{}", &l[1..]);
    SimplicialComplex::with_vertices(
        c.labels().iter().map(|l| map(l)),
        c.facet_labels()
            .iter()
            .map(|f| f.iter().map(|l| map(l)).collect::<Vec<_>>()),
    )
    .expect("relabelled complex")
}

enum JoinsCase {
    Join(SimplicialComplex, SimplicialComplex),
    Links(SimplicialComplex),
}

/// Joins are decomposable iff both factors are; links of decomposable
/// complexes are decomposable. Random mode draws `instances` join pairs and
/// `instances` link sweeps.
pub fn check_joins_and_links(spec: &InstanceSpec) -> Result<VerificationReport> {
    let theorem = Theorem::JoinsAndLinks;
    require_mode(spec, &[Mode::RandomComplex, Mode::ExhaustiveSmall], theorem)?;
    let mut run = Run::new(theorem, spec)?;
    let d = oracle_decider();
    let point = cx(&["z1"]);
    let pair = cx(&["x1 x2", "x4 x5"]);
    run.control(
        "two disjoint edges joined with a point",
        false,
        pair.join(&point).and_then(|j| d.is_vertex_decomposable(&j)),
    );
    let r = six_vertex_complex();
    run.control(
        "empty face joined with a complex",
        (true, false),
        SimplicialComplex::empty_face()
            .join(&r)
            .and_then(|j| Ok((j == r, d.is_vertex_decomposable(&j)?))),
    );
    let mut cases = Vec::new();
    match spec.mode {
        Mode::ExhaustiveSmall => {
            let n = spec.n_vertices.min(EXHAUSTIVE_COMPLEX_LIMIT);
            let small: Vec<SimplicialComplex> = (0..=n.min(3)).flat_map(all_complexes).collect();
            for a in &small {
                for b in &small {
                    cases.push(JoinsCase::Join(a.clone(), relabel(b, "z")));
                }
            }
            cases.extend((0..=n.min(4)).flat_map(all_complexes).map(JoinsCase::Links));
        }
        _ => {
            let mut rng = spec.rng();
            for _ in 0..spec.instances {
                let n = random_vertex_count(&mut rng, spec);
                let a = random_complex(&mut rng, n, spec.max_dim, spec.facet_budget);
                let m = random_vertex_count(&mut rng, spec);
                let z: Vec<String> = (1..=m).map(|i| format!("z{i}")).collect();
                let b = random_complex_labeled(&mut rng, &z, spec.max_dim, spec.facet_budget);
                cases.push(JoinsCase::Join(a, b));
            }
            for _ in 0..spec.instances {
                let n = random_vertex_count(&mut rng, spec);
                cases.push(JoinsCase::Links(random_complex(
                    &mut rng,
                    n,
                    spec.max_dim,
                    spec.facet_budget,
                )));
            }
        }
    }
    Ok(run.finish(&cases, |i, case| {
        let mut o = Outcome::default();
        match case {
            JoinsCase::Join(a, b) => {
                o.count("join_pairs");
                match eval_join(&d, a, b) {
                    Ok(Some(detail)) => {
                        let mut ce =
                            Counterexample::complex_case(i, Property::JoinProduct, a, detail);
                        ce.other = Some(write_complex(b));
                        o.counterexamples.push(ce);
                    }
                    Ok(None) => {}
                    Err(e) => o.error(i, e),
                }
            }
            JoinsCase::Links(c) => {
                o.count("link_sweeps");
                if d.is_vertex_decomposable(c).unwrap_or(false) {
                    o.count("link_sweeps_decomposable");
                }
                match eval_link_heredity(&d, c, None) {
                    Ok(Some((sigma, detail))) => {
                        let mut ce =
                            Counterexample::complex_case(i, Property::LinkHeredity, c, detail);
                        ce.face = Some(owned(c.labels_of(sigma)));
                        o.counterexamples.push(ce);
                    }
                    Ok(None) => {}
                    Err(e) => o.error(i, e),
                }
            }
        }
        o
    }))
}

fn graph_outcome(d: &Decider, index: usize, g: &Graph, s: VertexSet) -> Outcome {
    let mut o = Outcome::default();
    let record = |o: &mut Outcome, property: Property, r: Result<Option<String>>| match r {
        Ok(Some(detail)) => o.counterexamples.push(Counterexample::graph_case(
            index,
            property,
            g,
            Some(s),
            detail,
        )),
        Ok(None) => {}
        Err(e) => o.error(index, e),
    };
    record(
        &mut o,
        Property::GraphWhiskering,
        eval_graph_whiskering(g, s),
    );
    record(
        &mut o,
        Property::WhiskeredGraphEquivalence,
        eval_graph_equivalence(d, g, s),
    );
    record(
        &mut o,
        Property::ChordalOrFiveCycle,
        eval_chordal_or_five_cycle(d, g, s),
    );
    record(
        &mut o,
        Property::ChordalIndependence,
        eval_chordal_independence(d, g),
    );
    for mu in s.subsets().filter(|m| g.is_independent(*m)) {
        match eval_graph_link(g, s, mu) {
            Ok(Some(detail)) => {
                let mut ce = Counterexample::graph_case(
                    index,
                    Property::GraphLinkIdentity,
                    g,
                    Some(s),
                    detail,
                );
                ce.face = Some(owned(g.labels_of(mu)));
                o.counterexamples.push(ce);
            }
            Ok(None) => {}
            Err(e) => o.error(index, e),
        }
    }
    if chordal_or_five_cycle(g, s).unwrap_or(false) {
        o.count("chordal_or_five_cycle_remainder");
    }
    if g.is_chordal() {
        o.count("chordal_graphs");
    }
    let whiskered = g.add_whiskers(s).map(|w| w.independence_complex());
    if whiskered
        .and_then(|w| d.is_vertex_decomposable(&w))
        .unwrap_or(false)
    {
        o.count("whiskered_decomposable");
    }
    o
}

/// Graph whiskering: the independence-complex identity, the link identity,
/// the whiskered-graph criterion, the chordal-or-five-cycle consequence, and
/// decomposability for chordal graphs. Random mode draws half of its
/// instances so that `G ∖ S` is chordal or a five-cycle.
pub fn check_section_4(spec: &InstanceSpec) -> Result<VerificationReport> {
    let theorem = Theorem::Graphs;
    require_mode(spec, &[Mode::RandomGraph, Mode::ExhaustiveSmall], theorem)?;
    let mut run = Run::new(theorem, spec)?;
    let d = oracle_decider();
    let c5 = Graph::cycle(5);
    run.control(
        "five-cycle independence complex",
        true,
        d.is_vertex_decomposable(&c5.independence_complex()),
    );
    let fan = Graph::new(
        ["x1", "x2", "x3", "x4", "x5", "s1"],
        [
            ("x1", "x2"),
            ("x2", "x3"),
            ("x3", "x4"),
            ("x4", "x5"),
            ("x5", "x1"),
            ("s1", "x1"),
            ("s1", "x3"),
        ],
    )
    .expect("fixed graph");
    let s1 = fan.set_of(["s1"]).expect("s1");
    run.control(
        "five-cycle remainder, whiskered",
        (true, true),
        fan.whiskered_vd_condition(s1, &d).and_then(|c| {
            Ok((
                c.vd,
                d.is_vertex_decomposable(&fan.add_whiskers(s1)?.independence_complex())?,
            ))
        }),
    );
    let path = Graph::new(
        ["x1", "x2", "x3", "x4"],
        [("x1", "x2"), ("x2", "x3"), ("x3", "x4")],
    )
    .expect("path");
    run.control(
        "chordal path, no whiskers",
        (true, true),
        d.is_vertex_decomposable(&path.independence_complex())
            .map(|vd| (path.is_chordal(), vd)),
    );
    let mut cases: Vec<(Graph, VertexSet)> = Vec::new();
    match spec.mode {
        Mode::ExhaustiveSmall => {
            for n in 0..=spec.n_vertices.min(EXHAUSTIVE_GRAPH_LIMIT) {
                for g in all_graphs(n) {
                    for s in g.vertex_set().subsets() {
                        cases.push((g.clone(), s));
                    }
                }
            }
        }
        _ => {
            let mut rng = spec.rng();
            for i in 0..spec.instances {
                let n = random_vertex_count(&mut rng, spec);
                if i % 2 == 1 && n >= 2 {
                    cases.push(random_filtered_graph(&mut rng, n));
                } else {
                    let g = random_graph(&mut rng, n);
                    let k = rng.gen_range(0..=n / 2);
                    let s = random_subset_of_size(&mut rng, g.vertex_set(), k);
                    cases.push((g, s));
                }
            }
        }
    }
    Ok(run.finish(&cases, |i, (g, s)| graph_outcome(&d, i, g, *s)))
}

/// Maximum cardinality search against the induced-cycle definition, plus
/// heredity of chordality under vertex deletion. Random mode mixes uniform
/// and chordal graphs.
pub fn check_chordality(spec: &InstanceSpec) -> Result<VerificationReport> {
    let theorem = Theorem::Chordality;
    require_mode(spec, &[Mode::RandomGraph, Mode::ExhaustiveSmall], theorem)?;
    let mut run = Run::new(theorem, spec)?;
    let c4 = Graph::cycle(4);
    run.control("four-cycle", false, Ok(c4.is_chordal()));
    run.control("five-cycle", false, Ok(Graph::cycle(5).is_chordal()));
    let graphs: Vec<Graph> = match spec.mode {
        Mode::ExhaustiveSmall => (0..=spec.n_vertices.min(EXHAUSTIVE_GRAPH_LIMIT))
            .flat_map(all_graphs)
            .collect(),
        _ => {
            let mut rng = spec.rng();
            (0..spec.instances)
                .map(|i| {
                    let n = random_vertex_count(&mut rng, spec);
                    if i % 2 == 0 {
                        random_graph(&mut rng, n)
                    } else {
                        random_chordal_graph(&mut rng, &x_labels(n))
                    }
                })
                .collect()
        }
    };
    Ok(run.finish(&graphs, |i, g| {
        let mut o = Outcome::default();
        if let Some(detail) = eval_chordality(g) {
            o.counterexamples.push(Counterexample::graph_case(
                i,
                Property::ChordalityOracle,
                g,
                None,
                detail,
            ));
        }
        if g.is_chordal_by_cycles() {
            o.count("chordal");
        }
        o
    }))
}

/// Dispatches on the theorem identifier.
pub fn run(theorem: Theorem, spec: &InstanceSpec) -> Result<VerificationReport> {
    match theorem {
        Theorem::WhiskerEquivalence => check_theorem_3_3(spec),
        Theorem::UncoloredBound => check_corollary_3_5(spec),
        Theorem::DropOneClass => check_corollary_3_7(spec),
        Theorem::JoinsAndLinks => check_joins_and_links(spec),
        Theorem::Graphs => check_section_4(spec),
        Theorem::Chordality => check_chordality(spec),
    }
}
