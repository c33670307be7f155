//! `vd`: whiskering, vertex decomposability and theorem oracles from the
//! command line.
//!
//! Exit codes: 0 success or affirmative answer, 10 negative answer (not
//! vertex decomposable, not chordal, invalid coloring, counterexamples
//! found), 2 input error, 3 capacity error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use vdcore::io::{
    parse_complex, parse_complex_json, parse_graph, parse_graph_json, write_complex,
    write_complex_json, write_graph, write_graph_json,
};
use vdcore::verify::{link_condition, InstanceSpec, Theorem};
use vdcore::{
    ColoringDocument, Decider, DeciderConfig, Error, ErrorKind, Graph, PartialColoring,
    SimplicialComplex, VdCertificate,
};

const EXIT_NEGATIVE: u8 = 10;
const EXIT_INPUT: u8 = 2;
const EXIT_CAPACITY: u8 = 3;

#[derive(Parser)]
#[command(
    name = "vd",
    version,
    about = "Partial-coloring whiskering and vertex decomposability"
)]
struct Cli {
    /// Emit structured JSON instead of the text formats.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide vertex decomposability of a complex.
    Check {
        file: PathBuf,
        /// Write a replayable certificate to this file.
        #[arg(long)]
        certificate: Option<PathBuf>,
        #[arg(long)]
        no_memo: bool,
        #[arg(long)]
        single_thread: bool,
    },
    /// Whisker a complex along a partial coloring.
    Whisker {
        file: PathBuf,
        #[command(flatten)]
        coloring: ColoringArgs,
    },
    /// Link of a face.
    Link {
        file: PathBuf,
        /// Comma-separated labels; empty for the empty face.
        #[arg(long, allow_hyphen_values = true)]
        face: String,
    },
    /// Deletion of a face.
    Del {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        face: String,
    },
    /// Induced subcomplex on a vertex subset.
    Restrict {
        file: PathBuf,
        #[arg(long)]
        to: String,
    },
    /// Join of two complexes on disjoint vertex sets.
    Join { first: PathBuf, second: PathBuf },
    /// Independence complex of a graph.
    Ind { graph: PathBuf },
    /// Add a whisker at every vertex of `--s`.
    WhiskerGraph {
        graph: PathBuf,
        #[arg(long, default_value = "")]
        s: String,
        /// Emit the independence complex of the whiskered graph instead.
        #[arg(long)]
        ind: bool,
    },
    /// Decide chordality.
    Chordal { graph: PathBuf },
    /// Run a theorem oracle.
    Verify(VerifyArgs),
    /// Explain a decomposability answer, with a failing face for whiskered
    /// complexes and graphs.
    Explain(ExplainArgs),
}

#[derive(Args)]
struct ColoringArgs {
    /// Classes separated by `|`, members by `,`, e.g. `x3|x1,x4`.
    #[arg(long, conflicts_with = "coloring")]
    classes: Option<String>,
    /// A coloring document (`classes`, optional `uncolored`).
    #[arg(long)]
    coloring: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Tier {
    Exhaustive,
    Random,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_parser = parse_theorem)]
    theorem: Theorem,
    /// Required for the random tier.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value = "random")]
    tier: Tier,
    /// Number of random instances.
    #[arg(long, default_value_t = 200)]
    budget: usize,
    /// Override the largest vertex count.
    #[arg(long)]
    max_vertices: Option<usize>,
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct ExplainArgs {
    /// A complex; omit when `--graph` is given.
    file: Option<PathBuf>,
    #[command(flatten)]
    coloring: ColoringArgs,
    #[arg(long, conflicts_with = "file")]
    graph: Option<PathBuf>,
    /// Whiskered vertices of `--graph`.
    #[arg(long, default_value = "")]
    s: String,
}

fn parse_theorem(s: &str) -> Result<Theorem, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn read_input(path: &Path) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        return Ok(text);
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn is_json(path: &Path) -> bool {
    path.extension().is_some_and(|e| e == "json")
}

fn load_complex(path: &Path) -> anyhow::Result<SimplicialComplex> {
    let text = read_input(path)?;
    Ok(if is_json(path) {
        parse_complex_json(&text)?
    } else {
        parse_complex(&text)?
    })
}

fn load_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = read_input(path)?;
    Ok(if is_json(path) {
        parse_graph_json(&text)?
    } else {
        parse_graph(&text)?
    })
}

fn load_coloring(args: &ColoringArgs) -> anyhow::Result<PartialColoring> {
    match (&args.classes, &args.coloring) {
        (Some(spec), _) => Ok(PartialColoring::parse(spec)?),
        (None, Some(path)) => {
            let doc: ColoringDocument = serde_json::from_str(&read_input(path)?)
                .map_err(|e| Error::Document(e.to_string()))?;
            Ok(PartialColoring::from_document(&doc)?)
        }
        (None, None) => bail!(Error::Document("give --classes or --coloring".into())),
    }
}

/// Comma-separated labels; blank or `∅` is the empty list.
fn label_list(s: &str) -> Vec<&str> {
    let s = s.trim();
    if s.is_empty() || s == "∅" {
        return Vec::new();
    }
    s.split(',').map(str::trim).collect()
}

fn decider(memo: bool, parallel: bool) -> anyhow::Result<Decider> {
    let mut config = DeciderConfig::default().with_env_overrides()?;
    if !memo {
        config.memo_capacity = 0;
    }
    config.parallel = parallel;
    Ok(Decider::new(config))
}

struct Output {
    json: bool,
    out: io::StdoutLock<'static>,
}

impl Output {
    fn complex(&mut self, c: &SimplicialComplex) -> anyhow::Result<()> {
        if self.json {
            writeln!(self.out, "{}", write_complex_json(c))?;
        } else {
            write!(self.out, "{}", write_complex(c))?;
        }
        Ok(())
    }

    fn graph(&mut self, g: &Graph) -> anyhow::Result<()> {
        if self.json {
            writeln!(self.out, "{}", write_graph_json(g))?;
        } else {
            write!(self.out, "{}", write_graph(g))?;
        }
        Ok(())
    }

    /// Prints a yes/no answer and returns the matching exit code.
    fn answer(
        &mut self,
        key: &str,
        yes: bool,
        text: &str,
        extra: serde_json::Value,
    ) -> anyhow::Result<u8> {
        if self.json {
            let mut doc = serde_json::json!({ key: yes });
            if let (Some(obj), serde_json::Value::Object(more)) = (doc.as_object_mut(), extra) {
                obj.extend(more);
            }
            writeln!(self.out, "{}", serde_json::to_string_pretty(&doc)?)?;
        } else {
            writeln!(self.out, "{text}")?;
        }
        Ok(if yes { 0 } else { EXIT_NEGATIVE })
    }
}

fn vd_text(vd: bool) -> &'static str {
    if vd {
        "vertex decomposable"
    } else {
        "not vertex decomposable"
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    let mut out = Output {
        json: cli.json,
        out: io::stdout().lock(),
    };
    match cli.command {
        Command::Check {
            file,
            certificate,
            no_memo,
            single_thread,
        } => {
            let c = load_complex(&file)?;
            let d = decider(!no_memo, !single_thread)?;
            let vd = if let Some(path) = certificate {
                let cert = d.certify(&c)?;
                fs::write(&path, serde_json::to_string_pretty(&cert)?)
                    .with_context(|| format!("writing {}", path.display()))?;
                cert.is_decomposable()
            } else {
                d.is_vertex_decomposable(&c)?
            };
            out.answer(
                "vertex_decomposable",
                vd,
                vd_text(vd),
                serde_json::json!({}),
            )
        }
        Command::Whisker { file, coloring } => {
            let c = load_complex(&file)?;
            let chi = load_coloring(&coloring)?;
            out.complex(&chi.whisker(&c)?)?;
            Ok(0)
        }
        Command::Link { file, face } => {
            let c = load_complex(&file)?;
            let sigma = c.set_of(label_list(&face))?;
            out.complex(&c.link(sigma)?)?;
            Ok(0)
        }
        Command::Del { file, face } => {
            let c = load_complex(&file)?;
            let sigma = c.set_of(label_list(&face))?;
            out.complex(&c.deletion(sigma))?;
            Ok(0)
        }
        Command::Restrict { file, to } => {
            let c = load_complex(&file)?;
            out.complex(&c.restriction_to(label_list(&to))?)?;
            Ok(0)
        }
        Command::Join { first, second } => {
            let a = load_complex(&first)?;
            let b = load_complex(&second)?;
            out.complex(&a.join(&b)?)?;
            Ok(0)
        }
        Command::Ind { graph } => {
            out.complex(&load_graph(&graph)?.independence_complex())?;
            Ok(0)
        }
        Command::WhiskerGraph { graph, s, ind } => {
            let g = load_graph(&graph)?.add_whiskers_to(label_list(&s))?;
            if ind {
                out.complex(&g.independence_complex())?;
            } else {
                out.graph(&g)?;
            }
            Ok(0)
        }
        Command::Chordal { graph } => {
            let chordal = load_graph(&graph)?.is_chordal();
            let text = if chordal { "chordal" } else { "not chordal" };
            out.answer("chordal", chordal, text, serde_json::json!({}))
        }
        Command::Verify(args) => verify(&mut out, args),
        Command::Explain(args) => explain(&mut out, args),
    }
}

fn verify(out: &mut Output, args: VerifyArgs) -> anyhow::Result<u8> {
    let exhaustive = matches!(args.tier, Tier::Exhaustive);
    let seed = match (args.seed, exhaustive) {
        (Some(s), _) => s,
        (None, true) => 0,
        (None, false) => bail!(Error::Document("the random tier requires --seed".into())),
    };
    let mut spec = InstanceSpec::standard(args.theorem, exhaustive, seed, args.budget);
    if let Some(n) = args.max_vertices {
        spec.n_vertices = n;
        spec.min_vertices = spec.min_vertices.min(n);
        spec.max_dim = spec.max_dim.min(n.saturating_sub(1));
    }
    let report = vdcore::verify::run(args.theorem, &spec)?;
    let json = serde_json::to_string_pretty(&report)?;
    if let Some(path) = &args.report {
        fs::write(path, &json).with_context(|| format!("writing {}", path.display()))?;
    }
    if out.json {
        writeln!(out.out, "{json}")?;
    } else {
        writeln!(out.out, "{}", report.summary())?;
        for c in report.controls.iter().filter(|c| !c.passed) {
            writeln!(
                out.out,
                "control failed: {} (expected {}, got {})",
                c.name, c.expected, c.observed
            )?;
        }
        for c in &report.counterexamples {
            writeln!(
                out.out,
                "counterexample #{} ({:?}): {}",
                c.index, c.property, c.detail
            )?;
        }
        for e in &report.errors {
            writeln!(out.out, "error: {e}")?;
        }
    }
    Ok(if report.passed() { 0 } else { EXIT_NEGATIVE })
}

fn face_text(labels: &[String]) -> String {
    if labels.is_empty() {
        "∅".to_owned()
    } else {
        format!("{{{}}}", labels.join(" "))
    }
}

fn explain(out: &mut Output, args: ExplainArgs) -> anyhow::Result<u8> {
    let d = decider(true, true)?;
    if let Some(path) = &args.graph {
        let g = load_graph(path)?;
        let s = g.set_of(label_list(&args.s))?;
        let cond = g.whiskered_vd_condition(s, &d)?;
        let mut text = format!("whiskered independence complex: {}", vd_text(cond.vd));
        if let Some(mu) = &cond.witness {
            text.push_str(&format!(
                "\nwitness μ = {}: the graph outside S and N[μ] has a non-decomposable independence complex",
                face_text(mu)
            ));
        }
        return out.answer(
            "vertex_decomposable",
            cond.vd,
            &text,
            serde_json::json!({ "witness": cond.witness }),
        );
    }
    let Some(file) = &args.file else {
        bail!(Error::Document("give a complex or --graph".into()));
    };
    let c = load_complex(file)?;
    if args.coloring.classes.is_none() && args.coloring.coloring.is_none() {
        let cert = d.certify(&c)?;
        let vd = cert.is_decomposable();
        let mut text = vd_text(vd).to_owned();
        match &cert {
            VdCertificate::Refuted { failures } => {
                for f in failures {
                    text.push_str(&format!("\n{}: {}", f.vertex, failure_text(&f.reason)));
                }
            }
            _ => {
                let seq = cert.shedding_sequence();
                if !seq.is_empty() {
                    text.push_str(&format!("\nshedding sequence: {}", seq.join(" ")));
                }
            }
        }
        return out.answer(
            "vertex_decomposable",
            vd,
            &text,
            serde_json::json!({ "certificate": cert }),
        );
    }
    let chi = load_coloring(&args.coloring)?;
    let lc = link_condition(&d, &c, &chi)?;
    let whiskered = chi.whisker(&c)?;
    let vd = d.is_vertex_decomposable(&whiskered)?;
    let mut text = format!("whiskered complex: {}", vd_text(vd));
    let mut failing_link = None;
    if let Some(mu) = &lc.witness {
        let uncolored: Vec<String> = c
            .labels_of(chi.complement(&c)?)
            .into_iter()
            .map(str::to_owned)
            .collect();
        let link = c.link(c.set_of(mu)?)?.restriction_to(&uncolored)?;
        text.push_str(&format!(
            "\nwitness μ = {}: link restricted to the uncolored vertices {} is not vertex decomposable",
            face_text(mu),
            link
        ));
        failing_link = Some(link.to_string());
    }
    out.answer(
        "vertex_decomposable",
        vd,
        &text,
        serde_json::json!({ "witness": lc.witness, "restricted_link": failing_link }),
    )
}

fn failure_text(reason: &vdcore::decomp::FailureReason) -> String {
    use vdcore::decomp::FailureReason;
    match reason {
        FailureReason::SharedFacet { facet } => {
            format!(
                "not a shedding vertex; {} is a facet of both link and deletion",
                face_text(facet)
            )
        }
        FailureReason::LinkRefuted { .. } => {
            "sheds, but its link is not vertex decomposable".to_owned()
        }
        FailureReason::DeletionRefuted { .. } => {
            "sheds, but its deletion is not vertex decomposable".to_owned()
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>().map(Error::kind) {
        Some(ErrorKind::Capacity) => EXIT_CAPACITY,
        Some(ErrorKind::Domain)
            if matches!(err.downcast_ref::<Error>(), Some(Error::InvalidColoring(_))) =>
        {
            EXIT_NEGATIVE
        }
        _ => EXIT_INPUT,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("vd: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
