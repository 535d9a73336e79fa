//! `relcalc`: command-line front end.
//!
//! Exit status: 0 on success, 1 when the analysis itself reports a negative
//! outcome (incompatible system, unexpected counts), 2 on usage, format or
//! I/O errors.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use relcalc::automata::{self, Trajectory};
use relcalc::io::{parse_records, Record};
use relcalc::structure::{self, DecompositionTree};
use relcalc::topology::impose_topology;
use relcalc::Relation;

use report::{Out, Report};

#[derive(Parser, Debug)]
#[command(name = "relcalc", version, about = "Analysis of discrete relations and cellular automata")]
struct Cli {
    /// Output style; `records` is readable by the relation file parser.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for random initial rows.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Analyse an elementary cellular automaton rule.
    Rule(RuleArgs),
    /// Classify all 256 elementary rules.
    ClassifyAll(ClassifyArgs),
    /// Analyse the Game of Life local rule.
    Life(LifeArgs),
    /// Base relation (joint solution set) of relations read from files.
    Base {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Project a relation onto a face.
    Project {
        file: PathBuf,
        /// Points of the face, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        onto: Vec<String>,
    },
    /// Evolve an elementary rule on a periodic lattice.
    Simulate(SimulateArgs),
    /// Simplicial complex of the irreducible components of a relation.
    Topology { file: PathBuf },
}

#[derive(Args, Debug)]
struct RuleArgs {
    #[arg(value_parser = clap::value_parser!(u32).range(0..256))]
    number: u32,
    /// Show polynomial forms.
    #[arg(long)]
    poly: bool,
    /// Show the simplicial complex.
    #[arg(long)]
    topology: bool,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    /// One line per rule.
    #[arg(long)]
    list: bool,
    /// Rules with a `1101` consequence on {p,s}, {q,s} or {r,s}.
    #[arg(long = "consequence-1101")]
    consequence_1101: bool,
    /// Exit with status 1 unless the counts are 118 / 138 / 2.
    #[arg(long)]
    expect: bool,
}

#[derive(Args, Debug)]
struct LifeArgs {
    /// Decomposition tree, symmetry classes and reconstruction check.
    #[arg(long)]
    decompose: bool,
    /// Show polynomial forms.
    #[arg(long)]
    poly: bool,
    /// Points folded into elementary symmetric polynomials.
    #[arg(long, value_delimiter = ',', default_value = "x0,x1,x2,x3,x4,x5,x6,x7")]
    symmetric: Vec<String>,
}

#[derive(Args, Debug)]
struct SimulateArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(0..256))]
    rule: u32,
    /// Lattice width; defaults to the width of the initial row.
    #[arg(long)]
    width: Option<usize>,
    #[arg(long)]
    steps: usize,
    /// Initial row of 0/1 characters.
    #[arg(long, conflicts_with = "init_file")]
    init: Option<String>,
    /// File whose first trajectory row is the initial row.
    #[arg(long)]
    init_file: Option<PathBuf>,
    /// Check every window against the rule and its proper consequences.
    #[arg(long)]
    check: bool,
}

/// Failure modes mapped to exit codes.
enum Failure {
    /// Negative analytical outcome, already reported.
    Negative,
    Usage(String),
}

impl From<relcalc::Error> for Failure {
    fn from(e: relcalc::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Out::new(cli.format == Format::Records);
    let result = run(&cli, &mut out);
    out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli, out: &mut Out) -> CmdResult {
    match &cli.command {
        Command::Rule(a) => cmd_rule(a, out),
        Command::ClassifyAll(a) => cmd_classify_all(a, out),
        Command::Life(a) => cmd_life(a, out),
        Command::Base { files } => cmd_base(files, out),
        Command::Project { file, onto } => cmd_project(file, onto, out),
        Command::Simulate(a) => cmd_simulate(a, cli.seed, out),
        Command::Topology { file } => cmd_topology(file, out),
    }
}

fn read_file(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// All relation records of a file.
fn read_relations(path: &PathBuf) -> Result<Vec<Relation>, Failure> {
    let text = read_file(path)?;
    let at = |e: relcalc::Error| Failure::Usage(format!("{}: {e}", path.display()));
    let records = parse_records(&text).map_err(at)?;
    let rels = records
        .iter()
        .filter(|r| r.get("q").is_some() || r.has_relation())
        .map(Record::to_relation)
        .collect::<Result<Vec<_>, _>>()
        .map_err(at)?;
    if rels.is_empty() {
        return Err(Failure::Usage(format!("{}: no relation record found", path.display())));
    }
    Ok(rels)
}

fn read_one(path: &PathBuf) -> Result<Relation, Failure> {
    let mut rels = read_relations(path)?;
    if rels.len() > 1 {
        return Err(Failure::Usage(format!(
            "{}: expected one relation, found {}",
            path.display(),
            rels.len()
        )));
    }
    Ok(rels.remove(0))
}

fn cmd_rule(a: &RuleArgs, out: &mut Out) -> CmdResult {
    let rule = automata::wolfram_relation(a.number)?;
    let r = rule.relation();
    let tree = DecompositionTree::build(r)?;
    let root = tree.root();
    let mut rep = Report::new("rule").field("number", a.number).field("status", root.status);
    if a.poly {
        rep = rep.note("polynomial", report::poly(r));
    }
    out.emit(rep.relation("bits", r));
    for &c in &root.children {
        let cons = &tree.node(c).relation;
        let mut rep = Report::new("consequence").field("face", cons.domain());
        if a.poly {
            rep = rep.note("polynomial", report::poly(cons));
        }
        out.emit(rep.relation("bits", cons));
    }
    if let Some(pf) = &root.principal_factor {
        let mut rep = Report::new("principal_factor");
        if a.poly {
            rep = rep.note("polynomial", report::poly(pf));
        }
        out.emit(rep.relation("bits", pf));
    }
    if a.topology {
        let t = relcalc::topology::impose_topology_from_tree(&tree)?;
        out.emit(report::topology(&t));
    }
    Ok(())
}

fn cmd_classify_all(a: &ClassifyArgs, out: &mut Out) -> CmdResult {
    let summary = automata::classify_all_rules()?;
    let counts = summary.counts();
    let primes: Vec<String> = summary.primes().iter().map(u8::to_string).collect();
    out.emit(
        Report::new("summary")
            .headline(format!("{counts} ({})", primes.join(", ")))
            .field("reducible", counts.reducible)
            .field("irreducible", counts.irreducible)
            .field("prime", counts.prime)
            .field("primes", primes.join(" ")),
    );
    if a.list {
        for rc in &summary.rules {
            let r = automata::wolfram_relation(u32::from(rc.number))?;
            out.emit(
                Report::new("rule")
                    .headline(format!("{:>3} {:<11} {}", rc.number, rc.status, rc.topology))
                    .field("number", rc.number)
                    .field("status", rc.status)
                    .field("topology", &rc.topology)
                    .relation_only(r.relation()),
            );
        }
    }
    if a.consequence_1101 {
        let found = summary.rules_with_1101();
        out.emit(
            Report::new("consequence_1101")
                .headline(format!("rules with a 1101 consequence on {{p,s}}, {{q,s}} or {{r,s}}: {}", found.len()))
                .field("count", found.len()),
        );
        for &n in &found {
            let faces: Vec<String> = summary.rules[usize::from(n)]
                .faces_with_table("1101")
                .iter()
                .map(|x| format!("{{{x},s}}"))
                .collect();
            out.emit(
                Report::new("rule")
                    .headline(format!("{n:>3} {}", faces.join(" ")))
                    .field("number", n)
                    .field("faces", faces.join(" ")),
            );
        }
        let (missing, extra) = summary.compare_1101_with_reference();
        let join = |v: &[u8]| v.iter().map(u8::to_string).collect::<Vec<_>>().join(" ");
        out.emit(
            Report::new("reference_1101")
                .headline(format!(
                    "reference list: {} rules; not found here: {}; found here only: {}",
                    automata::REFERENCE_1101_RULES.len(),
                    if missing.is_empty() { "none".into() } else { join(&missing) },
                    if extra.is_empty() { "none".into() } else { join(&extra) },
                ))
                .field("count", automata::REFERENCE_1101_RULES.len())
                .field("missing", join(&missing))
                .field("extra", join(&extra)),
        );
    }
    if a.expect && (counts.reducible, counts.irreducible, counts.prime) != (118, 138, 2) {
        eprintln!("unexpected counts: {counts}");
        return Err(Failure::Negative);
    }
    Ok(())
}

fn cmd_life(a: &LifeArgs, out: &mut Out) -> CmdResult {
    let life = automata::life_relation();
    let tree = DecompositionTree::build(&life)?;
    let mut rep = Report::new("life")
        .headline(format!(
            "Life relation on {}: {} of {} tuples",
            life.domain(),
            life.cardinality(),
            life.domain().cells()
        ))
        .field("status", tree.root().status)
        .field("cardinality", life.cardinality());
    if a.poly {
        rep = rep.note("polynomial", report::sym_poly(&life, &a.symmetric));
    }
    out.emit(rep.relation_only(&life));
    if !a.decompose {
        return Ok(());
    }
    let children: Vec<Relation> = tree.root_children().map(|n| n.relation.clone()).collect();
    let classes = structure::group_by_symmetry(&children, &a.symmetric)?;
    for class in &classes {
        let rep_rel = &class.representative;
        let mut rep = Report::new("component_class")
            .headline(format!(
                "{} component(s) like {} ({})",
                class.members.len(),
                rep_rel.domain(),
                tree.node_for_face(rep_rel.domain()).map_or("?".into(), |n| n.status.to_string())
            ))
            .field("members", class.members.len());
        if a.poly {
            rep = rep.note("polynomial", report::sym_poly(rep_rel, &a.symmetric));
        }
        out.emit(rep.relation_only(rep_rel));
    }
    let checks = automata::life_reconstructions(&life)?;
    let ok = checks.iter().filter(|&&b| b).count();
    out.emit(
        Report::new("reconstruction")
            .headline(format!(
                "reconstruction from the x8-free component and any 7 neighbour-free components: {ok}/8 {}",
                if ok == 8 { "ok" } else { "FAILED" }
            ))
            .field("ok", ok),
    );
    let leaves: Vec<_> = tree.prime_leaves().collect();
    out.emit(
        Report::new("tree")
            .headline(format!(
                "decomposition tree: {} nodes, depth {}, {} prime leaves",
                tree.len(),
                tree.depth(),
                leaves.len()
            ))
            .field("nodes", tree.len())
            .field("depth", tree.depth())
            .field("prime_leaves", leaves.len()),
    );
    for leaf in leaves {
        let mut rep = Report::new("prime_leaf").field("face", leaf.relation.domain());
        if a.poly {
            rep = rep.note("polynomial", report::poly(&leaf.relation));
        }
        out.emit(rep.relation("bits", &leaf.relation));
    }
    if ok != 8 {
        return Err(Failure::Negative);
    }
    Ok(())
}

fn cmd_base(files: &[PathBuf], out: &mut Out) -> CmdResult {
    let mut rels = Vec::new();
    for f in files {
        rels.extend(read_relations(f)?);
    }
    let base = structure::base_relation(&rels)?;
    let verdict = if base.is_empty() { "incompatible" } else { "compatible" };
    out.emit(
        Report::new("base")
            .headline(format!(
                "{verdict}: base relation on {} has {} of {} tuples",
                base.domain(),
                base.cardinality(),
                base.domain().cells()
            ))
            .field("status", verdict)
            .relation("bits", &base),
    );
    if base.is_empty() {
        return Err(Failure::Negative);
    }
    Ok(())
}

fn cmd_project(file: &PathBuf, onto: &[String], out: &mut Out) -> CmdResult {
    let r = read_one(file)?;
    let p = r.project_onto(onto)?;
    out.emit(Report::new("projection").field("face", p.domain()).relation("bits", &p));
    Ok(())
}

fn cmd_topology(file: &PathBuf, out: &mut Out) -> CmdResult {
    let r = read_one(file)?;
    let t = impose_topology(&r)?;
    out.emit(report::topology(&t));
    Ok(())
}

fn cmd_simulate(a: &SimulateArgs, seed: u64, out: &mut Out) -> CmdResult {
    let init = match (&a.init, &a.init_file) {
        (Some(row), _) => automata::parse_row(row)?,
        (None, Some(path)) => {
            let text = read_file(path)?;
            Trajectory::parse(&text)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
                .rows()[0]
                .clone()
        }
        (None, None) => {
            let width = a
                .width
                .ok_or_else(|| Failure::Usage("--width is required without --init or --init-file".into()))?;
            automata::random_row(width, seed)
        }
    };
    if let Some(w) = a.width {
        if w != init.len() {
            return Err(Failure::Usage(format!("--width {w} but the initial row has width {}", init.len())));
        }
    }
    let rule = automata::wolfram_relation(a.rule)?;
    let traj = automata::simulate(&rule, &init, a.steps)?;
    let report = if a.check {
        let cons = structure::proper_consequences(rule.relation())?;
        Some((automata::check_trajectory(&rule, &traj, &cons)?, cons.len()))
    } else {
        None
    };
    out.emit_trajectory(a.rule, seed, &traj);
    if let Some((rep, n)) = report {
        out.emit(
            Report::new("check")
                .headline(format!(
                    "# checked {} windows against rule {} and {n} consequences: {} rule and {} consequence violations",
                    rep.windows_checked,
                    a.rule,
                    rep.rule_violations.len(),
                    rep.consequence_violations.len()
                ))
                .field("windows", rep.windows_checked)
                .field("rule_violations", rep.rule_violations.len())
                .field("consequence_violations", rep.consequence_violations.len()),
        );
        if !rep.is_clean() {
            return Err(Failure::Negative);
        }
    }
    Ok(())
}
