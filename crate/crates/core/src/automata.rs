//! Cellular automata as relations.
//!
//! Elementary rules live on the four points `p, q, r, s`: the left, centre
//! and right cells at time `t` and the centre cell at `t + 1`. Rule `n`
//! holds `(p, q, r, s)` iff `s` equals bit `4p + 2q + r` of `n`, the usual
//! big-endian rule numbering. The Game of Life local rule lives on
//! `x0..x9`: `x0..x7` are the neighbours, `x8` the cell and `x9` its next
//! state.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::par::Execution;
use crate::relation::Relation;
use crate::structure::{self, ConsequenceEntry, Status};
use crate::topology::{self, SimplicialComplex};

pub const RULE_POINTS: [&str; 4] = ["p", "q", "r", "s"];

/// Rules whose projection onto `{p,s}`, `{q,s}` or `{r,s}` has bit table
/// `1101` (i.e. `xs + s = 0`), as listed in the automaton literature.
pub const REFERENCE_1101_RULES: [u8; 64] = [
    2, 4, 8, 10, 16, 32, 34, 40, 42, 48, 64, 72, 76, 80, 96, 112, 128, 130, 132, 136, 138, 140, 144, 160, 162, 168,
    171, 174, 175, 176, 186, 187, 190, 191, 192, 196, 200, 205, 206, 208, 220, 222, 223, 224, 234, 235, 236, 237,
    238, 239, 241, 242, 243, 244, 245, 246, 247, 248, 249, 250, 251, 252, 253, 254,
];

pub fn rule_domain() -> Domain {
    Domain::new(RULE_POINTS, 2).expect("static domain")
}

/// An elementary cellular automaton rule and its relation on `{p,q,r,s}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementaryRule {
    number: u8,
    relation: Relation,
}

impl ElementaryRule {
    pub fn number(&self) -> u8 {
        self.number
    }

    pub fn relation(&self) -> &Relation {
        &self.relation
    }

    /// `f(left, centre, right)`.
    #[inline]
    pub fn next_state(&self, left: u8, centre: u8, right: u8) -> u8 {
        self.number >> (4 * left + 2 * centre + right) & 1
    }
}

/// Relation of Wolfram rule `n`.
pub fn wolfram_relation(n: u32) -> Result<ElementaryRule> {
    let number = u8::try_from(n).map_err(|_| Error::OutOfRange {
        what: "rule number",
        value: i64::from(n),
    })?;
    let relation = Relation::from_fn(rule_domain(), |t| {
        let idx = 4 * t[0] + 2 * t[1] + t[2];
        u32::from(number) >> idx & 1 == t[3]
    });
    Ok(ElementaryRule { number, relation })
}

pub fn life_domain() -> Domain {
    Domain::new((0..10).map(|i| format!("x{i}")), 2).expect("static domain")
}

/// Next state of a Life cell from its live-neighbour count.
pub fn life_next(live_neighbours: u32, cell: u32) -> u32 {
    match live_neighbours {
        3 => 1,
        2 => cell,
        _ => 0,
    }
}

/// The Game of Life local rule as a relation on `x0..x9`.
pub fn life_relation() -> Relation {
    Relation::from_fn(life_domain(), |t| {
        let n: u32 = t[..8].iter().sum();
        t[9] == life_next(n, t[8])
    })
}

/// For each neighbour `xi`, whether the projection dropping `x8` meets the
/// projections dropping each `xj` (`j != i`) exactly in `life`. All
/// projections are extended back to `x0..x9` before intersecting.
pub fn life_reconstructions(life: &Relation) -> Result<[bool; 8]> {
    let full = life.domain();
    let without = |drop: usize| -> Result<Relation> {
        let names: Vec<&String> = full.points().iter().enumerate().filter(|(i, _)| *i != drop).map(|(_, n)| n).collect();
        life.project(&full.select(&names)?)?.extend(full)
    };
    let r2 = without(8)?;
    let r1 = (0..8).map(without).collect::<Result<Vec<_>>>()?;
    let mut out = [false; 8];
    for (skip, ok) in out.iter_mut().enumerate() {
        let mut meet = r2.clone();
        for (_, r) in r1.iter().enumerate().filter(|(j, _)| *j != skip) {
            meet = meet.intersect(r)?;
        }
        *ok = &meet == life;
    }
    Ok(out)
}

/// Bit tables of the projections of a rule relation onto `{p,s}`, `{q,s}`
/// and `{r,s}`.
pub fn pair_tables(r: &Relation) -> Result<[String; 3]> {
    let table = |x: &str| r.project_onto(&[x, "s"]).map(|p| p.bit_string());
    Ok([table("p")?, table("q")?, table("r")?])
}

#[derive(Debug, Clone)]
pub struct RuleClassification {
    pub number: u8,
    pub status: Status,
    pub consequences: Vec<ConsequenceEntry>,
    pub principal_factor: Option<Relation>,
    /// Projections onto `{p,s}`, `{q,s}`, `{r,s}`; see [`pair_tables`].
    pub pair_tables: [String; 3],
    pub topology: SimplicialComplex,
}

impl RuleClassification {
    /// Points `x` whose face `{x,s}` carries exactly the table `bits`.
    pub fn faces_with_table(&self, bits: &str) -> Vec<&'static str> {
        ["p", "q", "r"]
            .into_iter()
            .zip(&self.pair_tables)
            .filter(|(_, t)| *t == bits)
            .map(|(x, _)| x)
            .collect()
    }

    /// Sizes of the maximal simplices, largest first.
    pub fn component_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.topology.maximal_simplices().iter().map(Vec::len).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }
}

/// Reducible / irreducible / prime totals. `irreducible` includes the primes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassCounts {
    pub reducible: usize,
    pub irreducible: usize,
    pub prime: usize,
}

impl fmt::Display for ClassCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "reducible: {}, irreducible: {}, prime: {}",
            self.reducible, self.irreducible, self.prime
        )
    }
}

#[derive(Debug, Clone)]
pub struct ClassificationSummary {
    pub rules: Vec<RuleClassification>,
}

impl ClassificationSummary {
    pub fn counts(&self) -> ClassCounts {
        let count = |s: Status| self.rules.iter().filter(|r| r.status == s).count();
        let prime = count(Status::Prime);
        ClassCounts {
            reducible: count(Status::Reducible),
            irreducible: count(Status::Irreducible) + prime,
            prime,
        }
    }

    pub fn with_status(&self, status: Status) -> Vec<u8> {
        self.rules.iter().filter(|r| r.status == status).map(|r| r.number).collect()
    }

    pub fn primes(&self) -> Vec<u8> {
        self.with_status(Status::Prime)
    }

    /// Rules with the table `bits` on at least one face `{x,s}`.
    pub fn rules_with_table(&self, bits: &str) -> Vec<u8> {
        self.rules
            .iter()
            .filter(|r| !r.faces_with_table(bits).is_empty())
            .map(|r| r.number)
            .collect()
    }

    pub fn rules_with_1101(&self) -> Vec<u8> {
        self.rules_with_table("1101")
    }

    /// Differences against [`REFERENCE_1101_RULES`]: `(missing, extra)`.
    pub fn compare_1101_with_reference(&self) -> (Vec<u8>, Vec<u8>) {
        let computed = self.rules_with_1101();
        let missing = REFERENCE_1101_RULES.iter().copied().filter(|n| !computed.contains(n)).collect();
        let extra = computed.into_iter().filter(|n| !REFERENCE_1101_RULES.contains(n)).collect();
        (missing, extra)
    }

    /// Rules whose irreducible components are all of the given size.
    pub fn rules_with_components_of_size(&self, size: usize) -> Vec<u8> {
        self.rules
            .iter()
            .filter(|r| {
                let sizes = r.component_sizes();
                !sizes.is_empty() && sizes.iter().all(|&s| s == size)
            })
            .map(|r| r.number)
            .collect()
    }
}

pub fn classify_rule(n: u32) -> Result<RuleClassification> {
    let rule = wolfram_relation(n)?;
    let r = rule.relation();
    let tree = structure::DecompositionTree::build_with(r, Execution::Sequential)?;
    let root = tree.root();
    let consequences = root
        .children
        .iter()
        .map(|&c| ConsequenceEntry {
            relation: tree.node(c).relation.clone(),
        })
        .collect();
    Ok(RuleClassification {
        number: rule.number(),
        status: root.status,
        consequences,
        principal_factor: root.principal_factor.clone(),
        pair_tables: pair_tables(r)?,
        topology: topology::impose_topology_from_tree(&tree)?,
    })
}

pub fn classify_all_rules() -> Result<ClassificationSummary> {
    classify_all_rules_with(Execution::default())
}

pub fn classify_all_rules_with(exec: Execution) -> Result<ClassificationSummary> {
    let rules = exec
        .map_range(256, |n| classify_rule(n as u32))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    Ok(ClassificationSummary { rules })
}

/// Space-time record `u(x, t)` on a periodic lattice; row `t` is time `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trajectory {
    rows: Vec<Vec<u8>>,
}

impl Trajectory {
    pub fn from_rows(rows: Vec<Vec<u8>>) -> Result<Trajectory> {
        let width = rows.first().map(Vec::len).ok_or_else(|| Error::Format {
            line: 1,
            message: "trajectory has no rows".into(),
        })?;
        for (t, row) in rows.iter().enumerate() {
            if row.len() != width {
                return Err(Error::Format {
                    line: t + 1,
                    message: format!("row has width {}, expected {width}", row.len()),
                });
            }
            if let Some(&bad) = row.iter().find(|&&c| c > 1) {
                return Err(Error::Format {
                    line: t + 1,
                    message: format!("state {bad} is not binary"),
                });
            }
        }
        Ok(Trajectory { rows })
    }

    /// One row per line, characters `0`/`1`; blank and `#` lines are skipped.
    pub fn parse(text: &str) -> Result<Trajectory> {
        let mut rows = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            rows.push(parse_row(line).map_err(|e| match e {
                Error::Format { message, .. } => Error::Format { line: i + 1, message },
                other => other,
            })?);
        }
        Trajectory::from_rows(rows)
    }

    pub fn width(&self) -> usize {
        self.rows[0].len()
    }

    /// Number of time steps after the initial row.
    pub fn steps(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn get(&self, x: usize, t: usize) -> u8 {
        self.rows[t][x]
    }

    pub fn set(&mut self, x: usize, t: usize, value: u8) {
        self.rows[t][x] = value;
    }
}

impl fmt::Display for Trajectory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let line: String = row.iter().map(|&c| if c == 1 { '1' } else { '0' }).collect();
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// Parses a row of `0`/`1` characters.
pub fn parse_row(text: &str) -> Result<Vec<u8>> {
    text.trim()
        .chars()
        .enumerate()
        .map(|(i, c)| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            other => Err(Error::Format {
                line: 1,
                message: format!("invalid cell `{other}` at column {}", i + 1),
            }),
        })
        .collect()
}

/// Deterministic random row.
pub fn random_row(width: usize, seed: u64) -> Vec<u8> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..width).map(|_| u8::from(rng.gen::<bool>())).collect()
}

/// Row of zeros with a single live cell in the middle.
pub fn single_seed_row(width: usize) -> Vec<u8> {
    let mut row = vec![0; width];
    if width > 0 {
        row[width / 2] = 1;
    }
    row
}

/// Evolves `init` for `steps` steps with periodic boundaries.
pub fn simulate(rule: &ElementaryRule, init: &[u8], steps: usize) -> Result<Trajectory> {
    let width = init.len();
    if width < 3 {
        return Err(Error::OutOfRange {
            what: "lattice width",
            value: width as i64,
        });
    }
    if let Some(&bad) = init.iter().find(|&&c| c > 1) {
        return Err(Error::StateOutOfRange {
            state: u32::from(bad),
            q: 2,
        });
    }
    let mut rows = Vec::with_capacity(steps + 1);
    rows.push(init.to_vec());
    for _ in 0..steps {
        let prev = rows.last().expect("at least one row");
        let next = (0..width)
            .map(|x| {
                let left = prev[(x + width - 1) % width];
                let right = prev[(x + 1) % width];
                rule.next_state(left, prev[x], right)
            })
            .collect();
        rows.push(next);
    }
    Ok(Trajectory { rows })
}

/// Single-cell automata on `{u, v}`, `v` being `u` one step later.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroDimAutomaton {
    /// `1100`: `u(t) = 0` for `t > 0`.
    Vanishing,
    /// `0110`: `u(t) = u(0) + t mod 2`.
    Oscillating,
    /// `1001`: `u(t) = u(0)`.
    Stationary,
    /// `0011`: `u(t) = 1` for `t > 0`.
    Saturating,
}

impl ZeroDimAutomaton {
    pub const ALL: [ZeroDimAutomaton; 4] = [
        ZeroDimAutomaton::Vanishing,
        ZeroDimAutomaton::Oscillating,
        ZeroDimAutomaton::Stationary,
        ZeroDimAutomaton::Saturating,
    ];

    pub fn bit_table(self) -> &'static str {
        match self {
            ZeroDimAutomaton::Vanishing => "1100",
            ZeroDimAutomaton::Oscillating => "0110",
            ZeroDimAutomaton::Stationary => "1001",
            ZeroDimAutomaton::Saturating => "0011",
        }
    }

    pub fn from_bit_table(bits: &str) -> Result<ZeroDimAutomaton> {
        ZeroDimAutomaton::ALL
            .into_iter()
            .find(|a| a.bit_table() == bits)
            .ok_or_else(|| Error::Unsupported(format!("`{bits}` is not a zero-dimensional automaton")))
    }

    pub fn relation(self) -> Relation {
        let d = Domain::new(["u", "v"], 2).expect("static domain");
        Relation::from_bit_str(d, self.bit_table()).expect("four bits")
    }

    pub fn step(self, u: u8) -> u8 {
        match self {
            ZeroDimAutomaton::Vanishing => 0,
            ZeroDimAutomaton::Oscillating => 1 - u,
            ZeroDimAutomaton::Stationary => u,
            ZeroDimAutomaton::Saturating => 1,
        }
    }

    /// General solution `u(t)` from `u(0)`.
    pub fn solve(self, u0: u8, t: u64) -> u8 {
        match (self, t) {
            (_, 0) => u0,
            (ZeroDimAutomaton::Vanishing, _) => 0,
            (ZeroDimAutomaton::Oscillating, t) => (u0 + (t % 2) as u8) % 2,
            (ZeroDimAutomaton::Stationary, _) => u0,
            (ZeroDimAutomaton::Saturating, _) => 1,
        }
    }
}

/// Automata with a known closed-form solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedForm {
    /// `u(x,t) = u(x−t, 0) + t mod 2`.
    Rule15,
    /// `u(x,t) = Σ_k C(t,k) u(x−t+2k, 0) mod 2`.
    Rule90,
    /// Each cell runs its own zero-dimensional automaton.
    ZeroDim(ZeroDimAutomaton),
}

impl ClosedForm {
    pub fn for_rule(n: u32) -> Result<ClosedForm> {
        match n {
            15 => Ok(ClosedForm::Rule15),
            90 => Ok(ClosedForm::Rule90),
            other => Err(Error::Unsupported(format!("no closed form for rule {other}"))),
        }
    }

    /// State at `(x, t)` from the initial row, indices taken mod its width.
    pub fn evaluate(self, init: &[u8], x: i64, t: u64) -> Result<u8> {
        let w = init.len() as i64;
        if w == 0 {
            return Err(Error::OutOfRange {
                what: "lattice width",
                value: 0,
            });
        }
        let at = |i: i64| init[i.rem_euclid(w) as usize];
        Ok(match self {
            ClosedForm::Rule15 => (at(x - (t % w as u64) as i64) + (t % 2) as u8) % 2,
            ClosedForm::Rule90 => {
                // C(t,k) is odd iff k is a bit-subset of t (Lucas)
                let mut acc = 0u8;
                let mut k = t;
                loop {
                    let offset = (2 * (k as i128) - t as i128).rem_euclid(w as i128) as i64;
                    acc ^= at(x + offset);
                    if k == 0 {
                        break;
                    }
                    k = (k - 1) & t;
                }
                acc
            }
            ClosedForm::ZeroDim(a) => a.solve(at(x), t),
        })
    }
}

/// Closed-form value for rule 15 or 90.
pub fn closed_form(rule: u32, init: &[u8], x: i64, t: u64) -> Result<u8> {
    ClosedForm::for_rule(rule)?.evaluate(init, x, t)
}

/// A window `(x, t)` whose states violate the checked relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// `None` for the rule itself, otherwise the consequence face.
    pub face: Option<String>,
    pub x: usize,
    pub t: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub windows_checked: usize,
    pub rule_violations: Vec<Violation>,
    pub consequence_violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.rule_violations.is_empty() && self.consequence_violations.is_empty()
    }
}

/// Checks every window `(u(x−1,t), u(x,t), u(x+1,t), u(x,t+1))` against the
/// rule relation and against each consequence (restricted to its face).
pub fn check_trajectory(
    rule: &ElementaryRule,
    traj: &Trajectory,
    consequences: &[ConsequenceEntry],
) -> Result<VerificationReport> {
    let domain = rule_domain();
    let positions: Vec<Vec<usize>> = consequences
        .iter()
        .map(|c| c.face().points().iter().map(|n| domain.position(n)).collect())
        .collect::<Result<_>>()?;
    let w = traj.width();
    let mut report = VerificationReport::default();
    let mut restricted = Vec::with_capacity(4);
    for t in 0..traj.steps() {
        for x in 0..w {
            let window = [
                u32::from(traj.get((x + w - 1) % w, t)),
                u32::from(traj.get(x, t)),
                u32::from(traj.get((x + 1) % w, t)),
                u32::from(traj.get(x, t + 1)),
            ];
            report.windows_checked += 1;
            if !rule.relation().contains(&window)? {
                report.rule_violations.push(Violation { face: None, x, t });
            }
            for (c, pos) in consequences.iter().zip(&positions) {
                restricted.clear();
                restricted.extend(pos.iter().map(|&i| window[i]));
                if !c.relation.contains(&restricted)? {
                    report.consequence_violations.push(Violation {
                        face: Some(c.face().points().concat()),
                        x,
                        t,
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Simulates and checks one trajectory per initial row.
pub fn check_batch(
    rule: &ElementaryRule,
    inits: Vec<Vec<u8>>,
    steps: usize,
    consequences: &[ConsequenceEntry],
    exec: Execution,
) -> Result<Vec<VerificationReport>> {
    exec.map(inits, |init| {
        let traj = simulate(rule, &init, steps)?;
        check_trajectory(rule, &traj, consequences)
    })
    .into_iter()
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_bit_tables() {
        assert_eq!(wolfram_relation(30).unwrap().relation().bit_string(), "1001010101101010");
        assert_eq!(wolfram_relation(110).unwrap().relation().bit_string(), "1100000100111110");
        assert_eq!(wolfram_relation(0).unwrap().relation().bit_string(), "1111111100000000");
        assert_eq!(wolfram_relation(90).unwrap().relation().bit_string(), "1010010101011010");
        assert_eq!(wolfram_relation(15).unwrap().relation().bit_string(), "0101010110101010");
        assert!(matches!(wolfram_relation(256), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn rules_are_functional() {
        for n in 0..256 {
            let r = wolfram_relation(n).unwrap();
            for left in 0..2 {
                for centre in 0..2 {
                    for right in 0..2 {
                        let count = (0..2)
                            .filter(|&s| r.relation().contains(&[left, centre, right, s]).unwrap())
                            .count();
                        assert_eq!(count, 1, "rule {n}");
                    }
                }
            }
        }
    }

    #[test]
    fn life_examples() {
        let life = life_relation();
        assert_eq!(life.cardinality(), 512);
        assert!(life.contains(&[1, 1, 1, 0, 0, 0, 0, 0, 0, 1]).unwrap());
        assert!(life.contains(&[0; 10]).unwrap());
        assert!(!life.contains(&[1, 1, 1, 0, 0, 0, 0, 0, 0, 0]).unwrap());
    }

    #[test]
    fn life_reconstructs_from_any_seven() {
        assert_eq!(life_reconstructions(&life_relation()).unwrap(), [true; 8]);
    }

    #[test]
    fn simulate_examples() {
        let r0 = wolfram_relation(0).unwrap();
        let t = simulate(&r0, &random_row(17, 3), 1).unwrap();
        assert!(t.rows()[1].iter().all(|&c| c == 0));

        let r204 = wolfram_relation(204).unwrap();
        let init = random_row(20, 9);
        let t = simulate(&r204, &init, 10).unwrap();
        assert!(t.rows().iter().all(|row| row == &init));

        assert!(simulate(&r0, &[0, 1], 3).is_err());
        assert!(simulate(&r0, &[0, 1, 2], 3).is_err());
    }

    #[test]
    fn closed_forms() {
        assert_eq!(ZeroDimAutomaton::Oscillating.solve(0, 3), 1);
        assert_eq!(ZeroDimAutomaton::from_bit_table("0110").unwrap(), ZeroDimAutomaton::Oscillating);
        for a in ZeroDimAutomaton::ALL {
            for u0 in 0..2 {
                let mut u = u0;
                for t in 0..6 {
                    assert_eq!(a.solve(u0, t), u, "{a:?}");
                    assert!(a.relation().contains(&[u32::from(u), u32::from(a.step(u))]).unwrap());
                    u = a.step(u);
                }
            }
        }
        let init = single_seed_row(31);
        let traj = simulate(&wolfram_relation(90).unwrap(), &init, 2).unwrap();
        assert_eq!(closed_form(90, &init, 15, 2).unwrap(), traj.get(15, 2));
        assert_eq!(closed_form(90, &init, 13, 2).unwrap(), traj.get(13, 2));
        assert!(matches!(closed_form(30, &init, 0, 1), Err(Error::Unsupported(_))));
        let row = random_row(31, 1);
        assert_eq!(closed_form(15, &row, 4, 3).unwrap(), (row[1] + 1) % 2);
    }

    #[test]
    fn trajectory_text_round_trip() {
        let traj = simulate(&wolfram_relation(30).unwrap(), &single_seed_row(9), 4).unwrap();
        let text = traj.to_string();
        assert_eq!(text.lines().next().unwrap(), "000010000");
        assert_eq!(Trajectory::parse(&text).unwrap(), traj);
        assert!(matches!(Trajectory::parse("010\n01\n"), Err(Error::Format { line: 2, .. })));
        assert!(matches!(Trajectory::parse("0a0\n"), Err(Error::Format { line: 1, .. })));
    }

    #[test]
    fn corrupted_trajectory_is_caught() {
        let rule = wolfram_relation(168).unwrap();
        let cons = structure::proper_consequences(rule.relation()).unwrap();
        let mut traj = simulate(&rule, &random_row(30, 5), 12).unwrap();
        let clean = check_trajectory(&rule, &traj, &cons).unwrap();
        assert!(clean.is_clean());
        assert_eq!(clean.windows_checked, 30 * 12);
        let v = traj.get(4, 6);
        traj.set(4, 6, 1 - v);
        let dirty = check_trajectory(&rule, &traj, &cons).unwrap();
        assert!(!dirty.rule_violations.is_empty());
    }

    #[test]
    fn random_rows_are_deterministic() {
        assert_eq!(random_row(40, 7), random_row(40, 7));
        assert_ne!(random_row(40, 7), random_row(40, 8));
    }
}
