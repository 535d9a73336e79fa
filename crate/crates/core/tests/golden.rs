//! Published tables for elementary rules and the Game of Life.

use relcalc::automata::{
    classify_all_rules, classify_rule, life_relation, simulate, single_seed_row, wolfram_relation, ClosedForm,
    ZeroDimAutomaton, REFERENCE_1101_RULES,
};
use relcalc::poly::relation_to_polynomial;
use relcalc::structure::{
    canonical_decomposition, classify, count_consequences, group_by_symmetry, DecompositionTree, Status,
};
use relcalc::topology::impose_topology;

const NEIGHBOURS: [&str; 8] = ["x0", "x1", "x2", "x3", "x4", "x5", "x6", "x7"];

fn poly_string(n: u32) -> String {
    relation_to_polynomial(wolfram_relation(n).unwrap().relation()).unwrap().to_string()
}

#[test]
fn rule_polynomials() {
    assert_eq!(poly_string(30), "qr+s+r+q+p");
    assert_eq!(poly_string(110), "pqr+qr+s+r+q");
    assert_eq!(poly_string(105), "s+r+q+p+1");
    assert_eq!(poly_string(150), "s+r+q+p");
    let r168 = relation_to_polynomial(wolfram_relation(168).unwrap().relation()).unwrap();
    let mut terms = r168.monomial_strings();
    terms.sort();
    assert_eq!(terms, ["pqr", "pr", "qr", "s"]);
}

#[test]
fn rule_30_factor_polynomial() {
    let pf = canonical_decomposition(wolfram_relation(30).unwrap().relation())
        .unwrap()
        .principal_factor;
    assert_eq!(relation_to_polynomial(&pf).unwrap().to_string(), "qrs+pqr+rs+qs+pr+pq+s+p");
}

#[test]
fn consequence_polynomials() {
    let r30 = wolfram_relation(30).unwrap();
    let pqs = r30.relation().project_onto(&["p", "q", "s"]).unwrap();
    let mut terms = relation_to_polynomial(&pqs).unwrap().monomial_strings();
    terms.sort();
    assert_eq!(terms, ["pq", "q", "qs"]);
    let r168 = wolfram_relation(168).unwrap();
    let rs = r168.relation().project_onto(&["r", "s"]).unwrap();
    assert_eq!(rs.bit_string(), "1101");
    assert_eq!(relation_to_polynomial(&rs).unwrap().to_string(), "rs+s");
}

#[test]
fn classification_statuses() {
    let summary = classify_all_rules().unwrap();
    assert_eq!(summary.rules.len(), 256);
    assert_eq!(summary.primes(), [105, 150]);
    let exclusive: usize = [Status::Reducible, Status::Irreducible, Status::Prime]
        .iter()
        .map(|&s| summary.with_status(s).len())
        .sum();
    assert_eq!(exclusive, 256);
    for rc in &summary.rules {
        assert_eq!(rc.status, classify(wolfram_relation(u32::from(rc.number)).unwrap().relation()).unwrap());
    }
    let r168 = &summary.rules[168];
    assert_eq!(r168.faces_with_table("1101"), ["r"]);
    assert_eq!(classify_rule(0).unwrap().status, Status::Reducible);
}

/// `s = 1` forces `x = 1`, and the three other pairs all occur: read
/// straight off the rule number.
fn has_exact_1101(n: u8, x: usize) -> bool {
    let mut seen = [false; 4];
    for idx in 0..8u8 {
        let bits = [idx >> 2 & 1, idx >> 1 & 1, idx & 1];
        let s = n >> idx & 1;
        seen[usize::from(bits[x] + 2 * s)] = true;
    }
    seen == [true, true, false, true]
}

#[test]
fn exact_1101_consequences() {
    let summary = classify_all_rules().unwrap();
    let want: Vec<u8> = (0..=255u8).filter(|&n| (0..3).any(|x| has_exact_1101(n, x))).collect();
    assert_eq!(summary.rules_with_1101(), want);
    // The printed list also contains the state-swapped table 1011 and
    // leaves out 12, 68, 207 and 221.
    let either: Vec<u8> = (0..=255u8)
        .filter(|&n| !summary.rules[usize::from(n)].faces_with_table("1101").is_empty()
            || !summary.rules[usize::from(n)].faces_with_table("1011").is_empty())
        .collect();
    let leftover: Vec<u8> = either.iter().copied().filter(|n| !REFERENCE_1101_RULES.contains(n)).collect();
    assert_eq!(leftover, [12, 68, 207, 221]);
    assert!(REFERENCE_1101_RULES.iter().all(|n| either.contains(n)));
    let (missing, extra) = summary.compare_1101_with_reference();
    assert_eq!(missing.len(), 32);
    assert_eq!(extra, [12, 68]);
}

#[test]
fn life_polynomial_displays() {
    let life = life_relation();
    let p = relation_to_polynomial(&life).unwrap();
    assert_eq!(p.symmetric_display(&NEIGHBOURS), "x9+x8{σ7+σ6+σ3+σ2}+σ7+σ3");

    let tree = DecompositionTree::build(&life).unwrap();
    let children: Vec<_> = tree.root_children().collect();
    assert_eq!(children.len(), 9);
    let classes = group_by_symmetry(
        &children.iter().map(|n| n.relation.clone()).collect::<Vec<_>>(),
        &NEIGHBOURS,
    )
    .unwrap();
    let mut sizes: Vec<usize> = classes.iter().map(|c| c.members.len()).collect();
    sizes.sort();
    assert_eq!(sizes, [1, 8]);

    let display = |r: &relcalc::Relation| relation_to_polynomial(r).unwrap().symmetric_display(&NEIGHBOURS);
    for c in &classes {
        let shown = display(&c.representative);
        if c.members.len() == 8 {
            assert_eq!(shown, "x8x9{σ6+σ5+σ2+σ1}+x9{σ6+σ2+1}+x8{σ7+σ6+σ3+σ2}");
        } else {
            assert_eq!(shown, "x9{σ7+σ6+σ3+σ2+1}+σ7+σ3");
        }
    }

    let r11 = life.project_onto(&["x2", "x3", "x4", "x5", "x6", "x7", "x8", "x9"]).unwrap();
    assert_eq!(display(&r11), "x8x9{σ6+σ5+σ4+σ3+σ2+σ1+1}+x9{σ6+σ5+σ3+σ2+σ1+1}");
    let r12 = life.project_onto(&["x1", "x2", "x3", "x4", "x5", "x6", "x7", "x9"]).unwrap();
    assert_eq!(display(&r12), "x9{σ7+σ6+σ5+σ3+σ2+σ1+1}");
    let leaf = life.project_onto(&["x0", "x2", "x5", "x7", "x9"]).unwrap();
    assert_eq!(relation_to_polynomial(&leaf).unwrap().to_string(), "x0x2x5x7x9");
}

#[test]
fn life_tree_shape() {
    let tree = DecompositionTree::build(&life_relation()).unwrap();
    assert_eq!(tree.root().status, Status::Reducible);
    for child in tree.root_children() {
        assert_eq!(child.status, Status::Irreducible);
        assert_eq!(child.relation.arity(), 9);
    }
    assert!(tree.prime_leaves().all(|n| n.relation.arity() == 5));
    let topology = impose_topology(&life_relation()).unwrap();
    assert_eq!(topology.maximal_simplices().len(), 9);
    assert_eq!(topology.dimension(), 8);
}

#[test]
fn life_consequence_count() {
    let life = life_relation();
    assert_eq!(count_consequences(&life), num_bigint::BigUint::from(1u8) << 512u32);
}

#[test]
fn zero_dimensional_solutions() {
    // u(t) for u(0) = 0 and u(0) = 1, t = 0..4
    let table = [
        ("1100", [[0, 0, 0, 0], [1, 0, 0, 0]]),
        ("0110", [[0, 1, 0, 1], [1, 0, 1, 0]]),
        ("1001", [[0, 0, 0, 0], [1, 1, 1, 1]]),
        ("0011", [[0, 1, 1, 1], [1, 1, 1, 1]]),
    ];
    for (bits, rows) in table {
        let a = ZeroDimAutomaton::from_bit_table(bits).unwrap();
        for (u0, row) in rows.iter().enumerate() {
            for (t, &want) in row.iter().enumerate() {
                assert_eq!(a.solve(u0 as u8, t as u64), want, "{bits} u0={u0} t={t}");
            }
        }
    }
}

#[test]
fn rule_90_sierpinski_from_single_seed() {
    let init = single_seed_row(63);
    let traj = simulate(&wolfram_relation(90).unwrap(), &init, 31).unwrap();
    for t in 0..=31u64 {
        for x in 0..63i64 {
            // Pascal's triangle mod 2 centred on the seed
            let d = x - 31 + t as i64;
            let want = d >= 0 && d % 2 == 0 && {
                let k = (d / 2) as u64;
                k <= t && k & t == k
            };
            assert_eq!(traj.get(x as usize, t as usize), u8::from(want), "({x},{t})");
            assert_eq!(ClosedForm::Rule90.evaluate(&init, x, t).unwrap(), u8::from(want));
        }
    }
}
