//! Brute-force oracles over explicit tuple sets.
//!
//! Everything here works on `BTreeSet<Vec<u32>>` with points matched by
//! name, so it shares no indexing code with the library beyond
//! `Relation::contains`.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use relcalc::{Domain, Relation};

pub type TupleSet = BTreeSet<Vec<u32>>;

/// Every tuple of length `k` over `0..q`.
pub fn all_tuples(k: usize, q: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..q).map(move |s| {
                    let mut t = t.clone();
                    t.push(s);
                    t
                })
            })
            .collect();
    }
    out
}

pub fn members(r: &Relation) -> TupleSet {
    all_tuples(r.arity(), r.q())
        .into_iter()
        .filter(|t| r.contains(t).unwrap())
        .collect()
}

/// Tuple over `to` read off a tuple over `from` by point name.
pub fn restrict(t: &[u32], from: &Domain, to: &Domain) -> Vec<u32> {
    to.points()
        .iter()
        .map(|n| t[from.points().iter().position(|m| m == n).unwrap()])
        .collect()
}

pub fn oracle_project(r: &Relation, face: &Domain) -> TupleSet {
    members(r).iter().map(|t| restrict(t, r.domain(), face)).collect()
}

pub fn oracle_extend(r: &Relation, sup: &Domain) -> TupleSet {
    let base = members(r);
    all_tuples(sup.len(), sup.q())
        .into_iter()
        .filter(|t| base.contains(&restrict(t, sup, r.domain())))
        .collect()
}

/// Tuples over `d` whose restriction to every given face lies in the
/// matching set.
pub fn oracle_meet(d: &Domain, parts: &[(Domain, TupleSet)]) -> TupleSet {
    all_tuples(d.len(), d.q())
        .into_iter()
        .filter(|t| parts.iter().all(|(f, set)| set.contains(&restrict(t, d, f))))
        .collect()
}

/// Faces obtained by dropping one point.
pub fn codim1_faces(d: &Domain) -> Vec<Domain> {
    (0..d.len())
        .map(|i| {
            let names: Vec<&String> = d.points().iter().enumerate().filter(|(j, _)| *j != i).map(|(_, n)| n).collect();
            Domain::new(names, d.q()).unwrap()
        })
        .filter(|f| !f.is_empty())
        .collect()
}

/// `R` equals the meet of its co-dimension-1 projections.
pub fn oracle_reducible(r: &Relation) -> bool {
    let faces = codim1_faces(r.domain());
    if faces.is_empty() {
        return false;
    }
    let parts: Vec<(Domain, TupleSet)> = faces.into_iter().map(|f| {
        let p = oracle_project(r, &f);
        (f, p)
    }).collect();
    oracle_meet(r.domain(), &parts) == members(r)
}

pub fn relation_from_set(d: &Domain, set: &TupleSet) -> Relation {
    Relation::from_fn(d.clone(), |t| set.contains(t))
}

const NAMES: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

/// Domain with `q` in {2, 3}, 1 to 4 points, shuffled names.
pub fn random_domain<R: Rng>(rng: &mut R) -> Domain {
    let q = rng.gen_range(2..=3);
    let k = rng.gen_range(1..=4);
    let mut names = NAMES.to_vec();
    names.shuffle(rng);
    Domain::new(names[..k].iter().copied(), q).unwrap()
}

pub fn random_relation<R: Rng>(rng: &mut R, d: &Domain) -> Relation {
    let density: f64 = rng.gen();
    Relation::from_fn(d.clone(), |_| rng.gen_bool(density))
}

/// Nonempty subset of the points of `d`, in random order.
pub fn random_face<R: Rng>(rng: &mut R, d: &Domain) -> Domain {
    let mut names: Vec<String> = d.points().to_vec();
    names.shuffle(rng);
    let n = rng.gen_range(1..=names.len());
    Domain::new(&names[..n], d.q()).unwrap()
}
