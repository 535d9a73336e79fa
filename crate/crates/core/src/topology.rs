//! Simplicial structure induced on the points of a relation.
//!
//! The maximal simplices are the faces of the irreducible components: start
//! at the root of the decomposition, replace every reducible node by its
//! co-dimension-1 projections, and stop at irreducible or prime nodes. The
//! extensions of the components intersect back to the original relation.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::relation::Relation;
use crate::structure::{DecompositionTree, Status};

/// Abstract simplicial complex given by its maximal simplices.
///
/// Points not covered by any maximal simplex are isolated vertices: they
/// carry no constraint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    points: Vec<String>,
    maximal_simplices: Vec<Vec<String>>,
}

impl SimplicialComplex {
    /// Builds a complex from arbitrary faces, keeping only inclusion-maximal ones.
    ///
    /// Faces are rewritten in the order of `points`; maximal simplices are
    /// sorted by that order too.
    pub fn from_faces<S: AsRef<str>>(points: &[S], faces: &[Vec<S>]) -> Result<SimplicialComplex> {
        let points: Vec<String> = points.iter().map(|p| p.as_ref().to_string()).collect();
        let mut sets: Vec<BTreeSet<usize>> = Vec::new();
        for face in faces {
            let mut set = BTreeSet::new();
            for n in face {
                let i = points
                    .iter()
                    .position(|p| p == n.as_ref())
                    .ok_or_else(|| Error::UnknownPoint(n.as_ref().to_string()))?;
                set.insert(i);
            }
            if !set.is_empty() {
                sets.push(set);
            }
        }
        sets.sort();
        sets.dedup();
        let maximal: Vec<&BTreeSet<usize>> = sets
            .iter()
            .filter(|s| !sets.iter().any(|t| t.len() > s.len() && s.is_subset(t)))
            .collect();
        let maximal_simplices = maximal
            .into_iter()
            .map(|s| s.iter().map(|&i| points[i].clone()).collect())
            .collect();
        Ok(SimplicialComplex {
            points,
            maximal_simplices,
        })
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn maximal_simplices(&self) -> &[Vec<String>] {
        &self.maximal_simplices
    }

    /// True when `face` is a simplex (a subset of some maximal simplex, or a
    /// single vertex).
    pub fn contains_simplex<S: AsRef<str>>(&self, face: &[S]) -> bool {
        if face.len() == 1 && self.points.iter().any(|p| p == face[0].as_ref()) {
            return true;
        }
        self.maximal_simplices
            .iter()
            .any(|m| face.iter().all(|n| m.iter().any(|p| p == n.as_ref())))
    }

    /// Dimension of the complex; isolated vertices give 0, no points gives -1.
    pub fn dimension(&self) -> isize {
        let top = self
            .maximal_simplices
            .iter()
            .map(|m| m.len() as isize - 1)
            .max()
            .unwrap_or(-1);
        if self.points.is_empty() {
            -1
        } else {
            top.max(0)
        }
    }

    /// Points that belong to no maximal simplex.
    pub fn isolated_vertices(&self) -> Vec<&str> {
        self.points
            .iter()
            .filter(|p| !self.maximal_simplices.iter().any(|m| m.contains(p)))
            .map(String::as_str)
            .collect()
    }
}

/// `{p,r,s} {q,s}`; a complex without constrained points prints `{}`.
impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.maximal_simplices.is_empty() {
            return f.write_str("{}");
        }
        let parts: Vec<String> = self
            .maximal_simplices
            .iter()
            .map(|m| format!("{{{}}}", m.join(",")))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Simplicial complex whose maximal simplices are the faces of the
/// irreducible components of `r`.
pub fn impose_topology(r: &Relation) -> Result<SimplicialComplex> {
    if r.is_empty() {
        return Err(Error::EmptyRelation);
    }
    impose_topology_from_tree(&DecompositionTree::build(r)?)
}

/// Same as [`impose_topology`] for an already built decomposition.
pub fn impose_topology_from_tree(tree: &DecompositionTree) -> Result<SimplicialComplex> {
    let components = irreducible_components(tree);
    let faces: Vec<Vec<String>> = components
        .iter()
        .map(|&id| tree.node(id).relation.domain().points().to_vec())
        .collect();
    SimplicialComplex::from_faces(tree.domain().points(), &faces)
}

/// Ids of the irreducible (or prime) nodes reached from the root through
/// reducible nodes only.
pub fn irreducible_components(tree: &DecompositionTree) -> Vec<usize> {
    let mut out = BTreeSet::new();
    let mut seen = vec![false; tree.len()];
    let mut stack = vec![0usize];
    while let Some(id) = stack.pop() {
        if std::mem::replace(&mut seen[id], true) {
            continue;
        }
        let node = tree.node(id);
        match node.status {
            Status::Reducible => stack.extend(node.children.iter().copied()),
            Status::Irreducible | Status::Prime => {
                out.insert(id);
            }
            Status::Trivial | Status::Empty => {}
        }
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::Domain;

    fn rule(bits: &str) -> Relation {
        Relation::from_bit_str(Domain::new(["p", "q", "r", "s"], 2).unwrap(), bits).unwrap()
    }

    #[test]
    fn rule_topologies() {
        let t90 = impose_topology(&rule("1010010101011010")).unwrap();
        assert_eq!(t90.maximal_simplices(), [vec!["p", "r", "s"]]);
        assert_eq!(t90.isolated_vertices(), ["q"]);
        assert_eq!(t90.to_string(), "{p,r,s}");

        let t30 = impose_topology(&rule("1001010101101010")).unwrap();
        assert_eq!(t30.maximal_simplices(), [vec!["p", "q", "r", "s"]]);
        assert_eq!(t30.dimension(), 3);

        let t15 = impose_topology(&rule("0101010110101010")).unwrap();
        assert_eq!(t15.maximal_simplices(), [vec!["p", "s"]]);
        assert!(t15.contains_simplex(&["s", "p"]));
        assert!(!t15.contains_simplex(&["q", "s"]));
    }

    #[test]
    fn trivial_relation_gives_isolated_vertices() {
        let t = impose_topology(&Relation::trivial(Domain::new(["a", "b"], 3).unwrap())).unwrap();
        assert!(t.maximal_simplices().is_empty());
        assert_eq!(t.isolated_vertices(), ["a", "b"]);
        assert_eq!(t.dimension(), 0);
        assert_eq!(
            impose_topology(&Relation::empty(Domain::new(["a"], 2).unwrap())).unwrap_err(),
            Error::EmptyRelation
        );
    }

    #[test]
    fn from_faces_keeps_maximal() {
        let c = SimplicialComplex::from_faces(
            &["a", "b", "c", "d"],
            &[vec!["b", "a"], vec!["a"], vec!["c", "b", "a"], vec!["d"]],
        )
        .unwrap();
        assert_eq!(c.maximal_simplices(), [vec!["a", "b", "c"], vec!["d"]]);
        assert!(SimplicialComplex::from_faces(&["a"], &[vec!["z"]]).is_err());
    }
}
