//! Compatibility and decomposition calculus.
//!
//! Everything here is expressed through projection and extension:
//!
//! * the base relation of a system is the intersection of the extensions of
//!   its members to the union of their domains (empty means incompatible);
//! * a proper consequence is a nontrivial relation on a proper face whose
//!   extension contains the source; the projection is the strongest one;
//! * the canonical decomposition pairs the nontrivial projections onto
//!   co-dimension-1 faces with the principal factor
//!   `PR = R ∪ (S^δ ∖ ⋂ extensions)`, the loosest relation that restores `R`;
//! * `R` is reducible when its principal factor is trivial and prime when no
//!   proper face carries a nontrivial projection.
//!
//! Projections onto smaller faces factor through co-dimension-1 faces, so
//! decompositions only look one level down and the recursion in
//! [`DecompositionTree`] reaches the deeper faces.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigUint;

use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::par::Execution;
use crate::relation::Relation;

/// A nontrivial relation on a proper face whose extension contains the parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsequenceEntry {
    pub relation: Relation,
}

impl ConsequenceEntry {
    pub fn face(&self) -> &Domain {
        self.relation.domain()
    }
}

impl fmt::Display for ConsequenceEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.relation)
    }
}

/// Classification of a relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    /// No proper face carries a nontrivial projection.
    Prime,
    /// Has proper consequences but needs a nontrivial principal factor.
    Irreducible,
    /// Equals the intersection of its co-dimension-1 projections.
    Reducible,
    Trivial,
    Empty,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Prime => "prime",
            Status::Irreducible => "irreducible",
            Status::Reducible => "reducible",
            Status::Trivial => "trivial",
            Status::Empty => "empty",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Status {
    type Err = Error;

    fn from_str(s: &str) -> Result<Status> {
        Ok(match s {
            "prime" => Status::Prime,
            "irreducible" => Status::Irreducible,
            "reducible" => Status::Reducible,
            "trivial" => Status::Trivial,
            "empty" => Status::Empty,
            other => return Err(Error::Unsupported(format!("unknown status `{other}`"))),
        })
    }
}

/// `R = PR ∩ ⋂ extend(Q_i)` with the `Q_i` on co-dimension-1 faces.
#[derive(Debug, Clone)]
pub struct CanonicalDecomposition {
    pub source: Relation,
    pub consequences: Vec<ConsequenceEntry>,
    pub principal_factor: Relation,
}

impl CanonicalDecomposition {
    /// Intersection of the principal factor with every extended consequence.
    pub fn reconstruct(&self) -> Result<Relation> {
        let domain = self.source.domain();
        self.consequences
            .iter()
            .try_fold(self.principal_factor.clone(), |acc, c| {
                acc.intersect(&c.relation.extend(domain)?)
            })
    }

    pub fn is_reducible(&self) -> bool {
        self.principal_factor.is_trivial()
    }
}

/// Compatibility condition of a system of relations.
///
/// The result lives on the union of the input domains, points ordered by
/// first appearance across the inputs. An empty result means the system is
/// incompatible.
pub fn base_relation(relations: &[Relation]) -> Result<Relation> {
    if relations.is_empty() {
        return Err(Error::DomainMismatch("base relation of an empty system".into()));
    }
    let domain = Domain::union(relations.iter().map(Relation::domain))?;
    relations
        .iter()
        .try_fold(Relation::trivial(domain.clone()), |acc, r| {
            acc.intersect(&r.extend(&domain)?)
        })
}

/// True when `candidate`'s extension to `source`'s domain contains `source`.
pub fn is_consequence(source: &Relation, candidate: &Relation) -> Result<bool> {
    source.is_subset_of(&candidate.extend(source.domain())?)
}

/// Masks of all nonempty proper faces, largest faces first, then by mask.
pub fn proper_face_masks(domain: &Domain) -> Result<Vec<u64>> {
    let k = domain.len();
    if k >= 32 {
        return Err(Error::Unsupported(format!(
            "enumerating all faces of a {k}-point domain"
        )));
    }
    let full = domain.full_mask();
    let mut masks: Vec<u64> = (1..full).collect();
    masks.sort_by_key(|m| (std::cmp::Reverse(m.count_ones()), *m));
    Ok(masks)
}

/// Masks of the co-dimension-1 faces, in increasing mask order.
pub fn codim1_face_masks(domain: &Domain) -> Vec<u64> {
    if domain.len() < 2 {
        return Vec::new();
    }
    let full = domain.full_mask();
    let mut masks: Vec<u64> = (0..domain.len()).map(|i| full & !(1 << i)).collect();
    masks.sort_unstable();
    masks
}

fn require_nonempty(r: &Relation) -> Result<()> {
    if r.is_empty() {
        Err(Error::EmptyRelation)
    } else {
        Ok(())
    }
}

fn require_proper(r: &Relation) -> Result<()> {
    require_nonempty(r)?;
    if r.is_trivial() {
        Err(Error::TrivialRelation)
    } else {
        Ok(())
    }
}

fn nontrivial_projections(r: &Relation, masks: Vec<u64>, exec: Execution) -> Result<Vec<ConsequenceEntry>> {
    let domain = r.domain().clone();
    let projected = exec.map(masks, |m| r.project(&domain.face(m)));
    let mut out = Vec::new();
    for p in projected {
        let p = p?;
        if !p.is_trivial() {
            out.push(ConsequenceEntry { relation: p });
        }
    }
    Ok(out)
}

/// Strongest proper consequence on every nonempty proper face where it is
/// nontrivial. Larger faces come first.
pub fn proper_consequences(r: &Relation) -> Result<Vec<ConsequenceEntry>> {
    proper_consequences_with(r, Execution::default())
}

pub fn proper_consequences_with(r: &Relation, exec: Execution) -> Result<Vec<ConsequenceEntry>> {
    require_nonempty(r)?;
    nontrivial_projections(r, proper_face_masks(r.domain())?, exec)
}

/// Nontrivial projections onto co-dimension-1 faces.
pub fn codim1_consequences(r: &Relation) -> Result<Vec<ConsequenceEntry>> {
    codim1_consequences_with(r, Execution::Sequential)
}

pub fn codim1_consequences_with(r: &Relation, exec: Execution) -> Result<Vec<ConsequenceEntry>> {
    require_nonempty(r)?;
    nontrivial_projections(r, codim1_face_masks(r.domain()), exec)
}

/// Drops entries already implied by a larger listed entry: a face contained
/// in another listed face whose relation equals the extension of this one.
pub fn prune_implied(entries: &[ConsequenceEntry]) -> Vec<ConsequenceEntry> {
    entries
        .iter()
        .enumerate()
        .filter(|(i, e)| {
            !entries.iter().enumerate().any(|(j, big)| {
                j != *i
                    && big.face().len() > e.face().len()
                    && e.face().is_subset_of(big.face())
                    && e.relation.extend(big.face()).is_ok_and(|x| x == big.relation)
            })
        })
        .map(|(_, e)| e.clone())
        .collect()
}

/// `PR = R ∪ (S^δ ∖ ⋂ extend(Q_i))`.
///
/// Every supplied entry must be a consequence of `r`.
pub fn principal_factor(r: &Relation, consequences: &[ConsequenceEntry]) -> Result<Relation> {
    let domain = r.domain();
    let mut meet = Relation::trivial(domain.clone());
    for c in consequences {
        let ext = c.relation.extend(domain)?;
        if !r.is_subset_of(&ext)? {
            return Err(Error::NotAConsequence {
                face: c.face().to_string(),
            });
        }
        meet = meet.intersect(&ext)?;
    }
    r.union(&meet.complement())
}

pub fn canonical_decomposition(r: &Relation) -> Result<CanonicalDecomposition> {
    require_proper(r)?;
    let consequences = codim1_consequences(r)?;
    let principal_factor = principal_factor(r, &consequences)?;
    Ok(CanonicalDecomposition {
        source: r.clone(),
        consequences,
        principal_factor,
    })
}

pub fn is_reducible(r: &Relation) -> Result<bool> {
    Ok(canonical_decomposition(r)?.is_reducible())
}

/// A nonempty nontrivial relation is prime when every nonempty proper face
/// has a trivial projection. Checking co-dimension-1 faces suffices: any
/// smaller face's projection factors through one of them.
pub fn is_prime(r: &Relation) -> Result<bool> {
    require_proper(r)?;
    let domain = r.domain();
    for m in codim1_face_masks(domain) {
        if !r.project(&domain.face(m))?.is_trivial() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn classify(r: &Relation) -> Result<Status> {
    Ok(analyze(r)?.0)
}

/// Status, co-dimension-1 consequences and principal factor in one pass.
fn analyze(r: &Relation) -> Result<(Status, Vec<ConsequenceEntry>, Option<Relation>)> {
    if r.is_empty() {
        return Ok((Status::Empty, Vec::new(), None));
    }
    if r.is_trivial() {
        return Ok((Status::Trivial, Vec::new(), None));
    }
    let consequences = codim1_consequences(r)?;
    if consequences.is_empty() {
        return Ok((Status::Prime, consequences, None));
    }
    let pf = principal_factor(r, &consequences)?;
    let status = if pf.is_trivial() {
        Status::Reducible
    } else {
        Status::Irreducible
    };
    Ok((status, consequences, Some(pf)))
}

/// `2^(q^k − |R|)`: the number of supersets of `R` in `S^δ`.
pub fn count_consequences(r: &Relation) -> BigUint {
    let free = r.domain().cells() - r.cardinality();
    BigUint::from(1u8) << free
}

/// One node of a [`DecompositionTree`].
#[derive(Debug, Clone)]
pub struct TreeNode {
    /// Points of the root domain carried by this node.
    pub face_mask: u64,
    pub relation: Relation,
    pub status: Status,
    /// Node ids of the nontrivial co-dimension-1 projections.
    pub children: Vec<usize>,
    /// Present for reducible and irreducible nodes.
    pub principal_factor: Option<Relation>,
}

/// Recursive decomposition down to prime relations.
///
/// Projection onto a face does not depend on the path taken to reach it, so
/// nodes are shared by face: the structure is a DAG with one node per face.
/// Node ids are assigned level by level (largest faces first), ascending by
/// face mask within a level; the root is node 0.
#[derive(Debug, Clone)]
pub struct DecompositionTree {
    domain: Domain,
    nodes: Vec<TreeNode>,
    by_face: HashMap<u64, usize>,
}

impl DecompositionTree {
    pub fn build(r: &Relation) -> Result<DecompositionTree> {
        DecompositionTree::build_with(r, Execution::default())
    }

    /// Builds the tree, analysing all faces of one level concurrently under
    /// [`Execution::Parallel`].
    pub fn build_with(r: &Relation, exec: Execution) -> Result<DecompositionTree> {
        let domain = r.domain().clone();
        if domain.len() > 64 {
            return Err(Error::Unsupported(format!(
                "decomposition of a {}-point relation",
                domain.len()
            )));
        }
        struct Pending {
            mask: u64,
            relation: Relation,
            status: Status,
            child_masks: Vec<u64>,
            principal_factor: Option<Relation>,
        }

        let mut done: Vec<Pending> = Vec::new();
        let mut level: BTreeMap<u64, Relation> = BTreeMap::new();
        level.insert(domain.full_mask(), r.clone());
        while !level.is_empty() {
            let items: Vec<(u64, Relation)> = level.into_iter().collect();
            let analysed = exec.map(items, |(mask, rel)| -> Result<(Pending, Vec<(u64, Relation)>)> {
                let (status, consequences, pf) = analyze(&rel)?;
                let mut kids = Vec::with_capacity(consequences.len());
                for c in consequences {
                    kids.push((domain.mask_of(c.face())?, c.relation));
                }
                let pending = Pending {
                    mask,
                    relation: rel,
                    status,
                    child_masks: kids.iter().map(|(m, _)| *m).collect(),
                    principal_factor: pf,
                };
                Ok((pending, kids))
            });
            level = BTreeMap::new();
            for item in analysed {
                let (pending, kids) = item?;
                for (m, rel) in kids {
                    level.entry(m).or_insert(rel);
                }
                done.push(pending);
            }
        }

        let by_face: HashMap<u64, usize> = done.iter().enumerate().map(|(i, p)| (p.mask, i)).collect();
        let nodes = done
            .into_iter()
            .map(|p| TreeNode {
                face_mask: p.mask,
                children: p.child_masks.iter().map(|m| by_face[m]).collect(),
                relation: p.relation,
                status: p.status,
                principal_factor: p.principal_factor,
            })
            .collect();
        Ok(DecompositionTree {
            domain,
            nodes,
            by_face,
        })
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn root(&self) -> &TreeNode {
        &self.nodes[0]
    }

    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn node(&self, id: usize) -> &TreeNode {
        &self.nodes[id]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Node carrying exactly the given face, if the decomposition reaches it.
    pub fn node_for_face(&self, face: &Domain) -> Option<&TreeNode> {
        let mask = self.domain.mask_of(face).ok()?;
        if mask.count_ones() as usize != face.len() {
            return None;
        }
        self.by_face.get(&mask).map(|&i| &self.nodes[i])
    }

    /// Nodes without children.
    pub fn leaves(&self) -> impl Iterator<Item = &TreeNode> {
        self.nodes.iter().filter(|n| n.children.is_empty())
    }

    pub fn prime_leaves(&self) -> impl Iterator<Item = &TreeNode> {
        self.leaves().filter(|n| n.status == Status::Prime)
    }

    /// Direct children of the root.
    pub fn root_children(&self) -> impl Iterator<Item = &TreeNode> {
        self.root().children.iter().map(|&i| &self.nodes[i])
    }

    /// Number of edges on the longest root-to-leaf path.
    pub fn depth(&self) -> usize {
        let mut depth = vec![0usize; self.nodes.len()];
        // children always have larger ids than their parents
        for id in (0..self.nodes.len()).rev() {
            depth[id] = self.nodes[id]
                .children
                .iter()
                .map(|&c| depth[c] + 1)
                .max()
                .unwrap_or(0);
        }
        depth.first().copied().unwrap_or(0)
    }
}

/// Consequences grouped up to permutations of a set of interchangeable points.
#[derive(Debug, Clone)]
pub struct SymmetryClass {
    pub representative: Relation,
    pub members: Vec<Relation>,
}

/// Groups relations into classes related by a permutation of `symmetric`.
///
/// Two relations fall in the same class when a permutation of the
/// symmetric points maps one onto the other (faces included). Classes keep
/// the order of first appearance.
pub fn group_by_symmetry<S: AsRef<str>>(relations: &[Relation], symmetric: &[S]) -> Result<Vec<SymmetryClass>> {
    let symmetric: Vec<&str> = symmetric.iter().map(AsRef::as_ref).collect();
    let mut classes: Vec<SymmetryClass> = Vec::new();
    let mut index: HashMap<SymmetryKey, usize> = HashMap::new();
    for r in relations {
        let key = symmetry_key(r, &symmetric)?;
        match index.get(&key) {
            Some(&i) => classes[i].members.push(r.clone()),
            None => {
                index.insert(key, classes.len());
                classes.push(SymmetryClass {
                    representative: r.clone(),
                    members: vec![r.clone()],
                });
            }
        }
    }
    Ok(classes)
}

/// Face pattern (`None` marks a symmetric slot) plus the canonical bit table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct SymmetryKey {
    q: u32,
    pattern: Vec<Option<String>>,
    bits: String,
}

/// Largest number of symmetric points handled by exhaustive permutation.
const MAX_PERMUTED_POINTS: usize = 8;

fn symmetry_key(r: &Relation, symmetric: &[&str]) -> Result<SymmetryKey> {
    let names = r.domain().points();
    let slots: Vec<usize> = (0..names.len())
        .filter(|&i| symmetric.contains(&names[i].as_str()))
        .collect();
    let pattern = names
        .iter()
        .map(|n| (!symmetric.contains(&n.as_str())).then(|| n.clone()))
        .collect();

    let permuted_bits = |perm: &[usize]| -> Result<String> {
        let mut order: Vec<&str> = names.iter().map(String::as_str).collect();
        for (j, &slot) in slots.iter().enumerate() {
            order[slot] = names[slots[perm[j]]].as_str();
        }
        Ok(r.permute_points(&order)?.bit_string())
    };

    let m = slots.len();
    let own = r.bit_string();
    // adjacent transpositions generate the symmetric group
    let invariant = (0..m.saturating_sub(1)).try_fold(true, |acc, j| -> Result<bool> {
        if !acc {
            return Ok(false);
        }
        let mut perm: Vec<usize> = (0..m).collect();
        perm.swap(j, j + 1);
        Ok(permuted_bits(&perm)? == own)
    })?;
    let bits = if invariant {
        own
    } else if m <= MAX_PERMUTED_POINTS {
        let mut best = own;
        let mut perm: Vec<usize> = (0..m).collect();
        for_each_permutation(&mut perm, &mut |p| {
            let b = permuted_bits(p)?;
            if b < best {
                best = b;
            }
            Ok(())
        })?;
        best
    } else {
        return Err(Error::Unsupported(format!(
            "symmetry grouping over {m} non-interchangeable points (limit {MAX_PERMUTED_POINTS})"
        )));
    };
    Ok(SymmetryKey {
        q: r.q(),
        pattern,
        bits,
    })
}

/// Heap's algorithm.
fn for_each_permutation(items: &mut [usize], f: &mut impl FnMut(&[usize]) -> Result<()>) -> Result<()> {
    let n = items.len();
    let mut c = vec![0usize; n];
    f(items)?;
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            f(items)?;
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(points: &[&str], q: u32, bits: &str) -> Relation {
        Relation::from_bit_str(Domain::new(points.iter().copied(), q).unwrap(), bits).unwrap()
    }

    fn rule(bits: &str) -> Relation {
        rel(&["p", "q", "r", "s"], 2, bits)
    }

    const RULE30: &str = "1001010101101010";
    const RULE110: &str = "1100000100111110";
    const RULE90: &str = "1010010101011010";
    const RULE150: &str = "1001011001101001";
    const RULE105: &str = "0110100110010110";

    fn faces(entries: &[ConsequenceEntry]) -> Vec<(String, String)> {
        entries
            .iter()
            .map(|e| (e.face().points().concat(), e.relation.bit_string()))
            .collect()
    }

    #[test]
    fn base_relation_examples() {
        let incompatible = base_relation(&[rel(&["x"], 2, "10"), rel(&["x"], 2, "01")]).unwrap();
        assert!(incompatible.is_empty());
        assert_eq!(incompatible.bit_string(), "00");

        let chain = base_relation(&[rel(&["a", "b"], 2, "1001"), rel(&["b", "c"], 2, "1001")]).unwrap();
        assert_eq!(chain.domain().points(), ["a", "b", "c"]);
        assert_eq!(chain.bit_string(), "10000001");

        let r = rule(RULE30);
        assert_eq!(base_relation(std::slice::from_ref(&r)).unwrap(), r);

        assert!(matches!(
            base_relation(&[rel(&["x"], 2, "10"), rel(&["x"], 3, "100")]),
            Err(Error::DomainMismatch(_))
        ));
    }

    #[test]
    fn rule30_consequences() {
        let c = codim1_consequences(&rule(RULE30)).unwrap();
        assert_eq!(
            faces(&c),
            vec![
                ("pqs".to_string(), "11011110".to_string()),
                ("prs".to_string(), "11011110".to_string())
            ]
        );
        let all = proper_consequences(&rule(RULE30)).unwrap();
        assert!(all.iter().all(|e| e.face().len() < 3 || faces(&c).iter().any(|f| f.0 == e.face().points().concat())));
    }

    #[test]
    fn rule110_consequences() {
        let c = codim1_consequences(&rule(RULE110)).unwrap();
        assert_eq!(
            faces(&c),
            vec![
                ("pqs".to_string(), "11011111".to_string()),
                ("prs".to_string(), "11011111".to_string()),
                ("qrs".to_string(), "10010111".to_string())
            ]
        );
    }

    #[test]
    fn prime_rules_have_no_consequences() {
        assert!(proper_consequences(&rule(RULE150)).unwrap().is_empty());
        assert!(is_prime(&rule(RULE150)).unwrap());
        assert!(is_prime(&rule(RULE105)).unwrap());
        assert!(!is_prime(&rule(RULE30)).unwrap());
        assert!(is_prime(&rel(&["a"], 3, "010")).unwrap());
    }

    #[test]
    fn principal_factor_examples() {
        let r30 = rule(RULE30);
        let c = codim1_consequences(&r30).unwrap();
        assert_eq!(principal_factor(&r30, &c).unwrap().bit_string(), "1011111101111111");

        let r110 = rule(RULE110);
        let c = codim1_consequences(&r110).unwrap();
        assert_eq!(principal_factor(&r110, &c).unwrap().bit_string(), "1111111111111110");

        let r90 = rule(RULE90);
        let c = codim1_consequences(&r90).unwrap();
        assert!(principal_factor(&r90, &c).unwrap().is_trivial());

        let bogus = ConsequenceEntry {
            relation: rel(&["p", "s"], 2, "1000"),
        };
        assert!(matches!(
            principal_factor(&r30, &[bogus]),
            Err(Error::NotAConsequence { .. })
        ));
    }

    #[test]
    fn canonical_decomposition_examples() {
        let d = canonical_decomposition(&rule(RULE30)).unwrap();
        assert_eq!(d.consequences.len(), 2);
        assert_eq!(d.reconstruct().unwrap(), rule(RULE30));

        let d = canonical_decomposition(&rule(RULE105)).unwrap();
        assert!(d.consequences.is_empty());
        assert_eq!(d.principal_factor, rule(RULE105));

        let d = canonical_decomposition(&rule(RULE90)).unwrap();
        assert_eq!(faces(&d.consequences), vec![("prs".to_string(), "10010110".to_string())]);
        assert!(d.principal_factor.is_trivial());

        let dom = Domain::new(["p", "q"], 2).unwrap();
        assert_eq!(
            canonical_decomposition(&Relation::empty(dom.clone())).unwrap_err(),
            Error::EmptyRelation
        );
        assert_eq!(
            canonical_decomposition(&Relation::trivial(dom)).unwrap_err(),
            Error::TrivialRelation
        );
    }

    #[test]
    fn reducibility_examples() {
        assert!(is_reducible(&rule(RULE90)).unwrap());
        assert!(!is_reducible(&rule(RULE30)).unwrap());
        assert_eq!(classify(&rule(RULE30)).unwrap(), Status::Irreducible);
        assert_eq!(classify(&rule(RULE150)).unwrap(), Status::Prime);
        assert_eq!(classify(&rule(RULE90)).unwrap(), Status::Reducible);
        let dom = Domain::new(["p"], 2).unwrap();
        assert_eq!(classify(&Relation::empty(dom.clone())).unwrap(), Status::Empty);
        assert_eq!(classify(&Relation::trivial(dom)).unwrap(), Status::Trivial);
    }

    #[test]
    fn consequence_count() {
        let dom = Domain::new(["p", "q", "r", "s"], 2).unwrap();
        assert_eq!(count_consequences(&Relation::trivial(dom)), BigUint::from(1u8));
        assert_eq!(count_consequences(&rule(RULE30)), BigUint::from(256u32));
    }

    #[test]
    fn tree_for_prime_and_reducible() {
        let t = DecompositionTree::build(&rule(RULE150)).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.root().status, Status::Prime);
        assert!(t.root().principal_factor.is_none());

        let t = DecompositionTree::build(&rule("0101010110101010")).unwrap();
        assert_eq!(t.root().status, Status::Reducible);
        let leaves: Vec<_> = t.prime_leaves().collect();
        assert_eq!(leaves.len(), 1);
        assert_eq!(leaves[0].relation.domain().points(), ["p", "s"]);
        assert_eq!(leaves[0].relation.bit_string(), "0110");
        assert_eq!(t.depth(), 2);
        let ps = Domain::new(["p", "s"], 2).unwrap();
        assert!(t.node_for_face(&ps).is_some());
    }

    #[test]
    fn prune_keeps_only_strongest_faces() {
        let all = proper_consequences(&rule(RULE90)).unwrap();
        let pruned = prune_implied(&all);
        assert_eq!(faces(&pruned), vec![("prs".to_string(), "10010110".to_string())]);
    }

    #[test]
    fn symmetry_groups_mirror_faces() {
        let r30 = rule(RULE30);
        let c: Vec<Relation> = codim1_consequences(&r30).unwrap().into_iter().map(|e| e.relation).collect();
        let classes = group_by_symmetry(&c, &["q", "r"]).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].members.len(), 2);
        let none = group_by_symmetry(&c, &[] as &[&str]).unwrap();
        assert_eq!(none.len(), 2);
    }

    #[test]
    fn symmetry_key_handles_asymmetric_relations() {
        // a -> b implication is not symmetric in a, b
        let imp_ab = rel(&["a", "b", "c"], 2, "11011101");
        let imp_ba = imp_ab.permute_points(&["b", "a", "c"]).unwrap();
        let imp_ba = Relation::from_bit_str(imp_ab.domain().clone(), &imp_ba.bit_string()).unwrap();
        let classes = group_by_symmetry(&[imp_ab, imp_ba], &["a", "b"]).unwrap();
        assert_eq!(classes.len(), 1);
    }

    #[test]
    fn heap_visits_every_permutation() {
        let mut seen = std::collections::HashSet::new();
        let mut items = vec![0, 1, 2, 3];
        for_each_permutation(&mut items, &mut |p| {
            seen.insert(p.to_vec());
            Ok(())
        })
        .unwrap();
        assert_eq!(seen.len(), 24);
    }
}
