//! Relations as bit tables over `S^δ`, with the primitive set operations.

use std::fmt;

use crate::bits::BitTable;
use crate::domain::Domain;
use crate::error::{Error, Result};

/// Little-endian base-`q` ordinal of a state tuple: `Σ states[j] · q^j`.
pub fn encode_point(states: &[u32], q: u32) -> Result<usize> {
    if q < 2 {
        return Err(Error::StateCount(q));
    }
    let mut ordinal = 0usize;
    let mut weight = 1usize;
    for (j, &s) in states.iter().enumerate() {
        if s >= q {
            return Err(Error::StateOutOfRange { state: s, q });
        }
        ordinal = weight
            .checked_mul(s as usize)
            .and_then(|v| ordinal.checked_add(v))
            .ok_or(Error::TooLarge {
                q,
                k: states.len(),
                limit: usize::MAX as u64,
            })?;
        if j + 1 < states.len() {
            weight = weight.checked_mul(q as usize).ok_or(Error::TooLarge {
                q,
                k: states.len(),
                limit: usize::MAX as u64,
            })?;
        }
    }
    Ok(ordinal)
}

/// Inverse of [`encode_point`] for a `k`-point tuple.
pub fn decode_point(ordinal: usize, k: usize, q: u32) -> Result<Vec<u32>> {
    if q < 2 {
        return Err(Error::StateCount(q));
    }
    let cells = u32::try_from(k)
        .ok()
        .and_then(|k| (q as usize).checked_pow(k));
    if let Some(cells) = cells {
        if ordinal >= cells {
            return Err(Error::OrdinalOutOfRange { ordinal, cells });
        }
    }
    let mut rest = ordinal;
    let states = (0..k)
        .map(|_| {
            let s = (rest % q as usize) as u32;
            rest /= q as usize;
            s
        })
        .collect();
    Ok(states)
}

/// Maps every ordinal of a `cells`-cell table (in order) to `Σ digit_j · weights[j]`.
///
/// This is how cells of one domain are addressed inside another domain's
/// bit table; a zero weight drops the corresponding digit.
pub(crate) fn remap_ordinals(
    q: u32,
    cells: usize,
    weights: &[usize],
) -> impl Iterator<Item = usize> + '_ {
    let mut digits = vec![0u32; weights.len()];
    let mut value = 0usize;
    let mut first = true;
    (0..cells).map(move |_| {
        if first {
            first = false;
            return value;
        }
        for (j, d) in digits.iter_mut().enumerate() {
            *d += 1;
            value += weights[j];
            if *d < q {
                break;
            }
            *d = 0;
            value -= weights[j] * q as usize;
        }
        value
    })
}

/// A subset of the hypercube `S^δ`, stored as its characteristic bit table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    domain: Domain,
    bits: BitTable,
}

impl Relation {
    pub fn new(domain: Domain, bits: BitTable) -> Result<Relation> {
        if bits.len() != domain.cells() {
            return Err(Error::BitLength {
                expected: domain.cells(),
                got: bits.len(),
            });
        }
        Ok(Relation { domain, bits })
    }

    /// Builds a relation from a `0`/`1` string, ordinal 0 first.
    pub fn from_bit_str(domain: Domain, bits: &str) -> Result<Relation> {
        let bits = bits.trim();
        let len = bits.chars().count();
        if len != domain.cells() {
            return Err(Error::BitLength {
                expected: domain.cells(),
                got: len,
            });
        }
        let mut table = BitTable::zeros(len);
        for (i, c) in bits.chars().enumerate() {
            match c {
                '0' => {}
                '1' => table.set(i, true),
                other => {
                    return Err(Error::Format {
                        line: 0,
                        message: format!("invalid bit `{other}` at position {i}"),
                    })
                }
            }
        }
        Ok(Relation {
            domain,
            bits: table,
        })
    }

    /// The empty relation `∅^δ`.
    pub fn empty(domain: Domain) -> Relation {
        let bits = BitTable::zeros(domain.cells());
        Relation { domain, bits }
    }

    /// The trivial relation `S^δ`.
    pub fn trivial(domain: Domain) -> Relation {
        let bits = BitTable::ones(domain.cells());
        Relation { domain, bits }
    }

    /// Relation holding exactly the tuples accepted by `member`.
    pub fn from_fn(domain: Domain, mut member: impl FnMut(&[u32]) -> bool) -> Relation {
        let q = domain.q();
        let mut states = vec![0u32; domain.len()];
        let bits = BitTable::from_fn(domain.cells(), |i| {
            if i > 0 {
                for s in states.iter_mut() {
                    *s += 1;
                    if *s < q {
                        break;
                    }
                    *s = 0;
                }
            }
            member(&states)
        });
        Relation { domain, bits }
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn bits(&self) -> &BitTable {
        &self.bits
    }

    pub fn q(&self) -> u32 {
        self.domain.q()
    }

    pub fn arity(&self) -> usize {
        self.domain.len()
    }

    pub fn contains(&self, states: &[u32]) -> Result<bool> {
        if states.len() != self.arity() {
            return Err(Error::Arity {
                expected: self.arity(),
                got: states.len(),
            });
        }
        Ok(self.bits.get(encode_point(states, self.q())?))
    }

    #[inline]
    pub fn contains_ordinal(&self, ordinal: usize) -> bool {
        self.bits.get(ordinal)
    }

    pub fn cardinality(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.all_zero()
    }

    pub fn is_trivial(&self) -> bool {
        self.bits.all_ones()
    }

    pub fn intersect(&self, other: &Relation) -> Result<Relation> {
        self.domain.require_same(&other.domain)?;
        Ok(self.with_bits(self.bits.and(&other.bits)))
    }

    pub fn union(&self, other: &Relation) -> Result<Relation> {
        self.domain.require_same(&other.domain)?;
        Ok(self.with_bits(self.bits.or(&other.bits)))
    }

    pub fn complement(&self) -> Relation {
        self.with_bits(self.bits.not())
    }

    pub fn is_subset_of(&self, other: &Relation) -> Result<bool> {
        self.domain.require_same(&other.domain)?;
        Ok(self.bits.is_subset(&other.bits))
    }

    /// Cylinder `R^τ × S^{δ∖τ}` over a domain containing every point of `R`.
    ///
    /// The superdomain may list the points in any order, so this also
    /// reorders when both domains carry the same point set.
    pub fn extend(&self, superdomain: &Domain) -> Result<Relation> {
        if superdomain.q() != self.q() {
            return Err(Error::DomainMismatch(format!(
                "cannot extend a q = {} relation to a q = {} domain",
                self.q(),
                superdomain.q()
            )));
        }
        if let Some(missing) = self.domain.points().iter().find(|n| !superdomain.contains(n)) {
            return Err(Error::UnknownPoint(missing.clone()));
        }
        if superdomain == &self.domain {
            return Ok(self.clone());
        }
        let own = self.domain.weights();
        let weights: Vec<usize> = superdomain
            .points()
            .iter()
            .map(|n| self.domain.index_of(n).map_or(0, |i| own[i]))
            .collect();
        let mut bits = BitTable::zeros(superdomain.cells());
        for (i, src) in remap_ordinals(superdomain.q(), superdomain.cells(), &weights).enumerate() {
            if self.bits.get(src) {
                bits.set(i, true);
            }
        }
        Ok(Relation {
            domain: superdomain.clone(),
            bits,
        })
    }

    /// Strongest consequence on a face: tuples of `subdomain` that extend to
    /// some member of `self`.
    pub fn project(&self, subdomain: &Domain) -> Result<Relation> {
        if subdomain.q() != self.q() {
            return Err(Error::DomainMismatch(format!(
                "cannot project a q = {} relation to a q = {} domain",
                self.q(),
                subdomain.q()
            )));
        }
        let parent_weights = self.domain.weights();
        let mut face_weights = Vec::with_capacity(subdomain.len());
        for n in subdomain.points() {
            face_weights.push(parent_weights[self.domain.position(n)?]);
        }
        if subdomain.len() == self.arity() {
            // same point set: projection is a reorder
            return self.extend(subdomain);
        }
        let fiber_weights: Vec<usize> = self
            .domain
            .points()
            .iter()
            .zip(&parent_weights)
            .filter(|(n, _)| !subdomain.contains(n))
            .map(|(_, &w)| w)
            .collect();
        let fiber_cells = self.domain.cells() / subdomain.cells();
        let offsets: Vec<usize> = remap_ordinals(self.q(), fiber_cells, &fiber_weights).collect();
        let mut bits = BitTable::zeros(subdomain.cells());
        for (i, base) in remap_ordinals(subdomain.q(), subdomain.cells(), &face_weights).enumerate() {
            if offsets.iter().any(|&o| self.bits.get(base + o)) {
                bits.set(i, true);
            }
        }
        Ok(Relation {
            domain: subdomain.clone(),
            bits,
        })
    }

    /// Projection onto the named points, taken in the given order.
    pub fn project_onto<S: AsRef<str>>(&self, names: &[S]) -> Result<Relation> {
        let face = self.domain.select(names)?;
        self.project(&face)
    }

    /// Same relation over the points listed in a new order.
    ///
    /// `order` must be a permutation of the domain's points. A tuple `t` on
    /// the new order is a member iff the tuple it induces on the old order is.
    pub fn permute_points<S: AsRef<str>>(&self, order: &[S]) -> Result<Relation> {
        if order.len() != self.arity() {
            return Err(Error::NotPermutation(format!(
                "{} names given for {} points",
                order.len(),
                self.arity()
            )));
        }
        let target = self.domain.select(order).map_err(|e| match e {
            Error::DuplicatePoint(n) => Error::NotPermutation(format!("`{n}` repeated")),
            Error::UnknownPoint(n) => Error::NotPermutation(format!("`{n}` not in domain")),
            other => other,
        })?;
        self.extend(&target)
    }

    /// Reorders onto a domain with the same point set.
    pub fn reorder_like(&self, target: &Domain) -> Result<Relation> {
        if !self.domain.same_points(target) {
            return Err(Error::DomainMismatch(format!(
                "{} and {target} have different points",
                self.domain
            )));
        }
        self.extend(target)
    }

    /// Member tuples in increasing ordinal order.
    pub fn tuples(&self) -> impl Iterator<Item = Vec<u32>> + '_ {
        let (k, q) = (self.arity(), self.q());
        self.bits
            .ones_iter()
            .map(move |i| decode_point(i, k, q).expect("ordinal within table"))
    }

    pub fn bit_string(&self) -> String {
        self.bits.to_string()
    }

    fn with_bits(&self, bits: BitTable) -> Relation {
        Relation {
            domain: self.domain.clone(),
            bits,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.domain, self.bits)
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Relation({}, q={}, {})", self.domain, self.q(), self.bits)
    }
}
