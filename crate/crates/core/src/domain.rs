use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Default upper bound on `q^k`, the number of cells in a bit table.
pub const DEFAULT_CELL_LIMIT: u64 = 1 << 32;

/// Ordered set of named points sharing one state alphabet `{0, .., q-1}`.
///
/// Point order fixes the bit-table indexing: the first point carries the
/// least significant base-`q` digit of a cell ordinal. Two domains are
/// equal only when they list the same points in the same order with the
/// same `q`; use [`Relation::permute_points`](crate::Relation::permute_points)
/// to move between orderings.
#[derive(Clone)]
pub struct Domain {
    inner: Arc<Inner>,
}

struct Inner {
    points: Vec<String>,
    index: HashMap<String, usize>,
    q: u32,
    cells: usize,
}

impl Domain {
    pub fn new<I, S>(points: I, q: u32) -> Result<Domain>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Domain::with_limit(points, q, DEFAULT_CELL_LIMIT)
    }

    /// Like [`Domain::new`] with an explicit bound on the number of cells.
    pub fn with_limit<I, S>(points: I, q: u32, limit: u64) -> Result<Domain>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        if q < 2 {
            return Err(Error::StateCount(q));
        }
        let points: Vec<String> = points.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(points.len());
        for (i, name) in points.iter().enumerate() {
            validate_name(name)?;
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicatePoint(name.clone()));
            }
        }
        let k = points.len();
        let too_large = || Error::TooLarge { q, k, limit };
        let cells = u32::try_from(k)
            .ok()
            .and_then(|k| u64::from(q).checked_pow(k))
            .filter(|&c| c <= limit)
            .ok_or_else(too_large)?;
        let cells = usize::try_from(cells).map_err(|_| too_large())?;
        Ok(Domain {
            inner: Arc::new(Inner {
                points,
                index,
                q,
                cells,
            }),
        })
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.inner.q
    }

    /// Number of points `k`.
    #[inline]
    pub fn len(&self) -> usize {
        self.inner.points.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.inner.points.is_empty()
    }

    /// Number of hypercube cells, `q^k`.
    #[inline]
    pub fn cells(&self) -> usize {
        self.inner.cells
    }

    pub fn points(&self) -> &[String] {
        &self.inner.points
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.inner.index.get(name).copied()
    }

    pub fn position(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownPoint(name.to_string()))
    }

    pub fn contains(&self, name: &str) -> bool {
        self.inner.index.contains_key(name)
    }

    /// Ordinal weight `q^j` of each point.
    pub fn weights(&self) -> Vec<usize> {
        let q = self.q() as usize;
        let mut w = 1usize;
        (0..self.len())
            .map(|_| {
                let cur = w;
                w = w.saturating_mul(q);
                cur
            })
            .collect()
    }

    /// Domain on the listed points (in the given order) with the same `q`.
    pub fn select<S: AsRef<str>>(&self, names: &[S]) -> Result<Domain> {
        for n in names {
            self.position(n.as_ref())?;
        }
        Domain::new(names.iter().map(|n| n.as_ref().to_string()), self.q())
    }

    /// Face holding the points whose bit is set in `mask`, in this domain's order.
    pub fn face(&self, mask: u64) -> Domain {
        let names: Vec<&str> = self
            .points()
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, n)| n.as_str())
            .collect();
        // a subset of a valid domain is always valid
        Domain::new(names, self.q()).expect("face of a valid domain")
    }

    /// Bit mask of `other`'s points inside `self`.
    pub fn mask_of(&self, other: &Domain) -> Result<u64> {
        if self.len() > 64 {
            return Err(Error::Unsupported(format!(
                "face masks need at most 64 points, domain has {}",
                self.len()
            )));
        }
        other.points().iter().try_fold(0u64, |m, n| {
            Ok(m | 1 << self.position(n)?)
        })
    }

    /// Mask with every point of this domain set.
    pub fn full_mask(&self) -> u64 {
        if self.len() >= 64 {
            u64::MAX
        } else {
            (1u64 << self.len()) - 1
        }
    }

    /// True when every point of `self` is a point of `other` (order ignored).
    pub fn is_subset_of(&self, other: &Domain) -> bool {
        self.points().iter().all(|n| other.contains(n))
    }

    /// Same point set, possibly in a different order.
    pub fn same_points(&self, other: &Domain) -> bool {
        self.len() == other.len() && self.is_subset_of(other)
    }

    /// Union of point lists in first-appearance order.
    pub fn union<'a>(domains: impl IntoIterator<Item = &'a Domain>) -> Result<Domain> {
        let mut names: Vec<String> = Vec::new();
        let mut q = None;
        for d in domains {
            match q {
                None => q = Some(d.q()),
                Some(prev) if prev != d.q() => {
                    return Err(Error::DomainMismatch(format!(
                        "state counts differ: {prev} and {}",
                        d.q()
                    )))
                }
                _ => {}
            }
            for n in d.points() {
                if !names.contains(n) {
                    names.push(n.clone());
                }
            }
        }
        let q = q.ok_or_else(|| Error::DomainMismatch("no domains given".into()))?;
        Domain::new(names, q)
    }

    pub(crate) fn require_same(&self, other: &Domain) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::DomainMismatch(format!(
                "{self} (q = {}) vs {other} (q = {})",
                self.q(),
                other.q()
            )))
        }
    }
}

fn validate_name(name: &str) -> Result<()> {
    let mut chars = name.chars();
    let ok = match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {
            chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        }
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::PointName(name.to_string()))
    }
}

impl PartialEq for Domain {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.q == other.inner.q && self.inner.points == other.inner.points)
    }
}

impl Eq for Domain {}

impl Hash for Domain {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.inner.q.hash(state);
        self.inner.points.hash(state);
    }
}

/// `{p,q,s}`
impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.points().join(","))
    }
}

impl fmt::Debug for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Domain({self}, q={})", self.q())
    }
}
