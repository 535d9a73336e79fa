//! Polynomials over a prime field `GF(p)` in normal form, and the bridge
//! between relations and their characteristic polynomials.
//!
//! Every exponent is kept below `p` (using `x^p = x`), so a polynomial is a
//! function table in disguise: the `p^k` coefficients and the `p^k` values
//! determine each other. [`relation_to_polynomial`] picks the polynomial that
//! is `0` on the relation and `1` elsewhere; for `p = 2` this is the unique
//! polynomial whose zero set is the relation (its algebraic normal form).
//!
//! Printing uses graded order: higher total degree first, ties broken
//! lexicographically with later variables more significant. For variables
//! `p, q, r, s` this prints `qrs+pqr+rs+qs+pr+pq+s+p`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::par::Execution;
use crate::relation::Relation;

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let n = u64::from(n);
    (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; callers guarantee p prime and a != 0 mod p
    pow_mod(a, p - 2, p)
}

/// Reduces an exponent with `x^p = x`: any positive exponent lands in `1..p`.
fn reduce_exponent(e: u32, p: u32) -> u32 {
    if e == 0 {
        0
    } else {
        (e - 1) % (p - 1) + 1
    }
}

/// Monomials of one display group keyed by symmetric degree.
type ByDegree = BTreeMap<u32, Vec<Vec<u32>>>;

/// Multilinear-in-`GF(p)` polynomial: exponents `< p`, nonzero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    modulus: u32,
    variables: Vec<String>,
    terms: BTreeMap<Vec<u32>, u32>,
}

impl Polynomial {
    pub fn zero<S: Into<String>>(modulus: u32, variables: impl IntoIterator<Item = S>) -> Result<Polynomial> {
        if !is_prime(modulus) {
            return Err(Error::NotPrime(modulus));
        }
        Ok(Polynomial {
            modulus,
            variables: variables.into_iter().map(Into::into).collect(),
            terms: BTreeMap::new(),
        })
    }

    /// Collects `(exponents, coefficient)` pairs into normal form.
    pub fn from_terms<S: Into<String>>(
        modulus: u32,
        variables: impl IntoIterator<Item = S>,
        terms: impl IntoIterator<Item = (Vec<u32>, u32)>,
    ) -> Result<Polynomial> {
        let mut poly = Polynomial::zero(modulus, variables)?;
        for (exps, coef) in terms {
            if exps.len() != poly.variables.len() {
                return Err(Error::Arity {
                    expected: poly.variables.len(),
                    got: exps.len(),
                });
            }
            poly.add_term(exps, coef);
        }
        Ok(poly)
    }

    fn add_term(&mut self, mut exps: Vec<u32>, coef: u32) {
        let p = self.modulus;
        for e in exps.iter_mut() {
            *e = reduce_exponent(*e, p);
        }
        let c = coef % p;
        if c == 0 {
            return;
        }
        let v = (self.terms.get(&exps).copied().unwrap_or(0) + c) % p;
        if v == 0 {
            self.terms.remove(&exps);
        } else {
            self.terms.insert(exps, v);
        }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    /// Monomial exponent tuples with their coefficients.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], u32)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Monomials rendered individually (`"qr"`, `"2p^2"`, `"1"`).
    pub fn monomial_strings(&self) -> Vec<String> {
        self.sorted_terms()
            .into_iter()
            .map(|(e, c)| self.format_monomial(e, c))
            .collect()
    }

    /// Value at a point given in variable order.
    pub fn eval(&self, values: &[u32]) -> Result<u32> {
        if values.len() != self.variables.len() {
            return Err(Error::Arity {
                expected: self.variables.len(),
                got: values.len(),
            });
        }
        let p = u64::from(self.modulus);
        let mut acc = 0u64;
        for (exps, &c) in &self.terms {
            let mut m = u64::from(c);
            for (&v, &e) in values.iter().zip(exps) {
                if e > 0 {
                    m = m * pow_mod(u64::from(v), u64::from(e), p) % p;
                    if m == 0 {
                        break;
                    }
                }
            }
            acc = (acc + m) % p;
        }
        Ok(acc as u32)
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.require_compatible(other)?;
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.require_compatible(other)?;
        let mut out = Polynomial {
            terms: BTreeMap::new(),
            ..self.clone()
        };
        let p = u64::from(self.modulus);
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &other.terms {
                let exps = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, (u64::from(ca) * u64::from(cb) % p) as u32);
            }
        }
        Ok(out)
    }

    fn require_compatible(&self, other: &Polynomial) -> Result<()> {
        if self.modulus != other.modulus || self.variables != other.variables {
            return Err(Error::DomainMismatch(format!(
                "polynomials over GF({}) [{}] and GF({}) [{}]",
                self.modulus,
                self.variables.join(","),
                other.modulus,
                other.variables.join(",")
            )));
        }
        Ok(())
    }

    /// Parses `pqr+qr+s+r+q` style text.
    ///
    /// Terms are joined by `+`; each term is an optional leading integer
    /// coefficient followed by variable names, each optionally raised with
    /// `^e`. Names are matched greedily against `variables` (longest first),
    /// so `x9x0` splits into `x9 x0`. Whitespace and `*` are ignored.
    pub fn parse<S: AsRef<str>>(text: &str, variables: &[S], modulus: u32) -> Result<Polynomial> {
        let names: Vec<String> = variables.iter().map(|v| v.as_ref().to_string()).collect();
        let mut by_len: Vec<(usize, &str)> = names.iter().enumerate().map(|(i, n)| (i, n.as_str())).collect();
        by_len.sort_by_key(|(_, n)| std::cmp::Reverse(n.len()));
        let mut poly = Polynomial::zero(modulus, names.clone())?;
        let err = |message: String| Error::Format { line: 1, message };

        let cleaned: String = text.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
        if cleaned.is_empty() {
            return Err(err("empty polynomial".into()));
        }
        for term in cleaned.split('+') {
            if term.is_empty() {
                return Err(err(format!("empty term in `{text}`")));
            }
            let digits: String = term.chars().take_while(char::is_ascii_digit).collect();
            let mut rest = &term[digits.len()..];
            let coef = if digits.is_empty() {
                1
            } else {
                digits
                    .parse::<u64>()
                    .map(|c| (c % u64::from(modulus)) as u32)
                    .map_err(|e| err(format!("bad coefficient `{digits}`: {e}")))?
            };
            let mut exps = vec![0u32; names.len()];
            while !rest.is_empty() {
                let (idx, name) = by_len
                    .iter()
                    .find(|(_, n)| rest.starts_with(n))
                    .ok_or_else(|| err(format!("unknown variable at `{rest}` in term `{term}`")))?;
                rest = &rest[name.len()..];
                let mut e = 1u32;
                if let Some(after) = rest.strip_prefix('^') {
                    let ds: String = after.chars().take_while(char::is_ascii_digit).collect();
                    if ds.is_empty() {
                        return Err(err(format!("missing exponent in term `{term}`")));
                    }
                    e = ds.parse().map_err(|e| err(format!("bad exponent: {e}")))?;
                    rest = &after[ds.len()..];
                }
                exps[*idx] += e;
            }
            poly.add_term(exps, coef);
        }
        Ok(poly)
    }

    fn sorted_terms(&self) -> Vec<(&[u32], u32)> {
        let mut terms: Vec<(&[u32], u32)> = self.terms().collect();
        terms.sort_by(|a, b| graded_cmp(a.0, b.0));
        terms
    }

    fn format_monomial(&self, exps: &[u32], coef: u32) -> String {
        let mut s = String::new();
        for (name, &e) in self.variables.iter().zip(exps) {
            match e {
                0 => {}
                1 => s.push_str(name),
                e => {
                    s.push_str(name);
                    s.push('^');
                    s.push_str(&e.to_string());
                }
            }
        }
        match (s.is_empty(), coef) {
            (true, c) => c.to_string(),
            (false, 1) => s,
            (false, c) => format!("{c}{s}"),
        }
    }

    /// Display-only rendering that folds complete elementary symmetric
    /// polynomials over `symmetric` into `σk`.
    ///
    /// Monomials are grouped by their factor outside the symmetric set and
    /// by coefficient; inside a group, all `C(n, k)` square-free degree-`k`
    /// monomials in the symmetric variables collapse to `σk` (`σ0` prints as
    /// `1`). Anything that does not fill a whole `σk` is printed as is.
    pub fn symmetric_display<S: AsRef<str>>(&self, symmetric: &[S]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let is_sym: Vec<bool> = self
            .variables
            .iter()
            .map(|v| symmetric.iter().any(|s| s.as_ref() == v))
            .collect();
        let n = is_sym.iter().filter(|&&b| b).count();

        // (outer exponents, coefficient) -> symmetric-degree -> monomials
        let mut groups: BTreeMap<(Vec<u32>, u32), ByDegree> = BTreeMap::new();
        let mut loose: Vec<(Vec<u32>, u32)> = Vec::new();
        for (exps, &c) in &self.terms {
            let square_free = exps.iter().zip(&is_sym).all(|(&e, &s)| !s || e <= 1);
            if !square_free {
                loose.push((exps.clone(), c));
                continue;
            }
            let outer: Vec<u32> = exps.iter().zip(&is_sym).map(|(&e, &s)| if s { 0 } else { e }).collect();
            let d: u32 = exps.iter().zip(&is_sym).filter(|(_, &s)| s).map(|(&e, _)| e).sum();
            groups.entry((outer, c)).or_default().entry(d).or_default().push(exps.clone());
        }

        let mut rendered: Vec<(Vec<u32>, String)> = Vec::new();
        for ((outer, c), by_degree) in groups {
            let mut items: Vec<String> = Vec::new();
            for (&d, monos) in by_degree.iter().rev() {
                if monos.len() as u128 == binomial(n as u32, d) {
                    items.push(if d == 0 { "1".into() } else { format!("σ{d}") });
                } else {
                    let mut ms: Vec<&Vec<u32>> = monos.iter().collect();
                    ms.sort_by(|a, b| graded_cmp(a, b));
                    for m in ms {
                        let inner: Vec<u32> = m.iter().zip(&outer).map(|(a, b)| a - b).collect();
                        items.push(self.format_monomial(&inner, 1));
                    }
                }
            }
            let prefix = self.format_monomial(&outer, c);
            let body = items.join("+");
            let text = if outer.iter().all(|&e| e == 0) {
                if c == 1 {
                    body
                } else if items.len() == 1 {
                    format!("{c}{body}")
                } else {
                    format!("{c}{{{body}}}")
                }
            } else if items.len() == 1 && items[0] == "1" {
                prefix
            } else if items.len() == 1 {
                format!("{prefix}{}", items[0])
            } else {
                format!("{prefix}{{{body}}}")
            };
            rendered.push((outer, text));
        }
        for (exps, c) in loose {
            rendered.push((exps.clone(), self.format_monomial(&exps, c)));
        }
        rendered.sort_by(|a, b| graded_cmp(&a.0, &b.0));
        rendered.into_iter().map(|(_, t)| t).collect::<Vec<_>>().join("+")
    }
}

fn binomial(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * u128::from(n - i) / u128::from(i + 1))
}

/// Higher degree first; ties by exponent tuples read from the last variable.
fn graded_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    db.cmp(&da).then_with(|| b.iter().rev().cmp(a.iter().rev()))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        f.write_str(&self.monomial_strings().join("+"))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial(GF({}) [{}]: {self})", self.modulus, self.variables.join(","))
    }
}

/// Inverse of the Vandermonde matrix `V[a][e] = a^e` over `GF(p)`.
///
/// Row `e` of the result maps the values at `0..p` of a univariate
/// polynomial of degree `< p` to its coefficient of `x^e`.
fn inverse_vandermonde(p: u32) -> Vec<Vec<u64>> {
    let n = p as usize;
    let pm = u64::from(p);
    let mut m: Vec<Vec<u64>> = (0..n)
        .map(|a| {
            let mut row: Vec<u64> = (0..n).map(|e| pow_mod(a as u64, e as u64, pm)).collect();
            row.extend((0..n).map(|j| u64::from(j == a)));
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| m[r][col] != 0).expect("Vandermonde matrix is invertible");
        m.swap(col, pivot);
        let inv = inv_mod(m[col][col], pm);
        for x in m[col].iter_mut() {
            *x = *x * inv % pm;
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != col && row[col] != 0 {
                let f = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + pm - f * y % pm) % pm;
                }
            }
        }
    }
    m.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// Characteristic polynomial of a relation with prime `q`: zero exactly on
/// the relation, one elsewhere.
pub fn relation_to_polynomial(r: &Relation) -> Result<Polynomial> {
    relation_to_polynomial_with(r, Execution::Sequential)
}

/// Multivariate Lagrange interpolation done one axis at a time: on every
/// line along axis `j` the `q` values are replaced by the coefficients of
/// the univariate interpolant. Lines inside one `q^(j+1)` block are
/// independent, which is what the parallel mode splits on.
pub fn relation_to_polynomial_with(r: &Relation, exec: Execution) -> Result<Polynomial> {
    let p = r.q();
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let pm = u64::from(p);
    let mut data: Vec<u64> = (0..r.domain().cells())
        .map(|i| u64::from(!r.contains_ordinal(i)))
        .collect();
    let inv = inverse_vandermonde(p);
    let q = p as usize;
    let mut stride = 1usize;
    for _ in 0..r.arity() {
        let block = stride * q;
        exec.for_each_chunk_mut(&mut data, block, |chunk| {
            let mut vals = vec![0u64; q];
            for offset in 0..stride {
                for (a, v) in vals.iter_mut().enumerate() {
                    *v = chunk[offset + a * stride];
                }
                for (e, row) in inv.iter().enumerate() {
                    chunk[offset + e * stride] = row.iter().zip(&vals).map(|(m, v)| m * v % pm).sum::<u64>() % pm;
                }
            }
        });
        stride = block;
    }
    let k = r.arity();
    let terms = data.into_iter().enumerate().filter(|(_, c)| *c != 0).map(|(i, c)| {
        let mut rest = i;
        let exps = (0..k)
            .map(|_| {
                let e = (rest % q) as u32;
                rest /= q;
                e
            })
            .collect();
        (exps, c as u32)
    });
    Polynomial::from_terms(p, r.domain().points().iter().cloned(), terms)
}

/// Zero set of `poly` on `domain`; the polynomial's variables must be points
/// of the domain and its modulus must equal the domain's `q`.
pub fn polynomial_to_relation(poly: &Polynomial, domain: &Domain) -> Result<Relation> {
    if poly.modulus() != domain.q() {
        return Err(Error::DomainMismatch(format!(
            "polynomial over GF({}) on a q = {} domain",
            poly.modulus(),
            domain.q()
        )));
    }
    let positions: Vec<usize> = poly
        .variables()
        .iter()
        .map(|v| domain.position(v))
        .collect::<Result<_>>()?;
    let mut values = vec![0u32; positions.len()];
    Ok(Relation::from_fn(domain.clone(), |t| {
        for (v, &pos) in values.iter_mut().zip(&positions) {
            *v = t[pos];
        }
        poly.eval(&values).expect("arity matches by construction") == 0
    }))
}

/// `σ_k(values)`: sum over all `k`-subsets of the product, mod `p`.
pub fn elementary_symmetric(k: usize, values: &[u32], p: u32) -> Result<u32> {
    if k > values.len() {
        return Err(Error::OutOfRange {
            what: "symmetric degree",
            value: k as i64,
        });
    }
    let pm = u64::from(p);
    // e[j] = σ_j of the prefix seen so far
    let mut e = vec![0u64; k + 1];
    e[0] = 1 % pm;
    for &v in values {
        let v = u64::from(v) % pm;
        for j in (1..=k).rev() {
            e[j] = (e[j] + e[j - 1] * v) % pm;
        }
    }
    Ok(e[k] as u32)
}
