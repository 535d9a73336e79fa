//! Text records for relations.
//!
//! A file is a sequence of records separated by blank lines. Each record is
//! a list of `key = value` lines; `#` starts a comment line. A relation
//! record carries:
//!
//! ```text
//! # rule 30
//! q = 2
//! points = p q r s
//! bits = 1001010101101010
//! ```
//!
//! `points` may be separated by spaces or commas. `bits` lists all `q^k`
//! membership bits, ordinal 0 first. Instead of `bits` a record may give
//! `bits_hex`: one hex digit per four ordinals, the most significant bit of
//! digit `i` holding ordinal `4i` (so `bits = 1001` is `bits_hex = 9`);
//! padding bits past `q^k` must be zero. Any other keys are kept as
//! metadata, which is how reports attach `name`, `status` and the like.

use crate::bits::BitTable;
use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::relation::Relation;

/// Tables larger than this are written as `bits_hex`.
pub const MAX_PLAIN_BITS: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Record {
    fields: Vec<Field>,
    /// Line of the first field (1-based), 0 for records built in memory.
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Field {
    key: String,
    value: String,
    line: usize,
}

impl Record {
    pub fn new() -> Record {
        Record::default()
    }

    /// Record describing `r` (`q`, `points`, and `bits` or `bits_hex`).
    pub fn from_relation(r: &Relation) -> Record {
        let mut rec = Record::new();
        rec.push_relation(r);
        rec
    }

    pub fn push_relation(&mut self, r: &Relation) {
        self.push("q", r.q().to_string());
        self.push("points", r.domain().points().join(" "));
        if r.domain().cells() <= MAX_PLAIN_BITS {
            self.push("bits", r.bit_string());
        } else {
            self.push("bits_hex", bits_to_hex(r.bits()));
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<String>) -> Record {
        self.push(key, value);
        self
    }

    pub fn push(&mut self, key: &str, value: impl Into<String>) {
        self.fields.push(Field {
            key: key.to_string(),
            value: value.into(),
            line: 0,
        });
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.field(key).map(|f| f.value.as_str())
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.fields.iter().map(|f| f.key.as_str())
    }

    fn field(&self, key: &str) -> Option<&Field> {
        self.fields.iter().find(|f| f.key == key)
    }

    fn require(&self, key: &str) -> Result<&Field> {
        self.field(key).ok_or_else(|| Error::Format {
            line: self.line,
            message: format!("missing field `{key}`"),
        })
    }

    /// True when the record carries the fields of a relation.
    pub fn has_relation(&self) -> bool {
        self.field("points").is_some() && (self.field("bits").is_some() || self.field("bits_hex").is_some())
    }

    pub fn to_relation(&self) -> Result<Relation> {
        let q_field = self.require("q")?;
        let q: u32 = q_field.value.parse().map_err(|_| Error::Format {
            line: q_field.line,
            message: format!("field `q`: `{}` is not a non-negative integer", q_field.value),
        })?;
        let pts = self.require("points")?;
        let names: Vec<&str> = pts
            .value
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .collect();
        let at = |line: usize, field: &'static str| {
            move |e: Error| Error::Format {
                line,
                message: format!("field `{field}`: {e}"),
            }
        };
        let domain = Domain::new(names, q).map_err(at(pts.line, "points"))?;
        match (self.field("bits"), self.field("bits_hex")) {
            (Some(b), None) => Relation::from_bit_str(domain, &b.value).map_err(|e| match e {
                Error::Format { message, .. } => Error::Format {
                    line: b.line,
                    message: format!("field `bits`: {message}"),
                },
                other => at(b.line, "bits")(other),
            }),
            (None, Some(h)) => {
                let bits = hex_to_bits(&h.value, domain.cells()).map_err(|e| match e {
                    Error::Format { message, .. } => Error::Format {
                        line: h.line,
                        message: format!("field `bits_hex`: {message}"),
                    },
                    other => at(h.line, "bits_hex")(other),
                })?;
                Relation::new(domain, bits).map_err(at(h.line, "bits_hex"))
            }
            (Some(_), Some(h)) => Err(Error::Format {
                line: h.line,
                message: "both `bits` and `bits_hex` given".into(),
            }),
            (None, None) => Err(Error::Format {
                line: self.line,
                message: "missing field `bits` (or `bits_hex`)".into(),
            }),
        }
    }
}

/// Parses every record in `text`.
pub fn parse_records(text: &str) -> Result<Vec<Record>> {
    let mut records = Vec::new();
    let mut current = Record::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            if !current.fields.is_empty() {
                records.push(std::mem::take(&mut current));
            }
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| Error::Format {
            line: line_no,
            message: format!("expected `key = value`, found `{line}`"),
        })?;
        let key = key.trim();
        if key.is_empty() || !key.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-') {
            return Err(Error::Format {
                line: line_no,
                message: format!("invalid key `{key}`"),
            });
        }
        if current.field(key).is_some() {
            return Err(Error::Format {
                line: line_no,
                message: format!("duplicate field `{key}`"),
            });
        }
        if current.fields.is_empty() {
            current.line = line_no;
        }
        current.fields.push(Field {
            key: key.to_string(),
            value: value.trim().to_string(),
            line: line_no,
        });
    }
    if !current.fields.is_empty() {
        records.push(current);
    }
    Ok(records)
}

pub fn write_records(records: &[Record]) -> String {
    let mut out = String::new();
    for (i, r) in records.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        for f in &r.fields {
            out.push_str(&f.key);
            out.push_str(" = ");
            out.push_str(&f.value);
            out.push('\n');
        }
    }
    out
}

/// Reads a file holding exactly one relation record.
pub fn read_relation(text: &str) -> Result<Relation> {
    let records = parse_records(text)?;
    let mut rels = records.iter().filter(|r| r.has_relation() || r.get("q").is_some());
    let first = rels.next().ok_or_else(|| Error::Format {
        line: 1,
        message: "no relation record found".into(),
    })?;
    if let Some(extra) = rels.next() {
        return Err(Error::Format {
            line: extra.line,
            message: "expected a single relation record".into(),
        });
    }
    first.to_relation()
}

pub fn write_relation(r: &Relation) -> String {
    write_records(&[Record::from_relation(r)])
}

/// Hex encoding with the most significant bit of each digit first.
pub fn bits_to_hex(bits: &BitTable) -> String {
    (0..bits.len().div_ceil(4))
        .map(|d| {
            let nibble = (0..4).fold(0u32, |acc, j| {
                let i = 4 * d + j;
                acc << 1 | u32::from(i < bits.len() && bits.get(i))
            });
            char::from_digit(nibble, 16).expect("nibble < 16")
        })
        .collect()
}

pub fn hex_to_bits(hex: &str, len: usize) -> Result<BitTable> {
    let hex = hex.trim();
    let digits = hex.chars().count();
    if digits != len.div_ceil(4) {
        return Err(Error::Format {
            line: 0,
            message: format!("expected {} hex digits for {len} bits, found {digits}", len.div_ceil(4)),
        });
    }
    let mut bits = BitTable::zeros(len);
    for (d, c) in hex.chars().enumerate() {
        let nibble = c.to_digit(16).ok_or_else(|| Error::Format {
            line: 0,
            message: format!("invalid hex digit `{c}`"),
        })?;
        for j in 0..4 {
            let bit = nibble >> (3 - j) & 1 == 1;
            let i = 4 * d + j;
            if i < len {
                bits.set(i, bit);
            } else if bit {
                return Err(Error::Format {
                    line: 0,
                    message: "nonzero padding bits after the last ordinal".into(),
                });
            }
        }
    }
    Ok(bits)
}

#[cfg(test)]
mod tests {
    use super::*;

    const RULE30_FILE: &str = "# rule 30\nq = 2\npoints = p q r s\nbits = 1001010101101010\n";

    #[test]
    fn reads_and_writes_relation() {
        let r = read_relation(RULE30_FILE).unwrap();
        assert_eq!(r.domain().points(), ["p", "q", "r", "s"]);
        assert_eq!(r.bit_string(), "1001010101101010");
        assert_eq!(read_relation(&write_relation(&r)).unwrap(), r);
    }

    #[test]
    fn hex_layout() {
        let r = Relation::from_bit_str(Domain::new(["a", "b"], 2).unwrap(), "1001").unwrap();
        assert_eq!(bits_to_hex(r.bits()), "9");
        let rule30 = read_relation(RULE30_FILE).unwrap();
        assert_eq!(bits_to_hex(rule30.bits()), "956a");
        let text = "q = 2\npoints = p,q,r,s\nbits_hex = 956A\n";
        assert_eq!(read_relation(text).unwrap(), rule30);
        // three cells use one digit with one padding bit
        let d = Domain::new(["a"], 3).unwrap();
        let r = Relation::from_bit_str(d, "101").unwrap();
        assert_eq!(bits_to_hex(r.bits()), "a");
        assert!(hex_to_bits("b", 3).is_err());
    }

    #[test]
    fn diagnostics_carry_lines() {
        let bad_bits = "q = 2\npoints = a b\nbits = 101\n";
        match read_relation(bad_bits).unwrap_err() {
            Error::Format { line, message } => {
                assert_eq!(line, 3);
                assert!(message.contains("bits"), "{message}");
            }
            other => panic!("{other:?}"),
        }
        let no_eq = "q = 2\npoints a b\n";
        assert!(matches!(read_relation(no_eq), Err(Error::Format { line: 2, .. })));
        let missing = "q = 2\npoints = a\n";
        assert!(matches!(read_relation(missing), Err(Error::Format { line: 1, .. })));
        let dup = "q = 2\nq = 3\n";
        assert!(matches!(read_relation(dup), Err(Error::Format { line: 2, .. })));
        let bad_q = "q = two\npoints = a\nbits = 11\n";
        assert!(matches!(read_relation(bad_q), Err(Error::Format { line: 1, .. })));
        let bad_point = "q = 2\npoints = a a\nbits = 1111\n";
        assert!(matches!(read_relation(bad_point), Err(Error::Format { line: 2, .. })));
    }

    #[test]
    fn metadata_survives_round_trip() {
        let r = read_relation(RULE30_FILE).unwrap();
        let rec = Record::new().with("name", "rule30").with("status", "irreducible");
        let mut rec = rec;
        rec.push_relation(&r);
        let text = write_records(&[rec.clone(), Record::from_relation(&r)]);
        let back = parse_records(&text).unwrap();
        assert_eq!(back.len(), 2);
        assert_eq!(back[0].get("name"), Some("rule30"));
        assert_eq!(back[0].to_relation().unwrap(), r);
        assert_eq!(back[1].to_relation().unwrap(), r);
        assert!(read_relation(&text).is_err());
    }
}
