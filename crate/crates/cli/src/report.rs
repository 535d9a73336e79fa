//! Report rendering for text and record output.

use std::fmt::Display;
use std::io::{BufWriter, Stdout, Write};

use relcalc::automata::Trajectory;
use relcalc::io::{write_records, Record};
use relcalc::poly::relation_to_polynomial;
use relcalc::topology::SimplicialComplex;
use relcalc::Relation;

/// One report entry. In text mode a headline replaces the field listing.
pub struct Report {
    kind: &'static str,
    headline: Option<String>,
    fields: Vec<(&'static str, String)>,
    notes: Vec<(&'static str, String)>,
    relation: Option<(Option<&'static str>, Relation)>,
}

impl Report {
    pub fn new(kind: &'static str) -> Report {
        Report {
            kind,
            headline: None,
            fields: Vec::new(),
            notes: Vec::new(),
            relation: None,
        }
    }

    pub fn headline(mut self, text: String) -> Report {
        self.headline = Some(text);
        self
    }

    pub fn field(mut self, key: &'static str, value: impl Display) -> Report {
        self.fields.push((key, value.to_string()));
        self
    }

    /// Field also listed under a headline in text mode.
    pub fn note(mut self, key: &'static str, value: impl Display) -> Report {
        self.notes.push((key, value.to_string()));
        self
    }

    /// Attaches a relation shown in both modes under `label`.
    pub fn relation(mut self, label: &'static str, r: &Relation) -> Report {
        self.relation = Some((Some(label), r.clone()));
        self
    }

    /// Attaches a relation written only in record mode.
    pub fn relation_only(mut self, r: &Relation) -> Report {
        self.relation = Some((None, r.clone()));
        self
    }

    fn text(&self) -> String {
        let mut s = String::new();
        match &self.headline {
            Some(h) => {
                s.push_str(h);
                s.push('\n');
            }
            None => {
                s.push_str(self.kind);
                s.push('\n');
                for (k, v) in &self.fields {
                    s.push_str(&format!("  {k}: {v}\n"));
                }
            }
        }
        for (k, v) in &self.notes {
            s.push_str(&format!("  {k}: {v}\n"));
        }
        if let Some((Some(label), r)) = &self.relation {
            s.push_str(&format!("  {label}: {} {}\n", r.domain(), r.bit_string()));
        }
        s
    }

    fn record(&self) -> Record {
        let mut rec = Record::new().with("kind", self.kind);
        for (k, v) in self.fields.iter().chain(&self.notes) {
            rec.push(k, v.clone());
        }
        if let Some((_, r)) = &self.relation {
            rec.push_relation(r);
        }
        rec
    }
}

pub struct Out {
    records: bool,
    first: bool,
    w: BufWriter<Stdout>,
}

impl Out {
    pub fn new(records: bool) -> Out {
        Out {
            records,
            first: true,
            w: BufWriter::new(std::io::stdout()),
        }
    }

    pub fn emit(&mut self, rep: Report) {
        if self.records {
            self.write_record(&rep.record());
        } else {
            self.write(&rep.text());
        }
    }

    pub fn emit_trajectory(&mut self, rule: u32, seed: u64, traj: &Trajectory) {
        if self.records {
            let rows: Vec<String> = traj.to_string().lines().map(str::to_string).collect();
            let rec = Record::new()
                .with("kind", "trajectory")
                .with("rule", rule.to_string())
                .with("seed", seed.to_string())
                .with("width", traj.width().to_string())
                .with("steps", traj.steps().to_string())
                .with("rows", rows.join(" "));
            self.write_record(&rec);
        } else {
            self.write(&traj.to_string());
        }
    }

    fn write_record(&mut self, rec: &Record) {
        if !self.first {
            self.write("\n");
        }
        self.first = false;
        self.write(&write_records(std::slice::from_ref(rec)));
    }

    fn write(&mut self, s: &str) {
        // a closed pipe is not worth a panic
        let _ = self.w.write_all(s.as_bytes());
    }

    pub fn flush(&mut self) {
        let _ = self.w.flush();
    }
}

pub fn poly(r: &Relation) -> String {
    relation_to_polynomial(r).map_or_else(|e| format!("unavailable ({e})"), |p| p.to_string())
}

pub fn sym_poly(r: &Relation, symmetric: &[String]) -> String {
    relation_to_polynomial(r).map_or_else(|e| format!("unavailable ({e})"), |p| p.symmetric_display(symmetric))
}

pub fn topology(t: &SimplicialComplex) -> Report {
    let isolated = t.isolated_vertices().join(" ");
    Report::new("topology")
        .field("simplices", t)
        .field("dimension", t.dimension())
        .field("isolated", if isolated.is_empty() { "none".into() } else { isolated })
}
