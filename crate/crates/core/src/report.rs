//! Verification reports: ordered named checks with polynomial witnesses.

use std::fmt;

use crate::poly::PolyVector;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Pass,
    Fail,
    /// A non-required check that does not hold.
    Advisory,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Advisory => "advisory",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A nonvanishing value at a basis tuple.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    pub tuple: Vec<String>,
    pub value: PolyVector,
    /// Names of the basis the value is expanded in.
    pub basis: Vec<String>,
}

impl Witness {
    /// `(e, f)`
    pub fn tuple_string(&self) -> String {
        format!("({})", self.tuple.join(", "))
    }

    /// Nonzero components as `(name, polynomial)` pairs.
    pub fn components(&self) -> Vec<(String, String)> {
        self.value
            .entries()
            .iter()
            .zip(&self.basis)
            .filter(|(p, _)| !p.is_zero())
            .map(|(p, b)| (b.clone(), p.to_string()))
            .collect()
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self
            .components()
            .into_iter()
            .map(|(b, p)| format!("{b}: {p}"))
            .collect();
        write!(f, "at {}: {}", self.tuple_string(), comps.join(", "))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Check {
    pub id: String,
    pub required: bool,
    pub status: Status,
    /// Every failing tuple, in check order.
    pub witnesses: Vec<Witness>,
    /// Number of tuples examined.
    pub tuples: usize,
}

impl Check {
    pub fn holds(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn first_witness(&self) -> Option<&Witness> {
        self.witnesses.first()
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records a check from `(tuple, value)` pairs; the check holds when
    /// every value is the zero vector.
    pub fn record<I>(&mut self, id: impl Into<String>, required: bool, basis: &[String], values: I)
    where
        I: IntoIterator<Item = (Vec<String>, PolyVector)>,
    {
        let mut witnesses = Vec::new();
        let mut tuples = 0;
        for (tuple, value) in values {
            tuples += 1;
            if !value.is_zero() {
                witnesses.push(Witness {
                    tuple,
                    value,
                    basis: basis.to_vec(),
                });
            }
        }
        self.push_check(id.into(), required, witnesses, tuples);
    }

    /// Records a check whose outcome is a plain boolean.
    pub fn record_flag(&mut self, id: impl Into<String>, required: bool, holds: bool) {
        let witnesses = if holds {
            Vec::new()
        } else {
            vec![Witness {
                tuple: Vec::new(),
                value: PolyVector::zero(0),
                basis: Vec::new(),
            }]
        };
        self.push_check(id.into(), required, witnesses, 1);
    }

    fn push_check(&mut self, id: String, required: bool, witnesses: Vec<Witness>, tuples: usize) {
        let status = match (witnesses.is_empty(), required) {
            (true, _) => Status::Pass,
            (false, true) => Status::Fail,
            (false, false) => Status::Advisory,
        };
        self.checks.push(Check {
            id,
            required,
            status,
            witnesses,
            tuples,
        });
    }

    /// Appends the checks of `other`, prefixing their ids.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.id = format!("{prefix}{}", c.id);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// The first required check that fails.
    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.status == Status::Fail)
    }

    pub fn failure_count(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .map(|c| c.witnesses.len())
            .sum()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "{} {}", c.status, c.id)?;
            if let Some(w) = c.first_witness() {
                if !w.tuple.is_empty() || !w.value.is_empty() {
                    write!(f, " {w}")?;
                }
                if c.witnesses.len() > 1 {
                    write!(f, " (+{} more)", c.witnesses.len() - 1)?;
                }
            }
            writeln!(f)?;
        }
        write!(f, "overall {}", if self.passed() { "pass" } else { "fail" })
    }
}
