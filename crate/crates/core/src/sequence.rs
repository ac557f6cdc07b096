//! Admissible sequences (Kupisch series) of connected Nakayama algebras.
//!
//! A connected Nakayama algebra with `n` simples is stored as the list
//! `c = (c_1, ..., c_n)` of lengths of its indecomposable projectives, indexed
//! so that `rad P_i` is a quotient of `P_{i+1}`. Vertices are 1-based.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Shape of the valued quiver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// Linear quiver; the last projective is simple (`c_n = 1`).
    Line,
    /// Cyclic quiver; no simple projectives.
    Cycle,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Line => f.write_str("line"),
            Kind::Cycle => f.write_str("cycle"),
        }
    }
}

/// Cyclic 1-based index reduction: `wrap(x) = ((x - 1) mod n) + 1`.
pub fn wrap(x: i64, n: usize) -> usize {
    debug_assert!(n >= 1);
    ((x - 1).rem_euclid(n as i64) + 1) as usize
}

/// A validated admissible sequence together with its classification.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissibleSequence {
    c: Vec<usize>,
    kind: Kind,
    self_injective: bool,
}

impl AdmissibleSequence {
    /// Validates a raw list of entries, taken verbatim (never reordered).
    pub fn validate(raw: &[i64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptySequence);
        }
        if let Some((i, &v)) = raw.iter().enumerate().find(|(_, &v)| v <= 0) {
            return Err(Error::NonPositiveEntry {
                index: i + 1,
                value: v,
            });
        }
        let c: Vec<usize> = raw.iter().map(|&v| v as usize).collect();
        let n = c.len();

        if n == 1 {
            let kind = if c[0] == 1 { Kind::Line } else { Kind::Cycle };
            return Ok(Self {
                c,
                kind,
                self_injective: true,
            });
        }

        let kind = if c[n - 1] == 1 {
            Kind::Line
        } else {
            Kind::Cycle
        };
        // Line sequences only have the n-1 forward steps; cycles close up.
        let steps = match kind {
            Kind::Line => n - 1,
            Kind::Cycle => n,
        };
        for i in 0..steps {
            let j = (i + 1) % n;
            if c[j] + 1 < c[i] {
                return Err(Error::ViolatesFactorCondition {
                    index: i + 1,
                    next: j + 1,
                    next_value: c[j],
                    bound: c[i] - 1,
                });
            }
        }
        if let Some(i) = c[..n - 1].iter().position(|&v| v == 1) {
            return Err(match kind {
                Kind::Line => Error::LineEntryTooSmall { index: i + 1 },
                Kind::Cycle => Error::MixedKind { index: i + 1 },
            });
        }

        let self_injective = kind == Kind::Cycle && c.iter().all(|&v| v == c[0]);
        Ok(Self {
            c,
            kind,
            self_injective,
        })
    }

    /// Validates a list of already non-negative entries.
    pub fn from_entries(entries: &[usize]) -> Result<Self> {
        let raw: Vec<i64> = entries
            .iter()
            .map(|&v| i64::try_from(v).unwrap_or(i64::MAX))
            .collect();
        Self::validate(&raw)
    }

    /// The self-injective cycle algebra `(c, ..., c)` with `n` simples.
    pub fn constant(n: usize, c: usize) -> Result<Self> {
        Self::from_entries(&vec![c; n])
    }

    /// Number of simple modules, `n(A)`.
    pub fn n(&self) -> usize {
        self.c.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.c
    }

    /// `c_i` for a 1-based vertex `i`.
    ///
    /// Panics if `i` is out of range.
    pub fn c(&self, i: usize) -> usize {
        assert!(
            (1..=self.n()).contains(&i),
            "vertex {i} out of range 1..={}",
            self.n()
        );
        self.c[i - 1]
    }

    /// `c_{wrap(x)}` for any integer position.
    pub fn c_wrapped(&self, x: i64) -> usize {
        self.c[wrap(x, self.n()) - 1]
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn is_cycle(&self) -> bool {
        self.kind == Kind::Cycle
    }

    pub fn is_self_injective(&self) -> bool {
        self.self_injective
    }

    /// `p(A)`, the smallest projective length.
    pub fn p_min(&self) -> usize {
        *self.c.iter().min().expect("sequence is nonempty")
    }

    pub fn max_entry(&self) -> usize {
        *self.c.iter().max().expect("sequence is nonempty")
    }

    /// Reduces an integer position to a vertex label.
    pub fn wrap(&self, x: i64) -> usize {
        wrap(x, self.n())
    }

    pub(crate) fn require_cycle(&self) -> Result<()> {
        match self.kind {
            Kind::Cycle => Ok(()),
            Kind::Line => Err(Error::NotCycleAlgebra),
        }
    }

    pub(crate) fn check_vertex(&self, i: usize) -> Result<()> {
        if (1..=self.n()).contains(&i) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: i,
                n: self.n(),
            })
        }
    }

    /// Cyclic relabelling `c'_i = c_{wrap(i + r)}` of a cycle algebra.
    pub fn rotate(&self, r: usize) -> Result<Self> {
        self.require_cycle()?;
        let n = self.n();
        if r >= n {
            return Err(Error::RotationOutOfRange { r, n });
        }
        let mut c = self.c.clone();
        c.rotate_left(r);
        Ok(Self {
            c,
            kind: self.kind,
            self_injective: self.self_injective,
        })
    }

    /// Adds `t * n` to every entry of a cycle algebra. The arrow table of the
    /// resolution quiver only depends on `c_i mod n`, so it is unchanged.
    pub fn lift(&self, t: usize) -> Result<Self> {
        self.require_cycle()?;
        let shift = t * self.n();
        Ok(Self {
            c: self.c.iter().map(|&v| v + shift).collect(),
            kind: self.kind,
            self_injective: self.self_injective,
        })
    }

    /// `p(A) = c_1 = c_n - 1`.
    pub fn is_normalized(&self) -> bool {
        let n = self.n();
        self.is_cycle() && n >= 2 && self.c[0] == self.p_min() && self.c[n - 1] == self.c[0] + 1
    }
}

impl fmt::Display for AdmissibleSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.c.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Text grammar: comma-separated decimal integers, whitespace allowed around
/// each entry. Signs are accepted so that non-positive entries get the
/// dedicated validation error rather than a parse error.
impl FromStr for AdmissibleSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Err(Error::EmptySequence);
        }
        let raw = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<i64>()
                    .map_err(|e| Error::Parse(format!("{tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::validate(&raw)
    }
}

impl Serialize for AdmissibleSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.c.serialize(serializer)
    }
}
