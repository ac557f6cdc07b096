//! Uniserial modules over a Nakayama algebra as `(top, length)` coordinates.
//!
//! The module `M(a, l)` has composition factors `S_a, S_{a+1}, ..., S_{a+l-1}`
//! from top to socle and exists iff `1 <= l <= c_a`. Projective covers,
//! syzygies, injective envelopes, cosyzygies and the Auslander-Reiten
//! translate all become index arithmetic on these coordinates.

use std::collections::HashSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::sequence::AdmissibleSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Module {
    Zero,
    Uniserial { top: usize, len: usize },
}

impl Module {
    /// `M(top, len)` over `a`, checked against `1 <= len <= c_top`.
    pub fn new(a: &AdmissibleSequence, top: usize, len: usize) -> Result<Self> {
        a.check_vertex(top)?;
        if len == 0 || len > a.c(top) {
            return Err(Error::InvalidModule { top, len });
        }
        Ok(Module::Uniserial { top, len })
    }

    pub fn simple(a: &AdmissibleSequence, i: usize) -> Result<Self> {
        Self::new(a, i, 1)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Module::Zero)
    }

    fn coords(&self) -> Result<(usize, usize)> {
        match *self {
            Module::Zero => Err(Error::ZeroModule),
            Module::Uniserial { top, len } => Ok((top, len)),
        }
    }
}

impl fmt::Display for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Module::Zero => f.write_str("0"),
            Module::Uniserial { top, len } => write!(f, "M({top},{len})"),
        }
    }
}

/// A homological dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HomDim {
    Finite(usize),
    Infinite,
}

impl HomDim {
    pub fn is_infinite(&self) -> bool {
        matches!(self, HomDim::Infinite)
    }
}

impl fmt::Display for HomDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomDim::Finite(d) => write!(f, "{d}"),
            HomDim::Infinite => f.write_str("inf"),
        }
    }
}

/// Finite dimensions as JSON numbers, infinity as the string `"inf"`.
impl Serialize for HomDim {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            HomDim::Finite(d) => serializer.serialize_u64(*d as u64),
            HomDim::Infinite => serializer.serialize_str("inf"),
        }
    }
}

pub fn proj_cover(a: &AdmissibleSequence, i: usize) -> Result<Module> {
    Module::new(a, i, a.c(checked(a, i)?))
}

fn checked(a: &AdmissibleSequence, i: usize) -> Result<usize> {
    a.check_vertex(i).map(|_| i)
}

/// Index of the simple socle, `wrap(top + len - 1)`.
pub fn socle(a: &AdmissibleSequence, m: &Module) -> Result<usize> {
    let (top, len) = m.coords()?;
    Ok(a.wrap((top + len - 1) as i64))
}

pub fn is_projective(a: &AdmissibleSequence, m: &Module) -> Result<bool> {
    let (top, len) = m.coords()?;
    Ok(len == a.c(top))
}

/// Kernel of the projective cover `P_top -> M`.
pub fn syzygy(a: &AdmissibleSequence, m: &Module) -> Result<Module> {
    let (top, len) = m.coords()?;
    let c = a.c(top);
    if len == c {
        return Ok(Module::Zero);
    }
    Ok(Module::Uniserial {
        top: a.wrap((top + len) as i64),
        len: c - len,
    })
}

/// Length of the injective envelope of `S_b`: the longest `l` such that
/// `M(b - l + 1, l)` exists.
fn envelope_len(a: &AdmissibleSequence, b: usize) -> usize {
    (1..=a.max_entry())
        .filter(|&l| l <= a.c_wrapped(b as i64 - l as i64 + 1))
        .max()
        .expect("l = 1 always qualifies")
}

/// Injective envelope `I_b` of the simple `S_b`, the longest uniserial with socle `S_b`.
pub fn injective_envelope(a: &AdmissibleSequence, b: usize) -> Result<Module> {
    a.require_cycle()?;
    a.check_vertex(b)?;
    let d = envelope_len(a, b);
    Ok(Module::Uniserial {
        top: a.wrap(b as i64 - d as i64 + 1),
        len: d,
    })
}

pub fn is_injective(a: &AdmissibleSequence, m: &Module) -> Result<bool> {
    a.require_cycle()?;
    let (_, len) = m.coords()?;
    Ok(len == envelope_len(a, socle(a, m)?))
}

/// Cokernel of `M -> I_{soc M}`.
pub fn cosyzygy(a: &AdmissibleSequence, m: &Module) -> Result<Module> {
    a.require_cycle()?;
    let (_, len) = m.coords()?;
    let b = socle(a, m)?;
    let d = envelope_len(a, b);
    if len == d {
        return Ok(Module::Zero);
    }
    Ok(Module::Uniserial {
        top: a.wrap(b as i64 - d as i64 + 1),
        len: d - len,
    })
}

/// Auslander-Reiten translate of a non-projective uniserial: shifts the top by +1.
pub fn tau(a: &AdmissibleSequence, m: &Module) -> Result<Module> {
    a.require_cycle()?;
    let (top, len) = m.coords()?;
    if is_projective(a, m)? {
        return Err(Error::ProjectiveModule);
    }
    Ok(Module::Uniserial {
        top: a.wrap(top as i64 + 1),
        len,
    })
}

/// Inverse translate of a non-injective uniserial: shifts the top by -1.
pub fn tau_inv(a: &AdmissibleSequence, m: &Module) -> Result<Module> {
    a.require_cycle()?;
    let (top, len) = m.coords()?;
    if is_injective(a, m)? {
        return Err(Error::InjectiveModule);
    }
    Ok(Module::Uniserial {
        top: a.wrap(top as i64 - 1),
        len,
    })
}

/// `gamma(S_i) = tau soc P(S_i)`, as a vertex index.
pub fn gamma(a: &AdmissibleSequence, i: usize) -> Result<usize> {
    a.require_cycle()?;
    let p = proj_cover(a, i)?;
    let soc = Module::simple(a, socle(a, &p)?)?;
    match tau(a, &soc)? {
        Module::Uniserial { top, .. } => Ok(top),
        Module::Zero => unreachable!("tau of a nonzero module is nonzero"),
    }
}

/// Length of the `step` orbit from `m` until it hits zero, or `Infinite` if a
/// state repeats first. There are at most `n * max c` states, so this terminates.
fn orbit_dim(m: &Module, step: impl Fn(&Module) -> Result<Module>) -> Result<HomDim> {
    m.coords()?;
    let mut seen = HashSet::new();
    let mut current = *m;
    let mut k = 0;
    loop {
        if !seen.insert(current) {
            return Ok(HomDim::Infinite);
        }
        let next = step(&current)?;
        if next.is_zero() {
            return Ok(HomDim::Finite(k));
        }
        current = next;
        k += 1;
    }
}

/// `pd M = 0` if `M` is projective, else `1 + pd(syzygy M)`.
pub fn proj_dim(a: &AdmissibleSequence, m: &Module) -> Result<HomDim> {
    orbit_dim(m, |x| syzygy(a, x))
}

/// `id M = 0` if `M` is injective, else `1 + id(cosyzygy M)`. Cycle algebras only.
pub fn inj_dim(a: &AdmissibleSequence, m: &Module) -> Result<HomDim> {
    a.require_cycle()?;
    orbit_dim(m, |x| cosyzygy(a, x))
}

/// Projective dimensions of `S_1, ..., S_n`.
pub fn simple_proj_dims(a: &AdmissibleSequence) -> Vec<HomDim> {
    (1..=a.n())
        .map(|i| proj_dim(a, &Module::Uniserial { top: i, len: 1 }).expect("simples are nonzero"))
        .collect()
}

/// Injective dimensions of `S_1, ..., S_n`.
pub fn simple_inj_dims(a: &AdmissibleSequence) -> Result<Vec<HomDim>> {
    a.require_cycle()?;
    (1..=a.n())
        .map(|i| inj_dim(a, &Module::Uniserial { top: i, len: 1 }))
        .collect()
}

/// Supremum of the projective dimensions of the simples.
pub fn global_dim(a: &AdmissibleSequence) -> HomDim {
    simple_proj_dims(a)
        .into_iter()
        .max()
        .expect("at least one simple")
}

#[cfg(test)]
mod tests {
    use super::*;
    use HomDim::{Finite, Infinite};

    fn seq(s: &str) -> AdmissibleSequence {
        s.parse().unwrap()
    }

    fn m(top: usize, len: usize) -> Module {
        Module::Uniserial { top, len }
    }

    #[test]
    fn module_bounds() {
        let a = seq("2,2,1");
        assert_eq!(Module::new(&a, 3, 1), Ok(m(3, 1)));
        assert_eq!(
            Module::new(&a, 3, 2),
            Err(Error::InvalidModule { top: 3, len: 2 })
        );
        assert_eq!(
            Module::new(&a, 1, 0),
            Err(Error::InvalidModule { top: 1, len: 0 })
        );
        assert!(matches!(
            Module::new(&a, 4, 1),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn proj_cover_examples() {
        assert_eq!(proj_cover(&seq("3,3,3,4"), 4), Ok(m(4, 4)));
        assert_eq!(proj_cover(&seq("2,2,1"), 3), Ok(m(3, 1)));
        assert_eq!(proj_cover(&seq("2,3"), 2), Ok(m(2, 3)));
    }

    #[test]
    fn socle_examples() {
        let a = seq("3,3,3,4");
        assert_eq!(socle(&a, &m(4, 4)), Ok(3));
        for i in 1..=4 {
            assert_eq!(socle(&a, &m(i, 1)), Ok(i));
        }
        assert_eq!(socle(&seq("2,2"), &m(1, 2)), Ok(2));
        assert_eq!(socle(&a, &Module::Zero), Err(Error::ZeroModule));
    }

    #[test]
    fn syzygy_examples() {
        let a = seq("3,3,3,4");
        assert_eq!(syzygy(&a, &m(1, 1)), Ok(m(2, 2)));
        assert_eq!(syzygy(&a, &m(1, 3)), Ok(Module::Zero));
        assert_eq!(syzygy(&seq("2,2,1"), &m(2, 1)), Ok(m(3, 1)));
        assert_eq!(syzygy(&a, &Module::Zero), Err(Error::ZeroModule));
    }

    #[test]
    fn injective_envelope_examples() {
        assert_eq!(injective_envelope(&seq("3,3,3,4"), 4), Ok(m(2, 3)));
        assert_eq!(injective_envelope(&seq("2,2"), 1), Ok(m(2, 2)));
        assert_eq!(injective_envelope(&seq("5"), 1), Ok(m(1, 5)));
        assert_eq!(
            injective_envelope(&seq("2,2,1"), 1),
            Err(Error::NotCycleAlgebra)
        );
    }

    #[test]
    fn cosyzygy_examples() {
        assert_eq!(cosyzygy(&seq("2,2"), &m(1, 1)), Ok(m(2, 1)));
        assert_eq!(cosyzygy(&seq("3,3,3,4"), &m(2, 3)), Ok(Module::Zero));
        // I_1 over (3,3) is M(1,3) = P_1 (factors S_1, S_2, S_1); the cokernel
        // of S_1 -> I_1 is its top part M(1,2).
        assert_eq!(injective_envelope(&seq("3,3"), 1), Ok(m(1, 3)));
        assert_eq!(cosyzygy(&seq("3,3"), &m(1, 1)), Ok(m(1, 2)));
        assert_eq!(
            cosyzygy(&seq("2,2,1"), &m(1, 1)),
            Err(Error::NotCycleAlgebra)
        );
        assert_eq!(cosyzygy(&seq("2,2"), &Module::Zero), Err(Error::ZeroModule));
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&seq("2,2"), &m(2, 1)), Ok(m(1, 1)));
        assert_eq!(tau(&seq("3,3,3,4"), &m(2, 2)), Ok(m(3, 2)));
        assert_eq!(tau(&seq("2,2"), &m(1, 2)), Err(Error::ProjectiveModule));
        assert_eq!(tau_inv(&seq("2,2"), &m(2, 2)), Err(Error::InjectiveModule));
        assert_eq!(tau(&seq("2,2"), &Module::Zero), Err(Error::ZeroModule));
        let a = seq("3,3,3,4");
        for top in 1..=4 {
            for len in 1..a.c(top) {
                let x = m(top, len);
                assert_eq!(tau_inv(&a, &tau(&a, &x).unwrap()), Ok(x));
            }
        }
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma(&seq("3,3,3,4"), 2), Ok(1));
        assert_eq!(gamma(&seq("2,2"), 1), Ok(1));
        assert_eq!(gamma(&seq("6"), 1), Ok(1));
        assert_eq!(gamma(&seq("2,2,1"), 1), Err(Error::NotCycleAlgebra));
    }

    #[test]
    fn dimension_examples() {
        let a = seq("2,2,1");
        assert_eq!(simple_proj_dims(&a), vec![Finite(2), Finite(1), Finite(0)]);
        assert_eq!(global_dim(&a), Finite(2));
        assert_eq!(inj_dim(&a, &m(1, 1)), Err(Error::NotCycleAlgebra));

        assert_eq!(simple_proj_dims(&seq("2,2")), vec![Infinite, Infinite]);
        assert_eq!(simple_proj_dims(&seq("3,3")), vec![Infinite, Infinite]);

        let b = seq("3,3,3,4");
        assert_eq!(
            simple_proj_dims(&b),
            vec![Finite(3), Finite(5), Finite(4), Finite(1)]
        );
        assert_eq!(global_dim(&b), Finite(5));
        assert_eq!(proj_dim(&b, &Module::Zero), Err(Error::ZeroModule));
    }

    #[test]
    fn syzygy_orbit_of_3_3() {
        let a = seq("3,3");
        let mut x = m(1, 1);
        let mut orbit = vec![x];
        for _ in 0..4 {
            x = syzygy(&a, &x).unwrap();
            orbit.push(x);
        }
        assert_eq!(orbit, vec![m(1, 1), m(2, 2), m(2, 1), m(1, 2), m(1, 1)]);
    }

    #[test]
    fn hom_dim_json() {
        assert_eq!(serde_json::to_string(&Finite(3)).unwrap(), "3");
        assert_eq!(serde_json::to_string(&Infinite).unwrap(), "\"inf\"");
        assert!(Finite(100) < Infinite);
    }
}
