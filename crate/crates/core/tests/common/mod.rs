//! Brute-force oracles that only use the defining formulas, written against
//! plain `Vec<usize>` data so they share no code paths with the library.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

/// Admissibility straight from the Kupisch conditions.
pub fn naive_admissible(c: &[usize]) -> bool {
    let n = c.len();
    if n == 0 || c.contains(&0) {
        return false;
    }
    if n == 1 {
        return true;
    }
    if c[n - 1] == 1 {
        (0..n - 1).all(|i| c[i] >= 2 && c[i + 1] + 1 >= c[i])
    } else {
        (0..n).all(|i| c[i] >= 2 && c[(i + 1) % n] + 1 >= c[i])
    }
}

/// Every tuple in `{1..c_max}^n` for `n <= n_max` that passes [`naive_admissible`].
pub fn naive_enumeration(n_max: usize, c_max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        let total = c_max.pow(n as u32);
        for code in 0..total {
            let mut x = code;
            let mut t = vec![0; n];
            for slot in t.iter_mut().rev() {
                *slot = x % c_max + 1;
                x /= c_max;
            }
            if naive_admissible(&t) {
                out.push(t);
            }
        }
    }
    out
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `f(i) = ((c_i + i - 1) mod n) + 1`, 1-based.
pub fn naive_f(c: &[usize]) -> Vec<usize> {
    let n = c.len();
    (1..=n).map(|i| (c[i - 1] + i - 1) % n + 1).collect()
}

/// Cycles as vertex sets with (size, weight), found by iterating `f` n times
/// from every vertex and collecting the orbit of the landing point.
pub fn naive_cycles(c: &[usize]) -> Vec<(BTreeSet<usize>, usize, usize)> {
    let n = c.len();
    let f = naive_f(c);
    let mut found: Vec<BTreeSet<usize>> = Vec::new();
    for start in 1..=n {
        let mut v = start;
        for _ in 0..n {
            v = f[v - 1];
        }
        let mut orbit = BTreeSet::new();
        let mut w = v;
        loop {
            orbit.insert(w);
            w = f[w - 1];
            if w == v {
                break;
            }
        }
        if !found.contains(&orbit) {
            found.push(orbit);
        }
    }
    found
        .into_iter()
        .map(|orbit| {
            let total: usize = orbit.iter().map(|&v| c[v - 1]).sum();
            assert_eq!(total % n, 0, "weight not integral for {c:?}");
            let size = orbit.len();
            (orbit, size, total / n)
        })
        .collect()
}

pub fn naive_cyclic_vertices(c: &[usize]) -> BTreeSet<usize> {
    naive_cycles(c)
        .into_iter()
        .flat_map(|(orbit, _, _)| orbit)
        .collect()
}

/// A uniserial module as its list of composition factors, top first.
pub type Factors = Vec<usize>;

fn step(n: usize, is_line: bool, v: usize) -> usize {
    if is_line {
        v + 1
    } else {
        v % n + 1
    }
}

fn is_line(c: &[usize]) -> bool {
    c[c.len() - 1] == 1
}

pub fn projective(c: &[usize], a: usize) -> Factors {
    let n = c.len();
    let line = is_line(c);
    let mut out = vec![a];
    while out.len() < c[a - 1] {
        let last = *out.last().unwrap();
        out.push(step(n, line, last));
    }
    out
}

/// Every indecomposable module: all nonempty prefixes of all projectives.
pub fn all_uniserials(c: &[usize]) -> Vec<Factors> {
    (1..=c.len())
        .flat_map(|a| {
            let p = projective(c, a);
            (1..=p.len()).map(move |l| p[..l].to_vec())
        })
        .collect()
}

/// Kernel of `P_top -> M`; `None` for zero.
pub fn naive_syzygy(c: &[usize], m: &Factors) -> Option<Factors> {
    let p = projective(c, m[0]);
    assert_eq!(
        &p[..m.len()],
        &m[..],
        "module is not a quotient of its cover"
    );
    let rest = p[m.len()..].to_vec();
    (!rest.is_empty()).then_some(rest)
}

/// Longest uniserial ending in `b`.
pub fn naive_envelope(c: &[usize], b: usize) -> Factors {
    all_uniserials(c)
        .into_iter()
        .filter(|m| *m.last().unwrap() == b)
        .max_by_key(|m| m.len())
        .unwrap()
}

pub fn naive_cosyzygy(c: &[usize], m: &Factors) -> Option<Factors> {
    let i = naive_envelope(c, *m.last().unwrap());
    let cut = i.len() - m.len();
    assert_eq!(
        &i[cut..],
        &m[..],
        "module is not a submodule of its envelope"
    );
    (cut > 0).then(|| i[..cut].to_vec())
}

/// `None` for infinite.
fn orbit_dim(m: Factors, next: impl Fn(&Factors) -> Option<Factors>) -> Option<usize> {
    let mut seen = HashSet::new();
    let mut cur = m;
    let mut k = 0;
    loop {
        if !seen.insert(cur.clone()) {
            return None;
        }
        match next(&cur) {
            None => return Some(k),
            Some(x) => {
                cur = x;
                k += 1;
            }
        }
    }
}

pub fn naive_pd_simples(c: &[usize]) -> Vec<Option<usize>> {
    (1..=c.len())
        .map(|i| orbit_dim(vec![i], |m| naive_syzygy(c, m)))
        .collect()
}

pub fn naive_id_simples(c: &[usize]) -> Vec<Option<usize>> {
    (1..=c.len())
        .map(|i| orbit_dim(vec![i], |m| naive_cosyzygy(c, m)))
        .collect()
}

/// Literal left-retraction formula on a raw tuple.
pub fn naive_retract(c: &[usize]) -> Vec<usize> {
    let n = c.len();
    (1..n).map(|i| c[i - 1] - (c[i - 1] + i - 1) / n).collect()
}
