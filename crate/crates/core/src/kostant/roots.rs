use std::collections::{HashMap, HashSet};
use std::fmt;

use num_traits::{Signed, Zero};

use crate::{Error, Rational, Result};

/// Finite root system of an irreducible Cartan matrix.
///
/// Cartan entries follow `a_ij = <α_i^∨, α_j>` with Bourbaki numbering; node
/// indices are 0-based in this struct and 1-based wherever a user names a node.
/// Positive roots are coordinate vectors over the simple roots, sorted by
/// height and then so that `α_1 < α_2 < ...` within a height.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    label: String,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

/// Root system of the simple type `letter` and `rank`, e.g. `('E', 6)`.
pub fn build_root_system(letter: char, rank: usize) -> Result<RootSystem> {
    let unsupported = || Error::UnsupportedType(format!("{letter}{rank}"));
    let letter = letter.to_ascii_uppercase();
    let mut a = vec![vec![0i64; rank]; rank];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match (letter, rank) {
        ('A', n) if n >= 1 => (1..n).for_each(|i| link(i - 1, i)),
        ('B' | 'C', n) if n >= 2 => (1..n).for_each(|i| link(i - 1, i)),
        ('D', n) if n >= 3 => {
            (1..n - 1).for_each(|i| link(i - 1, i));
            link(n - 3, n - 1);
        }
        ('E', n) if (6..=8).contains(&n) => {
            link(0, 2);
            link(1, 3);
            (3..n).for_each(|i| link(i - 1, i));
        }
        ('F', 4) => (1..4).for_each(|i| link(i - 1, i)),
        ('G', 2) => link(0, 1),
        _ => return Err(unsupported()),
    }
    match (letter, rank) {
        ('B', n) => a[n - 1][n - 2] = -2,
        ('C', n) => a[n - 2][n - 1] = -2,
        ('F', _) => a[2][1] = -2,
        ('G', _) => a[0][1] = -3,
        _ => {}
    }
    RootSystem::with_label(a, format!("{letter}{rank}"))
}

impl RootSystem {
    /// Validate an arbitrary Cartan matrix (irreducible, finite type) and build its roots.
    pub fn from_cartan(cartan: Vec<Vec<i64>>) -> Result<Self> {
        let label = format!("rank-{} cartan", cartan.len());
        Self::with_label(cartan, label)
    }

    fn with_label(cartan: Vec<Vec<i64>>, label: String) -> Result<Self> {
        validate_cartan(&cartan)?;
        let positive_roots = positive_roots(&cartan);
        let index = positive_roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        Ok(RootSystem {
            label,
            cartan,
            positive_roots,
            index,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Position of a positive root in [`positive_roots`](Self::positive_roots).
    pub fn root_index(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    pub fn highest_root(&self) -> &[i64] {
        self.positive_roots.last().expect("nonempty root system")
    }

    pub fn height(root: &[i64]) -> i64 {
        root.iter().sum()
    }

    /// `<β, α_i^∨>` for `β` in simple-root coordinates.
    pub fn pairing(&self, beta: &[i64], i: usize) -> i64 {
        self.cartan[i].iter().zip(beta).map(|(a, c)| a * c).sum()
    }

    /// Simple-root coordinates to fundamental-weight coordinates.
    pub fn to_fundamental(&self, beta: &[i64]) -> Vec<i64> {
        (0..self.rank()).map(|i| self.pairing(beta, i)).collect()
    }

    /// Is `coords` a root (positive, negative)?
    pub fn is_root(&self, coords: &[i64]) -> bool {
        if self.index.contains_key(coords) {
            return true;
        }
        let neg: Vec<i64> = coords.iter().map(|c| -c).collect();
        self.index.contains_key(&neg)
    }

    /// Symmetrizer `d_i` with `d_i a_ij = d_j a_ji`, scaled to coprime positive integers.
    pub fn symmetrizer(&self) -> Vec<i64> {
        symmetrizer(&self.cartan).expect("validated")
    }

    pub fn is_simply_laced(&self) -> bool {
        self.cartan.iter().flatten().all(|&a| a == 2 || a == 0 || a == -1)
    }
}

fn symmetrizer(a: &[Vec<i64>]) -> Option<Vec<i64>> {
    let n = a.len();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    d[0] = Some(Rational::from_integer(1.into()));
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        let di = d[i].clone()?;
        for j in 0..n {
            if i != j && a[i][j] != 0 {
                // d_i a_ij = d_j a_ji
                let dj =
                    &di * Rational::from_integer(a[i][j].into()) / Rational::from_integer(a[j][i].into());
                match &d[j] {
                    None => {
                        d[j] = Some(dj);
                        stack.push(j);
                    }
                    Some(x) if *x == dj => {}
                    Some(_) => return None,
                }
            }
        }
    }
    let d: Vec<Rational> = d.into_iter().collect::<Option<_>>()?;
    let lcm = d.iter().fold(num_bigint::BigInt::from(1), |acc, x| {
        num_integer::Integer::lcm(&acc, x.denom())
    });
    let ints: Vec<num_bigint::BigInt> = d.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let g = ints.iter().fold(num_bigint::BigInt::zero(), |acc, x| {
        num_integer::Integer::gcd(&acc, x)
    });
    ints.iter().map(|x| i64::try_from(x / &g).ok()).collect()
}

fn validate_cartan(a: &[Vec<i64>]) -> Result<()> {
    let bad = |msg: &str| Err(Error::InvalidCartanMatrix(msg.to_string()));
    let n = a.len();
    if n == 0 {
        return bad("empty matrix");
    }
    if a.iter().any(|r| r.len() != n) {
        return bad("matrix is not square");
    }
    for i in 0..n {
        if a[i][i] != 2 {
            return bad("diagonal entries must be 2");
        }
        for j in 0..n {
            if i != j && (a[i][j] > 0 || (a[i][j] == 0) != (a[j][i] == 0)) {
                return bad("off-diagonal entries must be nonpositive with a symmetric zero pattern");
            }
        }
    }
    let Some(d) = symmetrizer(a) else {
        return bad("matrix is reducible or not symmetrizable");
    };
    if d.iter().any(|x| *x <= 0) {
        return bad("matrix is not symmetrizable by positive scalars");
    }
    // Positive definiteness of (d_i a_ij) through exact Gaussian elimination.
    let mut b: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Rational::from_integer((d[i] * a[i][j]).into()))
                .collect()
        })
        .collect();
    for k in 0..n {
        if !b[k][k].is_positive() {
            return bad("matrix is not of finite type");
        }
        for i in (k + 1)..n {
            let f = &b[i][k] / &b[k][k];
            for j in k..n {
                let t = &f * &b[k][j];
                b[i][j] -= t;
            }
        }
    }
    Ok(())
}

/// Positive roots by the string closure: `β + α_i` is a root iff `q > 0`, where
/// `q = p - <β, α_i^∨>` and `p` is the length of the `α_i`-string below `β`.
fn positive_roots(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let pairing = |beta: &[i64], i: usize| -> i64 { a[i].iter().zip(beta).map(|(x, c)| x * c).sum() };
    let mut known: HashSet<Vec<i64>> = HashSet::new();
    let mut levels: Vec<Vec<Vec<i64>>> = Vec::new();
    let simple: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    for s in &simple {
        known.insert(s.clone());
    }
    levels.push(simple);
    loop {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in levels.last().unwrap() {
            for i in 0..n {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing(beta, i) > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }
    let mut roots: Vec<Vec<i64>> = levels.into_iter().flatten().collect();
    roots.sort_by(|x, y| {
        RootSystem::height(x)
            .cmp(&RootSystem::height(y))
            .then_with(|| y.cmp(x))
    });
    roots
}
