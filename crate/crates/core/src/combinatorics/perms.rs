use std::fmt;

use crate::error::{Error, Result};
use crate::{QPoly, QSeries};

/// Permutation of `{1, …, n}` in one-line notation, stored zero-based.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u8).collect())
    }

    /// From one-based one-line notation, e.g. `[3, 1, 2]`.
    pub fn from_one_line(images: &[u8]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x as usize > n || seen[x as usize - 1] {
                return Err(Error::InvalidArgument(format!(
                    "{images:?} is not a permutation"
                )));
            }
            seen[x as usize - 1] = true;
        }
        Ok(Perm(images.iter().map(|x| x - 1).collect()))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Zero-based image of zero-based `i`.
    pub fn image(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm(inv)
    }

    /// Number of inversions `i < j` with `σ(i) > σ(j)`.
    pub fn length(&self) -> usize {
        let v = &self.0;
        (0..v.len())
            .map(|i| (i + 1..v.len()).filter(|&j| v[i] > v[j]).count())
            .sum()
    }

    /// True if `σ({1..k}) = {1..k}`.
    pub fn fixes_prefix(&self, k: usize) -> bool {
        self.0[..k].iter().all(|&x| (x as usize) < k)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one: Vec<String> = self.0.iter().map(|x| (x + 1).to_string()).collect();
        write!(f, "[{}]", one.join(","))
    }
}

/// All permutations of `n` letters in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut cur: Vec<u8> = (0..n as u8).collect();
    let mut out = vec![Perm(cur.clone())];
    // next_permutation
    while let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) {
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(Perm(cur.clone()));
    }
    out
}

/// Tuple `(σ_1, …, σ_{m-1})` of permutations of the same size.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PermTuple(pub Vec<Perm>);

impl PermTuple {
    pub fn length(&self) -> usize {
        self.0.iter().map(Perm::length).sum()
    }

    /// True if no proper prefix `{1..k}`, `k < n`, is mapped onto itself by
    /// every entry.
    pub fn is_connected(&self, n: usize) -> bool {
        (1..n).all(|k| !self.0.iter().all(|s| s.fixes_prefix(k)))
    }

    /// Splits at the largest proper invariant prefix `k` into a tuple on
    /// `{1..k}` and a connected tuple on `{k+1..n}` (relabelled).
    pub fn split(&self, n: usize) -> (PermTuple, PermTuple) {
        let k = (1..n)
            .rev()
            .find(|&k| self.0.iter().all(|s| s.fixes_prefix(k)))
            .unwrap_or(0);
        let head = self.0.iter().map(|s| Perm(s.0[..k].to_vec())).collect();
        let tail = self
            .0
            .iter()
            .map(|s| Perm(s.0[k..].iter().map(|&x| x - k as u8).collect()))
            .collect();
        (PermTuple(head), PermTuple(tail))
    }

    /// Inverse of [`split`](Self::split): block-diagonal juxtaposition.
    pub fn join(head: &PermTuple, tail: &PermTuple) -> PermTuple {
        PermTuple(
            head.0
                .iter()
                .zip(&tail.0)
                .map(|(a, b)| {
                    let k = a.n() as u8;
                    let mut v = a.0.clone();
                    v.extend(b.0.iter().map(|&x| x + k));
                    Perm(v)
                })
                .collect(),
        )
    }
}

impl fmt::Display for PermTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Perm::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// All tuples in `S_n^k`, lexicographic in the entries.
pub fn all_tuples(n: usize, k: usize) -> Vec<PermTuple> {
    let perms = all_perms(n);
    let mut out = vec![PermTuple(Vec::new())];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                perms.iter().map(move |p| {
                    let mut v = t.0.clone();
                    v.push(p.clone());
                    PermTuple(v)
                })
            })
            .collect();
    }
    out
}

fn check_tuple_args(n: usize, m: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    if m < 2 {
        return Err(Error::InvalidArgument(
            "connected tuples need m >= 2".into(),
        ));
    }
    let count = (1..=n as u128).product::<u128>().pow(m - 1);
    if count > 3_000_000 {
        return Err(Error::SizeGuard(format!(
            "|S_{n}|^{} = {count} tuples",
            m - 1
        )));
    }
    Ok(())
}

/// Connected elements of `S_n^{m-1}`.
pub fn connected_tuples(n: usize, m: u32) -> Result<Vec<PermTuple>> {
    check_tuple_args(n, m)?;
    Ok(all_tuples(n, (m - 1) as usize)
        .into_iter()
        .filter(|t| t.is_connected(n))
        .collect())
}

/// `Σ q^{l(σ)}` over the connected tuples of size `n`.
pub fn a_n_via_tuples(n: usize, m: u32) -> Result<QPoly> {
    Ok(length_polynomial(&connected_tuples(n, m)?))
}

/// `Σ q^{l(σ)}` over a list of tuples.
pub fn length_polynomial(tuples: &[PermTuple]) -> QPoly {
    let max = tuples.iter().map(PermTuple::length).max().unwrap_or(0);
    let mut counts = vec![0i64; max + 1];
    for t in tuples {
        counts[t.length()] += 1;
    }
    QPoly::from_ints(&counts)
}

/// `[n]_q^! = Π_{i ≤ n} (1 + q + … + q^{i-1})`.
pub fn q_factorial(n: usize) -> QPoly {
    (1..=n).fold(QPoly::one(), |acc, i| &acc * &QPoly::from_ints(&vec![1; i]))
}

/// `Σ_{σ ∈ S_n} q^{l(σ)}`, by enumeration.
pub fn inversion_polynomial(n: usize) -> QPoly {
    let perms: Vec<PermTuple> = all_perms(n)
        .into_iter()
        .map(|p| PermTuple(vec![p]))
        .collect();
    length_polynomial(&perms)
}

/// Series `1 - Σ_{n ≥ 1} a_n t^n` inverse to `Σ_n [n]_q^{!(m-1)} t^n`;
/// returns the `a_n` as the coefficients of degree ≥ 1.
pub fn a_n_via_inversion(m: u32, order: usize) -> Result<QSeries> {
    if m < 1 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    let f = QSeries::from_fn(order, |n| q_factorial(n).pow(m - 1));
    let inv = f.inverse()?;
    Ok(QSeries::from_fn(order, |n| {
        if n == 0 {
            QPoly::zero()
        } else {
            -inv.coeff(n)
        }
    }))
}

/// Checks that `(σ, τ) ↦ σ ⊕ τ` is a bijection
/// `⊔_{k + l = n, l ≥ 1} G_k × P_l → G_n`.
pub fn check_unique_factorization(n: usize, m: u32) -> Result<bool> {
    check_tuple_args(n, m)?;
    let k = (m - 1) as usize;
    let all = all_tuples(n, k);
    // every element splits into a pair that joins back to it
    for t in &all {
        let (head, tail) = t.split(n);
        let l = n - head.0.first().map_or(0, Perm::n);
        if l == 0 || !tail.is_connected(l) || PermTuple::join(&head, &tail) != *t {
            return Ok(false);
        }
        if head.length() + tail.length() != t.length() {
            return Ok(false);
        }
    }
    // and the pair counts add up, so the map is injective too
    let mut total = 0usize;
    for l in 1..=n {
        let g = if n - l == 0 {
            1
        } else {
            all_tuples(n - l, k).len()
        };
        total += g * connected_tuples(l, m)?.len();
    }
    Ok(total == all.len())
}
