use std::fmt;

/// Square matrix over the prime field `F_p`, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct FFMat {
    p: u32,
    d: usize,
    entries: Vec<u32>,
}

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

fn pow_mod(a: u32, mut e: u32, p: u32) -> u32 {
    let mut acc = 1u64;
    let mut base = u64::from(a % p);
    let p64 = u64::from(p);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p64;
        }
        base = base * base % p64;
        e >>= 1;
    }
    acc as u32
}

impl FFMat {
    pub fn new(p: u32, d: usize, entries: Vec<u32>) -> Self {
        assert_eq!(entries.len(), d * d, "need d*d entries");
        FFMat {
            p,
            d,
            entries: entries.into_iter().map(|x| x % p).collect(),
        }
    }

    pub fn from_ints(p: u32, d: usize, entries: &[i64]) -> Self {
        let pp = i64::from(p);
        Self::new(
            p,
            d,
            entries.iter().map(|&x| x.rem_euclid(pp) as u32).collect(),
        )
    }

    pub fn identity(p: u32, d: usize) -> Self {
        Self::scalar(p, d, 1)
    }

    pub fn zero(p: u32, d: usize) -> Self {
        Self::scalar(p, d, 0)
    }

    pub fn scalar(p: u32, d: usize, c: u32) -> Self {
        let mut entries = vec![0; d * d];
        for i in 0..d {
            entries[i * d + i] = c % p;
        }
        FFMat { p, d, entries }
    }

    /// Decodes the base-`p` integer produced by [`code`](Self::code).
    pub fn from_code(p: u32, d: usize, mut code: u64) -> Self {
        let mut entries = vec![0; d * d];
        for e in entries.iter_mut() {
            *e = (code % u64::from(p)) as u32;
            code /= u64::from(p);
        }
        FFMat { p, d, entries }
    }

    /// Entries read as base-`p` digits, first entry least significant.
    pub fn code(&self) -> u64 {
        self.entries
            .iter()
            .rev()
            .fold(0, |acc, &x| acc * u64::from(self.p) + u64::from(x))
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.d + j]
    }

    pub fn mul(&self, other: &FFMat) -> FFMat {
        let d = self.d;
        let p = u64::from(self.p);
        let mut entries = vec![0u32; d * d];
        for i in 0..d {
            for j in 0..d {
                let mut acc = 0u64;
                for k in 0..d {
                    acc += u64::from(self.entries[i * d + k]) * u64::from(other.entries[k * d + j]);
                }
                entries[i * d + j] = (acc % p) as u32;
            }
        }
        FFMat {
            p: self.p,
            d,
            entries,
        }
    }

    pub fn add(&self, other: &FFMat) -> FFMat {
        FFMat {
            p: self.p,
            d: self.d,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| (a + b) % self.p)
                .collect(),
        }
    }

    pub fn det(&self) -> u32 {
        let d = self.d;
        let p = self.p;
        let pp = u64::from(p);
        let mut a = self.entries.clone();
        let mut det = 1u64;
        for col in 0..d {
            let Some(piv) = (col..d).find(|&r| a[r * d + col] != 0) else {
                return 0;
            };
            if piv != col {
                for j in 0..d {
                    a.swap(piv * d + j, col * d + j);
                }
                det = (pp - det) % pp;
            }
            let pv = a[col * d + col];
            det = det * u64::from(pv) % pp;
            let inv = u64::from(inv_mod(pv, p));
            for r in col + 1..d {
                let f = u64::from(a[r * d + col]) * inv % pp;
                if f == 0 {
                    continue;
                }
                for j in col..d {
                    let sub = f * u64::from(a[col * d + j]) % pp;
                    a[r * d + j] = ((u64::from(a[r * d + j]) + pp - sub) % pp) as u32;
                }
            }
        }
        det as u32
    }

    pub fn is_invertible(&self) -> bool {
        self.det() != 0
    }

    pub fn is_scalar(&self) -> bool {
        let c = self.entries.first().copied().unwrap_or(0);
        *self == FFMat::scalar(self.p, self.d, c)
    }

    /// Image of a column vector.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        let d = self.d;
        let p = u64::from(self.p);
        (0..d)
            .map(|i| {
                let s: u64 = (0..d)
                    .map(|k| u64::from(self.entries[i * d + k]) * u64::from(v[k]))
                    .sum();
                (s % p) as u32
            })
            .collect()
    }
}

impl fmt::Display for FFMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .chunks(self.d)
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

/// Incrementally maintained row-echelon basis of a subspace of `F_p^n`.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    p: u32,
    rows: Vec<(usize, Vec<u32>)>,
}

impl EchelonBasis {
    pub fn new(p: u32) -> Self {
        EchelonBasis {
            p,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let p = u64::from(self.p);
        let mut v = v.to_vec();
        for (piv, row) in &self.rows {
            let c = u64::from(v[*piv]);
            if c == 0 {
                continue;
            }
            for (x, &r) in v.iter_mut().zip(row) {
                *x = ((u64::from(*x) + p - c * u64::from(r) % p) % p) as u32;
            }
        }
        v
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Adds `v`; returns false if it was already in the span.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        let mut r = self.reduce(v);
        let Some(piv) = r.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = u64::from(inv_mod(r[piv], self.p));
        let p = u64::from(self.p);
        for x in r.iter_mut() {
            *x = (u64::from(*x) * inv % p) as u32;
        }
        // keep existing rows reduced at the new pivot
        for (_, row) in self.rows.iter_mut() {
            let c = u64::from(row[piv]);
            if c != 0 {
                for (x, &y) in row.iter_mut().zip(&r) {
                    *x = ((u64::from(*x) + p - c * u64::from(y) % p) % p) as u32;
                }
            }
        }
        self.rows.push((piv, r));
        true
    }

    pub fn basis(&self) -> impl Iterator<Item = &[u32]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }
}

/// Basis of `{x : A x = 0}` for `A` given by its rows.
pub fn nullspace(rows: &[Vec<u32>], ncols: usize, p: u32) -> Vec<Vec<u32>> {
    let pp = u64::from(p);
    let mut a: Vec<Vec<u32>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, piv);
        let inv = u64::from(inv_mod(a[r][c], p));
        for x in a[r].iter_mut() {
            *x = (u64::from(*x) * inv % pp) as u32;
        }
        for i in 0..a.len() {
            if i != r && a[i][c] != 0 {
                let f = u64::from(a[i][c]);
                let pivot_row = a[r].clone();
                for (x, &y) in a[i].iter_mut().zip(&pivot_row) {
                    *x = ((u64::from(*x) + pp - f * u64::from(y) % pp) % pp) as u32;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u32; ncols];
            v[f] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = ((pp - u64::from(a[i][f])) % pp) as u32;
            }
            v
        })
        .collect()
}
