//! Brute-force census of permutation representations `Hom(F_m, S_n) = S_n^m`
//! up to simultaneous conjugation.

use num_traits::{One, Zero};

use super::perms::{all_perms, Perm};
use super::subgroups::weighted_subgroup_counts;
use crate::error::{Error, Result};
use crate::numtheory::factorial;
use crate::plethystic::pleth_exp;
use crate::{Int, Rat, RatSeries};

const TUPLE_GUARD: u64 = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub n: usize,
    pub m: u32,
    /// `|R_n| = (n!)^m`.
    pub tuples: u64,
    /// `|R_n / S_n|`.
    pub orbits: u64,
    /// Transitive classes, `|I_n|`.
    pub transitive: u64,
    /// Transitive classes with trivial automorphism group.
    pub transitive_rigid: u64,
    /// `Σ_{M ∈ R_n/S_n} 1/|Aut M|`.
    pub weighted_all: Rat,
    /// `Σ_{M ∈ I_n} 1/|Aut M|`.
    pub weighted_transitive: Rat,
}

struct SymGroup {
    n: usize,
    perms: Vec<Perm>,
    /// conj[g][x] = index of g x g⁻¹
    conj: Vec<Vec<u32>>,
}

impl SymGroup {
    fn new(n: usize) -> Self {
        let perms = all_perms(n);
        let index = |p: &Perm| perms.binary_search(p).expect("all permutations listed");
        let conj = perms
            .iter()
            .map(|g| {
                let gi = g.inverse();
                perms
                    .iter()
                    .map(|x| index(&g.compose(x).compose(&gi)) as u32)
                    .collect()
            })
            .collect();
        SymGroup { n, perms, conj }
    }

    fn order(&self) -> usize {
        self.perms.len()
    }

    fn is_transitive(&self, tuple: &[u32]) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for &x in tuple {
                let j = self.perms[x as usize].image(i);
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

fn decode(mut code: u64, base: u64, m: usize, out: &mut [u32]) {
    for slot in out.iter_mut().take(m) {
        *slot = (code % base) as u32;
        code /= base;
    }
}

fn encode(tuple: &[u32], base: u64) -> u64 {
    tuple
        .iter()
        .rev()
        .fold(0, |acc, &x| acc * base + u64::from(x))
}

/// Orbits of `S_n` on `S_n^m`; the representative of each orbit is its
/// smallest element in the enumeration order.
pub fn perm_rep_census(n: usize, m: u32) -> Result<CensusRow> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidArgument(
            "census needs n >= 1 and m >= 1".into(),
        ));
    }
    let group_order = (1..=n as u64).product::<u64>();
    let total = group_order
        .checked_pow(m)
        .filter(|&t| t <= TUPLE_GUARD)
        .ok_or_else(|| Error::SizeGuard(format!("(|S_{n}|)^{m} tuples")))?;
    let g = SymGroup::new(n);
    let base = group_order;
    let mm = m as usize;

    let mut visited = vec![false; total as usize];
    let mut row = CensusRow {
        n,
        m,
        tuples: total,
        orbits: 0,
        transitive: 0,
        transitive_rigid: 0,
        weighted_all: Rat::zero(),
        weighted_transitive: Rat::zero(),
    };
    let mut tuple = vec![0u32; mm];
    let mut image = vec![0u32; mm];
    for code in 0..total {
        if visited[code as usize] {
            continue;
        }
        decode(code, base, mm, &mut tuple);
        let mut orbit_size = 0u64;
        for conj in &g.conj {
            for (dst, &x) in image.iter_mut().zip(&tuple) {
                *dst = conj[x as usize];
            }
            let c = encode(&image, base) as usize;
            if !visited[c] {
                visited[c] = true;
                orbit_size += 1;
            }
        }
        let aut = g.order() as u64 / orbit_size;
        let weight = Rat::new(Int::one(), Int::from(aut));
        row.orbits += 1;
        row.weighted_all += &weight;
        if g.is_transitive(&tuple) {
            row.transitive += 1;
            row.weighted_transitive += &weight;
            if aut == 1 {
                row.transitive_rigid += 1;
            }
        }
    }
    Ok(row)
}

/// Outcome of the census identities for `n = 1..=nmax`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusIdentities {
    pub rows: Vec<CensusRow>,
    /// `Σ_{R_n/S_n} 1/|Aut| = |R_n|/|S_n|` for each `n`.
    pub orbit_weights: bool,
    /// `Σ_n |R_n|/|S_n| t^n = exp(Σ_n Σ_{I_n} t^n/|Aut|)`.
    pub exp_formula: bool,
    /// `Σ_n |R_n/S_n| t^n = Exp(Σ_n |I_n| t^n)`.
    pub pleth_exp_formula: bool,
    /// `Σ_{I_n} 1/|Aut| = J_n / n`.
    pub subgroup_weights: bool,
}

impl CensusIdentities {
    pub fn all_hold(&self) -> bool {
        self.orbit_weights && self.exp_formula && self.pleth_exp_formula && self.subgroup_weights
    }
}

pub fn verify_census_identities(nmax: usize, m: u32) -> Result<CensusIdentities> {
    let rows: Vec<CensusRow> = (1..=nmax)
        .map(|n| perm_rep_census(n, m))
        .collect::<Result<_>>()?;
    let per_group = |n: usize| Rat::from_integer(factorial(n as u64).pow(m - 1));

    let orbit_weights = rows.iter().all(|r| r.weighted_all == per_group(r.n));

    let all_series = RatSeries::from_fn(nmax, per_group);
    let weighted = RatSeries::from_fn(nmax, |n| {
        if n == 0 {
            Rat::zero()
        } else {
            rows[n - 1].weighted_transitive.clone()
        }
    });
    let exp_formula = weighted.exp()? == all_series;

    let orbit_series = RatSeries::from_fn(nmax, |n| {
        if n == 0 {
            Rat::one()
        } else {
            Rat::from_integer(Int::from(rows[n - 1].orbits))
        }
    });
    let transitive = RatSeries::from_fn(nmax, |n| {
        if n == 0 {
            Rat::zero()
        } else {
            Rat::from_integer(Int::from(rows[n - 1].transitive))
        }
    });
    let pleth_exp_formula = pleth_exp(&transitive)? == orbit_series;

    let j_over_n = weighted_subgroup_counts(m, nmax)?;
    let subgroup_weights = rows
        .iter()
        .zip(&j_over_n)
        .all(|(r, w)| &r.weighted_transitive == w);

    Ok(CensusIdentities {
        rows,
        orbit_weights,
        exp_formula,
        pleth_exp_formula,
        subgroup_weights,
    })
}
