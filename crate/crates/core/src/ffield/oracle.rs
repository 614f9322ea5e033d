use std::collections::HashSet;

use num_traits::Zero;

use super::matrix::{nullspace, EchelonBasis, FFMat};
use crate::error::{Error, Result};
use crate::numtheory::is_prime;
use crate::Int;

/// Largest `p^{d²}` for which all matrices are enumerated.
const MATRIX_SPACE_GUARD: u64 = 20_000;
/// Largest `|GL_d|^m` for direct orbit enumeration.
const TUPLE_GUARD: u64 = 4_000_000;
/// Largest `|GL_d|` for the quadratic centralizer computation.
const GROUP_GUARD: usize = 5_000;

fn check_field(d: usize, p: u32) -> Result<()> {
    if d == 0 {
        return Err(Error::InvalidArgument(
            "dimension must be at least 1".into(),
        ));
    }
    if !is_prime(u64::from(p)) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    let space = u64::from(p).checked_pow((d * d) as u32);
    if space.is_none_or(|s| s > MATRIX_SPACE_GUARD) {
        return Err(Error::SizeGuard(format!("{p}^{} matrices", d * d)));
    }
    Ok(())
}

/// `|GL_d(F_q)| = Π_{i<d} (q^d - q^i)`.
pub fn gl_order(d: usize, q: u64) -> Int {
    (0..d)
        .map(|i| Int::from(q).pow(d as u32) - Int::from(q).pow(i as u32))
        .product()
}

/// All invertible `d × d` matrices over `F_p`, ordered by [`FFMat::code`].
pub fn gl_enumerate(d: usize, p: u32) -> Result<Vec<FFMat>> {
    check_field(d, p)?;
    let space = u64::from(p).pow((d * d) as u32);
    Ok((0..space)
        .map(|c| FFMat::from_code(p, d, c))
        .filter(FFMat::is_invertible)
        .collect())
}

/// `m`-tuple of invertible matrices, a representation of `F_m`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RepTuple {
    mats: Vec<FFMat>,
}

impl RepTuple {
    pub fn new(mats: Vec<FFMat>) -> Result<Self> {
        let Some(first) = mats.first() else {
            return Err(Error::InvalidArgument("empty tuple".into()));
        };
        let (p, d) = (first.p(), first.d());
        if mats.iter().any(|x| x.p() != p || x.d() != d) {
            return Err(Error::InvalidArgument("mixed field or dimension".into()));
        }
        if mats.iter().any(|x| !x.is_invertible()) {
            return Err(Error::InvalidArgument(
                "tuple entries must be invertible".into(),
            ));
        }
        Ok(RepTuple { mats })
    }

    pub fn mats(&self) -> &[FFMat] {
        &self.mats
    }

    pub fn p(&self) -> u32 {
        self.mats[0].p()
    }

    pub fn d(&self) -> usize {
        self.mats[0].d()
    }

    /// `(g X_i g⁻¹)_i` given `g` and `g⁻¹`.
    pub fn conjugate(&self, g: &FFMat, g_inv: &FFMat) -> RepTuple {
        RepTuple {
            mats: self.mats.iter().map(|x| g.mul(x).mul(g_inv)).collect(),
        }
    }
}

/// Dimension of the unital algebra generated by the tuple.
pub fn algebra_span(t: &RepTuple) -> usize {
    let (p, d) = (t.p(), t.d());
    let mut basis = EchelonBasis::new(p);
    let mut queue = Vec::new();
    let id = FFMat::identity(p, d);
    for x in std::iter::once(&id).chain(t.mats()) {
        if basis.insert(x.entries()) {
            queue.push(x.clone());
        }
    }
    // closing the span under left multiplication by generators gives all words
    while let Some(b) = queue.pop() {
        for x in t.mats() {
            let y = x.mul(&b);
            if basis.insert(y.entries()) {
                queue.push(y);
            }
        }
    }
    basis.dim()
}

/// Structure of the endomorphism algebra `E` (simultaneous centralizer).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EndoAlgebra {
    pub dim: usize,
    /// `dim rad E` when `E` is local, i.e. its non-units form a subspace.
    pub radical_dim: Option<usize>,
}

impl EndoAlgebra {
    pub fn is_local(&self) -> bool {
        self.radical_dim.is_some()
    }

    /// `dim E/rad E`; for a local algebra this is the degree of its residue
    /// field over `F_p`.
    pub fn residue_dim(&self) -> Option<usize> {
        self.radical_dim.map(|r| self.dim - r)
    }

    pub fn is_absolutely_indecomposable(&self) -> bool {
        self.residue_dim() == Some(1)
    }
}

/// Basis of `{Y : X_i Y = Y X_i for all i}`, as flattened matrices.
pub fn centralizer_basis(t: &RepTuple) -> Vec<Vec<u32>> {
    let (p, d) = (t.p(), t.d());
    let n = d * d;
    let mut rows = Vec::new();
    // (XY - YX)_{ij} = Σ_k X_ik Y_kj - Y_ik X_kj, linear in the entries of Y
    for x in t.mats() {
        for i in 0..d {
            for j in 0..d {
                let mut row = vec![0u32; n];
                for k in 0..d {
                    row[k * d + j] = (row[k * d + j] + x.get(i, k)) % p;
                    row[i * d + k] = (row[i * d + k] + p - x.get(k, j)) % p;
                }
                rows.push(row);
            }
        }
    }
    nullspace(&rows, n, p)
}

pub fn endo_algebra(t: &RepTuple) -> Result<EndoAlgebra> {
    let (p, d) = (t.p(), t.d());
    if !(d <= 2 || (d == 3 && p == 2)) {
        return Err(Error::SizeGuard(format!(
            "endomorphism algebra enumeration for d = {d}, p = {p}"
        )));
    }
    let basis = centralizer_basis(t);
    let dim = basis.len();
    let size = u64::from(p).pow(dim as u32);
    let mut non_units = EchelonBasis::new(p);
    let mut non_unit_count = 0u64;
    let mut coeffs = vec![0u32; dim];
    for code in 0..size {
        let mut c = code;
        for x in coeffs.iter_mut() {
            *x = (c % u64::from(p)) as u32;
            c /= u64::from(p);
        }
        let mut entries = vec![0u32; d * d];
        for (a, b) in coeffs.iter().zip(&basis) {
            for (e, &v) in entries.iter_mut().zip(b) {
                *e = (*e + a * v) % p;
            }
        }
        if !FFMat::new(p, d, entries.clone()).is_invertible() {
            non_unit_count += 1;
            non_units.insert(&entries);
        }
    }
    // the non-units form a subspace exactly when their span has no more
    // elements than they do
    let span_size = u64::from(p).pow(non_units.dim() as u32);
    let radical_dim = (span_size == non_unit_count).then_some(non_units.dim());
    Ok(EndoAlgebra { dim, radical_dim })
}

pub fn is_absolutely_irreducible(t: &RepTuple) -> bool {
    algebra_span(t) == t.d() * t.d()
}

/// Subspace of `F_p^d` with a basis and its full member set.
#[derive(Clone, Debug)]
struct Subspace {
    basis: Vec<Vec<u32>>,
    members: HashSet<Vec<u32>>,
}

fn all_vectors(d: usize, p: u32) -> Vec<Vec<u32>> {
    let total = u64::from(p).pow(d as u32);
    (0..total)
        .map(|mut c| {
            (0..d)
                .map(|_| {
                    let x = (c % u64::from(p)) as u32;
                    c /= u64::from(p);
                    x
                })
                .collect()
        })
        .collect()
}

fn span_members(basis: &[Vec<u32>], d: usize, p: u32) -> HashSet<Vec<u32>> {
    let mut out = HashSet::new();
    let total = u64::from(p).pow(basis.len() as u32);
    for mut c in 0..total {
        let mut v = vec![0u32; d];
        for b in basis {
            let a = (c % u64::from(p)) as u32;
            c /= u64::from(p);
            for (x, &y) in v.iter_mut().zip(b) {
                *x = (*x + a * y) % p;
            }
        }
        out.insert(v);
    }
    out
}

/// Every subspace of `F_p^d`.
fn all_subspaces(d: usize, p: u32) -> Vec<Subspace> {
    let vectors = all_vectors(d, p);
    let mut seen: HashSet<Vec<Vec<u32>>> = HashSet::new();
    let mut out = Vec::new();
    let mut frontier = vec![Vec::<Vec<u32>>::new()];
    while let Some(basis) = frontier.pop() {
        let members = span_members(&basis, d, p);
        let mut key: Vec<Vec<u32>> = members.iter().cloned().collect();
        key.sort();
        if !seen.insert(key) {
            continue;
        }
        for v in &vectors {
            if !members.contains(v) {
                let mut b = basis.clone();
                b.push(v.clone());
                frontier.push(b);
            }
        }
        out.push(Subspace { basis, members });
    }
    out
}

/// Semisimplicity test by brute force: every invariant subspace must have
/// an invariant complement.
pub struct SemisimplicityTester {
    d: usize,
    subspaces: Vec<Subspace>,
}

impl SemisimplicityTester {
    pub fn new(d: usize, p: u32) -> Result<Self> {
        check_field(d, p)?;
        if u64::from(p).pow(d as u32) > 125 {
            return Err(Error::SizeGuard(format!("subspaces of F_{p}^{d}")));
        }
        Ok(SemisimplicityTester {
            d,
            subspaces: all_subspaces(d, p),
        })
    }

    pub fn is_semisimple(&self, t: &RepTuple) -> bool {
        let invariant: Vec<&Subspace> = self
            .subspaces
            .iter()
            .filter(|s| {
                s.basis
                    .iter()
                    .all(|b| t.mats().iter().all(|x| s.members.contains(&x.apply(b))))
            })
            .collect();
        let zero = vec![0u32; self.d];
        invariant.iter().all(|u| {
            invariant.iter().any(|w| {
                u.basis.len() + w.basis.len() == self.d
                    && u.members
                        .iter()
                        .all(|v| *v == zero || !w.members.contains(v))
            })
        })
    }
}

/// Indexed copy of `GL_d(F_p)` with inverses.
pub struct GlGroup {
    p: u32,
    d: usize,
    mats: Vec<FFMat>,
    inverses: Vec<usize>,
    index: Vec<u32>,
}

impl GlGroup {
    pub fn new(d: usize, p: u32) -> Result<Self> {
        let mats = gl_enumerate(d, p)?;
        let space = u64::from(p).pow((d * d) as u32) as usize;
        let mut index = vec![u32::MAX; space];
        for (i, x) in mats.iter().enumerate() {
            index[x.code() as usize] = i as u32;
        }
        let id = FFMat::identity(p, d);
        let mut inverses = vec![usize::MAX; mats.len()];
        for i in 0..mats.len() {
            if inverses[i] != usize::MAX {
                continue;
            }
            for (j, y) in mats.iter().enumerate() {
                if mats[i].mul(y) == id {
                    inverses[i] = j;
                    inverses[j] = i;
                    break;
                }
            }
        }
        Ok(GlGroup {
            p,
            d,
            mats,
            inverses,
            index,
        })
    }

    pub fn order(&self) -> usize {
        self.mats.len()
    }

    pub fn mats(&self) -> &[FFMat] {
        &self.mats
    }

    fn index_of(&self, x: &FFMat) -> usize {
        self.index[x.code() as usize] as usize
    }

    fn conj_table(&self) -> Vec<Vec<u32>> {
        self.mats
            .iter()
            .enumerate()
            .map(|(gi, g)| {
                let g_inv = &self.mats[self.inverses[gi]];
                self.mats
                    .iter()
                    .map(|x| self.index_of(&g.mul(x).mul(g_inv)) as u32)
                    .collect()
            })
            .collect()
    }

    /// Centralizer order of every element.
    pub fn centralizer_orders(&self) -> Result<Vec<u64>> {
        if self.order() > GROUP_GUARD {
            return Err(Error::SizeGuard(format!(
                "|GL_{}(F_{})| centralizers",
                self.d, self.p
            )));
        }
        Ok(self
            .mats
            .iter()
            .map(|g| self.mats.iter().filter(|h| g.mul(h) == h.mul(g)).count() as u64)
            .collect())
    }

    /// Conjugacy classes as `(representative, class size, centralizer order)`.
    pub fn conjugacy_classes(&self) -> Result<Vec<ConjugacyClass>> {
        let cent = self.centralizer_orders()?;
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for (i, x) in self.mats.iter().enumerate() {
            if seen[i] {
                continue;
            }
            let mut size = 0;
            for (gi, g) in self.mats.iter().enumerate() {
                let c = self.index_of(&g.mul(x).mul(&self.mats[self.inverses[gi]]));
                if !seen[c] {
                    seen[c] = true;
                    size += 1;
                }
            }
            out.push(ConjugacyClass {
                representative: x.clone(),
                size,
                centralizer_order: cent[i],
            });
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: FFMat,
    pub size: u64,
    pub centralizer_order: u64,
}

/// Orbit count of `GL_d(F_p)` on `GL_d(F_p)^m`, by both routes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitCensus {
    /// `Σ_{classes} |C(g)|^{m-1}`.
    pub burnside: Int,
    /// Direct orbit partition, when the tuple space is small enough.
    pub direct: Option<u64>,
}

impl OrbitCensus {
    pub fn count(&self) -> &Int {
        &self.burnside
    }

    pub fn routes_agree(&self) -> bool {
        self.direct.is_none_or(|d| Int::from(d) == self.burnside)
    }
}

pub fn burnside_count(d: usize, p: u32, m: u32) -> Result<Int> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    let g = GlGroup::new(d, p)?;
    Ok(g.conjugacy_classes()?
        .iter()
        .map(|c| Int::from(c.centralizer_order).pow(m - 1))
        .fold(Int::zero(), |a, b| a + b))
}

pub fn orbit_census(d: usize, p: u32, m: u32) -> Result<OrbitCensus> {
    let burnside = burnside_count(d, p, m)?;
    let direct = match classify_orbits(d, p, m, false) {
        Ok(c) => Some(c.orbits),
        Err(Error::SizeGuard(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(OrbitCensus { burnside, direct })
}

/// Orbit classification of `Hom(F_m, GL_d(F_p))` under conjugation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitClassification {
    pub d: usize,
    pub p: u32,
    pub m: u32,
    pub orbits: u64,
    pub abs_irreducible: u64,
    pub abs_indecomposable: u64,
    pub semisimple: u64,
}

fn tuple_space(order: usize, m: u32) -> Result<u64> {
    (order as u64)
        .checked_pow(m)
        .filter(|&t| t <= TUPLE_GUARD)
        .ok_or_else(|| Error::SizeGuard(format!("{order}^{m} tuples")))
}

/// Enumerates all orbits; with `classify` also tests each representative
/// for absolute irreducibility, absolute indecomposability and
/// semisimplicity.
pub fn classify_orbits(d: usize, p: u32, m: u32, classify: bool) -> Result<OrbitClassification> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    let g = GlGroup::new(d, p)?;
    let total = tuple_space(g.order(), m)?;
    let tester = if classify {
        if !(d <= 2 || (d == 3 && p == 2)) {
            return Err(Error::SizeGuard(format!(
                "classification for d = {d}, p = {p}"
            )));
        }
        Some(SemisimplicityTester::new(d, p)?)
    } else {
        None
    };
    let conj = g.conj_table();
    let base = g.order() as u64;
    let mm = m as usize;
    let mut visited = vec![false; total as usize];
    let mut out = OrbitClassification {
        d,
        p,
        m,
        orbits: 0,
        abs_irreducible: 0,
        abs_indecomposable: 0,
        semisimple: 0,
    };
    let mut tuple = vec![0u32; mm];
    let mut image = vec![0u32; mm];
    for code in 0..total {
        if visited[code as usize] {
            continue;
        }
        let mut c = code;
        for x in tuple.iter_mut() {
            *x = (c % base) as u32;
            c /= base;
        }
        for row in &conj {
            for (dst, &x) in image.iter_mut().zip(&tuple) {
                *dst = row[x as usize];
            }
            let c = image
                .iter()
                .rev()
                .fold(0u64, |acc, &x| acc * base + u64::from(x));
            visited[c as usize] = true;
        }
        out.orbits += 1;
        if let Some(tester) = &tester {
            let rep = RepTuple {
                mats: tuple.iter().map(|&i| g.mats[i as usize].clone()).collect(),
            };
            if is_absolutely_irreducible(&rep) {
                out.abs_irreducible += 1;
            }
            if endo_algebra(&rep)?.is_absolutely_indecomposable() {
                out.abs_indecomposable += 1;
            }
            if tester.is_semisimple(&rep) {
                out.semisimple += 1;
            }
        }
    }
    Ok(out)
}

pub fn count_abs_irr(d: usize, p: u32, m: u32) -> Result<u64> {
    Ok(classify_orbits(d, p, m, true)?.abs_irreducible)
}

pub fn count_abs_ind(d: usize, p: u32, m: u32) -> Result<u64> {
    Ok(classify_orbits(d, p, m, true)?.abs_indecomposable)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(p: u32, e: &[i64]) -> FFMat {
        let d = (e.len() as f64).sqrt() as usize;
        FFMat::from_ints(p, d, e)
    }

    #[test]
    fn group_orders() {
        assert_eq!(gl_enumerate(2, 2).unwrap().len(), 6);
        assert_eq!(gl_enumerate(1, 5).unwrap().len(), 4);
        assert_eq!(gl_enumerate(2, 3).unwrap().len(), 48);
        assert_eq!(gl_enumerate(3, 2).unwrap().len(), 168);
        for (d, p) in [(1, 7), (2, 5), (3, 2)] {
            assert_eq!(
                Int::from(gl_enumerate(d, p).unwrap().len()),
                gl_order(d, u64::from(p))
            );
        }
        assert!(matches!(gl_enumerate(3, 5), Err(Error::SizeGuard(_))));
        assert!(gl_enumerate(2, 4).is_err());
    }

    #[test]
    fn algebra_span_examples() {
        let id = FFMat::identity(2, 2);
        assert_eq!(algebra_span(&RepTuple::new(vec![id.clone()]).unwrap()), 1);
        // diag(1, 2) over F_3 and the swap generate M_2(F_3)
        let diag = mat(3, &[1, 0, 0, 2]);
        let swap = mat(3, &[0, 1, 1, 0]);
        assert_eq!(algebra_span(&RepTuple::new(vec![diag, swap]).unwrap()), 4);
        // over F_2: a non-scalar upper triangular unit and the swap
        let n = mat(2, &[1, 1, 0, 1]);
        let s = mat(2, &[0, 1, 1, 0]);
        assert_eq!(algebra_span(&RepTuple::new(vec![n, s]).unwrap()), 4);
        let one = RepTuple::new(vec![mat(5, &[3]), mat(5, &[2])]).unwrap();
        assert_eq!(algebra_span(&one), 1);
    }

    #[test]
    fn endo_algebra_examples() {
        let diag = mat(3, &[1, 0, 0, 2]);
        let swap = mat(3, &[0, 1, 1, 0]);
        let irr = RepTuple::new(vec![diag, swap]).unwrap();
        let e = endo_algebra(&irr).unwrap();
        assert_eq!(
            (e.dim, e.radical_dim, e.residue_dim()),
            (1, Some(0), Some(1))
        );

        let id = RepTuple::new(vec![FFMat::identity(2, 2)]).unwrap();
        let e = endo_algebra(&id).unwrap();
        assert_eq!(e.dim, 4);
        assert!(!e.is_local());
        assert!(!e.is_absolutely_indecomposable());

        let jordan = mat(2, &[1, 1, 0, 1]);
        let t = RepTuple::new(vec![jordan.clone(), jordan]).unwrap();
        let e = endo_algebra(&t).unwrap();
        assert_eq!(
            (e.dim, e.radical_dim, e.residue_dim()),
            (2, Some(1), Some(1))
        );
        assert!(e.is_absolutely_indecomposable());

        // irreducible but not absolutely: companion matrix of x^2 + x + 1 over F_2
        let c = mat(2, &[0, 1, 1, 1]);
        let t = RepTuple::new(vec![c]).unwrap();
        let e = endo_algebra(&t).unwrap();
        assert_eq!(e.residue_dim(), Some(2));
        assert!(!is_absolutely_irreducible(&t));
    }

    #[test]
    fn semisimplicity() {
        let tester = SemisimplicityTester::new(2, 2).unwrap();
        let jordan = RepTuple::new(vec![mat(2, &[1, 1, 0, 1])]).unwrap();
        assert!(!tester.is_semisimple(&jordan));
        let id = RepTuple::new(vec![FFMat::identity(2, 2)]).unwrap();
        assert!(tester.is_semisimple(&id));
        let c = RepTuple::new(vec![mat(2, &[0, 1, 1, 1])]).unwrap();
        assert!(tester.is_semisimple(&c));
        assert_eq!(all_subspaces(2, 3).len(), 6);
        assert_eq!(all_subspaces(3, 2).len(), 16);
    }

    #[test]
    fn burnside_examples() {
        assert_eq!(burnside_count(2, 2, 2).unwrap(), Int::from(11));
        assert_eq!(burnside_count(1, 3, 2).unwrap(), Int::from(4));
        let g = GlGroup::new(2, 3).unwrap();
        let classes = g.conjugacy_classes().unwrap();
        assert_eq!(classes.len(), 8);
        assert_eq!(classes.iter().map(|c| c.size).sum::<u64>(), 48);
        assert!(classes.iter().all(|c| c.size * c.centralizer_order == 48));
    }

    #[test]
    fn census_routes_agree() {
        for (d, p, m) in [(2, 2, 2), (1, 3, 2), (2, 3, 2), (1, 5, 3)] {
            let c = orbit_census(d, p, m).unwrap();
            assert!(c.direct.is_some());
            assert!(c.routes_agree(), "{d} {p} {m}: {c:?}");
        }
    }

    #[test]
    fn rank_two_degree_two_over_f2() {
        let c = classify_orbits(2, 2, 2, true).unwrap();
        assert_eq!(c.orbits, 11);
        assert_eq!(c.abs_irreducible, 3);
        assert_eq!(c.abs_indecomposable, 6);
        assert_eq!(c.semisimple, 8);
        assert_eq!(count_abs_irr(1, 5, 2).unwrap(), 16);
    }

    #[test]
    fn rep_tuple_validation() {
        assert!(RepTuple::new(vec![]).is_err());
        assert!(RepTuple::new(vec![mat(2, &[1, 1, 1, 1])]).is_err());
        assert!(RepTuple::new(vec![mat(2, &[1]), mat(3, &[1])]).is_err());
    }
}
