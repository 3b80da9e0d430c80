//! Exact integer and rational linear algebra over lattices.
//!
//! Everything downstream (cones, fans, cobordisms) reduces to a handful of
//! primitives implemented here: gcd normalization, Smith normal form,
//! integer kernels, saturated span lattices, lattice-index determinants and
//! unique dependence relations. All arithmetic is arbitrary precision; there
//! is no floating point anywhere in this crate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

/// An integral point of the ambient lattice `N ≅ Z^n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticeVector(pub Vec<Int>);

/// An exact rational point of `N ⊗ Q`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalVector(pub Vec<Rat>);

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl LatticeVector {
    pub fn from_i64(coords: &[i64]) -> Self {
        LatticeVector(coords.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        LatticeVector(vec![Int::zero(); dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = vec![Int::zero(); dim];
        v[i] = Int::one();
        LatticeVector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        LatticeVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        LatticeVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Self {
        LatticeVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: &Int) -> Self {
        LatticeVector(self.0.iter().map(|a| a * k).collect())
    }

    /// Pairing ⟨self, other⟩ = Σ self_i · other_i.
    pub fn dot(&self, other: &Self) -> Int {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn dot_rat(&self, other: &RationalVector) -> Rat {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| Rat::from(a.clone()) * b)
            .sum()
    }

    /// Gcd of all coordinates (0 for the zero vector).
    pub fn content(&self) -> Int {
        self.0
            .iter()
            .fold(Int::zero(), |acc, c| acc.gcd(&c.abs()))
    }

    pub fn to_rational(&self) -> RationalVector {
        RationalVector(self.0.iter().map(|c| Rat::from(c.clone())).collect())
    }
}

impl RationalVector {
    pub fn zero(dim: usize) -> Self {
        RationalVector(vec![Rat::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        RationalVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        RationalVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &Rat) -> Self {
        RationalVector(self.0.iter().map(|a| a * k).collect())
    }

    pub fn dot(&self, other: &Self) -> Rat {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// Clears denominators and divides by the gcd; `None` for the zero vector.
    pub fn to_primitive(&self) -> Option<LatticeVector> {
        if self.is_zero() {
            return None;
        }
        let lcm = self
            .0
            .iter()
            .fold(Int::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<Int> = self
            .0
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let v = LatticeVector(ints);
        Some(primitive(&v).expect("nonzero"))
    }

    /// Exact integral vector, if all coordinates are integers.
    pub fn to_lattice(&self) -> Option<LatticeVector> {
        if self.0.iter().all(|c| c.denom().is_one()) {
            Some(LatticeVector(self.0.iter().map(|c| c.numer().clone()).collect()))
        } else {
            None
        }
    }
}

/// The unique (up to sign) integral dependence among an ordered vector list.
///
/// Invariants: Σ rᵢ·wᵢ = 0 exactly, the nonzero coefficients have gcd 1, and
/// the first nonzero coefficient is positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub coeffs: Vec<Int>,
}

impl Relation {
    /// Re-checks Σ rᵢ·wᵢ = 0 against the vectors the relation was built from.
    pub fn holds_for(&self, vs: &[LatticeVector]) -> bool {
        if vs.is_empty() || vs.len() != self.coeffs.len() {
            return false;
        }
        let dim = vs[0].dim();
        let mut acc = LatticeVector::zero(dim);
        for (r, v) in self.coeffs.iter().zip(vs) {
            acc = acc.add(&v.scale(r));
        }
        acc.is_zero()
    }
}

/// v / gcd(coords): the primitive generator of the ray through `v`.
pub fn primitive(v: &LatticeVector) -> Result<LatticeVector> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let g = v.content();
    Ok(LatticeVector(v.0.iter().map(|c| c / &g).collect()))
}

/// Dense integer matrix stored row-major; the workhorse behind SNF.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Int>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![Int::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Int::one();
        }
        m
    }

    pub fn from_rows(rows: &[LatticeVector]) -> Self {
        let r = rows.len();
        let c = rows.first().map(|v| v.dim()).unwrap_or(0);
        let mut data = Vec::with_capacity(r * c);
        for v in rows {
            assert_eq!(v.dim(), c, "inconsistent row dimensions");
            data.extend(v.0.iter().cloned());
        }
        IntMatrix { rows: r, cols: c, data }
    }

    pub fn from_cols(cols: &[LatticeVector]) -> Self {
        let c = cols.len();
        let r = cols.first().map(|v| v.dim()).unwrap_or(0);
        let mut m = Self::zero(r, c);
        for (j, v) in cols.iter().enumerate() {
            assert_eq!(v.dim(), r, "inconsistent column dimensions");
            for i in 0..r {
                m[(i, j)] = v.0[i].clone();
            }
        }
        m
    }

    pub fn row(&self, i: usize) -> LatticeVector {
        LatticeVector(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn col(&self, j: usize) -> LatticeVector {
        LatticeVector((0..self.rows).map(|i| self[(i, j)].clone()).collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row a += k * row b
    fn add_row(&mut self, a: usize, b: usize, k: &Int) {
        for j in 0..self.cols {
            let t = &self[(b, j)] * k;
            self[(a, j)] += t;
        }
    }

    /// col a += k * col b
    fn add_col(&mut self, a: usize, b: usize, k: &Int) {
        for i in 0..self.rows {
            let t = &self[(i, b)] * k;
            self[(i, a)] += t;
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let t = -self[(a, j)].clone();
            self[(a, j)] = t;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = Int;
    fn index(&self, (i, j): (usize, usize)) -> &Int {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Int {
        &mut self.data[i * self.cols + j]
    }
}

/// Smith normal form `S = L·A·R` with unimodular transforms.
///
/// Only `R` is tracked (column operations); kernels and saturations need
/// nothing else. Diagonal entries are nonnegative, in divisibility order.
pub struct Smith {
    pub diag: Vec<Int>,
    pub rank: usize,
    /// Column transform: `A·R` has the zero columns exactly at `rank..cols`.
    pub right: IntMatrix,
}

pub fn smith_normal_form(a: &IntMatrix) -> Smith {
    let mut m = a.clone();
    let mut right = IntMatrix::identity(m.cols);
    let n = m.rows.min(m.cols);
    let mut t = 0;
    while t < n {
        // Bring the entry of smallest nonzero magnitude to the pivot; this
        // keeps quotients and intermediate entries small.
        let find_min = |m: &IntMatrix| {
            let mut best: Option<(usize, usize)> = None;
            for i in t..m.rows {
                for j in t..m.cols {
                    if m[(i, j)].is_zero() {
                        continue;
                    }
                    match best {
                        Some((bi, bj)) if m[(bi, bj)].abs() <= m[(i, j)].abs() => {}
                        _ => best = Some((i, j)),
                    }
                }
            }
            best
        };
        let Some((pi, pj)) = find_min(&m) else { break };
        m.swap_rows(t, pi);
        m.swap_cols(t, pj);
        right.swap_cols(t, pj);
        loop {
            // Reduce column t below the pivot. A nonzero remainder becomes
            // the new, strictly smaller pivot.
            let mut restart = false;
            for i in (t + 1)..m.rows {
                if m[(i, t)].is_zero() {
                    continue;
                }
                let q = div_nearest(&m[(i, t)], &m[(t, t)]);
                m.add_row(i, t, &-q);
                if !m[(i, t)].is_zero() {
                    m.swap_rows(i, t);
                    restart = true;
                    break;
                }
            }
            if restart {
                continue;
            }
            // Reduce row t right of the pivot.
            for j in (t + 1)..m.cols {
                if m[(t, j)].is_zero() {
                    continue;
                }
                let nq = -div_nearest(&m[(t, j)], &m[(t, t)]);
                m.add_col(j, t, &nq);
                right.add_col(j, t, &nq);
                if !m[(t, j)].is_zero() {
                    m.swap_cols(j, t);
                    right.swap_cols(j, t);
                    restart = true;
                    break;
                }
            }
            if restart {
                continue;
            }
            break;
        }
        t += 1;
    }
    // Normalize pivot signs.
    for i in 0..n {
        if m[(i, i)].is_negative() {
            m.negate_row(i);
        }
    }
    // Enforce the divisibility chain d_i | d_{i+1}.
    let mut rank = (0..n).take_while(|&i| !m[(i, i)].is_zero()).count();
    let mut again = true;
    while again {
        again = false;
        for i in 0..rank.saturating_sub(1) {
            let (a, b) = (m[(i, i)].clone(), m[(i + 1, i + 1)].clone());
            if (&b % &a).is_zero() {
                continue;
            }
            let g = a.gcd(&b);
            let l = (&a / &g) * &b;
            m[(i, i)] = g;
            m[(i + 1, i + 1)] = l;
            again = true;
        }
    }
    rank = (0..n).take_while(|&i| !m[(i, i)].is_zero()).count();
    Smith {
        diag: (0..n).map(|i| m[(i, i)].clone()).collect(),
        rank,
        right,
    }
}

/// Quotient rounded to nearest, so the remainder satisfies |r| ≤ |b|/2.
fn div_nearest(a: &Int, b: &Int) -> Int {
    let (mut q, r) = a.div_rem(b);
    if r.abs() * 2 > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

/// The divisibility fix in `smith_normal_form` only rewrites the diagonal, so
/// the tracked transform stays valid for rank and kernel purposes; diag values
/// are reported up to association, which is all callers use.
///
/// Basis of the integral kernel {x ∈ Z^cols : A·x = 0}. The basis is a
/// saturated lattice basis (every integral kernel vector is an integral
/// combination).
pub fn int_kernel(a: &IntMatrix) -> Vec<LatticeVector> {
    if a.rows == 0 {
        return (0..a.cols)
            .map(|j| LatticeVector::unit(a.cols, j))
            .collect();
    }
    let snf = smith_normal_form(a);
    (snf.rank..a.cols).map(|j| snf.right.col(j)).collect()
}

/// Rank of an integer matrix.
pub fn rank(a: &IntMatrix) -> usize {
    if a.rows == 0 || a.cols == 0 {
        return 0;
    }
    smith_normal_form(a).rank
}

/// Basis of the saturated lattice N ∩ span_Q(rows): integral vectors of the
/// rational row span.
pub fn span_lattice_basis(rows: &[LatticeVector]) -> Vec<LatticeVector> {
    if rows.is_empty() {
        return vec![];
    }
    let dim = rows[0].dim();
    let a = IntMatrix::from_rows(rows);
    // Functionals vanishing on the span.
    let perp = int_kernel(&a);
    if perp.is_empty() {
        // Full span: the standard basis works.
        return (0..dim).map(|j| LatticeVector::unit(dim, j)).collect();
    }
    let h = IntMatrix::from_rows(&perp);
    int_kernel(&h)
}

/// Integral functionals vanishing on span_Q(rows).
pub fn span_equations(rows: &[LatticeVector], dim: usize) -> Vec<LatticeVector> {
    if rows.is_empty() {
        return (0..dim).map(|j| LatticeVector::unit(dim, j)).collect();
    }
    int_kernel(&IntMatrix::from_rows(rows))
}

/// Signed determinant of a square integer matrix (Bareiss fraction-free).
pub fn signed_det(a: &IntMatrix) -> Int {
    assert_eq!(a.rows, a.cols, "determinant needs a square matrix");
    let n = a.rows;
    if n == 0 {
        return Int::one();
    }
    let mut m = a.clone();
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if m[(k, k)].is_zero() {
            let swap = ((k + 1)..n).find(|&i| !m[(i, k)].is_zero());
            match swap {
                Some(i) => {
                    m.swap_rows(k, i);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let t = &m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)];
                m[(i, j)] = &t / &prev;
            }
            m[(i, k)] = Int::zero();
        }
        prev = m[(k, k)].clone();
    }
    sign * m[(n - 1, n - 1)].clone()
}

/// Lattice index determinant of `k` independent vectors: the index of the
/// sublattice they generate inside N ∩ span_Q, i.e. the product of the Smith
/// diagonal. For k = n this is |det| in the ordinary sense.
pub fn det(vs: &[LatticeVector]) -> Result<Int> {
    if vs.is_empty() {
        return Ok(Int::one());
    }
    let a = IntMatrix::from_rows(vs);
    let snf = smith_normal_form(&a);
    if snf.rank < vs.len() {
        return Err(Error::DependentVectors);
    }
    Ok(snf.diag[..snf.rank].iter().product())
}

/// Signed determinant of `vs` expressed in the given basis of their span
/// lattice. Used where the alternating sign pattern matters.
pub fn signed_det_in_basis(vs: &[LatticeVector], basis: &[LatticeVector]) -> Result<Int> {
    let coords: Vec<LatticeVector> = vs
        .iter()
        .map(|v| coords_in_lattice_basis(v, basis).ok_or(Error::DependentVectors))
        .collect::<Result<_>>()?;
    if coords.len() != basis.len() {
        return Err(Error::DimensionMismatch {
            expected: basis.len(),
            got: coords.len(),
        });
    }
    Ok(signed_det(&IntMatrix::from_rows(&coords)))
}

/// Integral coordinates of `v` in a saturated lattice basis, if `v` lies in
/// the span. Solves exactly over the rationals and demands integrality.
pub fn coords_in_lattice_basis(
    v: &LatticeVector,
    basis: &[LatticeVector],
) -> Option<LatticeVector> {
    let sol = solve_rational(
        &basis.iter().map(|b| b.to_rational()).collect::<Vec<_>>(),
        &v.to_rational(),
    )?;
    sol.to_lattice()
}

/// Solves Σ cᵢ·basisᵢ = target exactly; `None` if the target is outside the
/// span or the system is inconsistent.
pub fn solve_rational(basis: &[RationalVector], target: &RationalVector) -> Option<RationalVector> {
    let k = basis.len();
    let n = target.dim();
    // Augmented system over Q: columns are basis vectors, rhs is target.
    let mut m: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rat> = basis.iter().map(|b| b.0[i].clone()).collect();
            row.push(target.0[i].clone());
            row
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = vec![];
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..n).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..n {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..=k {
                    let t = &m[r][j] * &f;
                    m[i][j] = &m[i][j] - t;
                }
            }
        }
        pivots.push((r, c));
        r += 1;
        if r == n {
            break;
        }
    }
    // Inconsistency: a zero row with nonzero rhs.
    for i in r..n {
        if !m[i][k].is_zero() {
            return None;
        }
    }
    let mut sol = vec![Rat::zero(); k];
    for &(pr, pc) in &pivots {
        sol[pc] = m[pr][k].clone();
    }
    // Non-pivot columns default to zero; verify the solution exactly in case
    // the system was underdetermined but consistent.
    let mut check = RationalVector::zero(n);
    for (c, b) in sol.iter().zip(basis) {
        check = check.add(&b.scale(c));
    }
    if check == *target {
        Some(RationalVector(sol))
    } else {
        None
    }
}

/// The unique (up to proportionality) integral relation among vectors whose
/// kernel is one-dimensional, canonically scaled: gcd 1 and first nonzero
/// coefficient positive.
pub fn unique_relation(vs: &[LatticeVector]) -> Result<Relation> {
    if vs.is_empty() {
        return Err(Error::NotCircuitLike(0));
    }
    let a = IntMatrix::from_cols(vs);
    let kernel = int_kernel(&a);
    if kernel.len() != 1 {
        return Err(Error::NotCircuitLike(kernel.len()));
    }
    let mut r = kernel.into_iter().next().unwrap();
    let g = r.content();
    r = LatticeVector(r.0.iter().map(|c| c / &g).collect());
    if let Some(first) = r.0.iter().find(|c| !c.is_zero()) {
        if first.is_negative() {
            r = r.neg();
        }
    }
    let rel = Relation { coeffs: r.0 };
    debug_assert!(rel.holds_for(vs));
    Ok(rel)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(coords: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(coords)
    }

    /// Independent oracle: |det| by rational Gaussian elimination.
    fn gauss_abs_det(rows: &[LatticeVector]) -> Rat {
        let n = rows.len();
        let mut m: Vec<Vec<Rat>> = rows
            .iter()
            .map(|r| r.0.iter().map(|c| Rat::from(c.clone())).collect())
            .collect();
        let mut det = Rat::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
                return Rat::zero();
            };
            m.swap(k, p);
            det *= m[k][k].clone();
            let inv = m[k][k].clone();
            for j in k..n {
                m[k][j] = &m[k][j] / &inv;
            }
            for i in (k + 1)..n {
                if !m[i][k].is_zero() {
                    let f = m[i][k].clone();
                    for j in k..n {
                        let t = &m[k][j] * &f;
                        m[i][j] = &m[i][j] - t;
                    }
                }
            }
        }
        if det.is_negative() {
            -det
        } else {
            det
        }
    }

    #[test]
    fn primitive_divides_by_gcd() {
        assert_eq!(primitive(&lv(&[2, 4])).unwrap(), lv(&[1, 2]));
        assert_eq!(primitive(&lv(&[1, 1])).unwrap(), lv(&[1, 1]));
        assert_eq!(primitive(&lv(&[-3, 6, 9])).unwrap(), lv(&[-1, 2, 3]));
        assert_eq!(primitive(&lv(&[0, 0])), Err(Error::ZeroVector));
    }

    #[test]
    fn det_examples() {
        assert_eq!(det(&[lv(&[1, 0]), lv(&[0, 1])]).unwrap(), Int::from(1));
        assert_eq!(det(&[lv(&[1, 0]), lv(&[1, 2])]).unwrap(), Int::from(2));
        // Lattice index of a 2-dimensional sublattice of Z^3.
        assert_eq!(
            det(&[lv(&[1, 0, 1]), lv(&[0, 1, 1])]).unwrap(),
            Int::from(1)
        );
        assert_eq!(
            det(&[lv(&[1, 0]), lv(&[2, 0])]),
            Err(Error::DependentVectors)
        );
    }

    #[test]
    fn det_matches_gaussian_elimination_on_random_square_matrices() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut checked = 0;
        while checked < 300 {
            let n = rng.gen_range(1..=6);
            let rows: Vec<LatticeVector> = (0..n)
                .map(|_| lv(&(0..n).map(|_| rng.gen_range(-9..=9)).collect::<Vec<_>>()))
                .collect();
            let oracle = gauss_abs_det(&rows);
            match det(&rows) {
                Ok(d) => {
                    assert_eq!(Rat::from(d), oracle);
                    checked += 1;
                }
                Err(Error::DependentVectors) => assert!(oracle.is_zero()),
                Err(e) => panic!("unexpected error {e}"),
            }
        }
    }

    #[test]
    fn unique_relation_examples() {
        let r = unique_relation(&[lv(&[1, 0]), lv(&[0, 1]), lv(&[1, 1])]).unwrap();
        assert_eq!(r.coeffs, vec![Int::from(1), Int::from(1), Int::from(-1)]);
        let r = unique_relation(&[lv(&[1, 0]), lv(&[-1, 0])]).unwrap();
        assert_eq!(r.coeffs, vec![Int::from(1), Int::from(1)]);
        let r = unique_relation(&[lv(&[2, 0]), lv(&[0, 3]), lv(&[2, 3])]).unwrap();
        assert_eq!(r.coeffs, vec![Int::from(1), Int::from(1), Int::from(-1)]);
        assert!(matches!(
            unique_relation(&[lv(&[1, 0, 0]), lv(&[0, 1, 0])]),
            Err(Error::NotCircuitLike(_))
        ));
    }

    #[test]
    fn unique_relation_matches_alternating_determinants() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut checked = 0;
        while checked < 200 {
            let k = rng.gen_range(2..=6);
            let vs: Vec<LatticeVector> = (0..=k)
                .map(|_| lv(&(0..k).map(|_| rng.gen_range(-9..=9)).collect::<Vec<_>>()))
                .collect();
            if rank(&IntMatrix::from_rows(&vs)) != k {
                continue;
            }
            let rel = unique_relation(&vs).unwrap();
            // Alternating-determinant coefficients.
            let alt: Vec<Int> = (0..=k)
                .map(|i| {
                    let omit: Vec<LatticeVector> = vs
                        .iter()
                        .enumerate()
                        .filter(|(j, _)| *j != i)
                        .map(|(_, v)| v.clone())
                        .collect();
                    let d = signed_det(&IntMatrix::from_rows(&omit));
                    if i % 2 == 0 {
                        d
                    } else {
                        -d
                    }
                })
                .collect();
            let alt_v = LatticeVector(alt);
            assert!(
                !alt_v.is_zero(),
                "alternating coefficients vanish for full-rank input"
            );
            let g = alt_v.content();
            let mut alt_red = LatticeVector(alt_v.0.iter().map(|c| c / &g).collect());
            if alt_red.0.iter().find(|c| !c.is_zero()).unwrap().is_negative() {
                alt_red = alt_red.neg();
            }
            assert_eq!(alt_red.0, rel.coeffs);
            checked += 1;
        }
    }

    #[test]
    fn span_lattice_basis_saturates() {
        // Span of (2,0) inside Z^2 saturates to Z·(1,0).
        let b = span_lattice_basis(&[lv(&[2, 0])]);
        assert_eq!(b.len(), 1);
        assert_eq!(primitive(&b[0]).unwrap().0[1], Int::zero());
        assert_eq!(b[0].content(), Int::one());
        // Diagonal plane in Z^3.
        let b = span_lattice_basis(&[lv(&[1, 0, 1]), lv(&[0, 1, 1])]);
        assert_eq!(b.len(), 2);
        for v in &b {
            assert_eq!(&v.0[0] + &v.0[1], v.0[2]);
        }
    }

    #[test]
    fn int_kernel_is_saturated() {
        let a = IntMatrix::from_rows(&[lv(&[1, 1, -1])]);
        let k = int_kernel(&a);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(lv(&[1, 1, -1]).dot(v).is_zero());
        }
        // (1,0,1) is in the kernel and must be an integral combination.
        let sol = solve_rational(
            &k.iter().map(|v| v.to_rational()).collect::<Vec<_>>(),
            &lv(&[1, 0, 1]).to_rational(),
        )
        .unwrap();
        assert!(sol.to_lattice().is_some());
    }

    #[test]
    fn snf_handles_random_shapes() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..2000 {
            let r = rng.gen_range(1..=6);
            let c = rng.gen_range(1..=6);
            let mut m = IntMatrix::zero(r, c);
            for i in 0..r {
                for j in 0..c {
                    m[(i, j)] = Int::from(rng.gen_range(-9i64..=9));
                }
            }
            let snf = smith_normal_form(&m);
            assert!(snf.rank <= r.min(c));
            for w in snf.diag[..snf.rank].windows(2) {
                assert!((&w[1] % &w[0]).is_zero(), "diag not in divisibility order");
            }
            // Every reported kernel column really is in the kernel.
            for j in snf.rank..c {
                let col = snf.right.col(j);
                for i in 0..r {
                    assert!(m.row(i).dot(&col).is_zero());
                }
            }
        }
    }

    #[test]
    fn relation_rechecks_sum() {
        let vs = [lv(&[3, 1]), lv(&[1, 3]), lv(&[1, 1])];
        let r = unique_relation(&vs).unwrap();
        assert!(r.holds_for(&vs));
    }
}
